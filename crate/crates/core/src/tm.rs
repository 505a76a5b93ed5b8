//! The 2-category `T𝓜` of formal differences and its simplicial levels.
//!
//! Objects are pairs `(A⁺, A⁻)`. A morphism `(A⁺,A⁻) → (B⁺,B⁻)` is a witness
//! `X` with isomorphisms `α± : A± ⊕ X → B±`; a 2-morphism `(X,α) ⇒ (Y,β)` is
//! an isomorphism `φ : X → Y` with `β ∘ (id ⊕ φ) = α`.

use crate::error::{Error, Result};
use crate::matrix::shuffle;
use crate::rig::{Mor, Obj, RigCategory};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(Obj, Obj)", into = "(Obj, Obj)")]
pub struct TMObject {
    pub plus: Obj,
    pub minus: Obj,
}

impl From<(Obj, Obj)> for TMObject {
    fn from((plus, minus): (Obj, Obj)) -> Self {
        TMObject { plus, minus }
    }
}

impl From<TMObject> for (Obj, Obj) {
    fn from(a: TMObject) -> Self {
        (a.plus, a.minus)
    }
}

impl TMObject {
    pub fn new(plus: Obj, minus: Obj) -> TMObject {
        TMObject { plus, minus }
    }

    pub fn zero(cat: &RigCategory) -> TMObject {
        TMObject::new(cat.zero(), cat.zero())
    }

    /// The inclusion `A ↦ (A, 0)`.
    pub fn include(cat: &RigCategory, a: Obj) -> TMObject {
        TMObject::new(a, cat.zero())
    }

    pub fn shift(&self, cat: &RigCategory, x: Obj) -> Result<TMObject> {
        Ok(TMObject::new(cat.add(self.plus, x)?, cat.add(self.minus, x)?))
    }
}

/// Componentwise sum of objects.
pub fn tm_monoidal(cat: &RigCategory, a: &TMObject, b: &TMObject) -> Result<TMObject> {
    Ok(TMObject::new(cat.add(a.plus, b.plus)?, cat.add(a.minus, b.minus)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TMMor {
    pub source: TMObject,
    pub witness: Obj,
    pub alpha_plus: Mor,
    pub alpha_minus: Mor,
}

impl TMMor {
    pub fn new(cat: &RigCategory, source: TMObject, witness: Obj, alpha_plus: Mor, alpha_minus: Mor) -> Result<TMMor> {
        let f = TMMor { source, witness, alpha_plus, alpha_minus };
        f.validate(cat)?;
        Ok(f)
    }

    pub fn identity(cat: &RigCategory, a: TMObject) -> TMMor {
        TMMor { source: a, witness: cat.zero(), alpha_plus: cat.id(a.plus), alpha_minus: cat.id(a.minus) }
    }

    pub fn target(&self, cat: &RigCategory) -> Result<TMObject> {
        self.source.shift(cat, self.witness)
    }

    pub fn validate(&self, cat: &RigCategory) -> Result<()> {
        let t = self.target(cat)?;
        for (alpha, dom) in [(&self.alpha_plus, t.plus), (&self.alpha_minus, t.minus)] {
            cat.check_mor(alpha)?;
            if cat.dom(alpha) != dom {
                return Err(Error::Validation(format!("alpha {alpha:?} does not start at {dom}")));
            }
        }
        Ok(())
    }
}

/// `g ∘ f`: witness `X ⊕ Y`, structure maps `β± ∘ (α± ⊕ id)`.
pub fn compose_tm(cat: &RigCategory, g: &TMMor, f: &TMMor) -> Result<TMMor> {
    if g.source != f.target(cat)? {
        return Err(Error::NotComposable(format!("{:?} after {:?}", g.source, f.source)));
    }
    let y = cat.id(g.witness);
    Ok(TMMor {
        source: f.source,
        witness: cat.add(f.witness, g.witness)?,
        alpha_plus: cat.compose(&g.alpha_plus, &cat.add_mor(&f.alpha_plus, &y)?)?,
        alpha_minus: cat.compose(&g.alpha_minus, &cat.add_mor(&f.alpha_minus, &y)?)?,
    })
}

/// `f ⊕ g`, using the symmetry to move `X` past `A'`.
pub fn tm_monoidal_mor(cat: &RigCategory, f: &TMMor, g: &TMMor) -> Result<TMMor> {
    let part = |a: Obj, alpha: &Mor, b: Obj, beta: &Mor| -> Result<Mor> {
        let sh = shuffle(cat, &[a, b, f.witness, g.witness], &[0, 2, 1, 3])?;
        cat.compose(&cat.add_mor(alpha, beta)?, &sh)
    };
    Ok(TMMor {
        source: tm_monoidal(cat, &f.source, &g.source)?,
        witness: cat.add(f.witness, g.witness)?,
        alpha_plus: part(f.source.plus, &f.alpha_plus, g.source.plus, &g.alpha_plus)?,
        alpha_minus: part(f.source.minus, &f.alpha_minus, g.source.minus, &g.alpha_minus)?,
    })
}

/// A 2-morphism, carried by an isomorphism of witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TM2Mor {
    pub phi: Mor,
}

impl TM2Mor {
    /// Checks `β ∘ (id ⊕ φ) = α` for `φ : f ⇒ g`.
    pub fn is_valid(&self, cat: &RigCategory, f: &TMMor, g: &TMMor) -> Result<bool> {
        if f.source != g.source || cat.dom(&self.phi) != f.witness || f.witness != g.witness {
            return Ok(false);
        }
        let plus = cat.compose(&g.alpha_plus, &cat.add_mor(&cat.id(f.source.plus), &self.phi)?)?;
        let minus = cat.compose(&g.alpha_minus, &cat.add_mor(&cat.id(f.source.minus), &self.phi)?)?;
        Ok(plus == f.alpha_plus && minus == f.alpha_minus)
    }

    pub fn vertical(cat: &RigCategory, second: &TM2Mor, first: &TM2Mor) -> Result<TM2Mor> {
        Ok(TM2Mor { phi: cat.compose(&second.phi, &first.phi)? })
    }

    /// Whiskering of `φ : f ⇒ f'` and `ψ : g ⇒ g'` to `g∘f ⇒ g'∘f'`.
    pub fn horizontal(cat: &RigCategory, psi: &TM2Mor, phi: &TM2Mor) -> Result<TM2Mor> {
        Ok(TM2Mor { phi: cat.add_mor(&phi.phi, &psi.phi)? })
    }
}

/// Transports `f` along a witness automorphism: the unique `g` with
/// `φ : f ⇒ g`.
pub fn transport(cat: &RigCategory, f: &TMMor, phi: &Mor) -> Result<TMMor> {
    let inv = cat.inverse(phi);
    Ok(TMMor {
        source: f.source,
        witness: f.witness,
        alpha_plus: cat.compose(&f.alpha_plus, &cat.add_mor(&cat.id(f.source.plus), &inv)?)?,
        alpha_minus: cat.compose(&f.alpha_minus, &cat.add_mor(&cat.id(f.source.minus), &inv)?)?,
    })
}

/// Canonical representative of the path component of `f` in its hom
/// category: the least morphism reachable by a 2-morphism. Witness
/// automorphism groups larger than `limit` are refused.
pub fn tm_pi0_mor(cat: &RigCategory, f: &TMMor, limit: usize) -> Result<TMMor> {
    let mut best = f.clone();
    for phi in cat.automorphisms(f.witness, limit)? {
        let g = transport(cat, f, &phi)?;
        if g < best {
            best = g;
        }
    }
    Ok(best)
}

/// All morphisms `a → b` (the witness is forced by the objects).
pub fn tm_hom(cat: &RigCategory, a: TMObject, b: TMObject, limit: usize) -> Result<Vec<TMMor>> {
    let Some(x) = cat.objects().find(|&x| a.shift(cat, x).ok() == Some(b)) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for ap in cat.automorphisms(b.plus, limit)? {
        for am in cat.automorphisms(b.minus, limit)? {
            out.push(TMMor { source: a, witness: x, alpha_plus: ap.clone(), alpha_minus: am });
        }
    }
    Ok(out)
}

/// `φ · f` for `φ : A → A` in `𝓡`: witness `A ⊗ X`, structure maps
/// `(φ ⊗ α±) ∘ d_l(A; C±, X)`.
pub fn module_action(cat: &RigCategory, phi: &Mor, f: &TMMor) -> Result<TMMor> {
    let a = cat.dom(phi);
    let part = |c: Obj, alpha: &Mor| -> Result<Mor> {
        cat.compose(&cat.mul_mor(phi, alpha)?, &cat.dist_left(a, c, f.witness)?)
    };
    Ok(TMMor {
        source: TMObject::new(cat.mul(a, f.source.plus)?, cat.mul(a, f.source.minus)?),
        witness: cat.mul(a, f.witness)?,
        alpha_plus: part(f.source.plus, &f.alpha_plus)?,
        alpha_minus: part(f.source.minus, &f.alpha_minus)?,
    })
}

/// Path components of `T𝓜` on objects `(a, b)` with `a, b ≤ obj_bound`,
/// joined by morphisms with witnesses up to `witness_bound`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi0TM {
    pub components: Vec<Vec<TMObject>>,
}

impl Pi0TM {
    pub fn component_of(&self, a: &TMObject) -> Option<usize> {
        self.components.iter().position(|c| c.contains(a))
    }

    pub fn connected(&self, a: &TMObject, b: &TMObject) -> bool {
        self.component_of(a).is_some() && self.component_of(a) == self.component_of(b)
    }
}

pub fn pi0_of_tm(cat: &RigCategory, obj_bound: Obj, witness_bound: Obj) -> Result<Pi0TM> {
    let objs: Vec<TMObject> = (0..=obj_bound)
        .flat_map(|p| (0..=obj_bound).map(move |m| TMObject::new(p, m)))
        .filter(|o| cat.contains(o.plus) && cat.contains(o.minus))
        .collect();
    let index: BTreeMap<TMObject, usize> = objs.iter().enumerate().map(|(i, o)| (*o, i)).collect();
    let mut parent: Vec<usize> = (0..objs.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in &objs {
        for x in 0..=witness_bound.min(cat.bound()) {
            // a morphism a → a ⊕ (x, x) exists with identity structure maps
            if let Ok(b) = a.shift(cat, x) {
                if let Some(&j) = index.get(&b) {
                    let (ra, rb) = (find(&mut parent, index[a]), find(&mut parent, j));
                    parent[ra.max(rb)] = ra.min(rb);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<TMObject>> = BTreeMap::new();
    for (i, o) in objs.iter().enumerate() {
        groups.entry(find(&mut parent, i)).or_default().push(*o);
    }
    Ok(Pi0TM { components: groups.into_values().collect() })
}

/// Explicit morphism `(0, 0) → (A, A)` with witness `A`.
pub fn antidiagonal_path(cat: &RigCategory, a: Obj) -> Result<TMMor> {
    TMMor::new(cat, TMObject::zero(cat), a, cat.id(a), cat.id(a))
}

/// A morphism of the level `T_ℓ`: a witness string `X⁰ ← X¹ ← … ← X^ℓ`
/// with `φ^l : X^l → X^{l-1}` and structure maps on `X⁰`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TLevelMor {
    pub source: TMObject,
    pub witnesses: Vec<Obj>,
    pub alpha_plus: Mor,
    pub alpha_minus: Mor,
    /// `phis[l-1] = φ^l`.
    pub phis: Vec<Mor>,
}

impl TLevelMor {
    pub fn level(&self) -> usize {
        self.witnesses.len() - 1
    }

    pub fn from_tm(f: &TMMor) -> TLevelMor {
        TLevelMor {
            source: f.source,
            witnesses: vec![f.witness],
            alpha_plus: f.alpha_plus.clone(),
            alpha_minus: f.alpha_minus.clone(),
            phis: Vec::new(),
        }
    }

    pub fn base(&self) -> TMMor {
        TMMor {
            source: self.source,
            witness: self.witnesses[0],
            alpha_plus: self.alpha_plus.clone(),
            alpha_minus: self.alpha_minus.clone(),
        }
    }

    pub fn identity(cat: &RigCategory, a: TMObject, level: usize) -> TLevelMor {
        TLevelMor {
            source: a,
            witnesses: vec![cat.zero(); level + 1],
            alpha_plus: cat.id(a.plus),
            alpha_minus: cat.id(a.minus),
            phis: vec![cat.id(cat.zero()); level],
        }
    }

    pub fn validate(&self, cat: &RigCategory) -> Result<()> {
        if self.witnesses.is_empty() || self.phis.len() + 1 != self.witnesses.len() {
            return Err(Error::Validation("witness string and maps have mismatched lengths".into()));
        }
        self.base().validate(cat)?;
        for (l, phi) in self.phis.iter().enumerate() {
            cat.check_mor(phi)?;
            // built-in categories only have automorphisms
            if cat.dom(phi) != self.witnesses[l + 1] || self.witnesses[l + 1] != self.witnesses[l] {
                return Err(Error::Validation(format!("φ^{} has the wrong type", l + 1)));
            }
        }
        Ok(())
    }

    /// Level face `d_i`: `d_0` absorbs `φ¹` into the structure maps, inner
    /// faces compose, `d_ℓ` forgets the last witness.
    pub fn face(&self, cat: &RigCategory, i: usize) -> Result<TLevelMor> {
        let l = self.level();
        if l == 0 || i > l {
            return Err(Error::Invalid(format!("face {i} at level {l}")));
        }
        let mut out = self.clone();
        if i == 0 {
            let phi = &self.phis[0];
            out.alpha_plus = cat.compose(&self.alpha_plus, &cat.add_mor(&cat.id(self.source.plus), phi)?)?;
            out.alpha_minus = cat.compose(&self.alpha_minus, &cat.add_mor(&cat.id(self.source.minus), phi)?)?;
            out.witnesses.remove(0);
            out.phis.remove(0);
        } else if i < l {
            out.phis[i - 1] = cat.compose(&self.phis[i - 1], &self.phis[i])?;
            out.phis.remove(i);
            out.witnesses.remove(i);
        } else {
            out.witnesses.pop();
            out.phis.pop();
        }
        Ok(out)
    }

    /// Level degeneracy `s_i`: repeat `X^i` with an identity.
    pub fn degeneracy(&self, cat: &RigCategory, i: usize) -> Result<TLevelMor> {
        if i > self.level() {
            return Err(Error::Invalid(format!("degeneracy {i} at level {}", self.level())));
        }
        let mut out = self.clone();
        out.witnesses.insert(i, self.witnesses[i]);
        out.phis.insert(i, cat.id(self.witnesses[i]));
        Ok(out)
    }
}

/// Levelwise composite `g ∘ f`.
pub fn compose_level(cat: &RigCategory, g: &TLevelMor, f: &TLevelMor) -> Result<TLevelMor> {
    if g.level() != f.level() {
        return Err(Error::NotComposable("different levels".into()));
    }
    let base = compose_tm(cat, &g.base(), &f.base())?;
    Ok(TLevelMor {
        source: base.source,
        witnesses: f.witnesses.iter().zip(&g.witnesses).map(|(a, b)| cat.add(*a, *b)).collect::<Result<_>>()?,
        alpha_plus: base.alpha_plus,
        alpha_minus: base.alpha_minus,
        phis: f.phis.iter().zip(&g.phis).map(|(a, b)| cat.add_mor(a, b)).collect::<Result<_>>()?,
    })
}

#[cfg(test)]
mod tests;
