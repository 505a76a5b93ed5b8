//! The one-sided bar construction `B(*, 𝓜, 𝓣)`.
//!
//! A degree-`q` simplex is a triangular array: objects `a_ij` of `𝓜` for
//! `i < j ≤ q`, objects `a_i∞` of `𝓣`, and structure maps
//! `a_ijk : a_ij·a_jk → a_ik` (with `k = ∞` landing in `𝓣`). Entries with a
//! repeated index are the unit and identities and are not stored.

mod discrete;
mod nerve;

pub use discrete::{ActionCategory, DiscreteModule};
pub use nerve::{
    bar_nerve, contractibility_probe, degeneracy_cell, face_cell, reindex_cell, BarCell, BarNerve, FiniteBarModule,
    ProbeReport,
};

use crate::delta::DeltaMap;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Debug;
use std::hash::Hash;

pub trait Value: Clone + Eq + Hash + Ord + Debug + Send + Sync {}
impl<T: Clone + Eq + Hash + Ord + Debug + Send + Sync> Value for T {}

/// A monoidal category `𝓜` acting on a category `𝓣`.
pub trait BarModule {
    type MObj: Value;
    type MMor: Value;
    type TObj: Value;
    type TMor: Value;

    fn unit(&self) -> Self::MObj;
    fn mul(&self, a: &Self::MObj, b: &Self::MObj) -> Result<Self::MObj>;
    fn m_id(&self, a: &Self::MObj) -> Self::MMor;
    fn m_src(&self, f: &Self::MMor) -> Self::MObj;
    fn m_tgt(&self, f: &Self::MMor) -> Self::MObj;
    fn m_compose(&self, g: &Self::MMor, f: &Self::MMor) -> Result<Self::MMor>;
    fn m_inverse(&self, f: &Self::MMor) -> Result<Self::MMor>;
    fn mul_mor(&self, f: &Self::MMor, g: &Self::MMor) -> Result<Self::MMor>;
    /// `(a·b)·c → a·(b·c)`.
    fn assoc(&self, a: &Self::MObj, b: &Self::MObj, c: &Self::MObj) -> Result<Self::MMor>;

    fn act(&self, a: &Self::MObj, t: &Self::TObj) -> Result<Self::TObj>;
    fn t_id(&self, t: &Self::TObj) -> Self::TMor;
    fn t_src(&self, f: &Self::TMor) -> Self::TObj;
    fn t_tgt(&self, f: &Self::TMor) -> Result<Self::TObj>;
    fn t_compose(&self, g: &Self::TMor, f: &Self::TMor) -> Result<Self::TMor>;
    fn t_inverse(&self, f: &Self::TMor) -> Result<Self::TMor>;
    fn act_mor(&self, f: &Self::MMor, g: &Self::TMor) -> Result<Self::TMor>;
    /// `(a·b)·t → a·(b·t)`.
    fn t_assoc(&self, a: &Self::MObj, b: &Self::MObj, t: &Self::TObj) -> Result<Self::TMor>;
}

/// Triangular array of a bar simplex. `m[i][j-i-1] = a_ij`,
/// `mm[i][j-i-1][k-j-1] = a_ijk`, `mt[i][j-i-1] = a_ij∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarSimplex<MO, MM, TO, TM> {
    pub q: usize,
    pub m: Vec<Vec<MO>>,
    pub t: Vec<TO>,
    pub mm: Vec<Vec<Vec<MM>>>,
    pub mt: Vec<Vec<TM>>,
}

/// Componentwise morphism of bar simplices; `f[i][j-i-1] = f_ij`,
/// `ft[i] = f_i∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarMor<MM, TM> {
    pub q: usize,
    pub f: Vec<Vec<MM>>,
    pub ft: Vec<TM>,
}

pub type Simplex<M> =
    BarSimplex<<M as BarModule>::MObj, <M as BarModule>::MMor, <M as BarModule>::TObj, <M as BarModule>::TMor>;
pub type Mor<M> = BarMor<<M as BarModule>::MMor, <M as BarModule>::TMor>;

impl<MO: Value, MM: Value, TO: Value, TM: Value> BarSimplex<MO, MM, TO, TM> {
    pub fn a_inf(&self, i: usize) -> &TO {
        &self.t[i]
    }
}

/// `a_ij`, the unit when `i = j`.
pub fn entry<M: BarModule>(md: &M, a: &Simplex<M>, i: usize, j: usize) -> M::MObj {
    if i == j {
        md.unit()
    } else {
        a.m[i][j - i - 1].clone()
    }
}

/// `a_ijk` for `i ≤ j ≤ k ≤ q`, identities when an index repeats.
pub fn coherence<M: BarModule>(md: &M, a: &Simplex<M>, i: usize, j: usize, k: usize) -> M::MMor {
    if i == j || j == k {
        md.m_id(&entry(md, a, i, k))
    } else {
        a.mm[i][j - i - 1][k - j - 1].clone()
    }
}

/// `a_ij∞` for `i ≤ j ≤ q`.
pub fn action_coherence<M: BarModule>(md: &M, a: &Simplex<M>, i: usize, j: usize) -> M::TMor {
    if i == j {
        md.t_id(&a.t[i])
    } else {
        a.mt[i][j - i - 1].clone()
    }
}

/// `f_ij`, the identity of the unit when `i = j`.
pub fn component<M: BarModule>(md: &M, f: &Mor<M>, i: usize, j: usize) -> M::MMor {
    if i == j {
        md.m_id(&md.unit())
    } else {
        f.f[i][j - i - 1].clone()
    }
}

/// Builds a simplex from index functions over the stored ranges.
pub fn build_simplex<M: BarModule>(
    q: usize,
    mut m: impl FnMut(usize, usize) -> Result<M::MObj>,
    mut t: impl FnMut(usize) -> Result<M::TObj>,
    mut mm: impl FnMut(usize, usize, usize) -> Result<M::MMor>,
    mut mt: impl FnMut(usize, usize) -> Result<M::TMor>,
) -> Result<Simplex<M>> {
    let mut out = BarSimplex { q, m: Vec::new(), t: Vec::new(), mm: Vec::new(), mt: Vec::new() };
    for i in 0..=q {
        out.m.push((i + 1..=q).map(|j| m(i, j)).collect::<Result<_>>()?);
        out.t.push(t(i)?);
    }
    for i in 0..=q {
        let mut row = Vec::new();
        for j in i + 1..=q {
            row.push((j + 1..=q).map(|k| mm(i, j, k)).collect::<Result<Vec<_>>>()?);
        }
        out.mm.push(row);
        out.mt.push((i + 1..=q).map(|j| mt(i, j)).collect::<Result<_>>()?);
    }
    Ok(out)
}

pub fn build_mor<M: BarModule>(
    q: usize,
    mut f: impl FnMut(usize, usize) -> Result<M::MMor>,
    mut ft: impl FnMut(usize) -> Result<M::TMor>,
) -> Result<Mor<M>> {
    let mut out = BarMor { q, f: Vec::new(), ft: Vec::new() };
    for i in 0..=q {
        out.f.push((i + 1..=q).map(|j| f(i, j)).collect::<Result<_>>()?);
        out.ft.push(ft(i)?);
    }
    Ok(out)
}

fn bad(what: String) -> Error {
    Error::Validation(what)
}

/// Checks shapes, sources and targets of the structure maps, and the
/// cocycle square for every `i < j < k < l ≤ ∞`.
pub fn validate_simplex<M: BarModule>(md: &M, a: &Simplex<M>) -> Result<()> {
    let q = a.q;
    if a.m.len() != q + 1 || a.t.len() != q + 1 || a.mm.len() != q + 1 || a.mt.len() != q + 1 {
        return Err(bad("simplex shape".into()));
    }
    for i in 0..=q {
        for j in i + 1..=q {
            for k in j + 1..=q {
                let f = coherence(md, a, i, j, k);
                let src = md.mul(&entry(md, a, i, j), &entry(md, a, j, k))?;
                if md.m_src(&f) != src || md.m_tgt(&f) != entry(md, a, i, k) {
                    return Err(bad(format!("a_{i}{j}{k} has the wrong source or target")));
                }
                md.m_inverse(&f).map_err(|_| bad(format!("a_{i}{j}{k} is not invertible")))?;
            }
            let f = action_coherence(md, a, i, j);
            if md.t_src(&f) != md.act(&entry(md, a, i, j), &a.t[j])? || md.t_tgt(&f)? != a.t[i] {
                return Err(bad(format!("a_{i}{j}∞ has the wrong source or target")));
            }
        }
    }
    for i in 0..=q {
        for j in i + 1..=q {
            for k in j + 1..=q {
                let (aij, ajk) = (entry(md, a, i, j), entry(md, a, j, k));
                for l in k + 1..=q {
                    let akl = entry(md, a, k, l);
                    let lhs = md.m_compose(&coherence(md, a, i, k, l), &md.mul_mor(&coherence(md, a, i, j, k), &md.m_id(&akl))?)?;
                    let rhs = md.m_compose(
                        &coherence(md, a, i, j, l),
                        &md.m_compose(&md.mul_mor(&md.m_id(&aij), &coherence(md, a, j, k, l))?, &md.assoc(&aij, &ajk, &akl)?)?,
                    )?;
                    if lhs != rhs {
                        return Err(bad(format!("cocycle square fails at ({i},{j},{k},{l})")));
                    }
                }
                let tk = &a.t[k];
                let lhs = md.t_compose(&action_coherence(md, a, i, k), &md.act_mor(&coherence(md, a, i, j, k), &md.t_id(tk))?)?;
                let rhs = md.t_compose(
                    &action_coherence(md, a, i, j),
                    &md.t_compose(&md.act_mor(&md.m_id(&aij), &action_coherence(md, a, j, k))?, &md.t_assoc(&aij, &ajk, tk)?)?,
                )?;
                if lhs != rhs {
                    return Err(bad(format!("cocycle square fails at ({i},{j},{k},∞)")));
                }
            }
        }
    }
    Ok(())
}

/// Checks `f : a → b`: sources, targets, and
/// `f_ik ∘ a_ijk = b_ijk ∘ (f_ij·f_jk)` for all `i < j < k ≤ ∞`.
pub fn validate_mor<M: BarModule>(md: &M, f: &Mor<M>, a: &Simplex<M>, b: &Simplex<M>) -> Result<()> {
    let q = a.q;
    if b.q != q || f.q != q || f.f.len() != q + 1 || f.ft.len() != q + 1 {
        return Err(bad("bar morphism shape".into()));
    }
    for i in 0..=q {
        for j in i + 1..=q {
            let c = component(md, f, i, j);
            if md.m_src(&c) != entry(md, a, i, j) || md.m_tgt(&c) != entry(md, b, i, j) {
                return Err(bad(format!("f_{i}{j} has the wrong source or target")));
            }
        }
        if md.t_src(&f.ft[i]) != a.t[i] || md.t_tgt(&f.ft[i])? != b.t[i] {
            return Err(bad(format!("f_{i}∞ has the wrong source or target")));
        }
    }
    for i in 0..=q {
        for j in i + 1..=q {
            let fij = component(md, f, i, j);
            for k in j + 1..=q {
                let lhs = md.m_compose(&component(md, f, i, k), &coherence(md, a, i, j, k))?;
                let rhs = md.m_compose(&coherence(md, b, i, j, k), &md.mul_mor(&fij, &component(md, f, j, k))?)?;
                if lhs != rhs {
                    return Err(bad(format!("bar morphism condition fails at ({i},{j},{k})")));
                }
            }
            let lhs = md.t_compose(&f.ft[i], &action_coherence(md, a, i, j))?;
            let rhs = md.t_compose(&action_coherence(md, b, i, j), &md.act_mor(&fij, &f.ft[j])?)?;
            if lhs != rhs {
                return Err(bad(format!("bar morphism condition fails at ({i},{j},∞)")));
            }
        }
    }
    Ok(())
}

/// Target of a bar morphism, read off its components.
pub fn mor_target<M: BarModule>(md: &M, f: &Mor<M>) -> Result<(Vec<Vec<M::MObj>>, Vec<M::TObj>)> {
    let m = f.f.iter().map(|row| row.iter().map(|c| md.m_tgt(c)).collect()).collect();
    let t = f.ft.iter().map(|c| md.t_tgt(c)).collect::<Result<_>>()?;
    Ok((m, t))
}

/// `θ^* a` for `θ : [r] → [q]`, by precomposition with `θ ⊔ {∞}`.
pub fn simplicial_action<M: BarModule>(md: &M, theta: &DeltaMap, a: &Simplex<M>) -> Simplex<M> {
    assert_eq!(theta.tgt(), a.q, "degree mismatch");
    let th = |i: usize| theta.apply(i);
    build_simplex::<M>(
        theta.src(),
        |i, j| Ok(entry(md, a, th(i), th(j))),
        |i| Ok(a.t[th(i)].clone()),
        |i, j, k| Ok(coherence(md, a, th(i), th(j), th(k))),
        |i, j| Ok(action_coherence(md, a, th(i), th(j))),
    )
    .expect("reindexing is total")
}

pub fn simplicial_action_mor<M: BarModule>(md: &M, theta: &DeltaMap, f: &Mor<M>) -> Mor<M> {
    assert_eq!(theta.tgt(), f.q, "degree mismatch");
    build_mor::<M>(theta.src(), |i, j| Ok(component(md, f, theta.apply(i), theta.apply(j))), |i| Ok(f.ft[theta.apply(i)].clone()))
        .expect("reindexing is total")
}

pub fn identity_mor<M: BarModule>(md: &M, a: &Simplex<M>) -> Mor<M> {
    build_mor::<M>(a.q, |i, j| Ok(md.m_id(&entry(md, a, i, j))), |i| Ok(md.t_id(&a.t[i]))).expect("identities")
}

/// `g ∘ f`, componentwise.
pub fn compose_mor<M: BarModule>(md: &M, g: &Mor<M>, f: &Mor<M>) -> Result<Mor<M>> {
    if g.q != f.q {
        return Err(Error::NotComposable("bar morphisms of different degree".into()));
    }
    build_mor::<M>(f.q, |i, j| md.m_compose(&component(md, g, i, j), &component(md, f, i, j)), |i| {
        md.t_compose(&g.ft[i], &f.ft[i])
    })
}

pub fn inverse_mor<M: BarModule>(md: &M, f: &Mor<M>) -> Result<Mor<M>> {
    build_mor::<M>(f.q, |i, j| md.m_inverse(&component(md, f, i, j)), |i| md.t_inverse(&f.ft[i]))
}

/// The diagonal `(a₀₁, …, a_{q-1,q}, a_q∞)`.
pub fn diag_forget<M: BarModule>(md: &M, a: &Simplex<M>) -> (Vec<M::MObj>, M::TObj) {
    ((0..a.q).map(|i| entry(md, a, i, i + 1)).collect(), a.t[a.q].clone())
}

/// The simplex with `a_ij = a_{i+1}·(…·(a_{j-1}·a_j))` and structure maps
/// built from the associators.
pub fn diag_inverse<M: BarModule>(md: &M, ms: &[M::MObj], t: &M::TObj) -> Result<Simplex<M>> {
    let q = ms.len();
    // r[i][j] = a_ij for i < j, right nested
    let mut r = vec![vec![None; q + 1]; q + 1];
    for i in (0..q).rev() {
        r[i][i + 1] = Some(ms[i].clone());
        for j in i + 2..=q {
            r[i][j] = Some(md.mul(&ms[i], r[i + 1][j].as_ref().unwrap())?);
        }
    }
    let rr = |i: usize, j: usize| if i == j { md.unit() } else { r[i][j].clone().unwrap() };
    let mut ts = vec![t.clone(); q + 1];
    for i in (0..q).rev() {
        ts[i] = md.act(&ms[i], &ts[i + 1])?;
    }
    // structure maps, by recursion on i from the top
    let mut mm: Vec<Vec<Vec<Option<M::MMor>>>> = vec![vec![vec![None; q + 1]; q + 1]; q + 1];
    let mut mt: Vec<Vec<Option<M::TMor>>> = vec![vec![None; q + 1]; q + 1];
    for i in (0..q).rev() {
        for j in i + 1..=q {
            for k in j + 1..=q {
                let f = if j == i + 1 {
                    md.m_id(&rr(i, k))
                } else {
                    let inner = mm[i + 1][j][k].clone().unwrap();
                    md.m_compose(&md.mul_mor(&md.m_id(&ms[i]), &inner)?, &md.assoc(&ms[i], &rr(i + 1, j), &rr(j, k))?)?
                };
                mm[i][j][k] = Some(f);
            }
            let g = if j == i + 1 {
                md.t_id(&ts[i])
            } else {
                let inner = mt[i + 1][j].clone().unwrap();
                md.t_compose(&md.act_mor(&md.m_id(&ms[i]), &inner)?, &md.t_assoc(&ms[i], &rr(i + 1, j), &ts[j])?)?
            };
            mt[i][j] = Some(g);
        }
    }
    build_simplex::<M>(
        q,
        |i, j| Ok(rr(i, j)),
        |i| Ok(ts[i].clone()),
        |i, j, k| Ok(mm[i][j][k].clone().unwrap()),
        |i, j| Ok(mt[i][j].clone().unwrap()),
    )
}

/// The canonical morphism `a → diag_inverse(diag_forget(a))`, built from
/// the inverses of `a_{i,i+1,j}`.
pub fn diag_comparison<M: BarModule>(md: &M, a: &Simplex<M>) -> Result<Mor<M>> {
    let q = a.q;
    let mut c: Vec<Vec<Option<M::MMor>>> = vec![vec![None; q + 1]; q + 1];
    let mut ct: Vec<Option<M::TMor>> = vec![None; q + 1];
    ct[q] = Some(md.t_id(&a.t[q]));
    for i in (0..q).rev() {
        let ai = entry(md, a, i, i + 1);
        c[i][i + 1] = Some(md.m_id(&ai));
        for j in i + 2..=q {
            let back = md.m_inverse(&coherence(md, a, i, i + 1, j))?;
            let next = c[i + 1][j].clone().unwrap();
            c[i][j] = Some(md.m_compose(&md.mul_mor(&md.m_id(&ai), &next)?, &back)?);
        }
        let back = md.t_inverse(&action_coherence(md, a, i, i + 1))?;
        let next = ct[i + 1].clone().unwrap();
        ct[i] = Some(md.t_compose(&md.act_mor(&md.m_id(&ai), &next)?, &back)?);
    }
    build_mor::<M>(q, |i, j| Ok(c[i][j].clone().unwrap()), |i| Ok(ct[i].clone().unwrap()))
}

/// Transports the structure of `a` along componentwise isomorphisms
/// `g_ij : a_ij → b_ij`, `g_i∞ : a_i∞ → b_i∞`, so that `g` becomes a bar
/// morphism `a → b`.
pub fn transport_iso<M: BarModule>(md: &M, a: &Simplex<M>, g: &Mor<M>) -> Result<Simplex<M>> {
    let (bm, bt) = mor_target(md, g)?;
    let q = a.q;
    build_simplex::<M>(
        q,
        |i, j| Ok(bm[i][j - i - 1].clone()),
        |i| Ok(bt[i].clone()),
        |i, j, k| {
            let back = md.m_inverse(&md.mul_mor(&component(md, g, i, j), &component(md, g, j, k))?)?;
            md.m_compose(&component(md, g, i, k), &md.m_compose(&coherence(md, a, i, j, k), &back)?)
        },
        |i, j| {
            let back = md.t_inverse(&md.act_mor(&component(md, g, i, j), &g.ft[j])?)?;
            md.t_compose(&g.ft[i], &md.t_compose(&action_coherence(md, a, i, j), &back)?)
        },
    )
}
