//! Matrices over `T_ℓ𝓡` and the action of matrices over `𝓡` on them.
//!
//! A matrix of `T_ℓ`-morphisms is stored as one morphism of matrices: a
//! witness matrix per level, entrywise structure maps `α± : N± + X⁰ → N'±`
//! and level maps `φ^l : X^l → X^{l-1}`. Sums of matrices are entrywise.

use crate::error::{Error, Result};
use crate::matrix::{
    compose_mat, id_matrix, inverse_mat, is_identity_mat, mat_add, mat_add_mor, mat_assoc, mat_dist, mat_mul,
    mat_mul_mor, mor_dom, zero_matrix, Mat, MorMatrix, ObjMatrix,
};
use crate::rig::{grothendieck, RigCategory};
use crate::tm::{TLevelMor, TMObject};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TMatObj {
    pub plus: ObjMatrix,
    pub minus: ObjMatrix,
}

impl TMatObj {
    pub fn n(&self) -> usize {
        self.plus.n()
    }

    pub fn entry(&self, i: usize, j: usize) -> TMObject {
        TMObject::new(*self.plus.get(i, j), *self.minus.get(i, j))
    }

    pub fn from_entries(n: usize, f: impl Fn(usize, usize) -> TMObject) -> TMatObj {
        TMatObj { plus: Mat::from_fn(n, |i, j| f(i, j).plus), minus: Mat::from_fn(n, |i, j| f(i, j).minus) }
    }

    /// `(N⁺ + X, N⁻ + X)`.
    pub fn shift(&self, cat: &RigCategory, x: &ObjMatrix) -> Result<TMatObj> {
        Ok(TMatObj { plus: mat_add(cat, &self.plus, x)?, minus: mat_add(cat, &self.minus, x)? })
    }

    /// Whether `N⁺ − N⁻` is invertible over the ring of differences.
    pub fn is_weakly_invertible(&self, cat: &RigCategory) -> Result<bool> {
        let gr = grothendieck(&cat.pi0())?;
        let diff = self.plus.zip_with(&self.minus, |&a, &b| Ok(gr.difference(cat.label(a), cat.label(b))))?;
        crate::matrix::gr_invertible(&diff, &gr)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TMatMor {
    pub source: TMatObj,
    /// `X⁰, …, X^ℓ`.
    pub witnesses: Vec<ObjMatrix>,
    pub alpha_plus: MorMatrix,
    pub alpha_minus: MorMatrix,
    /// `phis[l-1] = φ^l`.
    pub phis: Vec<MorMatrix>,
}

impl TMatMor {
    pub fn level(&self) -> usize {
        self.witnesses.len() - 1
    }

    pub fn n(&self) -> usize {
        self.source.n()
    }

    pub fn target(&self, cat: &RigCategory) -> Result<TMatObj> {
        self.source.shift(cat, &self.witnesses[0])
    }

    pub fn identity(cat: &RigCategory, a: &TMatObj, level: usize) -> TMatMor {
        let zero = zero_matrix(cat, a.n());
        TMatMor {
            source: a.clone(),
            witnesses: vec![zero.clone(); level + 1],
            alpha_plus: id_matrix(cat, &a.plus),
            alpha_minus: id_matrix(cat, &a.minus),
            phis: vec![id_matrix(cat, &zero); level],
        }
    }

    /// A morphism with zero witnesses at every level.
    pub fn structural(cat: &RigCategory, source: &TMatObj, alpha_plus: MorMatrix, alpha_minus: MorMatrix, level: usize) -> TMatMor {
        let mut f = TMatMor::identity(cat, source, level);
        f.alpha_plus = alpha_plus;
        f.alpha_minus = alpha_minus;
        f
    }

    pub fn has_zero_witness(&self, cat: &RigCategory) -> bool {
        self.witnesses.iter().all(|x| x.entries().iter().all(|&e| e == cat.zero()))
    }

    /// Entry `(i, j)` as a single `T_ℓ`-morphism.
    pub fn entry(&self, i: usize, j: usize) -> TLevelMor {
        TLevelMor {
            source: self.source.entry(i, j),
            witnesses: self.witnesses.iter().map(|x| *x.get(i, j)).collect(),
            alpha_plus: self.alpha_plus.get(i, j).clone(),
            alpha_minus: self.alpha_minus.get(i, j).clone(),
            phis: self.phis.iter().map(|p| p.get(i, j).clone()).collect(),
        }
    }

    pub fn validate(&self, cat: &RigCategory) -> Result<()> {
        let n = self.n();
        for i in 0..n {
            for j in 0..n {
                self.entry(i, j).validate(cat).map_err(|e| Error::Validation(format!("entry ({i},{j}): {e}")))?;
            }
        }
        Ok(())
    }
}

/// `g ∘ f`, entrywise.
pub fn compose_tmat(cat: &RigCategory, g: &TMatMor, f: &TMatMor) -> Result<TMatMor> {
    if g.source != f.target(cat)? || g.level() != f.level() {
        return Err(Error::NotComposable("matrix T-morphisms".into()));
    }
    let y = id_matrix(cat, &g.witnesses[0]);
    Ok(TMatMor {
        source: f.source.clone(),
        witnesses: f.witnesses.iter().zip(&g.witnesses).map(|(a, b)| mat_add(cat, a, b)).collect::<Result<_>>()?,
        alpha_plus: compose_mat(cat, &g.alpha_plus, &mat_add_mor(cat, &f.alpha_plus, &y)?)?,
        alpha_minus: compose_mat(cat, &g.alpha_minus, &mat_add_mor(cat, &f.alpha_minus, &y)?)?,
        phis: f.phis.iter().zip(&g.phis).map(|(a, b)| mat_add_mor(cat, a, b)).collect::<Result<_>>()?,
    })
}

/// Inverse of a morphism with zero witnesses.
pub fn inverse_tmat(cat: &RigCategory, f: &TMatMor) -> Result<TMatMor> {
    if !f.has_zero_witness(cat) {
        return Err(Error::NotInvertible("a T-morphism with nonzero witness".into()));
    }
    Ok(TMatMor::structural(cat, &f.target(cat)?, inverse_mat(cat, &f.alpha_plus), inverse_mat(cat, &f.alpha_minus), f.level()))
}

pub fn is_identity_tmat(cat: &RigCategory, f: &TMatMor) -> bool {
    f.has_zero_witness(cat)
        && is_identity_mat(cat, &f.alpha_plus)
        && is_identity_mat(cat, &f.alpha_minus)
        && f.phis.iter().all(|p| is_identity_mat(cat, p))
}

/// `M · N = (M·N⁺, M·N⁻)`.
pub fn act(cat: &RigCategory, m: &ObjMatrix, n: &TMatObj) -> Result<TMatObj> {
    Ok(TMatObj { plus: mat_mul(cat, m, &n.plus)?, minus: mat_mul(cat, m, &n.minus)? })
}

/// `F · g`: witnesses `M·X^l`, structure maps
/// `(F·α±) ∘ mat_dist(M; N±, X⁰)⁻¹`, level maps `id_M · φ^l`.
pub fn act_mor(cat: &RigCategory, f: &MorMatrix, g: &TMatMor) -> Result<TMatMor> {
    let m = mor_dom(cat, f);
    let x0 = &g.witnesses[0];
    let part = |n: &ObjMatrix, alpha: &MorMatrix| -> Result<MorMatrix> {
        let d = mat_dist(cat, &m, &[n, x0])?;
        compose_mat(cat, &mat_mul_mor(cat, f, alpha)?, &inverse_mat(cat, &d))
    };
    let idm = id_matrix(cat, &m);
    Ok(TMatMor {
        source: act(cat, &m, &g.source)?,
        witnesses: g.witnesses.iter().map(|x| mat_mul(cat, &m, x)).collect::<Result<_>>()?,
        alpha_plus: part(&g.source.plus, &g.alpha_plus)?,
        alpha_minus: part(&g.source.minus, &g.alpha_minus)?,
        phis: g.phis.iter().map(|p| mat_mul_mor(cat, &idm, p)).collect::<Result<_>>()?,
    })
}

/// `(A·B)·N → A·(B·N)` with zero witness.
pub fn t_assoc(cat: &RigCategory, a: &ObjMatrix, b: &ObjMatrix, n: &TMatObj, level: usize) -> Result<TMatMor> {
    let ab = mat_mul(cat, a, b)?;
    let src = act(cat, &ab, n)?;
    Ok(TMatMor::structural(
        cat,
        &src,
        mat_assoc(cat, a, b, &n.plus)?,
        mat_assoc(cat, a, b, &n.minus)?,
        level,
    ))
}

/// A uniformly drawn weakly invertible matrix with entries `≤ max`.
pub fn random_gl<R: rand::Rng + ?Sized>(cat: &RigCategory, n: usize, max: u64, rng: &mut R) -> Result<ObjMatrix> {
    for _ in 0..10_000 {
        let x = Mat::from_fn(n, |_, _| rng.gen_range(0..=max.min(cat.bound())));
        if crate::matrix::is_weakly_invertible(cat, &x)? {
            return Ok(x);
        }
    }
    Err(Error::Invalid(format!("no weakly invertible {n}×{n} matrix found with entries ≤ {max}")))
}

pub fn random_gl_t<R: rand::Rng + ?Sized>(cat: &RigCategory, n: usize, max: u64, rng: &mut R) -> Result<TMatObj> {
    for _ in 0..10_000 {
        let mut draw = || Mat::from_fn(n, |_, _| rng.gen_range(0..=max.min(cat.bound())));
        let t = TMatObj { plus: draw(), minus: draw() };
        if t.is_weakly_invertible(cat)? {
            return Ok(t);
        }
    }
    Err(Error::Invalid(format!("no weakly invertible {n}×{n} T-matrix found with entries ≤ {max}")))
}

pub fn random_automorphisms<R: rand::Rng + ?Sized>(cat: &RigCategory, x: &ObjMatrix, rng: &mut R) -> MorMatrix {
    x.map(|&a| cat.random_automorphism(a, rng))
}

/// A zero-witness automorphism of `t` with random structure maps.
pub fn random_t_automorphism<R: rand::Rng + ?Sized>(cat: &RigCategory, t: &TMatObj, level: usize, rng: &mut R) -> TMatMor {
    let (ap, am) = (random_automorphisms(cat, &t.plus, rng), random_automorphisms(cat, &t.minus, rng));
    TMatMor::structural(cat, t, ap, am, level)
}

/// `n×n` matrices over `𝓡` acting on `n×n` matrices over `T_ℓ𝓡`.
#[derive(Debug, Clone, Copy)]
pub struct MatrixModule<'a> {
    pub cat: &'a RigCategory,
    pub n: usize,
    pub level: usize,
}

impl crate::bar::BarModule for MatrixModule<'_> {
    type MObj = ObjMatrix;
    type MMor = MorMatrix;
    type TObj = TMatObj;
    type TMor = TMatMor;

    fn unit(&self) -> ObjMatrix {
        crate::matrix::unit_matrix(self.cat, self.n)
    }
    fn mul(&self, a: &ObjMatrix, b: &ObjMatrix) -> Result<ObjMatrix> {
        mat_mul(self.cat, a, b)
    }
    fn m_id(&self, a: &ObjMatrix) -> MorMatrix {
        id_matrix(self.cat, a)
    }
    fn m_src(&self, f: &MorMatrix) -> ObjMatrix {
        mor_dom(self.cat, f)
    }
    fn m_tgt(&self, f: &MorMatrix) -> ObjMatrix {
        mor_dom(self.cat, f)
    }
    fn m_compose(&self, g: &MorMatrix, f: &MorMatrix) -> Result<MorMatrix> {
        compose_mat(self.cat, g, f)
    }
    fn m_inverse(&self, f: &MorMatrix) -> Result<MorMatrix> {
        Ok(inverse_mat(self.cat, f))
    }
    fn mul_mor(&self, f: &MorMatrix, g: &MorMatrix) -> Result<MorMatrix> {
        mat_mul_mor(self.cat, f, g)
    }
    fn assoc(&self, a: &ObjMatrix, b: &ObjMatrix, c: &ObjMatrix) -> Result<MorMatrix> {
        mat_assoc(self.cat, a, b, c)
    }
    fn act(&self, a: &ObjMatrix, t: &TMatObj) -> Result<TMatObj> {
        act(self.cat, a, t)
    }
    fn t_id(&self, t: &TMatObj) -> TMatMor {
        TMatMor::identity(self.cat, t, self.level)
    }
    fn t_src(&self, f: &TMatMor) -> TMatObj {
        f.source.clone()
    }
    fn t_tgt(&self, f: &TMatMor) -> Result<TMatObj> {
        f.target(self.cat)
    }
    fn t_compose(&self, g: &TMatMor, f: &TMatMor) -> Result<TMatMor> {
        compose_tmat(self.cat, g, f)
    }
    fn t_inverse(&self, f: &TMatMor) -> Result<TMatMor> {
        inverse_tmat(self.cat, f)
    }
    fn act_mor(&self, f: &MorMatrix, g: &TMatMor) -> Result<TMatMor> {
        act_mor(self.cat, f, g)
    }
    fn t_assoc(&self, a: &ObjMatrix, b: &ObjMatrix, t: &TMatObj) -> Result<TMatMor> {
        t_assoc(self.cat, a, b, t, self.level)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rand_obj<R: Rng>(rng: &mut R, n: usize) -> ObjMatrix {
        Mat::from_fn(n, |_, _| rng.gen_range(0..=2))
    }

    fn rand_tmor<R: Rng>(cat: &RigCategory, rng: &mut R, src: &TMatObj, level: usize) -> TMatMor {
        let n = src.n();
        let x = rand_obj(rng, n);
        let t = src.shift(cat, &x).unwrap();
        TMatMor {
            source: src.clone(),
            witnesses: vec![x.clone(); level + 1],
            alpha_plus: t.plus.map(|&a| cat.random_automorphism(a, rng)),
            alpha_minus: t.minus.map(|&a| cat.random_automorphism(a, rng)),
            phis: (0..level).map(|_| x.map(|&a| cat.random_automorphism(a, rng))).collect(),
        }
    }

    #[test]
    fn action_is_functorial_up_to_the_distributor() {
        let cat = RigCategory::finite_sets(1000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for round in 0..20 {
            let n = rng.gen_range(1..=2);
            let level = rng.gen_range(0..=1);
            let src = TMatObj { plus: rand_obj(&mut rng, n), minus: rand_obj(&mut rng, n) };
            let f = rand_tmor(&cat, &mut rng, &src, level);
            f.validate(&cat).unwrap();
            let mut g = rand_tmor(&cat, &mut rng, &f.target(&cat).unwrap(), level);
            if round % 2 == 0 {
                let t = g.source.clone();
                g = TMatMor::structural(&cat, &t, g.alpha_plus.clone(), g.alpha_minus.clone(), level);
                g.alpha_plus = t.plus.map(|&a| cat.random_automorphism(a, &mut rng));
                g.alpha_minus = t.minus.map(|&a| cat.random_automorphism(a, &mut rng));
            }
            let m = rand_obj(&mut rng, n);
            let fm = m.map(|&a| cat.random_automorphism(a, &mut rng));
            let gm = m.map(|&a| cat.random_automorphism(a, &mut rng));
            let acted_f = act_mor(&cat, &fm, &f).unwrap();
            acted_f.validate(&cat).unwrap();
            assert_eq!(acted_f.target(&cat).unwrap(), act(&cat, &m, &f.target(&cat).unwrap()).unwrap());
            let e = id_matrix(&cat, &crate::matrix::unit_matrix(&cat, n));
            assert_eq!(act_mor(&cat, &e, &f).unwrap(), f);
            let idt = TMatMor::identity(&cat, &src, level);
            assert!(is_identity_tmat(&cat, &act_mor(&cat, &id_matrix(&cat, &m), &idt).unwrap()));

            let lhs = act_mor(&cat, &compose_mat(&cat, &gm, &fm).unwrap(), &compose_tmat(&cat, &g, &f).unwrap()).unwrap();
            let rhs = compose_tmat(&cat, &act_mor(&cat, &gm, &g).unwrap(), &act_mor(&cat, &fm, &f).unwrap()).unwrap();
            if g.has_zero_witness(&cat) {
                assert_eq!(lhs, rhs);
                continue;
            }
            // otherwise the two differ by the distributor on the witnesses
            assert_eq!((&lhs.source, &lhs.witnesses), (&rhs.source, &rhs.witnesses));
            let d = |l: usize| mat_dist(&cat, &m, &[&f.witnesses[l], &g.witnesses[l]]).unwrap();
            let fix = |n: &ObjMatrix| mat_add_mor(&cat, &id_matrix(&cat, &mat_mul(&cat, &m, n).unwrap()), &d(0)).unwrap();
            assert_eq!(lhs.alpha_plus, compose_mat(&cat, &rhs.alpha_plus, &fix(&src.plus)).unwrap());
            assert_eq!(lhs.alpha_minus, compose_mat(&cat, &rhs.alpha_minus, &fix(&src.minus)).unwrap());
            for l in 1..=level {
                let conj = compose_mat(&cat, &inverse_mat(&cat, &d(l - 1)), &compose_mat(&cat, &rhs.phis[l - 1], &d(l)).unwrap()).unwrap();
                assert_eq!(lhs.phis[l - 1], conj);
            }
        }
    }

    #[test]
    fn associator_is_natural_up_to_the_witness_associator() {
        let cat = RigCategory::finite_sets(5000).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..10 {
            let n = 2;
            let (a, b) = (rand_obj(&mut rng, n), rand_obj(&mut rng, n));
            let src = TMatObj { plus: rand_obj(&mut rng, n), minus: rand_obj(&mut rng, n) };
            let f = rand_tmor(&cat, &mut rng, &src, 1);
            let fa = a.map(|&x| cat.random_automorphism(x, &mut rng));
            let fb = b.map(|&x| cat.random_automorphism(x, &mut rng));
            let s = t_assoc(&cat, &a, &b, &src, 1).unwrap();
            let t = t_assoc(&cat, &a, &b, &f.target(&cat).unwrap(), 1).unwrap();
            let lhs = compose_tmat(&cat, &t, &act_mor(&cat, &mat_mul_mor(&cat, &fa, &fb).unwrap(), &f).unwrap()).unwrap();
            let rhs = compose_tmat(&cat, &act_mor(&cat, &fa, &act_mor(&cat, &fb, &f).unwrap()).unwrap(), &s).unwrap();
            assert_eq!((&lhs.source, &lhs.witnesses), (&rhs.source, &rhs.witnesses));
            let ab = mat_mul(&cat, &a, &b).unwrap();
            let w = |l: usize| mat_assoc(&cat, &a, &b, &f.witnesses[l]).unwrap();
            let fix = |n: &ObjMatrix| mat_add_mor(&cat, &id_matrix(&cat, &mat_mul(&cat, &ab, n).unwrap()), &w(0)).unwrap();
            assert_eq!(lhs.alpha_plus, compose_mat(&cat, &rhs.alpha_plus, &fix(&src.plus)).unwrap());
            assert_eq!(lhs.alpha_minus, compose_mat(&cat, &rhs.alpha_minus, &fix(&src.minus)).unwrap());
            let conj = compose_mat(&cat, &inverse_mat(&cat, &w(0)), &compose_mat(&cat, &rhs.phis[0], &w(1)).unwrap()).unwrap();
            assert_eq!(lhs.phis[0], conj);
            // with a zero witness the square commutes on the nose
            let z = TMatMor::structural(&cat, &src, f.alpha_plus.clone(), f.alpha_minus.clone(), 1);
            let z = TMatMor { alpha_plus: id_matrix(&cat, &src.plus), alpha_minus: id_matrix(&cat, &src.minus), ..z };
            let lhs = compose_tmat(&cat, &s, &act_mor(&cat, &mat_mul_mor(&cat, &fa, &fb).unwrap(), &z).unwrap()).unwrap();
            let rhs = compose_tmat(&cat, &act_mor(&cat, &fa, &act_mor(&cat, &fb, &z).unwrap()).unwrap(), &s).unwrap();
            assert_eq!(lhs, rhs);
            let inv = inverse_tmat(&cat, &s).unwrap();
            assert!(is_identity_tmat(&cat, &compose_tmat(&cat, &inv, &s).unwrap()));
            assert!(inverse_tmat(&cat, &f).is_err() || f.has_zero_witness(&cat));
        }
    }
}
