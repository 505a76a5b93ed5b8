//! Chains `m⁰ ← m¹ ← … ← m^p` in `N_p B^n_q` and their witness identities.

use crate::bar::{
    action_coherence, build_mor, build_simplex, coherence, component, compose_mor, diag_inverse, entry, validate_mor,
    validate_simplex, BarMor, BarSimplex,
};
use crate::counters::{self, Snapshot};
use crate::error::{Error, Result};
use crate::matrix::{
    compose_mat, id_matrix, inverse_mat, mat_add, mat_add_mor, mat_mul, mat_mul_mor, zero_matrix, Mat, MorMatrix,
    ObjMatrix,
};
use crate::rig::RigCategory;
use crate::sset::Chain;
use crate::tmat::{
    act, act_mor, compose_tmat, random_automorphisms, random_gl, random_gl_t, t_assoc, MatrixModule, TMatMor, TMatObj,
};
use rand::Rng;
use serde::Serialize;

pub type BNSimplex = BarSimplex<ObjMatrix, MorMatrix, TMatObj, TMatMor>;
pub type BNMor = BarMor<MorMatrix, TMatMor>;
/// `objs[u] = m^u`, `mors[u] = α^{u+1} : m^{u+1} → m^u`.
pub type BNChain = Chain<BNSimplex, BNMor>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainShape {
    pub n: usize,
    pub level: usize,
    pub p: usize,
    pub q: usize,
    /// Entries of the random input matrices are at most this.
    pub obj_bound: u64,
    /// Free part of each random witness entry is at most this.
    pub witness_bound: u64,
}

/// Read access to the entries of a chain, with the unit and identity
/// conventions on repeated indices.
#[derive(Clone, Copy)]
pub struct ChainView<'a> {
    pub md: MatrixModule<'a>,
    pub chain: &'a BNChain,
}

impl<'a> ChainView<'a> {
    pub fn new(cat: &'a RigCategory, level: usize, chain: &'a BNChain) -> ChainView<'a> {
        let n = chain.objs[0].t[0].n();
        ChainView { md: MatrixModule { cat, n, level }, chain }
    }

    pub fn cat(&self) -> &'a RigCategory {
        self.md.cat
    }
    pub fn n(&self) -> usize {
        self.md.n
    }
    pub fn level(&self) -> usize {
        self.md.level
    }
    pub fn p(&self) -> usize {
        self.chain.objs.len() - 1
    }
    pub fn q(&self) -> usize {
        self.chain.objs[0].q
    }
    pub fn m(&self, b: usize, i: usize, j: usize) -> ObjMatrix {
        entry(&self.md, &self.chain.objs[b], i, j)
    }
    pub fn t(&self, b: usize, i: usize) -> &TMatObj {
        &self.chain.objs[b].t[i]
    }
    pub fn mijk(&self, b: usize, i: usize, j: usize, k: usize) -> MorMatrix {
        coherence(&self.md, &self.chain.objs[b], i, j, k)
    }
    pub fn minf(&self, b: usize, i: usize, j: usize) -> TMatMor {
        action_coherence(&self.md, &self.chain.objs[b], i, j)
    }
    /// `x^l_{ij∞}` of `m^b`.
    pub fn x(&self, b: usize, l: usize, i: usize, j: usize) -> ObjMatrix {
        self.minf(b, i, j).witnesses[l].clone()
    }
    /// `α^u : m^u → m^{u-1}`, `u ≥ 1`.
    pub fn alpha(&self, u: usize) -> &BNMor {
        &self.chain.mors[u - 1]
    }
    pub fn alpha_ij(&self, u: usize, i: usize, j: usize) -> MorMatrix {
        component(&self.md, self.alpha(u), i, j)
    }
    pub fn alpha_inf(&self, u: usize, i: usize) -> &TMatMor {
        &self.alpha(u).ft[i]
    }
    /// `ξ^{u,l}_{i∞}`.
    pub fn xi(&self, u: usize, l: usize, i: usize) -> ObjMatrix {
        self.alpha_inf(u, i).witnesses[l].clone()
    }
    /// `Ξ = ξ^{hi} + ξ^{hi-1} + … + ξ^{lo+1}` at level `l`, zero when `hi ≤ lo`.
    pub fn big_xi(&self, l: usize, i: usize, hi: usize, lo: usize) -> Result<ObjMatrix> {
        let mut acc = zero_matrix(self.cat(), self.n());
        for u in (lo + 1..=hi).rev() {
            acc = mat_add(self.cat(), &acc, &self.xi(u, l, i))?;
        }
        Ok(acc)
    }
    /// `ψ^{hi,l} ⊕ … ⊕ ψ^{lo+1,l} : Ξ^l → Ξ^{l-1}`.
    pub fn big_psi(&self, l: usize, i: usize, hi: usize, lo: usize) -> Result<MorMatrix> {
        let cat = self.cat();
        let mut acc = id_matrix(cat, &zero_matrix(cat, self.n()));
        for u in (lo + 1..=hi).rev() {
            acc = mat_add_mor(cat, &acc, &self.alpha_inf(u, i).phis[l - 1])?;
        }
        Ok(acc)
    }
}

/// `lo` plus at most `extra` in one randomly chosen entry.
fn above<R: Rng + ?Sized>(lo: &ObjMatrix, extra: u64, rng: &mut R) -> ObjMatrix {
    let n = lo.n();
    let (r0, c0) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let e = rng.gen_range(0..=extra);
    Mat::from_fn(n, |r, c| lo.get(r, c) + if (r, c) == (r0, c0) { e } else { 0 })
}

/// Transports `a` along componentwise automorphisms and random witness
/// shifts `ξ_i`, returning `(α, b)` with `α : a → b` a bar morphism.
pub fn random_transport<R: Rng + ?Sized>(
    md: &MatrixModule,
    a: &BNSimplex,
    witness_bound: u64,
    rng: &mut R,
) -> Result<(BNMor, BNSimplex)> {
    let cat = md.cat;
    let q = a.q;
    let n = md.n;
    let level = md.level;
    let g: Vec<Vec<MorMatrix>> =
        (0..=q).map(|i| (i + 1..=q).map(|j| random_automorphisms(cat, &entry(md, a, i, j), rng)).collect()).collect();
    let gij = |i: usize, j: usize| if i == j { id_matrix(cat, &md_unit(md)) } else { g[i][j - i - 1].clone() };
    // ξ_i ≥ m_ij·ξ_j − x_ij for every j > i, so that the new witnesses stay natural numbers
    let mut xi = vec![zero_matrix(cat, n); q + 1];
    for i in (0..=q).rev() {
        let mut lo = zero_matrix(cat, n);
        for j in i + 1..=q {
            let need = mat_mul(cat, &entry(md, a, i, j), &xi[j])?;
            let have = &action_coherence(md, a, i, j).witnesses[0];
            lo = Mat::from_fn(n, |r, c| (*lo.get(r, c)).max(need.get(r, c).saturating_sub(*have.get(r, c))));
        }
        xi[i] = above(&lo, witness_bound, rng);
    }
    let gt: Vec<TMatMor> = (0..=q)
        .map(|i| {
            let tgt = a.t[i].shift(cat, &xi[i])?;
            Ok(TMatMor {
                source: a.t[i].clone(),
                witnesses: vec![xi[i].clone(); level + 1],
                alpha_plus: random_automorphisms(cat, &tgt.plus, rng),
                alpha_minus: random_automorphisms(cat, &tgt.minus, rng),
                phis: vec![id_matrix(cat, &xi[i]); level],
            })
        })
        .collect::<Result<_>>()?;
    let alpha = build_mor::<MatrixModule>(q, |i, j| Ok(gij(i, j)), |i| Ok(gt[i].clone()))?;
    let b = build_simplex::<MatrixModule>(
        q,
        |i, j| Ok(entry(md, a, i, j)),
        |i| gt[i].target(cat),
        |i, j, k| {
            let back = inverse_mat(cat, &mat_mul_mor(cat, &gij(i, j), &gij(j, k))?);
            compose_mat(cat, &gij(i, k), &compose_mat(cat, &coherence(md, a, i, j, k), &back)?)
        },
        |i, j| {
            let old = action_coherence(md, a, i, j);
            let through = compose_tmat(cat, &gt[i], &old)?;
            let moved = act_mor(cat, &gij(i, j), &gt[j])?;
            let y: Vec<ObjMatrix> = (0..=level)
                .map(|l| {
                    let sum = mat_add(cat, &old.witnesses[l], &xi[i])?;
                    let sub = mat_mul(cat, &entry(md, a, i, j), &xi[j])?;
                    Ok(Mat::from_fn(n, |r, c| sum.get(r, c) - sub.get(r, c)))
                })
                .collect::<Result<_>>()?;
            let fix = |through_alpha: &MorMatrix, moved_alpha: &MorMatrix| -> Result<MorMatrix> {
                let shifted = mat_add_mor(cat, moved_alpha, &id_matrix(cat, &y[0]))?;
                compose_mat(cat, through_alpha, &inverse_mat(cat, &shifted))
            };
            Ok(TMatMor {
                source: act(cat, &entry(md, a, i, j), &gt[j].target(cat)?)?,
                alpha_plus: fix(&through.alpha_plus, &moved.alpha_plus)?,
                alpha_minus: fix(&through.alpha_minus, &moved.alpha_minus)?,
                phis: y[1..].iter().map(|x| id_matrix(cat, x)).collect(),
                witnesses: y,
            })
        },
    )?;
    Ok((alpha, b))
}

fn md_unit(md: &MatrixModule) -> ObjMatrix {
    crate::matrix::unit_matrix(md.cat, md.n)
}

/// Attempts allowed per transport step before giving up.
pub const MAX_ATTEMPTS: usize = 5000;

#[derive(Debug, Clone)]
pub struct DrawnChain {
    pub chain: BNChain,
    /// Transports discarded because the result did not validate strictly.
    pub rejected: usize,
}

/// A random chain: `m^p` is a diagonal normal form moved once by a random
/// transport, and `m^{u-1}` is a random transport of `m^u`.
///
/// The action of matrices on `T`-matrices is functorial only up to the
/// distributivity isomorphism on witnesses, so a transport need not land
/// on a simplex whose squares commute on the nose, and a composite of
/// transports need not be a bar morphism. Such draws are discarded: every
/// simplex, every `α^u` and every composite `α^{u+1}∘…∘α^v` of the returned
/// chain validates exactly.
pub fn random_chain<R: Rng + ?Sized>(cat: &RigCategory, shape: ChainShape, rng: &mut R) -> Result<DrawnChain> {
    let md = MatrixModule { cat, n: shape.n, level: shape.level };
    let ms = (0..shape.q).map(|_| random_gl(cat, shape.n, shape.obj_bound, rng)).collect::<Result<Vec<_>>>()?;
    let t = random_gl_t(cat, shape.n, shape.obj_bound, rng)?;
    let base = diag_inverse(&md, &ms, &t)?;
    let mut rejected = 0;
    let top = loop {
        let (_, top) = random_transport(&md, &base, shape.witness_bound, rng)?;
        if validate_simplex(&md, &top).is_ok() {
            break top;
        }
        rejected += 1;
        if rejected > MAX_ATTEMPTS {
            return Err(Error::Invalid("no strictly valid transport found".into()));
        }
    };
    // generated top down: objs[k] = m^{p-k}, mors[k] : objs[k] → objs[k+1]
    let mut objs = vec![top];
    let mut mors: Vec<BNMor> = Vec::new();
    for _ in 0..shape.p {
        let mut tries = 0;
        let (alpha, next) = loop {
            let (alpha, next) = random_transport(&md, objs.last().unwrap(), shape.witness_bound, rng)?;
            if validate_simplex(&md, &next).is_ok() && composites_valid(&md, &objs, &mors, &alpha, &next) {
                break (alpha, next);
            }
            tries += 1;
            if tries > MAX_ATTEMPTS {
                return Err(Error::Invalid("no strictly valid transport found".into()));
            }
        };
        rejected += tries;
        objs.push(next);
        mors.push(alpha);
    }
    objs.reverse();
    mors.reverse();
    Ok(DrawnChain { chain: Chain { objs, mors }, rejected })
}

/// Whether `alpha ∘ mors[k-1] ∘ … ∘ mors[v]` validates for every `v`.
fn composites_valid(md: &MatrixModule, objs: &[BNSimplex], mors: &[BNMor], alpha: &BNMor, next: &BNSimplex) -> bool {
    let mut acc = alpha.clone();
    for v in (0..mors.len()).rev() {
        acc = match compose_mor(md, &acc, &mors[v]) {
            Ok(f) => f,
            Err(_) => return false,
        };
        if validate_mor(md, &acc, &objs[v], next).is_err() {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityFailure {
    /// `"1identity"` or `"2identity"`.
    pub family: String,
    /// `"object"` for the witness equation, `"square"` for the morphism one.
    pub kind: String,
    pub location: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub checked: usize,
    /// Checks per identity family.
    pub per_family: std::collections::BTreeMap<String, usize>,
    pub failures: Vec<IdentityFailure>,
    pub counters: Snapshot,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `x^l_{ik∞} = m_ij·x^l_{jk∞} + x^l_{ij∞}` with its commuting square
/// on every `m^u`, and `x^l_{ij∞} + ξ^l_{i∞} = m_ij·ξ^l_{j∞} + x̃^l_{ij∞}` with
/// its square on every `α^u`. The counters cover this call only.
pub fn verify_witness_identities(cat: &RigCategory, level: usize, chain: &BNChain) -> Result<IdentityReport> {
    let before = counters::snapshot();
    let v = ChainView::new(cat, level, chain);
    let (p, q) = (v.p(), v.q());
    let (mut c1, mut c2) = (0, 0);
    let mut failures = Vec::new();
    let mut fail = |family: &str, kind: &str, location: String| {
        failures.push(IdentityFailure { family: family.into(), kind: kind.into(), location })
    };
    for u in 0..=p {
        for i in 0..=q {
            for j in i + 1..=q {
                for k in j + 1..=q {
                    for l in 0..=level {
                        c1 += 1;
                        let rhs = mat_add(cat, &mat_mul(cat, &v.m(u, i, j), &v.x(u, l, j, k))?, &v.x(u, l, i, j))?;
                        if v.x(u, l, i, k) != rhs {
                            fail("1identity", "object", format!("u={u} l={l} (i,j,k)=({i},{j},{k})"));
                        }
                    }
                    c1 += 1;
                    let square = || -> Result<bool> {
                        let tk = v.t(u, k);
                        let lhs = compose_tmat(cat, &v.minf(u, i, k), &act_mor(cat, &v.mijk(u, i, j, k), &TMatMor::identity(cat, tk, level))?)?;
                        let rhs = compose_tmat(
                            cat,
                            &v.minf(u, i, j),
                            &compose_tmat(
                                cat,
                                &act_mor(cat, &id_matrix(cat, &v.m(u, i, j)), &v.minf(u, j, k))?,
                                &t_assoc(cat, &v.m(u, i, j), &v.m(u, j, k), tk, level)?,
                            )?,
                        )?;
                        Ok(lhs == rhs)
                    };
                    // a corrupted witness can make the two sides not even composable
                    if !square().unwrap_or(false) {
                        fail("1identity", "square", format!("u={u} (i,j,k)=({i},{j},{k})"));
                    }
                }
            }
        }
    }
    for u in 1..=p {
        for i in 0..=q {
            for j in i + 1..=q {
                for l in 0..=level {
                    c2 += 1;
                    let lhs = mat_add(cat, &v.x(u, l, i, j), &v.xi(u, l, i))?;
                    let rhs = mat_add(cat, &mat_mul(cat, &v.m(u, i, j), &v.xi(u, l, j))?, &v.x(u - 1, l, i, j))?;
                    if lhs != rhs {
                        fail("2identity", "object", format!("u={u} l={l} (i,j)=({i},{j})"));
                    }
                }
                c2 += 1;
                let square = || -> Result<bool> {
                    let lhs = compose_tmat(cat, v.alpha_inf(u, i), &v.minf(u, i, j))?;
                    let rhs = compose_tmat(cat, &v.minf(u - 1, i, j), &act_mor(cat, &v.alpha_ij(u, i, j), v.alpha_inf(u, j))?)?;
                    Ok(lhs == rhs)
                };
                if !square().unwrap_or(false) {
                    fail("2identity", "square", format!("u={u} (i,j)=({i},{j})"));
                }
            }
        }
    }
    Ok(IdentityReport {
        checked: c1 + c2,
        per_family: [("1identity".to_string(), c1), ("2identity".to_string(), c2)].into(),
        failures, counters: counters::snapshot().since(&before) })
}

/// Checks that every `m^u` is a valid simplex and every `α^u` a valid bar
/// morphism.
pub fn validate_chain(cat: &RigCategory, level: usize, chain: &BNChain) -> Result<()> {
    let v = ChainView::new(cat, level, chain);
    if chain.mors.len() + 1 != chain.objs.len() {
        return Err(Error::Validation("chain shape".into()));
    }
    for (u, a) in chain.objs.iter().enumerate() {
        validate_simplex(&v.md, a).map_err(|e| Error::Validation(format!("m^{u}: {e}")))?;
    }
    for (u, f) in chain.mors.iter().enumerate() {
        validate_mor(&v.md, f, &chain.objs[u + 1], &chain.objs[u])
            .map_err(|e| Error::Validation(format!("α^{}: {e}", u + 1)))?;
    }
    Ok(())
}

/// Adds one to entry `(0, 0)` of `x^l_{ik∞}` in `m^u`, leaving the rest of
/// the chain alone. For negative tests.
pub fn corrupt_witness(chain: &mut BNChain, u: usize, i: usize, k: usize, l: usize) -> Result<()> {
    let s = chain.objs.get_mut(u).ok_or_else(|| Error::Invalid(format!("no m^{u}")))?;
    if i >= k || k > s.q {
        return Err(Error::Invalid(format!("no witness at ({i},{k})")));
    }
    let w = &mut s.mt[i][k - i - 1].witnesses;
    let x = w.get_mut(l).ok_or_else(|| Error::Invalid(format!("no level {l}")))?;
    *x = Mat::from_fn(x.n(), |r, c| x.get(r, c) + u64::from((r, c) == (0, 0)));
    Ok(())
}
