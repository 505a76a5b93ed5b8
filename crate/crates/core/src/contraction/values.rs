//! Values of `inc`, `jnc`, `knc`, `lnc` and of the mixed simplices of the
//! homotopies between them, as `2n×2n` block matrices.
//!
//! A vertex of a `(0,r)`-cell is `(a, c, stage)`: nerve level `a = φ(i)`,
//! bar index `c = ψ(i)` and the map it belongs to. With `b` fixed,
//! `M = (m^b)_{c_i c_j}`, `Ξ_i = ξ^b_{c_i} + … + ξ^{a_i+1}_{c_i}`,
//! `W_i = (m^b)⁻_{c_i∞} + Ξ_i`, `P_i = (m^b)⁺_{c_i∞} + Ξ_i` and
//! `TR_ij = x^{a_j}_{c_i c_j ∞} + ξ^{a_j}_{c_i} + … + ξ^{a_i+1}_{c_i}`.

use super::chain::{BNMor, BNSimplex, ChainView};
use crate::bar::{build_mor, build_simplex, compose_mor, identity_mor};
use crate::error::{Error, Result};
use crate::matrix::{
    compose_mat, id_matrix, mat_add, mat_add_mor, mat_dist, unit_matrix, zero_matrix, Mat, MorMatrix,
    ObjMatrix,
};
use crate::rig::RigCategory;
use crate::tmat::{act, MatrixModule, TMatMor, TMatObj};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Inc,
    Jnc,
    Knc,
    Lnc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub a: usize,
    pub c: usize,
    pub stage: Stage,
}

fn blk<T: Clone>(a: Mat<T>, b: Mat<T>, c: Mat<T>, d: Mat<T>) -> Mat<T> {
    Mat::blocks(&a, &b, &c, &d).expect("blocks of equal size")
}

fn pair_error(si: Stage, sj: Stage) -> Error {
    Error::Invalid(format!("no mixed entry for stages {si:?} < {sj:?}"))
}

/// Builds the `2n` data from a chain over `n×n` matrices.
#[derive(Clone, Copy)]
pub struct Blocks<'a> {
    pub v: ChainView<'a>,
    /// The module of `2n×2n` matrices.
    pub big: MatrixModule<'a>,
}

impl<'a> Blocks<'a> {
    pub fn new(v: ChainView<'a>) -> Blocks<'a> {
        Blocks { v, big: MatrixModule { cat: v.cat(), n: 2 * v.n(), level: v.level() } }
    }

    fn cat(&self) -> &'a RigCategory {
        self.v.cat()
    }
    fn zero(&self) -> ObjMatrix {
        zero_matrix(self.cat(), self.v.n())
    }
    fn unit(&self) -> ObjMatrix {
        unit_matrix(self.cat(), self.v.n())
    }
    fn id(&self, x: &ObjMatrix) -> MorMatrix {
        id_matrix(self.cat(), x)
    }
    fn add(&self, x: &ObjMatrix, y: &ObjMatrix) -> Result<ObjMatrix> {
        mat_add(self.cat(), x, y)
    }
    fn levels(&self) -> usize {
        self.v.level()
    }

    fn big_xi(&self, l: usize, x: &Vertex, b: usize) -> Result<ObjMatrix> {
        self.v.big_xi(l, x.c, b, x.a)
    }
    fn w(&self, b: usize, x: &Vertex) -> Result<ObjMatrix> {
        self.add(&self.v.t(b, x.c).minus, &self.big_xi(0, x, b)?)
    }
    fn pp(&self, b: usize, x: &Vertex) -> Result<ObjMatrix> {
        self.add(&self.v.t(b, x.c).plus, &self.big_xi(0, x, b)?)
    }
    fn tr(&self, x: &Vertex, y: &Vertex) -> Result<ObjMatrix> {
        self.add(&self.v.x(y.a, 0, x.c, y.c), &self.v.big_xi(0, x.c, y.a, x.a)?)
    }

    /// `(m^±_{ij∞} + id_{Ξ_i}) ∘ (dist(M; m^±_j, Ξ_j) + id_{TR_ij})`:
    /// `M·(m^±_j + Ξ_j) + TR_ij → m^±_i + Ξ_i`.
    fn absorb(&self, b: usize, x: &Vertex, y: &Vertex, plus: bool) -> Result<MorMatrix> {
        let cat = self.cat();
        let m = self.v.m(b, x.c, y.c);
        let tj = self.v.t(b, y.c);
        let mj = if plus { &tj.plus } else { &tj.minus };
        let d = mat_dist(cat, &m, &[mj, &self.big_xi(0, y, b)?])?;
        let first = mat_add_mor(cat, &d, &self.id(&self.tr(x, y)?))?;
        let s = self.v.minf(b, x.c, y.c);
        let alpha = if plus { &s.alpha_plus } else { &s.alpha_minus };
        let second = mat_add_mor(cat, alpha, &self.id(&self.big_xi(0, x, b)?))?;
        compose_mat(cat, &second, &first)
    }

    pub fn entry(&self, b: usize, x: &Vertex, y: &Vertex) -> Result<ObjMatrix> {
        use Stage::*;
        let m = || self.v.m(b, x.c, y.c);
        let (z, e) = (self.zero(), self.unit());
        Ok(match (x.stage, y.stage) {
            (Inc, Inc) => blk(m(), z.clone(), z, e),
            (Jnc | Knc, Jnc | Knc) => blk(m(), self.tr(x, y)?, z, e),
            (Jnc, Inc) => blk(m(), self.w(b, x)?, z, e),
            (Knc, Lnc) => blk(self.pp(b, x)?, self.w(b, x)?, e.clone(), e),
            (Lnc, Lnc) => blk(e.clone(), z.clone(), z, e),
            (si, sj) => return Err(pair_error(si, sj)),
        })
    }

    pub fn t_entry(&self, b: usize, x: &Vertex) -> Result<TMatObj> {
        let t = self.v.t(b, x.c);
        let (z, e) = (self.zero(), self.unit());
        Ok(match x.stage {
            Stage::Inc => TMatObj { plus: blk(t.plus.clone(), z.clone(), z.clone(), e), minus: blk(t.minus.clone(), z.clone(), z.clone(), z) },
            Stage::Jnc => TMatObj { plus: blk(t.plus.clone(), self.w(b, x)?, z.clone(), e), minus: blk(t.minus.clone(), z.clone(), z.clone(), z) },
            Stage::Knc => {
                let w = self.w(b, x)?;
                TMatObj { plus: blk(self.pp(b, x)?, w.clone(), e.clone(), e.clone()), minus: blk(w, z.clone(), e, z) }
            }
            Stage::Lnc => TMatObj { plus: blk(e.clone(), z.clone(), z.clone(), e.clone()), minus: blk(z.clone(), z.clone(), e, z) },
        })
    }

    fn finite_structure(&self, b: usize, x: &Vertex, y: &Vertex, w: &Vertex) -> Result<MorMatrix> {
        use Stage::*;
        let n = self.v.n();
        let target = self.entry(b, x, w)?;
        let part = |bi, bj| self.id(&target.block(n, bi, bj));
        let tl = match (x.stage, y.stage, w.stage) {
            (Knc, Knc, Lnc) => self.absorb(b, x, y, true)?,
            (Knc, Lnc, Lnc) | (Lnc, _, _) => part(0, 0),
            _ => self.v.mijk(b, x.c, y.c, w.c),
        };
        let tr = match (x.stage, y.stage, w.stage) {
            (Jnc, Jnc, Inc) | (Knc, Knc, Lnc) => self.absorb(b, x, y, false)?,
            _ => part(0, 1),
        };
        Ok(blk(tl, tr, part(1, 0), part(1, 1)))
    }

    fn infinite_structure(&self, b: usize, x: &Vertex, y: &Vertex) -> Result<TMatMor> {
        use Stage::*;
        let cat = self.cat();
        let source = act(cat, &self.entry(b, x, y)?, &self.t_entry(b, y)?)?;
        let (z, e) = (self.zero(), self.unit());
        let (idz, ide) = (self.id(&z), self.id(&e));
        let s = self.v.minf(b, x.c, y.c);
        let witnessed = |tr_plus: MorMatrix| TMatMor {
            source: source.clone(),
            witnesses: s.witnesses.iter().map(|w| blk(w.clone(), z.clone(), z.clone(), z.clone())).collect(),
            alpha_plus: blk(s.alpha_plus.clone(), tr_plus, idz.clone(), ide.clone()),
            alpha_minus: blk(s.alpha_minus.clone(), idz.clone(), idz.clone(), idz.clone()),
            phis: s.phis.iter().map(|f| blk(f.clone(), idz.clone(), idz.clone(), idz.clone())).collect(),
        };
        Ok(match (x.stage, y.stage) {
            (Inc, Inc) => witnessed(idz.clone()),
            (Jnc, Jnc) => witnessed(self.absorb(b, x, y, false)?),
            (Jnc, Inc) => witnessed(self.id(&self.w(b, x)?)),
            (Knc, Knc) => {
                let minus = self.absorb(b, x, y, false)?;
                TMatMor::structural(
                    cat,
                    &source,
                    blk(self.absorb(b, x, y, true)?, minus.clone(), ide.clone(), ide.clone()),
                    blk(minus, idz.clone(), ide, idz),
                    self.levels(),
                )
            }
            (Knc, Lnc) | (Lnc, Lnc) => TMatMor::identity(cat, &source, self.levels()),
            (si, sj) => return Err(pair_error(si, sj)),
        })
    }

    /// The `(0, r)` value at level `b` on the given vertices.
    pub fn simplex(&self, b: usize, vs: &[Vertex]) -> Result<BNSimplex> {
        if vs.iter().any(|x| x.a > b) {
            return Err(Error::Invalid(format!("vertex above level {b}")));
        }
        build_simplex::<MatrixModule>(
            vs.len() - 1,
            |i, j| self.entry(b, &vs[i], &vs[j]),
            |i| self.t_entry(b, &vs[i]),
            |i, j, k| self.finite_structure(b, &vs[i], &vs[j], &vs[k]),
            |i, j| self.infinite_structure(b, &vs[i], &vs[j]),
        )
    }

    /// `α^b_{c∞}` restricted to `W`: `W(b) → W(b-1)`, and the same for `P`.
    fn shift_parts(&self, b: usize, x: &Vertex) -> Result<(MorMatrix, MorMatrix)> {
        let cat = self.cat();
        let a = self.v.alpha_inf(b, x.c);
        let rest = self.id(&self.big_xi(0, x, b - 1)?);
        Ok((mat_add_mor(cat, &a.alpha_plus, &rest)?, mat_add_mor(cat, &a.alpha_minus, &rest)?))
    }

    /// The nerve-direction map `value(b) → value(b-1)`.
    pub fn step(&self, b: usize, vs: &[Vertex]) -> Result<BNMor> {
        use Stage::*;
        let cat = self.cat();
        let (z, e) = (self.zero(), self.unit());
        let (idz, ide) = (self.id(&z), self.id(&e));
        build_mor::<MatrixModule>(
            vs.len() - 1,
            |i, j| {
                let (x, y) = (&vs[i], &vs[j]);
                let f = self.v.alpha_ij(b, x.c, y.c);
                Ok(match (x.stage, y.stage) {
                    (Inc, Inc) => blk(f, idz.clone(), idz.clone(), ide.clone()),
                    (Jnc | Knc, Jnc | Knc) => blk(f, self.id(&self.tr(x, y)?), idz.clone(), ide.clone()),
                    (Jnc, Inc) => blk(f, self.shift_parts(b, x)?.1, idz.clone(), ide.clone()),
                    (Knc, Lnc) => {
                        let (pp, mm) = self.shift_parts(b, x)?;
                        blk(pp, mm, ide.clone(), ide.clone())
                    }
                    (Lnc, Lnc) => id_matrix(cat, &self.entry(b, x, y)?),
                    (si, sj) => return Err(pair_error(si, sj)),
                })
            },
            |i| {
                let x = &vs[i];
                let a = self.v.alpha_inf(b, x.c);
                let source = self.t_entry(b, x)?;
                let witnessed = |tr_plus: MorMatrix| TMatMor {
                    source: source.clone(),
                    witnesses: a.witnesses.iter().map(|w| blk(w.clone(), z.clone(), z.clone(), z.clone())).collect(),
                    alpha_plus: blk(a.alpha_plus.clone(), tr_plus, idz.clone(), ide.clone()),
                    alpha_minus: blk(a.alpha_minus.clone(), idz.clone(), idz.clone(), idz.clone()),
                    phis: a.phis.iter().map(|f| blk(f.clone(), idz.clone(), idz.clone(), idz.clone())).collect(),
                };
                Ok(match x.stage {
                    Inc => witnessed(idz.clone()),
                    Jnc => witnessed(self.shift_parts(b, x)?.1),
                    Knc => {
                        let (pp, mm) = self.shift_parts(b, x)?;
                        TMatMor::structural(
                            cat,
                            &source,
                            blk(pp, mm.clone(), ide.clone(), ide.clone()),
                            blk(mm, idz.clone(), ide.clone(), idz.clone()),
                            self.levels(),
                        )
                    }
                    Lnc => TMatMor::identity(cat, &source, self.levels()),
                })
            },
        )
    }

    /// `value(hi) → value(lo)` as the composite of single steps.
    pub fn descend(&self, hi: usize, lo: usize, vs: &[Vertex]) -> Result<BNMor> {
        let mut acc = identity_mor(&self.big, &self.simplex(hi, vs)?);
        for b in (lo + 1..=hi).rev() {
            acc = compose_mor(&self.big, &self.step(b, vs)?, &acc)?;
        }
        Ok(acc)
    }

    /// The natural map `jnc → knc` at level `b`: identity on finite
    /// entries, `(X, id) : (A, B) → (A + X, B + X)` with
    /// `X = [[Ξ, 0], [1, 0]]` on the `∞` entries.
    pub fn jnc_to_knc(&self, b: usize, vs: &[Vertex]) -> Result<BNMor> {
        let cat = self.cat();
        let (z, e) = (self.zero(), self.unit());
        let (idz, ide) = (self.id(&z), self.id(&e));
        let jv: Vec<Vertex> = vs.iter().map(|x| Vertex { stage: Stage::Jnc, ..*x }).collect();
        let kv: Vec<Vertex> = vs.iter().map(|x| Vertex { stage: Stage::Knc, ..*x }).collect();
        build_mor::<MatrixModule>(
            vs.len() - 1,
            |i, j| Ok(id_matrix(cat, &self.entry(b, &jv[i], &jv[j])?)),
            |i| {
                let source = self.t_entry(b, &jv[i])?;
                let target = self.t_entry(b, &kv[i])?;
                Ok(TMatMor {
                    source,
                    witnesses: (0..=self.levels())
                        .map(|l| Ok(blk(self.big_xi(l, &jv[i], b)?, z.clone(), e.clone(), z.clone())))
                        .collect::<Result<_>>()?,
                    alpha_plus: id_matrix(cat, &target.plus),
                    alpha_minus: id_matrix(cat, &target.minus),
                    phis: (1..=self.levels())
                        .map(|l| Ok(blk(self.v.big_psi(l, vs[i].c, b, vs[i].a)?, idz.clone(), ide.clone(), idz.clone())))
                        .collect::<Result<_>>()?,
                })
            },
        )
    }

    /// Stabilization `in(m) = [[m, 0], [0, 1]]` of a simplex of the chain.
    pub fn stab_simplex(&self, a: &BNSimplex) -> Result<BNSimplex> {
        stab_in(self.cat(), self.v.level(), a)
    }
}

/// `in : B^n → B^{2n}`, blockwise with the unit in the lower corner.
pub fn stab_in(cat: &RigCategory, level: usize, a: &BNSimplex) -> Result<BNSimplex> {
    let n = a.t[0].n();
    let (z, e) = (zero_matrix(cat, n), unit_matrix(cat, n));
    let (idz, ide) = (id_matrix(cat, &z), id_matrix(cat, &e));
    let md = MatrixModule { cat, n, level };
    build_simplex::<MatrixModule>(
        a.q,
        |i, j| Ok(blk(crate::bar::entry(&md, a, i, j), z.clone(), z.clone(), e.clone())),
        |i| Ok(stab_t(&a.t[i], &z, &e)),
        |i, j, k| Ok(blk(crate::bar::coherence(&md, a, i, j, k), idz.clone(), idz.clone(), ide.clone())),
        |i, j| stab_tmor(cat, &crate::bar::action_coherence(&md, a, i, j), &z, &e),
    )
}

pub fn stab_in_mor(cat: &RigCategory, level: usize, f: &BNMor) -> Result<BNMor> {
    let n = f.ft[0].n();
    let (z, e) = (zero_matrix(cat, n), unit_matrix(cat, n));
    let (idz, ide) = (id_matrix(cat, &z), id_matrix(cat, &e));
    let md = MatrixModule { cat, n, level };
    build_mor::<MatrixModule>(
        f.q,
        |i, j| Ok(blk(crate::bar::component(&md, f, i, j), idz.clone(), idz.clone(), ide.clone())),
        |i| stab_tmor(cat, &f.ft[i], &z, &e),
    )
}

fn stab_t(t: &TMatObj, z: &ObjMatrix, e: &ObjMatrix) -> TMatObj {
    TMatObj { plus: blk(t.plus.clone(), z.clone(), z.clone(), e.clone()), minus: blk(t.minus.clone(), z.clone(), z.clone(), z.clone()) }
}

fn stab_tmor(cat: &RigCategory, f: &TMatMor, z: &ObjMatrix, e: &ObjMatrix) -> Result<TMatMor> {
    let (idz, ide) = (id_matrix(cat, z), id_matrix(cat, e));
    Ok(TMatMor {
        source: stab_t(&f.source, z, e),
        witnesses: f.witnesses.iter().map(|w| blk(w.clone(), z.clone(), z.clone(), z.clone())).collect(),
        alpha_plus: blk(f.alpha_plus.clone(), idz.clone(), idz.clone(), ide),
        alpha_minus: blk(f.alpha_minus.clone(), idz.clone(), idz.clone(), idz.clone()),
        phis: f.phis.iter().map(|p| blk(p.clone(), idz.clone(), idz.clone(), idz.clone())).collect(),
    })
}

/// The path from `in(m)` to the fixed vertex `[[1, 0], [(0,1), 1]]`:
/// a bar 1-simplex, a nerve arrow, and a bar 1-simplex pointing back.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicPath {
    /// `[[1, m⁻], [0, 1]] · in(m) = [[m, m⁻], [0, 1]]`.
    pub first: BNSimplex,
    /// `[[m, m⁻], [0, 1]] → [[m, m⁻], [(1,1), 1]]`, witness `[[0, 0], [1, 0]]`.
    pub second: TMatMor,
    /// `[[m⁺, m⁻], [1, 1]] · [[1, 0], [(0,1), 1]] = [[m, m⁻], [(1,1), 1]]`.
    pub third: BNSimplex,
}

fn one_simplex(cat: &RigCategory, level: usize, g: &ObjMatrix, t1: &TMatObj) -> Result<BNSimplex> {
    let t0 = act(cat, g, t1)?;
    build_simplex::<MatrixModule>(
        1,
        |_, _| Ok(g.clone()),
        |i| Ok(if i == 0 { t0.clone() } else { t1.clone() }),
        |_, _, _| unreachable!("no triple in a 1-simplex"),
        |_, _| Ok(TMatMor::identity(cat, &t0, level)),
    )
}

/// Fails unless `m` is weakly invertible.
pub fn basic_path(cat: &RigCategory, level: usize, m: &TMatObj) -> Result<BasicPath> {
    if !m.is_weakly_invertible(cat)? {
        return Err(Error::Invalid("basic path needs a weakly invertible matrix".into()));
    }
    let n = m.n();
    let (z, e) = (zero_matrix(cat, n), unit_matrix(cat, n));
    let start = TMatObj { plus: blk(m.plus.clone(), z.clone(), z.clone(), e.clone()), minus: blk(m.minus.clone(), z.clone(), z.clone(), z.clone()) };
    let first = one_simplex(cat, level, &blk(e.clone(), m.minus.clone(), z.clone(), e.clone()), &start)?;
    let mid = first.t[0].clone();
    let x = blk(z.clone(), z.clone(), e.clone(), z.clone());
    let second = TMatMor {
        source: mid.clone(),
        witnesses: vec![x.clone(); level + 1],
        alpha_plus: id_matrix(cat, &mat_add(cat, &mid.plus, &x)?),
        alpha_minus: id_matrix(cat, &mat_add(cat, &mid.minus, &x)?),
        phis: vec![id_matrix(cat, &x); level],
    };
    let fixed = TMatObj { plus: blk(e.clone(), z.clone(), z.clone(), e.clone()), minus: blk(z.clone(), z.clone(), e.clone(), z) };
    let third = one_simplex(cat, level, &blk(m.plus.clone(), m.minus.clone(), e.clone(), e), &fixed)?;
    if third.t[0] != second.target(cat)? {
        return Err(Error::Validation("basic path does not close up".into()));
    }
    Ok(BasicPath { first, second, third })
}
