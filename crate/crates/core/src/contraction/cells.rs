//! Cells of `z_*NB^{2n}` given by the explicit formulas, and the check
//! that they form a bisimplicial map out of `z^*(Δ[p] × Δ[q])` (or out of
//! a prism for the homotopies).

use super::chain::{BNMor, BNSimplex, ChainView};
use super::values::{Blocks, Stage, Vertex};
use crate::bar::{compose_mor, degeneracy_cell, face_cell, validate_mor, validate_simplex};
use crate::error::{Error, Result};
use crate::sset::{Chain, Dir};
use crate::tmat::MatrixModule;
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::collections::HashMap;

pub type BNCell = Chain<BNSimplex, BNMor>;

/// The four maps and the three homotopies between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Inc,
    Jnc,
    Knc,
    Lnc,
    /// `inc ≃ jnc`, a homotopy in the bar direction.
    IncJnc,
    /// `jnc → knc`, a natural transformation in the nerve direction.
    JncKnc,
    /// `knc ≃ lnc`, in the bar direction.
    KncLnc,
}

/// Where the prism coordinate lives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Prism {
    None,
    Bar,
    Nerve,
}

impl MapKind {
    pub const ALL: [MapKind; 7] =
        [MapKind::Inc, MapKind::Jnc, MapKind::Knc, MapKind::Lnc, MapKind::IncJnc, MapKind::JncKnc, MapKind::KncLnc];

    pub fn name(self) -> &'static str {
        match self {
            MapKind::Inc => "inc",
            MapKind::Jnc => "jnc",
            MapKind::Knc => "knc",
            MapKind::Lnc => "lnc",
            MapKind::IncJnc => "inc~jnc",
            MapKind::JncKnc => "jnc->knc",
            MapKind::KncLnc => "knc~lnc",
        }
    }

    pub fn prism(self) -> Prism {
        match self {
            MapKind::IncJnc | MapKind::KncLnc => Prism::Bar,
            MapKind::JncKnc => Prism::Nerve,
            _ => Prism::None,
        }
    }

    /// Stage at prism coordinate `0` and `1`.
    pub fn sides(self) -> (Stage, Stage) {
        match self {
            MapKind::Inc => (Stage::Inc, Stage::Inc),
            MapKind::Jnc => (Stage::Jnc, Stage::Jnc),
            MapKind::Knc => (Stage::Knc, Stage::Knc),
            MapKind::Lnc => (Stage::Lnc, Stage::Lnc),
            MapKind::IncJnc => (Stage::Jnc, Stage::Inc),
            MapKind::JncKnc => (Stage::Knc, Stage::Jnc),
            MapKind::KncLnc => (Stage::Knc, Stage::Lnc),
        }
    }

    /// The plain maps at the two ends of a homotopy.
    pub fn ends(self) -> Option<(MapKind, MapKind)> {
        let of = |s| match s {
            Stage::Inc => MapKind::Inc,
            Stage::Jnc => MapKind::Jnc,
            Stage::Knc => MapKind::Knc,
            Stage::Lnc => MapKind::Lnc,
        };
        (self.prism() != Prism::None).then(|| (of(self.sides().0), of(self.sides().1)))
    }

    /// Largest `(s, t)` of a nondegenerate cell of the domain.
    pub fn window(self, p: usize, q: usize) -> (usize, usize) {
        match self.prism() {
            Prism::None => (p, p + q),
            Prism::Bar => (p, p + q + 1),
            Prism::Nerve => (p + 1, p + q + 1),
        }
    }
}

/// A cell of the domain in bidegree `(s, t)`: `alpha : [t+1+s] → [p]`,
/// `beta : [t] → [q]` and the prism coordinate `theta` (on the positions
/// of `beta` or of `alpha`, empty for a plain map).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Key {
    pub s: usize,
    pub t: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub theta: Vec<u8>,
}

impl Key {
    pub fn face(&self, prism: Prism, dir: Dir, i: usize) -> Key {
        let mut k = self.clone();
        match dir {
            Dir::H => {
                let pos = self.t + 1 + i;
                k.alpha.remove(pos);
                if prism == Prism::Nerve {
                    k.theta.remove(pos);
                }
                k.s -= 1;
            }
            Dir::V => {
                k.alpha.remove(i);
                k.beta.remove(i);
                if prism != Prism::None {
                    k.theta.remove(i);
                }
                k.t -= 1;
            }
        }
        k
    }

    pub fn degeneracy(&self, prism: Prism, dir: Dir, i: usize) -> Key {
        let mut k = self.clone();
        match dir {
            Dir::H => {
                let pos = self.t + 1 + i;
                k.alpha.insert(pos, self.alpha[pos]);
                if prism == Prism::Nerve {
                    k.theta.insert(pos, self.theta[pos]);
                }
                k.s += 1;
            }
            Dir::V => {
                k.alpha.insert(i, self.alpha[i]);
                k.beta.insert(i, self.beta[i]);
                if prism != Prism::None {
                    k.theta.insert(i, self.theta[i]);
                }
                k.t += 1;
            }
        }
        k
    }

    pub fn is_degenerate(&self, prism: Prism) -> bool {
        let th = |i: usize| self.theta.get(i).copied();
        let h = (0..self.s).any(|i| {
            let pos = self.t + 1 + i;
            self.alpha[pos] == self.alpha[pos + 1] && (prism != Prism::Nerve || th(pos) == th(pos + 1))
        });
        let v = (0..self.t).any(|i| {
            self.alpha[i] == self.alpha[i + 1]
                && self.beta[i] == self.beta[i + 1]
                && (prism == Prism::None || th(i) == th(i + 1))
        });
        h || v
    }

    /// The same cell with the prism coordinate forgotten, when it is constant.
    pub fn end(&self) -> Option<(u8, Key)> {
        let c = *self.theta.first()?;
        self.theta.iter().all(|&x| x == c).then(|| (c, Key { theta: Vec::new(), ..self.clone() }))
    }
}

pub(crate) fn monotone(len: usize, top: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..=top).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// All domain cells in bidegree `(s, t)`.
pub fn keys(kind: MapKind, p: usize, q: usize, s: usize, t: usize) -> Vec<Key> {
    let prism = kind.prism();
    let thetas: Vec<Vec<u8>> = match prism {
        Prism::None => vec![Vec::new()],
        Prism::Bar => monotone(t + 1, 1),
        Prism::Nerve => monotone(t + 2 + s, 1),
    }
    .into_iter()
    .map(|v| v.into_iter().map(|x| x as u8).collect())
    .collect();
    let mut out = Vec::new();
    for alpha in monotone(t + 2 + s, p) {
        for beta in monotone(t + 1, q) {
            for theta in &thetas {
                out.push(Key { s, t, alpha: alpha.clone(), beta: beta.clone(), theta: theta.clone() });
            }
        }
    }
    out
}

type Cached<T> = std::result::Result<T, String>;

/// Evaluates the formulas with memoized simplices and transition maps.
pub struct Evaluator<'a> {
    pub blocks: Blocks<'a>,
    simplices: RefCell<HashMap<(usize, Vec<Vertex>), Cached<BNSimplex>>>,
    transitions: RefCell<HashMap<(usize, usize, Vec<Vertex>, Vec<Vertex>), Cached<BNMor>>>,
}

impl<'a> Evaluator<'a> {
    pub fn new(v: ChainView<'a>) -> Evaluator<'a> {
        Evaluator { blocks: Blocks::new(v), simplices: RefCell::default(), transitions: RefCell::default() }
    }

    pub fn simplex(&self, b: usize, vs: &[Vertex]) -> Result<BNSimplex> {
        let key = (b, vs.to_vec());
        if let Some(r) = self.simplices.borrow().get(&key) {
            return r.clone().map_err(Error::Validation);
        }
        let r = self.blocks.simplex(b, vs).map_err(|e| e.to_string());
        self.simplices.borrow_mut().insert(key, r.clone());
        r.map_err(Error::Validation)
    }

    /// `value(hi, from) → value(lo, to)`, where `to` differs from `from`
    /// only by `jnc` vertices becoming `knc`.
    pub fn transition(&self, hi: usize, from: &[Vertex], lo: usize, to: &[Vertex]) -> Result<BNMor> {
        let key = (hi, lo, from.to_vec(), to.to_vec());
        if let Some(r) = self.transitions.borrow().get(&key) {
            return r.clone().map_err(Error::Validation);
        }
        let r = (|| {
            let g = self.blocks.descend(hi, lo, from)?;
            if from == to {
                Ok(g)
            } else {
                compose_mor(&self.blocks.big, &self.blocks.jnc_to_knc(lo, to)?, &g)
            }
        })()
        .map_err(|e: Error| e.to_string());
        self.transitions.borrow_mut().insert(key, r.clone());
        r.map_err(Error::Validation)
    }

    fn vertices(&self, kind: MapKind, key: &Key, u: usize) -> Vec<Vertex> {
        let (s0, s1) = kind.sides();
        let side = |th: u8| if th == 0 { s0 } else { s1 };
        (0..=key.t)
            .map(|i| {
                let stage = match kind.prism() {
                    Prism::None => s0,
                    Prism::Bar => side(key.theta[i]),
                    Prism::Nerve => side(key.theta[key.t + 1 + u]),
                };
                Vertex { a: key.alpha[i], c: key.beta[i], stage }
            })
            .collect()
    }

    pub fn value(&self, kind: MapKind, key: &Key) -> Result<BNCell> {
        let b = |u: usize| key.alpha[key.t + 1 + u];
        let objs = (0..=key.s).map(|u| self.simplex(b(u), &self.vertices(kind, key, u))).collect::<Result<_>>()?;
        let mors = (0..key.s)
            .map(|u| self.transition(b(u + 1), &self.vertices(kind, key, u + 1), b(u), &self.vertices(kind, key, u)))
            .collect::<Result<_>>()?;
        Ok(Chain { objs, mors })
    }

    /// Validates every memoized simplex and transition map.
    pub fn validate_parts(&self) -> Vec<(String, String)> {
        let md = &self.blocks.big;
        let mut out = Vec::new();
        let simplices = self.simplices.borrow();
        let mut sk: Vec<_> = simplices.keys().collect();
        sk.sort();
        for k in sk {
            match &simplices[k] {
                Ok(a) => {
                    if let Err(e) = validate_simplex(md, a) {
                        out.push((format!("simplex b={} {:?}", k.0, k.1), e.to_string()));
                    }
                }
                Err(e) => out.push((format!("simplex b={} {:?}", k.0, k.1), e.clone())),
            }
        }
        let transitions = self.transitions.borrow();
        let mut tk: Vec<_> = transitions.keys().collect();
        tk.sort();
        for k in tk {
            let at = format!("map b={}→{} {:?} → {:?}", k.0, k.1, k.2, k.3);
            let r = transitions[k].clone().map_err(Error::Validation).and_then(|f| {
                let a = self.simplex(k.0, &k.2)?;
                let b = self.simplex(k.1, &k.3)?;
                validate_mor(md, &f, &a, &b)
            });
            if let Err(e) = r {
                out.push((at, e.to_string()));
            }
        }
        out
    }

    pub fn distinct_parts(&self) -> (usize, usize) {
        (self.simplices.borrow().len(), self.transitions.borrow().len())
    }
}

/// Face of a cell; errors where the nerve face needs a composite that
/// does not exist.
pub fn cell_face(md: &MatrixModule, dir: Dir, (s, t): (usize, usize), i: usize, x: &BNCell) -> Result<BNCell> {
    if dir == Dir::H && i > 0 && i < s {
        compose_mor(md, &x.mors[i - 1], &x.mors[i])?;
    }
    Ok(face_cell(md, dir, (s, t), i, x))
}

pub fn cell_degeneracy(md: &MatrixModule, dir: Dir, t: usize, i: usize, x: &BNCell) -> BNCell {
    degeneracy_cell(md, dir, t, i, x)
}

/// How two cells that should agree differ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mismatch {
    /// Entries differ.
    Objects,
    /// Entries agree, some structure map differs.
    StructureMaps,
    /// Simplices agree, some nerve-direction map differs.
    NerveMaps,
}

fn strip(a: &BNSimplex) -> (&Vec<Vec<crate::matrix::ObjMatrix>>, &Vec<crate::tmat::TMatObj>) {
    (&a.m, &a.t)
}

pub fn classify(x: &BNCell, y: &BNCell) -> Option<Mismatch> {
    if x == y {
        None
    } else if x.objs.len() != y.objs.len() || x.objs.iter().zip(&y.objs).any(|(a, b)| strip(a) != strip(b)) {
        Some(Mismatch::Objects)
    } else if x.objs != y.objs {
        Some(Mismatch::StructureMaps)
    } else {
        Some(Mismatch::NerveMaps)
    }
}
