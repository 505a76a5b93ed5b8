//! Truncated simplicial and bisimplicial sets.
//!
//! Constructions implement [`Simplicial`] or [`Bisimplicial`] lazily, on
//! cell values. [`SSet`] and [`BiSSet`] materialize a truncation as index
//! tables, which is what homology and the dump format work with.

use crate::delta::DeltaMap;
use crate::error::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

pub trait Simplicial {
    type Cell: Clone + Eq + Hash + Ord + Debug;
    /// All cells of degree `d`, without repetition.
    fn cells(&self, d: usize) -> Result<Vec<Self::Cell>>;
    fn face(&self, d: usize, i: usize, x: &Self::Cell) -> Self::Cell;
    fn degeneracy(&self, d: usize, i: usize, x: &Self::Cell) -> Self::Cell;
}

/// Pulls a cell of degree `θ.tgt()` back along `θ`.
pub fn pull<S: Simplicial + ?Sized>(s: &S, theta: &DeltaMap, x: &S::Cell) -> S::Cell {
    let (faces, degens) = theta.decompose();
    let mut d = theta.tgt();
    let mut cur = x.clone();
    for a in faces {
        cur = s.face(d, a, &cur);
        d -= 1;
    }
    for b in degens {
        cur = s.degeneracy(d, b, &cur);
        d += 1;
    }
    cur
}

pub fn is_degenerate<S: Simplicial + ?Sized>(s: &S, d: usize, x: &S::Cell) -> bool {
    d > 0 && (0..d).any(|i| s.degeneracy(d - 1, i, &s.face(d, i, x)) == *x)
}

/// Direction of a bisimplicial operator: `H` acts on the first index
/// (nerve direction), `V` on the second (bar direction).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    H,
    V,
}

pub trait Bisimplicial {
    type Cell: Clone + Eq + Hash + Ord + Debug;
    fn cells(&self, p: usize, q: usize) -> Result<Vec<Self::Cell>>;
    fn face(&self, dir: Dir, pq: (usize, usize), i: usize, x: &Self::Cell) -> Self::Cell;
    fn degeneracy(&self, dir: Dir, pq: (usize, usize), i: usize, x: &Self::Cell) -> Self::Cell;
}

fn shifted(dir: Dir, (p, q): (usize, usize), by: isize) -> (usize, usize) {
    match dir {
        Dir::H => ((p as isize + by) as usize, q),
        Dir::V => (p, (q as isize + by) as usize),
    }
}

/// Pulls back along `θ` in one direction.
pub fn pull2<B: Bisimplicial + ?Sized>(b: &B, dir: Dir, pq: (usize, usize), theta: &DeltaMap, x: &B::Cell) -> B::Cell {
    let (faces, degens) = theta.decompose();
    let mut at = pq;
    let mut cur = x.clone();
    for a in faces {
        cur = b.face(dir, at, a, &cur);
        at = shifted(dir, at, -1);
    }
    for s in degens {
        cur = b.degeneracy(dir, at, s, &cur);
        at = shifted(dir, at, 1);
    }
    cur
}

/// One direction of a bisimplicial set, at a fixed other index.
pub struct Slice<'a, B: ?Sized> {
    pub inner: &'a B,
    pub dir: Dir,
    pub fixed: usize,
}

impl<B: Bisimplicial + ?Sized> Simplicial for Slice<'_, B> {
    type Cell = B::Cell;
    fn cells(&self, d: usize) -> Result<Vec<B::Cell>> {
        match self.dir {
            Dir::H => self.inner.cells(d, self.fixed),
            Dir::V => self.inner.cells(self.fixed, d),
        }
    }
    fn face(&self, d: usize, i: usize, x: &B::Cell) -> B::Cell {
        let pq = if self.dir == Dir::H { (d, self.fixed) } else { (self.fixed, d) };
        self.inner.face(self.dir, pq, i, x)
    }
    fn degeneracy(&self, d: usize, i: usize, x: &B::Cell) -> B::Cell {
        let pq = if self.dir == Dir::H { (d, self.fixed) } else { (self.fixed, d) };
        self.inner.degeneracy(self.dir, pq, i, x)
    }
}

/// The diagonal `[n] ↦ X_{(n,n)}`.
pub struct Diagonal<'a, B: ?Sized>(pub &'a B);

impl<B: Bisimplicial + ?Sized> Simplicial for Diagonal<'_, B> {
    type Cell = B::Cell;
    fn cells(&self, d: usize) -> Result<Vec<B::Cell>> {
        self.0.cells(d, d)
    }
    fn face(&self, d: usize, i: usize, x: &B::Cell) -> B::Cell {
        let y = self.0.face(Dir::V, (d, d), i, x);
        self.0.face(Dir::H, (d, d - 1), i, &y)
    }
    fn degeneracy(&self, d: usize, i: usize, x: &B::Cell) -> B::Cell {
        let y = self.0.degeneracy(Dir::V, (d, d), i, x);
        self.0.degeneracy(Dir::H, (d, d + 1), i, &y)
    }
}

/// The standard simplex `Δ[p]`; cells are monotone maps into `[p]`.
pub struct StandardSimplex(pub usize);

impl Simplicial for StandardSimplex {
    type Cell = DeltaMap;
    fn cells(&self, d: usize) -> Result<Vec<DeltaMap>> {
        Ok(DeltaMap::all(d, self.0))
    }
    fn face(&self, d: usize, i: usize, x: &DeltaMap) -> DeltaMap {
        x.after(&DeltaMap::coface(d, i))
    }
    fn degeneracy(&self, d: usize, i: usize, x: &DeltaMap) -> DeltaMap {
        x.after(&DeltaMap::codegeneracy(d, i))
    }
}

/// External product `(p, q) ↦ A_p × B_q`.
pub struct External<A, B>(pub A, pub B);

impl<A: Simplicial, B: Simplicial> Bisimplicial for External<A, B> {
    type Cell = (A::Cell, B::Cell);
    fn cells(&self, p: usize, q: usize) -> Result<Vec<Self::Cell>> {
        let (xs, ys) = (self.0.cells(p)?, self.1.cells(q)?);
        Ok(xs.iter().flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone()))).collect())
    }
    fn face(&self, dir: Dir, (p, q): (usize, usize), i: usize, (x, y): &Self::Cell) -> Self::Cell {
        match dir {
            Dir::H => (self.0.face(p, i, x), y.clone()),
            Dir::V => (x.clone(), self.1.face(q, i, y)),
        }
    }
    fn degeneracy(&self, dir: Dir, (p, q): (usize, usize), i: usize, (x, y): &Self::Cell) -> Self::Cell {
        match dir {
            Dir::H => (self.0.degeneracy(p, i, x), y.clone()),
            Dir::V => (x.clone(), self.1.degeneracy(q, i, y)),
        }
    }
}

/// A constant bisimplicial set on a simplicial set, varying in one direction.
pub struct Constant<S> {
    pub inner: S,
    /// The direction along which the inner simplicial structure runs.
    pub along: Dir,
}

impl<S: Simplicial> Bisimplicial for Constant<S> {
    type Cell = S::Cell;
    fn cells(&self, p: usize, q: usize) -> Result<Vec<S::Cell>> {
        self.inner.cells(if self.along == Dir::H { p } else { q })
    }
    fn face(&self, dir: Dir, (p, q): (usize, usize), i: usize, x: &S::Cell) -> S::Cell {
        if dir != self.along {
            return x.clone();
        }
        self.inner.face(if dir == Dir::H { p } else { q }, i, x)
    }
    fn degeneracy(&self, dir: Dir, (p, q): (usize, usize), i: usize, x: &S::Cell) -> S::Cell {
        if dir != self.along {
            return x.clone();
        }
        self.inner.degeneracy(if dir == Dir::H { p } else { q }, i, x)
    }
}

/// A small category with enumerable objects and morphisms.
pub trait FiniteCategory {
    type Obj: Clone + Eq + Hash + Ord + Debug;
    type Mor: Clone + Eq + Hash + Ord + Debug;
    fn objects(&self) -> Vec<Self::Obj>;
    fn morphisms_into(&self, x: &Self::Obj) -> Vec<Self::Mor>;
    fn dom(&self, f: &Self::Mor) -> Self::Obj;
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Self::Mor;
    fn id(&self, x: &Self::Obj) -> Self::Mor;
}

/// A `p`-simplex of a nerve: `x₀ ← x₁ ← … ← x_p`, with `mors[i] : x_{i+1} → x_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chain<O, M> {
    pub objs: Vec<O>,
    pub mors: Vec<M>,
}

pub struct Nerve<'a, C: ?Sized>(pub &'a C);

pub fn nerve<C: FiniteCategory>(cat: &C) -> Nerve<'_, C> {
    Nerve(cat)
}

impl<C: FiniteCategory + ?Sized> Simplicial for Nerve<'_, C> {
    type Cell = Chain<C::Obj, C::Mor>;
    fn cells(&self, d: usize) -> Result<Vec<Self::Cell>> {
        let mut out: Vec<Self::Cell> =
            self.0.objects().into_iter().map(|x| Chain { objs: vec![x], mors: Vec::new() }).collect();
        for _ in 0..d {
            out = out
                .into_iter()
                .flat_map(|c| {
                    let last = c.objs.last().unwrap().clone();
                    self.0.morphisms_into(&last).into_iter().map(move |f| {
                        let mut c = c.clone();
                        c.objs.push(self.0.dom(&f));
                        c.mors.push(f);
                        c
                    })
                })
                .collect();
        }
        out.sort();
        Ok(out)
    }
    fn face(&self, d: usize, i: usize, x: &Self::Cell) -> Self::Cell {
        let mut y = x.clone();
        y.objs.remove(i);
        if i == 0 {
            y.mors.remove(0);
        } else if i == d {
            y.mors.pop();
        } else {
            y.mors[i - 1] = self.0.compose(&x.mors[i - 1], &x.mors[i]);
            y.mors.remove(i);
        }
        y
    }
    fn degeneracy(&self, _d: usize, i: usize, x: &Self::Cell) -> Self::Cell {
        let mut y = x.clone();
        y.objs.insert(i, x.objs[i].clone());
        y.mors.insert(i, self.0.id(&x.objs[i]));
        y
    }
}

/// The cyclic group `ℤ/k` as a one-object category.
pub struct CyclicGroup(pub u64);

impl FiniteCategory for CyclicGroup {
    type Obj = ();
    type Mor = u64;
    fn objects(&self) -> Vec<()> {
        vec![()]
    }
    fn morphisms_into(&self, _: &()) -> Vec<u64> {
        (0..self.0).collect()
    }
    fn dom(&self, _: &u64) {}
    fn compose(&self, g: &u64, f: &u64) -> u64 {
        (g + f) % self.0
    }
    fn id(&self, _: &()) -> u64 {
        0
    }
}

/// A set viewed as a category with identities only.
pub struct DiscreteCategory(pub Vec<u64>);

impl FiniteCategory for DiscreteCategory {
    type Obj = u64;
    type Mor = u64;
    fn objects(&self) -> Vec<u64> {
        self.0.clone()
    }
    fn morphisms_into(&self, x: &u64) -> Vec<u64> {
        vec![*x]
    }
    fn dom(&self, f: &u64) -> u64 {
        *f
    }
    fn compose(&self, _g: &u64, f: &u64) -> u64 {
        *f
    }
    fn id(&self, x: &u64) -> u64 {
        *x
    }
}

/// One degree of a materialized simplicial set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub labels: Vec<String>,
    /// `faces[x][i]` indexes `d_i x` in the degree below.
    pub faces: Vec<Vec<usize>>,
    /// `degeneracies[x][i]` indexes `s_i x` in the degree above; empty at the top.
    pub degeneracies: Vec<Vec<usize>>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// A simplicial set truncated at degree `top`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SSet {
    pub top: usize,
    pub levels: Vec<Level>,
}

fn index_of<T: Hash + Eq + Debug>(map: &HashMap<T, usize>, x: &T, what: &str) -> Result<usize> {
    map.get(x).copied().ok_or_else(|| Error::Validation(format!("{what} {x:?} is not an enumerated cell")))
}

impl SSet {
    pub fn from_simplicial<S: Simplicial + ?Sized>(s: &S, top: usize) -> Result<SSet> {
        let cells: Vec<Vec<S::Cell>> = (0..=top).map(|d| s.cells(d)).collect::<Result<_>>()?;
        let maps: Vec<HashMap<S::Cell, usize>> =
            cells.iter().map(|cs| cs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect()).collect();
        let mut levels = Vec::with_capacity(top + 1);
        for d in 0..=top {
            let mut level = Level { labels: Vec::new(), faces: Vec::new(), degeneracies: Vec::new() };
            for x in &cells[d] {
                level.labels.push(format!("{x:?}"));
                let faces = if d == 0 {
                    Vec::new()
                } else {
                    (0..=d).map(|i| index_of(&maps[d - 1], &s.face(d, i, x), "face")).collect::<Result<_>>()?
                };
                let degens = if d == top {
                    Vec::new()
                } else {
                    (0..=d).map(|i| index_of(&maps[d + 1], &s.degeneracy(d, i, x), "degeneracy")).collect::<Result<_>>()?
                };
                level.faces.push(faces);
                level.degeneracies.push(degens);
            }
            levels.push(level);
        }
        Ok(SSet { top, levels })
    }

    pub fn count(&self, d: usize) -> usize {
        self.levels[d].len()
    }

    pub fn face(&self, d: usize, i: usize, x: usize) -> usize {
        self.levels[d].faces[x][i]
    }

    pub fn degeneracy(&self, d: usize, i: usize, x: usize) -> usize {
        self.levels[d].degeneracies[x][i]
    }

    /// Cells of degree `d` not in the image of a degeneracy.
    pub fn nondegenerate(&self, d: usize) -> Vec<bool> {
        let mut nd = vec![true; self.count(d)];
        if d > 0 {
            for x in 0..self.count(d - 1) {
                for &y in &self.levels[d - 1].degeneracies[x] {
                    nd[y] = false;
                }
            }
        }
        nd
    }

    /// Checks all simplicial identities within the truncation.
    pub fn check_identities(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Validation(format!("simplicial identity {what}")));
        for d in 0..=self.top {
            for x in 0..self.count(d) {
                if d >= 2 {
                    for j in 0..=d {
                        for i in 0..j {
                            let a = self.face(d - 1, i, self.face(d, j, x));
                            let b = self.face(d - 1, j - 1, self.face(d, i, x));
                            if a != b {
                                return fail(format!("d{i} d{j} at degree {d}, cell {x}"));
                            }
                        }
                    }
                }
                if d < self.top {
                    for j in 0..=d {
                        let y = self.degeneracy(d, j, x);
                        for i in 0..=d + 1 {
                            let lhs = self.face(d + 1, i, y);
                            let ok = if i == j || i == j + 1 {
                                lhs == x
                            } else if i < j {
                                lhs == self.degeneracy(d - 1, j - 1, self.face(d, i, x))
                            } else {
                                lhs == self.degeneracy(d - 1, j, self.face(d, i - 1, x))
                            };
                            if !ok {
                                return fail(format!("d{i} s{j} at degree {d}, cell {x}"));
                            }
                        }
                    }
                }
                if d + 1 < self.top {
                    for j in 0..=d {
                        for i in 0..=j {
                            let a = self.degeneracy(d + 1, i, self.degeneracy(d, j, x));
                            let b = self.degeneracy(d + 1, j + 1, self.degeneracy(d, i, x));
                            if a != b {
                                return fail(format!("s{i} s{j} at degree {d}, cell {x}"));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Checks one randomly chosen simplicial identity on a random cell of
/// degree at most `top`. Returns a description of the case on failure.
pub fn random_identity_case<S: Simplicial + ?Sized, R: Rng + ?Sized>(s: &S, top: usize, rng: &mut R) -> Result<()> {
    let d = rng.gen_range(0..=top);
    let cells = s.cells(d)?;
    if cells.is_empty() {
        return Ok(());
    }
    let x = &cells[rng.gen_range(0..cells.len())];
    let bad = |what: String| Err(Error::Validation(format!("{what} fails on {x:?} at degree {d}")));
    match rng.gen_range(0..3) {
        0 if d >= 2 => {
            let j = rng.gen_range(1..=d);
            let i = rng.gen_range(0..j);
            if s.face(d - 1, i, &s.face(d, j, x)) != s.face(d - 1, j - 1, &s.face(d, i, x)) {
                return bad(format!("d{i} d{j}"));
            }
        }
        1 => {
            let j = rng.gen_range(0..=d);
            let i = rng.gen_range(0..=d + 1);
            let y = s.degeneracy(d, j, x);
            let lhs = s.face(d + 1, i, &y);
            let rhs = if i == j || i == j + 1 {
                x.clone()
            } else if i < j {
                s.degeneracy(d - 1, j - 1, &s.face(d, i, x))
            } else {
                s.degeneracy(d - 1, j, &s.face(d, i - 1, x))
            };
            if lhs != rhs {
                return bad(format!("d{i} s{j}"));
            }
        }
        _ => {
            let j = rng.gen_range(0..=d);
            let i = rng.gen_range(0..=j);
            let a = s.degeneracy(d + 1, i, &s.degeneracy(d, j, x));
            let b = s.degeneracy(d + 1, j + 1, &s.degeneracy(d, i, x));
            if a != b {
                return bad(format!("s{i} s{j}"));
            }
        }
    }
    Ok(())
}

/// Checks that horizontal and vertical operators commute on a random cell.
pub fn random_interchange_case<B: Bisimplicial + ?Sized, R: Rng + ?Sized>(
    b: &B,
    (pt, qt): (usize, usize),
    rng: &mut R,
) -> Result<()> {
    let (p, q) = (rng.gen_range(1..=pt), rng.gen_range(1..=qt));
    let cells = b.cells(p, q)?;
    if cells.is_empty() {
        return Ok(());
    }
    let x = &cells[rng.gen_range(0..cells.len())];
    let (i, j) = (rng.gen_range(0..=p), rng.gen_range(0..=q));
    let a = b.face(Dir::V, (p - 1, q), j, &b.face(Dir::H, (p, q), i, x));
    let c = b.face(Dir::H, (p, q - 1), i, &b.face(Dir::V, (p, q), j, x));
    let (i2, j2) = (rng.gen_range(0..=p), rng.gen_range(0..=q));
    let e = b.degeneracy(Dir::V, (p - 1, q), j2, &b.face(Dir::H, (p, q), i, x));
    let f = b.face(Dir::H, (p, q + 1), i, &b.degeneracy(Dir::V, (p, q), j2, x));
    let g = b.degeneracy(Dir::H, (p, q - 1), i2, &b.face(Dir::V, (p, q), j, x));
    let h = b.face(Dir::V, (p + 1, q), j, &b.degeneracy(Dir::H, (p, q), i2, x));
    if a != c || e != f || g != h {
        return Err(Error::Validation(format!("horizontal and vertical operators do not commute on {x:?}")));
    }
    Ok(())
}

/// One bidegree of a materialized bisimplicial set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiLevel {
    pub p: usize,
    pub q: usize,
    pub labels: Vec<String>,
    pub h_faces: Vec<Vec<usize>>,
    pub v_faces: Vec<Vec<usize>>,
    pub h_degeneracies: Vec<Vec<usize>>,
    pub v_degeneracies: Vec<Vec<usize>>,
}

/// A bisimplicial set truncated at `(p_top, q_top)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiSSet {
    pub p_top: usize,
    pub q_top: usize,
    pub levels: Vec<BiLevel>,
}

impl BiSSet {
    pub fn from_bisimplicial<B: Bisimplicial + ?Sized>(b: &B, p_top: usize, q_top: usize) -> Result<BiSSet> {
        let mut cells = HashMap::new();
        let mut maps = HashMap::new();
        for p in 0..=p_top {
            for q in 0..=q_top {
                let cs = b.cells(p, q)?;
                maps.insert((p, q), cs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect::<HashMap<_, _>>());
                cells.insert((p, q), cs);
            }
        }
        let mut levels = Vec::new();
        for p in 0..=p_top {
            for q in 0..=q_top {
                let mut l = BiLevel {
                    p,
                    q,
                    labels: Vec::new(),
                    h_faces: Vec::new(),
                    v_faces: Vec::new(),
                    h_degeneracies: Vec::new(),
                    v_degeneracies: Vec::new(),
                };
                for x in &cells[&(p, q)] {
                    l.labels.push(format!("{x:?}"));
                    let hf = if p == 0 { Vec::new() } else {
                        (0..=p).map(|i| index_of(&maps[&(p - 1, q)], &b.face(Dir::H, (p, q), i, x), "face")).collect::<Result<_>>()?
                    };
                    let vf = if q == 0 { Vec::new() } else {
                        (0..=q).map(|i| index_of(&maps[&(p, q - 1)], &b.face(Dir::V, (p, q), i, x), "face")).collect::<Result<_>>()?
                    };
                    let hd = if p == p_top { Vec::new() } else {
                        (0..=p).map(|i| index_of(&maps[&(p + 1, q)], &b.degeneracy(Dir::H, (p, q), i, x), "degeneracy")).collect::<Result<_>>()?
                    };
                    let vd = if q == q_top { Vec::new() } else {
                        (0..=q).map(|i| index_of(&maps[&(p, q + 1)], &b.degeneracy(Dir::V, (p, q), i, x), "degeneracy")).collect::<Result<_>>()?
                    };
                    l.h_faces.push(hf);
                    l.v_faces.push(vf);
                    l.h_degeneracies.push(hd);
                    l.v_degeneracies.push(vd);
                }
                levels.push(l);
            }
        }
        Ok(BiSSet { p_top, q_top, levels })
    }

    pub fn level(&self, p: usize, q: usize) -> &BiLevel {
        &self.levels[p * (self.q_top + 1) + q]
    }

    /// Checks that horizontal and vertical faces and degeneracies commute.
    pub fn check_interchange(&self) -> Result<()> {
        for l in &self.levels {
            let (p, q) = (l.p, l.q);
            for x in 0..l.labels.len() {
                if p > 0 && q > 0 {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.level(p - 1, q).v_faces[l.h_faces[x][i]][j];
                            let b = self.level(p, q - 1).h_faces[l.v_faces[x][j]][i];
                            if a != b {
                                return Err(Error::Validation(format!("d^h_{i} d^v_{j} at ({p},{q})")));
                            }
                        }
                    }
                }
                if p > 0 && q < self.q_top {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.level(p - 1, q).v_degeneracies[l.h_faces[x][i]][j];
                            let b = self.level(p, q + 1).h_faces[l.v_degeneracies[x][j]][i];
                            if a != b {
                                return Err(Error::Validation(format!("d^h_{i} s^v_{j} at ({p},{q})")));
                            }
                        }
                    }
                }
                if q > 0 && p < self.p_top {
                    for i in 0..=p {
                        for j in 0..=q {
                            let a = self.level(p, q - 1).h_degeneracies[l.v_faces[x][j]][i];
                            let b = self.level(p + 1, q).v_faces[l.h_degeneracies[x][i]][j];
                            if a != b {
                                return Err(Error::Validation(format!("s^h_{i} d^v_{j} at ({p},{q})")));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
