//! Edgewise (shear) subdivision of bisimplicial sets.
//!
//! `z(S, T) = (T ⊔ S, T)` with every element of `S` above every element of
//! `T`, so `(z*X)_{(s,t)} = X_{(t+1+s, t)}`. The first index is the nerve
//! direction, the second the bar direction.

use crate::delta::DeltaMap;
use crate::error::{Error, Result};
use crate::sset::{pull2, Bisimplicial, Dir, External, StandardSimplex};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// The object part of `z` on ordinals: `([s], [t]) ↦ ([t+1+s], [t])`.
pub fn shear(s: usize, t: usize) -> (usize, usize) {
    (t + 1 + s, t)
}

/// `z*X`.
pub struct ZUpper<'a, B: ?Sized>(pub &'a B);

impl<B: Bisimplicial + ?Sized> Bisimplicial for ZUpper<'_, B> {
    type Cell = B::Cell;
    fn cells(&self, s: usize, t: usize) -> Result<Vec<B::Cell>> {
        self.0.cells(t + 1 + s, t)
    }
    fn face(&self, dir: Dir, (s, t): (usize, usize), i: usize, x: &B::Cell) -> B::Cell {
        match dir {
            Dir::H => self.0.face(Dir::H, (t + 1 + s, t), t + 1 + i, x),
            Dir::V => {
                let y = self.0.face(Dir::H, (t + 1 + s, t), i, x);
                self.0.face(Dir::V, (t + s, t), i, &y)
            }
        }
    }
    fn degeneracy(&self, dir: Dir, (s, t): (usize, usize), i: usize, x: &B::Cell) -> B::Cell {
        match dir {
            Dir::H => self.0.degeneracy(Dir::H, (t + 1 + s, t), t + 1 + i, x),
            Dir::V => {
                let y = self.0.degeneracy(Dir::H, (t + 1 + s, t), i, x);
                self.0.degeneracy(Dir::V, (t + 2 + s, t), i, &y)
            }
        }
    }
}

/// `η* : z*X → X` at `(s, t)`: forget the `T` part of the first index.
pub fn eta_upper<B: Bisimplicial + ?Sized>(x: &B, (s, t): (usize, usize), cell: &B::Cell) -> B::Cell {
    let mut cur = cell.clone();
    for k in 0..=t {
        cur = x.face(Dir::H, (t + 1 + s - k, t), 0, &cur);
    }
    cur
}

/// `Δ[p] × Δ[q]` as an external product.
pub fn prism(p: usize, q: usize) -> External<StandardSimplex, StandardSimplex> {
    External(StandardSimplex(p), StandardSimplex(q))
}

pub type PrismCell = (DeltaMap, DeltaMap);

/// A cell of `z*(Δ[p] × Δ[q])` with its bidegree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrismKey {
    pub s: usize,
    pub t: usize,
    pub cell: PrismCell,
}

fn degenerate_in<B: Bisimplicial + ?Sized>(b: &B, (s, t): (usize, usize), x: &B::Cell) -> Option<(Dir, usize)> {
    for i in 0..s {
        let f = b.face(Dir::H, (s, t), i, x);
        if b.degeneracy(Dir::H, (s - 1, t), i, &f) == *x {
            return Some((Dir::H, i));
        }
    }
    for j in 0..t {
        let f = b.face(Dir::V, (s, t), j, x);
        if b.degeneracy(Dir::V, (s, t - 1), j, &f) == *x {
            return Some((Dir::V, j));
        }
    }
    None
}

/// Nondegenerate cells of `z*(Δ[p] × Δ[q])`, ordered by total degree. They
/// live in bidegrees `s ≤ p`, `t ≤ p + q`.
pub fn nondegenerate_prism_cells(p: usize, q: usize) -> Vec<PrismKey> {
    let pr = prism(p, q);
    let z = ZUpper(&pr);
    let mut out = Vec::new();
    for s in 0..=p {
        for t in 0..=p + q {
            for cell in z.cells(s, t).unwrap() {
                if degenerate_in(&z, (s, t), &cell).is_none() {
                    out.push(PrismKey { s, t, cell });
                }
            }
        }
    }
    out.sort_by(|a, b| (a.s + a.t, a.s, a.t, &a.cell).cmp(&(b.s + b.t, b.s, b.t, &b.cell)));
    out
}

/// A cell of `z_*X` at `(p, q)`: a bisimplicial map `z*(Δ[p]×Δ[q]) → X`,
/// stored by its values on nondegenerate cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZLowerCell<C> {
    pub p: usize,
    pub q: usize,
    pub values: Vec<C>,
}

/// `z_*X`, computed by enumeration. Needs `X` up to bidegree `(p, p+q)` for
/// cells at `(p, q)`.
pub struct ZLower<'a, B: ?Sized> {
    pub x: &'a B,
    keys: HashMap<(usize, usize), (Vec<PrismKey>, HashMap<PrismKey, usize>)>,
}

impl<'a, B: Bisimplicial + ?Sized> ZLower<'a, B> {
    pub fn new(x: &'a B, p_top: usize, q_top: usize) -> ZLower<'a, B> {
        let mut keys = HashMap::new();
        for p in 0..=p_top + 1 {
            for q in 0..=q_top + 1 {
                let ks = nondegenerate_prism_cells(p, q);
                let ix = ks.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
                keys.insert((p, q), (ks, ix));
            }
        }
        ZLower { x, keys }
    }

    /// Truncation of `X` needed for `z_*X` at `(p, q)`.
    pub fn required(p: usize, q: usize) -> (usize, usize) {
        (p, p + q)
    }

    pub fn keys(&self, p: usize, q: usize) -> Result<&[PrismKey]> {
        self.keys
            .get(&(p, q))
            .map(|(k, _)| k.as_slice())
            .ok_or_else(|| Error::Truncation { needed: format!("({p},{q})"), have: "smaller".into() })
    }

    /// Value of `F` on any cell of `z*(Δ[p]×Δ[q])`.
    pub fn eval(&self, f: &ZLowerCell<B::Cell>, key: &PrismKey) -> B::Cell {
        let (_, ix) = &self.keys[&(f.p, f.q)];
        if let Some(&i) = ix.get(key) {
            return f.values[i].clone();
        }
        let pr = prism(f.p, f.q);
        let z = ZUpper(&pr);
        let (dir, i) = degenerate_in(&z, (key.s, key.t), &key.cell).expect("cell is degenerate");
        let (below, at) = match dir {
            Dir::H => ((key.s - 1, key.t), (key.s - 1, key.t)),
            Dir::V => ((key.s, key.t - 1), (key.s, key.t - 1)),
        };
        let face = z.face(dir, (key.s, key.t), i, &key.cell);
        let v = self.eval(f, &PrismKey { s: below.0, t: below.1, cell: face });
        self.x.degeneracy(dir, at, i, &v)
    }

    /// Checks the face equations of a candidate assignment on the first
    /// `upto` nondegenerate cells.
    fn consistent(&self, f: &ZLowerCell<B::Cell>, upto: usize) -> bool {
        let pr = prism(f.p, f.q);
        let z = ZUpper(&pr);
        let (keys, _) = &self.keys[&(f.p, f.q)];
        let k = &keys[upto];
        let v = &f.values[upto];
        let (s, t) = (k.s, k.t);
        for (dir, n) in [(Dir::H, s), (Dir::V, t)] {
            if n == 0 {
                continue;
            }
            for i in 0..=n {
                let fk = z.face(dir, (s, t), i, &k.cell);
                let (s2, t2) = if dir == Dir::H { (s - 1, t) } else { (s, t - 1) };
                let expect = self.eval(f, &PrismKey { s: s2, t: t2, cell: fk });
                if self.x.face(dir, (s, t), i, v) != expect {
                    return false;
                }
            }
        }
        true
    }

    /// All bisimplicial maps `z*(Δ[p]×Δ[q]) → X`, by backtracking over the
    /// nondegenerate cells.
    pub fn enumerate(&self, p: usize, q: usize) -> Result<Vec<ZLowerCell<B::Cell>>> {
        let keys = self.keys(p, q)?.to_vec();
        let mut candidates = Vec::with_capacity(keys.len());
        for k in &keys {
            candidates.push(self.x.cells(k.s, k.t)?);
        }
        let mut out = Vec::new();
        let mut cur = ZLowerCell { p, q, values: Vec::with_capacity(keys.len()) };
        self.search(&keys, &candidates, &mut cur, &mut out);
        Ok(out)
    }

    fn search(
        &self,
        keys: &[PrismKey],
        candidates: &[Vec<B::Cell>],
        cur: &mut ZLowerCell<B::Cell>,
        out: &mut Vec<ZLowerCell<B::Cell>>,
    ) {
        let k = cur.values.len();
        if k == keys.len() {
            out.push(cur.clone());
            return;
        }
        for c in &candidates[k] {
            cur.values.push(c.clone());
            if self.consistent(cur, k) {
                self.search(keys, candidates, cur, out);
            }
            cur.values.pop();
        }
    }

    /// Restriction along `(θ, ψ) : Δ[p']×Δ[q'] → Δ[p]×Δ[q]`.
    pub fn restrict(&self, f: &ZLowerCell<B::Cell>, theta: &DeltaMap, psi: &DeltaMap) -> ZLowerCell<B::Cell> {
        let (p2, q2) = (theta.src(), psi.src());
        let (keys, _) = &self.keys[&(p2, q2)];
        let values = keys
            .iter()
            .map(|k| {
                let cell = (theta.after(&k.cell.0), psi.after(&k.cell.1));
                self.eval(f, &PrismKey { s: k.s, t: k.t, cell })
            })
            .collect();
        ZLowerCell { p: p2, q: q2, values }
    }

    /// `η_* : X → z_*X`, the transpose of `η*`.
    pub fn eta_lower(&self, (p, q): (usize, usize), x: &B::Cell) -> ZLowerCell<B::Cell> {
        let (keys, _) = &self.keys[&(p, q)];
        let values = keys.iter().map(|k| eta_value(self.x, k, x)).collect();
        ZLowerCell { p, q, values }
    }

    /// The counit `z*z_*X → X` at `(s, t)`: evaluate at the top cell.
    pub fn counit(&self, (s, t): (usize, usize), f: &ZLowerCell<B::Cell>) -> B::Cell {
        let (p, q) = shear(s, t);
        debug_assert_eq!((f.p, f.q), (p, q));
        self.eval(f, &PrismKey { s, t, cell: (DeltaMap::identity(p), DeltaMap::identity(q)) })
    }
}

/// `η_*(x)` at a prism cell `(α, β)`: pull `x` back along the `S` part of
/// `α` and along `β`.
pub fn eta_value<B: Bisimplicial + ?Sized>(x: &B, k: &PrismKey, cell: &B::Cell) -> B::Cell {
    let (alpha, beta) = &k.cell;
    let p = alpha.tgt();
    let q = beta.tgt();
    let s_part = DeltaMap::new(k.s, p, alpha.values()[k.t + 1..].to_vec()).unwrap();
    let y = pull2(x, Dir::V, (p, q), beta, cell);
    pull2(x, Dir::H, (p, k.t), &s_part, &y)
}

impl<B: Bisimplicial + ?Sized> Bisimplicial for ZLower<'_, B> {
    type Cell = ZLowerCell<B::Cell>;
    fn cells(&self, p: usize, q: usize) -> Result<Vec<Self::Cell>> {
        self.enumerate(p, q)
    }
    fn face(&self, dir: Dir, (p, q): (usize, usize), i: usize, f: &Self::Cell) -> Self::Cell {
        match dir {
            Dir::H => self.restrict(f, &DeltaMap::coface(p, i), &DeltaMap::identity(q)),
            Dir::V => self.restrict(f, &DeltaMap::identity(p), &DeltaMap::coface(q, i)),
        }
    }
    fn degeneracy(&self, dir: Dir, (p, q): (usize, usize), i: usize, f: &Self::Cell) -> Self::Cell {
        match dir {
            Dir::H => self.restrict(f, &DeltaMap::codegeneracy(p, i), &DeltaMap::identity(q)),
            Dir::V => self.restrict(f, &DeltaMap::identity(p), &DeltaMap::codegeneracy(q, i)),
        }
    }
}

/// Independent oracle: all bisimplicial maps `z*(Δ[p]×Δ[q]) → X`, found by
/// assigning every cell in the window `s ≤ p`, `t ≤ p + q` and checking all
/// faces and degeneracies inside it. Returned as restrictions to the
/// nondegenerate cells.
pub fn brute_force_maps<B: Bisimplicial + ?Sized>(x: &B, p: usize, q: usize) -> Result<Vec<Vec<B::Cell>>> {
    let pr = prism(p, q);
    let z = ZUpper(&pr);
    let (sm, tm) = (p, p + q);
    let mut all: Vec<PrismKey> = Vec::new();
    for s in 0..=sm {
        for t in 0..=tm {
            for cell in z.cells(s, t)? {
                all.push(PrismKey { s, t, cell });
            }
        }
    }
    all.sort_by(|a, b| (a.s + a.t, a.s, a.t, &a.cell).cmp(&(b.s + b.t, b.s, b.t, &b.cell)));
    let index: HashMap<PrismKey, usize> = all.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
    let candidates: Vec<Vec<B::Cell>> = all.iter().map(|k| x.cells(k.s, k.t)).collect::<Result<_>>()?;
    let mut found = Vec::new();
    let mut cur: Vec<B::Cell> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go<B: Bisimplicial + ?Sized>(
        x: &B,
        z: &ZUpper<'_, External<StandardSimplex, StandardSimplex>>,
        all: &[PrismKey],
        index: &HashMap<PrismKey, usize>,
        candidates: &[Vec<B::Cell>],
        cur: &mut Vec<B::Cell>,
        found: &mut Vec<Vec<B::Cell>>,
        (sm, tm): (usize, usize),
    ) {
        let k = cur.len();
        if k == all.len() {
            found.push(cur.clone());
            return;
        }
        let key = &all[k];
        let (s, t) = (key.s, key.t);
        'cand: for c in &candidates[k] {
            // faces land earlier in the order
            for (dir, n) in [(Dir::H, s), (Dir::V, t)] {
                if n == 0 {
                    continue;
                }
                for i in 0..=n {
                    let fk = z.face(dir, (s, t), i, &key.cell);
                    let (s2, t2) = if dir == Dir::H { (s - 1, t) } else { (s, t - 1) };
                    let j = index[&PrismKey { s: s2, t: t2, cell: fk }];
                    if x.face(dir, (s, t), i, c) != cur[j] {
                        continue 'cand;
                    }
                }
            }
            // degeneracies from earlier cells that land here
            for (dir, n) in [(Dir::H, s), (Dir::V, t)] {
                if n == 0 {
                    continue;
                }
                let (s2, t2) = if dir == Dir::H { (s - 1, t) } else { (s, t - 1) };
                for i in 0..n {
                    for (j, other) in all.iter().enumerate().take(k) {
                        if (other.s, other.t) == (s2, t2) && z.degeneracy(dir, (s2, t2), i, &other.cell) == key.cell {
                            if x.degeneracy(dir, (s2, t2), i, &cur[j]) != *c {
                                continue 'cand;
                            }
                        }
                    }
                }
            }
            cur.push(c.clone());
            go(x, z, all, index, candidates, cur, found, (sm, tm));
            cur.pop();
        }
    }
    go(x, &z, &all, &index, &candidates, &mut cur, &mut found, (sm, tm));
    let nd = nondegenerate_prism_cells(p, q);
    let mut out: Vec<Vec<B::Cell>> = found.into_iter().map(|v| nd.iter().map(|k| v[index[k]].clone()).collect()).collect();
    out.sort();
    out.dedup();
    Ok(out)
}
