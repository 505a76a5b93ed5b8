//! `N_p B_q`: chains of bar morphisms between `q`-simplices.

use super::*;
use crate::homology::{homology, AbelianGroup};
use crate::sset::{Bisimplicial, Chain, Diagonal, Dir, SSet};
use serde::Serialize;

/// A module whose categories are finite and enumerable.
pub trait FiniteBarModule: BarModule {
    fn m_objects(&self) -> Vec<Self::MObj>;
    fn t_objects(&self) -> Vec<Self::TObj>;
    fn m_homs(&self, a: &Self::MObj, b: &Self::MObj) -> Vec<Self::MMor>;
    fn t_homs(&self, a: &Self::TObj, b: &Self::TObj) -> Vec<Self::TMor>;
}

pub type BarCell<M> = Chain<Simplex<M>, Mor<M>>;

pub struct BarNerve<'a, M>(pub &'a M);

pub fn bar_nerve<M: BarModule>(md: &M) -> BarNerve<'_, M> {
    BarNerve(md)
}

fn product<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for c in choices {
        out = out.into_iter().flat_map(|p| c.iter().map(move |x| {
            let mut p = p.clone();
            p.push(x.clone());
            p
        })).collect();
    }
    out
}

/// Simplices of degree `d + 1` whose `0`-th face is `s`.
fn extend<M: FiniteBarModule>(md: &M, s: &Simplex<M>) -> Vec<Simplex<M>> {
    let d = s.q;
    let shifted = |i: usize, j: usize| entry(md, s, i - 1, j - 1);
    let mut out = Vec::new();
    let row_objs: Vec<Vec<M::MObj>> = (0..=d).map(|_| md.m_objects()).collect();
    for objs in product(&row_objs) {
        // objs[j-1] = a_0j
        for t0 in md.t_objects() {
            let mut choices: Vec<Vec<Choice<M>>> = Vec::new();
            let mut ok = true;
            for j in 1..=d + 1 {
                for k in j + 1..=d + 1 {
                    let src = md.mul(&objs[j - 1], &shifted(j, k));
                    let homs = src.map(|x| md.m_homs(&x, &objs[k - 1])).unwrap_or_default();
                    ok &= !homs.is_empty();
                    choices.push(homs.into_iter().map(Choice::M).collect());
                }
                let src = md.act(&objs[j - 1], &s.t[j - 1]);
                let homs = src.map(|x| md.t_homs(&x, &t0)).unwrap_or_default();
                ok &= !homs.is_empty();
                choices.push(homs.into_iter().map(Choice::T).collect());
            }
            if !ok {
                continue;
            }
            for pick in product(&choices) {
                let mut it = pick.into_iter();
                let mut mm0 = Vec::new();
                let mut mt0 = Vec::new();
                for j in 1..=d + 1 {
                    let mut row = Vec::new();
                    for _ in j + 1..=d + 1 {
                        let Some(Choice::M(f)) = it.next() else { unreachable!() };
                        row.push(f);
                    }
                    mm0.push(row);
                    let Some(Choice::T(g)) = it.next() else { unreachable!() };
                    mt0.push(g);
                }
                let mut cand = BarSimplex { q: d + 1, m: vec![objs.clone()], t: vec![t0.clone()], mm: vec![mm0], mt: vec![mt0] };
                cand.m.extend(s.m.iter().cloned());
                cand.t.extend(s.t.iter().cloned());
                cand.mm.extend(s.mm.iter().cloned());
                cand.mt.extend(s.mt.iter().cloned());
                if validate_simplex(md, &cand).is_ok() {
                    out.push(cand);
                }
            }
        }
    }
    out
}

enum Choice<M: BarModule> {
    M(M::MMor),
    T(M::TMor),
}

impl<M: BarModule> Clone for Choice<M> {
    fn clone(&self) -> Self {
        match self {
            Choice::M(f) => Choice::M(f.clone()),
            Choice::T(f) => Choice::T(f.clone()),
        }
    }
}

/// All valid `q`-simplices.
pub fn simplices<M: FiniteBarModule>(md: &M, q: usize) -> Vec<Simplex<M>> {
    let mut cur: Vec<Simplex<M>> = md
        .t_objects()
        .into_iter()
        .map(|t| BarSimplex { q: 0, m: vec![vec![]], t: vec![t], mm: vec![vec![]], mt: vec![vec![]] })
        .collect();
    for _ in 0..q {
        cur = cur.iter().flat_map(|s| extend(md, s)).collect();
    }
    cur.sort();
    cur
}

/// All valid bar morphisms `a → b`.
pub fn morphisms<M: FiniteBarModule>(md: &M, a: &Simplex<M>, b: &Simplex<M>) -> Vec<Mor<M>> {
    let q = a.q;
    let mut choices: Vec<Vec<Choice<M>>> = Vec::new();
    for i in 0..=q {
        for j in i + 1..=q {
            choices.push(md.m_homs(&entry(md, a, i, j), &entry(md, b, i, j)).into_iter().map(Choice::M).collect());
        }
        choices.push(md.t_homs(&a.t[i], &b.t[i]).into_iter().map(Choice::T).collect());
    }
    let mut out = Vec::new();
    for pick in product(&choices) {
        let mut it = pick.into_iter();
        let mut f = BarMor { q, f: Vec::new(), ft: Vec::new() };
        for i in 0..=q {
            let mut row = Vec::new();
            for _ in i + 1..=q {
                let Some(Choice::M(c)) = it.next() else { unreachable!() };
                row.push(c);
            }
            f.f.push(row);
            let Some(Choice::T(c)) = it.next() else { unreachable!() };
            f.ft.push(c);
        }
        if validate_mor(md, &f, a, b).is_ok() {
            out.push(f);
        }
    }
    out
}

impl<M: FiniteBarModule> Bisimplicial for BarNerve<'_, M> {
    type Cell = BarCell<M>;
    fn cells(&self, p: usize, q: usize) -> Result<Vec<Self::Cell>> {
        let md = self.0;
        let all = simplices(md, q);
        let mut out: Vec<Self::Cell> = all.iter().map(|s| Chain { objs: vec![s.clone()], mors: Vec::new() }).collect();
        for _ in 0..p {
            let mut next = Vec::new();
            for c in out {
                let last = c.objs.last().unwrap();
                for a in &all {
                    for f in morphisms(md, a, last) {
                        let mut c = c.clone();
                        c.objs.push(a.clone());
                        c.mors.push(f);
                        next.push(c);
                    }
                }
            }
            out = next;
        }
        out.sort();
        Ok(out)
    }
    fn face(&self, dir: Dir, (p, q): (usize, usize), i: usize, x: &Self::Cell) -> Self::Cell {
        face_cell(self.0, dir, (p, q), i, x)
    }
    fn degeneracy(&self, dir: Dir, (_p, q): (usize, usize), i: usize, x: &Self::Cell) -> Self::Cell {
        degeneracy_cell(self.0, dir, q, i, x)
    }
}

/// Face operators on chains of bar morphisms, for any module.
pub fn face_cell<M: BarModule>(md: &M, dir: Dir, (p, q): (usize, usize), i: usize, x: &BarCell<M>) -> BarCell<M> {
    match dir {
        Dir::H => {
            let mut y = x.clone();
            y.objs.remove(i);
            if i == 0 {
                y.mors.remove(0);
            } else if i == p {
                y.mors.pop();
            } else {
                y.mors[i - 1] = compose_mor(md, &x.mors[i - 1], &x.mors[i]).expect("composable chain");
                y.mors.remove(i);
            }
            y
        }
        Dir::V => reindex_cell(md, &DeltaMap::coface(q, i), x),
    }
}

pub fn degeneracy_cell<M: BarModule>(md: &M, dir: Dir, q: usize, i: usize, x: &BarCell<M>) -> BarCell<M> {
    match dir {
        Dir::H => {
            let mut y = x.clone();
            y.objs.insert(i, x.objs[i].clone());
            y.mors.insert(i, identity_mor(md, &x.objs[i]));
            y
        }
        Dir::V => reindex_cell(md, &DeltaMap::codegeneracy(q, i), x),
    }
}

pub fn reindex_cell<M: BarModule>(md: &M, theta: &DeltaMap, x: &BarCell<M>) -> BarCell<M> {
    Chain {
        objs: x.objs.iter().map(|a| simplicial_action(md, theta, a)).collect(),
        mors: x.mors.iter().map(|f| simplicial_action_mor(md, theta, f)).collect(),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub truncation: usize,
    pub cell_counts: Vec<usize>,
    pub homology: Vec<AbelianGroup>,
    pub contractible: bool,
}

/// Integral homology of the diagonal of `N B(*, 𝓜, 𝓣)` truncated at `top`,
/// through degree `top - 1`.
pub fn contractibility_probe<M: FiniteBarModule>(md: &M, top: usize) -> Result<ProbeReport> {
    if top == 0 {
        return Err(Error::Invalid("truncation must be positive".into()));
    }
    let x = SSet::from_simplicial(&Diagonal(&BarNerve(md)), top)?;
    let h = homology(&x, top - 1)?;
    let contractible = h[0] == AbelianGroup::free(1) && h[1..].iter().all(AbelianGroup::is_trivial);
    Ok(ProbeReport { truncation: top, cell_counts: (0..=top).map(|d| x.count(d)).collect(), homology: h, contractible })
}
