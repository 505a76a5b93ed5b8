//! Cell-by-cell verification of the maps and homotopies on one chain.

use super::cells::{cell_degeneracy, cell_face, classify, keys, monotone, BNCell, Evaluator, Key, MapKind, Mismatch, Prism};
use super::chain::{BNChain, BNMor, BNSimplex, ChainView};
use super::values::{stab_in, stab_in_mor, Stage, Vertex};
use crate::bar::{
    compose_mor, identity_mor, simplicial_action, simplicial_action_mor, validate_mor, validate_simplex,
};
use crate::counters::{snapshot, Snapshot};
use crate::delta::DeltaMap;
use crate::error::{Error, Result};
use crate::rig::RigCategory;
use crate::sset::Dir;
use serde::Serialize;
use std::collections::BTreeMap;

/// Keep this many failures per map besides the count.
pub const KEPT_FAILURES: usize = 3;

#[derive(Debug, Clone, Serialize)]
pub struct CellFailure {
    /// `value`, `part`, `face`, `degeneracy` or `endpoint`.
    pub check: String,
    pub at: String,
    pub detail: String,
    pub mismatch: Option<Mismatch>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MapReport {
    pub map: MapKind,
    pub name: String,
    pub window: (usize, usize),
    pub cells: usize,
    pub nondegenerate: usize,
    pub face_checks: usize,
    pub degeneracy_checks: usize,
    pub endpoint_checks: usize,
    pub composition_checks: usize,
    pub oracle_checks: usize,
    pub distinct_simplices: usize,
    pub distinct_maps: usize,
    pub failures: usize,
    pub failures_by_kind: BTreeMap<String, usize>,
    pub examples: Vec<CellFailure>,
    pub counters: Snapshot,
}

impl MapReport {
    fn new(kind: MapKind, window: (usize, usize)) -> MapReport {
        MapReport {
            map: kind,
            name: kind.name().into(),
            window,
            cells: 0,
            nondegenerate: 0,
            face_checks: 0,
            degeneracy_checks: 0,
            endpoint_checks: 0,
            composition_checks: 0,
            oracle_checks: 0,
            distinct_simplices: 0,
            distinct_maps: 0,
            failures: 0,
            failures_by_kind: BTreeMap::new(),
            examples: Vec::new(),
            counters: Snapshot::default(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn fail(&mut self, f: CellFailure) {
        let kind = match f.mismatch {
            Some(m) => format!("{}:{}", f.check, serde_json::to_value(m).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()),
            None => f.check.clone(),
        };
        *self.failures_by_kind.entry(kind).or_default() += 1;
        self.failures += 1;
        if self.examples.len() < KEPT_FAILURES {
            self.examples.push(f);
        }
    }
}

fn describe(k: &Key) -> String {
    let th = if k.theta.is_empty() { String::new() } else { format!(" θ={:?}", k.theta) };
    format!("({},{}) α={:?} β={:?}{}", k.s, k.t, k.alpha, k.beta, th)
}

fn compare(report: &mut MapReport, check: &str, at: &Key, what: String, got: Result<BNCell>, want: &Result<BNCell>) {
    match (got, want.as_ref()) {
        (Ok(g), Ok(w)) => {
            if let Some(m) = classify(&g, w) {
                report.fail(CellFailure { check: check.into(), at: describe(at), detail: what, mismatch: Some(m) });
            }
        }
        (g, w) => {
            let e = g.err().map(|e| e.to_string()).or(w.err().map(|e| e.to_string())).unwrap_or_default();
            report.fail(CellFailure { check: check.into(), at: describe(at), detail: format!("{what}: {e}"), mismatch: None })
        }
    }
}

/// Checks the map or homotopy `kind` on the window of the domain of
/// `z^*(Δ[p] × Δ[q])` (times `Δ[1]` for a homotopy) where nondegenerate
/// cells live: every value is a valid cell, faces of nondegenerate cells
/// and all degeneracies inside the window commute with the formula, and
/// the ends of a homotopy are the plain maps.
pub fn verify_map_cells(ev: &Evaluator, kind: MapKind) -> MapReport {
    let v = ev.blocks.v;
    let (p, q) = (v.p(), v.q());
    let (smax, tmax) = kind.window(p, q);
    let prism = kind.prism();
    let md = &ev.blocks.big;
    let start = snapshot();
    let mut r = MapReport::new(kind, (smax, tmax));
    let ends = kind.ends();
    for s in 0..=smax {
        for t in 0..=tmax {
            for key in keys(kind, p, q, s, t) {
                r.cells += 1;
                let val = ev.value(kind, &key);
                let x = match &val {
                    Ok(x) => x,
                    Err(e) => {
                        r.fail(CellFailure { check: "value".into(), at: describe(&key), detail: e.to_string(), mismatch: None });
                        continue;
                    }
                };
                if !key.is_degenerate(prism) {
                    r.nondegenerate += 1;
                    let dirs = [(Dir::H, if s > 0 { s + 1 } else { 0 }), (Dir::V, if t > 0 { t + 1 } else { 0 })];
                    for (dir, count) in dirs {
                        for i in 0..count {
                            r.face_checks += 1;
                            let want = ev.value(kind, &key.face(prism, dir, i));
                            let got = cell_face(md, dir, (s, t), i, x);
                            compare(&mut r, "face", &key, format!("{dir:?} face {i}"), got, &want);
                        }
                    }
                }
                let dirs = [(Dir::H, if s < smax { s + 1 } else { 0 }), (Dir::V, if t < tmax { t + 1 } else { 0 })];
                for (dir, count) in dirs {
                    for i in 0..count {
                        r.degeneracy_checks += 1;
                        let want = ev.value(kind, &key.degeneracy(prism, dir, i));
                        let got = Ok(cell_degeneracy(md, dir, t, i, x));
                        compare(&mut r, "degeneracy", &key, format!("{dir:?} degeneracy {i}"), got, &want);
                    }
                }
                if let (Some((e0, e1)), Some((c, plain))) = (ends, key.end()) {
                    r.endpoint_checks += 1;
                    let end = if c == 0 { e0 } else { e1 };
                    let want = ev.value(end, &plain);
                    compare(&mut r, "endpoint", &key, format!("end {c} is {}", end.name()), val.clone(), &want);
                }
            }
        }
    }
    for (at, detail) in ev.validate_parts() {
        r.fail(CellFailure { check: "part".into(), at, detail, mismatch: None });
    }
    (r.distinct_simplices, r.distinct_maps) = ev.distinct_parts();
    r.counters = snapshot().since(&start);
    r
}

/// Verifies each requested map on one chain, each with a fresh cache so
/// that part validation is attributed to the map that produced it.
pub fn verify_chain(cat: &RigCategory, level: usize, chain: &BNChain, kinds: &[MapKind]) -> Vec<MapReport> {
    let v = ChainView::new(cat, level, chain);
    kinds.iter().map(|&k| verify_map(&Evaluator::new(v), k)).collect()
}

type Triple = (usize, usize, u8);

/// Vertex sequences `(a_i, c_i, θ_i)` of length `t + 1`, monotone in each
/// coordinate; `θ` is the bar-direction prism coordinate.
fn vertex_sequences(kind: MapKind, p: usize, q: usize, t: usize) -> Vec<Vec<Triple>> {
    let thetas = if kind.prism() == Prism::Bar { monotone(t + 1, 1) } else { vec![vec![0; t + 1]] };
    let mut out = Vec::new();
    for a in monotone(t + 1, p) {
        for c in monotone(t + 1, q) {
            for th in &thetas {
                out.push((0..=t).map(|i| (a[i], c[i], th[i] as u8)).collect());
            }
        }
    }
    out
}

fn first_repeat(vs: &[Triple]) -> Option<usize> {
    vs.windows(2).position(|w| w[0] == w[1])
}

fn without(vs: &[Triple], i: usize) -> Vec<Triple> {
    let mut v = vs.to_vec();
    v.remove(i);
    v
}

/// Part-level comparison of two simplices or maps.
fn same<T: PartialEq>(r: &mut MapReport, check: &str, at: &str, what: &str, got: Result<T>, want: Result<T>, mismatch: impl Fn(&T, &T) -> Mismatch) {
    match (got, want) {
        (Ok(g), Ok(w)) => {
            if g != w {
                let m = mismatch(&g, &w);
                r.fail(CellFailure { check: check.into(), at: at.into(), detail: what.into(), mismatch: Some(m) });
            }
        }
        (g, w) => {
            let e = g.err().map(|e| e.to_string()).or(w.err().map(|e| e.to_string())).unwrap_or_default();
            r.fail(CellFailure { check: check.into(), at: at.into(), detail: format!("{what}: {e}"), mismatch: None });
        }
    }
}

fn simplex_mismatch(a: &BNSimplex, b: &BNSimplex) -> Mismatch {
    if a.m != b.m || a.t != b.t {
        Mismatch::Objects
    } else {
        Mismatch::StructureMaps
    }
}

fn mor_mismatch(_: &BNMor, _: &BNMor) -> Mismatch {
    Mismatch::NerveMaps
}

/// Checks the map or homotopy `kind` through the parts its cells are
/// assembled from.
///
/// A cell of bidegree `(s, t)` is a string of `s + 1` simplices
/// `value(b_u, vs)` joined by transition maps `value(b_{u+1}) → value(b_u)`,
/// where `vs` lists the `t + 1` vertices `(φ(i), ψ(i), θ(i))`. Bar faces and
/// degeneracies act on `vs`, nerve faces compose transitions and nerve
/// degeneracies insert identities. So the cells form a bisimplicial map
/// exactly when: every simplex and single-step transition on a
/// nondegenerate `vs` is valid and its faces are the values on the faces
/// of `vs`; values on a degenerate `vs` are the degeneracies of the values
/// on its reduction; transitions from a state to itself are identities;
/// and every transition is the composite through any intermediate state.
/// All of this is checked for `vs` of every length up to the window.
pub fn verify_map(ev: &Evaluator, kind: MapKind) -> MapReport {
    let v = ev.blocks.v;
    let (p, q) = (v.p(), v.q());
    let tmax = match kind.prism() {
        Prism::Bar => p + q + 1,
        _ => p + q,
    };
    let md = &ev.blocks.big;
    let start = snapshot();
    let mut r = MapReport::new(kind, (p, tmax));
    let tags: &[u8] = if kind.prism() == Prism::Nerve { &[0, 1] } else { &[0] };
    let (s0, s1) = kind.sides();
    let verts = |vs: &[Triple], tag: u8| -> Vec<Vertex> {
        vs.iter()
            .map(|&(a, c, th)| {
                let side = if kind.prism() == Prism::Nerve { tag } else { th };
                Vertex { a, c, stage: if side == 0 { s0 } else { s1 } }
            })
            .collect()
    };
    for t in 0..=tmax {
        for vs in vertex_sequences(kind, p, q, t) {
            let at_vs = |b: usize, tag: u8| format!("b={b} tag={tag} vertices={vs:?}");
            let maxa = vs.iter().map(|x| x.0).max().unwrap_or(0);
            let states: Vec<(usize, u8)> = (maxa..=p).flat_map(|b| tags.iter().map(move |&g| (b, g))).collect();
            let repeat = first_repeat(&vs);
            let reduced = repeat.map(|i| (i, without(&vs, i), DeltaMap::codegeneracy(t - 1, i)));
            let simplex = |b: usize, tag: u8, w: &[Triple]| ev.simplex(b, &verts(w, tag));
            let transition = |x: (usize, u8), z: (usize, u8), w: &[Triple]| ev.transition(x.0, &verts(w, x.1), z.0, &verts(w, z.1));
            for &(b, tag) in &states {
                r.cells += 1;
                let at = at_vs(b, tag);
                let sx = match simplex(b, tag, &vs) {
                    Ok(sx) => sx,
                    Err(e) => {
                        r.fail(CellFailure { check: "value".into(), at, detail: e.to_string(), mismatch: None });
                        continue;
                    }
                };
                match &reduced {
                    None => {
                        r.nondegenerate += 1;
                        if let Err(e) = validate_simplex(md, &sx) {
                            r.fail(CellFailure { check: "part".into(), at: at.clone(), detail: e.to_string(), mismatch: None });
                        }
                        for i in (0..=t).filter(|_| t > 0) {
                            r.face_checks += 1;
                            let got = Ok(simplicial_action(md, &DeltaMap::coface(t, i), &sx));
                            same(&mut r, "face", &at, &format!("bar face {i}"), got, simplex(b, tag, &without(&vs, i)), simplex_mismatch);
                        }
                        if verts(&vs, tag).iter().all(|x| x.stage == Stage::Inc) {
                            r.oracle_checks += 1;
                            let want = inc_oracle(ev, b, &vs);
                            same(&mut r, "oracle", &at, "stabilized pullback", Ok(sx.clone()), want, simplex_mismatch);
                        }
                    }
                    Some((i, red, sigma)) => {
                        r.degeneracy_checks += 1;
                        let want = simplex(b, tag, red).map(|y| simplicial_action(md, sigma, &y));
                        same(&mut r, "degeneracy", &at, &format!("bar degeneracy {i}"), Ok(sx.clone()), want, simplex_mismatch);
                    }
                }
            }
            let below = |x: (usize, u8), z: (usize, u8)| x.0 >= z.0 && x.1 >= z.1;
            for &x in &states {
                for &z in states.iter().filter(|&&z| below(x, z)) {
                    let at = format!("{:?}→{:?} vertices={vs:?}", x, z);
                    let f = transition(x, z, &vs);
                    if x == z {
                        r.degeneracy_checks += 1;
                        let want = simplex(x.0, x.1, &vs).map(|a| identity_mor(md, &a));
                        same(&mut r, "degeneracy", &at, "nerve degeneracy", f, want, mor_mismatch);
                        continue;
                    }
                    if let Some((i, red, sigma)) = &reduced {
                        r.degeneracy_checks += 1;
                        let want = transition(x, z, red).map(|g| simplicial_action_mor(md, sigma, &g));
                        same(&mut r, "degeneracy", &at, &format!("bar degeneracy {i}"), f, want, mor_mismatch);
                        continue;
                    }
                    let generator = (x.0 == z.0 + 1 && x.1 == z.1) || (x.0 == z.0 && x.1 == z.1 + 1);
                    if generator {
                        let checked = f.as_ref().map_err(|e| Error::Validation(e.to_string())).and_then(|g| {
                            validate_mor(md, g, &simplex(x.0, x.1, &vs)?, &simplex(z.0, z.1, &vs)?)
                        });
                        if let Err(e) = checked {
                            r.fail(CellFailure { check: "part".into(), at: at.clone(), detail: e.to_string(), mismatch: None });
                        }
                        for i in (0..=t).filter(|_| t > 0) {
                            r.face_checks += 1;
                            let got = f.as_ref().map(|g| simplicial_action_mor(md, &DeltaMap::coface(t, i), g)).map_err(clone_err);
                            same(&mut r, "face", &at, &format!("bar face {i}"), got, transition(x, z, &without(&vs, i)), mor_mismatch);
                        }
                        if verts(&vs, x.1).iter().all(|w| w.stage == Stage::Inc) {
                            r.oracle_checks += 1;
                            let want = inc_step_oracle(ev, x.0, &vs);
                            same(&mut r, "oracle", &at, "stabilized pullback", f.as_ref().cloned().map_err(clone_err), want, mor_mismatch);
                        }
                    }
                    for &y in states.iter().filter(|&&y| y != x && y != z && below(x, y) && below(y, z)) {
                        r.composition_checks += 1;
                        let want = transition(x, y, &vs).and_then(|g| compose_mor(md, &transition(y, z, &vs)?, &g));
                        let got = f.as_ref().cloned().map_err(clone_err);
                        same(&mut r, "composition", &at, &format!("through {y:?}"), got, want, mor_mismatch);
                    }
                }
            }
        }
    }
    (r.distinct_simplices, r.distinct_maps) = ev.distinct_parts();
    r.counters = snapshot().since(&start);
    r
}

fn clone_err(e: &Error) -> Error {
    Error::Validation(e.to_string())
}

fn psi_map(ev: &Evaluator, vs: &[Triple]) -> Result<DeltaMap> {
    DeltaMap::new(vs.len() - 1, ev.blocks.v.q(), vs.iter().map(|x| x.1).collect())
}

/// `ψ^* in(m^b)`, computed from the chain without the block formulas.
fn inc_oracle(ev: &Evaluator, b: usize, vs: &[Triple]) -> Result<BNSimplex> {
    let v = ev.blocks.v;
    let s = stab_in(v.cat(), v.level(), &v.chain.objs[b])?;
    Ok(simplicial_action(&ev.blocks.big, &psi_map(ev, vs)?, &s))
}

fn inc_step_oracle(ev: &Evaluator, b: usize, vs: &[Triple]) -> Result<BNMor> {
    let v = ev.blocks.v;
    let f = stab_in_mor(v.cat(), v.level(), v.alpha(b))?;
    Ok(simplicial_action_mor(&ev.blocks.big, &psi_map(ev, vs)?, &f))
}
