//! Integral homology of normalized chains via Smith normal form.

use crate::error::{Error, Result};
use crate::sset::SSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::fmt;

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianGroup {
    pub rank: usize,
    /// Invariant factors greater than one, each dividing the next.
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

impl AbelianGroup {
    pub fn free(rank: usize) -> AbelianGroup {
        AbelianGroup { rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: u64) -> AbelianGroup {
        AbelianGroup { rank: 0, torsion: vec![BigInt::from(order)] }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Nonzero diagonal entries of a Smith normal form, as invariant factors.
pub fn smith_invariants(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot of least absolute value in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(t) {
            for (j, x) in row.iter().enumerate().skip(t) {
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                let (head, tail) = m.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[t]).skip(t) {
                    *x -= &q * y;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                    if m[i][t].abs() < m[t][t].abs() {
                        m.swap(t, i);
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                    if m[t][j].abs() < m[t][t].abs() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if clean {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    normalize(diag)
}

/// Turns any diagonal into invariant factors `d₁ | d₂ | …`.
fn normalize(mut d: Vec<BigInt>) -> Vec<BigInt> {
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Boundary matrix `N_d → N_{d-1}` of normalized chains, rows indexed by
/// nondegenerate `(d-1)`-cells.
pub fn boundary_matrix(x: &SSet, d: usize) -> Vec<Vec<BigInt>> {
    let below: Vec<usize> = idx(&x.nondegenerate(d - 1));
    let here: Vec<usize> = idx(&x.nondegenerate(d));
    let mut pos = vec![usize::MAX; x.count(d - 1)];
    for (k, &c) in below.iter().enumerate() {
        pos[c] = k;
    }
    let mut m = vec![vec![BigInt::zero(); here.len()]; below.len()];
    for (col, &c) in here.iter().enumerate() {
        for i in 0..=d {
            let f = x.face(d, i, c);
            if pos[f] != usize::MAX {
                let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                m[pos[f]][col] += sign;
            }
        }
    }
    m
}

fn idx(mask: &[bool]) -> Vec<usize> {
    mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
}

/// `H_0, …, H_max_deg`; needs the truncation to reach `max_deg + 1`.
pub fn homology(x: &SSet, max_deg: usize) -> Result<Vec<AbelianGroup>> {
    if x.top < max_deg + 1 {
        return Err(Error::Truncation { needed: format!("degree {}", max_deg + 1), have: format!("degree {}", x.top) });
    }
    let sizes: Vec<usize> = (0..=max_deg + 1).map(|d| idx(&x.nondegenerate(d)).len()).collect();
    // invariants of ∂_d for d = 1..=max_deg+1
    let invariants: Vec<Vec<BigInt>> = (1..=max_deg + 1).map(|d| smith_invariants(boundary_matrix(x, d))).collect();
    let rank = |d: usize| if d == 0 { 0 } else { invariants[d - 1].len() };
    Ok((0..=max_deg)
        .map(|d| AbelianGroup {
            rank: sizes[d] - rank(d) - rank(d + 1),
            torsion: invariants[d].iter().filter(|t| !t.is_one()).cloned().collect(),
        })
        .collect())
}
