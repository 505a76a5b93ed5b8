//! Permutations of `{0, .., n-1}` stored as image arrays: `p[i]` is the
//! image of `i`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Perm(Vec<u32>);

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl TryFrom<Vec<u32>> for Perm {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Perm::from_images(v)
    }
}

impl From<Perm> for Vec<u32> {
    fn from(p: Perm) -> Self {
        p.0
    }
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Perm) -> Perm {
        debug_assert_eq!(self.len(), first.len());
        Perm(first.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Block sum: `self` on the first `len` points, `other` shifted after it.
    pub fn block_sum(&self, other: &Perm) -> Perm {
        let n = self.len() as u32;
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend(other.0.iter().map(|&x| x + n));
        Perm(v)
    }

    /// Product permutation on pairs, with `(i, j) ↦ i·m + j`.
    pub fn kron(&self, other: &Perm) -> Perm {
        let m = other.len() as u32;
        let mut v = Vec::with_capacity(self.len() * other.len());
        for &a in &self.0 {
            for &b in &other.0 {
                v.push(a * m + b);
            }
        }
        Perm(v)
    }

    /// The block swap `a ⊔ b → b ⊔ a`.
    pub fn block_swap(a: usize, b: usize) -> Perm {
        let (a32, b32) = (a as u32, b as u32);
        let v = (0..a32 + b32)
            .map(|i| if i < a32 { b32 + i } else { i - a32 })
            .collect();
        Perm(v)
    }

    /// `a×b ⊔ a×c → a×(b ⊔ c)` under the lexicographic convention.
    pub fn left_distributor(a: usize, b: usize, c: usize) -> Perm {
        let mut v = Vec::with_capacity(a * (b + c));
        for i in 0..a {
            for j in 0..b {
                v.push((i * (b + c) + j) as u32);
            }
        }
        for i in 0..a {
            for j in 0..c {
                v.push((i * (b + c) + b + j) as u32);
            }
        }
        Perm(v)
    }

    /// Disjoint cycle notation with 1-based points, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.apply(i);
            }
            out.push(cyc);
        }
        out
    }
}
