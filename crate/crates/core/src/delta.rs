//! Monotone maps of finite ordinals `[p] = {0, …, p}`.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaMap {
    /// Target arity `q` of `[p] → [q]`.
    tgt: usize,
    /// Images of `0..=p`.
    values: Vec<usize>,
}

impl DeltaMap {
    pub fn new(p: usize, q: usize, values: Vec<usize>) -> Result<DeltaMap> {
        if values.len() != p + 1 {
            return Err(Error::Invalid(format!("{} values for [{p}]", values.len())));
        }
        if values.iter().any(|&v| v > q) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invalid(format!("{values:?} is not a monotone map into [{q}]")));
        }
        Ok(DeltaMap { tgt: q, values })
    }

    pub fn identity(p: usize) -> DeltaMap {
        DeltaMap { tgt: p, values: (0..=p).collect() }
    }

    /// `δ_i : [n-1] → [n]`, skipping `i`.
    pub fn coface(n: usize, i: usize) -> DeltaMap {
        assert!(n >= 1 && i <= n);
        DeltaMap { tgt: n, values: (0..n).map(|k| if k < i { k } else { k + 1 }).collect() }
    }

    /// `σ_i : [n+1] → [n]`, hitting `i` twice.
    pub fn codegeneracy(n: usize, i: usize) -> DeltaMap {
        assert!(i <= n);
        DeltaMap { tgt: n, values: (0..=n + 1).map(|k| if k <= i { k } else { k - 1 }).collect() }
    }

    pub fn src(&self) -> usize {
        self.values.len() - 1
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, k: usize) -> usize {
        self.values[k]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &DeltaMap) -> DeltaMap {
        assert_eq!(first.tgt, self.src(), "non-composable ordinal maps");
        DeltaMap { tgt: self.tgt, values: first.values.iter().map(|&k| self.values[k]).collect() }
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0 && *self.values.last().unwrap() == self.tgt && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Every monotone map `[p] → [q]`, lexicographically.
    pub fn all(p: usize, q: usize) -> Vec<DeltaMap> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(p + 1);
        fn go(p: usize, q: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<DeltaMap>) {
            if cur.len() == p + 1 {
                out.push(DeltaMap { tgt: q, values: cur.clone() });
                return;
            }
            for v in lo..=q {
                cur.push(v);
                go(p, q, v, cur, out);
                cur.pop();
            }
        }
        go(p, q, 0, &mut cur, &mut out);
        out
    }

    /// Writes `self = δ_{a₁} ∘ … ∘ δ_{a_s} ∘ σ_{b₁} ∘ … ∘ σ_{b_t}` and returns
    /// `(a, b)`. Pulling back along `self` is then: apply the faces `d_{a₁}`,
    /// …, `d_{a_s}` in order, then the degeneracies `s_{b₁}`, …, `s_{b_t}`.
    pub fn decompose(&self) -> (Vec<usize>, Vec<usize>) {
        // image and its missing points give the cofaces
        let mut image: Vec<usize> = self.values.clone();
        image.dedup();
        let missing: Vec<usize> = (0..=self.tgt).filter(|v| !image.contains(v)).collect();
        // δ with largest index applied last: δ_{m_k} ∘ … ∘ δ_{m_1} with m ascending
        let cofaces: Vec<usize> = missing.iter().rev().copied().collect();
        // repeats give the codegeneracies: positions k with values[k] = values[k+1]
        let repeats: Vec<usize> = (0..self.src()).filter(|&k| self.values[k] == self.values[k + 1]).collect();
        (cofaces, repeats)
    }
}
