//! Commutative rings used for invertibility questions.

use serde::Serialize;

pub trait CommRing {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Integers;

impl CommRing for Integers {
    type Elem = i128;
    fn zero(&self) -> i128 {
        0
    }
    fn one(&self) -> i128 {
        1
    }
    fn add(&self, a: &i128, b: &i128) -> i128 {
        a.checked_add(*b).expect("integer overflow")
    }
    fn neg(&self, a: &i128) -> i128 {
        -a
    }
    fn mul(&self, a: &i128, b: &i128) -> i128 {
        a.checked_mul(*b).expect("integer overflow")
    }
    fn is_unit(&self, a: &i128) -> bool {
        *a == 1 || *a == -1
    }
    fn inverse(&self, a: &i128) -> Option<i128> {
        self.is_unit(a).then_some(*a)
    }
}

/// `ℤ/k` with `k ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZMod(pub u64);

impl CommRing for ZMod {
    type Elem = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.0
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.0 - a % self.0) % self.0
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }
    fn is_unit(&self, a: &u64) -> bool {
        self.inverse(a).is_some()
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        (0..self.0).find(|y| self.mul(a, y) == self.one())
    }
}

/// Determinant of a square row-major matrix by expansion over column
/// subsets, `O(n·2ⁿ)` ring operations.
pub fn determinant<R: CommRing>(ring: &R, n: usize, entries: &[R::Elem]) -> R::Elem {
    assert_eq!(entries.len(), n * n);
    assert!(n <= 20, "determinant limited to n ≤ 20");
    if n == 0 {
        return ring.one();
    }
    let mut dp: Vec<R::Elem> = vec![ring.zero(); 1 << n];
    dp[0] = ring.one();
    for mask in 1usize..(1 << n) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = ring.zero();
        for c in 0..n {
            if mask & (1 << c) == 0 {
                continue;
            }
            let rest = mask & !(1 << c);
            let above = (rest >> c).count_ones();
            let term = ring.mul(&entries[row * n + c], &dp[rest]);
            acc = if above % 2 == 0 { ring.add(&acc, &term) } else { ring.add(&acc, &ring.neg(&term)) };
        }
        dp[mask] = acc;
    }
    dp[(1 << n) - 1].clone()
}

/// Inverse via the adjugate; `None` when the determinant is not a unit.
pub fn inverse_matrix<R: CommRing>(ring: &R, n: usize, entries: &[R::Elem]) -> Option<Vec<R::Elem>> {
    let det = determinant(ring, n, entries);
    let det_inv = ring.inverse(&det)?;
    if n <= 1 {
        return Some(vec![det_inv; n]);
    }
    let mut out = vec![ring.zero(); n * n];
    let mut minor = Vec::with_capacity((n - 1) * (n - 1));
    for i in 0..n {
        for j in 0..n {
            minor.clear();
            for r in (0..n).filter(|&r| r != i) {
                for c in (0..n).filter(|&c| c != j) {
                    minor.push(entries[r * n + c].clone());
                }
            }
            let mut cof = determinant(ring, n - 1, &minor);
            if (i + j) % 2 == 1 {
                cof = ring.neg(&cof);
            }
            // adjugate is the transpose of the cofactor matrix
            out[j * n + i] = ring.mul(&cof, &det_inv);
        }
    }
    Some(out)
}
