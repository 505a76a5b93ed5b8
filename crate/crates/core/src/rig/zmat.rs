use crate::perm::Perm;
use crate::ring::{determinant, inverse_matrix, CommRing, ZMod};
use serde::{Deserialize, Serialize};

/// Square matrix over `ℤ/k`, row-major. Acts on column vectors, so
/// composition `g ∘ f` is the product `G·F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZkMat {
    pub n: usize,
    pub data: Vec<u64>,
}

impl ZkMat {
    pub fn identity(n: usize) -> ZkMat {
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[i * n + i] = 1;
        }
        ZkMat { n, data }
    }

    pub fn reduce(mut self, k: u64) -> ZkMat {
        for x in &mut self.data {
            *x %= k;
        }
        self
    }

    /// Matrix sending basis vector `e_i` to `e_{p(i)}`.
    pub fn from_perm(p: &Perm) -> ZkMat {
        let n = p.len();
        let mut data = vec![0; n * n];
        for i in 0..n {
            data[p.apply(i) * n + i] = 1;
        }
        ZkMat { n, data }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn product(&self, other: &ZkMat, ring: &ZMod) -> ZkMat {
        let n = self.n;
        let mut data = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = ring.add(&data[i * n + j], &ring.mul(&a, &other.get(k, j)));
                }
            }
        }
        ZkMat { n, data }
    }

    pub fn block_sum(&self, other: &ZkMat) -> ZkMat {
        let n = self.n + other.n;
        let mut data = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                data[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                data[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        ZkMat { n, data }
    }

    /// Kronecker product with rows and columns indexed `(i, j) ↦ i·m + j`.
    pub fn kron(&self, other: &ZkMat, ring: &ZMod) -> ZkMat {
        let m = other.n;
        let n = self.n * m;
        let mut data = vec![0; n * n];
        for i in 0..self.n {
            for i2 in 0..self.n {
                let a = self.get(i, i2);
                for j in 0..m {
                    for j2 in 0..m {
                        data[(i * m + j) * n + i2 * m + j2] = ring.mul(&a, &other.get(j, j2));
                    }
                }
            }
        }
        ZkMat { n, data }
    }

    pub fn determinant(&self, ring: &ZMod) -> u64 {
        determinant(ring, self.n, &self.data)
    }

    pub fn inverse(&self, ring: &ZMod) -> Option<ZkMat> {
        inverse_matrix(ring, self.n, &self.data).map(|data| ZkMat { n: self.n, data })
    }
}
