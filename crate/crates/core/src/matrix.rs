//! Square matrices of objects and morphisms of a rig category, with matrix
//! multiplication, its coherence isomorphisms, and weak invertibility.
//!
//! Sums are left nested over the inner index. Since `⊕` is strictly
//! associative this only fixes the order of summands.

use crate::counters::{self, StructureScope};
use crate::error::{Error, Result};
use crate::rig::{GrRing, Mor, Obj, RigCategory};
use crate::ring::{determinant, CommRing};
use serde::{Deserialize, Serialize};

/// Square matrix, row-major. Serializes as a list of rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<T>>", into = "Vec<Vec<T>>")]
#[serde(bound(serialize = "T: Clone + Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct Mat<T> {
    n: usize,
    entries: Vec<T>,
}

pub type ObjMatrix = Mat<Obj>;
pub type MorMatrix = Mat<Mor>;
/// Matrix of component labels.
pub type Pi0Matrix = Mat<u64>;

impl<T> Mat<T> {
    pub fn new(n: usize, entries: Vec<T>) -> Result<Mat<T>> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::SizeMismatch(format!("{} entries for size {n}", entries.len())));
        }
        Ok(Mat { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Mat<T> {
        let entries = (0..n * n).map(|x| f(x / n, x % n)).collect();
        Mat { n, entries }
    }

    pub fn try_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<T>) -> Result<Mat<T>> {
        let entries = (0..n * n).map(|x| f(x / n, x % n)).collect::<Result<_>>()?;
        Ok(Mat { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Mat<U>> {
        Ok(Mat { n: self.n, entries: self.entries.iter().map(f).collect::<Result<_>>()? })
    }

    pub fn zip_with<U, V>(&self, other: &Mat<U>, mut f: impl FnMut(&T, &U) -> Result<V>) -> Result<Mat<V>> {
        same_size(self.n, other.n)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(Mat { n: self.n, entries })
    }
}

impl<T: Clone> Mat<T> {
    /// `[[a, b], [c, d]]` from four blocks of equal size.
    pub fn blocks(a: &Mat<T>, b: &Mat<T>, c: &Mat<T>, d: &Mat<T>) -> Result<Mat<T>> {
        let n = a.n;
        for m in [b, c, d] {
            same_size(n, m.n)?;
        }
        Ok(Mat::from_fn(2 * n, |i, j| {
            let blk = match (i < n, j < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(i % n, j % n).clone()
        }))
    }

    /// Block `(bi, bj)` of size `m`.
    pub fn block(&self, m: usize, bi: usize, bj: usize) -> Mat<T> {
        Mat::from_fn(m, |i, j| self.get(bi * m + i, bj * m + j).clone())
    }
}

impl<T> From<Mat<T>> for Vec<Vec<T>> {
    fn from(m: Mat<T>) -> Vec<Vec<T>> {
        let n = m.n;
        let mut it = m.entries.into_iter();
        (0..n).map(|_| it.by_ref().take(n).collect()).collect()
    }
}

impl<T> TryFrom<Vec<Vec<T>>> for Mat<T> {
    type Error = Error;
    fn try_from(rows: Vec<Vec<T>>) -> Result<Mat<T>> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch("matrix is not square".into()));
        }
        Mat::new(n, rows.into_iter().flatten().collect())
    }
}

fn same_size(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SizeMismatch(format!("{a} against {b}")))
    }
}

/// `E_n`.
pub fn unit_matrix(cat: &RigCategory, n: usize) -> ObjMatrix {
    Mat::from_fn(n, |i, j| if i == j { cat.one() } else { cat.zero() })
}

pub fn zero_matrix(cat: &RigCategory, n: usize) -> ObjMatrix {
    Mat::from_fn(n, |_, _| cat.zero())
}

/// Iterated sum `a₀ ⊕ a₁ ⊕ …` (empty sum is zero).
pub fn sum_objs(cat: &RigCategory, objs: impl IntoIterator<Item = Obj>) -> Result<Obj> {
    objs.into_iter().try_fold(cat.zero(), |acc, x| cat.add(acc, x))
}

/// Iterated sum of morphisms; `zero` is the empty sum.
pub fn sum_mors(cat: &RigCategory, mors: impl IntoIterator<Item = Mor>) -> Result<Mor> {
    mors.into_iter().try_fold(cat.id(cat.zero()), |acc, f| cat.add_mor(&acc, &f))
}

pub fn mat_add(cat: &RigCategory, x: &ObjMatrix, y: &ObjMatrix) -> Result<ObjMatrix> {
    x.zip_with(y, |a, b| cat.add(*a, *b))
}

pub fn mat_add_mor(cat: &RigCategory, f: &MorMatrix, g: &MorMatrix) -> Result<MorMatrix> {
    f.zip_with(g, |a, b| cat.add_mor(a, b))
}

/// `Z_ij = ⊕_k X_ik ⊗ Y_kj`.
pub fn mat_mul(cat: &RigCategory, x: &ObjMatrix, y: &ObjMatrix) -> Result<ObjMatrix> {
    same_size(x.n, y.n)?;
    Mat::try_from_fn(x.n, |i, j| {
        (0..x.n).try_fold(cat.zero(), |acc, k| cat.add(acc, cat.mul(*x.get(i, k), *y.get(k, j))?))
    })
}

pub fn mat_mul_mor(cat: &RigCategory, f: &MorMatrix, g: &MorMatrix) -> Result<MorMatrix> {
    same_size(f.n, g.n)?;
    Mat::try_from_fn(f.n, |i, j| {
        (0..f.n).try_fold(cat.id(cat.zero()), |acc, k| cat.add_mor(&acc, &cat.mul_mor(f.get(i, k), g.get(k, j))?))
    })
}

pub fn mor_dom(cat: &RigCategory, f: &MorMatrix) -> ObjMatrix {
    f.map(|e| cat.dom(e))
}

pub fn id_matrix(cat: &RigCategory, x: &ObjMatrix) -> MorMatrix {
    x.map(|&a| cat.id(a))
}

pub fn compose_mat(cat: &RigCategory, g: &MorMatrix, f: &MorMatrix) -> Result<MorMatrix> {
    g.zip_with(f, |a, b| cat.compose(a, b))
}

pub fn inverse_mat(cat: &RigCategory, f: &MorMatrix) -> MorMatrix {
    f.map(|e| cat.inverse(e))
}

pub fn is_identity_mat(cat: &RigCategory, f: &MorMatrix) -> bool {
    f.entries().iter().all(|e| cat.is_identity(e))
}

/// n-ary left distributivity `⊕_k A⊗B_k → A⊗(⊕_k B_k)`.
pub fn dist_left_n(cat: &RigCategory, a: Obj, bs: &[Obj]) -> Result<Mor> {
    let mut acc_obj = cat.zero();
    let mut acc = cat.id(cat.zero());
    for &b in bs {
        let step = cat.dist_left(a, acc_obj, b)?;
        acc = cat.compose(&step, &cat.add_mor(&acc, &cat.id(cat.mul(a, b)?))?)?;
        acc_obj = cat.add(acc_obj, b)?;
    }
    Ok(acc)
}

/// Reorders a sum of summands with adjacent symmetries: the source is
/// `⊕_p objs[p]`, the target `⊕_p objs[order[p]]`.
pub fn shuffle(cat: &RigCategory, objs: &[Obj], order: &[usize]) -> Result<Mor> {
    // rank[p] = target position of the summand currently at p
    let mut rank = vec![0; objs.len()];
    for (pos, &src) in order.iter().enumerate() {
        rank[src] = pos;
    }
    let mut cur: Vec<Obj> = objs.to_vec();
    let mut acc = cat.id(sum_objs(cat, cur.iter().copied())?);
    let mut swapped = true;
    while swapped {
        swapped = false;
        for p in 0..cur.len().saturating_sub(1) {
            if rank[p] > rank[p + 1] {
                let pre = sum_objs(cat, cur[..p].iter().copied())?;
                let post = sum_objs(cat, cur[p + 2..].iter().copied())?;
                let c = cat.sym(cur[p], cur[p + 1])?;
                let step = cat.add_mor(&cat.add_mor(&cat.id(pre), &c)?, &cat.id(post))?;
                acc = cat.compose(&step, &acc)?;
                cur.swap(p, p + 1);
                rank.swap(p, p + 1);
                swapped = true;
            }
        }
    }
    Ok(acc)
}

/// `(X·Y)·Z → X·(Y·Z)`: regroup the `k`-outer sum into a `j`-outer sum, then
/// apply left distributivity in each `j` block.
pub fn mat_assoc(cat: &RigCategory, x: &ObjMatrix, y: &ObjMatrix, z: &ObjMatrix) -> Result<MorMatrix> {
    same_size(x.n, y.n)?;
    same_size(x.n, z.n)?;
    counters::record_mat_assoc();
    let _scope = StructureScope::enter();
    let n = x.n;
    Mat::try_from_fn(n, |i, l| {
        let yz = |j: usize, k: usize| cat.mul(*y.get(j, k), *z.get(k, l));
        let mut src = Vec::with_capacity(n * n);
        for k in 0..n {
            for j in 0..n {
                src.push(cat.mul(*x.get(i, j), yz(j, k)?)?);
            }
        }
        let order: Vec<usize> = (0..n).flat_map(|j| (0..n).map(move |k| k * n + j)).collect();
        let sh = shuffle(cat, &src, &order)?;
        let mut dist = cat.id(cat.zero());
        for j in 0..n {
            let bs = (0..n).map(|k| yz(j, k)).collect::<Result<Vec<_>>>()?;
            dist = cat.add_mor(&dist, &dist_left_n(cat, *x.get(i, j), &bs)?)?;
        }
        cat.compose(&dist, &sh)
    })
}

/// `A·(X₁ + … + X_t) → A·X₁ + … + A·X_t`, matrix sums taken entrywise.
pub fn mat_dist(cat: &RigCategory, a: &ObjMatrix, xs: &[&ObjMatrix]) -> Result<MorMatrix> {
    for x in xs {
        same_size(a.n, x.n)?;
    }
    counters::record_mat_dist();
    let _scope = StructureScope::enter();
    let n = a.n;
    let t = xs.len();
    Mat::try_from_fn(n, |i, j| {
        let mut undist = cat.id(cat.zero());
        let mut src = Vec::with_capacity(n * t);
        for k in 0..n {
            let bs: Vec<Obj> = xs.iter().map(|x| *x.get(k, j)).collect();
            let d = dist_left_n(cat, *a.get(i, k), &bs)?;
            undist = cat.add_mor(&undist, &cat.inverse(&d))?;
            for &b in &bs {
                src.push(cat.mul(*a.get(i, k), b)?);
            }
        }
        let order: Vec<usize> = (0..t).flat_map(|s| (0..n).map(move |k| k * t + s)).collect();
        cat.compose(&shuffle(cat, &src, &order)?, &undist)
    })
}

/// Block sum `[[X, 0], [0, Y]]` for matrices of possibly different sizes.
pub fn block_sum(cat: &RigCategory, x: &ObjMatrix, y: &ObjMatrix) -> ObjMatrix {
    let (a, b) = (x.n, y.n);
    Mat::from_fn(a + b, |i, j| match (i < a, j < a) {
        (true, true) => *x.get(i, j),
        (false, false) => *y.get(i - a, j - a),
        _ => cat.zero(),
    })
}

pub fn block_sum_mor(cat: &RigCategory, f: &MorMatrix, g: &MorMatrix) -> MorMatrix {
    let (a, b) = (f.n, g.n);
    Mat::from_fn(a + b, |i, j| match (i < a, j < a) {
        (true, true) => f.get(i, j).clone(),
        (false, false) => g.get(i - a, j - a).clone(),
        _ => cat.id(cat.zero()),
    })
}

/// Block sum with `E₁`.
pub fn stabilize(cat: &RigCategory, x: &ObjMatrix) -> ObjMatrix {
    block_sum(cat, x, &unit_matrix(cat, 1))
}

pub fn pi0_matrix(cat: &RigCategory, x: &ObjMatrix) -> Pi0Matrix {
    x.map(|&a| cat.label(a))
}

/// Invertibility over `Gr` of a matrix already mapped into `Gr`.
pub fn gr_invertible(m: &Mat<i128>, gr: &GrRing) -> Result<bool> {
    if !gr.is_commutative() {
        return Err(Error::Unsupported("invertibility over a non-commutative ring".into()));
    }
    Ok(gr.is_unit(&determinant(gr, m.n, m.entries())))
}

/// Whether a matrix of component labels is invertible over `gr`.
pub fn gl_membership(m: &Pi0Matrix, gr: &GrRing) -> Result<bool> {
    gr_invertible(&m.map(|&x| gr.canonical(x)), gr)
}

pub fn is_weakly_invertible(cat: &RigCategory, x: &ObjMatrix) -> Result<bool> {
    let gr = crate::rig::grothendieck(&cat.pi0())?;
    gl_membership(&pi0_matrix(cat, x), &gr)
}

#[cfg(test)]
mod tests;
