//! Computable strictly bimonoidal groupoids.
//!
//! Objects are encoded as `u64`: an element of the rig for discrete
//! categories, a cardinality or rank otherwise. Every built-in category has
//! morphisms only from an object to itself, so a morphism knows its object.
//! Sums and products are strictly associative and unital, right
//! distributivity is strict, and left distributivity is the explicit
//! isomorphism [`RigCategory::dist_left`].

mod pi0;
mod presentation;
mod table;
mod zmat;

pub use pi0::{check_pi0, grothendieck, GrRing, Pi0Rig};
pub use presentation::Presentation;
pub use table::RigTable;
pub use zmat::ZkMat;

use crate::counters;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::ring::ZMod;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

pub type Obj = u64;

/// The rig underlying a discrete category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiscreteRig {
    Naturals,
    Table(RigTable),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kind {
    Discrete(DiscreteRig),
    FiniteSets,
    FreeModules(ZMod),
}

/// A morphism in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mor {
    /// Identity of an object of a discrete category.
    Id(Obj),
    Perm(Perm),
    Matrix(ZkMat),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigCategory {
    kind: Kind,
    bound: u64,
}

impl RigCategory {
    /// Discrete category on a finite rig table (validated).
    pub fn discrete_table(table: RigTable) -> Result<RigCategory> {
        table.validate()?;
        let bound = table.size - 1;
        Ok(RigCategory { kind: Kind::Discrete(DiscreteRig::Table(table)), bound })
    }

    pub fn discrete_zmod(k: u64) -> Result<RigCategory> {
        Self::discrete_table(RigTable::zmod(k)?)
    }

    /// Discrete `ℕ` with objects `0..=bound`; arithmetic past the bound fails.
    pub fn discrete_naturals(bound: u64) -> RigCategory {
        RigCategory { kind: Kind::Discrete(DiscreteRig::Naturals), bound }
    }

    /// Finite sets `0..=bound` with permutations.
    pub fn finite_sets(bound: u64) -> Result<RigCategory> {
        if bound < 1 {
            return Err(Error::Presentation("finite-sets bound must be at least 1".into()));
        }
        Ok(RigCategory { kind: Kind::FiniteSets, bound })
    }

    /// Free modules `Aⁿ`, `n ≤ bound`, over `A = ℤ/k` with invertible matrices.
    pub fn free_modules(modulus: u64, bound: u64) -> Result<RigCategory> {
        if modulus < 2 {
            return Err(Error::Presentation("free modules need a nonzero ring (modulus ≥ 2)".into()));
        }
        Ok(RigCategory { kind: Kind::FreeModules(ZMod(modulus)), bound })
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn name(&self) -> String {
        match &self.kind {
            Kind::Discrete(DiscreteRig::Naturals) => format!("discrete N (bound {})", self.bound),
            Kind::Discrete(DiscreteRig::Table(t)) => format!("discrete rig of order {}", t.size),
            Kind::FiniteSets => format!("finite sets (bound {})", self.bound),
            Kind::FreeModules(r) => format!("free Z/{}-modules (bound {})", r.0, self.bound),
        }
    }

    fn check(&self, value: u64) -> Result<Obj> {
        if value > self.bound {
            Err(Error::OutOfRange { value, bound: self.bound })
        } else {
            Ok(value)
        }
    }

    fn table(&self) -> Option<&RigTable> {
        match &self.kind {
            Kind::Discrete(DiscreteRig::Table(t)) => Some(t),
            _ => None,
        }
    }

    pub fn zero(&self) -> Obj {
        self.table().map_or(0, |t| t.zero)
    }

    pub fn one(&self) -> Obj {
        self.table().map_or(1, |t| t.one)
    }

    pub fn contains(&self, a: Obj) -> bool {
        a <= self.bound
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> {
        0..=self.bound
    }

    pub fn add(&self, a: Obj, b: Obj) -> Result<Obj> {
        match self.table() {
            Some(t) => Ok(t.plus(self.check(a)?, self.check(b)?)),
            None => {
                let s = a.checked_add(b).ok_or(Error::OutOfRange { value: u64::MAX, bound: self.bound })?;
                self.check(s)
            }
        }
    }

    pub fn mul(&self, a: Obj, b: Obj) -> Result<Obj> {
        match self.table() {
            Some(t) => Ok(t.times(self.check(a)?, self.check(b)?)),
            None => {
                let p = a.checked_mul(b).ok_or(Error::OutOfRange { value: u64::MAX, bound: self.bound })?;
                self.check(p)
            }
        }
    }

    /// Connected-component label of an object.
    pub fn label(&self, a: Obj) -> u64 {
        a
    }

    pub fn dom(&self, f: &Mor) -> Obj {
        match f {
            Mor::Id(a) => *a,
            Mor::Perm(p) => p.len() as Obj,
            Mor::Matrix(m) => m.n as Obj,
        }
    }

    pub fn id(&self, a: Obj) -> Mor {
        match &self.kind {
            Kind::Discrete(_) => Mor::Id(a),
            Kind::FiniteSets => Mor::Perm(Perm::identity(a as usize)),
            Kind::FreeModules(_) => Mor::Matrix(ZkMat::identity(a as usize)),
        }
    }

    pub fn is_identity(&self, f: &Mor) -> bool {
        match f {
            Mor::Id(_) => true,
            Mor::Perm(p) => p.is_identity(),
            Mor::Matrix(m) => *m == ZkMat::identity(m.n),
        }
    }

    fn wrong(&self, f: &Mor) -> Error {
        Error::Invalid(format!("morphism {f:?} does not belong to {}", self.name()))
    }

    /// Checks that `f` is a well-formed morphism of this category.
    pub fn check_mor(&self, f: &Mor) -> Result<()> {
        self.check(self.dom(f))?;
        match (&self.kind, f) {
            (Kind::Discrete(_), Mor::Id(_)) | (Kind::FiniteSets, Mor::Perm(_)) => Ok(()),
            (Kind::FreeModules(r), Mor::Matrix(m)) => {
                if m.data.len() != m.n * m.n || m.data.iter().any(|&x| x >= r.0) {
                    return Err(self.wrong(f));
                }
                if !crate::ring::CommRing::is_unit(r, &m.determinant(r)) {
                    return Err(Error::NotInvertible(format!("{m:?} over Z/{}", r.0)));
                }
                Ok(())
            }
            _ => Err(self.wrong(f)),
        }
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: &Mor, f: &Mor) -> Result<Mor> {
        if self.dom(g) != self.dom(f) {
            return Err(Error::NotComposable(format!("{g:?} ∘ {f:?}")));
        }
        Ok(match (g, f, &self.kind) {
            (Mor::Id(_), Mor::Id(a), _) => Mor::Id(*a),
            (Mor::Perm(p), Mor::Perm(q), _) => Mor::Perm(p.after(q)),
            (Mor::Matrix(a), Mor::Matrix(b), Kind::FreeModules(r)) => Mor::Matrix(a.product(b, r)),
            _ => return Err(self.wrong(g)),
        })
    }

    pub fn inverse(&self, f: &Mor) -> Mor {
        match (f, &self.kind) {
            (Mor::Id(a), _) => Mor::Id(*a),
            (Mor::Perm(p), _) => Mor::Perm(p.inverse()),
            (Mor::Matrix(m), Kind::FreeModules(r)) => Mor::Matrix(m.inverse(r).expect("groupoid morphisms are invertible")),
            (Mor::Matrix(_), _) => unreachable!("matrix morphism outside a module category"),
        }
    }

    /// `f ⊕ g`.
    pub fn add_mor(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        Ok(match (f, g) {
            (Mor::Id(a), Mor::Id(b)) => Mor::Id(self.add(*a, *b)?),
            (Mor::Perm(p), Mor::Perm(q)) => {
                self.check((p.len() + q.len()) as u64)?;
                Mor::Perm(p.block_sum(q))
            }
            (Mor::Matrix(a), Mor::Matrix(b)) => {
                self.check((a.n + b.n) as u64)?;
                Mor::Matrix(a.block_sum(b))
            }
            _ => return Err(self.wrong(f)),
        })
    }

    /// `f ⊗ g`.
    pub fn mul_mor(&self, f: &Mor, g: &Mor) -> Result<Mor> {
        Ok(match (f, g, &self.kind) {
            (Mor::Id(a), Mor::Id(b), _) => Mor::Id(self.mul(*a, *b)?),
            (Mor::Perm(p), Mor::Perm(q), _) => {
                self.check((p.len() * q.len()) as u64)?;
                Mor::Perm(p.kron(q))
            }
            (Mor::Matrix(a), Mor::Matrix(b), Kind::FreeModules(r)) => {
                self.check((a.n * b.n) as u64)?;
                Mor::Matrix(a.kron(b, r))
            }
            _ => return Err(self.wrong(f)),
        })
    }

    fn from_perm(&self, p: Perm) -> Mor {
        match &self.kind {
            Kind::Discrete(_) => Mor::Id(p.len() as Obj),
            Kind::FiniteSets => Mor::Perm(p),
            Kind::FreeModules(_) => Mor::Matrix(ZkMat::from_perm(&p)),
        }
    }

    /// The additive symmetry `c(A,B): A ⊕ B → B ⊕ A`.
    pub fn sym(&self, a: Obj, b: Obj) -> Result<Mor> {
        counters::record_symmetry();
        let s = self.add(a, b)?;
        Ok(match &self.kind {
            Kind::Discrete(_) => Mor::Id(s),
            _ => self.from_perm(Perm::block_swap(a as usize, b as usize)),
        })
    }

    /// Left distributivity `A⊗B ⊕ A⊗C → A⊗(B ⊕ C)`.
    pub fn dist_left(&self, a: Obj, b: Obj, c: Obj) -> Result<Mor> {
        let s = self.mul(a, self.add(b, c)?)?;
        Ok(match &self.kind {
            Kind::Discrete(_) => Mor::Id(s),
            _ => self.from_perm(Perm::left_distributor(a as usize, b as usize, c as usize)),
        })
    }

    /// All automorphisms of `a`, refusing enumerations above `limit`.
    pub fn automorphisms(&self, a: Obj, limit: usize) -> Result<Vec<Mor>> {
        self.check(a)?;
        match &self.kind {
            Kind::Discrete(_) => Ok(vec![Mor::Id(a)]),
            Kind::FiniteSets => {
                let n = a as usize;
                let count: usize = (1..=n).product();
                if count > limit {
                    return Err(Error::Unsupported(format!("{count} permutations exceed limit {limit}")));
                }
                let mut out = Vec::with_capacity(count);
                permutations(n, &mut |p| out.push(Mor::Perm(Perm::from_images(p.to_vec()).unwrap())));
                Ok(out)
            }
            Kind::FreeModules(r) => {
                let n = a as usize;
                let total = (r.0 as f64).powi((n * n) as i32);
                if total > limit as f64 {
                    return Err(Error::Unsupported(format!("{total} matrices exceed limit {limit}")));
                }
                let mut out = Vec::new();
                let mut data = vec![0u64; n * n];
                loop {
                    let m = ZkMat { n, data: data.clone() };
                    if crate::ring::CommRing::is_unit(r, &m.determinant(r)) {
                        out.push(Mor::Matrix(m));
                    }
                    // odometer increment
                    let mut idx = 0;
                    loop {
                        if idx == data.len() {
                            return Ok(out);
                        }
                        data[idx] += 1;
                        if data[idx] < r.0 {
                            break;
                        }
                        data[idx] = 0;
                        idx += 1;
                    }
                }
            }
        }
    }

    pub fn random_automorphism<R: Rng + ?Sized>(&self, a: Obj, rng: &mut R) -> Mor {
        match &self.kind {
            Kind::Discrete(_) => Mor::Id(a),
            Kind::FiniteSets => {
                let mut v: Vec<u32> = (0..a as u32).collect();
                v.shuffle(rng);
                Mor::Perm(Perm::from_images(v).unwrap())
            }
            Kind::FreeModules(r) => loop {
                let n = a as usize;
                let m = ZkMat { n, data: (0..n * n).map(|_| rng.gen_range(0..r.0)).collect() };
                if crate::ring::CommRing::is_unit(r, &m.determinant(r)) {
                    break Mor::Matrix(m);
                }
            },
        }
    }

    /// The π₀ rig of component labels.
    pub fn pi0(&self) -> Pi0Rig {
        match &self.kind {
            Kind::Discrete(DiscreteRig::Table(t)) => Pi0Rig::Table(t.clone()),
            _ => Pi0Rig::Naturals { bound: self.bound },
        }
    }
}

fn permutations(n: usize, visit: &mut impl FnMut(&[u32])) {
    fn go(v: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
        if k == v.len() {
            visit(v);
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            go(v, k + 1, visit);
            v.swap(k, i);
        }
    }
    let mut v: Vec<u32> = (0..n as u32).collect();
    go(&mut v, 0, visit);
}

#[cfg(test)]
mod tests;
