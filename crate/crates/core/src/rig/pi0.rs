//! The rig of components and its ring of formal differences.

use super::{RigCategory, RigTable};
use crate::error::{Error, Result};
use crate::ring::CommRing;
use serde::Serialize;

/// Component rig of a rig category. Labels are `u64`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "rig")]
pub enum Pi0Rig {
    /// `ℕ`, enumerated up to `bound`.
    Naturals { bound: u64 },
    Table(RigTable),
}

impl Pi0Rig {
    pub fn zero(&self) -> u64 {
        match self {
            Pi0Rig::Naturals { .. } => 0,
            Pi0Rig::Table(t) => t.zero,
        }
    }

    pub fn one(&self) -> u64 {
        match self {
            Pi0Rig::Naturals { .. } => 1,
            Pi0Rig::Table(t) => t.one,
        }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Pi0Rig::Naturals { .. } => a.checked_add(b).expect("label overflow"),
            Pi0Rig::Table(t) => t.plus(a, b),
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            Pi0Rig::Naturals { .. } => a.checked_mul(b).expect("label overflow"),
            Pi0Rig::Table(t) => t.times(a, b),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Pi0Rig::Naturals { bound } => format!("N (truncated at {bound})"),
            Pi0Rig::Table(t) => format!("finite rig of order {}", t.size),
        }
    }
}

/// Ring of formal differences of a [`Pi0Rig`]. Elements are encoded as
/// `i128`: integers directly, table elements by their index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "ring")]
pub enum GrRing {
    Integers,
    /// The rig was already a ring.
    Table(RigTable),
}

impl GrRing {
    /// The canonical rig map `π₀ → Gr`.
    pub fn canonical(&self, label: u64) -> i128 {
        label as i128
    }

    /// Class of the formal difference `a − b`.
    pub fn difference(&self, a: u64, b: u64) -> i128 {
        let (a, b) = (self.canonical(a), self.canonical(b));
        self.add(&a, &self.neg(&b))
    }

    /// Whether the pairs `(a, b)` and `(c, d)` name the same element.
    pub fn same_class(&self, (a, b): (u64, u64), (c, d): (u64, u64)) -> bool {
        self.difference(a, b) == self.difference(c, d)
    }

    pub fn is_invertible(&self, x: i128) -> bool {
        self.is_unit(&x)
    }

    pub fn is_commutative(&self) -> bool {
        match self {
            GrRing::Integers => true,
            GrRing::Table(t) => t.is_commutative(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GrRing::Integers => "Z".to_string(),
            GrRing::Table(t) => format!("the rig itself (a ring of order {})", t.size),
        }
    }
}

impl CommRing for GrRing {
    type Elem = i128;
    fn zero(&self) -> i128 {
        match self {
            GrRing::Integers => 0,
            GrRing::Table(t) => t.zero as i128,
        }
    }
    fn one(&self) -> i128 {
        match self {
            GrRing::Integers => 1,
            GrRing::Table(t) => t.one as i128,
        }
    }
    fn add(&self, a: &i128, b: &i128) -> i128 {
        match self {
            GrRing::Integers => a.checked_add(*b).expect("integer overflow"),
            GrRing::Table(t) => t.plus(*a as u64, *b as u64) as i128,
        }
    }
    fn neg(&self, a: &i128) -> i128 {
        match self {
            GrRing::Integers => -a,
            GrRing::Table(t) => CommRing::neg(t, &(*a as u64)) as i128,
        }
    }
    fn mul(&self, a: &i128, b: &i128) -> i128 {
        match self {
            GrRing::Integers => a.checked_mul(*b).expect("integer overflow"),
            GrRing::Table(t) => t.times(*a as u64, *b as u64) as i128,
        }
    }
    fn is_unit(&self, a: &i128) -> bool {
        match self {
            GrRing::Integers => *a == 1 || *a == -1,
            GrRing::Table(t) => t.is_unit(&(*a as u64)),
        }
    }
    fn inverse(&self, a: &i128) -> Option<i128> {
        match self {
            GrRing::Integers => self.is_unit(a).then_some(*a),
            GrRing::Table(t) => CommRing::inverse(t, &(*a as u64)).map(|x| x as i128),
        }
    }
}

/// Group completion of a component rig.
pub fn grothendieck(p: &Pi0Rig) -> Result<GrRing> {
    match p {
        Pi0Rig::Naturals { .. } => Ok(GrRing::Integers),
        Pi0Rig::Table(t) if t.is_ring() => Ok(GrRing::Table(t.clone())),
        // a finite cancellative monoid is already a group, so this is the
        // non-cancellative case
        Pi0Rig::Table(_) => Err(Error::Unsupported(
            "group completion of a non-cancellative rig that is not a ring".into(),
        )),
    }
}

/// Checks that labels respect the bimonoidal structure on every pair of
/// objects up to `limit`, and that every automorphism stays in its
/// component.
pub fn check_pi0(cat: &RigCategory, limit: u64) -> Result<()> {
    let p = cat.pi0();
    let top = limit.min(cat.bound());
    for a in 0..=top {
        for b in 0..=top {
            let checks = [
                ("sum", cat.add(a, b), p.add(cat.label(a), cat.label(b))),
                ("product", cat.mul(a, b), p.mul(cat.label(a), cat.label(b))),
            ];
            for (what, obj, expected) in checks {
                if let Ok(o) = obj {
                    if cat.label(o) != expected {
                        return Err(Error::Validation(format!("label of {what} of {a} and {b}")));
                    }
                }
            }
        }
        let f = cat.id(a);
        if cat.label(cat.dom(&f)) != cat.label(a) {
            return Err(Error::Validation(format!("connected objects {a} have distinct labels")));
        }
    }
    Ok(())
}
