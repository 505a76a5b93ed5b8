//! Discrete monoids acting on discrete sets, for checks against classical
//! nerves.

use super::{BarModule, FiniteBarModule};
use crate::error::{Error, Result};
use crate::sset::FiniteCategory;

/// A discrete action; every morphism is an identity, written as its object.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscreteModule {
    /// `ℤ/k` acting on itself, or on a point when `point` is set.
    Cyclic { k: u64, point: bool },
    /// `{0..=bound} ⊂ ℕ` acting on `{lo..=hi} ⊂ ℤ` by addition. Products
    /// leaving the window are undefined; take `bound ≥ hi - lo` for the
    /// action category to be closed under composition.
    Naturals { bound: u64, lo: i64, hi: i64 },
}

impl DiscreteModule {
    fn not_identity(what: &str) -> Error {
        Error::NotComposable(format!("{what} of distinct discrete objects"))
    }
}

impl BarModule for DiscreteModule {
    type MObj = u64;
    type MMor = u64;
    type TObj = i64;
    type TMor = i64;

    fn unit(&self) -> u64 {
        0
    }
    fn mul(&self, a: &u64, b: &u64) -> Result<u64> {
        match *self {
            DiscreteModule::Cyclic { k, .. } => Ok((a + b) % k),
            DiscreteModule::Naturals { bound, .. } => {
                let s = a + b;
                if s > bound {
                    Err(Error::OutOfRange { value: s, bound })
                } else {
                    Ok(s)
                }
            }
        }
    }
    fn m_id(&self, a: &u64) -> u64 {
        *a
    }
    fn m_src(&self, f: &u64) -> u64 {
        *f
    }
    fn m_tgt(&self, f: &u64) -> u64 {
        *f
    }
    fn m_compose(&self, g: &u64, f: &u64) -> Result<u64> {
        if g == f {
            Ok(*f)
        } else {
            Err(Self::not_identity("composite"))
        }
    }
    fn m_inverse(&self, f: &u64) -> Result<u64> {
        Ok(*f)
    }
    fn mul_mor(&self, f: &u64, g: &u64) -> Result<u64> {
        self.mul(f, g)
    }
    fn assoc(&self, a: &u64, b: &u64, c: &u64) -> Result<u64> {
        self.mul(&self.mul(a, b)?, c)
    }

    fn act(&self, a: &u64, t: &i64) -> Result<i64> {
        match *self {
            DiscreteModule::Cyclic { point: true, .. } => Ok(0),
            DiscreteModule::Cyclic { k, .. } => Ok((*t + *a as i64).rem_euclid(k as i64)),
            DiscreteModule::Naturals { hi, .. } => {
                let s = t + *a as i64;
                if s > hi {
                    Err(Error::Invalid(format!("{s} leaves the window")))
                } else {
                    Ok(s)
                }
            }
        }
    }
    fn t_id(&self, t: &i64) -> i64 {
        *t
    }
    fn t_src(&self, f: &i64) -> i64 {
        *f
    }
    fn t_tgt(&self, f: &i64) -> Result<i64> {
        Ok(*f)
    }
    fn t_compose(&self, g: &i64, f: &i64) -> Result<i64> {
        if g == f {
            Ok(*f)
        } else {
            Err(Self::not_identity("composite"))
        }
    }
    fn t_inverse(&self, f: &i64) -> Result<i64> {
        Ok(*f)
    }
    fn act_mor(&self, f: &u64, g: &i64) -> Result<i64> {
        self.act(f, g)
    }
    fn t_assoc(&self, a: &u64, b: &u64, t: &i64) -> Result<i64> {
        self.act(&self.mul(a, b)?, t)
    }
}

impl FiniteBarModule for DiscreteModule {
    fn m_objects(&self) -> Vec<u64> {
        match *self {
            DiscreteModule::Cyclic { k, .. } => (0..k).collect(),
            DiscreteModule::Naturals { bound, .. } => (0..=bound).collect(),
        }
    }
    fn t_objects(&self) -> Vec<i64> {
        match *self {
            DiscreteModule::Cyclic { point: true, .. } => vec![0],
            DiscreteModule::Cyclic { k, .. } => (0..k as i64).collect(),
            DiscreteModule::Naturals { lo, hi, .. } => (lo..=hi).collect(),
        }
    }
    fn m_homs(&self, a: &u64, b: &u64) -> Vec<u64> {
        if a == b { vec![*a] } else { Vec::new() }
    }
    fn t_homs(&self, a: &i64, b: &i64) -> Vec<i64> {
        if a == b { vec![*a] } else { Vec::new() }
    }
}

/// The action category: objects of `𝓣`, morphisms `(m, t) : t → m·t`.
pub struct ActionCategory<'a, M>(pub &'a M);

impl<M: FiniteBarModule> FiniteCategory for ActionCategory<'_, M> {
    type Obj = M::TObj;
    type Mor = (M::MObj, M::TObj);
    fn objects(&self) -> Vec<M::TObj> {
        self.0.t_objects()
    }
    fn morphisms_into(&self, x: &M::TObj) -> Vec<(M::MObj, M::TObj)> {
        let mut out = Vec::new();
        for m in self.0.m_objects() {
            for t in self.0.t_objects() {
                if self.0.act(&m, &t).ok().as_ref() == Some(x) {
                    out.push((m.clone(), t));
                }
            }
        }
        out
    }
    fn dom(&self, f: &(M::MObj, M::TObj)) -> M::TObj {
        f.1.clone()
    }
    fn compose(&self, g: &(M::MObj, M::TObj), f: &(M::MObj, M::TObj)) -> (M::MObj, M::TObj) {
        (self.0.mul(&g.0, &f.0).expect("composite in the action category"), f.1.clone())
    }
    fn id(&self, x: &M::TObj) -> (M::MObj, M::TObj) {
        (self.0.unit(), x.clone())
    }
}
