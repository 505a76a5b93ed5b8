use crate::error::{Error, Result};
use crate::ring::CommRing;
use serde::{Deserialize, Serialize};

/// A finite rig given by full operation tables over `{0, .., size-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigTable {
    pub size: u64,
    pub add: Vec<Vec<u64>>,
    pub mul: Vec<Vec<u64>>,
    pub zero: u64,
    pub one: u64,
}

impl RigTable {
    pub fn zmod(k: u64) -> Result<RigTable> {
        if k == 0 {
            return Err(Error::Presentation("modulus must be positive".into()));
        }
        let add = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        let mul = (0..k).map(|a| (0..k).map(|b| (a * b) % k).collect()).collect();
        Ok(RigTable { size: k, add, mul, zero: 0, one: 1 % k })
    }

    pub fn plus(&self, a: u64, b: u64) -> u64 {
        self.add[a as usize][b as usize]
    }

    pub fn times(&self, a: u64, b: u64) -> u64 {
        self.mul[a as usize][b as usize]
    }

    /// Checks table shape and every rig axiom, naming the first failure.
    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        if n == 0 {
            return Err(Error::Presentation("empty carrier".into()));
        }
        let shape_ok = |t: &Vec<Vec<u64>>| {
            t.len() as u64 == n && t.iter().all(|r| r.len() as u64 == n && r.iter().all(|&x| x < n))
        };
        if !shape_ok(&self.add) || !shape_ok(&self.mul) || self.zero >= n || self.one >= n {
            return Err(Error::Presentation("operation tables malformed".into()));
        }
        let fail = |axiom: &str, inst: String| Err(Error::RigAxiom { axiom: axiom.into(), instance: inst });
        let triples = || (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))));
        for (a, b, c) in triples() {
            if self.times(a, self.plus(b, c)) != self.plus(self.times(a, b), self.times(a, c)) {
                return fail("left distributivity", format!("a={a}, b={b}, c={c}"));
            }
            if self.times(self.plus(a, b), c) != self.plus(self.times(a, c), self.times(b, c)) {
                return fail("right distributivity", format!("a={a}, b={b}, c={c}"));
            }
        }
        for (a, b, c) in triples() {
            if self.plus(self.plus(a, b), c) != self.plus(a, self.plus(b, c)) {
                return fail("additive associativity", format!("a={a}, b={b}, c={c}"));
            }
            if self.times(self.times(a, b), c) != self.times(a, self.times(b, c)) {
                return fail("multiplicative associativity", format!("a={a}, b={b}, c={c}"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.plus(a, b) != self.plus(b, a) {
                    return fail("additive commutativity", format!("a={a}, b={b}"));
                }
            }
            if self.plus(self.zero, a) != a || self.plus(a, self.zero) != a {
                return fail("additive unit", format!("a={a}"));
            }
            if self.times(self.one, a) != a || self.times(a, self.one) != a {
                return fail("multiplicative unit", format!("a={a}"));
            }
            if self.times(self.zero, a) != self.zero || self.times(a, self.zero) != self.zero {
                return fail("zero annihilates", format!("a={a}"));
            }
        }
        Ok(())
    }

    pub fn additive_inverse(&self, a: u64) -> Option<u64> {
        (0..self.size).find(|&b| self.plus(a, b) == self.zero)
    }

    pub fn is_ring(&self) -> bool {
        (0..self.size).all(|a| self.additive_inverse(a).is_some())
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size).all(|a| (0..self.size).all(|b| self.times(a, b) == self.times(b, a)))
    }

    pub fn is_additively_cancellative(&self) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).all(|b| (0..self.size).all(|c| self.plus(a, b) != self.plus(a, c) || b == c))
        })
    }
}

impl CommRing for RigTable {
    type Elem = u64;
    fn zero(&self) -> u64 {
        self.zero
    }
    fn one(&self) -> u64 {
        self.one
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.plus(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.additive_inverse(*a).expect("table is a ring")
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.times(*a, *b)
    }
    fn is_unit(&self, a: &u64) -> bool {
        self.inverse(a).is_some()
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        (0..self.size).find(|&b| self.times(*a, b) == self.one && self.times(b, *a) == self.one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_tables_validate() {
        for k in 1..7 {
            RigTable::zmod(k).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn broken_distributivity_is_named() {
        let mut t = RigTable::zmod(2).unwrap();
        t.mul[1][0] = 1;
        let err = t.validate().unwrap_err();
        assert_eq!(
            err,
            Error::RigAxiom { axiom: "left distributivity".into(), instance: "a=1, b=0, c=0".into() }
        );
    }

    #[test]
    fn boolean_rig_is_not_cancellative() {
        // the boolean semiring: 1 + 1 = 1, genuine rig
        let b = RigTable { size: 2, add: vec![vec![0, 1], vec![1, 1]], mul: vec![vec![0, 0], vec![0, 1]], zero: 0, one: 1 };
        b.validate().unwrap();
        assert!(!b.is_ring());
        assert!(!b.is_additively_cancellative());
    }
}
