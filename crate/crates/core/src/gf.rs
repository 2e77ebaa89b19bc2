//! Arithmetic in the prime field GF(p).
//!
//! Residues are kept canonical in `[0, p)`. Matrices and polynomials store raw
//! `u32` residues next to a single [`PrimeModulus`] and call the helpers on the
//! modulus directly; [`FieldElement`] is the checked, self-describing value
//! used at API boundaries.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The characteristic `p` of GF(p). Primality is checked on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) {
            Ok(Self(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    /// Canonical residue of an arbitrary signed integer.
    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.0 as u64 - b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    /// Square-and-multiply; `pow(a, 0) == 1`.
    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.0;
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u32) -> Result<u32> {
        let a = a % self.0;
        if a == 0 {
            return Err(Error::NoInverse(self.0));
        }
        let (mut r0, mut r1) = (self.0 as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.reduce(t0))
    }

    pub fn element(self, v: i64) -> FieldElement {
        FieldElement {
            value: self.reduce(v),
            modulus: self,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.element(0)
    }

    pub fn one(self) -> FieldElement {
        self.element(1)
    }

    /// All elements `0, 1, ..., p-1` in order.
    pub fn elements(self) -> impl Iterator<Item = FieldElement> {
        (0..self.0).map(move |value| FieldElement {
            value,
            modulus: self,
        })
    }
}

impl TryFrom<u32> for PrimeModulus {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Self::new(p)
    }
}

impl From<PrimeModulus> for u32 {
    fn from(p: PrimeModulus) -> u32 {
        p.0
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of GF(p) that carries its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: PrimeModulus,
}

impl FieldElement {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        modulus.element(value)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) -> Result<PrimeModulus> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            })
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let p = self.check(rhs)?;
        Ok(Self {
            value: p.add(self.value, rhs.value),
            modulus: p,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        let p = self.check(rhs)?;
        Ok(Self {
            value: p.sub(self.value, rhs.value),
            modulus: p,
        })
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let p = self.check(rhs)?;
        Ok(Self {
            value: p.mul(self.value, rhs.value),
            modulus: p,
        })
    }

    pub fn inv(self) -> Result<Self> {
        Ok(Self {
            value: self.modulus.inv(self.value)?,
            modulus: self.modulus,
        })
    }

    pub fn pow(self, e: u64) -> Self {
        Self {
            value: self.modulus.pow(self.value, e),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

// Operator forms panic on a modulus mismatch; use the `checked_*` methods when
// the operands may come from different fields.
macro_rules! impl_op {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands from different fields")
            }
        }
    };
}

impl_op!(Add, add, checked_add);
impl_op!(Sub, sub, checked_sub);
impl_op!(Mul, mul, checked_mul);

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        FieldElement {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn rejects_composites() {
        for n in [0, 1, 4, 6, 9, 15, 21, 25] {
            assert_eq!(PrimeModulus::new(n), Err(Error::NotPrime(n)));
        }
        for p in [2, 3, 5, 7, 11, 13, 23, 97] {
            assert!(PrimeModulus::new(p).is_ok());
        }
    }

    #[test]
    fn arithmetic_examples() {
        let p3 = gf(3);
        let p2 = gf(2);
        assert_eq!(p3.element(2) + p3.element(2), p3.element(1));
        assert_eq!(p2.element(1) + p2.element(1), p2.element(0));
        assert_eq!(p3.element(2) * p3.element(2), p3.element(1));
        assert_eq!(p3.element(-1).value(), 2);
    }

    #[test]
    fn mismatched_moduli_are_rejected() {
        let a = gf(2).element(1);
        let b = gf(3).element(1);
        assert_eq!(
            a.checked_add(b),
            Err(Error::ModulusMismatch { left: 2, right: 3 })
        );
        assert!(a.checked_mul(b).is_err());
        assert!(a.checked_sub(b).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(gf(3).element(2).inv().unwrap().value(), 2);
        assert_eq!(gf(2).element(1).inv().unwrap().value(), 1);
        // scan 3*x mod 7 for the x giving 1
        let scanned = (0..7u32).find(|x| (3 * x) % 7 == 1).unwrap();
        assert_eq!(scanned, 5);
        assert_eq!(gf(7).element(3).inv().unwrap().value(), scanned);
        assert_eq!(gf(5).element(0).inv(), Err(Error::NoInverse(5)));
    }

    #[test]
    fn pow_examples() {
        let p3 = gf(3);
        assert_eq!(p3.element(2).pow(2).value(), 1);
        assert_eq!(p3.element(2).pow(0).value(), 1);
        for k in 0..20 {
            assert_eq!(gf(2).element(1).pow(k).value(), 1);
        }
        let mut acc = p3.one();
        for _ in 0..5 {
            acc = acc * p3.element(2);
        }
        assert_eq!(acc.value(), 2);
        assert_eq!(p3.element(2).pow(5), acc);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let m = gf(p);
            for a in m.elements() {
                assert_eq!(a + (m.zero() - a), m.zero());
                assert_eq!(a * m.one(), a);
                assert_eq!(a + (-a), m.zero());
                if !a.is_zero() {
                    assert_eq!(a.inv().unwrap().inv().unwrap(), a);
                    assert_eq!(a * a.inv().unwrap(), m.one());
                    assert_eq!(a.pow(p as u64 - 1), m.one(), "Fermat for {a} mod {p}");
                }
            }
        }
    }
}
