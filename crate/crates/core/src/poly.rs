//! Polynomials over GF(p), the cyclic ring GF(p)[x]/(x^N − 1) and circulant matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, PrimeModulus};
use crate::matrix::{FieldMatrix, FieldVector};

/// Dense polynomial over GF(p), ascending coefficients (`coeffs[i]` multiplies `x^i`).
///
/// Trailing zeros are trimmed on construction, so the zero polynomial has no
/// coefficients and `==` compares mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldPoly {
    modulus: PrimeModulus,
    coeffs: Vec<u32>,
}

impl FieldPoly {
    pub fn zero(modulus: PrimeModulus) -> Self {
        Self {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::monomial(modulus, 0, 1)
    }

    /// `c·x^degree`.
    pub fn monomial(modulus: PrimeModulus, degree: usize, c: u32) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c % modulus.get();
        Self::from_residues(modulus, coeffs)
    }

    /// `x^n − 1`.
    pub fn x_pow_minus_one(modulus: PrimeModulus, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = modulus.neg(1);
        coeffs[n] = 1;
        Self::from_residues(modulus, coeffs)
    }

    pub fn from_residues(modulus: PrimeModulus, mut coeffs: Vec<u32>) -> Self {
        for c in &mut coeffs {
            *c %= modulus.get();
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { modulus, coeffs }
    }

    pub fn from_signed(modulus: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::from_residues(modulus, coeffs.iter().map(|&c| modulus.reduce(c)).collect())
    }

    /// Reads `v_0 + v_1 x + ... + v_{N-1} x^{N-1}` from a vector.
    pub fn from_vector(v: &FieldVector) -> Self {
        Self::from_residues(v.modulus(), v.entries().to_vec())
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// Coefficients `c_0, ..., c_{n-1}`, zero padded.
    ///
    /// Panics if the degree is `n` or more.
    pub fn to_vector(&self, n: usize) -> FieldVector {
        assert!(self.coeffs.len() <= n, "degree too large for length {n}");
        let mut entries = self.coeffs.clone();
        entries.resize(n, 0);
        FieldVector::from_residues(self.modulus, entries).expect("canonical residues")
    }

    /// Coefficients from the leading one down, `c_deg, ..., c_1, c_0`, then zero padded to `n`.
    ///
    /// Shifting this vector cyclically is how parity-check rows of a cyclic
    /// code are laid out.
    pub fn reversed_vector(&self, n: usize) -> FieldVector {
        assert!(self.coeffs.len() <= n, "degree too large for length {n}");
        let mut entries: Vec<u32> = self.coeffs.iter().rev().copied().collect();
        entries.resize(n, 0);
        FieldVector::from_residues(self.modulus, entries).expect("canonical residues")
    }

    fn check(&self, other: &Self) -> Result<PrimeModulus> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::from_residues(
            p,
            (0..n).map(|i| p.add(self.coeff(i), other.coeff(i))).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::from_residues(
            p,
            (0..n).map(|i| p.sub(self.coeff(i), other.coeff(i))).collect(),
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let p = self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(p));
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = p.add(out[i + j], p.mul(a, b));
            }
        }
        Ok(Self::from_residues(p, out))
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.modulus;
        Self::from_residues(p, self.coeffs.iter().map(|&a| p.mul(a, c)).collect())
    }

    /// Long division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let p = self.check(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = p.inv(divisor.leading_coeff())?;
        let mut rem = self.coeffs.clone();
        let Some(top) = self.degree().filter(|&d| d >= dd) else {
            return Ok((Self::zero(p), self.clone()));
        };
        let mut quot = vec![0u32; top - dd + 1];
        for shift in (0..=top - dd).rev() {
            let c = p.mul(rem[shift + dd], lead_inv);
            if c == 0 {
                continue;
            }
            quot[shift] = c;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = p.sub(rem[shift + i], p.mul(c, d));
            }
        }
        rem.truncate(dd);
        Ok((Self::from_residues(p, quot), Self::from_residues(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: FieldElement) -> Result<FieldElement> {
        if x0.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: x0.modulus().get(),
            });
        }
        let p = self.modulus;
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| p.add(p.mul(acc, x0.value()), c));
        Ok(p.element(v as i64))
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.modulus.inv(self.leading_coeff()).expect("nonzero lead");
        self.scale(inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Trial division by every monic polynomial of degree at most half our own.
    pub fn is_irreducible(&self) -> bool {
        let Some(deg) = self.degree() else {
            return false;
        };
        if deg == 0 {
            return false;
        }
        (1..=deg / 2).all(|d| {
            monic_polys(self.modulus, d).all(|f| !self.rem(&f).expect("same field").is_zero())
        })
    }

    /// Smallest `e ≥ 1` with `self | x^e − 1`, or `None` when `x | self` or no
    /// such `e ≤ cap` exists.
    pub fn order(&self, cap: usize) -> Option<usize> {
        let deg = self.degree()?;
        if deg == 0 || self.coeff(0) == 0 {
            return None;
        }
        let p = self.modulus;
        let x = Self::monomial(p, 1, 1);
        let one = Self::one(p);
        let mut acc = x.rem(self).ok()?;
        for e in 1..=cap {
            if acc == one {
                return Some(e);
            }
            acc = acc.mul(&x).ok()?.rem(self).ok()?;
        }
        None
    }
}

/// Every monic polynomial of the given degree, in increasing order of
/// `Σ c_i p^i`; this is lexicographic order on the coefficient list read from
/// the leading term down.
pub fn monic_polys(modulus: PrimeModulus, degree: usize) -> impl Iterator<Item = FieldPoly> {
    let p = modulus.get() as u64;
    let count = p.pow(degree as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(degree + 1);
        for _ in 0..degree {
            coeffs.push((idx % p) as u32);
            idx /= p;
        }
        coeffs.push(1);
        FieldPoly::from_residues(modulus, coeffs)
    })
}

impl fmt::Display for FieldPoly {
    /// Descending degree, e.g. `x^4+x^2+x+1` or `2x^5+x+2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// GF(p)[x] / (x^N − 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicRing {
    n: usize,
    modulus: PrimeModulus,
}

impl CyclicRing {
    pub fn new(modulus: PrimeModulus, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Unsupported("cyclic ring length must be at least 1".into()));
        }
        Ok(Self { n, modulus })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// Folds exponents mod N.
    pub fn reduce(&self, a: &FieldPoly) -> FieldPoly {
        let p = self.modulus;
        let mut out = vec![0u32; self.n];
        for (i, &c) in a.coeffs().iter().enumerate() {
            out[i % self.n] = p.add(out[i % self.n], c);
        }
        FieldPoly::from_residues(p, out)
    }

    /// Product reduced mod x^N − 1; the result has degree below N.
    pub fn mul(&self, a: &FieldPoly, b: &FieldPoly) -> Result<FieldPoly> {
        if a.modulus() != self.modulus || b.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: if a.modulus() != self.modulus {
                    a.modulus().get()
                } else {
                    b.modulus().get()
                },
            });
        }
        let p = self.modulus;
        let mut out = vec![0u32; self.n];
        for (i, &x) in a.coeffs().iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs().iter().enumerate() {
                let k = (i + j) % self.n;
                out[k] = p.add(out[k], p.mul(x, y));
            }
        }
        Ok(FieldPoly::from_residues(p, out))
    }

    /// `x^m` as a ring element.
    pub fn x_pow(&self, m: usize) -> FieldPoly {
        FieldPoly::monomial(self.modulus, m % self.n, 1)
    }
}

/// N×N matrix whose row `i` is `row` cyclically shifted right by `i`, so
/// entry `(i, j)` is `row[(j − i) mod N]`.
pub fn circulant_from_first_row(row: &FieldVector) -> FieldMatrix {
    let n = row.len();
    let p = row.modulus();
    let mut m = FieldMatrix::zeros(p, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, row.entries()[(j + n - i) % n]);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(p: u32, c: &[i64]) -> FieldPoly {
        FieldPoly::from_signed(gf(p), c)
    }

    #[test]
    fn display_descending() {
        assert_eq!(poly(2, &[1, 1, 1, 0, 1]).to_string(), "x^4+x^2+x+1");
        assert_eq!(poly(3, &[2, 1, 0, 0, 0, 2]).to_string(), "2x^5+x+2");
        assert_eq!(FieldPoly::zero(gf(3)).to_string(), "0");
        assert_eq!(poly(3, &[0, 2]).to_string(), "2x");
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(poly(3, &[1, 0, 3, 0]).coeffs(), &[1]);
        assert_eq!(poly(3, &[0, 0]).degree(), None);
    }

    #[test]
    fn cyclic_wraparound() {
        let ring = CyclicRing::new(gf(2), 7).unwrap();
        let prod = ring.mul(&ring.x_pow(1), &ring.x_pow(6)).unwrap();
        assert_eq!(prod, FieldPoly::one(gf(2)));
        let h = poly(2, &[1, 1, 1, 0, 1]);
        assert_eq!(ring.mul(&FieldPoly::one(gf(2)), &h).unwrap(), h);
    }

    #[test]
    fn cyclic_shift_of_ternary_golay_parity() {
        let ring = CyclicRing::new(gf(3), 11).unwrap();
        // x^6+2x^5+2x^4+2x^3+x^2+1
        let h = poly(3, &[1, 0, 1, 2, 2, 2, 1]);
        // schoolbook x^3·h has degree 9 < 11, so no folding happens
        let expect = poly(3, &[0, 0, 0, 1, 0, 1, 2, 2, 2, 1]);
        assert_eq!(ring.mul(&ring.x_pow(3), &h).unwrap(), expect);
        assert_eq!(expect.to_string(), "x^9+2x^8+2x^7+2x^6+x^5+x^3");
    }

    #[test]
    fn cyclic_folding_beyond_n() {
        let ring = CyclicRing::new(gf(3), 11).unwrap();
        let h = poly(3, &[1, 0, 1, 2, 2, 2, 1]);
        // x^7·h: exponents 7,9,10,11,12,13 -> 7,9,10,0,1,2
        let got = ring.mul(&ring.x_pow(7), &h).unwrap();
        assert_eq!(got, poly(3, &[2, 2, 1, 0, 0, 0, 0, 1, 0, 1, 2]));
    }

    #[test]
    fn divide_hamming_generator() {
        let x7 = FieldPoly::x_pow_minus_one(gf(2), 7);
        let g = poly(2, &[1, 1, 0, 1]);
        let (q, r) = x7.div_rem(&g).unwrap();
        assert_eq!(q, poly(2, &[1, 1, 1, 0, 1]));
        assert!(r.is_zero());
        let (q, r) = q.div_rem(&q).unwrap();
        assert_eq!(q, FieldPoly::one(gf(2)));
        assert!(r.is_zero());
    }

    #[test]
    fn ternary_golay_parity_divides() {
        let x11 = FieldPoly::x_pow_minus_one(gf(3), 11);
        let h = poly(3, &[1, 0, 1, 2, 2, 2, 1]);
        let (q, r) = x11.div_rem(&h).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.mul(&h).unwrap(), x11);
        assert_eq!(q.degree(), Some(5));
    }

    #[test]
    fn division_by_zero() {
        let a = poly(3, &[1, 1]);
        assert_eq!(a.div_rem(&FieldPoly::zero(gf(3))), Err(Error::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        let h = poly(2, &[1, 1, 1, 0, 1]);
        assert_eq!(h.eval(gf(2).one()).unwrap().value(), 0);
        let hg = poly(3, &[1, 0, 1, 2, 2, 2, 1]);
        assert_eq!(hg.eval(gf(3).one()).unwrap().value(), 0);
        for p in [2, 3, 5] {
            for x in gf(p).elements() {
                assert!(FieldPoly::zero(gf(p)).eval(x).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn circulant_examples() {
        let id = circulant_from_first_row(&FieldVector::impulse(gf(5), 6));
        assert_eq!(id, FieldMatrix::identity(gf(5), 6));
        let row = FieldVector::from_signed(gf(2), &[0, 0, 1, 1, 1, 0, 0]);
        let c = circulant_from_first_row(&row);
        assert_eq!(c.row(1), &[0, 0, 0, 1, 1, 1, 0]);
        assert_eq!(c.row(6), &[0, 1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn reversed_vector_layout() {
        let h = poly(2, &[1, 1, 1, 0, 1]);
        assert_eq!(h.reversed_vector(7).entries(), &[1, 0, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn irreducibility_and_order() {
        assert!(poly(2, &[1, 1, 0, 1]).is_irreducible());
        assert!(!poly(2, &[1, 0, 1]).is_irreducible()); // (x+1)^2
        assert_eq!(poly(2, &[1, 1, 0, 1]).order(100), Some(7));
        assert_eq!(poly(2, &[1, 1, 0, 0, 1]).order(100), Some(15));
        assert_eq!(poly(2, &[1, 1, 1, 1, 1]).order(100), Some(5));
        assert_eq!(poly(2, &[0, 1]).order(100), None);
    }

    #[test]
    fn monic_enumeration_order() {
        let cubics: Vec<String> = monic_polys(gf(2), 3).map(|f| f.to_string()).collect();
        assert_eq!(cubics.len(), 8);
        assert_eq!(cubics[0], "x^3");
        assert_eq!(cubics[3], "x^3+x+1");
        assert_eq!(cubics[5], "x^3+x^2+1");
    }
}
