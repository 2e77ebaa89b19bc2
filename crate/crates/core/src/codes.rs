//! Perfect linear block codes: Hamming codes for any (p, m), the cyclic
//! Hamming parity polynomial, and the fixed Golay / extended Golay data.

use crate::error::{Error, Result};
use crate::gf::PrimeModulus;
use crate::matrix::{FieldMatrix, FieldVector};
use crate::poly::{monic_polys, FieldPoly};
use crate::reference;

/// Largest code (in codewords) that [`CodeSpec::codewords`] will enumerate.
pub const MAX_ENUMERATED_CODEWORDS: u64 = 1 << 20;

/// A linear `(N, k, d)` code over GF(p), described by a full-rank
/// `(N−k)×N` parity-check matrix and, for cyclic codes, its parity polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeSpec {
    label: String,
    modulus: PrimeModulus,
    n: usize,
    k: usize,
    d: usize,
    parity_check: FieldMatrix,
    parity_poly: Option<FieldPoly>,
}

/// The Golay data sets shipped with the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GolayVariant {
    /// Cyclic binary (23,12,7).
    Binary,
    /// Cyclic ternary (11,6,5).
    Ternary,
    /// Ternary (11,6,5) with a systematic parity-check matrix.
    TernarySystematic,
    /// The published extended ternary parity-check matrix. As printed it
    /// spans a (12,6,5) code, one entry away from the self-dual (12,6,6)
    /// code; it is kept verbatim because the published transform is built
    /// from it.
    ExtendedTernary,
}

impl CodeSpec {
    /// Wraps a parity-check matrix. Fails unless `H` has full row rank.
    pub fn new(
        label: impl Into<String>,
        parity_check: FieldMatrix,
        d: usize,
        parity_poly: Option<FieldPoly>,
    ) -> Result<Self> {
        let rank = parity_check.rank();
        if rank != parity_check.rows() {
            return Err(Error::RankDeficient {
                rank,
                expected: parity_check.rows(),
            });
        }
        let n = parity_check.cols();
        Ok(Self {
            label: label.into(),
            modulus: parity_check.modulus(),
            n,
            k: n - rank,
            d,
            parity_check,
            parity_poly,
        })
    }

    /// Like [`CodeSpec::new`] but finds `d` by enumerating the code.
    pub fn with_computed_distance(
        label: impl Into<String>,
        parity_check: FieldMatrix,
        parity_poly: Option<FieldPoly>,
    ) -> Result<Self> {
        let mut spec = Self::new(label, parity_check, 0, parity_poly)?;
        spec.d = spec.minimum_distance()?;
        Ok(spec)
    }

    /// Cyclic code of length `n` with parity polynomial `h`. The parity-check
    /// rows are the first `n − deg h` right shifts of `h` read from its leading
    /// coefficient down.
    pub fn cyclic(label: impl Into<String>, h: FieldPoly, n: usize, d: usize) -> Result<Self> {
        let p = h.modulus();
        let k = h
            .degree()
            .filter(|&k| k < n)
            .ok_or_else(|| Error::Unsupported(format!("parity polynomial {h} for length {n}")))?;
        if !FieldPoly::x_pow_minus_one(p, n).rem(&h)?.is_zero() {
            return Err(Error::Unsupported(format!("{h} does not divide x^{n}-1")));
        }
        let first = h.reversed_vector(n);
        let rows: Vec<FieldVector> = (0..n - k).map(|i| first.rotate(i)).collect();
        let parity_check = FieldMatrix::from_row_vectors(p, n, &rows);
        Self::new(label, parity_check, d, Some(h))
    }

    /// Systematic code with `H = [−Pᵀ | I]` for a `k×(N−k)` matrix `P`.
    pub fn from_systematic(label: impl Into<String>, p_block: &FieldMatrix) -> Result<Self> {
        let m = p_block.modulus();
        let left = FieldMatrix::zeros(m, p_block.cols(), p_block.rows())
            .sub(&p_block.transpose())?;
        let h = left.hstack(&FieldMatrix::identity(m, p_block.cols()))?;
        Self::with_computed_distance(label, h, None)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn parity_check(&self) -> &FieldMatrix {
        &self.parity_check
    }

    pub fn parity_poly(&self) -> Option<&FieldPoly> {
        self.parity_poly.as_ref()
    }

    /// Generator matrix in canonical (RREF) form: a basis of the kernel of `H`.
    pub fn generator(&self) -> Result<FieldMatrix> {
        generator_from_parity(&self.parity_check, self.k)
    }

    /// The `P` block when `H = [A | I]`, i.e. `P = (−A)ᵀ`; `None` otherwise.
    pub fn systematic_part(&self) -> Option<FieldMatrix> {
        let r = self.n - self.k;
        let right = self.parity_check.column_slice(self.k..self.n);
        if right != FieldMatrix::identity(self.modulus, r) {
            return None;
        }
        let left = self.parity_check.column_slice(0..self.k);
        let neg = FieldMatrix::zeros(self.modulus, r, self.k).sub(&left).ok()?;
        Some(neg.transpose())
    }

    /// Deletes coordinate `column`: an `(N−1, k−1)` shortened code. The
    /// minimum distance is recomputed by enumeration.
    pub fn shorten(&self, column: usize) -> Result<Self> {
        if column >= self.n || self.k == 0 {
            return Err(Error::Unsupported(format!(
                "cannot shorten {} at column {column}",
                self.label
            )));
        }
        let h = self.parity_check.without_column(column);
        Self::with_computed_distance(
            format!("{}-shortened({column})", self.label),
            h,
            None,
        )
    }

    /// Every codeword, as combinations of the generator rows.
    pub fn codewords(&self) -> Result<Vec<FieldVector>> {
        let p = self.modulus.get() as u64;
        let count = p
            .checked_pow(self.k as u32)
            .filter(|&c| c <= MAX_ENUMERATED_CODEWORDS)
            .ok_or_else(|| {
                Error::Unsupported(format!("{} has too many codewords to enumerate", self.label))
            })?;
        let g = self.generator()?;
        let rows = g.row_vectors();
        let mut words = Vec::with_capacity(count as usize);
        for mut idx in 0..count {
            let mut word = FieldVector::zeros(self.modulus, self.n);
            for row in &rows {
                let c = (idx % p) as u32;
                idx /= p;
                if c != 0 {
                    word = word.add(&row.scale(c))?;
                }
            }
            words.push(word);
        }
        Ok(words)
    }

    /// Smallest nonzero codeword weight; `N + 1` stands in for infinity when the code is `{0}`.
    pub fn minimum_distance(&self) -> Result<usize> {
        Ok(self
            .codewords()?
            .iter()
            .map(FieldVector::weight)
            .filter(|&w| w > 0)
            .min()
            .unwrap_or(self.n + 1))
    }

    /// Sphere-packing radius `t ≥ 1` with `Σ_{i≤t} (p−1)^i·C(N,i) = p^{N−k}`, if any.
    pub fn perfect_radius(&self) -> Option<usize> {
        perfect_radius(self.modulus.get(), self.n, self.k)
    }
}

/// Canonical generator for the code with parity-check matrix `h` and dimension `k`.
pub fn generator_from_parity(h: &FieldMatrix, k: usize) -> Result<FieldMatrix> {
    let rank = h.rank();
    if rank + k != h.cols() {
        return Err(Error::RankDeficient {
            rank,
            expected: h.cols().saturating_sub(k),
        });
    }
    Ok(h.kernel_basis())
}

/// Number of vectors in a Hamming ball of radius `t` in GF(p)^N, exactly.
pub fn sphere_volume(p: u32, n: usize, t: usize) -> Option<u128> {
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    let mut pow: u128 = 1;
    for i in 0..=t.min(n) {
        if i > 0 {
            binom = binom.checked_mul((n - i + 1) as u128)? / i as u128;
            pow = pow.checked_mul(p as u128 - 1)?;
        }
        total = total.checked_add(binom.checked_mul(pow)?)?;
    }
    Some(total)
}

/// The `t ≥ 1` for which an `(N, k)` code over GF(p) meets the sphere-packing bound with equality.
pub fn perfect_radius(p: u32, n: usize, k: usize) -> Option<usize> {
    let target = (p as u128).checked_pow((n - k) as u32)?;
    for t in 1..=n {
        let v = sphere_volume(p, n, t)?;
        if v == target {
            return Some(t);
        }
        if v > target {
            break;
        }
    }
    None
}

/// Length `(p^m − 1)/(p − 1)` of the Hamming code with `m` parity symbols.
pub fn hamming_length(p: u32, m: usize) -> Option<usize> {
    let pm = (p as u64).checked_pow(m as u32)?;
    usize::try_from((pm - 1) / (p as u64 - 1)).ok()
}

fn check_hamming_params(p: PrimeModulus, m: usize) -> Result<usize> {
    if m < 2 {
        return Err(Error::Unsupported(format!("Hamming codes need m >= 2, got {m}")));
    }
    hamming_length(p.get(), m)
        .filter(|&n| n <= 1 << 16)
        .ok_or_else(|| Error::Unsupported(format!("Hamming code for p={p}, m={m} is too long")))
}

/// Parity-check matrix of the `((p^m−1)/(p−1), N−m, 3)` Hamming code.
///
/// Columns are the projective points of GF(p)^m, each scaled so its first
/// nonzero coordinate is 1, in lexicographic order with the top row most
/// significant. For (3, 3) this is the familiar ternary (13,10,3) matrix.
pub fn hamming_parity_check(p: PrimeModulus, m: usize) -> Result<CodeSpec> {
    let n = check_hamming_params(p, m)?;
    let q = p.get() as u64;
    let mut h = FieldMatrix::zeros(p, m, n);
    let mut col = 0;
    for idx in 1..q.pow(m as u32) {
        let digits: Vec<u32> = (0..m)
            .rev()
            .map(|pos| ((idx / q.pow(pos as u32)) % q) as u32)
            .collect();
        if digits.iter().find(|&&d| d != 0) != Some(&1) {
            continue;
        }
        for (row, &d) in digits.iter().enumerate() {
            h.set(row, col, d);
        }
        col += 1;
    }
    debug_assert_eq!(col, n);
    CodeSpec::new(format!("hamming({},{},3)", n, n - m), h, 3, None)
}

/// The binary (7,4,3) Hamming code in the systematic form `H = [A | I_3]`
/// used for the standard binary construction.
pub fn hamming_7_4_systematic() -> CodeSpec {
    CodeSpec::new(
        "hamming(7,4,3)-systematic",
        reference::matrix(2, &reference::HAMMING_7_4_PARITY),
        3,
        None,
    )
    .expect("reference matrix has full rank")
}

/// Parity polynomial `h(x) = (x^N − 1)/g(x)` of a cyclic Hamming code.
///
/// `g` is the first monic degree-`m` polynomial, in lexicographic order of its
/// coefficients read from the leading term down, that is irreducible and has
/// order exactly `N`. A cyclic Hamming code exists only when
/// `gcd(m, p − 1) = 1`; other parameters are rejected.
pub fn cyclic_hamming_parity_poly(p: PrimeModulus, m: usize) -> Result<FieldPoly> {
    let n = check_hamming_params(p, m)?;
    if gcd(m as u64, p.get() as u64 - 1) != 1 {
        return Err(Error::Unsupported(format!(
            "no cyclic Hamming code for p={p}, m={m}: gcd(m, p-1) != 1"
        )));
    }
    let g = monic_polys(p, m)
        .find(|g| g.coeff(0) != 0 && g.is_irreducible() && g.order(n) == Some(n))
        .ok_or_else(|| {
            Error::Unsupported(format!("no irreducible degree-{m} divisor of x^{n}-1 of order {n}"))
        })?;
    let (h, r) = FieldPoly::x_pow_minus_one(p, n).div_rem(&g)?;
    debug_assert!(r.is_zero());
    Ok(h)
}

/// Cyclic Hamming code built from [`cyclic_hamming_parity_poly`].
pub fn cyclic_hamming(p: PrimeModulus, m: usize) -> Result<CodeSpec> {
    let h = cyclic_hamming_parity_poly(p, m)?;
    let n = check_hamming_params(p, m)?;
    CodeSpec::cyclic(format!("cyclic-hamming({},{},3)", n, n - m), h, n, 3)
}

/// The Golay data sets, stored verbatim.
pub fn golay_spec(variant: GolayVariant) -> CodeSpec {
    let spec = match variant {
        GolayVariant::Binary => CodeSpec::cyclic(
            "golay(23,12,7)",
            reference::poly(2, &reference::BINARY_GOLAY_PARITY_POLY),
            23,
            7,
        ),
        GolayVariant::Ternary => CodeSpec::cyclic(
            "golay(11,6,5)",
            reference::poly(3, &reference::TERNARY_GOLAY_PARITY_POLY),
            11,
            5,
        ),
        GolayVariant::TernarySystematic => CodeSpec::new(
            "golay(11,6,5)-systematic",
            reference::matrix(3, &reference::TERNARY_GOLAY_SYSTEMATIC_PARITY),
            5,
            None,
        ),
        GolayVariant::ExtendedTernary => CodeSpec::with_computed_distance(
            "extended-golay(12,6,5)",
            reference::matrix(3, &reference::EXTENDED_GOLAY_PARITY),
            None,
        ),
    };
    spec.expect("reference Golay data is consistent")
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn ternary_hamming_matches_printed_matrix() {
        let spec = hamming_parity_check(gf(3), 3).unwrap();
        let printed = reference::matrix(3, &reference::TERNARY_HAMMING_PARITY);
        assert_eq!(spec.parity_check(), &printed);
        assert_eq!((spec.n(), spec.k(), spec.d()), (13, 10, 3));
    }

    #[test]
    fn binary_hamming_7() {
        let spec = hamming_parity_check(gf(2), 3).unwrap();
        assert_eq!((spec.n(), spec.k()), (7, 4));
        assert_eq!(spec.parity_check().rank(), 3);
        assert_eq!(spec.parity_check().kernel_basis().rows(), 4);
        // every nonzero binary triple appears once as a column
        let mut cols: Vec<Vec<u32>> = (0..7)
            .map(|j| spec.parity_check().column(j).entries().to_vec())
            .collect();
        cols.sort();
        cols.dedup();
        assert_eq!(cols.len(), 7);
        assert!(cols.iter().all(|c| c.iter().any(|&v| v != 0)));
    }

    #[test]
    fn binary_hamming_3() {
        let spec = hamming_parity_check(gf(2), 2).unwrap();
        assert_eq!(spec.parity_check().rows(), 2);
        assert_eq!((spec.n(), spec.k()), (3, 1));
        assert_eq!(spec.perfect_radius(), Some(1));
    }

    #[test]
    fn hamming_rejects_small_m() {
        assert!(matches!(hamming_parity_check(gf(2), 1), Err(Error::Unsupported(_))));
        assert_eq!(PrimeModulus::new(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn cyclic_hamming_polynomials() {
        assert_eq!(cyclic_hamming_parity_poly(gf(2), 3).unwrap().to_string(), "x^4+x^2+x+1");
        assert_eq!(cyclic_hamming_parity_poly(gf(2), 2).unwrap().to_string(), "x+1");

        // oracle for (2,4): scan all 16 monic quartics for irreducible ones of order 15
        let p = gf(2);
        let g = monic_polys(p, 4)
            .find(|g| {
                let irreducible = (1..=2).all(|d| {
                    monic_polys(p, d).all(|f| !g.div_rem(&f).unwrap().1.is_zero())
                });
                let x15 = FieldPoly::x_pow_minus_one(p, 15);
                let divides = x15.div_rem(g).unwrap().1.is_zero();
                let smaller = [3usize, 5]
                    .iter()
                    .any(|&e| FieldPoly::x_pow_minus_one(p, e).div_rem(g).unwrap().1.is_zero());
                irreducible && divides && !smaller
            })
            .unwrap();
        assert_eq!(g.to_string(), "x^4+x+1");
        let h = cyclic_hamming_parity_poly(p, 4).unwrap();
        assert_eq!(h.mul(&g).unwrap(), FieldPoly::x_pow_minus_one(p, 15));
    }

    #[test]
    fn cyclic_ternary_hamming_is_a_hamming_code() {
        let spec = cyclic_hamming(gf(3), 3).unwrap();
        assert_eq!((spec.n(), spec.k()), (13, 10));
        assert_eq!(spec.minimum_distance().unwrap(), 3);
        // (3, 2) fails the gcd condition
        assert!(matches!(cyclic_hamming_parity_poly(gf(3), 2), Err(Error::Unsupported(_))));
    }

    #[test]
    fn cyclic_hamming_parity_check_is_printed_matrix() {
        let spec = cyclic_hamming(gf(2), 3).unwrap();
        assert_eq!(
            spec.parity_check(),
            &reference::matrix(2, &reference::CYCLIC_HAMMING_PARITY)
        );
    }

    #[test]
    fn golay_data() {
        let b = golay_spec(GolayVariant::Binary);
        let h = b.parity_poly().unwrap();
        assert_eq!((h.degree(), h.weight()), (Some(12), 8));
        assert_eq!((b.n(), b.k(), b.d()), (23, 12, 7));

        let s = golay_spec(GolayVariant::TernarySystematic);
        assert_eq!(s.parity_check().row(0), &[1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0]);

        let e = golay_spec(GolayVariant::ExtendedTernary);
        assert_eq!((e.parity_check().rows(), e.parity_check().cols()), (6, 12));
        for i in 0..6 {
            let block = &e.parity_check().row(i)[6..];
            assert_eq!(block.iter().filter(|&&v| v != 0).count(), 1);
            assert_eq!(block[i], 1);
        }
    }

    #[test]
    fn generator_for_trivial_code_is_empty() {
        let h = FieldMatrix::identity(gf(3), 5);
        let g = generator_from_parity(&h, 0).unwrap();
        assert_eq!(g.rows(), 0);
        assert!(matches!(
            generator_from_parity(&h, 1),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn rank_deficient_parity_check_rejected() {
        let h = FieldMatrix::from_signed_rows(gf(2), &[[1i64, 1, 0], [1, 1, 0]]).unwrap();
        assert!(matches!(
            CodeSpec::new("bad", h, 1, None),
            Err(Error::RankDeficient { rank: 1, expected: 2 })
        ));
    }

    #[test]
    fn ternary_golay_weights() {
        let spec = golay_spec(GolayVariant::TernarySystematic);
        let g = spec.generator().unwrap();
        assert_eq!((g.rows(), g.cols()), (6, 11));
        let words = spec.codewords().unwrap();
        assert_eq!(words.len(), 729);
        assert!(words.iter().filter(|w| !w.is_zero()).all(|w| w.weight() >= 5));
        assert_eq!(spec.minimum_distance().unwrap(), 5);
    }

    #[test]
    fn sphere_packing_counts() {
        assert_eq!(sphere_volume(2, 23, 3), Some(2048));
        assert_eq!(sphere_volume(3, 11, 2), Some(243));
        assert_eq!(sphere_volume(2, 7, 1), Some(8));
        assert_eq!(perfect_radius(2, 23, 12), Some(3));
        assert_eq!(perfect_radius(3, 11, 6), Some(2));
        assert_eq!(perfect_radius(3, 13, 10), Some(1));
        assert_eq!(perfect_radius(2, 6, 3), None);
    }

    #[test]
    fn systematic_round_trip() {
        let spec = golay_spec(GolayVariant::TernarySystematic);
        let p = spec.systematic_part().unwrap();
        assert_eq!((p.rows(), p.cols()), (6, 5));
        let again = CodeSpec::from_systematic("again", &p).unwrap();
        assert_eq!(again.parity_check(), spec.parity_check());
        assert_eq!(again.d(), 5);
        assert!(golay_spec(GolayVariant::Ternary).systematic_part().is_none());
    }

    #[test]
    fn shortened_hamming_is_not_perfect() {
        let spec = hamming_7_4_systematic().shorten(0).unwrap();
        assert_eq!((spec.n(), spec.k()), (6, 3));
        assert_eq!(spec.d(), 3);
        assert_eq!(spec.perfect_radius(), None);
    }
}
