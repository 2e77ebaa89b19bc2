//! Dense vectors and matrices over GF(p).
//!
//! Everything here is exact. Elimination picks the first nonzero entry
//! scanning top-down as the pivot, so reduced forms (and therefore kernel
//! bases) are deterministic and comparable with `==`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, PrimeModulus};
use crate::poly::FieldPoly;

/// Default iteration cap for [`FieldMatrix::multiplicative_order`].
pub const DEFAULT_ORDER_CAP: u64 = 1_000_000;

/// A vector over GF(p), index 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldVector {
    modulus: PrimeModulus,
    entries: Vec<u32>,
}

impl FieldVector {
    pub fn zeros(modulus: PrimeModulus, len: usize) -> Self {
        Self {
            modulus,
            entries: vec![0; len],
        }
    }

    /// Builds a vector from signed integers, reducing each one mod p.
    pub fn from_signed(modulus: PrimeModulus, values: &[i64]) -> Self {
        Self {
            modulus,
            entries: values.iter().map(|&v| modulus.reduce(v)).collect(),
        }
    }

    /// Builds a vector from residues, rejecting anything outside `[0, p)`.
    pub fn from_residues(modulus: PrimeModulus, entries: Vec<u32>) -> Result<Self> {
        if let Some(bad) = entries.iter().find(|&&v| v >= modulus.get()) {
            return Err(Error::Parse(format!(
                "entry {bad} is not a residue mod {modulus}"
            )));
        }
        Ok(Self { modulus, entries })
    }

    pub fn from_elements(modulus: PrimeModulus, elements: &[FieldElement]) -> Result<Self> {
        let mut entries = Vec::with_capacity(elements.len());
        for e in elements {
            if e.modulus() != modulus {
                return Err(Error::ModulusMismatch {
                    left: modulus.get(),
                    right: e.modulus().get(),
                });
            }
            entries.push(e.value());
        }
        Ok(Self { modulus, entries })
    }

    /// `(1, 0, ..., 0)`.
    pub fn impulse(modulus: PrimeModulus, len: usize) -> Self {
        let mut v = Self::zeros(modulus, len);
        if len > 0 {
            v.entries[0] = 1;
        }
        v
    }

    pub fn constant(modulus: PrimeModulus, len: usize, value: u32) -> Self {
        Self {
            modulus,
            entries: vec![value % modulus.get(); len],
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> FieldElement {
        self.modulus.element(self.entries[i] as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Hamming weight: number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.entries.iter().filter(|&&v| v != 0).count()
    }

    /// Cyclic shift right by `m`: entry `i` moves to `(i + m) mod N`.
    pub fn rotate(&self, m: usize) -> Self {
        let mut entries = self.entries.clone();
        if !entries.is_empty() {
            let m = m % entries.len();
            entries.rotate_right(m);
        }
        Self {
            modulus: self.modulus,
            entries,
        }
    }

    fn check(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                op,
                left: format!("vector of length {}", self.len()),
                right: format!("vector of length {}", other.len()),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other, "vector addition")?;
        let p = self.modulus;
        Ok(Self {
            modulus: p,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.modulus;
        Self {
            modulus: p,
            entries: self.entries.iter().map(|&a| p.mul(a, c)).collect(),
        }
    }

    pub fn dot(&self, other: &Self) -> Result<u32> {
        self.check(other, "dot product")?;
        let p = self.modulus;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(0, |acc, (&a, &b)| p.add(acc, p.mul(a, b))))
    }
}

impl fmt::Display for FieldVector {
    /// Comma-separated residues, the same form the CLI accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FieldMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

/// A dense, row-major matrix over GF(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    modulus: PrimeModulus,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FieldMatrix {
    pub fn zeros(modulus: PrimeModulus, rows: usize, cols: usize) -> Self {
        Self {
            modulus,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(modulus: PrimeModulus, n: usize) -> Self {
        Self::scalar(modulus, n, 1)
    }

    /// `c·I_n`.
    pub fn scalar(modulus: PrimeModulus, n: usize, c: u32) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        let c = c % modulus.get();
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Builds a matrix from rows of signed integers; `-1` becomes `p - 1`.
    pub fn from_signed_rows<R: AsRef<[i64]>>(modulus: PrimeModulus, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    op: "matrix construction",
                    left: format!("row 0 of length {cols}"),
                    right: format!("row {i} of length {}", row.len()),
                });
            }
            data.extend(row.iter().map(|&v| modulus.reduce(v)));
        }
        Ok(Self {
            modulus,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds a matrix from a fixed-size table, as used by the reference data.
    pub fn from_table<const C: usize>(modulus: PrimeModulus, table: &[[i8; C]]) -> Self {
        let data = table
            .iter()
            .flat_map(|row| row.iter().map(|&v| modulus.reduce(v as i64)))
            .collect();
        Self {
            modulus,
            rows: table.len(),
            cols: C,
            data,
        }
    }

    pub fn from_row_vectors(modulus: PrimeModulus, cols: usize, rows: &[FieldVector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend_from_slice(r.entries());
        }
        Self {
            modulus,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.modulus.get();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> FieldVector {
        FieldVector {
            modulus: self.modulus,
            entries: self.row(i).to_vec(),
        }
    }

    pub fn column(&self, j: usize) -> FieldVector {
        FieldVector {
            modulus: self.modulus,
            entries: (0..self.rows).map(|i| self.get(i, j)).collect(),
        }
    }

    pub fn row_vectors(&self) -> Vec<FieldVector> {
        (0..self.rows).map(|i| self.row_vector(i)).collect()
    }

    /// Rows as plain integer lists, for serialization and display.
    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.modulus, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        if self.cols != other.cols {
            return Err(self.mismatch("vstack", other));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Self {
            modulus: self.modulus,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        if self.rows != other.rows {
            return Err(self.mismatch("hstack", other));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Self {
            modulus: self.modulus,
            rows: self.rows,
            cols,
            data,
        })
    }

    /// Columns `range` of every row.
    pub fn column_slice(&self, range: std::ops::Range<usize>) -> Self {
        let cols = range.len();
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(&self.row(i)[range.clone()]);
        }
        Self {
            modulus: self.modulus,
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Drops column `j`.
    pub fn without_column(&self, j: usize) -> Self {
        let mut data = Vec::with_capacity(self.rows * (self.cols - 1));
        for i in 0..self.rows {
            for (c, &v) in self.row(i).iter().enumerate() {
                if c != j {
                    data.push(v);
                }
            }
        }
        Self {
            modulus: self.modulus,
            rows: self.rows,
            cols: self.cols - 1,
            data,
        }
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            })
        }
    }

    fn shape(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    fn mismatch(&self, op: &'static str, other: &Self) -> Error {
        Error::DimensionMismatch {
            op,
            left: self.shape(),
            right: other.shape(),
        }
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch("matrix addition", other));
        }
        let p = self.modulus;
        Ok(Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(self.mismatch("matrix subtraction", other));
        }
        let p = self.modulus;
        Ok(Self {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| p.sub(a, b))
                .collect(),
            ..self.clone()
        })
    }

    /// `self + c·I`.
    pub fn add_scalar_identity(&self, c: u32) -> Result<Self> {
        let n = self.require_square()?;
        let p = self.modulus;
        let mut out = self.clone();
        for i in 0..n {
            out.data[i * n + i] = p.add(out.data[i * n + i], c % p.get());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        if self.cols != other.rows {
            return Err(self.mismatch("matrix product", other));
        }
        let p = self.modulus;
        let (n, m) = (self.rows, other.cols);
        let mut out = Self::zeros(p, n, m);
        for i in 0..n {
            // accumulate in u64 and reduce once per entry
            let mut acc = vec![0u64; m];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a as u64 * b as u64;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.data[i * m + j] = (v % p.get() as u64) as u32;
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &FieldVector) -> Result<FieldVector> {
        if self.modulus != v.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: v.modulus.get(),
            });
        }
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                op: "matrix-vector product",
                left: self.shape(),
                right: format!("vector of length {}", v.len()),
            });
        }
        let p = self.modulus.get() as u64;
        let entries = (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(&v.entries)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect();
        Ok(FieldVector {
            modulus: self.modulus,
            entries,
        })
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let n = self.require_square()?;
        let mut base = self.clone();
        let mut acc = Self::identity(self.modulus, n);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivot_columns = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = p.inv(m.get(r, c)).expect("pivot is nonzero");
            m.scale_row(r, inv);
            for i in 0..m.rows {
                if i != r {
                    let f = m.get(i, c);
                    if f != 0 {
                        m.sub_row_multiple(i, r, f);
                    }
                }
            }
            pivot_columns.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: r,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the reduced row echelon form: a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Self {
        let Rref { reduced, rank, .. } = self.rref();
        Self {
            modulus: self.modulus,
            rows: rank,
            cols: self.cols,
            data: reduced.data[..rank * self.cols].to_vec(),
        }
    }

    /// Canonical basis of the right null space `{v : A·v = 0}`, one vector per row.
    ///
    /// The basis is returned in reduced row echelon form, so two matrices have
    /// the same kernel exactly when their kernel bases compare equal.
    pub fn kernel_basis(&self) -> Self {
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = self.rref();
        let p = self.modulus;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_columns {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(p, free.len(), self.cols);
        for (b, &f) in free.iter().enumerate() {
            basis.data[b * self.cols + f] = 1;
            for (r, &pc) in pivot_columns.iter().enumerate() {
                basis.data[b * self.cols + pc] = p.neg(reduced.get(r, f));
            }
        }
        basis.row_space_basis()
    }

    pub fn determinant(&self) -> Result<FieldElement> {
        let n = self.require_square()?;
        let p = self.modulus;
        let mut m = self.clone();
        let mut det = 1u32;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return Ok(p.zero());
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = p.neg(det);
            }
            let pivot = m.get(c, c);
            det = p.mul(det, pivot);
            let inv = p.inv(pivot)?;
            for i in c + 1..n {
                let f = m.get(i, c);
                if f != 0 {
                    m.sub_row_multiple(i, c, p.mul(f, inv));
                }
            }
        }
        Ok(p.element(det as i64))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square()?;
        let aug = self.hstack(&Self::identity(self.modulus, n))?;
        let Rref { reduced, rank, .. } = aug.rref();
        if rank < n || (0..n).any(|i| reduced.get(i, i) != 1) {
            return Err(Error::Singular);
        }
        Ok(reduced.column_slice(n..2 * n))
    }

    /// Characteristic polynomial `det(x·I − A)` by Berkowitz's division-free algorithm.
    ///
    /// Each step extends the leading principal submatrix by one row and column
    /// and multiplies the running coefficient vector by a lower-triangular
    /// Toeplitz matrix. No field inverses are taken, so the result is valid in
    /// every characteristic.
    pub fn char_poly(&self) -> Result<FieldPoly> {
        let n = self.require_square()?;
        let p = self.modulus;
        // descending coefficients of the char poly of the leading r×r block
        let mut coeffs = vec![1u32];
        for r in 0..n {
            let mut toeplitz = vec![0u32; r + 2];
            toeplitz[0] = 1;
            toeplitz[1] = p.neg(self.get(r, r));
            // v runs through M^k·C for the leading block M and column C
            let mut v: Vec<u32> = (0..r).map(|i| self.get(i, r)).collect();
            for slot in toeplitz.iter_mut().skip(2) {
                let rv = (0..r).fold(0, |acc, j| p.add(acc, p.mul(self.get(r, j), v[j])));
                *slot = p.neg(rv);
                v = (0..r)
                    .map(|i| (0..r).fold(0, |acc, j| p.add(acc, p.mul(self.get(i, j), v[j]))))
                    .collect();
            }
            let mut next = vec![0u32; r + 2];
            for (i, out) in next.iter_mut().enumerate() {
                for (j, &c) in coeffs.iter().enumerate().take(i + 1) {
                    *out = p.add(*out, p.mul(toeplitz[i - j], c));
                }
            }
            coeffs = next;
        }
        coeffs.reverse();
        Ok(FieldPoly::from_residues(p, coeffs))
    }

    /// Evaluates a polynomial at this matrix (Horner's rule with matrix products).
    pub fn eval_poly(&self, poly: &FieldPoly) -> Result<Self> {
        let n = self.require_square()?;
        let mut acc = Self::zeros(self.modulus, n, n);
        for &c in poly.coeffs().iter().rev() {
            acc = acc.mul(self)?.add_scalar_identity(c)?;
        }
        Ok(acc)
    }

    /// Smallest `e ≥ 1` with `A^e = I`, found by iterated multiplication up to `cap`.
    pub fn multiplicative_order(&self, cap: u64) -> Result<u64> {
        let n = self.require_square()?;
        if self.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
        let id = Self::identity(self.modulus, n);
        let mut acc = self.clone();
        for e in 1..=cap {
            if acc == id {
                return Ok(e);
            }
            acc = acc.mul(self)?;
        }
        Err(Error::OrderNotFound { cap })
    }

    /// True when every row is the cyclic right shift of the row above it.
    pub fn is_circulant(&self) -> bool {
        let n = self.rows;
        self.is_square()
            && (0..n).all(|i| (0..n).all(|j| self.get(i, j) == self.get(0, (j + n - i) % n)))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, r: usize, c: u32) {
        let p = self.modulus;
        for v in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *v = p.mul(*v, c);
        }
    }

    /// row[target] -= f · row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, f: u32) {
        let p = self.modulus;
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j];
            let t = &mut self.data[target * self.cols + j];
            *t = p.sub(*t, p.mul(f, s));
        }
    }
}
