//! Published reference constructions, stored verbatim.
//!
//! Matrices keep their printed entries, including `-1` for the extended
//! ternary Golay data; convert with [`FieldMatrix::from_table`], which reduces
//! every entry into `[0, p)`. Polynomials are ascending coefficient lists.

use crate::gf::PrimeModulus;
use crate::matrix::FieldMatrix;
use crate::poly::FieldPoly;

/// Parity polynomial x^4+x^2+x+1 of the cyclic binary (7,4,3) Hamming code.
pub const CYCLIC_HAMMING_PARITY_POLY: [i8; 5] = [1, 1, 1, 0, 1];

/// Parity polynomial x^12+x^11+x^10+x^9+x^8+x^5+x^2+1 of the binary (23,12,7) Golay code.
pub const BINARY_GOLAY_PARITY_POLY: [i8; 13] = [1, 0, 1, 0, 0, 1, 0, 0, 1, 1, 1, 1, 1];

/// Parity polynomial x^6+2x^5+2x^4+2x^3+x^2+1 of the ternary (11,6,5) Golay code.
pub const TERNARY_GOLAY_PARITY_POLY: [i8; 7] = [1, 0, 1, 2, 2, 2, 1];

/// Row combinations (0-based) that inflate the extended Golay parity-check
/// matrix: l1+l2, l1+l3, l1+l4, l1+l5, l1+l6, l2+l3.
pub const EXTENDED_GOLAY_COMBINATIONS: [(usize, usize); 6] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2)];

/// Multiplicative order of [`TERNARY_GOLAY_TRANSFORM`].
pub const TERNARY_GOLAY_ORDER: u64 = 242;

/// Linear factor 2+x of the cyclic ternary Golay characteristic polynomial (sixth power).
pub const TERNARY_GOLAY_CHAR_LINEAR: [i8; 2] = [2, 1];

/// Quintic factor 1+x+x^2+x^3+2x^4+x^5 of the cyclic ternary Golay characteristic polynomial.
pub const TERNARY_GOLAY_CHAR_QUINTIC: [i8; 6] = [1, 1, 1, 1, 2, 1];

/// Characteristic polynomial of [`TERNARY_GOLAY_SYSTEMATIC_TRANSFORM`]:
/// 1+2x^3+2x^4+x^5+2x^6+2x^7+x^8+x^9+2x^10+x^11.
pub const TERNARY_GOLAY_SYSTEMATIC_CHAR_POLY: [i8; 12] = [1, 0, 0, 2, 2, 1, 2, 2, 1, 1, 2, 1];

pub fn poly(p: u32, coeffs: &[i8]) -> FieldPoly {
    let p = PrimeModulus::new(p).expect("reference moduli are prime");
    FieldPoly::from_signed(p, &coeffs.iter().map(|&c| c as i64).collect::<Vec<_>>())
}

pub fn matrix<const C: usize>(p: u32, table: &[[i8; C]]) -> FieldMatrix {
    FieldMatrix::from_table(PrimeModulus::new(p).expect("reference moduli are prime"), table)
}

/// (2+x)^6·(1+x+x^2+x^3+2x^4+x^5) expanded over GF(3).
pub fn ternary_golay_char_poly() -> FieldPoly {
    let linear = poly(3, &TERNARY_GOLAY_CHAR_LINEAR);
    let mut acc = poly(3, &TERNARY_GOLAY_CHAR_QUINTIC);
    for _ in 0..6 {
        acc = acc.mul(&linear).expect("same field");
    }
    acc
}

/// Parity-check matrix of the binary (7,4,3) Hamming code used by the standard construction.
pub const HAMMING_7_4_PARITY: [[i8; 7]; 3] = [
    [1, 1, 0, 1, 1, 0, 0],
    [1, 1, 1, 0, 0, 1, 0],
    [1, 0, 1, 1, 0, 0, 1],
];

/// Standard binary Hamming transform, null-row inflation, eigenvalue 1.
pub const HAMMING_7_4_TRANSFORM: [[i8; 7]; 7] = [
    [0, 1, 0, 1, 1, 0, 0],
    [1, 0, 1, 0, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1],
];

/// Generator matrix whose row space is the eigenspace of [`HAMMING_7_4_TRANSFORM`].
pub const HAMMING_7_4_GENERATOR: [[i8; 7]; 4] = [
    [1, 1, 0, 0, 0, 0, 1],
    [1, 1, 1, 0, 0, 1, 0],
    [1, 0, 1, 0, 1, 0, 0],
    [0, 1, 1, 1, 0, 0, 0],
];

/// Parity-check matrix of the ternary (13,10,3) Hamming code.
pub const TERNARY_HAMMING_PARITY: [[i8; 13]; 3] = [
    [0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2],
    [1, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2],
];

/// Ternary Hamming transform, null-row inflation, eigenvalue 1.
pub const TERNARY_HAMMING_TRANSFORM: [[i8; 13]; 13] = [
    [1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 2, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2],
    [1, 0, 2, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// First three shifts of the reversed parity polynomial x^4+x^2+x+1.
pub const CYCLIC_HAMMING_PARITY: [[i8; 7]; 3] = [
    [1, 0, 1, 1, 1, 0, 0],
    [0, 1, 0, 1, 1, 1, 0],
    [0, 0, 1, 0, 1, 1, 1],
];

/// All seven cyclic shifts of the reversed parity polynomial, before adding the eigenvalue.
pub const CYCLIC_HAMMING_INFLATED: [[i8; 7]; 7] = [
    [1, 0, 1, 1, 1, 0, 0],
    [0, 1, 0, 1, 1, 1, 0],
    [0, 0, 1, 0, 1, 1, 1],
    [1, 0, 0, 1, 0, 1, 1],
    [1, 1, 0, 0, 1, 0, 1],
    [1, 1, 1, 0, 0, 1, 0],
    [0, 1, 1, 1, 0, 0, 1],
];

/// Cyclic binary Hamming transform, eigenvalue 1.
pub const CYCLIC_HAMMING_TRANSFORM: [[i8; 7]; 7] = [
    [0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 1, 1],
    [1, 0, 0, 0, 0, 1, 1],
    [1, 1, 0, 0, 0, 0, 1],
    [1, 1, 1, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0],
];

/// Cyclic binary Golay transform, eigenvalue 1. Determinant 1.
pub const BINARY_GOLAY_TRANSFORM: [[i8; 23]; 23] = [
    [0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 1],
    [1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0],
    [0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0],
    [0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1],
    [1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1],
    [1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
];

/// Cyclic ternary Golay transform, eigenvalue 1. Multiplicative order 242.
pub const TERNARY_GOLAY_TRANSFORM: [[i8; 11]; 11] = [
    [2, 2, 2, 2, 1, 0, 1, 0, 0, 0, 0],
    [0, 2, 2, 2, 2, 1, 0, 1, 0, 0, 0],
    [0, 0, 2, 2, 2, 2, 1, 0, 1, 0, 0],
    [0, 0, 0, 2, 2, 2, 2, 1, 0, 1, 0],
    [0, 0, 0, 0, 2, 2, 2, 2, 1, 0, 1],
    [1, 0, 0, 0, 0, 2, 2, 2, 2, 1, 0],
    [0, 1, 0, 0, 0, 0, 2, 2, 2, 2, 1],
    [1, 0, 1, 0, 0, 0, 0, 2, 2, 2, 2],
    [2, 1, 0, 1, 0, 0, 0, 0, 2, 2, 2],
    [2, 2, 1, 0, 1, 0, 0, 0, 0, 2, 2],
    [2, 2, 2, 1, 0, 1, 0, 0, 0, 0, 2],
];

/// Systematic parity-check matrix of the ternary (11,6,5) Golay code.
pub const TERNARY_GOLAY_SYSTEMATIC_PARITY: [[i8; 11]; 5] = [
    [1, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0],
    [1, 1, 2, 1, 0, 2, 0, 1, 0, 0, 0],
    [1, 2, 1, 0, 1, 2, 0, 0, 1, 0, 0],
    [1, 2, 0, 1, 2, 1, 0, 0, 0, 1, 0],
    [1, 0, 2, 2, 1, 1, 0, 0, 0, 0, 1],
];

/// Ternary Golay transform from the systematic parity-check matrix, null rows, eigenvalue 1. Determinant 2.
pub const TERNARY_GOLAY_SYSTEMATIC_TRANSFORM: [[i8; 11]; 11] = [
    [2, 1, 1, 2, 2, 0, 1, 0, 0, 0, 0],
    [1, 2, 2, 1, 0, 2, 0, 1, 0, 0, 0],
    [1, 2, 2, 0, 1, 2, 0, 0, 1, 0, 0],
    [1, 2, 0, 2, 2, 1, 0, 0, 0, 1, 0],
    [1, 0, 2, 2, 2, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// Published parity-check matrix of the extended ternary Golay code, with -1
/// entries. Row 4 is not orthogonal to rows 0-3; replacing its last `1` of
/// the left block with `-1` would give the self-dual (12,6,6) code. The
/// printed transform and inverse depend on the matrix exactly as printed.
pub const EXTENDED_GOLAY_PARITY: [[i8; 12]; 6] = [
    [0, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0, 0],
    [-1, 0, -1, 1, 1, -1, 0, 1, 0, 0, 0, 0],
    [-1, -1, 0, -1, 1, 1, 0, 0, 1, 0, 0, 0],
    [-1, 1, -1, 0, -1, 1, 0, 0, 0, 1, 0, 0],
    [-1, 1, 1, -1, 0, 1, 0, 0, 0, 0, 1, 0],
    [-1, -1, 1, 1, -1, 0, 0, 0, 0, 0, 0, 1],
];

/// Extended ternary Golay transform, eigenvalue 1. Determinant 2.
pub const EXTENDED_GOLAY_TRANSFORM: [[i8; 12]; 12] = [
    [1, -1, -1, -1, -1, -1, 1, 0, 0, 0, 0, 0],
    [-1, 1, -1, 1, 1, -1, 0, 1, 0, 0, 0, 0],
    [-1, -1, 1, -1, 1, 1, 0, 0, 1, 0, 0, 0],
    [-1, 1, -1, 1, -1, 1, 0, 0, 0, 1, 0, 0],
    [-1, 1, 1, -1, 1, 1, 0, 0, 0, 0, 1, 0],
    [-1, -1, 1, 1, -1, 1, 0, 0, 0, 0, 0, 1],
    [-1, -1, 1, 0, 0, 1, -1, 1, 0, 0, 0, 0],
    [-1, 1, -1, 1, 0, 0, 1, 1, 1, 0, 0, 0],
    [-1, 0, 1, -1, 1, 0, 1, 0, 1, 1, 0, 0],
    [-1, 0, 0, 1, -1, 0, 1, 0, 0, 1, 1, 0],
    [-1, 1, 0, 0, 1, -1, 1, 0, 0, 0, 1, 1],
    [1, -1, -1, 0, -1, 0, 0, 1, 1, 0, 0, 1],
];

/// Inverse of [`EXTENDED_GOLAY_TRANSFORM`] over GF(3).
pub const EXTENDED_GOLAY_INVERSE: [[i8; 12]; 12] = [
    [1, 0, -1, 1, 1, 1, 0, -1, 1, 1, 1, 1],
    [-1, 1, 0, 1, -1, 0, 0, -1, 1, 1, 0, 0],
    [0, 1, -1, 0, 1, -1, -1, -1, 1, -1, 0, 1],
    [0, 1, 0, 0, 0, -1, 1, -1, -1, 1, -1, -1],
    [1, 1, 0, -1, 1, 1, 0, -1, 1, 0, -1, 0],
    [-1, -1, -1, 0, 0, 0, 1, 1, 1, -1, 1, -1],
    [-1, 0, -1, -1, 0, 1, 1, 1, -1, -1, 1, 1],
    [0, 1, 0, 1, -1, 0, -1, -1, -1, 0, 1, -1],
    [0, 1, -1, 0, 1, 0, 1, 1, 1, -1, 0, 0],
    [1, 1, -1, 0, 1, -1, 0, 1, -1, -1, 0, 1],
    [-1, -1, 1, 1, 1, 0, 1, 0, -1, 0, 0, 0],
    [-1, 1, 1, 1, 0, -1, -1, 1, -1, 0, 0, -1],
];
