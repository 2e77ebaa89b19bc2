//! Number-theoretic transforms over GF(p) built from perfect linear block codes.
//!
//! A transform is obtained by inflating an `(N−k)×N` parity-check matrix `H`
//! to a square matrix `H_e` and adding `λ·I`. Every codeword of the source code
//! is then an eigenvector of the transform with eigenvalue `λ`, and for the
//! Hamming and Golay codes the eigenspace is exactly the (perfect) code.
//!
//! Modules, bottom up:
//! - [`gf`]: prime field arithmetic
//! - [`poly`]: polynomials, the cyclic ring mod `x^N − 1`, circulants
//! - [`matrix`]: dense linear algebra over GF(p)
//! - [`codes`]: Hamming and Golay parity-check data
//! - [`transforms`]: transform construction, eigenspaces, perfectness, property checks
//! - [`textio`]: matrix text/JSON formats and headers

pub mod codes;
pub mod error;
pub mod gf;
pub mod matrix;
pub mod poly;
pub mod reference;
pub mod textio;
pub mod transforms;

pub use codes::{CodeSpec, GolayVariant};
pub use error::{Error, Result};
pub use gf::{FieldElement, PrimeModulus};
pub use matrix::{FieldMatrix, FieldVector};
pub use poly::{CyclicRing, FieldPoly};
pub use transforms::{InflationStrategy, TransformForm, TransformSpec};
