//! Transforms built from parity-check matrices.
//!
//! The parity-check matrix `H` of an `(N, k)` code is inflated to a square
//! `H_e` by appending `k` rows, and the transform is `T = H_e + λ·I`. Since
//! every codeword `c` satisfies `H_e·c = 0`, it also satisfies `T·c = λ·c`:
//! the code lies in the `λ`-eigenspace of `T`. When the rows of `H_e` span the
//! same space as the rows of `H`, the eigenspace is exactly the code.

mod properties;

use std::fmt;
use std::str::FromStr;

pub use properties::{CheckStatus, PropertyCheck, PropertyReport};

use crate::codes::{golay_spec, CodeSpec, GolayVariant};
use crate::error::{Error, Result};
use crate::gf::{FieldElement, PrimeModulus};
use crate::matrix::{FieldMatrix, FieldVector};
use crate::poly::{circulant_from_first_row, CyclicRing, FieldPoly};
use crate::reference::EXTENDED_GOLAY_COMBINATIONS;

/// How a transform matrix was assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformForm {
    /// `H` stacked on `k` zero rows.
    StandardNullRows,
    /// `H` stacked on `k` sums of pairs of its own rows.
    StandardCombo,
    /// Circulant built from shifts of the parity polynomial.
    Cyclic,
    /// Block formula for a systematic `H = [−Pᵀ | I]`.
    AppendixSystematic,
}

impl TransformForm {
    pub fn tag(self) -> &'static str {
        match self {
            Self::StandardNullRows => "standard_nullrow",
            Self::StandardCombo => "standard_combo",
            Self::Cyclic => "cyclic",
            Self::AppendixSystematic => "appendix_systematic",
        }
    }
}

impl fmt::Display for TransformForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TransformForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard_nullrow" => Ok(Self::StandardNullRows),
            "standard_combo" => Ok(Self::StandardCombo),
            "cyclic" => Ok(Self::Cyclic),
            "appendix_systematic" => Ok(Self::AppendixSystematic),
            other => Err(Error::Parse(format!("unknown transform form {other:?}"))),
        }
    }
}

/// Which `k` rows are appended to `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InflationStrategy {
    NullRows,
    /// One new row `H[a] + H[b]` per pair, 0-based.
    RowCombinations(Vec<(usize, usize)>),
    /// All `N` cyclic shifts of the reversed parity polynomial.
    CyclicShifts,
}

/// Builds `H_e` for a code.
pub fn inflate(spec: &CodeSpec, strategy: &InflationStrategy) -> Result<FieldMatrix> {
    let h = spec.parity_check();
    let p = spec.modulus();
    match strategy {
        InflationStrategy::NullRows => h.vstack(&FieldMatrix::zeros(p, spec.k(), spec.n())),
        InflationStrategy::RowCombinations(pairs) => {
            if pairs.len() != spec.k() {
                return Err(Error::InvalidStrategy(format!(
                    "{} row combinations supplied, {} needed",
                    pairs.len(),
                    spec.k()
                )));
            }
            let mut rows = Vec::with_capacity(pairs.len());
            for &(a, b) in pairs {
                if a >= h.rows() || b >= h.rows() {
                    return Err(Error::InvalidStrategy(format!(
                        "row pair ({a}, {b}) out of range for {} parity rows",
                        h.rows()
                    )));
                }
                rows.push(h.row_vector(a).add(&h.row_vector(b))?);
            }
            h.vstack(&FieldMatrix::from_row_vectors(p, spec.n(), &rows))
        }
        InflationStrategy::CyclicShifts => {
            let poly = spec.parity_poly().ok_or_else(|| {
                Error::InvalidStrategy(format!("{} has no parity polynomial", spec.label()))
            })?;
            Ok(circulant_from_first_row(&poly.reversed_vector(spec.n())))
        }
    }
}

/// A transform matrix together with the code it was built from.
///
/// Immutable once built; the inverse is computed eagerly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformSpec {
    matrix: FieldMatrix,
    inverse: FieldMatrix,
    inflated: FieldMatrix,
    lambda: FieldElement,
    form: TransformForm,
    source: CodeSpec,
}

fn check_lambda(spec: &CodeSpec, lambda: FieldElement) -> Result<()> {
    if lambda.modulus() != spec.modulus() {
        return Err(Error::ModulusMismatch {
            left: spec.modulus().get(),
            right: lambda.modulus().get(),
        });
    }
    Ok(())
}

impl TransformSpec {
    fn assemble(
        matrix: FieldMatrix,
        inflated: FieldMatrix,
        lambda: FieldElement,
        form: TransformForm,
        source: CodeSpec,
    ) -> Result<Self> {
        let inverse = matrix.inverse().map_err(|e| match e {
            Error::Singular => Error::EigenvalueUnsuitable {
                lambda: lambda.value(),
                p: lambda.modulus().get(),
            },
            other => other,
        })?;
        Ok(Self {
            matrix,
            inverse,
            inflated,
            lambda,
            form,
            source,
        })
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &FieldMatrix {
        &self.inverse
    }

    /// `H_e = T − λ·I`.
    pub fn inflated(&self) -> &FieldMatrix {
        &self.inflated
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn form(&self) -> TransformForm {
        self.form
    }

    pub fn source(&self) -> &CodeSpec {
        &self.source
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.matrix.modulus()
    }

    pub fn n(&self) -> usize {
        self.matrix.rows()
    }

    pub fn determinant(&self) -> FieldElement {
        self.matrix.determinant().expect("transform matrices are square")
    }

    /// Canonical basis of the `λ'`-eigenspace, the kernel of `T − λ'·I`.
    pub fn eigenspace(&self, lambda: FieldElement) -> Result<FieldMatrix> {
        if lambda.modulus() != self.modulus() {
            return Err(Error::ModulusMismatch {
                left: self.modulus().get(),
                right: lambda.modulus().get(),
            });
        }
        let shifted = self
            .matrix
            .add_scalar_identity(self.modulus().neg(lambda.value()))?;
        Ok(shifted.kernel_basis())
    }

    /// Whether the `λ`-eigenspace is exactly the source code.
    pub fn eigenspace_is_code(&self) -> Result<bool> {
        Ok(self.eigenspace(self.lambda)? == self.source.parity_check().kernel_basis())
    }

    /// Sphere-packing test on the dimension of the `λ`-eigenspace.
    pub fn is_perfect(&self) -> Result<Perfectness> {
        let dimension = self.eigenspace(self.lambda)?.rows();
        let radius = crate::codes::perfect_radius(self.modulus().get(), self.n(), dimension);
        Ok(Perfectness {
            perfect: radius.is_some(),
            radius,
            dimension,
        })
    }

    pub fn apply(&self, v: &FieldVector) -> Result<FieldVector> {
        self.matrix.mul_vec(v)
    }

    pub fn apply_inverse(&self, v: &FieldVector) -> Result<FieldVector> {
        self.inverse.mul_vec(v)
    }

    /// Forward transform of a circulant as a cyclic convolution: `V(x) =
    /// v(x)·c(x) mod x^N − 1`, where `c(x)` holds the first column of `T`.
    pub fn apply_cyclic(&self, v: &FieldVector) -> Result<FieldVector> {
        if !self.matrix.is_circulant() {
            return Err(Error::Unsupported(format!(
                "{} transform is not circulant",
                self.form
            )));
        }
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch {
                op: "cyclic transform",
                left: format!("length {}", self.n()),
                right: format!("vector of length {}", v.len()),
            });
        }
        let ring = CyclicRing::new(self.modulus(), self.n())?;
        let kernel = FieldPoly::from_vector(&self.matrix.column(0));
        let out = ring.mul(&FieldPoly::from_vector(v), &kernel)?;
        Ok(out.to_vector(self.n()))
    }

    /// For cyclic transforms, `λ + x^{N−k}·h(x) mod x^N − 1`: the polynomial
    /// whose coefficients form the first column of `T`.
    pub fn impulse_polynomial(&self) -> Option<FieldPoly> {
        if self.form != TransformForm::Cyclic {
            return None;
        }
        let h = self.source.parity_poly()?;
        let n = self.n();
        let ring = CyclicRing::new(self.modulus(), n).ok()?;
        let shifted = ring.mul(h, &ring.x_pow(n - self.source.k())).ok()?;
        let lambda = FieldPoly::monomial(self.modulus(), 0, self.lambda.value());
        shifted.add(&lambda).ok()
    }

    /// Sum of the entries of row 0.
    pub fn row_sum(&self) -> u32 {
        let p = self.modulus();
        self.matrix.row(0).iter().fold(0, |acc, &v| p.add(acc, v))
    }

    /// Randomized property checks; see [`PropertyReport`].
    pub fn verify_properties(&self, trials: usize, seed: u64) -> Result<PropertyReport> {
        properties::verify(self, trials, seed)
    }
}

/// Outcome of the sphere-packing test on an eigenspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perfectness {
    pub perfect: bool,
    /// The `t ≥ 1` meeting the bound with equality.
    pub radius: Option<usize>,
    /// Dimension of the `λ`-eigenspace.
    pub dimension: usize,
}

/// `T = H_e + λ·I` with `H_e` from `strategy`.
pub fn build_standard(
    spec: &CodeSpec,
    lambda: FieldElement,
    strategy: &InflationStrategy,
) -> Result<TransformSpec> {
    check_lambda(spec, lambda)?;
    let inflated = inflate(spec, strategy)?;
    let matrix = inflated.add_scalar_identity(lambda.value())?;
    let form = match strategy {
        InflationStrategy::NullRows => TransformForm::StandardNullRows,
        InflationStrategy::RowCombinations(_) => TransformForm::StandardCombo,
        InflationStrategy::CyclicShifts => TransformForm::Cyclic,
    };
    TransformSpec::assemble(matrix, inflated, lambda, form, spec.clone())
}

/// Circulant transform: row `i` is `x^i·[h(x) + λ]`, laid out with the
/// reversed coefficients of `h` and `λ` on the diagonal.
pub fn build_cyclic(spec: &CodeSpec, lambda: FieldElement) -> Result<TransformSpec> {
    build_standard(spec, lambda, &InflationStrategy::CyclicShifts)
}

/// 12×12 transform from the extended ternary Golay code, inflated with the
/// row combinations in [`EXTENDED_GOLAY_COMBINATIONS`].
pub fn build_extended_golay(lambda: FieldElement) -> Result<TransformSpec> {
    build_standard(
        &golay_spec(GolayVariant::ExtendedTernary),
        lambda,
        &InflationStrategy::RowCombinations(EXTENDED_GOLAY_COMBINATIONS.to_vec()),
    )
}

/// Transform for a systematic code `H = [−Pᵀ | I]`, with `P` of shape `k×(N−k)`:
///
/// ```text
/// [ λI_{(N−k)×k} − Pᵀ   I_{N−k} ]
/// [ 0_{k×(N−k)}         λI_k    ]
/// ```
pub fn build_appendix_systematic(p_block: &FieldMatrix, lambda: FieldElement) -> Result<TransformSpec> {
    let p = p_block.modulus();
    if lambda.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: p.get(),
            right: lambda.modulus().get(),
        });
    }
    if lambda.is_zero() {
        return Err(Error::EigenvalueUnsuitable {
            lambda: 0,
            p: p.get(),
        });
    }
    let (k, r) = (p_block.rows(), p_block.cols());
    let n = k + r;
    let l = lambda.value();
    let mut t = FieldMatrix::zeros(p, n, n);
    for i in 0..r {
        for j in 0..k {
            let diag = if i == j { l } else { 0 };
            t.set(i, j, p.sub(diag, p_block.get(j, i)));
        }
        t.set(i, k + i, 1);
    }
    for i in r..n {
        t.set(i, i, l);
    }
    let source = CodeSpec::from_systematic(format!("systematic({n},{k})"), p_block)?;
    let inflated = t.add_scalar_identity(p.neg(l))?;
    TransformSpec::assemble(t, inflated, lambda, TransformForm::AppendixSystematic, source)
}

/// `det(H_e + λ·I)` for one candidate eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenCandidate {
    pub lambda: FieldElement,
    pub det: FieldElement,
}

impl EigenCandidate {
    pub fn is_valid(&self) -> bool {
        !self.det.is_zero()
    }
}

/// Evaluates every `λ ∈ GF(p)`, including 0; the valid ones have `det ≠ 0`.
pub fn eigen_candidates(spec: &CodeSpec, strategy: &InflationStrategy) -> Result<Vec<EigenCandidate>> {
    let inflated = inflate(spec, strategy)?;
    spec.modulus()
        .elements()
        .map(|lambda| {
            let det = inflated.add_scalar_identity(lambda.value())?.determinant()?;
            Ok(EigenCandidate { lambda, det })
        })
        .collect()
}
