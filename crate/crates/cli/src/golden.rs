//! Published reference values for the transforms the CLI can build, keyed by
//! code family, field and form. All of them hold for `λ = 1`.

use perfect_ntt::reference::{self, matrix};
use perfect_ntt::{FieldMatrix, FieldPoly};

use crate::{Family, Form};

#[derive(Default)]
pub struct Golden {
    pub matrix: Option<FieldMatrix>,
    pub inverse: Option<FieldMatrix>,
    pub det: Option<u32>,
    pub order: Option<u64>,
    pub char_poly: Option<FieldPoly>,
}

pub fn lookup(family: Family, p: u32, m: usize, form: Form, lambda: u32) -> Option<Golden> {
    if lambda != 1 {
        return None;
    }
    let golden = match (family, p, form) {
        (Family::Hamming, 2, Form::Standard) if m == 3 => Golden {
            matrix: Some(matrix(2, &reference::HAMMING_7_4_TRANSFORM)),
            ..Golden::default()
        },
        (Family::Hamming, 3, Form::Standard) if m == 3 => Golden {
            matrix: Some(matrix(3, &reference::TERNARY_HAMMING_TRANSFORM)),
            ..Golden::default()
        },
        (Family::Hamming, 2, Form::Cyclic) if m == 3 => Golden {
            matrix: Some(matrix(2, &reference::CYCLIC_HAMMING_TRANSFORM)),
            ..Golden::default()
        },
        (Family::Golay, 2, Form::Cyclic) => Golden {
            matrix: Some(matrix(2, &reference::BINARY_GOLAY_TRANSFORM)),
            det: Some(1),
            ..Golden::default()
        },
        (Family::Golay, 3, Form::Cyclic) => Golden {
            matrix: Some(matrix(3, &reference::TERNARY_GOLAY_TRANSFORM)),
            order: Some(reference::TERNARY_GOLAY_ORDER),
            char_poly: Some(reference::ternary_golay_char_poly()),
            ..Golden::default()
        },
        (Family::Golay, 3, Form::Standard | Form::Appendix) => Golden {
            matrix: Some(matrix(3, &reference::TERNARY_GOLAY_SYSTEMATIC_TRANSFORM)),
            det: Some(2),
            char_poly: Some(reference::poly(3, &reference::TERNARY_GOLAY_SYSTEMATIC_CHAR_POLY)),
            ..Golden::default()
        },
        (Family::ExtendedGolay, 3, Form::Standard) => Golden {
            matrix: Some(matrix(3, &reference::EXTENDED_GOLAY_TRANSFORM)),
            inverse: Some(matrix(3, &reference::EXTENDED_GOLAY_INVERSE)),
            det: Some(2),
            ..Golden::default()
        },
        _ => return None,
    };
    Some(golden)
}
