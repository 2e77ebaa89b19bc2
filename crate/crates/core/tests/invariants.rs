use perfect_ntt::codes::{cyclic_hamming, golay_spec, GolayVariant};
use perfect_ntt::poly::circulant_from_first_row;
use perfect_ntt::textio::{matrix_to_json, matrix_to_text, parse_matrix};
use perfect_ntt::transforms::{build_cyclic, build_standard};
use perfect_ntt::{
    CyclicRing, FieldMatrix, FieldPoly, FieldVector, InflationStrategy, PrimeModulus,
    TransformSpec,
};
use proptest::prelude::*;

fn gf(p: u32) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7])
}

fn square(p: u32, n: usize) -> impl Strategy<Value = FieldMatrix> {
    prop::collection::vec(0..p, n * n).prop_map(move |e| {
        let rows: Vec<Vec<i64>> = e.chunks(n).map(|r| r.iter().map(|&v| v.into()).collect()).collect();
        FieldMatrix::from_signed_rows(gf(p), &rows).unwrap()
    })
}

fn rect(p: u32, r: usize, c: usize) -> impl Strategy<Value = FieldMatrix> {
    prop::collection::vec(0..p, r * c).prop_map(move |e| {
        let rows: Vec<Vec<i64>> = e.chunks(c).map(|x| x.iter().map(|&v| v.into()).collect()).collect();
        FieldMatrix::from_signed_rows(gf(p), &rows).unwrap()
    })
}

fn poly(p: u32, max_len: usize) -> impl Strategy<Value = FieldPoly> {
    prop::collection::vec(0..p, 0..=max_len).prop_map(move |c| FieldPoly::from_residues(gf(p), c))
}

fn vector(p: u32, n: usize) -> impl Strategy<Value = FieldVector> {
    prop::collection::vec(0..p, n).prop_map(move |e| FieldVector::from_residues(gf(p), e).unwrap())
}

fn cyclic_transforms() -> Vec<TransformSpec> {
    let mut out = vec![
        build_cyclic(&cyclic_hamming(gf(2), 3).unwrap(), gf(2).one()).unwrap(),
        build_cyclic(&cyclic_hamming(gf(2), 4).unwrap(), gf(2).one()).unwrap(),
        build_cyclic(&golay_spec(GolayVariant::Binary), gf(2).one()).unwrap(),
    ];
    let ternary = golay_spec(GolayVariant::Ternary);
    for lambda in [1, 2] {
        out.push(build_cyclic(&ternary, gf(3).element(lambda)).unwrap());
    }
    out
}

proptest! {
    #[test]
    fn det_is_multiplicative((a, b) in (prime(), 1usize..=5).prop_flat_map(|(p, n)| (square(p, n), square(p, n)))) {
        let p = a.modulus();
        let lhs = a.mul(&b).unwrap().determinant().unwrap().value();
        let rhs = p.mul(a.determinant().unwrap().value(), b.determinant().unwrap().value());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_plus_nullity(a in (prime(), 1usize..=5, 1usize..=7).prop_flat_map(|(p, r, c)| rect(p, r, c))) {
        let kernel = a.kernel_basis();
        prop_assert_eq!(a.rank() + kernel.rows(), a.cols());
        prop_assert_eq!(a.rank(), a.transpose().rank());
        for v in kernel.row_vectors() {
            prop_assert!(a.mul_vec(&v).unwrap().is_zero());
        }
        // canonical form: the kernel basis is already reduced
        prop_assert_eq!(kernel.row_space_basis(), kernel);
    }

    #[test]
    fn cayley_hamilton(a in (prime(), 1usize..=6).prop_flat_map(|(p, n)| square(p, n))) {
        let cp = a.char_poly().unwrap();
        prop_assert_eq!(cp.degree(), Some(a.rows()));
        prop_assert!(a.eval_poly(&cp).unwrap().is_zero());
        // constant term is (−1)^n det
        let det = a.determinant().unwrap().value();
        let p = a.modulus();
        let expected = if a.rows() % 2 == 0 { det } else { p.neg(det) };
        prop_assert_eq!(cp.coeff(0), expected);
    }

    #[test]
    fn inverse_when_nonsingular(a in (prime(), 1usize..=6).prop_flat_map(|(p, n)| square(p, n))) {
        let det = a.determinant().unwrap();
        match a.inverse() {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                prop_assert_eq!(a.mul(&inv).unwrap(), FieldMatrix::identity(a.modulus(), a.rows()));
            }
            Err(_) => prop_assert!(det.is_zero()),
        }
    }

    #[test]
    fn div_rem_recombines((a, b) in prop::sample::select(vec![2u32, 3]).prop_flat_map(|p| (poly(p, 12), poly(p, 6)))) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).unwrap().add(&r).unwrap(), a);
        if let Some(dr) = r.degree() {
            prop_assert!(dr < b.degree().unwrap());
        }
    }

    #[test]
    fn cyclic_ring_laws(
        (n, a, b, c) in (prime(), 1usize..=12).prop_flat_map(|(p, n)| (Just(n), poly(p, n), poly(p, n), poly(p, n)))
    ) {
        let ring = CyclicRing::new(a.modulus(), n).unwrap();
        let (a, b, c) = (ring.reduce(&a), ring.reduce(&b), ring.reduce(&c));
        prop_assert_eq!(ring.mul(&a, &b).unwrap(), ring.mul(&b, &a).unwrap());
        let ab_c = ring.mul(&ring.mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = ring.mul(&a, &ring.mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let mut shifted = a.clone();
        for _ in 0..n {
            shifted = ring.mul(&ring.x_pow(1), &shifted).unwrap();
        }
        prop_assert_eq!(shifted, a);
    }

    #[test]
    fn circulant_entries(row in (prime(), 1usize..=10).prop_flat_map(|(p, n)| vector(p, n))) {
        let n = row.len();
        let m = circulant_from_first_row(&row);
        prop_assert!(m.is_circulant());
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(m.get(i, j), row.entries()[(j + n - i) % n]);
            }
        }
    }

    #[test]
    fn circulant_singular_iff_common_factor(row in (prime(), 1usize..=11).prop_flat_map(|(p, n)| vector(p, n))) {
        let n = row.len();
        let p = row.modulus();
        let m = circulant_from_first_row(&row);
        // column 0 of the circulant, as a polynomial, is what multiplies v
        let c = FieldPoly::from_vector(&m.column(0));
        let singular = m.determinant().unwrap().is_zero();
        let common = c.is_zero() || c.gcd(&FieldPoly::x_pow_minus_one(p, n)).unwrap().degree() != Some(0);
        prop_assert_eq!(singular, common);
    }

    #[test]
    fn rotation_has_period_n(v in (prime(), 1usize..=12).prop_flat_map(|(p, n)| vector(p, n)), m in 0usize..30) {
        let n = v.len();
        prop_assert_eq!(v.rotate(n), v.clone());
        prop_assert_eq!(v.rotate(m).rotate(n - m % n), v);
    }

    #[test]
    fn matrix_text_round_trip(a in (prime(), 0usize..=4, 1usize..=5).prop_flat_map(|(p, r, c)| rect(p, r, c))) {
        prop_assert_eq!(parse_matrix(&matrix_to_text(&a)).unwrap(), a.clone());
        if a.rows() > 0 {
            prop_assert_eq!(parse_matrix(&matrix_to_json(&a)).unwrap(), a);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclic_transforms_commute_with_shifts(seed in any::<u64>(), m in 0usize..23) {
        for t in cyclic_transforms() {
            let n = t.n();
            let p = t.modulus();
            let entries = (0..n).map(|i| ((seed >> (i % 60)) as u32 ^ i as u32) % p.get()).collect();
            let v = FieldVector::from_residues(p, entries).unwrap();
            let shift = m % n;
            prop_assert_eq!(t.apply(&v.rotate(shift)).unwrap(), t.apply(&v).unwrap().rotate(shift));
            prop_assert_eq!(t.apply_cyclic(&v).unwrap(), t.apply(&v).unwrap());
            prop_assert_eq!(t.apply_inverse(&t.apply(&v).unwrap()).unwrap(), v);
        }
    }

    #[test]
    fn codewords_are_eigenvectors(coeffs in prop::collection::vec(0u32..3, 12), lambda in 1u32..3) {
        // random combinations of generator rows, for every construction
        let codes = [
            (golay_spec(GolayVariant::Ternary), InflationStrategy::CyclicShifts),
            (golay_spec(GolayVariant::TernarySystematic), InflationStrategy::NullRows),
            (golay_spec(GolayVariant::Binary), InflationStrategy::CyclicShifts),
        ];
        for (code, strategy) in codes {
            let p = code.modulus();
            let lambda = p.element(i64::from(lambda % p.get()));
            prop_assume!(!lambda.is_zero());
            let t = build_standard(&code, lambda, &strategy).unwrap();
            let g = code.generator().unwrap();
            let mut c = FieldVector::zeros(p, code.n());
            for (row, &a) in g.row_vectors().iter().zip(&coeffs) {
                c = c.add(&row.scale(a % p.get())).unwrap();
            }
            prop_assert_eq!(t.apply(&c).unwrap(), c.scale(lambda.value()));
        }
    }
}
