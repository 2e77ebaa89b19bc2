//! Randomized checks of the transform properties: linearity, time and
//! frequency shift, constant sequences, impulse response and invertibility.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{TransformForm, TransformSpec};
use crate::error::Result;
use crate::gf::PrimeModulus;
use crate::matrix::FieldVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not applicable to this transform form.
    Skipped,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Skipped => "SKIP",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub expected: String,
    pub got: String,
}

impl PropertyCheck {
    fn new(name: &'static str, passed: bool, expected: impl Into<String>, got: impl Into<String>) -> Self {
        Self {
            name,
            status: if passed { CheckStatus::Pass } else { CheckStatus::Fail },
            expected: expected.into(),
            got: got.into(),
        }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        Self {
            name,
            status: CheckStatus::Skipped,
            expected: why.to_string(),
            got: "-".to_string(),
        }
    }
}

impl fmt::Display for PropertyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CHECK {} {} expected={} got={}",
            self.name, self.status, self.expected, self.got
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    /// True when nothing failed. Skipped checks do not count against the report.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

fn random_vector(rng: &mut ChaCha8Rng, p: PrimeModulus, n: usize) -> FieldVector {
    let entries = (0..n).map(|_| rng.gen_range(0..p.get())).collect();
    FieldVector::from_residues(p, entries).expect("sampled below p")
}

pub(super) fn verify(t: &TransformSpec, trials: usize, seed: u64) -> Result<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = t.modulus();
    let n = t.n();
    let cyclic = t.form() == TransformForm::Cyclic && t.matrix().is_circulant();
    let mut checks = Vec::new();

    // i) linearity
    let mut failures = 0;
    for _ in 0..trials {
        let v = random_vector(&mut rng, p, n);
        let w = random_vector(&mut rng, p, n);
        let a = rng.gen_range(0..p.get());
        let b = rng.gen_range(0..p.get());
        let lhs = t.apply(&v.scale(a).add(&w.scale(b))?)?;
        let rhs = t.apply(&v)?.scale(a).add(&t.apply(&w)?.scale(b))?;
        failures += usize::from(lhs != rhs);
    }
    checks.push(PropertyCheck::new(
        "linearity",
        failures == 0,
        format!("{trials}/{trials}"),
        format!("{}/{trials}", trials - failures),
    ));

    // ii) time shift and iii) frequency shift, every m for every sample
    if cyclic {
        let mut time_fail = 0;
        let mut freq_fail = 0;
        let mut conv_fail = 0;
        for _ in 0..trials {
            let v = random_vector(&mut rng, p, n);
            let big_v = t.apply(&v)?;
            let spectrum = random_vector(&mut rng, p, n);
            let back = t.apply_inverse(&spectrum)?;
            for m in 0..n {
                time_fail += usize::from(t.apply(&v.rotate(m))? != big_v.rotate(m));
                freq_fail += usize::from(t.apply_inverse(&spectrum.rotate(m))? != back.rotate(m));
            }
            conv_fail += usize::from(t.apply_cyclic(&v)? != big_v);
        }
        let total = trials * n;
        checks.push(PropertyCheck::new(
            "time_shift",
            time_fail == 0,
            format!("{total}/{total}"),
            format!("{}/{total}", total - time_fail),
        ));
        checks.push(PropertyCheck::new(
            "frequency_shift",
            freq_fail == 0,
            format!("{total}/{total}"),
            format!("{}/{total}", total - freq_fail),
        ));
        checks.push(PropertyCheck::new(
            "cyclic_convolution",
            conv_fail == 0,
            format!("{trials}/{trials}"),
            format!("{}/{trials}", trials - conv_fail),
        ));
    } else {
        for name in ["time_shift", "frequency_shift", "cyclic_convolution"] {
            checks.push(PropertyCheck::skipped(name, "circulant"));
        }
    }

    // iv) constant sequences map to constants r·s, s = row sum
    if cyclic {
        let s = t.row_sum();
        let mut ok = true;
        for r in p.elements() {
            let out = t.apply(&FieldVector::constant(p, n, r.value()))?;
            ok &= out == FieldVector::constant(p, n, p.mul(r.value(), s));
        }
        // the row sum should equal h(1) + λ when the parity polynomial is known
        let mut expected = format!("row_sum={s}");
        if let Some(h) = t.source().parity_poly() {
            let h1 = h.eval(p.one())?.value();
            let predicted = p.add(h1, t.lambda().value());
            ok &= predicted == s;
            let weight_formula = p.reduce(h.weight() as i64);
            expected = format!("h(1)+lambda={predicted},r*weight(h)={weight_formula}");
        }
        checks.push(PropertyCheck::new(
            "constant_sequence",
            ok,
            expected,
            format!("row_sum={s}"),
        ));
    } else {
        checks.push(PropertyCheck::skipped("constant_sequence", "circulant"));
    }

    // v) impulse response is column 0
    let response = t.apply(&FieldVector::impulse(p, n))?;
    let column = t.matrix().column(0);
    let mut impulse_ok = response == column;
    if let Some(poly) = t.impulse_polynomial() {
        impulse_ok &= poly.to_vector(n) == column;
    }
    checks.push(PropertyCheck::new(
        "impulse",
        impulse_ok,
        format!("[{column}]"),
        format!("[{response}]"),
    ));

    // inverse round trip
    let mut rt_fail = 0;
    for _ in 0..trials {
        let v = random_vector(&mut rng, p, n);
        rt_fail += usize::from(t.apply_inverse(&t.apply(&v)?)? != v);
    }
    checks.push(PropertyCheck::new(
        "round_trip",
        rt_fail == 0,
        format!("{trials}/{trials}"),
        format!("{}/{trials}", trials - rt_fail),
    ));

    Ok(PropertyReport { checks })
}
