//! `pntt`: build, apply and verify transforms derived from perfect codes.

mod golden;

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use perfect_ntt::codes::{
    cyclic_hamming, golay_spec, hamming_7_4_systematic, hamming_parity_check, perfect_radius,
    MAX_ENUMERATED_CODEWORDS,
};
use perfect_ntt::textio::{matrix_to_json, parse_matrix_file, parse_vector, transform_to_text};
use perfect_ntt::transforms::{
    build_appendix_systematic, build_extended_golay, build_standard, eigen_candidates,
    CheckStatus, PropertyCheck,
};
use perfect_ntt::{
    CodeSpec, Error, FieldMatrix, GolayVariant, InflationStrategy, PrimeModulus, TransformSpec,
};

/// Order search in `verify` stops here; the published orders are far below it.
const VERIFY_ORDER_CAP: u64 = 5000;

#[derive(Parser)]
#[command(name = "pntt", version, about = "Number-theoretic transforms from perfect codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the transform matrix of a code.
    Gen {
        #[command(flatten)]
        code: CodeArgs,
        /// Destination file; stdout when omitted.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Emit `{"p":..,"rows":..}` instead of the text form.
        #[arg(long)]
        json: bool,
    },
    /// Compute `T·v`.
    Apply(VectorArgs),
    /// Compute `T⁻¹·v`.
    Invert(VectorArgs),
    /// Tabulate `det(H_e + λI)` for every λ and print the λ-eigenspace basis.
    Eigen {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Run the golden-value and property checks; exits 0 only if all pass.
    Verify {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Print the code parameters, parity polynomial and perfectness witness.
    Info {
        #[command(flatten)]
        code: CodeArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Hamming,
    Golay,
    ExtendedGolay,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Form {
    /// `H` inflated with null rows (row combinations for extended Golay).
    Standard,
    /// Circulant from the parity polynomial.
    Cyclic,
    /// Block formula for a systematic `H = [−Pᵀ | I]`.
    Appendix,
}

#[derive(Args, Clone, Debug)]
struct CodeArgs {
    #[arg(long, value_enum, default_value = "hamming")]
    code: Family,
    /// Field characteristic.
    #[arg(long, default_value_t = 2)]
    p: u32,
    /// Number of parity symbols (Hamming only).
    #[arg(long, default_value_t = 3)]
    m: usize,
    #[arg(long, value_enum, default_value = "standard")]
    form: Form,
    #[arg(long, default_value_t = 1)]
    lambda: u32,
}

#[derive(Args, Clone, Debug)]
struct VectorArgs {
    #[command(flatten)]
    code: CodeArgs,
    /// Read the transform matrix from a file written by `gen` instead of
    /// building it from the code flags.
    #[arg(long, short)]
    input: Option<PathBuf>,
    /// Comma-separated residues, index 0 first.
    #[arg(long)]
    vector: String,
}

impl CodeArgs {
    fn modulus(&self) -> Result<PrimeModulus> {
        Ok(PrimeModulus::new(self.p)?)
    }

    fn spec(&self) -> Result<CodeSpec> {
        let p = self.modulus()?;
        let spec = match (self.code, self.form) {
            (Family::Hamming, Form::Cyclic) => cyclic_hamming(p, self.m)?,
            (Family::Hamming, _) if self.p == 2 && self.m == 3 => hamming_7_4_systematic(),
            (Family::Hamming, _) => hamming_parity_check(p, self.m)?,
            (Family::Golay, Form::Cyclic) => match self.p {
                2 => golay_spec(GolayVariant::Binary),
                3 => golay_spec(GolayVariant::Ternary),
                _ => bail!("Golay codes exist only for p = 2 and p = 3"),
            },
            (Family::Golay, _) => match self.p {
                2 => golay_spec(GolayVariant::Binary),
                3 => golay_spec(GolayVariant::TernarySystematic),
                _ => bail!("Golay codes exist only for p = 2 and p = 3"),
            },
            (Family::ExtendedGolay, Form::Standard) => {
                if self.p != 3 {
                    bail!("the extended Golay transform is defined over GF(3)");
                }
                golay_spec(GolayVariant::ExtendedTernary)
            }
            (Family::ExtendedGolay, form) => {
                bail!("the extended Golay code has no {form:?} form; use --form standard")
            }
        };
        Ok(spec)
    }

    fn strategy(&self) -> InflationStrategy {
        match self.form {
            Form::Cyclic => InflationStrategy::CyclicShifts,
            _ => InflationStrategy::NullRows,
        }
    }

    fn build(&self) -> Result<TransformSpec> {
        let spec = self.spec()?;
        let lambda = self.modulus()?.element(i64::from(self.lambda));
        if self.lambda >= self.p {
            bail!("lambda={} is not a residue of GF({})", self.lambda, self.p);
        }
        let built = match (self.code, self.form) {
            (Family::ExtendedGolay, _) => build_extended_golay(lambda),
            (_, Form::Appendix) => {
                let block = spec
                    .systematic_part()
                    .with_context(|| format!("{} has no systematic parity-check matrix", spec.label()))?;
                build_appendix_systematic(&block, lambda)
            }
            _ => build_standard(&spec, lambda, &self.strategy()),
        };
        built.map_err(|e| match e {
            Error::EigenvalueUnsuitable { lambda, p } => anyhow::anyhow!(
                "lambda={lambda} is unsuitable for {}: T is singular over GF({p})",
                spec.label()
            ),
            other => other.into(),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Gen { code, output, json } => {
            let t = code.build()?;
            let text = if json {
                matrix_to_json(t.matrix()) + "\n"
            } else {
                transform_to_text(&t)
            };
            match output {
                Some(path) => fs::write(&path, text)
                    .with_context(|| format!("writing {}", path.display()))?,
                None => std::io::stdout().write_all(text.as_bytes())?,
            }
        }
        Command::Apply(args) => apply(&args, false)?,
        Command::Invert(args) => apply(&args, true)?,
        Command::Eigen { code } => eigen(&code)?,
        Command::Verify { code, seed, trials } => return verify(&code, seed, trials),
        Command::Info { code } => info(&code)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn apply(args: &VectorArgs, inverse: bool) -> Result<()> {
    let out = match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let m = parse_matrix_file(&text)
                .with_context(|| format!("parsing {}", path.display()))?
                .matrix;
            let m = if inverse {
                m.inverse().context("the matrix in the input file is singular")?
            } else {
                m
            };
            let v = parse_vector(&args.vector, m.modulus())?;
            m.mul_vec(&v)?
        }
        None => {
            let t = args.code.build()?;
            let v = parse_vector(&args.vector, t.modulus())?;
            if inverse {
                t.apply_inverse(&v)?
            } else {
                t.apply(&v)?
            }
        }
    };
    println!("{out}");
    Ok(())
}

fn print_basis(label: &str, basis: &FieldMatrix) {
    println!("{label} dim={}", basis.rows());
    for row in basis.row_vectors() {
        println!("  {row}");
    }
}

fn eigen(code: &CodeArgs) -> Result<()> {
    let spec = code.spec()?;
    // the appendix matrix equals the null-row one, so the table is the same
    let strategy = match code.code {
        Family::ExtendedGolay => InflationStrategy::RowCombinations(
            perfect_ntt::reference::EXTENDED_GOLAY_COMBINATIONS.to_vec(),
        ),
        _ => code.strategy(),
    };
    println!("code {} p={} N={} k={}", spec.label(), code.p, spec.n(), spec.k());
    println!("lambda det valid");
    for c in eigen_candidates(&spec, &strategy)? {
        println!("{} {} {}", c.lambda, c.det, if c.is_valid() { "yes" } else { "no" });
    }
    let t = code.build()?;
    print_basis(&format!("eigenspace lambda={}", t.lambda()), &t.eigenspace(t.lambda())?);
    Ok(())
}

fn info(code: &CodeArgs) -> Result<()> {
    let spec = code.spec()?;
    println!("code {}", spec.label());
    println!("p={} N={} k={} d={}", code.p, spec.n(), spec.k(), spec.d());
    match spec.parity_poly() {
        Some(h) => println!("h(x)={h}"),
        None => println!("h(x)=- (not cyclic)"),
    }
    match spec.perfect_radius() {
        Some(t) => println!("perfect t={t}"),
        None => println!("perfect no"),
    }
    Ok(())
}

fn check(name: &'static str, passed: bool, expected: impl Into<String>, got: impl Into<String>) -> PropertyCheck {
    PropertyCheck {
        name,
        status: if passed { CheckStatus::Pass } else { CheckStatus::Fail },
        expected: expected.into(),
        got: got.into(),
    }
}

fn skipped(name: &'static str, why: &str) -> PropertyCheck {
    PropertyCheck {
        name,
        status: CheckStatus::Skipped,
        expected: why.to_string(),
        got: "-".to_string(),
    }
}

fn verify(code: &CodeArgs, seed: u64, trials: usize) -> Result<ExitCode> {
    let t = code.build()?;
    let spec = t.source();
    let p = t.modulus();
    println!(
        "INFO code={} p={} N={} k={} d={} form={} lambda={}",
        spec.label(),
        p,
        spec.n(),
        spec.k(),
        spec.d(),
        t.form(),
        t.lambda()
    );
    let det = t.determinant();
    println!("INFO det≠0 det={det}");
    match t.matrix().multiplicative_order(VERIFY_ORDER_CAP) {
        Ok(order) => println!("INFO order={order}"),
        Err(_) => println!("INFO order>{VERIFY_ORDER_CAP}"),
    }

    let mut checks = Vec::new();
    checks.push(check("determinant", !det.is_zero(), "det≠0", format!("det={det}")));

    if let Some(g) = golden::lookup(code.code, code.p, code.m, code.form, code.lambda) {
        if let Some(m) = g.matrix {
            let same = &m == t.matrix();
            checks.push(check("golden_matrix", same, "reference", if same { "equal" } else { "differs" }));
        }
        if let Some(inv) = g.inverse {
            let same = &inv == t.inverse();
            checks.push(check("golden_inverse", same, "reference", if same { "equal" } else { "differs" }));
        }
        if let Some(d) = g.det {
            checks.push(check("golden_det", det.value() == d, format!("det={d}"), format!("det={det}")));
        }
        if let Some(order) = g.order {
            let got = t.matrix().multiplicative_order(VERIFY_ORDER_CAP);
            let got_text = match &got {
                Ok(o) => format!("order={o}"),
                Err(e) => e.to_string(),
            };
            checks.push(check("golden_order", got == Ok(order), format!("order={order}"), got_text));
        }
        if let Some(cp) = g.char_poly {
            let got = t.matrix().char_poly()?;
            checks.push(check("golden_char_poly", got == cp, cp.to_string(), got.to_string()));
        }
    }

    let same = t.eigenspace_is_code()?;
    checks.push(check(
        "eigenspace_is_code",
        same,
        format!("dim={}", spec.k()),
        format!("dim={}", t.eigenspace(t.lambda())?.rows()),
    ));

    let perf = t.is_perfect()?;
    let want = perfect_radius(p.get(), spec.n(), spec.k());
    let show = |r: Option<usize>| r.map_or("not-perfect".to_string(), |t| format!("t={t}"));
    checks.push(check(
        "perfectness",
        perf.perfect == want.is_some() && perf.radius == want,
        show(want),
        show(perf.radius),
    ));

    let count = u64::from(p.get()).checked_pow(spec.k() as u32);
    if count.is_some_and(|c| c <= MAX_ENUMERATED_CODEWORDS) {
        let words = spec.codewords()?;
        // T·c = λ·c for every codeword c
        let lambda = t.lambda().value();
        let fixed = words
            .iter()
            .filter(|c| t.apply(c).is_ok_and(|v| v == c.scale(lambda)))
            .count();
        checks.push(check(
            "codeword_invariance",
            fixed == words.len(),
            format!("{}/{}", words.len(), words.len()),
            format!("{fixed}/{}", words.len()),
        ));
    } else {
        checks.push(skipped("codeword_invariance", "too-many-codewords"));
    }

    checks.extend(t.verify_properties(trials, seed)?.checks);

    let mut failed = 0;
    for c in &checks {
        println!("{c}");
        failed += usize::from(c.status == CheckStatus::Fail);
    }
    println!("SUMMARY {} checks, {failed} failed", checks.len());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}
