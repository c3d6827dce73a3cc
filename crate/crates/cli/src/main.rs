//! Command-line front end for the exact homotopy BV / Yang-Mills checker.
//!
//! Exit status: 0 all requested checks pass, 1 a check failed, 2 the input
//! could not be parsed or validated, 3 an internal invariant was breached.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use lzbv::maurer_cartan::{
    covariant_ym_residual, decompose, embed, gauge_residual_variation, gauge_transform,
    gmc_symmetry_residual, mc_residual, recombination_residual, subcomplex_differential,
    Decomposition, FieldFile, HeisenbergFile, MCField,
};
use lzbv::{
    apply_q_eta, commutator, heisenberg_ym_residual, run_battery, AlgebraError, CheckReport,
    Eta, LightElement, MatCoeff, Poly, Rat, SamplerConfig, SignCalibration,
};

#[derive(Parser)]
#[command(
    name = "lzbv",
    about = "Exact checker for the light-mode homotopy BV algebra and its Yang-Mills layer"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonFlags {
    /// Emit machine-readable JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CheckFlags {
    /// Base seed for all sampled trials.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Trials per identity.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Number of zero-mode variables D.
    #[arg(long, default_value_t = 2)]
    dimension: usize,
    /// Maximum total degree of sampled polynomial components.
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
    /// Coefficient matrix dimension.
    #[arg(long, default_value_t = 1)]
    matrix_dim: usize,
    /// Print the frozen sign calibration before running.
    #[arg(long)]
    show_calibration: bool,
    #[command(flatten)]
    common: CommonFlags,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full identity battery on seeded random inputs.
    Check(CheckFlags),
    /// Evaluate Maurer-Cartan and covariant Yang-Mills residuals of a field file.
    Ym {
        input: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Apply the first-order gauge transformation described in a field file.
    Gauge {
        input: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Decompose the ghost-1 content of a field file into the three subcomplexes.
    Decompose {
        input: String,
        #[command(flatten)]
        common: CommonFlags,
    },
    /// Evaluate the constant-field residuals of a matrix configuration file.
    Heisenberg {
        input: String,
        #[command(flatten)]
        common: CommonFlags,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Check(flags) => run_check(flags),
        Command::Ym { input, common } => run_ym(input, common),
        Command::Gauge { input, common } => run_gauge(input, common),
        Command::Decompose { input, common } => run_decompose(input, common),
        Command::Heisenberg { input, common } => run_heisenberg(input, common),
    };
    match outcome {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                AlgebraError::Parse(_) => ExitCode::from(2),
                AlgebraError::Internal(_) => ExitCode::from(3),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn read_input(path: &str) -> Result<String, AlgebraError> {
    std::fs::read_to_string(path)
        .map_err(|e| AlgebraError::Parse(format!("cannot read `{path}`: {e}")))
}

fn load_field_file(path: &str) -> Result<(FieldFile, MCField, Eta), AlgebraError> {
    let file = FieldFile::parse(&read_input(path)?)?;
    let (psi, eta) = file.to_mc_field()?;
    Ok((file, psi, eta))
}

fn run_check(flags: &CheckFlags) -> Result<bool, AlgebraError> {
    if flags.dimension == 0 || flags.matrix_dim == 0 {
        return Err(AlgebraError::Parse(
            "dimension and matrix-dim must be positive".into(),
        ));
    }
    if flags.show_calibration && !flags.common.json {
        println!("{}", SignCalibration::default().describe());
    }
    let cfg = SamplerConfig {
        seed: flags.seed,
        dimension: flags.dimension,
        max_degree: flags.max_degree,
        matrix_dim: flags.matrix_dim,
        terms_per_component: 2,
        trials: flags.trials,
    };
    let reports = run_battery(&cfg)?;
    let pass = reports.iter().all(|r| r.pass);
    if flags.common.json {
        #[derive(Serialize)]
        struct CheckOutput<'a> {
            calibration: Option<SignCalibration>,
            reports: &'a [CheckReport],
            pass: bool,
        }
        let out = CheckOutput {
            calibration: flags
                .show_calibration
                .then(SignCalibration::default),
            reports: &reports,
            pass,
        };
        println!("{}", to_json(&out)?);
    } else {
        for r in &reports {
            println!("{}", r.line());
        }
    }
    Ok(pass)
}

/// Canonical text form of a possibly-zero polynomial.
fn poly_text(p: &Poly) -> String {
    format!("{p:?}")
}

#[derive(Serialize)]
struct ResidualReport {
    mc_residual: LightElement,
    mc_zero: bool,
    covariant_eq1: Option<Vec<Poly>>,
    covariant_eq2: Option<Vec<Poly>>,
    covariant_zero: Option<bool>,
    recombination_pass: Option<bool>,
}

fn run_ym(input: &str, common: &CommonFlags) -> Result<bool, AlgebraError> {
    let (_, psi, eta) = load_field_file(input)?;
    let mc = mc_residual(&psi, &eta)?;
    let symmetric = eta.is_symmetric() && eta.inverse().is_ok();
    let mut report = ResidualReport {
        mc_zero: mc.is_zero(),
        mc_residual: mc,
        covariant_eq1: None,
        covariant_eq2: None,
        covariant_zero: None,
        recombination_pass: None,
    };
    if symmetric {
        let cov = covariant_ym_residual(&psi, &eta)?;
        let (d1, d2) = recombination_residual(&psi, &eta)?;
        report.covariant_zero = Some(cov.is_zero());
        report.covariant_eq1 = Some(cov.eq1);
        report.covariant_eq2 = Some(cov.eq2);
        report.recombination_pass =
            Some(d1.iter().all(Poly::is_zero) && d2.iter().all(Poly::is_zero));
    }
    let pass = report.recombination_pass.unwrap_or(true);
    if common.json {
        println!("{}", to_json(&report)?);
        return Ok(pass);
    }
    if !symmetric {
        eprintln!(
            "warning: deformation tensor is not symmetric invertible; \
             covariant residuals and the recombination check are skipped"
        );
    }
    println!("MC residual (x2.vec components):");
    for (k, p) in report.mc_residual.x2.vec.comps.iter().enumerate() {
        println!("  A-part[{}] = {}", k + 1, poly_text(p));
    }
    println!("MC residual (x2.form components):");
    for (k, p) in report.mc_residual.x2.form.comps.iter().enumerate() {
        println!("  B-part[{}] = {}", k + 1, poly_text(p));
    }
    println!("MC residual (scalar v2) = {}", poly_text(&report.mc_residual.v2));
    println!(
        "CHECK mc_residual_zero {} trials=1",
        if report.mc_zero { "PASS" } else { "FAIL" }
    );
    if let (Some(eq1), Some(eq2)) = (&report.covariant_eq1, &report.covariant_eq2) {
        for (k, p) in eq1.iter().enumerate() {
            println!("covariant eq1[{}] = {}", k + 1, poly_text(p));
        }
        for (k, p) in eq2.iter().enumerate() {
            println!("covariant eq2[{}] = {}", k + 1, poly_text(p));
        }
        println!(
            "CHECK recombination {} trials=1",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    Ok(pass)
}

fn run_gauge(input: &str, common: &CommonFlags) -> Result<bool, AlgebraError> {
    let (file, psi, eta) = load_field_file(input)?;
    let (alpha, eps) = file.gauge()?.ok_or_else(|| {
        AlgebraError::Parse("field file has no `gauge` entry".into())
    })?;
    let moved = gauge_transform(&psi, &alpha, &eps, &eta)?;
    let certificate = gmc_symmetry_residual(&psi, &alpha, &eta)?;
    let variation = gauge_residual_variation(&psi, &alpha, &eta)?;
    let pass = certificate.is_zero();
    #[derive(Serialize)]
    struct GaugeReport {
        transformed: MCField,
        symmetry_certificate_zero: bool,
        residual_variation_zero: bool,
    }
    let report = GaugeReport {
        symmetry_certificate_zero: pass,
        residual_variation_zero: variation.is_zero(),
        transformed: moved,
    };
    if common.json {
        println!("{}", to_json(&report)?);
        return Ok(pass);
    }
    println!("transformed field (eps = {eps}):");
    for (k, p) in report.transformed.x.vec.comps.iter().enumerate() {
        println!("  A[{}] = {}", k + 1, poly_text(p));
    }
    for (k, p) in report.transformed.x.form.comps.iter().enumerate() {
        println!("  B[{}] = {}", k + 1, poly_text(p));
    }
    println!("  v = {}", poly_text(&report.transformed.v));
    println!(
        "first-order residual variation zero: {}",
        report.residual_variation_zero
    );
    println!(
        "CHECK gauge_symmetry_certificate {} trials=1",
        if pass { "PASS" } else { "FAIL" }
    );
    Ok(pass)
}

fn run_decompose(input: &str, common: &CommonFlags) -> Result<bool, AlgebraError> {
    let (_, psi, eta) = load_field_file(input)?;
    let e = psi.to_element();
    let d = decompose(&e, &eta)?;
    let round_trip = embed(&d, &eta)? == e;
    let intertwines = {
        let lhs = decompose(&apply_q_eta(&e, &eta)?, &eta)?;
        let rhs = subcomplex_differential(&d, &eta)?;
        lhs == rhs
    };
    let pass = round_trip && intertwines;
    #[derive(Serialize)]
    struct DecomposeReport {
        decomposition: Decomposition,
        round_trip: bool,
        intertwines: bool,
    }
    let report = DecomposeReport {
        decomposition: d,
        round_trip,
        intertwines,
    };
    if common.json {
        println!("{}", to_json(&report)?);
        return Ok(pass);
    }
    let d = &report.decomposition;
    println!("long subcomplex:");
    println!("  ghost 0: {}", poly_text(&d.long0));
    for (k, p) in d.long1.comps.iter().enumerate() {
        println!("  ghost 1 [{}]: {}", k + 1, poly_text(p));
    }
    for (k, p) in d.long2.comps.iter().enumerate() {
        println!("  ghost 2 [{}]: {}", k + 1, poly_text(p));
    }
    println!("  ghost 3: {}", poly_text(&d.long3));
    println!("middle subcomplex:");
    for (k, p) in d.mid1.comps.iter().enumerate() {
        println!("  ghost 1 [{}]: {}", k + 1, poly_text(p));
    }
    for (k, p) in d.mid2.comps.iter().enumerate() {
        println!("  ghost 2 [{}]: {}", k + 1, poly_text(p));
    }
    println!("scalar subcomplex:");
    println!("  ghost 1: {}", poly_text(&d.scalar1));
    println!("  ghost 2: {}", poly_text(&d.scalar2));
    println!(
        "CHECK decompose_round_trip {} trials=1",
        if round_trip { "PASS" } else { "FAIL" }
    );
    println!(
        "CHECK decompose_intertwines {} trials=1",
        if intertwines { "PASS" } else { "FAIL" }
    );
    Ok(pass)
}

/// Express `target` as an exact rational linear combination of `basis`
/// matrices plus the identity commutators, when possible. Used only for
/// display: residuals are printed as e.g. "-2 * A_2" when they lie in the
/// span of the input fields.
fn linear_combo(target: &MatCoeff, basis: &[MatCoeff]) -> Option<String> {
    let n = target.dim();
    let cols = basis.len();
    // Row-reduce the (n^2) x (cols+1) system over the rationals.
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row: Vec<Rat> = basis.iter().map(|b| b.entry(i, j).clone()).collect();
            row.push(target.entry(i, j).clone());
            rows.push(row);
        }
    }
    let mut pivot_of_col = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&p| !rows[p][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for p in 0..rows.len() {
            if p != r && !rows[p][c].is_zero() {
                let f = rows[p][c].clone();
                for k in 0..=cols {
                    let sub = &rows[r][k] * &f;
                    rows[p][k] = &rows[p][k] - &sub;
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    // Inconsistent if any zero row has a nonzero right-hand side.
    for row in rows.iter().skip(r) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut parts = Vec::new();
    for (c, pivot) in pivot_of_col.iter().enumerate() {
        let coeff = match pivot {
            Some(p) => rows[*p][cols].clone(),
            None => Rat::zero(),
        };
        if !coeff.is_zero() {
            parts.push(format!("{coeff} * A_{}", c + 1));
        }
    }
    if parts.is_empty() {
        Some("0".to_string())
    } else {
        Some(parts.join(" + "))
    }
}

fn run_heisenberg(input: &str, common: &CommonFlags) -> Result<bool, AlgebraError> {
    let file = HeisenbergFile::parse(&read_input(input)?)?;
    let metric = file.metric()?;
    let fields = file.fields()?;
    let residuals = heisenberg_ym_residual(&fields, &metric)?;
    // Independent cross-check: re-sum the iterated commutators directly.
    let d = fields.len();
    for k in 0..d {
        let mut expect = MatCoeff::zero(file.matrix_dim);
        for i in 0..d {
            for j in 0..d {
                let inner = commutator(&fields[j], &fields[k])?;
                let outer = commutator(&fields[i], &inner)?;
                expect = &expect + &outer.scale(metric.entry(i, j));
            }
        }
        if expect != residuals[k] {
            return Err(AlgebraError::Internal(
                "constant-field residual disagrees with the commutator oracle".into(),
            ));
        }
    }
    #[derive(Serialize)]
    struct HeisenbergReport {
        residuals: Vec<MatCoeff>,
        as_field_combinations: Vec<Option<String>>,
        zero: bool,
    }
    let report = HeisenbergReport {
        as_field_combinations: residuals
            .iter()
            .map(|m| linear_combo(m, &fields))
            .collect(),
        zero: residuals.iter().all(MatCoeff::is_zero),
        residuals,
    };
    if common.json {
        println!("{}", to_json(&report)?);
        return Ok(true);
    }
    for (k, m) in report.residuals.iter().enumerate() {
        match &report.as_field_combinations[k] {
            Some(combo) => println!("residual[{}] = {combo}", k + 1),
            None => println!("residual[{}] = {m:?}", k + 1),
        }
    }
    println!("all residuals zero: {}", report.zero);
    Ok(true)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, AlgebraError> {
    serde_json::to_string_pretty(value).map_err(|e| AlgebraError::Internal(e.to_string()))
}
