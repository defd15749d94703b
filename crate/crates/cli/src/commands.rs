use serde::{Deserialize, Serialize};

use real_hardy::factorization::{
    inner_outer, outer_defect, riesz_factorize, riesz_truncation_degree, DiskFunction, FactorizationResult,
    RationalDiskFunction, RieszFactorization,
};
use real_hardy::interpolation::{
    cf_solve, np_solvable_real, np_solve, np_solve_real, pick_matrix, verify_interpolant, verify_taylor, CfProblem,
    InterpolationProblem, PickReport, VerificationReport,
};
use real_hardy::linalg::{hermitian_eigenvalues, spectral_norm};
use real_hardy::subspace::{classify, generate_invariant, ClassificationResult, ShiftPowers, UNDETERMINED_FIT};
use real_hardy::szego::{geometric_mean, szego_ls, szego_ls_complex, Weight};
use real_hardy::{Complex64 as C64, Error, FourierPoly};

use crate::{render, Check, CliError, Command, Outcome, RunConfig, Status};

/// Largest `| |f| − 1 |` over the configured grid.
fn unimodular_defect(f: &impl DiskFunction, m: usize) -> f64 {
    f.boundary_samples(m)
        .samples()
        .iter()
        .map(|s| (s.norm() - 1.0).abs())
        .fold(0.0, f64::max)
}

fn grid_sup(f: &impl DiskFunction, m: usize) -> f64 {
    f.boundary_samples(m).max_abs()
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizeInput {
    pub f: FourierPoly,
}

pub fn factorize(input: FactorizeInput, config: &RunConfig) -> Result<Outcome, CliError> {
    let r: FactorizationResult = inner_outer(&input.f, &config.tolerances)?;
    let tol = config.check_tol;
    let mut checks = vec![
        Check::at_most("reconstruction", r.residual / input.f.norm_l2(), tol),
        Check::at_most("inner_unimodular", unimodular_defect(&r.inner, config.grid_size), tol),
    ];
    if r.boundary_zeros.is_empty() {
        checks.push(Check::at_most("outer_mean_log", outer_defect(&r.outer, config.grid_size).abs(), tol));
    }
    if input.f.is_real_type(0.0) {
        checks.push(Check::flag("real_type", r.real_type));
    }
    Ok(render(Command::Factorize, config, &input, r, checks, None))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RieszInput {
    pub f: FourierPoly,
    #[serde(default)]
    pub degree: Option<usize>,
}

pub fn riesz(input: RieszInput, config: &RunConfig) -> Result<Outcome, CliError> {
    let degree = match input.degree.or(config.degree) {
        Some(d) => d,
        None => riesz_truncation_degree(&inner_outer(&input.f, &config.tolerances)?),
    };
    let r: RieszFactorization = riesz_factorize(&input.f, degree, &config.tolerances)?;
    let tol = config.check_tol;
    let hi = input.f.hi().unwrap_or(0);
    let product = (&r.f1 * &r.f2).truncate(hi);
    let checks = vec![
        Check::at_most("norm_chain", r.norm_gap() / r.l1_norm, tol),
        Check::at_most("product", product.max_coeff_diff(&input.f) / input.f.max_abs_coeff(), tol),
    ];
    Ok(render(Command::Riesz, config, &input, r, checks, None))
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NpInput {
    pub nodes: Vec<C64>,
    pub values: Vec<C64>,
    /// Require real Taylor coefficients.
    #[serde(default = "default_true")]
    pub real: bool,
}

#[derive(Debug, Serialize)]
struct ClassicalPick {
    min_eigenvalue: f64,
    threshold: f64,
    psd: bool,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
enum PickSummary {
    Real(PickReport),
    Classical(ClassicalPick),
}

#[derive(Debug, Serialize)]
struct NpOutput {
    solvable: bool,
    pick: PickSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    interpolant: Option<RationalDiskFunction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    taylor: Option<FourierPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation_error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<VerificationReport>,
}

pub fn np(input: NpInput, config: &RunConfig) -> Result<Outcome, CliError> {
    let problem = InterpolationProblem::new(input.nodes.clone(), input.values.clone())?;
    let tol = config.check_tol;
    let (pick, solution) = if input.real {
        let report = np_solvable_real(&problem, &config.tolerances);
        let solution = if report.solvable {
            match np_solve_real(&problem, &config.tolerances) {
                Ok(s) => Some((s.rational, Some(s.taylor), Some(s.truncation_error))),
                Err(Error::NotSolvable { .. }) => None,
                Err(e) => return Err(e.into()),
            }
        } else {
            None
        };
        (PickSummary::Real(report), solution)
    } else {
        let p = pick_matrix(&input.nodes, &input.values)?;
        let min_eigenvalue = hermitian_eigenvalues(&p).first().copied().unwrap_or(0.0);
        let threshold = -config.tolerances.psd_tol * spectral_norm(&p).max(1.0);
        let psd = min_eigenvalue >= threshold;
        let solution = match np_solve(&input.nodes, &input.values, &config.tolerances) {
            Ok(f) => Some((f, None, None)),
            Err(Error::NotSolvable { .. }) => None,
            Err(e) => return Err(e.into()),
        };
        (PickSummary::Classical(ClassicalPick { min_eigenvalue, threshold, psd }), solution)
    };
    let Some((f, taylor, truncation_error)) = solution else {
        let output = NpOutput {
            solvable: false,
            pick,
            interpolant: None,
            taylor: None,
            truncation_error: None,
            verification: None,
        };
        return Ok(render(Command::Np, config, &input, output, Vec::new(), Some(Status::NotSolvable)));
    };
    let verification = verify_interpolant(&f, &problem, tol);
    let mut checks = vec![
        Check::at_most("interpolation", verification.max_residual, tol),
        Check::at_most("sup_norm", grid_sup(&f, config.grid_size) - 1.0, tol),
    ];
    if input.real {
        checks.push(Check::flag("real_type", verification.real_type));
    }
    let output = NpOutput {
        solvable: true,
        pick,
        interpolant: Some(f),
        taylor,
        truncation_error,
        verification: Some(verification),
    };
    Ok(render(Command::Np, config, &input, output, checks, None))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CfInput {
    pub taylor: Vec<C64>,
}

#[derive(Debug, Serialize)]
struct CfOutput {
    contraction: bool,
    toeplitz_norm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    schur_parameters: Option<Vec<C64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    solution: Option<RationalDiskFunction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verification: Option<VerificationReport>,
}

pub fn cf(input: CfInput, config: &RunConfig) -> Result<Outcome, CliError> {
    let problem = CfProblem::new(input.taylor.clone())?;
    let s = match cf_solve(&problem, &config.tolerances) {
        Ok(s) => s,
        Err(Error::NotContraction { norm }) => {
            let output = CfOutput {
                contraction: false,
                toeplitz_norm: norm,
                schur_parameters: None,
                solution: None,
                verification: None,
            };
            return Ok(render(Command::Cf, config, &input, output, Vec::new(), Some(Status::NotContraction)));
        }
        Err(e) => return Err(e.into()),
    };
    let tol = config.check_tol;
    let verification = verify_taylor(&s.rational, &problem, tol);
    let mut checks = vec![
        Check::at_most("taylor_coefficients", verification.max_residual, tol),
        Check::at_most("sup_norm", grid_sup(&s.rational, config.grid_size) - 1.0, tol),
    ];
    if problem.is_real() {
        checks.push(Check::flag("real_type", verification.real_type));
    }
    let output = CfOutput {
        contraction: true,
        toeplitz_norm: s.toeplitz_norm,
        schur_parameters: Some(s.schur_parameters),
        solution: Some(s.rational),
        verification: Some(verification),
    };
    Ok(render(Command::Cf, config, &input, output, checks, None))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SzegoInput {
    /// Samples on an equispaced grid.
    #[serde(default)]
    pub weight: Option<Vec<f64>>,
    /// Real trigonometric polynomial sampled on the configured grid.
    #[serde(default)]
    pub weight_poly: Option<FourierPoly>,
    #[serde(default)]
    pub degree: Option<usize>,
}

#[derive(Debug, Serialize)]
struct SzegoOutput {
    grid_size: usize,
    degree: usize,
    infimum: f64,
    geometric_mean: f64,
    gap: f64,
    coefficients: Vec<f64>,
    complex_infimum: f64,
}

pub fn szego(input: SzegoInput, config: &RunConfig) -> Result<Outcome, CliError> {
    let samples = match (&input.weight, &input.weight_poly) {
        (Some(w), None) => w.clone(),
        (None, Some(p)) => p.samples(config.grid_size).samples().iter().map(|s| s.re).collect(),
        _ => {
            return Err(CliError::Schema {
                path: ".".into(),
                message: "exactly one of `weight` and `weight_poly` is required".into(),
            })
        }
    };
    let w = Weight::with_tolerance(samples, config.tolerances.eq_tol)?;
    let degree = input.degree.or(config.degree).unwrap_or((w.len() / 4).min(32));
    let real = szego_ls(&w, degree)?;
    let complex = szego_ls_complex(&w, degree)?;
    let gm = geometric_mean(&w);
    let tol = config.check_tol;
    let scale = real.infimum.abs().max(1.0);
    let checks = vec![
        Check::at_most("geometric_mean_bound", (gm - real.infimum) / scale, tol),
        Check::at_most("real_vs_complex", (real.infimum - complex.infimum).abs() / scale, tol),
    ];
    let output = SzegoOutput {
        grid_size: w.len(),
        degree,
        infimum: real.infimum,
        geometric_mean: gm,
        gap: real.infimum - gm,
        coefficients: real.coefficients,
        complex_infimum: complex.infimum,
    };
    Ok(render(Command::Szego, config, &input, output, checks, None))
}

fn default_powers() -> ShiftPowers {
    ShiftPowers::One
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceInput {
    pub generators: Vec<FourierPoly>,
    #[serde(default = "default_powers")]
    pub powers: ShiftPowers,
    #[serde(default)]
    pub budget: Option<usize>,
}

#[derive(Debug, Serialize)]
struct SubspaceOutput {
    budget: usize,
    safe_degree: usize,
    classification: ClassificationResult,
}

pub fn subspace(input: SubspaceInput, config: &RunConfig) -> Result<Outcome, CliError> {
    let budget = input.budget.or(config.degree).unwrap_or(64);
    let m = generate_invariant(&input.generators, input.powers, budget)?;
    let r = classify(&m, &config.tolerances)?;
    let checks = vec![Check::at_most("model_fit", r.fit, UNDETERMINED_FIT)];
    let output = SubspaceOutput {
        budget,
        safe_degree: m.safe_degree(),
        classification: r,
    };
    Ok(render(Command::Subspace, config, &input, output, checks, None))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "lowercase")]
pub enum VerifyProblem {
    Np {
        nodes: Vec<C64>,
        values: Vec<C64>,
    },
    Cf {
        taylor: Vec<C64>,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RationalInput {
    pub num: FourierPoly,
    #[serde(default = "FourierPoly::one")]
    pub den: FourierPoly,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifyInput {
    pub problem: VerifyProblem,
    pub solution: RationalInput,
    /// Also require real Taylor coefficients.
    #[serde(default)]
    pub require_real: bool,
}

pub fn verify(input: VerifyInput, config: &RunConfig) -> Result<Outcome, CliError> {
    let f = RationalDiskFunction::new(input.solution.num.clone(), input.solution.den.clone())?;
    let tol = config.check_tol;
    let report = match &input.problem {
        VerifyProblem::Np { nodes, values } => {
            verify_interpolant(&f, &InterpolationProblem::new(nodes.clone(), values.clone())?, tol)
        }
        VerifyProblem::Cf { taylor } => verify_taylor(&f, &CfProblem::new(taylor.clone())?, tol),
    };
    let mut checks = vec![
        Check::at_most("residual", report.max_residual, tol),
        Check::at_most("sup_norm", report.sup_norm - 1.0, tol),
    ];
    if input.require_real {
        checks.push(Check::flag("real_type", report.real_type));
    }
    Ok(render(Command::Verify, config, &input, report, checks, None))
}
