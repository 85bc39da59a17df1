//! Command implementations. Each command resolves its settings (flag, then
//! config file, then default), does its work and hands one buffer to a
//! single writer.

use std::f64::consts::TAU;
use std::fs;
use std::io::Write;
use std::path::Path;

use hypinterp::kernel::{
    disk_grid, gram_assemble, interpolation_constant_estimate, kernel_agreement, kernel_diag_check, standard_kernel,
    ConstantEstimate, DiagCheck, KernelSpec, Provenance,
};
use hypinterp::quadrature::QuadratureRule;
use hypinterp::seqan::{
    classify, decompose, generate_lattice, greedy_net, CenterStrategy, ClassificationVerdict, ClassifyParams,
    SequenceSet, SweepParams, SweepPlan, Verdict,
};
use hypinterp::verify::{pj_suite, poisson_jensen_residual, PJ_NODES};
use hypinterp::weights::WeightModel;
use hypinterp::{Complex, Domain};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{check_border_grid, check_delta, check_puncture_grid, FileConfig};
use crate::error::CliError;
use crate::seqfile::{domain_tag, parse_sequence_file, render_sequence};
use crate::spec::{GenSpec, WeightSpec};
use crate::{AnalyzeArgs, Cli, Command, CommonArgs, DensityArgs, GenArgs, GramArgs, KernelArgs, PjArgs, SweepArgs};

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// `analyze` could not decide.
    Indeterminate,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Indeterminate => 2,
        }
    }
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Analyze(a) => analyze(&a),
        Command::Sweep(a) => sweep(&a),
        Command::Gram(a) => gram(&a),
        Command::PjVerify(a) => pj_verify(&a),
        Command::KernelCheck(a) => kernel_check(&a),
        Command::Gen(a) => gen(&a),
    }
}

fn load_config(common: &CommonArgs) -> Result<FileConfig, CliError> {
    match &common.config {
        Some(path) => FileConfig::load(path),
        None => Ok(FileConfig::default()),
    }
}

fn emit(common: &CommonArgs, file: &FileConfig, bytes: &[u8]) -> Result<(), CliError> {
    match common.out.as_ref().or(file.out.as_ref()) {
        Some(path) => fs::write(path, bytes).map_err(|e| CliError::io(path, e)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes).and_then(|_| out.flush()).map_err(|e| CliError::Output(e.to_string()))
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn seed(common: &CommonArgs, file: &FileConfig) -> u64 {
    common.seed.or(file.seed).unwrap_or(0)
}

/// Sequence, weight and sweep settings for `analyze` and `sweep`.
struct DensitySetup {
    set: SequenceSet,
    weight_spec: WeightSpec,
    weight: WeightModel,
    params: SweepParams,
}

fn density_setup(d: &DensityArgs, file: &FileConfig, seed: u64) -> Result<DensitySetup, CliError> {
    let set = parse_sequence_file(&d.input)?;
    let weight_spec = d.weight.or(file.weight).unwrap_or_else(|| WeightSpec::default_for(set.domain()));
    let weight = weight_spec.model()?;
    let defaults = SweepParams::default();

    let border_r = d.r_grid.clone().or_else(|| file.r_grid.clone()).unwrap_or(defaults.border_r);
    check_border_grid(&border_r)?;
    let puncture_r = d.puncture_r_grid.clone().or_else(|| file.puncture_r_grid.clone()).unwrap_or(defaults.puncture_r);
    check_puncture_grid(&puncture_r)?;
    let epsilon = d.epsilon.or(file.epsilon).unwrap_or(defaults.epsilon);
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(CliError::usage(format!("epsilon = {epsilon} must be finite and nonnegative")));
    }
    let split_a = d.split_a.or(file.split_a).unwrap_or(defaults.split_a);
    if !(split_a > 0.0 && split_a < 1.0) {
        return Err(CliError::usage(format!("split-a = {split_a} is outside (0, 1)")));
    }

    let (dm, dg) = match defaults.border_centers {
        CenterStrategy::Net { mesh, margin } => (mesh, margin),
        CenterStrategy::Explicit(_) => unreachable!("default border centers are a net"),
    };
    let mesh = d.mesh.or(file.mesh).unwrap_or(dm);
    let margin = d.margin.or(file.margin).unwrap_or(dg);
    for (name, v) in [("mesh", mesh), ("margin", margin)] {
        if !(v > 0.0 && v < 1.0) {
            return Err(CliError::usage(format!("{name} = {v} is outside (0, 1)")));
        }
    }
    let border_centers = match d.random_centers.or(file.random_centers) {
        None => CenterStrategy::Net { mesh, margin },
        Some(n) => {
            let border = match set.domain() {
                Domain::Disk => set.values(),
                Domain::PuncturedDisk => decompose(&set, split_a)?.1,
            };
            CenterStrategy::Explicit(random_centers(&border, margin, n, seed))
        }
    };
    let (pm, pg) = match defaults.puncture_centers {
        CenterStrategy::Net { mesh, margin } => (mesh, margin),
        CenterStrategy::Explicit(_) => unreachable!("default puncture centers are a net"),
    };
    let puncture_mesh = d.puncture_mesh.or(file.puncture_mesh).unwrap_or(pm);
    let puncture_margin = d.puncture_margin.or(file.puncture_margin).unwrap_or(pg);
    if !(puncture_mesh > 0.0 && puncture_mesh.is_finite() && puncture_margin >= 0.0 && puncture_margin.is_finite()) {
        return Err(CliError::usage("puncture mesh must be positive and the margin nonnegative"));
    }

    Ok(DensitySetup {
        set,
        weight_spec,
        weight,
        params: SweepParams {
            border_r,
            puncture_r,
            split_a,
            epsilon,
            border_centers,
            puncture_centers: CenterStrategy::Net { mesh: puncture_mesh, margin: puncture_margin },
            rule: QuadratureRule::default(),
        },
    })
}

/// Modulus `ρ ≤ rho_max` with uniform hyperbolic area: `ρ²/(1 − ρ²)` is
/// uniform up to its value at `rho_max`.
fn hyperbolic_radius(u: f64, rho_max: f64) -> f64 {
    let v = u * rho_max * rho_max / (1.0 - rho_max * rho_max);
    (v / (1.0 + v)).sqrt()
}

/// The points, then `n` seeded centers uniform in hyperbolic area over the
/// hull `|z| ≤ max|γ|` enlarged by `margin`.
fn random_centers(points: &[Complex], margin: f64, n: usize, seed: u64) -> Vec<Complex> {
    let hull = points.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let rho_max = (hull.atanh() + margin.atanh()).min(12.0).tanh();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = points.to_vec();
    out.extend((0..n).map(|_| {
        let rho = hyperbolic_radius(rng.random::<f64>(), rho_max);
        Complex::from_polar(rho, TAU * rng.random::<f64>())
    }));
    out
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    label: &'a str,
    domain: &'static str,
    points: usize,
    weight: String,
    #[serde(flatten)]
    verdict: &'a ClassificationVerdict,
}

fn analyze(a: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let file = load_config(&a.common)?;
    let setup = density_setup(&a.density, &file, seed(&a.common, &file))?;
    let delta = a.delta.or(file.delta).unwrap_or(ClassifyParams::default().delta);
    check_delta(delta)?;
    let params = ClassifyParams { sweep: setup.params, delta, ..ClassifyParams::default() };
    let verdict = classify(&setup.set, &setup.weight, &params);
    let report = AnalyzeReport {
        label: setup.set.label(),
        domain: domain_tag(setup.set.domain()),
        points: setup.set.len(),
        weight: setup.weight_spec.to_string(),
        verdict: &verdict,
    };
    emit(&a.common, &file, &json(&report)?)?;
    Ok(match verdict.verdict {
        Verdict::Indeterminate => Outcome::Indeterminate,
        Verdict::Interpolating | Verdict::NotInterpolating => Outcome::Success,
    })
}

/// CSV header of `sweep` output.
pub const SWEEP_HEADER: [&str; 7] = ["center_re", "center_im", "r", "kind", "numerator", "denominator", "ratio"];

fn sweep(a: &SweepArgs) -> Result<Outcome, CliError> {
    let file = load_config(&a.common)?;
    let setup = density_setup(&a.density, &file, seed(&a.common, &file))?;
    let plan = SweepPlan::new(&setup.set, &setup.weight, &setup.params)?;
    let results: Vec<_> = plan.tasks().par_iter().map(|t| plan.evaluate(t)).collect();
    let result = plan.assemble(results)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SWEEP_HEADER)?;
    for rep in &result.reports {
        let c = rep.center.value();
        w.write_record([
            c.re.to_string(),
            c.im.to_string(),
            rep.r.to_string(),
            rep.kind.to_string(),
            rep.numerator.to_string(),
            rep.denominator.to_string(),
            rep.ratio.to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    emit(&a.common, &file, &bytes)?;
    for part in std::iter::once(&result.border).chain(result.puncture.as_ref()) {
        eprintln!(
            "{}: {} points, estimate {}, trend {:?}, flagged {}",
            part.kind,
            part.points,
            part.estimate.map_or_else(|| "unknown".to_string(), |v| v.to_string()),
            part.trend,
            part.flagged
        );
    }
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct GramReport<'a> {
    label: &'a str,
    points: usize,
    weight: String,
    provenance: Provenance,
    eigenvalues: &'a [f64],
    min_eigenvalue: f64,
    max_eigenvalue: f64,
    condition: f64,
    singular: bool,
    constant: ConstantEstimate,
}

fn disk_exponent(spec: WeightSpec) -> Result<f64, CliError> {
    match spec {
        WeightSpec::StandardDisk { s } => Ok(s),
        other => Err(CliError::usage(format!("kernels need a disk weight, got `{other}`"))),
    }
}

fn gram(a: &GramArgs) -> Result<Outcome, CliError> {
    let file = load_config(&a.common)?;
    let set = parse_sequence_file(&a.input)?;
    if set.domain() != Domain::Disk {
        return Err(CliError::usage("gram works on disk sequences"));
    }
    let spec = a.weight.or(file.weight).unwrap_or(WeightSpec::StandardDisk { s: 2.0 });
    let s = disk_exponent(spec)?;
    let kernel = match a.degree.or(file.degree) {
        Some(n) => KernelSpec::numeric_standard(s, n)?,
        None => standard_kernel(s)?,
    };
    let system = gram_assemble(&set.values(), &kernel)?;
    let report = GramReport {
        label: set.label(),
        points: set.len(),
        weight: spec.to_string(),
        provenance: kernel.provenance(),
        eigenvalues: system.eigenvalues(),
        min_eigenvalue: system.min_eigenvalue(),
        max_eigenvalue: system.max_eigenvalue(),
        condition: system.condition(),
        singular: system.is_singular(),
        constant: interpolation_constant_estimate(&system),
    };
    emit(&a.common, &file, &json(&report)?)?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct PjCaseReport {
    zeros: Vec<Complex>,
    s: f64,
    z: Complex,
    r: f64,
    residual: f64,
}

#[derive(Serialize)]
struct PjReport {
    nodes: usize,
    tol: f64,
    cases: usize,
    max_residual: f64,
    passed: bool,
    results: Vec<PjCaseReport>,
}

/// Quadrature for the Laplacian term of the identity; the default
/// tolerance leaves residuals near 1e−7.
fn pj_rule() -> QuadratureRule {
    QuadratureRule { rel_tol: 1e-11, ..QuadratureRule::default() }
}

fn pj_verify(a: &PjArgs) -> Result<Outcome, CliError> {
    let file = load_config(&a.common)?;
    let nodes = a.nodes.or(file.nodes).unwrap_or(PJ_NODES);
    let tol = a.tol.or(file.tol).unwrap_or(1e-6);
    let rule = pj_rule();
    let results = pj_suite()
        .into_par_iter()
        .map(|case| {
            let w = WeightModel::standard_disk(case.s)?;
            let residual = poisson_jensen_residual(&case.f, &w, case.z, case.r, nodes, &rule)?;
            Ok(PjCaseReport { zeros: case.f.zeros().to_vec(), s: case.s, z: case.z, r: case.r, residual })
        })
        .collect::<Result<Vec<_>, hypinterp::Error>>()?;
    let max_residual = results.iter().map(|c| c.residual).fold(0.0, f64::max);
    let passed = max_residual < tol;
    let report = PjReport { nodes, tol, cases: results.len(), max_residual, passed, results };
    emit(&a.common, &file, &json(&report)?)?;
    eprintln!("{}: max residual {max_residual:e} over {} cases", if passed { "PASS" } else { "FAIL" }, report.cases);
    if passed {
        Ok(Outcome::Success)
    } else {
        Err(CliError::CheckFailed(format!("Poisson–Jensen residual {max_residual:e} ≥ {tol:e}")))
    }
}

#[derive(Serialize)]
struct NumericReport {
    degree: usize,
    max_relative_gap: f64,
    tol: f64,
    passed: bool,
}

#[derive(Serialize)]
struct KernelReport {
    weight: String,
    grid_points: usize,
    max_modulus: f64,
    diagonal: DiagCheck,
    tol: f64,
    passed: bool,
    numeric: Option<NumericReport>,
}

fn kernel_check(a: &KernelArgs) -> Result<Outcome, CliError> {
    let file = load_config(&a.common)?;
    let spec = a.weight.or(file.weight).unwrap_or(WeightSpec::StandardDisk { s: 2.0 });
    let s = disk_exponent(spec)?;
    let n = a.grid_points.or(file.grid_points).unwrap_or(500);
    let max_modulus = a.max_modulus.or(file.max_modulus).unwrap_or(0.95);
    if !(max_modulus > 0.0 && max_modulus < 1.0) || n == 0 {
        return Err(CliError::usage("the grid needs points and a max modulus in (0, 1)"));
    }
    let degree = a.degree.or(file.degree).unwrap_or(400);
    let tol = a.tol.or(file.tol).unwrap_or(1e-6);
    let numeric_tol = a.numeric_tol.or(file.numeric_tol).unwrap_or(1e-4);

    let grid = disk_grid(n, max_modulus);
    let closed = standard_kernel(s)?;
    let diagonal = kernel_diag_check(&closed, &grid)?;
    let diag_ok = (diagonal.ratio - 1.0).abs() < tol;
    let numeric = if degree == 0 {
        None
    } else {
        let num = KernelSpec::numeric_standard(s, degree)?;
        let gap = kernel_agreement(&num, &closed, &grid);
        Some(NumericReport { degree, max_relative_gap: gap, tol: numeric_tol, passed: gap < numeric_tol })
    };
    let passed = diag_ok && numeric.as_ref().is_none_or(|r| r.passed);
    let report = KernelReport { weight: spec.to_string(), grid_points: n, max_modulus, diagonal, tol, passed, numeric };
    emit(&a.common, &file, &json(&report)?)?;
    eprintln!("{}: diagonal max/min = {}", if passed { "PASS" } else { "FAIL" }, diagonal.ratio);
    if passed {
        Ok(Outcome::Success)
    } else {
        Err(CliError::CheckFailed("kernel diagonal or numeric kernel outside tolerance".into()))
    }
}

/// Seeded candidates for `random-disk`, thinned to separation `sep`.
pub fn random_disk(sep: f64, max_modulus: f64, count: usize, seed: u64) -> Result<SequenceSet, CliError> {
    if !(sep > 0.0 && sep < 1.0 && max_modulus > 0.0 && max_modulus < 1.0) {
        return Err(CliError::usage("random-disk needs sep and max-modulus in (0, 1)"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<Complex> = (0..count.saturating_mul(20).max(1000))
        .map(|_| {
            let rho = hyperbolic_radius(rng.random::<f64>(), max_modulus);
            Complex::from_polar(rho, TAU * rng.random::<f64>())
        })
        .collect();
    let mut pts = greedy_net(candidates, sep);
    pts.truncate(count);
    Ok(SequenceSet::new(Domain::Disk, &pts, format!("random-disk sep={sep} seed={seed}"))?)
}

fn gen(a: &GenArgs) -> Result<Outcome, CliError> {
    let file = load_config(&a.common)?;
    let text =
        a.lattice.clone().or_else(|| file.lattice.clone()).ok_or_else(|| CliError::usage("gen needs --lattice"))?;
    let count = a.count.or(file.count).unwrap_or(100);
    let set = match text.parse::<GenSpec>()? {
        GenSpec::Lattice(kind) => generate_lattice(kind, count)?,
        GenSpec::RandomDisk { sep, max_modulus } => random_disk(sep, max_modulus, count, seed(&a.common, &file))?,
    };
    emit(&a.common, &file, render_sequence(&set).as_bytes())?;
    Ok(Outcome::Success)
}

/// Write a sequence document to `path`.
pub fn write_sequence(path: &Path, set: &SequenceSet) -> Result<(), CliError> {
    fs::write(path, render_sequence(set)).map_err(|e| CliError::io(path, e))
}
