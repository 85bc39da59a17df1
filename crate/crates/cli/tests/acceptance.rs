//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A criterion listed in `KNOWN_RED` is expected to fail for a reason
//! established independently (closed-form analysis in the README). It is
//! still evaluated and printed as FAIL; the run only treats it as expected
//! when the failure matches that analysis and every other sub-check passes.
//! Any other failure makes the target exit nonzero.

use std::f64::consts::TAU;
use std::fs;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::Instant;

use hypinterp::hypgeo::{cover_p, cyl_dist, hyp_dist, lift_puncture, mobius_involution, pseudo_dist};
use hypinterp::kernel::{
    disk_grid, gram_assemble, interpolation_constant_estimate, kernel_agreement, kernel_diag_check, standard_kernel,
    KernelSpec,
};
use hypinterp::quadrature::QuadratureRule;
use hypinterp::seqan::{
    border_density_ratio, density_sweep, generate_lattice, CenterStrategy, LatticeKind, SequenceSet, SweepParams,
};
use hypinterp::verify::{mean_comparison_margin, run_pj_suite, PJ_NODES};
use hypinterp::weights::{
    extended_covered_mean_with, log_mean_disk, puncture_density_form, SequencePotential, WeightModel,
};
use hypinterp::{Complex, Domain, DomainPoint};
use hypinterp_cli::commands::random_disk;
use hypinterp_cli::parse_sequence_file;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Singleton density below 0.05 at r = 0.99 is out of reach: the supremum
/// over centers is `log(4r²) / log(1/(1 − r²)) ≈ 0.349` there.
const KNOWN_RED: &[u8] = &[6];

struct Outcome {
    pass: bool,
    /// For a known-red criterion: the failure is the analysed one.
    as_analysed: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Self { pass, as_analysed: false, detail }
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn disk_sample(r: &mut ChaCha8Rng, max: f64) -> Complex {
    Complex::from_polar(max * r.random::<f64>().sqrt(), TAU * r.random::<f64>())
}

fn tight() -> QuadratureRule {
    QuadratureRule { rel_tol: 1e-11, ..QuadratureRule::default() }
}

fn geometry() -> Outcome {
    let t = Instant::now();
    let mut r = rng(1);
    let (mut e_tanh, mut e_mob) = (0.0f64, 0.0f64);
    for _ in 0..10_000 {
        let (z, w, a) = (disk_sample(&mut r, 0.99), disk_sample(&mut r, 0.99), disk_sample(&mut r, 0.99));
        let p = pseudo_dist(z, w).unwrap();
        e_tanh = e_tanh.max((hyp_dist(z, w).unwrap().tanh() - p).abs());
        let q = pseudo_dist(mobius_involution(a, z).unwrap(), mobius_involution(a, w).unwrap()).unwrap();
        e_mob = e_mob.max((q - p).abs());
    }
    let secs = t.elapsed().as_secs_f64();
    Outcome::new(
        e_tanh < 1e-12 && e_mob < 1e-12 && secs < 1.0,
        format!("tanh err {e_tanh:.1e}, Möbius err {e_mob:.1e}, {secs:.2} s"),
    )
}

fn poisson_jensen() -> Outcome {
    let t = Instant::now();
    let out = run_pj_suite(PJ_NODES, &tight()).unwrap();
    let secs = t.elapsed().as_secs_f64();
    let max = out.iter().map(|o| o.residual).fold(0.0, f64::max);
    let shape_ok = out.iter().all(|o| o.case.f.zeros().len() <= 5 && [2.0, 3.0].contains(&o.case.s) && o.case.r <= 0.9);
    Outcome::new(
        out.len() >= 20 && shape_ok && max < 1e-6 && secs < 10.0,
        format!("{} cases, max residual {max:.1e}, {secs:.2} s", out.len()),
    )
}

/// Ten border sequences (seeded random separated sets) and ten puncture
/// sequences (jittered exponential lattices).
fn separated_sequences() -> (Vec<Vec<Complex>>, Vec<Vec<Complex>>) {
    let border = (0..10).map(|k| random_disk(0.35, 0.95, 40, 100 + k).unwrap().values()).collect();
    let mut r = rng(7);
    let puncture = (0..10)
        .map(|_| {
            let mut pts = Vec::new();
            for k in 1..=8 {
                for j in 0..3 {
                    let m = (-(k as f64 + 0.2 * (r.random::<f64>() - 0.5))).exp();
                    let a = TAU * j as f64 / 3.0 + 0.3 * (r.random::<f64>() - 0.5);
                    pts.push(Complex::from_polar(m, a));
                }
            }
            pts
        })
        .collect();
    (border, puncture)
}

fn puncture_sample(r: &mut ChaCha8Rng) -> Complex {
    Complex::from_polar((-10.0 * r.random::<f64>()).exp() * 0.9, TAU * r.random::<f64>())
}

fn sigma_bound() -> Outcome {
    let (border, puncture) = separated_sequences();
    let mut r = rng(3);
    let mut worst = 0.0f64;
    for zeros in &border {
        let p = SequencePotential::border(zeros, 0.9).unwrap();
        for _ in 0..1000 {
            worst = worst.max(p.evaluate(disk_sample(&mut r, 0.98)).unwrap().sigma);
        }
    }
    let mut worst_p = 0.0f64;
    for zeros in &puncture {
        let p = SequencePotential::puncture(zeros, 3.0).unwrap();
        for _ in 0..1000 {
            worst_p = worst_p.max(p.evaluate(puncture_sample(&mut r)).unwrap().sigma);
        }
    }
    Outcome::new(
        worst <= 1.0 + 1e-9 && worst_p <= 1.0 + 1e-9,
        format!(
            "max σ − 1: border {:.1e}, puncture {:.1e} (10 + 10 sequences × 1000 points)",
            worst - 1.0,
            worst_p - 1.0
        ),
    )
}

fn generator_independence() -> Outcome {
    let (border, puncture) = separated_sequences();
    let mut r = rng(4);
    let unit = |r: &mut ChaCha8Rng| disk_sample(r, 1.0);
    let mut worst = 0.0f64;
    for (zeros, is_border) in border.iter().map(|z| (z, true)).chain(puncture.iter().map(|z| (z, false))) {
        let (a, b) = (unit(&mut r), unit(&mut r));
        let base =
            if is_border { SequencePotential::border(zeros, 0.9) } else { SequencePotential::puncture(zeros, 3.0) }
                .unwrap()
                .with_rule(tight())
                .unwrap();
        let moved = base.clone().with_outer(vec![b, a]).unwrap();
        for _ in 0..100 {
            let z = if is_border { disk_sample(&mut r, 0.98) } else { puncture_sample(&mut r) };
            let (s0, s1) = (base.evaluate(z).unwrap().sigma, moved.evaluate(z).unwrap().sigma);
            worst = worst.max((s0 - s1).abs());
        }
    }
    Outcome::new(worst < 1e-8, format!("max σ deviation {worst:.1e} over 20 sequences × 100 points"))
}

fn kernel_diagonal() -> Outcome {
    let grid = disk_grid(500, 0.95);
    let mut ok = true;
    let mut detail = Vec::new();
    for s in [2.0, 3.0] {
        let closed = standard_kernel(s).unwrap();
        let d = kernel_diag_check(&closed, &grid).unwrap();
        let numeric = KernelSpec::numeric_standard(s, 400).unwrap();
        let gap = kernel_agreement(&numeric, &closed, &grid);
        ok &= (d.ratio - 1.0).abs() < 1e-6 && gap < 1e-4;
        detail.push(format!("s={s}: max/min−1 = {:.1e}, numeric gap {gap:.1e}", d.ratio - 1.0));
    }
    Outcome::new(ok, detail.join("; "))
}

fn density_sanity() -> Outcome {
    let w = WeightModel::standard_disk(2.0).unwrap();
    let singleton = SequenceSet::new(Domain::Disk, &[Complex::new(0.0, 0.0)], "singleton").unwrap();
    let grid = SweepParams::default().border_r;
    // centers at every pseudohyperbolic distance in (1/2, 0.999]; the
    // quotient is rotation invariant, so one ray suffices
    let centers: Vec<Complex> =
        (0..400).map(|k| Complex::new(0.5 + 1e-9 + 0.499 * (k as f64 / 399.0).powi(2), 0.0)).collect();
    let params = SweepParams { border_centers: CenterStrategy::Explicit(centers), ..SweepParams::default() };
    let sweep = density_sweep(&singleton, &w, &params).unwrap();
    let sup: Vec<f64> = sweep.border.sup.iter().map(|v| v.unwrap()).collect();
    let at_099 = sweep.border.estimate.unwrap();
    let decreasing = sup.windows(2).all(|p| p[1] < p[0]);
    let closed = |r: f64| (4.0 * r * r).ln() / (1.0 / (1.0 - r * r)).ln();
    let matches_analysis = grid.iter().zip(&sup).all(|(r, s)| (s - closed(*r)).abs() < 1e-6 * closed(*r));

    let default_net = density_sweep(&singleton, &w, &SweepParams::default()).unwrap();

    // adding a point never lowers a quotient, checked per (center, r)
    let rule = QuadratureRule::default();
    let mut r = rng(6);
    let mut mono_ok = true;
    for _ in 0..100 {
        let n = r.random_range(0..12);
        let pts: Vec<Complex> = (0..n).map(|_| disk_sample(&mut r, 0.95)).collect();
        let mut more = pts.clone();
        more.push(disk_sample(&mut r, 0.95));
        for _ in 0..5 {
            let z = disk_sample(&mut r, 0.9);
            for rr in &grid {
                let a = border_density_ratio(&pts, &w, z, *rr, &rule).unwrap();
                let b = border_density_ratio(&more, &w, z, *rr, &rule).unwrap();
                mono_ok &= b.ratio >= a.ratio;
            }
        }
    }

    let pass = at_099 < 0.05 && decreasing && mono_ok;
    let sup_txt: Vec<String> = sup.iter().map(|v| format!("{v:.4}")).collect();
    let mut o = Outcome::new(
        pass,
        format!(
            "singleton sup over r = {grid:?}: [{}] (closed form at 0.99: {:.4}); < 0.05 at 0.99: {}; strictly decreasing: {decreasing}; \
             adding points monotone over 100 trials: {mono_ok}; default-net estimate {:?} (its centers never reach |φ_z(0)| > 1/2)",
            sup_txt.join(", "),
            closed(0.99),
            at_099 < 0.05,
            default_net.border.estimate,
        ),
    );
    o.as_analysed = !pass && matches_analysis && decreasing && mono_ok;
    o
}

fn density_trend() -> Outcome {
    let t = Instant::now();
    let w = WeightModel::standard_disk(2.0).unwrap();
    let k = standard_kernel(2.0).unwrap();
    let meshes = [("coarse", 0.95), ("medium", 0.8), ("fine", 0.6)];
    let mut est = Vec::new();
    let mut consts = Vec::new();
    let mut coarse_change = f64::NAN;
    for (i, (_, mesh)) in meshes.iter().enumerate() {
        let set = generate_lattice(LatticeKind::HyperbolicDisk { mesh: *mesh, max_modulus: 0.995 }, 10_000).unwrap();
        est.push(density_sweep(&set, &w, &SweepParams::default()).unwrap().estimate().unwrap());
        let c50 = interpolation_constant_estimate(&gram_assemble(&set.truncated(50).values(), &k).unwrap());
        if i == 0 {
            let c40 = interpolation_constant_estimate(&gram_assemble(&set.truncated(40).values(), &k).unwrap());
            coarse_change = (c50.value - c40.value).abs() / c40.value;
        }
        consts.push(c50.value);
    }
    let secs = t.elapsed().as_secs_f64();
    let inc = |v: &[f64]| v.windows(2).all(|p| p[1] > p[0]) && v.iter().all(|x| x.is_finite());
    Outcome::new(
        inc(&est) && inc(&consts) && coarse_change < 0.10 && secs < 60.0,
        format!(
            "meshes {:?}: density {:.3?}, 𝒜(50) {:.3?}, coarse 40→50 change {:.1}%, {secs:.1} s",
            meshes.iter().map(|m| m.1).collect::<Vec<_>>(),
            est,
            consts,
            100.0 * coarse_change
        ),
    )
}

fn cylinder() -> Outcome {
    let mut r = rng(8);
    let (mut e_rt, mut e_cyl, mut e_per) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..10_000 {
        let z = puncture_sample(&mut r);
        let w = puncture_sample(&mut r);
        let qz = lift_puncture(DomainPoint::punctured(z).unwrap()).unwrap().value();
        let qw = lift_puncture(DomainPoint::punctured(w).unwrap()).unwrap().value();
        e_rt = e_rt.max((cover_p(qz) - z).norm());
        let best = (-2..=2).map(|k| (qz - qw - Complex::new(TAU * k as f64, 0.0)).norm()).fold(f64::INFINITY, f64::min);
        e_cyl = e_cyl.max((cyl_dist(z, w).unwrap() - best).abs());
    }
    let (_, puncture) = separated_sequences();
    for pts in &puncture {
        for _ in 0..100 {
            let q = Complex::new(TAU * r.random::<f64>(), 1.0 + 8.0 * r.random::<f64>());
            let rr = 1.5 + 6.0 * r.random::<f64>();
            let a = puncture_density_form(pts, rr, q);
            let b = puncture_density_form(pts, rr, q + Complex::new(TAU, 0.0));
            e_per = e_per.max((a - b).abs());
        }
    }
    Outcome::new(
        e_rt < 1e-12 && e_cyl < 1e-12 && e_per < 1e-12,
        format!("roundtrip {e_rt:.1e}, cyl_dist {e_cyl:.1e} (10⁴ pairs), q → q+2π {e_per:.1e}"),
    )
}

fn means() -> Outcome {
    let rule = QuadratureRule::default();
    let grid = disk_grid(100, 0.9);
    let harmonic = WeightModel::custom(
        Domain::Disk,
        Arc::new(|z: Complex| (z * z).re + 0.7 * z.im - 0.2),
        Arc::new(|_| 0.0),
        None,
    )
    .unwrap();
    let constant = WeightModel::custom(Domain::Disk, Arc::new(|_| 3.7), Arc::new(|_| 0.0), None).unwrap();
    let mut e_h = 0.0f64;
    for z in &grid {
        for r in [0.5, 0.9] {
            e_h = e_h.max((log_mean_disk(&harmonic, r, *z, &rule).unwrap() - harmonic.eval(*z)).abs());
            e_h = e_h.max((log_mean_disk(&constant, r, *z, &rule).unwrap() - 3.7).abs());
        }
    }
    let mut e_c = 0.0f64;
    for k in 0..100 {
        let z = Complex::from_polar((-0.1 * (k + 1) as f64).exp() * 0.9, 0.37 * k as f64);
        for r in [2.0, 4.0] {
            e_c = e_c.max((extended_covered_mean_with(|_| -1.25, 0.1, r, z, &rule).unwrap() + 1.25).abs());
        }
    }
    let sd2 = WeightModel::standard_disk(2.0).unwrap();
    let m: Vec<f64> = [100, 200, 400]
        .iter()
        .map(|n| mean_comparison_margin(&sd2, 0.5, &disk_grid(*n, 0.9), &rule).unwrap())
        .collect();
    let stable = m.iter().all(|v| v.is_finite()) && m.windows(2).all(|p| (p[1] - p[0]).abs() <= 0.05 * p[0]);
    Outcome::new(
        e_h < 1e-7 && e_c < 1e-8 && stable,
        format!("log mean err {e_h:.1e}, covered mean err {e_c:.1e}, sup|φ − φ_r| at 100/200/400 points {m:.5?}"),
    )
}

fn cli_roundtrip() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_hypinterp");
    let dir = tempfile::TempDir::new().unwrap();
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let mut exact = true;
    for (spec, kind) in [
        (
            "hyperbolic-disk:mesh=0.5,max-modulus=0.95",
            Some(LatticeKind::HyperbolicDisk { mesh: 0.5, max_modulus: 0.95 }),
        ),
        ("puncture-exponential:step=0.5,rays=4", Some(LatticeKind::PunctureExponential { step: 0.5, rays: 4 })),
        ("random-disk:sep=0.3,max-modulus=0.9", None),
    ] {
        let path = dir.path().join("gen.json");
        let o = run(&["gen", "--lattice", spec, "--count", "60", "--seed", "3", "--out", path.to_str().unwrap()]);
        exact &= o.status.success();
        let parsed = parse_sequence_file(&path).unwrap().values();
        let want = match kind {
            Some(k) => generate_lattice(k, 60).unwrap().values(),
            None => random_disk(0.3, 0.9, 60, 3).unwrap().values(),
        };
        exact &= parsed.len() == want.len()
            && parsed
                .iter()
                .zip(&want)
                .all(|(a, b)| a.re.to_bits() == b.re.to_bits() && a.im.to_bits() == b.im.to_bits());
    }
    let seq = dir.path().join("seq.json");
    fs::write(&seq, r#"{"domain":"disk","points":[[0.3,0.1],[-0.4,0.5],[0.0,-0.7],[0.8,0.1]]}"#).unwrap();
    let s = seq.to_str().unwrap();
    let mut identical = true;
    for args in [
        vec!["sweep", s, "--random-centers", "30", "--seed", "17"],
        vec!["analyze", s],
        vec!["gram", s],
        vec!["gen", "--lattice", "random-disk:sep=0.2", "--count", "50", "--seed", "17"],
    ] {
        let (a, b) = (run(&args), run(&args));
        identical &= a.status.code() == b.status.code() && !a.stdout.is_empty() && a.stdout == b.stdout;
    }
    Outcome::new(
        exact && identical,
        format!("gen → parse bit-exact: {exact}; repeated runs byte-identical: {identical}"),
    )
}

type Criterion = (u8, &'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "geometry identities", geometry),
        (2, "Poisson–Jensen suite", poisson_jensen),
        (3, "σ ≤ 1", sigma_bound),
        (4, "generator independence", generator_independence),
        (5, "kernel diagonal", kernel_diagonal),
        (6, "density sanity", density_sanity),
        (7, "density / interpolation-constant trend", density_trend),
        (8, "cylindrical lifting", cylinder),
        (9, "mean machinery", means),
        (10, "CLI round-trip and determinism", cli_roundtrip),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (id, name, check) in criteria {
        let t = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id:>2} {verdict}: {name}: {} [{:.1} s]", o.detail, t.elapsed().as_secs_f64());
        if o.pass {
            passed += 1;
        } else if KNOWN_RED.contains(&id) && o.as_analysed {
            println!("             known red: failure matches the closed-form analysis");
        } else {
            unexpected.push(id);
        }
    }
    println!("acceptance: {passed}/10 PASS");
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures: {unexpected:?}");
        ExitCode::FAILURE
    }
}
