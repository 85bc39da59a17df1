//! Density quotients: weighted point counts against curvature mass.

use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use super::net::{border_centers, puncture_centers, CenterStrategy};
use super::{decompose, SequenceSet};
use crate::error::{param, Error, Result};
use crate::hypgeo::{cover_p, lift_puncture, phi, rho, Complex, Domain, DomainPoint};
use crate::quadrature::{a_r, disk_log_integral_at, Measure, QuadratureRule};
use crate::weights::{cutoff, extended_covered_mean_with, puncture_density_form, WeightModel};

/// Which part of the sequence a quotient measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum DensityKind {
    Border,
    Puncture,
}

impl fmt::Display for DensityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DensityKind::Border => "border",
            DensityKind::Puncture => "puncture",
        })
    }
}

/// Where a quotient was centred: a disk point or a point of the cover ℍ.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Center {
    Disk(Complex),
    Lifted(Complex),
}

impl Center {
    pub fn value(&self) -> Complex {
        match self {
            Center::Disk(z) | Center::Lifted(z) => *z,
        }
    }
}

/// One density quotient `numerator / denominator` at a center and radius.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DensityReport {
    pub center: Center,
    pub r: f64,
    pub kind: DensityKind,
    pub numerator: f64,
    pub denominator: f64,
    pub ratio: f64,
}

impl DensityReport {
    fn new(center: Center, r: f64, kind: DensityKind, numerator: f64, denominator: f64) -> Result<Self> {
        if !(denominator > 0.0) {
            return Err(Error::NonPositiveDenominator { value: denominator });
        }
        Ok(Self { center, r, kind, numerator, denominator, ratio: numerator / denominator })
    }
}

/// Sample points of `D_r(0)`: the origin plus rings out to the rim.
fn disk_samples(r: f64) -> impl Iterator<Item = Complex> {
    let radii = [0.0, 0.25, 0.5, 0.75, 0.95, 0.999];
    radii.into_iter().flat_map(move |t| {
        let n = if t == 0.0 { 1 } else { 16 };
        (0..n).map(move |j| Complex::from_polar(t * r, TAU * j as f64 / n as f64))
    })
}

/// `2π Σ log(r²/|φ_z(γ)|²)` over `1/2 < |φ_z(γ)| < r`.
fn border_numerator(points: &[Complex], z: Complex, r: f64) -> f64 {
    let sum = points
        .iter()
        .map(|g| rho(z, *g))
        .filter(|s| *s > 0.5 && *s < r)
        .map(|s| (r * r / (s * s)).ln())
        .fold(0.0, |acc, v| acc + v);
    TAU * sum
}

/// Border density quotient at `z`. For punctured-disk weights the curvature
/// excess is cut off near the puncture at the default split radius 1/2.
pub fn border_density_ratio(
    points: &[Complex],
    weight: &WeightModel,
    z: Complex,
    r: f64,
    rule: &QuadratureRule,
) -> Result<DensityReport> {
    border_density_ratio_split(points, weight, z, r, 0.5, rule)
}

/// Border density quotient
/// `2π Σ_{1/2<|φ_z(γ)|<r} log(r²/|φ_z(γ)|²) / ∫_{D_r(z)} log(r²/|φ_z|²)(Δφ − 2ω_P)`.
///
/// On 𝔻* the curvature excess `Δφ − 2ω_P^𝔻` is multiplied by the cutoff
/// `h_a(|ζ|)`, which vanishes for `|ζ| ≤ a/2`.
pub fn border_density_ratio_split(
    points: &[Complex],
    weight: &WeightModel,
    z: Complex,
    r: f64,
    a: f64,
    rule: &QuadratureRule,
) -> Result<DensityReport> {
    if !(r > 0.5 && r < 1.0) {
        return Err(param("r", "border radius must lie in (1/2, 1)"));
    }
    if !Domain::Disk.contains(z) {
        return Err(Error::OutsideDomain { value: z, domain: Domain::Disk });
    }
    let numerator = border_numerator(points, z, r);
    let denominator = match weight.domain() {
        Domain::Disk => {
            if let Some(c) = weight.constant_disk_ratio() {
                (c - 2.0) * a_r(r)
            } else {
                let excess = |w: Complex| weight.laplacian_vs_disk_poincare(w) - 2.0;
                if disk_samples(r).any(|eta| !(excess(phi(z, eta)) > 0.0)) {
                    return Err(Error::NonPositiveDenominator { value: 0.0 });
                }
                disk_log_integral_at(z, r, excess, Measure::HyperbolicDisk, rule)?
            }
        }
        Domain::PuncturedDisk => {
            if !(a > 0.0 && a < 1.0) {
                return Err(param("a", "split radius must lie in (0, 1)"));
            }
            let excess = |w: Complex| {
                let h = cutoff(a, w.norm());
                if h == 0.0 {
                    0.0
                } else {
                    h * (weight.laplacian_vs_disk_poincare(w) - 2.0)
                }
            };
            if disk_samples(r).any(|eta| {
                let w = phi(z, eta);
                cutoff(a, w.norm()) > 0.0 && !(excess(w) > 0.0)
            }) {
                return Err(Error::NonPositiveDenominator { value: 0.0 });
            }
            disk_log_integral_at(z, r, excess, Measure::HyperbolicDisk, rule)?
        }
    };
    DensityReport::new(Center::Disk(z), r, DensityKind::Border, numerator, denominator)
}

/// Puncture density quotient at a lifted center `q`: the numerator is
/// `2π (1/c_r) Σ log(r²/|γ̃ − q|²)` over lifted translates with
/// `1 < |γ̃ − q| < r`, the denominator the ε-extended covered mean of the
/// density of `Δψ` against `ω_c`, `ψ = φ + 2 log log 1/|z|²`.
pub fn puncture_density_ratio(
    points: &[Complex],
    weight: &WeightModel,
    q: Complex,
    r: f64,
    eps: f64,
    rule: &QuadratureRule,
) -> Result<DensityReport> {
    if weight.domain() != Domain::PuncturedDisk {
        return Err(Error::Unsupported("puncture density needs a punctured-disk weight"));
    }
    if !(r > 1.0) || !r.is_finite() {
        return Err(param("r", "puncture radius must exceed 1"));
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(param("epsilon", "shift must be positive"));
    }
    if !(q.im - eps > r) {
        return Err(Error::WindowViolation { center: q, radius: r, shift: eps });
    }
    let numerator = TAU * puncture_density_form(points, r, q);
    let density = |w: Complex| weight.psi_laplacian_vs_cyl(w);
    if disk_samples(r).any(|eta| !(density(cover_p(q + eta)) > 0.0)) {
        return Err(Error::NonPositiveDenominator { value: 0.0 });
    }
    let denominator = extended_covered_mean_with(density, eps, r, cover_p(q), rule)?;
    DensityReport::new(Center::Lifted(q), r, DensityKind::Puncture, numerator, denominator)
}

/// Shape of the per-radius suprema across the radius grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Trend {
    Decreasing,
    Increasing,
    Constant,
    Mixed,
}

impl Trend {
    fn of(values: &[f64]) -> Self {
        let (mut up, mut down) = (false, false);
        for w in values.windows(2) {
            up |= w[1] > w[0];
            down |= w[1] < w[0];
        }
        match (up, down) {
            (false, false) => Trend::Constant,
            (true, false) => Trend::Increasing,
            (false, true) => Trend::Decreasing,
            (true, true) => Trend::Mixed,
        }
    }

    /// Every step moves strictly in the given direction.
    pub fn strictly(values: &[f64], decreasing: bool) -> bool {
        values.windows(2).all(|w| if decreasing { w[1] < w[0] } else { w[1] > w[0] })
    }
}

/// Grids and numerical settings of a density sweep.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepParams {
    pub border_r: Vec<f64>,
    pub puncture_r: Vec<f64>,
    pub split_a: f64,
    pub epsilon: f64,
    pub border_centers: CenterStrategy,
    pub puncture_centers: CenterStrategy,
    pub rule: QuadratureRule,
}

impl Default for SweepParams {
    fn default() -> Self {
        Self {
            border_r: alloc::vec![0.90, 0.95, 0.975, 0.99],
            puncture_r: alloc::vec![4.0, 8.0, 16.0],
            split_a: 0.5,
            epsilon: 0.1,
            border_centers: CenterStrategy::Net { mesh: 0.25, margin: 0.25 },
            puncture_centers: CenterStrategy::Net { mesh: 0.5, margin: 0.5 },
            rule: QuadratureRule::default(),
        }
    }
}

/// One `(center, r)` evaluation of a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepTask {
    pub kind: DensityKind,
    pub center: Complex,
    pub r: f64,
}

/// Per-part aggregate of a sweep.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PartSweep {
    pub kind: DensityKind,
    pub points: usize,
    pub r_values: Vec<f64>,
    /// Supremum over the centers at each radius; `None` when no center was
    /// admissible.
    pub sup: Vec<Option<f64>>,
    /// The supremum at the largest radius.
    pub estimate: Option<f64>,
    pub trend: Trend,
    /// Evaluations dropped for a nonpositive denominator or window violation.
    pub flagged: usize,
}

/// Aggregate of a density sweep with every per-pair report.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepResult {
    pub border: PartSweep,
    pub puncture: Option<PartSweep>,
    pub reports: Vec<DensityReport>,
}

impl SweepResult {
    /// The larger of the two part estimates; `None` if either is unknown.
    pub fn estimate(&self) -> Option<f64> {
        let b = self.border.estimate?;
        match &self.puncture {
            None => Some(b),
            Some(p) => p.estimate.map(|p| p.max(b)),
        }
    }
}

/// A sweep split into independent tasks, so callers can evaluate them in
/// any order or in parallel before [`SweepPlan::assemble`].
#[derive(Debug, Clone)]
pub struct SweepPlan {
    domain: Domain,
    border: Vec<Complex>,
    puncture: Vec<Complex>,
    weight: WeightModel,
    params: SweepParams,
    tasks: Vec<SweepTask>,
}

impl SweepPlan {
    pub fn new(set: &SequenceSet, weight: &WeightModel, params: &SweepParams) -> Result<Self> {
        if weight.domain() != set.domain() {
            return Err(param("weight", "weight and sequence live on different domains"));
        }
        params.rule.validate()?;
        if params.border_r.is_empty() {
            return Err(param("border_r", "radius grid is empty"));
        }
        if params.border_r.iter().any(|r| !(*r > 0.5 && *r < 1.0)) {
            return Err(param("border_r", "border radii must lie in (1/2, 1)"));
        }
        let (puncture, border) = match set.domain() {
            Domain::Disk => (Vec::new(), set.values()),
            Domain::PuncturedDisk => {
                if params.puncture_r.is_empty() {
                    return Err(param("puncture_r", "radius grid is empty"));
                }
                if params.puncture_r.iter().any(|r| !(*r > 1.0) || !r.is_finite()) {
                    return Err(param("puncture_r", "puncture radii must exceed 1"));
                }
                if !(params.epsilon > 0.0) || !params.epsilon.is_finite() {
                    return Err(param("epsilon", "shift must be positive"));
                }
                decompose(set, params.split_a)?
            }
        };
        let b_centers = match &params.border_centers {
            CenterStrategy::Net { mesh, margin } => {
                check_mesh(*mesh, *margin, true)?;
                border_centers(&border, *mesh, *margin)
            }
            CenterStrategy::Explicit(c) => {
                if let Some(z) = c.iter().find(|z| !Domain::Disk.contains(**z)) {
                    return Err(Error::OutsideDomain { value: *z, domain: Domain::Disk });
                }
                c.clone()
            }
        };
        let mut tasks = Vec::new();
        for &r in &params.border_r {
            tasks.extend(b_centers.iter().map(|&center| SweepTask { kind: DensityKind::Border, center, r }));
        }
        if set.domain() == Domain::PuncturedDisk {
            let p_centers = match &params.puncture_centers {
                CenterStrategy::Net { mesh, margin } => {
                    check_mesh(*mesh, *margin, false)?;
                    let lifts = puncture
                        .iter()
                        .map(|z| {
                            lift_puncture(DomainPoint::new_unchecked(*z, Domain::PuncturedDisk)).map(|l| l.value())
                        })
                        .collect::<Result<Vec<_>>>()?;
                    puncture_centers(&lifts, *mesh, *margin)
                }
                CenterStrategy::Explicit(c) => c.clone(),
            };
            for &r in &params.puncture_r {
                tasks.extend(p_centers.iter().filter(|q| q.im - params.epsilon > r).map(|&center| SweepTask {
                    kind: DensityKind::Puncture,
                    center,
                    r,
                }));
            }
        }
        Ok(Self { domain: set.domain(), border, puncture, weight: weight.clone(), params: params.clone(), tasks })
    }

    pub fn tasks(&self) -> &[SweepTask] {
        &self.tasks
    }

    pub fn evaluate(&self, task: &SweepTask) -> Result<DensityReport> {
        let p = &self.params;
        match task.kind {
            DensityKind::Border => {
                border_density_ratio_split(&self.border, &self.weight, task.center, task.r, p.split_a, &p.rule)
            }
            DensityKind::Puncture => {
                puncture_density_ratio(&self.puncture, &self.weight, task.center, task.r, p.epsilon, &p.rule)
            }
        }
    }

    /// Combine task results, given in task order. Nonpositive denominators
    /// and window violations are counted as flagged; any other error is
    /// returned.
    pub fn assemble(&self, results: Vec<Result<DensityReport>>) -> Result<SweepResult> {
        if results.len() != self.tasks.len() {
            return Err(Error::LengthMismatch { expected: self.tasks.len(), got: results.len() });
        }
        let mut reports = Vec::with_capacity(results.len());
        let mut flagged = [0usize; 2];
        for (task, res) in self.tasks.iter().zip(results) {
            match res {
                Ok(rep) => reports.push(rep),
                Err(Error::NonPositiveDenominator { .. }) | Err(Error::WindowViolation { .. }) => {
                    flagged[task.kind as usize] += 1
                }
                Err(e) => return Err(e),
            }
        }
        let part = |kind: DensityKind, rs: &[f64], npts: usize| {
            let sup: Vec<Option<f64>> = rs
                .iter()
                .map(|r| {
                    reports
                        .iter()
                        .filter(|x| x.kind == kind && x.r == *r)
                        .map(|x| x.ratio)
                        .reduce(f64::max)
                        .or((npts == 0).then_some(0.0))
                })
                .collect();
            let known: Vec<f64> = sup.iter().flatten().copied().collect();
            let largest = rs.iter().enumerate().max_by(|a, b| a.1.total_cmp(b.1)).map(|(i, _)| i);
            PartSweep {
                kind,
                points: npts,
                r_values: rs.to_vec(),
                estimate: largest.and_then(|i| sup[i]),
                sup,
                trend: Trend::of(&known),
                flagged: flagged[kind as usize],
            }
        };
        let border = part(DensityKind::Border, &self.params.border_r, self.border.len());
        let puncture = (self.domain == Domain::PuncturedDisk)
            .then(|| part(DensityKind::Puncture, &self.params.puncture_r, self.puncture.len()));
        Ok(SweepResult { border, puncture, reports })
    }
}

fn check_mesh(mesh: f64, margin: f64, pseudo: bool) -> Result<()> {
    let ok = |v: f64| v > 0.0 && v.is_finite() && (!pseudo || v < 1.0);
    if !ok(mesh) {
        return Err(param("mesh", "center mesh out of range"));
    }
    if !ok(margin) {
        return Err(param("margin", "center margin out of range"));
    }
    Ok(())
}

/// Sequential sweep: plan, evaluate every task, assemble.
pub fn density_sweep(set: &SequenceSet, weight: &WeightModel, params: &SweepParams) -> Result<SweepResult> {
    let plan = SweepPlan::new(set, weight, params)?;
    let results = plan.tasks().iter().map(|t| plan.evaluate(t)).collect();
    plan.assemble(results)
}
