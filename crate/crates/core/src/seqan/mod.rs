//! Sequence-level analysis: separation, the border/puncture split, density
//! quotients and their sweeps, and the interpolation verdict.

mod classify;
mod density;
mod lattice;
mod net;

use alloc::string::String;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::hypgeo::{cyl_dist_unchecked, rho, Complex, Domain, DomainPoint};

pub use classify::{classify, ClassificationVerdict, ClassifyParams, Verdict};
pub use density::{
    border_density_ratio, border_density_ratio_split, density_sweep, puncture_density_ratio, Center, DensityKind,
    DensityReport, PartSweep, SweepParams, SweepPlan, SweepResult, SweepTask, Trend,
};
pub use lattice::{generate_lattice, LatticeKind};
pub use net::{border_centers, greedy_net, puncture_centers, CenterStrategy};

/// A finite list of distinct points on one surface.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSet {
    domain: Domain,
    points: Vec<DomainPoint>,
    label: String,
}

impl SequenceSet {
    /// Validates every point against `domain` and rejects exact duplicates.
    pub fn new(domain: Domain, values: &[Complex], label: impl Into<String>) -> Result<Self> {
        let mut points = Vec::with_capacity(values.len());
        for (index, v) in values.iter().enumerate() {
            let p = DomainPoint::new(*v, domain).map_err(|_| Error::PointOutsideDomain { index, domain })?;
            points.push(p);
        }
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&i, &j| {
            let (a, b) = (values[i], values[j]);
            a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)).then(i.cmp(&j))
        });
        for w in order.windows(2) {
            if values[w[0]] == values[w[1]] {
                return Err(Error::DuplicatePoint { first: w[0].min(w[1]), second: w[0].max(w[1]) });
            }
        }
        Ok(Self { domain, points, label: label.into() })
    }

    pub fn empty(domain: Domain) -> Self {
        Self { domain, points: Vec::new(), label: String::new() }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn points(&self) -> &[DomainPoint] {
        &self.points
    }

    pub fn values(&self) -> Vec<Complex> {
        self.points.iter().map(|p| p.value()).collect()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The first `n` points, keeping the label.
    pub fn truncated(&self, n: usize) -> Self {
        Self { domain: self.domain, points: self.points.iter().take(n).copied().collect(), label: self.label.clone() }
    }
}

/// Split a punctured-disk sequence at radius `a`: points with `|γ| ≤ a`
/// go to the puncture part, the rest to the border part.
pub fn decompose(set: &SequenceSet, a: f64) -> Result<(Vec<Complex>, Vec<Complex>)> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::param("a", "split radius must lie in (0, 1)"));
    }
    Ok(set.values().into_iter().partition(|z| z.norm() <= a))
}

fn half_min_pairwise(points: &[Complex], dist: impl Fn(Complex, Complex) -> f64) -> f64 {
    let mut best = f64::INFINITY;
    for (i, z) in points.iter().enumerate() {
        for w in &points[i + 1..] {
            best = best.min(dist(*z, *w));
        }
    }
    0.5 * best
}

/// Border separation radius. Disk sequences use half the least pairwise
/// pseudohyperbolic distance; on 𝔻* the points are the border part and the
/// distance is hyperbolic, `artanh ρ`. Fewer than two points give +∞.
pub fn separation_border(points: &[Complex], domain: Domain) -> f64 {
    match domain {
        Domain::Disk => half_min_pairwise(points, rho),
        Domain::PuncturedDisk => half_min_pairwise(points, |z, w| rho(z, w).atanh()),
    }
}

/// Half the least pairwise cylindrical distance; +∞ for fewer than two
/// points.
pub fn separation_puncture(points: &[Complex]) -> f64 {
    half_min_pairwise(points, cyl_dist_unchecked)
}
