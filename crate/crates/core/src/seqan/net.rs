//! Greedy separated nets used as center grids for density sweeps.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

use crate::hypgeo::{rho, Complex};

/// Deepest hyperbolic radius a net may reach; `tanh(12) ≈ 1 − 7.6e−11`.
const MAX_HYP_RADIUS: f64 = 12.0;

/// Relative slack on the net separation test. Ring grids put neighbours at
/// exactly the mesh, so without it rounding decides ties.
const TIE_SLACK: f64 = 1e-9;

/// How a sweep places its centers.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum CenterStrategy {
    /// A greedy net of the given mesh over the hull of the points enlarged
    /// by `margin`. Border meshes are pseudohyperbolic, puncture meshes are
    /// Euclidean on the cover.
    Net { mesh: f64, margin: f64 },
    /// Fixed centers: disk points for the border part, lifted points for the
    /// puncture part.
    Explicit(Vec<Complex>),
}

/// Greedy pseudohyperbolic net: candidates are taken in order and kept when
/// they are at distance at least `sep` from everything kept so far.
pub fn greedy_net(candidates: impl IntoIterator<Item = Complex>, sep: f64) -> Vec<Complex> {
    let h = sep.atanh();
    let floor = sep * (1.0 - TIE_SLACK);
    let bucket = |z: Complex| (z.norm().atanh() / h).floor() as i64;
    let mut buckets: BTreeMap<i64, Vec<Complex>> = BTreeMap::new();
    let mut kept = Vec::new();
    for z in candidates {
        let b = bucket(z);
        let clear = (b - 1..=b + 1).filter_map(|k| buckets.get(&k)).all(|bin| bin.iter().all(|w| rho(z, *w) >= floor));
        if clear {
            buckets.entry(b).or_default().push(z);
            kept.push(z);
        }
    }
    kept
}

/// Grid of concentric rings at hyperbolic spacing `step`, out to
/// hyperbolic radius `t_max`, each starting at angle `phase`; the origin
/// comes first.
pub(crate) fn hyperbolic_rings(step: f64, t_max: f64, phase: f64) -> impl Iterator<Item = Complex> {
    let rings = (t_max / step).floor() as usize;
    (0..=rings).flat_map(move |k| {
        let rho = (k as f64 * step).tanh();
        let n = if k == 0 { 1 } else { ((TAU * rho / (1.0 - rho * rho)) / step).ceil().max(1.0) as usize };
        (0..n).map(move |j| Complex::from_polar(rho, phase + TAU * j as f64 / n as f64))
    })
}

/// Border centers: the points themselves, then a ring grid, thinned to a
/// greedy net of pseudohyperbolic mesh `mesh` that covers `|z| ≤ max|γ|`
/// enlarged by `margin`. The grid is turned to the first point's argument,
/// so rotating the points rotates the net.
pub fn border_centers(points: &[Complex], mesh: f64, margin: f64) -> Vec<Complex> {
    if points.is_empty() {
        return Vec::new();
    }
    let hull = points.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let t_max = (hull.atanh() + margin.atanh()).min(MAX_HYP_RADIUS);
    let phase = points.iter().find(|z| z.norm() > 0.0).map_or(0.0, |z| z.arg());
    let grid = hyperbolic_rings(mesh.atanh(), t_max, phase);
    greedy_net(points.iter().copied().chain(grid), mesh)
}

/// Puncture centers on the cover: the fundamental lifts of the points, then
/// a square grid of spacing `mesh` over `0 ≤ Re < 2π` and the band of
/// heights spanned by the lifts enlarged by `margin`, thinned to a greedy
/// net in the cylindrical distance. Columns start at the first lift.
pub fn puncture_centers(lifts: &[Complex], mesh: f64, margin: f64) -> Vec<Complex> {
    if lifts.is_empty() {
        return Vec::new();
    }
    let lo = lifts.iter().map(|w| w.im).fold(f64::INFINITY, f64::min) - margin;
    let hi = lifts.iter().map(|w| w.im).fold(f64::NEG_INFINITY, f64::max) + margin;
    let cols = (TAU / mesh).ceil() as usize;
    let rows = ((hi - lo) / mesh).floor() as usize;
    let x0 = lifts[0].re;
    let grid = (0..=rows).flat_map(move |i| {
        (0..cols).map(move |j| Complex::new(x0 + TAU * j as f64 / cols as f64, lo + mesh * i as f64))
    });
    let floor = mesh * (1.0 - TIE_SLACK);
    let bucket = |w: Complex| (w.im / mesh).floor() as i64;
    let mut buckets: BTreeMap<i64, Vec<Complex>> = BTreeMap::new();
    let mut kept = Vec::new();
    for w in lifts.iter().copied().chain(grid) {
        if w.im <= 0.0 {
            continue;
        }
        let b = bucket(w);
        let clear =
            (b - 1..=b + 1).filter_map(|k| buckets.get(&k)).all(|bin| bin.iter().all(|u| cover_gap(w, *u) >= floor));
        if clear {
            buckets.entry(b).or_default().push(w);
            kept.push(w);
        }
    }
    kept
}

/// Distance between the deck orbits of two lifted points.
fn cover_gap(w: Complex, u: Complex) -> f64 {
    let mut dx = (w.re - u.re) % TAU;
    if dx < 0.0 {
        dx += TAU;
    }
    dx.min(TAU - dx).hypot(w.im - u.im)
}
