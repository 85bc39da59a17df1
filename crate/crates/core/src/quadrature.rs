//! Polar tensor-product quadrature for logarithmic-kernel integrals.
//!
//! Every integral in the crate has the shape
//! `∫ f(ζ) log(r²/|ζ|²) dμ(ζ)` over a disk or annulus centred at the origin
//! of some chart. In polar coordinates the kernel times the Jacobian,
//! `ρ log(r²/ρ²)`, is bounded, so a composite Gauss–Legendre rule in ρ with
//! panels graded geometrically toward ρ = 0 handles the singularity. The
//! hyperbolic density `(1 − ρ²)^{−2}` is handled by a second grading toward
//! the rim. The angular direction uses the trapezoid rule, which is spectral
//! for periodic integrands.
//!
//! Accuracy is controlled by node doubling: every circle doubles its
//! trapezoid count until its mean settles, and the radial rule doubles its
//! order (then bisects its panels) until two successive totals agree.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{param, Error, Result};
use crate::hypgeo::{disk_coeff, phi, Complex, Domain};

/// Area form used by the disk integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Measure {
    /// `ω_P = dA / (1 − |ζ|²)²`, pulled back through `φ_z` when centred at z.
    HyperbolicDisk,
    /// `dA`.
    Euclidean,
}

/// Node counts and tolerance for the polar engine.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct QuadratureRule {
    /// Gauss–Legendre points per radial panel.
    pub order: usize,
    /// Trapezoid points on each circle; a power of two, at least 16.
    pub angular: usize,
    /// Relative tolerance between successive doublings.
    pub rel_tol: f64,
    /// Absolute tolerance between successive doublings; zero disables it.
    pub abs_tol: f64,
    /// Cap on radial × angular nodes before giving up.
    pub max_nodes: usize,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self { order: 16, angular: 64, rel_tol: 1e-8, abs_tol: 0.0, max_nodes: 1 << 20 }
    }
}

/// Radial nodes and weights on an interval, after panelling.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Where the radial panels are refined.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Panels {
    /// Geometric refinement toward the lower end `lo` (used when `lo = 0`).
    pub origin: bool,
    /// Geometric refinement toward the unit circle, `1 − ρ = (1 − hi)·2^k`.
    pub rim: bool,
    /// Longest admissible panel.
    pub max_len: f64,
}

impl Panels {
    pub const ORIGIN: Panels = Panels { origin: true, rim: false, max_len: 2.0 };
    pub const HYPERBOLIC: Panels = Panels { origin: true, rim: true, max_len: 0.25 };
    pub const HYPERBOLIC_ANNULUS: Panels = Panels { origin: false, rim: true, max_len: 0.25 };
    pub const PLAIN: Panels = Panels { origin: false, rim: false, max_len: 2.0 };

    fn breakpoints(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut pts = Vec::with_capacity(64);
        pts.push(lo);
        pts.push(hi);
        if self.origin && lo == 0.0 {
            for k in 1..=24 {
                pts.push(hi * (-(k as f64)).exp2());
            }
        }
        if self.rim && hi < 1.0 {
            let gap = 1.0 - hi;
            let mut k = 1;
            loop {
                let p = 1.0 - gap * (k as f64).exp2();
                if p <= lo {
                    break;
                }
                pts.push(p);
                k += 1;
            }
        }
        pts.retain(|p| *p >= lo && *p <= hi);
        pts.sort_by(f64::total_cmp);
        pts.dedup();
        let mut out = Vec::with_capacity(pts.len() * 2);
        for w in pts.windows(2) {
            let (a, b) = (w[0], w[1]);
            let pieces = ((b - a) / self.max_len).ceil().max(1.0) as usize;
            for j in 0..pieces {
                out.push(a + (b - a) * j as f64 / pieces as f64);
            }
        }
        out.push(hi);
        out
    }
}

const MAX_ORDER: usize = 64;

/// Gauss–Legendre nodes and weights on [−1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = alloc::vec![0.0; n];
    let mut w = alloc::vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (mut p1, mut p2) = (1.0, 0.0);
            for j in 0..n {
                let jf = j as f64;
                let p3 = p2;
                p2 = p1;
                p1 = ((2.0 * jf + 1.0) * z * p2 - jf * p3) / (jf + 1.0);
            }
            dp = n as f64 * (z * p1 - p2) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

impl QuadratureRule {
    pub fn new(order: usize, angular: usize, rel_tol: f64) -> Result<Self> {
        let rule = Self { order, angular, rel_tol, ..Self::default() };
        rule.validate()?;
        Ok(rule)
    }

    pub fn with_max_nodes(mut self, max_nodes: usize) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.order < 2 {
            return Err(param("order", "need at least two radial nodes per panel"));
        }
        if self.angular < 16 || !self.angular.is_power_of_two() {
            return Err(param("angular", "must be a power of two and at least 16"));
        }
        if !(self.rel_tol > 0.0) {
            return Err(param("rel_tol", "must be positive"));
        }
        if !(self.abs_tol >= 0.0) || !self.abs_tol.is_finite() {
            return Err(param("abs_tol", "must be finite and nonnegative"));
        }
        Ok(())
    }

    /// Composite rule on `[lo, hi]` at refinement `level`: the per-panel
    /// order doubles up to 64, after which every panel is bisected instead.
    pub(crate) fn radial(&self, lo: f64, hi: f64, panels: Panels, level: u32) -> RadialRule {
        let cap = self.order.max(MAX_ORDER);
        let (mut order, mut split) = (self.order, 1usize);
        for _ in 0..level {
            if order * 2 <= cap {
                order *= 2;
            } else {
                split *= 2;
            }
        }
        let (x, w) = gauss_legendre(order);
        let bps = panels.breakpoints(lo, hi);
        let mut nodes = Vec::with_capacity((bps.len() - 1) * order * split);
        let mut weights = Vec::with_capacity(nodes.capacity());
        for p in bps.windows(2) {
            let step = (p[1] - p[0]) / split as f64;
            for j in 0..split {
                let a = p[0] + step * j as f64;
                let half = 0.5 * step;
                let mid = a + half;
                for (xi, wi) in x.iter().zip(&w) {
                    nodes.push(mid + half * xi);
                    weights.push(half * wi);
                }
            }
        }
        RadialRule { nodes, weights }
    }

    /// The radial rule used at the first level of the hyperbolic disk integral.
    pub fn hyperbolic_radial(&self, r: f64) -> RadialRule {
        self.radial(0.0, r, Panels::HYPERBOLIC, 0)
    }

    /// `∫_lo^hi g(ρ) dρ` with order doubling.
    pub(crate) fn integrate_1d(&self, lo: f64, hi: f64, panels: Panels, g: impl Fn(f64) -> f64) -> Result<f64> {
        if hi <= lo {
            return Ok(0.0);
        }
        let mut level = 0;
        let mut prev: Option<f64> = None;
        loop {
            let rr = self.radial(lo, hi, panels, level);
            let mut est = 0.0;
            let mut l1 = 0.0;
            for (x, w) in rr.nodes.iter().zip(&rr.weights) {
                let v = g(*x);
                if v == f64::NEG_INFINITY {
                    continue;
                }
                if !v.is_finite() {
                    return Err(Error::NonFiniteSample { theta: 0.0 });
                }
                est += w * v;
                l1 += w * v.abs();
            }
            if let Some(p) = prev {
                if (est - p).abs() <= (self.rel_tol * est.abs().max(l1)).max(self.abs_tol) {
                    return Ok(est);
                }
            }
            if rr.nodes.len() * 2 > self.max_nodes {
                return Err(Error::ToleranceNotMet { last: est, previous: prev.unwrap_or(f64::NAN) });
            }
            prev = Some(est);
            level += 1;
        }
    }

    /// `∫_{lo<|ζ|<hi} f(ζ) w(|ζ|) dA(ζ)`.
    ///
    /// Each circle is summed by a nested trapezoid rule that doubles until
    /// the circle mean settles; the radial rule is then refined level by
    /// level until the total settles.
    pub(crate) fn polar(
        &self,
        lo: f64,
        hi: f64,
        panels: Panels,
        w: impl Fn(f64) -> f64,
        f: impl Fn(Complex) -> f64,
    ) -> Result<f64> {
        self.validate()?;
        if hi <= lo {
            return Ok(0.0);
        }
        let mut level = 0;
        let mut prev: Option<f64> = None;
        loop {
            let rr = self.radial(lo, hi, panels, level);
            let mut budget = self.max_nodes;
            let mut est = 0.0;
            let mut l1 = 0.0;
            for (rho, wr) in rr.nodes.iter().zip(&rr.weights) {
                let radial = wr * rho * w(*rho) * TAU;
                if radial == 0.0 {
                    continue;
                }
                let (mean, abs_mean) = match self.ring(*rho, &f, &mut budget)? {
                    Some(v) => v,
                    None => return Err(Error::ToleranceNotMet { last: est, previous: prev.unwrap_or(f64::NAN) }),
                };
                est += radial * mean;
                l1 += radial.abs() * abs_mean;
            }
            if let Some(p) = prev {
                if (est - p).abs() <= (self.rel_tol * est.abs().max(l1)).max(self.abs_tol) {
                    return Ok(est);
                }
            }
            if rr.nodes.len() * 2 * self.angular * 2 > self.max_nodes {
                return Err(Error::ToleranceNotMet { last: est, previous: prev.unwrap_or(f64::NAN) });
            }
            prev = Some(est);
            level += 1;
        }
    }

    /// Mean and absolute mean of `f` on the circle of radius `rho`, or
    /// `None` once the node budget is spent.
    fn ring(&self, rho: f64, f: &impl Fn(Complex) -> f64, budget: &mut usize) -> Result<Option<(f64, f64)>> {
        let sample = |theta: f64| -> Result<f64> {
            let v = f(Complex::from_polar(rho, theta));
            if v == f64::NEG_INFINITY {
                Ok(0.0)
            } else if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFiniteSample { theta })
            }
        };
        let mut n = self.angular;
        if *budget < n {
            return Ok(None);
        }
        *budget -= n;
        let (mut sum, mut abs) = (0.0, 0.0);
        for k in 0..n {
            let v = sample(TAU * k as f64 / n as f64)?;
            sum += v;
            abs += v.abs();
        }
        loop {
            if *budget < n {
                return Ok(None);
            }
            *budget -= n;
            let (mut add, mut add_abs) = (0.0, 0.0);
            for k in 0..n {
                let v = sample(TAU * (2 * k + 1) as f64 / (2 * n) as f64)?;
                add += v;
                add_abs += v.abs();
            }
            let coarse = sum / n as f64;
            sum += add;
            abs += add_abs;
            n *= 2;
            let fine = sum / n as f64;
            let abs_mean = abs / n as f64;
            if (fine - coarse).abs() <= 0.1 * self.rel_tol * abs_mean.max(fine.abs()) {
                return Ok(Some((fine, abs_mean)));
            }
        }
    }
}

#[inline]
fn log_kernel(r: f64) -> impl Fn(f64) -> f64 {
    let r2 = r * r;
    move |rho: f64| (r2 / (rho * rho)).ln()
}

/// `∫_{D_r(0)} f(ζ) log(r²/|ζ|²) dμ(ζ)`.
pub fn disk_log_integral(r: f64, f: impl Fn(Complex) -> f64, measure: Measure, rule: &QuadratureRule) -> Result<f64> {
    disk_log_integral_at(Complex::new(0.0, 0.0), r, f, measure, rule)
}

/// The same integral over the disk of radius r about `z`: for the hyperbolic
/// measure this is `∫_{D_r(z)} f(ζ) log(r²/|φ_z(ζ)|²) ω_P(ζ)`, computed as
/// `∫_{D_r(0)} f(φ_z(η)) log(r²/|η|²) ω_P(η)`; for the Euclidean measure the
/// disk is `|ζ − z| < r`.
pub fn disk_log_integral_at(
    z: Complex,
    r: f64,
    f: impl Fn(Complex) -> f64,
    measure: Measure,
    rule: &QuadratureRule,
) -> Result<f64> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(param("r", "radius must be positive"));
    }
    let kernel = log_kernel(r);
    match measure {
        Measure::HyperbolicDisk => {
            if r >= 1.0 {
                return Err(param("r", "pseudohyperbolic radius must lie in (0, 1)"));
            }
            if !Domain::Disk.contains(z) {
                return Err(Error::OutsideDomain { value: z, domain: Domain::Disk });
            }
            let w = move |rho: f64| kernel(rho) / ((1.0 - rho * rho) * (1.0 - rho * rho));
            if z == Complex::new(0.0, 0.0) {
                rule.polar(0.0, r, Panels::HYPERBOLIC, w, f)
            } else {
                rule.polar(0.0, r, Panels::HYPERBOLIC, w, |eta| f(phi(z, eta)))
            }
        }
        Measure::Euclidean => rule.polar(0.0, r, Panels::ORIGIN, kernel, |eta| f(z + eta)),
    }
}

/// `∫_{D_r(z)} f ω_P` over the pseudohyperbolic disk, computed as
/// `∫_{D_r(0)} f(φ_z(η)) ω_P(η)`.
pub fn hyperbolic_disk_integral(z: Complex, r: f64, f: impl Fn(Complex) -> f64, rule: &QuadratureRule) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(param("r", "pseudohyperbolic radius must lie in (0, 1)"));
    }
    if !Domain::Disk.contains(z) {
        return Err(Error::OutsideDomain { value: z, domain: Domain::Disk });
    }
    let w = |rho: f64| 1.0 / ((1.0 - rho * rho) * (1.0 - rho * rho));
    rule.polar(0.0, r, Panels::HYPERBOLIC, w, |eta| f(phi(z, eta)))
}

/// `∫_{1/2<|ζ|<r} f(ζ) log(r²/|ζ|²) ω_P(ζ)` over the pseudohyperbolic annulus.
pub fn annulus_log_integral_disk(r: f64, f: impl Fn(Complex) -> f64, rule: &QuadratureRule) -> Result<f64> {
    if !(r > 0.5 && r < 1.0) {
        return Err(param("r", "annulus outer radius must lie in (1/2, 1)"));
    }
    let kernel = log_kernel(r);
    let w = move |rho: f64| kernel(rho) * disk_coeff(Complex::new(rho, 0.0));
    rule.polar(0.5, r, Panels::HYPERBOLIC_ANNULUS, w, f)
}

/// `∫_{1<|ζ−q|<r} f(ζ) log(r²/|ζ−q|²) dA(ζ)`.
pub fn annulus_log_integral_euclid(
    q: Complex,
    r: f64,
    f: impl Fn(Complex) -> f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    if !(r > 1.0) || !r.is_finite() {
        return Err(param("r", "Euclidean annulus needs r > 1"));
    }
    rule.polar(1.0, r, Panels::PLAIN, log_kernel(r), |eta| f(q + eta))
}

/// `(1/2π) ∫_0^{2π} h(φ_z(r e^{iθ})) dθ` by the n-point trapezoid rule.
pub fn circle_mean(z: Complex, r: f64, h: impl Fn(Complex) -> f64, n: usize) -> Result<f64> {
    if !Domain::Disk.contains(z) {
        return Err(Error::OutsideDomain { value: z, domain: Domain::Disk });
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(param("r", "circle radius must lie in (0, 1)"));
    }
    if n == 0 {
        return Err(param("n", "need at least one node"));
    }
    let mut sum = 0.0;
    for k in 0..n {
        let theta = TAU * k as f64 / n as f64;
        let v = h(phi(z, Complex::from_polar(r, theta)));
        if !v.is_finite() {
            return Err(Error::NonFiniteSample { theta });
        }
        sum += v;
    }
    Ok(sum / n as f64)
}

/// `a_r = ∫_{D_r(0)} log(r²/|ζ|²) ω_P = π log 1/(1 − r²)`.
pub fn a_r(r: f64) -> f64 {
    -PI * (-r * r).ln_1p()
}

/// `c_r = ∫_{1/2<|ζ|<r} log(r²/|ζ|²) ω_P`, in closed form.
pub fn c_r_disk(r: f64) -> f64 {
    PI * ((3.0 / (4.0 * (1.0 - r * r))).ln() - (4.0 * r * r).ln() / 3.0)
}

/// `∫_{1<|ζ|<r} log(r²/|ζ|²) dA = π(r² − 1 − 2 log r)`.
pub fn c_r_cyl(r: f64) -> f64 {
    PI * (r * r - 1.0 - 2.0 * r.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const A_HALF: f64 = 0.903_779_885_384_001_4;
    const C_09: f64 = 3.082_503_561_331_180_8;

    #[test]
    fn legendre_integrates_polynomials() {
        let (x, w) = gauss_legendre(7);
        let sum: f64 = w.iter().sum();
        assert_relative_eq!(sum, 2.0, epsilon = 1e-14);
        let m12: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(12)).sum();
        assert_relative_eq!(m12, 2.0 / 13.0, epsilon = 1e-14);
        let (x, _) = gauss_legendre(64);
        assert!(x.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn rule_validation() {
        assert!(QuadratureRule::new(16, 48, 1e-8).is_err());
        assert!(QuadratureRule::new(16, 8, 1e-8).is_err());
        assert!(QuadratureRule::new(16, 32, 0.0).is_err());
        let rr = QuadratureRule::default().hyperbolic_radial(0.9);
        assert!(rr.weights.iter().all(|w| *w > 0.0));
        assert!(rr.nodes.iter().all(|x| *x > 0.0 && *x < 0.9));
    }

    #[test]
    fn euclidean_disk_mass() {
        let rule = QuadratureRule::default();
        for r in [0.3, 0.8, 2.5, 16.0] {
            let v = disk_log_integral(r, |_| 1.0, Measure::Euclidean, &rule).unwrap();
            assert_relative_eq!(v, PI * r * r, max_relative = 1e-10);
        }
        assert_eq!(disk_log_integral(0.5, |_| 0.0, Measure::Euclidean, &rule).unwrap(), 0.0);
    }

    #[test]
    fn hyperbolic_disk_mass() {
        let rule = QuadratureRule::default();
        let v = disk_log_integral(0.5, |_| 1.0, Measure::HyperbolicDisk, &rule).unwrap();
        assert_relative_eq!(v, A_HALF, max_relative = 1e-10);
        let fine = QuadratureRule { order: 32, angular: 128, ..rule };
        let w = disk_log_integral(0.5, |_| 1.0, Measure::HyperbolicDisk, &fine).unwrap();
        assert!((v - w).abs() < 1e-8);
        for r in [0.9, 0.95, 0.99] {
            let v = disk_log_integral(r, |_| 1.0, Measure::HyperbolicDisk, &rule).unwrap();
            assert_relative_eq!(v, a_r(r), max_relative = 1e-9);
        }
        assert_relative_eq!(a_r(0.5), A_HALF, max_relative = 1e-14);
    }

    #[test]
    fn pseudohyperbolic_annulus() {
        let rule = QuadratureRule::default();
        let v = annulus_log_integral_disk(0.9, |_| 1.0, &rule).unwrap();
        assert_relative_eq!(v, C_09, max_relative = 1e-9);
        assert_relative_eq!(c_r_disk(0.9), C_09, max_relative = 1e-14);
        assert_relative_eq!(c_r_disk(0.99), 9.971_275_527_698_558, max_relative = 1e-13);
        let grid: Vec<f64> = (1..20).map(|k| 0.5 + 0.025 * k as f64).collect();
        assert!(grid.windows(2).all(|p| c_r_disk(p[0]) < c_r_disk(p[1])));
        assert!(annulus_log_integral_disk(0.5, |_| 1.0, &rule).is_err());
        assert_eq!(annulus_log_integral_disk(0.7, |_| 0.0, &rule).unwrap(), 0.0);
    }

    #[test]
    fn euclidean_annulus() {
        let rule = QuadratureRule::default();
        for r in [1.5, 4.0, 16.0] {
            let a = annulus_log_integral_euclid(Complex::new(0.0, 0.0), r, |_| 1.0, &rule).unwrap();
            let b = annulus_log_integral_euclid(Complex::new(3.0, 7.5), r, |_| 1.0, &rule).unwrap();
            assert_relative_eq!(a, c_r_cyl(r), max_relative = 1e-12);
            assert!((a - b).abs() < 1e-12 * a);
        }
        assert!(annulus_log_integral_euclid(Complex::new(0.0, 0.0), 1.0, |_| 1.0, &rule).is_err());
    }

    #[test]
    fn harmonic_functions_average_to_center_value() {
        let rule = QuadratureRule::default();
        let z = Complex::new(0.3, -0.2);
        let a = a_r(0.6);
        let v = disk_log_integral_at(z, 0.6, |w| w.re, Measure::HyperbolicDisk, &rule).unwrap();
        assert_relative_eq!(v / a, z.re, epsilon = 1e-9);
        let v = disk_log_integral_at(z, 2.0, |w| (w * w).im, Measure::Euclidean, &rule).unwrap();
        assert_relative_eq!(v / (4.0 * PI), (z * z).im, epsilon = 1e-9);
    }

    #[test]
    fn circle_means() {
        let z = Complex::new(0.3, 0.0);
        assert_relative_eq!(circle_mean(z, 0.5, |_| 1.0, 64).unwrap(), 1.0, epsilon = 1e-15);
        let v = circle_mean(Complex::new(0.0, 0.0), 0.5, |w| w.re, 64).unwrap();
        assert!(v.abs() < 1e-15);
        // Jensen: the zero 0 lies inside D_{0.5}(0.3) since |φ_z(0)| = 0.3.
        let v = circle_mean(z, 0.5, |w| w.norm_sqr().ln(), 2048).unwrap();
        assert_relative_eq!(v, 0.25f64.ln(), epsilon = 1e-12);
        let err = circle_mean(Complex::new(0.5, 0.0), 0.5, |w| w.norm_sqr().ln(), 2).unwrap_err();
        assert!(matches!(err, Error::NonFiniteSample { theta } if theta == 0.0));
    }

    #[test]
    fn non_finite_samples_are_reported() {
        let rule = QuadratureRule::default();
        let e = disk_log_integral(0.5, |_| f64::NAN, Measure::Euclidean, &rule).unwrap_err();
        assert!(matches!(e, Error::NonFiniteSample { .. }));
        let v = disk_log_integral(0.5, |w| if w.re > 0.0 { f64::NEG_INFINITY } else { 1.0 }, Measure::Euclidean, &rule);
        assert!(v.is_ok());
    }

    #[test]
    fn tolerance_failure_reports_estimates() {
        let rule = QuadratureRule::default().with_max_nodes(1 << 14);
        let e = disk_log_integral(0.5, |w| if w.re > 0.1 { 1.0 } else { 0.0 }, Measure::Euclidean, &rule).unwrap_err();
        assert!(matches!(e, Error::ToleranceNotMet { .. }));
    }

    #[test]
    fn one_dimensional_rule() {
        let rule = QuadratureRule::default();
        let v = rule.integrate_1d(0.0, 1.0, Panels::ORIGIN, |x| x.ln()).unwrap();
        assert_relative_eq!(v, -1.0, epsilon = 1e-9);
    }
}
