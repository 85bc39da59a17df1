//! Numerical checks of the weighted Poisson–Jensen formula, Bergman's
//! inequality and the comparison between a weight and its log-mean.

use alloc::vec::Vec;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{param, Error, Result};
use crate::hypgeo::{phi, rho, Complex, Domain};
use crate::quadrature::{circle_mean, disk_log_integral_at, hyperbolic_disk_integral, Measure, QuadratureRule};
use crate::weights::{log_mean_disk, WeightModel};

/// Zeros closer than this (pseudohyperbolically) to the circle are refused.
pub const CIRCLE_CLEARANCE: f64 = 1e-6;

/// Default number of circle nodes for the Poisson–Jensen left-hand side.
pub const PJ_NODES: usize = 2048;

/// Horner evaluation of `Σ c_k z^k`.
pub fn poly_eval(coeffs: &[Complex], z: Complex) -> Complex {
    coeffs.iter().rev().fold(Complex::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// A finite Blaschke product `∏ (a_j − z)/(1 − ā_j z)`, optionally times a
/// polynomial without zeros on the closed disk.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BlaschkeSpec {
    zeros: Vec<Complex>,
    outer: Option<Vec<Complex>>,
}

impl BlaschkeSpec {
    /// Zeros are listed with multiplicity. An outer polynomial must satisfy
    /// `|c_0| > Σ_{k≥1} |c_k|`, which keeps it zero-free on the closed disk.
    pub fn new(zeros: Vec<Complex>, outer: Option<Vec<Complex>>) -> Result<Self> {
        for (index, a) in zeros.iter().enumerate() {
            if !Domain::Disk.contains(*a) {
                return Err(Error::PointOutsideDomain { index, domain: Domain::Disk });
            }
        }
        if let Some(c) = &outer {
            let tail: f64 = c.iter().skip(1).map(|c| c.norm()).sum();
            if c.is_empty() || !(c[0].norm() > tail) {
                return Err(param("outer", "outer factor must dominate its constant term"));
            }
        }
        Ok(Self { zeros, outer })
    }

    pub fn zeros(&self) -> &[Complex] {
        &self.zeros
    }

    pub fn eval(&self, z: Complex) -> Complex {
        let b: Complex = self.zeros.iter().map(|a| phi(*a, z)).product();
        match &self.outer {
            Some(c) => b * poly_eval(c, z),
            None => b,
        }
    }

    /// `log |f(z)|²`, summed factor by factor.
    pub fn log_abs_sq(&self, z: Complex) -> f64 {
        let b: f64 = self.zeros.iter().map(|a| rho(*a, z).powi(2).ln()).sum();
        match &self.outer {
            Some(c) => b + poly_eval(c, z).norm_sqr().ln(),
            None => b,
        }
    }
}

/// `|LHS − RHS|` of the weighted Poisson–Jensen formula on `D_r(z)`:
///
/// `(1/2π)∫ log(|f|²e^{−ψ})(φ_z(re^{iθ})) dθ
///   = log(|f(z)|²e^{−ψ(z)}) + Σ_{|φ_z(a)|<r} log(r²/|φ_a(z)|²)
///     − (1/2π)∫_{D_r(z)} log(r²/|φ_z|²) Δψ`.
pub fn poisson_jensen_residual(
    f: &BlaschkeSpec,
    psi: &WeightModel,
    z: Complex,
    r: f64,
    nodes: usize,
    rule: &QuadratureRule,
) -> Result<f64> {
    if psi.domain() != Domain::Disk {
        return Err(Error::Unsupported("the Poisson–Jensen check runs on the disk"));
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(param("r", "radius must lie in (0, 1)"));
    }
    if !Domain::Disk.contains(z) {
        return Err(Error::OutsideDomain { value: z, domain: Domain::Disk });
    }
    let fz = f.log_abs_sq(z);
    if !fz.is_finite() {
        return Err(Error::ZeroAtCenter(z));
    }
    let mut zero_sum = 0.0;
    for a in f.zeros() {
        let d = rho(z, *a);
        if (d - r).abs() <= CIRCLE_CLEARANCE {
            return Err(Error::ZeroNearCircle { distance: (d - r).abs(), radius: r });
        }
        if d < r {
            zero_sum += (r * r / (d * d)).ln();
        }
    }
    let lhs = circle_mean(z, r, |w| f.log_abs_sq(w) - psi.eval(w), nodes)?;
    let riesz = disk_log_integral_at(z, r, |w| psi.laplacian_vs_poincare(w), Measure::HyperbolicDisk, rule)?;
    let rhs = fz - psi.eval(z) + zero_sum - riesz / TAU;
    Ok((lhs - rhs).abs())
}

/// `|f(z)|²e^{−φ(z)} / ∫_{D_r(z)} |f|²e^{−φ} ω_P` for a polynomial `f`.
pub fn bergman_inequality_margin(
    coeffs: &[Complex],
    weight: &WeightModel,
    z: Complex,
    r: f64,
    rule: &QuadratureRule,
) -> Result<f64> {
    if weight.domain() != Domain::Disk {
        return Err(Error::Unsupported("the Bergman check runs on the disk"));
    }
    let top = poly_eval(coeffs, z).norm_sqr() * (-weight.eval(z)).exp();
    if top == 0.0 {
        return Ok(0.0);
    }
    let mass = hyperbolic_disk_integral(z, r, |w| poly_eval(coeffs, w).norm_sqr() * (-weight.eval(w)).exp(), rule)?;
    Ok(top / mass)
}

/// `max |φ(z) − φ_r(z)|` over `grid`.
pub fn mean_comparison_margin(weight: &WeightModel, r: f64, grid: &[Complex], rule: &QuadratureRule) -> Result<f64> {
    let mut best: f64 = 0.0;
    for z in grid {
        let m = log_mean_disk(weight, r, *z, rule)?;
        best = best.max((weight.eval(*z) - m).abs());
    }
    Ok(best)
}

/// One configuration of the built-in Poisson–Jensen suite.
#[derive(Debug, Clone, PartialEq)]
pub struct PjCase {
    pub f: BlaschkeSpec,
    pub s: f64,
    pub z: Complex,
    pub r: f64,
}

/// Residual of one suite case.
#[derive(Debug, Clone, PartialEq)]
pub struct PjOutcome {
    pub case: PjCase,
    pub residual: f64,
}

/// A fixed suite of 24 cases: Blaschke products with up to five zeros,
/// some with an outer factor, standard weights `s ∈ {2, 3}`, radii up to 0.9.
pub fn pj_suite() -> Vec<PjCase> {
    let golden = core::f64::consts::PI * (3.0 - 5f64.sqrt());
    let radii = [0.5, 0.6, 0.7, 0.8, 0.85, 0.9];
    let mut cases = Vec::new();
    for i in 0..24 {
        let n_zeros = i % 6;
        let zeros: Vec<Complex> = (0..n_zeros)
            .map(|j| {
                let k = (7 * i + 3 * j + 1) as f64;
                Complex::from_polar(0.15 + 0.7 * ((k * 0.618_034) % 1.0), golden * k)
            })
            .collect();
        let outer =
            (i % 4 == 3).then(|| alloc::vec![Complex::new(2.0, 0.5), Complex::new(0.3, -0.4), Complex::new(0.0, 0.2)]);
        let z = Complex::from_polar(0.6 * ((i as f64 * 0.381_966) % 1.0), 1.3 * i as f64);
        let r = radii[i % radii.len()];
        // keep clear of the circle and of the center
        let zeros = zeros.into_iter().filter(|a| (rho(z, *a) - r).abs() > 0.05 && rho(z, *a) > 0.05).collect();
        cases.push(PjCase {
            f: BlaschkeSpec::new(zeros, outer).expect("suite zeros lie in the disk"),
            s: if i % 2 == 0 { 2.0 } else { 3.0 },
            z,
            r,
        });
    }
    cases
}

/// Run [`pj_suite`] with `nodes` circle nodes.
pub fn run_pj_suite(nodes: usize, rule: &QuadratureRule) -> Result<Vec<PjOutcome>> {
    pj_suite()
        .into_iter()
        .map(|case| {
            let w = WeightModel::standard_disk(case.s)?;
            let residual = poisson_jensen_residual(&case.f, &w, case.z, case.r, nodes, rule)?;
            Ok(PjOutcome { case, residual })
        })
        .collect()
}
