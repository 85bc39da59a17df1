//! Logarithmic means on the disk and covered means near the puncture.

#[allow(unused_imports)]
use num_traits::Float;

use super::WeightModel;
use crate::error::{param, Error, Result};
use crate::hypgeo::{cover_p, Complex, Domain};
use crate::quadrature::{a_r, disk_log_integral, disk_log_integral_at, Measure, QuadratureRule};

/// `φ_r(z) = (1/a_r) ∫_{D_r(z)} φ(ζ) log(r²/|φ_z(ζ)|²) ω_P(ζ)`.
pub fn log_mean_disk(phi: &WeightModel, r: f64, z: Complex, rule: &QuadratureRule) -> Result<f64> {
    log_mean_disk_with(|w| phi.eval(w), r, z, rule)
}

/// [`log_mean_disk`] for a bare callable.
pub fn log_mean_disk_with(f: impl Fn(Complex) -> f64, r: f64, z: Complex, rule: &QuadratureRule) -> Result<f64> {
    let v = disk_log_integral_at(z, r, f, Measure::HyperbolicDisk, rule)?;
    Ok(v / a_r(r))
}

fn smooth_zero(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else {
        (-1.0 / t).exp()
    }
}

/// Smooth increasing step `h_c`: 0 on `[0, c/2]`, 1 on `[c, 1]`.
pub fn cutoff(c: f64, x: f64) -> f64 {
    let t = (x - 0.5 * c) / (0.5 * c);
    if t <= 0.0 {
        return 0.0;
    }
    if t >= 1.0 {
        return 1.0;
    }
    let a = smooth_zero(t);
    a / (a + smooth_zero(1.0 - t))
}

/// The c-truncated mean `(h_c φ)_r(z)`. φ is only evaluated where `h_c > 0`.
pub fn truncated_log_mean(phi: &WeightModel, r: f64, c: f64, z: Complex, rule: &QuadratureRule) -> Result<f64> {
    if !(c > 0.0 && c < 1.0) {
        return Err(param("c", "cutoff radius must lie in (0, 1)"));
    }
    log_mean_disk_with(
        |w| {
            let h = cutoff(c, w.norm());
            if h == 0.0 {
                0.0
            } else {
                h * phi.eval(w)
            }
        },
        r,
        z,
        rule,
    )
}

/// The ε-extended covered mean `μ_{ε,r}(ψ)(z)`.
pub fn extended_covered_mean(psi: &WeightModel, eps: f64, r: f64, z: Complex, rule: &QuadratureRule) -> Result<f64> {
    extended_covered_mean_with(|w| psi.eval(w), eps, r, z, rule)
}

/// Lift `f` to `τ = f ∘ P` on ℍ, shift it by `iε` so it extends to the
/// closed half plane, reflect it across ℝ, and take the Euclidean
/// log-mean over `D_r(q − iε)` for a lift `q` of `z`, normalised by the same
/// rule's value for the constant 1.
pub fn extended_covered_mean_with(
    f: impl Fn(Complex) -> f64,
    eps: f64,
    r: f64,
    z: Complex,
    rule: &QuadratureRule,
) -> Result<f64> {
    if !Domain::PuncturedDisk.contains(z) {
        return Err(if z.norm() == 0.0 {
            Error::ZeroModulus
        } else {
            Error::OutsideDomain { value: z, domain: Domain::PuncturedDisk }
        });
    }
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(param("epsilon", "shift must be positive"));
    }
    let q = Complex::new(z.arg(), -z.norm().ln());
    let base = q - Complex::new(0.0, eps);
    let tau_plus = |v: Complex| {
        let v = if v.im > 0.0 { v } else { v.conj() };
        f(cover_p(v + Complex::new(0.0, eps)))
    };
    let num = disk_log_integral_at(base, r, tau_plus, Measure::Euclidean, rule)?;
    let den = disk_log_integral(r, |_| 1.0, Measure::Euclidean, rule)?;
    Ok(num / den)
}
