//! Closed-form geometry of the Poincaré disk 𝔻 and the punctured disk 𝔻*.
//!
//! Metric coefficients are densities against the Euclidean area form
//! `dA = (i/2) dz∧dz̄`, so `ω = coeff · dA` throughout the crate:
//!
//! * 𝔻:  `ω_P = dA / (1 − |z|²)²`
//! * 𝔻*: `ω_P = dA / (|z|² (log 1/|z|²)²)`
//! * ℂ*: `ω_c = dA / |z|²` (cylindrical metric)
//!
//! The punctured disk is uniformized by `P(w) = e^{iw}` restricted to the
//! upper half plane ℍ, with deck group generated by `w ↦ w + 2π`.

use core::f64::consts::{PI, TAU};
use core::fmt;

use num_complex::Complex64;
use num_traits::Float;

use crate::error::{Error, Result};

pub type Complex = Complex64;

/// Which surface a point lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Domain {
    Disk,
    PuncturedDisk,
}

impl Domain {
    pub fn contains(self, z: Complex) -> bool {
        let m = z.norm();
        match self {
            Domain::Disk => m < 1.0,
            Domain::PuncturedDisk => m > 0.0 && m < 1.0,
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Disk => f.write_str("unit disk"),
            Domain::PuncturedDisk => f.write_str("punctured unit disk"),
        }
    }
}

/// A complex number tagged with the surface it belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainPoint {
    value: Complex,
    domain: Domain,
}

impl DomainPoint {
    pub fn new(value: Complex, domain: Domain) -> Result<Self> {
        if !value.re.is_finite() || !value.im.is_finite() || !domain.contains(value) {
            return Err(Error::OutsideDomain { value, domain });
        }
        Ok(Self { value, domain })
    }

    pub fn disk(value: Complex) -> Result<Self> {
        Self::new(value, Domain::Disk)
    }

    pub fn punctured(value: Complex) -> Result<Self> {
        Self::new(value, Domain::PuncturedDisk)
    }

    /// Caller guarantees the domain invariant.
    pub(crate) fn new_unchecked(value: Complex, domain: Domain) -> Self {
        debug_assert!(domain.contains(value) || value.norm() < 1.0);
        Self { value, domain }
    }

    #[inline]
    pub fn value(&self) -> Complex {
        self.value
    }

    #[inline]
    pub fn domain(&self) -> Domain {
        self.domain
    }

    #[inline]
    pub fn modulus(&self) -> f64 {
        self.value.norm()
    }
}

/// A point of the upper half plane ℍ covering a point of 𝔻*.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LiftedPoint {
    value: Complex,
    fundamental: bool,
}

impl LiftedPoint {
    pub fn new(value: Complex) -> Result<Self> {
        if !(value.im > 0.0) || !value.re.is_finite() || !value.im.is_finite() {
            return Err(Error::param("lift", "lifted points need Im w > 0"));
        }
        Ok(Self { value, fundamental: (0.0..TAU).contains(&value.re) })
    }

    #[inline]
    pub fn value(&self) -> Complex {
        self.value
    }

    /// `Re w ∈ [0, 2π)`.
    #[inline]
    pub fn is_fundamental(&self) -> bool {
        self.fundamental
    }

    /// Deck translate `w + 2πk`.
    pub fn translate(&self, k: i64) -> Self {
        let value = self.value + Complex::new(TAU * k as f64, 0.0);
        Self { value, fundamental: (0.0..TAU).contains(&value.re) }
    }

    pub fn project(&self) -> DomainPoint {
        DomainPoint::new_unchecked(cover_p(self.value), Domain::PuncturedDisk)
    }
}

fn check_disk(z: Complex) -> Result<()> {
    if Domain::Disk.contains(z) {
        Ok(())
    } else {
        Err(Error::OutsideDomain { value: z, domain: Domain::Disk })
    }
}

/// `φ_z(ζ) = (z − ζ)/(1 − z̄ζ)` without domain checks.
#[inline]
pub(crate) fn phi(z: Complex, zeta: Complex) -> Complex {
    (z - zeta) / (Complex::new(1.0, 0.0) - z.conj() * zeta)
}

/// |φ_z(w)| without domain checks.
#[inline]
pub(crate) fn rho(z: Complex, w: Complex) -> f64 {
    (z - w).norm() / (Complex::new(1.0, 0.0) - z.conj() * w).norm()
}

/// The disk involution exchanging 0 and `z`.
pub fn mobius_involution(z: Complex, zeta: Complex) -> Result<Complex> {
    check_disk(z)?;
    check_disk(zeta)?;
    Ok(phi(z, zeta))
}

/// Pseudohyperbolic distance `|φ_z(w)|`.
pub fn pseudo_dist(z: Complex, w: Complex) -> Result<f64> {
    check_disk(z)?;
    check_disk(w)?;
    Ok(rho(z, w))
}

/// Geodesic distance of `ω_P` on 𝔻, `½ log((1+ρ)/(1−ρ)) = artanh ρ`.
pub fn hyp_dist(z: Complex, w: Complex) -> Result<f64> {
    pseudo_dist(z, w).map(Float::atanh)
}

/// Density of the Poincaré metric of the point's surface against `dA`.
pub fn poincare_coeff(p: DomainPoint) -> f64 {
    let z = p.value();
    match p.domain() {
        Domain::Disk => disk_coeff(z),
        Domain::PuncturedDisk => punctured_coeff(z),
    }
}

#[inline]
pub(crate) fn disk_coeff(z: Complex) -> f64 {
    let t = 1.0 - z.norm_sqr();
    1.0 / (t * t)
}

#[inline]
pub(crate) fn punctured_coeff(z: Complex) -> f64 {
    let m2 = z.norm_sqr();
    let l = log_inv_sq(z);
    1.0 / (m2 * l * l)
}

/// `log 1/|z|²`.
#[inline]
pub(crate) fn log_inv_sq(z: Complex) -> f64 {
    -2.0 * z.norm().ln()
}

/// Distance on 𝔻* between two points on a common ray from the puncture.
pub fn pdisk_radial_dist(z: DomainPoint, w: DomainPoint) -> Result<f64> {
    let (z, w) = (require_punctured(z)?, require_punctured(w)?);
    let arg = (z * w.conj()).arg();
    if arg.abs() > 1e-10 {
        return Err(Error::ArgumentMismatch { z, w, arg });
    }
    Ok(0.5 * (log_inv_sq(z).ln() - log_inv_sq(w).ln()).abs())
}

/// Length of the shorter arc of the circle `|ζ| = |z|` joining `z` and `w`,
/// measured in the Poincaré metric of 𝔻*. This is an upper bound for the
/// geodesic distance, not the distance itself.
pub fn pdisk_arc_dist(z: DomainPoint, w: DomainPoint) -> Result<f64> {
    let (z, w) = (require_punctured(z)?, require_punctured(w)?);
    let (rz, rw) = (z.norm(), w.norm());
    if (rz - rw).abs() > 1e-12 * rz.max(rw) {
        return Err(Error::param("w", "arc distance needs |z| = |w|"));
    }
    let dtheta = (z * w.conj()).arg().abs();
    Ok(dtheta / (2.0 * (1.0 / rz).ln()))
}

fn require_punctured(p: DomainPoint) -> Result<Complex> {
    match p.domain() {
        Domain::PuncturedDisk => Ok(p.value()),
        Domain::Disk => Domain::PuncturedDisk.contains(p.value()).then_some(p.value()).ok_or(Error::ZeroModulus),
    }
}

/// Cylindrical distance `|log z − log w|` with the argument difference taken
/// in (−π, π].
pub fn cyl_dist(z: Complex, w: Complex) -> Result<f64> {
    if z.norm() == 0.0 || w.norm() == 0.0 {
        return Err(Error::ZeroModulus);
    }
    Ok(cyl_dist_unchecked(z, w))
}

#[inline]
pub(crate) fn cyl_dist_unchecked(z: Complex, w: Complex) -> f64 {
    let radial = z.norm().ln() - w.norm().ln();
    let mut angular = (z * w.conj()).arg();
    if angular <= -PI {
        angular += TAU;
    }
    radial.hypot(angular)
}

/// Clamped injectivity radius `min(ι_P, 1)`; `ι_P(z) = π / (2 log 1/|z|²)` on
/// 𝔻*, and +∞ on the simply connected disk.
pub fn injectivity_radius(p: DomainPoint) -> f64 {
    match p.domain() {
        Domain::Disk => 1.0,
        Domain::PuncturedDisk => (PI / (2.0 * log_inv_sq(p.value()))).min(1.0),
    }
}

/// `ω_P`-area of the geodesic disk of radius `injectivity_radius(p)`.
pub fn area_a(p: DomainPoint) -> f64 {
    let t = injectivity_radius(p).tanh();
    let t2 = t * t;
    PI * t2 / (1.0 - t2)
}

/// Fundamental lift of a punctured-disk point through `P(w) = e^{iw}`.
pub fn lift_puncture(p: DomainPoint) -> Result<LiftedPoint> {
    let z = p.value();
    let m = z.norm();
    if m == 0.0 {
        return Err(Error::ZeroModulus);
    }
    if m >= 1.0 {
        return Err(Error::OutsideDomain { value: z, domain: Domain::PuncturedDisk });
    }
    let mut re = z.arg();
    if re < 0.0 {
        re += TAU;
    }
    if re >= TAU {
        re -= TAU;
    }
    LiftedPoint::new(Complex::new(re, -m.ln()))
}

/// The covering map `P(w) = e^{iw}`.
#[inline]
pub fn cover_p(w: Complex) -> Complex {
    (Complex::i() * w).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn involution_examples() {
        assert_eq!(mobius_involution(c(0.5, 0.0), c(0.0, 0.0)).unwrap(), c(0.5, 0.0));
        assert_eq!(mobius_involution(c(0.5, 0.0), c(0.5, 0.0)).unwrap(), c(0.0, 0.0));
        let z = c(0.3, 0.2);
        let zeta = c(0.0, -0.1);
        let back = mobius_involution(z, mobius_involution(z, zeta).unwrap()).unwrap();
        assert!((back - zeta).norm() < 1e-14);
        assert!(matches!(mobius_involution(c(1.0, 0.0), zeta), Err(Error::OutsideDomain { .. })));
        assert!(mobius_involution(z, c(0.0, 1.2)).is_err());
    }

    #[test]
    fn distance_examples() {
        let w = c(0.3, -0.4);
        assert_abs_diff_eq!(pseudo_dist(c(0.0, 0.0), w).unwrap(), 0.5, epsilon = 1e-15);
        assert_eq!(pseudo_dist(w, w).unwrap(), 0.0);
        assert_abs_diff_eq!(pseudo_dist(c(0.5, 0.0), c(-0.5, 0.0)).unwrap(), 0.8, epsilon = 1e-15);
        assert_abs_diff_eq!(hyp_dist(c(0.0, 0.0), c(0.5, 0.0)).unwrap(), 0.5 * 3f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(hyp_dist(c(0.0, 0.0), c(0.9, 0.0)).unwrap(), 0.5 * 19f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(hyp_dist(c(0.0, 0.0), c(0.5, 0.0)).unwrap(), 0.549306, epsilon = 1e-6);
        assert_eq!(hyp_dist(w, w).unwrap(), 0.0);
    }

    #[test]
    fn poincare_coefficients() {
        let d0 = DomainPoint::disk(c(0.0, 0.0)).unwrap();
        assert_eq!(poincare_coeff(d0), 1.0);
        let p = DomainPoint::punctured(c((-0.5f64).exp(), 0.0)).unwrap();
        assert_abs_diff_eq!(poincare_coeff(p), core::f64::consts::E, epsilon = 1e-12);
        let h = DomainPoint::disk(c(0.5, 0.0)).unwrap();
        assert_abs_diff_eq!(poincare_coeff(h), 1.0 / 0.5625, epsilon = 1e-14);
        assert!(DomainPoint::punctured(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn radial_and_cylindrical_distances() {
        let p = |x: f64| DomainPoint::punctured(c(x, 0.0)).unwrap();
        let e = core::f64::consts::E;
        assert_abs_diff_eq!(pdisk_radial_dist(p((-1.0f64).exp()), p((-e).exp())).unwrap(), 0.5, epsilon = 1e-14);
        assert_eq!(pdisk_radial_dist(p(0.3), p(0.3)).unwrap(), 0.0);
        assert_abs_diff_eq!(
            pdisk_radial_dist(p((-0.5f64).exp()), p((-2.0f64).exp())).unwrap(),
            2f64.ln(),
            epsilon = 1e-14
        );
        let off = DomainPoint::punctured(c(0.0, 0.3)).unwrap();
        assert!(matches!(pdisk_radial_dist(p(0.3), off), Err(Error::ArgumentMismatch { .. })));

        assert_abs_diff_eq!(cyl_dist(c(0.1, 0.0), c(0.2, 0.0)).unwrap(), 2f64.ln(), epsilon = 1e-15);
        let r = 0.4;
        assert_abs_diff_eq!(cyl_dist(c(r, 0.0), Complex::from_polar(r, PI)).unwrap(), PI, epsilon = 1e-15);
        assert_eq!(cyl_dist(c(0.2, 0.1), c(0.2, 0.1)).unwrap(), 0.0);
        assert_eq!(cyl_dist(c(0.0, 0.0), c(0.2, 0.1)), Err(Error::ZeroModulus));
    }

    #[test]
    fn arc_distance_bounds_radial_geometry() {
        let r = (-2.0f64).exp();
        let z = DomainPoint::punctured(c(r, 0.0)).unwrap();
        let w = DomainPoint::punctured(Complex::from_polar(r, 1.0)).unwrap();
        // log 1/r = 2
        assert_abs_diff_eq!(pdisk_arc_dist(z, w).unwrap(), 0.25, epsilon = 1e-14);
    }

    #[test]
    fn injectivity_and_area() {
        let at = |m: f64| DomainPoint::punctured(c(m, 0.0)).unwrap();
        assert_abs_diff_eq!(injectivity_radius(at((-PI / 2.0).exp())), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(injectivity_radius(at((-PI).exp())), 0.25, epsilon = 1e-14);
        assert_eq!(injectivity_radius(at(0.9)), 1.0);
        // high-precision value of π tanh²(½)/(1 − tanh²(½))
        assert_abs_diff_eq!(area_a(at((-PI / 2.0).exp())), 0.853_069_066_321_225_6, epsilon = 1e-14);
        let d = area_a(DomainPoint::disk(c(0.0, 0.0)).unwrap());
        assert_abs_diff_eq!(d, 4.338_846_845_442_859, epsilon = 1e-13);
    }

    #[test]
    fn lifting() {
        let p = DomainPoint::punctured(c((-2.0f64).exp(), 0.0)).unwrap();
        let w = lift_puncture(p).unwrap();
        assert!((w.value() - c(0.0, 2.0)).norm() < 1e-15);
        assert!(w.is_fundamental());
        let p = DomainPoint::punctured((-1.0f64).exp() * Complex::from_polar(1.0, 1.0)).unwrap();
        assert!((lift_puncture(p).unwrap().value() - c(1.0, 1.0)).norm() < 1e-14);
        assert_eq!(cover_p(c(0.0, 0.0)), c(1.0, 0.0));
        assert!((cover_p(c(0.0, 2.0)) - c((-2.0f64).exp(), 0.0)).norm() < 1e-16);
        let w = c(0.7, 1.3);
        assert!((cover_p(w + c(TAU, 0.0)) - cover_p(w)).norm() < 1e-15);
        let lifted = lift_puncture(p).unwrap();
        assert!(!lifted.translate(1).is_fundamental());
        assert!((lifted.translate(1).project().value() - p.value()).norm() < 1e-14);
    }
}
