//! Sequence potentials `λ_r^T`, the singular densities `σ_r^Γ = |T|² e^{−λ}`
//! and the closed-form density sums.
//!
//! The generator is `T = ∏ φ_γ` (a Blaschke product) near the border and
//! the polynomial `T(ζ) = ∏ (ζ − γ)` near the puncture, optionally times an
//! outer factor `e^{p}` with `p` a polynomial.
//!
//! For the zero factors the angular part of the mean is done exactly by
//! Jensen's formula, which leaves one radial integral per zero:
//! `log σ = −Σ_γ E(dist(z, γ))` with `E ≥ 0`, so `σ ≤ 1` holds by
//! construction. The outer factor contributes a harmonic term whose mean is
//! computed by the 2-D engine; the difference it makes to σ is exactly zero
//! in exact arithmetic, which is what makes σ independent of the generator.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{param, Error, Result};
use crate::hypgeo::{cover_p, phi, rho, Complex, Domain};
use crate::quadrature::{
    annulus_log_integral_disk, annulus_log_integral_euclid, c_r_cyl, c_r_disk, Panels, QuadratureRule,
};

/// Which end of the surface the sequence lives near.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum PotentialKind {
    Border,
    Puncture,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialValue {
    pub sigma: f64,
    pub lambda: f64,
}

/// Potential of a finite sequence at a fixed radius.
#[derive(Debug, Clone)]
pub struct SequencePotential {
    kind: PotentialKind,
    r: f64,
    zeros: Vec<Complex>,
    lifts: Vec<Complex>,
    outer: Vec<Complex>,
    rule: QuadratureRule,
    norm: f64,
    inner: f64,
    outer_norm: f64,
}

/// Kernel weight of the pseudohyperbolic annulus in the radial variable.
#[inline]
fn disk_kernel(r: f64, t: f64) -> f64 {
    let u = 1.0 - t * t;
    TAU * t * (r * r / (t * t)).ln() / (u * u)
}

/// Excess integrals are compared against O(1) logs, so tiny ones need only
/// absolute accuracy.
fn fine_1d() -> QuadratureRule {
    QuadratureRule { rel_tol: 1e-13, abs_tol: 1e-15, ..QuadratureRule::default() }
}

/// Antiderivative in `u = ρ²` of `(log r² − log u)(log u − log d²)`.
fn cyl_antiderivative(u: f64, a: f64, b: f64) -> f64 {
    let l = u.ln();
    -(u * l * l - 2.0 * u * l + 2.0 * u) + (a + b) * (u * l - u) - a * b * u
}

impl SequencePotential {
    /// Blaschke potential for zeros in 𝔻 and `r ∈ (1/2, 1)`.
    pub fn border(zeros: &[Complex], r: f64) -> Result<Self> {
        if !(r > 0.5 && r < 1.0) {
            return Err(param("r", "border potentials need r in (1/2, 1)"));
        }
        for (index, z) in zeros.iter().enumerate() {
            if !Domain::Disk.contains(*z) {
                return Err(Error::PointOutsideDomain { index, domain: Domain::Disk });
            }
        }
        let norm = c_r_disk(r);
        let inner =
            fine_1d().integrate_1d(0.5, r, Panels::HYPERBOLIC_ANNULUS, |t| (t * t).ln() * disk_kernel(r, t))? / norm;
        Ok(Self {
            kind: PotentialKind::Border,
            r,
            zeros: zeros.to_vec(),
            lifts: Vec::new(),
            outer: Vec::new(),
            rule: QuadratureRule::default(),
            norm,
            inner,
            outer_norm: 0.0,
        })
    }

    /// Covered potential for zeros in 𝔻* and Euclidean radius `r > 1`.
    pub fn puncture(zeros: &[Complex], r: f64) -> Result<Self> {
        if !(r > 1.0) || !r.is_finite() {
            return Err(param("r", "puncture potentials need r > 1"));
        }
        let mut lifts = Vec::with_capacity(zeros.len());
        for (index, z) in zeros.iter().enumerate() {
            if !Domain::PuncturedDisk.contains(*z) {
                return Err(Error::PointOutsideDomain { index, domain: Domain::PuncturedDisk });
            }
            lifts.push(fundamental_lift(*z));
        }
        let mut pot = Self {
            kind: PotentialKind::Puncture,
            r,
            zeros: zeros.to_vec(),
            lifts,
            outer: Vec::new(),
            rule: QuadratureRule::default(),
            norm: c_r_cyl(r),
            inner: 0.0,
            outer_norm: 0.0,
        };
        pot.inner = pot.cyl_excess(1.0);
        Ok(pot)
    }

    pub fn with_rule(mut self, rule: QuadratureRule) -> Result<Self> {
        rule.validate()?;
        self.rule = rule;
        if !self.outer.is_empty() {
            self.outer_norm = self.outer_mass()?;
        }
        Ok(self)
    }

    /// Multiply the generator by `exp(Σ_k c_k ζ^k)`.
    pub fn with_outer(mut self, coeffs: Vec<Complex>) -> Result<Self> {
        self.outer = coeffs;
        self.outer_norm = if self.outer.is_empty() { 0.0 } else { self.outer_mass()? };
        Ok(self)
    }

    fn outer_mass(&self) -> Result<f64> {
        match self.kind {
            PotentialKind::Border => annulus_log_integral_disk(self.r, |_| 1.0, &self.rule),
            PotentialKind::Puncture => annulus_log_integral_euclid(Complex::new(0.0, 0.0), self.r, |_| 1.0, &self.rule),
        }
    }

    pub fn kind(&self) -> PotentialKind {
        self.kind
    }

    pub fn radius(&self) -> f64 {
        self.r
    }

    /// `log |e^{p(ζ)}|² = 2 Re p(ζ)`.
    fn outer_log(&self, z: Complex) -> f64 {
        let mut acc = Complex::new(0.0, 0.0);
        for c in self.outer.iter().rev() {
            acc = acc * z + c;
        }
        2.0 * acc.re
    }

    /// Excess `E(s)` of the radial mean of `log |φ_a|²` over its value at
    /// the centre, for a zero at pseudohyperbolic distance `s`.
    fn disk_excess(&self, s: f64) -> Result<f64> {
        let r = self.r;
        if s >= r {
            return Ok(0.0);
        }
        if s <= 0.5 {
            return Ok(self.inner - (s * s).ln());
        }
        let ls = (s * s).ln();
        let v =
            fine_1d().integrate_1d(s, r, Panels::HYPERBOLIC_ANNULUS, |t| ((t * t).ln() - ls) * disk_kernel(r, t))?;
        Ok((v / self.norm).max(0.0))
    }

    /// Cylindrical excess `E(d)` for `d ≥ 1`, in closed form.
    fn cyl_excess(&self, d: f64) -> f64 {
        let r = self.r;
        if d >= r {
            return 0.0;
        }
        let (a, b) = ((r * r).ln(), (d * d).ln());
        let lo = d.max(1.0);
        let v = PI * (cyl_antiderivative(r * r, a, b) - cyl_antiderivative(lo * lo, a, b));
        (v / self.norm).max(0.0)
    }

    /// σ and λ at `z`.
    pub fn evaluate(&self, z: Complex) -> Result<PotentialValue> {
        match self.kind {
            PotentialKind::Border => self.evaluate_border(z),
            PotentialKind::Puncture => self.evaluate_puncture(z),
        }
    }

    fn evaluate_border(&self, z: Complex) -> Result<PotentialValue> {
        if !Domain::Disk.contains(z) {
            return Err(Error::OutsideDomain { value: z, domain: Domain::Disk });
        }
        let mut log_sigma = 0.0;
        let mut lambda = 0.0;
        let mut hit = false;
        for g in &self.zeros {
            let s = rho(z, *g);
            if s == 0.0 {
                hit = true;
                lambda += self.inner;
            } else if s <= 0.5 {
                log_sigma -= self.inner - (s * s).ln();
                lambda += self.inner;
            } else {
                let e = self.disk_excess(s)?;
                log_sigma -= e;
                lambda += (s * s).ln() + e;
            }
        }
        if !self.outer.is_empty() {
            let mean = annulus_log_integral_disk(self.r, |w| self.outer_log(phi(z, w)), &self.rule)? / self.outer_norm;
            lambda += mean;
            log_sigma += self.outer_log(z) - mean;
        }
        Ok(PotentialValue { sigma: if hit { 0.0 } else { log_sigma.exp() }, lambda })
    }

    fn evaluate_puncture(&self, z: Complex) -> Result<PotentialValue> {
        if !Domain::PuncturedDisk.contains(z) {
            return Err(if z.norm() == 0.0 {
                Error::ZeroModulus
            } else {
                Error::OutsideDomain { value: z, domain: Domain::PuncturedDisk }
            });
        }
        let q = fundamental_lift(z);
        let mut log_sigma = 0.0;
        let mut lambda = 0.0;
        let mut hit = false;
        for (g, lift) in self.zeros.iter().zip(&self.lifts) {
            let mut near = false;
            for w in translates_of(*lift, q, self.r) {
                let u = q - w;
                let d = u.norm();
                if d < 1.0 {
                    near = true;
                    // log|z − γ|² − log d² + E(1), written so that it stays
                    // finite as z → γ.
                    lambda += g.norm_sqr().ln() + expm1_over(u).norm_sqr().ln() + self.inner;
                    if d == 0.0 {
                        hit = true;
                    } else {
                        log_sigma -= self.inner - (d * d).ln();
                    }
                } else {
                    let e = self.cyl_excess(d);
                    log_sigma -= e;
                    lambda += e;
                }
            }
            if !near {
                lambda += (z - g).norm_sqr().ln();
            }
        }
        if !self.outer.is_empty() {
            let mean =
                annulus_log_integral_euclid(q, self.r, |w| self.outer_log(cover_p(w)), &self.rule)? / self.outer_norm;
            lambda += mean;
            log_sigma += self.outer_log(z) - mean;
        }
        Ok(PotentialValue { sigma: if hit { 0.0 } else { log_sigma.exp() }, lambda })
    }
}

/// `(e^{iu} − 1)/u`, accurate for small `u`.
fn expm1_over(u: Complex) -> Complex {
    let i = Complex::i();
    if u.norm() < 1e-3 {
        // i (1 + iu/2 − u²/6 − iu³/24)
        let iu = i * u;
        i * (Complex::new(1.0, 0.0) + iu / 2.0 + iu * iu / 6.0 + iu * iu * iu / 24.0)
    } else {
        ((i * u).exp() - 1.0) / u
    }
}

fn fundamental_lift(z: Complex) -> Complex {
    let mut re = z.arg();
    if re < 0.0 {
        re += TAU;
    }
    if re >= TAU {
        re -= TAU;
    }
    Complex::new(re, -z.norm().ln())
}

fn translates_of(lift: Complex, q: Complex, r: f64) -> impl Iterator<Item = Complex> {
    let k0 = ((q.re - r - lift.re) / TAU).ceil() as i64;
    let k1 = ((q.re + r - lift.re) / TAU).floor() as i64;
    (k0..=k1).map(move |k| lift + Complex::new(TAU * k as f64, 0.0)).filter(move |w| (q - *w).norm() < r)
}

/// Every deck translate `γ̃ + 2πk` of every point's lift lying within
/// Euclidean distance `r` of `q`, paired with the point's index.
pub fn translates_within(points: &[Complex], q: Complex, r: f64) -> Vec<(usize, Complex)> {
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if p.norm() == 0.0 {
            continue;
        }
        out.extend(translates_of(fundamental_lift(*p), q, r).map(|w| (i, w)));
    }
    out
}

/// `(2π/c_r) Σ log 1/|φ_z(γ)|²` over `1/2 < |φ_z(γ)| < r`.
pub fn border_density_form(points: &[Complex], r: f64, z: Complex) -> f64 {
    let sum: f64 = points
        .iter()
        .map(|g| rho(z, *g))
        .filter(|s| *s > 0.5 && *s < r)
        .map(|s| -(s * s).ln())
        .fold(0.0, |acc, v| acc + v);
    TAU / c_r_disk(r) * sum
}

/// `(1/c_r) Σ log(r²/|γ̃ − q|²)` over lifted translates with `1 < |γ̃ − q| < r`.
pub fn puncture_density_form(points: &[Complex], r: f64, q: Complex) -> f64 {
    let sum: f64 = translates_within(points, q, r)
        .into_iter()
        .map(|(_, w)| (q - w).norm())
        .filter(|d| *d > 1.0)
        .map(|d| (r * r / (d * d)).ln())
        .fold(0.0, |acc, v| acc + v);
    sum / c_r_cyl(r)
}
