//! Weight functions φ and the averaging constructions built on them.
//!
//! Laplacians are reported as ratios against a reference metric, with the
//! convention `Δ = i∂∂̄`, so that `Δ log 1/(1 − |z|²) = 2ω_P` on the disk.

mod means;
mod potential;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{param, Error, Result};
use crate::hypgeo::{disk_coeff, log_inv_sq, Complex, Domain};

pub use means::{
    cutoff, extended_covered_mean, extended_covered_mean_with, log_mean_disk, log_mean_disk_with, truncated_log_mean,
};
pub use potential::{
    border_density_form, puncture_density_form, translates_within, PotentialKind, PotentialValue, SequencePotential,
};

/// Shared scalar callable on the complex plane.
pub type ScalarFn = Arc<dyn Fn(Complex) -> f64 + Send + Sync>;

/// Parametric family of a weight.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum WeightFamily {
    /// `s log 1/(1 − |z|²)` on 𝔻.
    StandardDisk {
        s: f64,
    },
    /// `s log 1/(1 − |z|²) − t log log 1/|z|² + (m/4)(log 1/|z|²)²` on 𝔻*.
    ///
    /// The quadratic term is what gives `Δφ − 4ω_P` a positive multiple of
    /// the cylindrical metric near the puncture; with `m = 0` that difference
    /// decays like `ω_P` and the puncture-side curvature bound fails.
    StandardPuncture {
        s: f64,
        t: f64,
        m: f64,
    },
    Custom,
}

/// A weight φ with its Laplacian densities.
#[derive(Clone)]
pub struct WeightModel {
    family: WeightFamily,
    domain: Domain,
    eval: ScalarFn,
    ratio_p: ScalarFn,
    ratio_c: Option<ScalarFn>,
}

impl fmt::Debug for WeightModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightModel")
            .field("family", &self.family)
            .field("domain", &self.domain)
            .finish_non_exhaustive()
    }
}

/// `ω_P / ω_c = |z|² · poincare_coeff`.
#[inline]
pub(crate) fn poincare_over_cyl(z: Complex, domain: Domain) -> f64 {
    match domain {
        Domain::Disk => z.norm_sqr() * disk_coeff(z),
        Domain::PuncturedDisk => {
            let l = log_inv_sq(z);
            1.0 / (l * l)
        }
    }
}

fn finite(name: &'static str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(param(name, "must be finite"))
    }
}

impl WeightModel {
    pub fn standard_disk(s: f64) -> Result<Self> {
        let s = finite("s", s)?;
        Ok(Self {
            family: WeightFamily::StandardDisk { s },
            domain: Domain::Disk,
            eval: Arc::new(move |z: Complex| -s * (-z.norm_sqr()).ln_1p()),
            ratio_p: Arc::new(move |_| 2.0 * s),
            ratio_c: None,
        })
    }

    pub fn standard_puncture(s: f64, t: f64, m: f64) -> Result<Self> {
        let (s, t, m) = (finite("s", s)?, finite("t", t)?, finite("m", m)?);
        Ok(Self {
            family: WeightFamily::StandardPuncture { s, t, m },
            domain: Domain::PuncturedDisk,
            eval: Arc::new(move |z: Complex| {
                let l = log_inv_sq(z);
                -s * (-z.norm_sqr()).ln_1p() - t * l.ln() + 0.25 * m * l * l
            }),
            ratio_p: Arc::new(move |z: Complex| {
                let l = log_inv_sq(z);
                let a = z.norm_sqr();
                2.0 * s * a * l * l * disk_coeff(z) + 2.0 * t + m * l * l
            }),
            ratio_c: Some(Arc::new(move |z: Complex| {
                let l = log_inv_sq(z);
                2.0 * s * z.norm_sqr() * disk_coeff(z) + 2.0 * t / (l * l) + m
            })),
        })
    }

    /// A user-supplied weight. When both Laplacian ratios are given they must
    /// agree (`ratio_c = ratio_P · ω_P/ω_c`) to 1e−8 on a fixed sample grid.
    pub fn custom(
        domain: Domain,
        eval: ScalarFn,
        laplacian_vs_poincare: ScalarFn,
        laplacian_vs_cyl: Option<ScalarFn>,
    ) -> Result<Self> {
        if let Some(rc) = &laplacian_vs_cyl {
            for z in validation_grid() {
                let expect = laplacian_vs_poincare(z) * poincare_over_cyl(z, domain);
                let got = rc(z);
                if !(got.is_finite() && expect.is_finite()) {
                    continue;
                }
                if (got - expect).abs() > 1e-8 * expect.abs().max(1.0) {
                    return Err(Error::InconsistentWeight(alloc::format!(
                        "Laplacian ratios disagree at {z}: cylindrical {got}, from Poincaré {expect}"
                    )));
                }
            }
        }
        Ok(Self {
            family: WeightFamily::Custom,
            domain,
            eval,
            ratio_p: laplacian_vs_poincare,
            ratio_c: laplacian_vs_cyl,
        })
    }

    pub fn family(&self) -> WeightFamily {
        self.family
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// φ(z); may be −∞.
    #[inline]
    pub fn eval(&self, z: Complex) -> f64 {
        (self.eval)(z)
    }

    /// `Δφ / ω_P` with ω_P the Poincaré metric of the weight's domain.
    #[inline]
    pub fn laplacian_vs_poincare(&self, z: Complex) -> f64 {
        (self.ratio_p)(z)
    }

    /// `Δφ / ω_c`.
    #[inline]
    pub fn laplacian_vs_cyl(&self, z: Complex) -> f64 {
        match &self.ratio_c {
            Some(f) => f(z),
            None => self.laplacian_vs_poincare(z) * poincare_over_cyl(z, self.domain),
        }
    }

    /// `Δφ / ω_P^𝔻`, the ratio against the Poincaré metric of the whole disk.
    #[inline]
    pub fn laplacian_vs_disk_poincare(&self, z: Complex) -> f64 {
        match self.domain {
            Domain::Disk => self.laplacian_vs_poincare(z),
            Domain::PuncturedDisk => self.laplacian_vs_cyl(z) / (z.norm_sqr() * disk_coeff(z)),
        }
    }

    /// `Some(2s)` when `Δφ/ω_P^𝔻` is a known constant.
    pub fn constant_disk_ratio(&self) -> Option<f64> {
        match self.family {
            WeightFamily::StandardDisk { s } => Some(2.0 * s),
            _ => None,
        }
    }

    /// Auxiliary weight `ψ = φ + 2 log log 1/|z|²`.
    #[inline]
    pub fn psi(&self, z: Complex) -> f64 {
        self.eval(z) + 2.0 * log_inv_sq(z).ln()
    }

    /// `Δψ / ω_c = Δφ/ω_c − 4/(log 1/|z|²)²`.
    #[inline]
    pub fn psi_laplacian_vs_cyl(&self, z: Complex) -> f64 {
        let l = log_inv_sq(z);
        self.laplacian_vs_cyl(z) - 4.0 / (l * l)
    }

    /// The weight `φ ∘ φ_a`; its Laplacian ratio against ω_P^𝔻 is the
    /// original ratio composed with `φ_a`, since disk automorphisms are
    /// isometries.
    pub fn pulled_back(&self, a: Complex) -> Result<Self> {
        if self.domain != Domain::Disk || !Domain::Disk.contains(a) {
            return Err(Error::Unsupported("pull-back is defined for disk weights only"));
        }
        let (e, rp) = (self.eval.clone(), self.ratio_p.clone());
        Self::custom(
            Domain::Disk,
            Arc::new(move |z| e(crate::hypgeo::phi(a, z))),
            Arc::new(move |z| rp(crate::hypgeo::phi(a, z))),
            None,
        )
    }

    /// Sampled check of the curvature hypotheses the density theorems need.
    ///
    /// On 𝔻: `Δφ − 2ω_P ≥ m ω_P` with `m > 0`. On 𝔻*, with split radius c:
    /// (B) `ratio_P − 2` bounded between positive constants on `c ≤ |z| < 1`,
    /// and (⋆) `Δφ − 4ω_P` between positive multiples of ω_c on `0 < |z| < c`.
    pub fn check_hypotheses(&self, c: f64) -> Vec<HypothesisCheck> {
        match self.domain {
            Domain::Disk => {
                let vals = radial_samples(0.0, 1.0 - 1e-6).map(|z| self.laplacian_vs_poincare(z) - 2.0);
                alloc::vec![HypothesisCheck::from_samples("disk curvature", vals)]
            }
            Domain::PuncturedDisk => {
                let b = radial_samples(c, 1.0 - 1e-6).map(|z| self.laplacian_vs_poincare(z) - 2.0);
                let star = puncture_samples(c).map(|z| {
                    let l = log_inv_sq(z);
                    self.laplacian_vs_cyl(z) - 4.0 / (l * l)
                });
                alloc::vec![
                    HypothesisCheck::from_samples("border curvature (B)", b),
                    HypothesisCheck::from_samples("puncture curvature (star)", star),
                ]
            }
        }
    }
}

/// Sampled extremes of a curvature quantity that must stay in `[m, M]`
/// with `0 < m ≤ M < ∞`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HypothesisCheck {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub satisfied: bool,
}

impl HypothesisCheck {
    fn from_samples(name: &str, vals: impl Iterator<Item = f64>) -> Self {
        let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
        let mut bad = false;
        for v in vals {
            if v.is_nan() {
                bad = true;
                continue;
            }
            min = min.min(v);
            max = max.max(v);
        }
        Self { name: name.into(), min, max, satisfied: !bad && min > 0.0 && max.is_finite() }
    }
}

const ANGLES: usize = 16;

fn ring(rho: f64) -> impl Iterator<Item = Complex> {
    (0..ANGLES).map(move |k| Complex::from_polar(rho, TAU * k as f64 / ANGLES as f64))
}

fn radial_samples(lo: f64, hi: f64) -> impl Iterator<Item = Complex> {
    (0..=64).map(move |k| lo + (hi - lo) * (1.0 - (1.0 - k as f64 / 64.0).powi(3))).flat_map(ring)
}

fn puncture_samples(c: f64) -> impl Iterator<Item = Complex> {
    (1..=80).map(move |k| c * (-0.5 * k as f64).exp()).flat_map(ring)
}

fn validation_grid() -> impl Iterator<Item = Complex> {
    [0.05, 0.2, 0.4, 0.6, 0.8, 0.95].into_iter().flat_map(ring)
}
