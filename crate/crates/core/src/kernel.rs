//! Reproducing kernels of weighted Bergman spaces on the disk, Gram systems
//! at sequence points, and minimal-norm interpolation.
//!
//! For `φ = s log 1/(1 − |z|²)` the space `ℋ²(𝔻, e^{−φ}ω_P)` has kernel
//! `c_s (1 − z w̄)^{−s}`; the constant `c_s` is fixed numerically by the
//! reproducing property `⟨1, K(·, 0)⟩ = 1`.

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use nalgebra::{DMatrix, DVector, SymmetricEigen};
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{param, Error, Result};
use crate::hypgeo::{area_a, Complex, Domain, DomainPoint};
use crate::quadrature::{Panels, QuadratureRule};
use crate::weights::{WeightFamily, WeightModel};

/// Moments are integrated over `1 − |z|² ≥ e^{−X_MAX}`.
const X_MAX: f64 = 36.0;

/// Relative eigenvalue threshold below which a Gram system is singular.
pub const SINGULAR_THRESHOLD: f64 = 1e-12;

/// How a kernel is evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Provenance {
    /// `c_s (1 − z w̄)^{−s}`.
    ClosedForm,
    /// `Σ_{k≤degree} (z w̄)^k / ‖z^k‖²`, the truncated orthonormal expansion.
    NumericGram { degree: usize },
}

/// A reproducing kernel for `ℋ²(𝔻, e^{−φ}ω_P)`.
#[derive(Debug, Clone)]
pub struct KernelSpec {
    weight: WeightModel,
    provenance: Provenance,
    s: f64,
    c_s: f64,
    inv_moments: Vec<f64>,
}

/// `∫_𝔻 |z|^{2k} e^{−φ} ω_P` for a radial weight, in the variable
/// `x = log 1/(1 − |z|²)`, where `ω_P = e^{x}·(dx dθ / 2)`. Standard weights
/// are evaluated as `φ = s x`, which stays exact where `|z|` rounds to 1;
/// other weights are integrated over `x ≤ 36`.
fn radial_moment(weight: &WeightModel, k: usize, rule: &QuadratureRule) -> Result<f64> {
    let (std_s, x_max) = match weight.family() {
        WeightFamily::StandardDisk { s } if s > 1.0 => (Some(s), 45.0 / (s - 1.0)),
        _ => (None, X_MAX),
    };
    let g = |x: f64| {
        let phi = match std_s {
            Some(s) => s * x,
            None => weight.eval(Complex::new((-(-x).exp_m1()).sqrt(), 0.0)),
        };
        if k == 0 {
            return (x - phi).exp();
        }
        if x == 0.0 {
            return 0.0;
        }
        (k as f64 * (-(-x).exp_m1()).ln() - phi + x).exp()
    };
    let total = rule.integrate_1d(0.0, x_max, Panels::PLAIN, g)?;
    if !(g(x_max) <= 1e-12 * total) {
        return Err(param("weight", "e^{-φ}ω_P does not decay fast enough at the boundary"));
    }
    Ok(PI * total)
}

fn require_radial(weight: &WeightModel) -> Result<()> {
    if weight.domain() != Domain::Disk {
        return Err(Error::Unsupported("kernels are implemented on the disk only"));
    }
    for k in 1..20 {
        let rho = 0.05 * k as f64;
        let base = weight.eval(Complex::new(rho, 0.0));
        for j in 1..7 {
            let v = weight.eval(Complex::from_polar(rho, TAU * j as f64 / 7.0));
            if (v - base).abs() > 1e-10 * (1.0 + base.abs()) {
                return Err(Error::Unsupported("numeric kernels need a radial weight"));
            }
        }
    }
    Ok(())
}

/// The closed-form kernel of the standard disk weight with exponent `s > 1`.
pub fn standard_kernel(s: f64) -> Result<KernelSpec> {
    standard_kernel_with(s, &fine_rule())
}

fn fine_rule() -> QuadratureRule {
    QuadratureRule { rel_tol: 1e-13, ..QuadratureRule::default() }
}

/// [`standard_kernel`] with an explicit quadrature rule for `c_s`.
pub fn standard_kernel_with(s: f64, rule: &QuadratureRule) -> Result<KernelSpec> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(param("s", "the closed-form kernel needs s > 1"));
    }
    let weight = WeightModel::standard_disk(s)?;
    let mass = radial_moment(&weight, 0, rule)?;
    Ok(KernelSpec { weight, provenance: Provenance::ClosedForm, s, c_s: 1.0 / mass, inv_moments: Vec::new() })
}

impl KernelSpec {
    /// Truncated orthonormal expansion of degree `degree` for a radial disk
    /// weight. Monomials are orthogonal under any radial measure, so the
    /// orthonormalisation reduces to dividing by the moments `‖z^k‖²`.
    pub fn numeric(weight: &WeightModel, degree: usize, rule: &QuadratureRule) -> Result<Self> {
        require_radial(weight)?;
        let inv_moments =
            (0..=degree).map(|k| radial_moment(weight, k, rule).map(|m| 1.0 / m)).collect::<Result<Vec<_>>>()?;
        let s = match weight.family() {
            WeightFamily::StandardDisk { s } => s,
            _ => f64::NAN,
        };
        Ok(Self {
            weight: weight.clone(),
            provenance: Provenance::NumericGram { degree },
            s,
            c_s: inv_moments[0],
            inv_moments,
        })
    }

    /// [`KernelSpec::numeric`] for the standard disk weight.
    pub fn numeric_standard(s: f64, degree: usize) -> Result<Self> {
        if !(s > 1.0) || !s.is_finite() {
            return Err(param("s", "the standard kernel needs s > 1"));
        }
        Self::numeric(&WeightModel::standard_disk(s)?, degree, &fine_rule())
    }

    pub fn weight(&self) -> &WeightModel {
        &self.weight
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// The normalising constant `c_s = K(0, 0)`.
    pub fn constant(&self) -> f64 {
        self.c_s
    }

    /// `K(z, w)`.
    pub fn eval(&self, z: Complex, w: Complex) -> Complex {
        let t = z * w.conj();
        match self.provenance {
            Provenance::ClosedForm => (Complex::new(1.0, 0.0) - t).powf(-self.s) * self.c_s,
            Provenance::NumericGram { .. } => {
                let mut acc = Complex::new(0.0, 0.0);
                let mut p = Complex::new(1.0, 0.0);
                for inv in &self.inv_moments {
                    acc += p * *inv;
                    p *= t;
                }
                acc
            }
        }
    }

    /// `K(z, z) e^{−φ(z)} A_ω(z)`.
    pub fn diagonal(&self, z: Complex) -> f64 {
        let a = area_a(DomainPoint::new_unchecked(z, Domain::Disk));
        self.eval(z, z).re * (-self.weight.eval(z)).exp() * a
    }
}

/// Extremes of the normalised diagonal over a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DiagCheck {
    pub min: f64,
    pub max: f64,
    pub ratio: f64,
}

/// `min`, `max` and `max/min` of `K(z,z)e^{−φ(z)}A_ω(z)` over `grid`.
pub fn kernel_diag_check(spec: &KernelSpec, grid: &[Complex]) -> Result<DiagCheck> {
    if let Some(z) = grid.iter().find(|z| !Domain::Disk.contains(**z)) {
        return Err(Error::OutsideDomain { value: *z, domain: Domain::Disk });
    }
    let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
    for z in grid {
        let v = spec.diagonal(*z);
        min = min.min(v);
        max = max.max(v);
    }
    Ok(DiagCheck { min, max, ratio: max / min })
}

/// Largest relative gap `|K_a − K_b| / |K_b|` over the diagonal of `grid`
/// and over consecutive grid pairs.
pub fn kernel_agreement(a: &KernelSpec, b: &KernelSpec, grid: &[Complex]) -> f64 {
    let rel = |z: Complex, w: Complex| {
        let kb = b.eval(z, w);
        (a.eval(z, w) - kb).norm() / kb.norm()
    };
    let diag = grid.iter().map(|z| rel(*z, *z));
    let pairs = grid.windows(2).map(|p| rel(p[0], p[1]));
    diag.chain(pairs).fold(0.0, f64::max)
}

/// `n` points spread evenly over `|z| ≤ max_modulus` (a sunflower spiral).
pub fn disk_grid(n: usize, max_modulus: f64) -> Vec<Complex> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|k| {
            let t = ((k as f64 + 0.5) / n as f64).sqrt();
            Complex::from_polar(max_modulus * t, golden * k as f64)
        })
        .collect()
}

/// Normalised Gram matrix `Ĝ_ij = K(γ_i,γ_j) e^{−(φ_i+φ_j)/2} √(A_i A_j)`
/// with its spectrum.
#[derive(Debug, Clone)]
pub struct GramSystem {
    points: Vec<Complex>,
    /// `e^{−φ_i/2} √A_i`.
    scale: Vec<f64>,
    matrix: DMatrix<Complex>,
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<Complex>,
}

/// Assemble the Gram system of `points` under `spec`.
pub fn gram_assemble(points: &[Complex], spec: &KernelSpec) -> Result<GramSystem> {
    for (index, z) in points.iter().enumerate() {
        if !Domain::Disk.contains(*z) {
            return Err(Error::PointOutsideDomain { index, domain: Domain::Disk });
        }
    }
    let n = points.len();
    let scale: Vec<f64> = points
        .iter()
        .map(|z| {
            let a = area_a(DomainPoint::new_unchecked(*z, Domain::Disk));
            (-0.5 * spec.weight.eval(*z)).exp() * a.sqrt()
        })
        .collect();
    let mut matrix = DMatrix::from_element(n, n, Complex::new(0.0, 0.0));
    for i in 0..n {
        for j in i..n {
            let v = spec.eval(points[i], points[j]) * (scale[i] * scale[j]);
            matrix[(i, j)] = v;
            matrix[(j, i)] = v.conj();
        }
        matrix[(i, i)].im = 0.0;
    }
    let eig = SymmetricEigen::new(matrix.clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|a, b| eig.eigenvalues[*a].total_cmp(&eig.eigenvalues[*b]));
    let eigenvalues: Vec<f64> = order.iter().map(|i| eig.eigenvalues[*i]).collect();
    let eigenvectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    let sys = GramSystem { points: points.to_vec(), scale, matrix, eigenvalues, eigenvectors };
    if (1..n).any(|i| points[..i].contains(&points[i])) {
        return Err(sys.singular_error());
    }
    Ok(sys)
}

impl GramSystem {
    pub fn points(&self) -> &[Complex] {
        &self.points
    }

    pub fn matrix(&self) -> &DMatrix<Complex> {
        &self.matrix
    }

    /// Eigenvalues in increasing order.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(f64::INFINITY)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn condition(&self) -> f64 {
        self.max_eigenvalue() / self.min_eigenvalue()
    }

    pub fn is_singular(&self) -> bool {
        !self.eigenvalues.is_empty() && !(self.min_eigenvalue() > SINGULAR_THRESHOLD * self.max_eigenvalue())
    }

    fn singular_error(&self) -> Error {
        Error::SingularSystem { min_eig: self.min_eigenvalue(), max_eig: self.max_eigenvalue() }
    }
}

/// Coefficients `c` of `F = Σ c_j K(·, γ_j)` and `‖F‖²`.
#[derive(Debug, Clone, PartialEq)]
pub struct Interpolant {
    pub coefficients: Vec<Complex>,
    pub norm_sq: f64,
}

/// The minimal-norm `F` with `F(γ_i) = data_i`.
pub fn min_norm_interpolant(system: &GramSystem, data: &[Complex]) -> Result<Interpolant> {
    let n = system.points.len();
    if data.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: data.len() });
    }
    if system.is_singular() {
        return Err(system.singular_error());
    }
    // With D = diag(scale), K = D⁻¹ĜD⁻¹, so c = D Ĝ⁻¹ D data and
    // ‖F‖² = (D data)* Ĝ⁻¹ (D data).
    let y = DVector::from_iterator(n, data.iter().zip(&system.scale).map(|(d, s)| d * *s));
    let v = &system.eigenvectors;
    let mut proj = v.adjoint() * &y;
    for (p, lam) in proj.iter_mut().zip(&system.eigenvalues) {
        *p /= *lam;
    }
    let x = v * proj;
    let norm_sq = y.dotc(&x).re;
    let coefficients = x.iter().zip(&system.scale).map(|(xi, s)| xi * *s).collect();
    Ok(Interpolant { coefficients, norm_sq })
}

/// `F(z)` for an interpolant built on `system`.
pub fn interpolant_eval(spec: &KernelSpec, system: &GramSystem, f: &Interpolant, z: Complex) -> Complex {
    system.points.iter().zip(&f.coefficients).map(|(g, c)| spec.eval(z, *g) * c).sum()
}

/// Estimate of the interpolation constant `(λ_min Ĝ)^{−1/2}`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ConstantEstimate {
    /// +∞ when the system is singular.
    pub value: f64,
    pub singular: bool,
    pub condition: f64,
}

pub fn interpolation_constant_estimate(system: &GramSystem) -> ConstantEstimate {
    let singular = system.is_singular();
    ConstantEstimate {
        value: if singular { f64::INFINITY } else { system.min_eigenvalue().powf(-0.5) },
        singular,
        condition: system.condition(),
    }
}
