use std::f64::consts::TAU;

use hypinterp::hypgeo::{cover_p, lift_puncture, mobius_involution, pseudo_dist};
use hypinterp::quadrature::{
    annulus_log_integral_disk, annulus_log_integral_euclid, c_r_cyl, c_r_disk, QuadratureRule,
};
use hypinterp::weights::{translates_within, SequencePotential};
use hypinterp::{Complex, DomainPoint};

fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

fn tight() -> QuadratureRule {
    QuadratureRule { rel_tol: 1e-11, ..QuadratureRule::default() }
}

/// `½ Δ_E f` by the five-point stencil.
fn half_laplacian(f: impl Fn(Complex) -> f64, z: Complex, h: f64) -> f64 {
    let s = f(z + h) + f(z - h) + f(z + c(0.0, h)) + f(z - c(0.0, h)) - 4.0 * f(z);
    0.5 * s / (h * h)
}

#[test]
fn border_lambda_matches_direct_annulus_mean() {
    let r = 0.9;
    let zeros = [c(0.1, 0.2), c(0.97, 0.1), c(-0.2, -0.96)];
    let p = SequencePotential::border(&zeros, r).unwrap().with_outer(vec![c(0.2, 0.1), c(-0.3, 0.4)]).unwrap();
    // centres chosen so that every zero is either inside |φ_z| < 1/2 or
    // outside |φ_z| > r, leaving the annulus integrand smooth.
    let z = c(0.05, 0.15);
    for g in &zeros {
        let d = pseudo_dist(z, *g).unwrap();
        assert!(!(0.45..=0.92).contains(&d), "{d}");
    }
    let log_t = |w: Complex| -> f64 {
        let b: f64 = zeros.iter().map(|g| pseudo_dist(*g, w).unwrap().powi(2).ln()).sum();
        b + 2.0 * (c(0.2, 0.1) + c(-0.3, 0.4) * w).re
    };
    let direct =
        annulus_log_integral_disk(r, |eta| log_t(mobius_involution(z, eta).unwrap()), &tight()).unwrap() / c_r_disk(r);
    let v = p.evaluate(z).unwrap();
    assert!((v.lambda - direct).abs() < 1e-8 * (1.0 + direct.abs()), "{} vs {direct}", v.lambda);
}

#[test]
fn border_lambda_laplacian_is_the_density_sum() {
    let r = 0.95;
    let zeros = [c(0.3, 0.1), c(-0.2, 0.7), c(0.6, -0.5), c(-0.1, -0.2)];
    let p = SequencePotential::border(&zeros, r).unwrap();
    let mut tested = 0;
    for k in 0..12 {
        let z = Complex::from_polar(0.1 + 0.05 * k as f64, 1.3 * k as f64);
        let clear = zeros.iter().all(|g| {
            let d = pseudo_dist(z, *g).unwrap();
            (d - 0.5).abs() > 0.02 && (d - r).abs() > 0.02
        });
        if !clear {
            continue;
        }
        tested += 1;
        let lap = half_laplacian(|w| p.evaluate(w).unwrap().lambda, z, 2e-3);
        let coeff = 1.0 / (1.0 - z.norm_sqr()).powi(2);
        let mut want = 0.0;
        for g in &zeros {
            let d = pseudo_dist(z, *g).unwrap();
            if d > 0.5 && d < r {
                want += (r * r / (d * d)).ln();
            }
        }
        want *= TAU / c_r_disk(r);
        assert!((lap / coeff - want).abs() < 1e-4 * (1.0 + want), "{z}: {} vs {want}", lap / coeff);
    }
    assert!(tested >= 4);
}

#[test]
fn puncture_lambda_matches_direct_annulus_mean() {
    let r = 3.0;
    let zeros = [c(0.02, 0.01), c(-0.001, 0.0005), c(0.3, -0.2)];
    let p = SequencePotential::puncture(&zeros, r).unwrap();
    let z = Complex::from_polar((-4.0f64).exp(), 0.3);
    let q = lift_puncture(DomainPoint::punctured(z).unwrap()).unwrap().value();
    for (_, w) in translates_within(&zeros, q, r + 0.5) {
        let d = (w - q).norm();
        assert!(d < 0.95 || d > r + 0.05, "{d}");
    }
    let log_t = |w: Complex| -> f64 {
        let zeta = cover_p(w);
        zeros.iter().map(|g| (zeta - g).norm_sqr().ln()).sum()
    };
    let direct = annulus_log_integral_euclid(q, r, log_t, &tight()).unwrap() / c_r_cyl(r);
    let v = p.evaluate(z).unwrap();
    assert!((v.lambda - direct).abs() < 1e-8 * (1.0 + direct.abs()), "{} vs {direct}", v.lambda);
}

#[test]
fn puncture_lambda_laplacian_is_the_density_sum() {
    let r = 4.0;
    let zeros: Vec<Complex> = (1..12).map(|k| Complex::from_polar((-0.9 * k as f64).exp(), 1.7 * k as f64)).collect();
    let p = SequencePotential::puncture(&zeros, r).unwrap();
    for q in [c(0.4, 5.3), c(2.0, 7.15), c(5.5, 4.1)] {
        let lap = half_laplacian(|w| p.evaluate(cover_p(w)).unwrap().lambda, q, 2e-3);
        let mut want = 0.0;
        for (_, w) in translates_within(&zeros, q, r) {
            let d = (w - q).norm();
            assert!((d - 1.0).abs() > 0.02 && (d - r).abs() > 0.02);
            if d > 1.0 {
                want += (r * r / (d * d)).ln();
            }
        }
        want *= TAU / c_r_cyl(r);
        assert!((lap - want).abs() < 1e-4 * (1.0 + want), "{q}: {lap} vs {want}");
    }
}

#[test]
fn sigma_vanishes_exactly_on_the_sequence() {
    let zeros = [c(0.3, 0.1), c(-0.2, 0.7)];
    let p = SequencePotential::border(&zeros, 0.9).unwrap();
    for g in zeros {
        let v = p.evaluate(g).unwrap();
        assert_eq!(v.sigma, 0.0);
        assert!(v.lambda.is_finite());
    }
    let p = SequencePotential::puncture(&zeros, 3.0).unwrap();
    for g in zeros {
        let v = p.evaluate(g).unwrap();
        assert_eq!(v.sigma, 0.0);
        assert!(v.lambda.is_finite());
    }
}
