//! Test-sequence factories.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::TAU;

#[allow(unused_imports)]
use num_traits::Float;

use super::net::{greedy_net, hyperbolic_rings};
use super::SequenceSet;
use crate::error::{param, Result};
use crate::hypgeo::{Complex, Domain};

/// Candidate rings per mesh step when building disk lattices.
const REFINE: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum LatticeKind {
    /// Greedy maximal `mesh`-separated set (pseudohyperbolic) inside
    /// `|z| ≤ max_modulus`, grown outward from the origin.
    HyperbolicDisk { mesh: f64, max_modulus: f64 },
    /// `e^{−ks} e^{2πij/n}` for `k ≥ 1`, `0 ≤ j < n`, ordered by k then j.
    PunctureExponential { step: f64, rays: usize },
}

/// Build at most `count` points of the given lattice.
pub fn generate_lattice(kind: LatticeKind, count: usize) -> Result<SequenceSet> {
    match kind {
        LatticeKind::HyperbolicDisk { mesh, max_modulus } => {
            if !(mesh > 0.0 && mesh < 1.0) {
                return Err(param("mesh", "pseudohyperbolic mesh must lie in (0, 1)"));
            }
            if !(max_modulus > 0.0 && max_modulus < 1.0) {
                return Err(param("max_modulus", "must lie in (0, 1)"));
            }
            let step = mesh.atanh() / REFINE;
            let candidates = hyperbolic_rings(step, max_modulus.atanh(), 0.0).filter(|z| z.norm() <= max_modulus);
            let mut pts = greedy_net(candidates, mesh);
            pts.truncate(count);
            SequenceSet::new(Domain::Disk, &pts, format!("hyperbolic-disk mesh={mesh}"))
        }
        LatticeKind::PunctureExponential { step, rays } => {
            if !(step > 0.0) || !step.is_finite() {
                return Err(param("step", "must be positive"));
            }
            if rays == 0 {
                return Err(param("rays", "need at least one ray"));
            }
            let pts: Vec<Complex> = (1..)
                .flat_map(|k| {
                    (0..rays)
                        .map(move |j| Complex::from_polar((-(k as f64) * step).exp(), TAU * j as f64 / rays as f64))
                })
                .take(count)
                .take_while(|z| z.norm() > 0.0)
                .collect();
            SequenceSet::new(Domain::PuncturedDisk, &pts, format!("puncture-exponential step={step} rays={rays}"))
        }
    }
}
