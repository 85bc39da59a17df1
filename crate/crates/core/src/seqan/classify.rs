//! The interpolation verdict: separation plus density against the
//! threshold 1, with a tolerance band left undecided.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::density::{density_sweep, SweepParams, Trend};
use super::{decompose, separation_border, separation_puncture, SequenceSet};
use crate::hypgeo::Domain;
use crate::weights::{HypothesisCheck, WeightModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Verdict {
    Interpolating,
    NotInterpolating,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassifyParams {
    pub sweep: SweepParams,
    /// Width of the undecided band around density 1.
    pub delta: f64,
    /// Separations at or below this count as collapsed.
    pub separation_floor: f64,
}

impl Default for ClassifyParams {
    fn default() -> Self {
        Self { sweep: SweepParams::default(), delta: 0.05, separation_floor: 1e-6 }
    }
}

/// The verdict with the evidence behind it.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassificationVerdict {
    pub verdict: Verdict,
    pub separation_border: f64,
    pub separation_puncture: Option<f64>,
    pub density_border: Option<f64>,
    pub density_puncture: Option<f64>,
    pub trend_border: Option<Trend>,
    pub trend_puncture: Option<Trend>,
    pub hypotheses: Vec<HypothesisCheck>,
    pub reasons: Vec<String>,
    pub params: ClassifyParams,
}

/// Classify a sequence. Never fails: anything that prevents a decision is
/// recorded in `reasons` and yields [`Verdict::Indeterminate`].
pub fn classify(set: &SequenceSet, weight: &WeightModel, params: &ClassifyParams) -> ClassificationVerdict {
    let mut reasons = Vec::new();
    let delta = params.delta;
    let delta_ok = delta > 0.0 && delta < 0.5;
    if !delta_ok {
        reasons.push(format!("tolerance delta = {delta} is outside (0, 0.5)"));
    }
    let domain_ok = weight.domain() == set.domain();
    if !domain_ok {
        reasons.push(format!("weight lives on the {} but the sequence on the {}", weight.domain(), set.domain()));
    }

    let hypotheses = weight.check_hypotheses(params.sweep.split_a.clamp(1e-6, 1.0 - 1e-6));
    let hyp_ok = hypotheses.iter().all(|h| h.satisfied);
    for h in hypotheses.iter().filter(|h| !h.satisfied) {
        reasons.push(format!("curvature hypothesis `{}` fails (sampled range [{}, {}])", h.name, h.min, h.max));
    }

    let (sep_b, sep_p) = match set.domain() {
        Domain::Disk => (separation_border(&set.values(), Domain::Disk), None),
        Domain::PuncturedDisk => match decompose(set, params.sweep.split_a) {
            Ok((star, border)) => (separation_border(&border, Domain::PuncturedDisk), Some(separation_puncture(&star))),
            Err(e) => {
                reasons.push(format!("cannot split the sequence: {e}"));
                (f64::NAN, None)
            }
        },
    };
    let floor = params.separation_floor;
    let sep_fail = sep_b <= floor || sep_p.is_some_and(|p| p <= floor);
    if sep_fail {
        reasons.push(format!("separation collapsed below {floor}"));
    }

    let mut out = ClassificationVerdict {
        verdict: Verdict::Indeterminate,
        separation_border: sep_b,
        separation_puncture: sep_p,
        density_border: None,
        density_puncture: None,
        trend_border: None,
        trend_puncture: None,
        hypotheses,
        reasons: Vec::new(),
        params: params.clone(),
    };
    let mut flagged = 0;
    if domain_ok && !hyp_ok {
        reasons.push("density sweep skipped".into());
    } else if domain_ok {
        match density_sweep(set, weight, &params.sweep) {
            Ok(res) => {
                out.density_border = res.border.estimate;
                out.trend_border = Some(res.border.trend);
                flagged += res.border.flagged;
                if let Some(p) = &res.puncture {
                    out.density_puncture = p.estimate;
                    out.trend_puncture = Some(p.trend);
                    flagged += p.flagged;
                    if p.estimate.is_none() {
                        reasons.push("no admissible puncture centers for the radius grid".into());
                    }
                }
                if flagged > 0 {
                    reasons.push(format!("{flagged} density evaluations had a nonpositive denominator"));
                }
            }
            Err(e) => reasons.push(format!("density sweep failed [{}]: {e}", e.code())),
        }
    }

    let puncture_side = set.domain() == Domain::PuncturedDisk;
    let known = out.density_border.is_some() && (!puncture_side || out.density_puncture.is_some());
    let too_dense =
        out.density_border.is_some_and(|d| d >= 1.0 + delta) || out.density_puncture.is_some_and(|d| d > 1.0 + delta);
    let sparse = out.density_border.unwrap_or(f64::INFINITY) <= 1.0 - delta
        && (!puncture_side || out.density_puncture.unwrap_or(f64::INFINITY) <= 1.0 - delta);

    out.verdict = if !(delta_ok && domain_ok && hyp_ok) {
        Verdict::Indeterminate
    } else if sep_fail {
        Verdict::NotInterpolating
    } else if too_dense {
        reasons.push("density clears 1 + delta".into());
        Verdict::NotInterpolating
    } else if known && sparse && flagged == 0 && !sep_b.is_nan() {
        Verdict::Interpolating
    } else {
        if known && !sparse {
            reasons.push("density lies within delta of the threshold".into());
        }
        Verdict::Indeterminate
    };
    out.reasons = reasons;
    out
}
