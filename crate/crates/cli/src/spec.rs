//! `name:key=value,key=value` specifications for weights and lattices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use hypinterp::seqan::LatticeKind;
use hypinterp::weights::WeightModel;
use hypinterp::Domain;
use serde::{Deserialize, Deserializer};

use crate::error::CliError;

struct Parsed {
    name: String,
    params: BTreeMap<String, f64>,
}

impl Parsed {
    fn new(text: &str, allowed: &[&str]) -> Result<Self, CliError> {
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let mut params = BTreeMap::new();
        for item in rest.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("`{item}` in `{text}` is not key=value")))?;
            let k = k.trim();
            if !allowed.contains(&k) {
                return Err(CliError::usage(format!(
                    "unknown parameter `{k}` in `{text}` (expected one of: {})",
                    allowed.join(", ")
                )));
            }
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::usage(format!("parameter `{k}` in `{text}` is not a number")))?;
            params.insert(k.to_string(), v);
        }
        Ok(Self { name: name.trim().to_string(), params })
    }

    fn get(&self, key: &str, default: f64) -> f64 {
        self.params.get(key).copied().unwrap_or(default)
    }

    fn require(&self, key: &str) -> Result<f64, CliError> {
        self.params.get(key).copied().ok_or_else(|| CliError::usage(format!("`{}` needs parameter `{key}`", self.name)))
    }
}

/// A named weight family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightSpec {
    StandardDisk { s: f64 },
    StandardPuncture { s: f64, t: f64, m: f64 },
}

impl WeightSpec {
    pub fn model(&self) -> Result<WeightModel, CliError> {
        Ok(match *self {
            WeightSpec::StandardDisk { s } => WeightModel::standard_disk(s)?,
            WeightSpec::StandardPuncture { s, t, m } => WeightModel::standard_puncture(s, t, m)?,
        })
    }

    pub fn domain(&self) -> Domain {
        match self {
            WeightSpec::StandardDisk { .. } => Domain::Disk,
            WeightSpec::StandardPuncture { .. } => Domain::PuncturedDisk,
        }
    }

    /// Default weight for a domain.
    pub fn default_for(domain: Domain) -> Self {
        match domain {
            Domain::Disk => WeightSpec::StandardDisk { s: 2.0 },
            Domain::PuncturedDisk => WeightSpec::StandardPuncture { s: 2.0, t: 1.0, m: 1.0 },
        }
    }
}

impl FromStr for WeightSpec {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let p = Parsed::new(text, &["s", "t", "m"])?;
        match p.name.as_str() {
            "standard-disk" => {
                if p.params.len() > usize::from(p.params.contains_key("s")) {
                    return Err(CliError::usage("standard-disk takes only `s`"));
                }
                Ok(WeightSpec::StandardDisk { s: p.get("s", 2.0) })
            }
            "standard-puncture" => {
                Ok(WeightSpec::StandardPuncture { s: p.get("s", 2.0), t: p.get("t", 1.0), m: p.get("m", 1.0) })
            }
            other => {
                Err(CliError::usage(format!("unknown weight `{other}` (expected standard-disk or standard-puncture)")))
            }
        }
    }
}

impl fmt::Display for WeightSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightSpec::StandardDisk { s } => write!(f, "standard-disk:s={s}"),
            WeightSpec::StandardPuncture { s, t, m } => write!(f, "standard-puncture:s={s},t={t},m={m}"),
        }
    }
}

impl<'de> Deserialize<'de> for WeightSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// What `gen` produces.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenSpec {
    Lattice(LatticeKind),
    /// Seeded uniform samples of the hyperbolic disk `|z| ≤ max_modulus`,
    /// thinned greedily to pseudohyperbolic separation `sep`.
    RandomDisk {
        sep: f64,
        max_modulus: f64,
    },
}

impl FromStr for GenSpec {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        let p = Parsed::new(text, &["mesh", "max-modulus", "step", "rays", "sep"])?;
        match p.name.as_str() {
            "hyperbolic-disk" => Ok(GenSpec::Lattice(LatticeKind::HyperbolicDisk {
                mesh: p.require("mesh")?,
                max_modulus: p.get("max-modulus", 0.9),
            })),
            "puncture-exponential" => {
                let rays = p.get("rays", 1.0);
                if !(rays >= 1.0 && rays.fract() == 0.0 && rays <= 1e6) {
                    return Err(CliError::usage("`rays` must be a positive integer"));
                }
                Ok(GenSpec::Lattice(LatticeKind::PunctureExponential { step: p.get("step", 1.0), rays: rays as usize }))
            }
            "random-disk" => Ok(GenSpec::RandomDisk { sep: p.get("sep", 0.3), max_modulus: p.get("max-modulus", 0.9) }),
            other => Err(CliError::usage(format!(
                "unknown generator `{other}` (expected hyperbolic-disk, puncture-exponential or random-disk)"
            ))),
        }
    }
}
