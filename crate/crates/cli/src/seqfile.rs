//! Sequence documents:
//!
//! ```json
//! {"domain": "disk", "points": [[0.5, 0.0], [0.0, -0.25]], "label": "two points"}
//! ```
//!
//! `domain` is `"disk"` or `"punctured-disk"`; `label` is optional.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use hypinterp::seqan::SequenceSet;
use hypinterp::{Complex, Domain};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum DomainTag {
    Disk,
    PuncturedDisk,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    domain: DomainTag,
    points: Vec<[f64; 2]>,
    #[serde(default)]
    label: Option<String>,
}

pub fn domain_tag(domain: Domain) -> &'static str {
    match domain {
        Domain::Disk => "disk",
        Domain::PuncturedDisk => "punctured-disk",
    }
}

/// Parse a sequence document held in memory; `path` only labels errors.
pub fn parse_sequence_str(text: &str, path: &Path) -> Result<SequenceSet, CliError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Malformed {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let domain = match doc.domain {
        DomainTag::Disk => Domain::Disk,
        DomainTag::PuncturedDisk => Domain::PuncturedDisk,
    };
    let values: Vec<Complex> = doc.points.iter().map(|[re, im]| Complex::new(*re, *im)).collect();
    Ok(SequenceSet::new(domain, &values, doc.label.unwrap_or_default())?)
}

pub fn parse_sequence_file(path: &Path) -> Result<SequenceSet, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_sequence_str(&text, path)
}

/// Render a sequence document, one point per line. Coordinates use the
/// shortest representation that reads back to the same `f64`.
pub fn render_sequence(set: &SequenceSet) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"domain\": \"{}\",", domain_tag(set.domain()));
    if !set.label().is_empty() {
        let label = serde_json::to_string(set.label()).expect("strings always serialize");
        let _ = writeln!(out, "  \"label\": {label},");
    }
    let pts = set.values();
    if pts.is_empty() {
        out.push_str("  \"points\": []\n");
    } else {
        out.push_str("  \"points\": [\n");
        for (i, z) in pts.iter().enumerate() {
            let sep = if i + 1 == pts.len() { "" } else { "," };
            let _ = writeln!(out, "    [{}, {}]{sep}", number(z.re), number(z.im));
        }
        out.push_str("  ]\n");
    }
    out.push_str("}\n");
    out
}

fn number(x: f64) -> String {
    serde_json::to_string(&x).expect("sequence coordinates are finite")
}
