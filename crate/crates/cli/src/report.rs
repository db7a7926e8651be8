use std::fmt::Write as _;

use serde::Serialize;

use qspectra_core::algebra::{validate_algebra, DynkinType};
use qspectra_core::bwb::CollectionCheck;
use qspectra_core::lefschetz::{CheckStatus, LefschetzCollection, NumerologyVerdict};
use qspectra_core::spectrum::{
    compare_with_jacobi, kappa_split, quantum_spectrum_report, JacobiComparison, SpectrumReport,
};
use qspectra_core::Result;

use crate::registry::{Provider, VarietyDescriptor};

/// Canonical, deterministic report body. Timings and versions are emitted
/// separately as [`Metadata`].
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub variety: String,
    pub spectrum: SpectrumReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi_comparison: Option<JacobiComparison>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collection: Option<LefschetzCollection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numerology: Option<NumerologyVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bwb: Option<CollectionCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub invariant_violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub elapsed_ms: u128,
}

impl Metadata {
    pub fn new(command: impl Into<String>, elapsed: std::time::Duration) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            elapsed_ms: elapsed.as_millis(),
        }
    }
}

pub fn build_report(desc: &VarietyDescriptor) -> Result<RunReport> {
    let a = desc.build()?;
    let mut violations: Vec<String> = validate_algebra(&a)
        .violations
        .iter()
        .map(|v| format!("algebra: {v}"))
        .collect();
    let spectrum = quantum_spectrum_report(&a)?;
    violations.extend(spectrum.consistency_violations());
    let m = a.fano_index();
    if !desc.is_jacobi()
        && a.homogeneous_degree(a.anticanonical()) == Some(1 % m)
        && !spectrum.charpoly_rotation_invariant
    {
        violations.push("graded algebra whose kappa charpoly is not rotation invariant".into());
    }
    let jacobi_comparison = match desc.provider {
        Provider::Isotropic(n) => Some(compare_with_jacobi(&kappa_split(&a)?.zero, DynkinType::A(n - 1))?),
        _ => None,
    };
    Ok(RunReport {
        variety: desc.id.clone(),
        spectrum,
        jacobi_comparison,
        collection: None,
        numerology: None,
        bwb: None,
        warnings: Vec::new(),
        invariant_violations: violations,
    })
}

pub fn to_json(r: &RunReport) -> String {
    serde_json::to_string_pretty(r).expect("report serializes") + "\n"
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn count(c: &qspectra_core::spectrum::OrbitCount) -> String {
    match c.value {
        Some(v) => v.to_string(),
        None => format!("{}/{} (not integral)", c.numerator, c.denominator),
    }
}

pub fn to_markdown(r: &RunReport) -> String {
    let s = &r.spectrum;
    let z = &s.zero_part;
    let mut out = String::new();
    let _ = writeln!(out, "## {}\n", r.variety);
    let _ = writeln!(out, "| quantity | value |\n|---|---|");
    let rows: Vec<(&str, String)> = vec![
        ("dim H*", s.dim_total.to_string()),
        ("Fano index m", s.fano_index.to_string()),
        ("dim X", s.dim_x.to_string()),
        ("charpoly of kappa", format!("`{}`", s.kappa_charpoly.display)),
        ("length of QS^x (kappa != 0)", s.dim_nonzero_part.to_string()),
        ("points of QS^x", s.nonzero_point_count.to_string()),
        ("QS^x reduced", yes_no(s.nonzero_semisimple).into()),
        ("k = length / m", count(&s.orbit_count_by_length)),
        ("k = points / m", count(&s.orbit_count_by_points)),
        (
            "charpoly rotation invariant",
            yes_no(s.charpoly_rotation_invariant).into(),
        ),
        ("length of QS^o (kappa = 0)", s.dim_zero_part.to_string()),
        ("points of QS^o", z.geometric_points.to_string()),
        ("Hilbert function of QS^o", list(&z.hilbert_function)),
        ("socle dimension of QS^o", z.socle_dim.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "| {k} | {v} |");
    }
    if let Some(note) = &z.note {
        let _ = writeln!(out, "\nNote: fiber over zero has {note}.");
    }
    if let Some(j) = &r.jacobi_comparison {
        let _ = writeln!(
            out,
            "\nComparison with the {} Jacobi ring: {}",
            j.target,
            if j.full_match {
                "all invariants match"
            } else {
                "mismatch"
            }
        );
        for m in j.invariants.iter().filter(|m| !m.matches) {
            let _ = writeln!(out, "- {}: {} vs {}", m.invariant, m.ours, m.theirs);
        }
    }
    if let (Some(c), Some(v)) = (&r.collection, &r.numerology) {
        let _ = writeln!(out, "\n### Collection\n");
        let _ = writeln!(out, "starting block: {}", c.starting_block.join(", "));
        let _ = writeln!(out, "support: {}", list(&c.support));
        let _ = writeln!(
            out,
            "total {}, rectangular {}, residual {}\n",
            v.total_length, v.rect_length, v.residual_expected
        );
        let _ = writeln!(out, "| check | status | detail |\n|---|---|---|");
        for ch in &v.checks {
            let status = match ch.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::NotApplicable => "n/a",
            };
            let _ = writeln!(out, "| {} | {status} | {} |", ch.name, ch.explanation);
        }
    }
    if let Some(b) = &r.bwb {
        let _ = writeln!(out, "\n### Exceptionality ({})\n", b.backend);
        let _ = writeln!(
            out,
            "{} objects, {} ordered pairs: {} failures, {} inconclusive",
            b.objects.len(),
            b.pairs_checked,
            b.failures.len(),
            b.inconclusive.len()
        );
        for f in b.failures.iter().chain(&b.inconclusive) {
            let table = f.table.as_ref().map_or("inconclusive".to_string(), ToString::to_string);
            let _ = writeln!(out, "- Ext({}, {}) = {table}", f.from, f.to);
        }
        if let Some(note) = &b.note {
            let _ = writeln!(out, "\n{note}");
        }
    }
    for w in &r.warnings {
        let _ = writeln!(out, "\nWarning: {w}");
    }
    if !r.invariant_violations.is_empty() {
        let _ = writeln!(out, "\n### Invariant violations\n");
        for v in &r.invariant_violations {
            let _ = writeln!(out, "- {v}");
        }
    }
    out
}
