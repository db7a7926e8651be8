//! Command implementations for the `qspectra` binary. Each command writes to
//! the given streams and returns the process exit code.

pub mod registry;
pub mod report;
pub mod selftest;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use qspectra_core::algebra::data_dir;
use qspectra_core::bwb::check_collection_any;
use qspectra_core::lefschetz::{builtin_by_id, conjecture_numerology, LefschetzCollection};
use qspectra_core::Error;

use report::{build_report, to_json, to_markdown, Metadata, RunReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_INVARIANT: u8 = 2;

/// Where the JSON report goes: a file, or stdout in place of the markdown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JsonTarget {
    Stdout,
    File(PathBuf),
}

impl JsonTarget {
    pub fn parse(s: &str) -> Self {
        if s == "-" {
            Self::Stdout
        } else {
            Self::File(PathBuf::from(s))
        }
    }
}

fn emit(
    r: &RunReport,
    json: Option<&JsonTarget>,
    meta: &Metadata,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), u8> {
    match json {
        Some(JsonTarget::Stdout) => {
            let _ = out.write_all(to_json(r).as_bytes());
        }
        Some(JsonTarget::File(p)) => {
            if let Err(e) = std::fs::write(p, to_json(r)) {
                let _ = writeln!(err, "error: cannot write {}: {e}", p.display());
                return Err(EXIT_USAGE);
            }
            let _ = out.write_all(to_markdown(r).as_bytes());
        }
        None => {
            let _ = out.write_all(to_markdown(r).as_bytes());
        }
    }
    let _ = writeln!(err, "{}", serde_json::to_string(meta).expect("metadata serializes"));
    Ok(())
}

pub fn cmd_report(id: &str, json: Option<&JsonTarget>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let start = Instant::now();
    let Some(desc) = registry::lookup(id) else {
        let _ = writeln!(
            err,
            "error: unknown variety {id:?}; registered ids:\n{}",
            registry::listing()
        );
        return EXIT_USAGE;
    };
    let r = match build_report(&desc) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", desc.id);
            return EXIT_INVARIANT;
        }
    };
    if let Err(code) = emit(
        &r,
        json,
        &Metadata::new(format!("report {}", desc.id), start.elapsed()),
        out,
        err,
    ) {
        return code;
    }
    if r.invariant_violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    }
}

fn load_collection(source: &str) -> Result<LefschetzCollection, String> {
    if let Some(id) = source.strip_prefix("builtin:") {
        return builtin_by_id(id).map_err(|e| e.to_string());
    }
    let text = std::fs::read_to_string(source).map_err(|e| format!("cannot read {source}: {e}"))?;
    LefschetzCollection::from_json(&text).map_err(|e| match e {
        Error::Json(j) => format!("{source}:{}:{}: {j}", j.line(), j.column()),
        other => format!("{source}: {other}"),
    })
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub bwb: bool,
    pub strict: bool,
    pub json: Option<JsonTarget>,
}

/// Numerology always; exceptionality with `bwb`. Exit 0 when the collection
/// is well formed and every requested check passes. Numerology mismatches
/// are informational unless `strict` is set.
pub fn cmd_check(source: &str, opts: &CheckOptions, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let start = Instant::now();
    let c = match load_collection(source) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let Some(desc) = registry::lookup(&c.variety) else {
        let _ = writeln!(
            err,
            "error: collection variety {:?} is not registered; registered ids:\n{}",
            c.variety,
            registry::listing()
        );
        return EXIT_USAGE;
    };
    let mut r = match build_report(&desc) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", desc.id);
            return EXIT_INVARIANT;
        }
    };
    let verdict = match conjecture_numerology(&r.spectrum, &c) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let numerology_ok = verdict.passed();
    r.numerology = Some(verdict);
    r.collection = Some(c.clone());
    let mut bwb_ok = true;
    if opts.bwb {
        match check_collection_any(&c) {
            Ok(check) => {
                bwb_ok = check.passed();
                r.bwb = Some(check);
            }
            Err(Error::UnsupportedBackend(v)) => {
                let msg = format!("no Borel-Weil-Bott backend for {v}; numerology only");
                let _ = writeln!(err, "warning: {msg}");
                r.warnings.push(msg);
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    if !numerology_ok && !opts.strict {
        r.warnings
            .push("numerology differs from the spectrum (informational; use --strict to fail)".into());
    }
    let meta = Metadata::new(format!("check {source}"), start.elapsed());
    if let Err(code) = emit(&r, opts.json.as_ref(), &meta, out, err) {
        return code;
    }
    let passed = r.invariant_violations.is_empty() && bwb_ok && (numerology_ok || !opts.strict);
    if passed {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    }
}

pub fn cmd_selftest(filter: Option<&str>, data: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    if let Some(f) = filter {
        if !selftest::MODULES.contains(&f) {
            let _ = writeln!(
                err,
                "error: unknown module {f:?}; modules: {}",
                selftest::MODULES.join(", ")
            );
            return EXIT_USAGE;
        }
    }
    let dir = data.map(Path::to_path_buf).unwrap_or_else(data_dir);
    let start = Instant::now();
    let outcomes = selftest::run(filter, &dir);
    let _ = writeln!(out, "| module | check | result |\n|---|---|---|");
    for o in &outcomes {
        let status = if o.result.is_ok() { "pass" } else { "FAIL" };
        let _ = writeln!(out, "| {} | {} | {status} |", o.module, o.name);
    }
    let failed: Vec<_> = outcomes.iter().filter(|o| o.result.is_err()).collect();
    for o in &failed {
        if let Err(msg) = &o.result {
            let _ = writeln!(err, "FAIL {}::{}: {msg}", o.module, o.name);
        }
    }
    let _ = writeln!(out, "\n{} checks, {} failed", outcomes.len(), failed.len());
    let meta = Metadata::new("selftest", start.elapsed());
    let _ = writeln!(err, "{}", serde_json::to_string(&meta).expect("metadata serializes"));
    if failed.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    }
}
