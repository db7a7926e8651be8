//! Lefschetz collections and the comparison of their shape with the quantum
//! spectrum.
//!
//! A collection is a starting block `E_1, ..., E_{s_0}` together with a
//! non-increasing support partition `s_0 >= ... >= s_{m-1} >= 0`; block `i`
//! is the first `s_i` objects twisted by `O(i)`. Object descriptors are kept
//! as strings here; only [`crate::bwb`] interprets them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectrum::SpectrumReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzCollection {
    pub variety: String,
    pub fano_index: usize,
    pub starting_block: Vec<String>,
    /// Padded with zeros to length `fano_index`.
    pub support: Vec<usize>,
    /// Fullness is asserted for builtin collections only.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub full: bool,
}

impl LefschetzCollection {
    pub fn new(
        variety: impl Into<String>,
        fano_index: usize,
        starting_block: Vec<String>,
        support: Vec<usize>,
    ) -> Result<Self> {
        Self {
            variety: variety.into(),
            fano_index,
            starting_block,
            support,
            full: false,
        }
        .normalized()
    }

    /// Validates the support partition and pads it to the Fano index.
    pub fn normalized(mut self) -> Result<Self> {
        let m = self.fano_index;
        if m == 0 {
            return Err(Error::InvalidSupport("fano index must be positive".into()));
        }
        if self.support.len() > m {
            return Err(Error::InvalidSupport(format!(
                "support partition has {} entries but the fano index is {m}",
                self.support.len()
            )));
        }
        if self.support.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidSupport("support partition not non-increasing".into()));
        }
        let s0 = self.support.first().copied().unwrap_or(0);
        if s0 != self.starting_block.len() {
            return Err(Error::InvalidSupport(format!(
                "first support entry is {s0} but the starting block has {} objects",
                self.starting_block.len()
            )));
        }
        self.support.resize(m, 0);
        Ok(self)
    }

    /// Parses the JSON spec `{variety, fano_index, starting_block, support}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Self = serde_json::from_str(text)?;
        raw.normalized()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("collection serializes")
    }

    /// Objects in Lefschetz order as `(descriptor, twist)`.
    pub fn objects(&self) -> Vec<(String, i64)> {
        let mut out = Vec::new();
        for (twist, &s) in self.support.iter().enumerate() {
            for obj in &self.starting_block[..s] {
                out.push((obj.clone(), twist as i64));
            }
        }
        out
    }

    pub fn is_rectangular(&self) -> bool {
        lengths(self).residual_expected == 0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Lengths {
    pub total: usize,
    pub rectangular: usize,
    pub residual_expected: usize,
}

pub fn lengths(c: &LefschetzCollection) -> Lengths {
    let total: usize = c.support.iter().sum();
    let rectangular = c.fano_index * c.support.last().copied().unwrap_or(0);
    Lengths {
        total,
        rectangular,
        residual_expected: total - rectangular,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumerologyCheck {
    pub name: String,
    pub status: CheckStatus,
    pub explanation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NumerologyVerdict {
    pub variety: String,
    pub total_length: usize,
    pub rect_length: usize,
    pub residual_expected: usize,
    pub k_required: Option<usize>,
    pub checks: Vec<NumerologyCheck>,
}

impl NumerologyVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&NumerologyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn verdict(name: &str, ok: bool, explanation: String) -> NumerologyCheck {
    NumerologyCheck {
        name: name.into(),
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        explanation,
    }
}

/// Compares the shape of `c` with the spectrum: (a) total length against
/// `dim H*`, (b) last support entry against the orbit count, (c) residual
/// length against the fiber over zero, (d) when that fiber is reduced, one
/// residual object per point.
pub fn conjecture_numerology(r: &SpectrumReport, c: &LefschetzCollection) -> Result<NumerologyVerdict> {
    if r.fano_index != c.fano_index {
        return Err(Error::FanoIndexMismatch {
            collection: c.fano_index,
            variety: r.fano_index,
        });
    }
    let l = lengths(c);
    let k = r.orbit_count_by_length.value;
    let last = c.support.last().copied().unwrap_or(0);
    let mut checks = Vec::new();

    let what = if c.full { "full collection" } else { "length vs dim H*" };
    checks.push(verdict(
        "a_total_length",
        l.total == r.dim_total,
        format!("{what}: {} objects, dim H* = {}", l.total, r.dim_total),
    ));
    checks.push(match k {
        Some(k) => verdict(
            "b_rectangular_part",
            last == k,
            format!("last support entry {last}, orbit count k = {k}"),
        ),
        None => verdict(
            "b_rectangular_part",
            false,
            format!(
                "orbit count {}/{} is not an integer",
                r.orbit_count_by_length.numerator, r.orbit_count_by_length.denominator
            ),
        ),
    });
    checks.push(verdict(
        "c_residual_length",
        l.residual_expected == r.dim_zero_part,
        format!(
            "residual length {}, length of the fiber over zero {}",
            l.residual_expected, r.dim_zero_part
        ),
    ));
    let z = &r.zero_part;
    let reduced = z.geometric_points == z.dim;
    checks.push(if z.dim > 0 && reduced {
        verdict(
            "d_orthogonal_points",
            l.residual_expected == z.geometric_points,
            format!(
                "fiber over zero is {} reduced points; residual length {} (count comparison only)",
                z.geometric_points, l.residual_expected
            ),
        )
    } else {
        NumerologyCheck {
            name: "d_orthogonal_points".into(),
            status: CheckStatus::NotApplicable,
            explanation: "fiber over zero is empty or non-reduced".into(),
        }
    });
    Ok(NumerologyVerdict {
        variety: r.algebra.clone(),
        total_length: l.total,
        rect_length: l.rectangular,
        residual_expected: l.residual_expected,
        k_required: k,
        checks,
    })
}

/// Names accepted by [`builtin_collection`].
pub const BUILTIN_NAMES: [&str; 4] = ["beilinson(n)", "kapranov_g24", "minimal_g24", "kuznetsov_ig2(n)"];

fn symmetric_power(i: usize) -> String {
    match i {
        0 => "O".into(),
        1 => "U*".into(),
        _ => format!("S^{i} U*"),
    }
}

fn builtin(variety: String, m: usize, block: Vec<String>, support: Vec<usize>) -> Result<LefschetzCollection> {
    let mut c = LefschetzCollection::new(variety, m, block, support)?;
    c.full = true;
    Ok(c)
}

/// Builtin collections: Beilinson on `P^n`, Kapranov's and the minimal
/// Lefschetz collection on `G(2,4)`, and Kuznetsov's collection on
/// `IG(2,2n)`. `param` is `n` where applicable.
pub fn builtin_collection(name: &str, param: Option<usize>) -> Result<LefschetzCollection> {
    let need = |lo: usize| {
        param
            .filter(|&n| n >= lo)
            .ok_or_else(|| Error::UnknownCollection(format!("{name} needs a parameter n >= {lo}")))
    };
    match name {
        "beilinson" => {
            let n = need(1)?;
            builtin(format!("P{n}"), n + 1, vec!["O".into()], vec![1; n + 1])
        }
        "kapranov_g24" => builtin("G(2,4)".into(), 4, (0..3).map(symmetric_power).collect(), vec![3, 2, 1]),
        "minimal_g24" => builtin(
            "G(2,4)".into(),
            4,
            (0..2).map(symmetric_power).collect(),
            vec![2, 2, 1, 1],
        ),
        "kuznetsov_ig2" => {
            let n = need(2)?;
            let mut support = vec![n; n - 1];
            support.extend(std::iter::repeat_n(n - 1, n));
            builtin(
                format!("IG(2,{})", 2 * n),
                2 * n - 1,
                (0..n).map(symmetric_power).collect(),
                support,
            )
        }
        other => Err(Error::UnknownCollection(other.into())),
    }
}

/// Parses ids such as `beilinson(3)`, `kuznetsov_ig2(4)` or `minimal_g24`.
pub fn builtin_by_id(id: &str) -> Result<LefschetzCollection> {
    let id = id.trim();
    match id.split_once('(') {
        Some((name, rest)) => {
            let n = rest
                .strip_suffix(')')
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(|| Error::UnknownCollection(id.into()))?;
            builtin_collection(name, Some(n))
        }
        None => builtin_collection(id, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_lengths() {
        let b = builtin_collection("beilinson", Some(4)).unwrap();
        assert_eq!(
            lengths(&b),
            Lengths {
                total: 5,
                rectangular: 5,
                residual_expected: 0
            }
        );
        let k = builtin_collection("kapranov_g24", None).unwrap();
        assert_eq!(k.support, vec![3, 2, 1, 0]);
        assert_eq!(lengths(&k).residual_expected, 6);
        let m = builtin_collection("minimal_g24", None).unwrap();
        assert_eq!(
            lengths(&m),
            Lengths {
                total: 6,
                rectangular: 4,
                residual_expected: 2
            }
        );
    }

    #[test]
    fn minimal_g24_objects() {
        let objs = builtin_by_id("minimal_g24").unwrap().objects();
        let expect = [("O", 0), ("U*", 0), ("O", 1), ("U*", 1), ("O", 2), ("O", 3)];
        assert_eq!(objs.len(), expect.len());
        for ((o, t), (e, u)) in objs.iter().zip(expect) {
            assert_eq!((o.as_str(), *t), (e, u));
        }
    }

    #[test]
    fn kuznetsov_shape() {
        let c = builtin_by_id("kuznetsov_ig2(3)").unwrap();
        assert_eq!(c.starting_block, ["O", "U*", "S^2 U*"]);
        assert_eq!(c.support, vec![3, 3, 2, 2, 2]);
        assert_eq!(lengths(&c).total, 12);
    }

    #[test]
    fn support_validation() {
        let bad = LefschetzCollection::new("G(2,4)", 4, vec!["O".into(), "U*".into()], vec![1, 2]);
        assert!(matches!(bad, Err(Error::InvalidSupport(m)) if m.contains("non-increasing")));
        assert!(LefschetzCollection::new("P1", 2, vec!["O".into()], vec![1, 1, 1]).is_err());
        assert!(LefschetzCollection::new("P1", 2, vec!["O".into()], vec![2, 1]).is_err());
        assert!(matches!(builtin_by_id("nonsense"), Err(Error::UnknownCollection(_))));
        assert!(builtin_by_id("beilinson").is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = builtin_by_id("minimal_g24").unwrap();
        let text = c.to_json();
        assert_eq!(LefschetzCollection::from_json(&text).unwrap(), c);
        let short = r#"{"variety":"G(2,4)","fano_index":4,"starting_block":["O","U*","S^2 U*"],"support":[3,2,1]}"#;
        assert_eq!(LefschetzCollection::from_json(short).unwrap().support, vec![3, 2, 1, 0]);
    }
}
