//! JSON structure-constant files: only nonzero `c_ij^k` with `i <= j` are
//! listed, as `[i, j, k, numerator, denominator]`.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::FiniteCommAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureData {
    pub name: String,
    pub dim: usize,
    pub fano_index: usize,
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    pub degrees: Vec<usize>,
    /// `[numerator, denominator]` per basis element.
    pub anticanonical: Vec<[i64; 2]>,
    pub unit: Vec<[i64; 2]>,
    pub triples: Vec<[i64; 5]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_labels: Option<Vec<String>>,
}

fn to_pair(q: &Rational) -> Result<[i64; 2]> {
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(n), Some(d)) => Ok([n, d]),
        _ => Err(Error::InvalidParameters(format!(
            "{q} does not fit the data file format"
        ))),
    }
}

fn from_pair(pair: [i64; 2], what: &str) -> std::result::Result<Rational, String> {
    if pair[1] == 0 {
        return Err(format!("zero denominator in {what}"));
    }
    Ok(Rational::new(BigInt::from(pair[0]), BigInt::from(pair[1])))
}

impl StructureData {
    pub fn from_algebra(a: &FiniteCommAlgebra) -> Result<Self> {
        let d = a.dim();
        let mut triples = Vec::new();
        for i in 0..d {
            for j in i..d {
                for (k, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        let [num, den] = to_pair(c)?;
                        triples.push([i as i64, j as i64, k as i64, num, den]);
                    }
                }
            }
        }
        Ok(Self {
            name: a.name().to_string(),
            dim: d,
            fano_index: a.fano_index(),
            dim_x: a.dim_x(),
            degrees: a.degrees().to_vec(),
            anticanonical: a.anticanonical().iter().map(to_pair).collect::<Result<_>>()?,
            unit: a.unit().iter().map(to_pair).collect::<Result<_>>()?,
            triples,
            basis_labels: Some(a.basis_labels().to_vec()),
        })
    }

    /// Rebuilds the algebra; `c_ji^k` is filled in from `c_ij^k`.
    pub fn to_algebra(&self) -> std::result::Result<FiniteCommAlgebra, String> {
        let d = self.dim;
        let mut products = vec![vec![Rational::zero(); d]; d * d];
        for t in &self.triples {
            let [i, j, k, num, den] = *t;
            let idx = |x: i64| usize::try_from(x).ok().filter(|&x| x < d);
            let (Some(i), Some(j), Some(k)) = (idx(i), idx(j), idx(k)) else {
                return Err(format!("triple {t:?} has an index out of range"));
            };
            if i > j {
                return Err(format!("triple {t:?} violates i <= j"));
            }
            let c = from_pair([num, den], "triple")?;
            products[i * d + j][k] = c.clone();
            products[j * d + i][k] = c;
        }
        let vector = |v: &[[i64; 2]], what: &str| -> std::result::Result<Vec<Rational>, String> {
            if v.len() != d {
                return Err(format!("{what} has length {}, expected {d}", v.len()));
            }
            v.iter().map(|&p| from_pair(p, what)).collect()
        };
        let unit = vector(&self.unit, "unit")?;
        let anticanonical = vector(&self.anticanonical, "anticanonical")?;
        let labels = match &self.basis_labels {
            Some(l) if l.len() == d => l.clone(),
            Some(l) => return Err(format!("{} basis labels for dimension {d}", l.len())),
            None => (0..d).map(|i| format!("b{i}")).collect(),
        };
        FiniteCommAlgebra::new(
            self.name.clone(),
            labels,
            products,
            unit,
            self.degrees.clone(),
            self.fano_index,
            anticanonical,
            self.dim_x,
        )
        .map_err(|e| e.to_string())
    }
}

/// Environment variable overriding the structure-constant directory.
pub const DATA_ENV: &str = "QSPECTRA_DATA";

/// `$QSPECTRA_DATA`, or the `data/` directory shipped with this crate.
pub fn data_dir() -> PathBuf {
    std::env::var_os(DATA_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("data"))
}

pub fn load_structure_file(path: &Path) -> Result<FiniteCommAlgebra> {
    let text = std::fs::read_to_string(path)?;
    let data: StructureData = serde_json::from_str(&text).map_err(|e| Error::DataFile {
        path: path.display().to_string(),
        msg: e.to_string(),
    })?;
    data.to_algebra().map_err(|msg| Error::DataFile {
        path: path.display().to_string(),
        msg,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qh_projective;

    #[test]
    fn round_trip_projective() {
        let a = qh_projective(3).unwrap();
        let data = StructureData::from_algebra(&a).unwrap();
        assert!(data.triples.iter().all(|t| t[0] <= t[1]));
        let json = serde_json::to_string(&data).unwrap();
        assert!(json.contains("\"dim_X\":3"));
        let back: StructureData = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_algebra().unwrap(), a);
    }

    #[test]
    fn rejects_lower_triangle_triples() {
        let a = qh_projective(1).unwrap();
        let mut data = StructureData::from_algebra(&a).unwrap();
        data.triples.push([1, 0, 0, 1, 1]);
        assert!(data.to_algebra().unwrap_err().contains("i <= j"));
    }
}
