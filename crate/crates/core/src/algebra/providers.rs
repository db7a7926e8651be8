use std::fmt;
use std::path::Path;
use std::str::FromStr;

use super::groebner::{from_presentation, MPoly, PolyPresentation};
use super::{algebra_from_fn, load_structure_file, FiniteCommAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{int, Rational};

/// `QH(P^n)` at `q = 1`: `Q[h]/(h^{n+1} - 1)` in the basis `1, h, ..., h^n`.
pub fn qh_projective(n: usize) -> Result<FiniteCommAlgebra> {
    if n < 1 {
        return Err(Error::InvalidParameters(format!("P^{n} needs n >= 1")));
    }
    let d = n + 1;
    let labels = (0..d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "h".to_string(),
            _ => format!("h^{i}"),
        })
        .collect();
    let mut anticanonical = vec![int(0); d];
    anticanonical[1] = int(d as i64);
    algebra_from_fn(
        format!("P{n}"),
        labels,
        (0..d).collect(),
        d,
        n,
        anticanonical,
        |i, j| {
            let mut v = vec![int(0); d];
            v[(i + j) % d] = int(1);
            v
        },
    )
}

/// Complete homogeneous polynomials `h_0, ..., h_top` in Chern roots whose
/// elementary symmetric functions are the given polynomials.
fn complete_from_elementary(elementary: &[MPoly], top: usize, nvars: usize) -> Vec<MPoly> {
    let mut h = vec![MPoly::constant(nvars, int(1))];
    for j in 1..=top {
        let mut acc = MPoly::zero(nvars);
        for (i, e) in elementary.iter().enumerate().take(j) {
            let term = e.mul(&h[j - 1 - i]);
            acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        h.push(acc);
    }
    h
}

/// `QH(G(k,n))` at `q = 1` as `Q[e_1..e_k]/(h_{n-k+1}, ..., h_{n-1}, h_n + (-1)^k)`,
/// with `e_i` the class of `sigma_{1^i}` (weight `i`). Limited to `k <= 3`.
pub fn grassmannian_presentation(k: usize, n: usize) -> Result<PolyPresentation> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!("G({k},{n}) needs 0 < k < n")));
    }
    if k > 3 {
        return Err(Error::InvalidParameters(format!(
            "the presentation route supports k <= 3, got G({k},{n})"
        )));
    }
    let elementary: Vec<MPoly> = (0..k).map(|i| MPoly::var(k, i)).collect();
    let h = complete_from_elementary(&elementary, n, k);
    let mut relations: Vec<MPoly> = h[n - k + 1..n].to_vec();
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    relations.push(h[n].add(&MPoly::constant(k, int(sign))));
    Ok(PolyPresentation {
        name: format!("G({k},{n})"),
        variables: (1..=k).map(|i| (format!("e{i}"), i as u32)).collect(),
        relations,
        fano_index: n,
        dim_x: k * (n - k),
        anticanonical: MPoly::var(k, 0).scale(&int(n as i64)),
    })
}

/// `QH(IG(2,2n))` at `q = 1` in the Chern classes `e1 = c_1(U^*)`,
/// `e2 = c_2(U^*)` of the dual tautological bundle. With `x1, x2` the Chern
/// roots, the classical relations say that `h_j(x1^2, x2^2)` vanishes for
/// `j >= n - 1`; the quantum deformation only touches the degree `2n`
/// relation, which becomes `h_n(x1^2, x2^2) + q e1`.
pub fn ig2_presentation(n: usize) -> Result<PolyPresentation> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("IG(2,{}) needs n >= 2", 2 * n)));
    }
    let e1 = MPoly::var(2, 0);
    let e2 = MPoly::var(2, 1);
    // elementary functions of the squared roots
    let sq1 = e1.mul(&e1).sub(&e2.scale(&int(2)));
    let sq2 = e2.mul(&e2);
    let h = complete_from_elementary(&[sq1, sq2], n, 2);
    Ok(PolyPresentation {
        name: format!("IG(2,{})", 2 * n),
        variables: vec![("e1".into(), 1), ("e2".into(), 2)],
        relations: vec![h[n - 1].clone(), h[n].add(&e1)],
        fano_index: 2 * n - 1,
        dim_x: 4 * n - 5,
        anticanonical: e1.scale(&int(2 * n as i64 - 1)),
    })
}

/// `QH(IG(2,2n))` at `q = 1`, built from [`ig2_presentation`].
pub fn qh_ig2(n: usize) -> Result<FiniteCommAlgebra> {
    from_presentation(&ig2_presentation(n)?)
}

/// File name of the checked-in structure constants for `IG(2,2n)`.
pub fn ig2_data_file_name(n: usize) -> String {
    format!("ig_2_{}.json", 2 * n)
}

/// `QH(IG(2,2n))` loaded from a structure-constant file in `dir`.
pub fn qh_ig2_from_data(n: usize, dir: &Path) -> Result<FiniteCommAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("IG(2,{}) needs n >= 2", 2 * n)));
    }
    load_structure_file(&dir.join(ig2_data_file_name(n)))
}

/// Simply-laced Dynkin types with rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl DynkinType {
    pub fn rank(self) -> usize {
        match self {
            Self::A(r) | Self::D(r) => r,
            Self::E6 => 6,
            Self::E7 => 7,
            Self::E8 => 8,
        }
    }

    fn check(self) -> Result<Self> {
        match self {
            Self::A(r) if r >= 1 => Ok(self),
            Self::D(r) if r >= 4 => Ok(self),
            Self::E6 | Self::E7 | Self::E8 => Ok(self),
            other => Err(Error::UnsupportedType(other.to_string())),
        }
    }

    /// The normal form `f(x, y)` of the simple singularity.
    pub fn singularity(self) -> Result<MPoly> {
        let t = |c: i64, a: u32, b: u32| (c, [a, b]);
        let terms: Vec<(i64, [u32; 2])> = match self.check()? {
            Self::A(r) => vec![t(1, r as u32 + 1, 0), t(1, 0, 2)],
            Self::D(r) => vec![t(1, r as u32 - 1, 0), t(1, 1, 2)],
            Self::E6 => vec![t(1, 3, 0), t(1, 0, 4)],
            Self::E7 => vec![t(1, 3, 0), t(1, 1, 3)],
            Self::E8 => vec![t(1, 3, 0), t(1, 0, 5)],
        };
        let refs: Vec<(i64, &[u32])> = terms.iter().map(|(c, e)| (*c, &e[..])).collect();
        Ok(MPoly::from_terms(2, &refs))
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A(r) => write!(f, "A{r}"),
            Self::D(r) => write!(f, "D{r}"),
            Self::E6 => write!(f, "E6"),
            Self::E7 => write!(f, "E7"),
            Self::E8 => write!(f, "E8"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        let bad = || Error::UnsupportedType(s.clone());
        let (head, rank) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let r: usize = rank.parse().map_err(|_| bad())?;
        let t = match (head, r) {
            ("A", r) => Self::A(r),
            ("D", r) => Self::D(r),
            ("E", 6) => Self::E6,
            ("E", 7) => Self::E7,
            ("E", 8) => Self::E8,
            _ => return Err(bad()),
        };
        t.check()
    }
}

/// Milnor algebra `Q[x,y]/(df/dx, df/dy)` of the simple singularity of type `t`.
pub fn jacobi_ring(t: DynkinType) -> Result<FiniteCommAlgebra> {
    let f = t.singularity()?;
    let p = PolyPresentation {
        name: format!("Jac({t})"),
        variables: vec![("x".into(), 1), ("y".into(), 1)],
        relations: vec![f.derivative(0), f.derivative(1)],
        fano_index: 1,
        dim_x: 0,
        anticanonical: MPoly::zero(2),
    };
    from_presentation(&p)
}

/// Coefficient vector helper for tests and callers holding small integers.
pub fn int_vector(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::super::validate_algebra;
    use super::*;

    #[test]
    fn projective_examples() {
        let p1 = qh_projective(1).unwrap();
        assert_eq!(p1.basis_product(1, 1), &int_vector(&[1, 0])[..]);
        assert_eq!(p1.anticanonical(), &int_vector(&[0, 2])[..]);
        let p2 = qh_projective(2).unwrap();
        assert_eq!(p2.basis_product(1, 2), &int_vector(&[1, 0, 0])[..]);
        let p4 = qh_projective(4).unwrap();
        assert_eq!((p4.dim(), p4.fano_index()), (5, 5));
        assert!(qh_projective(0).is_err());
    }

    #[test]
    fn projective_from_presentation() {
        for n in 1..5usize {
            let rel = MPoly::from_terms(1, &[(1, &[n as u32 + 1]), (-1, &[0])]);
            let p = PolyPresentation {
                name: format!("P{n}"),
                variables: vec![("h".into(), 1)],
                relations: vec![rel],
                fano_index: n + 1,
                dim_x: n,
                anticanonical: MPoly::var(1, 0).scale(&int(n as i64 + 1)),
            };
            let a = from_presentation(&p).unwrap();
            let b = qh_projective(n).unwrap();
            assert_eq!(a.dim(), n + 1);
            for i in 0..=n {
                for j in 0..=n {
                    assert_eq!(a.basis_product(i, j), b.basis_product(i, j));
                }
            }
        }
    }

    #[test]
    fn ig2_dimensions_and_index() {
        for (n, dim, m) in [(2, 4, 3), (3, 12, 5), (4, 24, 7)] {
            let a = qh_ig2(n).unwrap();
            assert_eq!((a.dim(), a.fano_index()), (dim, m));
            assert!(validate_algebra(&a).is_valid());
        }
        assert!(qh_ig2(1).is_err());
    }

    #[test]
    fn jacobi_small_cases() {
        let a2 = jacobi_ring(DynkinType::A(2)).unwrap();
        assert_eq!(a2.basis_labels(), ["1", "x"]);
        let a1 = jacobi_ring(DynkinType::A(1)).unwrap();
        assert_eq!(a1.dim(), 1);
        assert_eq!(jacobi_ring(DynkinType::D(4)).unwrap().dim(), 4);
        assert!(matches!(jacobi_ring(DynkinType::D(3)), Err(Error::UnsupportedType(_))));
    }

    #[test]
    fn dynkin_parsing() {
        assert_eq!("A3".parse::<DynkinType>().unwrap(), DynkinType::A(3));
        assert_eq!("D_5".parse::<DynkinType>().unwrap(), DynkinType::D(5));
        assert_eq!("E7".parse::<DynkinType>().unwrap(), DynkinType::E7);
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("B3".parse::<DynkinType>().is_err());
        assert!("A0".parse::<DynkinType>().is_err());
    }
}
