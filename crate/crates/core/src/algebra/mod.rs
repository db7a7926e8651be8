//! Finite-dimensional graded commutative algebras over the rationals, given by
//! structure constants, together with the providers that build the quantum
//! cohomology rings and Jacobi rings used elsewhere.

mod data;
pub mod groebner;
mod providers;

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{int, is_zero_vec, RatMatrix, RatPoly, Rational};

pub use data::{data_dir, load_structure_file, StructureData, DATA_ENV};
pub use groebner::{from_presentation, MPoly, Monomial, PolyPresentation};
pub use providers::{
    grassmannian_presentation, ig2_data_file_name, ig2_presentation, int_vector, jacobi_ring, qh_ig2, qh_ig2_from_data,
    qh_projective, DynkinType,
};

/// `b_i * b_j = sum_k c_ij^k b_k`, stored densely with the `(i, j)` product
/// at `products[i * dim + j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCommAlgebra {
    name: String,
    basis_labels: Vec<String>,
    products: Vec<Vec<Rational>>,
    unit: Vec<Rational>,
    degrees: Vec<usize>,
    fano_index: usize,
    anticanonical: Vec<Rational>,
    dim_x: usize,
}

impl FiniteCommAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: String,
        basis_labels: Vec<String>,
        products: Vec<Vec<Rational>>,
        unit: Vec<Rational>,
        degrees: Vec<usize>,
        fano_index: usize,
        anticanonical: Vec<Rational>,
        dim_x: usize,
    ) -> Result<Self> {
        let dim = basis_labels.len();
        let mismatch = |got| Error::DimensionMismatch { expected: dim, got };
        if products.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                got: products.len(),
            });
        }
        if let Some(bad) = products.iter().find(|v| v.len() != dim) {
            return Err(mismatch(bad.len()));
        }
        for v in [&unit, &anticanonical] {
            if v.len() != dim {
                return Err(mismatch(v.len()));
            }
        }
        if degrees.len() != dim {
            return Err(mismatch(degrees.len()));
        }
        if fano_index == 0 {
            return Err(Error::InvalidParameters("fano index must be positive".into()));
        }
        let degrees = degrees.into_iter().map(|d| d % fano_index).collect();
        Ok(Self {
            name,
            basis_labels,
            products,
            unit,
            degrees,
            fano_index,
            anticanonical,
            dim_x,
        })
    }

    /// The zero algebra (no basis), used for an empty fiber.
    pub fn zero(name: String, fano_index: usize, dim_x: usize) -> Self {
        Self {
            name,
            basis_labels: Vec::new(),
            products: Vec::new(),
            unit: Vec::new(),
            degrees: Vec::new(),
            fano_index,
            anticanonical: Vec::new(),
            dim_x,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis_labels.len()
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn fano_index(&self) -> usize {
        self.fano_index
    }

    pub fn anticanonical(&self) -> &[Rational] {
        &self.anticanonical
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.products[i * self.dim() + j][k]
    }

    /// `b_i * b_j` as a coefficient vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Rational] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        crate::exactlin::unit_vector(self.dim(), i)
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, ai) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let coef = ai * bj;
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !c.is_zero() {
                        *o += &coef * c;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[Rational], mut e: usize) -> Vec<Rational> {
        let mut result = self.unit.clone();
        let mut base = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Evaluates a polynomial at an element of the algebra.
    pub fn eval_poly(&self, p: &RatPoly, a: &[Rational]) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.dim()];
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, a);
            for (x, u) in acc.iter_mut().zip(&self.unit) {
                *x += c * u;
            }
        }
        acc
    }

    /// Matrix of `a -> v * a` in the basis.
    pub fn mult_matrix(&self, v: &[Rational]) -> Result<RatMatrix> {
        let d = self.dim();
        if v.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
        let mut m = RatMatrix::zeros(d, d);
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for j in 0..d {
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        m[(k, j)] += vi * c;
                    }
                }
            }
        }
        Ok(m)
    }

    /// Minimal polynomial of an element: the first linear relation among
    /// `1, a, a^2, ...`.
    pub fn minimal_polynomial(&self, a: &[Rational]) -> Result<RatPoly> {
        let d = self.dim();
        if a.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: a.len(),
            });
        }
        if d == 0 {
            return Ok(RatPoly::one());
        }
        let mut powers = vec![self.unit.clone()];
        loop {
            let next = self.mul(powers.last().expect("nonempty"), a);
            let m = RatMatrix::from_columns(d, &powers);
            if let Some(sol) = m.solve(&next) {
                let mut coeffs: Vec<Rational> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(Rational::one());
                return Ok(RatPoly::from_coeffs(coeffs));
            }
            powers.push(next);
        }
    }

    /// Degree of a nonzero homogeneous vector, `None` if inhomogeneous or zero.
    pub fn homogeneous_degree(&self, v: &[Rational]) -> Option<usize> {
        let mut degs = v
            .iter()
            .zip(&self.degrees)
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, &d)| d);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Copy with one structure constant replaced, keeping everything else.
    /// Used to build deliberately broken algebras in tests.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, value: Rational) -> Self {
        let mut out = self.clone();
        let d = self.dim();
        out.products[i * d + j][k] = value;
        out
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// One violated algebra axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Commutativity { i: usize, j: usize },
    Associativity { i: usize, j: usize, l: usize },
    Unit { i: usize },
    Grading { i: usize, j: usize, k: usize },
    AnticanonicalDegree { found: Option<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Commutativity { i, j } => write!(f, "b{i}*b{j} != b{j}*b{i}"),
            Self::Associativity { i, j, l } => write!(f, "(b{i}*b{j})*b{l} != b{i}*(b{j}*b{l})"),
            Self::Unit { i } => write!(f, "unit fails on b{i}"),
            Self::Grading { i, j, k } => write!(f, "c_{{{i},{j}}}^{k} breaks the grading"),
            Self::AnticanonicalDegree { found } => {
                write!(f, "anticanonical class has degree {found:?}, expected 1")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

type Sparse = Vec<(usize, Rational)>;

fn sparse(v: &[Rational]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Checks commutativity, associativity on all triples, the unit, the
/// `Z/m` grading and the degree of the anticanonical class.
pub fn validate_algebra(a: &FiniteCommAlgebra) -> ValidationReport {
    let d = a.dim();
    let m = a.fano_index;
    let mut violations = Vec::new();
    let table: Vec<Sparse> = a.products.iter().map(|v| sparse(v)).collect();

    for i in 0..d {
        for j in i + 1..d {
            if a.products[i * d + j] != a.products[j * d + i] {
                violations.push(Violation::Commutativity { i, j });
            }
        }
    }

    for i in 0..d {
        for j in 0..d {
            for &(k, _) in &table[i * d + j] {
                if (a.degrees[i] + a.degrees[j]) % m != a.degrees[k] {
                    violations.push(Violation::Grading { i, j, k });
                }
            }
        }
    }

    let unit = sparse(&a.unit);
    for i in 0..d {
        let mut acc = vec![Rational::zero(); d];
        for (u, cu) in &unit {
            for (k, c) in &table[u * d + i] {
                acc[*k] += cu * c;
            }
        }
        let mut expected = vec![Rational::zero(); d];
        expected[i] = Rational::one();
        if acc != expected {
            violations.push(Violation::Unit { i });
        }
    }

    let mut lhs = vec![Rational::zero(); d];
    let mut rhs = vec![Rational::zero(); d];
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                lhs.iter_mut().for_each(|x| x.set_zero());
                rhs.iter_mut().for_each(|x| x.set_zero());
                for (k, c) in &table[i * d + j] {
                    for (t, e) in &table[k * d + l] {
                        lhs[*t] += c * e;
                    }
                }
                for (k, c) in &table[j * d + l] {
                    for (t, e) in &table[i * d + k] {
                        rhs[*t] += c * e;
                    }
                }
                if lhs != rhs {
                    violations.push(Violation::Associativity { i, j, l });
                }
            }
        }
    }

    if !is_zero_vec(&a.anticanonical) {
        let found = a.homogeneous_degree(&a.anticanonical);
        if found != Some(1 % m) {
            violations.push(Violation::AnticanonicalDegree { found });
        }
    }

    ValidationReport { violations }
}

/// Matrix of multiplication by `v` (free-function form).
pub fn mult_matrix(a: &FiniteCommAlgebra, v: &[Rational]) -> Result<RatMatrix> {
    a.mult_matrix(v)
}

/// Builds an algebra from a basis-indexed multiplication closure; handy for
/// monomial algebras.
pub(crate) fn algebra_from_fn(
    name: String,
    labels: Vec<String>,
    degrees: Vec<usize>,
    fano_index: usize,
    dim_x: usize,
    anticanonical: Vec<Rational>,
    product: impl Fn(usize, usize) -> Vec<Rational>,
) -> Result<FiniteCommAlgebra> {
    let d = labels.len();
    let mut products = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            products.push(product(i, j));
        }
    }
    let mut unit = vec![int(0); d];
    if d > 0 {
        unit[0] = int(1);
    }
    FiniteCommAlgebra::new(name, labels, products, unit, degrees, fano_index, anticanonical, dim_x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_is_valid() {
        assert!(validate_algebra(&qh_projective(2).unwrap()).is_valid());
    }

    #[test]
    fn perturbation_is_caught() {
        let a = qh_projective(2).unwrap();
        // h * h = h^2; bump the h^2 coefficient
        let c = a.structure_constant(1, 1, 2) + int(1);
        let bad = a.with_structure_constant(1, 1, 2, c);
        let report = validate_algebra(&bad);
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. })));
    }

    #[test]
    fn grading_violation_reported() {
        let a = qh_projective(2).unwrap();
        // h * h picking up a unit component breaks Z/3 grading
        let bad = a.with_structure_constant(1, 1, 0, int(1));
        assert!(validate_algebra(&bad)
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Grading { i: 1, j: 1, k: 0 })));
    }

    #[test]
    fn mult_matrix_examples() {
        let a = qh_projective(1).unwrap();
        assert_eq!(a.mult_matrix(a.unit()).unwrap(), RatMatrix::identity(2));
        assert_eq!(
            a.mult_matrix(&[int(0), int(1)]).unwrap(),
            RatMatrix::from_i64(2, 2, &[0, 1, 1, 0])
        );
        assert!(matches!(
            a.mult_matrix(&[int(1)]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
        let b = qh_projective(3).unwrap();
        let u = vec![int(1), int(2), int(0), int(-1)];
        let w = vec![int(0), int(1), int(3), int(5)];
        let sum: Vec<Rational> = u.iter().zip(&w).map(|(x, y)| x + y).collect();
        assert_eq!(
            b.mult_matrix(&sum).unwrap(),
            b.mult_matrix(&u).unwrap().add(&b.mult_matrix(&w).unwrap()).unwrap()
        );
    }

    #[test]
    fn minimal_polynomial_of_hyperplane() {
        let a = qh_projective(3).unwrap();
        let h = a.basis_vector(1);
        assert_eq!(a.minimal_polynomial(&h).unwrap(), RatPoly::from_i64(&[-1, 0, 0, 0, 1]));
    }
}
