//! Exact arithmetic kernel: rationals, dense rational matrices and univariate
//! polynomials. Nothing in this crate touches floating point.

mod matrix;
mod poly;

pub use matrix::RatMatrix;
pub use poly::RatPoly;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Dot product of two coefficient vectors of equal length.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(num_traits::Zero::is_zero)
}

pub fn unit_vector(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![int(0); dim];
    v[i] = int(1);
    v
}

/// Basis of the span of `vectors`, picking a maximal independent subset in
/// the given order. Returns the indices of the chosen vectors.
pub fn independent_subset(vectors: &[Vec<Rational>], dim: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    let mut echelon: Vec<(usize, Vec<Rational>)> = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        debug_assert_eq!(v.len(), dim);
        let mut w = v.clone();
        for (pivot, row) in &echelon {
            if !num_traits::Zero::is_zero(&w[*pivot]) {
                let f = w[*pivot].clone();
                for (wi, ri) in w.iter_mut().zip(row) {
                    *wi -= &f * ri;
                }
            }
        }
        if let Some(p) = w.iter().position(|x| !num_traits::Zero::is_zero(x)) {
            let inv = num_traits::Inv::inv(w[p].clone());
            for wi in w.iter_mut() {
                *wi *= &inv;
            }
            for (_, row) in echelon.iter_mut() {
                if !num_traits::Zero::is_zero(&row[p]) {
                    let f = row[p].clone();
                    for (ri, wi) in row.iter_mut().zip(&w) {
                        *ri -= &f * wi;
                    }
                }
            }
            echelon.push((p, w));
            chosen.push(idx);
        }
    }
    chosen
}

/// Coordinates with respect to a fixed linearly independent family of
/// vectors. Picks a set of rows on which the family is invertible, so each
/// lookup costs one small matrix-vector product.
#[derive(Clone, Debug)]
pub struct SubspaceCoordinates {
    rows: Vec<usize>,
    inverse: RatMatrix,
    basis: RatMatrix,
}

impl SubspaceCoordinates {
    /// `vectors` must be linearly independent and of length `dim`.
    pub fn new(vectors: &[Vec<Rational>], dim: usize) -> Option<Self> {
        let basis = RatMatrix::from_columns(dim, vectors);
        let rows = basis.transpose().rref().1;
        if rows.len() != vectors.len() {
            return None;
        }
        let square = RatMatrix::from_rows(rows.iter().map(|&r| basis.row(r).to_vec()).collect()).ok()?;
        let inverse = if vectors.is_empty() {
            RatMatrix::zeros(0, 0)
        } else {
            square.inverse()?
        };
        Some(Self { rows, inverse, basis })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let picked: Vec<Rational> = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.mul_vec(&picked).ok()?;
        let back = self.basis.mul_vec(&c).ok()?;
        (back == v).then_some(c)
    }
}
