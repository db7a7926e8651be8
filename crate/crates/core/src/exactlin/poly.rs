use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Inv, One, Signed, Zero};

use super::{int, RatMatrix, Rational};
use crate::error::{Error, Result};

/// Univariate polynomial over the rationals; `coeffs[i]` is the coefficient of
/// `x^i`. Trailing zeros are never stored, so the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        Ok(self.scale(&lead.clone().inv()))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates the polynomial at a square matrix (Horner scheme).
    pub fn eval_matrix(&self, m: &RatMatrix) -> Result<RatMatrix> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m)?.add(&RatMatrix::identity(n).scale(c))?;
        }
        Ok(acc)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading().ok_or(Error::ZeroPolynomial)?.clone().inv();
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &dlead;
            if !c.is_zero() {
                let shift = top - dd;
                for (i, d) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] -= &c * d;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Monic gcd via the remainder sequence; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic().unwrap_or_default()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g`,
    /// `g` monic (or zero when both inputs vanish).
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = lead.inv();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// `p / gcd(p, p')`, made monic.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g)?.0.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Writes `p = x^a * g` with `g(0) != 0`.
    pub fn split_at_zero(&self) -> Result<(usize, Self)> {
        let a = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroPolynomial)?;
        Ok((a, Self::from_coeffs(self.coeffs[a..].to_vec())))
    }

    /// For coprime `p`, `q` returns `(u, v)` with `u*p + v*q = 1`,
    /// `deg u < deg q` and `deg v < deg p`.
    pub fn bezout_coprime(p: &Self, q: &Self) -> Result<(Self, Self)> {
        if p.is_zero() || q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (g, u, v) = p.ext_gcd(q);
        if g.degree() != Some(0) {
            return Err(Error::NotCoprime { gcd: g.to_string() });
        }
        // reduce degrees: u -> u mod q, v adjusted accordingly
        let (k, u_red) = u.div_rem(q)?;
        let v_red = &v + &(&k * p);
        Ok((u_red, v_red))
    }

    /// Substitutes `x -> c x`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pow);
            pow *= c;
        }
        Self::from_coeffs(out)
    }

    /// Indices of nonzero coefficients.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;

    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RatPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for RatPoly {
    type Output = RatPoly;

    fn sub(self, rhs: RatPoly) -> RatPoly {
        &self - &rhs
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;

    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(out)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;

    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RatPoly {
        RatPoly::from_i64(c)
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(p(&[1, -2, 1]).squarefree_part().unwrap(), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).squarefree_part().unwrap(), p(&[1, 0, 1]));
        // x^3 (x - 2)
        assert_eq!(p(&[0, 0, 0, -2, 1]).squarefree_part().unwrap(), p(&[0, -2, 1]));
        assert!(matches!(RatPoly::zero().squarefree_part(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn split_at_zero_examples() {
        // x^2 (x^4 - 1024)
        let (a, g) = p(&[0, 0, -1024, 0, 0, 0, 1]).split_at_zero().unwrap();
        assert_eq!((a, g), (2, p(&[-1024, 0, 0, 0, 1])));
        assert_eq!(p(&[3, 1]).split_at_zero().unwrap(), (0, p(&[3, 1])));
        assert_eq!(p(&[0, 0, 0, 0, 0, 1]).split_at_zero().unwrap(), (5, p(&[1])));
        assert!(RatPoly::zero().split_at_zero().is_err());
    }

    #[test]
    fn bezout_examples() {
        let cases = [
            (p(&[0, 1]), p(&[-1, 1])),
            (p(&[0, 0, 1]), p(&[-1, 1])),
            (p(&[1, 0, 1]), p(&[0, 1])),
        ];
        for (a, b) in &cases {
            let (u, v) = RatPoly::bezout_coprime(a, b).unwrap();
            assert_eq!(&(&u * a) + &(&v * b), RatPoly::one());
            assert!(u.degree().unwrap_or(0) < b.degree().unwrap().max(1));
            assert!(v.degree().unwrap_or(0) < a.degree().unwrap().max(1));
        }
        let (u, v) = RatPoly::bezout_coprime(&p(&[0, 0, 1]), &p(&[-1, 1])).unwrap();
        assert_eq!((u, v), (p(&[1]), p(&[-1, -1])));
        let (u, v) = RatPoly::bezout_coprime(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap();
        assert_eq!((u, v), (p(&[1]), p(&[0, -1])));
    }

    #[test]
    fn bezout_rejects_common_factor() {
        let err = RatPoly::bezout_coprime(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap_err();
        match err {
            Error::NotCoprime { gcd } => assert_eq!(gcd, "x - 1"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-2, 0, 0, 1]).to_string(), "x^3 - 2");
        assert_eq!(p(&[0, -3, 2]).to_string(), "2*x^2 - 3*x");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }
}
