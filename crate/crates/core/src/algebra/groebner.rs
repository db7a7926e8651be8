//! Buchberger's algorithm for zero-dimensional ideals in a handful of
//! variables, and the quotient algebra on standard monomials.
//!
//! Monomials are compared by weighted degree first and lexicographically
//! after that (graded lex with variable weights), so normal forms never raise
//! the degree.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Inv, One, Zero};

use super::FiniteCommAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{int, Rational};

/// Upper bound on the number of standard monomials before an ideal is
/// declared not zero-dimensional.
const MAX_STANDARD_MONOMIALS: usize = 100_000;
const MAX_PAIRS: usize = 50_000;
const MAX_VARIABLES: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `other / self`, assuming divisibility.
    fn quotient(&self, other: &Self) -> Self {
        Self(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    fn coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    fn is_pure_power_of(&self, var: usize) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| if i == var { e > 0 } else { e == 0 })
    }
}

/// Monomial order: weighted degree, then lexicographic with `x_0 > x_1 > ...`.
#[derive(Clone, Debug)]
pub struct WeightedGrlex {
    weights: Vec<u32>,
}

impl WeightedGrlex {
    pub fn new(weights: Vec<u32>) -> Self {
        Self { weights }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.weighted_degree(&self.weights)
            .cmp(&b.weighted_degree(&self.weights))
            .then_with(|| a.0.cmp(&b.0))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::var(nvars, i), Rational::one());
        p
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs.
    pub fn from_terms(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(Monomial(e.to_vec()), int(*c));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(self.nvars, Rational::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.0.clone();
                e[i] -= 1;
                out.add_term(Monomial(e), c * int(i64::from(m.0[i])));
            }
        }
        out
    }

    fn leading(&self, order: &WeightedGrlex) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    fn make_monic(&self, order: &WeightedGrlex) -> Self {
        match self.leading(order) {
            Some((_, c)) => self.scale(&c.clone().inv()),
            None => self.clone(),
        }
    }

    /// Is every term's weighted degree congruent modulo `m`?
    pub fn is_homogeneous_mod(&self, weights: &[u32], m: u32) -> bool {
        let mut degs = self.terms.keys().map(|k| k.weighted_degree(weights) % m);
        match degs.next() {
            Some(first) => degs.all(|d| d == first),
            None => true,
        }
    }
}

/// Generic display with variable names.
pub struct MPolyDisplay<'a> {
    poly: &'a MPoly,
    names: &'a [String],
}

impl fmt::Display for MPolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .poly
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mono = monomial_label(m, self.names);
                if mono == "1" {
                    c.to_string()
                } else if c.is_one() {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl MPoly {
    pub fn display<'a>(&'a self, names: &'a [String]) -> MPolyDisplay<'a> {
        MPolyDisplay { poly: self, names }
    }
}

pub fn monomial_label(m: &Monomial, names: &[String]) -> String {
    let factors: Vec<String> =
        m.0.iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// Fully reduces `p` modulo `basis` (all monic).
pub fn normal_form(p: &MPoly, basis: &[MPoly], order: &WeightedGrlex) -> MPoly {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading(order).expect("nonzero basis element").0.clone())
        .collect();
    let mut rem = MPoly::zero(p.nvars);
    let mut work = p.clone();
    while let Some((m, c)) = work.leading(order).map(|(m, c)| (m.clone(), c.clone())) {
        match leads.iter().position(|l| l.divides(&m)) {
            Some(idx) => {
                let q = leads[idx].quotient(&m);
                work = work.sub(&basis[idx].mul_term(&q, &c));
            }
            None => {
                work.terms.remove(&m);
                rem.add_term(m, c);
            }
        }
    }
    rem
}

fn s_polynomial(f: &MPoly, g: &MPoly, order: &WeightedGrlex) -> MPoly {
    let (lf, cf) = f.leading(order).expect("nonzero");
    let (lg, cg) = g.leading(order).expect("nonzero");
    let l = lf.lcm(lg);
    let a = f.mul_term(&lf.quotient(&l), &cf.clone().inv());
    let b = g.mul_term(&lg.quotient(&l), &cg.clone().inv());
    a.sub(&b)
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[MPoly], order: &WeightedGrlex) -> Result<Vec<MPoly>> {
    let mut basis: Vec<MPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.make_monic(order))
        .collect();
    let lead = |g: &MPoly| g.leading(order).expect("nonzero").0.clone();
    let mut leads: Vec<Monomial> = basis.iter().map(lead).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut processed = 0;
    // normal strategy: always take the pair with the smallest lcm
    while let Some(pos) = (0..pairs.len()).min_by(|&a, &b| {
        let la = leads[pairs[a].0].lcm(&leads[pairs[a].1]);
        let lb = leads[pairs[b].0].lcm(&leads[pairs[b].1]);
        order.cmp(&la, &lb)
    }) {
        let (i, j) = pairs.swap_remove(pos);
        done.insert((i, j));
        processed += 1;
        if processed > MAX_PAIRS {
            return Err(Error::NotZeroDimensional(format!(
                "Buchberger exceeded {MAX_PAIRS} S-pairs"
            )));
        }
        if leads[i].coprime(&leads[j]) {
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && leads[k].divides(&l) && done.contains(&key(i, k)) && done.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let n = basis.len();
            let r = r.make_monic(order);
            leads.push(lead(&r));
            basis.push(r);
            pairs.extend((0..n).map(|i| (i, n)));
        }
    }
    // minimalize
    let mut keep: Vec<usize> = Vec::new();
    for i in 0..basis.len() {
        let redundant =
            (0..basis.len()).any(|j| j != i && leads[j].divides(&leads[i]) && (leads[j] != leads[i] || j < i));
        if !redundant {
            keep.push(i);
        }
    }
    let minimal: Vec<MPoly> = keep.iter().map(|&i| basis[i].clone()).collect();
    // interreduce tails
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MPoly> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = minimal[i].leading(order).expect("nonzero");
        let mut tail = minimal[i].clone();
        tail.terms.remove(lm);
        let mut g = if others.is_empty() {
            tail
        } else {
            normal_form(&tail, &others, order)
        };
        g.add_term(lm.clone(), lc.clone());
        reduced.push(g.make_monic(order));
    }
    reduced.sort_by(|a, b| order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    Ok(reduced)
}

/// Monomials outside the leading-term ideal, in increasing order. Fails when
/// some variable has no pure power among the leading monomials.
pub fn standard_monomials(basis: &[MPoly], order: &WeightedGrlex, nvars: usize) -> Result<Vec<Monomial>> {
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading(order).expect("nonzero").0.clone())
        .collect();
    if leads.iter().any(|l| l.0.iter().all(|&e| e == 0)) {
        // the ideal is the whole ring
        return Ok(Vec::new());
    }
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let bound = leads
            .iter()
            .filter(|l| l.is_pure_power_of(v))
            .map(|l| l.0[v])
            .min()
            .ok_or_else(|| Error::NotZeroDimensional(format!("no pure power of variable {v} in the leading ideal")))?;
        bounds.push(bound);
    }
    let total: usize = bounds.iter().map(|&b| b as usize).product();
    if total > MAX_STANDARD_MONOMIALS {
        return Err(Error::NotZeroDimensional(format!(
            "more than {MAX_STANDARD_MONOMIALS} candidate standard monomials"
        )));
    }
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort_by(|a, b| order.cmp(a, b));
                return Ok(out);
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Quotient ring data: variables with weights, relations, and the geometric
/// data carried along into the resulting algebra.
#[derive(Clone, Debug)]
pub struct PolyPresentation {
    pub name: String,
    pub variables: Vec<(String, u32)>,
    pub relations: Vec<MPoly>,
    pub fano_index: usize,
    pub dim_x: usize,
    /// The anticanonical class as a polynomial in the variables.
    pub anticanonical: MPoly,
}

impl PolyPresentation {
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn weights(&self) -> Vec<u32> {
        self.variables.iter().map(|(_, w)| *w).collect()
    }

    pub fn names(&self) -> Vec<String> {
        self.variables.iter().map(|(n, _)| n.clone()).collect()
    }

    pub fn groebner_basis(&self) -> Result<Vec<MPoly>> {
        let order = WeightedGrlex::new(self.weights());
        groebner_basis(&self.relations, &order)
    }
}

/// Quotient algebra on the standard monomials of a reduced Groebner basis.
pub fn from_presentation(p: &PolyPresentation) -> Result<FiniteCommAlgebra> {
    let nvars = p.nvars();
    if nvars == 0 || nvars > MAX_VARIABLES {
        return Err(Error::InvalidParameters(format!(
            "presentations need 1 to {MAX_VARIABLES} variables, got {nvars}"
        )));
    }
    if p.fano_index == 0 {
        return Err(Error::InvalidParameters("fano index must be positive".into()));
    }
    let weights = p.weights();
    let order = WeightedGrlex::new(weights.clone());
    let gb = groebner_basis(&p.relations, &order)?;
    let std = standard_monomials(&gb, &order, nvars)?;
    let d = std.len();
    let names = p.names();
    let index: BTreeMap<&Monomial, usize> = std.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_vec = |poly: &MPoly| -> Vec<Rational> {
        let mut v = vec![int(0); d];
        for (m, c) in poly.terms() {
            v[index[m]] = c.clone();
        }
        v
    };
    let mut products = vec![Vec::new(); d * d];
    for i in 0..d {
        for j in i..d {
            let mut prod = MPoly::zero(nvars);
            prod.add_term(std[i].mul(&std[j]), Rational::one());
            let v = to_vec(&normal_form(&prod, &gb, &order));
            products[j * d + i] = v.clone();
            products[i * d + j] = v;
        }
    }
    let unit = if d == 0 {
        Vec::new()
    } else {
        to_vec(&normal_form(&MPoly::constant(nvars, Rational::one()), &gb, &order))
    };
    let anticanonical = if d == 0 {
        Vec::new()
    } else {
        to_vec(&normal_form(&p.anticanonical, &gb, &order))
    };
    let m = p.fano_index as u32;
    let degrees = std
        .iter()
        .map(|mono| (mono.weighted_degree(&weights) % m) as usize)
        .collect();
    let labels = std.iter().map(|mono| monomial_label(mono, &names)).collect();
    FiniteCommAlgebra::new(
        p.name.clone(),
        labels,
        products,
        unit,
        degrees,
        p.fano_index,
        anticanonical,
        p.dim_x,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn local_algebra_x_to_the_k() {
        for k in 1..6u32 {
            let p = PolyPresentation {
                name: format!("Q[x]/x^{k}"),
                variables: vec![("x".into(), 1)],
                relations: vec![MPoly::from_terms(1, &[(1, &[k])])],
                fano_index: 1,
                dim_x: 0,
                anticanonical: MPoly::zero(1),
            };
            let a = from_presentation(&p).unwrap();
            assert_eq!(a.dim(), k as usize);
        }
    }

    #[test]
    fn not_zero_dimensional_detected() {
        // (x*y) in Q[x,y] has infinitely many standard monomials
        let p = PolyPresentation {
            name: "xy".into(),
            variables: vec![("x".into(), 1), ("y".into(), 1)],
            relations: vec![MPoly::from_terms(2, &[(1, &[1, 1])])],
            fano_index: 1,
            dim_x: 0,
            anticanonical: MPoly::zero(2),
        };
        assert!(matches!(from_presentation(&p), Err(Error::NotZeroDimensional(_))));
    }

    #[test]
    fn unit_ideal_gives_zero_algebra() {
        let p = PolyPresentation {
            name: "unit".into(),
            variables: vec![("x".into(), 1)],
            relations: vec![
                MPoly::from_terms(1, &[(1, &[1]), (1, &[0])]),
                MPoly::from_terms(1, &[(1, &[1])]),
            ],
            fano_index: 1,
            dim_x: 0,
            anticanonical: MPoly::zero(1),
        };
        assert_eq!(from_presentation(&p).unwrap().dim(), 0);
    }

    #[test]
    fn reduced_basis_of_two_variable_ideal() {
        // (x^2 - y, y^2 - 1): basis 1, x, y, xy under grlex with x > y
        let order = WeightedGrlex::new(vec![1, 1]);
        let gens = vec![
            MPoly::from_terms(2, &[(1, &[2, 0]), (-1, &[0, 1])]),
            MPoly::from_terms(2, &[(1, &[0, 2]), (-1, &[0, 0])]),
        ];
        let gb = groebner_basis(&gens, &order).unwrap();
        let std = standard_monomials(&gb, &order, 2).unwrap();
        assert_eq!(std.len(), 4);
        // x^4 reduces to 1
        let x4 = MPoly::var(2, 0).pow(4);
        assert_eq!(normal_form(&x4, &gb, &order), MPoly::constant(2, int(1)));
    }
}
