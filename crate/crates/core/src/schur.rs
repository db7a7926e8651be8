//! Partition combinatorics, Littlewood-Richardson coefficients and the
//! rim-hook description of the small quantum cohomology of `G(k, n)` at `q = 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteCommAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{int, Rational};

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Drops trailing zeros; rejects sequences that increase.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameters(format!(
                "{parts:?} has a zero part before a positive one"
            )));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        Self(
            (1..=width)
                .map(|c| self.0.iter().filter(|&&p| p >= c).count())
                .collect(),
        )
    }

    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A Schubert class of `G(k, n)`: a partition inside the `k x (n-k)` box.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxPartition {
    partition: Partition,
    k: usize,
    n: usize,
}

impl BoxPartition {
    pub fn new(partition: Partition, k: usize, n: usize) -> Result<Self> {
        check_grassmannian(k, n)?;
        if !partition.fits_box(k, n - k) {
            return Err(Error::InvalidParameters(format!(
                "{partition} does not fit in the {k}x{} box",
                n - k
            )));
        }
        Ok(Self { partition, k, n })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Complementary class: the top class appears in `self * dual` with
    /// coefficient one.
    pub fn dual(&self) -> Self {
        let w = self.n - self.k;
        let parts = (0..self.k).rev().map(|i| w - self.partition.part(i)).collect();
        Self {
            partition: Partition::new(parts).expect("complement of a box partition"),
            k: self.k,
            n: self.n,
        }
    }
}

fn check_grassmannian(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!("G({k},{n}) needs 0 < k < n")));
    }
    Ok(())
}

/// All partitions in the `k x (n-k)` box, by weight and then in decreasing
/// lexicographic order. The empty partition comes first.
pub fn box_partitions(k: usize, n: usize) -> Result<Vec<BoxPartition>> {
    check_grassmannian(k, n)?;
    let width = n - k;
    let mut out = Vec::new();
    fn rec(prefix: &mut Vec<usize>, rows_left: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            prefix.push(p);
            rec(prefix, rows_left - 1, p, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), k, width, &mut raw);
    raw.sort_by(|a, b| {
        let (wa, wb): (usize, usize) = (a.iter().sum(), b.iter().sum());
        wa.cmp(&wb).then_with(|| b.cmp(a))
    });
    for parts in raw {
        out.push(BoxPartition {
            partition: Partition(parts),
            k,
            n,
        });
    }
    Ok(out)
}

/// Littlewood-Richardson coefficients `c^nu_{lambda mu}`, by enumerating LR
/// skew tableaux of shape `nu / lambda` and content `mu`.
pub fn lr_coeffs(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    lr_coeffs_bounded(lambda, mu, usize::MAX)
}

/// Same as [`lr_coeffs`], keeping only `nu` with at most `max_rows` rows.
pub fn lr_coeffs_bounded(lambda: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    if lambda.len() > max_rows || mu.len() > max_rows {
        return out;
    }
    let rows = (lambda.len() + mu.len()).min(max_rows);
    let mut shape = lambda.0.clone();
    shape.resize(rows, 0);
    // counts[r][i]: number of letters i in row r
    let mut counts = vec![vec![0usize; mu.len()]; rows];
    place_letter(0, mu, &mut shape, &mut counts, &mut out);
    out
}

fn place_letter(
    letter: usize,
    mu: &Partition,
    shape: &mut Vec<usize>,
    counts: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if letter == mu.len() {
        let nu = Partition::new(shape.clone()).expect("strip additions keep shapes valid");
        *out.entry(nu).or_insert(0) += 1;
        return;
    }
    let before = shape.clone();
    add_strip(0, mu.0[letter], letter, mu, &before, shape, counts, out);
}

/// Adds a horizontal strip of `remaining` copies of `letter`, deciding row by
/// row how many go into `row`.
#[allow(clippy::too_many_arguments)]
fn add_strip(
    row: usize,
    remaining: usize,
    letter: usize,
    mu: &Partition,
    before: &[usize],
    shape: &mut Vec<usize>,
    counts: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if remaining == 0 {
        if lattice_ok(counts, letter) {
            place_letter(letter + 1, mu, shape, counts, out);
        }
        return;
    }
    if row == shape.len() {
        return;
    }
    let cap = if row == 0 {
        remaining
    } else {
        before[row - 1] - before[row]
    };
    for add in (0..=cap.min(remaining)).rev() {
        shape[row] = before[row] + add;
        counts[row][letter] = add;
        add_strip(row + 1, remaining - add, letter, mu, before, shape, counts, out);
    }
    shape[row] = before[row];
    counts[row][letter] = 0;
}

/// Lattice condition for the reverse reading word, restricted to the pair
/// (letter - 1, letter) that the newest strip can break.
fn lattice_ok(counts: &[Vec<usize>], letter: usize) -> bool {
    if letter == 0 {
        return true;
    }
    // Reading a row right to left sees every `letter` before any `letter - 1`.
    let (mut prev, mut cur) = (0usize, 0usize);
    for row in counts {
        cur += row[letter];
        if cur > prev {
            return false;
        }
        prev += row[letter - 1];
    }
    true
}

/// Outcome of reducing a partition modulo `n`-rim hooks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RimHookReduction {
    pub class: BoxPartition,
    pub sign: i8,
    /// Number of rim hooks removed (the power of `q`).
    pub degree: usize,
}

/// Removes `n`-rim hooks from `nu` (at most `k` rows) until it fits in the
/// `k x (n-k)` box. `None` when the class vanishes.
///
/// Works on beta numbers `nu_i + k - i`: removing a rim hook moves one bead
/// down by `n`, and the hook height is one more than the number of beads it
/// jumps over. Each hook contributes `(-1)^(k - height)`.
pub fn rim_hook_reduce(nu: &Partition, k: usize, n: usize) -> Result<Option<RimHookReduction>> {
    check_grassmannian(k, n)?;
    if nu.len() > k {
        return Err(Error::Precondition(format!("{nu} has more than {k} parts")));
    }
    let mut beta: Vec<usize> = (0..k).map(|i| nu.part(i) + k - 1 - i).collect();
    let mut residues: Vec<usize> = beta.iter().map(|b| b % n).collect();
    residues.sort_unstable();
    if residues.windows(2).any(|w| w[0] == w[1]) {
        return Ok(None);
    }
    beta.sort_unstable();
    let mut sign = 1i8;
    let mut degree = 0;
    for idx in 0..beta.len() {
        while beta[idx] >= n {
            let (from, to) = (beta[idx], beta[idx] - n);
            let jumped = beta.iter().filter(|&&b| b > to && b < from).count();
            let height = jumped + 1;
            if (k + height) % 2 == 1 {
                sign = -sign;
            }
            beta[idx] = to;
            degree += 1;
        }
    }
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let parts = beta.iter().enumerate().map(|(i, b)| b + i + 1 - k).collect();
    let partition = Partition::new(parts)?;
    Ok(Some(RimHookReduction {
        class: BoxPartition::new(partition, k, n)?,
        sign,
        degree,
    }))
}

/// Quantum product `sigma_lambda * sigma_mu` in `QH(G(k,n))` at `q = 1`, with
/// signed aggregate coefficients.
pub fn quantum_product_signed(lambda: &BoxPartition, mu: &BoxPartition) -> Result<BTreeMap<BoxPartition, i64>> {
    if (lambda.k, lambda.n) != (mu.k, mu.n) {
        return Err(Error::MismatchedGrassmannian(lambda.k, lambda.n, mu.k, mu.n));
    }
    let (k, n) = (lambda.k, lambda.n);
    let mut out: BTreeMap<BoxPartition, i64> = BTreeMap::new();
    for (nu, c) in lr_coeffs_bounded(&lambda.partition, &mu.partition, k) {
        if let Some(red) = rim_hook_reduce(&nu, k, n)? {
            *out.entry(red.class).or_insert(0) += i64::from(red.sign) * c as i64;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Quantum product with the nonnegativity of Gromov-Witten invariants
/// enforced; a negative aggregate is an internal inconsistency.
pub fn quantum_product(lambda: &BoxPartition, mu: &BoxPartition) -> Result<BTreeMap<BoxPartition, u64>> {
    quantum_product_signed(lambda, mu)?
        .into_iter()
        .map(|(cls, c)| {
            u64::try_from(c).map(|c| (cls.clone(), c)).map_err(|_| {
                Error::Precondition(format!(
                    "negative quantum structure constant {c} at {} in {} * {}",
                    cls.partition, lambda.partition, mu.partition
                ))
            })
        })
        .collect()
}

/// `QH(G(k,n))` at `q = 1` in the Schubert basis.
pub fn qh_grassmannian(k: usize, n: usize) -> Result<FiniteCommAlgebra> {
    let basis = box_partitions(k, n)?;
    let dim = basis.len();
    let index: BTreeMap<&BoxPartition, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut products = vec![vec![int(0); dim]; dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let prod = quantum_product(&basis[i], &basis[j])?;
            let mut v = vec![int(0); dim];
            for (cls, c) in prod {
                v[index[&cls]] = int(c as i64);
            }
            products[j * dim + i] = v.clone();
            products[i * dim + j] = v;
        }
    }
    let degrees = basis.iter().map(|b| b.partition.weight() % n).collect();
    let mut unit = vec![int(0); dim];
    unit[0] = int(1);
    let box_one = BoxPartition::new(Partition(vec![1]), k, n)?;
    let mut anticanonical = vec![int(0); dim];
    anticanonical[index[&box_one]] = int(n as i64);
    let labels = basis.iter().map(|b| format!("s{}", b.partition)).collect();
    FiniteCommAlgebra::new(
        format!("G({k},{n})"),
        labels,
        products,
        unit,
        degrees,
        n,
        anticanonical,
        k * (n - k),
    )
}

/// Coefficient of the class `nu` in `lambda * mu`, as a rational.
pub fn structure_constant(lambda: &BoxPartition, mu: &BoxPartition, nu: &BoxPartition) -> Result<Rational> {
    let prod = quantum_product_signed(lambda, mu)?;
    Ok(int(prod.get(nu).copied().unwrap_or(0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn bp(p: &[usize], k: usize, n: usize) -> BoxPartition {
        BoxPartition::new(part(p), k, n).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), part(&[2, 1]));
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }

    #[test]
    fn pieri_examples() {
        let c = lr_coeffs(&part(&[1]), &part(&[1]));
        assert_eq!(c, BTreeMap::from([(part(&[2]), 1), (part(&[1, 1]), 1)]));
        let c = lr_coeffs(&part(&[1]), &part(&[2, 1]));
        assert_eq!(
            c,
            BTreeMap::from([(part(&[3, 1]), 1), (part(&[2, 2]), 1), (part(&[2, 1, 1]), 1)])
        );
    }

    #[test]
    fn lr_two_one_squared() {
        let c = lr_coeffs(&part(&[2, 1]), &part(&[2, 1]));
        assert_eq!(c[&part(&[3, 2, 1])], 2);
        assert_eq!(c.values().sum::<u64>(), 8);
    }

    #[test]
    fn box_enumeration() {
        let b = box_partitions(2, 4).unwrap();
        let labels: Vec<String> = b.iter().map(|x| x.partition().to_string()).collect();
        assert_eq!(labels, ["()", "(1)", "(2)", "(1,1)", "(2,1)", "(2,2)"]);
        assert_eq!(box_partitions(3, 6).unwrap().len(), 20);
        assert!(box_partitions(0, 3).is_err());
    }

    #[test]
    fn rim_hook_examples() {
        let r = rim_hook_reduce(&part(&[1]), 2, 4).unwrap().unwrap();
        assert_eq!((r.class, r.sign, r.degree), (bp(&[1], 2, 4), 1, 0));
        let r = rim_hook_reduce(&part(&[3, 1]), 2, 4).unwrap().unwrap();
        assert_eq!((r.class.partition().clone(), r.degree), (Partition::empty(), 1));
        assert_eq!(r.sign, 1);
        assert!(matches!(
            rim_hook_reduce(&part(&[3, 3, 1]), 2, 4),
            Err(Error::Precondition(_))
        ));
        // (3,0) in G(2,4): beta = (4,0), residues collide
        assert_eq!(rim_hook_reduce(&part(&[3]), 2, 4).unwrap(), None);
    }

    #[test]
    fn quantum_product_examples() {
        let p = quantum_product(&bp(&[1], 2, 4), &bp(&[1], 2, 4)).unwrap();
        assert_eq!(p, BTreeMap::from([(bp(&[2], 2, 4), 1), (bp(&[1, 1], 2, 4), 1)]));
        let p = quantum_product(&bp(&[2, 1], 2, 4), &bp(&[1], 2, 4)).unwrap();
        assert_eq!(p, BTreeMap::from([(bp(&[2, 2], 2, 4), 1), (bp(&[], 2, 4), 1)]));
        // point class squared is q^2 times the unit
        let p = quantum_product(&bp(&[2, 2], 2, 4), &bp(&[2, 2], 2, 4)).unwrap();
        assert_eq!(p, BTreeMap::from([(bp(&[], 2, 4), 1)]));
    }

    #[test]
    fn mismatched_grassmannians_rejected() {
        assert!(matches!(
            quantum_product(&bp(&[1], 2, 4), &bp(&[1], 2, 5)),
            Err(Error::MismatchedGrassmannian(2, 4, 2, 5))
        ));
    }

    #[test]
    fn duality_pairing() {
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let top = bp(&vec![n - k; k], k, n);
            for b in box_partitions(k, n).unwrap() {
                let p = quantum_product(&b, &b.dual()).unwrap();
                assert_eq!(p.get(&top), Some(&1), "{} in G({k},{n})", b.partition());
            }
        }
    }
}
