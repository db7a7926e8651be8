//! Quantum Chevalley formula on `G/P` for a maximal parabolic `P` in types
//! A and C, specialized at `q = 1`.
//!
//! For `u` in the minimal coset representatives `W^P` and the divisor class
//! `sigma_p`,
//!
//! ```text
//! sigma_p * sigma_u = sum <w_p, a^v> sigma_{u s_a}        (l(u s_a) = l(u) + 1)
//!                   + sum <w_p, a^v> sigma_{[u s_a]}      (l([u s_a]) = l(u) + 1 - <2rho - 2rho_P, a^v>)
//! ```
//!
//! with both sums over positive roots `a` outside the Levi. Weyl group
//! elements are signed permutations of the ambient lattice, so nothing here
//! depends on the Schubert calculus in [`crate::schur`] or on Gröbner bases.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::exactlin::{int, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalType {
    /// `A_r`, acting on `Z^{r+1}`.
    A,
    /// `C_r`, acting on `Z^r` with long roots `2 e_i`.
    C,
}

type Root = Vec<i64>;

/// `w(e_i) = sign[i] * e_{perm[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SignedPerm {
    perm: Vec<usize>,
    sign: Vec<i64>,
}

impl SignedPerm {
    fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            sign: vec![1; n],
        }
    }

    fn apply(&self, v: &[i64]) -> Root {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] += self.sign[i] * x;
        }
        out
    }

    /// `self` after `other`.
    fn compose(&self, other: &Self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut sign = vec![0; n];
        for i in 0..n {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            sign[i] = other.sign[i] * self.sign[j];
        }
        Self { perm, sign }
    }

    fn reflection(alpha: &[i64]) -> Self {
        let n = alpha.len();
        let mut perm = vec![0; n];
        let mut sign = vec![0; n];
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            let image = reflect(&e, alpha);
            let j = image.iter().position(|&x| x != 0).expect("nonzero image");
            perm[i] = j;
            sign[i] = image[j];
        }
        Self { perm, sign }
    }

    fn one_line(&self) -> String {
        let parts: Vec<String> = (0..self.perm.len())
            .map(|i| (self.sign[i] * (self.perm[i] as i64 + 1)).to_string())
            .collect();
        format!("[{}]", parts.join(","))
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `<v, a^v> = 2 (v, a) / (a, a)`; integral on the weight lattice.
fn pairing(v: &[i64], alpha: &[i64]) -> i64 {
    let num = 2 * dot(v, alpha);
    let den = dot(alpha, alpha);
    debug_assert_eq!(num % den, 0);
    num / den
}

fn reflect(v: &[i64], alpha: &[i64]) -> Root {
    let c = pairing(v, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - c * a).collect()
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0)
}

struct RootSystem {
    simple: Vec<Root>,
    positive: Vec<Root>,
}

impl RootSystem {
    fn new(ty: ClassicalType, rank: usize) -> Self {
        let dim = match ty {
            ClassicalType::A => rank + 1,
            ClassicalType::C => rank,
        };
        let e = |i: usize| {
            let mut v = vec![0; dim];
            v[i] = 1;
            v
        };
        let sum = |a: &Root, b: &Root, s: i64| -> Root { a.iter().zip(b).map(|(x, y)| x + s * y).collect() };
        let mut simple: Vec<Root> = (0..dim - 1).map(|i| sum(&e(i), &e(i + 1), -1)).collect();
        let mut positive = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                positive.push(sum(&e(i), &e(j), -1));
                if ty == ClassicalType::C {
                    positive.push(sum(&e(i), &e(j), 1));
                }
            }
            if ty == ClassicalType::C {
                positive.push(e(i).iter().map(|x| 2 * x).collect());
            }
        }
        if ty == ClassicalType::C {
            simple.truncate(rank - 1);
            simple.push(e(rank - 1).iter().map(|x| 2 * x).collect());
        }
        Self { simple, positive }
    }

    fn length(&self, w: &SignedPerm) -> usize {
        self.positive.iter().filter(|a| !is_positive(&w.apply(a))).count()
    }
}

/// Multiplication by the divisor class on `QH(G/P)` at `q = 1`.
#[derive(Clone, Debug)]
pub struct HyperplaneOperator {
    /// One-line notation of each minimal coset representative.
    pub labels: Vec<String>,
    pub lengths: Vec<usize>,
    /// Column `u` holds `sigma_p * sigma_u`.
    pub matrix: RatMatrix,
    /// For type A: the partition of each Schubert class in the
    /// `k x (n-k)` box, largest part first.
    pub partitions: Option<Vec<Vec<usize>>>,
}

/// Quantum multiplication by `sigma_{s_p}` on `G/P_p` where `P_p` is the
/// maximal parabolic omitting the simple root `p` (1-based).
pub fn hyperplane_operator(ty: ClassicalType, rank: usize, p: usize) -> Result<HyperplaneOperator> {
    let min_rank = if ty == ClassicalType::C { 2 } else { 1 };
    if rank < min_rank || p == 0 || p > rank {
        return Err(Error::InvalidParameters(format!(
            "no maximal parabolic {p} in rank {rank} type {ty:?}"
        )));
    }
    let rs = RootSystem::new(ty, rank);
    let dim = rs.simple[0].len();
    let p = p - 1;
    let omega: Root = (0..dim).map(|i| i64::from(i <= p)).collect();
    let levi_simple: Vec<usize> = (0..rank).filter(|&j| j != p).collect();
    let outside: Vec<&Root> = rs.positive.iter().filter(|a| pairing(&omega, a) != 0).collect();
    let mut c1 = vec![0; dim];
    for a in &outside {
        for (c, x) in c1.iter_mut().zip(a.iter()) {
            *c += x;
        }
    }
    let simple_refl: Vec<SignedPerm> = rs.simple.iter().map(|a| SignedPerm::reflection(a)).collect();
    let is_minimal = |w: &SignedPerm| levi_simple.iter().all(|&j| is_positive(&w.apply(&rs.simple[j])));
    let project = |w: &SignedPerm| {
        let mut w = w.clone();
        'outer: loop {
            for &j in &levi_simple {
                if !is_positive(&w.apply(&rs.simple[j])) {
                    w = w.compose(&simple_refl[j]);
                    continue 'outer;
                }
            }
            return w;
        }
    };

    // W^P by breadth-first search on left multiplication
    let start = SignedPerm::identity(dim);
    let mut elements = vec![start.clone()];
    let mut lengths = vec![0usize];
    let mut index: HashMap<SignedPerm, usize> = HashMap::from([(start, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in &simple_refl {
            let v = s.compose(&elements[i]);
            if index.contains_key(&v) || !is_minimal(&v) {
                continue;
            }
            let l = rs.length(&v);
            if l != lengths[i] + 1 {
                continue;
            }
            index.insert(v.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(v);
            lengths.push(l);
        }
    }

    let d = elements.len();
    let mut matrix = RatMatrix::zeros(d, d);
    for (col, u) in elements.iter().enumerate() {
        let lu = lengths[col] as i64;
        for alpha in &outside {
            let coef = pairing(&omega, alpha);
            let w = u.compose(&SignedPerm::reflection(alpha));
            let target = project(&w);
            let lt = rs.length(&target) as i64;
            let row = index[&target];
            if lt == lu + 1 && target == w {
                matrix[(row, col)] += int(coef);
            }
            if lt == lu + 1 - pairing(&c1, alpha) {
                matrix[(row, col)] += int(coef);
            }
        }
    }

    let partitions = (ty == ClassicalType::A).then(|| {
        elements
            .iter()
            .map(|u| {
                let k = p + 1;
                // u(i) for i < k, increasing; parts u(i) - i read backwards
                let mut parts: Vec<usize> = (0..k).map(|i| u.perm[i] - i).collect();
                parts.reverse();
                parts
            })
            .collect()
    });
    Ok(HyperplaneOperator {
        labels: elements.iter().map(SignedPerm::one_line).collect(),
        lengths,
        matrix,
        partitions,
    })
}

/// `sigma_1` on `QH(G(k,n))`.
pub fn grassmannian_hyperplane(k: usize, n: usize) -> Result<HyperplaneOperator> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!("G({k},{n}) needs 0 < k < n")));
    }
    hyperplane_operator(ClassicalType::A, n - 1, k)
}

/// The hyperplane class on `QH(IG(2,2n))`.
pub fn ig2_hyperplane(n: usize) -> Result<HyperplaneOperator> {
    if n < 2 {
        return Err(Error::InvalidParameters(format!("IG(2,{}) needs n >= 2", 2 * n)));
    }
    hyperplane_operator(ClassicalType::C, n, 2)
}
