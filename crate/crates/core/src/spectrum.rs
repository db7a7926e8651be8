//! Quantum spectrum of a finite commutative algebra: the split along the
//! fiber of `kappa` (multiplication by the anticanonical class) over zero,
//! point counts, orbit counts for the `mu_m` rotation and local invariants of
//! the fiber over zero.
//!
//! Geometric data is read off from `Q`-linear algebra only. In characteristic
//! zero a reduced finite algebra is étale, so `dim(A / nil)` counts complex
//! points without computing any eigenvalue.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{jacobi_ring, DynkinType, FiniteCommAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{independent_subset, RatMatrix, RatPoly, Rational, SubspaceCoordinates};

/// Describes how `kappa` is normalized in every report.
pub const KAPPA_NORMALIZATION: &str =
    "kappa acts by multiplication with the anticanonical class; orbit and fiber data are invariant under rescaling";

/// The decomposition `A = e0 A x (1 - e0) A`.
#[derive(Clone, Debug)]
pub struct KappaSplit {
    pub zero: FiniteCommAlgebra,
    pub nonzero: FiniteCommAlgebra,
    /// `e0` in the coordinates of the original algebra.
    pub idempotent: Vec<Rational>,
    pub kappa_minpoly: RatPoly,
}

/// The ideal `eA` of an idempotent `e`, as an algebra with unit `e`. Basis
/// elements are `e * b_i` for a maximal independent subset of the `b_i`.
pub fn corner_algebra(a: &FiniteCommAlgebra, e: &[Rational], name: String, tag: &str) -> Result<FiniteCommAlgebra> {
    let d = a.dim();
    let le = a.mult_matrix(e)?;
    let images: Vec<Vec<Rational>> = (0..d).map(|i| le.column(i)).collect();
    let picked = independent_subset(&images, d);
    if picked.is_empty() {
        return Ok(FiniteCommAlgebra::zero(name, a.fano_index(), a.dim_x()));
    }
    let basis: Vec<Vec<Rational>> = picked.iter().map(|&i| images[i].clone()).collect();
    let coords = SubspaceCoordinates::new(&basis, d)
        .ok_or_else(|| Error::Precondition("corner basis not independent".into()))?;
    let project = |v: &[Rational]| {
        coords
            .coordinates(v)
            .ok_or_else(|| Error::Precondition("vector outside the ideal; e is not idempotent".into()))
    };
    let s = basis.len();
    let mut products = vec![Vec::new(); s * s];
    for x in 0..s {
        let lx = a.mult_matrix(&basis[x])?;
        for y in x..s {
            let c = project(&lx.mul_vec(&basis[y])?)?;
            products[y * s + x] = c.clone();
            products[x * s + y] = c;
        }
    }
    let unit = project(e)?;
    let anticanonical = project(&a.mul(e, a.anticanonical()))?;
    let labels = picked
        .iter()
        .map(|&i| format!("{tag}*{}", a.basis_labels()[i]))
        .collect();
    let degrees = picked.iter().map(|&i| a.degrees()[i]).collect();
    FiniteCommAlgebra::new(
        name,
        labels,
        products,
        unit,
        degrees,
        a.fano_index(),
        anticanonical,
        a.dim_x(),
    )
}

/// Splits `A` into the parts where `kappa` is nilpotent and invertible.
pub fn kappa_split(a: &FiniteCommAlgebra) -> Result<KappaSplit> {
    let kappa = a.anticanonical();
    let p = a.minimal_polynomial(kappa)?;
    let (b, g) = p.split_at_zero()?;
    let e0 = if b == 0 {
        vec![Rational::zero(); a.dim()]
    } else if g.degree() == Some(0) {
        a.unit().to_vec()
    } else {
        let (_, v) = RatPoly::bezout_coprime(&RatPoly::monomial(Rational::one(), b), &g)?;
        a.eval_poly(&(&v * &g), kappa)
    };
    if a.mul(&e0, &e0) != e0 {
        return Err(Error::Precondition("kappa idempotent is not idempotent".into()));
    }
    if !e0.iter().all(Zero::is_zero) && a.homogeneous_degree(&e0) != Some(0) {
        return Err(Error::Precondition("kappa idempotent is not of degree zero".into()));
    }
    let complement: Vec<Rational> = a.unit().iter().zip(&e0).map(|(u, e)| u - e).collect();
    Ok(KappaSplit {
        zero: corner_algebra(a, &e0, format!("{} (kappa = 0)", a.name()), "e0")?,
        nonzero: corner_algebra(a, &complement, format!("{} (kappa != 0)", a.name()), "e1")?,
        idempotent: e0,
        kappa_minpoly: p,
    })
}

/// Trace form `T_ij = trace(L_{b_i b_j})`.
pub fn trace_form(a: &FiniteCommAlgebra) -> RatMatrix {
    let d = a.dim();
    let traces: Vec<Rational> = (0..d)
        .map(|k| (0..d).map(|l| a.structure_constant(k, l, l).clone()).sum())
        .collect();
    let mut t = RatMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            t[(i, j)] = a
                .basis_product(i, j)
                .iter()
                .zip(&traces)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, tr)| c * tr)
                .sum();
        }
    }
    t
}

/// Basis of the nilradical, the kernel of the trace form. Each returned
/// vector is checked to be nilpotent.
pub fn nilradical(a: &FiniteCommAlgebra) -> Result<Vec<Vec<Rational>>> {
    let kernel = trace_form(a).kernel_basis();
    for v in &kernel {
        if !a.pow(v, a.dim()).iter().all(Zero::is_zero) {
            return Err(Error::Precondition(
                "trace form kernel contains a non-nilpotent element".into(),
            ));
        }
    }
    Ok(kernel)
}

/// Number of geometric points of `Spec A`.
pub fn point_count(a: &FiniteCommAlgebra) -> Result<usize> {
    Ok(a.dim() - nilradical(a)?.len())
}

/// A count divided by the Fano index, with an integrality verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitCount {
    pub numerator: usize,
    pub denominator: usize,
    pub integral: bool,
    pub value: Option<usize>,
}

impl OrbitCount {
    fn new(numerator: usize, denominator: usize) -> Self {
        let integral = numerator.is_multiple_of(denominator);
        Self {
            numerator,
            denominator,
            integral,
            value: integral.then_some(numerator / denominator),
        }
    }
}

/// Coefficients of a polynomial, lowest degree first, plus a readable form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolySummary {
    pub display: String,
    pub coefficients: Vec<String>,
}

impl From<&RatPoly> for PolySummary {
    fn from(p: &RatPoly) -> Self {
        Self {
            display: p.to_string(),
            coefficients: p.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitAnalysis {
    pub k_len: OrbitCount,
    pub k_pts: OrbitCount,
    pub rotation_ok: bool,
    pub kappa_charpoly: PolySummary,
}

/// Nonzero coefficients only in degrees congruent to the degree mod `m`.
pub fn rotation_invariant(g: &RatPoly, m: usize) -> bool {
    let deg = g.degree().unwrap_or(0);
    g.support().all(|i| (deg - i).is_multiple_of(m))
}

pub fn orbit_analysis(nonzero: &FiniteCommAlgebra, m: i64) -> Result<OrbitAnalysis> {
    if m <= 0 {
        return Err(Error::InvalidParameters(format!(
            "orbit size must be positive, got {m}"
        )));
    }
    let m = m as usize;
    let g = nonzero.mult_matrix(nonzero.anticanonical())?.charpoly()?;
    Ok(OrbitAnalysis {
        k_len: OrbitCount::new(nonzero.dim(), m),
        k_pts: OrbitCount::new(point_count(nonzero)?, m),
        rotation_ok: rotation_invariant(&g, m),
        kappa_charpoly: PolySummary::from(&g),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalInvariants {
    pub dim: usize,
    pub geometric_points: usize,
    pub is_single_point: bool,
    pub hilbert_function: Vec<usize>,
    pub socle_dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Dimensions of `N^0 = A, N, N^2, ...` down to zero.
fn power_dims(a: &FiniteCommAlgebra, nil: &[Vec<Rational>]) -> Vec<usize> {
    let d = a.dim();
    let mut dims = vec![d];
    let mut current = nil.to_vec();
    while !current.is_empty() {
        dims.push(current.len());
        let products: Vec<Vec<Rational>> = current
            .iter()
            .flat_map(|x| nil.iter().map(move |y| (x, y)))
            .map(|(x, y)| a.mul(x, y))
            .collect();
        current = independent_subset(&products, d)
            .into_iter()
            .map(|i| products[i].clone())
            .collect();
    }
    dims.push(0);
    dims
}

pub fn local_invariants(a: &FiniteCommAlgebra) -> Result<LocalInvariants> {
    let d = a.dim();
    if d == 0 {
        return Ok(LocalInvariants {
            dim: 0,
            geometric_points: 0,
            is_single_point: false,
            hilbert_function: Vec::new(),
            socle_dim: 0,
            note: None,
        });
    }
    let nil = nilradical(a)?;
    let points = d - nil.len();
    let dims = power_dims(a, &nil);
    let hilbert_function = dims.windows(2).map(|w| w[0] - w[1]).take_while(|&h| h > 0).collect();
    let socle_dim = if nil.is_empty() {
        d
    } else {
        let mut rows = Vec::with_capacity(nil.len() * d);
        for n in &nil {
            let ln = a.mult_matrix(n)?;
            rows.extend((0..d).map(|r| ln.row(r).to_vec()));
        }
        RatMatrix::from_rows(rows)?.kernel_basis().len()
    };
    Ok(LocalInvariants {
        dim: d,
        geometric_points: points,
        is_single_point: points == 1,
        hilbert_function,
        socle_dim,
        note: (points > 1).then(|| "multiple or irrational points".to_string()),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantMatch {
    pub invariant: String,
    pub ours: String,
    pub theirs: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiComparison {
    pub target: String,
    pub invariants: Vec<InvariantMatch>,
    pub full_match: bool,
}

/// Invariant-level comparison of a local algebra with the Milnor algebra of
/// a simple singularity. Not an isomorphism test.
pub fn compare_with_jacobi(a: &FiniteCommAlgebra, t: DynkinType) -> Result<JacobiComparison> {
    let ours = local_invariants(a)?;
    let theirs = local_invariants(&jacobi_ring(t)?)?;
    let entry = |name: &str, x: String, y: String| InvariantMatch {
        invariant: name.to_string(),
        matches: x == y,
        ours: x,
        theirs: y,
    };
    let invariants = vec![
        entry("dim", ours.dim.to_string(), theirs.dim.to_string()),
        entry(
            "geometric_points",
            ours.geometric_points.to_string(),
            theirs.geometric_points.to_string(),
        ),
        entry(
            "hilbert_function",
            format!("{:?}", ours.hilbert_function),
            format!("{:?}", theirs.hilbert_function),
        ),
        entry("socle_dim", ours.socle_dim.to_string(), theirs.socle_dim.to_string()),
    ];
    Ok(JacobiComparison {
        target: t.to_string(),
        full_match: invariants.iter().all(|m| m.matches),
        invariants,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumReport {
    pub algebra: String,
    pub kappa_normalization: String,
    pub fano_index: usize,
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    pub dim_total: usize,
    pub kappa_charpoly: PolySummary,
    pub dim_zero_part: usize,
    pub dim_nonzero_part: usize,
    pub nonzero_semisimple: bool,
    pub nonzero_point_count: usize,
    pub orbit_count_by_length: OrbitCount,
    pub orbit_count_by_points: OrbitCount,
    pub charpoly_rotation_invariant: bool,
    pub nonzero_charpoly: PolySummary,
    pub zero_part: LocalInvariants,
}

impl SpectrumReport {
    /// Internal consistency of the totals; empty when everything adds up.
    pub fn consistency_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.dim_zero_part + self.dim_nonzero_part != self.dim_total {
            out.push(format!(
                "fiber dimensions {} + {} do not add up to {}",
                self.dim_zero_part, self.dim_nonzero_part, self.dim_total
            ));
        }
        let h: usize = self.zero_part.hilbert_function.iter().sum();
        if h != self.dim_zero_part || self.zero_part.dim != self.dim_zero_part {
            out.push(format!(
                "hilbert function sums to {h}, zero part has dimension {}",
                self.dim_zero_part
            ));
        }
        let valuation = self
            .kappa_charpoly
            .coefficients
            .iter()
            .take_while(|c| c.as_str() == "0")
            .count();
        if valuation != self.dim_zero_part {
            out.push(format!(
                "charpoly vanishes to order {valuation} at 0, zero part has dimension {}",
                self.dim_zero_part
            ));
        }
        if self.nonzero_semisimple != (self.nonzero_point_count == self.dim_nonzero_part) {
            out.push("semisimplicity flag disagrees with the point count".into());
        }
        out
    }
}

pub fn quantum_spectrum_report(a: &FiniteCommAlgebra) -> Result<SpectrumReport> {
    let split = kappa_split(a)?;
    let kappa_charpoly = a.mult_matrix(a.anticanonical())?.charpoly()?;
    let orbits = orbit_analysis(&split.nonzero, a.fano_index() as i64)?;
    let zero_part = local_invariants(&split.zero)?;
    let nonzero_point_count = orbits.k_pts.numerator;
    Ok(SpectrumReport {
        algebra: a.name().to_string(),
        kappa_normalization: KAPPA_NORMALIZATION.to_string(),
        fano_index: a.fano_index(),
        dim_x: a.dim_x(),
        dim_total: a.dim(),
        kappa_charpoly: PolySummary::from(&kappa_charpoly),
        dim_zero_part: split.zero.dim(),
        dim_nonzero_part: split.nonzero.dim(),
        nonzero_semisimple: nonzero_point_count == split.nonzero.dim(),
        nonzero_point_count,
        orbit_count_by_length: orbits.k_len,
        orbit_count_by_points: orbits.k_pts,
        charpoly_rotation_invariant: orbits.rotation_ok,
        nonzero_charpoly: orbits.kappa_charpoly,
        zero_part,
    })
}
