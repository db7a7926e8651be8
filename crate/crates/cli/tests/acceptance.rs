//! End-to-end acceptance suite. Runs without the libtest harness so that the
//! one-line verdict per criterion is always printed.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qspectra::registry::registry;
use qspectra::selftest::{random_irreducible, random_matrix, serre_duality_holds};
use qspectra_core::algebra::{
    from_presentation, grassmannian_presentation, jacobi_ring, qh_ig2, qh_projective, validate_algebra, DynkinType,
    FiniteCommAlgebra,
};
use qspectra_core::bwb::{bott, check_collection, check_collection_any, GLWeight};
use qspectra_core::exactlin::{int, RatMatrix, RatPoly, Rational};
use qspectra_core::lefschetz::{builtin_by_id, conjecture_numerology, LefschetzCollection};
use qspectra_core::schur::{box_partitions, qh_grassmannian, quantum_product_signed};
use qspectra_core::spectrum::{
    compare_with_jacobi, kappa_split, local_invariants, nilradical, quantum_spectrum_report,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

fn projective() -> Outcome {
    for n in 1..=10 {
        let a = qh_projective(n).map_err(e)?;
        let r = quantum_spectrum_report(&a).map_err(e)?;
        let nil = nilradical(&a).map_err(e)?;
        ensure(
            r.dim_total == n + 1
                && nil.is_empty()
                && r.dim_zero_part == 0
                && r.nonzero_semisimple
                && r.nonzero_point_count == n + 1
                && r.orbit_count_by_length.value == Some(1)
                && r.orbit_count_by_points.value == Some(1)
                && r.charpoly_rotation_invariant,
            || format!("P{n}: {r:?}"),
        )?;
    }
    Ok(())
}

fn isotropic() -> Outcome {
    for n in 2..=5usize {
        let a = qh_ig2(n).map_err(e)?;
        let r = quantum_spectrum_report(&a).map_err(e)?;
        let z = &r.zero_part;
        let len = (n - 1) * (2 * n - 1);
        ensure(
            r.dim_total == 2 * n * (n - 1)
                && r.fano_index == 2 * n - 1
                && r.dim_nonzero_part == len
                && r.nonzero_point_count == len
                && r.nonzero_semisimple
                && r.orbit_count_by_length.value == Some(n - 1)
                && r.orbit_count_by_points.value == Some(n - 1)
                && r.dim_zero_part == n - 1
                && z.is_single_point
                && z.hilbert_function == vec![1; n - 1]
                && z.socle_dim == 1,
            || format!("IG(2,{}): {r:?}", 2 * n),
        )?;
        let zero = kappa_split(&a).map_err(e)?.zero;
        let cmp = compare_with_jacobi(&zero, DynkinType::A(n - 1)).map_err(e)?;
        ensure(cmp.full_match, || format!("IG(2,{}) vs A{}: {cmp:?}", 2 * n, n - 1))?;
    }
    Ok(())
}

fn numerology() -> Outcome {
    let mut pairs: Vec<(FiniteCommAlgebra, String)> = Vec::new();
    for n in 1..=10 {
        pairs.push((qh_projective(n).map_err(e)?, format!("beilinson({n})")));
    }
    pairs.push((qh_grassmannian(2, 4).map_err(e)?, "minimal_g24".into()));
    for n in 3..=5 {
        pairs.push((qh_ig2(n).map_err(e)?, format!("kuznetsov_ig2({n})")));
    }
    for (a, id) in pairs {
        let r = quantum_spectrum_report(&a).map_err(e)?;
        let c = builtin_by_id(&id).map_err(e)?;
        let v = conjecture_numerology(&r, &c).map_err(e)?;
        let sigma_last = c.support[c.fano_index - 1];
        ensure(
            v.passed() && Some(sigma_last) == r.orbit_count_by_points.value && v.residual_expected == r.dim_zero_part,
            || format!("{id} on {}: {v:?}", a.name()),
        )?;
    }
    Ok(())
}

fn anticanonical_charpoly(a: &FiniteCommAlgebra) -> Result<RatPoly, String> {
    a.mult_matrix(a.anticanonical()).and_then(|m| m.charpoly()).map_err(e)
}

fn cross_validation() -> Outcome {
    let rim = anticanonical_charpoly(&qh_grassmannian(2, 4).map_err(e)?)?;
    let pres = from_presentation(&grassmannian_presentation(2, 4).map_err(e)?).map_err(e)?;
    let other = anticanonical_charpoly(&pres)?;
    ensure(rim.coeffs() == other.coeffs(), || format!("{rim} vs {other}"))?;
    let (val, cofactor) = rim.split_at_zero().map_err(e)?;
    ensure(val == 2, || format!("valuation {val}"))?;
    ensure(cofactor.degree() == Some(4), || format!("cofactor {cofactor}"))?;
    ensure(cofactor.support().all(|d| d % 4 == 0), || {
        format!("cofactor {cofactor}")
    })?;
    let expected = RatPoly::from_i64(&[0, 0, -1024, 0, 0, 0, 1]);
    ensure(rim == expected, || format!("{rim} differs from x^6 - 1024 x^2"))
}

fn grassmannian_25() -> Outcome {
    let a = qh_grassmannian(2, 5).map_err(e)?;
    let r = quantum_spectrum_report(&a).map_err(e)?;
    ensure(
        r.dim_total == 10
            && r.dim_zero_part == 0
            && r.nonzero_semisimple
            && nilradical(&a).map_err(e)?.is_empty()
            && r.orbit_count_by_length.value == Some(2)
            && r.orbit_count_by_points.value == Some(2),
        || format!("G(2,5): {r:?}"),
    )?;
    let c = LefschetzCollection::new("G(2,5)", 5, vec!["O".into(), "U*".into()], vec![2; 5]).map_err(e)?;
    ensure(c.is_rectangular(), || "2 x 5 collection not rectangular".into())?;
    let v = conjecture_numerology(&r, &c).map_err(e)?;
    ensure(v.passed(), || format!("{v:?}"))?;
    let b = check_collection(&c).map_err(e)?;
    ensure(b.passed(), || format!("{:?}", b.failures))
}

/// Euler characteristic of the weight `w` from the Weyl numerator alone:
/// `prod_{i<j} (w_i - w_j + j - i) / (j - i)`, with no sorting.
fn euler_oracle(w: &[i64]) -> i64 {
    let mut acc = Rational::from_integer(1.into());
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            let d = (j - i) as i64;
            acc *= Rational::new((w[i] - w[j] + d).into(), d.into());
        }
    }
    assert!(acc.is_integer());
    i64::try_from(acc.to_integer()).expect("fits")
}

fn borel_weil_bott() -> Outcome {
    let mut ids: Vec<String> = (1..=6).map(|n| format!("beilinson({n})")).collect();
    ids.extend(["kapranov_g24".into(), "minimal_g24".into()]);
    for id in &ids {
        let r = check_collection_any(&builtin_by_id(id).map_err(e)?).map_err(e)?;
        ensure(r.passed() && r.inconclusive.is_empty(), || {
            format!("{id}: {:?}", r.failures)
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (k, n) in [(2usize, 4usize), (2, 5), (3, 6)] {
        for _ in 0..10_000 {
            let w: Vec<i64> = (0..n).map(|_| rng.gen_range(-6..=6)).collect();
            let t = bott(&GLWeight(w.clone()), k, n).map_err(e)?;
            ensure(t.0.len() <= 1 && t.0.values().all(|&d| d > 0), || format!("{w:?}: {t}"))?;
            let chi = euler_oracle(&w);
            ensure(t.euler_characteristic() == chi, || format!("{w:?}: {t} vs chi {chi}"))?;
            ensure(t.is_zero() == (chi == 0), || format!("{w:?}: {t}"))?;
        }
    }
    let shapes = [(2usize, 4usize), (2, 5), (3, 6)];
    for i in 0..1000 {
        let (k, n) = shapes[i % shapes.len()];
        let a = random_irreducible(&mut rng, k, n, 2);
        let b = random_irreducible(&mut rng, k, n, 2);
        ensure(serre_duality_holds(&a, &b)?, || {
            format!("Serre duality fails for {a} and {b}")
        })?;
    }
    Ok(())
}

fn properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for trial in 0..200 {
        let dim = 1 + trial % 8;
        let m: RatMatrix = random_matrix(&mut rng, dim);
        let p = m.charpoly().map_err(e)?;
        ensure(
            p.degree() == Some(dim) && p.eval_matrix(&m).map_err(e)?.is_zero(),
            || format!("{m:?}"),
        )?;
    }
    for (k, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let basis = box_partitions(k, n).map_err(e)?;
        for x in &basis {
            for y in &basis {
                let prod = quantum_product_signed(x, y).map_err(e)?;
                ensure(prod.values().all(|&c| c > 0), || {
                    format!("G({k},{n}): {} * {} = {prod:?}", x.partition(), y.partition())
                })?;
            }
        }
    }
    for d in registry() {
        let a = d.build().map_err(e)?;
        let v = validate_algebra(&a);
        ensure(v.is_valid(), || format!("{}: {:?}", d.id, v.violations))?;
        let s = kappa_split(&a).map_err(e)?;
        ensure(a.mul(&s.idempotent, &s.idempotent) == s.idempotent, || {
            format!("{}: e0^2 != e0", d.id)
        })?;
    }
    Ok(())
}

fn element(a: &FiniteCommAlgebra, label: &str) -> Option<Vec<Rational>> {
    a.basis_labels()
        .iter()
        .position(|l| l == label)
        .map(|i| a.basis_vector(i))
}

fn rank_of(vectors: &[Vec<Rational>]) -> usize {
    RatMatrix::from_rows(vectors.to_vec()).map_or(0, |m| m.rank())
}

/// `Q[x,y]/(x^r, y)`: monomial basis `1, x, ..., x^{r-1}`.
fn hand_basis_a(a: &FiniteCommAlgebra, r: usize) -> Outcome {
    let one = a.unit().to_vec();
    if r == 1 {
        return ensure(a.dim() == 1, || "A1 is not a point".into());
    }
    let x = element(a, "x").ok_or("A_r: x is not a standard monomial")?;
    ensure(element(a, "y").is_none(), || "A_r: y survives".into())?;
    let powers: Vec<Vec<Rational>> = (0..r).map(|i| a.pow(&x, i)).collect();
    ensure(powers[0] == one && rank_of(&powers) == r, || {
        format!("A{r}: powers of x dependent")
    })?;
    ensure(a.pow(&x, r).iter().all(Zero::is_zero), || format!("A{r}: x^{r} != 0"))
}

/// `Q[x,y]/(3x^2 + y^2, xy)`: monomial basis `1, x, y, x^2`.
fn hand_basis_d4(a: &FiniteCommAlgebra) -> Outcome {
    let x = element(a, "x").ok_or("D4: no x")?;
    let y = element(a, "y").ok_or("D4: no y")?;
    let x2 = a.mul(&x, &x);
    let y2 = a.mul(&y, &y);
    let basis = vec![a.unit().to_vec(), x.clone(), y.clone(), x2.clone()];
    ensure(rank_of(&basis) == 4 && a.dim() == 4, || {
        "D4: hand basis is not a basis".into()
    })?;
    let rel: Vec<Rational> = x2.iter().zip(&y2).map(|(p, q)| int(3) * p + q).collect();
    ensure(rel.iter().all(Zero::is_zero), || "D4: 3x^2 + y^2 != 0".into())?;
    ensure(a.mul(&x, &y).iter().all(Zero::is_zero), || "D4: xy != 0".into())
}

fn jacobi() -> Outcome {
    let mut types: Vec<DynkinType> = (1..=8).map(DynkinType::A).collect();
    types.extend((4..=8).map(DynkinType::D));
    types.extend([DynkinType::E6, DynkinType::E7, DynkinType::E8]);
    for t in types {
        let a = jacobi_ring(t).map_err(e)?;
        ensure(a.dim() == t.rank(), || format!("{t}: dim {} != {}", a.dim(), t.rank()))?;
        let l = local_invariants(&a).map_err(e)?;
        ensure(l.is_single_point && l.socle_dim == 1, || format!("{t}: {l:?}"))?;
        match t {
            DynkinType::A(r) => hand_basis_a(&a, r)?,
            DynkinType::D(4) => hand_basis_d4(&a)?,
            _ => {}
        }
    }
    Ok(())
}

struct Criterion {
    title: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            title: "projective spaces P1..P10",
            budget: secs(1),
            run: projective,
        },
        Criterion {
            title: "isotropic Grassmannians IG(2,2n), n = 2..5",
            budget: secs(30),
            run: isotropic,
        },
        Criterion {
            title: "Lefschetz numerology of the builtin collections",
            budget: None,
            run: numerology,
        },
        Criterion {
            title: "G(2,4) rim hook vs presentation",
            budget: None,
            run: cross_validation,
        },
        Criterion {
            title: "G(2,5) semisimple with a 2 x 5 rectangular collection",
            budget: secs(5),
            run: grassmannian_25,
        },
        Criterion {
            title: "Borel-Weil-Bott collections, Bott and Serre duality",
            budget: secs(60),
            run: borel_weil_bott,
        },
        Criterion {
            title: "property suites",
            budget: None,
            run: properties,
        },
        Criterion {
            title: "Jacobi rings of simple singularities",
            budget: None,
            run: jacobi,
        },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(b)) = (&result, c.budget) {
            if elapsed > b {
                result = Err(format!("took {elapsed:.2?}, budget {b:?}"));
            }
        }
        match result {
            Ok(()) => println!("criterion {}: PASS  {} ({elapsed:.2?})", i + 1, c.title),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {} ({elapsed:.2?}): {msg}", i + 1, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
