//! Cross-validation suite behind `qspectra selftest`.

use std::path::Path;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qspectra_core::algebra::{
    from_presentation, grassmannian_presentation, qh_ig2, qh_ig2_from_data, validate_algebra,
};
use qspectra_core::bwb::{check_collection_any, ext_table, BundleExpr};
use qspectra_core::chevalley::{grassmannian_hyperplane, ig2_hyperplane};
use qspectra_core::exactlin::RatMatrix;
use qspectra_core::lefschetz::{builtin_by_id, conjecture_numerology};
use qspectra_core::schur::{box_partitions, qh_grassmannian, quantum_product};
use qspectra_core::spectrum::{kappa_split, quantum_spectrum_report};

use crate::registry::{lookup, registry};

pub const MODULES: [&str; 7] = [
    "exactlin",
    "schur",
    "algebra",
    "spectrum",
    "lefschetz",
    "bwb",
    "chevalley",
];

type CheckResult = Result<(), String>;

pub struct SelfCheck {
    pub module: &'static str,
    pub name: &'static str,
    run: fn(&Path) -> CheckResult,
}

#[derive(Debug)]
pub struct Outcome {
    pub module: &'static str,
    pub name: &'static str,
    pub result: CheckResult,
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Square matrix with small random integer entries.
pub fn random_matrix(rng: &mut impl Rng, dim: usize) -> RatMatrix {
    let entries: Vec<i64> = (0..dim * dim).map(|_| rng.gen_range(-5..=5)).collect();
    RatMatrix::from_i64(dim, dim, &entries)
}

fn random_weight(rng: &mut impl Rng, len: usize, range: i64) -> Vec<i64> {
    let mut w: Vec<i64> = (0..len).map(|_| rng.gen_range(-range..=range)).collect();
    w.sort_unstable_by(|a, b| b.cmp(a));
    w
}

/// Random irreducible `S^lambda U* (x) S^mu Q*` on `G(k,n)`.
pub fn random_irreducible(rng: &mut impl Rng, k: usize, n: usize, range: i64) -> BundleExpr {
    let lambda = random_weight(rng, k, range);
    let mu = random_weight(rng, n - k, range);
    BundleExpr::irreducible(k, n, lambda, mu).expect("sorted weights fit")
}

/// `Ext^i(E,F) = Ext^{N-i}(F, E (x) O(-n))` on `G(k,n)`, `N = k(n-k)`.
pub fn serre_duality_holds(e: &BundleExpr, f: &BundleExpr) -> Result<bool, String> {
    let (k, n) = (e.k(), e.n());
    let top = k * (n - k);
    let lhs = ext_table(e, f).map_err(err)?;
    let rhs = ext_table(f, &e.twist(-(n as i64))).map_err(err)?;
    Ok((0..=top).all(|i| lhs.get(i) == rhs.get(top - i)))
}

fn cayley_hamilton(_: &Path) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for trial in 0..40 {
        let dim = 1 + trial % 8;
        let m = random_matrix(&mut rng, dim);
        let p = m.charpoly().map_err(err)?;
        ensure(p.eval_matrix(&m).map_err(err)?.is_zero(), || {
            format!("p(M) != 0 for {m:?}")
        })?;
    }
    Ok(())
}

fn nonnegativity(_: &Path) -> CheckResult {
    for (k, n) in [(2, 4), (2, 5), (2, 6), (3, 6)] {
        let basis = box_partitions(k, n).map_err(err)?;
        for a in &basis {
            for b in &basis {
                quantum_product(a, b).map_err(err)?;
            }
        }
    }
    Ok(())
}

fn providers_valid(_: &Path) -> CheckResult {
    for d in registry() {
        let a = d.build().map_err(err)?;
        let r = validate_algebra(&a);
        ensure(r.is_valid(), || format!("{}: {:?}", d.id, r.violations))?;
        ensure(a.fano_index() == d.fano_index && a.dim_x() == d.dim_x, || {
            format!("{}: registry index or dimension disagrees with the provider", d.id)
        })?;
    }
    Ok(())
}

fn data_files(dir: &Path) -> CheckResult {
    for n in 2..=5 {
        let loaded = qh_ig2_from_data(n, dir).map_err(err)?;
        let r = validate_algebra(&loaded);
        if let Some(v) = r.violations.first() {
            return Err(format!(
                "IG(2,{}) data in {}: validate_algebra failed ({} violations, first: {v})",
                2 * n,
                dir.display(),
                r.violations.len()
            ));
        }
        ensure(loaded == qh_ig2(n).map_err(err)?, || {
            format!("IG(2,{}) data differs from the presentation", 2 * n)
        })?;
    }
    Ok(())
}

fn presentation_vs_rim_hook(_: &Path) -> CheckResult {
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let a = qh_grassmannian(k, n).map_err(err)?;
        let b = from_presentation(&grassmannian_presentation(k, n).map_err(err)?).map_err(err)?;
        let pa = a
            .mult_matrix(a.anticanonical())
            .and_then(|m| m.charpoly())
            .map_err(err)?;
        let pb = b
            .mult_matrix(b.anticanonical())
            .and_then(|m| m.charpoly())
            .map_err(err)?;
        ensure(pa == pb, || format!("G({k},{n}): {pa} vs {pb}"))?;
    }
    Ok(())
}

fn chevalley_grassmannian(_: &Path) -> CheckResult {
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let a = qh_grassmannian(k, n).map_err(err)?;
        let s1 = a.basis_labels().iter().position(|l| l == "s(1)").ok_or("no s(1)")?;
        let ours = a
            .mult_matrix(&a.basis_vector(s1))
            .and_then(|m| m.charpoly())
            .map_err(err)?;
        let theirs = grassmannian_hyperplane(k, n)
            .and_then(|o| o.matrix.charpoly())
            .map_err(err)?;
        ensure(ours == theirs, || format!("G({k},{n}): {ours} vs {theirs}"))?;
    }
    Ok(())
}

fn chevalley_isotropic(_: &Path) -> CheckResult {
    for n in 2..=4 {
        let a = qh_ig2(n).map_err(err)?;
        let e1 = a.basis_labels().iter().position(|l| l == "e1").ok_or("no e1")?;
        let ours = a
            .mult_matrix(&a.basis_vector(e1))
            .and_then(|m| m.charpoly())
            .map_err(err)?;
        let theirs = ig2_hyperplane(n).and_then(|o| o.matrix.charpoly()).map_err(err)?;
        ensure(ours == theirs, || format!("IG(2,{}): {ours} vs {theirs}", 2 * n))?;
    }
    Ok(())
}

fn rotation_and_idempotents(_: &Path) -> CheckResult {
    for d in registry() {
        let a = d.build().map_err(err)?;
        let s = kappa_split(&a).map_err(err)?;
        ensure(a.mul(&s.idempotent, &s.idempotent) == s.idempotent, || {
            format!("{}: e0^2 != e0", d.id)
        })?;
        ensure(s.zero.dim() + s.nonzero.dim() == a.dim(), || {
            format!("{}: dimensions", d.id)
        })?;
        if d.is_jacobi() {
            continue;
        }
        let r = quantum_spectrum_report(&a).map_err(err)?;
        ensure(r.charpoly_rotation_invariant, || format!("{}: rotation", d.id))?;
        ensure(r.consistency_violations().is_empty(), || {
            format!("{}: {:?}", d.id, r.consistency_violations())
        })?;
    }
    Ok(())
}

fn isotropic_spectra(_: &Path) -> CheckResult {
    for n in 2..=5 {
        let r = quantum_spectrum_report(&qh_ig2(n).map_err(err)?).map_err(err)?;
        let z = &r.zero_part;
        ensure(
            r.orbit_count_by_points.value == Some(n - 1)
                && r.orbit_count_by_length.value == Some(n - 1)
                && z.hilbert_function == vec![1; n - 1]
                && z.socle_dim == 1,
            || format!("IG(2,{}): {r:?}", 2 * n),
        )?;
    }
    Ok(())
}

const NUMEROLOGY_PAIRS: [(&str, &str); 6] = [
    ("P3", "beilinson(3)"),
    ("P10", "beilinson(10)"),
    ("G(2,4)", "minimal_g24"),
    ("IG(2,6)", "kuznetsov_ig2(3)"),
    ("IG(2,8)", "kuznetsov_ig2(4)"),
    ("IG(2,10)", "kuznetsov_ig2(5)"),
];

fn numerology(_: &Path) -> CheckResult {
    for (variety, coll) in NUMEROLOGY_PAIRS {
        let a = lookup(variety).ok_or("unregistered")?.build().map_err(err)?;
        let r = quantum_spectrum_report(&a).map_err(err)?;
        let c = builtin_by_id(coll).map_err(err)?;
        let v = conjecture_numerology(&r, &c).map_err(err)?;
        ensure(v.passed(), || format!("{coll} on {variety}: {:?}", v.checks))?;
    }
    Ok(())
}

fn collections(_: &Path) -> CheckResult {
    let ids = [
        "beilinson(2)",
        "beilinson(4)",
        "kapranov_g24",
        "minimal_g24",
        "kuznetsov_ig2(3)",
    ];
    for id in ids {
        let r = check_collection_any(&builtin_by_id(id).map_err(err)?).map_err(err)?;
        ensure(r.passed(), || format!("{id}: {:?} {:?}", r.failures, r.inconclusive))?;
    }
    Ok(())
}

fn serre(_: &Path) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        for _ in 0..60 {
            let e = random_irreducible(&mut rng, k, n, 3);
            let f = random_irreducible(&mut rng, k, n, 3);
            ensure(serre_duality_holds(&e, &f)?, || {
                format!("Serre duality fails for {e} and {f}")
            })?;
        }
    }
    Ok(())
}

fn endomorphisms(_: &Path) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..50 {
        let e = random_irreducible(&mut rng, 2, 5, 3);
        let h = qspectra_core::bwb::hom_bundle(&e, &e).map_err(err)?;
        let trivial = h
            .terms()
            .filter(|(t, _)| t.lambda.iter().chain(&t.mu).all(|&x| x == 0))
            .map(|(_, m)| m)
            .sum::<u64>();
        ensure(trivial == 1, || format!("End({e}) has {trivial} trivial summands"))?;
    }
    Ok(())
}

pub fn all_checks() -> Vec<SelfCheck> {
    let c = |module, name, run| SelfCheck { module, name, run };
    vec![
        c(
            "exactlin",
            "cayley_hamilton",
            cayley_hamilton as fn(&Path) -> CheckResult,
        ),
        c("schur", "quantum_product_nonnegative", nonnegativity),
        c("algebra", "registry_providers_valid", providers_valid),
        c("algebra", "ig_data_files", data_files),
        c("algebra", "presentation_vs_rim_hook", presentation_vs_rim_hook),
        c("chevalley", "grassmannian_sigma1", chevalley_grassmannian),
        c("chevalley", "isotropic_hyperplane", chevalley_isotropic),
        c("spectrum", "rotation_and_idempotents", rotation_and_idempotents),
        c("spectrum", "isotropic_spectra", isotropic_spectra),
        c("lefschetz", "builtin_numerology", numerology),
        c("bwb", "builtin_collections", collections),
        c("bwb", "serre_duality", serre),
        c("bwb", "endomorphism_trivial_summand", endomorphisms),
    ]
}

pub fn run(filter: Option<&str>, data_dir: &Path) -> Vec<Outcome> {
    all_checks()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.module == f))
        .map(|c| Outcome {
            module: c.module,
            name: c.name,
            result: (c.run)(data_dir),
        })
        .collect()
}
