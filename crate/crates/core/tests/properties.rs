use proptest::prelude::*;

use qspectra_core::bwb::{bott, ext_table, BundleExpr, GLWeight};
use qspectra_core::exactlin::{int, RatMatrix, RatPoly};

fn matrix(max_dim: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max_dim)
        .prop_flat_map(|d| prop::collection::vec(-6i64..=6, d * d).prop_map(move |e| RatMatrix::from_i64(d, d, &e)))
}

fn poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-5i64..=5, 1..6).prop_map(|c| RatPoly::from_i64(&c))
}

fn sorted(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    })
}

fn bundle(k: usize, n: usize) -> impl Strategy<Value = BundleExpr> {
    (sorted(k), sorted(n - k)).prop_map(move |(l, m)| BundleExpr::irreducible(k, n, l, m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cayley_hamilton(m in matrix(6)) {
        let p = m.charpoly().unwrap();
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(m.rows()));
        prop_assert!(p.eval_matrix(&m).unwrap().is_zero());
    }

    #[test]
    fn charpoly_trace_and_transpose(m in matrix(6)) {
        let p = m.charpoly().unwrap();
        let d = m.rows();
        prop_assert_eq!(-p.coeff(d - 1), m.trace());
        prop_assert_eq!(p, m.transpose().charpoly().unwrap());
    }

    #[test]
    fn charpoly_similarity_invariant(m in matrix(5), shift in -3i64..=3) {
        let d = m.rows();
        let mut p = RatMatrix::identity(d);
        if d > 1 {
            p = p.add(&RatMatrix::from_i64(d, d, &(0..d * d).map(|i| if i == 1 { shift } else { 0 }).collect::<Vec<_>>())).unwrap();
        }
        let conj = p.mul(&m).unwrap().mul(&p.inverse().unwrap()).unwrap();
        prop_assert_eq!(m.charpoly().unwrap(), conj.charpoly().unwrap());
    }

    #[test]
    fn bezout_identity(a in poly(), b in poly()) {
        let (g, s, t) = a.ext_gcd(&b);
        prop_assert_eq!(&(&s * &a) + &(&t * &b), g.clone());
        if !g.is_zero() {
            prop_assert!(a.div_rem(&g).unwrap().1.is_zero());
            prop_assert!(b.div_rem(&g).unwrap().1.is_zero());
        }
    }

    #[test]
    fn bott_single_degree(w in prop::collection::vec(-5i64..=5, 5)) {
        let t = bott(&GLWeight(w), 2, 5).unwrap();
        prop_assert!(t.0.len() <= 1);
    }

    #[test]
    fn display_parse_round_trip(e in bundle(2, 5)) {
        let text = e.to_string();
        prop_assert_eq!(BundleExpr::parse(&text, 2, 5).unwrap(), e);
    }

    #[test]
    fn ext_dual_symmetry(e in bundle(2, 4), f in bundle(2, 4)) {
        prop_assert_eq!(ext_table(&e, &f).unwrap(), ext_table(&f.dual(), &e.dual()).unwrap());
    }

    #[test]
    fn euler_characteristic_additive(e in bundle(2, 5), e2 in bundle(2, 5), f in bundle(2, 5)) {
        let chi = |a: &BundleExpr| ext_table(a, &f).unwrap().euler_characteristic();
        prop_assert_eq!(chi(&e.direct_sum(&e2).unwrap()), chi(&e) + chi(&e2));
    }

    #[test]
    fn twist_invariance(e in bundle(3, 6), f in bundle(3, 6), t in -2i64..=2) {
        prop_assert_eq!(ext_table(&e, &f).unwrap(), ext_table(&e.twist(t), &f.twist(t)).unwrap());
    }
}

#[test]
fn scalar_matrix_charpoly() {
    let m = RatMatrix::identity(3).scale(&int(2));
    assert_eq!(m.charpoly().unwrap(), RatPoly::from_i64(&[-8, 12, -6, 1]));
}
