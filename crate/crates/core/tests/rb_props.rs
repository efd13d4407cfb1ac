use std::sync::Arc;

use gps_rb::oracle::default_corpus;
use gps_rb::rb::{rb_defect, Decomposition, Projector};
use gps_rb::scalar::make_rational;
use gps_rb::{MonoidElem, OrderedMonoid, Ring, Series};
use proptest::prelude::*;

const VOCAB: [&str; 8] = [
    "negatives",
    "nonnegatives",
    "positives",
    "nonpositives",
    "evens",
    "odds",
    "below(3)",
    "notbelow(-2)",
];

fn z() -> Arc<OrderedMonoid> {
    Arc::new(OrderedMonoid::IntLine)
}

fn projector(name: &str) -> Projector {
    Projector::Decomp(Decomposition::parse(z(), name).unwrap())
}

fn int_series() -> impl Strategy<Value = Series> {
    prop::collection::vec((-10i64..=10, -9i64..=9, 1i64..=4), 0..8).prop_map(|terms| {
        Series::from_terms(
            z(),
            Ring::Rational,
            terms
                .into_iter()
                .map(|(e, n, d)| (MonoidElem::Int(e), make_rational(n, d).unwrap())),
        )
        .unwrap()
    })
}

fn indicator(m: &Arc<OrderedMonoid>, s: &MonoidElem) -> Series {
    Series::indicator(Arc::clone(m), Ring::Rational, s.clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn projector_is_linear_and_idempotent(
        which in 0usize..VOCAB.len(),
        f in int_series(),
        g in int_series(),
        c in (-5i64..=5, 1i64..=5),
    ) {
        for p in [projector(VOCAB[which]), projector(VOCAB[which]).complement()] {
            let c = make_rational(c.0, c.1).unwrap();
            let lhs = p.apply(&f.scale(&c).unwrap().add(&g).unwrap()).unwrap();
            let rhs = p.apply(&f).unwrap().scale(&c).unwrap().add(&p.apply(&g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
            let pf = p.apply(&f).unwrap();
            prop_assert_eq!(p.apply(&pf).unwrap(), pf);
        }
    }

    #[test]
    fn defect_reduces_to_indicator_pairs(
        which in 0usize..VOCAB.len(),
        f in int_series(),
        g in int_series(),
    ) {
        let p = projector(VOCAB[which]);
        let m = z();
        let mut expected = Series::zero(Arc::clone(&m), Ring::Rational);
        for (u, a) in f.terms() {
            for (v, b) in g.terms() {
                let d = rb_defect(&p, &indicator(&m, u), &indicator(&m, v)).unwrap();
                expected = expected.add(&d.scale(&a.try_mul(b).unwrap()).unwrap()).unwrap();
            }
        }
        prop_assert_eq!(rb_defect(&p, &f, &g).unwrap(), expected);
    }

    #[test]
    fn closed_decompositions_give_zero_defect(f in int_series(), g in int_series()) {
        // Both parts closed under addition.
        for name in ["negatives", "nonpositives", "positives", "nonnegatives"] {
            prop_assert!(rb_defect(&projector(name), &f, &g).unwrap().is_empty());
            prop_assert!(rb_defect(&projector(name).complement(), &f, &g).unwrap().is_empty());
        }
    }

    #[test]
    fn complement_has_the_same_defect(which in 0usize..VOCAB.len(), f in int_series(), g in int_series()) {
        let p = projector(VOCAB[which]);
        prop_assert_eq!(
            rb_defect(&p, &f, &g).unwrap(),
            rb_defect(&p.clone().complement(), &f, &g).unwrap()
        );
    }
}

/// For each non-closed part on a corpus monoid, the offending pair has
/// defect exactly 1 at `u + v`.
#[test]
fn converse_witness_has_unit_defect() {
    for (name, table) in default_corpus() {
        let m = Arc::new(OrderedMonoid::FiniteTable(table.clone()));
        let n = table.size();
        for mask in 0u64..(1 << n) {
            let d = Decomposition::from_bitmask(Arc::clone(&m), mask).unwrap();
            let p = Projector::Decomp(d.clone());
            for u in 0..n {
                for v in 0..n {
                    let (in_u, in_v, in_sum) = (
                        mask >> u & 1 == 1,
                        mask >> v & 1 == 1,
                        mask >> table.sum(u, v) & 1 == 1,
                    );
                    let (eu, ev) = (indicator(&m, &MonoidElem::Index(u)), indicator(&m, &MonoidElem::Index(v)));
                    let defect = rb_defect(&p, &eu, &ev).unwrap();
                    let at_sum = defect.coefficient(&MonoidElem::Index(table.sum(u, v)));
                    if in_u == in_v && in_u != in_sum {
                        assert!(at_sum.is_one(), "{name} mask {mask:#b} pair ({u},{v})");
                    } else {
                        assert!(defect.is_empty(), "{name} mask {mask:#b} pair ({u},{v})");
                    }
                }
            }
        }
    }
}
