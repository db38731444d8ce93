use num_bigint::BigInt;
use proptest::prelude::*;

use pretzel_invariants::alexander::{alexander_polynomial, seifert_matrix, PretzelSpec};
use pretzel_invariants::bracket::jones_from_bracket;
use pretzel_invariants::diagram::{pretzel_diagram, torus2_diagram, TorusSpec};
use pretzel_invariants::ideals::{elementary_ideal_sequence, IdealGens};
use pretzel_invariants::jones_closed::{
    pretzel_jones, pretzel_jones_extended, pretzel_jones_skein_extended, torus_jones,
};
use pretzel_invariants::{EvalPoint, Sign};

fn odd() -> impl Strategy<Value = i64> {
    (-4i64..4).prop_map(|n| 2 * n + 1)
}

fn small_pretzel() -> impl Strategy<Value = PretzelSpec> {
    (odd(), odd(), odd())
        .prop_filter("fits a quick state sum", |(p, q, r)| p.abs() + q.abs() + r.abs() <= 13)
        .prop_map(|(p, q, r)| PretzelSpec::new(p, q, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn seifert_pairing_is_unimodular(p in odd(), q in odd(), r in odd()) {
        let v = seifert_matrix(&PretzelSpec::new(p, q, r).unwrap());
        prop_assert_eq!(v.skew_determinant(), 1);
    }

    #[test]
    fn alexander_is_symmetric_and_unit_at_one(p in odd(), q in odd(), r in odd()) {
        let delta = alexander_polynomial(&PretzelSpec::new(p, q, r).unwrap());
        prop_assert!(delta.equals_up_to_unit(&delta.mirror()).is_some());
        let at_one = delta.evaluate(&EvalPoint::One).unwrap();
        prop_assert!(at_one == BigInt::from(1) || at_one == BigInt::from(-1));
    }

    #[test]
    fn kinks_leave_jones_unchanged(spec in small_pretzel(), pick in 0usize..64, plus in any::<bool>()) {
        let d = pretzel_diagram(&spec);
        let arcs = d.arcs();
        let sign = if plus { Sign::Plus } else { Sign::Minus };
        let kinked = d.add_kink_on(arcs[pick % arcs.len()], sign).unwrap();
        kinked.check_arc_degrees().unwrap();
        prop_assert_eq!(jones_from_bracket(&kinked).unwrap(), jones_from_bracket(&d).unwrap());
    }

    #[test]
    fn bracket_jones_is_one_at_one_for_knots(spec in small_pretzel()) {
        let v = jones_from_bracket(&pretzel_diagram(&spec)).unwrap();
        prop_assert_eq!(v.evaluate(&EvalPoint::One).unwrap(), BigInt::from(1));
        prop_assert!(v.is_integral());
    }
}

#[test]
fn jones_at_one_counts_components() {
    for k in 1..=6 {
        let d = torus2_diagram(&TorusSpec::from_k(k).unwrap());
        let v = jones_from_bracket(&d).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(v.evaluate(&EvalPoint::One).unwrap(), BigInt::from(-2));
        assert!(!v.is_integral());
    }
}

#[test]
fn torus_links_are_distinguished_by_jones() {
    let values: Vec<_> = (1..=20).map(|k| torus_jones(k).unwrap().polynomial).collect();
    for (a, va) in values.iter().enumerate() {
        for vb in &values[a + 1..] {
            assert_ne!(va, vb);
        }
    }
}

/// The closed forms are stated from `i = s + 2` on. At `i = s + 1` the last
/// skein step passes through the Hopf link; the bracket says the formulas
/// still hold there.
#[test]
fn edge_index_agrees_with_bracket() {
    for s in 1..=3 {
        let i = s + 1;
        assert!(pretzel_jones(s, i).is_err());
        let spec = PretzelSpec::family(s, i).unwrap();
        let bracket = jones_from_bracket(&pretzel_diagram(&spec)).unwrap();
        assert_eq!(pretzel_jones_extended(s, i).unwrap().polynomial, bracket, "{spec}");
        assert_eq!(pretzel_jones_skein_extended(s, i).unwrap().polynomial, bracket, "{spec}");
    }
}

#[test]
fn ideal_chain_ends_in_unit_ideal() {
    for s in 1..=4 {
        for i in s + 1..=s + 8 {
            let seq = elementary_ideal_sequence(&PretzelSpec::family(s, i).unwrap()).unwrap();
            assert_eq!(seq.last(), Some(&IdealGens::unit()), "s={s} i={i}");
            assert_eq!(seq[0].generators().len(), 1);
        }
    }
}
