mod common;

use std::collections::BTreeSet;

use common::{magnitude, scalar, signed_scalar};
use proptest::prelude::*;
use troplectra::{balances, Rational, SPolyQ, SRootKind, SScalarQ, Semiring, TPolyQ, TScalarQ};

type S = SScalarQ;

fn tscalar() -> impl Strategy<Value = TScalarQ> {
    prop_oneof![1 => Just(TScalarQ::Bottom), 5 => magnitude().prop_map(TScalarQ::Val)]
}

fn tpoly(max_deg: usize) -> impl Strategy<Value = TPolyQ> {
    proptest::collection::vec(tscalar(), 1..=max_deg + 1)
        .prop_map(TPolyQ::new)
        .prop_filter("non-zero", |p| !p.is_zero())
}

fn spoly(max_deg: usize) -> impl Strategy<Value = SPolyQ> {
    proptest::collection::vec(scalar(), 1..=max_deg + 1).prop_map(SPolyQ::new)
}

fn signed_spoly(max_deg: usize) -> impl Strategy<Value = SPolyQ> {
    proptest::collection::vec(signed_scalar(), 1..=max_deg + 1).prop_map(SPolyQ::new)
}

/// Signed roots with pairwise different moduli, sorted by decreasing modulus.
fn distinct_signed_roots(max_n: usize) -> impl Strategy<Value = Vec<S>> {
    proptest::collection::btree_set(-12i64..=12, 1..=max_n)
        .prop_flat_map(|set: BTreeSet<i64>| {
            let n = set.len();
            (Just(set), proptest::collection::vec(any::<bool>(), n))
        })
        .prop_map(|(set, signs)| {
            set.into_iter()
                .rev()
                .zip(signs)
                .map(|(m, neg)| {
                    let m = Rational::new(m, 2);
                    if neg { S::neg(m) } else { S::pos(m) }
                })
                .collect()
        })
}

fn sorted_desc(mut v: Vec<TScalarQ>) -> Vec<TScalarQ> {
    v.sort_by(|a, b| b.compare(a));
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tmax_roots_of_a_product_are_its_factors(cs in proptest::collection::vec(tscalar(), 1..6)) {
        let p = TPolyQ::from_roots(&cs);
        prop_assert!(p.is_factored());
        let roots = p.tmax_roots().unwrap();
        prop_assert_eq!(roots.expanded(), sorted_desc(cs));
    }

    #[test]
    fn tmax_root_multiplicities_sum_to_degree(p in tpoly(6)) {
        prop_assert_eq!(p.tmax_roots().unwrap().total(), p.degree());
    }

    #[test]
    fn tmax_polynomial_function_factors_through_its_roots(p in tpoly(6), x in magnitude()) {
        // Pointwise: P(x) = P_n ⊙ Π (x ⊕ r_i) as functions, factored or not.
        let x = TScalarQ::Val(x);
        let lead = p.coeff(p.degree());
        let product = p
            .tmax_roots()
            .unwrap()
            .expanded()
            .into_iter()
            .fold(lead, |acc, r| acc.mul(x.add(r)));
        prop_assert_eq!(p.eval(x), product);
    }

    #[test]
    fn smax_factorization_recovers_distinct_roots(lead in signed_scalar(), roots in distinct_signed_roots(5)) {
        prop_assume!(!lead.is_zero());
        let p = SPolyQ::from_roots(lead, &roots);
        prop_assert!(p.all_signed());
        let f = p.factor_smax().unwrap();
        prop_assert!(f.unique);
        prop_assert_eq!(f.roots.expanded(), roots.clone());
        for &r in &roots {
            prop_assert_ne!(p.verify_smax_root(r), SRootKind::NotRoot);
            prop_assert_eq!(p.multiplicity(r).unwrap(), 1);
        }
    }

    #[test]
    fn smax_root_moduli_are_tmax_roots(p in spoly(5)) {
        let Ok(f) = p.factor_smax() else { return Ok(()); };
        let moduli: Vec<TScalarQ> = f.roots.expanded().iter().map(S::modulus).collect();
        prop_assert_eq!(moduli, p.modulus().tmax_roots().unwrap().expanded());
        // The factored form agrees with P up to balance at every signed point.
        let lead = p.coeff(p.degree());
        let q = SPolyQ::from_roots(lead, &f.roots.expanded());
        prop_assert_eq!(q.modulus(), p.modulus());
        for x in [-3i64, -1, 0, 1, 2, 4] {
            for y in [S::p(x), S::n(x)] {
                prop_assert!(balances(p.eval(y), q.eval(y)), "at {}", y);
            }
        }
    }

    #[test]
    fn candidates_cover_every_signed_root(p in signed_spoly(4), m in magnitude()) {
        prop_assume!(!p.is_zero());
        let cands = p.smax_root_candidates().unwrap();
        for r in [S::pos(m), S::neg(m), S::Zero] {
            if p.verify_smax_root(r) != SRootKind::NotRoot && p.degree() > 0 {
                prop_assert!(cands.contains(&r), "{} missing from {:?}", r, cands);
            }
        }
    }

    #[test]
    fn token_and_pretty_round_trip(p in spoly(5)) {
        prop_assert_eq!(SPolyQ::parse(&p.to_string()).unwrap(), p.clone());
        prop_assert_eq!(SPolyQ::parse(&p.pretty(false)).unwrap(), p.clone());
        prop_assert_eq!(SPolyQ::parse(&p.pretty(true)).unwrap(), p);
    }
}

#[test]
fn pretty_form_parses() {
    let p = SPolyQ::parse("X^3 (-) 3 X^2 (+) 5 X (-) 6").unwrap();
    assert_eq!(p.to_string(), "n6 p5 n3 p0");
    let q = SPolyQ::parse("X^2 ⊖ 1 X ⊕ (-1)°").unwrap();
    assert_eq!(q.coeffs(), &[S::b(-1), S::n(1), S::one()]);
    assert!(SPolyQ::parse("X^2 3 4").is_err());
}
