mod common;

use common::signed_scalar;
use proptest::prelude::*;
use troplectra::lab::random_tpd;
use troplectra::spectral::{
    charpoly, charpoly_general, classify_eigenvector, eigvec_adjugate, eigvec_construct, eigvec_kleene, is_tpsd,
    pd_class, quadratic_form, smax_eigenvalues, sorted_diagonal, tmax_eigenvalues,
};
use troplectra::{balances, EigClass, Error, PDVerdict, Rational, SMatrixQ, SScalarQ, Semiring, TScalarQ};

type S = SScalarQ;

fn tpd(max_n: usize) -> impl Strategy<Value = SMatrixQ> {
    (1..=max_n, any::<u64>(), 1i64..=2)
        .prop_map(|(n, seed, margin)| random_tpd(n, seed, (-3, 3), Rational::from_integer(margin)).unwrap())
}

fn gammas(a: &SMatrixQ) -> Vec<S> {
    sorted_diagonal(a).into_iter().map(|(_, g)| g).collect()
}

fn simple(a: &SMatrixQ, k: usize) -> bool {
    let g = gammas(a);
    g.iter().filter(|&&h| h == g[k - 1]).count() == 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn generated_matrices_are_tpd(a in tpd(6), x in proptest::collection::vec(signed_scalar(), 6)) {
        let n = a.rows();
        prop_assert_eq!(pd_class(&a).unwrap().verdict, PDVerdict::Tpd);
        prop_assert!(is_tpsd(&a).unwrap());
        let x = &x[..n];
        prop_assume!(x.iter().any(|v| !v.is_zero()));
        // Oracle: Σ_{i,j} x_i a_ij x_j term by term.
        let mut q = S::Zero;
        for i in 0..n {
            for j in 0..n {
                q = q + x[i] * a[(i, j)] * x[j];
            }
        }
        prop_assert_eq!(quadratic_form(&a, x).unwrap(), q);
        prop_assert!(matches!(q, S::Val(troplectra::Sign::Pos, _)), "x^T A x = {}", q);
    }

    #[test]
    fn charpoly_routes_agree(a in tpd(5)) {
        let fast = charpoly(&a).unwrap();
        prop_assert_eq!(&fast, &charpoly_general(&a).unwrap());
        for g in gammas(&a) {
            prop_assert!(balances(fast.eval(g), S::Zero));
        }
        let eig = smax_eigenvalues(&a).unwrap();
        let moduli: Vec<TScalarQ> = eig.expanded().iter().map(S::modulus).collect();
        prop_assert_eq!(moduli, tmax_eigenvalues(&a.modulus()).unwrap().expanded());
    }

    #[test]
    fn top_eigenvalue_is_the_max_cycle_mean(a in tpd(6)) {
        prop_assert_eq!(a.modulus().max_cycle_mean().unwrap(), gammas(&a)[0].modulus());
    }

    #[test]
    fn adjugate_columns_are_eigenvectors(a in tpd(5), k in 1usize..=5) {
        let n = a.rows();
        let k = (k - 1) % n + 1;
        let g = gammas(&a);
        let v = eigvec_adjugate(&a, k).unwrap();
        let av = a.mul_vec(&v).unwrap();
        for i in 0..n {
            prop_assert!(balances(av[i], g[k - 1] * v[i]), "row {i}");
        }
        // The pivot coordinate has modulus γ_1 ⋯ γ_{k-1} γ_k^{n-k}.
        let idx = sorted_diagonal(&a)[k - 1].0;
        let expect = g.iter().enumerate().fold(TScalarQ::from_int(0), |acc, (j, &h)| {
            if j == k - 1 { acc } else { acc.mul(h.modulus().add(g[k - 1].modulus())) }
        });
        prop_assert_eq!(v[idx].modulus(), expect);
        if simple(&a, k) {
            prop_assert!(classify_eigenvector(&a, g[k - 1], &v).unwrap() >= EigClass::Weak);
        }
        if k == 1 && v.iter().all(S::is_signed) {
            prop_assert_eq!(classify_eigenvector(&a, g[0], &v).unwrap(), EigClass::Strong);
        }
    }

    #[test]
    fn star_formula_matches_adjugate(a in tpd(5), k in 1usize..=5) {
        let k = (k - 1) % a.rows() + 1;
        if simple(&a, k) {
            prop_assert_eq!(eigvec_kleene(&a, k).unwrap(), eigvec_adjugate(&a, k).unwrap());
        } else {
            prop_assert_eq!(eigvec_kleene(&a, k), Err(Error::NotSimple(k)));
        }
    }

    #[test]
    fn constructed_vectors_are_signed_eigenvectors(a in tpd(5), k in 1usize..=5) {
        let k = (k - 1) % a.rows() + 1;
        prop_assume!(simple(&a, k));
        let v = eigvec_adjugate(&a, k).unwrap();
        let w = eigvec_construct(&a, k).unwrap();
        prop_assert!(w.iter().all(S::is_signed));
        for (x, y) in w.iter().zip(&v) {
            prop_assert_eq!(x.modulus(), y.modulus());
            if y.is_signed() {
                prop_assert_eq!(x, y);
            }
        }
        prop_assert!(classify_eigenvector(&a, gammas(&a)[k - 1], &w).unwrap() >= EigClass::Eigen);
    }
}
