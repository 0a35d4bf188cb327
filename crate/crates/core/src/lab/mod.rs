//! Classical side: signed valuations of real data, monomial matrix families,
//! a Jacobi eigensolver and comparison reports.

pub mod compare;
pub mod jacobi;
pub mod monomial;
pub mod random;

pub use compare::{
    compare_eigenvalues, compare_eigenvectors, gershgorin_pd_bound, gram_experiment, GershgorinReport,
    GramReport, ValuationReport,
};
pub use jacobi::{jacobi_eigen, jacobi_eigen_extended, RealSymMatrix, SymEigen};
pub use monomial::{lift_tpd, sv_t, tropicalize_real, Monomial, MonomialMatrix};
pub use random::{random_gram_pd, random_symmetric, random_tpd};
