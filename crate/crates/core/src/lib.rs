//! Linear algebra over the symmetrized max-plus semiring.
//!
//! Scalars, matrices and polynomials are generic over a [`ValueGroup`]; the
//! exact instantiation uses [`Rational`] magnitudes and the numerical lab uses
//! `f64`. The aliases below name the common concrete types.

pub mod error;
pub mod io;
pub mod lab;
pub mod matrix;
pub mod poly;
pub mod semiring;
pub mod spectral;
pub mod value;

pub use error::{Error, Result};
pub use matrix::{Matrix, SMatrix, SVector, TMatrix};
pub use poly::{Poly, RootList, SPoly, SRootKind, TPoly};
pub use semiring::{balances, leq_signed, lt_signed, preceq, preceq_circ, SScalar, Semiring, Sign, TScalar};
pub use spectral::{EigClass, PDClass, PDVerdict, SpectralReport, StrongExists};
pub use value::{Rational, ValueGroup};

pub type SScalarQ = SScalar<Rational>;
pub type TScalarQ = TScalar<Rational>;
pub type SMatrixQ = SMatrix<Rational>;
pub type TMatrixQ = TMatrix<Rational>;
pub type SVectorQ = SVector<Rational>;
pub type SPolyQ = SPoly<Rational>;
pub type TPolyQ = TPoly<Rational>;

pub type SScalarF = SScalar<f64>;
pub type SMatrixF = SMatrix<f64>;
pub type SVectorF = SVector<f64>;
