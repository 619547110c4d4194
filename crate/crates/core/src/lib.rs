//! Exact computation of the generalized Brezin–Gross–Witten tau-function.
//!
//! The tau-function is built order by order from the cut-and-join operator
//! and then checked against every independent characterization available:
//! Virasoro constraints, triangular Schur functions at half-integer `N`,
//! the asymptotic basis vectors and their Kac–Schwarz operators, the genus
//! expansion in moment variables, and the correlators obtained from the
//! loop equations on the spectral curve.
//!
//! All arithmetic is exact. Algorithms are generic over [`Scalar`]; the
//! aliases below fix the arbitrary-precision instantiation used everywhere
//! outside of cross-checks.

pub mod correlators;
pub mod cutjoin;
pub mod error;
pub mod exactalg;
pub mod freenergy;
pub mod reference;
pub mod satobasis;
pub mod schurkdv;
pub mod verify;
pub mod virasoro;

pub use error::{Error, Result};
pub use exactalg::{Rational, Scalar};

/// Polynomial in the odd times with coefficients in `Q[ν]`.
pub type TimesPolynomial = exactalg::TimesPoly<Rational>;
/// Polynomial in one variable over the rationals.
pub type RationalPoly = exactalg::UniPoly<Rational>;
/// Order-by-order tau-function expansion.
pub type TauSeries = cutjoin::TauSeries<Rational>;
/// Order-by-order free energy.
pub type FreeEnergySeries = freenergy::FreeEnergySeries<Rational>;
/// Laurent series in the spectral parameter.
pub type AsymptoticSeries = exactalg::LaurentSeries<Rational>;
/// A correlator `W_{g,n}` in the `u`-extension field.
pub type AlgebraicCorrelator = correlators::Correlator<Rational>;
