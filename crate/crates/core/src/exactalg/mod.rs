//! Exact arithmetic: rational scalars, the odd-times polynomial ring,
//! auxiliary univariate and multivariate polynomials, and Laurent series.

pub mod json;
pub mod multipoly;
pub mod ratfunc;
pub mod scalar;
pub mod series;
pub mod times;
pub mod unipoly;

pub use multipoly::MultiPoly;
pub use ratfunc::RatFunc;
pub use scalar::{Rational, Scalar};
pub use series::{specialize_principal, LaurentSeries};
pub use times::{time_slot, TimeMonomial, TimesPoly, WeightedDegree};
pub use unipoly::UniPoly;
