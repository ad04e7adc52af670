//! Exact computation of Gaussian binomial coefficients `[n+k choose k]_q`,
//! the quasipolynomial regions of their coefficient sequences, and the
//! piecewise-polynomial limit shapes their normalized bar graphs approach as
//! `n` grows with `k` fixed.

pub mod error;
pub mod exactnum;
pub mod measure;
pub mod qcore;
pub mod quasi;
pub mod shape;

pub use error::{Error, Result};
pub use exactnum::{BigInt, Polynomial, RatPoly, Rational};
pub use measure::{convergence_table, ks_distance, measure_from_polynomial, ConvergenceRow, EmpiricalMeasure};
pub use qcore::{q_binomial, BinomialForm, QBinomialQuery};
pub use quasi::{region_decomposition, Quasipolynomial, RegionDecomposition};
pub use shape::{limit_shape, PiecewisePolynomial};
