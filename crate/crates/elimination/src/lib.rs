//! Exact elimination of the center-of-curvature system of an affine plane
//! curve. The result is the implicit equation of the evolute, together with
//! a log of every factor removed on the way.

pub mod bivariate;
pub mod error;
pub mod evolute;
pub mod linalg;
pub mod modular;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod sparse;

pub use error::EliminationError;
pub use evolute::{
    bivariate_text, center_of_curvature_system, eliminate, oracle_check, CurvatureSystem,
    Disposition, Elimination, EvoluteResult, FactorLog, Genericity, PlaneCurve, Verdict,
};
pub use parse::{clear_denominators, parse_curve};
pub use poly::{Poly, ZPoly, ZPoly2};
pub use sparse::Sparse;
