//! Computational knot theory around Tait's conjectures: exact Laurent
//! polynomials, PD-code knot diagrams, the Kauffman bracket state sum and
//! Jones polynomial, Alexander polynomials, Reidemeister moves and flypes,
//! diagram adequacy, and a batch checker for knot tables.
//!
//! The polynomial machinery is generic over the coefficient ring
//! ([`Coefficient`]); the aliases below fix the usual choices.

pub mod adequacy;
pub mod bracket;
pub mod checker;
pub mod classical;
pub mod diagram;
pub mod generators;
pub mod graph;
pub mod laurent;
pub mod matrix;
pub mod moves;

pub use bracket::{bracket, jones, BracketConfig, BracketError, Engine, Smoothing, SmoothingState};
pub use classical::{alexander, determinant, jones_chirality_obstruction, Chirality};
pub use diagram::{Diagram, DiagramError, EdgeLabel, Face, FaceEdge, Sign, Slot};
pub use laurent::{Coefficient, LaurentPoly, PolyError};

pub use num_bigint::BigInt;

/// Exact integer Laurent polynomial; the value type of every invariant.
pub type Poly = LaurentPoly<BigInt>;
/// Machine-integer polynomial for small diagrams and cross-checks.
pub type Poly64 = LaurentPoly<i64>;
/// Exact rationals, the codomain of polynomial evaluation.
pub type Rational = num_rational::Ratio<BigInt>;
