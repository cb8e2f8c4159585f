//! Exact computations on weighted projective spaces `P(a_0, …, a_n)`.

pub mod cli;
pub mod curves;
pub mod error;
pub mod exactmath;
pub mod geometry;
pub mod hilbert;
pub mod oracle;
pub mod parse;
pub mod truncation;
pub mod weights;
pub mod wpoly;

pub use error::{Error, Result};
pub use exactmath::{Field, Rational, Scalar, UPolynomial};
pub use weights::{is_well_formed, well_form, well_form_with, WellFormPolicy, WellFormTrace, Weight};
pub use wpoly::{Monomial, WPolynomial};
pub use curves::{branching_index, genus, PlaneCurve};
pub use geometry::WPoint;
pub use hilbert::{EllSequence, HilbertSeries};
