//! Exact computer algebra for plane holomorphic foliations and their dual webs.
//!
//! Coefficients live in `Q(i, sqrt3)`. A foliation of the projective plane is
//! given by a polynomial 1-form; its Legendre transform is an implicit web
//! whose flatness (for 3-webs) is decided by an explicit determinantal
//! formula for the Blaschke curvature.

pub mod catalog;
pub mod error;
pub mod exactfield;
pub mod foliation;
pub mod homogeneous;
pub mod limits;
pub mod multipoly;
pub mod parse;
pub mod web;

pub use error::{FieldError, FoliationError, HomError, ParseError, PolyError, WebError};
pub use exactfield::{FieldElem, Rational};
pub use foliation::{AffineOneForm, Foliation, Line, ProjPoint};
pub use homogeneous::{HomFoliation, HomType};
pub use multipoly::{MPoly, VarSet};
pub use web::{Chart, Curvature2Form, ImplicitWeb};
