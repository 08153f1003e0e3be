//! Arithmetic of Newton polygons and polyhedra, Newton–Puiseux expansion,
//! and jacobian Newton polygons of plane curve singularities.

pub mod corpus;
pub mod curve;
pub mod error;
pub mod extnat;
pub mod field;
pub mod num;
pub mod par;
pub mod polygon;
pub mod polyhedra;
pub mod product;
pub mod puiseux;
pub mod render;
pub mod series;
pub mod text;
pub mod verify;
pub mod ypoly;

pub use error::{Error, Result};
pub use extnat::{ExtNat, Fin, Inf};
pub use num::Q;
pub use polygon::{ElementaryPolygon, NewtonPolygon};
