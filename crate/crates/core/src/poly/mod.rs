//! Homogeneous trivariate polynomials, binary forms, lines and Newton polygons.

mod binary;
pub mod linalg;
mod line;
mod mpoly;
mod newton;
mod univariate;

pub use binary::{coprime_forms, dth_power_test, BinaryForm, BinaryLinear};
pub use line::{LineForm, Point};
pub use linalg::Matrix3;
pub use mpoly::{vars, Exp, MPoly};
pub use newton::{convex_hull, edge_polynomial, newton_polygon, Chart, Lattice, NewtonPolygon};
pub use univariate::{interpolate, UniPoly};

use crate::cyclotomic::CycloError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("{from:?}-{to:?} is not an edge of the Newton polygon")]
    NotAnEdge { from: Lattice, to: Lattice },
    #[error("expected a form of degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("exponent {exp:?} does not have total degree {degree}")]
    NotHomogeneous { degree: u32, exp: Exp },
    #[error("form is identically zero")]
    ZeroForm,
    #[error("line has all coefficients zero")]
    ZeroLine,
    #[error("the two lines coincide")]
    SameLine,
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}
