//! Exact constructions and invariants for equisingular curve families over
//! cyclotomic fields.
//!
//! The crate is split by concern:
//!
//! * [`cyclotomic`]: exact arithmetic in `Q(ζ_N)` and stratum labels.
//! * [`poly`]: homogeneous trivariate polynomials, binary forms, Newton polygons.
//! * [`curves`]: Kummer constructions, membership verifiers, Cremona map.
//! * [`holonomy`]: the linking invariant, exactly and by numeric branch tracking.
//! * [`groups`]: finitely presented groups (Smith form, coset enumeration,
//!   Reidemeister–Schreier, Tietze moves, bounded consequence search).

pub mod cyclotomic;
pub mod poly;
pub mod curves;
pub mod holonomy;
pub mod groups;

pub use cyclotomic::{CycloNumber, RootOfUnity};
