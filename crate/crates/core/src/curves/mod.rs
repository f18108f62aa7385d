//! Curve families: Kummer constructions, membership verifiers with stratum
//! labels, the Cremona correspondence and Galois conjugation.

mod construct;
mod cremona;
mod hat;
mod sigma;
pub mod smooth;

pub use construct::{
    degeneration_member, fermat, kummer_construct, line_x_tau, line_y_tau, line_z_tau,
    proof_change, tricuspidal_quartic, Construction,
};
pub use cremona::{artal_shirane_type, cremona_map, galois_conjugate_curve, ArtalShiraneType};
pub use hat::{verify_hat, HatCertificate};
pub use sigma::{verify_sigma, SigmaCertificate};
pub use smooth::{check_smooth, SmoothMethod, SmoothnessReport};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycloError, RootOfUnity};
use crate::poly::{LineForm, MPoly, PolyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Degree `2d` curve with three `(d, d+1)` cusps.
    Sigma,
    /// A sigma curve together with the triangle through its cusps.
    Tilde,
    /// Smooth degree `d` curve with three lines, each meeting it at one point.
    Hat,
    /// Smooth degree `d` curve with three arbitrary lines.
    ArtalShirane,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sigma => "sigma",
            Family::Tilde => "tilde",
            Family::Hat => "hat",
            Family::ArtalShirane => "artal_shirane",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSpec {
    pub family: Family,
    pub d: u32,
    pub conductor: u32,
    pub main: MPoly,
    pub lines: Vec<LineForm>,
}

impl CurveSpec {
    /// Builds a spec whose conductor is the least one holding all coefficients.
    pub fn new(family: Family, d: u32, main: MPoly, lines: Vec<LineForm>) -> Result<Self, CurveError> {
        let conductor = lines
            .iter()
            .fold(main.conductor(), |acc, l| crate::cyclotomic::lcm(acc, l.conductor()));
        let spec = CurveSpec { family, d, conductor, main, lines };
        spec.validate()?;
        Ok(spec)
    }

    /// Checks the degree and line-count invariants of the family.
    pub fn validate(&self) -> Result<(), CurveError> {
        let (deg, nlines) = match self.family {
            Family::Sigma => (2 * self.d, 0),
            Family::Tilde => (2 * self.d, 3),
            Family::Hat | Family::ArtalShirane => (self.d, 3),
        };
        if self.d < 1 {
            return Err(CurveError::InvalidSpec("d must be positive".into()));
        }
        if self.main.degree() != deg || self.main.is_zero() {
            return Err(CurveError::InvalidSpec(format!(
                "{} curve with d = {} needs a nonzero main component of degree {deg}, got {}",
                self.family,
                self.d,
                self.main.degree()
            )));
        }
        if self.lines.len() != nlines {
            return Err(CurveError::InvalidSpec(format!(
                "{} curve needs {nlines} lines, got {}",
                self.family,
                self.lines.len()
            )));
        }
        let needed = self
            .lines
            .iter()
            .fold(self.main.conductor(), |acc, l| crate::cyclotomic::lcm(acc, l.conductor()));
        if self.conductor == 0 || self.conductor % needed != 0 {
            return Err(CurveError::InvalidSpec(format!(
                "coefficients need conductor dividing {}, found {needed}",
                self.conductor
            )));
        }
        Ok(())
    }

    /// Total degree of the curve including the lines.
    pub fn total_degree(&self) -> u32 {
        self.main.degree() + self.lines.len() as u32
    }
}

/// Stratum label in the upper half-plane, with realizability and genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumLabel {
    pub zeta: RootOfUnity,
    pub realizable: bool,
    pub genus: u32,
}

impl StratumLabel {
    /// `zeta` must already be a d-th root in the closed upper half-plane.
    pub fn new(zeta: RootOfUnity, d: u32) -> Self {
        StratumLabel {
            zeta,
            realizable: !(d == 2 && zeta == RootOfUnity::one()),
            genus: (d.saturating_sub(1) * d.saturating_sub(2)) / 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("invalid curve: {0}")]
    InvalidSpec(String),
    #[error("expected a {expected} curve, got {got}")]
    WrongFamily { expected: String, got: Family },
    #[error("precondition violated: {0}")]
    PrecondViolation(String),
    #[error("division is not exact")]
    DivisionNotExact,
    #[error("the three lines are concurrent or repeated")]
    NotTriangular,
    #[error("line {line} meets the curve in more than one point")]
    NotTangentAtOnePoint { line: usize },
    #[error("curve is singular")]
    NotSmooth,
    #[error("cannot normalize: {0}")]
    NotNormalizable(String),
    #[error("Newton polygon is not the triangle with vertices (0,d), (d,d), (d,0)")]
    WrongPolygon,
    #[error("the {edge} edge polynomial is not a d-th power")]
    EdgeNotPower { edge: String },
    #[error("local type at vertex {vertex} is not certified")]
    LocalTypeUnverified { vertex: usize },
    #[error("lines are not the coordinate triangle")]
    NotNormalized,
    #[error("unexpected multiplicities {got:?} at the vertices, expected {expected:?}")]
    UnexpectedMultiplicity { expected: [u32; 3], got: [u32; 3] },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}
