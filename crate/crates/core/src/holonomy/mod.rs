//! The linking invariant: holonomy of the triangle cycle in the cyclic cover
//! `t^d = F(x, y, z)`, computed exactly and by numeric branch tracking.

mod exact;
mod numeric;

pub use exact::{lift_endpoint_check, linking_exact, ExactLink, LiftPoint};
pub use numeric::{linking_numeric, BranchTrack, NumericLink, PathOptions, Sample};

use serde::{Deserialize, Serialize};

use crate::curves::{CurveError, CurveSpec};
use crate::poly::{LineForm, Point, PolyError};

/// The loop `P1 → P2 → P3 → P1` running along `L1`, `L2`, `L3`, with
/// `P1 = L3 ∩ L1` the base point, `P2 = L1 ∩ L2` and `P3 = L2 ∩ L3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCycle {
    pub lines: [LineForm; 3],
    pub vertices: [Point; 3],
}

impl TriangleCycle {
    pub fn from_lines(lines: [LineForm; 3]) -> Result<Self, HolonomyError> {
        let p1 = lines[2].intersection(&lines[0])?;
        let p2 = lines[0].intersection(&lines[1])?;
        let p3 = lines[1].intersection(&lines[2])?;
        if lines[2].contains(&p2) {
            return Err(CurveError::NotTriangular.into());
        }
        Ok(TriangleCycle { lines, vertices: [p1, p2, p3] })
    }

    pub fn from_curve(c: &CurveSpec) -> Result<Self, HolonomyError> {
        let lines: [LineForm; 3] = c
            .lines
            .clone()
            .try_into()
            .map_err(|_| CurveError::InvalidSpec("a triangle needs three lines".into()))?;
        Self::from_lines(lines)
    }

    /// Segment `i` runs on `lines[i]` from `vertices[i]` to `vertices[(i+1) % 3]`.
    pub fn segment(&self, i: usize) -> (&LineForm, &Point, &Point) {
        (&self.lines[i], &self.vertices[i], &self.vertices[(i + 1) % 3])
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HolonomyError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("branch choice is ambiguous on segment {segment} near s = {s}")]
    BranchAmbiguity { segment: usize, s: f64 },
    #[error("path on segment {segment} passes within the clearance of the curve")]
    PathThroughCurve { segment: usize },
    #[error("holonomy {0} is not a d-th root of unity")]
    NotRootOfUnity(String),
    #[error("residual {residual:e} exceeds tolerance on segment {segment}")]
    Residual { segment: usize, residual: f64 },
}

impl From<PolyError> for HolonomyError {
    fn from(e: PolyError) -> Self {
        HolonomyError::Curve(e.into())
    }
}
