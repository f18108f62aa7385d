//! Newton polygons of dehomogenizations and their edge polynomials.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNumber;

use super::binary::BinaryForm;
use super::mpoly::{Exp, MPoly};
use super::PolyError;

pub type Lattice = (i64, i64);

/// Affine chart, named by the variable set to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chart {
    X,
    Y,
    Z,
}

impl Chart {
    /// Exponent indices read as the two plane coordinates.
    fn axes(self) -> (usize, usize) {
        match self {
            Chart::Z => (0, 1),
            Chart::X => (1, 2),
            Chart::Y => (0, 2),
        }
    }

    pub fn project(self, e: &Exp) -> Lattice {
        let (a, b) = self.axes();
        (e[a] as i64, e[b] as i64)
    }

    fn lift(self, p: Lattice, degree: u32) -> Option<Exp> {
        let (a, b) = self.axes();
        let (i, j) = (u32::try_from(p.0).ok()?, u32::try_from(p.1).ok()?);
        let rest = degree.checked_sub(i + j)?;
        let mut e = [rest; 3];
        e[a] = i;
        e[b] = j;
        Some(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonPolygon {
    pub chart: Chart,
    pub support: Vec<Lattice>,
    /// Counterclockwise, starting from the lexicographically least vertex,
    /// with collinear points removed.
    pub hull: Vec<Lattice>,
    pub edges: Vec<(Lattice, Lattice)>,
}

impl NewtonPolygon {
    pub fn has_edge(&self, edge: (Lattice, Lattice)) -> bool {
        let rev = (edge.1, edge.0);
        self.edges.iter().any(|&e| e == edge || e == rev)
    }
}

fn cross(o: Lattice, a: Lattice, b: Lattice) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Monotone-chain convex hull, counterclockwise, collinear points dropped.
pub fn convex_hull(points: &[Lattice]) -> Vec<Lattice> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<Lattice> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Lattice> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

pub fn newton_polygon(f: &MPoly, chart: Chart) -> NewtonPolygon {
    let mut support: Vec<Lattice> = f.terms().map(|(e, _)| chart.project(e)).collect();
    support.sort();
    let hull = convex_hull(&support);
    let edges = match hull.len() {
        0 | 1 => vec![],
        2 => vec![(hull[0], hull[1])],
        n => (0..n).map(|i| (hull[i], hull[(i + 1) % n])).collect(),
    };
    NewtonPolygon { chart, support, hull, edges }
}

/// Terms of `f` on the edge `from → to`, as a binary form whose `m`-th
/// coefficient sits at the `m`-th lattice point counted from `from`.
pub fn edge_polynomial(
    f: &MPoly,
    chart: Chart,
    edge: (Lattice, Lattice),
) -> Result<BinaryForm, PolyError> {
    let poly = newton_polygon(f, chart);
    if !poly.has_edge(edge) {
        return Err(PolyError::NotAnEdge { from: edge.0, to: edge.1 });
    }
    let (from, to) = edge;
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    let g = dx.gcd(&dy);
    let step = (dx / g, dy / g);
    Ok(BinaryForm::new(
        (0..=g)
            .map(|m| {
                let p = (from.0 + m * step.0, from.1 + m * step.1);
                chart
                    .lift(p, f.degree())
                    .map(|e| f.coeff(&e))
                    .unwrap_or_else(CycloNumber::zero)
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::mpoly::vars::*;

    fn tricuspidal() -> MPoly {
        let (x, y, z) = (x(), y(), z());
        let sq = |p: &MPoly| p * p;
        &(&(&sq(&x) * &sq(&y)) + &(&sq(&y) * &sq(&z)))
            + &(&(&sq(&x) * &sq(&z)) + &(&(&n(2) * &(&(&x * &y) * &z)) * &(&(&x + &y) - &z)))
    }

    fn ints(cs: &[i64]) -> Vec<CycloNumber> {
        cs.iter().map(|&c| c.into()).collect()
    }

    #[test]
    fn tricuspidal_triangle() {
        let p = newton_polygon(&tricuspidal(), Chart::Z);
        assert_eq!(p.hull, vec![(0, 2), (2, 0), (2, 2)]);
        let diag = edge_polynomial(&tricuspidal(), Chart::Z, ((0, 2), (2, 0))).unwrap();
        assert_eq!(diag.coeffs(), &ints(&[1, -2, 1])[..]);
        let horiz = edge_polynomial(&tricuspidal(), Chart::Z, ((0, 2), (2, 2))).unwrap();
        assert_eq!(horiz.coeffs(), &ints(&[1, 2, 1])[..]);
        assert!(matches!(
            edge_polynomial(&tricuspidal(), Chart::Z, ((0, 2), (1, 1))),
            Err(PolyError::NotAnEdge { .. })
        ));
    }

    #[test]
    fn single_monomial_and_segment() {
        let p = newton_polygon(&(&x().pow(3) * &y().pow(3)), Chart::Z);
        assert_eq!(p.hull, vec![(3, 3)]);
        assert!(p.edges.is_empty());
        let f = (&x() + &z()).pow(4);
        let q = newton_polygon(&f, Chart::Z);
        assert_eq!(q.edges, vec![((0, 0), (4, 0))]);
        let e = edge_polynomial(&f, Chart::Z, ((0, 0), (4, 0))).unwrap();
        assert_eq!(e.coeffs(), &ints(&[1, 4, 6, 4, 1])[..]);
    }
}
