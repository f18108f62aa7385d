//! Lines `a·x + b·y + c·z = 0` in the projective plane.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomic::CycloNumber;

use super::linalg::cross3;
use super::PolyError;

pub type Point = [CycloNumber; 3];

/// A line, normalized so the first nonzero coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineForm {
    coeffs: [CycloNumber; 3],
}

impl LineForm {
    pub fn new(a: CycloNumber, b: CycloNumber, c: CycloNumber) -> Result<Self, PolyError> {
        let coeffs = [a, b, c];
        let lead = coeffs.iter().find(|c| !c.is_zero()).ok_or(PolyError::ZeroLine)?;
        let inv = lead.inv()?;
        Ok(LineForm { coeffs: coeffs.map(|c| &c * &inv) })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self, PolyError> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn coeffs(&self) -> &[CycloNumber; 3] {
        &self.coeffs
    }

    pub fn eval(&self, p: &Point) -> CycloNumber {
        (0..3).fold(CycloNumber::zero(), |acc, i| &acc + &(&self.coeffs[i] * &p[i]))
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    /// Index of the coordinate eliminated when parametrizing.
    pub fn pivot(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap()
    }

    /// Two points `P, Q` spanning the line: the points of the line over the
    /// two coordinate vertices other than the pivot, in coordinate order.
    /// The point `s·P + t·Q` has those two coordinates equal to `(s, t)`.
    pub fn parametrization(&self) -> (Point, Point) {
        let k = self.pivot();
        let free: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let make = |i: usize| {
            let mut p: Point = std::array::from_fn(|_| CycloNumber::zero());
            p[i] = CycloNumber::one();
            // pivot coefficient is 1
            p[k] = -&self.coeffs[i];
            p
        };
        (make(free[0]), make(free[1]))
    }

    /// Parameters `(s, t)` of a point on the line.
    pub fn params_of(&self, p: &Point) -> (CycloNumber, CycloNumber) {
        let k = self.pivot();
        let free: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        (p[free[0]].clone(), p[free[1]].clone())
    }

    pub fn point_at(&self, s: &CycloNumber, t: &CycloNumber) -> Point {
        let (p, q) = self.parametrization();
        std::array::from_fn(|i| &(&p[i] * s) + &(&q[i] * t))
    }

    /// The common point of two distinct lines.
    pub fn intersection(&self, other: &Self) -> Result<Point, PolyError> {
        let p = cross3(&self.coeffs, &other.coeffs);
        if p.iter().all(CycloNumber::is_zero) {
            return Err(PolyError::SameLine);
        }
        Ok(p)
    }

    pub fn galois(&self, k: i64) -> Result<Self, PolyError> {
        let [a, b, c] = &self.coeffs;
        Ok(LineForm::new(a.galois(k)?, b.galois(k)?, c.galois(k)?)?)
    }

    /// Least common conductor of the coefficients.
    pub fn conductor(&self) -> u32 {
        self.coeffs
            .iter()
            .fold(1, |acc, c| crate::cyclotomic::lcm(acc, c.conductor()))
    }
}

impl Serialize for LineForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b, c] = <[CycloNumber; 3]>::deserialize(d)?;
        LineForm::new(a, b, c).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_first_nonzero() {
        let l = LineForm::from_ints(0, 2, -4).unwrap();
        assert_eq!(l.coeffs()[1], CycloNumber::one());
        assert_eq!(l.coeffs()[2], CycloNumber::from_integer(-2));
        assert!(matches!(LineForm::from_ints(0, 0, 0), Err(PolyError::ZeroLine)));
    }

    #[test]
    fn parametrized_points_lie_on_line() {
        let z = CycloNumber::zeta(6);
        let l = LineForm::new(CycloNumber::one(), z.clone(), CycloNumber::from_integer(3)).unwrap();
        let (p, q) = l.parametrization();
        assert!(l.contains(&p) && l.contains(&q));
        let pt = l.point_at(&CycloNumber::from_integer(2), &z);
        assert_eq!(l.params_of(&pt), (CycloNumber::from_integer(2), z));
    }

    #[test]
    fn intersection_of_axes() {
        let x = LineForm::from_ints(1, 0, 0).unwrap();
        let y = LineForm::from_ints(0, 1, 0).unwrap();
        let p = x.intersection(&y).unwrap();
        assert!(p[0].is_zero() && p[1].is_zero() && !p[2].is_zero());
        assert!(matches!(x.intersection(&x), Err(PolyError::SameLine)));
    }
}
