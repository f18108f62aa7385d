//! Sparse homogeneous polynomials in `x, y, z`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomic::CycloNumber;

use super::binary::BinaryForm;
use super::line::{LineForm, Point};
use super::linalg::{det3, Matrix3};
use super::PolyError;

pub type Exp = [u32; 3];

/// Homogeneous polynomial; every stored exponent sums to `degree` and every
/// stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly {
    degree: u32,
    terms: BTreeMap<Exp, CycloNumber>,
}

impl MPoly {
    pub fn zero(degree: u32) -> Self {
        MPoly { degree, terms: BTreeMap::new() }
    }

    pub fn constant(c: CycloNumber) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn monomial(exp: Exp, c: CycloNumber) -> Self {
        let mut p = MPoly::zero(exp.iter().sum());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// The coordinate function `x` (0), `y` (1) or `z` (2).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(e, CycloNumber::one())
    }

    /// `a·x + b·y + c·z`.
    pub fn linear(a: CycloNumber, b: CycloNumber, c: CycloNumber) -> Self {
        Self::from_terms(1, [([1, 0, 0], a), ([0, 1, 0], b), ([0, 0, 1], c)]).unwrap()
    }

    pub fn from_line(l: &LineForm) -> Self {
        let [a, b, c] = l.coeffs().clone();
        Self::linear(a, b, c)
    }

    /// Sums the given terms, rejecting exponents of the wrong total degree.
    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Exp, CycloNumber)>,
    ) -> Result<Self, PolyError> {
        let mut p = MPoly::zero(degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(PolyError::NotHomogeneous { degree, exp: e });
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exp, c: &CycloNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &CycloNumber)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp) -> CycloNumber {
        self.terms.get(e).cloned().unwrap_or_else(CycloNumber::zero)
    }

    /// Least common conductor of the coefficients.
    pub fn conductor(&self) -> u32 {
        self.terms
            .values()
            .fold(1, |acc, c| crate::cyclotomic::lcm(acc, c.conductor()))
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.degree);
        }
        MPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MPoly::constant(CycloNumber::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, p: &Point) -> CycloNumber {
        let d = self.degree as usize;
        let powers: Vec<Vec<CycloNumber>> = p
            .iter()
            .map(|v| {
                let mut row = vec![CycloNumber::one()];
                for k in 1..=d {
                    row.push(&row[k - 1] * v);
                }
                row
            })
            .collect();
        self.terms.iter().fold(CycloNumber::zero(), |acc, (e, c)| {
            let m = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize])
                * &powers[2][e[2] as usize];
            &acc + &(c * &m)
        })
    }

    /// `v ↦ f(M·v)`; the new polynomial in `v` has the same degree.
    pub fn linear_substitute(&self, m: &Matrix3) -> Result<Self, PolyError> {
        if det3(m).is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        Ok(self.compose_linear(m))
    }

    /// Substitution of the three rows of `m` as linear forms, without the
    /// invertibility check.
    pub fn compose_linear(&self, m: &Matrix3) -> Self {
        let d = self.degree as usize;
        let forms: Vec<MPoly> = m
            .iter()
            .map(|r| MPoly::linear(r[0].clone(), r[1].clone(), r[2].clone()))
            .collect();
        let powers: Vec<Vec<MPoly>> = forms
            .iter()
            .map(|f| {
                let mut row = vec![MPoly::constant(CycloNumber::one())];
                for k in 1..=d {
                    let next = &row[k - 1] * f;
                    row.push(next);
                }
                row
            })
            .collect();
        // group by the x-exponent so each y/z product is formed once
        let mut out = MPoly::zero(self.degree);
        let mut by_i: BTreeMap<u32, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let yz = (&powers[1][e[1] as usize] * &powers[2][e[2] as usize]).scale(c);
            let slot = by_i.entry(e[0]).or_insert_with(|| MPoly::zero(self.degree - e[0]));
            *slot = &*slot + &yz;
        }
        for (i, g) in by_i {
            out = &out + &(&powers[0][i as usize] * &g);
        }
        out
    }

    /// Formal partial derivatives `(f_x, f_y, f_z)`.
    pub fn partials(&self) -> [MPoly; 3] {
        std::array::from_fn(|v| {
            let mut p = MPoly::zero(self.degree.saturating_sub(1));
            for (e, c) in &self.terms {
                if e[v] == 0 {
                    continue;
                }
                let mut ne = *e;
                ne[v] -= 1;
                p.add_term(ne, &c.scale_int(e[v] as i64));
            }
            p
        })
    }

    pub fn galois(&self, k: i64) -> Result<Self, PolyError> {
        let mut p = MPoly::zero(self.degree);
        for (e, c) in &self.terms {
            p.terms.insert(*e, c.galois(k)?);
        }
        Ok(p)
    }

    /// Multiplicity at the coordinate vertex `e_v` (the point with only
    /// coordinate `v` nonzero).
    pub fn multiplicity_at_vertex(&self, v: usize) -> Option<u32> {
        self.terms.keys().map(|e| self.degree - e[v]).min()
    }

    /// The quadratic substitution `(x, y, z) ↦ (yz, xz, xy)`.
    pub fn cremona_substitution(&self) -> Self {
        let mut p = MPoly::zero(2 * self.degree);
        for (e, c) in &self.terms {
            p.terms.insert([e[1] + e[2], e[0] + e[2], e[0] + e[1]], c.clone());
        }
        p
    }

    /// Splits off the largest monomial factor: returns `(m, g)` with
    /// `f = x^m0 y^m1 z^m2 · g`.
    pub fn strip_monomial(&self) -> (Exp, Self) {
        if self.is_zero() {
            return ([0; 3], self.clone());
        }
        let m: Exp = std::array::from_fn(|v| self.terms.keys().map(|e| e[v]).min().unwrap());
        let shift: u32 = m.iter().sum();
        let mut g = MPoly::zero(self.degree - shift);
        for (e, c) in &self.terms {
            g.terms.insert([e[0] - m[0], e[1] - m[1], e[2] - m[2]], c.clone());
        }
        (m, g)
    }

    /// Exact quotient by `g`, or `None` when a nonzero remainder is left.
    /// Division runs along the lexicographic order on exponents.
    pub fn exact_divide(&self, g: &MPoly) -> Option<MPoly> {
        let (lead_e, lead_c) = g.terms.iter().next_back()?;
        if g.degree > self.degree {
            return None;
        }
        let inv = lead_c.inv().ok()?;
        let mut r = self.clone();
        let mut q = MPoly::zero(self.degree - g.degree);
        while let Some((e, c)) = r.terms.iter().next_back() {
            if (0..3).any(|v| e[v] < lead_e[v]) {
                return None;
            }
            let shift = [e[0] - lead_e[0], e[1] - lead_e[1], e[2] - lead_e[2]];
            let factor = c * &inv;
            let term = MPoly::monomial(shift, factor.clone());
            r = &r - &(&term * g);
            q.add_term(shift, &factor);
        }
        Some(q)
    }

    /// Restriction to a line, as a binary form in the line parameters of
    /// [`LineForm::parametrization`].
    pub fn restrict_to_line(&self, l: &LineForm) -> BinaryForm {
        let (p, q) = l.parametrization();
        let rows: Matrix3 = std::array::from_fn(|i| {
            [p[i].clone(), q[i].clone(), CycloNumber::zero()]
        });
        let g = self.compose_linear(&rows);
        let d = self.degree;
        BinaryForm::new(
            (0..=d)
                .map(|m| g.coeff(&[d - m, m, 0]))
                .collect(),
        )
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    /// Panics when adding nonzero polynomials of different degrees.
    fn add(self, rhs: &MPoly) -> MPoly {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        assert_eq!(self.degree, rhs.degree, "degree mismatch in MPoly addition");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        MPoly {
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &(-rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero(self.degree + rhs.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2]], &(ca * cb));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, name) in ["x", "y", "z"].iter().enumerate() {
                match e[v] {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    k => write!(f, "*{name}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[{}]({self})", self.degree)
    }
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    exp: Exp,
    coeff: CycloNumber,
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    degree: u32,
    terms: Vec<RawTerm>,
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RawPoly {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| RawTerm { exp: *e, coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawPoly::deserialize(d)?;
        MPoly::from_terms(raw.degree, raw.terms.into_iter().map(|t| (t.exp, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// Shorthand constructors used across the crate and its tests.
pub mod vars {
    use super::*;

    pub fn x() -> MPoly {
        MPoly::var(0)
    }
    pub fn y() -> MPoly {
        MPoly::var(1)
    }
    pub fn z() -> MPoly {
        MPoly::var(2)
    }
    pub fn c(v: CycloNumber) -> MPoly {
        MPoly::constant(v)
    }
    pub fn n(v: i64) -> MPoly {
        MPoly::constant(CycloNumber::from_integer(v))
    }
}
