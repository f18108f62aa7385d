//! Exact elements of cyclotomic fields.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::table::{lcm, table};
use super::CycloError;

/// An element of `Q(ζ_N)` stored in the power basis `1, ζ_N, …, ζ_N^{φ(N)-1}`.
///
/// Values of different conductors compare equal when they agree after lifting
/// to the least common conductor.
#[derive(Clone)]
pub struct CycloNumber {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero() -> Self {
        Self::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycloNumber {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// The zero element of `Q(ζ_n)`.
    pub fn zero_in(n: u32) -> Self {
        let phi = table(n).phi;
        CycloNumber {
            conductor: n,
            coeffs: vec![BigRational::zero(); phi],
        }
    }

    /// `ζ_n^k` as an element of `Q(ζ_n)`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "order must be positive");
        let t = table(n);
        let e = k.rem_euclid(n as i64) as usize;
        CycloNumber {
            conductor: n,
            coeffs: t.powers[e]
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// `ζ_n = exp(2πi/n)`.
    pub fn zeta(n: u32) -> Self {
        Self::root_of_unity(n, 1)
    }

    /// Builds an element from explicit power-basis coefficients.
    pub fn from_coeffs(conductor: u32, coeffs: Vec<BigRational>) -> Result<Self, CycloError> {
        if conductor == 0 {
            return Err(CycloError::InvalidOperand("conductor must be positive".into()));
        }
        let phi = table(conductor).phi;
        if coeffs.len() != phi {
            return Err(CycloError::InvalidOperand(format!(
                "conductor {conductor} needs {phi} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CycloNumber { conductor, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.to_rational().is_some_and(|q| q.is_one())
    }

    /// The rational value, if this element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        // the power basis contains 1, so rationals have a lone constant coefficient
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses this element in `Q(ζ_m)`; `m` must be a multiple of the conductor.
    pub fn lift(&self, m: u32) -> Self {
        assert!(
            m % self.conductor == 0,
            "cannot lift conductor {} to {m}",
            self.conductor
        );
        if m == self.conductor {
            return self.clone();
        }
        let t = table(m);
        let step = (m / self.conductor) as usize;
        let mut out = vec![BigRational::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[(i * step) % m as usize];
            for (o, &r) in out.iter_mut().zip(row) {
                if r != 0 {
                    *o += c * BigInt::from(r);
                }
            }
        }
        CycloNumber {
            conductor: m,
            coeffs: out,
        }
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.conductor, other.conductor);
        (self.lift(m), other.lift(m))
    }

    fn reduce_dense(conductor: u32, dense: Vec<BigRational>) -> Self {
        let t = table(conductor);
        let n = conductor as usize;
        let mut out: Vec<BigRational> = vec![BigRational::zero(); t.phi];
        for (k, c) in dense.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < t.phi {
                out[k] += c;
            } else {
                let row = &t.powers[k % n];
                for (o, &r) in out.iter_mut().zip(row) {
                    if r != 0 {
                        *o += &c * BigInt::from(r);
                    }
                }
            }
        }
        CycloNumber {
            conductor,
            coeffs: out,
        }
    }

    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::InvalidOperand("division by zero".into()));
        }
        if let Some(q) = self.to_rational() {
            return Ok(CycloNumber::from_rational(q.recip()).lift(self.conductor));
        }
        let t = table(self.conductor);
        let modulus: Vec<BigRational> = t
            .poly
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let inv = qpoly::inverse_mod(&self.coeffs, &modulus)
            .ok_or_else(|| CycloError::InvalidOperand("element is not invertible".into()))?;
        Ok(Self::reduce_dense(self.conductor, inv))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycloError> {
        Ok(self * &other.inv()?)
    }

    /// Complex conjugation, the Galois map `ζ_N ↦ ζ_N^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit modulo every conductor")
    }

    /// The Galois automorphism `ζ_N ↦ ζ_N^k`; requires `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Result<Self, CycloError> {
        let n = self.conductor as i64;
        if k.gcd(&n) != 1 {
            return Err(CycloError::NotCoprime { k, conductor: self.conductor });
        }
        let mut dense = vec![BigRational::zero(); self.conductor as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = (i as i64 * k).rem_euclid(n) as usize;
                dense[e] += c;
            }
        }
        Ok(Self::reduce_dense(self.conductor, dense))
    }

    pub fn pow(&self, e: i64) -> Result<Self, CycloError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycloNumber::one().lift(self.conductor);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Value under the standard embedding `ζ_N ↦ exp(2πi/N)`.
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let angle = 2.0 * std::f64::consts::PI * i as f64 / n;
                Complex64::from_polar(rational_to_f64(c), angle)
            })
            .sum()
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    match (q.numer().to_f64(), q.denom().to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            // scale both sides down for huge operands
            let shift = q.numer().bits().max(q.denom().bits()).saturating_sub(900);
            let a = (q.numer() >> shift).to_f64().unwrap_or(0.0);
            let b = (q.denom() >> shift).to_f64().unwrap_or(1.0);
            a / b
        }
    }
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNumber {}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        if self.conductor == rhs.conductor {
            return CycloNumber {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        let (a, b) = self.common(rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        if self.conductor == rhs.conductor {
            return CycloNumber {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
            };
        }
        let (a, b) = self.common(rhs);
        &a - &b
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if self.conductor != rhs.conductor {
            // rational scalars never need a lift
            if self.conductor == 1 {
                return rhs.scale(&self.coeffs[0]);
            }
            if rhs.conductor == 1 {
                return self.scale(&rhs.coeffs[0]);
            }
            let (a, b) = self.common(rhs);
            return &a * &b;
        }
        if self.conductor == 1 {
            return CycloNumber::from_rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        let phi = self.coeffs.len();
        let mut dense = vec![BigRational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    dense[i + j] += a * b;
                }
            }
        }
        CycloNumber::reduce_dense(self.conductor, dense)
    }
}

impl<'a> Div<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    /// Panics on division by zero; use [`CycloNumber::checked_div`] otherwise.
    fn div(self, rhs: &CycloNumber) -> CycloNumber {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber { (&self).$method(&rhs) }
        }
        impl<'a> $tr<&'a CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber { (&self).$method(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl From<i64> for CycloNumber {
    fn from(n: i64) -> Self {
        CycloNumber::from_integer(n)
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber({})", self)
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "z{}", self.conductor)?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for CycloNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CycloNumber", 2)?;
        s.serialize_field("conductor", &self.conductor)?;
        let coeffs: Vec<[JsonInt; 2]> = self
            .coeffs
            .iter()
            .map(|q| [JsonInt(q.numer().clone()), JsonInt(q.denom().clone())])
            .collect();
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for CycloNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            conductor: u32,
            coeffs: Vec<[JsonInt; 2]>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(raw.coeffs.len());
        for [n, d] in raw.coeffs {
            if d.0.is_zero() {
                return Err(de::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n.0, d.0));
        }
        CycloNumber::from_coeffs(raw.conductor, coeffs).map_err(de::Error::custom)
    }
}

/// Integer that serializes as a JSON number when it fits in `i64`, else as a string.
struct JsonInt(BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => serializer.serialize_i64(v),
            None => serializer.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Either {
            Int(i64),
            Str(String),
        }
        match Either::deserialize(deserializer)? {
            Either::Int(v) => Ok(JsonInt(BigInt::from(v))),
            Either::Str(s) => s.parse().map(JsonInt).map_err(de::Error::custom),
        }
    }
}

/// Dense univariate polynomials over `Q`, lowest degree first.
mod qpoly {
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn trim(p: &mut Vec<BigRational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = b[db].recip();
        if r.len() <= db {
            return (vec![], r);
        }
        let mut q = vec![BigRational::zero(); r.len() - db];
        while r.len() > db {
            let k = r.len() - 1 - db;
            let c = &r[r.len() - 1] * &lead_inv;
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    r[k + j] -= &c * bj;
                }
            }
            q[k] = c;
            r.pop();
            trim(&mut r);
        }
        (q, r)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(&mut out);
        out
    }

    /// `u` with `u·a ≡ 1 (mod m)`, when `gcd(a, m) = 1`.
    pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
        let mut r0 = m.to_vec();
        trim(&mut r0);
        let mut r1 = a.to_vec();
        trim(&mut r1);
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s2 = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].recip();
        Some(s0.into_iter().map(|x| x * &c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(n, k)
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        assert_eq!(&z(4, 1) * &z(4, 1), CycloNumber::from_integer(-1));
    }

    #[test]
    fn third_roots_sum_to_zero() {
        let s = &CycloNumber::one() + &(&z(3, 1) + &z(3, 2));
        assert!(s.is_zero());
    }

    #[test]
    fn conj_of_zeta5() {
        assert_eq!(z(5, 1).conj(), z(5, 4));
    }

    #[test]
    fn mixed_conductors_compare_after_lift() {
        // ζ_6^2 = ζ_3 and -ζ_3^2 = ζ_6
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(-z(3, 2), z(6, 1));
        assert_eq!(z(12, 3), z(4, 1));
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let a = &z(7, 1) + &CycloNumber::from_integer(3);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert!(matches!(
            CycloNumber::zero_in(7).inv(),
            Err(CycloError::InvalidOperand(_))
        ));
    }

    #[test]
    fn json_shape() {
        let v = &z(4, 1) + &CycloNumber::from_ratio(1, 2);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"{"conductor":4,"coeffs":[[1,2],[1,1]]}"#);
        let back: CycloNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
        let big: CycloNumber =
            serde_json::from_str(r#"{"conductor":1,"coeffs":[["123456789012345678901234567890",1]]}"#)
                .unwrap();
        assert!(serde_json::to_string(&big).unwrap().contains("\"123456789012345678901234567890\""));
    }

    #[test]
    fn wrong_coefficient_count_rejected() {
        assert!(serde_json::from_str::<CycloNumber>(r#"{"conductor":5,"coeffs":[[1,1]]}"#).is_err());
    }

    #[test]
    fn complex_embedding() {
        let w = z(3, 1).to_complex();
        assert!((w.re + 0.5).abs() < 1e-14);
        assert!((w.im - 3f64.sqrt() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn galois_needs_unit() {
        assert!(z(6, 1).galois(2).is_err());
        assert_eq!(z(5, 1).galois(2).unwrap(), z(5, 2));
    }
}
