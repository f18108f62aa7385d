//! Roots of unity, their exact recognition and the upper half-plane class.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::number::CycloNumber;
use super::table::lcm;
use super::CycloError;

/// `ζ_n^k` stored with `n` minimal: `gcd(k, n) = 1`, or `n = 1, k = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRoot", into = "RawRoot")]
pub struct RootOfUnity {
    order: u32,
    exponent: u32,
}

#[derive(Serialize, Deserialize)]
struct RawRoot {
    order: u32,
    exponent: i64,
}

impl TryFrom<RawRoot> for RootOfUnity {
    type Error = CycloError;
    fn try_from(raw: RawRoot) -> Result<Self, CycloError> {
        if raw.order == 0 {
            return Err(CycloError::InvalidOperand("order must be positive".into()));
        }
        Ok(RootOfUnity::new(raw.order, raw.exponent))
    }
}

impl From<RootOfUnity> for RawRoot {
    fn from(r: RootOfUnity) -> Self {
        RawRoot {
            order: r.order,
            exponent: r.exponent as i64,
        }
    }
}

impl RootOfUnity {
    /// `ζ_n^k`, reduced to lowest terms.
    pub fn new(n: u32, k: i64) -> Self {
        assert!(n >= 1, "order must be positive");
        let k = k.rem_euclid(n as i64) as u32;
        if k == 0 {
            return RootOfUnity { order: 1, exponent: 0 };
        }
        let g = k.gcd(&n);
        RootOfUnity {
            order: n / g,
            exponent: k / g,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { order: 1, exponent: 0 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { order: 2, exponent: 1 }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn mul(self, other: Self) -> Self {
        let n = lcm(self.order, other.order);
        let k = self.exponent as i64 * (n / self.order) as i64
            + other.exponent as i64 * (n / other.order) as i64;
        RootOfUnity::new(n, k)
    }

    pub fn pow(self, e: i64) -> Self {
        RootOfUnity::new(self.order, self.exponent as i64 * e)
    }

    pub fn inv(self) -> Self {
        self.pow(-1)
    }

    pub fn conj(self) -> Self {
        self.inv()
    }

    /// True when this root satisfies `z^d = 1`.
    pub fn is_dth_root(&self, d: u32) -> bool {
        d % self.order == 0
    }

    /// Exact sign test: the angle `2πk/n` lies in `[0, π]`.
    pub fn im_nonneg(&self) -> bool {
        2 * self.exponent <= self.order
    }

    pub fn to_cyclo(&self) -> CycloNumber {
        CycloNumber::root_of_unity(self.order, self.exponent as i64)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(
            1.0,
            2.0 * std::f64::consts::PI * self.exponent as f64 / self.order as f64,
        )
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.order, self.exponent) {
            (1, _) => write!(f, "1"),
            (2, _) => write!(f, "-1"),
            (n, 1) => write!(f, "zeta{n}"),
            (n, k) => write!(f, "zeta{n}^{k}"),
        }
    }
}

impl FromStr for RootOfUnity {
    type Err = CycloError;

    /// Accepts `n:k` for `ζ_n^k`, or the literals `1` and `-1`.
    fn from_str(s: &str) -> Result<Self, CycloError> {
        let s = s.trim();
        match s {
            "1" => return Ok(RootOfUnity::one()),
            "-1" => return Ok(RootOfUnity::minus_one()),
            _ => {}
        }
        let bad = || CycloError::InvalidOperand(format!("cannot parse root of unity {s:?}"));
        let (n, k) = s.split_once(':').ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let k: i64 = k.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(RootOfUnity::new(n, k))
    }
}

/// Recognizes `a` as a root of unity `ζ_n^k` with `n` minimal, exactly.
///
/// The roots of unity of `Q(ζ_N)` are `±ζ_N^j`, so their orders divide `lcm(2, N)`.
pub fn classify_root_of_unity(a: &CycloNumber) -> Option<RootOfUnity> {
    if a.is_zero() {
        return None;
    }
    let m = lcm(2, a.conductor());
    let one = CycloNumber::one();
    if a.pow(m as i64).ok()? != one {
        return None;
    }
    let n = (1..=m)
        .filter(|n| m % n == 0)
        .find(|&n| a.pow(n as i64).map(|p| p == one).unwrap_or(false))?;
    let target = a.lift(lcm(a.conductor(), n));
    (0..n)
        .filter(|&k| (k as u64).gcd(&(n as u64)) == 1 || n == 1)
        .map(|k| RootOfUnity::new(n, k as i64))
        .find(|r| r.to_cyclo() == target)
}

/// Representative of `z` in `{ζ : ζ^d = 1, Im ζ ≥ 0}`, identifying conjugates.
pub fn half_plane_class(z: RootOfUnity, d: u32) -> Result<RootOfUnity, CycloError> {
    if d == 0 || !z.is_dth_root(d) {
        return Err(CycloError::NotDthRoot { root: z.to_string(), d });
    }
    Ok(if z.im_nonneg() { z } else { z.conj() })
}
