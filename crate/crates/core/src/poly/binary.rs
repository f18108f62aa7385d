//! Binary forms `Σ c_m s^{n-m} t^m` and the d-th power / coprimality tests.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNumber;

use super::linalg::det;
use super::univariate::UniPoly;
use super::PolyError;

/// Homogeneous polynomial in two variables `(s, t)`; `coeffs[m]` multiplies
/// `s^{n-m} t^m` where `n = coeffs.len() - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryForm {
    coeffs: Vec<CycloNumber>,
}

/// `a·s + b·t`, normalized so the first nonzero coefficient is 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinaryLinear {
    pub a: CycloNumber,
    pub b: CycloNumber,
}

impl BinaryLinear {
    /// Normalizes `a·s + b·t`, returning the factor that was divided out.
    pub fn normalized(a: CycloNumber, b: CycloNumber) -> Result<(CycloNumber, Self), PolyError> {
        let lead = if !a.is_zero() { a.clone() } else { b.clone() };
        if lead.is_zero() {
            return Err(PolyError::ZeroForm);
        }
        let inv = lead.inv()?;
        Ok((lead, BinaryLinear { a: &a * &inv, b: &b * &inv }))
    }

    pub fn to_form(&self) -> BinaryForm {
        BinaryForm::new(vec![self.a.clone(), self.b.clone()])
    }

    pub fn eval(&self, s: &CycloNumber, t: &CycloNumber) -> CycloNumber {
        &(&self.a * s) + &(&self.b * t)
    }
}

impl BinaryForm {
    /// Form of degree `coeffs.len() - 1`; an empty vector is not allowed.
    pub fn new(coeffs: Vec<CycloNumber>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs a degree");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { coeffs: vec![CycloNumber::zero(); degree + 1] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycloNumber::is_zero)
    }

    pub fn eval(&self, s: &CycloNumber, t: &CycloNumber) -> CycloNumber {
        let n = self.degree();
        let mut acc = CycloNumber::zero();
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = &(c * &s.pow((n - m) as i64).unwrap_or_else(|_| CycloNumber::zero()))
                * &t.pow(m as i64).unwrap_or_else(|_| CycloNumber::zero());
            acc = &acc + &term;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BinaryForm::zero(self.degree() + other.degree());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BinaryForm::new(vec![CycloNumber::one()]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &CycloNumber) -> Self {
        BinaryForm { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn galois(&self, k: i64) -> Result<Self, PolyError> {
        Ok(BinaryForm {
            coeffs: self.coeffs.iter().map(|c| c.galois(k)).collect::<Result<_, _>>()?,
        })
    }

    /// Dehomogenization at `t = 1` (a polynomial in `s`) together with the
    /// multiplicity of the root `(s:t) = (1:0)`.
    pub fn dehomogenize(&self) -> (UniPoly, usize) {
        let n = self.degree();
        let p = UniPoly::new((0..=n).map(|e| self.coeffs[n - e].clone()).collect());
        let at_infinity = n - p.degree().unwrap_or(0);
        (p, at_infinity)
    }

    /// Exact resultant via the Sylvester determinant.
    pub fn resultant(&self, other: &Self) -> CycloNumber {
        let (m, n) = (self.degree(), other.degree());
        let size = m + n;
        if size == 0 {
            return CycloNumber::one();
        }
        let mut rows = Vec::with_capacity(size);
        for shift in 0..n {
            let mut row = vec![CycloNumber::zero(); size];
            row[shift..shift + m + 1].clone_from_slice(&self.coeffs);
            rows.push(row);
        }
        for shift in 0..m {
            let mut row = vec![CycloNumber::zero(); size];
            row[shift..shift + n + 1].clone_from_slice(&other.coeffs);
            rows.push(row);
        }
        det(rows)
    }

    /// Multiplicities of the distinct roots, from a square-free decomposition.
    /// Each entry is `(degree of the square-free factor, multiplicity)`.
    pub fn root_multiplicities(&self) -> Result<Vec<(usize, usize)>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroForm);
        }
        let (p, inf) = self.dehomogenize();
        let mut out: Vec<(usize, usize)> = p
            .squarefree_decomposition()
            .into_iter()
            .map(|(f, k)| (f.degree().unwrap(), k))
            .collect();
        if inf > 0 {
            out.push((1, inf));
        }
        Ok(out)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match n - m {
                0 => {}
                1 => write!(f, "*s")?,
                e => write!(f, "*s^{e}")?,
            }
            match m {
                0 => {}
                1 => write!(f, "*t")?,
                e => write!(f, "*t^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Decides whether `g = c·ℓ^d` for a linear form `ℓ`, returning `(c, ℓ)`
/// with `ℓ` normalized.
pub fn dth_power_test(
    g: &BinaryForm,
    d: u32,
) -> Result<Option<(CycloNumber, BinaryLinear)>, PolyError> {
    if g.degree() != d as usize {
        return Err(PolyError::DegreeMismatch { expected: d as usize, got: g.degree() });
    }
    if g.is_zero() {
        return Ok(None);
    }
    let a0 = &g.coeffs[0];
    let candidate = if a0.is_zero() {
        // then ℓ must be t
        (g.coeffs[d as usize].clone(), BinaryLinear { a: CycloNumber::zero(), b: CycloNumber::one() })
    } else {
        let beta = g.coeffs[1].checked_div(&a0.scale_int(d as i64))?;
        (a0.clone(), BinaryLinear { a: CycloNumber::one(), b: beta })
    };
    let (c, l) = candidate;
    if l.to_form().pow(d).scale(&c) == *g {
        Ok(Some((c, l)))
    } else {
        Ok(None)
    }
}

/// True iff the two forms share no projective root.
pub fn coprime_forms(g: &BinaryForm, h: &BinaryForm) -> Result<bool, PolyError> {
    if g.is_zero() || h.is_zero() {
        return Err(PolyError::ZeroForm);
    }
    Ok(!g.resultant(h).is_zero())
}
