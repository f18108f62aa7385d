//! Dense univariate polynomials over cyclotomic fields.

use crate::cyclotomic::CycloNumber;

/// Coefficients lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<CycloNumber>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<CycloNumber>) -> Self {
        while coeffs.last().is_some_and(CycloNumber::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[CycloNumber] {
        &self.coeffs
    }

    pub fn lead(&self) -> Option<&CycloNumber> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &CycloNumber) -> CycloNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(CycloNumber::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![CycloNumber::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(CycloNumber::zero);
                    match other.coeffs.get(i) {
                        Some(b) => &a - b,
                        None => a,
                    }
                })
                .collect(),
        )
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let db = divisor.degree().expect("division by zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return (UniPoly::zero(), self.clone());
        }
        let inv = divisor.lead().unwrap().inv().expect("nonzero lead");
        let mut q = vec![CycloNumber::zero(); r.len() - db];
        for k in (0..r.len() - db).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let c = top * &inv;
            for (j, bj) in divisor.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    r[k + j] = &r[k + j] - &(&c * bj);
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale_int(i as i64))
                .collect(),
        )
    }

    /// Yun's square-free decomposition: `(factor, multiplicity)` with monic
    /// square-free pairwise coprime factors of positive degree.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.divrem(&a0).0;
        let mut c = df.divrem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.divrem(&a).0;
            c = d.divrem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }
}

/// Polynomial through `(xs[i], ys[i])` by Newton divided differences.
pub fn interpolate(xs: &[CycloNumber], ys: &[CycloNumber]) -> UniPoly {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut coef: Vec<CycloNumber> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = &xs[i] - &xs[i - j];
            coef[i] = num.checked_div(&den).expect("distinct nodes");
        }
    }
    let mut poly = UniPoly::new(vec![coef[n - 1].clone()]);
    for i in (0..n - 1).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        poly = poly.mul(&UniPoly::new(vec![-&xs[i], CycloNumber::one()]));
        poly = UniPoly::new({
            let mut c = poly.coeffs.clone();
            if c.is_empty() {
                c.push(CycloNumber::zero());
            }
            c[0] = &c[0] + &coef[i];
            c
        });
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(cs.iter().map(|&c| CycloNumber::from_integer(c)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x-2) and (x-1)(x+3)
        let g = p(&[2, -3, 1]).gcd(&p(&[-3, 2, 1]));
        assert_eq!(g, p(&[-1, 1]));
    }

    #[test]
    fn yun_on_cube_times_linear() {
        // (x-1)^3 (x+2)
        let f = p(&[-1, 3, -3, 1]).mul(&p(&[2, 1]));
        let sq = f.squarefree_decomposition();
        assert_eq!(sq, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 3)]);
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let f = p(&[5, 0, -2, 7]);
        let xs: Vec<_> = (0..4).map(CycloNumber::from_integer).collect();
        let ys: Vec<_> = xs.iter().map(|x| f.eval(x)).collect();
        assert_eq!(interpolate(&xs, &ys), f);
    }
}
