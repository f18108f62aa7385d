//! Smoothness of plane curves through resultants of the partial derivatives.
//!
//! After a coordinate change putting `[0:0:1]` off the three polar curves,
//! `R_1 = Res_z(F_x, F_y)` and `R_2 = Res_z(F_x, F_z)` are binary forms of
//! degree `(d-1)^2` whose common roots contain the projections of all
//! singular points. A constant gcd proves smoothness. Both resultants are
//! recovered by evaluation at `y = 1` and interpolation, first over `F_p`
//! for primes `p ≡ 1 mod N`, then over the cyclotomic field itself when
//! every reduction looks singular.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloNumber;
use crate::poly::linalg::{det3, identity3, Matrix3};
use crate::poly::MPoly;

pub const EXACT_DEGREE_LIMIT: u32 = 6;
const ATTEMPTS: usize = 4;
const SEED: u64 = 0x5eed_0001;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmoothMethod {
    /// Resultants over the cyclotomic field.
    Exact,
    /// Resultants over `F_p` for primes `p ≡ 1 mod N`. Conclusive when
    /// smooth; a singular verdict only means singular at every prime tried.
    Modular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessReport {
    pub smooth: bool,
    pub method: SmoothMethod,
    /// Coordinate changes tried, the last one decisive when `smooth`.
    pub attempts: usize,
    pub matrix: Matrix3,
    pub prime: Option<u64>,
}

/// Minimal field interface shared by the exact and modular runs.
trait Field: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Self;
}

impl Field for CycloNumber {
    fn zero_like(&self) -> Self {
        CycloNumber::zero()
    }
    fn from_int_like(&self, n: i64) -> Self {
        CycloNumber::from_integer(n)
    }
    fn is_zero(&self) -> bool {
        CycloNumber::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inv(&self) -> Self {
        CycloNumber::inv(self).expect("nonzero")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Fp {
    v: u64,
    p: u64,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn from_int_like(&self, n: i64) -> Self {
        Fp { v: n.rem_euclid(self.p as i64) as u64, p: self.p }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp { v: (self.v + o.v) % self.p, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        Fp { v: (self.v + self.p - o.v) % self.p, p: self.p }
    }
    fn mul(&self, o: &Self) -> Self {
        Fp { v: mulmod(self.v, o.v, self.p), p: self.p }
    }
    fn inv(&self) -> Self {
        assert!(self.v != 0);
        Fp { v: powmod(self.v, self.p - 2, self.p), p: self.p }
    }
}

fn det<F: Field>(mut m: Vec<Vec<F>>, one: &F) -> F {
    let n = m.len();
    let mut acc = one.clone();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return one.zero_like();
        };
        if p != col {
            m.swap(p, col);
            acc = acc.zero_like().sub(&acc);
        }
        let pivot = m[col][col].clone();
        acc = acc.mul(&pivot);
        let inv = pivot.inv();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c in col..n {
                let t = f.mul(&m[col][c]);
                m[r][c] = m[r][c].sub(&t);
            }
        }
    }
    acc
}

/// Resultant of two univariate polynomials given lowest degree first, with
/// nonzero leading coefficients.
fn resultant<F: Field>(a: &[F], b: &[F], one: &F) -> F {
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    if size == 0 {
        return one.clone();
    }
    let mut rows = Vec::with_capacity(size);
    for shift in 0..n {
        let mut row = vec![one.zero_like(); size];
        for (i, c) in a.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..m {
        let mut row = vec![one.zero_like(); size];
        for (i, c) in b.iter().rev().enumerate() {
            row[shift + i] = c.clone();
        }
        rows.push(row);
    }
    det(rows, one)
}

fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(F::is_zero) {
        p.pop();
    }
    p
}

fn interpolate<F: Field>(xs: &[F], ys: &[F]) -> Vec<F> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = coef[i].sub(&coef[i - 1]);
            let den = xs[i].sub(&xs[i - j]);
            coef[i] = num.mul(&den.inv());
        }
    }
    let mut poly = vec![coef[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let mut next = vec![xs[0].zero_like(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].add(c);
            next[k] = next[k].sub(&c.mul(&xs[i]));
        }
        next[0] = next[0].add(&coef[i]);
        poly = next;
    }
    trim(poly)
}

fn poly_rem<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = b[db].inv();
    while r.len() > db {
        let top = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        if !top.is_zero() {
            let c = top.mul(&inv);
            for (j, bj) in b.iter().enumerate() {
                r[shift + j] = r[shift + j].sub(&c.mul(bj));
            }
        }
        r.pop();
    }
    trim(r)
}

/// Degree of the gcd; the zero polynomial is passed as an empty slice.
fn gcd_degree<F: Field>(a: Vec<F>, b: Vec<F>) -> Option<usize> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().checked_sub(1)
}

/// Dense coefficients of a polynomial in the chosen field, indexed by exponent.
struct Dense<F> {
    terms: Vec<([u32; 3], F)>,
}

impl<F: Field> Dense<F> {
    /// Coefficients in `z` of the specialization `x = x0, y = 1`.
    fn specialize(&self, x0: &F, deg: u32) -> Vec<F> {
        let zero = x0.zero_like();
        let mut out = vec![zero; deg as usize + 1];
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for _ in 0..e[0] {
                v = v.mul(x0);
            }
            out[e[2] as usize] = out[e[2] as usize].add(&v);
        }
        out
    }
}

enum Outcome {
    Smooth,
    Common,
    BadChart,
}

fn run<F: Field>(partials: [Dense<F>; 3], d: u32, one: &F) -> Outcome {
    let deg = d - 1;
    let lead = |p: &Dense<F>| {
        p.terms
            .iter()
            .find(|(e, _)| e[2] == deg)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| one.zero_like())
    };
    if partials.iter().any(|p| lead(p).is_zero()) {
        return Outcome::BadChart;
    }
    let big_d = (deg * deg) as usize;
    let xs: Vec<F> = (0..=big_d as i64).map(|k| one.from_int_like(k)).collect();
    let mut r1 = Vec::with_capacity(xs.len());
    let mut r2 = Vec::with_capacity(xs.len());
    for x0 in &xs {
        let a = partials[0].specialize(x0, deg);
        let b = partials[1].specialize(x0, deg);
        let c = partials[2].specialize(x0, deg);
        r1.push(resultant(&a, &b, one));
        r2.push(resultant(&a, &c, one));
    }
    let p1 = interpolate(&xs, &r1);
    let p2 = interpolate(&xs, &r2);
    // a deficit below (d-1)^2 is a root at y = 0
    let inf1 = big_d + 1 - p1.len().min(big_d + 1);
    let inf2 = big_d + 1 - p2.len().min(big_d + 1);
    let finite_common = match gcd_degree(p1.clone(), p2.clone()) {
        None => true,
        Some(g) => g > 0,
    };
    if finite_common || (inf1 > 0 && inf2 > 0) || p1.is_empty() || p2.is_empty() {
        Outcome::Common
    } else {
        Outcome::Smooth
    }
}

fn exact_dense(p: &MPoly) -> Dense<CycloNumber> {
    Dense { terms: p.terms().map(|(e, c)| (*e, c.clone())).collect() }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut k = 2;
    while k * k <= n {
        if n % k == 0 {
            out.push(k);
            while n % k == 0 {
                n /= k;
            }
        }
        k += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primes `p ≡ 1 mod n` above 2^30, in increasing order.
fn primes_one_mod(n: u64) -> impl Iterator<Item = u64> {
    let start = (1u64 << 30) / n + 1;
    (start..).map(move |k| k * n + 1).filter(|&p| is_prime(p))
}

/// A primitive `n`-th root of unity mod `p`.
fn primitive_root_of_unity(n: u64, p: u64) -> u64 {
    let qs = prime_factors(n);
    (2..p)
        .map(|a| powmod(a, (p - 1) / n, p))
        .find(|&w| qs.iter().all(|q| powmod(w, n / q, p) != 1))
        .expect("p ≡ 1 mod n has primitive n-th roots")
}

fn reduce_rational(num: &BigInt, den: &BigInt, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let n = num.mod_floor(&pb).to_u64()?;
    let d = den.mod_floor(&pb).to_u64()?;
    if d == 0 {
        return None;
    }
    Some(mulmod(n, powmod(d, p - 2, p), p))
}

fn reduce(c: &CycloNumber, big_n: u64, omega: u64, p: u64) -> Option<Fp> {
    let n = c.conductor() as u64;
    let w = powmod(omega, big_n / n, p);
    let mut acc = 0u64;
    let mut wp = 1u64;
    for q in c.coeffs() {
        if !q.is_zero() {
            let r = reduce_rational(q.numer(), q.denom(), p)?;
            acc = (acc + mulmod(r, wp, p)) % p;
        }
        wp = mulmod(wp, w, p);
    }
    Some(Fp { v: acc, p })
}

fn modular_dense(poly: &MPoly, big_n: u64, omega: u64, p: u64) -> Option<Dense<Fp>> {
    let mut terms = Vec::new();
    for (e, c) in poly.terms() {
        terms.push((*e, reduce(c, big_n, omega, p)?));
    }
    Some(Dense { terms })
}

fn random_change(rng: &mut ChaCha8Rng) -> Matrix3 {
    loop {
        let m: Matrix3 = std::array::from_fn(|r| {
            std::array::from_fn(|c| {
                let v: i64 = rng.gen_range(-3..=3);
                CycloNumber::from_integer(v + (r == c) as i64 * 4)
            })
        });
        if !det3(&m).is_zero() {
            return m;
        }
    }
}

fn attempts_with(f: &MPoly, method: SmoothMethod) -> SmoothnessReport {
    let d = f.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut primes = primes_one_mod(f.conductor().max(1) as u64);
    let mut decisive_failures = 0;
    let mut attempts = 0;
    let mut last = identity3();
    while attempts < 4 * ATTEMPTS && decisive_failures < ATTEMPTS {
        let m = if attempts == 0 { identity3() } else { random_change(&mut rng) };
        attempts += 1;
        let g = if attempts == 1 { f.clone() } else { f.compose_linear(&m) };
        last = m.clone();
        let [fx, fy, fz] = g.partials();
        let (outcome, prime) = match method {
            SmoothMethod::Exact => (
                run([exact_dense(&fx), exact_dense(&fy), exact_dense(&fz)], d, &CycloNumber::one()),
                None,
            ),
            SmoothMethod::Modular => {
                let big_n = g.conductor().max(1) as u64;
                let p = primes.next().unwrap();
                let omega = primitive_root_of_unity(big_n, p);
                let parts = [&fx, &fy, &fz].map(|q| modular_dense(q, big_n, omega, p));
                match parts {
                    [Some(a), Some(b), Some(c)] => (run([a, b, c], d, &Fp { v: 1, p }), Some(p)),
                    _ => (Outcome::BadChart, Some(p)),
                }
            }
        };
        match outcome {
            Outcome::Smooth => {
                return SmoothnessReport { smooth: true, method, attempts, matrix: m, prime };
            }
            Outcome::Common => decisive_failures += 1,
            Outcome::BadChart => {}
        }
    }
    SmoothnessReport { smooth: false, method, attempts, matrix: last, prime: None }
}

/// Decides smoothness of the projective curve `f = 0`.
///
/// A smooth reduction modulo a prime of good reduction proves smoothness:
/// a singular point over the algebraic closure, scaled to have integral
/// coordinates one of which is a unit, reduces to a common zero of the
/// reduced partials. Singular verdicts are confirmed over the cyclotomic
/// field up to degree [`EXACT_DEGREE_LIMIT`].
pub fn check_smooth(f: &MPoly) -> SmoothnessReport {
    if f.degree() <= 1 {
        return SmoothnessReport {
            smooth: !f.is_zero(),
            method: SmoothMethod::Exact,
            attempts: 0,
            matrix: identity3(),
            prime: None,
        };
    }
    let modular = attempts_with(f, SmoothMethod::Modular);
    if modular.smooth || f.degree() > EXACT_DEGREE_LIMIT {
        return modular;
    }
    attempts_with(f, SmoothMethod::Exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::vars::*;

    fn fermat(d: u32) -> MPoly {
        &(&x().pow(d) + &y().pow(d)) + &z().pow(d)
    }

    #[test]
    fn fermat_curves_are_smooth() {
        for d in 2..=6 {
            let r = check_smooth(&fermat(d));
            assert!(r.smooth, "d = {d}");
            assert_eq!(r.method, SmoothMethod::Modular);
            assert!(r.prime.is_some());
        }
        for d in 2..=4 {
            assert!(attempts_with(&fermat(d), SmoothMethod::Exact).smooth, "d = {d}");
        }
    }

    #[test]
    fn nodal_cubic_is_singular() {
        // y^2 z = x^2 (x + z): node at [0:0:1]
        let f = &(&y().pow(2) * &z()) - &(&x().pow(2) * &(&x() + &z()));
        let r = check_smooth(&f);
        assert!(!r.smooth);
        assert_eq!(r.method, SmoothMethod::Exact);
    }

    #[test]
    fn reducible_conic_is_singular() {
        assert!(!check_smooth(&(&x() * &y())).smooth);
    }

    #[test]
    fn modular_route_for_degree_seven() {
        let r = check_smooth(&fermat(7));
        assert!(r.smooth);
        assert_eq!(r.method, SmoothMethod::Modular);
        let cusp = &(&fermat(7) - &z().pow(7)) - &(&x().pow(2) * &z().pow(5));
        // x^7 + y^7 - x^2 z^5 is singular at [0:0:1]
        assert!(!check_smooth(&cusp).smooth);
    }

    #[test]
    fn modular_route_over_cyclotomic_coefficients() {
        let w = CycloNumber::zeta(7);
        let f = &(&x().pow(7) + &(&c(w) * &y().pow(7))) + &z().pow(7);
        assert!(check_smooth(&f).smooth);
    }
}
