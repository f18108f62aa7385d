//! Cyclotomic polynomials and per-conductor reduction tables.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;

/// Reduction data for `Q[x]/Φ_n`.
#[derive(Debug)]
pub(crate) struct CycloTable {
    pub phi: usize,
    /// Integer coefficients of `Φ_n`, lowest degree first; monic of degree `phi`.
    pub poly: Vec<i64>,
    /// `x^k mod Φ_n` for `k` in `0..n`, each of length `phi`.
    pub powers: Vec<Vec<i64>>,
}

static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();

pub(crate) fn table(n: u32) -> Arc<CycloTable> {
    assert!(n >= 1, "conductor must be positive");
    let lock = TABLES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = lock.read().expect("table lock poisoned").get(&n) {
        return Arc::clone(t);
    }
    let built = Arc::new(build(n));
    lock.write()
        .expect("table lock poisoned")
        .entry(n)
        .or_insert(built)
        .clone()
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    table(n).poly.clone()
}

fn build(n: u32) -> CycloTable {
    let poly = cyclo_poly(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    if phi > 0 {
        cur[0] = 1;
    }
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce the overflowing top coefficient
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] = cur[i]
                    .checked_sub(top.checked_mul(poly[i]).expect("cyclotomic overflow"))
                    .expect("cyclotomic overflow");
            }
        }
    }
    CycloTable { phi, poly, powers }
}

fn cyclo_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<i128> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div: Vec<i128> = cyclo_poly(d).into_iter().map(i128::from).collect();
            num = exact_div_monic(&num, &div);
        }
    }
    num.into_iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficient overflow"))
        .collect()
}

fn exact_div_monic(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i128; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn phi_matches_degree() {
        for n in 1..=120u32 {
            assert_eq!(table(n).phi as u64, euler_phi(n as u64), "n = {n}");
        }
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }
}
