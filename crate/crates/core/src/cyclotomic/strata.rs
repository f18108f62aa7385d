//! Stratum labels `𝕋_d⁺` and arithmetic tuple sizes.

use serde::{Deserialize, Serialize};

use super::roots::RootOfUnity;
use super::table::euler_phi;
use super::CycloError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub zeta: RootOfUnity,
    pub realizable: bool,
}

/// The `d`-th roots of unity with non-negative imaginary part, by exponent.
///
/// `(d, ζ) = (2, 1)` is flagged: the edge conditions force a non-reduced quartic.
pub fn enumerate_strata(d: u32) -> Result<Vec<Stratum>, CycloError> {
    if d < 2 {
        return Err(CycloError::InvalidDegree(d as i64));
    }
    Ok((0..=d / 2)
        .map(|k| Stratum {
            zeta: RootOfUnity::new(d, k as i64),
            realizable: !(d == 2 && k == 0),
        })
        .collect())
}

/// Number of primitive `m`-th roots up to conjugation, `φ(m)/2`.
pub fn arithmetic_tuple_size(m: u64) -> Result<u64, CycloError> {
    if matches!(m, 0..=4 | 6) {
        return Err(CycloError::ExcludedOrder(m));
    }
    Ok(euler_phi(m) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strata_examples() {
        let s3: Vec<_> = enumerate_strata(3).unwrap().iter().map(|s| s.zeta).collect();
        assert_eq!(s3, vec![RootOfUnity::one(), RootOfUnity::new(3, 1)]);

        let s2 = enumerate_strata(2).unwrap();
        assert_eq!(s2.len(), 2);
        assert!(!s2[0].realizable);
        assert_eq!(s2[1].zeta, RootOfUnity::minus_one());
        assert!(s2[1].realizable);

        let s4: Vec<_> = enumerate_strata(4).unwrap().iter().map(|s| s.zeta).collect();
        assert_eq!(
            s4,
            vec![RootOfUnity::one(), RootOfUnity::new(4, 1), RootOfUnity::minus_one()]
        );
        assert!(matches!(enumerate_strata(1), Err(CycloError::InvalidDegree(1))));
    }

    #[test]
    fn tuple_sizes() {
        assert_eq!(arithmetic_tuple_size(5).unwrap(), 2);
        assert_eq!(arithmetic_tuple_size(7).unwrap(), 3);
        assert_eq!(arithmetic_tuple_size(12).unwrap(), 2);
        for m in [1, 2, 3, 4, 6] {
            assert!(matches!(arithmetic_tuple_size(m), Err(CycloError::ExcludedOrder(_))));
        }
    }
}
