use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;
use zariski::cyclotomic::{
    classify_root_of_unity, cyclotomic_polynomial, enumerate_strata, euler_phi, half_plane_class,
};
use zariski::{CycloNumber, RootOfUnity};

const CONDUCTORS: [u32; 8] = [1, 3, 4, 5, 7, 8, 9, 12];

fn number() -> impl Strategy<Value = CycloNumber> {
    prop::sample::select(CONDUCTORS.to_vec()).prop_flat_map(|n| {
        let phi = euler_phi(n as u64) as usize;
        prop::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |c| {
            let coeffs = c.into_iter().map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b))).collect();
            CycloNumber::from_coeffs(n, coeffs).unwrap()
        })
    })
}

fn close(a: &CycloNumber, re: f64, im: f64) -> bool {
    let z = a.to_complex();
    (z.re - re).hypot(z.im - im) <= 1e-9 * (1.0 + re.hypot(im))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in number(), b in number(), c in number()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverses(a in number()) {
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    /// The complex embedding is a ring homomorphism (numeric oracle).
    #[test]
    fn embedding_respects_operations(a in number(), b in number()) {
        let (x, y) = (a.to_complex(), b.to_complex());
        let s = x + y;
        let p = x * y;
        prop_assert!(close(&(&a + &b), s.re, s.im));
        prop_assert!(close(&(&a * &b), p.re, p.im));
        let c = x.conj();
        prop_assert!(close(&a.conj(), c.re, c.im));
    }

    #[test]
    fn galois_is_a_field_automorphism(
        a in number(),
        b in number(),
        // coprime to every conductor that arises
        k in prop::sample::select(vec![-1i64, 11, 13, 17, 19, 23, 29, 31, 37]),
    ) {
        let g = |x: &CycloNumber| x.galois(k).unwrap();
        prop_assert_eq!(g(&(&a * &b)), &g(&a) * &g(&b));
        prop_assert_eq!(g(&(&a + &b)), &g(&a) + &g(&b));
    }

    #[test]
    fn roots_are_classified(n in 1u32..40, k in -50i64..50) {
        let z = RootOfUnity::new(n, k);
        prop_assert_eq!(classify_root_of_unity(&z.to_cyclo()), Some(z));
        let w = z.to_complex();
        let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        prop_assert!((w.re - angle.cos()).abs() < 1e-12 && (w.im - angle.sin()).abs() < 1e-12);
    }

    #[test]
    fn half_plane_class_is_conjugation_invariant(d in 2u32..13, k in 0i64..13) {
        let z = RootOfUnity::new(d, k);
        let c = half_plane_class(z, d).unwrap();
        prop_assert_eq!(c, half_plane_class(z.conj(), d).unwrap());
        prop_assert!(c == z || c == z.conj());
        prop_assert!(c.im_nonneg());
    }
}

#[test]
fn euler_phi_matches_coprime_count() {
    for n in 1..200u64 {
        let count = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
        assert_eq!(euler_phi(n), count, "n = {n}");
    }
}

/// Φ_n vanishes at primitive n-th roots and has degree φ(n).
#[test]
fn cyclotomic_polynomials_vanish_at_primitive_roots() {
    for n in 1..40u32 {
        let p = cyclotomic_polynomial(n);
        assert_eq!(p.len() as u64 - 1, euler_phi(n as u64));
        for k in (1..=n).filter(|k| k.gcd(&n) == 1) {
            let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let (mut re, mut im) = (0.0, 0.0);
            for (e, &c) in p.iter().enumerate() {
                re += c as f64 * (e as f64 * t).cos();
                im += c as f64 * (e as f64 * t).sin();
            }
            assert!(re.hypot(im) < 1e-8, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn strata_sizes() {
    for d in 2..=20u32 {
        let s = enumerate_strata(d).unwrap();
        assert_eq!(s.len() as u32, d / 2 + 1);
        assert!(s.iter().all(|x| x.zeta.is_dth_root(d) && x.zeta.im_nonneg()));
    }
}
