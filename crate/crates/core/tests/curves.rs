use num_bigint::BigInt;
use num_rational::BigRational;
use zariski::curves::{
    artal_shirane_type, cremona_map, degeneration_member, galois_conjugate_curve, kummer_construct,
    verify_hat, verify_sigma, CurveError, Family,
};
use zariski::cyclotomic::half_plane_class;
use zariski::RootOfUnity;

fn roots_of_minus_one(d: u32) -> Vec<RootOfUnity> {
    (0..d as i64).map(|k| RootOfUnity::new(2 * d, 2 * k + 1)).collect()
}

/// Stratum predicted by the construction, computed from the τ's directly.
fn predicted(d: u32, taus: [RootOfUnity; 3], variant: u8) -> RootOfUnity {
    let raw = match variant {
        1 => taus[0].mul(taus[1]).mul(taus[2]).pow(2),
        _ => taus[0].mul(taus[1].inv()),
    };
    half_plane_class(raw, d).unwrap()
}

#[test]
fn every_construction_has_its_predicted_label() {
    for d in 2..=4u32 {
        let roots = roots_of_minus_one(d);
        for &a in &roots {
            for &b in &roots {
                for &c in &roots {
                    let taus = [a, b, c];
                    for variant in [1u8, 2] {
                        let Ok(con) = kummer_construct(d, taus, variant) else {
                            assert!(variant == 2 && a == b, "construction refused for {taus:?}");
                            continue;
                        };
                        let want = predicted(d, taus, variant);
                        assert_eq!(con.predicted, want);
                        if d == 2 && want == RootOfUnity::one() {
                            assert!(verify_hat(&con.curve).is_err(), "non-reduced case must fail");
                            continue;
                        }
                        let cert = verify_hat(&con.curve).unwrap();
                        assert_eq!(cert.label.zeta, want, "d={d} {taus:?} variant {variant}");
                    }
                }
            }
        }
    }
}

#[test]
fn concurrent_lines_are_rejected() {
    let r = roots_of_minus_one(3);
    let con = kummer_construct(3, [r[0], r[1], r[2]], 3).unwrap();
    assert!(con.degenerate);
    assert_eq!(verify_hat(&con.curve).unwrap_err(), CurveError::NotTriangular);
}

#[test]
fn degeneration_members_lie_in_the_trivial_stratum() {
    for d in 3..=5u32 {
        let r = roots_of_minus_one(d);
        for t in [1i64, 3] {
            let q = BigRational::new(BigInt::from(t), BigInt::from(100));
            let c = degeneration_member(d, [r[0], r[1], r[2]], q).unwrap();
            assert_eq!(verify_hat(&c).unwrap().label.zeta, RootOfUnity::one(), "d={d} t={t}/100");
        }
    }
}

#[test]
fn conjugation_moves_between_strata() {
    // zeta_10 -> zeta_10^7 restricts to zeta_5 -> zeta_5^2
    let r = roots_of_minus_one(5);
    let c = kummer_construct(5, [r[0], r[0], r[0]], 1).unwrap();
    let l1 = verify_hat(&c.curve).unwrap().label.zeta;
    let l2 = verify_hat(&galois_conjugate_curve(&c.curve, 7).unwrap()).unwrap().label.zeta;
    assert_eq!(l2, half_plane_class(l1.pow(2), 5).unwrap());
    assert_ne!(l1, l2);
}

#[test]
fn cremona_exchanges_families() {
    for d in 2..=4u32 {
        let r = roots_of_minus_one(d);
        let c = kummer_construct(d, [r[0], r[1 % r.len()], r[0]], 1).unwrap();
        if verify_hat(&c.curve).is_err() {
            continue;
        }
        let t = cremona_map(&c.curve).unwrap();
        assert_eq!(t.family, Family::Tilde);
        assert_eq!((c.curve.total_degree(), t.total_degree()), (d + 3, 2 * d + 3));
        assert_eq!(verify_sigma(&t).unwrap().label, verify_hat(&c.curve).unwrap().label);
        let h = cremona_map(&t).unwrap();
        assert_eq!(h.family, Family::Hat);
        assert_eq!(verify_hat(&h).unwrap().label, verify_hat(&c.curve).unwrap().label);
    }
}

#[test]
fn hat_curves_have_full_contact_type() {
    let r = roots_of_minus_one(4);
    let c = kummer_construct(4, [r[0], r[1], r[2]], 1).unwrap();
    let t = artal_shirane_type(&c.curve).unwrap();
    assert_eq!(t.multiplicities, [vec![4], vec![4], vec![4]]);
    assert_eq!(t.s, 4);
}
