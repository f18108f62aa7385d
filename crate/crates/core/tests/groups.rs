use num_bigint::BigInt;
use proptest::prelude::*;
use zariski::groups::snf::{from_i64, smith_normal_form};
use zariski::groups::{
    abelianize, builtin_presentation, consequence_search, derived_series_finite, kill_generators, letter,
    reidemeister_schreier, tietze_eliminate, todd_coxeter, AbelianInvariants, BuiltinName, CyclicCharacter,
    Presentation, SearchOptions, Word,
};

fn word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..gens, any::<bool>()), 0..=max_len)
        .prop_map(|ls| Word::from_letters(ls.into_iter().map(|(g, p)| letter(g, p))))
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("g{i}")).collect()
}

fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=3).prop_flat_map(|n| {
        prop::collection::vec(word(n, 6), 0..=3).prop_map(move |rels| Presentation::new(names(n), rels).unwrap())
    })
}

/// A presentation together with a well-defined character mod `d` sending
/// `g0` to 1: each relator is corrected by a power of `g0`.
fn with_character() -> impl Strategy<Value = (Presentation, Vec<i64>, u32)> {
    (1usize..=3, 2u32..=4).prop_flat_map(|(n, d)| {
        (prop::collection::vec(word(n, 6), 0..=3), prop::collection::vec(0i64..d as i64, n - 1)).prop_map(
            move |(rels, rest)| {
                let mut images = vec![1i64];
                images.extend(rest);
                let rels = rels
                    .into_iter()
                    .map(|r| {
                        let v: i64 = r.exponent_sums(n).iter().zip(&images).map(|(e, i)| e * i).sum();
                        r.mul(&Word::gen(0).pow(-v.rem_euclid(d as i64)))
                    })
                    .collect();
                (Presentation::new(names(n), rels).unwrap(), images, d)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_identities(u in word(3, 8), v in word(3, 8), e in -4i64..5, f in -4i64..5) {
        prop_assert_eq!(u.mul(&v).inverse(), v.inverse().mul(&u.inverse()));
        prop_assert!(u.mul(&u.inverse()).is_empty());
        prop_assert_eq!(u.pow(e).mul(&u.pow(f)), u.pow(e + f));
        prop_assert!(Word::commutator(&u, &v).exponent_sums(3).iter().all(|&x| x == 0));
        prop_assert_eq!(u.conjugate_by(&v), v.mul(&u).mul(&v.inverse()));
        let letters = u.letters();
        prop_assert!(letters.windows(2).all(|w| w[0] != -w[1]));
    }

    #[test]
    fn schreier_counts((p, images, d) in with_character()) {
        let chi = CyclicCharacter::new(&p, d, images).unwrap();
        let k = reidemeister_schreier(&p, &chi).unwrap();
        prop_assert_eq!(k.num_gens(), d as usize * (p.num_gens() - 1) + 1);
        prop_assert_eq!(k.num_rels(), d as usize * p.num_rels());
    }

    /// Adding `t = w` and eliminating `t` again preserves the invariants.
    #[test]
    fn tietze_round_trip(p in presentation(), w in word(3, 5)) {
        let n = p.num_gens();
        let w = w.map_generators(|g| Some(g % n));
        let mut gens = p.gens().to_vec();
        gens.push("t".into());
        let mut rels = p.rels().to_vec();
        rels.push(Word::gen(n).mul(&w.inverse()));
        let q = Presentation::new(gens, rels).unwrap();
        prop_assert_eq!(abelianize(&q), abelianize(&p));
        let back = tietze_eliminate(&q, n, q.num_rels() - 1).unwrap();
        prop_assert_eq!(back.num_gens(), n);
        prop_assert_eq!(abelianize(&back), abelianize(&p));
    }

    /// |det A| equals the product of the Smith invariants; checked against
    /// the cofactor formula.
    #[test]
    fn snf_determinant(a in prop::collection::vec(prop::collection::vec(-9i64..10, 3), 3)) {
        let det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        let snf = smith_normal_form(&from_i64(&a), 3);
        let prod: BigInt = snf.diagonal().iter().product();
        prop_assert_eq!(prod, BigInt::from(det.abs()));
        let diag = snf.diagonal();
        for i in 1..diag.len() {
            if diag[i - 1] != BigInt::from(0) {
                prop_assert_eq!(&diag[i] % &diag[i - 1], BigInt::from(0));
            }
        }
    }

    #[test]
    fn dihedral_orders(n in 2usize..30) {
        let p: Presentation = format!("gens: a, b ; rels: a^{n}, b^2, (a*b)^2").parse().unwrap();
        let t = todd_coxeter(&p, &[], 10_000);
        prop_assert_eq!(t.index, Some(2 * n));
    }
}

#[test]
fn smith_form_example() {
    let snf = smith_normal_form(&from_i64(&[vec![2, 0], vec![0, 3]]), 2);
    assert_eq!(snf.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
}

/// Closure of the coset permutations, an independent count of the group order.
fn closure_size(perms: &[Vec<u32>]) -> usize {
    let n = perms[0].len();
    let id: Vec<u32> = (0..n as u32).collect();
    let mut seen = std::collections::BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in perms {
            let y: Vec<u32> = x.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.len()
}

#[test]
fn coset_enumeration_examples() {
    let s3: Presentation = "gens: a, b ; rels: a^2, b^2, (a*b)^3".parse().unwrap();
    let t = todd_coxeter(&s3, &[], 1000);
    assert_eq!(t.index, Some(6));
    assert_eq!(closure_size(&t.perms), 6);

    let c5: Presentation = "gens: a ; rels: a^5".parse().unwrap();
    assert_eq!(todd_coxeter(&c5, &[], 100).index, Some(5));

    let b3 = builtin_presentation(BuiltinName::B3S2, 2, None).unwrap();
    let t = todd_coxeter(&b3, &[], 1000);
    assert_eq!(t.index, Some(12));
    assert_eq!(closure_size(&t.perms), 12);
    assert_eq!(derived_series_finite(&t).unwrap(), vec![12, 3, 1]);

    let free: Presentation = "gens: a".parse().unwrap();
    let t = todd_coxeter(&free, &[], 50);
    assert!(!t.complete);
    assert!(derived_series_finite(&t).is_err());
}

#[test]
fn builtin_shapes() {
    let g = builtin_presentation(BuiltinName::G, 3, None).unwrap();
    assert_eq!((g.num_gens(), g.num_rels()), (5, 6));
    for d in 2..=6u32 {
        let k = builtin_presentation(BuiltinName::K1hat, d, None).unwrap();
        assert_eq!((k.num_gens(), k.num_rels()), (4, 6 + d as usize - 1));
        let kt = builtin_presentation(BuiltinName::Ktilde, d, None).unwrap();
        assert_eq!((kt.num_gens(), kt.num_rels()), (d as usize + 2, (d * d + d + 2) as usize));
        assert_eq!(abelianize(&kt), AbelianInvariants::new(d as usize + 1, vec![]));
        let gt = builtin_presentation(BuiltinName::Gtilde, d, None).unwrap();
        assert_eq!(abelianize(&gt), AbelianInvariants::new(2, vec![d as i64; 3]));
    }
    assert!(builtin_presentation(BuiltinName::TriplePoint, 3, None).is_err());
    assert!(builtin_presentation(BuiltinName::Kh, 4, Some(4)).is_err());
    let b = builtin_presentation(BuiltinName::B3S2, 2, None).unwrap();
    assert_eq!(abelianize(&b), AbelianInvariants::new(0, vec![4]));
}

#[test]
fn killing_generators() {
    let p: Presentation = "gens: a, b ; rels: [a,b]".parse().unwrap();
    let q = kill_generators(&p, &["b"]).unwrap();
    assert_eq!(q.gens(), ["a"]);
    assert_eq!(q.num_rels(), 0);

    for d in 2..=6u32 {
        for h in 1..d {
            let kh = builtin_presentation(BuiltinName::Kh, d, Some(h)).unwrap();
            assert_eq!(abelianize(&kh), AbelianInvariants::new(3, vec![]), "d={d} h={h}");
        }
    }
}

#[test]
fn consequence_examples() {
    let ab: Presentation = "gens: a, b ; rels: [a,b]".parse().unwrap();
    let w = ab.parse_word("[a^2,b]").unwrap();
    let out = consequence_search(&ab, &w, &SearchOptions::with_depth(3));
    let cert = out.certificate().expect("a consequence");
    assert!(cert.depth() <= 3 && cert.verify(&ab, &w));

    let a2: Presentation = "gens: a ; rels: a^2".parse().unwrap();
    let w = a2.parse_word("a^4").unwrap();
    let cert = consequence_search(&a2, &w, &SearchOptions::with_depth(2)).certificate().cloned().unwrap();
    assert_eq!(cert.depth(), 2);

    let free: Presentation = "gens: a, b".parse().unwrap();
    let w = free.parse_word("[a,b]").unwrap();
    for depth in 1..=4 {
        assert!(!consequence_search(&free, &w, &SearchOptions::with_depth(depth)).is_consequence());
    }
}
