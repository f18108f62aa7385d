use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zariski::curves::{check_smooth, kummer_construct, verify_hat};
use zariski::groups::{
    abelianize, builtin_presentation, consequence_search, todd_coxeter, BuiltinName, SearchOptions,
};
use zariski::holonomy::{linking_exact, linking_numeric, PathOptions, TriangleCycle};
use zariski::{CycloNumber, RootOfUnity};

fn cyclotomic(c: &mut Criterion) {
    let a = &CycloNumber::zeta(12) + &CycloNumber::from_ratio(3, 7);
    let b = &CycloNumber::zeta(12).pow(5).unwrap() - &CycloNumber::from_integer(2);
    c.bench_function("cyclo mul Q(zeta12)", |bch| bch.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("cyclo inv Q(zeta12)", |bch| bch.iter(|| black_box(&a).inv().unwrap()));
}

fn curves(c: &mut Criterion) {
    for d in [4u32, 6] {
        let t = RootOfUnity::new(2 * d, 1);
        let curve = kummer_construct(d, [t, t, t], 1).unwrap().curve;
        c.bench_function(&format!("check_smooth d={d}"), |b| b.iter(|| check_smooth(black_box(&curve.main))));
        c.bench_function(&format!("verify_hat d={d}"), |b| b.iter(|| verify_hat(black_box(&curve)).unwrap()));
        c.bench_function(&format!("linking_exact d={d}"), |b| {
            b.iter(|| linking_exact(black_box(&curve), false).unwrap())
        });
        let cycle = TriangleCycle::from_curve(&curve).unwrap();
        let opts = PathOptions { steps: 1024, ..PathOptions::default() };
        c.bench_function(&format!("linking_numeric d={d} 1024 steps"), |b| {
            b.iter(|| linking_numeric(black_box(&curve), &cycle, &opts).unwrap())
        });
    }
}

fn groups(c: &mut Criterion) {
    let b3 = builtin_presentation(BuiltinName::B3S2, 2, None).unwrap();
    c.bench_function("todd_coxeter B3S2", |b| b.iter(|| todd_coxeter(black_box(&b3), &[], 1000)));
    let kt = builtin_presentation(BuiltinName::Ktilde, 6, None).unwrap();
    c.bench_function("abelianize Ktilde(6)", |b| b.iter(|| abelianize(black_box(&kt))));
    let kh = builtin_presentation(BuiltinName::Kh, 4, Some(2)).unwrap();
    let w = kh.parse_word("[gl,ty]").unwrap();
    c.bench_function("consequence [gl,ty] in Kh(4,2)", |b| {
        b.iter(|| consequence_search(black_box(&kh), &w, &SearchOptions::with_depth(8)))
    });
}

criterion_group!(benches, cyclotomic, curves, groups);
criterion_main!(benches);
