//! The reference corpus of hat curves used by the acceptance suite and
//! `batch`: one construction per reachable stratum label.

use std::collections::BTreeSet;

use num_rational::BigRational;
use zariski::curves::{degeneration_member, kummer_construct, CurveSpec};
use zariski::RootOfUnity;

#[derive(Clone, Debug)]
pub struct CorpusCurve {
    pub name: String,
    pub curve: CurveSpec,
    pub predicted: RootOfUnity,
}

/// The `d`-th roots of `-1`, as `ζ_{2d}^{2k+1}`.
pub fn roots_of_minus_one(d: u32) -> Vec<RootOfUnity> {
    (0..d as i64).map(|k| RootOfUnity::new(2 * d, 2 * k + 1)).collect()
}

pub fn tau_string(t: &RootOfUnity) -> String {
    format!("{}:{}", t.order(), t.exponent())
}

/// Variants 1 and 2 over all `τ` triples, keeping the first construction for
/// each (variant, predicted label); for `d > 2` also the degeneration member
/// at `t = 1/100`, predicted label 1.
pub fn hat_corpus(d: u32) -> Vec<CorpusCurve> {
    let roots = roots_of_minus_one(d);
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for variant in [1u8, 2] {
        for t1 in &roots {
            for t2 in &roots {
                for t3 in &roots {
                    let taus = [*t1, *t2, *t3];
                    let Ok(c) = kummer_construct(d, taus, variant) else { continue };
                    if !seen.insert((variant, c.predicted)) {
                        continue;
                    }
                    out.push(CorpusCurve {
                        name: format!(
                            "d{d}-v{variant}-{}",
                            taus.iter().map(tau_string).collect::<Vec<_>>().join(",")
                        ),
                        curve: c.curve,
                        predicted: c.predicted,
                    });
                }
            }
        }
    }
    if d > 2 {
        let taus = [roots[0], roots[1], roots[2 % roots.len()]];
        if let Ok(curve) = degeneration_member(d, taus, BigRational::new(1.into(), 100.into())) {
            out.push(CorpusCurve { name: format!("d{d}-degeneration-1/100"), curve, predicted: RootOfUnity::one() });
        }
    }
    out
}
