//! Exact holonomy from the linear branches over each line.

use serde::{Deserialize, Serialize};

use crate::curves::{verify_hat, CurveSpec, HatCertificate};
use crate::cyclotomic::{classify_root_of_unity, half_plane_class, CycloNumber, RootOfUnity};
use crate::poly::{dth_power_test, BinaryLinear, LineForm, MPoly, Point};

use super::{HolonomyError, TriangleCycle};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactLink {
    /// `ξ(γ)` for the loop in its stored orientation.
    pub holonomy: RootOfUnity,
    /// Half-plane class of the holonomy.
    pub class: RootOfUnity,
    /// The orientation-free invariant `{ξ, ξ^{-1}}`.
    pub unordered: [RootOfUnity; 2],
    pub cycle: TriangleCycle,
    /// Ratio `ℓ_i(end) / ℓ_i(start)` picked up along each segment.
    pub factors: Vec<CycloNumber>,
    pub reversed: bool,
    /// The membership certificate, computed independently of the holonomy.
    pub certificate: HatCertificate,
}

/// The linear form `ℓ` with `F|_L = c·ℓ^d`, in the parameters of `L`.
fn branch_form(f: &MPoly, l: &LineForm, d: u32) -> Result<BinaryLinear, HolonomyError> {
    let r = f.restrict_to_line(l);
    let (_, lin) = dth_power_test(&r, d)?
        .ok_or(crate::curves::CurveError::NotTangentAtOnePoint { line: 0 })?;
    Ok(lin)
}

fn eval_on(l: &LineForm, lin: &BinaryLinear, p: &Point) -> CycloNumber {
    let (s, t) = l.params_of(p);
    lin.eval(&s, &t)
}

fn segment_factor(
    f: &MPoly,
    d: u32,
    l: &LineForm,
    from: &Point,
    to: &Point,
) -> Result<CycloNumber, HolonomyError> {
    let lin = branch_form(f, l, d)?;
    let a = eval_on(l, &lin, from);
    let b = eval_on(l, &lin, to);
    if a.is_zero() || b.is_zero() {
        return Err(crate::curves::CurveError::NotNormalizable(
            "tangency point at a vertex of the triangle".into(),
        )
        .into());
    }
    Ok(b.checked_div(&a).map_err(crate::curves::CurveError::from)?)
}

/// Exact linking invariant of a hat curve; `reverse` runs the loop backwards.
pub fn linking_exact(c: &CurveSpec, reverse: bool) -> Result<ExactLink, HolonomyError> {
    let certificate = verify_hat(c)?;
    let d = c.d;
    let mut cycle = TriangleCycle::from_curve(c)?;
    if reverse {
        // P1 → P3 → P2 → P1 along L3, L2, L1
        let [l1, l2, l3] = cycle.lines.clone();
        let [p1, p2, p3] = cycle.vertices.clone();
        cycle = TriangleCycle { lines: [l3, l2, l1], vertices: [p1, p3, p2] };
    }
    let mut factors = Vec::with_capacity(3);
    let mut total = CycloNumber::one();
    for i in 0..3 {
        let (l, from, to) = cycle.segment(i);
        let k = segment_factor(&c.main, d, l, from, to)?;
        total = &total * &k;
        factors.push(k);
    }
    let holonomy = classify_root_of_unity(&total)
        .filter(|z| z.is_dth_root(d))
        .ok_or_else(|| HolonomyError::NotRootOfUnity(total.to_string()))?;
    let class = half_plane_class(holonomy, d).map_err(crate::curves::CurveError::from)?;
    Ok(ExactLink {
        holonomy,
        class,
        unordered: [class, class.conj()],
        cycle,
        factors,
        reversed: reverse,
        certificate,
    })
}

/// A point `[x:y:z:t]` of the cover.
pub type LiftPoint = [CycloNumber; 4];

/// Endpoint of the lift of segment `1`, `2` or `3` of the loop through
/// `[0:1:0] → [0:0:1] → [1:0:0] → [0:1:0]` in normalized coordinates,
/// starting from `[0:1:0:1]`.
pub fn lift_endpoint_check(c: &CurveSpec, segment: usize) -> Result<LiftPoint, HolonomyError> {
    assert!((1..=3).contains(&segment), "segments are numbered 1 to 3");
    let cert = verify_hat(c)?;
    let f = &cert.normalized_main;
    let d = c.d;
    let axis = |v: usize| {
        let mut a = [0i64; 3];
        a[v] = 1;
        LineForm::from_ints(a[0], a[1], a[2]).unwrap()
    };
    let e = |v: usize| -> Point {
        std::array::from_fn(|i| CycloNumber::from_integer((i == v) as i64))
    };
    let cycle = TriangleCycle::from_lines([axis(0), axis(1), axis(2)])?;
    // start value: the d-th root 1 of F(0,1,0) = 1
    debug_assert!(f.evaluate(&e(1)).is_one());
    let mut t = CycloNumber::one();
    let mut end = e(1);
    for i in 0..segment {
        let (l, from, to) = cycle.segment(i);
        t = &t * &segment_factor(f, d, l, from, to)?;
        end = to.clone();
    }
    // normalize the representative so that its nonzero coordinate is 1
    let k = end.iter().position(|v| !v.is_zero()).unwrap();
    let s = end[k].inv().map_err(crate::curves::CurveError::from)?;
    Ok([&end[0] * &s, &end[1] * &s, &end[2] * &s, &t * &s])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::kummer_construct;

    #[test]
    fn endpoints_and_holonomy() {
        let taus = [RootOfUnity::minus_one(), RootOfUnity::new(6, 1), RootOfUnity::new(6, 5)];
        let c = kummer_construct(3, taus, 2).unwrap().curve;
        let link = linking_exact(&c, false).unwrap();
        assert_eq!(link.class, link.certificate.label.zeta);
        let back = linking_exact(&c, true).unwrap();
        assert_eq!(back.holonomy, link.holonomy.inv());

        let i = |v: i64| CycloNumber::from_integer(v);
        assert_eq!(lift_endpoint_check(&c, 1).unwrap(), [i(0), i(0), i(1), i(1)]);
        assert_eq!(lift_endpoint_check(&c, 2).unwrap(), [i(1), i(0), i(0), i(1)]);
        let end = lift_endpoint_check(&c, 3).unwrap();
        assert_eq!(end[..3], [i(0), i(1), i(0)]);
        assert_eq!(end[3], link.certificate.raw_zeta);
    }
}
