//! Membership of a smooth curve plus three tangent lines, and its label.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{classify_root_of_unity, half_plane_class, CycloNumber};
use crate::poly::linalg::{det3, diag3, inverse3, mat_mul3, Matrix3};
use crate::poly::{dth_power_test, BinaryForm, BinaryLinear, MPoly};

use super::smooth::{check_smooth, SmoothnessReport};
use super::{CurveError, CurveSpec, Family, StratumLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HatCertificate {
    pub label: StratumLabel,
    /// `ζ` with `F(x, y, 0) = (x + ζ y)^d` in normalized coordinates.
    pub raw_zeta: CycloNumber,
    /// Restriction of the main component to each line, in line parameters.
    pub restrictions: Vec<BinaryForm>,
    /// `(c, ℓ)` with restriction `c·ℓ^d`.
    pub tangency: Vec<(CycloNumber, BinaryLinear)>,
    /// `N` such that `v ↦ F(N v) / scale` is normalized.
    pub normalizing_matrix: Matrix3,
    pub scale: CycloNumber,
    pub normalized_main: MPoly,
    pub normalized_restrictions: Vec<BinaryForm>,
    pub smoothness: SmoothnessReport,
}

fn axis(v: usize) -> crate::poly::LineForm {
    let mut c = [0i64; 3];
    c[v] = 1;
    crate::poly::LineForm::from_ints(c[0], c[1], c[2]).unwrap()
}

/// Checks the hat conditions and reads the stratum from the normalization
/// `F(0,y,z) = (y+z)^d`, `F(x,0,z) = (x+z)^d`, `F(x,y,0) = (x+ζy)^d`.
pub fn verify_hat(c: &CurveSpec) -> Result<HatCertificate, CurveError> {
    if c.family != Family::Hat {
        return Err(CurveError::WrongFamily { expected: "hat".into(), got: c.family });
    }
    c.validate()?;
    let d = c.d;
    let a: Matrix3 = std::array::from_fn(|r| c.lines[r].coeffs().clone());
    if det3(&a).is_zero() {
        return Err(CurveError::NotTriangular);
    }
    let mut restrictions = Vec::with_capacity(3);
    let mut tangency = Vec::with_capacity(3);
    for (i, l) in c.lines.iter().enumerate() {
        let r = c.main.restrict_to_line(l);
        let t = dth_power_test(&r, d)?.ok_or(CurveError::NotTangentAtOnePoint { line: i })?;
        restrictions.push(r);
        tangency.push(t);
    }
    let smoothness = check_smooth(&c.main);
    if !smoothness.smooth {
        return Err(CurveError::NotSmooth);
    }

    // u = A v sends line i to u_i = 0
    let a_inv = inverse3(&a)?;
    let f1 = c.main.compose_linear(&a_inv);
    let read = |v: usize| -> Result<(CycloNumber, BinaryLinear), CurveError> {
        let r = f1.restrict_to_line(&axis(v));
        let (k, l) = dth_power_test(&r, d)?.ok_or(CurveError::NotTangentAtOnePoint { line: v })?;
        if l.a.is_zero() || l.b.is_zero() {
            return Err(CurveError::NotNormalizable(format!(
                "line {v} is tangent at a vertex of the triangle"
            )));
        }
        Ok((k, l))
    };
    // restrictions c1 (y + α z)^d, c2 (x + β z)^d, c3 (x + ε y)^d
    let (c1, l1) = read(0)?;
    let (_, l2) = read(1)?;
    let (_, l3) = read(2)?;
    let (alpha, beta, eps) = (l1.b, l2.b, l3.b);
    let raw_zeta = (&eps * &alpha).checked_div(&beta)?;
    let scaling = diag3([beta.clone(), alpha.clone(), CycloNumber::one()]);
    let normalizing_matrix = mat_mul3(&a_inv, &scaling);
    let scale = &c1 * &alpha.pow(d as i64)?;
    let normalized_main = c.main.compose_linear(&normalizing_matrix).scale(&scale.inv()?);
    let normalized_restrictions: Vec<BinaryForm> =
        (0..3).map(|v| normalized_main.restrict_to_line(&axis(v))).collect();

    let root = classify_root_of_unity(&raw_zeta).ok_or_else(|| {
        CurveError::NotNormalizable(format!("ζ = {raw_zeta} is not a root of unity"))
    })?;
    if !root.is_dth_root(d) {
        return Err(CurveError::NotNormalizable(format!("ζ = {root} is not a {d}-th root")));
    }
    Ok(HatCertificate {
        label: StratumLabel::new(half_plane_class(root, d)?, d),
        raw_zeta,
        restrictions,
        tangency,
        normalizing_matrix,
        scale,
        normalized_main,
        normalized_restrictions,
        smoothness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::construct::{kummer_construct, line_x_tau};
    use crate::cyclotomic::RootOfUnity;
    use crate::poly::LineForm;

    #[test]
    fn fermat_variant_one_minus_one() {
        let m1 = RootOfUnity::minus_one();
        let c = kummer_construct(3, [m1; 3], 1).unwrap();
        let cert = verify_hat(&c.curve).unwrap();
        assert_eq!(cert.label.zeta, RootOfUnity::one());
        assert_eq!(cert.label.genus, 1);
        let lin = |a: i64, b: i64| BinaryForm::new(vec![a.into(), b.into()]);
        assert_eq!(cert.normalized_restrictions[0], lin(1, 1).pow(3));
        assert_eq!(cert.normalized_restrictions[1], lin(1, 1).pow(3));
        assert_eq!(
            cert.normalized_restrictions[2],
            BinaryForm::new(vec![CycloNumber::one(), cert.raw_zeta.clone()]).pow(3)
        );
    }

    #[test]
    fn variant_two_third_root() {
        let m1 = RootOfUnity::minus_one();
        let c = kummer_construct(3, [m1, RootOfUnity::new(6, 1), RootOfUnity::new(6, 5)], 2).unwrap();
        assert_eq!(verify_hat(&c.curve).unwrap().label.zeta, RootOfUnity::new(3, 1));
    }

    #[test]
    fn secant_line_rejected() {
        let m1 = RootOfUnity::minus_one();
        let mut c = kummer_construct(3, [m1; 3], 1).unwrap().curve;
        c.lines[0] = LineForm::from_ints(1, 1, 1).unwrap();
        assert!(matches!(verify_hat(&c), Err(CurveError::NotTangentAtOnePoint { line: 0 })));
    }

    #[test]
    fn concurrent_lines_rejected() {
        let m1 = RootOfUnity::minus_one();
        let mut c = kummer_construct(3, [m1; 3], 1).unwrap().curve;
        c.lines[1] = line_x_tau(RootOfUnity::new(6, 1));
        c.lines[2] = line_x_tau(RootOfUnity::new(6, 5));
        assert!(matches!(verify_hat(&c), Err(CurveError::NotTriangular)));
    }
}
