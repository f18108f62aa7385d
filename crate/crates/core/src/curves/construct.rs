//! Curves built from the Fermat curve `x^d + y^d + z^d` and its flex tangents.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{half_plane_class, CycloNumber, RootOfUnity};
use crate::poly::linalg::Matrix3;
use crate::poly::vars::{c, n, x, y, z};
use crate::poly::{LineForm, MPoly};

use super::{CurveError, CurveSpec, Family};

pub fn fermat(d: u32) -> MPoly {
    &(&x().pow(d) + &y().pow(d)) + &z().pow(d)
}

/// `y - τ z = 0`, tangent to the Fermat curve at a point of `x = 0`.
pub fn line_x_tau(tau: RootOfUnity) -> LineForm {
    LineForm::new(CycloNumber::zero(), CycloNumber::one(), -tau.to_cyclo()).unwrap()
}

/// `z - τ x = 0`.
pub fn line_y_tau(tau: RootOfUnity) -> LineForm {
    LineForm::new(-tau.to_cyclo(), CycloNumber::zero(), CycloNumber::one()).unwrap()
}

/// `x - τ y = 0`.
pub fn line_z_tau(tau: RootOfUnity) -> LineForm {
    LineForm::new(CycloNumber::one(), -tau.to_cyclo(), CycloNumber::zero()).unwrap()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Construction {
    pub curve: CurveSpec,
    /// The stratum value given by the construction before half-plane reduction.
    pub predicted_raw: RootOfUnity,
    pub predicted: RootOfUnity,
    /// Set for variant 3, whose three lines pass through one point.
    pub degenerate: bool,
}

fn check_taus(d: u32, taus: &[RootOfUnity; 3]) -> Result<(), CurveError> {
    if d < 2 {
        return Err(CurveError::PrecondViolation(format!("degree {d} < 2")));
    }
    for (i, t) in taus.iter().enumerate() {
        if t.pow(d as i64) != RootOfUnity::minus_one() {
            return Err(CurveError::PrecondViolation(format!(
                "tau_{} = {t} does not satisfy tau^{d} = -1",
                i + 1
            )));
        }
    }
    Ok(())
}

fn distinct(taus: &[RootOfUnity]) -> bool {
    (0..taus.len()).all(|i| (i + 1..taus.len()).all(|j| taus[i] != taus[j]))
}

/// The Fermat curve with three flex tangents chosen by `variant`:
/// 1 takes `L_{x,τ1}, L_{y,τ2}, L_{z,τ3}` (stratum `(τ1τ2τ3)^2`),
/// 2 takes `L_{x,τ1}, L_{x,τ2}, L_{z,τ3}` (stratum `τ1/τ2`),
/// 3 takes `L_{x,τ1}, L_{x,τ2}, L_{x,τ3}`, three concurrent lines.
pub fn kummer_construct(
    d: u32,
    taus: [RootOfUnity; 3],
    variant: u8,
) -> Result<Construction, CurveError> {
    check_taus(d, &taus)?;
    let [t1, t2, t3] = taus;
    let (lines, raw, degenerate) = match variant {
        1 => {
            let tau = t1.mul(t2).mul(t3);
            (vec![line_x_tau(t1), line_y_tau(t2), line_z_tau(t3)], tau.pow(2), false)
        }
        2 => {
            if t1 == t2 {
                return Err(CurveError::PrecondViolation("variant 2 needs tau_1 != tau_2".into()));
            }
            (vec![line_x_tau(t1), line_x_tau(t2), line_z_tau(t3)], t1.mul(t2.inv()), false)
        }
        3 => {
            if !distinct(&taus) {
                return Err(CurveError::PrecondViolation(
                    "variant 3 needs pairwise distinct tau_i".into(),
                ));
            }
            (vec![line_x_tau(t1), line_x_tau(t2), line_x_tau(t3)], RootOfUnity::one(), true)
        }
        v => return Err(CurveError::PrecondViolation(format!("unknown variant {v}"))),
    };
    let mut curve = CurveSpec::new(Family::Hat, d, fermat(d), lines)?;
    curve.conductor = crate::cyclotomic::lcm(curve.conductor, 2 * d);
    Ok(Construction {
        curve,
        predicted_raw: raw,
        predicted: half_plane_class(raw, d)?,
        degenerate,
    })
}

/// Coordinate change `(x1, y1, z1) = M·(x, y, z)` under which the Fermat
/// curve of variant 1 or 2 has its three lines on the coordinate axes.
pub fn proof_change(variant: u8, taus: [RootOfUnity; 3]) -> Result<Matrix3, CurveError> {
    let [t1, t2, t3] = taus.map(|t| t.to_cyclo());
    let one = CycloNumber::one();
    let zero = CycloNumber::zero();
    match variant {
        1 => {
            let tau = &(&t1 * &t2) * &t3;
            let tau_inv = tau.inv()?;
            let t3_inv = t3.inv()?;
            Ok([
                [tau.clone(), one.clone(), one],
                [&t3_inv * &tau, t3_inv.clone(), &t3_inv * &tau],
                [&t2 * &tau, &t2 * &tau_inv, t2.clone()],
            ])
        }
        2 => Ok([
            [one.clone(), one.clone(), one],
            [t3.clone(), t3.clone(), zero.clone()],
            [&t3 * &t1, &t3 * &t2, zero],
        ]),
        v => Err(CurveError::PrecondViolation(format!("no coordinate change for variant {v}"))),
    }
}

/// `x²y² + y²z² + x²z² + 2xyz(x + y - z)`, the sigma curve with `d = 2`.
pub fn tricuspidal_quartic() -> CurveSpec {
    let sq = |p: MPoly| &p * &p;
    let main = &(&(&sq(x()) * &sq(y())) + &(&sq(y()) * &sq(z())))
        + &(&(&sq(x()) * &sq(z())) + &(&(&n(2) * &(&(&x() * &y()) * &z())) * &(&(&x() + &y()) - &z())));
    CurveSpec::new(Family::Sigma, 2, main, vec![]).expect("valid quartic")
}

/// Member `t` of the family degenerating variant 3 onto a triple point:
/// lines `x - τ1 y`, `x - τ2 y`, `x - τ3 y - t z` and main component
/// `x^d + y^d + z^d - t z (x^d + y^d)/(x - τ3 y)`.
pub fn degeneration_member(
    d: u32,
    taus: [RootOfUnity; 3],
    t: BigRational,
) -> Result<CurveSpec, CurveError> {
    if d <= 2 {
        return Err(CurveError::PrecondViolation(format!("degree {d} must exceed 2")));
    }
    check_taus(d, &taus)?;
    if !distinct(&taus) {
        return Err(CurveError::PrecondViolation("tau_i must be pairwise distinct".into()));
    }
    let [t1, t2, t3] = taus.map(|t| t.to_cyclo());
    let tc = CycloNumber::from_rational(t);
    let divisor = &x() - &(&c(t3.clone()) * &y());
    let quotient = (&x().pow(d) + &y().pow(d))
        .exact_divide(&divisor)
        .ok_or(CurveError::DivisionNotExact)?;
    let main = &fermat(d) - &(&(&c(tc.clone()) * &z()) * &quotient);
    let lines = vec![
        LineForm::new(CycloNumber::one(), -&t1, CycloNumber::zero())?,
        LineForm::new(CycloNumber::one(), -&t2, CycloNumber::zero())?,
        LineForm::new(CycloNumber::one(), -&t3, -tc)?,
    ];
    let mut curve = CurveSpec::new(Family::Hat, d, main, lines)?;
    curve.conductor = crate::cyclotomic::lcm(curve.conductor, 2 * d);
    Ok(curve)
}
