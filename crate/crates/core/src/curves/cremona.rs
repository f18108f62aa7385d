//! The standard quadratic transformation, Galois conjugation and the
//! intersection type with the three lines.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::poly::linalg::{det3, identity3, inverse3, Matrix3};
use crate::poly::LineForm;

use super::{CurveError, CurveSpec, Family};

fn axes() -> Vec<LineForm> {
    (0..3)
        .map(|v| {
            let mut c = [0i64; 3];
            c[v] = 1;
            LineForm::from_ints(c[0], c[1], c[2]).unwrap()
        })
        .collect()
}

/// Applies `(x, y, z) ↦ (yz, xz, xy)` after moving the lines to the
/// coordinate axes, and strips the vertex multiplicities: hat curves go to
/// tilde curves and back.
pub fn cremona_map(c: &CurveSpec) -> Result<CurveSpec, CurveError> {
    let (target, expected) = match c.family {
        Family::Hat => (Family::Tilde, [0; 3]),
        Family::Tilde => (Family::Hat, [c.d; 3]),
        other => {
            return Err(CurveError::WrongFamily { expected: "hat or tilde".into(), got: other })
        }
    };
    c.validate()?;
    let a: Matrix3 = std::array::from_fn(|r| c.lines[r].coeffs().clone());
    if det3(&a).is_zero() {
        return Err(CurveError::NotTriangular);
    }
    let main = if a == identity3() { c.main.clone() } else { c.main.compose_linear(&inverse3(&a)?) };
    let (stripped, g) = main.cremona_substitution().strip_monomial();
    if stripped != expected {
        return Err(CurveError::UnexpectedMultiplicity { expected, got: stripped });
    }
    let mut out = CurveSpec::new(target, c.d, g, axes())?;
    out.conductor = c.conductor;
    Ok(out)
}

/// Applies `ζ_N ↦ ζ_N^k` to every coefficient.
pub fn galois_conjugate_curve(c: &CurveSpec, k: i64) -> Result<CurveSpec, CurveError> {
    if k.gcd(&(c.conductor as i64)) != 1 {
        return Err(crate::cyclotomic::CycloError::NotCoprime { k, conductor: c.conductor }.into());
    }
    Ok(CurveSpec {
        family: c.family,
        d: c.d,
        conductor: c.conductor,
        main: c.main.galois(k)?,
        lines: c.lines.iter().map(|l| l.galois(k)).collect::<Result<_, _>>()?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtalShiraneType {
    pub d: u32,
    /// Intersection multiplicities of the main component with each line,
    /// in decreasing order.
    pub multiplicities: [Vec<usize>; 3],
    pub s: usize,
}

/// Intersection multiplicities with the three lines. The square-free
/// decomposition of each restriction gives the multiplicities of all roots
/// over the algebraic closure, whether or not they split over the field.
pub fn artal_shirane_type(c: &CurveSpec) -> Result<ArtalShiraneType, CurveError> {
    if !matches!(c.family, Family::Hat | Family::ArtalShirane) {
        return Err(CurveError::WrongFamily { expected: "hat or artal_shirane".into(), got: c.family });
    }
    c.validate()?;
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(3);
    for l in &c.lines {
        let r = c.main.restrict_to_line(l);
        let mut m: Vec<usize> = Vec::new();
        for (deg, mult) in r.root_multiplicities()? {
            m.extend(std::iter::repeat_n(mult, deg));
        }
        m.sort_unstable_by(|a, b| b.cmp(a));
        lists.push(m);
    }
    let s = lists.iter().flatten().fold(0usize, |acc, &m| acc.gcd(&m));
    let [a, b, cc]: [Vec<usize>; 3] = lists.try_into().unwrap();
    Ok(ArtalShiraneType { d: c.d, multiplicities: [a, b, cc], s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::construct::{fermat, kummer_construct, line_x_tau, tricuspidal_quartic};
    use crate::curves::{verify_hat, verify_sigma};
    use crate::cyclotomic::{CycloNumber, RootOfUnity};
    use crate::poly::vars::*;

    fn tilde_quartic() -> CurveSpec {
        let q = tricuspidal_quartic();
        CurveSpec::new(Family::Tilde, 2, q.main, axes()).unwrap()
    }

    #[test]
    fn tilde_quartic_goes_to_conic() {
        let hat = cremona_map(&tilde_quartic()).unwrap();
        assert_eq!(hat.main.degree(), 2);
        assert_eq!(hat.total_degree(), 5);
        let expected = &(&(&(&x().pow(2) + &y().pow(2)) + &z().pow(2)) + &(&n(2) * &(&y() * &z())))
            + &(&(&n(2) * &(&x() * &z())) - &(&n(2) * &(&x() * &y())));
        assert_eq!(hat.main, expected);
        assert_eq!(verify_hat(&hat).unwrap().label.zeta, RootOfUnity::minus_one());
        assert_eq!(cremona_map(&hat).unwrap(), tilde_quartic());
    }

    #[test]
    fn hat_to_tilde_keeps_label() {
        let c = kummer_construct(3, [RootOfUnity::minus_one(), RootOfUnity::new(6, 1), RootOfUnity::new(6, 5)], 2)
            .unwrap()
            .curve;
        let tilde = cremona_map(&c).unwrap();
        assert_eq!(tilde.main.degree(), 6);
        assert_eq!(tilde.total_degree(), 9);
        let sigma = CurveSpec { family: Family::Sigma, lines: vec![], ..tilde.clone() };
        assert_eq!(verify_sigma(&sigma).unwrap().label, verify_hat(&c).unwrap().label);
    }

    #[test]
    fn conjugation_rules() {
        let c = kummer_construct(3, [RootOfUnity::minus_one(); 3], 1).unwrap().curve;
        assert_eq!(galois_conjugate_curve(&c, 1).unwrap(), c);
        assert!(galois_conjugate_curve(&c, 2).is_err());
    }

    #[test]
    fn intersection_types() {
        let c = kummer_construct(4, [RootOfUnity::new(8, 1); 3], 1).unwrap().curve;
        let t = artal_shirane_type(&c).unwrap();
        assert_eq!(t.multiplicities, [vec![4], vec![4], vec![4]]);
        assert_eq!(t.s, 4);

        let conic = &(&x().pow(2) + &y().pow(2)) - &z().pow(2);
        let secants = vec![
            LineForm::from_ints(1, 0, 0).unwrap(),
            LineForm::from_ints(0, 1, 0).unwrap(),
            LineForm::from_ints(1, 1, 0).unwrap(),
        ];
        let c = CurveSpec::new(Family::ArtalShirane, 2, conic, secants).unwrap();
        let t = artal_shirane_type(&c).unwrap();
        assert_eq!(t.multiplicities, [vec![1, 1], vec![1, 1], vec![1, 1]]);
        assert_eq!(t.s, 1);

        let lines = vec![
            line_x_tau(RootOfUnity::minus_one()),
            LineForm::from_ints(0, 1, 0).unwrap(),
            LineForm::new(CycloNumber::one(), CycloNumber::zero(), CycloNumber::from_integer(2)).unwrap(),
        ];
        let c = CurveSpec::new(Family::ArtalShirane, 3, fermat(3), lines).unwrap();
        let t = artal_shirane_type(&c).unwrap();
        assert_eq!(t.multiplicities[0], vec![3]);
        assert_eq!(t.multiplicities[1], vec![1, 1, 1]);
        assert_eq!(t.s, 1);
    }
}
