//! Membership of a degree-`2d` curve with three cusps at the coordinate
//! vertices, read off its Newton polygon.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{classify_root_of_unity, half_plane_class, CycloNumber, RootOfUnity};
use crate::poly::{coprime_forms, dth_power_test, edge_polynomial, newton_polygon, BinaryForm, Chart, Lattice, MPoly};

use super::{CurveError, CurveSpec, Family, StratumLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeForm {
    pub name: String,
    pub edge: (Lattice, Lattice),
    pub form: BinaryForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalCheck {
    /// Coordinate vertex index: 0 for `[1:0:0]`, 1 for `[0:1:0]`, 2 for `[0:0:1]`.
    pub vertex: usize,
    pub degree_d_part: BinaryForm,
    pub degree_d1_part: BinaryForm,
    pub coprime: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaCertificate {
    pub label: StratumLabel,
    pub raw_zeta: CycloNumber,
    pub hull: Vec<Lattice>,
    pub edges: Vec<EdgeForm>,
    pub local: Vec<LocalCheck>,
    pub warnings: Vec<String>,
}

/// Terms with exponent `m` in variable `v`, as a binary form in the other two.
fn slice(f: &MPoly, v: usize, m: u32) -> BinaryForm {
    let others: Vec<usize> = (0..3).filter(|&i| i != v).collect();
    let n = f.degree() - m;
    let mut coeffs = vec![CycloNumber::zero(); n as usize + 1];
    for (e, c) in f.terms() {
        if e[v] == m {
            coeffs[e[others[1]] as usize] = c.clone();
        }
    }
    BinaryForm::new(coeffs)
}

/// Checks the triangle, the three edge powers and the local type at the
/// vertices; reads `ζ` from the diagonal edge after rescaling the other two
/// to `y^d (x+1)^d` and `x^d (y+1)^d`.
pub fn verify_sigma(c: &CurveSpec) -> Result<SigmaCertificate, CurveError> {
    if !matches!(c.family, Family::Sigma | Family::Tilde) {
        return Err(CurveError::WrongFamily { expected: "sigma".into(), got: c.family });
    }
    c.validate()?;
    let d = c.d;
    let di = d as i64;
    let f = &c.main;
    let poly = newton_polygon(f, Chart::Z);
    if poly.hull != vec![(0, di), (di, 0), (di, di)] {
        return Err(CurveError::WrongPolygon);
    }
    let named = [
        ("horizontal", ((0, di), (di, di))),
        ("vertical", ((di, 0), (di, di))),
        ("diagonal", ((0, di), (di, 0))),
    ];
    let mut edges = Vec::new();
    for (name, edge) in named {
        let form = edge_polynomial(f, Chart::Z, edge)?;
        if dth_power_test(&form, d)?.is_none() {
            return Err(CurveError::EdgeNotPower { edge: name.into() });
        }
        edges.push(EdgeForm { name: name.into(), edge, form });
    }
    // chart z coefficient a_{i,j} of x^i y^j
    let a = |i: u32, j: u32| f.coeff(&[i, j, 2 * d - i - j]);
    let big_a = a(d, d);
    let big_b = a(0, d);
    let dn = CycloNumber::from_integer(d as i64);
    let p = a(d - 1, d).checked_div(&(&dn * &big_a))?;
    let q = a(d, d - 1).checked_div(&(&dn * &big_a))?;
    let r = a(1, d - 1).checked_div(&(&dn * &big_b))?;
    if p.is_zero() || q.is_zero() || r.is_zero() {
        return Err(CurveError::NotNormalizable("an edge power is tangent at a vertex".into()));
    }
    let raw_zeta = (&r * &p).checked_div(&q)?;

    let mut local = Vec::new();
    for v in 0..3 {
        let low = slice(f, v, d);
        let high = slice(f, v, d - 1);
        let coprime = !high.is_zero() && coprime_forms(&low, &high)?;
        local.push(LocalCheck { vertex: v, degree_d_part: low, degree_d1_part: high, coprime });
        if !coprime {
            return Err(CurveError::LocalTypeUnverified { vertex: v });
        }
    }

    let root = classify_root_of_unity(&raw_zeta)
        .filter(|z| z.is_dth_root(d))
        .ok_or_else(|| CurveError::NotNormalizable(format!("ζ = {raw_zeta} is not a {d}-th root of unity")))?;
    let label = StratumLabel::new(half_plane_class(root, d)?, d);
    let mut warnings = Vec::new();
    if d == 2 && label.zeta == RootOfUnity::one() {
        warnings.push("stratum (d, ζ) = (2, 1) is not realizable by reduced curves".into());
    }
    Ok(SigmaCertificate { label, raw_zeta, hull: poly.hull, edges, local, warnings })
}
