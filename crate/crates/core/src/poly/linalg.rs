//! Small dense linear algebra over cyclotomic fields.

use crate::cyclotomic::CycloNumber;

use super::PolyError;

pub type Matrix3 = [[CycloNumber; 3]; 3];

pub fn identity3() -> Matrix3 {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| CycloNumber::from_integer((r == c) as i64))
    })
}

pub fn diag3(entries: [CycloNumber; 3]) -> Matrix3 {
    let [a, b, c] = entries;
    let z = CycloNumber::zero;
    [[a, z(), z()], [z(), b, z()], [z(), z(), c]]
}

pub fn from_ints(rows: [[i64; 3]; 3]) -> Matrix3 {
    rows.map(|r| r.map(CycloNumber::from_integer))
}

pub fn mat_mul3(a: &Matrix3, b: &Matrix3) -> Matrix3 {
    std::array::from_fn(|r| {
        std::array::from_fn(|c| {
            (0..3).fold(CycloNumber::zero(), |acc, k| &acc + &(&a[r][k] * &b[k][c]))
        })
    })
}

pub fn mat_vec3(a: &Matrix3, v: &[CycloNumber; 3]) -> [CycloNumber; 3] {
    std::array::from_fn(|r| {
        (0..3).fold(CycloNumber::zero(), |acc, k| &acc + &(&a[r][k] * &v[k]))
    })
}

pub fn det3(m: &Matrix3) -> CycloNumber {
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
        &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
    };
    let a = &m[0][0] * &minor(1, 2, 1, 2);
    let b = &m[0][1] * &minor(1, 2, 0, 2);
    let c = &m[0][2] * &minor(1, 2, 0, 1);
    &(&a - &b) + &c
}

pub fn inverse3(m: &Matrix3) -> Result<Matrix3, PolyError> {
    let det = det3(m);
    if det.is_zero() {
        return Err(PolyError::SingularMatrix);
    }
    let inv_det = det.inv()?;
    // adjugate: inverse[c][r] = cofactor(r, c) / det
    Ok(std::array::from_fn(|c| {
        std::array::from_fn(|r| {
            let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
            let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
            let minor = &(&m[rows[0]][cols[0]] * &m[rows[1]][cols[1]])
                - &(&m[rows[0]][cols[1]] * &m[rows[1]][cols[0]]);
            let cof = if (r + c) % 2 == 0 { minor } else { -minor };
            &cof * &inv_det
        })
    }))
}

pub fn cross3(a: &[CycloNumber; 3], b: &[CycloNumber; 3]) -> [CycloNumber; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// Determinant of a square matrix by Gaussian elimination over the field.
pub fn det(mut m: Vec<Vec<CycloNumber>>) -> CycloNumber {
    let n = m.len();
    let mut acc = CycloNumber::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return CycloNumber::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        let pivot = m[col][col].clone();
        acc = &acc * &pivot;
        let inv = pivot.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            for c in col..n {
                if !m[col][c].is_zero() {
                    let t = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &t;
                }
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let z3 = CycloNumber::zeta(3);
        let m: Matrix3 = [
            [CycloNumber::one(), z3.clone(), CycloNumber::zero()],
            [CycloNumber::from_integer(2), CycloNumber::one(), z3.clone()],
            [CycloNumber::zero(), CycloNumber::from_integer(-1), CycloNumber::one()],
        ];
        let inv = inverse3(&m).unwrap();
        assert_eq!(mat_mul3(&m, &inv), identity3());
        assert_eq!(det(m.iter().map(|r| r.to_vec()).collect()), det3(&m));
    }

    #[test]
    fn singular_detected() {
        let m = from_ints([[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert!(matches!(inverse3(&m), Err(PolyError::SingularMatrix)));
    }
}
