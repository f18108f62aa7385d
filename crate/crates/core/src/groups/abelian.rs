//! Abelianization and the class-two centrality test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use super::snf::{mat_mul, smith_normal_form, IntMatrix};
use super::word::generator_of;

/// `Z^free_rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with `t_1 | … | t_k`, each `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Self {
        AbelianInvariants { free_rank, torsion: torsion.into_iter().map(BigInt::from).collect() }
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        use serde::de::Error;
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    p.rels()
        .iter()
        .map(|r| r.exponent_sums(p.num_gens()).into_iter().map(BigInt::from).collect())
        .collect()
}

pub fn abelianize(p: &Presentation) -> AbelianInvariants {
    let n = p.num_gens();
    let snf = smith_normal_form(&relation_matrix(p), n);
    let diag = snf.diagonal();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    AbelianInvariants {
        free_rank: n - rank,
        torsion: diag.into_iter().filter(|x| !x.is_zero() && !x.is_one()).collect(),
    }
}

/// Element of the free class-two nilpotent group: abelian part and the
/// coordinates on the basic commutators `[x_p, x_q]`, `p > q`.
#[derive(Clone, Debug)]
struct Nil2 {
    a: Vec<BigInt>,
    c: Vec<BigInt>,
}

fn pair(p: usize, q: usize) -> usize {
    p * (p - 1) / 2 + q
}

/// The bilinear cocycle `β(a, b)_{p,q} = a_p b_q`.
fn beta(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len();
    let mut out = vec![BigInt::zero(); n * n.saturating_sub(1) / 2];
    for p in 0..n {
        for q in 0..p {
            out[pair(p, q)] = &a[p] * &b[q];
        }
    }
    out
}

fn add(x: &[BigInt], y: &[BigInt]) -> Vec<BigInt> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

impl Nil2 {
    fn identity(n: usize) -> Self {
        Nil2 { a: vec![BigInt::zero(); n], c: vec![BigInt::zero(); n * n.saturating_sub(1) / 2] }
    }

    fn mul(&self, o: &Nil2) -> Nil2 {
        Nil2 { a: add(&self.a, &o.a), c: add(&add(&self.c, &o.c), &beta(&self.a, &o.a)) }
    }

    fn pow(&self, m: &BigInt) -> Nil2 {
        let half = m * (m - BigInt::one()) / 2;
        let b = beta(&self.a, &self.a);
        Nil2 {
            a: self.a.iter().map(|x| x * m).collect(),
            c: self.c.iter().zip(&b).map(|(x, y)| x * m + y * &half).collect(),
        }
    }
}

fn image(n: usize, letters: &[i32]) -> Nil2 {
    let mut e = Nil2::identity(n);
    for &l in letters {
        let mut g = Nil2::identity(n);
        g.a[generator_of(l)] = BigInt::from(l.signum());
        e = e.mul(&g);
    }
    e
}

/// `B(u, v) = β(u, v) − β(v, u)`: the commutator of lifts of `u` and `v`.
fn bracket(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    beta(u, v).into_iter().zip(beta(v, u)).map(|(x, y)| x - y).collect()
}

/// Row-lattice membership via the Smith form of the generating rows.
fn in_lattice(rows: &IntMatrix, dim: usize, v: &[BigInt]) -> bool {
    if rows.is_empty() {
        return v.iter().all(|x| x.is_zero());
    }
    let snf = smith_normal_form(rows, dim);
    let vv = mat_mul(&vec![v.to_vec()], &snf.v, dim).remove(0);
    let diag = snf.diagonal();
    vv.iter().enumerate().all(|(j, x)| match diag.get(j) {
        Some(dj) if !dj.is_zero() => x.is_multiple_of(dj),
        _ => x.is_zero(),
    })
}

/// Whether generator `g` is central in `G / γ_3(G)`, by testing each
/// `[g, x_j]` against the relator subgroup of the free class-two group.
pub fn central_in_class_two(p: &Presentation, g: usize) -> bool {
    let n = p.num_gens();
    let dim = n * n.saturating_sub(1) / 2;
    let images: Vec<Nil2> = p.rels().iter().map(|r| image(n, r.letters())).collect();
    let unit = |i: usize| -> Vec<BigInt> {
        (0..n).map(|k| if k == i { BigInt::one() } else { BigInt::zero() }).collect()
    };
    // Commutators of generators with relators.
    let mut lattice: IntMatrix = Vec::new();
    for r in &images {
        for i in 0..n {
            lattice.push(bracket(&unit(i), &r.a));
        }
    }
    // Products of relator powers with trivial abelian part.
    let a_rows: IntMatrix = images.iter().map(|r| r.a.clone()).collect();
    if !a_rows.is_empty() {
        let snf = smith_normal_form(&a_rows, n);
        let rank = snf.rank();
        for m in &snf.u[rank..] {
            let mut e = Nil2::identity(n);
            for (k, mk) in m.iter().enumerate() {
                e = e.mul(&images[k].pow(mk));
            }
            debug_assert!(e.a.iter().all(|x| x.is_zero()));
            lattice.push(e.c);
        }
    }
    (0..n)
        .filter(|&j| j != g)
        .all(|j| in_lattice(&lattice, dim, &bracket(&unit(g), &unit(j))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        s.parse().unwrap()
    }

    #[test]
    fn simple_abelianizations() {
        assert_eq!(abelianize(&pres("gens: a, b ; rels: [a,b]")), AbelianInvariants::new(2, vec![]));
        assert_eq!(abelianize(&pres("gens: a ; rels: a^6")), AbelianInvariants::new(0, vec![6]));
        assert_eq!(
            abelianize(&pres("gens: a, b ; rels: a^2, b^3")),
            AbelianInvariants::new(0, vec![6])
        );
        assert_eq!(abelianize(&pres("gens: a, b")).to_string(), "Z^2");
    }

    #[test]
    fn class_two_centrality() {
        assert!(central_in_class_two(&pres("gens: a, b ; rels: [a,b]"), 0));
        assert!(!central_in_class_two(&pres("gens: a, b, c ; rels: [a,b]"), 0));
        // [a,b] has order two in the class-two quotient, so a is not central.
        assert!(!central_in_class_two(&pres("gens: a, b ; rels: a^2"), 0));
        // a = b^2 forces [a,b] = 1.
        assert!(central_in_class_two(&pres("gens: a, b ; rels: a*b^-2"), 0));
        // Relators with trivial abelian part combine: [a,b]^2 = [a,b]^3 = 1.
        assert!(central_in_class_two(&pres("gens: a, b ; rels: [a,b]^3, [a,b]^2"), 0));
    }
}
