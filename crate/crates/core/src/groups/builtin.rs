//! Built-in presentations and the machine derivation of the first kernel.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::presentation::{CyclicCharacter, Presentation};
use super::rewrite::{kill_generators, reidemeister_schreier, tietze_eliminate};
use super::GroupError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BuiltinName {
    /// Six-line arrangement group on `gx, gy, gl, tx, ty`.
    G,
    /// `G` with the orbifold relations of order `d`.
    Gtilde,
    /// Kernel of `gy ↦ 1` on `Gtilde`, with `ty_j` killed for `j > 0`.
    K1hat,
    /// Kernel of `gx ↦ 1` on `K1hat`.
    Ktilde,
    /// `Ktilde` with `tx_j` killed for `j ∉ {0, h}`.
    Kh,
    /// `Ktilde` with `ty` and `tx_j`, `j ≥ 3`, killed.
    TriplePoint,
    /// Braid group of the sphere on three strands.
    B3S2,
    /// Triangle Artin group of type `(2, 4, 4)`.
    Artin244,
}

impl BuiltinName {
    pub const ALL: [BuiltinName; 8] = [
        BuiltinName::G,
        BuiltinName::Gtilde,
        BuiltinName::K1hat,
        BuiltinName::Ktilde,
        BuiltinName::Kh,
        BuiltinName::TriplePoint,
        BuiltinName::B3S2,
        BuiltinName::Artin244,
    ];
}

impl fmt::Display for BuiltinName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for BuiltinName {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        BuiltinName::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| GroupError::BadParameters(format!("unknown presentation {s:?}")))
    }
}

struct Builder {
    gens: Vec<String>,
    rels: Vec<super::Word>,
    labels: Vec<String>,
}

impl Builder {
    fn new(gens: &[&str]) -> Self {
        Builder { gens: gens.iter().map(|g| g.to_string()).collect(), rels: Vec::new(), labels: Vec::new() }
    }

    fn rel(&mut self, label: impl Into<String>, text: &str) {
        let shell = Presentation::new(self.gens.clone(), Vec::new()).expect("distinct generators");
        let w = shell.parse_word(text).unwrap_or_else(|e| panic!("built-in relator {text}: {e}"));
        self.rels.push(w);
        self.labels.push(label.into());
    }

    fn finish(self, notes: &[&str]) -> Presentation {
        let mut p = Presentation::with_labels(self.gens, self.rels, self.labels).expect("valid built-in");
        p.notes = notes.iter().map(|n| n.to_string()).collect();
        p
    }
}

fn arrangement(d: Option<u32>) -> Presentation {
    let mut b = Builder::new(&["gx", "gy", "gl", "tx", "ty"]);
    b.rel("G1", "[tx,ty]");
    b.rel("G2", "[gy*gl,tx]");
    b.rel("G3", "[tx*gy,gl]");
    b.rel("G4", "[gy,gx]");
    b.rel("G5", "[gx*ty,gl]");
    b.rel("G6", "[gl*gx,ty]");
    if let Some(d) = d {
        b.rel("G7", &format!("gx^{d}"));
        b.rel("G8", &format!("gy^{d}"));
        b.rel("G9", &format!("(tx*gl*gx*ty*gy)^-{d}"));
    }
    b.finish(&["the point at infinity has meridian (tx*gl*gx*ty*gy)^-1"])
}

fn k1hat(d: u32) -> Presentation {
    let mut b = Builder::new(&["gx", "gl", "tx", "ty"]);
    b.rel("K1", &format!("gx^{d}"));
    b.rel("K2", &format!("(tx*gl*gx)^{d}*ty"));
    b.rel("K3", "[tx,ty]");
    b.rel("K4", &format!("[(gl*tx)^{d},tx]"));
    b.rel("K5", "[gx*ty,gl]");
    b.rel("K6", "[gl*gx,ty]");
    for j in 1..d {
        b.rel(format!("K7_{j}"), &format!("[gx,(gl*tx)^-{j}*gl*(gl*tx)^{j}]"));
    }
    b.finish(&["K4 and K7 read the bare line symbol as gl, following the elimination formulas"])
}

fn ktilde(d: u32) -> Presentation {
    let tx: Vec<String> = (0..d).map(|i| format!("tx{i}")).collect();
    let mut names = vec!["gl", "ty"];
    names.extend(tx.iter().map(String::as_str));
    let mut b = Builder::new(&names);
    let s = "(ty*gl)";
    b.rel("TK1", &format!("[{s}^{d},ty]"));
    for i in 0..d {
        b.rel(format!("TK2_{i}"), &format!("[tx{i},{s}^-{i}*ty*{s}^{i}]"));
    }
    let prod: Vec<String> = (0..d).map(|j| format!("tx{j}*{s}^-{j}*gl*{s}^{j}")).collect();
    b.rel("TK3", &format!("{}*ty", prod.join("*")));
    for i in 0..d {
        b.rel(format!("TK4_{i}"), &format!("[({s}^-{i}*gl*{s}^{i}*tx{i})^{d},tx{i}]"));
    }
    for i in 0..d {
        let n = (i + 1) % d;
        for j in 1..d {
            b.rel(
                format!("TK5_{i}_{j}"),
                &format!(
                    "[gl,(gl*{s}^{i}*tx{i}*{s}^-{i})^{j}*{s}^-1*(gl*{s}^{}*tx{n}*{s}^-{})^-{j}]",
                    i + 1,
                    i + 1
                ),
            );
        }
    }
    b.finish(&[
        "TK4 reads the malformed symbol as ty",
        "TK5 takes the index of tx_{i+1} modulo d",
    ])
}

fn triple_point(d: u32) -> Presentation {
    let mut b = Builder::new(&["gl", "tx0", "tx1", "tx2"]);
    b.rel("HK1", &format!("(tx0*gl)*(tx1*gl)*(tx2*gl)*gl^{}", d - 3));
    for i in 0..3 {
        b.rel(format!("HK2_{i}"), &format!("[(gl*tx{i})^{d},tx{i}]"));
    }
    for i in 0..2 {
        for j in 1..d {
            b.rel(
                format!("HK3_{i}_{j}"),
                &format!(
                    "[gl,(gl^{}*tx{i}*gl^-{i})^{j}*gl^-1*(gl^{}*tx{}*gl^-{})^-{j}]",
                    i + 1,
                    i + 2,
                    i + 1,
                    i + 1
                ),
            );
        }
    }
    b.rel("HK4", "[gl,tx2]");
    b.rel("HK5", "[gl,tx0]");
    b.finish(&[])
}

/// The named presentation. `d ≥ 2` throughout, `d > 3` for `TriplePoint`,
/// `0 < h < d` for `Kh`; `B3S2` and `Artin244` ignore `d`.
pub fn builtin_presentation(name: BuiltinName, d: u32, h: Option<u32>) -> Result<Presentation, GroupError> {
    let bad = |m: &str| Err(GroupError::BadParameters(m.to_string()));
    let needs_d = !matches!(name, BuiltinName::B3S2 | BuiltinName::Artin244);
    if needs_d && d < 2 {
        return bad("d must be at least 2");
    }
    Ok(match name {
        BuiltinName::G => arrangement(None),
        BuiltinName::Gtilde => arrangement(Some(d)),
        BuiltinName::K1hat => k1hat(d),
        BuiltinName::Ktilde => ktilde(d),
        BuiltinName::Kh => {
            let Some(h) = h.filter(|&h| h > 0 && h < d) else {
                return bad("Kh needs 0 < h < d");
            };
            let killed: Vec<String> = (1..d).filter(|&j| j != h).map(|j| format!("tx{j}")).collect();
            let killed: Vec<&str> = killed.iter().map(String::as_str).collect();
            kill_generators(&ktilde(d), &killed)?
        }
        BuiltinName::TriplePoint => {
            if d <= 3 {
                return bad("TriplePoint needs d > 3");
            }
            triple_point(d)
        }
        BuiltinName::B3S2 => {
            let mut b = Builder::new(&["s1", "s2"]);
            b.rel("braid", "s1*s2*s1*s2^-1*s1^-1*s2^-1");
            b.rel("sphere", "s1*s2^2*s1");
            b.finish(&[])
        }
        BuiltinName::Artin244 => {
            let mut b = Builder::new(&["a", "b", "c"]);
            b.rel("m_ab=2", "[a,b]");
            b.rel("m_bc=4", "(b*c)^2*(c*b)^-2");
            b.rel("m_ca=4", "(c*a)^2*(a*c)^-2");
            b.finish(&["convention: exponents 2, 4, 4 on the pairs (a,b), (b,c), (c,a)"])
        }
    })
}

fn eliminate(p: &Presentation, gen: &str, label: &str) -> Result<Presentation, GroupError> {
    let g = p.gen_index(gen).ok_or_else(|| GroupError::UnknownGenerator(gen.into()))?;
    let r = p
        .label_index(label)
        .ok_or_else(|| GroupError::BadParameters(format!("no relator {label}")))?;
    tietze_eliminate(p, g, r)
}

/// Reidemeister–Schreier on `Gtilde(d)` for `gy ↦ 1`, followed by the
/// eliminations of the first kernel lemma. Generators come out as
/// `gx, gl, tx, ty`, the order of the built-in `K1hat`.
pub fn derive_k1hat(d: u32) -> Result<Presentation, GroupError> {
    let gt = builtin_presentation(BuiltinName::Gtilde, d, None)?;
    let chi = CyclicCharacter::indicator(&gt, "gy", d)?;
    let mut p = reidemeister_schreier(&gt, &chi)?;
    p = eliminate(&p, &format!("gy_pow{d}"), "G8@0")?;
    for j in 0..d - 1 {
        p = eliminate(&p, &format!("gx_{}", j + 1), &format!("G4@{j}"))?;
    }
    let killed: Vec<String> = (1..d).map(|j| format!("ty_{j}")).collect();
    let killed: Vec<&str> = killed.iter().map(String::as_str).collect();
    p = kill_generators(&p, &killed)?;
    for j in 0..d - 1 {
        p = eliminate(&p, &format!("gl_{}", j + 1), &format!("G3@{j}"))?;
        p = eliminate(&p, &format!("tx_{}", j + 1), &format!("G2@{j}"))?;
    }
    let p = p
        .drop_trivial()
        .rename(&[("gx_0", "gx"), ("gl_0", "gl"), ("tx_0", "tx"), ("ty_0", "ty")])?
        .reorder(&["gx", "gl", "tx", "ty"])?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::abelianize;

    #[test]
    fn counts() {
        for d in 2..=6 {
            let g = builtin_presentation(BuiltinName::G, d, None).unwrap();
            assert_eq!((g.num_gens(), g.num_rels()), (5, 6));
            let k = builtin_presentation(BuiltinName::K1hat, d, None).unwrap();
            assert_eq!((k.num_gens(), k.num_rels()), (4, 6 + d as usize - 1));
            let t = builtin_presentation(BuiltinName::Ktilde, d, None).unwrap();
            assert_eq!(t.num_gens(), d as usize + 2);
            assert_eq!(t.num_rels(), (d * d + d + 2) as usize);
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(builtin_presentation(BuiltinName::Kh, 4, None).is_err());
        assert!(builtin_presentation(BuiltinName::Kh, 4, Some(4)).is_err());
        assert!(builtin_presentation(BuiltinName::TriplePoint, 3, None).is_err());
        assert!(builtin_presentation(BuiltinName::G, 1, None).is_err());
        assert_eq!("kh".parse::<BuiltinName>().unwrap(), BuiltinName::Kh);
    }

    #[test]
    fn derived_matches_builtin_abelianization() {
        for d in 2..=4 {
            let derived = derive_k1hat(d).unwrap();
            assert_eq!(derived.gens(), &["gx", "gl", "tx", "ty"]);
            let builtin = builtin_presentation(BuiltinName::K1hat, d, None).unwrap();
            assert_eq!(abelianize(&derived), abelianize(&builtin));
        }
    }
}
