//! Bounded search for a word in the normal closure of the relators.
//!
//! A state is a cyclically reduced word `w_k` with `w_0 = P_k · C_k w_k C_k^-1`,
//! where `P_k` is the product of the conjugated relators applied so far. A
//! move rotates `w_k`, matches a prefix `s` against a cyclic rotation `s t` of
//! a relator or its inverse, and replaces `s` by `t^-1`. States are expanded
//! best-first by length; reaching the empty word yields a certificate.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use super::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    /// Maximum number of relator applications.
    pub depth: usize,
    /// Maximum number of expanded states.
    pub max_states: usize,
    /// A move may lengthen the word by at most this many letters.
    pub max_growth: usize,
    /// Maximum number of stored states.
    pub max_nodes: usize,
}

impl SearchOptions {
    pub fn with_depth(depth: usize) -> Self {
        SearchOptions { depth, ..Self::default() }
    }
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { depth: 6, max_states: 20_000, max_growth: 12, max_nodes: 2_000_000 }
    }
}

/// One factor `conjugator · r^{±1} · conjugator^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub relator: usize,
    pub label: String,
    pub inverse: bool,
    pub conjugator: String,
}

/// `target` equals the product of `steps` in the free group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub target: String,
    pub steps: Vec<Step>,
}

impl Certificate {
    /// Recomputes the product of conjugated relators and compares freely.
    pub fn verify(&self, p: &Presentation, target: &Word) -> bool {
        let mut prod = Word::identity();
        for s in &self.steps {
            let Some(r) = p.rels().get(s.relator) else { return false };
            let r = if s.inverse { r.inverse() } else { r.clone() };
            let conj = match p.parse_word(&s.conjugator) {
                Ok(c) => c,
                Err(_) => return false,
            };
            prod = prod.mul(&r.conjugate_by(&conj));
        }
        prod == *target
    }

    pub fn depth(&self) -> usize {
        self.steps.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Consequence(Certificate),
    Unknown { explored: usize },
}

impl Outcome {
    pub fn is_consequence(&self) -> bool {
        matches!(self, Outcome::Consequence(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::Consequence(c) => Some(c),
            Outcome::Unknown { .. } => None,
        }
    }
}

/// A cyclic rotation `conj^-1 · r^{±1} · conj` of a relator, freely reduced.
struct Piece {
    relator: usize,
    inverse: bool,
    word: Vec<Letter>,
    conj: Word,
}

fn pieces(p: &Presentation) -> HashMap<Letter, Vec<Piece>> {
    let mut out: HashMap<Letter, Vec<Piece>> = HashMap::new();
    for (k, r) in p.rels().iter().enumerate() {
        for inverse in [false, true] {
            let rr = if inverse { r.inverse() } else { r.clone() };
            let (c, core) = rr.cyclic_reduction();
            let n = core.len();
            let mut seen = std::collections::HashSet::new();
            for q in 0..n {
                let rot: Vec<Letter> =
                    core.letters()[q..].iter().chain(&core.letters()[..q]).copied().collect();
                if !seen.insert(rot.clone()) {
                    continue;
                }
                // core = c^-1 rr c, and rot = A^-1 core A with A = core[..q].
                let a = Word::from_letters(core.letters()[..q].iter().copied());
                let conj = c.mul(&a);
                debug_assert_eq!(Word::from_letters(rot.iter().copied()), rr.conjugate_by(&conj.inverse()));
                out.entry(rot[0]).or_default().push(Piece { relator: k, inverse, word: rot, conj });
            }
        }
    }
    out
}

struct Node {
    word: Word,
    outer: Word,
    depth: usize,
    parent: Option<usize>,
    step: Option<(usize, bool, Word)>,
}

/// Least rotation, used to identify cyclic words.
fn canonical(w: &Word) -> Vec<Letter> {
    let l = w.letters();
    (0..l.len().max(1))
        .map(|q| l[q.min(l.len())..].iter().chain(&l[..q.min(l.len())]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn consequence_search(p: &Presentation, w: &Word, opts: &SearchOptions) -> Outcome {
    let table = pieces(p);
    let (c0, core0) = w.cyclic_reduction();
    let mut nodes = vec![Node { word: core0.clone(), outer: c0, depth: 0, parent: None, step: None }];
    let mut best: HashMap<Vec<Letter>, usize> = HashMap::from([(canonical(&core0), 0)]);
    let mut heap = BinaryHeap::from([Reverse((core0.len(), 0usize, 0usize))]);
    let mut explored = 0;
    while let Some(Reverse((_, _, id))) = heap.pop() {
        if nodes[id].word.is_empty() {
            return Outcome::Consequence(certificate(p, w, &nodes, id));
        }
        if explored >= opts.max_states {
            break;
        }
        explored += 1;
        if nodes[id].depth >= opts.depth {
            continue;
        }
        let cur = nodes[id].word.letters().to_vec();
        let n = cur.len();
        for q in 0..n {
            let rot: Vec<Letter> = cur[q..].iter().chain(&cur[..q]).copied().collect();
            let Some(cands) = table.get(&rot[0]) else { continue };
            for piece in cands {
                let k = rot.iter().zip(&piece.word).take_while(|(a, b)| a == b).count();
                let t = &piece.word[k..];
                let next = Word::from_letters(t.iter().rev().map(|l| -l).chain(rot[k..].iter().copied()));
                if next.len() > n + opts.max_growth || nodes.len() >= opts.max_nodes {
                    continue;
                }
                let (c, core) = next.cyclic_reduction();
                let depth = nodes[id].depth + 1;
                let key = canonical(&core);
                if best.get(&key).is_some_and(|&d| d <= depth) {
                    continue;
                }
                best.insert(key, depth);
                let a = Word::from_letters(cur[..q].iter().copied());
                let outer_a = nodes[id].outer.mul(&a);
                let step_conj = outer_a.mul(&piece.conj.inverse());
                let len = core.len();
                nodes.push(Node {
                    word: core,
                    outer: outer_a.mul(&c),
                    depth,
                    parent: Some(id),
                    step: Some((piece.relator, piece.inverse, step_conj)),
                });
                let nid = nodes.len() - 1;
                heap.push(Reverse((len, depth, nid)));
            }
        }
    }
    Outcome::Unknown { explored }
}

fn certificate(p: &Presentation, w: &Word, nodes: &[Node], leaf: usize) -> Certificate {
    let mut steps = Vec::new();
    let mut id = Some(leaf);
    while let Some(i) = id {
        if let Some((relator, inverse, conj)) = &nodes[i].step {
            steps.push(Step {
                relator: *relator,
                label: p.labels()[*relator].clone(),
                inverse: *inverse,
                conjugator: p.word_string(conj),
            });
        }
        id = nodes[i].parent;
    }
    steps.reverse();
    Certificate { target: p.word_string(w), steps }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(p: &str, w: &str, depth: usize) -> (Presentation, Word, Outcome) {
        let p: Presentation = p.parse().unwrap();
        let w = p.parse_word(w).unwrap();
        let o = consequence_search(&p, &w, &SearchOptions::with_depth(depth));
        (p, w, o)
    }

    #[test]
    fn commutator_of_square() {
        let (p, w, o) = run("gens: a, b ; rels: [a,b]", "[a^2,b]", 3);
        let c = o.certificate().expect("consequence");
        assert!(c.depth() <= 3);
        assert!(c.verify(&p, &w));
    }

    #[test]
    fn power_of_relator() {
        let (p, w, o) = run("gens: a ; rels: a^2", "a^4", 2);
        let c = o.certificate().unwrap();
        assert_eq!(c.depth(), 2);
        assert!(c.verify(&p, &w));
    }

    #[test]
    fn free_group_unknown() {
        let (_, _, o) = run("gens: a, b", "[a,b]", 8);
        assert!(!o.is_consequence());
    }

    #[test]
    fn tampered_certificate_rejected() {
        let (p, w, o) = run("gens: a, b ; rels: [a,b]", "b*[a,b]*b^-1", 2);
        let mut c = o.certificate().unwrap().clone();
        assert!(c.verify(&p, &w));
        c.steps[0].inverse = !c.steps[0].inverse;
        assert!(!c.verify(&p, &w));
    }
}
