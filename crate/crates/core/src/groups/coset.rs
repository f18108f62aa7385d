//! Todd–Coxeter coset enumeration (HLT with lookahead) and derived series of
//! the resulting permutation group.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use super::word::{generator_of, Letter, Word};
use super::GroupError;

pub const DEFAULT_COSET_CAP: usize = 1_000_000;

/// Result of an enumeration. When `complete`, `perms[g][c]` is the coset
/// reached from `c` by generator `g`, cosets numbered `0..index` in order of
/// first definition with coset 0 the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTable {
    pub complete: bool,
    pub cap: usize,
    pub index: Option<usize>,
    pub defined: usize,
    pub perms: Vec<Vec<u32>>,
}

fn col(l: Letter) -> usize {
    2 * generator_of(l) + usize::from(l < 0)
}

struct Enumerator {
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    cap: usize,
    cols: usize,
    defined: usize,
}

enum Scan {
    Done,
    NoSpace,
}

impl Enumerator {
    fn new(gens: usize, cap: usize) -> Self {
        let cols = 2 * gens;
        // Index 0 is a sentinel for "undefined".
        Enumerator {
            table: vec![vec![0; cols], vec![0; cols]],
            parent: vec![0, 1],
            live: 1,
            cap,
            cols,
            defined: 1,
        }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> bool {
        if self.live >= self.cap {
            return false;
        }
        let n = self.table.len();
        self.table.push(vec![0; self.cols]);
        self.parent.push(n);
        self.table[c][x] = n;
        self.table[n][x ^ 1] = c;
        self.live += 1;
        self.defined += 1;
        true
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut k = c;
        while self.parent[k] != r {
            let next = self.parent[k];
            self.parent[k] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let a = self.rep(k);
        let b = self.rep(l);
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let g = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.table[g][x];
                if d == 0 {
                    continue;
                }
                self.table[d][x ^ 1] = 0;
                let mu = self.rep(g);
                let nu = self.rep(d);
                if self.table[mu][x] != 0 {
                    let t = self.table[mu][x];
                    self.merge(nu, t, &mut queue);
                } else if self.table[nu][x ^ 1] != 0 {
                    let t = self.table[nu][x ^ 1];
                    self.merge(mu, t, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][x ^ 1] = mu;
                }
            }
        }
        self.live -= queue.len();
    }

    /// Scans `w` from `c`, defining cosets when `fill` is set.
    fn scan(&mut self, c: usize, w: &[Letter], fill: bool) -> Scan {
        if w.is_empty() {
            return Scan::Done;
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() as isize - 1;
        loop {
            while (i as isize) <= j && self.table[f][col(w[i])] != 0 {
                f = self.table[f][col(w[i])];
                i += 1;
            }
            if i as isize > j {
                if f != c {
                    self.coincidence(f, c);
                }
                return Scan::Done;
            }
            while j >= i as isize && self.table[b][col(w[j as usize]) ^ 1] != 0 {
                b = self.table[b][col(w[j as usize]) ^ 1];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Scan::Done;
            }
            if j == i as isize {
                let x = col(w[i]);
                self.table[f][x] = b;
                self.table[b][x ^ 1] = f;
                return Scan::Done;
            }
            if !fill {
                return Scan::Done;
            }
            if !self.define(f, col(w[i])) {
                return Scan::NoSpace;
            }
        }
    }

    /// Scans every live coset under every relator without defining.
    fn lookahead(&mut self, rels: &[Word]) {
        let mut c = 1;
        while c < self.table.len() {
            for r in rels {
                if !self.is_live(c) {
                    break;
                }
                self.scan(c, r.letters(), false);
            }
            c += 1;
        }
    }

    /// Scan-and-fill with one lookahead pass on exhaustion.
    fn scan_fill(&mut self, c: usize, w: &[Letter], rels: &[Word]) -> bool {
        match self.scan(c, w, true) {
            Scan::Done => true,
            Scan::NoSpace => {
                self.lookahead(rels);
                if !self.is_live(c) {
                    return true;
                }
                matches!(self.scan(c, w, true), Scan::Done)
            }
        }
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup`.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], cap: usize) -> CosetTable {
    let cap = cap.max(1);
    let rels: Vec<Word> = p.rels().iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut e = Enumerator::new(p.num_gens(), cap);
    let incomplete = |e: &Enumerator| CosetTable {
        complete: false,
        cap,
        index: None,
        defined: e.defined,
        perms: Vec::new(),
    };
    for h in subgroup {
        if !e.scan_fill(1, h.letters(), &rels) {
            return incomplete(&e);
        }
    }
    let mut c = 1;
    while c < e.table.len() {
        for r in &rels {
            if !e.is_live(c) {
                break;
            }
            if !e.scan_fill(c, r.letters(), &rels) {
                return incomplete(&e);
            }
        }
        for x in 0..e.cols {
            if e.is_live(c) && e.table[c][x] == 0 && !e.define(c, x) {
                e.lookahead(&rels);
                if e.is_live(c) && e.table[c][x] == 0 && !e.define(c, x) {
                    return incomplete(&e);
                }
            }
        }
        c += 1;
    }
    let live: Vec<usize> = (1..e.table.len()).filter(|&c| e.is_live(c)).collect();
    let mut number = vec![u32::MAX; e.table.len()];
    for (i, &c) in live.iter().enumerate() {
        number[c] = i as u32;
    }
    let perms = (0..p.num_gens())
        .map(|g| live.iter().map(|&c| number[e.table[c][2 * g]]).collect())
        .collect();
    CosetTable { complete: true, cap, index: Some(live.len()), defined: e.defined, perms }
}

type Perm = Vec<u32>;

fn compose(a: &Perm, b: &Perm) -> Perm {
    // Apply `a` then `b`.
    a.iter().map(|&i| b[i as usize]).collect()
}

fn invert(a: &Perm) -> Perm {
    let mut out = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        out[j as usize] = i as u32;
    }
    out
}

fn closure(gens: &[Perm], degree: usize) -> HashSet<Perm> {
    let id: Perm = (0..degree as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(e) = stack.pop() {
        for g in gens {
            let n = compose(&e, g);
            if seen.insert(n.clone()) {
                stack.push(n);
            }
        }
    }
    seen
}

/// Normal closure of `⟨s⟩` under conjugation by `by`; returns generators and
/// elements.
fn normal_closure(mut s: Vec<Perm>, by: &[Perm], degree: usize) -> (Vec<Perm>, HashSet<Perm>) {
    let mut elems = closure(&s, degree);
    loop {
        let mut added = false;
        'outer: for i in 0..s.len() {
            for x in by {
                let c = compose(&compose(&invert(x), &s[i]), x);
                if !elems.contains(&c) {
                    s.push(c);
                    added = true;
                    break 'outer;
                }
            }
        }
        if !added {
            return (s, elems);
        }
        elems = closure(&s, degree);
    }
}

/// Orders of `G ⊇ G' ⊇ G'' ⊇ …` for the permutation group of a complete
/// table, ending at the first repeated order.
pub fn derived_series_finite(t: &CosetTable) -> Result<Vec<usize>, GroupError> {
    if !t.complete {
        return Err(GroupError::IncompleteTable);
    }
    let degree = t.index.unwrap_or(0);
    let mut gens: Vec<Perm> = t.perms.clone();
    let mut orders = vec![closure(&gens, degree).len()];
    loop {
        let comms: Vec<Perm> = gens
            .iter()
            .enumerate()
            .flat_map(|(i, a)| {
                gens[i + 1..].iter().map(move |b| {
                    compose(&compose(&compose(a, b), &invert(a)), &invert(b))
                })
            })
            .collect();
        let (next, elems) = normal_closure(comms, &gens, degree);
        let n = elems.len();
        if n == *orders.last().unwrap_or(&0) {
            break;
        }
        orders.push(n);
        if n == 1 {
            break;
        }
        gens = next;
    }
    Ok(orders)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(s: &str) -> Option<usize> {
        let p: Presentation = s.parse().unwrap();
        todd_coxeter(&p, &[], DEFAULT_COSET_CAP).index
    }

    #[test]
    fn small_orders() {
        assert_eq!(order("gens: a ; rels: a^5"), Some(5));
        assert_eq!(order("gens: a, b ; rels: a^2, b^2, (a*b)^3"), Some(6));
        assert_eq!(order("gens: a, b ; rels: a^2, b^3, (a*b)^5"), Some(60));
        assert_eq!(order("gens: a, b ; rels: a, b"), Some(1));
    }

    #[test]
    fn relators_act_trivially() {
        let p: Presentation = "gens: a, b ; rels: a^2, b^3, (a*b)^3".parse().unwrap();
        let t = todd_coxeter(&p, &[], 1000);
        assert_eq!(t.index, Some(12));
        for r in p.rels() {
            for c in 0..12u32 {
                let mut x = c;
                for &l in r.letters() {
                    let perm = &t.perms[generator_of(l)];
                    x = if l > 0 { perm[x as usize] } else { perm.iter().position(|&y| y == x).unwrap() as u32 };
                }
                assert_eq!(x, c);
            }
        }
        assert_eq!(derived_series_finite(&t).unwrap(), vec![12, 4, 1]);
    }

    #[test]
    fn subgroup_index_and_cap() {
        let p: Presentation = "gens: a, b ; rels: a^2, b^2, (a*b)^3".parse().unwrap();
        let a = Word::gen(0);
        assert_eq!(todd_coxeter(&p, &[a], 100).index, Some(3));
        let free: Presentation = "gens: a, b".parse().unwrap();
        let t = todd_coxeter(&free, &[], 50);
        assert!(!t.complete);
        assert!(matches!(derived_series_finite(&t), Err(GroupError::IncompleteTable)));
    }

    #[test]
    fn abelian_series() {
        let p: Presentation = "gens: a, b ; rels: a^3, b^2, [a,b]".parse().unwrap();
        let t = todd_coxeter(&p, &[], 100);
        assert_eq!(derived_series_finite(&t).unwrap(), vec![6, 1]);
    }
}
