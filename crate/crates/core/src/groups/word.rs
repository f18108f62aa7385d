//! Freely reduced words over numbered generators.

use std::fmt;

/// A letter is `g + 1` for generator `g` and `-(g + 1)` for its inverse.
pub type Letter = i32;

pub fn letter(gen: usize, positive: bool) -> Letter {
    let l = gen as i32 + 1;
    if positive {
        l
    } else {
        -l
    }
}

pub fn generator_of(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

/// Freely reduced word; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: usize) -> Self {
        Word(vec![letter(g, true)])
    }

    /// Reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            assert!(l != 0, "0 is not a letter");
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|l| -l).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.0);
        }
        Word::from_letters(letters)
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(u: &Self, v: &Self) -> Self {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    /// `u w u^-1`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.inverse())
    }

    /// Splits as `c · core · c^-1` with `core` cyclically reduced.
    pub fn cyclic_reduction(&self) -> (Word, Word) {
        let l = &self.0;
        let mut k = 0;
        while l.len() >= 2 * (k + 1) && l[k] == -l[l.len() - 1 - k] {
            k += 1;
        }
        (Word(l[..k].to_vec()), Word(l[k..l.len() - k].to_vec()))
    }

    /// Exponent sum of each of `n` generators.
    pub fn exponent_sums(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for &l in &self.0 {
            v[generator_of(l)] += l.signum() as i64;
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&l| generator_of(l)).max()
    }

    /// Replaces every occurrence of generator `g` by `image` (inverse letters
    /// by its inverse).
    pub fn substitute(&self, g: usize, image: &Word) -> Word {
        let inv = image.inverse();
        let mut out = Vec::new();
        for &l in &self.0 {
            if generator_of(l) == g {
                out.extend_from_slice(if l > 0 { &image.0 } else { &inv.0 });
            } else {
                out.push(l);
            }
        }
        Word::from_letters(out)
    }

    /// Applies a map on generators; `None` deletes the generator.
    pub fn map_generators(&self, f: impl Fn(usize) -> Option<usize>) -> Word {
        Word::from_letters(
            self.0
                .iter()
                .filter_map(|&l| f(generator_of(l)).map(|g| letter(g, l > 0))),
        )
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> WordDisplay<'a> {
        WordDisplay { word: self, names }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.word.0;
        if l.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < l.len() {
            let mut j = i;
            while j < l.len() && l[j] == l[i] {
                j += 1;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = &self.names[generator_of(l[i])];
            let e = (j - i) as i64 * l[i].signum() as i64;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
            i = j;
        }
        Ok(())
    }
}
