//! Presentations, their text grammar and cyclic characters.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::word::{generator_of, Word};
use super::GroupError;

/// Generators, labelled relators and free-form notes (corrections,
/// conventions). Relators are stored freely reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    gens: Vec<String>,
    rels: Vec<Word>,
    labels: Vec<String>,
    pub notes: Vec<String>,
}

impl Presentation {
    pub fn new(gens: Vec<String>, rels: Vec<Word>) -> Result<Self, GroupError> {
        let labels = (1..=rels.len()).map(|i| format!("r{i}")).collect();
        Self::with_labels(gens, rels, labels)
    }

    pub fn with_labels(
        gens: Vec<String>,
        rels: Vec<Word>,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        let mut seen = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if seen.insert(g.as_str(), i).is_some() {
                return Err(GroupError::DuplicateGenerator(g.clone()));
            }
        }
        for r in &rels {
            if let Some(m) = r.max_generator() {
                if m >= gens.len() {
                    return Err(GroupError::BadLetter { index: m, count: gens.len() });
                }
            }
        }
        if labels.len() != rels.len() {
            return Err(GroupError::BadParameters("one label per relator".into()));
        }
        Ok(Presentation { gens, rels, labels, notes: Vec::new() })
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn rels(&self) -> &[Word] {
        &self.rels
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn num_rels(&self) -> usize {
        self.rels.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parses a word in this presentation's generators.
    pub fn parse_word(&self, s: &str) -> Result<Word, GroupError> {
        let mut p = Parser::new(s, &self.gens);
        let w = p.product()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(w)
    }

    pub fn word_string(&self, w: &Word) -> String {
        w.display(&self.gens).to_string()
    }

    /// Returns a copy with one more relator.
    pub fn with_relator(&self, w: Word, label: impl Into<String>) -> Result<Self, GroupError> {
        let mut rels = self.rels.clone();
        let mut labels = self.labels.clone();
        rels.push(w);
        labels.push(label.into());
        let mut p = Self::with_labels(self.gens.clone(), rels, labels)?;
        p.notes = self.notes.clone();
        Ok(p)
    }

    /// Removes relators that freely reduce to the identity.
    pub fn drop_trivial(&self) -> Self {
        let (rels, labels) = self
            .rels
            .iter()
            .zip(&self.labels)
            .filter(|(r, _)| !r.is_empty())
            .map(|(r, l)| (r.clone(), l.clone()))
            .unzip();
        Presentation { gens: self.gens.clone(), rels, labels, notes: self.notes.clone() }
    }

    /// Renames generators; names missing from `map` are kept.
    pub fn rename(&self, map: &[(&str, &str)]) -> Result<Self, GroupError> {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                map.iter()
                    .find(|(from, _)| from == g)
                    .map(|(_, to)| to.to_string())
                    .unwrap_or_else(|| g.clone())
            })
            .collect();
        let mut p = Self::with_labels(gens, self.rels.clone(), self.labels.clone())?;
        p.notes = self.notes.clone();
        Ok(p)
    }

    /// Reorders generators so the given names come first, in that order.
    pub fn reorder(&self, first: &[&str]) -> Result<Self, GroupError> {
        let mut order: Vec<usize> = Vec::new();
        for name in first {
            order.push(self.gen_index(name).ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?);
        }
        for i in 0..self.gens.len() {
            if !order.contains(&i) {
                order.push(i);
            }
        }
        let mut new_index = vec![0; order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let gens = order.iter().map(|&i| self.gens[i].clone()).collect();
        let rels = self.rels.iter().map(|r| r.map_generators(|g| Some(new_index[g]))).collect();
        let mut p = Self::with_labels(gens, rels, self.labels.clone())?;
        p.notes = self.notes.clone();
        Ok(p)
    }

    pub(crate) fn from_parts(gens: Vec<String>, rels: Vec<Word>, labels: Vec<String>, notes: Vec<String>) -> Self {
        Presentation { gens, rels, labels, notes }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {} ; rels: ", self.gens.join(", "))?;
        for (i, r) in self.rels.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r.display(&self.gens))?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = GroupError;

    /// `gens: a, b ; rels: a^2, [a,b], a*b*a^-1*b^-1`. A relator `u = v`
    /// stands for `u v^-1`.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let (gpart, rpart) = match s.find(';') {
            Some(i) => (&s[..i], &s[i + 1..]),
            None => (s, ""),
        };
        let gpart = gpart.trim();
        let gbody = gpart
            .strip_prefix("gens:")
            .ok_or(GroupError::Parse { pos: 0, msg: "expected 'gens:'".into() })?;
        let gens: Vec<String> = gbody
            .split(',')
            .map(|g| g.trim().to_string())
            .filter(|g| !g.is_empty())
            .collect();
        for g in &gens {
            if !is_ident(g) {
                return Err(GroupError::Parse { pos: 0, msg: format!("bad generator name {g:?}") });
            }
        }
        let rpart = rpart.trim();
        let rels = if rpart.is_empty() {
            Vec::new()
        } else {
            let body = rpart.strip_prefix("rels:").ok_or(GroupError::Parse {
                pos: s.len() - rpart.len(),
                msg: "expected 'rels:'".into(),
            })?;
            let mut p = Parser::new(body, &gens);
            let mut rels = Vec::new();
            p.skip_ws();
            if p.pos < p.src.len() {
                loop {
                    rels.push(p.relation()?);
                    p.skip_ws();
                    if p.eat(b',') {
                        continue;
                    }
                    if p.pos < p.src.len() {
                        return Err(p.err("expected ','"));
                    }
                    break;
                }
            }
            rels
        };
        Presentation::new(gens, rels)
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    matches!(c.next(), Some(ch) if ch.is_ascii_alphabetic() || ch == '_')
        && c.all(|ch| ch.is_ascii_alphanumeric() || ch == '_')
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [String],
}

impl<'a> Parser<'a> {
    fn new(s: &'a str, gens: &'a [String]) -> Self {
        Parser { src: s.as_bytes(), pos: 0, gens }
    }

    fn err(&self, msg: &str) -> GroupError {
        GroupError::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn relation(&mut self) -> Result<Word, GroupError> {
        let lhs = self.product()?;
        if self.eat(b'=') {
            let rhs = self.product()?;
            Ok(lhs.mul(&rhs.inverse()))
        } else {
            Ok(lhs)
        }
    }

    fn product(&mut self) -> Result<Word, GroupError> {
        let mut w = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    w = w.mul(&self.factor()?);
                }
                // Juxtaposition also concatenates.
                Some(c) if c == b'(' || c == b'[' || c.is_ascii_alphabetic() || c == b'_' => {
                    w = w.mul(&self.factor()?);
                }
                _ => return Ok(w),
            }
        }
    }

    fn factor(&mut self) -> Result<Word, GroupError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.integer()?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<i64, GroupError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| GroupError::Parse { pos: start, msg: "expected integer".into() })
    }

    fn atom(&mut self) -> Result<Word, GroupError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.product()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.product()?;
                if !self.eat(b',') {
                    return Err(self.err("expected ','"));
                }
                let v = self.product()?;
                if !self.eat(b']') {
                    return Err(self.err("expected ']'"));
                }
                Ok(Word::commutator(&u, &v))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
                let g = self
                    .gens
                    .iter()
                    .position(|g| g == name)
                    .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))?;
                Ok(Word::gen(g))
            }
            _ => Err(self.err("expected generator, '(', '[' or '1'")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PresentationJson {
    gens: Vec<String>,
    rels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    notes: Vec<String>,
}

impl Serialize for Presentation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PresentationJson {
            gens: self.gens.clone(),
            rels: self.rels.iter().map(|r| self.word_string(r)).collect(),
            labels: Some(self.labels.clone()),
            notes: self.notes.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Presentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = PresentationJson::deserialize(d)?;
        let shell = Presentation::new(j.gens.clone(), Vec::new()).map_err(D::Error::custom)?;
        let rels = j
            .rels
            .iter()
            .map(|r| {
                let mut p = Parser::new(r, &shell.gens);
                let w = p.relation()?;
                p.skip_ws();
                if p.pos < p.src.len() {
                    return Err(p.err("trailing input"));
                }
                Ok(w)
            })
            .collect::<Result<Vec<_>, GroupError>>()
            .map_err(D::Error::custom)?;
        let mut p = match j.labels {
            Some(l) => Presentation::with_labels(j.gens, rels, l),
            None => Presentation::new(j.gens, rels),
        }
        .map_err(D::Error::custom)?;
        p.notes = j.notes;
        Ok(p)
    }
}

/// A homomorphism onto `Z/d` given by generator images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicCharacter {
    modulus: u32,
    images: Vec<i64>,
}

impl CyclicCharacter {
    /// Checks that every relator of `p` maps to 0.
    pub fn new(p: &Presentation, modulus: u32, images: Vec<i64>) -> Result<Self, GroupError> {
        if modulus == 0 {
            return Err(GroupError::BadParameters("modulus must be positive".into()));
        }
        if images.len() != p.num_gens() {
            return Err(GroupError::BadParameters("one image per generator".into()));
        }
        let m = modulus as i64;
        let images: Vec<i64> = images.iter().map(|v| v.rem_euclid(m)).collect();
        let ch = CyclicCharacter { modulus, images };
        for (r, l) in p.rels().iter().zip(p.labels()) {
            let v = ch.eval(r);
            if v != 0 {
                return Err(GroupError::NotCharacter { label: l.clone(), value: v, modulus });
            }
        }
        Ok(ch)
    }

    /// Character sending one named generator to 1 and the others to 0.
    pub fn indicator(p: &Presentation, gen: &str, modulus: u32) -> Result<Self, GroupError> {
        let g = p.gen_index(gen).ok_or_else(|| GroupError::UnknownGenerator(gen.into()))?;
        let mut images = vec![0; p.num_gens()];
        images[g] = 1;
        Self::new(p, modulus, images)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn images(&self) -> &[i64] {
        &self.images
    }

    pub fn eval(&self, w: &Word) -> i64 {
        let m = self.modulus as i64;
        w.letters()
            .iter()
            .map(|&l| self.images[generator_of(l)] * l.signum() as i64)
            .sum::<i64>()
            .rem_euclid(m)
    }
}
