//! Generators, words of the free monoid, and the degree-lexicographic order.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{AnickError, Result};

/// Index of a generator in its [`Alphabet`]. The index *is* the generator's
/// position in the global total order, so comparing letters compares keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u16);

impl Letter {
    pub fn index(self) -> usize {
        usize::from(self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Vertex,
    Edge,
    GhostEdge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub kind: GeneratorKind,
    pub order_key: usize,
}

/// A finite, totally ordered generating set.
///
/// Edges and ghost edges are paired by name: the ghost of `e` is `e*`.
/// Alphabets that are not built from a graph use vertex-kind letters only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    generators: Vec<Generator>,
    by_name: HashMap<String, Letter>,
}

impl Alphabet {
    /// Builds an alphabet whose order is the order of `gens` (first is smallest).
    pub fn new<S: Into<String>>(gens: impl IntoIterator<Item = (S, GeneratorKind)>) -> Result<Self> {
        let mut generators = Vec::new();
        let mut by_name = HashMap::new();
        for (i, (name, kind)) in gens.into_iter().enumerate() {
            let name = name.into();
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(AnickError::InvalidAlphabet(format!("bad generator name {name:?}")));
            }
            let key = u16::try_from(i)
                .map_err(|_| AnickError::InvalidAlphabet("too many generators".into()))?;
            if by_name.insert(name.clone(), Letter(key)).is_some() {
                return Err(AnickError::InvalidAlphabet(format!("duplicate generator `{name}`")));
            }
            generators.push(Generator {
                name,
                kind,
                order_key: i,
            });
        }
        let alphabet = Alphabet {
            generators,
            by_name,
        };
        alphabet.check_pairing()?;
        Ok(alphabet)
    }

    /// Vertex-kind letters in ascending order.
    pub fn plain(names: &[&str]) -> Result<Self> {
        Alphabet::new(names.iter().map(|n| (*n, GeneratorKind::Vertex)))
    }

    fn check_pairing(&self) -> Result<()> {
        for g in &self.generators {
            match g.kind {
                GeneratorKind::Edge => {
                    let ghost = format!("{}*", g.name);
                    match self.get(&ghost).map(|l| self.generator(l).kind) {
                        Some(GeneratorKind::GhostEdge) => {}
                        _ => {
                            return Err(AnickError::InvalidAlphabet(format!(
                                "edge `{}` has no ghost `{ghost}`",
                                g.name
                            )))
                        }
                    }
                }
                GeneratorKind::GhostEdge => {
                    let edge = g.name.strip_suffix('*').unwrap_or("");
                    match self.get(edge).map(|l| self.generator(l).kind) {
                        Some(GeneratorKind::Edge) => {}
                        _ => {
                            return Err(AnickError::InvalidAlphabet(format!(
                                "ghost edge `{}` has no edge",
                                g.name
                            )))
                        }
                    }
                }
                GeneratorKind::Vertex => {}
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.generators.len()).map(|i| Letter(i as u16))
    }

    pub fn generator(&self, l: Letter) -> &Generator {
        &self.generators[l.index()]
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.generators[l.index()].name
    }

    pub fn get(&self, name: &str) -> Option<Letter> {
        self.by_name.get(name).copied()
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.get(name)
            .ok_or_else(|| AnickError::UnknownGenerator(name.to_string()))
    }

    /// Parses a whitespace-separated word; `1` or the empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::empty());
        }
        text.split_whitespace()
            .map(|t| self.letter(t))
            .collect::<Result<Vec<_>>>()
            .map(Word::from)
    }

    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|l| self.name(*l))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A word in the free monoid; the empty word is the identity.
///
/// `Ord` on words is the degree-lexicographic order: shorter words are
/// smaller, words of equal length compare letter by letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    /// Letters `start..end` as a new word.
    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.slice(start, self.len())
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        self.0.starts_with(&other.0)
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        self.0.ends_with(&other.0)
    }

    /// Start positions of every occurrence of `pat` in `self`.
    pub fn occurrences<'a>(&'a self, pat: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = pat.len();
        (0..=self.len().saturating_sub(n))
            .filter(move |&i| n <= self.len() && self.0[i..i + n] == pat.0[..])
    }

    pub fn contains(&self, pat: &Word) -> bool {
        self.occurrences(pat).next().is_some()
    }

    /// `prefix · replacement · suffix` where the removed window is `start..start+len`.
    pub fn splice(&self, start: usize, len: usize, replacement: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() - len + replacement.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&replacement.0);
        v.extend_from_slice(&self.0[start + len..]);
        Word(v)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Word(v)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_words(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| format!("x{}", l.0)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Degree-lexicographic comparison.
pub fn cmp_words(a: &Word, b: &Word) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

/// Compares the concatenations `a1·a2` and `b1·b2` without allocating.
pub fn cmp_concat(a1: &Word, a2: &Word, b1: &Word, b2: &Word) -> Ordering {
    let la = a1.len() + a2.len();
    let lb = b1.len() + b2.len();
    la.cmp(&lb).then_with(|| {
        a1.0.iter()
            .chain(a2.0.iter())
            .cmp(b1.0.iter().chain(b2.0.iter()))
    })
}

/// All words of length exactly `len` over `alphabet`, ascending.
pub fn all_words(alphabet_size: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alphabet_size);
        for w in &out {
            for l in 0..alphabet_size {
                let mut w2 = w.clone();
                w2.push(Letter(l as u16));
                next.push(w2);
            }
        }
        out = next;
    }
    out
}
