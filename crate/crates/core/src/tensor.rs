//! Elements of the free modules `V⁽ⁿ⁾k ⊗ A`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::field::Scalar;
use crate::word::{cmp_concat, Alphabet, Word};

/// A basis element `chain ⊗ tail` with `tail` irreducible.
///
/// Ordered by the concatenated word `chain·tail`; for chains of a single
/// degree distinct basis elements have distinct concatenations, the chain
/// length only breaks ties in degenerate inputs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisTerm {
    pub chain: Word,
    pub tail: Word,
}

impl BasisTerm {
    pub fn new(chain: Word, tail: Word) -> Self {
        BasisTerm { chain, tail }
    }

    pub fn word(&self) -> Word {
        self.chain.concat(&self.tail)
    }

    pub fn len(&self) -> usize {
        self.chain.len() + self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        format!("{} ⊗ {}", alphabet.render(&self.chain), alphabet.render(&self.tail))
    }
}

impl Ord for BasisTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_concat(&self.chain, &self.tail, &other.chain, &other.tail)
            .then_with(|| self.chain.len().cmp(&other.chain.len()))
    }
}

impl PartialOrd for BasisTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite sum `Σ c · (chain ⊗ tail)` in a fixed homological degree.
///
/// Degree `-1` stands for the algebra itself: every chain is the empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement<S: Scalar> {
    degree: i32,
    terms: BTreeMap<BasisTerm, S>,
}

impl<S: Scalar> TensorElement<S> {
    pub fn zero(degree: i32) -> Self {
        TensorElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(degree: i32, chain: Word, tail: Word, coef: S) -> Self {
        let mut e = Self::zero(degree);
        e.add_term(BasisTerm::new(chain, tail), coef);
        e
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, basis: BasisTerm, coef: S) {
        if coef.is_zero() {
            return;
        }
        match self.terms.remove(&basis) {
            Some(old) => {
                let sum = old + coef;
                if !sum.is_zero() {
                    self.terms.insert(basis, sum);
                }
            }
            None => {
                self.terms.insert(basis, coef);
            }
        }
    }

    pub fn coeff(&self, basis: &BasisTerm) -> Option<&S> {
        self.terms.get(basis)
    }

    /// Terms from the leading one downwards.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&BasisTerm, &S)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&BasisTerm, &S)> {
        self.terms.iter().next_back()
    }

    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.degree, other.degree);
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    /// `self += s · other`
    pub fn add_scaled(&mut self, other: &Self, s: &S) {
        debug_assert_eq!(self.degree, other.degree);
        if s.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone() * s.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.degree);
        out.add_scaled(self, s);
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (b, c) in &self.terms {
            out.terms.insert(b.clone(), -c.clone());
        }
        out
    }

    /// Longest concatenated word among the terms.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(BasisTerm::len).max().unwrap_or(0)
    }

    /// Terms whose tail is the empty word, keyed by chain.
    pub fn unit_tail_part(&self) -> BTreeMap<Word, S> {
        self.terms
            .iter()
            .filter(|(b, _)| b.tail.is_empty())
            .map(|(b, c)| (b.chain.clone(), c.clone()))
            .collect()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != "1" {
                out.push_str(&mag);
                out.push('·');
            }
            out.push('(');
            out.push_str(&b.render(alphabet));
            out.push(')');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Rationals};
    use crate::word::Letter;

    fn w(v: &[u16]) -> Word {
        v.iter().map(|&x| Letter(x)).collect()
    }

    #[test]
    fn ordered_by_concatenation() {
        let a = BasisTerm::new(w(&[0, 1]), w(&[2]));
        let b = BasisTerm::new(w(&[0]), w(&[2, 2]));
        assert_eq!(a.cmp(&b), Ordering::Less);
        let c = BasisTerm::new(w(&[1]), Word::empty());
        assert_eq!(c.cmp(&a), Ordering::Less);
    }

    #[test]
    fn cancellation_and_leading() {
        let q = Rationals;
        let mut e = TensorElement::basis(1, w(&[0, 1]), w(&[2]), q.one());
        e.add_term(BasisTerm::new(w(&[0, 0]), Word::empty()), q.from_i64(3));
        assert_eq!(e.leading().unwrap().0.chain, w(&[0, 1]));
        let f = e.sub(&e.clone());
        assert!(f.is_zero());
        assert_eq!(e.unit_tail_part().len(), 1);
    }
}
