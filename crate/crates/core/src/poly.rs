//! Polynomials of the free associative algebra with exact coefficients.

use std::collections::BTreeMap;

use crate::error::{AnickError, Result};
use crate::field::Scalar;
use crate::word::{Alphabet, Word};

/// A finite sum of words with nonzero coefficients.
///
/// Terms are keyed by word in the degree-lexicographic order, so two
/// polynomials are equal exactly when their stored terms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreePolynomial<S: Scalar> {
    terms: BTreeMap<Word, S>,
}

impl<S: Scalar> Default for FreePolynomial<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> FreePolynomial<S> {
    pub fn zero() -> Self {
        FreePolynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(word: Word, coef: S) -> Self {
        let mut p = Self::zero();
        p.add_term(word, coef);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
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

    /// Adds `coef * word` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Word, coef: S) {
        if coef.is_zero() {
            return;
        }
        match self.terms.remove(&word) {
            Some(old) => {
                let sum = old + coef;
                if !sum.is_zero() {
                    self.terms.insert(word, sum);
                }
            }
            None => {
                self.terms.insert(word, coef);
            }
        }
    }

    pub fn coeff(&self, word: &Word) -> Option<&S> {
        self.terms.get(word)
    }

    /// Terms from the leading one downwards.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &S)> {
        self.terms.iter().rev()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys().rev()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, S)> {
        self.terms.into_iter().rev()
    }

    /// The maximal word with its coefficient.
    pub fn leading_term(&self) -> Result<(&Word, &S)> {
        self.terms
            .iter()
            .next_back()
            .ok_or(AnickError::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        FreePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        FreePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Product in the free algebra: bilinear extension of concatenation.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.concat(b), ca.clone() * cb.clone());
            }
        }
        out
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        FreePolynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
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
            let word = alphabet.render(w);
            if mag == "1" {
                out.push_str(&word);
            } else if w.is_empty() {
                out.push_str(&mag);
            } else {
                out.push_str(&format!("{mag}·{word}"));
            }
        }
        out
    }
}

/// Free functions mirroring the operation names used in the docs.
pub fn poly_add<S: Scalar>(p: &FreePolynomial<S>, q: &FreePolynomial<S>) -> FreePolynomial<S> {
    p.add(q)
}

pub fn poly_mul<S: Scalar>(p: &FreePolynomial<S>, q: &FreePolynomial<S>) -> FreePolynomial<S> {
    p.mul(q)
}

pub fn leading_term<S: Scalar>(p: &FreePolynomial<S>) -> Result<(Word, S)> {
    p.leading_term().map(|(w, c)| (w.clone(), c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Field, Rational, Rationals};
    use crate::word::Letter;

    fn w(v: &[u16]) -> Word {
        v.iter().map(|&x| Letter(x)).collect()
    }

    fn q(n: i64) -> Rational {
        Rationals.from_i64(n)
    }

    #[test]
    fn additive_identity_and_inverse() {
        let p = FreePolynomial::from_terms([(w(&[0, 1]), q(2)), (w(&[1]), q(-3))]);
        assert_eq!(poly_add(&p, &FreePolynomial::zero()), p);
        assert!(poly_add(&p, &p.neg()).is_zero());
    }

    #[test]
    fn cancellation() {
        let u = w(&[1]);
        let p = FreePolynomial::from_terms([(w(&[0, 0]), q(2)), (u.clone(), q(1))]);
        let r = poly_add(&p, &FreePolynomial::monomial(u, q(-1)));
        assert_eq!(r, FreePolynomial::monomial(w(&[0, 0]), q(2)));
    }

    #[test]
    fn unit_and_monomial_products() {
        let one = FreePolynomial::monomial(Word::empty(), q(1));
        let p = FreePolynomial::from_terms([(w(&[0, 1]), q(2)), (w(&[1]), q(-3))]);
        assert_eq!(poly_mul(&one, &p), p);
        let m = poly_mul(
            &FreePolynomial::monomial(w(&[0]), q(1)),
            &FreePolynomial::monomial(w(&[1, 2]), q(1)),
        );
        assert_eq!(m, FreePolynomial::monomial(w(&[0, 1, 2]), q(1)));
    }

    #[test]
    fn distributivity_example() {
        let (a, b, c) = (w(&[0]), w(&[1]), w(&[2]));
        let ab = FreePolynomial::from_terms([(a.clone(), q(1)), (b.clone(), q(1))]);
        let prod = poly_mul(&ab, &FreePolynomial::monomial(c.clone(), q(1)));
        let expect = FreePolynomial::from_terms([(a.concat(&c), q(1)), (b.concat(&c), q(1))]);
        assert_eq!(prod, expect);
    }

    #[test]
    fn leading_term_cases() {
        let p = FreePolynomial::from_terms([(w(&[0]), q(1)), (w(&[2, 1]), q(1))]);
        assert_eq!(leading_term(&p).unwrap(), (w(&[2, 1]), q(1)));
        let single = FreePolynomial::monomial(w(&[1, 1, 0]), q(3));
        assert_eq!(leading_term(&single).unwrap(), (w(&[1, 1, 0]), q(3)));
        let zero: FreePolynomial<Rational> = FreePolynomial::zero();
        assert_eq!(leading_term(&zero), Err(AnickError::ZeroPolynomial));
    }
}
