//! Rewrite systems presented by a Gröbner–Shirshov basis.
//!
//! A rule `lhs -> rhs` encodes the basis element `lhs - rhs`, where `lhs` is
//! its leading word. Normal forms are computed by repeated rewriting; the
//! composition check decides whether the rules form a Gröbner–Shirshov basis
//! by resolving every overlap of two leading words.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use crate::error::{AnickError, Result};
use crate::field::{Field, Scalar};
use crate::poly::FreePolynomial;
use crate::word::{Alphabet, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule<S: Scalar> {
    pub lhs: Word,
    pub rhs: FreePolynomial<S>,
}

impl<S: Scalar> RewriteRule<S> {
    pub fn new(lhs: Word, rhs: FreePolynomial<S>) -> Self {
        RewriteRule { lhs, rhs }
    }
}

/// One occurrence of a rule's left-hand side inside a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Redex {
    pub position: usize,
    pub rule: usize,
}

/// An overlap of two leading words whose two reductions disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Overlap<S: Scalar> {
    pub left_rule: usize,
    pub right_rule: usize,
    pub word: Word,
    /// Normal form of (first reduction) − (second reduction).
    pub difference: FreePolynomial<S>,
}

/// An immutable set of rewrite rules over an alphabet.
pub struct RewriteSystem<F: Field> {
    field: F,
    alphabet: Alphabet,
    rules: Vec<RewriteRule<F::Elem>>,
    by_lhs: HashMap<Word, usize>,
    lhs_lengths: Vec<usize>,
    nf_cache: Mutex<HashMap<Word, FreePolynomial<F::Elem>>>,
}

impl<F: Field> Clone for RewriteSystem<F> {
    fn clone(&self) -> Self {
        RewriteSystem {
            field: self.field.clone(),
            alphabet: self.alphabet.clone(),
            rules: self.rules.clone(),
            by_lhs: self.by_lhs.clone(),
            lhs_lengths: self.lhs_lengths.clone(),
            nf_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl<F: Field> fmt::Debug for RewriteSystem<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("field", &self.field.name())
            .field("rules", &self.rules.len())
            .finish()
    }
}

impl<F: Field> RewriteSystem<F> {
    /// Validates and builds a system.
    ///
    /// Every rhs monomial must be strictly below its lhs, lhs words must be
    /// nonempty and distinct, and no lhs may occur inside another one.
    pub fn new(field: F, alphabet: Alphabet, rules: Vec<RewriteRule<F::Elem>>) -> Result<Self> {
        let mut by_lhs = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            let shown = alphabet.render(&r.lhs);
            if r.lhs.is_empty() {
                return Err(AnickError::InvalidRule {
                    lhs: shown,
                    reason: "empty left-hand side".into(),
                });
            }
            if r.lhs.letters().iter().any(|l| l.index() >= alphabet.len())
                || r.rhs
                    .words()
                    .any(|w| w.letters().iter().any(|l| l.index() >= alphabet.len()))
            {
                return Err(AnickError::InvalidRule {
                    lhs: shown,
                    reason: "letter outside the alphabet".into(),
                });
            }
            if let Some(top) = r.rhs.leading_word() {
                if *top >= r.lhs {
                    return Err(AnickError::InvalidRule {
                        lhs: shown,
                        reason: format!(
                            "rhs monomial {} is not below the lhs",
                            alphabet.render(top)
                        ),
                    });
                }
            }
            if by_lhs.insert(r.lhs.clone(), i).is_some() {
                return Err(AnickError::InvalidRule {
                    lhs: shown,
                    reason: "duplicate left-hand side".into(),
                });
            }
        }
        for a in &rules {
            for b in &rules {
                if a.lhs != b.lhs && a.lhs.contains(&b.lhs) {
                    return Err(AnickError::NotReduced {
                        outer: alphabet.render(&a.lhs),
                        inner: alphabet.render(&b.lhs),
                    });
                }
            }
        }
        let lhs_lengths: BTreeSet<usize> = rules.iter().map(|r| r.lhs.len()).collect();
        Ok(RewriteSystem {
            field,
            alphabet,
            rules,
            by_lhs,
            lhs_lengths: lhs_lengths.into_iter().collect(),
            nf_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule<F::Elem>] {
        &self.rules
    }

    pub fn rule_for(&self, lhs: &Word) -> Option<&RewriteRule<F::Elem>> {
        self.by_lhs.get(lhs).map(|&i| &self.rules[i])
    }

    /// The obstruction set: all leading words.
    pub fn obstructions(&self) -> BTreeSet<Word> {
        self.rules.iter().map(|r| r.lhs.clone()).collect()
    }

    pub fn is_obstruction(&self, w: &Word) -> bool {
        self.by_lhs.contains_key(w)
    }

    pub fn max_lhs_len(&self) -> usize {
        self.lhs_lengths.last().copied().unwrap_or(0)
    }

    /// Every occurrence of every lhs in `w`, ordered by position.
    pub fn redexes(&self, w: &Word) -> Vec<Redex> {
        let mut out = Vec::new();
        let letters = w.letters();
        for start in 0..letters.len() {
            for &len in &self.lhs_lengths {
                if start + len > letters.len() {
                    break;
                }
                let window: Word = letters[start..start + len].iter().copied().collect();
                if let Some(&rule) = self.by_lhs.get(&window) {
                    out.push(Redex {
                        position: start,
                        rule,
                    });
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        let letters = w.letters();
        for &len in &self.lhs_lengths {
            if len > letters.len() {
                break;
            }
            for start in 0..=letters.len() - len {
                let window: Word = letters[start..start + len].iter().copied().collect();
                if self.by_lhs.contains_key(&window) {
                    return false;
                }
            }
        }
        true
    }

    /// Rewrites `w` at a given redex.
    pub fn rewrite_at(&self, w: &Word, redex: Redex) -> FreePolynomial<F::Elem> {
        let rule = &self.rules[redex.rule];
        let left = w.prefix(redex.position);
        let right = w.suffix_from(redex.position + rule.lhs.len());
        rule.rhs.sandwich(&left, &right)
    }

    /// One rewriting step: the leftmost occurrence of the greatest lhs that
    /// occurs in `w` is replaced. `None` if `w` is irreducible.
    pub fn reduce_once(&self, w: &Word) -> Option<FreePolynomial<F::Elem>> {
        let redexes = self.redexes(w);
        let best = redexes.iter().copied().max_by(|a, b| {
            self.rules[a.rule]
                .lhs
                .cmp(&self.rules[b.rule].lhs)
                .then(b.position.cmp(&a.position))
        })?;
        Some(self.rewrite_at(w, best))
    }

    /// Normal form of a single word (memoized).
    pub fn normal_form_word(&self, w: &Word) -> FreePolynomial<F::Elem> {
        if let Some(hit) = self.nf_cache.lock().expect("cache poisoned").get(w) {
            return hit.clone();
        }
        let nf = match self.reduce_once(w) {
            None => FreePolynomial::monomial(w.clone(), self.field.one()),
            Some(step) => self.normal_form(&step),
        };
        self.nf_cache
            .lock()
            .expect("cache poisoned")
            .insert(w.clone(), nf.clone());
        nf
    }

    pub fn normal_form(&self, p: &FreePolynomial<F::Elem>) -> FreePolynomial<F::Elem> {
        let mut out = FreePolynomial::zero();
        for (w, c) in p.terms() {
            out.add_assign(&self.normal_form_word(w).scale(c));
        }
        out
    }

    /// Normal form of the product of two words.
    pub fn multiply_words(&self, a: &Word, b: &Word) -> FreePolynomial<F::Elem> {
        self.normal_form_word(&a.concat(b))
    }

    /// Normal form computed with a caller-chosen redex at every step.
    ///
    /// `choose` receives the reducible word and its redexes and returns an
    /// index into the redex list. Not memoized.
    pub fn normal_form_with(
        &self,
        p: &FreePolynomial<F::Elem>,
        mut choose: impl FnMut(&Word, &[Redex]) -> usize,
    ) -> FreePolynomial<F::Elem> {
        let mut work = p.clone();
        let mut done = FreePolynomial::zero();
        loop {
            let Some((w, c)) = work.terms().next().map(|(w, c)| (w.clone(), c.clone())) else {
                break;
            };
            work.add_term(w.clone(), -c.clone());
            let redexes = self.redexes(&w);
            if redexes.is_empty() {
                done.add_term(w, c);
            } else {
                let pick = choose(&w, &redexes).min(redexes.len() - 1);
                work.add_assign(&self.rewrite_at(&w, redexes[pick]).scale(&c));
            }
        }
        done
    }

    /// Resolves every composition (overlap or inclusion) of two leading
    /// words and returns those whose reductions disagree. An empty result
    /// means the rules form a Gröbner–Shirshov basis.
    pub fn check_compositions(&self) -> Vec<Overlap<F::Elem>> {
        let mut failures = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                let (l1, l2) = (&r1.lhs, &r2.lhs);
                // suffix of l1 of length k equals prefix of l2
                for k in 1..l1.len().min(l2.len()) {
                    if l1.letters()[l1.len() - k..] != l2.letters()[..k] {
                        continue;
                    }
                    let tail = l2.suffix_from(k);
                    let head = l1.prefix(l1.len() - k);
                    let word = l1.concat(&tail);
                    let first = r1.rhs.sandwich(&Word::empty(), &tail);
                    let second = r2.rhs.sandwich(&head, &Word::empty());
                    let difference = self.normal_form(&first.sub(&second));
                    if !difference.is_zero() {
                        failures.push(Overlap {
                            left_rule: i,
                            right_rule: j,
                            word,
                            difference,
                        });
                    }
                }
                // l2 strictly inside l1
                if i != j && l1.len() > l2.len() {
                    for pos in l1.occurrences(l2).collect::<Vec<_>>() {
                        let other = r2
                            .rhs
                            .sandwich(&l1.prefix(pos), &l1.suffix_from(pos + l2.len()));
                        let difference = self.normal_form(&r1.rhs.sub(&other));
                        if !difference.is_zero() {
                            failures.push(Overlap {
                                left_rule: i,
                                right_rule: j,
                                word: l1.clone(),
                                difference,
                            });
                        }
                    }
                }
            }
        }
        failures
    }

    /// All irreducible words of length at most `max_len`, ascending.
    pub fn irreducible_words(&self, max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in self.alphabet.letters() {
                    let mut w2 = w.clone();
                    w2.push(l);
                    if self.suffixes_irreducible(&w2) {
                        next.push(w2);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort();
        out
    }

    /// Checks only the windows ending at the last letter (the rest of `w` is
    /// known to be irreducible).
    fn suffixes_irreducible(&self, w: &Word) -> bool {
        let n = w.len();
        self.lhs_lengths
            .iter()
            .filter(|&&len| len <= n)
            .all(|&len| !self.by_lhs.contains_key(&w.suffix_from(n - len)))
    }

    pub fn render_rule(&self, r: &RewriteRule<F::Elem>) -> String {
        format!(
            "{} -> {}",
            self.alphabet.render(&r.lhs),
            r.rhs.render(&self.alphabet)
        )
    }

    /// Convenience: the polynomial `coef * word` in this system's field.
    pub fn term(&self, word: Word) -> FreePolynomial<F::Elem> {
        FreePolynomial::monomial(word, self.field.one())
    }

    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.alphabet.letter(name)
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        self.alphabet.parse_word(text)
    }
}

/// Free-function spellings of the core operations.
pub fn reduce_once<F: Field>(w: &Word, sys: &RewriteSystem<F>) -> Option<FreePolynomial<F::Elem>> {
    sys.reduce_once(w)
}

pub fn normal_form<F: Field>(
    p: &FreePolynomial<F::Elem>,
    sys: &RewriteSystem<F>,
) -> FreePolynomial<F::Elem> {
    sys.normal_form(p)
}

pub fn check_compositions<F: Field>(sys: &RewriteSystem<F>) -> Vec<Overlap<F::Elem>> {
    sys.check_compositions()
}

pub fn irreducible_words<F: Field>(sys: &RewriteSystem<F>, max_len: usize) -> Vec<Word> {
    sys.irreducible_words(max_len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn idempotent() -> RewriteSystem<Rationals> {
        let a = Alphabet::plain(&["v"]).unwrap();
        let v = a.parse_word("v").unwrap();
        let vv = a.parse_word("v v").unwrap();
        let rules = vec![RewriteRule::new(vv, FreePolynomial::monomial(v, Rationals.one()))];
        RewriteSystem::new(Rationals, a, rules).unwrap()
    }

    #[test]
    fn irreducible_word_has_no_redex() {
        let sys = idempotent();
        let v = sys.parse_word("v").unwrap();
        assert!(sys.reduce_once(&v).is_none());
        assert!(sys.reduce_once(&Word::empty()).is_none());
    }

    #[test]
    fn idempotent_reduces() {
        let sys = idempotent();
        let vv = sys.parse_word("v v").unwrap();
        let v = sys.parse_word("v").unwrap();
        assert_eq!(sys.reduce_once(&vv).unwrap(), sys.term(v.clone()));
        let v5 = sys.parse_word("v v v v v").unwrap();
        assert_eq!(sys.normal_form_word(&v5), sys.term(v));
    }

    #[test]
    fn single_idempotent_is_confluent() {
        assert!(idempotent().check_compositions().is_empty());
    }

    #[test]
    fn irreducible_words_of_idempotent() {
        let sys = idempotent();
        assert_eq!(sys.irreducible_words(0), vec![Word::empty()]);
        assert_eq!(sys.irreducible_words(4).len(), 2);
    }

    #[test]
    fn rejects_non_decreasing_rule() {
        let a = Alphabet::plain(&["x", "y"]).unwrap();
        let xy = a.parse_word("x y").unwrap();
        let yx = a.parse_word("y x").unwrap();
        let rules = vec![RewriteRule::new(xy, FreePolynomial::monomial(yx, Rationals.one()))];
        assert!(matches!(
            RewriteSystem::new(Rationals, a, rules),
            Err(AnickError::InvalidRule { .. })
        ));
    }

    #[test]
    fn rejects_nested_lhs() {
        let a = Alphabet::plain(&["x", "y"]).unwrap();
        let rules = vec![
            RewriteRule::new(a.parse_word("x y x").unwrap(), FreePolynomial::zero()),
            RewriteRule::new(a.parse_word("y x").unwrap(), FreePolynomial::zero()),
        ];
        assert!(matches!(
            RewriteSystem::new(Rationals, a, rules),
            Err(AnickError::NotReduced { .. })
        ));
    }

    #[test]
    fn detects_non_confluent_overlap() {
        let a = Alphabet::plain(&["x", "y", "z"]).unwrap();
        let p = |s: &str| a.parse_word(s).unwrap();
        let rules = vec![
            RewriteRule::new(p("y y"), FreePolynomial::monomial(p("x"), Rationals.one())),
            RewriteRule::new(p("z y"), FreePolynomial::zero()),
        ];
        let sys = RewriteSystem::new(Rationals, a.clone(), rules).unwrap();
        // zyy: (zy)y -> 0 but z(yy) -> zx; yyy: xy against yx
        let words: Vec<Word> = sys.check_compositions().into_iter().map(|o| o.word).collect();
        assert_eq!(words, vec![p("y y y"), p("z y y")]);
    }

    #[test]
    fn greatest_lhs_chosen_first() {
        let a = Alphabet::plain(&["x", "y"]).unwrap();
        let p = |s: &str| a.parse_word(s).unwrap();
        let rules = vec![
            RewriteRule::new(p("x x"), FreePolynomial::zero()),
            RewriteRule::new(p("y y"), FreePolynomial::monomial(p("x"), Rationals.one())),
        ];
        let sys = RewriteSystem::new(Rationals, a.clone(), rules).unwrap();
        // x x y y: yy is the greater lhs, so it is rewritten first.
        let step = sys.reduce_once(&p("x x y y")).unwrap();
        assert_eq!(step, sys.term(p("x x x")));
    }
}
