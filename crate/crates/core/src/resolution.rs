//! The Anick resolution of the trivial module over an augmented algebra.
//!
//! Degree `n >= 0` is the free right module on the `n`-chains; degree `-1`
//! is the algebra itself (chains are the empty word). Differentials are
//! built inductively: for a chain `c = u·t` split at its `(n-1)`-prefix,
//! `d_n(c ⊗ 1) = u ⊗ t - split(d_{n-1}(u ⊗ t))`, where `split` is a section
//! of `d_{n-1}` on its kernel obtained by leading-term elimination.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chains::{enumerate_all, ChainSet};
use crate::error::{AnickError, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{ExactMatrix, SparseVec};
use crate::poly::FreePolynomial;
use crate::rewriting::RewriteSystem;
use crate::tensor::{BasisTerm, TensorElement};
use crate::word::{Alphabet, Word};

/// An algebra map to the ground field, given by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation<S: Scalar> {
    values: Vec<S>,
    one: S,
}

impl<S: Scalar> Augmentation<S> {
    pub fn zero<F: Field<Elem = S>>(field: &F, alphabet: &Alphabet) -> Self {
        Self::constant(field, alphabet, field.zero())
    }

    pub fn unit<F: Field<Elem = S>>(field: &F, alphabet: &Alphabet) -> Self {
        Self::constant(field, alphabet, field.one())
    }

    fn constant<F: Field<Elem = S>>(field: &F, alphabet: &Alphabet, c: S) -> Self {
        Augmentation {
            values: vec![c; alphabet.len()],
            one: field.one(),
        }
    }

    /// Values listed in letter order.
    pub fn from_values<F: Field<Elem = S>>(field: &F, values: Vec<S>) -> Self {
        Augmentation {
            values,
            one: field.one(),
        }
    }

    pub fn value(&self, l: crate::word::Letter) -> &S {
        &self.values[l.index()]
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    /// Multiplicative extension; the empty word maps to 1.
    pub fn eval_word(&self, w: &Word) -> S {
        w.letters()
            .iter()
            .fold(self.one.clone(), |acc, &l| acc * self.values[l.index()].clone())
    }

    pub fn eval_poly(&self, p: &FreePolynomial<S>) -> S {
        let zero = self.one.clone() - self.one.clone();
        p.terms()
            .fold(zero, |acc, (w, c)| acc + c.clone() * self.eval_word(w))
    }

    /// Checks that every rule `lhs -> rhs` satisfies `ε(lhs) = ε(rhs)`.
    pub fn validate<F: Field<Elem = S>>(&self, sys: &RewriteSystem<F>) -> Result<()> {
        if self.values.len() != sys.alphabet().len() {
            return Err(AnickError::InvalidConfig(format!(
                "augmentation has {} values for {} generators",
                self.values.len(),
                sys.alphabet().len()
            )));
        }
        for r in sys.rules() {
            if self.eval_word(&r.lhs) != self.eval_poly(&r.rhs) {
                return Err(AnickError::InvalidAugmentation {
                    lhs: sys.alphabet().render(&r.lhs),
                });
            }
        }
        Ok(())
    }
}

/// Outcome of [`Resolution::verify_complex`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ComplexReport {
    /// `(n, chain)` with `d_{n-1}(d_n(chain ⊗ 1)) != 0`.
    pub composition_failures: Vec<(usize, String)>,
    /// `(n, description)` for kernel elements of `d_n` that `split` could not lift.
    pub exactness_failures: Vec<(i32, String)>,
    /// `(n, chain)` whose differential has a non-head term not below the chain.
    pub leading_term_failures: Vec<(usize, String)>,
    /// Number of kernel basis vectors lifted, per degree starting at -1.
    pub cycles_checked: Vec<usize>,
    pub chains_checked: usize,
}

impl ComplexReport {
    pub fn is_clean(&self) -> bool {
        self.composition_failures.is_empty()
            && self.exactness_failures.is_empty()
            && self.leading_term_failures.is_empty()
    }
}

/// The resolution engine for one rewrite system and augmentation.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    sys: RewriteSystem<F>,
    eps: Augmentation<F::Elem>,
    max_deg: usize,
    chains: Vec<ChainSet>,
    /// `diffs[n]` maps each `n`-chain to `d_n(chain ⊗ 1)`; index 0 is unused.
    diffs: Vec<HashMap<Word, TensorElement<F::Elem>>>,
}

impl<F: Field> Resolution<F> {
    /// Validates the augmentation; nothing is computed until [`build`](Self::build).
    pub fn new(sys: RewriteSystem<F>, eps: Augmentation<F::Elem>, max_deg: usize) -> Result<Self> {
        eps.validate(&sys)?;
        Ok(Resolution {
            sys,
            eps,
            max_deg,
            chains: Vec::new(),
            diffs: vec![HashMap::new()],
        })
    }

    /// Enumerates chains and builds every differential up to degree `max_n`.
    pub fn build(&mut self, max_n: usize) -> Result<()> {
        if self.chains.len() <= max_n {
            self.chains = enumerate_all(max_n, &self.sys);
        }
        while self.diffs.len() <= max_n {
            let n = self.diffs.len();
            let mut level = HashMap::new();
            for c in self.chains[n].chains() {
                let d = self.compute_differential(n, c)?;
                level.insert(c.clone(), d);
            }
            self.diffs.push(level);
        }
        Ok(())
    }

    pub fn system(&self) -> &RewriteSystem<F> {
        &self.sys
    }

    pub fn field(&self) -> &F {
        self.sys.field()
    }

    pub fn augmentation(&self) -> &Augmentation<F::Elem> {
        &self.eps
    }

    pub fn max_deg(&self) -> usize {
        self.max_deg
    }

    /// Highest degree whose differential is available.
    pub fn built_degree(&self) -> usize {
        self.diffs.len() - 1
    }

    pub fn chain_sets(&self) -> &[ChainSet] {
        &self.chains
    }

    pub fn chains(&self, n: usize) -> Result<&ChainSet> {
        self.chains.get(n).ok_or(AnickError::NotBuilt { degree: n as i32 })
    }

    fn render(&self, w: &Word) -> String {
        self.sys.alphabet().render(w)
    }

    fn check_len(&self, length: usize) -> Result<()> {
        if length > self.max_deg {
            Err(AnickError::TruncationExceeded {
                max_deg: self.max_deg,
                length,
            })
        } else {
            Ok(())
        }
    }

    /// `d_n(chain ⊗ 1)` for a built degree `n >= 1`.
    pub fn differential(&self, n: usize, chain: &Word) -> Result<&TensorElement<F::Elem>> {
        let level = self
            .diffs
            .get(n)
            .filter(|_| n >= 1)
            .ok_or(AnickError::NotBuilt { degree: n as i32 })?;
        level.get(chain).ok_or_else(|| AnickError::MalformedElement {
            degree: n as i32,
            chain: self.render(chain),
        })
    }

    /// The unique factorization `w = c·u` with `c` an `n`-chain and `u`
    /// irreducible, if it exists. Degree `-1` accepts irreducible words.
    pub fn h_factor(&self, n: i32, w: &Word) -> Option<BasisTerm> {
        if n < 0 {
            return self
                .sys
                .is_irreducible(w)
                .then(|| BasisTerm::new(Word::empty(), w.clone()));
        }
        let set = self.chains.get(n as usize)?;
        let mut found = None;
        for k in 1..=w.len() {
            let c = w.prefix(k);
            if set.contains(&c) {
                let u = w.suffix_from(k);
                if self.sys.is_irreducible(&u) {
                    if found.is_some() {
                        return None;
                    }
                    found = Some(BasisTerm::new(c, u));
                }
            }
        }
        found
    }

    /// `h_n` applied to a word: a basis element or zero.
    pub fn h(&self, n: i32, w: &Word) -> TensorElement<F::Elem> {
        match self.h_factor(n, w) {
            Some(b) => TensorElement::basis(n, b.chain, b.tail, self.field().one()),
            None => TensorElement::zero(n),
        }
    }

    /// Linear extension of `h_n` to polynomials.
    pub fn h_poly(&self, n: i32, p: &FreePolynomial<F::Elem>) -> TensorElement<F::Elem> {
        let mut out = TensorElement::zero(n);
        for (w, c) in p.terms() {
            if let Some(b) = self.h_factor(n, w) {
                out.add_term(b, c.clone());
            }
        }
        out
    }

    /// `d_0(x ⊗ 1) = x - ε(x)` as an algebra element.
    pub fn d0(&self, x: crate::word::Letter) -> FreePolynomial<F::Elem> {
        let mut p = FreePolynomial::monomial(Word::single(x), self.field().one());
        p.add_term(Word::empty(), -self.eps.value(x).clone());
        p
    }

    /// Right action of a word on an element: tails are multiplied and reduced.
    pub fn act(&self, elem: &TensorElement<F::Elem>, a: &Word) -> TensorElement<F::Elem> {
        let mut out = TensorElement::zero(elem.degree());
        for (b, c) in elem.terms() {
            for (w, k) in self.sys.multiply_words(&b.tail, a).terms() {
                out.add_term(BasisTerm::new(b.chain.clone(), w.clone()), c.clone() * k.clone());
            }
        }
        out
    }

    /// `A`-linear extension of `d_n` (`n >= 0`) to an element of degree `n`.
    pub fn apply_d(&self, n: usize, elem: &TensorElement<F::Elem>) -> Result<TensorElement<F::Elem>> {
        let mut out = TensorElement::zero(n as i32 - 1);
        for (b, coef) in elem.terms() {
            self.check_len(b.len())?;
            if n == 0 {
                let x = match b.chain.letters() {
                    [x] => *x,
                    _ => {
                        return Err(AnickError::MalformedElement {
                            degree: 0,
                            chain: self.render(&b.chain),
                        })
                    }
                };
                for (w, k) in self.sys.multiply_words(&b.chain, &b.tail).terms() {
                    out.add_term(BasisTerm::new(Word::empty(), w.clone()), coef.clone() * k.clone());
                }
                let e = self.eps.value(x).clone();
                out.add_term(BasisTerm::new(Word::empty(), b.tail.clone()), -(coef.clone() * e));
            } else {
                let image = self.differential(n, &b.chain)?;
                if b.tail.is_empty() {
                    out.add_scaled(image, coef);
                } else {
                    out.add_scaled(&self.act(image, &b.tail), coef);
                }
            }
        }
        Ok(out)
    }

    /// `ε` applied to an element of degree `-1`.
    pub fn augment(&self, elem: &TensorElement<F::Elem>) -> F::Elem {
        elem.terms().fold(self.field().zero(), |acc, (b, c)| {
            acc + c.clone() * self.eps.eval_word(&b.tail)
        })
    }

    fn is_cycle(&self, omega: &TensorElement<F::Elem>) -> Result<Option<String>> {
        let deg = omega.degree();
        if deg < 0 {
            let e = self.augment(omega);
            return Ok((!e.is_zero()).then(|| e.to_string()));
        }
        let image = self.apply_d(deg as usize, omega)?;
        Ok((!image.is_zero()).then(|| image.render(self.sys.alphabet())))
    }

    /// A preimage of `omega` (degree `n - 1`) under `d_n`, found by repeatedly
    /// cancelling the leading term against `d_n(h_n(leading word))`.
    pub fn split(&self, n: usize, omega: &TensorElement<F::Elem>) -> Result<TensorElement<F::Elem>> {
        let deg = n as i32 - 1;
        debug_assert_eq!(omega.degree(), deg);
        if let Some(image) = self.is_cycle(omega)? {
            return Err(AnickError::NotInKernel { degree: deg, image });
        }
        self.split_unchecked(n, omega)
    }

    fn split_unchecked(&self, n: usize, omega: &TensorElement<F::Elem>) -> Result<TensorElement<F::Elem>> {
        let mut rest = omega.clone();
        let mut out = TensorElement::zero(n as i32);
        while let Some((lead, coef)) = rest.leading().map(|(b, c)| (b.clone(), c.clone())) {
            let w = lead.word();
            self.check_len(w.len())?;
            let b = self.h_factor(n as i32, &w).ok_or_else(|| AnickError::NoChainFactor {
                degree: n as i32,
                word: self.render(&w),
            })?;
            let basis = TensorElement::basis(n as i32, b.chain.clone(), b.tail.clone(), self.field().one());
            let image = self.apply_d(n, &basis)?;
            let stalled = || AnickError::NonTerminating {
                degree: n as i32,
                word: self.render(&w),
            };
            let (img_lead, img_coef) = image.leading().ok_or_else(stalled)?;
            if img_lead.word() != w {
                return Err(stalled());
            }
            let s = coef * img_coef.inverse().expect("leading coefficient is nonzero");
            rest.add_scaled(&image, &-s.clone());
            if let Some((next, _)) = rest.leading() {
                if next.word() >= w {
                    return Err(stalled());
                }
            }
            out.add_term(b, s);
        }
        Ok(out)
    }

    fn head(&self, n: usize, chain: &Word) -> Result<TensorElement<F::Elem>> {
        let (u, t) = self.chains[n].split(chain).ok_or_else(|| AnickError::MalformedElement {
            degree: n as i32,
            chain: self.render(chain),
        })?;
        Ok(TensorElement::basis(n as i32 - 1, u, t, self.field().one()))
    }

    fn compute_differential(&self, n: usize, chain: &Word) -> Result<TensorElement<F::Elem>> {
        let head = self.head(n, chain)?;
        let omega = self.apply_d(n - 1, &head)?;
        let correction = self.split_unchecked(n - 1, &omega)?;
        Ok(head.sub(&correction))
    }

    /// The differential obtained by applying `h_{n-1}` termwise to
    /// `d_{n-1}(u ⊗ t)` instead of running the elimination loop.
    pub fn fast_differential_unchecked(&self, n: usize, chain: &Word) -> Result<TensorElement<F::Elem>> {
        if n == 0 || n >= self.chains.len() {
            return Err(AnickError::NotBuilt { degree: n as i32 });
        }
        let head = self.head(n, chain)?;
        let omega = self.apply_d(n - 1, &head)?;
        let mut out = head;
        for (b, c) in omega.terms() {
            if let Some(f) = self.h_factor(n as i32 - 1, &b.word()) {
                out.add_term(f, -c.clone());
            }
        }
        Ok(out)
    }

    /// As [`fast_differential_unchecked`](Self::fast_differential_unchecked),
    /// failing with `ConditionViolated` when it disagrees with the engine.
    pub fn fast_differential(&self, n: usize, chain: &Word) -> Result<TensorElement<F::Elem>> {
        let fast = self.fast_differential_unchecked(n, chain)?;
        if &fast != self.differential(n, chain)? {
            return Err(AnickError::ConditionViolated {
                chain: self.render(chain),
            });
        }
        Ok(fast)
    }

    /// Basis `chain ⊗ tail` of degree `n` with concatenated length at most `len`.
    pub fn truncated_basis(&self, n: i32, len: usize) -> Vec<BasisTerm> {
        let tails = self.sys.irreducible_words(len);
        let chains: Vec<Word> = if n < 0 {
            vec![Word::empty()]
        } else {
            self.chains[n as usize].chains().to_vec()
        };
        let mut out = Vec::new();
        for c in &chains {
            for t in &tails {
                if c.len() + t.len() <= len {
                    out.push(BasisTerm::new(c.clone(), t.clone()));
                }
            }
        }
        out.sort();
        out
    }

    /// Checks `d∘d = 0` on every chain up to degree `max_n`, the leading-term
    /// bound of every differential, and that every cycle of concatenated
    /// length at most `max_deg` in degrees `-1..max_n-1` lifts through `split`.
    pub fn verify_complex(&mut self, max_n: usize, max_deg: usize) -> Result<ComplexReport> {
        self.build(max_n)?;
        let mut report = ComplexReport::default();
        for n in 1..=max_n {
            for c in self.chains[n].chains() {
                report.chains_checked += 1;
                let d = self.differential(n, c)?;
                let dd = self.apply_d(n - 1, d)?;
                if !dd.is_zero() {
                    report.composition_failures.push((n, self.render(c)));
                }
                let head = self.head(n, c)?;
                let bound_ok = d
                    .terms()
                    .all(|(b, _)| head.coeff(b).is_some() || b.word() < *c);
                if !bound_ok {
                    report.leading_term_failures.push((n, self.render(c)));
                }
            }
        }
        for n in -1..max_n as i32 {
            let (count, failures) = self.check_exactness(n, max_deg)?;
            report.cycles_checked.push(count);
            report.exactness_failures.extend(failures.into_iter().map(|f| (n, f)));
        }
        Ok(report)
    }

    /// Lifts a kernel basis of `d_n` (of `ε` for `n = -1`) truncated at `len`.
    fn check_exactness(&self, n: i32, len: usize) -> Result<(usize, Vec<String>)> {
        let source = self.truncated_basis(n, len);
        let cycles: Vec<TensorElement<F::Elem>> = if n < 0 {
            let mut m = ExactMatrix::zeros(self.field(), 1, source.len());
            for (j, b) in source.iter().enumerate() {
                m.set(0, j, self.eps.eval_word(&b.tail));
            }
            self.vectors_to_elements(n, &source, m.kernel_sparse())
        } else {
            let target = self.truncated_basis(n - 1, len);
            let index: HashMap<&BasisTerm, usize> =
                target.iter().enumerate().map(|(i, b)| (b, i)).collect();
            let mut m = ExactMatrix::zeros(self.field(), target.len(), source.len());
            for (j, b) in source.iter().enumerate() {
                let img = self.apply_d(n as usize, &TensorElement::basis(n, b.chain.clone(), b.tail.clone(), self.field().one()))?;
                for (t, c) in img.terms() {
                    let i = *index.get(t).ok_or_else(|| AnickError::TruncationExceeded {
                        max_deg: len,
                        length: t.len(),
                    })?;
                    m.set(i, j, c.clone());
                }
            }
            self.vectors_to_elements(n, &source, m.kernel_sparse())
        };
        let mut failures = Vec::new();
        for omega in &cycles {
            let shown = || omega.render(self.sys.alphabet());
            match self.split((n + 1) as usize, omega) {
                Ok(pre) => {
                    if self.apply_d((n + 1) as usize, &pre)? != *omega {
                        failures.push(format!("split is not a section at {}", shown()));
                    }
                }
                Err(e) => failures.push(format!("{}: {e}", shown())),
            }
        }
        Ok((cycles.len(), failures))
    }

    fn vectors_to_elements(
        &self,
        n: i32,
        basis: &[BasisTerm],
        vectors: Vec<SparseVec<F::Elem>>,
    ) -> Vec<TensorElement<F::Elem>> {
        vectors
            .into_iter()
            .map(|v| {
                let mut e = TensorElement::zero(n);
                for (i, c) in v {
                    e.add_term(basis[i].clone(), c);
                }
                e
            })
            .collect()
    }

    /// A random cycle of degree `n - 1`: `d_n` of a random combination of
    /// basis elements `chain ⊗ tail` with tails of length at most `tail_len`.
    pub fn random_cycle(&self, n: usize, rng: &mut ChaCha8Rng, tail_len: usize) -> Result<TensorElement<F::Elem>> {
        let chains = self.chains(n)?.chains();
        let tails = self.sys.irreducible_words(tail_len);
        let mut pre = TensorElement::zero(n as i32);
        if chains.is_empty() {
            return Ok(TensorElement::zero(n as i32 - 1));
        }
        let terms = rng.gen_range(1..=4);
        for _ in 0..terms {
            let c = &chains[rng.gen_range(0..chains.len())];
            let t = &tails[rng.gen_range(0..tails.len())];
            let k = rng.gen_range(-5i64..=5);
            pre.add_term(BasisTerm::new(c.clone(), t.clone()), self.field().from_i64(k));
        }
        self.apply_d(n, &pre)
    }

    /// Seeded generator for [`random_cycle`](Self::random_cycle).
    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::rewriting::RewriteRule;

    fn cube() -> RewriteSystem<Rationals> {
        let a = Alphabet::plain(&["x"]).unwrap();
        let lhs = a.parse_word("x x x").unwrap();
        RewriteSystem::new(Rationals, a, vec![RewriteRule::new(lhs, FreePolynomial::zero())]).unwrap()
    }

    fn idempotent() -> RewriteSystem<Rationals> {
        let a = Alphabet::plain(&["x"]).unwrap();
        let lhs = a.parse_word("x x").unwrap();
        let rhs = FreePolynomial::monomial(a.parse_word("x").unwrap(), Rationals.one());
        RewriteSystem::new(Rationals, a, vec![RewriteRule::new(lhs, rhs)]).unwrap()
    }

    #[test]
    fn truncated_polynomial_ring_differentials() {
        // k[x]/(x^3): d alternates between x ⊗ x^2 and x^2 ⊗ x shapes
        let sys = cube();
        let eps = Augmentation::zero(&Rationals, sys.alphabet());
        let mut r = Resolution::new(sys, eps, 12).unwrap();
        r.build(3).unwrap();
        let a = r.system().alphabet().clone();
        let show = |n: usize, c: &str| r.differential(n, &a.parse_word(c).unwrap()).unwrap().render(&a);
        assert_eq!(show(1, "x x x"), "(x ⊗ x x)");
        assert_eq!(show(2, "x x x x"), "(x x x ⊗ x)");
        assert_eq!(show(3, "x x x x x x"), "(x x x x ⊗ x x)");
    }

    #[test]
    fn idempotent_with_zero_augmentation() {
        let sys = idempotent();
        let eps = Augmentation::zero(&Rationals, sys.alphabet());
        let mut r = Resolution::new(sys, eps, 8).unwrap();
        let report = r.verify_complex(3, 6).unwrap();
        assert!(report.is_clean(), "{report:?}");
        let a = r.system().alphabet().clone();
        let d1 = r.differential(1, &a.parse_word("x x").unwrap()).unwrap();
        assert_eq!(d1.render(&a), "(x ⊗ x) - (x ⊗ 1)");
    }

    #[test]
    fn augmentation_must_respect_rules() {
        let sys = cube();
        let eps = Augmentation::unit(&Rationals, sys.alphabet());
        assert!(matches!(
            Resolution::new(sys, eps, 8),
            Err(AnickError::InvalidAugmentation { .. })
        ));
    }

    #[test]
    fn split_rejects_non_cycles() {
        let sys = cube();
        let eps = Augmentation::zero(&Rationals, sys.alphabet());
        let mut r = Resolution::new(sys, eps, 8).unwrap();
        r.build(2).unwrap();
        let x = r.system().parse_word("x").unwrap();
        let omega = TensorElement::basis(0, x, Word::empty(), Rationals.one());
        assert!(matches!(r.split(1, &omega), Err(AnickError::NotInKernel { .. })));
        assert!(r.split(1, &TensorElement::zero(0)).unwrap().is_zero());
    }

    #[test]
    fn truncation_is_reported() {
        let sys = cube();
        let eps = Augmentation::zero(&Rationals, sys.alphabet());
        let mut r = Resolution::new(sys, eps, 3).unwrap();
        assert!(matches!(r.build(3), Err(AnickError::TruncationExceeded { .. })));
    }
}
