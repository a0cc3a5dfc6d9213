//! The resolution tensored with the ground field: reduced differentials,
//! Tor dimensions and contracting homotopies.

use std::collections::BTreeMap;

use crate::error::{AnickError, Result};
use crate::field::{Field, Scalar};
use crate::leavitt::{substitution_differential, Leavitt};
use crate::matrix::ExactMatrix;
use crate::resolution::Resolution;
use crate::word::{Letter, Word};

/// An element of the reduced complex in a fixed degree, keyed by chain.
pub type ReducedVec<S> = BTreeMap<Word, S>;

fn add_into<S: Scalar>(v: &mut ReducedVec<S>, w: Word, c: S) {
    if c.is_zero() {
        return;
    }
    match v.remove(&w) {
        Some(old) => {
            let s = old + c;
            if !s.is_zero() {
                v.insert(w, s);
            }
        }
        None => {
            v.insert(w, c);
        }
    }
}

/// `d̄_n(chain)`: the differential with `ε` applied to every tail. In degree
/// 0 the target is spanned by the empty chain.
pub fn reduced_differential<F: Field>(res: &Resolution<F>, n: usize, chain: &Word) -> Result<ReducedVec<F::Elem>> {
    let eps = res.augmentation();
    let mut out = ReducedVec::new();
    if n == 0 {
        let x = chain.first().ok_or_else(|| AnickError::MalformedElement {
            degree: 0,
            chain: "1".into(),
        })?;
        for (w, c) in res.d0(x).terms() {
            add_into(&mut out, Word::empty(), c.clone() * eps.eval_word(w));
        }
        return Ok(out);
    }
    for (b, c) in res.differential(n, chain)?.terms() {
        add_into(&mut out, b.chain.clone(), c.clone() * eps.eval_word(&b.tail));
    }
    Ok(out)
}

/// Matrix of `d̄_n` with rows indexed by `(n-1)`-chains (the empty chain
/// for `n = 0`) and columns by `n`-chains, both in sorted order.
pub fn reduced_matrix<F: Field>(res: &Resolution<F>, n: usize) -> Result<ExactMatrix<F::Elem>> {
    let cols = res.chains(n)?;
    let row_index = |w: &Word| -> Option<usize> {
        if n == 0 {
            w.is_empty().then_some(0)
        } else {
            res.chain_sets()[n - 1].index_of(w)
        }
    };
    let rows = if n == 0 { 1 } else { res.chains(n - 1)?.len() };
    let mut m = ExactMatrix::zeros(res.field(), rows, cols.len());
    for (j, c) in cols.chains().iter().enumerate() {
        for (w, a) in reduced_differential(res, n, c)? {
            let i = row_index(&w).ok_or_else(|| AnickError::MalformedElement {
                degree: n as i32 - 1,
                chain: res.system().alphabet().render(&w),
            })?;
            m.set(i, j, a);
        }
    }
    Ok(m)
}

/// Tor dimensions with `dims[i] = dim Tor_i(k, k)`; `Tor_0` is the homology
/// at the ground field itself and `Tor_i` the homology at the `(i-1)`-chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorTable {
    pub dims: Vec<usize>,
    /// `ranks[n] = rank d̄_n` for `n = 0..=max_n`.
    pub ranks: Vec<usize>,
    /// Number of `n`-chains for `n = 0..=max_n`.
    pub chain_counts: Vec<usize>,
}

/// Exact Tor dimensions `Tor_0..Tor_{max_n}`.
pub fn tor_dims<F: Field>(res: &mut Resolution<F>, max_n: usize) -> Result<TorTable> {
    res.build(max_n)?;
    let mut ranks = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        ranks.push(reduced_matrix(res, n)?.rank());
    }
    let chain_counts: Vec<usize> = (0..=max_n).map(|n| res.chain_sets()[n].len()).collect();
    let mut dims = vec![1 - ranks[0]];
    for i in 1..=max_n {
        dims.push(chain_counts[i - 1] - ranks[i - 1] - ranks[i]);
    }
    Ok(TorTable {
        dims,
        ranks,
        chain_counts,
    })
}

/// `ϱ(c) = -c·ζ(last letter of c)`, or `None` if `c·ζ` is not a chain.
fn rho<F: Field>(res: &Resolution<F>, n: usize, chain: &Word, zeta: &dyn Fn(Letter) -> Letter) -> Option<Word> {
    let mut up = chain.clone();
    up.push(zeta(chain.last()?));
    res.chain_sets().get(n + 1)?.contains(&up).then_some(up)
}

/// Chains of degree `0..=max_n` on which `d̄ϱ + ϱd̄ = id` fails for the
/// homotopy `ϱ(c) = -c·ζ`. Builds the resolution to degree `max_n + 1`.
pub fn homotopy_failures<F: Field>(
    res: &mut Resolution<F>,
    max_n: usize,
    zeta: &dyn Fn(Letter) -> Letter,
) -> Result<Vec<String>> {
    res.build(max_n + 1)?;
    let one = res.field().one();
    let mut failures = Vec::new();
    for n in 0..=max_n {
        for c in res.chains(n)?.chains() {
            let mut total = ReducedVec::new();
            let Some(up) = rho(res, n, c, zeta) else {
                failures.push(res.system().alphabet().render(c));
                continue;
            };
            for (w, a) in reduced_differential(res, n + 1, &up)? {
                add_into(&mut total, w, -a);
            }
            if n > 0 {
                let mut defined = true;
                for (w, a) in reduced_differential(res, n, c)? {
                    match rho(res, n - 1, &w, zeta) {
                        Some(u) => add_into(&mut total, u, -a),
                        None => defined = false,
                    }
                }
                if !defined {
                    failures.push(res.system().alphabet().render(c));
                    continue;
                }
            }
            add_into(&mut total, c.clone(), -one.clone());
            if !total.is_empty() {
                failures.push(res.system().alphabet().render(c));
            }
        }
    }
    Ok(failures)
}

/// Runs [`homotopy_failures`] with the right-unit choice of `ζ`.
pub fn homotopy_check<F: Field>(lv: &Leavitt, res: &mut Resolution<F>, max_n: usize) -> Result<()> {
    let failures = homotopy_failures(res, max_n, &|x| lv.right_unit(x))?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(AnickError::HomotopyFailure { chains: failures })
    }
}

/// Reduced differential read directly off the substitution formula: the
/// signed sum of the words `ξ_1 ⋯ f̃_j ⋯ ξ_{n+1}`, where `f̃` is the
/// length-at-most-one part of each pair's rewrite, kept when they are chains.
pub fn reduced_formula<F: Field>(res: &Resolution<F>, n: usize, chain: &Word) -> ReducedVec<F::Elem> {
    let one = res.field().one();
    let mut out = ReducedVec::new();
    let letters = chain.letters();
    for j in 1..=n {
        let pair: Word = letters[j - 1..=j].iter().copied().collect();
        let Some(rule) = res.system().rule_for(&pair) else {
            continue;
        };
        let sgn = if (n as i64 - j as i64 - 1).rem_euclid(2) == 0 {
            one.clone()
        } else {
            -one.clone()
        };
        for (w, c) in rule.rhs.terms().filter(|(w, _)| w.len() <= 1) {
            let word = chain.prefix(j - 1).concat(w).concat(&chain.suffix_from(j + 1));
            if res.chain_sets()[n - 1].contains(&word) {
                add_into(&mut out, word, sgn.clone() * c.clone());
            }
        }
    }
    out
}

/// Chains of degree `1..=max_n` where the engine's `d̄_n` differs from [`reduced_formula`].
pub fn reduced_formula_mismatches<F: Field>(res: &Resolution<F>, max_n: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for c in res.chains(n)?.chains() {
            if reduced_differential(res, n, c)? != reduced_formula(res, n, c) {
                out.push(res.system().alphabet().render(c));
            }
        }
    }
    Ok(out)
}

/// Chains of degree `1..=max_n` where the engine differs from the
/// substitution formula that also removes the first letter; this is the
/// shape of the differential for the unit augmentation on the loop graph.
pub fn laurent_mismatches<F: Field>(res: &Resolution<F>, max_n: usize) -> Result<Vec<AnickError>> {
    let a = res.system().alphabet();
    let mut out = Vec::new();
    for n in 1..=max_n {
        for c in res.chains(n)?.chains() {
            let formula = substitution_differential(res, n, c, true);
            let engine = res.differential(n, c)?;
            if &formula != engine {
                out.push(AnickError::FormulaMismatch {
                    chain: a.render(c),
                    formula: formula.render(a),
                    engine: engine.render(a),
                });
            }
        }
    }
    Ok(out)
}
