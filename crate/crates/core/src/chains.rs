//! Anick chains over an obstruction set.
//!
//! Index conventions follow the classical definition: a witness for an
//! `n`-prechain of length `t` is a family of 1-based inclusive windows
//! `(a_j, b_j)` with `1 = a_1 < a_2 <= b_1 < a_3 <= b_2 < ... < a_n <= b_{n-1} < b_n = t`,
//! each window spelling an obstruction.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::field::Field;
use crate::rewriting::RewriteSystem;
use crate::word::{all_words, Word};

/// One inclusive, 1-based window of a witness family.
pub type Window = (usize, usize);

/// The `n`-chains of a rewrite system together with their splitting data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainSet {
    /// Degree; 0-chains are the generators.
    pub n: usize,
    chains: Vec<Word>,
    prefix_len: HashMap<Word, usize>,
}

impl ChainSet {
    pub fn chains(&self) -> &[Word] {
        &self.chains
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.prefix_len.contains_key(w)
    }

    /// Length of the `(n-1)`-chain prefix of `chain` (the cut at `b_{n-1}`);
    /// zero for generators.
    pub fn prefix_len(&self, chain: &Word) -> Option<usize> {
        self.prefix_len.get(chain).copied()
    }

    /// Splits a chain into its `(n-1)`-chain prefix and the tail.
    pub fn split(&self, chain: &Word) -> Option<(Word, Word)> {
        let k = self.prefix_len(chain)?;
        Some((chain.prefix(k), chain.suffix_from(k)))
    }

    pub fn index_of(&self, chain: &Word) -> Option<usize> {
        self.chains.binary_search(chain).ok()
    }
}

/// All chain sets from degree 0 up to `max_n`, built by right extension.
pub fn enumerate_all<F: Field>(max_n: usize, sys: &RewriteSystem<F>) -> Vec<ChainSet> {
    let mut out = Vec::with_capacity(max_n + 1);
    let generators: Vec<Word> = sys.alphabet().letters().map(Word::single).collect();
    out.push(ChainSet {
        n: 0,
        prefix_len: generators.iter().map(|g| (g.clone(), 0)).collect(),
        chains: generators,
    });
    for n in 1..=max_n {
        let next = extend_chains(&out[n - 1], sys);
        out.push(next);
    }
    out
}

/// The `n`-chains of `sys`.
pub fn enumerate_chains<F: Field>(n: usize, sys: &RewriteSystem<F>) -> ChainSet {
    enumerate_all(n, sys).pop().expect("degree 0 always present")
}

/// Extends every `(n-1)`-chain `c` by the tails `t` for which `c·t` ends in
/// a new obstruction that starts inside the part of `c` after its own
/// `(n-2)`-prefix, with no earlier obstruction in that region.
fn extend_chains<F: Field>(prev: &ChainSet, sys: &RewriteSystem<F>) -> ChainSet {
    let mut prefix_len = HashMap::new();
    let max_tail = sys.max_lhs_len().saturating_sub(1);
    for c in &prev.chains {
        let cut = prev.prefix_len[c];
        let region = c.suffix_from(cut);
        let mut stack: Vec<Word> = vec![Word::empty()];
        while let Some(t) = stack.pop() {
            if t.len() == max_tail {
                continue;
            }
            for l in sys.alphabet().letters() {
                let mut t2 = t.clone();
                t2.push(l);
                let window = region.concat(&t2);
                match obstruction_suffix_start(&window, sys) {
                    None => stack.push(t2),
                    Some(start) if start < region.len() => {
                        prefix_len.insert(c.concat(&t2), c.len());
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut chains: Vec<Word> = prefix_len.keys().cloned().collect();
    chains.sort();
    ChainSet {
        n: prev.n + 1,
        chains,
        prefix_len,
    }
}

/// Start (0-based) of the longest obstruction that is a suffix of `w`, if any.
fn obstruction_suffix_start<F: Field>(w: &Word, sys: &RewriteSystem<F>) -> Option<usize> {
    (0..w.len()).find(|&start| sys.is_obstruction(&w.suffix_from(start)))
}

/// Searches for a witness that `w` is an `n`-prechain (`n >= 1`); returns
/// the first family found in lexicographic order of windows.
pub fn is_n_prechain(w: &Word, n: usize, obs: &BTreeSet<Word>) -> Option<Vec<Window>> {
    prechain_witnesses(w, n, obs).into_iter().next()
}

/// Every witness family for `w` as an `n`-prechain.
pub fn prechain_witnesses(w: &Word, n: usize, obs: &BTreeSet<Word>) -> Vec<Vec<Window>> {
    let mut out = Vec::new();
    if n == 0 || w.is_empty() {
        return out;
    }
    let t = w.len();
    let spells = |a: usize, b: usize| obs.contains(&w.slice(a - 1, b));
    let mut family: Vec<Window> = Vec::new();
    fn search(
        family: &mut Vec<Window>,
        n: usize,
        t: usize,
        spells: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<Window>>,
    ) {
        let j = family.len();
        if j == n {
            if family[n - 1].1 == t {
                out.push(family.clone());
            }
            return;
        }
        let (a_range, b_min) = if j == 0 {
            (1..=1, 1)
        } else {
            let (a_prev, b_prev) = family[j - 1];
            let lo = if j >= 2 { family[j - 2].1 + 1 } else { 1 };
            ((a_prev + 1).max(lo)..=b_prev, b_prev + 1)
        };
        for a in a_range {
            let b_lo = b_min.max(a);
            for b in b_lo..=t {
                if j + 1 < n && b == t {
                    continue;
                }
                if spells(a, b) {
                    family.push((a, b));
                    search(family, n, t, spells, out);
                    family.pop();
                }
            }
        }
    }
    search(&mut family, n, t, &spells, &mut out);
    out
}

/// Definitional chain test: generators are 0-chains; for `n >= 1`, `w`
/// must be an `n`-prechain with a family whose ends `b_m` admit no shorter
/// `m`-prechain prefix.
pub fn is_n_chain(w: &Word, n: usize, obs: &BTreeSet<Word>) -> bool {
    if n == 0 {
        return w.len() == 1;
    }
    prechain_witnesses(w, n, obs)
        .iter()
        .any(|family| satisfies_minimality(w, family, obs))
}

fn satisfies_minimality(w: &Word, family: &[Window], obs: &BTreeSet<Word>) -> bool {
    family.iter().enumerate().all(|(idx, &(_, b_m))| {
        let m = idx + 1;
        (1..b_m).all(|s| is_n_prechain(&w.prefix(s), m, obs).is_none())
    })
}

/// Brute-force oracle: every word of length at most `max_len` over an
/// alphabet of the given size that passes [`is_n_chain`].
pub fn brute_force_chains(
    n: usize,
    alphabet_size: usize,
    max_len: usize,
    obs: &BTreeSet<Word>,
) -> BTreeSet<Word> {
    (1..=max_len)
        .flat_map(|len| all_words(alphabet_size, len))
        .filter(|w| is_n_chain(w, n, obs))
        .collect()
}

/// Witness windows read off the enumerator's splitting data: `b_j` are the
/// successive prefix lengths, `a_j` the start of the obstruction ending at `b_j`.
pub fn greedy_witness(chain: &Word, n: usize, sets: &[ChainSet], obs: &BTreeSet<Word>) -> Option<Vec<Window>> {
    if n == 0 || n >= sets.len() {
        return None;
    }
    let mut ends = Vec::with_capacity(n);
    let mut current = chain.clone();
    for k in (1..=n).rev() {
        ends.push(current.len());
        let cut = sets[k].prefix_len(&current)?;
        current = current.prefix(cut);
    }
    ends.reverse();
    let mut family = Vec::with_capacity(n);
    for &b in &ends {
        let a = (1..=b).find(|&a| obs.contains(&chain.slice(a - 1, b)))?;
        family.push((a, b));
    }
    Some(family)
}

/// Chains of every degree as hash sets, for fast membership tests.
pub fn chain_lookup(sets: &[ChainSet]) -> Vec<HashSet<Word>> {
    sets.iter()
        .map(|s| s.chains.iter().cloned().collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::FreePolynomial;
    use crate::rewriting::RewriteRule;
    use crate::word::Alphabet;

    fn system(letters: &[&str], rules: &[&str]) -> RewriteSystem<Rationals> {
        let a = Alphabet::plain(letters).unwrap();
        let rules = rules
            .iter()
            .map(|r| RewriteRule::new(a.parse_word(r).unwrap(), FreePolynomial::zero()))
            .collect();
        RewriteSystem::new(Rationals, a, rules).unwrap()
    }

    #[test]
    fn single_obstruction_is_one_prechain() {
        let sys = system(&["x", "y"], &["x y x"]);
        let obs = sys.obstructions();
        let w = sys.parse_word("x y x").unwrap();
        assert_eq!(is_n_prechain(&w, 1, &obs), Some(vec![(1, 3)]));
        assert!(is_n_chain(&w, 1, &obs));
    }

    #[test]
    fn generators_are_zero_chains() {
        let sys = system(&["x", "y"], &["x x"]);
        let c0 = enumerate_chains(0, &sys);
        assert_eq!(c0.len(), 2);
        let obs = sys.obstructions();
        for c in c0.chains() {
            assert!(is_n_chain(c, 0, &obs));
        }
    }

    #[test]
    fn overlapping_cube_chains() {
        // x^3 = 0: chains are x^3, x^4, x^6, x^7, ... (Anick's classic example)
        let sys = system(&["x"], &["x x x"]);
        let sets = enumerate_all(4, &sys);
        let lens: Vec<Vec<usize>> = sets
            .iter()
            .map(|s| s.chains().iter().map(Word::len).collect())
            .collect();
        assert_eq!(lens, vec![vec![1], vec![3], vec![4], vec![6], vec![7]]);
    }

    #[test]
    fn enumerator_matches_definition_on_general_systems() {
        for (letters, rules) in [
            (vec!["x", "y"], vec!["x y x", "y y"]),
            (vec!["x"], vec!["x x x"]),
            (vec!["x", "y"], vec!["x x y", "y x"]),
            (vec!["x", "y", "z"], vec!["x y", "y z", "z x x"]),
        ] {
            let sys = system(&letters, &rules);
            let obs = sys.obstructions();
            let sets = enumerate_all(3, &sys);
            for n in 1..=3 {
                let max_len = sets[n].chains().iter().map(Word::len).max().unwrap_or(0).max(n + 2);
                let oracle = brute_force_chains(n, letters.len(), max_len + 1, &obs);
                let got: BTreeSet<Word> = sets[n].chains().iter().cloned().collect();
                assert_eq!(got, oracle, "system {rules:?}, n = {n}");
            }
        }
    }

    #[test]
    fn greedy_witness_agrees_with_exhaustive_search() {
        let sys = system(&["x", "y"], &["x y x", "y y"]);
        let obs = sys.obstructions();
        let sets = enumerate_all(3, &sys);
        for n in 1..=3 {
            for c in sets[n].chains() {
                let greedy = greedy_witness(c, n, &sets, &obs).unwrap();
                let all = prechain_witnesses(c, n, &obs);
                let minimal: Vec<_> = all
                    .into_iter()
                    .filter(|f| satisfies_minimality(c, f, &obs))
                    .collect();
                assert_eq!(minimal, vec![greedy], "chain {c}");
            }
        }
    }

    #[test]
    fn nesting_prefix_is_lower_chain() {
        let sys = system(&["x", "y"], &["x y x", "y y"]);
        let sets = enumerate_all(4, &sys);
        for n in 1..=4 {
            for c in sets[n].chains() {
                let (u, t) = sets[n].split(c).unwrap();
                assert!(sets[n - 1].contains(&u));
                assert!(!t.is_empty());
                assert!(sys.is_irreducible(&t));
            }
        }
    }
}
