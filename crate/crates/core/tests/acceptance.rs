//! Acceptance suite over the five built-in graphs. Prints one PASS/FAIL line
//! per criterion and graph, then asserts that the failures are exactly the
//! known ones: the closed and fast differential forms and the double
//! substitution sum break on two parallel edges, where the top edge has a
//! sibling and second-level eliminations add terms the formulas omit.

use std::collections::BTreeSet;
use std::time::Instant;

use anick::chains::enumerate_all;
use anick::homology::{homotopy_failures, laurent_mismatches, tor_dims};
use anick::leavitt::{
    closed_form_mismatches, double_substitution_sum, laurent_graph, suite, DoubleSumMode, Leavitt,
};
use anick::{Augmentation, Field, PrimeField, Rationals, Resolution};

struct Ledger {
    failures: BTreeSet<(u8, &'static str)>,
}

impl Ledger {
    fn record(&mut self, criterion: u8, graph: &'static str, ok: bool, detail: String) {
        println!("criterion {criterion} [{graph}]: {} ({detail})", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures.insert((criterion, graph));
        }
    }
}

fn resolution<F: Field>(lv: &Leavitt, field: F, unit: bool) -> Resolution<F> {
    let sys = lv.gsb(field.clone()).unwrap();
    let eps = if unit {
        Augmentation::unit(&field, sys.alphabet())
    } else {
        Augmentation::zero(&field, sys.alphabet())
    };
    Resolution::new(sys, eps, 16).unwrap()
}

// Independent oracles for the loop graph with every generator sent to 1.
// Letters: 0 = v, 1 = e, 2 = e*. Chains are the words avoiding `e e` and
// `e* e*`; pair rewrites are read off the relations by hand.
mod laurent_oracle {
    const P: u64 = 1_000_000_007;

    fn allowed(x: u8, y: u8) -> bool {
        !(x == 1 && y == 1) && !(x == 2 && y == 2)
    }

    /// Single-letter rewrite of an adjacent pair that is not a normal word.
    fn rewrite(x: u8, y: u8) -> u8 {
        match (x, y) {
            (0, 0) => 0,
            (0, l) | (l, 0) => l,
            (1, 2) | (2, 1) => 0,
            _ => unreachable!("pair {x}{y} is normal"),
        }
    }

    pub fn transfer_counts(max_n: usize) -> Vec<u64> {
        let mut v = [1u64; 3];
        let mut out = vec![3];
        for _ in 0..max_n {
            let mut next = [0u64; 3];
            for (y, slot) in next.iter_mut().enumerate() {
                *slot = (0..3).filter(|&x| allowed(x as u8, y as u8)).map(|x| v[x]).sum();
            }
            v = next;
            out.push(v.iter().sum());
        }
        out
    }

    fn chains(n: usize) -> Vec<Vec<u8>> {
        let mut words: Vec<Vec<u8>> = (0..3).map(|l| vec![l]).collect();
        for _ in 0..n {
            words = words
                .iter()
                .flat_map(|w| {
                    (0..3u8).filter(|&l| allowed(*w.last().unwrap(), l)).map(move |l| {
                        let mut x = w.clone();
                        x.push(l);
                        x
                    })
                })
                .collect();
        }
        words
    }

    fn is_chain(w: &[u8]) -> bool {
        w.windows(2).all(|p| allowed(p[0], p[1]))
    }

    /// Reduced differential of an `n`-chain, `n ≥ 1`, as `(word, ±1)` terms.
    fn reduced(c: &[u8]) -> Vec<(Vec<u8>, i64)> {
        let n = c.len() - 1;
        let sign = |e: i64| if e.rem_euclid(2) == 0 { 1 } else { -1 };
        let mut out = vec![(c[..n].to_vec(), 1), (c[1..].to_vec(), sign(n as i64 - 1))];
        for j in 1..=n {
            let mut w = c[..j - 1].to_vec();
            w.push(rewrite(c[j - 1], c[j]));
            w.extend_from_slice(&c[j + 1..]);
            if is_chain(&w) {
                out.push((w, sign(n as i64 - j as i64 - 1)));
            }
        }
        out
    }

    fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
        let cols = rows.first().map_or(0, Vec::len);
        let inv = |a: u64| {
            let (mut b, mut e, mut r) = (a, P - 2, 1u64);
            while e > 0 {
                if e & 1 == 1 {
                    r = r * b % P;
                }
                b = b * b % P;
                e >>= 1;
            }
            r
        };
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(rank, piv);
            let k = inv(rows[rank][col]);
            for r in 0..rows.len() {
                if r != rank && rows[r][col] != 0 {
                    let f = rows[r][col] * k % P;
                    for c in 0..cols {
                        rows[r][c] = (rows[r][c] + P - f * rows[rank][c] % P) % P;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn tor(max_n: usize) -> Vec<usize> {
        let sets: Vec<Vec<Vec<u8>>> = (0..=max_n).map(chains).collect();
        let mut ranks = vec![0];
        for n in 1..=max_n {
            let target = &sets[n - 1];
            let mut rows = vec![vec![0u64; sets[n].len()]; target.len()];
            for (j, c) in sets[n].iter().enumerate() {
                for (w, s) in reduced(c) {
                    let i = target.iter().position(|t| *t == w).unwrap();
                    rows[i][j] = (rows[i][j] + if s > 0 { 1 } else { P - 1 }) % P;
                }
            }
            ranks.push(rank_mod_p(rows));
        }
        let mut dims = vec![1 - ranks[0]];
        for i in 1..=max_n {
            dims.push(sets[i - 1].len() - ranks[i - 1] - ranks[i]);
        }
        dims
    }
}

#[test]
fn acceptance() {
    // Oracles run first, independently of the library.
    let oracle_counts = laurent_oracle::transfer_counts(4);
    let oracle_tor = laurent_oracle::tor(4);
    assert_eq!(&oracle_counts[..3], &[3, 7, 17]);
    assert_eq!(oracle_tor, vec![1, 1, 0, 0, 0]);

    let mut ledger = Ledger {
        failures: BTreeSet::new(),
    };
    let graphs: Vec<(&'static str, Leavitt)> = suite()
        .into_iter()
        .map(|(name, g)| (name, Leavitt::new(g).unwrap()))
        .collect();

    for (name, lv) in &graphs {
        let t = Instant::now();
        let sys = lv.gsb(Rationals).unwrap();
        let bad = sys.check_compositions();
        ledger.record(1, name, bad.is_empty(), format!("{} unresolved, {:?}", bad.len(), t.elapsed()));
    }

    for (name, lv) in &graphs {
        let t = Instant::now();
        let sys = lv.gsb(Rationals).unwrap();
        let sets = enumerate_all(5, &sys);
        let ok = (0..=5).all(|n| sets[n].chains() == lv.adjacency_chains(n).as_slice());
        let counts: Vec<usize> = sets.iter().map(|s| s.len()).collect();
        ledger.record(2, name, ok, format!("counts {counts:?}, {:?}", t.elapsed()));
    }

    for (name, lv) in &graphs {
        let t = Instant::now();
        let mut res = resolution(lv, Rationals, false);
        let report = res.verify_complex(4, 6).unwrap();
        ledger.record(
            3,
            name,
            report.composition_failures.is_empty(),
            format!(
                "d∘d on {} chains, exactness clean: {}, {:?}",
                report.chains_checked,
                report.is_clean(),
                t.elapsed()
            ),
        );
    }

    let mut closed_counts = Vec::new();
    for (name, lv) in &graphs {
        let mut res = resolution(lv, Rationals, false);
        res.build(4).unwrap();
        let closed = closed_form_mismatches(lv, &res, 4).unwrap();
        let mut fast = 0;
        for n in 1..=4 {
            for c in res.chains(n).unwrap().chains() {
                if res.fast_differential(n, c).is_err() {
                    fast += 1;
                }
            }
        }
        closed_counts.push((closed.len(), fast));
        ledger.record(
            4,
            name,
            closed.is_empty() && fast == 0,
            format!("closed form differs on {} chains, fast form on {fast}", closed.len()),
        );
    }

    let mut double_counts = Vec::new();
    for (name, lv) in &graphs {
        let mut res = resolution(lv, Rationals, false);
        res.build(4).unwrap();
        let (mut nonzero, mut control) = (0, 0);
        for n in 2..=4 {
            for c in res.chains(n).unwrap().chains() {
                if !double_substitution_sum(&res, n, c, DoubleSumMode::Words).is_zero() {
                    nonzero += 1;
                }
                if !double_substitution_sum(&res, n, c, DoubleSumMode::FlippedDiagonal).is_zero() {
                    control += 1;
                }
            }
        }
        double_counts.push((nonzero, control));
        ledger.record(
            5,
            name,
            nonzero == 0 && control > 0,
            format!("nonzero on {nonzero} chains, flipped control nonzero on {control}"),
        );
    }

    let t6 = Instant::now();
    for (name, lv) in &graphs {
        let mut q = resolution(lv, Rationals, false);
        let tor_q = tor_dims(&mut q, 4).unwrap().dims;
        let mut f2 = resolution(lv, PrimeField::new(2).unwrap(), false);
        let tor_2 = tor_dims(&mut f2, 4).unwrap().dims;
        let hom = homotopy_failures(&mut q, 4, &|x| lv.right_unit(x)).unwrap();
        let vanish = |d: &[usize]| d[0] == 1 && d[1..].iter().all(|&x| x == 0);
        ledger.record(
            6,
            name,
            vanish(&tor_q) && vanish(&tor_2) && hom.is_empty(),
            format!("Tor over Q {tor_q:?}, GF(2) {tor_2:?}, homotopy failures {}", hom.len()),
        );
    }
    println!("criterion 6 total time {:?}", t6.elapsed());

    {
        let lv = Leavitt::new(laurent_graph()).unwrap();
        let mut res = resolution(&lv, Rationals, true);
        let table = tor_dims(&mut res, 4).unwrap();
        let mismatches = laurent_mismatches(&res, 4).unwrap();
        let counts: Vec<u64> = table.chain_counts.iter().map(|&c| c as u64).collect();
        let ok = counts == oracle_counts && mismatches.is_empty() && table.dims == oracle_tor;
        ledger.record(
            7,
            "laurent",
            ok,
            format!(
                "counts {counts:?}, formula mismatches {}, Tor {:?}",
                mismatches.len(),
                table.dims
            ),
        );
    }

    for (name, lv) in graphs.iter().filter(|(n, _)| ["loop", "edge", "parallel"].contains(n)) {
        let mut res = resolution(lv, Rationals, false);
        res.build(4).unwrap();
        let mut rng = Resolution::<Rationals>::rng(0x5eed);
        let mut failed = 0;
        for n in 0..=3 {
            for _ in 0..100 {
                let omega = res.random_cycle(n, &mut rng, 2).unwrap();
                let lift = res.split(n, &omega).unwrap();
                if res.apply_d(n, &lift).unwrap() != omega {
                    failed += 1;
                }
            }
        }
        ledger.record(8, name, failed == 0, format!("{failed} of 400 lifts fail"));
    }

    let expected: BTreeSet<(u8, &str)> = [(4, "parallel"), (5, "parallel")].into_iter().collect();
    println!("failing (criterion, graph) pairs: {:?}", ledger.failures);
    assert_eq!(ledger.failures, expected);
    assert_eq!(closed_counts[3], (180, 33));
    assert_eq!(double_counts[3].0, 160);
}
