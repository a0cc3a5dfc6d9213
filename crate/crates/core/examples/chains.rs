//! Chain enumeration: the generic tiling enumerator against the pairwise
//! adjacency rule for Leavitt algebras.
//!
//! cargo run --release --example chains

use anick::chains::enumerate_all;
use anick::leavitt::{suite, Leavitt};
use anick::Rationals;

fn main() -> anick::Result<()> {
    let max_n = 5;
    for (name, graph) in suite() {
        let lv = Leavitt::new(graph)?;
        let sys = lv.gsb(Rationals)?;
        let sets = enumerate_all(max_n, &sys);
        let counts: Vec<usize> = sets.iter().map(|s| s.len()).collect();
        let agree = (0..=max_n).all(|n| sets[n].chains() == lv.adjacency_chains(n).as_slice());
        println!("{name:>8}: {counts:?} adjacency rule agrees: {agree}");
    }

    let lv = Leavitt::new(suite()[1].1.clone())?;
    let sys = lv.gsb(Rationals)?;
    let sets = enumerate_all(2, &sys);
    println!("\n1-chains of the loop graph:");
    for c in sets[1].chains() {
        println!("  {}", sys.alphabet().render(c));
    }
    Ok(())
}
