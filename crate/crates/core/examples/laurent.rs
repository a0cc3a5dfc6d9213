//! The one-loop graph with every generator sent to 1: the algebra is the
//! Laurent polynomial ring and Tor is 1, 1, 0, 0, ...
//!
//! cargo run --release --example laurent

use anick::homology::{laurent_mismatches, tor_dims};
use anick::leavitt::{laurent_graph, Leavitt};
use anick::{Augmentation, Rationals, Resolution};

fn main() -> anick::Result<()> {
    let lv = Leavitt::new(laurent_graph())?;
    let sys = lv.gsb(Rationals)?;
    let eps = Augmentation::unit(&Rationals, sys.alphabet());
    let mut res = Resolution::new(sys, eps, 16)?;
    let table = tor_dims(&mut res, 4)?;
    println!("chain counts: {:?}", table.chain_counts);
    println!("ranks of reduced differentials: {:?}", table.ranks);
    println!("Tor dims: {:?}", table.dims);
    println!("formula mismatches: {}", laurent_mismatches(&res, 4)?.len());

    let a = res.system().alphabet().clone();
    for text in ["e e*", "e* e", "e e* e"] {
        let c = a.parse_word(text)?;
        println!("d({text} ⊗ 1) = {}", res.differential(c.len() - 1, &c)?.render(&a));
    }
    Ok(())
}
