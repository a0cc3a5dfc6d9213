//! Tor dimensions of the reduced complex over the rationals and GF(2), and
//! the contracting homotopy built from right units.
//!
//! cargo run --release --example homology

use anick::homology::{homotopy_check, tor_dims};
use anick::leavitt::{suite, Leavitt};
use anick::{Augmentation, Field, PrimeField, Rationals, Resolution};

fn tor<F: Field>(lv: &Leavitt, field: F) -> anick::Result<Vec<usize>> {
    let sys = lv.gsb(field.clone())?;
    let eps = Augmentation::zero(&field, sys.alphabet());
    let mut res = Resolution::new(sys, eps, 16)?;
    Ok(tor_dims(&mut res, 4)?.dims)
}

fn main() -> anick::Result<()> {
    for (name, graph) in suite() {
        let lv = Leavitt::new(graph)?;
        let q = tor(&lv, Rationals)?;
        let f2 = tor(&lv, PrimeField::new(2)?)?;

        let sys = lv.gsb(Rationals)?;
        let eps = Augmentation::zero(&Rationals, sys.alphabet());
        let mut res = Resolution::new(sys, eps, 16)?;
        let homotopy = homotopy_check(&lv, &mut res, 4).is_ok();
        println!("{name:>8}: Tor over Q {q:?}, over GF(2) {f2:?}, homotopy holds: {homotopy}");
    }
    Ok(())
}
