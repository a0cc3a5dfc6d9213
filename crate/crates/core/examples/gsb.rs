//! Rewriting systems for the Leavitt path algebras of the built-in graphs,
//! with the composition check.
//!
//! cargo run --example gsb

use anick::leavitt::{suite, Leavitt};
use anick::{Field, PrimeField, Rationals};

fn show<F: Field>(name: &str, lv: &Leavitt, field: F) -> anick::Result<()> {
    let sys = lv.gsb(field)?;
    let bad = sys.check_compositions();
    println!(
        "{name} over {}: {} rules, {} unresolved compositions",
        sys.field().name(),
        sys.rules().len(),
        bad.len()
    );
    Ok(())
}

fn main() -> anick::Result<()> {
    for (name, graph) in suite() {
        let lv = Leavitt::new(graph)?;
        show(name, &lv, Rationals)?;
        show(name, &lv, PrimeField::new(2)?)?;
    }

    let lv = Leavitt::new(suite()[3].1.clone())?;
    let sys = lv.gsb(Rationals)?;
    println!("\nrules for two parallel edges:");
    for rule in sys.rules() {
        println!("  {}", sys.render_rule(rule));
    }
    let w = sys.parse_word("a a* b b*")?;
    println!("normal form of a a* b b*: {}", sys.normal_form_word(&w).render(sys.alphabet()));
    Ok(())
}
