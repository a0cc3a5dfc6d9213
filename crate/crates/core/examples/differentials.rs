//! Differentials computed by leading-term elimination, compared with the
//! closed forms. On two parallel edges the closed form misses terms; this
//! prints a few of them.
//!
//! cargo run --release --example differentials

use anick::leavitt::{closed_form_differential, suite, Leavitt};
use anick::{Augmentation, Rationals, Resolution};

fn main() -> anick::Result<()> {
    let lv = Leavitt::new(suite()[3].1.clone())?;
    let sys = lv.gsb(Rationals)?;
    let eps = Augmentation::zero(&Rationals, sys.alphabet());
    let mut res = Resolution::new(sys, eps, 12)?;
    res.build(3)?;
    let a = res.system().alphabet().clone();

    for text in ["a a*", "b* a", "a a* b", "b* a a*"] {
        let c = a.parse_word(text)?;
        let n = c.len() - 1;
        let engine = res.differential(n, &c)?;
        let formula = closed_form_differential(&lv, &res, n, &c);
        println!("d_{n}({text} ⊗ 1) = {}", engine.render(&a));
        if &formula != engine {
            println!("  closed form: {}", formula.render(&a));
            println!("  missing:     {}", engine.sub(&formula).render(&a));
        }
    }

    // The split map inverts d on cycles.
    let c = a.parse_word("a a* b")?;
    let omega = res.apply_d(1, res.differential(2, &c)?)?;
    println!("\nd_1 d_2(a a* b) is zero: {}", omega.is_zero());
    let cycle = res.differential(2, &c)?.clone();
    let lift = res.split(2, &cycle)?;
    println!("split(d_2(a a* b)) = {}", lift.render(&a));
    println!("d_2 of the lift recovers it: {}", res.apply_d(2, &lift)? == cycle);
    Ok(())
}
