//! The resolution engine on an algebra given directly by rewrite rules:
//! k<x, y> / (x x, y y, y x - x y), the commutative ring k[x, y]/(x², y²).
//!
//! cargo run --example truncated_polynomial

use anick::homology::tor_dims;
use anick::rewriting::RewriteRule;
use anick::{Alphabet, Augmentation, Field, FreePolynomial, Rationals, Resolution, RewriteSystem};

fn main() -> anick::Result<()> {
    let a = Alphabet::plain(&["x", "y"])?;
    let w = |s: &str| a.parse_word(s);
    let rules = vec![
        RewriteRule::new(w("x x")?, FreePolynomial::zero()),
        RewriteRule::new(w("y y")?, FreePolynomial::zero()),
        RewriteRule::new(w("y x")?, FreePolynomial::monomial(w("x y")?, Rationals.one())),
    ];
    let sys = RewriteSystem::new(Rationals, a.clone(), rules)?;
    println!("unresolved compositions: {}", sys.check_compositions().len());
    println!("normal words up to length 3: {}", sys.irreducible_words(3).len());

    let eps = Augmentation::zero(&Rationals, sys.alphabet());
    let mut res = Resolution::new(sys, eps, 12)?;
    let report = res.verify_complex(3, 6)?;
    println!("complex clean: {}", report.is_clean());
    for n in 1..=3 {
        for c in res.chains(n)?.chains() {
            println!("d_{n}({} ⊗ 1) = {}", a.render(c), res.differential(n, c)?.render(&a));
        }
    }
    println!("Tor dims: {:?}", tor_dims(&mut res, 4)?.dims);
    Ok(())
}
