//! Symbolic Chern calculus on a formal base: the virtual classes of a
//! projective bundle and the Thom polynomials built from them.

use evolutes::bundle::{reference, BundleSpace};
use evolutes::thom::{thom_class, ThomProfile};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = BundleSpace::formal(2, 4)?;
    let cb = b.virtual_chern(3);
    for (i, c) in cb.iter().enumerate() {
        println!("cbar_{} = {c}", i + 1);
    }
    for k in 1..=3 {
        let p = ThomProfile::new(k)?;
        println!("{} = {}", p.symbol(), thom_class(p, &cb)?);
    }
    assert_eq!(thom_class(ThomProfile::new(3)?, &cb)?, reference::kappa_class(&b));
    // pushforward of z^k is the Segre class s_(k - 2)
    for k in 2..=4 {
        println!("pi_* z^{k} = {}", b.pushforward(&b.zeta().pow(k))?);
    }
    Ok(())
}
