//! Salmon's characters of a space curve checked against the engine, and the
//! classical evolute values for surfaces.

use evolutes::chow::CurveInvariants;
use evolutes::closed_forms::salmon_reference;
use evolutes::pipelines::salmon_consistency;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // a genus-1 quartic with one stationary osculating plane
    let inv = CurveInvariants::new(3, 4, 1, &[0, 1])?;
    print!("{}", salmon_consistency(&inv)?.to_text());
    println!();
    for d in 2..=6 {
        let s = salmon_reference(d);
        println!("d = {d}: evolute class {}, ED degree {}, umbilics {}", s.evolute_class, s.ed_degree, s.umbilics);
    }
    Ok(())
}
