//! Osculating developables of rational normal curves and the envelope of
//! their osculating hyperplanes.

use evolutes::chow::CurveInvariants;
use evolutes::pipelines::osculating_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 3..=6 {
        let r = osculating_report(&CurveInvariants::rational_normal(n)?)?;
        println!("rational normal curve in P^{n}");
        for row in &r.results {
            println!("  {:<32} {:>2} {}", row.locus, row.k, row.engine_degree);
        }
    }
    Ok(())
}
