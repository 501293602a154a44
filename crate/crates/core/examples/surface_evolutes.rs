//! Focal loci of smooth surfaces in P^3 for a range of degrees, plus one
//! surface given only by its Chern numbers.

use evolutes::chow::SurfaceChernNumbers;
use evolutes::pipelines::{surface_in_p3_report, surface_report};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>3} {:>8} {:>10} {:>10}", "d", "envelope", "cusp edge", "kappa");
    for d in 2..=8 {
        let r = surface_in_p3_report(d)?;
        let deg: Vec<String> = r.results.iter().take(3).map(|x| x.engine_degree.to_string()).collect();
        println!("{d:>3} {:>8} {:>10} {:>10}", deg[0], deg[1], deg[2]);
    }
    // a quartic K3 (K = 0) placed in P^4
    let k3 = SurfaceChernNumbers { k2: 0, c2: 24, kh: 0, h2: 4 };
    print!("\n{}", surface_report(4, &k3)?.to_text());
    Ok(())
}
