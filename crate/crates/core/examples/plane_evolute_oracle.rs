//! Evolute of a plane curve by exact elimination, compared with the degree
//! the Chern class engine predicts.

use evolutes::pipelines::oracle_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let curve = std::env::args().nth(1).unwrap_or_else(|| "x^2/4 + y^2 - 1".into());
    print!("{}", oracle_report(&curve, 0, 0, None)?.to_text());
    Ok(())
}
