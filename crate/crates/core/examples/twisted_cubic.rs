//! Envelope of normal planes of the twisted cubic, its cuspidal edge and the
//! cusps of that edge, computed on the projective bundle of the normal sheaf.

use evolutes::bundle::BundleSpace;
use evolutes::chow::{CurveInvariants, CurveModel};
use evolutes::pipelines::{curve_report, sigma_degrees};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let inv = CurveInvariants::new(3, 3, 0, &[0])?;
    let model = CurveModel::new(&inv)?;
    let b = BundleSpace::new(&model.variety, &model.normal)?;
    println!("c(E) = {}", model.normal.total_chern());
    println!("cbar_1 = {}", b.virtual_chern(1)[0]);
    println!("degrees = {:?}", sigma_degrees(&b, 3)?);
    print!("{}", curve_report(&inv)?.to_text());
    Ok(())
}
