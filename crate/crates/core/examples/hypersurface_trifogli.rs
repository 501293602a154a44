//! Focal loci of smooth hypersurfaces against Trifogli's closed form.

use evolutes::closed_forms::trifogli;
use evolutes::pipelines::hypersurface_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 2..=5 {
        for d in 2..=5 {
            let r = hypersurface_report(n, d)?;
            let e = &r.results[0].engine_degree;
            println!("P^{n}, d = {d}: engine {e}, closed form {}", trifogli(n, d));
        }
    }
    Ok(())
}
