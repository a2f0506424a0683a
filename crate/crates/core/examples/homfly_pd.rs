//! HOMFLY polynomial, MWF bound and Morton bounds of a PD-code file.
//!
//! ```text
//! cargo run --example homfly_pd -- crates/core/examples/data/trefoil.json
//! ```

use braidex::diagram::{OrientedDiagram, PdCode};
use braidex::homfly::{homfly, morton_bounds_check, mwf_lower_bound};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/trefoil.json").to_string()
    });
    let d = OrientedDiagram::from_pd(&PdCode::from_json(&std::fs::read_to_string(&path)?)?)?;
    let h = homfly(&d)?;
    let m = morton_bounds_check(&d, &h)?;
    println!(
        "{path}: {} crossings, {} components",
        d.crossing_count(),
        d.component_count()
    );
    println!("H = {h}");
    println!(
        "E = {}, e = {}, braid index >= {}",
        m.e_max,
        m.e_min,
        mwf_lower_bound(&h)?
    );
    println!(
        "s = {}, w = {}, Morton slack {} / {}",
        m.s, m.w, m.upper_slack, m.lower_slack
    );
    println!("mirror: H = {}", homfly(&d.mirror())?);
    Ok(())
}
