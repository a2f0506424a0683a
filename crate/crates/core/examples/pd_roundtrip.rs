//! Writes a built diagram as a PD-code file, reads it back and compares
//! invariants.
//!
//! ```text
//! cargo run --example pd_roundtrip -- 7/19,1/3,1/2,e=0 /tmp/12a304.json
//! ```

use braidex::diagram::{OrientedDiagram, PdCode};
use braidex::homfly::homfly;
use braidex::montesinos::MontesinosPresentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let input = args
        .next()
        .unwrap_or_else(|| "7/19,1/3,1/2,e=0".to_string());
    let path = args.next().unwrap_or_else(|| {
        std::env::temp_dir()
            .join("braidex-pd.json")
            .display()
            .to_string()
    });

    let p: MontesinosPresentation = input.parse()?;
    let d = p.build().orient(0)?.diagram;
    let pd = d.to_pd();
    std::fs::write(&path, pd.to_json())?;
    println!("{p}: {} crossings written to {path}", d.crossing_count());

    let back = OrientedDiagram::from_pd(&PdCode::from_json(&std::fs::read_to_string(&path)?)?)?;
    assert_eq!(back.to_pd(), pd, "PD code round trip");
    assert_eq!(back.writhe(), d.writhe());
    assert_eq!(back.seifert_circle_count(), d.seifert_circle_count());
    assert_eq!(homfly(&back)?, homfly(&d)?);
    println!(
        "round trip ok: w = {}, s = {}",
        back.writhe(),
        back.seifert_circle_count()
    );
    Ok(())
}
