//! Formula against the HOMFLY oracle over a small enumerated family.
//!
//! ```text
//! cargo run --release --example verify_family -- 10
//! ```

use braidex::homfly::{HomflyConfig, HomflyEngine};
use braidex::verify::{run_family, write_report, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(9);
    let engine = HomflyEngine::new(HomflyConfig::default());
    for family in [Family::Rational, Family::Montesinos] {
        let records = run_family(&engine, family, max, 4, false)?;
        let summary = write_report(&records, &mut std::io::sink())?;
        println!("{family:?} up to {max} crossings: {summary:?}");
        if let Some(r) = records.iter().max_by_key(|r| r.crossings) {
            println!("  e.g. {}", r.to_json());
        }
    }
    Ok(())
}
