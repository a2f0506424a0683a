//! HOMFLY extremes of the 25-crossing diagram of M(17/44,7/10,19/26,2),
//! which needs a raised crossing cap.
//!
//! ```text
//! cargo run --release --example large_montesinos
//! ```

use std::time::Instant;

use braidex::homfly::{mwf_lower_bound, HomflyConfig, HomflyEngine};
use braidex::montesinos::{braid_index_montesinos, MontesinosPresentation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: MontesinosPresentation = "17/44,7/10,19/26,e=2".parse()?;
    let engine = HomflyEngine::new(HomflyConfig {
        cap: 25,
        ..HomflyConfig::default()
    });
    for o in braid_index_montesinos(&p)?.orientations {
        let t = Instant::now();
        let h = engine.homfly(&o.diagram.diagram)?;
        let ex = h.a_extremes()?;
        println!(
            "#{} class {}: formula {}, E = {}, e = {}, MWF {} ({:.1} ms, {} terms)",
            o.choice,
            o.class.class,
            o.braid_index,
            ex.e_max,
            ex.e_min,
            mwf_lower_bound(&h)?,
            t.elapsed().as_secs_f64() * 1e3,
            h.len()
        );
    }
    Ok(())
}
