//! Class, per-tangle data and braid index of Montesinos links.
//!
//! ```text
//! cargo run --example montesinos_braid_index -- "12/19,2/3,1/2,e=0"
//! ```

use braidex::montesinos::{braid_index_montesinos, MontesinosPresentation};

fn report(input: &str) -> Result<(), Box<dyn std::error::Error>> {
    let p: MontesinosPresentation = input.parse()?;
    let r = braid_index_montesinos(&p)?;
    println!(
        "{p}  ({} crossings)  braid index {}",
        p.crossing_count(),
        r.braid_index
    );
    for o in &r.orientations {
        let tangles: Vec<String> = o
            .tangles
            .iter()
            .map(|t| format!("{}:p{}:{:+.2}", t.signed, t.parity, t.delta()))
            .collect();
        let d0 = o.delta0.map(|d| format!(" delta0 {d}")).unwrap_or_default();
        println!(
            "  #{} {} eta {}{d0}  {}  b = {}",
            o.choice,
            o.class.class,
            o.class.eta,
            tangles.join(" "),
            o.braid_index
        );
    }
    for o in &r.inadmissible {
        println!("  #{} inadmissible: {}", o.choice, o.reason);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        for s in [
            "7/19,1/3,1/2,e=0",
            "1/4,3/5,1/3,e=1",
            "12/19,2/3,e=2",
            "12/19,2/3,1/2,e=0",
            "17/44,7/10,19/26,e=2",
        ] {
            report(s)?;
        }
    }
    for s in &args {
        report(s)?;
    }
    Ok(())
}
