//! Braid index of a two-bridge link for each orientation.
//!
//! ```text
//! cargo run --example rational_braid_index -- 17426/4117
//! ```

use braidex::rational::{
    braid_index_rational, odd_continued_fraction, orientations, parse_pair, Form, Fraction,
};
use braidex::reduction::reduction_rational;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "17426/4117".to_string());
    let (alpha, beta) = parse_pair(&arg)?;
    let f = Fraction::new(alpha, beta)?;
    let cf = odd_continued_fraction(f);
    println!(
        "b({alpha},{beta}): odd continued fraction {cf}, {} crossings",
        cf.crossing_count()
    );

    for o in orientations(&cf)? {
        let b = braid_index_rational(&o.signed, Form::Standard)?;
        let r = reduction_rational(&o.signed);
        let s = o.diagram.diagram.seifert_circle_count() as u32;
        println!(
            "  {:<4} {:<28} blocks {}  s = {s}  r = {}+{}  b = {b}",
            o.choice.to_string(),
            o.signed.to_string(),
            o.signed.blocks().len(),
            r.r_plus,
            r.r_minus
        );
        assert_eq!(s - r.r_total, b);
    }
    Ok(())
}
