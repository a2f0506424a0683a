//! Resolving tree of a small diagram, one JSON object per node.

use braidex::homfly::{HomflyConfig, HomflyEngine};
use braidex::rational::{odd_continued_fraction, orient_4plat, Choice, Fraction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // figure eight knot
    let o = orient_4plat(&odd_continued_fraction(Fraction::new(5, 2)?), Choice::Knot)?;
    let engine = HomflyEngine::new(HomflyConfig::default());
    let mut buf = Vec::new();
    let h = engine.homfly_traced(&o.diagram.diagram, &mut buf)?;
    print!("{}", String::from_utf8(buf)?);
    println!("H = {h}");
    Ok(())
}
