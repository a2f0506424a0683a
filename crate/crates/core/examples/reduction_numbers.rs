//! Reduction numbers per block and the base equations they imply.

use braidex::homfly::{HomflyConfig, HomflyEngine};
use braidex::montesinos::{braid_index_montesinos, MontesinosPresentation};
use braidex::rational::{odd_continued_fraction, orientations, Fraction};
use braidex::reduction::{
    cycle_reduction, reduction_rational, verify_base_equations, ReductionReport,
};

fn show(label: &str, r: &ReductionReport) {
    println!("{label}: r+ = {}, r- = {}", r.r_plus, r.r_minus);
    for b in &r.per_block {
        let at = b
            .tangle
            .map(|t| format!("tangle {t}"))
            .unwrap_or_else(|| "-".into());
        println!(
            "    {at:<9} {:?} sign {:+} saves {}",
            b.entries, b.sign, b.reduction
        );
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = HomflyEngine::new(HomflyConfig {
        cap: 25,
        ..HomflyConfig::default()
    });

    let cf = odd_continued_fraction(Fraction::new(17426, 4117)?);
    for o in orientations(&cf)? {
        let r = reduction_rational(&o.signed);
        show(&format!("b(17426,4117) {}", o.choice), &r);
        let be = verify_base_equations(&engine, &o.diagram.diagram, r.r_plus, r.r_minus)?;
        println!(
            "    s = {}, w = {}, E = {}, e = {}, base equations hold: {}",
            be.s,
            be.w,
            be.e_max,
            be.e_min,
            be.hold()
        );
    }

    let p: MontesinosPresentation = "17/44,7/10,19/26,e=2".parse()?;
    for o in braid_index_montesinos(&p)?.orientations {
        let r = o.reduction(p.e);
        show(&format!("{p} #{}", o.choice), &r);
        let be = verify_base_equations(&engine, &o.diagram.diagram, r.r_plus, r.r_minus)?;
        println!(
            "    s = {}, E = {}, e = {}, base equations hold: {}",
            be.s,
            be.e_max,
            be.e_min,
            be.hold()
        );
    }

    println!("cycle of 8 circles, k lone crossings:");
    for k in 0..=8 {
        print!(" {}", cycle_reduction(4, k)?);
    }
    println!();
    Ok(())
}
