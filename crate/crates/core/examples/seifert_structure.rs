//! Seifert circles, the Seifert graph and its lone crossings.

use braidex::diagram::build_elementary_torus;
use braidex::montesinos::MontesinosPresentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: MontesinosPresentation = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "7/19,1/3,1/2,e=0".into())
        .parse()?;
    for td in p.build().orientations() {
        let sd = td.diagram.seifert_decompose()?;
        let g = sd.graph();
        println!(
            "{p} #{}: s = {}, w = {}, {} circle pairs, sigma+ {}, sigma- {}, bipartite {}",
            td.choice,
            sd.circle_count(),
            td.diagram.writhe(),
            g.edges().len(),
            g.sigma_plus(),
            g.sigma_minus(),
            g.is_bipartite()
        );
        for e in g.lone_edges() {
            println!(
                "    lone crossing {} between circles {:?}, sign {:+}",
                e.crossings[0],
                e.circles,
                e.sign.unwrap()
            );
        }
    }

    for (m, parallel) in [(5, true), (4, false)] {
        let d = build_elementary_torus(m, parallel)?;
        let g = d.seifert_decompose()?.graph();
        let mult: Vec<usize> = g.edges().iter().map(|e| e.multiplicity()).collect();
        println!(
            "torus builder m = {m}, parallel = {parallel}: s = {}, multiplicities {mult:?}",
            g.vertex_count()
        );
    }
    Ok(())
}
