//! Two-variable Laurent polynomials in `z` and `a`.

use braidex::polynomial::Laurent2;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: Laurent2 = "2 z^0 a^-2 + -1 z^0 a^-4 + 1 z^2 a^-2".parse()?;
    let delta = Laurent2::unlink_factor();
    println!("p = {p}");
    println!("delta = {delta}");
    println!("p * delta = {}", &p * &delta);
    println!("p - mirror(p) = {}", &p - &p.mirror_substitute());
    println!("mirror(p) = {}", p.mirror_substitute());
    println!("p^5 has {} terms", p.pow(5).len());
    let ex = p.a_extremes()?;
    println!("E = {}, e = {}, span {:?}", ex.e_max, ex.e_min, p.a_span());
    println!("top coefficient in z: {:?}", ex.p_h.terms());
    println!("as JSON: {}", serde_json::to_string(&p)?);
    Ok(())
}
