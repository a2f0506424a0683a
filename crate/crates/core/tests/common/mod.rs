//! Diagram strategies shared by the property tests and the acceptance run.

#![allow(dead_code)]

use braidex::diagram::tangle::Tangle;
use braidex::diagram::{build_elementary_torus, OrientedDiagram};
use braidex::polynomial::Laurent2;
use proptest::prelude::*;

/// Odd-length continued fraction entries with sum at most `max`.
pub fn cf(max: u32) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(1u32..=4, 1..=5).prop_map(move |mut v| {
        if v.len() % 2 == 0 {
            v.pop();
        }
        while v.iter().sum::<u32>() > max && v[0] > 1 {
            v[0] -= 1;
        }
        while v.iter().sum::<u32>() > max && v.len() > 1 {
            v.truncate(v.len() - 2);
        }
        if v == [1] {
            v[0] = 2;
        }
        v
    })
}

pub fn diagram() -> impl Strategy<Value = OrientedDiagram> {
    let rational = (cf(10), any::<u8>()).prop_map(|(v, c)| {
        let closed = Tangle::rational(&v, 0).denominator();
        closed
            .orient(c as usize % closed.orientation_count())
            .unwrap()
            .diagram
    });
    let montesinos = (cf(4), cf(4), 0u32..=2, any::<u8>()).prop_map(|(a, b, e, c)| {
        let closed = Tangle::rational(&a, 0)
            .sum(Tangle::rational(&b, 1))
            .sum(Tangle::integer(e))
            .numerator();
        closed
            .orient(c as usize % closed.orientation_count())
            .unwrap()
            .diagram
    });
    let torus = (1usize..=7, any::<bool>(), any::<bool>()).prop_map(|(m, par, mirror)| {
        let m = if par { m } else { 2 * m.div_ceil(2) };
        let d = build_elementary_torus(m, par).unwrap();
        if mirror {
            d.mirror()
        } else {
            d
        }
    });
    prop_oneof![rational, montesinos, torus]
}

pub fn a() -> Laurent2 {
    Laurent2::monomial(1, 0, 1)
}

pub fn a_inv() -> Laurent2 {
    Laurent2::monomial(1, 0, -1)
}

pub fn z() -> Laurent2 {
    Laurent2::monomial(1, 1, 0)
}
