//! Skein, mirror, connected-sum and unlink identities on builder diagrams.

mod common;

use braidex::diagram::OrientedDiagram;
use braidex::homfly::homfly;
use braidex::polynomial::Laurent2;
use common::{a, a_inv, diagram, z};
use proptest::prelude::*;

const CASES: u32 = 500;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn skein_identity(d in diagram(), pick in any::<usize>()) {
        prop_assume!(d.crossing_count() > 0);
        let x = pick % d.crossing_count();
        let (plus, minus) = if d.crossings()[x].sign() > 0 { (d.clone(), d.switch_crossing(x)) } else { (d.switch_crossing(x), d.clone()) };
        let zero = d.smooth_crossing(x);
        let lhs = &(&a() * &homfly(&plus).unwrap()) - &(&a_inv() * &homfly(&minus).unwrap());
        prop_assert_eq!(lhs, &z() * &homfly(&zero).unwrap());
    }

    #[test]
    fn mirror_substitution(d in diagram()) {
        prop_assert_eq!(homfly(&d.mirror()).unwrap(), homfly(&d).unwrap().mirror_substitute());
    }

    #[test]
    fn connected_sum_multiplies(d1 in diagram(), d2 in diagram(), i in any::<usize>(), j in any::<usize>()) {
        let arc1 = i % d1.edge_count();
        let arc2 = j % d2.edge_count();
        let sum = d1.connected_sum(&d2, arc1, arc2).unwrap();
        prop_assert_eq!(sum.crossing_count(), d1.crossing_count() + d2.crossing_count());
        prop_assert_eq!(sum.writhe(), d1.writhe() + d2.writhe());
        prop_assert_eq!(homfly(&sum).unwrap(), &homfly(&d1).unwrap() * &homfly(&d2).unwrap());
    }

    #[test]
    fn unlinks(n in 1usize..=6, d in diagram(), extra in 0usize..=2) {
        prop_assert_eq!(homfly(&OrientedDiagram::unlink(n)).unwrap(), Laurent2::unlink_factor().pow(n - 1));
        // split unions multiply and pick up one factor per extra piece
        let u = d.disjoint_union(&OrientedDiagram::unlink(extra + 1));
        prop_assert_eq!(homfly(&u).unwrap(), &homfly(&d).unwrap() * &Laurent2::unlink_factor().pow(extra + 1));
    }
}
