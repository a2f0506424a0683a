mod common;

use braidex::diagram::{OrientedDiagram, PdCode};
use braidex::homfly::homfly;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn json_round_trip(d in common::diagram()) {
        let pd = d.to_pd();
        let back = PdCode::from_json(&pd.to_json()).unwrap();
        prop_assert_eq!(&back, &pd);
        let e = OrientedDiagram::from_pd(&back).unwrap();
        prop_assert_eq!(e.to_pd(), pd);
        prop_assert_eq!(e.writhe(), d.writhe());
        prop_assert_eq!(e.component_count(), d.component_count());
        prop_assert_eq!(e.seifert_circle_count(), d.seifert_circle_count());
        prop_assert_eq!(homfly(&e).unwrap(), homfly(&d).unwrap());
    }
}

#[test]
fn bad_codes_rejected() {
    for s in [
        r#"{"components":1,"crossings":[{"edges":[0,1,1,0],"over":2}],"orientations":[1]}"#,
        r#"{"components":1,"crossings":[{"edges":[0,3,1,4]}],"orientations":[1]}"#,
        r#"{"components":0,"crossings":[{"edges":[0,3,1,4],"over":0},{"edges":[4,1,5,2],"over":0},{"edges":[2,5,3,0],"over":0}],"orientations":[]}"#,
        "not json",
    ] {
        let r = PdCode::from_json(s).and_then(|pd| OrientedDiagram::from_pd(&pd));
        assert!(r.is_err(), "{s}");
    }
}

#[test]
fn free_loops_and_reversal() {
    let pd = PdCode::from_json(
        r#"{"components":2,"crossings":[{"edges":[0,3,1,4],"over":0},{"edges":[4,1,5,2],"over":0},{"edges":[2,5,3,0],"over":0}],"orientations":[0,1]}"#,
    )
    .unwrap();
    let d = OrientedDiagram::from_pd(&pd).unwrap();
    assert_eq!(d.component_count(), 2);
    assert_eq!(d.free_loops(), 1);
    assert_eq!(d.crossing_count(), 3);
}
