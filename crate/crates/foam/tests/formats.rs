use foam::formats::{self, parse_input, Input};
use foam::FoamError;
use foam_core::annular::BraidWord;
use foam_core::foams_sl3::{Foam3, Theory3};
use foam_core::surfaces_sl2::{AnchoredSurface, Component2};
use serde_json::json;

fn parse(v: serde_json::Value) -> Result<Input, FoamError> {
    parse_input(&v.to_string())
}

fn round_trip(input: &Input) {
    let text = formats::input_to_json(input).to_string();
    assert_eq!(&parse_input(&text).unwrap(), input, "{text}");
}

#[test]
fn sphere_file_evaluates_to_alpha_one() {
    let input = parse(json!({
        "theory": "sl2",
        "components": [{"genus": 0, "dots": 1, "shifted": [0, 0], "anchors": [0, 1], "bottom": [], "top": []}],
        "anchor_labels": [2, 2]
    }))
    .unwrap();
    let Input::Surface(s) = &input else { panic!("expected a surface") };
    assert_eq!(s, &AnchoredSurface::sphere(1, &[2, 2]));
    let v = s.evaluate().unwrap();
    assert_eq!(v.pretty(), "α₁");
    let out = formats::evaluation_to_json(&input, &v);
    assert_eq!(out["value"], "a1");
    assert_eq!(out["terms"], json!([{"coeff": 1, "exps": [1, 0]}]));
}

#[test]
fn seam_with_two_sides_is_rejected() {
    let err = parse(json!({
        "theory": "sl3u",
        "facets": [{"slots": 1}, {"slots": 1}],
        "seams": [{"sides": [[0, 0], [1, 0]]}]
    }))
    .unwrap_err();
    assert!(matches!(&err, FoamError::InvariantViolation(m) if m.contains("2 sides")), "{err}");
}

#[test]
fn bad_labels_and_signs_are_invariant_violations() {
    let err = parse(json!({"theory": "sl3o", "facets": [{"anchors": [0, 1]}], "anchor_labels": [4, 4]})).unwrap_err();
    assert!(matches!(err, FoamError::InvariantViolation(_)), "{err}");
    let err = parse(json!({
        "theory": "sl3u", "facets": [{"anchors": [0, 1]}], "anchor_labels": [1, 1], "anchor_signs": [1, -1]
    }))
    .unwrap_err();
    assert!(matches!(err, FoamError::InvariantViolation(_)), "{err}");
    let err = parse(json!({"theory": "sl2", "components": [{"anchors": [0]}], "anchor_labels": [1]})).unwrap_err();
    assert!(matches!(err, FoamError::InvariantViolation(_)), "{err}");
    let err = parse(json!({"theory": "braid", "strands": 2, "word": [2]})).unwrap_err();
    assert!(matches!(err, FoamError::InvariantViolation(_)), "{err}");
}

#[test]
fn schema_errors_name_the_field() {
    let err = parse(json!({"theory": "sl2", "components": [{"genus": 0, "colour": 3}]})).unwrap_err();
    match err {
        FoamError::Schema { path, message } => {
            assert_eq!(path, "components[0].colour");
            assert!(message.contains("colour"), "{message}");
        }
        e => panic!("unexpected {e}"),
    }
    let err = parse(json!({"theory": "sl3o", "facets": [{"dots": -1}]})).unwrap_err();
    assert!(matches!(&err, FoamError::Schema { path, .. } if path == "facets[0].dots"), "{err}");
    let err = parse(json!({"components": []})).unwrap_err();
    assert!(matches!(&err, FoamError::Schema { path, .. } if path == "theory"), "{err}");
    let err = parse(json!({"theory": "sl4", "facets": []})).unwrap_err();
    assert!(matches!(&err, FoamError::Schema { path, .. } if path == "theory"), "{err}");
    assert!(matches!(parse_input("{not json"), Err(FoamError::Schema { .. })));
}

#[test]
fn round_trips() {
    let surface = AnchoredSurface {
        components: vec![
            Component2 { genus: 2, dots: 1, shifted: [1, 0], anchors: vec![0, 3], ..Component2::default() },
            Component2 { anchors: vec![1, 2], ..Component2::default() },
        ],
        anchor_labels: vec![1, 2, 2, 1],
    };
    round_trip(&Input::Surface(surface));
    round_trip(&Input::Foam(Foam3::theta(Theory3::Unoriented, [1, 0, 2], &[1, 2, 3])));
    let mut oriented = Foam3::theta(Theory3::Oriented, [2, 1, 0], &[3, 1, 2]);
    oriented.anchor_signs = vec![1, 1, 1];
    round_trip(&Input::Foam(oriented));
    round_trip(&Input::Foam(Foam3::sphere(Theory3::Oriented, 3, &[])));
    round_trip(&Input::Braid(BraidWord::new(3, vec![1, -2, 1]).unwrap()));
    round_trip(&Input::Braid(BraidWord::identity(2)));
}

#[test]
fn foam_file_matches_constructor() {
    let input = parse(json!({
        "theory": "sl3o",
        "facets": [{"genus": 0, "dots": 2, "anchors": [], "slots": 1}, {"dots": 0, "slots": 1}, {"dots": 1, "slots": 1}],
        "seams": [{"sides": [[0, 0], [2, 0], [1, 0]]}]
    }))
    .unwrap();
    assert_eq!(input, Input::Foam(Foam3::theta(Theory3::Oriented, [2, 0, 1], &[])));
    let Input::Foam(f) = input else { unreachable!() };
    assert_eq!(f.evaluate().unwrap().as_constant(), Some(-1));
}
