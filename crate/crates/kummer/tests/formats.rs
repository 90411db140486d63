use kummer::formats::*;
use kummer_core::codes::ag_code;
use kummer_core::constructions::{teocodes1, teocodes_r};
use kummer_core::{presets, CurveFunction, Divisor, Field, FieldElement, KummerCurve, Place, Poly};
use serde_json::json;

fn same_curve(a: &KummerCurve, b: &KummerCurve) {
    assert_eq!(curve_to_json(a), curve_to_json(b));
    assert_eq!(a.genus(), b.genus());
    assert_eq!(a.field().modulus(), b.field().modulus());
}

#[test]
fn fields_round_trip() {
    for (p, e) in [(2, 1), (2, 3), (3, 2), (3, 6), (5, 2), (7, 1)] {
        let f = Field::new(p, e).unwrap();
        let back = field_from_json(&field_to_json(&f)).unwrap();
        assert_eq!(back.modulus(), f.modulus());
        assert_eq!(back.size(), f.size());
    }
}

#[test]
fn modulus_is_optional_but_checked() {
    let f = field_from_json(&json!({"p": 3, "e": 2})).unwrap();
    assert_eq!(f.modulus(), [2, 1, 1]);
    let err = field_from_json(&json!({"p": 3, "e": 2, "modulus": [1, 0, 1]})).unwrap_err();
    assert_eq!(err.code(), "FormatError");
    assert!(field_from_json(&json!({"p": 4, "e": 1})).is_err());
}

#[test]
fn preset_curves_round_trip() {
    for name in presets::NAMES {
        let c = presets::by_name(name).unwrap();
        same_curve(&c, &curve_from_json(&curve_to_json(&c)).unwrap());
    }
}

#[test]
fn shipped_curve_files_match_presets() {
    for name in presets::NAMES {
        let path = format!("{}/curves/{name}.json", env!("CARGO_MANIFEST_DIR"));
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        same_curve(&presets::by_name(name).unwrap(), &curve_from_json(&v).unwrap());
    }
}

#[test]
fn leading_defaults_to_one() {
    let c = curve_from_json(&json!({"field": {"p": 3, "e": 2}, "m": 4, "roots": [{"a": 0, "lambda": 1}]})).unwrap();
    assert_eq!(c.leading(), FieldElement::ONE);
}

#[test]
fn bad_curves_are_rejected() {
    // m divisible by the characteristic
    let v = json!({"field": {"p": 3, "e": 2}, "m": 3, "roots": [{"a": 0, "lambda": 1}]});
    assert_ne!(curve_from_json(&v).unwrap_err().code(), "FormatError");
    assert!(curve_from_json(&json!({"field": {"p": 3, "e": 2}, "m": 4})).is_err());
    assert!(curve_from_json(&json!({"field": {"p": 3, "e": 2}, "m": 4, "roots": [{"a": 9, "lambda": 1}]})).is_err());
}

#[test]
fn divisors_round_trip() {
    let h3 = presets::hermitian(3).unwrap();
    let x = FieldElement::from_encoding(1);
    let fiber = h3.affine_fiber(x);
    let d = Divisor::from_pairs([
        (Place::Infinity, -7),
        (Place::RamifiedRoot(0), 2),
        (Place::RamifiedRoot(2), 5),
        (fiber[0], -1),
        (fiber[3], 4),
    ]);
    let v = divisor_to_json(&d);
    assert_eq!(divisor_from_json(&v).unwrap(), d);
    assert_eq!(divisor_on(&h3, &v).unwrap(), d);
    let off = json!({"coeffs": [{"place": "root:7", "c": 1}]});
    assert!(divisor_from_json(&off).is_ok());
    assert!(divisor_on(&h3, &off).is_err());
    assert_eq!(divisor_from_json(&json!({"coeffs": [{"place": "nowhere", "c": 1}]})).unwrap_err().code(), "ParseError");
}

#[test]
fn functions_round_trip() {
    let h3 = presets::hermitian(3).unwrap();
    let f = h3.field();
    let e = FieldElement::from_encoding;
    let num = Poly::from_coeffs(vec![e(1), e(0), e(4)]);
    let den = Poly::from_coeffs(vec![e(2), e(1)]);
    let g = CurveFunction::monomial(4, 2, num, den)
        .unwrap()
        .add(&CurveFunction::x_minus(&h3, e(3)), f)
        .add(&CurveFunction::y(&h3), f);
    let back = function_from_json(&h3, &function_to_json(&g)).unwrap();
    assert_eq!(back, g);
}

#[test]
fn codes_round_trip() {
    let h3 = presets::hermitian(3).unwrap();
    let places: Vec<Place> = h3.split_x_values().into_iter().flat_map(|x| h3.affine_fiber(x)).collect();
    let code = ag_code(&h3, &places, &Divisor::single(Place::Infinity, 9)).unwrap();
    let v = code_to_json(&code);
    assert_eq!(v["N"], 24);
    assert_eq!(v["k"], 7);
    let back = code_from_json(&v).unwrap();
    assert_eq!(back.generator(), code.generator());

    let mut wrong_k = v.clone();
    wrong_k["k"] = json!(6);
    assert!(code_from_json(&wrong_k).is_err());
    let mut dependent = v.clone();
    dependent["generator"][1] = dependent["generator"][0].clone();
    assert!(code_from_json(&dependent).is_err());
}

#[test]
fn construction_results_round_trip() {
    let h3 = presets::hermitian(3).unwrap();
    let e = Divisor::from_pairs([(Place::Infinity, -1), (Place::RamifiedRoot(1), 1), (Place::RamifiedRoot(2), 2)]);
    let er = Divisor::from_pairs([(Place::RamifiedRoot(1), 1), (Place::RamifiedRoot(2), 2)]);
    let results = [teocodes1(&h3, &e, 3, None).unwrap(), teocodes_r(&h3, &er, 2, None).unwrap()];
    for r in &results {
        for emit in [false, true] {
            let v = result_to_json(&h3, r, divisor_to_json(&e), emit);
            let text = serde_json::to_string_pretty(&v).unwrap();
            let stored = result_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(stored.d_places, r.d_places);
            assert_eq!(stored.g, r.g);
            assert_eq!(stored.h, r.h);
            assert_eq!(stored.certificates, r.certificates);
            assert_eq!(stored.codes.is_some(), emit);
            if let Some((a, b)) = stored.codes {
                assert_eq!(a.generator(), r.codes.0.generator());
                assert_eq!(b.generator(), r.codes.1.generator());
            }
            assert_eq!(v["report"]["verdict"], "LCP");
        }
    }
}

#[test]
fn places_round_trip() {
    let h3 = presets::hermitian(3).unwrap();
    let all = h3.rational_places().places;
    assert_eq!(places_from_json(&h3, &places_to_json(&all)).unwrap(), all);
}
