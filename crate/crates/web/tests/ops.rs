use bicompat_web::{band_report, example_report, star_report};
use serde_json::json;

#[test]
fn band_dimensions_match_the_classification() {
    let r = band_report(2, 2, "Q").unwrap();
    assert_eq!(r["dim"], 4);
    assert_eq!(r["annihilator"], 1);
    assert_eq!(r["centroid"], 1);
    assert_eq!(
        r["spaces"],
        json!({"compatible": 13, "id-matching": 4, "interchangeable": 1, "swap-matching": 5, "totally-compatible": 1})
    );
    let r = band_report(1, 3, "F2").unwrap();
    assert_eq!(r["spaces"]["swap-matching"], r["spaces"]["totally-compatible"]);
}

#[test]
fn band_input_errors() {
    assert!(band_report(4, 1, "Q").is_err());
    assert!(band_report(0, 2, "Q").is_err());
    assert!(band_report(2, 2, "F6").is_err());
}

#[test]
fn example_classifications() {
    let r = example_report("3dim", "Q").unwrap();
    let holds = |p: usize, kind: &str| {
        r["products"][p]["relations"]
            .as_array()
            .unwrap()
            .iter()
            .find(|x| x["kind"] == kind)
            .unwrap()["holds"]
            .clone()
    };
    assert_eq!(holds(0, "swap-matching"), true);
    assert_eq!(holds(0, "id-matching"), false);
    assert_eq!(holds(1, "id-matching"), true);
    assert_eq!(holds(1, "interchangeable"), false);
    let fail = r["products"][0]["relations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["kind"] == "id-matching")
        .unwrap();
    assert_eq!(fail["witness"]["at"].as_array().unwrap().len(), 3);

    let r = example_report("band22", "Q").unwrap();
    assert_eq!(r["products"][0]["associative"], true);
    assert!(example_report("7dim", "Q").is_err());
}

#[test]
fn star_condition_reports() {
    let concat = r#"{"vars": "xy", "field": "Q", "table": {"x,x": [["xx", "1"]], "x,y": [["xy", "1"]], "y,x": [["yx", "1"]], "y,y": [["yy", "1"]]}}"#;
    assert_eq!(star_report(concat).unwrap(), json!({"pass": true, "witness": null}));
    let bad = r#"{"vars": "xy", "field": "Q", "table": {"x,x": [["x", "1"]], "x,y": [["x", "1"]]}}"#;
    let r = star_report(bad).unwrap();
    assert_eq!(r["pass"], false);
    assert!(r["witness"]["at"].is_array());
    assert!(star_report("not json").is_err());
}
