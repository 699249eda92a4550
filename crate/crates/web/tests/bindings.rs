use homdual_web::{qbinom_expansion_json, residual_grid_json, sequence_table_json};
use serde_json::Value;

const DELANNOY: &str = r#"{"kind":"bipoly","r":1,"s":1,"coeffs":[[null,"1"],["1","1"]]}"#;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn qbinom_expansion_agrees_with_hom_power() {
    let v = parse(&qbinom_expansion_json(2, "2", "3").unwrap());
    assert_eq!(v["formula"], "9*x^2 + 27*x*y + 9*y^2");
    assert_eq!(v["agree"], true);
    for n in 1..=6 {
        let v = parse(&qbinom_expansion_json(n, "5/3", "2").unwrap());
        assert_eq!(v["agree"], true, "n = {n}");
    }
    assert!(qbinom_expansion_json(2, "0", "1").unwrap_err().contains("q"));
    assert!(qbinom_expansion_json(2, "1", "x").unwrap_err().starts_with("k:"));
}

#[test]
fn delannoy_table_and_zero_residuals() {
    let t = sequence_table_json(DELANNOY, 1, "1", "", "1", 5, 5).unwrap();
    let v = parse(&t);
    assert_eq!(v["entries"][3][3], "63");
    assert_eq!(v["entries"][5][5], "1683");
    let grid = parse(&residual_grid_json(&t, DELANNOY, 1, "1", "1").unwrap());
    assert_eq!(grid["nonzero"], 0);
    assert_eq!(grid["residuals"][0][0], Value::Null);
    assert_eq!(grid["residuals"][1][1], "0");
}

#[test]
fn twisted_tables_need_their_own_stencil() {
    let plain = sequence_table_json(DELANNOY, 2, "2", "", "1", 4, 4).unwrap();
    let twisted = sequence_table_json(DELANNOY, 2, "2", "3", "1", 4, 4).unwrap();
    let on_plain = parse(&residual_grid_json(&plain, DELANNOY, 2, "2", "3").unwrap());
    let on_twisted = parse(&residual_grid_json(&twisted, DELANNOY, 2, "2", "3").unwrap());
    assert!(on_plain["nonzero"].as_u64().unwrap() > 0);
    assert_eq!(on_twisted["nonzero"], 0);
}

#[test]
fn bad_inputs_are_reported() {
    assert!(sequence_table_json("{", 1, "1", "", "1", 3, 3).unwrap_err().starts_with("h:"));
    assert!(sequence_table_json(DELANNOY, 4, "1", "", "1", 3, 3).is_err());
    assert!(residual_grid_json(DELANNOY, DELANNOY, 1, "1", "1").unwrap_err().starts_with("table:"));
}
