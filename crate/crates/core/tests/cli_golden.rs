use std::fs;
use std::path::PathBuf;

use homdual::cli::json::{parse_document, Document};
use homdual::cli::{run, Outcome};
use serde_json::Value;

fn homdual(args: &[&str]) -> Outcome {
    run(std::iter::once("homdual").chain(args.iter().copied()))
}

fn report(o: &Outcome) -> Value {
    serde_json::from_str(&o.stdout).expect("report is JSON")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).expect("golden file")
}

fn scratch(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("homdual-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

const VERIFY: &[&str] = &["verify", "examples/poly_quotient_N5_k2.json"];
const SEQ_GEN: &[&str] = &[
    "seq-gen", "--h", "examples/delannoy.json", "--case", "1", "--q", "1", "--boundary", "ones", "--M", "3", "--N", "3",
];
const SEQ_ORACLE: &[&str] = &[
    "seq-oracle", "--table", "examples/delannoy_table_8x8.json", "--h", "examples/delannoy.json", "--case", "1",
    "--q", "1", "--k", "1", "--all",
];
const EXPAND: &[&str] = &["expand", "--op", "qbinom-formula", "--n", "2", "--q", "2", "--k", "3"];

#[test]
fn dispatch_examples_match_golden_reports() {
    for (args, file) in [
        (VERIFY, "verify_poly_quotient.json"),
        (SEQ_GEN, "seq_gen_delannoy.json"),
        (SEQ_ORACLE, "seq_oracle_delannoy.json"),
        (EXPAND, "expand_qbinom.json"),
    ] {
        let first = homdual(args);
        assert_eq!(first.code, 0, "{args:?}: {}", first.stderr);
        assert_eq!(first.stdout, golden(file), "{args:?}");
        assert_eq!(homdual(args), first);
    }
}

#[test]
fn dispatch_example_values() {
    let r = report(&homdual(VERIFY));
    assert_eq!(r["status"], "pass");
    assert_eq!(r["violations"], Value::Array(vec![]));

    let r = report(&homdual(SEQ_GEN));
    assert_eq!(r["result"]["entries"][3][3], "63");
    assert_eq!(r["result"]["entries"][2][2], "13");

    let r = report(&homdual(SEQ_ORACLE));
    let residuals = r["result"]["residuals"].as_array().unwrap();
    assert_eq!(residuals.len(), 49);
    assert!(residuals.iter().all(|t| t[2] == "0"));

    let r = report(&homdual(EXPAND));
    assert_eq!(r["result"]["polynomial"], "9*x^2 + 27*x*y + 9*y^2");
}

#[test]
fn exit_codes() {
    let o = homdual(&["verify", "examples/invalid/broken_twisted_poly.json"]);
    assert_eq!(o.code, 1);
    let r = report(&o);
    assert_eq!(r["status"], "fail");
    assert!(!r["violations"].as_array().unwrap().is_empty());

    let o = homdual(&[
        "seq-oracle", "--table", "examples/delannoy_table_8x8.json", "--h", "examples/delannoy.json", "--case", "1",
        "--q", "1", "--k", "2", "--at", "2,2",
    ]);
    assert_eq!(o.code, 1);

    let o = homdual(&["verify", "examples/does_not_exist.json"]);
    assert_eq!(o.code, 2);
    assert_eq!(report(&o)["status"], "error");
    assert!(o.stderr.starts_with("error:"));

    assert_eq!(homdual(&["frobnicate"]).code, 2);
    assert_eq!(homdual(&["expand", "--op", "hom-power", "--n", "3", "--q", "0"]).code, 2);
}

#[test]
fn schema_errors_name_the_field() {
    let cases = [
        (r#"{"kind":"hom-algebra","dim":2,"products":[],"twist":[["1","0"],["0","0/0"]]}"#, "twist[1][1]"),
        (r#"{"kind":"hom-algebra","dim":2,"products":[[0,5,["1","0"]]],"twist":[["1","0"],["0","1"]]}"#, "products[0]"),
        (r#"{"kind":"bipoly","r":1,"s":1,"coeffs":[[null,"1"],["1","x"]]}"#, "coeffs[1][1]"),
        (r#"{"kind":"bisequence","M":1,"N":1,"entries":[["1","1"]]}"#, "entries"),
        (r#"{"kind":"mystery"}"#, "kind"),
    ];
    for (i, (body, field)) in cases.iter().enumerate() {
        let path = scratch(&format!("bad{i}.json"), body);
        let o = homdual(&["verify", &path]);
        assert_eq!(o.code, 2, "{body}");
        let msg = report(&o)["error"].as_str().unwrap().to_string();
        assert!(msg.contains(field), "{msg} should name {field}");
    }
}

fn reparse(v: &Value, kind: &str) -> Document {
    let doc = parse_document(v).unwrap_or_else(|e| panic!("{kind}: {e}"));
    assert_eq!(doc.kind(), kind);
    doc
}

#[test]
fn structured_results_reparse() {
    let r = report(&homdual(&["dualize", "examples/twisted_poly_N2_k2.json"]));
    reparse(&r["result"], "hom-coalgebra");
    let path = scratch("dual.json", &r["result"].to_string());
    assert_eq!(homdual(&["verify", &path]).code, 0);

    let r = report(&homdual(&["dualize", "examples/regular_module_N2_k2.json"]));
    reparse(&r["result"], "hom-comodule");
    let path = scratch("comodule.json", &r["result"].to_string());
    assert_eq!(homdual(&["verify", &path]).code, 0);

    let r = report(&homdual(&["dualize", "examples/module_twist_morphism.json"]));
    reparse(&r["result"], "morphism");
    let path = scratch("comodule_morphism.json", &r["result"].to_string());
    assert_eq!(homdual(&["verify", &path]).code, 0);

    let r = report(&homdual(SEQ_GEN));
    match reparse(&r["result"], "bisequence") {
        Document::Table(t) => assert_eq!((t.m_max(), t.n_max()), (3, 3)),
        _ => unreachable!(),
    }

    let r = report(&homdual(&["seq-minpoly", "--table", "examples/delannoy_table_8x8.json", "--rmax", "2", "--smax", "2"]));
    assert_eq!(r["result"]["text"], "x*y - x - y - 1");
    reparse(&r["result"]["bipoly"], "bipoly");

    let r = report(&homdual(&[
        "convolve", "--f", "examples/ones_6x6.json", "--g", "examples/ones_g_6x6.json", "--q", "1", "--M", "6", "--N", "6",
    ]));
    reparse(&r["result"], "bisequence");
    assert_eq!(r["result"]["entries"][0][6], "64");

    let r = report(&homdual(&["sweedler-delta", "--quotient", "poly:N=3,k=2", "--functional", "0,0,1,0"]));
    assert_eq!(r["status"], "pass");
}

#[test]
fn verify_all_covers_the_corpus() {
    let o = homdual(&["verify", "--all", "examples"]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    let r = report(&o);
    let files = r["result"]["files"].as_array().unwrap();
    let on_disk = fs::read_dir("examples")
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "json"))
        .count();
    assert_eq!(files.len(), on_disk);
    assert!(files.iter().all(|f| f["status"] == "pass"));
    assert_eq!(homdual(&["verify", "--all", "examples"]), o);

    let o = homdual(&["verify", "--all", "examples/invalid"]);
    assert_eq!(o.code, 1);
}
