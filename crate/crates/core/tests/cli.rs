use std::io::Write;

use model_change::cli::run_with;
use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn mc(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mc").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn eval_platypus() {
    let (code, out, _) = mc(&[
        "eval",
        "--sig",
        &data("zoo.sig.json"),
        "--model",
        &data("i1.json"),
        "--concept",
        "Mammal and exists lays.Egg",
    ]);
    assert_eq!((code, out.as_str()), (0, "true\n"));
}

#[test]
fn revise_then_evaluate() {
    let (code, revised, _) = mc(&["revise", "--request", &data("ex17.json")]);
    assert_eq!(code, 0);
    let revised = revised.trim();
    let eval = |model: &str| {
        mc(&[
            "eval",
            "--sig",
            &data("chain.sig.json"),
            "--model",
            &data(model),
            "--concept",
            revised,
        ])
    };
    assert_eq!(eval("ex17-i1.json"), (0, "true\n".into(), String::new()));
    assert_eq!(eval("ex17-i2.json").0, 1);
    assert_eq!(eval("ex17-i2.json").1, "false\n");
}

#[test]
fn demos() {
    let (code, out, _) = mc(&["demo", "--name", "B16"]);
    assert_eq!(code, 0);
    assert!(out.contains("equivalent: true"));
    let (code, out, _) = mc(&["demo", "--all"]);
    assert_eq!(code, 0);
    assert!(!out.contains("FAIL"));
    assert_eq!(mc(&["demo", "--all"]).1, out);
    let (code, out, _) = mc(&["demo", "--name", "Ex26", "--json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(parsed[0]["pass"], Value::Bool(true));
}

#[test]
fn exit_codes() {
    assert_eq!(
        mc(&["subsume", "--concept", "exists r.A", "--concept", "exists r.top"]).0,
        0
    );
    assert_eq!(
        mc(&["subsume", "--concept", "exists r.top", "--concept", "exists r.A"]).0,
        1
    );
    assert_eq!(
        mc(&[
            "subsume",
            "--tableau",
            "--concept",
            "forall r.A",
            "--concept",
            "forall r.(A or B)"
        ])
        .0,
        0
    );
    assert_eq!(mc(&["sat", "--concept", "A and not A"]).0, 1);
    assert_eq!(mc(&["entail", "--concept", "A and B", "--concept", "A"]).0, 0);
    let (code, _, err) = mc(&["parse", "--concept", "exists r.("]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"));
    assert_eq!(
        mc(&["eval", "--model", "/nonexistent.json", "--concept", "A"]).0,
        2
    );
    assert_eq!(mc(&["frobnicate"]).0, 2);
    assert_eq!(mc(&["subsume", "--concept", "A"]).0, 2);
    assert_eq!(mc(&["--help"]).0, 0);
    let (code, _, err) = mc(&["parse", "--sig", &data("zoo.sig.json"), "--concept", "Koala"]);
    assert_eq!(code, 2);
    assert!(err.contains("undeclared"));
}

#[test]
fn concept_files_and_structures() {
    let mut file = std::env::temp_dir();
    file.push(format!("mc-concept-{}.txt", std::process::id()));
    std::fs::File::create(&file)
        .unwrap()
        .write_all(b"B and exists r.(A and B)")
        .unwrap();
    let path = file.to_str().unwrap();

    let (code, out, _) = mc(&["parse", "--concept-file", path]);
    assert_eq!((code, out.as_str()), (0, "((exists r.(A and B)) and B)\n"));
    let (_, canonical, _) = mc(&["canonical", "--concept-file", path]);
    let mut model = std::env::temp_dir();
    model.push(format!("mc-model-{}.json", std::process::id()));
    std::fs::write(&model, &canonical).unwrap();
    let (code, out, _) = mc(&["tree2concept", "--model", model.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "((exists r.(A and B)) and B)\n"));
    let (code, out, _) = mc(&[
        "bisim",
        "--model",
        model.to_str().unwrap(),
        "--model",
        model.to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (0, "true\n"));
    let (code, out, _) = mc(&["dagger", "--concept-file", path, "--json"]);
    assert_eq!(code, 0);
    let parsed: Value = serde_json::from_str(&out).unwrap();
    assert!(parsed["concept"].as_str().unwrap().contains("forall r."));
    std::fs::remove_file(file).unwrap();
    std::fs::remove_file(model).unwrap();
}

#[test]
fn change_operations() {
    let (code, out, _) = mc(&["evict", "--request", &data("platypus.request.json")]);
    assert_eq!(code, 0);
    let evicted = out.trim();
    let eval = |model: &str| mc(&["eval", "--model", &data(model), "--concept", evicted]).1;
    assert_eq!(eval("i1.json"), "true\n");
    assert_eq!(eval("i2.json"), "false\n");
    let (_, out, _) = mc(&["receive", "--el", "--request", &data("ex17.json")]);
    assert_eq!(out, "(exists r.top)\n");
    let (_, out, _) = mc(&["evict", "--el-role", "r", "--request", &data("ex17.json")]);
    assert_eq!(out, "(exists r.(exists r.(exists r.top)))\n");
}

#[test]
fn oracle_subcommands() {
    let (code, out, _) = mc(&["oracle", "enumerate", "--nc", "1", "--nr", "1", "--k", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("8 classes"));
    let (_, out, _) = mc(&[
        "oracle",
        "modset",
        "--nc",
        "1",
        "--nr",
        "1",
        "--k",
        "1",
        "--concept",
        "A",
    ]);
    assert_eq!(out, "{4, 5, 6, 7}\n");
    assert_eq!(
        mc(&["oracle", "enumerate", "--nc", "3", "--nr", "1", "--k", "0"]).0,
        2
    );
    assert_eq!(
        mc(&[
            "oracle",
            "enumerate",
            "--nc",
            "3",
            "--nr",
            "1",
            "--k",
            "0",
            "--budget",
            "8"
        ])
        .0,
        0
    );

    let (code, out, _) = mc(&[
        "oracle",
        "postulates",
        "--request",
        &data("ex17.json"),
        "--op",
        "revise",
        "--json",
    ]);
    assert_eq!(code, 0);
    let verdicts: Value = serde_json::from_str(&out).unwrap();
    let verdicts = verdicts.as_array().unwrap();
    assert!(verdicts.iter().all(|v| v["status"] == "pass"));
    assert_eq!(
        verdicts[0]["fragment"],
        serde_json::json!({"nc": 1, "nr": 1, "k": 2})
    );
    let circ = verdicts
        .iter()
        .find(|v| v["postulate"] == "circumspection")
        .unwrap();
    assert_eq!(circ["scope"], "fragment-relative");

    let (code, out, _) = mc(&[
        "oracle",
        "chi",
        "--request",
        &data("ex17.json"),
        "--fragment",
        "el",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("case (i)"));
}
