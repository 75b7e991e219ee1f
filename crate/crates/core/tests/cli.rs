use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artin-h2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

fn temp_graph(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("artin-h2-{}-{name}", std::process::id()));
    std::fs::File::create(&path)
        .and_then(|mut f| f.write_all(text.as_bytes()))
        .expect("temp file");
    path
}

#[test]
fn success_paths_exit_zero() {
    assert_eq!(code(&["compute", "--type", "A3"]), Some(0));
    assert_eq!(code(&["check", "--type", "~E8"]), Some(0));
    assert_eq!(
        code(&[
            "generators",
            "--type",
            "B3",
            "--flavor",
            "coxeter",
            "--json"
        ]),
        Some(0)
    );
    assert_eq!(
        code(&["stability", "--seed-type", "B2", "--n-max", "6", "--json"]),
        Some(0)
    );
    assert_eq!(code(&["catalog", "list"]), Some(0));
    assert_eq!(code(&["--help"]), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(code(&["compute"]), Some(1));
    assert_eq!(code(&["compute", "--type", "A3", "--file", "x"]), Some(1));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(
        code(&["compute", "--file", "/nonexistent/graph.txt"]),
        Some(1)
    );
    assert_eq!(
        code(&["stability", "--seed-type", "A1", "--n-max", "3"]),
        Some(1)
    );
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(code(&["compute", "--type", "Q7"]), Some(2));
    assert_eq!(code(&["compute", "--type", "I2(1)"]), Some(2));
    let unknown = temp_graph("unknown", "vertex a\nedge a b 3\n");
    assert_eq!(
        code(&["compute", "--file", unknown.to_str().unwrap()]),
        Some(2)
    );
    let label = temp_graph("label", "vertex a\nvertex b\nedge a b 1\n");
    assert_eq!(
        code(&["compute", "--file", label.to_str().unwrap()]),
        Some(2)
    );
    let _ = std::fs::remove_file(unknown);
    let _ = std::fs::remove_file(label);
}

#[test]
fn file_and_catalog_sources_agree() {
    let path = temp_graph(
        "d4",
        "# affine D4\nvertex s1\nvertex s2\nvertex s3\nvertex s4\nvertex s5\n\
         edge s1 s3 3\nedge s2 s3 3\nedge s3 s4 3\nedge s3 s5 3\n",
    );
    let from_file = run(&["compute", "--file", path.to_str().unwrap(), "--json"]);
    let from_type = run(&["compute", "--type", "~D4", "--json"]);
    let _ = std::fs::remove_file(path);
    assert!(from_file.status.success());
    assert_eq!(from_file.stdout, from_type.stdout);
}

#[test]
fn generator_json_is_well_formed() {
    let out = run(&[
        "generators",
        "--type",
        "~A2",
        "--flavor",
        "coxeter",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["flavor"], "coxeter");
    assert_eq!(v["total"], 1);
    assert_eq!(v["omega3"][0]["abelianization_zero"], true);
}

#[test]
fn text_output_names_the_invariants() {
    let out = String::from_utf8(run(&["compute", "--type", "~D4"]).stdout).unwrap();
    assert!(
        out.contains("p = 6, q1 = 0, q2 = 0, q3 = 0, q = 0"),
        "{out}"
    );
    assert!(out.contains("H2(A; Z)   = Z_2^6"), "{out}");
}
