use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_troplectra")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

#[test]
fn check_verdicts() {
    assert_eq!(stdout(&["check", &data("ex44.mat")]).trim(), "TPD");
    assert_eq!(stdout(&["check", &data("ex43.mat")]), "TPSD\nwitness: minor (1,2)\n");
    assert_eq!(stdout(&["check", "0 1; 1 0"]).lines().next(), Some("NotTPSD"));
}

#[test]
fn characteristic_polynomials() {
    assert_eq!(stdout(&["charpoly", &data("ex44.mat")]).trim(), "X^3 (-) 3 X^2 (+) 5 X (-) 6");
    assert_eq!(stdout(&["charpoly", "--unicode", &data("ex44.mat")]).trim(), "X^3 ⊖ 3 X^2 ⊕ 5 X ⊖ 6");
    assert_eq!(stdout(&["charpoly", "--general", &data("ex44.mat")]).trim(), "X^3 (-) 3 X^2 (+) 5 X (-) 6");
    assert_eq!(stdout(&["charpoly", &data("ex43.mat")]).trim(), "X^2 (-) X (+) 0*");
    assert_eq!(stdout(&["charpoly", "--format", "csv", &data("ex44.mat")]).trim(), "n6 p5 n3 p0");
}

#[test]
fn eigenvalues() {
    assert_eq!(stdout(&["eig", &data("ex44.mat")]), "3 (mult 1)\n2 (mult 1)\n1 (mult 1)\n");
    assert_eq!(stdout(&["eig", "--tmax", &data("ex43.mat")]), "0 (mult 2)\n");
}

#[test]
fn eigenvectors_of_the_worked_examples() {
    let out = stdout(&["eigvec", &data("ex56.mat")]);
    let expected = "\
k = 1  gamma = 3
  adjugate  (6, (-)5, 4)
  star      (6, (-)5, 4)
  class strong  unique true  strong exists yes
k = 2  gamma = 2
  adjugate  ((-)4, (-)5, (-)4)
  star      ((-)4, (-)5, (-)4)
  class eigen  unique true  strong exists no
k = 3  gamma = 1
  adjugate  ((-)3, (-)4, 5)
  star      ((-)3, (-)4, 5)
  class eigen  unique true  strong exists no
";
    assert_eq!(out, expected);
    let weak = stdout(&["eigvec", &data("ex57.mat"), "--k", "3"]);
    assert!(weak.contains("adjugate  (3*, (-)4, 5)"), "{weak}");
    assert!(weak.contains("class weak"), "{weak}");
    let fixed = stdout(&["eigvec", &data("ex58.mat"), "--k", "1"]);
    assert!(fixed.contains("adjugate  (6, (-)5, 3*)"), "{fixed}");
    assert!(fixed.contains("signed    (6, (-)5, 3)"), "{fixed}");
}

#[test]
fn eigenvector_json_report() {
    let out = stdout(&["eigvec", &data("ex56.mat"), "--format", "json", "--k", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v["vectors"].as_array().map(Vec::len), Some(1));
    assert_eq!(v["vectors"][0]["adjugate"], serde_json::json!(["n4", "n5", "n4"]));
    assert_eq!(v["vectors"][0]["class"], "eigen");
    assert_eq!(v["generic"], true);
}

#[test]
fn star_of_the_scaled_matrix() {
    let out = stdout(&["star", &data("rem515.mat"), "--gamma", "3", "--format", "csv"]);
    assert_eq!(out, "3 3\np0 n-1 b-3\nn-1 p0 p-2\nb-3 p-2 p0\n");
    let div = run(&["star", "1 z; z z"]);
    assert_eq!(div.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&div.stderr).contains("StarDiverges"));
}

#[test]
fn determinant_adjugate_permanent() {
    let out = stdout(&["det", &data("ex44.mat"), "--adj", "--per"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("6"));
    assert_eq!(lines.next(), Some("per |A| = 6"));
    assert_eq!(stdout(&["det", "0 0; 0 0"]).trim(), "0*");
}

#[test]
fn size_limit_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_troplectra"))
        .args(["det", &data("ex44.mat")])
        .env("TROPLECTRA_SIZE_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SizeLimitExceeded"));
}

#[test]
fn polynomial_roots() {
    let out = stdout(&["poly-roots", "X^3 (-) 3 X^2 (+) 5 X (-) 6"]);
    assert!(out.contains("signed roots: 3, 2, 1"), "{out}");
    assert!(out.contains("  2  signed-corner root"), "{out}");
    let tokens = stdout(&["poly-roots", "n6 p5 n3 p0"]);
    assert_eq!(tokens, out);
    let bal = stdout(&["poly-roots", "X^2 (-) X (+) 0*"]);
    assert!(bal.contains("no signed factorization"), "{bal}");
    assert!(bal.contains("  0  signed-corner root"), "{bal}");
    assert!(bal.contains("  (-)0  root"), "{bal}");
}

#[test]
fn table_one_csv() {
    let printed = [(10.0, [5.0048, 3.9543, 2.9542, 1.9542, 0.9494]), (100.0, [5.0000, 3.9978, 2.9978, 1.9978, 0.9978])];
    let out = stdout(&["validate", &data("table1.mono"), "--t", "10,100", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,t,gamma,sign,sv,residual"));
    let mut seen = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let k: usize = f[0].parse().unwrap();
        let t: f64 = f[1].parse().unwrap();
        let sv: f64 = f[4].parse().unwrap();
        let row = printed.iter().find(|(pt, _)| *pt == t).expect("known t").1;
        assert_eq!(f[3], "+");
        assert!((sv - row[k - 1]).abs() <= 1e-3, "k = {k} t = {t}: {sv}");
        seen += 1;
    }
    assert_eq!(seen, 10);
}

#[test]
fn table_two_vectors_agree() {
    let out = stdout(&["validate", &data("table1.mono"), "--vectors", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v["vectors"].as_array().unwrap();
    assert_eq!(rows.len(), 50);
    assert!(rows.iter().all(|r| r["ok"] == true));
}

#[test]
fn gram_pipeline_and_gershgorin() {
    let out = run(&["validate", "--gram", "12", "--seed", "4", "--t", "10"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("verdict: "));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 13);
    let g = stdout(&["gersh", &data("table1.mono"), "--t", "100"]);
    assert!(g.contains("contained true"), "{g}");
}

#[test]
fn random_output_is_deterministic_and_tpd() {
    let a = stdout(&["random", "tpd", "--n", "4", "--seed", "9"]);
    assert_eq!(a, stdout(&["random", "tpd", "--n", "4", "--seed", "9"]));
    let path = std::env::temp_dir().join(format!("troplectra-cli-{}.mat", std::process::id()));
    std::fs::write(&path, &a).unwrap();
    let verdict = stdout(&["check", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(verdict.trim(), "TPD");
    let g = stdout(&["random", "gram", "--n", "3", "--seed", "1"]);
    assert_eq!(g.lines().count(), 4);
}

#[test]
fn exit_codes() {
    let parse = run(&["check", "1 2; 3"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("ParseError"));
    let domain = run(&["eigvec", &data("ex43.mat")]);
    assert_eq!(domain.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&domain.stderr).contains("NotTPD"));
    assert_eq!(run(&["check", &data("ex44.mat"), "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}
