use std::path::PathBuf;
use std::process::{Command, Output};

use monge_core::catalog::{ell6, make_fmn};
use monge_core::cohomology::CohomologyJson;
use monge_core::geometry::{FlagJson, RealizedExtensionJson};
use monge_core::gnla::{check_gnla, Gnla, GnlaJson};
use monge_core::tanaka::ProlongationJson;
use serde_json::Value;

fn monge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("monge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn make_round_trips_through_check() {
    let o = monge(&["gnla", "make", "--m", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let a = Gnla::from_json(&stdout(&o)).unwrap();
    assert_eq!(a, make_fmn(1, 2).unwrap());
    let path = scratch("f12.json", &stdout(&o));
    let at = format!("@{}", path.display());
    let check = monge(&["gnla", "check", &at, "--format", "json"]);
    assert_eq!(check.status.code(), Some(0));
    let report: Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(report["jacobi_ok"], true);
    // the file also serves as an --algebra argument
    let t = monge(&["tanaka", "prolong", "--algebra", &at]);
    assert!(stdout(&t).contains("dim 14"));
}

#[test]
fn catalog_entry_as_json() {
    let o = monge(&["gnla", "catalog", "ell6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(Gnla::from_json(&stdout(&o)).unwrap(), ell6());
}

#[test]
fn broken_algebra_fails_the_check() {
    // an extra bracket that does not respect the grading
    let mut j = make_fmn(1, 2).unwrap().to_json_value();
    let first = j.brackets[0].clone();
    j.brackets.push(monge_core::gnla::BracketJson { left: first.right.clone(), right: j.basis.last().unwrap().name.clone(), value: first.value.clone() });
    let text = serde_json::to_string(&j).unwrap();
    assert!(!check_gnla(&Gnla::from_json(&text).unwrap()).all_ok());
    let path = scratch("bad.json", &text);
    let o = monge(&["gnla", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn prolongation_json_round_trips() {
    let o = monge(&["tanaka", "prolong", "--algebra", "f:1,2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let j: ProlongationJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j.graded_dims.values().sum::<usize>(), 14);
    assert_eq!(j.status, "finite");
    let t: GnlaJson = j.brackets.expect("finite prolongations carry brackets");
    let t = Gnla::from_json_value(&t).unwrap();
    assert_eq!(t.dim(), 14);
    assert!(check_gnla(&t).jacobi_ok);
}

#[test]
fn capped_prolongation_exits_3() {
    let o = monge(&["tanaka", "prolong", "--algebra", "heis3", "--cap", "8"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("[4, 6, 9, 12, 16, 20, 25, 30, 36]"));
}

#[test]
fn grid_output_does_not_depend_on_jobs() {
    let one = monge(&["tanaka", "grid", "--mmax", "4", "--nmax", "6", "--jobs", "1"]);
    let four = monge(&["tanaka", "grid", "--mmax", "4", "--nmax", "6", "--jobs", "4"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert!(!stdout(&one).contains("MISMATCH"));
    assert!(stdout(&one).contains("  2   6     16        16"));
}

#[test]
fn cohomology_json_round_trips() {
    let o = monge(&["cohomology", "--algebra", "f(1,2)", "--format", "json"]);
    let j: CohomologyJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j.total, 3);
    assert_eq!(j.by_grading["4"].h, 3);
}

#[test]
fn extension_commands() {
    let o = monge(&["ext", "classify", "--algebra", "f:1,2", "--grading", "4", "--format", "json"]);
    let classes: Vec<Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let mut names: Vec<&str> = classes.iter().map(|c| c["matched"].as_str().unwrap()).collect();
    names.sort();
    assert_eq!(names, ["ell6", "h6", "p(6)"]);

    let o = monge(&["ext", "realize", "--model", "1,2", "--class", "hyp", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: RealizedExtensionJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.system[1], "v' = 1/2*y");
    assert_eq!(r.fingerprint_match.as_deref(), Some("h6"));

    assert_eq!(monge(&["ext", "realize", "--model", "1,2", "--class", "cone"]).status.code(), Some(1));
}

#[test]
fn geometry_commands() {
    let o = monge(&["monge", "flag", "--m", "2", "--n", "3", "--format", "json"]);
    let f: FlagJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(f.growth, [2, 1, 2, 2]);
    let o = monge(&["monge", "flag", "--m", "1", "--n", "2", "--rhs", "z2^2 + y0", "--point", "0,1,2,3,1/2"]);
    assert_eq!(stdout(&o), "growth [2, 1, 2]\nranks [2, 3, 5]\n");
    assert_eq!(monge(&["monge", "flag", "--m", "1", "--n", "2", "--point", "1,2"]).status.code(), Some(1));
    let o = monge(&["monge", "symmetries", "--m", "1", "--n", "3"]);
    assert!(stdout(&o).contains("11 generators, table matches"));
}

#[test]
fn darboux_count() {
    let o = monge(&["darboux", "triples", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 53);
}

#[test]
fn reproduce_subset() {
    let o = monge(&["reproduce", "--filter", "darboux"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "PASS criterion 10 Darboux triples: 53 admissible triples\n");
    assert_eq!(monge(&["reproduce", "--filter", "nothing-matches"]).status.code(), Some(1));
}

#[test]
fn input_errors_exit_1() {
    assert_eq!(monge(&["gnla", "catalog", "nope"]).status.code(), Some(1));
    assert_eq!(monge(&["tanaka", "prolong"]).status.code(), Some(1));
    assert_eq!(monge(&["gnla", "check", "@/nonexistent/x.json"]).status.code(), Some(1));
    assert_eq!(monge(&["gnla", "make", "--m", "3", "--n", "2"]).status.code(), Some(1));
}
