use std::process::{Command, Output};

use charlattice::reps::{irreducible, FormalCharacter};
use charlattice::rootsys::SimpleType;
use charlattice::verify::CharacterFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charlattice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_char(dir: &tempfile::TempDir, name: &str, fc: &FormalCharacter) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, CharacterFile::from_character(fc, None).emit()).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn dimension_in_both_formats() {
    let o = run(&["dim", "E7", "ω7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "56");
    let o = run(&["--format", "structured", "dim", "G2", "hw=1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], "7");
}

#[test]
fn allowed_pairs_exit_codes() {
    assert_eq!(run(&["allowed-pairs", "20"]).status.code(), Some(1));
    let o = run(&["allowed-pairs", "27"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("E6"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["dim", "X3", "ω1"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml", "dim", "A1", "ω1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "sl2k-selfdual", "-p", "k=notanumber"]).status.code(), Some(2));
}

#[test]
fn single_case_passes() {
    let o = run(&["verify", "sl2k-selfdual", "-p", "k=5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("1/1 cases passed"));
}

#[test]
fn samechar_agrees_and_disagrees() {
    let dir = tempfile::tempdir().unwrap();
    let g2 = irreducible(SimpleType::G2, &[1, 0]).unwrap();
    let a2 = irreducible(SimpleType::a(2), &[1, 0]).unwrap();
    let a2_dual = irreducible(SimpleType::a(2), &[0, 1]).unwrap();
    // Std ⊕ Std∨ ⊕ 1 of sl_3 has the weights of the 7-dimensional G2 module.
    let sum = a2
        .direct_sum(&a2_dual)
        .unwrap()
        .direct_sum(&FormalCharacter::trivial(a2.algebra.clone(), 1))
        .unwrap();
    let f_g2 = write_char(&dir, "g2.json", &g2);
    let f_sum = write_char(&dir, "sum.json", &sum);
    let f_a2 = write_char(&dir, "a2.json", &a2);
    assert_eq!(run(&["samechar", &f_g2, &f_sum]).status.code(), Some(0));
    assert_eq!(run(&["samechar", &f_g2, &f_a2]).status.code(), Some(1));
    let missing = dir.path().join("missing.json");
    assert_eq!(run(&["samechar", &f_g2, missing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn char_output_parses_back() {
    let o = run(&["char", "B3", "ω3"]);
    assert_eq!(o.status.code(), Some(0));
    let file = CharacterFile::parse(&stdout(&o)).unwrap();
    assert_eq!(file.character().unwrap(), irreducible(SimpleType::b(3), &[0, 0, 1]).unwrap());
}

#[test]
fn factorize_lists_decompositions() {
    let o = run(&["factorize", "0,1,2,3", "--profile", "2,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("{0,1} · {0,2}"));
}
