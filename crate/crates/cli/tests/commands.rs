use std::process::Command;

use cuntz::rep::FiniteGroup;

fn cuntz(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_cuntz")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn structured(args: &[&str]) -> (i32, Vec<String>) {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let (code, out, _) = cuntz(&all);
    (code, out.lines().map(str::to_string).collect())
}

fn has(lines: &[String], line: &str) -> bool {
    lines.iter().any(|l| l == line)
}

#[test]
fn fusion_products() {
    for (args, want) in [
        (["cyclic:2", "rep:0,1", "rep:0,1"], "rep:1,0"),
        (["s3", "rep:0,0,1", "rep:0,0,1"], "rep:1,1,1"),
        (["cyclic:3", "rep:1,0,0", "rep:0,1,0"], "rep:0,1,0"),
    ] {
        let mut full = vec!["fusion"];
        full.extend_from_slice(&args);
        let (code, out, _) = cuntz(&full);
        assert_eq!((code, out.trim()), (0, want), "{args:?}");
    }
}

#[test]
fn order_relations() {
    let (code, lines) = structured(&["order", "uhf2", "uhf2:compact:1", "uhf2:soft:1"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "ORDER GT"));
    assert!(has(&lines, "WAY_BELOW_LEFT_RIGHT no"));
    assert!(has(&lines, "WAY_BELOW_RIGHT_LEFT yes"));
    let (_, lines) = structured(&["order", "nat", "nat:3", "nat:inf"]);
    assert!(has(&lines, "ORDER LT") && has(&lines, "WAY_BELOW_LEFT_RIGHT yes"));
    let (_, lines) = structured(&["order", "nat", "nat:inf", "nat:inf"]);
    assert!(has(&lines, "ORDER EQ") && has(&lines, "WAY_BELOW_LEFT_RIGHT no"));
}

#[test]
fn eval_sums() {
    let (code, out, _) = cuntz(&["eval", "uhf2", "uhf2:compact:1/2 + uhf2:compact:1/4", "3*uhf2:compact:1/4"]);
    assert_eq!((code, out.trim()), (0, "uhf2:compact:3/2"));
    let (_, out, _) = cuntz(&["eval", "nat", "inf*nat:1"]);
    assert_eq!(out.trim(), "nat:inf");
}

#[test]
fn axiom_runs() {
    let (code, lines) = structured(&["axioms", "uhf2", "--samples", "1000", "--seed", "7"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "SEED 7") && has(&lines, "RESULT PASS"));
    let (code, lines) = structured(&["--samples", "100", "axioms", "example:pullback-uhf:2"]);
    assert_eq!(code, 0);
    assert!(lines.iter().any(|l| l.starts_with("AXIOM SM-O3 ")));
    let (code, lines) = structured(&["--samples", "200", "axioms", "uhf2", "--mutate"]);
    assert_eq!(code, 1);
    assert!(lines.iter().any(|l| l.starts_with("AXIOM ") && l.contains(" FAIL ")));
}

#[test]
fn example_reports() {
    let (code, lines) = structured(&["--samples", "50", "example", "pullback-uhf:2", "--verify"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "EXAMPLE pullback-uhf:2"));
    assert!(has(&lines, "AXIOM ACTION-FORMULA PASS"));
    let (code, lines) = structured(&["example", "nonstable"]);
    assert_eq!(code, 0);
    assert!(has(&lines, "ISOMORPHIC no"));
}

#[test]
fn out_file_holds_the_structured_report() {
    let dir = std::env::temp_dir().join(format!("cuntz-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.txt");
    let (code, human, _) = cuntz(&["--samples", "50", "--out", path.to_str().unwrap(), "axioms", "nat"]);
    assert_eq!(code, 0);
    let (_, lines) = structured(&["--samples", "50", "axioms", "nat"]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().collect::<Vec<_>>(), lines);
    assert_ne!(human, written);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn table_group_from_files() {
    let dir = std::env::temp_dir().join(format!("cuntz-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let group = FiniteGroup::cyclic(3).unwrap();
    let (table, chars) = (dir.join("group.txt"), dir.join("chars.txt"));
    std::fs::write(&table, group.table().to_text()).unwrap();
    std::fs::write(&chars, group.characters().to_text()).unwrap();
    let (code, out, err) = cuntz(&[
        "--group-table",
        table.to_str().unwrap(),
        "--char-table",
        chars.to_str().unwrap(),
        "fusion",
        "table",
        "rep:0,1,0",
        "rep:0,1,0",
    ]);
    assert_eq!((code, out.trim()), (0, "rep:0,0,1"), "{err}");
    let (code, _, _) = cuntz(&["fusion", "table", "rep:1", "rep:1"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn exit_codes() {
    let (code, _, err) = cuntz(&["fusion", "cyclic:2", "rep:0,1,0", "rep:1,0"]);
    assert!(code == 2 || code == 3, "{code}");
    assert!(err.starts_with("error: "));
    assert_eq!(cuntz(&["order", "nat", "nat:x", "nat:1"]).0, 2);
    assert_eq!(cuntz(&["order", "foo", "nat:1", "nat:1"]).0, 2);
    assert_eq!(cuntz(&["example", "pullback-uhf:1"]).0, 3);
    assert_eq!(cuntz(&["atoms", "step[nat]"]).0, 3);
    assert_eq!(cuntz(&["distinguish", "nat", "fn[nat;4]"]).0, 0);
    assert_eq!(cuntz(&["distinguish", "uhf2", "uhf2"]).0, 1);
}
