use std::process::{Command, Output};

fn liftkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liftkit")).args(args).output().expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn lift_exit_codes() {
    let o = liftkit(&["lift", "{}->{*}", "{a,b}->{a=b}"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("holds"));
    assert!(stdout(&o).contains("diagonal:"));

    let o = liftkit(&["lift", "{}->{*}", "{}->{*}"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("fails"));
    assert!(stdout(&o).contains("bottom: {*}->{*}"));

    assert_eq!(code(&liftkit(&["lift", "{a->b}->{*}", "{a,b}->{a=b}"])), 0);
    assert_eq!(code(&liftkit(&["lift", "{a,b}->{a=b}", "{a->b}->{*}"])), 1);
}

#[test]
fn parse_errors_point_at_the_input() {
    let o = liftkit(&["lift", "{a->", "{}->{*}"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("at byte 4"), "{err}");
    assert!(err.contains('^'));
    assert_eq!(code(&liftkit(&["lift", "--strict", "{a,b}->{b}", "{}->{*}"])), 2);
    assert_eq!(code(&liftkit(&["frobnicate"])), 2);
}

#[test]
fn class_membership_and_listing() {
    let o = liftkit(&["class", "({}->{*})^r", "--max-size", "2", "--member", "{a<->b}->{a=b}"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("ExactYes"));

    let o = liftkit(&["class", "({}->{*})^r", "--max-size", "2", "--member", "{a}->{a,b}"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("ExactNo"));

    let o = liftkit(&["class", "({}->{*})^r", "--max-size", "2"]);
    assert_eq!(code(&o), 0);
    let listed = stdout(&o);
    assert!(listed.contains("{a, b}->{a=b}"));
    assert!(!listed.contains("{a}->{a, b}"));
}

#[test]
fn enumerate_counts() {
    let o = liftkit(&["enumerate", "--spaces", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("9 homeomorphism classes on 3 points"));
    let o = liftkit(&["enumerate", "--spaces", "3", "--labelled"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with('{')).count(), 29);
    let o = liftkit(&["enumerate", "--maps", "{a->b}", "{a->b}"]);
    assert!(stdout(&o).contains("3 continuous maps"));
}

#[test]
fn verify_json_and_guards() {
    let o = liftkit(&["verify", "--suite", "groups", "--max-size", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.trim_start().starts_with('{'));
    assert!(out.contains("\"suite\": \"groups\""));
    assert!(out.contains("\"bound\": 3"));
    assert!(out.contains("\"laws\""));

    let o = liftkit(&["verify", "--suite", "topology", "--max-size", "9"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
    assert_eq!(code(&liftkit(&["verify", "--suite", "nonsense"])), 2);
    assert_eq!(code(&liftkit(&["verify", "--suite", "topology", "--law", "no.such.law"])), 2);

    let o = liftkit(&["verify", "--suite", "topology", "--max-size", "3", "--law", "space.t0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS  space.t0"));
}

#[test]
fn group_commands() {
    let o = liftkit(&["group", "homs", "Z4", "Z2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2 homomorphisms"));

    assert_eq!(code(&liftkit(&["group", "lift", "Z2->0", "Z2->Z4:0,2"])), 0);
    assert_eq!(code(&liftkit(&["group", "lift", "Z2->Z4:0,2", "Z2->0"])), 1);
    assert_eq!(code(&liftkit(&["group", "lift", "Z4->Z2", "Z2->0"])), 2);

    let o = liftkit(&["group", "props", "S3"]);
    assert!(stdout(&o).contains("solvable     yes"));
    let o = liftkit(&["group", "list", "--max-order", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("V4"));
}

#[test]
fn cayley_table_files() {
    let path = std::env::temp_dir().join(format!("liftkit-z3-{}.txt", std::process::id()));
    std::fs::write(&path, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let o = liftkit(&["group", "homs", path.to_str().unwrap(), "Z3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("3 homomorphisms"));
    std::fs::write(&path, "2\n0 1\n0 1\n").unwrap();
    assert_eq!(code(&liftkit(&["group", "props", path.to_str().unwrap()])), 2);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn thread_count_does_not_change_reports() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_liftkit"))
            .args(["verify", "--suite", "appendixA", "--max-size", "3", "--format", "json"])
            .env("LIFTKIT_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}
