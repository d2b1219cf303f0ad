use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_errsumlab"))
        .args(args)
        .env_remove("ERRSUMLAB_MAX_DOUBLINGS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn expand_e() {
    let o = run(&["expand", "e", "--terms", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2 1 2 1 1 4 1 1 6 1");
}

#[test]
fn expand_rational_stops_early() {
    let o = run(&["expand", "8/3", "--terms", "10"]);
    assert_eq!(stdout(&o).trim(), "2 1 2");
}

#[test]
fn convergents_of_e() {
    let o = run(&["convergents", "e", "--terms", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines, ["0 2 1", "1 3 1", "2 8 3", "3 11 4", "4 19 7", "5 87 32"]);
}

#[test]
fn errsum_golden() {
    let o = run(&["errsum", "(1+sqrt(5))/2", "--digits", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1.618033988749");
}

#[test]
fn errsum_json_has_interval() {
    let o = run(&["errsum", "sqrt(7)", "--digits", "12", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "1.444911182523");
    assert!(v["lo"].as_str().unwrap() <= v["hi"].as_str().unwrap());
    assert!(v.get("±").is_some());
}

#[test]
fn gencf_preset() {
    let o = run(&["gencf", "--preset", "erfint", "--terms", "60", "--digits", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("value 0.746824132812427025399467436131"), "{out}");
    assert!(out.contains("consistent yes"));
}

#[test]
fn verify_single_and_grid() {
    let o = run(&["verify", "eq1_main", "--digits", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS eq1_main - 1.3418751100983647157178923799792384001078820849369"));

    let o = run(&["verify", "thm3_f1", "--param", "l=2..4", "--param", "s=1..3", "--digits", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS thm3_f1")).count(), 9);
}

#[test]
fn verify_all_json_is_stable() {
    let strip = |o: &Output| -> Vec<serde_json::Value> {
        let mut v: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
        for r in &mut v {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let a = run(&["verify", "--all", "--digits", "50", "--format", "json"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    let b = run(&["verify", "--all", "--digits", "50", "--format", "json", "--jobs", "1"]);
    let (va, vb) = (strip(&a), strip(&b));
    assert_eq!(va.len(), 46);
    assert!(va.iter().all(|r| r["pass"] == true));
    assert_eq!(serde_json::to_string(&va).unwrap(), serde_json::to_string(&vb).unwrap());
    assert_eq!(va[0]["id"], "eq1_main");
    assert_eq!(va[45]["id"], "conj_cf");
    assert_eq!(va[45]["status"], "empirical");
}

#[test]
fn list_shows_every_id() {
    let o = run(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 15);
    assert!(out.lines().any(|l| l.starts_with("conj_cf") && l.contains("empirical")));
    let j = run(&["list", "--format", "json"]);
    let v: Vec<serde_json::Value> = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v.len(), 15);
}

fn assert_one_line_error(o: &Output, code: i32) {
    assert_eq!(o.status.code(), Some(code), "stderr: {}", stderr(o));
    let err = stderr(o);
    assert_eq!(err.trim_end().lines().count(), 1, "{err}");
    assert!(o.stdout.is_empty() || code == 3 || code == 1);
}

#[test]
fn syntax_error_names_offset_and_token() {
    let o = run(&["expand", "sqrt(2", "--terms", "3"]);
    assert_one_line_error(&o, 2);
    let err = stderr(&o);
    assert!(err.contains("offset 6"), "{err}");
    assert!(err.contains("end of input"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_one_line_error(&run(&["frobnicate"]), 2);
    assert_one_line_error(&run(&["verify", "no_such_id"]), 2);
    assert_one_line_error(&run(&["verify", "thm3_f1", "--param", "l=1", "--param", "s=1"]), 2);
    assert_one_line_error(&run(&["verify", "thm3_f1", "--param", "l"]), 2);
    assert_one_line_error(&run(&["verify"]), 2);
    assert_one_line_error(&run(&["errsum", "e", "--digits", "0"]), 2);
    assert_one_line_error(&run(&["errsum", "1-e"]), 2);
    // undecidable sign: escalates to the cap, then reports a domain error
    let o = Command::new(env!("CARGO_BIN_EXE_errsumlab"))
        .args(["expand", "1/(e-e)"])
        .env("ERRSUMLAB_MAX_DOUBLINGS", "2")
        .output()
        .unwrap();
    assert_one_line_error(&o, 2);
}

#[test]
fn precision_failure_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_errsumlab"))
        .args(["verify", "conj_cf", "--digits", "400"])
        .env("ERRSUMLAB_MAX_DOUBLINGS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_errsumlab"))
        .args(["errsum", "e", "--digits", "5"])
        .env("ERRSUMLAB_MAX_DOUBLINGS", "lots")
        .output()
        .unwrap();
    assert_one_line_error(&o, 2);
}
