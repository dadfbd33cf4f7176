use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sltiling::algebra::scalar::int;
use sltiling::tiling::io::{window_from_json, window_to_json};
use sltiling::{fixtures, Window};

fn sltile(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sltile"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_window(args: &[&str]) -> Window {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = sltile(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    window_from_json(&stdout(&o)).unwrap()
}

fn write(dir: &Path, name: &str, w: &Window) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, window_to_json(w).unwrap()).unwrap();
    p
}

#[test]
fn fibonacci_path_window() {
    let w = json_window(&[
        "generate",
        "path",
        "--word",
        "(xy)*||(xy)*",
        "--k",
        "2",
        "--window",
        "-3,-3,8,8",
    ]);
    let col: Vec<_> = (0..5).map(|i| w.get(i, 0).unwrap().clone()).collect();
    assert_eq!(col, [1, 2, 5, 13, 34].map(int));
}

#[test]
fn binomial_block() {
    let w = json_window(&["generate", "binomial", "--k", "3", "--window", "0,0,5,5"]);
    assert!(w.same_entries(&fixtures::fig7().sub(0, 0, 5, 5).unwrap()));
}

#[test]
fn frieze_window_has_period_three() {
    let w = json_window(&[
        "generate",
        "frieze",
        "--quiddity",
        "1,1,1",
        "--window",
        "0,0,6,6",
    ]);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(w.get(i + 3, j + 3).unwrap(), w.get(i, j).unwrap());
            assert_eq!(w.get(i + 3, j).unwrap(), &-w.get(i, j).unwrap().clone());
        }
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "fig1.json", &fixtures::fig1());
    assert_eq!(
        sltile(&["verify", good.to_str().unwrap()]).status.code(),
        Some(0)
    );

    let mut bad = fixtures::fig1();
    bad.set(0, 0, int(888)).unwrap();
    let bad = write(dir.path(), "bad.json", &bad);
    let o = sltile(&["verify", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failures = reports[0]["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 1);
    assert_eq!(failures[0]["anchor"], serde_json::json!([0, 0]));

    let wild = sltiling::tiling::wild_sl2(Default::default())
        .window((0, 0), 6, 6)
        .unwrap();
    let wild = write(dir.path(), "wild.json", &wild);
    assert_eq!(
        sltile(&["verify", wild.to_str().unwrap(), "--k", "2"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        sltile(&["verify", wild.to_str().unwrap(), "--k", "2", "--tame"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn derive_display19() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "d19.json", &fixtures::display19());
    let w = json_window(&["derive", p.to_str().unwrap(), "--m", "2"]);
    assert!(w.same_entries(&fixtures::display20()));
    let d = json_window(&["dualize", p.to_str().unwrap()]);
    assert!(d.same_entries(&fixtures::display20()));
}

#[test]
fn frieze_commands() {
    assert_eq!(
        stdout(&sltile(&[
            "frieze",
            "enumerate",
            "--n",
            "4",
            "--count-only"
        ]))
        .trim(),
        "5"
    );
    let listed = stdout(&sltile(&["frieze", "enumerate", "--n", "4"]));
    assert_eq!(listed.lines().count(), 5);
    assert!(listed.lines().any(|l| l == "3,1,2,2,1"));
    let trace = stdout(&sltile(&["frieze", "reduce", "--quiddity", "3,1,2,2,1"]));
    let lines: Vec<&str> = trace.lines().collect();
    assert_eq!(lines[lines.len() - 2], "1,1,1");
    assert_eq!(
        sltile(&["frieze", "check", "--quiddity", "3,1,2,2,1"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        sltile(&["frieze", "check", "--quiddity", "2,2"])
            .status
            .code(),
        Some(1)
    );
    let drawn = stdout(&sltile(&[
        "frieze",
        "check",
        "--quiddity",
        "1,3,1,2,2",
        "--render",
    ]));
    assert!(drawn.starts_with(" 1 1 2 1\n"));
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(sltile(&["generate", "teapot"]).status.code(), Some(2));
    assert_eq!(sltile(&["verify"]).status.code(), Some(2));
    assert_eq!(
        sltile(&["generate", "path", "--word", "xx", "--k", "2", "--window", "0,0,2,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        sltile(&["frieze", "enumerate", "--n", "12"]).status.code(),
        Some(3)
    );
    let above = sltile(&["generate", "binomial", "--k", "3", "--window", "-1,0,2,2"]);
    assert_eq!(above.status.code(), Some(3));
}

#[test]
fn every_generator_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (
            vec![
                "path",
                "--word",
                "(xxyy)*",
                "--k",
                "4",
                "--window",
                "-4,-4,9,9",
            ],
            "4",
        ),
        (
            vec![
                "path",
                "--word",
                "(xy)*|yyxxyxyyyx|(yx)*",
                "--k",
                "3",
                "--window",
                "-3,-3,8,8",
            ],
            "3",
        ),
        (
            vec![
                "frieze",
                "--quiddity",
                "4,1,2,3,1,2,3",
                "--window",
                "-5,-5,10,10",
            ],
            "2",
        ),
        (vec!["binomial", "--k", "4", "--window", "0,0,8,8"], "4"),
        (vec!["zigzag", "--kind", "fibonacci", "--size", "6"], "2"),
        (vec!["linearization", "--k", "3", "--span", "5"], "3"),
        (vec!["wild", "--window", "0,0,6,6"], "2"),
    ];
    for (i, (args, k)) in cases.into_iter().enumerate() {
        let out = dir.path().join(format!("w{i}.csv"));
        let mut full = vec!["generate"];
        full.extend(&args);
        full.extend([
            "--format",
            "csv",
            "--out",
            out.to_str().unwrap(),
            "--seed",
            "9",
        ]);
        let o = sltile(&full);
        assert!(
            o.status.success(),
            "{args:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        let v = sltile(&["verify", out.to_str().unwrap(), "--k", k]);
        assert_eq!(v.status.code(), Some(0), "{args:?}: {}", stdout(&v));
    }
}

#[test]
fn output_is_deterministic() {
    let args = [
        "generate",
        "linearization",
        "--k",
        "3",
        "--seed",
        "42",
        "--format",
        "json",
    ];
    assert_eq!(sltile(&args).stdout, sltile(&args).stdout);
    let other = [
        "generate",
        "linearization",
        "--k",
        "3",
        "--seed",
        "43",
        "--format",
        "json",
    ];
    assert_ne!(sltile(&args).stdout, sltile(&other).stdout);
}

#[test]
fn tsystem_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "d19.json", &fixtures::display19());
    let o = sltile(&["tsystem", "from-tiling", p.to_str().unwrap(), "--r", "2"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("index map: j = "));
    let state = dir.path().join("state.json");
    std::fs::write(&state, &o.stdout).unwrap();
    assert_eq!(
        sltile(&["tsystem", "check", state.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );

    let init = dir.path().join("init.json");
    let sites: Vec<String> = (-10..=10i64)
        .flat_map(|j| [0i64, 1].map(|k| (j, k)))
        .filter(|(j, k)| (1 + j + k).rem_euclid(2) == 1)
        .map(|(j, k)| {
            format!(
                r#"{{"alpha":1,"j":{j},"k":{k},"value":"{}"}}"#,
                if k == 1 && j % 4 == 0 { 2 } else { 1 }
            )
        })
        .collect();
    std::fs::write(
        &init,
        format!(r#"{{"r":1,"parity":1,"sites":[{}]}}"#, sites.join(",")),
    )
    .unwrap();
    let run = sltile(&["tsystem", "run", init.to_str().unwrap(), "--steps", "8"]);
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    let out = dir.path().join("run.json");
    std::fs::write(&out, &run.stdout).unwrap();
    let check = sltile(&["tsystem", "check", out.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0), "{}", stdout(&check));
}

#[test]
fn render_reads_csv() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("f2.csv");
    std::fs::write(
        &p,
        sltiling::tiling::io::window_to_csv(&fixtures::fig2_specialized()).unwrap(),
    )
    .unwrap();
    let text = stdout(&sltile(&["render", p.to_str().unwrap()]));
    assert_eq!(
        text.lines()
            .next()
            .unwrap()
            .split_whitespace()
            .collect::<Vec<_>>()[..4],
        ["1", "1", "1", "0"]
    );
    assert_eq!(text.lines().count(), 12);
}
