use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use valdist_core::scalar::{format_rational, int, rat};
use valdist_core::Rational;

fn valdist(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valdist"))
        .args(args)
        .env_remove("VALDIST_PRIME")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

/// `T̂` of `c·Π(z − r_i)/Π(z − w_j)` with `|c| = 1`, from the log-radii of the
/// zeros and poles alone: `µ̂(z − r) = max(s, λ(r))`, and each pole
/// contributes `max(0, s − λ(w))` to the valence.
fn t_oracle(zeros: &[Rational], poles: &[Rational], s: &Rational) -> Rational {
    let mu = |rs: &[Rational]| rs.iter().map(|r| r.max(s).clone()).sum::<Rational>();
    let m = (mu(zeros) - mu(poles)).max(int(0));
    let n: Rational = poles.iter().map(|w| (s - w).max(int(0))).sum();
    m + n
}

#[test]
fn characteristic_table_matches_the_factored_oracle() {
    let o = valdist(&[
        "char",
        "--prime",
        "5",
        "--expr",
        "(z-1)/(z-5)",
        "--ladder",
        "0:1:3",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let mut lines = stdout(&o).lines().map(str::to_owned).collect::<Vec<_>>().into_iter();
    assert_eq!(lines.next().unwrap(), "s,m,N,T");
    for (k, line) in lines.enumerate() {
        let s = int(k as i64);
        let t = t_oracle(&[int(0)], &[int(-1)], &s);
        assert_eq!(line.rsplit(',').next().unwrap(), format_rational(&t));
    }
    assert_eq!(
        stdout(&o)
            .lines()
            .skip(1)
            .map(|l| l.rsplit(',').next().unwrap().to_owned())
            .collect::<Vec<_>>(),
        ["1/1", "2/1", "3/1"]
    );
}

#[test]
fn newton_polygon_of_a_pure_cube() {
    let o = valdist(&["newton", "--prime", "5", "--expr", "z^3+5"]);
    assert!(o.status.success());
    let v = &json_lines(&o)[0];
    // Points (n, ν_5(a_n)) are (0, 1) and (3, 0); the three cube roots of
    // −5 share |r|³ = |5|.
    assert_eq!(v["vertices"], serde_json::json!([[0, "1/1"], [3, "0/1"]]));
    assert_eq!(v["zeros"]["origin"], 0);
    assert_eq!(
        v["zeros"]["radii"],
        serde_json::json!([{ "s": format_rational(&rat(-1, 3)), "multiplicity": 3 }])
    );
}

#[test]
fn translation_of_a_square_holds() {
    let o = valdist(&[
        "verify-lld",
        "--prime",
        "5",
        "--expr",
        "z^2",
        "--map",
        "1,1",
        "--ladder",
        "1:1:3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let summary = lines.last().unwrap();
    assert_eq!(summary["checked"], summary["held"]);
    assert_eq!(summary["windowSkipped"], 0);
    assert!(lines[..lines.len() - 1].iter().all(|v| v["holds"] == true));
}

#[test]
fn mu_of_a_scaled_monomial() {
    let o = valdist(&["mu", "--prime", "7", "--expr", "7*z^2", "--radius", "3/2"]);
    // λ(7) = −1, plus 2·(3/2).
    assert_eq!(json_lines(&o)[0]["mu"], "2/1");
}

#[test]
fn prime_comes_from_the_environment_unless_overridden() {
    let run = |extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_valdist"));
        c.args(["mu", "--expr", "5"]).args(extra).env("VALDIST_PRIME", "5");
        json_lines(&c.output().unwrap())[0]["mu"].clone()
    };
    assert_eq!(run(&[]), "-1/1");
    assert_eq!(run(&["--prime", "7"]), "0/1");
}

#[test]
fn usage_and_domain_errors_exit_2() {
    for args in [
        &["mu", "--expr", "z"][..],
        &["mu", "--prime", "4", "--expr", "z"],
        &["char", "--prime", "5", "--expr", "z^-1"],
        &["char", "--prime", "5", "--expr", "X0"],
        &["char", "--prime", "5", "--expr", "z", "--ladder", "0:0:3"],
        &["verify-lld", "--prime", "5", "--expr", "z", "--map", "0,1"],
        &["no-such-command"],
    ] {
        assert_eq!(valdist(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn window_skips_alone_exit_0_and_strict_windows_refuse() {
    let base = [
        "verify-lld",
        "--prime",
        "5",
        "--expr",
        "z^2",
        "--map",
        "1,1",
        "--ladder",
        "-2:1:5",
    ];
    let o = valdist(&base);
    assert_eq!(o.status.code(), Some(0));
    let summary = json_lines(&o).pop().unwrap();
    assert_eq!(summary["windowSkipped"], 3);
    let mut strict = base.to_vec();
    strict.push("--strict-window");
    assert_eq!(valdist(&strict).status.code(), Some(2));
}

/// The constant-B valence bound fails for `f = 1 + (z − 25)/(z − 30)`,
/// `B = X − 1`, `Ω = X_1` with `X_1 = f(z + 5)`: `f(z + 5)` has a pole at 25
/// where `B(f)` vanishes, so `Φ = B(f)·Ω` has none.
#[test]
fn failing_verdicts_exit_1() {
    let dir = std::env::temp_dir().join(format!("valdist-cmd-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("valence.json");
    let mut file = std::fs::File::create(&path).unwrap();
    write!(
        file,
        r#"{{"prime": 5, "f": "1 + (z-25)/(z-30)", "ops": [{{"kind": "shift", "a": "1", "b": "5"}}],
            "B": ["-1", "1"], "Omega": "X1", "Phi": "(2*z-45)/(z-30)"}}"#
    )
    .unwrap();
    drop(file);
    let o = valdist(&[
        "verify-clunie",
        "--instance",
        path.to_str().unwrap(),
        "--ladder",
        "0:1:1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let lines = json_lines(&o);
    let failed: Vec<_> = lines.iter().filter(|v| v["holds"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["claim"], "clunie-valence");
    assert_eq!(
        (failed[0]["lhs"].as_str(), failed[0]["rhs"].as_str()),
        (Some("2/1"), Some("1/1"))
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn generated_instances_verify_from_files() {
    let dir = std::env::temp_dir().join(format!("valdist-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (suite, verify) in [
        ("clunie", "verify-clunie"),
        ("mokhonko", "verify-mokhonko"),
        ("degree", "verify-degree"),
    ] {
        let o = valdist(&["gen", suite, "--prime", "7", "--seed", "4", "--trials", "6"]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().count(), 6);
        let path = dir.join(format!("{suite}.jsonl"));
        std::fs::write(&path, &o.stdout).unwrap();
        let v = valdist(&[verify, "--instance", path.to_str().unwrap(), "--ladder", "3:1:3"]);
        assert_eq!(
            v.status.code(),
            Some(0),
            "{suite}: {}",
            String::from_utf8_lossy(&v.stderr)
        );
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let run = |threads: &str| {
        valdist(&[
            "verify-clunie",
            "--prime",
            "5",
            "--seed",
            "9",
            "--trials",
            "24",
            "--phi-x0",
            "--threads",
            threads,
        ])
        .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn formats() {
    let csv = valdist(&["verify-degree", "--prime", "5", "--trials", "2", "--format", "csv"]);
    assert!(stdout(&csv).starts_with("instance,claim,s,lhs,rhs,holds,slack\n"));
    let pretty = valdist(&[
        "char", "--prime", "5", "--expr", "z", "--format", "pretty", "--ladder", "0:1:1",
    ]);
    assert!(stdout(&pretty).contains('T'));
    let approx = valdist(&[
        "char", "--prime", "5", "--expr", "1/z", "--ladder", "1/3:1:1", "--approx",
    ]);
    let row = &json_lines(&approx)[0];
    assert_eq!(row["N"], "1/3");
    assert!(row["approx"]["N"].is_f64());
}
