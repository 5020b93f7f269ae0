use std::path::PathBuf;
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riordan::rational::{int, ratio};
use riordan::sequences::{g_from_b, BSequence};
use riordan::{Rational, Series};
use riordan_cli::output::{ExpansionRow, SeriesJson};
use riordan_cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("riordan").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("g_from_b.txt", &["g-from-b", "--b", "1,1", "--order", "6"]),
    (
        "b_from_g.txt",
        &["b-from-g", "--g", "pascal", "--order", "8"],
    ),
    (
        "expand_b6.txt",
        &["expand", "--b", "b0,b1", "--n", "6", "--power", "m"],
    ),
    (
        "gpt_r2.csv",
        &[
            "gpt", "--r", "2", "--rows", "4", "--cols", "5", "--format", "csv",
        ],
    ),
    (
        "g_from_b.json",
        &["g-from-b", "--b", "1,1", "--order", "6", "--format", "json"],
    ),
    (
        "expand_b6.json",
        &["expand", "--b", "b0,b1", "--n", "6", "--format", "json"],
    ),
];

#[test]
fn golden_outputs() {
    for (file, args) in GOLDEN {
        let out = cli(args);
        assert_eq!(out.status, 0, "{args:?}: {}", out.stderr);
        assert_eq!(out.stdout, golden(file), "{args:?}");
    }
}

#[test]
fn binary_matches_library_byte_for_byte() {
    for (file, args) in GOLDEN {
        let out = Command::new(env!("CARGO_BIN_EXE_riordan"))
            .args(*args)
            .output()
            .unwrap();
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap(), golden(file));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["g-from-b", "--b", "1,x"]).status, 1);
    assert_eq!(cli(&["frobnicate"]).status, 1);
    assert_eq!(cli(&["g-from-b", "--b", "1", "--order", "0"]).status, 1);
    assert_eq!(cli(&["expand", "--n", "3"]).status, 1);
    assert_eq!(cli(&["g-from-b", "--b", "fibonacci"]).status, 1);
    let out = cli(&["b-from-g", "--g", "1,1,0,0"]);
    assert_eq!(out.status, 2);
    assert!(out.stderr.contains("pseudo-involution"));
    assert_eq!(cli(&["check-pseudo", "--g", "2,1"]).status, 2);
    assert_eq!(cli(&["--help"]).status, 0);
}

#[test]
fn named_inputs_and_verbs() {
    assert_eq!(cli(&["check-pseudo", "--g", "pascal"]).stdout, "true\n");
    assert_eq!(cli(&["check-pseudo", "--g", "catalan"]).stdout, "false\n");
    assert_eq!(
        cli(&["a-from-g", "--g", "motzkin", "--order", "4"]).stdout,
        "1, 1, 1, 0, 0\n"
    );
    assert_eq!(
        cli(&["gbs", "--r", "3", "--m", "2", "--order", "4"]).stdout,
        "1, 2, 7, 30, 143\n"
    );
    assert_eq!(
        cli(&["g-from-a", "--a", "gbs:1:1", "--order", "4"]).stdout,
        "1, 1, 2, 5, 14\n"
    );
    assert_eq!(
        cli(&["expand", "--a", "1,1,1", "--n", "3", "--power", "1"]).stdout,
        "4\n"
    );
    assert_eq!(
        cli(&["expand", "--b", "1", "--n", "2"]).stdout,
        "1/2*m^2 + 1/2*m\n"
    );
    let matrix = cli(&["matrix", "--f", "1,3,5,7", "--g", "1,2,3,4", "--rows", "4"]);
    assert_eq!(matrix.stdout, "1\n3 1\n5 5 1\n7 14 7 1\n");
    let verify = cli(&["verify", "--b", "1,1/2,-2", "--order", "8"]);
    assert_eq!(verify.status, 0, "{}", verify.stdout);
    assert!(!verify.stdout.contains("fail"));
}

fn random_b(rng: &mut ChaCha8Rng) -> Vec<Rational> {
    let pool = [int(-2), int(-1), int(0), int(1), int(2), ratio(1, 2)];
    let len = rng.gen_range(1..=4);
    (0..len)
        .map(|_| pool[rng.gen_range(0..pool.len())].clone())
        .collect()
}

fn list(values: &[Rational]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[test]
fn g_from_b_then_b_from_g_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let b = random_b(&mut rng);
        let text = list(&b);
        let order = (2 * b.len() - 1).to_string();
        let g = cli(&[
            "g-from-b", "--b", &text, "--order", &order, "--format", "csv",
        ]);
        assert_eq!(g.status, 0, "{}", g.stderr);
        let back = cli(&["b-from-g", "--g", g.stdout.trim(), "--format", "csv"]);
        assert_eq!(back.status, 0, "{}", back.stderr);
        assert_eq!(back.stdout.trim(), text);
    }
}

#[test]
fn json_reparses_to_the_same_objects() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10 {
        let b = random_b(&mut rng);
        let out = cli(&[
            "g-from-b",
            "--b",
            &list(&b),
            "--order",
            "9",
            "--format",
            "json",
        ]);
        let parsed: SeriesJson = serde_json::from_str(&out.stdout).unwrap();
        let expect: Series = g_from_b(&BSequence::exact(b), 9).unwrap();
        assert_eq!(parsed.to_series().unwrap().coeffs(), expect.coeffs());
        assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", out.stdout);
    }
    let out = cli(&["expand", "--b", "b0", "--n", "5", "--format", "json"]);
    let rows: Vec<ExpansionRow> = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2].exponents, vec![0, 0, 1]);
    assert_eq!(serde_json::to_string(&rows).unwrap() + "\n", out.stdout);
}

#[test]
fn repeated_runs_are_identical() {
    let args: &[&[&str]] = &[
        &["expand", "--a", "a1", "--n", "7", "--format", "csv"],
        &[
            "factorize",
            "--g",
            "pascal",
            "--order",
            "9",
            "--format",
            "json",
        ],
        &["gbs", "--r", "2", "--m", "m", "--order", "5"],
        &["verify", "--a", "motzkin", "--order", "7"],
    ];
    for a in args {
        let first = cli(a);
        assert_eq!(first.status, 0, "{a:?}: {}", first.stderr);
        for _ in 0..3 {
            assert_eq!(cli(a), first);
        }
    }
}
