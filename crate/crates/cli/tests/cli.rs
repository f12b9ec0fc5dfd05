use std::process::Command;

use decomp_cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn decomp(args: &str) -> decomp_cli::Outcome {
    run(std::iter::once("decomp").chain(args.split_whitespace()))
}

fn table_dims(stdout: &str) -> Vec<usize> {
    stdout.lines().skip(2).map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap()).collect()
}

#[test]
fn gl2_classes() {
    let o = decomp("classes --group gl --n 2");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(table_dims(&o.stdout), [4, 3, 1]);
}

#[test]
fn pgl2_hasse_dot() {
    let o = decomp("hasse --group pgl --n 2 --format dot");
    assert_eq!(o.code, EXIT_OK);
    let dims: Vec<usize> = o
        .stdout
        .lines()
        .filter_map(|l| l.split_once("| dim ").map(|(_, d)| d.trim_end_matches("\"];").parse().unwrap()))
        .collect();
    assert_eq!(dims, [3, 2, 0]);
    assert_eq!(o.stdout.matches("->").count(), 2);
}

fn dot_is_well_formed(text: &str) -> bool {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or_default();
    if !(header.starts_with("digraph \"") && header.ends_with("\" {")) || text.lines().last() != Some("}") {
        return false;
    }
    let body: Vec<&str> = text.lines().skip(1).take(text.lines().count() - 2).map(str::trim).collect();
    let braces = body.iter().map(|l| l.matches('{').count() as i64 - l.matches('}').count() as i64).sum::<i64>();
    braces == 0 && body.iter().all(|l| l.ends_with(';') || l.ends_with('}'))
}

#[test]
fn dot_output_is_well_formed() {
    for n in 1..=4 {
        for group in ["gl", "pgl"] {
            let o = decomp(&format!("hasse --group {group} --n {n}"));
            assert!(dot_is_well_formed(&o.stdout), "{}", o.stdout);
        }
    }
}

#[test]
fn sl2_torus_verdict() {
    let o = decomp("stabtype --builtin sl --n 2 --p 2");
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.lines().any(|l| l == "torus (1,1): NOT stabiliser-type"), "{}", o.stdout);
    let o = decomp("stabtype --builtin sl --n 2 --p 3");
    assert!(o.stdout.contains("torus (1,1): stabiliser-type"));
}

#[test]
fn stabtype_from_datum_file() {
    let dir = std::env::temp_dir().join(format!("decomp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2.datum");
    std::fs::write(&path, decomp_core::root_datum::build_sl(2).unwrap().to_text()).unwrap();
    let o = decomp(&format!("stabtype --datum {} --p 2 --levi 0,1", path.display()));
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.contains(": stabiliser-type"));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn classes_json_schema() {
    let o = decomp("classes --group gl --n 3 --format json");
    let rows: Value = serde_json::from_str(&o.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for row in rows {
        let obj = row.as_object().unwrap();
        for key in ["blocks", "dim", "level", "sheet_dense", "isolated"] {
            assert!(obj.contains_key(key), "missing {key}");
        }
        assert!(obj["dim"].is_u64() && obj["level"].is_u64());
        assert!(obj["sheet_dense"].is_boolean() && obj["isolated"].is_boolean());
        for block in obj["blocks"].as_array().unwrap() {
            let pair = block.as_array().unwrap();
            let size = pair[0].as_u64().unwrap();
            let parts: u64 = pair[1].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).sum();
            assert_eq!(size, parts);
        }
        assert_eq!(obj.contains_key("sheet_nilpotent"), obj["sheet_dense"].as_bool().unwrap());
    }
}

#[test]
fn hasse_json_schema() {
    let o = decomp("hasse --group pgl --n 3 --format json");
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["group"], "PGL");
    assert_eq!(v["n"], 3);
    let nodes = v["nodes"].as_array().unwrap().len();
    for cover in v["covers"].as_array().unwrap() {
        let c = cover.as_array().unwrap();
        assert!(c.iter().all(|i| (i.as_u64().unwrap() as usize) < nodes));
    }
}

#[test]
fn micro_report_json() {
    let o = decomp("micro pgl2 --p 2 --k 2");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    for row in v["rows"].as_array().unwrap() {
        assert!(row["element"].is_string());
        assert!(row["centraliser_dim"].is_u64() && row["stabiliser_dim"].is_u64());
    }
    assert_eq!(v["summary"]["stabiliser_e12"], 1);
    assert_eq!(decomp("micro pgl2 --p 3 --k 1").code, EXIT_OK);
}

#[test]
fn induce_groups_by_tag() {
    let o = decomp("induce --blocks 2:1.1,1:1 --tags a,a");
    assert_eq!(o.stdout, "a: (2,1)\n");
    let o = decomp("induce --blocks 2:1.1,1:1,1:1 --tags a,b,a");
    assert_eq!(o.stdout, "a: (2,1)\nb: (1)\n");
}

#[test]
fn sheets_report() {
    let o = decomp("sheets --group gl --n 3");
    assert!(o.stdout.starts_with("# GL3: 3 level sets, 3 sheets\n"));
    assert_eq!(o.stdout.matches("isolated").count(), 1);
}

#[test]
fn verification_verbs_pass() {
    let o = decomp("verify closure --n 3 --seed 5");
    assert_eq!(o.code, EXIT_OK, "{}{}", o.stdout, o.stderr);
    assert!(o.stdout.contains("mismatches=0"));
    let o = decomp("verify induction --n 4 --seed 5");
    assert_eq!(o.code, EXIT_OK, "{}{}", o.stdout, o.stderr);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        "classes --group gl --n 13",
        "hasse --group gl --n 0",
        "classes --group gl --n 2 --bogus",
        "classes --group sp --n 2",
        "induce --blocks 2:1.2",
        "induce --blocks 2:1.1 --tags a,b",
        "stabtype --builtin sl --n 2 --p 4",
        "verify induction --n 9",
        "micro pgl2 --p 2 --k 9",
        "",
    ] {
        let o = decomp(args);
        assert_eq!(o.code, EXIT_USAGE, "{args}: {}", o.stdout);
        assert!(!o.stderr.is_empty());
    }
    assert_ne!(EXIT_MISMATCH, EXIT_USAGE);
}

#[test]
fn output_is_deterministic() {
    for args in ["classes --group gl --n 5 --format json", "hasse --group pgl --n 5", "verify closure --n 3 --seed 9"] {
        assert_eq!(decomp(args), decomp(args));
    }
}

#[test]
fn binary_writes_output_file_and_honours_seed_env() {
    let dir = std::env::temp_dir().join(format!("decomp-bin-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("gl2.dot");
    let status = Command::new(env!("CARGO_BIN_EXE_decomp"))
        .args(["hasse", "--group", "gl", "--n", "2", "--output"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), decomp("hasse --group gl --n 2").stdout);

    let run_with = |seed: &str| {
        Command::new(env!("CARGO_BIN_EXE_decomp"))
            .args(["verify", "closure", "--n", "2"])
            .env("DECOMP_SEED", seed)
            .output()
            .unwrap()
    };
    let o = run_with("17");
    assert!(String::from_utf8_lossy(&o.stdout).contains("seed=17"));
    assert_eq!(run_with("x").status.code(), Some(EXIT_USAGE));

    let refused = Command::new(env!("CARGO_BIN_EXE_decomp")).args(["hasse", "--group", "gl", "--n", "20"]).output().unwrap();
    assert_eq!(refused.status.code(), Some(EXIT_USAGE));
    std::fs::remove_dir_all(dir).ok();
}
