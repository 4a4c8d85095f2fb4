//! End-to-end tests of the `jlcert` binary: exit codes, formats, and
//! the b-file workflows.

use std::io::Write;
use std::process::{Command, Output};

fn jlcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jlcert"))
        .args(args)
        .env("JLCERT_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn table_csv_has_99_entries_at_depth_18() {
    let out = jlcert(&["table", "--n-max", "18", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,k,value");
    assert_eq!(lines.len(), 100); // header + 99 entries
    assert_eq!(lines[99], "18,9,2");
    assert!(lines.contains(&"10,2,355"));
}

#[test]
fn table_json_round_trips() {
    for engine in ["closed-form", "rec-columns", "rec-rows"] {
        let out = jlcert(&["table", "--n-max", "12", "--format", "json", "--engine", engine]);
        assert!(out.status.success(), "{engine}");
        let doc: jlcert::table_io::TableDocument =
            serde_json::from_str(&stdout(&out)).unwrap();
        let table =
            jlcert_core::triangle::JLTable::build(12, jlcert_core::triangle::Engine::ClosedForm)
                .unwrap();
        assert!(jlcert::table_io::document_matches(&table, &doc), "{engine}");
    }
}

#[test]
fn verify_mode_small_n_is_informational() {
    let out = jlcert(&["verify", "mode", "--n-max", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["status"], "verified");
    let notes = doc["checks"][0]["notes"].as_array().unwrap();
    assert!(notes.iter().any(|n| n.as_str().unwrap().contains("n = 4")));
}

#[test]
fn verify_subcommands_succeed_at_desk_scale() {
    for what in ["log-concavity", "recurrences", "bounds"] {
        let out = jlcert(&["verify", what, "--n-max", "30", "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{what}: {}", stdout(&out));
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["schema_version"], "1.0", "{what}");
        assert_eq!(doc["status"], "verified", "{what}");
    }
}

#[test]
fn verify_all_small() {
    for n in ["18", "40"] {
        let out = jlcert(&["verify", "all", "--n-max", n, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "n={n}: {}", stdout(&out));
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["status"], "verified", "n={n}");
    }
}

#[test]
fn oracle_exit_zero() {
    let out = jlcert(&["oracle", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("status: verified"));
}

#[test]
fn oracle_cap_is_usage_error() {
    let out = jlcert(&["oracle", "--n-max", "25"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = jlcert(&["table", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oeis_fixture_verifies_and_fault_injection_fails() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/b245962.txt");
    let out = jlcert(&["oeis", "compare", "--bfile", fixture, "--id", "A245962"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // alter one value beyond the alignment probe and expect exit 1
    let text = std::fs::read_to_string(fixture).unwrap();
    let broken = text.replace("40 110", "40 111");
    assert_ne!(text, broken);
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(broken.as_bytes()).unwrap();
    let out = jlcert(&[
        "oeis",
        "compare",
        "--bfile",
        tmp.path().to_str().unwrap(),
        "--id",
        "A245962",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("index 40"));
}

#[test]
fn oeis_empirical_scans_pass_on_fixtures() {
    for (fixture, id) in [("b037027.txt", "A037027"), ("b073370.txt", "A073370")] {
        let path = format!("{}/tests/fixtures/{fixture}", env!("CARGO_MANIFEST_DIR"));
        let out = jlcert(&["oeis", "compare", "--bfile", &path, "--id", id, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{id}");
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["status"], "verified");
        let notes = doc["checks"][0]["notes"].as_array().unwrap();
        assert!(notes.iter().any(|n| n.as_str().unwrap().contains("empirical")));
    }
}

#[test]
fn malformed_bfile_is_usage_error() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    tmp.write_all(b"0 1\n2 3\n").unwrap();
    let out = jlcert(&[
        "oeis",
        "compare",
        "--bfile",
        tmp.path().to_str().unwrap(),
        "--id",
        "A245962",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("index gap"));
}
