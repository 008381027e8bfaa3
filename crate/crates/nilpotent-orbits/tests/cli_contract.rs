//! Golden tests for the machine-readable CLI surfaces: JSON schemas for
//! every subcommand that offers them, partition round-trips, and the real
//! binary's exit codes.

use std::process::Command;

use nilpotent_orbits::cli;
use nilpotent_orbits::orbit::{enumerate_orbits, Family, OrbitFilter};
use nilpotent_orbits::partition::Partition;
use serde_json::Value;

fn capture(args: &[&str]) -> (i32, String, String) {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(&args, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn orbits_json_is_stable() {
    let (code, out, _) = capture(&["orbits", "C", "4", "--filter", "ms", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"family\":\"C\",\"filter\":\"ms\",\"orbits\":[\"4\",\"2,2\",\"2,1,1\"],\"size\":4}\n"
    );
}

#[test]
fn char_json_is_stable() {
    let (code, out, _) = capture(&["char", "4", "--rank", "2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"entries\":[\"3/2\",\"1/2\"],\"metaplectic_integral\":true,\"partition\":\"4\",\"rank\":2}\n"
    );

    let (code, out, _) = capture(&["char", "2,1,1", "--rank", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let value: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["entries"], serde_json::json!(["1/2", "0"]));
    assert_eq!(value["metaplectic_integral"], Value::Bool(false));
}

#[test]
fn poset_json_is_stable() {
    let (code, out, _) = capture(&["poset", "C", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let value: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        value["nodes"],
        serde_json::json!(["4", "2,2", "2,1,1", "1,1,1,1"])
    );
    let edges = value["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 3);
    for edge in edges {
        let pair = edge.as_array().unwrap();
        let small: Partition = pair[0].as_str().unwrap().parse().unwrap();
        let large: Partition = pair[1].as_str().unwrap().parse().unwrap();
        assert!(small.dominance_leq(&large).unwrap());
        assert_ne!(small, large);
    }
}

#[test]
fn verify_json_matches_published_schema() {
    let (code, out, _) = capture(&["verify", "--max-rank", "3", "--format", "json"]);
    assert_eq!(code, 0);
    // Field order on the wire follows the published schema.
    assert!(
        out.starts_with("[{\"check\":\"C1\",\"params\":{\"max_n\":3,\"a_offset\":3},\"instances\":"),
        "unexpected report prefix: {}",
        &out[..out.len().min(120)]
    );
    let reports: Value = serde_json::from_str(&out).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 14);
    for (index, report) in reports.iter().enumerate() {
        let object = report.as_object().unwrap();
        let mut keys: Vec<&str> = object.keys().map(String::as_str).collect();
        keys.sort_unstable();
        assert_eq!(
            keys,
            ["check", "elapsed_ms", "failures", "instances", "params", "witnesses"],
            "schema drift in report {index}"
        );
        assert_eq!(report["check"], format!("C{}", index + 1));
        assert!(report["params"]["max_n"].is_u64());
        assert!(report["params"]["a_offset"].is_u64());
        assert!(report["instances"].as_u64().unwrap() > 0);
        assert_eq!(report["failures"], 0);
        assert_eq!(report["witnesses"], serde_json::json!([]));
        assert!(report["elapsed_ms"].is_u64());
    }
}

#[test]
fn every_printed_partition_reparses() {
    for (family, sizes) in [
        (Family::B, [1u32, 5, 9].as_slice()),
        (Family::C, [0, 4, 8].as_slice()),
        (Family::D, [2, 6, 10].as_slice()),
    ] {
        for &size in sizes {
            for filter in [OrbitFilter::All, OrbitFilter::Special] {
                for orbit in enumerate_orbits(family, size, filter).unwrap() {
                    let printed = orbit.to_string();
                    let reparsed: Partition = printed.parse().unwrap();
                    assert_eq!(reparsed, orbit);
                }
            }
        }
    }
}

#[test]
fn binary_end_to_end() {
    let nilo = env!("CARGO_BIN_EXE_nilo");

    let good = Command::new(nilo)
        .args(["dual", "mbv", "4"])
        .output()
        .expect("binary runs");
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(String::from_utf8(good.stdout).unwrap(), "2,1,1\n");

    let usage = Command::new(nilo)
        .args(["orbits", "E", "4"])
        .output()
        .expect("binary runs");
    assert_eq!(usage.status.code(), Some(1));
    let stderr = String::from_utf8(usage.stderr).unwrap();
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.starts_with("nilo: error:"));

    let lifted = Command::new(nilo)
        .args(["lift", "orbit", "2,2", "--a", "2"])
        .output()
        .expect("binary runs");
    assert_eq!(lifted.status.code(), Some(0));
    assert_eq!(String::from_utf8(lifted.stdout).unwrap(), "3,3,1,1,1\n");
}
