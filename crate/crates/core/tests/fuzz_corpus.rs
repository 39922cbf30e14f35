//! Replays the checked-in fuzz seeds through the same round-trip checks the
//! fuzz targets make, so regressions show up without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use epoly_core::fforacle::{is_supported, parse_q_list, TraceStratum};
use epoly_core::report::ReportFile;
use epoly_core::IntPoly;

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn poly_seeds_round_trip() {
    for (name, s) in seeds("parse_poly") {
        let p: IntPoly = s.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(p.to_string().parse::<IntPoly>().unwrap(), p, "{name}");
    }
}

#[test]
fn report_seeds_round_trip() {
    for (name, s) in seeds("parse_report") {
        let f = ReportFile::from_json(&s).unwrap_or_else(|e| panic!("{name}: {e}"));
        let json = f.to_json();
        assert_eq!(ReportFile::from_json(&json).unwrap(), f, "{name}");
    }
}

#[test]
fn trace_stratum_seeds() {
    for (name, s) in seeds("parse_trace_stratum") {
        let t: TraceStratum = s.parse().unwrap_or_else(|e| panic!("{name}: {e:?}"));
        assert_eq!(t.to_string().parse::<TraceStratum>().ok(), Some(t));
    }
}

#[test]
fn q_list_seeds() {
    for (name, s) in seeds("parse_q_list") {
        match parse_q_list(&s) {
            Ok(qs) => assert!(qs.iter().all(|&q| is_supported(q)), "{name}"),
            Err(_) => assert_eq!(name, "even"),
        }
    }
}
