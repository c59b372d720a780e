//! Replays the fuzz seed corpus through the parsers, so the round-trip
//! checks of the fuzz targets also run under `cargo test`.

use std::path::{Path, PathBuf};

use skolem_xray::lab::ConjectureReport;
use skolem_xray::parse::{
    parse_ds_matrix, parse_multiset, parse_order_range, parse_pairing, parse_permutation,
    parse_sequence, parse_xray,
};
use skolem_xray::rational::{format_rational, parse_rational};

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let path = e.unwrap().path();
            let body = std::fs::read_to_string(&path).unwrap();
            (path, body)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn permutation_seeds() {
    for (_, s) in seeds("parse_permutation") {
        if let Ok(pi) = parse_permutation(&s) {
            assert_eq!(parse_permutation(&pi.to_string()).unwrap(), pi);
        }
    }
}

#[test]
fn multiset_seeds() {
    for (_, s) in seeds("parse_multiset") {
        if let Ok(a) = parse_multiset(&s) {
            assert_eq!(parse_multiset(&a.to_string()).unwrap(), a);
        }
    }
}

#[test]
fn sequence_and_pairing_seeds() {
    for (_, s) in seeds("parse_sequence") {
        if let Ok(seq) = parse_sequence(&s) {
            assert_eq!(parse_sequence(&seq.to_string()).unwrap(), seq);
        }
    }
    for (_, s) in seeds("parse_pairing") {
        if let Ok(p) = parse_pairing(&s) {
            assert_eq!(
                parse_pairing(&serde_json::to_string(&p).unwrap()).unwrap(),
                p
            );
        }
    }
}

#[test]
fn xray_and_matrix_seeds() {
    for (_, s) in seeds("parse_xray") {
        if let Ok(x) = parse_xray(&s) {
            assert_eq!(parse_xray(&x.to_string()).unwrap(), x);
        }
    }
    let mut accepted = 0;
    for (_, s) in seeds("parse_ds_matrix") {
        if let Ok(d) = parse_ds_matrix(&s) {
            accepted += 1;
            assert_eq!(
                parse_ds_matrix(&serde_json::to_string(&d).unwrap()).unwrap(),
                d
            );
        }
    }
    assert!(accepted >= 3);
}

#[test]
fn scalar_seeds() {
    for (_, s) in seeds("parse_order_range") {
        if let Ok(r) = parse_order_range(&s) {
            assert!(*r.start() >= 1 && r.start() <= r.end());
        }
    }
    for (_, s) in seeds("parse_rational") {
        if let Ok(r) = parse_rational(&s) {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
    for (path, s) in seeds("parse_report") {
        if let Ok(r) = serde_json::from_str::<ConjectureReport>(&s) {
            let again = serde_json::to_string(&r).unwrap();
            assert_eq!(
                serde_json::from_str::<ConjectureReport>(&again).unwrap(),
                r,
                "{path:?}"
            );
        }
    }
}
