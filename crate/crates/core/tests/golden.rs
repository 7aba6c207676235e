//! Fixture reports frozen from the brute-force oracle.
//!
//! Regenerate with `GOLDEN_WRITE=1 cargo test --test golden -- --ignored`;
//! the files are meant to stay frozen.

mod common;

use std::path::PathBuf;

use common::oracle;
use serde::{Deserialize, Serialize};
use vkmaps::conditions::{find_cut_corners, is_thin, is_thin_with, CutCornerReport, ThinnessReading};
use vkmaps::map::{fixtures::Fixture, CombinatorialMap, Dart, Side};
use vkmaps::verify::enumerate_decompositions;

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct Record {
    base: Dart,
    xi: usize,
    mu: usize,
    tau: usize,
    thin: bool,
    thin_by_edges: bool,
    cut_corners: Vec<CutCornerReport>,
}

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}

fn oracle_records(map: &CombinatorialMap) -> Vec<Record> {
    enumerate_decompositions(map)
        .into_iter()
        .map(|d| {
            let (xi, mu, tau, _) = d.lengths();
            let mut cut_corners = oracle::cut_corners(map, &d.mu, Side::Mu);
            cut_corners.extend(oracle::cut_corners(map, &d.sigma, Side::Sigma));
            Record {
                base: d.base(),
                xi,
                mu,
                tau,
                thin: oracle::thin_by_vertices(map, &d.xi, &d.mu, &d.tau, &d.sigma, d.base()),
                thin_by_edges: oracle::thin_by_edges(map, &d.xi, &d.mu, &d.tau, &d.sigma, d.base()),
                cut_corners,
            }
        })
        .collect()
}

fn library_records(map: &CombinatorialMap) -> Vec<Record> {
    enumerate_decompositions(map)
        .into_iter()
        .map(|d| {
            let (xi, mu, tau, _) = d.lengths();
            let mut cut_corners = find_cut_corners(map, &d, Side::Mu).unwrap();
            cut_corners.extend(find_cut_corners(map, &d, Side::Sigma).unwrap());
            Record {
                base: d.base(),
                xi,
                mu,
                tau,
                thin: is_thin(map, &d).unwrap(),
                thin_by_edges: is_thin_with(map, &d, ThinnessReading::Edge).unwrap(),
                cut_corners,
            }
        })
        .collect()
}

fn golden() -> Vec<(&'static str, Fixture)> {
    common::named_fixtures()
        .into_iter()
        .filter(|(n, _)| ["SQ1", "LAD2", "GRID4"].contains(n))
        .collect()
}

#[test]
#[ignore]
fn write_golden_files() {
    if std::env::var_os("GOLDEN_WRITE").is_none() {
        return;
    }
    for (name, f) in golden() {
        let text = serde_json::to_string_pretty(&oracle_records(&f.map)).unwrap();
        std::fs::write(path(name), text + "\n").unwrap();
    }
}

#[test]
fn fixture_reports_match_golden_files() {
    for (name, f) in golden() {
        let text = std::fs::read_to_string(path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
        let frozen: Vec<Record> = serde_json::from_str(&text).unwrap();
        assert_eq!(library_records(&f.map), frozen, "{name}");
    }
}
