#![allow(dead_code)]

pub mod diagrams;
pub mod oracle;

use vkmaps::map::{fixtures, CombinatorialMap};
use vkmaps::verify::{enumerate_maps, is_achiral, mirror_map, EnumConfig};

/// Every generated map of the configuration together with the mirror image
/// of each chiral one.
pub fn maps_with_mirrors(cfg: &EnumConfig) -> Vec<CombinatorialMap> {
    let mut out = Vec::new();
    for m in enumerate_maps(cfg).expect("valid config") {
        if !is_achiral(&m) {
            out.push(mirror_map(&m));
        }
        out.push(m);
    }
    out
}

pub fn named_fixtures() -> Vec<(&'static str, fixtures::Fixture)> {
    vec![
        ("SQ1", fixtures::sq1()),
        ("LAD2", fixtures::lad2()),
        ("LAD3", fixtures::lad3()),
        ("GRID4", fixtures::grid4()),
        ("TRI_WHEEL", fixtures::tri_wheel()),
    ]
}
