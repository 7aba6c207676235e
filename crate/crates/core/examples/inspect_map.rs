//! Reads a map in `kmap 1` format (file argument or stdin) and prints its
//! vertices, regions and region profiles.

use std::io::Read;

use vkmaps::conditions::classify_map;
use vkmaps::io::parse_map;

fn main() {
    let mut text = String::new();
    match std::env::args().nth(1) {
        Some(path) => text = std::fs::read_to_string(path).expect("readable file"),
        None => {
            std::io::stdin().read_to_string(&mut text).expect("stdin");
        }
    }
    let map = parse_map(&text).expect("valid map").map;
    println!(
        "V={} E={} R={} boundary length {}",
        map.num_vertices(),
        map.num_edges(),
        map.num_regions(),
        map.boundary_length()
    );
    for v in map.vertices() {
        let darts: Vec<String> = map.vertex_darts(v).unwrap().iter().map(|d| d.to_string()).collect();
        let p = map.vertex_profile(v).unwrap();
        println!("{v}: darts {} valence {} {}", darts.join(" "), p.valence, if p.is_inner { "inner" } else { "boundary" });
    }
    for r in map.regions() {
        let walk: Vec<String> = map
            .region_boundary(r)
            .unwrap()
            .iter()
            .map(|&d| map.origin(d).to_string())
            .collect();
        let p = map.region_profile(r).unwrap();
        let nb: Vec<String> = p.neighbors.iter().map(|n| n.to_string()).collect();
        println!(
            "{r}: {} | edges {} outer {} inner {} neighbors [{}] proper {}",
            walk.join(" "),
            p.edge_count,
            p.outer_edge_count(),
            p.inner_edge_count(),
            nb.join(" "),
            p.is_proper_boundary
        );
    }
    let boundary: Vec<String> = map
        .boundary()
        .iter()
        .map(|&d| format!("{}({})", vkmaps::map::Dart(d), map.origin(vkmaps::map::Dart(d))))
        .collect();
    println!("outer cycle: {}", boundary.join(" "));
    println!("{:?}", classify_map(&map));
}
