//! Building maps: from raw permutations, and from a list of polygons.

use vkmaps::map::{fixtures, CombinatorialMap, Dart, MapError};

fn main() -> Result<(), MapError> {
    // A single square. Darts 2i and 2i+1 are reverses; rotation cycles
    // list the darts leaving each vertex counterclockwise.
    let rev = vec![1, 0, 3, 2, 5, 4, 7, 6];
    let rot = vec![7, 2, 1, 4, 3, 6, 5, 0];
    let square = CombinatorialMap::from_permutations(rev, rot, Dart(1))?;
    println!(
        "square: V={} E={} R={} boundary {}",
        square.num_vertices(),
        square.num_edges(),
        square.num_regions(),
        square.boundary_length()
    );

    // Dropping one reversal pair is rejected.
    let broken = CombinatorialMap::from_permutations(vec![1, 0, 3, 2, 5, 4, 6, 7], vec![7, 2, 1, 4, 3, 6, 5, 0], Dart(1));
    println!("broken: {}", broken.unwrap_err());

    // Polygons sharing labelled vertices: two squares glued along 1-4.
    let lad = fixtures::from_polygons(&[vec![0, 3, 4, 1], vec![1, 4, 5, 2]])?;
    let m = &lad.map;
    println!("ladder: V={} E={} R={} boundary {}", m.num_vertices(), m.num_edges(), m.num_regions(), m.boundary_length());
    for r in m.regions() {
        let p = m.region_profile(r)?;
        println!(
            "  {r}: {} edges, {} outer, {} inner, neighbors {:?}, proper boundary {}",
            p.edge_count,
            p.outer_edge_count(),
            p.inner_edge_count(),
            p.neighbors,
            p.is_proper_boundary
        );
    }
    let v = lad.vertex(1);
    println!("  vertex 1: {:?}", m.vertex_profile(v)?);
    let cycle: Vec<String> = m.boundary_cycle(lad.dart(0, 1))?.iter().map(|d| d.to_string()).collect();
    println!("  boundary from dart 0->1: {}", cycle.join(" "));
    Ok(())
}
