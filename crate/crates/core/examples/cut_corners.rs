//! Cut corners on GRID4 and LAD2, and the T3/T4 kinds on a hexagon map.

use vkmaps::conditions::find_cut_corners;
use vkmaps::map::{fixtures, BoundaryDecomposition, Side};

fn show(name: &str, f: &fixtures::Fixture, d: &BoundaryDecomposition) {
    println!("{name}: |xi|={} |mu|={} |tau|={} |sigma|={}", d.xi.len(), d.mu.len(), d.tau.len(), d.sigma.len());
    for side in [Side::Mu, Side::Sigma] {
        for c in find_cut_corners(&f.map, d, side).unwrap() {
            println!(
                "  {} on {}: {:?} at l={} r={} s={} corner {}{}",
                c.region,
                side.name(),
                c.kind,
                c.ell,
                c.r,
                c.s,
                c.corner_vertex,
                c.aux_region.map(|e| format!(" beside {e}")).unwrap_or_default()
            );
        }
    }
}

fn main() {
    let g = fixtures::grid4();
    // mu runs along the north side and down the east side
    let d = BoundaryDecomposition::from_lengths(&g.map, g.dart(6, 7), 0, 4, 0).unwrap();
    show("GRID4 north+east", &g, &d);

    let l = fixtures::lad2();
    let d = BoundaryDecomposition::from_lengths(&l.map, l.dart(1, 0), 0, 3, 0).unwrap();
    show("LAD2 left square", &l, &d);

    // a square E, then a hexagon D with three outer edges, then a second hexagon
    let h = fixtures::from_polygons(&[
        vec![20, 2, 1, 30],
        vec![2, 20, 21, 12, 11, 10],
        vec![12, 21, 20, 30, 31, 32],
    ])
    .unwrap();
    let d = BoundaryDecomposition::from_lengths(&h.map, h.dart(30, 1), 0, 5, 0).unwrap();
    show("square then hexagon", &h, &d);
}
