//! Writes GRID4 as Graphviz with its cut corners and thick configurations
//! highlighted. Pipe into `dot -Tsvg`.

use vkmaps::conditions::{find_cut_corners, find_thick_configurations};
use vkmaps::io::{export_dot, DotOptions};
use vkmaps::map::{fixtures, BoundaryDecomposition, Side};

fn main() {
    let g = fixtures::grid4();
    let d = BoundaryDecomposition::from_lengths(&g.map, g.dart(6, 7), 0, 4, 0).unwrap();
    let cut_corners = find_cut_corners(&g.map, &d, Side::Mu).unwrap();
    let thick = find_thick_configurations(&g.map, &d.mu).unwrap();
    print!(
        "{}",
        export_dot(
            &g.map,
            &DotOptions {
                cut_corners: &cut_corners,
                thick: &thick,
            }
        )
    );
}
