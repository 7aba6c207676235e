//! Thick configurations along boundary paths.

use vkmaps::conditions::find_thick_configurations;
use vkmaps::map::fixtures;

fn main() {
    let cases = [
        ("LAD2, left square's outer edges", fixtures::lad2(), vec![1, 0, 3, 4]),
        ("GRID4, north then east", fixtures::grid4(), vec![6, 7, 8, 5, 2]),
        ("SQ1, two edges", fixtures::sq1(), vec![0, 3, 2]),
    ];
    for (name, f, walk) in cases {
        let alpha = f.path(&walk);
        let found = find_thick_configurations(&f.map, &alpha).unwrap();
        println!("{name}: {} found", found.len());
        for t in found {
            let darts = |p: &[vkmaps::map::Dart]| p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ");
            println!(
                "  {:?} regions {:?} mu [{}] sigma [{}] leading {:?}",
                t.kind,
                t.regions,
                darts(&t.mu),
                darts(&t.sigma),
                t.leading_edge.map(|d| d.to_string())
            );
        }
    }
}
