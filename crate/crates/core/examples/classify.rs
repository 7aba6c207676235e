//! Map classes of the named fixtures and of a few ladders.

use vkmaps::conditions::classify_map;
use vkmaps::map::fixtures;

fn main() {
    let maps = [
        ("SQ1", fixtures::sq1()),
        ("LAD2", fixtures::lad2()),
        ("LAD3", fixtures::lad3()),
        ("GRID4", fixtures::grid4()),
        ("TRI_WHEEL", fixtures::tri_wheel()),
        ("two heptagons", fixtures::ladder(2, 7)),
        ("three hexagons", fixtures::ladder(3, 6)),
    ];
    println!("{:<16} {:>5} {:>10} {:>10} {:>12}", "map", "V(6)", "proper V6", "proper C7", "proper C4T4");
    for (name, f) in maps {
        let c = classify_map(&f.map);
        println!(
            "{name:<16} {:>5} {:>10} {:>10} {:>12}",
            c.is_v6, c.is_proper_v6, c.is_proper_c7, c.is_proper_c4t4
        );
    }
}
