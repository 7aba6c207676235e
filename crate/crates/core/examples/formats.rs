//! Text formats: a map document with labels, and a presentation document,
//! each parsed back and reserialized byte for byte.

use vkmaps::io::{parse_map, parse_presentation, serialize_map, serialize_presentation};
use vkmaps::map::fixtures;
use vkmaps::presentation::{DiagramLabelling, Letter};

fn main() {
    let grid = fixtures::grid4();
    let text = serialize_map(&grid.map, None);
    print!("{text}");
    let again = serialize_map(&parse_map(&text).unwrap().map, None);
    assert_eq!(again, text);

    // SQ1 labelled by the commutator, read from vertex 0 around the square
    let sq = fixtures::sq1();
    let mut labels = DiagramLabelling::new(&sq.map);
    for (d, c) in sq.path(&[0, 1, 2, 3, 0]).into_iter().zip("abAB".chars()) {
        labels.set(&sq.map, d, Letter::from_char(c).unwrap());
    }
    let labelled = serialize_map(&sq.map, Some(&labels));
    println!();
    print!("{labelled}");
    let doc = parse_map(&labelled).unwrap();
    assert_eq!(doc.labels.as_ref(), Some(&labels));

    let pres = parse_presentation("pres 1\ngens a b\nrel abAB\n", false).unwrap();
    println!();
    print!("{}", serialize_presentation(&pres));
    let sym = parse_presentation("pres 1\ngens a b\nrel abAB\n", true).unwrap();
    println!("# symmetrized: {} relators", sym.relators.len());
}
