//! Labels a map, checks it against a presentation and looks for
//! cancelling pairs.

use vkmaps::map::fixtures;
use vkmaps::presentation::{diagnose_diagram, validate_diagram, DiagramLabelling, Letter, Presentation, Word};

fn main() {
    let p = Presentation::new(vec!['a', 'b'], vec![Word::parse("abAB").unwrap()]).unwrap();
    let f = fixtures::lad2();
    let m = &f.map;

    let label = |edges: &[(usize, usize, char)]| {
        let mut l = DiagramLabelling::new(m);
        for &(u, v, c) in edges {
            l.set(m, f.dart(u, v), Letter::from_char(c).unwrap());
        }
        l
    };
    // the right square mirrors the left one across the shared edge
    let mirrored = label(&[(0, 1, 'a'), (1, 4, 'b'), (4, 3, 'A'), (3, 0, 'B'), (2, 1, 'a'), (5, 2, 'B'), (4, 5, 'A')]);
    let v = validate_diagram(m, &mirrored, &p, None).unwrap();
    println!("mirrored: valid {}, reduced {}, boundary {}", v.is_valid(), v.is_reduced(), v.boundary_word);

    let reduced = label(&[(0, 1, 'a'), (1, 4, 'b'), (4, 3, 'A'), (3, 0, 'B'), (1, 2, 'a'), (2, 5, 'b'), (5, 4, 'A')]);
    let v = validate_diagram(m, &reduced, &p, None).unwrap();
    println!("reduced: valid {}, reduced {}, boundary {}", v.is_valid(), v.is_reduced(), v.boundary_word);

    let wrong = label(&[(0, 1, 'a'), (1, 4, 'a'), (4, 3, 'A'), (3, 0, 'B'), (1, 2, 'a'), (2, 5, 'b'), (5, 4, 'A')]);
    println!("wrong: {}", validate_diagram(m, &wrong, &p, None).unwrap_err());
    for r in diagnose_diagram(m, &wrong, &p, None).unwrap().regions {
        println!("  {} reads {} relator {}", r.region, r.word, r.is_relator);
    }
}
