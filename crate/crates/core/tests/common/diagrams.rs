//! Every labelling of a map in which each region reads a relator.

use vkmaps::map::{CombinatorialMap, Dart};
use vkmaps::presentation::{DiagramLabelling, Letter, Presentation, Word};

pub fn labellings(map: &CombinatorialMap, p: &Presentation) -> Vec<DiagramLabelling> {
    let closure: Vec<Word> = p.symmetrized().unwrap().relators;
    let regions: Vec<Vec<Dart>> = map.regions().map(|r| map.region_boundary(r).unwrap()).collect();
    let mut labels: Vec<Option<Letter>> = vec![None; map.num_darts()];
    let mut out = Vec::new();
    place(map, &regions, &closure, 0, &mut labels, &mut out);
    out
}

fn place(
    map: &CombinatorialMap,
    regions: &[Vec<Dart>],
    closure: &[Word],
    i: usize,
    labels: &mut Vec<Option<Letter>>,
    out: &mut Vec<DiagramLabelling>,
) {
    let Some(cycle) = regions.get(i) else {
        let mut l = DiagramLabelling::new(map);
        for d in map.darts() {
            match labels[d.0] {
                Some(x) => l.set(map, d, x),
                // an edge on no region's boundary never occurs in a disk map
                None => unreachable!("unlabelled dart {d}"),
            }
        }
        out.push(l);
        return;
    };
    for w in closure.iter().filter(|w| w.len() == cycle.len()) {
        let saved = labels.clone();
        let fits = cycle.iter().zip(w.letters()).all(|(&d, &x)| {
            let e = map.reverse(d);
            match labels[d.0] {
                Some(y) if y != x => false,
                _ => {
                    labels[d.0] = Some(x);
                    labels[e.0] = Some(x.inv());
                    true
                }
            }
        });
        if fits {
            place(map, regions, closure, i + 1, labels, out);
        }
        *labels = saved;
    }
}
