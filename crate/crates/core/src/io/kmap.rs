use std::fmt::Write;

use super::{content_lines, syntax, FormatError};
use crate::map::{CombinatorialMap, Dart};
use crate::presentation::{DiagramLabelling, Letter};

/// A parsed map document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapDocument {
    pub map: CombinatorialMap,
    /// Present when the document has at least one `label` line.
    pub labels: Option<DiagramLabelling>,
}

pub fn parse_map(text: &str) -> Result<MapDocument, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "kmap 1")) => {}
        Some((n, other)) => return Err(syntax(n, format!("expected `kmap 1`, found `{other}`"))),
        None => return Err(syntax(1, "empty document")),
    }

    let mut num_darts: Option<usize> = None;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut outer: Option<usize> = None;
    let mut label_lines: Vec<(usize, usize, Letter)> = Vec::new();
    let mut last_line = 1;

    for (n, line) in lines {
        last_line = n;
        let mut words = line.split_whitespace();
        let key = words.next().unwrap_or("");
        let args: Vec<&str> = words.collect();
        let number = |s: &str| s.parse::<usize>().map_err(|_| syntax(n, format!("`{s}` is not a dart number")));
        match key {
            "darts" => {
                if num_darts.is_some() {
                    return Err(syntax(n, "repeated `darts` line"));
                }
                let [count] = args[..] else {
                    return Err(syntax(n, "`darts` takes one number"));
                };
                let count = number(count)?;
                if count == 0 || count % 2 != 0 {
                    return Err(syntax(n, "dart count must be positive and even"));
                }
                num_darts = Some(count);
            }
            "vertex" => {
                if num_darts.is_none() {
                    return Err(syntax(n, "`vertex` before `darts`"));
                }
                if args.is_empty() {
                    return Err(syntax(n, "empty vertex"));
                }
                cycles.push(args.iter().map(|s| number(s)).collect::<Result<_, _>>()?);
            }
            "outer" => {
                let [d] = args[..] else {
                    return Err(syntax(n, "`outer` takes one dart"));
                };
                if outer.is_some() {
                    return Err(syntax(n, "repeated `outer` line"));
                }
                outer = Some(number(d)?);
            }
            "label" => {
                let [d, x] = args[..] else {
                    return Err(syntax(n, "`label` takes a dart and a letter"));
                };
                let mut chars = x.chars();
                let letter = match (chars.next(), chars.next()) {
                    (Some(c), None) => Letter::from_char(c).map_err(|e| syntax(n, e.to_string()))?,
                    _ => return Err(syntax(n, format!("`{x}` is not a single letter"))),
                };
                label_lines.push((n, number(d)?, letter));
            }
            _ => return Err(syntax(n, format!("unknown line `{key}`"))),
        }
    }

    let num_darts = num_darts.ok_or_else(|| syntax(last_line, "missing `darts` line"))?;
    let outer = outer.ok_or_else(|| syntax(last_line, "missing `outer` line"))?;

    let mut seen = vec![false; num_darts];
    let mut rotation = Vec::with_capacity(cycles.len());
    for cycle in &cycles {
        let mut darts = Vec::with_capacity(cycle.len());
        for &d in cycle {
            if d == 0 || d > num_darts {
                return Err(FormatError::DanglingDart(d));
            }
            if std::mem::replace(&mut seen[d - 1], true) {
                return Err(FormatError::DuplicateDart(d));
            }
            darts.push(Dart(d - 1));
        }
        rotation.push(darts);
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(FormatError::DanglingDart(missing + 1));
    }
    if outer == 0 || outer > num_darts {
        return Err(FormatError::DanglingDart(outer));
    }
    let pairs: Vec<(Dart, Dart)> = (0..num_darts / 2).map(|i| (Dart(2 * i), Dart(2 * i + 1))).collect();
    let map = CombinatorialMap::build(num_darts, &pairs, &rotation, Dart(outer - 1))?;

    let labels = if label_lines.is_empty() {
        None
    } else {
        let mut labels = DiagramLabelling::new(&map);
        for (n, d, letter) in label_lines {
            if d == 0 || d > num_darts {
                return Err(FormatError::DanglingDart(d));
            }
            let dart = Dart(d - 1);
            if labels.get(dart).is_some() {
                return Err(syntax(n, format!("edge of dart {d} labelled twice")));
            }
            labels.set(&map, dart, letter);
        }
        Some(labels)
    };
    Ok(MapDocument { map, labels })
}

/// Canonical text for a map. Maps whose reversal is not the (2i−1, 2i)
/// pairing are renumbered first, in order of their smallest dart.
pub fn serialize_map(map: &CombinatorialMap, labels: Option<&DiagramLabelling>) -> String {
    let n = map.num_darts();
    let new_id = paired_numbering(map);
    let mut old_id = vec![0; n];
    for (old, &new) in new_id.iter().enumerate() {
        old_id[new] = old;
    }

    let mut vertex_lines: Vec<Vec<usize>> = Vec::new();
    let mut done = vec![false; n];
    for new in 0..n {
        if done[new] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut d = old_id[new];
        loop {
            done[new_id[d]] = true;
            cycle.push(new_id[d]);
            d = map.rotate(Dart(d)).0;
            if new_id[d] == new {
                break;
            }
        }
        vertex_lines.push(cycle);
    }

    let mut out = String::new();
    let _ = writeln!(out, "kmap 1");
    let _ = writeln!(out, "darts {n}");
    for cycle in vertex_lines {
        let ids: Vec<String> = cycle.iter().map(|d| (d + 1).to_string()).collect();
        let _ = writeln!(out, "vertex {}", ids.join(" "));
    }
    let _ = writeln!(out, "outer {}", new_id[map.outer_dart().0] + 1);
    if let Some(labels) = labels {
        for new in (0..n).step_by(2) {
            if let Some(letter) = labels.get(Dart(old_id[new])) {
                let _ = writeln!(out, "label {} {}", new + 1, letter);
            }
        }
    }
    out
}

pub(crate) fn paired_numbering(map: &CombinatorialMap) -> Vec<usize> {
    let n = map.num_darts();
    if map.has_paired_darts() {
        return (0..n).collect();
    }
    let mut new_id = vec![usize::MAX; n];
    let mut next = 0;
    for d in 0..n {
        if new_id[d] == usize::MAX {
            new_id[d] = next;
            new_id[map.reverse(Dart(d)).0] = next + 1;
            next += 2;
        }
    }
    new_id
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::fixtures;

    const SQ1: &str = "kmap 1\ndarts 8\nvertex 1 8\nvertex 2 3\nvertex 4 5\nvertex 6 7\nouter 2\n";

    #[test]
    fn square_document() {
        let doc = parse_map(SQ1).unwrap();
        let m = &doc.map;
        assert_eq!((m.num_vertices(), m.num_edges(), m.num_regions()), (4, 4, 1));
        assert_eq!(m.boundary_length(), 4);
        assert_eq!(serialize_map(m, None), SQ1);
    }

    #[test]
    fn fixtures_round_trip() {
        for f in [fixtures::sq1(), fixtures::lad2(), fixtures::lad3(), fixtures::grid4(), fixtures::tri_wheel()] {
            let text = serialize_map(&f.map, None);
            let back = parse_map(&text).unwrap().map;
            assert_eq!(serialize_map(&back, None), text);
            assert_eq!(back.num_regions(), f.map.num_regions());
            assert_eq!(back.boundary_length(), f.map.boundary_length());
        }
    }

    #[test]
    fn labels_round_trip() {
        let text = format!("{SQ1}label 1 a\nlabel 3 b\nlabel 5 A\nlabel 7 B\n");
        let doc = parse_map(&text).unwrap();
        let labels = doc.labels.as_ref().unwrap();
        assert_eq!(labels.get(Dart(1)).unwrap().to_char(), 'A');
        assert_eq!(serialize_map(&doc.map, Some(labels)), text);
    }

    #[test]
    fn errors() {
        let no_outer = SQ1.replace("outer 2\n", "");
        assert!(matches!(parse_map(&no_outer), Err(FormatError::Syntax { .. })));
        let dup = SQ1.replace("vertex 6 7", "vertex 6 7 1");
        assert_eq!(parse_map(&dup).unwrap_err(), FormatError::DuplicateDart(1));
        let dangling = SQ1.replace("vertex 6 7", "vertex 6");
        assert_eq!(parse_map(&dangling).unwrap_err(), FormatError::DanglingDart(7));
        let big = SQ1.replace("vertex 6 7", "vertex 6 7 9");
        assert_eq!(parse_map(&big).unwrap_err(), FormatError::DanglingDart(9));
        assert!(matches!(parse_map("kmap 2\n"), Err(FormatError::Syntax { line: 1, .. })));
        // two disjoint edges
        let split = "kmap 1\ndarts 4\nvertex 1\nvertex 2\nvertex 3\nvertex 4\nouter 1\n";
        assert!(matches!(parse_map(split), Err(FormatError::Map(_))));
    }
}
