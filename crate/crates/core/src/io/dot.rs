use std::collections::BTreeMap;
use std::fmt::Write;

use crate::conditions::{CutCornerReport, ThickConfigReport};
use crate::map::{CombinatorialMap, Dart, RegionId};

/// Reports whose regions should be highlighted.
#[derive(Clone, Copy, Debug, Default)]
pub struct DotOptions<'a> {
    pub cut_corners: &'a [CutCornerReport],
    pub thick: &'a [ThickConfigReport],
}

/// Undirected DOT graph: one node per vertex, one edge per map edge, and a
/// cluster per region listing its vertices. Highlighted regions are filled.
pub fn export_dot(map: &CombinatorialMap, opts: &DotOptions) -> String {
    let mut marks: BTreeMap<RegionId, Vec<String>> = BTreeMap::new();
    for c in opts.cut_corners {
        marks.entry(c.region).or_default().push(format!("{:?} {}", c.kind, c.side.name()));
    }
    for t in opts.thick {
        let tag = match t.regions.len() {
            1 => "thick".to_string(),
            _ => "thick pair".to_string(),
        };
        for &r in &t.regions {
            marks.entry(r).or_default().push(tag.clone());
        }
    }

    let mut out = String::from("graph kmap {\n  node [shape=circle, label=\"\", width=0.15];\n");
    for v in map.vertices() {
        let _ = writeln!(out, "  v{};", v.0);
    }
    for d in map.darts() {
        let e = map.reverse(d);
        if d.0 < e.0 {
            let style = if map.is_boundary_dart(d) { "" } else { " [style=dashed]" };
            let _ = writeln!(out, "  v{} -- v{}{}; // dart {}", map.origin(d).0, map.target(d).0, style, Dart(d.0));
        }
    }
    for r in map.regions() {
        let edges = map.region_darts(r).map(|s| s.len()).unwrap_or(0);
        let _ = writeln!(out, "  subgraph cluster_{} {{", r.0);
        match marks.get(&r) {
            Some(tags) => {
                let mut tags = tags.clone();
                tags.dedup();
                let _ = writeln!(
                    out,
                    "    label=\"{r} ({edges}) {}\"; style=filled; fillcolor=lightsalmon;",
                    tags.join(", ")
                );
            }
            None => {
                let _ = writeln!(out, "    label=\"{r} ({edges})\";");
            }
        }
        let names: Vec<String> = map.region_vertices(r).iter().map(|v| format!("v{}", v.0)).collect();
        let _ = writeln!(out, "    {};", names.join("; "));
        out.push_str("  }\n");
    }
    out.push_str("}\n");
    out
}
