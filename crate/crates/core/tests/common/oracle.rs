//! Brute-force reference implementations, written from the definitions with
//! only the raw permutations of a map. Nothing here calls a detector.

use std::collections::{BTreeMap, BTreeSet};

use vkmaps::conditions::{CutCornerKind, CutCornerReport};
use vkmaps::map::{CombinatorialMap, Dart, RegionId, Side, VertexId};
use vkmaps::presentation::Word;

fn edge(map: &CombinatorialMap, d: Dart) -> usize {
    d.0.min(map.reverse(d).0)
}

/// The region on the bounded side of a boundary edge, if any.
fn owner(map: &CombinatorialMap, d: Dart) -> Option<RegionId> {
    map.region_of(d).or_else(|| map.region_of(map.reverse(d)))
}

fn region_darts(map: &CombinatorialMap, r: RegionId) -> Vec<Dart> {
    map.darts().filter(|&d| map.region_of(d) == Some(r)).collect()
}

/// Darts of `r` whose reversal lies on the outer face.
fn outer_darts(map: &CombinatorialMap, r: RegionId) -> Vec<Dart> {
    region_darts(map, r)
        .into_iter()
        .filter(|&d| map.region_of(map.reverse(d)).is_none())
        .collect()
}

pub fn neighbors(map: &CombinatorialMap, r: RegionId) -> BTreeSet<RegionId> {
    region_darts(map, r)
        .into_iter()
        .filter_map(|d| map.region_of(map.reverse(d)))
        .filter(|&x| x != r)
        .collect()
}

pub fn valence(map: &CombinatorialMap, v: VertexId) -> usize {
    map.darts().filter(|&d| map.origin(d) == v).count()
}

/// Removes the open cell of `r` and its outer edges, drops vertices left with
/// no edge, and asks whether what is left is non-empty and connected.
pub fn is_proper_boundary(map: &CombinatorialMap, r: RegionId) -> bool {
    let removed: BTreeSet<usize> = outer_darts(map, r).iter().map(|&d| edge(map, d)).collect();
    if removed.is_empty() {
        return false;
    }
    let kept: Vec<Dart> = map.darts().filter(|&d| !removed.contains(&edge(map, d))).collect();
    if kept.is_empty() {
        return false;
    }
    let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for &d in &kept {
        adj.entry(map.origin(d)).or_default().push(map.target(d));
    }
    let start = *adj.keys().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == adj.len()
}

/// Every cut corner of `path`, one report per satisfied clause.
pub fn cut_corners(map: &CombinatorialMap, path: &[Dart], side: Side) -> Vec<CutCornerReport> {
    let mut out = Vec::new();
    for r in map.regions() {
        if !is_proper_boundary(map, r) {
            continue;
        }
        let outer: Vec<usize> = outer_darts(map, r).iter().map(|&d| edge(map, d)).collect();
        let hits: Vec<usize> = (0..path.len())
            .filter(|&j| owner(map, path[j]) == Some(r) && outer.contains(&edge(map, path[j])))
            .collect();
        // every outer edge of D on the path, once each, consecutively
        if hits.len() != outer.len() || hits.windows(2).any(|w| w[1] != w[0] + 1) {
            continue;
        }
        let mut on_path: Vec<usize> = hits.iter().map(|&j| edge(map, path[j])).collect();
        let mut all = outer.clone();
        on_path.sort();
        all.sort();
        if on_path != all {
            continue;
        }
        let rr = outer.len();
        let s = region_darts(map, r).len() - rr;
        let ell = hits[0] + 1;
        let corner = map.origin(path[ell - 1]);
        let report = |kind, aux_region| CutCornerReport {
            region: r,
            side,
            kind,
            ell,
            r: rr,
            s,
            aux_region,
            corner_vertex: corner,
        };
        if s < rr {
            out.push(report(CutCornerKind::T1, None));
        }
        if ell < 2 {
            continue;
        }
        // i(mu_D) is where e_{l-1} meets e_l
        let meet = map.target(path[ell - 2]);
        assert_eq!(meet, corner);
        let three = valence(map, meet) == 3;
        if s == 2 && rr == 2 && three {
            out.push(report(CutCornerKind::T2, None));
        }
        if s != 3 || rr != 3 || !three {
            continue;
        }
        let nb = neighbors(map, r);
        // the adjacent boundary region carrying an edge of the path as an outer edge
        let carrier = |e: Dart| {
            let x = owner(map, e)?;
            let is_outer = outer_darts(map, x).iter().any(|&d| edge(map, d) == edge(map, e));
            (x != r && nb.contains(&x) && is_outer).then_some(x)
        };
        if let Some(e) = carrier(path[ell - 2]) {
            if region_darts(map, e).len() <= 5 {
                out.push(report(CutCornerKind::T3, Some(e)));
            }
            if ell > 2 && carrier(path[ell - 3]) == Some(e) {
                out.push(report(CutCornerKind::T4, Some(e)));
            }
        }
    }
    out.sort();
    out
}

/// Vertices met by a path, its start included even when it has no edges.
fn path_vertices(map: &CombinatorialMap, start: VertexId, path: &[Dart]) -> BTreeSet<VertexId> {
    let mut out = BTreeSet::from([start]);
    for &d in path {
        out.insert(map.origin(d));
        out.insert(map.target(d));
    }
    out
}

/// Thinness where a region meets a side when it shares a vertex with it.
pub fn thin_by_vertices(map: &CombinatorialMap, xi: &[Dart], mu: &[Dart], tau: &[Dart], sigma: &[Dart], base: Dart) -> bool {
    let p = map.origin(base);
    let first: Vec<Dart> = xi.iter().chain(mu).copied().collect();
    let second: Vec<Dart> = sigma.iter().chain(tau).copied().collect();
    let a = path_vertices(map, p, &first);
    let b = path_vertices(map, p, &second);
    map.regions().all(|r| {
        let vs: BTreeSet<VertexId> = region_darts(map, r).iter().map(|&d| map.origin(d)).collect();
        neighbors(map, r).len() <= 2 && !vs.is_disjoint(&a) && !vs.is_disjoint(&b)
    })
}

/// Thinness where a region meets a side when it shares an edge with it; an
/// empty side is its single vertex.
pub fn thin_by_edges(map: &CombinatorialMap, xi: &[Dart], mu: &[Dart], tau: &[Dart], sigma: &[Dart], base: Dart) -> bool {
    let p = map.origin(base);
    let first: Vec<Dart> = xi.iter().chain(mu).copied().collect();
    let second: Vec<Dart> = sigma.iter().chain(tau).copied().collect();
    let meets = |r: RegionId, side: &[Dart]| {
        if side.is_empty() {
            return region_darts(map, r).iter().any(|&d| map.origin(d) == p);
        }
        let es: BTreeSet<usize> = side.iter().map(|&d| edge(map, d)).collect();
        region_darts(map, r).iter().any(|&d| es.contains(&edge(map, d)))
    };
    map.regions()
        .all(|r| neighbors(map, r).len() <= 2 && meets(r, &first) && meets(r, &second))
}

/// Every common non-empty prefix of two distinct words of `rels`.
pub fn pieces(rels: &BTreeSet<Word>) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for a in rels {
        for b in rels {
            if a == b {
                continue;
            }
            let n = a.len().min(b.len());
            for k in 1..=n {
                if a.prefix(k) == b.prefix(k) {
                    out.insert(a.prefix(k));
                } else {
                    break;
                }
            }
        }
    }
    out
}

/// Fewest pieces concatenating to `w`, by trying every way to cut it.
pub fn min_pieces(w: &Word, pieces: &BTreeSet<Word>) -> Option<usize> {
    let n = w.len();
    if n == 0 {
        return None;
    }
    let letters = w.letters();
    let mut best = None;
    // bit i set = cut after letter i
    for mask in 0u32..(1 << (n - 1)) {
        let mut start = 0;
        let mut count = 0;
        let mut ok = true;
        for i in 0..n {
            if i == n - 1 || mask & (1 << i) != 0 {
                let part = Word::from_letters(letters[start..=i].to_vec());
                if !pieces.contains(&part) {
                    ok = false;
                    break;
                }
                count += 1;
                start = i + 1;
            }
        }
        if ok && best.map_or(true, |b| count < b) {
            best = Some(count);
        }
    }
    best
}
