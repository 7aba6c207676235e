//! Thinness, the V(6) family of map classes, cut corners and thick configurations.

mod cut_corner;
mod thick;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::map::{BoundaryDecomposition, CombinatorialMap, Dart, DecompositionError, RegionId, Side};

pub use cut_corner::{cut_corners_on_path, find_cut_corners, CutCornerKind, CutCornerReport};
pub use thick::{find_thick_configurations, ThickConfigReport, ThickKind};
pub(crate) use thick::thick_on_path;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConditionError {
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(#[from] DecompositionError),
    #[error("dart {0} of the path is not a boundary dart or does not continue the path")]
    PathNotOnBoundary(Dart),
}

/// How "∂D meets a side" is read when testing thinness.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThinnessReading {
    /// The region shares an edge with the side, where the rungs ξ and τ count
    /// for both sides (each rung joins an end of ξμ to an end of στ). A side
    /// with no edges is the single vertex it sits at.
    EdgeWithRungs,
    /// The region shares an edge with the side; rungs belong to one side only.
    Edge,
    /// The region shares a vertex (or an edge) with the side. The only reading
    /// under which every non-thin decomposition has a cut corner.
    #[default]
    Vertex,
}

/// Thinness with respect to (ξμ, στ) under the default reading.
pub fn is_thin(map: &CombinatorialMap, d: &BoundaryDecomposition) -> Result<bool, ConditionError> {
    is_thin_with(map, d, ThinnessReading::default())
}

pub fn is_thin_with(
    map: &CombinatorialMap,
    d: &BoundaryDecomposition,
    reading: ThinnessReading,
) -> Result<bool, ConditionError> {
    d.check(map)?;
    Ok(thin_unchecked(map, d, reading))
}

pub(crate) fn thin_unchecked(map: &CombinatorialMap, d: &BoundaryDecomposition, reading: ThinnessReading) -> bool {
    let first: Vec<Dart> = d.xi.iter().chain(&d.mu).copied().collect();
    let second: Vec<Dart> = d.sigma.iter().chain(&d.tau).copied().collect();
    let corner = map.origin(d.base());
    let r = map.num_regions();
    let mut on_first = vec![false; r];
    let mut on_second = vec![false; r];
    match reading {
        ThinnessReading::Edge | ThinnessReading::EdgeWithRungs => {
            mark_edges(map, &first, &mut on_first);
            mark_edges(map, &second, &mut on_second);
            let rungs = reading == ThinnessReading::EdgeWithRungs;
            if rungs {
                mark_edges(map, &d.tau, &mut on_first);
                mark_edges(map, &d.xi, &mut on_second);
            }
            // with rungs counted, a side is empty only when both rungs are too
            let rung_edges = rungs && !(d.xi.is_empty() && d.tau.is_empty());
            if first.is_empty() && !rung_edges {
                mark_vertex(map, corner, &mut on_first);
            }
            if second.is_empty() && !rung_edges {
                mark_vertex(map, corner, &mut on_second);
            }
        }
        ThinnessReading::Vertex => {
            mark_path_vertices(map, &first, corner, &mut on_first);
            mark_path_vertices(map, &second, corner, &mut on_second);
        }
    }
    map.regions().all(|region| {
        let p = &map.cached_profiles()[region.0];
        p.neighbors.len() <= 2 && on_first[region.0] && on_second[region.0]
    })
}

fn mark_edges(map: &CombinatorialMap, path: &[Dart], marks: &mut [bool]) {
    for &e in path {
        if let Some(r) = map.region_across(e) {
            marks[r.0] = true;
        }
    }
}

fn mark_vertex(map: &CombinatorialMap, v: crate::map::VertexId, marks: &mut [bool]) {
    if let Ok(darts) = map.vertex_darts(v) {
        for d in darts {
            if let Some(r) = map.region_of(d) {
                marks[r.0] = true;
            }
        }
    }
}

fn mark_path_vertices(map: &CombinatorialMap, path: &[Dart], start: crate::map::VertexId, marks: &mut [bool]) {
    mark_vertex(map, start, marks);
    for &e in path {
        mark_vertex(map, map.origin(e), marks);
        mark_vertex(map, map.target(e), marks);
    }
}

/// Membership of a map in each of the named classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapClass {
    pub is_v6: bool,
    pub is_proper_v6: bool,
    pub is_proper_c7: bool,
    pub is_proper_c4t4: bool,
}

/// A class a map may be required to belong to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassFilter {
    #[serde(rename = "proper_v6")]
    ProperV6,
    #[serde(rename = "proper_c7")]
    ProperC7,
    #[serde(rename = "proper_c4t4")]
    ProperC4T4,
    #[serde(rename = "none")]
    None,
}

impl MapClass {
    pub fn satisfies(&self, filter: ClassFilter) -> bool {
        match filter {
            ClassFilter::ProperV6 => self.is_proper_v6,
            ClassFilter::ProperC7 => self.is_proper_c7,
            ClassFilter::ProperC4T4 => self.is_proper_c4t4,
            ClassFilter::None => true,
        }
    }
}

pub fn classify_map(map: &CombinatorialMap) -> MapClass {
    let profiles = map.cached_profiles();
    let has_valence = |r: RegionId, k: usize, inner_only: bool| {
        map.region_vertices(r)
            .into_iter()
            .any(|v| map.valence(v) == k && (!inner_only || map.is_inner_vertex(v)))
    };

    let is_v6 = profiles.iter().filter(|p| p.is_inner).all(|p| {
        let needed = if has_valence(p.region, 3, false) { 6 } else { 4 };
        p.neighbors.len() >= needed
    });

    let inner_valences: Vec<usize> = map
        .vertices()
        .filter(|&v| map.is_inner_vertex(v))
        .map(|v| map.valence(v))
        .collect();
    let no_inner_two = inner_valences.iter().all(|&k| k != 2);

    let boundary_ok = profiles.iter().filter(|p| !p.is_inner).all(|p| {
        let needed = if has_valence(p.region, 3, true) { 6 } else { 4 };
        p.edge_count >= needed
    });
    let is_proper_v6 = is_v6 && no_inner_two && boundary_ok;

    let is_proper_c7 = no_inner_two && profiles.iter().all(|p| p.edge_count >= 7);
    let is_proper_c4t4 = inner_valences.iter().all(|&k| k >= 4) && profiles.iter().all(|p| p.edge_count >= 4);

    MapClass {
        is_v6,
        is_proper_v6,
        is_proper_c7,
        is_proper_c4t4,
    }
}

/// Proper boundary regions with at most three neighbors whose whole outer
/// boundary lies, contiguously, on μ or on σ.
pub fn c7_witnesses(map: &CombinatorialMap, d: &BoundaryDecomposition) -> Result<Vec<RegionId>, ConditionError> {
    d.check(map)?;
    let profiles = map.cached_profiles();
    let mut out = Vec::new();
    for side in [Side::Mu, Side::Sigma] {
        for (region, _, _) in contained_regions(map, d.side(side)) {
            if profiles[region.0].neighbors.len() <= 3 {
                out.push(region);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Proper boundary regions whose entire outer boundary is a contiguous run of
/// `path`; yields (region, index of first edge, run length).
pub(crate) fn contained_regions(map: &CombinatorialMap, path: &[Dart]) -> Vec<(RegionId, usize, usize)> {
    let profiles = map.cached_profiles();
    let r = map.num_regions();
    let mut first = vec![usize::MAX; r];
    let mut last = vec![0usize; r];
    let mut count = vec![0usize; r];
    for (j, &e) in path.iter().enumerate() {
        if !map.is_boundary_dart(e) {
            continue;
        }
        if let Some(region) = map.region_across(e) {
            let i = region.0;
            if first[i] == usize::MAX {
                first[i] = j;
            }
            last[i] = j;
            count[i] += 1;
        }
    }
    let mut out = Vec::new();
    for i in 0..r {
        let p = &profiles[i];
        if count[i] == 0 || !p.is_proper_boundary {
            continue;
        }
        if count[i] == p.outer_edge_count() && last[i] - first[i] + 1 == count[i] {
            out.push((RegionId(i), first[i], count[i]));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::fixtures;

    #[test]
    fn square_split_in_halves_is_thin() {
        let f = fixtures::sq1();
        // boundary cycle from 3->2 is 3->2->1->0->3; mu = north edge, sigma = 2 edges
        let d = BoundaryDecomposition::from_lengths(&f.map, f.dart(0, 3), 0, 2, 0).unwrap();
        assert_eq!(d.mu, f.path(&[0, 3, 2]));
        assert_eq!(d.sigma, f.path(&[0, 1, 2]));
        assert!(is_thin(&f.map, &d).unwrap());
    }

    #[test]
    fn ladder_side_split_is_thin() {
        let f = fixtures::lad2();
        let d = BoundaryDecomposition::from_lengths(&f.map, f.dart(0, 3), 1, 2, 1).unwrap();
        assert!(is_thin(&f.map, &d).unwrap());
    }

    #[test]
    fn empty_side_reduces_to_the_corner_vertex() {
        let f = fixtures::sq1();
        let d = BoundaryDecomposition::from_lengths(&f.map, f.dart(0, 3), 0, 4, 0).unwrap();
        assert!(d.sigma.is_empty());
        assert!(is_thin(&f.map, &d).unwrap());
        let g = fixtures::grid4();
        let d = BoundaryDecomposition::from_lengths(&g.map, g.dart(6, 7), 0, 8, 0).unwrap();
        assert!(!is_thin(&g.map, &d).unwrap());
    }

    #[test]
    fn vertex_contact_makes_the_grid_midpoint_split_thin() {
        // split at the north and south midpoints: every square touches both
        // halves at a vertex but two squares have no edge on one half
        let g = fixtures::grid4();
        let d = BoundaryDecomposition::from_lengths(&g.map, g.dart(7, 8), 0, 4, 0).unwrap();
        assert!(is_thin(&g.map, &d).unwrap());
        assert!(!is_thin_with(&g.map, &d, ThinnessReading::Edge).unwrap());
        assert!(!is_thin_with(&g.map, &d, ThinnessReading::EdgeWithRungs).unwrap());
    }

    #[test]
    fn ladder_right_square_touching_mu_at_a_vertex() {
        // xi empty, mu = west rung then 3-4, tau = 4-5, sigma = south and east rung.
        // The right square meets xi.mu only at vertex 4, and has no cut corner.
        let f = fixtures::lad2();
        let d = BoundaryDecomposition::from_lengths(&f.map, f.dart(0, 3), 0, 2, 1).unwrap();
        assert_eq!(d.mu, f.path(&[0, 3, 4]));
        assert!(is_thin(&f.map, &d).unwrap());
        assert!(!is_thin_with(&f.map, &d, ThinnessReading::Edge).unwrap());
    }

    #[test]
    fn classify_fixtures() {
        let g = classify_map(&fixtures::grid4().map);
        assert_eq!(
            g,
            MapClass {
                is_v6: true,
                is_proper_v6: true,
                is_proper_c7: false,
                is_proper_c4t4: true
            }
        );
        let s = classify_map(&fixtures::sq1().map);
        assert_eq!(s, g);
        let t = classify_map(&fixtures::tri_wheel().map);
        assert!(!t.is_v6);
        assert!(!t.is_proper_v6);
        let hept = classify_map(&fixtures::ladder(2, 7).map);
        assert!(hept.is_proper_c7 && hept.is_proper_v6);
    }

    #[test]
    fn witnesses_on_fixtures() {
        let f = fixtures::lad2();
        let left_outer = BoundaryDecomposition::from_lengths(&f.map, f.dart(1, 0), 0, 3, 0).unwrap();
        assert_eq!(left_outer.mu, f.path(&[1, 0, 3, 4]));
        assert_eq!(c7_witnesses(&f.map, &left_outer).unwrap(), vec![f.region(0), f.region(1)]);

        let s = fixtures::sq1();
        for &b in s.map.boundary() {
            let d = BoundaryDecomposition::from_lengths(&s.map, Dart(b), 1, 1, 1).unwrap();
            assert!(c7_witnesses(&s.map, &d).unwrap().is_empty());
        }

        let g = fixtures::grid4();
        let d = BoundaryDecomposition::from_lengths(&g.map, g.dart(6, 7), 0, 4, 0).unwrap();
        let w = c7_witnesses(&g.map, &d).unwrap();
        assert!(w.contains(&g.region(fixtures::GRID4_NE)));
        assert!(w.contains(&g.region(fixtures::GRID4_SW)));
    }
}
