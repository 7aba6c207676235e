use serde::{Deserialize, Serialize};

use super::{contained_regions, ConditionError};
use crate::map::{BoundaryDecomposition, CombinatorialMap, Dart, RegionId, Side, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CutCornerKind {
    T1,
    T2,
    T3,
    T4,
}

/// A proper boundary region D that is a cut corner of a host path e₁ ⋯ eₙ.
///
/// `ell` is the 1-based index of the first edge of D's outer boundary in the
/// host path, `r` the number of outer edges and `s` the number of inner edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CutCornerReport {
    pub region: RegionId,
    pub side: Side,
    pub kind: CutCornerKind,
    pub ell: usize,
    pub r: usize,
    pub s: usize,
    /// The adjacent boundary region E of T3/T4.
    pub aux_region: Option<RegionId>,
    /// i(μ_D): the vertex where e_{ℓ−1} meets e_ℓ (the path start when ℓ = 1).
    pub corner_vertex: VertexId,
}

pub fn find_cut_corners(
    map: &CombinatorialMap,
    d: &BoundaryDecomposition,
    side: Side,
) -> Result<Vec<CutCornerReport>, ConditionError> {
    d.check(map)?;
    Ok(cut_corners_on_path(map, d.side(side), side))
}

/// Every cut corner of `path`, all satisfied kinds reported, sorted by region then kind.
pub fn cut_corners_on_path(map: &CombinatorialMap, path: &[Dart], side: Side) -> Vec<CutCornerReport> {
    let profiles = map.cached_profiles();
    let mut out = Vec::new();
    for (region, first, r) in contained_regions(map, path) {
        let p = &profiles[region.0];
        let s = p.inner_edge_count();
        let ell = first + 1;
        let corner_vertex = map.origin(path[first]);
        let report = |kind, aux_region| CutCornerReport {
            region,
            side,
            kind,
            ell,
            r,
            s,
            aux_region,
            corner_vertex,
        };

        if s < r {
            out.push(report(CutCornerKind::T1, None));
        }
        if ell <= 1 || map.valence(corner_vertex) != 3 {
            continue;
        }
        if s == 2 && r == 2 {
            out.push(report(CutCornerKind::T2, None));
        }
        if s == 3 && r == 3 {
            let adjacent = |e: Dart| {
                map.region_across(e)
                    .filter(|&x| x != region && p.neighbors.binary_search(&x).is_ok())
            };
            let before = adjacent(path[first - 1]);
            if let Some(e) = before {
                if profiles[e.0].edge_count <= 5 {
                    out.push(report(CutCornerKind::T3, Some(e)));
                }
            }
            if ell > 2 {
                if let (Some(e), Some(e2)) = (before, adjacent(path[first - 2])) {
                    if e == e2 {
                        out.push(report(CutCornerKind::T4, Some(e)));
                    }
                }
            }
        }
    }
    out.sort();
    out
}
