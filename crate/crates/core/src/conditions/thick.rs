use serde::{Deserialize, Serialize};

use super::ConditionError;
use crate::map::{CombinatorialMap, Dart, RegionId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ThickKind {
    #[serde(rename = "single-region")]
    SingleRegion,
    #[serde(rename = "two-region")]
    TwoRegion,
}

/// A thick configuration along a boundary path α.
///
/// For a single region D, ∂D = μσ⁻¹ with μ = ∂D ∩ α and |μ| > |σ|. For two
/// regions, `regions = [D₁, D₂]`, ∂D₂ = μσ⁻¹ with |μ| = |σ| = 2, σ inner and
/// `leading_edge` the outer edge e of D₁ with eμ a subpath of α.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ThickConfigReport {
    pub kind: ThickKind,
    pub regions: Vec<RegionId>,
    pub mu: Vec<Dart>,
    pub sigma: Vec<Dart>,
    pub leading_edge: Option<Dart>,
}

pub fn find_thick_configurations(
    map: &CombinatorialMap,
    side_path: &[Dart],
) -> Result<Vec<ThickConfigReport>, ConditionError> {
    for (j, &e) in side_path.iter().enumerate() {
        if e.0 >= map.num_darts() || !map.is_boundary_dart(e) {
            return Err(ConditionError::PathNotOnBoundary(e));
        }
        if j > 0 && map.target(side_path[j - 1]) != map.origin(e) {
            return Err(ConditionError::PathNotOnBoundary(e));
        }
    }
    Ok(thick_on_path(map, side_path))
}

pub(crate) fn thick_on_path(map: &CombinatorialMap, path: &[Dart]) -> Vec<ThickConfigReport> {
    let profiles = map.cached_profiles();
    let r = map.num_regions();
    let mut first = vec![usize::MAX; r];
    let mut last = vec![0usize; r];
    let mut count = vec![0usize; r];
    for (j, &e) in path.iter().enumerate() {
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
        if count[i] == 0 || last[i] - first[i] + 1 != count[i] {
            continue;
        }
        let region = RegionId(i);
        let mu: Vec<Dart> = path[first[i]..=last[i]].to_vec();
        let Some(sigma) = complement_arc(map, region, &mu) else {
            continue;
        };

        if mu.len() > sigma.len() {
            out.push(ThickConfigReport {
                kind: ThickKind::SingleRegion,
                regions: vec![region],
                mu: mu.clone(),
                sigma: sigma.clone(),
                leading_edge: None,
            });
        }

        let all_inner = sigma.iter().all(|&d| !map.is_boundary_dart(d));
        if mu.len() == 2 && sigma.len() == 2 && all_inner && first[i] > 0 {
            let e = path[first[i] - 1];
            if let Some(d1) = map.region_across(e) {
                if d1 != region && profiles[i].neighbors.binary_search(&d1).is_ok() {
                    out.push(ThickConfigReport {
                        kind: ThickKind::TwoRegion,
                        regions: vec![d1, region],
                        mu,
                        sigma,
                        leading_edge: Some(e),
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// When the region-side darts of `mu` form one arc of ∂D, returns the rest of
/// ∂D as a path σ from i(μ) to t(μ).
fn complement_arc(map: &CombinatorialMap, region: RegionId, mu: &[Dart]) -> Option<Vec<Dart>> {
    let cycle = map.region_darts(region).ok()?;
    let k = cycle.len();
    // μ runs against the face direction when its darts are outer darts.
    let forward = map.region_of(mu[0]) == Some(region);
    let side_darts: Vec<usize> = mu
        .iter()
        .map(|&d| if forward { d.0 } else { map.reverse(d).0 })
        .collect();
    let anchor = if forward { side_darts[0] } else { *side_darts.last()? };
    let start = cycle.iter().position(|&d| d == anchor)?;
    // The region-side darts must appear consecutively from the anchor.
    let ordered: Vec<usize> = if forward {
        side_darts.clone()
    } else {
        side_darts.iter().rev().copied().collect()
    };
    for (off, &d) in ordered.iter().enumerate() {
        if off >= k || cycle[(start + off) % k] != d {
            return None;
        }
    }
    let rest: Vec<Dart> = (ordered.len()..k).map(|off| Dart(cycle[(start + off) % k])).collect();
    Some(if forward {
        // ∂D = μ·rest, so σ = rest⁻¹
        rest.iter().rev().map(|&d| map.reverse(d)).collect()
    } else {
        // ∂D = μ⁻¹·rest, and rest runs from i(μ) to t(μ)
        rest
    })
}
