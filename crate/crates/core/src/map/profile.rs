use serde::Serialize;

use super::{CombinatorialMap, Dart, RegionId};

/// Which edges are deleted when testing whether a boundary region is proper.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum RemovalReading {
    /// The open 2-cell and the region's outer-boundary edges.
    #[default]
    OuterEdges,
    /// The open 2-cell and every edge of the region's boundary.
    AllEdges,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexProfile {
    pub valence: usize,
    pub is_inner: bool,
}

/// Local structure of one region. Edge counts are taken with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionProfile {
    pub region: RegionId,
    pub edge_count: usize,
    /// Regions sharing at least one edge, sorted.
    pub neighbors: Vec<RegionId>,
    /// Maximal runs of outer-boundary darts along the region's face cycle.
    pub outer_boundary: Vec<Vec<Dart>>,
    pub inner_boundary: Vec<Dart>,
    pub is_inner: bool,
    pub is_proper_boundary: bool,
}

impl RegionProfile {
    pub fn outer_edge_count(&self) -> usize {
        self.outer_boundary.iter().map(Vec::len).sum()
    }

    pub fn inner_edge_count(&self) -> usize {
        self.inner_boundary.len()
    }

    pub(crate) fn compute(map: &CombinatorialMap, region: RegionId, reading: RemovalReading) -> Self {
        let darts = &map.regions[region.0];
        let is_outer_dart = |d: usize| map.region_of[map.rev[d]].is_none();

        let mut neighbors: Vec<RegionId> = darts
            .iter()
            .filter_map(|&d| map.region_of[map.rev[d]])
            .filter(|&r| r != region.0)
            .map(RegionId)
            .collect();
        neighbors.sort();
        neighbors.dedup();

        let inner_boundary: Vec<Dart> = darts.iter().copied().filter(|&d| !is_outer_dart(d)).map(Dart).collect();

        // Rotate the cycle so it starts right after an inner dart; runs then never wrap.
        let k = darts.len();
        let start = (0..k).find(|&i| !is_outer_dart(darts[i])).map_or(0, |i| (i + 1) % k);
        let mut outer_boundary: Vec<Vec<Dart>> = Vec::new();
        let mut run: Vec<Dart> = Vec::new();
        for i in 0..k {
            let d = darts[(start + i) % k];
            if is_outer_dart(d) {
                run.push(Dart(d));
            } else if !run.is_empty() {
                outer_boundary.push(std::mem::take(&mut run));
            }
        }
        if !run.is_empty() {
            outer_boundary.push(run);
        }

        let is_inner = outer_boundary.is_empty();
        let is_proper_boundary = !is_inner && survives_removal(map, region, reading);

        RegionProfile {
            region,
            edge_count: k,
            neighbors,
            outer_boundary,
            inner_boundary,
            is_inner,
            is_proper_boundary,
        }
    }
}

/// Deletes the region's open cell and the selected edges, drops vertices left
/// isolated, and reports whether a non-empty connected complex remains.
fn survives_removal(map: &CombinatorialMap, region: RegionId, reading: RemovalReading) -> bool {
    let n = map.num_darts();
    let mut removed = vec![false; n];
    for &d in &map.regions[region.0] {
        let outer = map.region_of[map.rev[d]].is_none();
        if outer || reading == RemovalReading::AllEdges {
            removed[d] = true;
            removed[map.rev[d]] = true;
        }
    }

    let nv = map.num_vertices();
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut alive = vec![false; nv];
    for d in 0..n {
        if removed[d] {
            continue;
        }
        let a = map.vertex_of[d];
        let b = map.vertex_of[map.rev[d]];
        alive[a] = true;
        alive[b] = true;
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut root = None;
    for v in 0..nv {
        if !alive[v] {
            continue;
        }
        let r = find(&mut parent, v);
        match root {
            None => root = Some(r),
            Some(r0) if r0 != r => return false,
            _ => {}
        }
    }
    root.is_some()
}
