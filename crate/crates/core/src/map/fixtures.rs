//! Small named maps built from counterclockwise polygon lists.
//!
//! Vertex labels in the polygon lists are arbitrary integers; the builder
//! records which dart joins each labelled pair so tests can address darts by
//! their endpoints.

use std::collections::HashMap;

use super::{CombinatorialMap, Dart, MapError, RegionId, VertexId};

/// A map together with the label lookups used to build it.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub map: CombinatorialMap,
    darts: HashMap<(usize, usize), Dart>,
    regions: Vec<RegionId>,
    vertices: HashMap<usize, VertexId>,
}

impl Fixture {
    /// Dart running from vertex label `u` to `v`. Panics if there is no such edge.
    pub fn dart(&self, u: usize, v: usize) -> Dart {
        *self
            .darts
            .get(&(u, v))
            .unwrap_or_else(|| panic!("no edge {u} -> {v} in fixture"))
    }

    /// Region built from the polygon at index `i` of the input list.
    pub fn region(&self, i: usize) -> RegionId {
        self.regions[i]
    }

    pub fn vertex(&self, label: usize) -> VertexId {
        self.vertices[&label]
    }

    /// Darts along a vertex-label walk.
    pub fn path(&self, labels: &[usize]) -> Vec<Dart> {
        labels.windows(2).map(|w| self.dart(w[0], w[1])).collect()
    }
}

/// Builds a map whose regions are the given counterclockwise vertex cycles.
///
/// The boundary of the union must be a simple cycle: every boundary vertex has
/// exactly one outgoing outer dart.
pub fn from_polygons(polygons: &[Vec<usize>]) -> Result<Fixture, MapError> {
    let mut darts: HashMap<(usize, usize), Dart> = HashMap::new();
    let mut owned: Vec<bool> = Vec::new();
    let mut next: Vec<usize> = Vec::new();
    let mut ends: Vec<(usize, usize)> = Vec::new();

    let mut dart_for = |u: usize, v: usize, owned: &mut Vec<bool>, ends: &mut Vec<(usize, usize)>| -> Result<Dart, MapError> {
        if let Some(&d) = darts.get(&(u, v)) {
            if owned[d.0] {
                return Err(MapError::NotInvolution(d));
            }
            return Ok(d);
        }
        let a = Dart(owned.len());
        let b = Dart(owned.len() + 1);
        owned.extend([false, false]);
        ends.extend([(u, v), (v, u)]);
        darts.insert((u, v), a);
        darts.insert((v, u), b);
        Ok(a)
    };

    let mut firsts = Vec::new();
    let mut cycles: Vec<Vec<Dart>> = Vec::new();
    for poly in polygons {
        let k = poly.len();
        let mut cycle = Vec::with_capacity(k);
        for i in 0..k {
            let d = dart_for(poly[i], poly[(i + 1) % k], &mut owned, &mut ends)?;
            owned[d.0] = true;
            cycle.push(d);
        }
        firsts.push(cycle[0]);
        cycles.push(cycle);
    }
    let n = owned.len();
    next.resize(n, usize::MAX);
    for cycle in &cycles {
        for i in 0..cycle.len() {
            next[cycle[i].0] = cycle[(i + 1) % cycle.len()].0;
        }
    }
    let mut outer_from: HashMap<usize, usize> = HashMap::new();
    for d in 0..n {
        if !owned[d] {
            if outer_from.insert(ends[d].0, d).is_some() {
                return Err(MapError::NotPlanar {
                    euler: 0,
                    vertices: 0,
                    edges: n / 2,
                    faces: 0,
                });
            }
        }
    }
    for d in 0..n {
        if !owned[d] {
            next[d] = outer_from[&ends[d].1];
        }
    }
    let outer = (0..n).find(|&d| !owned[d]).ok_or(MapError::Empty)?;
    let rev: Vec<usize> = (0..n).map(|d| d ^ 1).collect();
    let map = CombinatorialMap::from_face_permutation(rev, next, Dart(outer))?;

    let regions = firsts.iter().map(|&d| map.region_of(d).expect("polygon dart is bounded")).collect();
    let mut vertices = HashMap::new();
    for d in 0..n {
        vertices.insert(ends[d].0, map.origin(Dart(d)));
    }
    Ok(Fixture {
        map,
        darts,
        regions,
        vertices,
    })
}

/// One square. Labels: 0=(0,0) 1=(1,0) 2=(1,1) 3=(0,1).
pub fn sq1() -> Fixture {
    from_polygons(&[vec![0, 1, 2, 3]]).expect("SQ1")
}

/// Two squares sharing edge 1–4. Bottom row 0,1,2; top row 3,4,5.
pub fn lad2() -> Fixture {
    from_polygons(&[vec![0, 1, 4, 3], vec![1, 2, 5, 4]]).expect("LAD2")
}

/// Three squares in a row. Bottom row 0..=3; top row 4..=7.
pub fn lad3() -> Fixture {
    from_polygons(&[vec![0, 1, 5, 4], vec![1, 2, 6, 5], vec![2, 3, 7, 6]]).expect("LAD3")
}

pub const GRID4_SW: usize = 0;
pub const GRID4_SE: usize = 1;
pub const GRID4_NW: usize = 2;
pub const GRID4_NE: usize = 3;

/// 2×2 grid of squares. Vertex (x, y) has label 3y + x.
pub fn grid4() -> Fixture {
    from_polygons(&[
        vec![0, 1, 4, 3],
        vec![1, 2, 5, 4],
        vec![3, 4, 7, 6],
        vec![4, 5, 8, 7],
    ])
    .expect("GRID4")
}

/// A central triangle 0,1,2 inside a triangle 3,4,5; spokes 0–3, 1–4, 2–5.
/// Region 0 is the central (inner) triangle.
pub fn tri_wheel() -> Fixture {
    from_polygons(&[
        vec![0, 1, 2],
        vec![3, 4, 1, 0],
        vec![4, 5, 2, 1],
        vec![5, 3, 0, 2],
    ])
    .expect("TRI_WHEEL")
}

/// A single k-gon with labels 0..k.
pub fn polygon(k: usize) -> Fixture {
    from_polygons(&[(0..k).collect()]).expect("polygon")
}

/// A row of `count` k-gons, consecutive ones sharing one edge. Only for k ≥ 4.
///
/// Polygon i uses bottom labels i, i+1 and top labels; the shared edges are
/// vertical.
pub fn ladder(count: usize, k: usize) -> Fixture {
    assert!(k >= 4 && count >= 1);
    // Bottom vertices 0..=count, top vertices 1000.., extra vertices on the top
    // path of each polygon so it has k edges.
    let top = |i: usize| 1000 + i;
    let mut polys = Vec::new();
    let mut extra = 2000;
    for i in 0..count {
        let mut p = vec![i, i + 1, top(i + 1)];
        for _ in 0..(k - 4) {
            p.push(extra);
            extra += 1;
        }
        p.push(top(i));
        polys.push(p);
    }
    from_polygons(&polys).expect("ladder")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(sq1().map.num_regions(), 1);
        assert_eq!(lad2().map.boundary_length(), 6);
        assert_eq!(lad3().map.boundary_length(), 8);
        assert_eq!(grid4().map.boundary_length(), 8);
        let tw = tri_wheel();
        assert_eq!(tw.map.num_regions(), 4);
        assert_eq!(tw.map.boundary_length(), 3);
        let l = ladder(3, 7);
        assert_eq!(l.map.num_regions(), 3);
        assert_eq!(l.map.euler_characteristic(), 1);
    }

    #[test]
    fn duplicate_directed_edge_rejected() {
        assert!(from_polygons(&[vec![0, 1, 2], vec![0, 1, 3]]).is_err());
    }
}
