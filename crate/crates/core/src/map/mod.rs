//! Rotation-system encoding of finite planar maps.
//!
//! A map is stored as two permutations on darts: `rev`, the fixed-point-free
//! involution pairing each dart with its reversal, and `rot`, whose orbits are
//! the counterclockwise orderings of darts leaving each vertex. Faces are the
//! orbits of `phi = rot⁻¹ ∘ rev`; bounded faces are traced counterclockwise
//! and the distinguished outer face clockwise.

mod decomposition;
pub mod fixtures;
mod profile;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use decomposition::{BoundaryDecomposition, DecompositionError, Side};
pub use profile::{RegionProfile, RemovalReading, VertexProfile};

/// An oriented edge. Internally 0-based; displayed and serialized 1-based as
/// in the text format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(pub usize);

impl Serialize for Dart {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.0 as u64 + 1)
    }
}

impl<'de> Deserialize<'de> for Dart {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = u64::deserialize(d)?;
        if n == 0 {
            return Err(serde::de::Error::custom("darts are numbered from 1"));
        }
        Ok(Dart(n as usize - 1))
    }
}

impl Dart {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

/// A rotation orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexId(pub usize);

/// A bounded face.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RegionId(pub usize);

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("map has no darts")]
    Empty,
    #[error("reversal is not a fixed-point-free involution at dart {0}")]
    NotInvolution(Dart),
    #[error("rotation is not a permutation of the darts (dart {0})")]
    BadRotation(Dart),
    #[error("map is not connected")]
    NotConnected,
    #[error("Euler characteristic is {euler}, expected 2 (V={vertices}, E={edges}, F={faces})")]
    NotPlanar {
        euler: i64,
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("outer dart {0} does not exist")]
    BadOuterDart(Dart),
    #[error("dart {0} is not on the outer face")]
    BasepointNotOnBoundary(Dart),
    #[error("unknown region {0}")]
    UnknownRegion(RegionId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

/// A validated planar map. Immutable once built.
#[derive(Debug)]
pub struct CombinatorialMap {
    rev: Vec<usize>,
    rot: Vec<usize>,
    rot_inv: Vec<usize>,
    outer_dart: usize,

    vertex_of: Vec<usize>,
    vertices: Vec<Vec<usize>>,
    // `None` marks the outer face.
    region_of: Vec<Option<usize>>,
    regions: Vec<Vec<usize>>,
    boundary: Vec<usize>,
    boundary_pos: Vec<Option<usize>>,

    profiles: OnceLock<Vec<RegionProfile>>,
}

impl Clone for CombinatorialMap {
    fn clone(&self) -> Self {
        CombinatorialMap {
            rev: self.rev.clone(),
            rot: self.rot.clone(),
            rot_inv: self.rot_inv.clone(),
            outer_dart: self.outer_dart,
            vertex_of: self.vertex_of.clone(),
            vertices: self.vertices.clone(),
            region_of: self.region_of.clone(),
            regions: self.regions.clone(),
            boundary: self.boundary.clone(),
            boundary_pos: self.boundary_pos.clone(),
            profiles: OnceLock::new(),
        }
    }
}

impl PartialEq for CombinatorialMap {
    fn eq(&self, other: &Self) -> bool {
        self.rev == other.rev && self.rot == other.rot && self.outer_dart == other.outer_dart
    }
}

impl Eq for CombinatorialMap {}

impl CombinatorialMap {
    /// Builds a map from a reversal pairing and vertex rotation cycles.
    ///
    /// Every dart in `0..num_darts` must occur in exactly one pair and exactly
    /// one rotation cycle.
    pub fn build(
        num_darts: usize,
        reversal: &[(Dart, Dart)],
        rotation: &[Vec<Dart>],
        outer: Dart,
    ) -> Result<Self, MapError> {
        let mut rev = vec![usize::MAX; num_darts];
        for &(a, b) in reversal {
            for d in [a, b] {
                if d.0 >= num_darts {
                    return Err(MapError::NotInvolution(d));
                }
            }
            if a == b || rev[a.0] != usize::MAX || rev[b.0] != usize::MAX {
                return Err(MapError::NotInvolution(a));
            }
            rev[a.0] = b.0;
            rev[b.0] = a.0;
        }
        if let Some(d) = rev.iter().position(|&r| r == usize::MAX) {
            return Err(MapError::NotInvolution(Dart(d)));
        }
        let mut rot = vec![usize::MAX; num_darts];
        for cycle in rotation {
            for (i, &d) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if d.0 >= num_darts || rot[d.0] != usize::MAX {
                    return Err(MapError::BadRotation(d));
                }
                rot[d.0] = next.0;
            }
        }
        if let Some(d) = rot.iter().position(|&r| r == usize::MAX) {
            return Err(MapError::BadRotation(Dart(d)));
        }
        Self::from_permutations(rev, rot, outer)
    }

    /// Builds a map from raw permutations (`rev[d]`, `rot[d]`).
    pub fn from_permutations(rev: Vec<usize>, rot: Vec<usize>, outer: Dart) -> Result<Self, MapError> {
        let n = rev.len();
        if n == 0 {
            return Err(MapError::Empty);
        }
        if rot.len() != n {
            return Err(MapError::BadRotation(Dart(rot.len().min(n))));
        }
        for d in 0..n {
            let r = rev[d];
            if r >= n || r == d || rev[r] != d {
                return Err(MapError::NotInvolution(Dart(d)));
            }
        }
        let mut rot_inv = vec![usize::MAX; n];
        for d in 0..n {
            let r = rot[d];
            if r >= n || rot_inv[r] != usize::MAX {
                return Err(MapError::BadRotation(Dart(d)));
            }
            rot_inv[r] = d;
        }
        if outer.0 >= n {
            return Err(MapError::BadOuterDart(outer));
        }

        // connectivity under <rev, rot>
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(d) = stack.pop() {
            for e in [rev[d], rot[d], rot_inv[d]] {
                if !seen[e] {
                    seen[e] = true;
                    reached += 1;
                    stack.push(e);
                }
            }
        }
        if reached != n {
            return Err(MapError::NotConnected);
        }

        let (vertex_of, vertices) = orbits(n, |d| rot[d]);
        let phi = |d: usize| rot_inv[rev[d]];
        let (face_of, faces) = orbits(n, phi);
        let v = vertices.len();
        let e = n / 2;
        let f = faces.len();
        let euler = v as i64 - e as i64 + f as i64;
        if euler != 2 {
            return Err(MapError::NotPlanar {
                euler,
                vertices: v,
                edges: e,
                faces: f,
            });
        }

        let outer_face = face_of[outer.0];
        let mut region_index = vec![None; f];
        let mut regions = Vec::with_capacity(f - 1);
        for (i, face) in faces.into_iter().enumerate() {
            if i != outer_face {
                region_index[i] = Some(regions.len());
                regions.push(face);
            }
        }
        let region_of = face_of.iter().map(|&fi| region_index[fi]).collect();

        let mut boundary = vec![outer.0];
        let mut d = phi(outer.0);
        while d != outer.0 {
            boundary.push(d);
            d = phi(d);
        }
        let mut boundary_pos = vec![None; n];
        for (i, &d) in boundary.iter().enumerate() {
            boundary_pos[d] = Some(i);
        }

        Ok(CombinatorialMap {
            rev,
            rot,
            rot_inv,
            outer_dart: outer.0,
            vertex_of,
            vertices,
            region_of,
            regions,
            boundary,
            boundary_pos,
            profiles: OnceLock::new(),
        })
    }

    /// Builds a map from the reversal and the face successor permutation
    /// `phi = rot⁻¹ ∘ rev`.
    pub fn from_face_permutation(rev: Vec<usize>, phi: Vec<usize>, outer: Dart) -> Result<Self, MapError> {
        let n = rev.len();
        if phi.len() != n || rev.iter().any(|&r| r >= n) {
            return Err(MapError::BadRotation(Dart(0)));
        }
        // rot⁻¹(x) = phi(rev(x))
        let mut rot = vec![usize::MAX; n];
        for x in 0..n {
            let y = phi[rev[x]];
            if y >= n || rot[y] != usize::MAX {
                return Err(MapError::BadRotation(Dart(x)));
            }
            rot[y] = x;
        }
        Self::from_permutations(rev, rot, outer)
    }

    pub fn num_darts(&self) -> usize {
        self.rev.len()
    }

    pub fn num_edges(&self) -> usize {
        self.rev.len() / 2
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_regions(&self) -> usize {
        self.regions.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.rev.len()).map(Dart)
    }

    pub fn regions(&self) -> impl Iterator<Item = RegionId> + '_ {
        (0..self.regions.len()).map(RegionId)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn outer_dart(&self) -> Dart {
        Dart(self.outer_dart)
    }

    pub fn reverse(&self, d: Dart) -> Dart {
        Dart(self.rev[d.0])
    }

    pub fn rotate(&self, d: Dart) -> Dart {
        Dart(self.rot[d.0])
    }

    /// Next dart along the face containing `d`.
    pub fn face_next(&self, d: Dart) -> Dart {
        Dart(self.rot_inv[self.rev[d.0]])
    }

    /// i(d): the vertex the dart leaves.
    pub fn origin(&self, d: Dart) -> VertexId {
        VertexId(self.vertex_of[d.0])
    }

    /// t(d): the vertex the dart enters.
    pub fn target(&self, d: Dart) -> VertexId {
        VertexId(self.vertex_of[self.rev[d.0]])
    }

    /// Bounded face containing `d`, or `None` when `d` lies on the outer face.
    pub fn region_of(&self, d: Dart) -> Option<RegionId> {
        self.region_of[d.0].map(RegionId)
    }

    pub fn is_outer(&self, d: Dart) -> bool {
        self.region_of[d.0].is_none()
    }

    /// A dart lies on the map boundary when it or its reversal is on the outer face.
    pub fn is_boundary_dart(&self, d: Dart) -> bool {
        self.is_outer(d) || self.is_outer(self.reverse(d))
    }

    /// The bounded face across a boundary edge: for an outer dart this is the
    /// face of its reversal. `None` for spine edges.
    pub fn region_across(&self, d: Dart) -> Option<RegionId> {
        self.region_of(d).or_else(|| self.region_of(self.reverse(d)))
    }

    /// Darts of a region in face order, starting at its smallest dart.
    pub fn region_darts(&self, r: RegionId) -> Result<&[usize], MapError> {
        self.regions
            .get(r.0)
            .map(|v| v.as_slice())
            .ok_or(MapError::UnknownRegion(r))
    }

    /// The region boundary as a cyclic sequence of darts.
    pub fn region_boundary(&self, r: RegionId) -> Result<Vec<Dart>, MapError> {
        Ok(self.region_darts(r)?.iter().map(|&d| Dart(d)).collect())
    }

    /// Darts leaving a vertex in counterclockwise order.
    pub fn vertex_darts(&self, v: VertexId) -> Result<Vec<Dart>, MapError> {
        self.vertices
            .get(v.0)
            .map(|c| c.iter().map(|&d| Dart(d)).collect())
            .ok_or(MapError::UnknownVertex(v))
    }

    pub fn valence(&self, v: VertexId) -> usize {
        self.vertices[v.0].len()
    }

    /// No dart leaving `v` lies on the outer face.
    pub fn is_inner_vertex(&self, v: VertexId) -> bool {
        self.vertices[v.0].iter().all(|&d| self.region_of[d].is_some())
    }

    /// Outer face darts starting at the map's outer dart.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn boundary_length(&self) -> usize {
        self.boundary.len()
    }

    /// Position of an outer dart within [`Self::boundary`].
    pub fn boundary_position(&self, d: Dart) -> Option<usize> {
        self.boundary_pos.get(d.0).copied().flatten()
    }

    /// The full outer-face cycle starting at `basepoint`. Spine edges appear twice.
    pub fn boundary_cycle(&self, basepoint: Dart) -> Result<Vec<Dart>, MapError> {
        let start = self
            .boundary_position(basepoint)
            .ok_or(MapError::BasepointNotOnBoundary(basepoint))?;
        let len = self.boundary.len();
        Ok((0..len).map(|i| Dart(self.boundary[(start + i) % len])).collect())
    }

    pub fn rotation(&self) -> &[usize] {
        &self.rot
    }

    pub fn reversal(&self) -> &[usize] {
        &self.rev
    }

    /// True when the reversal pairs darts as (2i, 2i+1).
    pub fn has_paired_darts(&self) -> bool {
        self.rev.iter().enumerate().all(|(d, &r)| r == d ^ 1)
    }

    /// Vertex − edge + bounded-region count; 1 for every valid map.
    pub fn euler_characteristic(&self) -> i64 {
        self.num_vertices() as i64 - self.num_edges() as i64 + self.num_regions() as i64
    }

    pub(crate) fn cached_profiles(&self) -> &[RegionProfile] {
        self.profiles.get_or_init(|| {
            self.regions()
                .map(|r| RegionProfile::compute(self, r, RemovalReading::OuterEdges))
                .collect()
        })
    }

    /// Structural summary of a region under the default (outer-edge) properness reading.
    pub fn region_profile(&self, r: RegionId) -> Result<&RegionProfile, MapError> {
        self.cached_profiles().get(r.0).ok_or(MapError::UnknownRegion(r))
    }

    pub fn region_profile_with(&self, r: RegionId, reading: RemovalReading) -> Result<RegionProfile, MapError> {
        if r.0 >= self.regions.len() {
            return Err(MapError::UnknownRegion(r));
        }
        Ok(RegionProfile::compute(self, r, reading))
    }

    pub fn vertex_profile(&self, v: VertexId) -> Result<VertexProfile, MapError> {
        if v.0 >= self.vertices.len() {
            return Err(MapError::UnknownVertex(v));
        }
        Ok(VertexProfile {
            valence: self.valence(v),
            is_inner: self.is_inner_vertex(v),
        })
    }

    /// Distinct vertices on the boundary of a region.
    pub fn region_vertices(&self, r: RegionId) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.regions[r.0].iter().map(|&d| self.origin(Dart(d))).collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

/// Orbits of a permutation; each orbit starts at its smallest element and
/// orbits are ordered by that element.
fn orbits(n: usize, next: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut owner = vec![usize::MAX; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if owner[start] != usize::MAX {
            continue;
        }
        let id = cycles.len();
        let mut cycle = Vec::new();
        let mut d = start;
        loop {
            owner[d] = id;
            cycle.push(d);
            d = next(d);
            if d == start {
                break;
            }
        }
        cycles.push(cycle);
    }
    (owner, cycles)
}
