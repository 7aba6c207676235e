//! Polygon shelling with canonical-form deduplication.
//!
//! Maps are handled as raw rotation arrays with the reversal fixed to
//! `d ↔ d ^ 1`. Canonical codes relabel darts by a breadth-first walk from an
//! outer dart, in the map and in its mirror image, keeping the smallest code.

use rayon::prelude::*;

use super::{ConfigInvalid, Dedup, EnumConfig};
use crate::conditions::{classify_map, ClassFilter};
use crate::map::{BoundaryDecomposition, CombinatorialMap, Dart};

type Code = Vec<u16>;

/// Rotation array plus outer dart; reversal is `d ^ 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Raw {
    pub rot: Code,
    pub outer: u16,
}

impl Raw {
    pub fn polygon(k: usize) -> Raw {
        let mut rot = vec![0u16; 2 * k];
        for i in 0..k {
            let prev_out = 2 * ((i + k - 1) % k) + 1;
            rot[2 * i] = prev_out as u16;
            rot[prev_out] = (2 * i) as u16;
        }
        Raw { rot, outer: 1 }
    }

    pub fn to_map(&self) -> CombinatorialMap {
        let n = self.rot.len();
        let rev = (0..n).map(|d| d ^ 1).collect();
        let rot = self.rot.iter().map(|&r| r as usize).collect();
        CombinatorialMap::from_permutations(rev, rot, Dart(self.outer as usize)).expect("shelling produced an invalid map")
    }

    fn rot_inv(&self) -> Vec<usize> {
        let mut inv = vec![0; self.rot.len()];
        for (d, &r) in self.rot.iter().enumerate() {
            inv[r as usize] = d;
        }
        inv
    }

    fn phi(&self) -> Vec<usize> {
        let inv = self.rot_inv();
        (0..self.rot.len()).map(|d| inv[d ^ 1]).collect()
    }

    fn outer_cycle(&self, phi: &[usize]) -> Vec<usize> {
        let start = self.outer as usize;
        let mut cycle = vec![start];
        let mut d = phi[start];
        while d != start {
            cycle.push(d);
            d = phi[d];
        }
        cycle
    }

    pub fn boundary_length(&self) -> usize {
        self.outer_cycle(&self.phi()).len()
    }

    /// Every map obtained by gluing a `k`-gon, `k` in `sizes`, along a
    /// contiguous run of `p` outer darts with `1 ≤ p < k` and `p < L`.
    pub fn children(&self, sizes: std::ops::RangeInclusive<usize>) -> Vec<Raw> {
        let phi = self.phi();
        let cycle = self.outer_cycle(&phi);
        let l = cycle.len();
        let n = self.rot.len();
        let mut out = Vec::new();
        for k in sizes {
            for p in 1..k.min(l) {
                let q = k - p;
                for i in 0..l {
                    let mut next = phi.clone();
                    next.resize(n + 2 * q, 0);
                    let inner = |j: usize| n + 2 * j;
                    let outer = |j: usize| n + 2 * j + 1;
                    let c = |j: usize| cycle[(i + j) % l];
                    let before = cycle[(i + l - 1) % l];
                    next[c(p - 1)] = inner(0);
                    for j in 0..q - 1 {
                        next[inner(j)] = inner(j + 1);
                    }
                    next[inner(q - 1)] = c(0);
                    next[before] = outer(q - 1);
                    for j in 1..q {
                        next[outer(j)] = outer(j - 1);
                    }
                    next[outer(0)] = c(p);
                    // rot⁻¹(x) = phi(x ^ 1)
                    let mut rot = vec![0u16; n + 2 * q];
                    for x in 0..n + 2 * q {
                        rot[next[x ^ 1]] = x as u16;
                    }
                    out.push(Raw {
                        rot,
                        outer: outer(0) as u16,
                    });
                }
            }
        }
        out
    }

    /// Smallest relabelling over all outer starting darts in both orientations.
    /// The result has its outer dart at 0.
    pub fn canonical(&self) -> Raw {
        let (a, b) = self.oriented_codes();
        Raw { rot: a.min(b), outer: 0 }
    }

    /// True when the map is isomorphic to its mirror image.
    pub fn is_achiral(&self) -> bool {
        let (a, b) = self.oriented_codes();
        a == b
    }

    fn oriented_codes(&self) -> (Code, Code) {
        let n = self.rot.len();
        let rot: Vec<usize> = self.rot.iter().map(|&r| r as usize).collect();
        let inv = self.rot_inv();
        let phi = self.phi();
        let cycle = self.outer_cycle(&phi);
        // The mirror has rotation rot⁻¹ and its outer face on the reversed darts.
        let mirror_cycle: Vec<usize> = cycle.iter().rev().map(|&d| d ^ 1).collect();
        let direct = best_code(&rot, &cycle, n);
        let mirror = best_code(&inv, &mirror_cycle, n);
        (direct, mirror)
    }
}

/// Minimal code over starts on `cycle`, trying only starts whose boundary
/// signature is lexicographically least.
fn best_code(rot: &[usize], cycle: &[usize], n: usize) -> Code {
    let l = cycle.len();
    // signature entry: valence at the dart's origin
    let mut valence = vec![0u16; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut orbit = vec![s];
        seen[s] = true;
        let mut d = rot[s];
        while d != s {
            seen[d] = true;
            orbit.push(d);
            d = rot[d];
        }
        for &d in &orbit {
            valence[d] = orbit.len() as u16;
        }
    }
    let sig: Vec<u16> = cycle.iter().map(|&d| valence[d]).collect();
    let mut best_starts: Vec<usize> = vec![0];
    for s in 1..l {
        let cmp = (0..l)
            .map(|j| sig[(s + j) % l].cmp(&sig[(best_starts[0] + j) % l]))
            .find(|c| c.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal);
        match cmp {
            std::cmp::Ordering::Less => best_starts = vec![s],
            std::cmp::Ordering::Equal => best_starts.push(s),
            std::cmp::Ordering::Greater => {}
        }
    }
    best_starts
        .into_iter()
        .map(|s| code_from(rot, cycle[s], n))
        .min()
        .expect("non-empty boundary")
}

fn code_from(rot: &[usize], start: usize, n: usize) -> Code {
    const NONE: u16 = u16::MAX;
    let mut label = vec![NONE; n];
    let mut order = Vec::with_capacity(n);
    label[start] = 0;
    label[start ^ 1] = 1;
    order.push(start);
    order.push(start ^ 1);
    let mut idx = 0;
    while idx < order.len() {
        let r = rot[order[idx]];
        idx += 1;
        if label[r] == NONE {
            let k = order.len() as u16;
            label[r] = k;
            label[r ^ 1] = k + 1;
            order.push(r);
            order.push(r ^ 1);
        }
    }
    order.iter().map(|&d| label[rot[d]]).collect()
}

/// Facts about a raw map needed for pruning, computed from the permutations.
struct Shape {
    face_size: Vec<usize>,
    /// face of each dart; the outer face is `outer_face`
    face_of: Vec<usize>,
    outer_face: usize,
    face_inner: Vec<bool>,
    vertex_of: Vec<usize>,
    valence: Vec<usize>,
    vertex_inner: Vec<bool>,
}

impl Shape {
    fn of(raw: &Raw) -> Shape {
        let n = raw.rot.len();
        let phi = raw.phi();
        let (face_of, face_size) = orbit_ids(n, |d| phi[d]);
        let (vertex_of, valence) = orbit_ids(n, |d| raw.rot[d] as usize);
        let outer_face = face_of[raw.outer as usize];
        let mut face_inner = vec![true; face_size.len()];
        let mut vertex_inner = vec![true; valence.len()];
        for d in 0..n {
            if face_of[d] == outer_face {
                face_inner[face_of[d ^ 1]] = false;
                vertex_inner[vertex_of[d]] = false;
            }
        }
        face_inner[outer_face] = false;
        Shape {
            face_size,
            face_of,
            outer_face,
            face_inner,
            vertex_of,
            valence,
            vertex_inner,
        }
    }

    /// A class violation that no further gluing can repair: gluing never
    /// touches inner vertices or inner regions, and never changes a region's
    /// edge count.
    fn hereditary_violation(&self, filter: ClassFilter) -> bool {
        let regions = (0..self.face_size.len()).filter(|&f| f != self.outer_face);
        let inner_valence = |k: usize| (0..self.valence.len()).any(|v| self.vertex_inner[v] && self.valence[v] == k);
        match filter {
            ClassFilter::None => false,
            ClassFilter::ProperC7 => inner_valence(2) || regions.into_iter().any(|f| self.face_size[f] < 7),
            ClassFilter::ProperC4T4 => {
                (0..self.valence.len()).any(|v| self.vertex_inner[v] && self.valence[v] < 4)
                    || regions.into_iter().any(|f| self.face_size[f] < 4)
            }
            ClassFilter::ProperV6 => {
                if inner_valence(2) {
                    return true;
                }
                let n = self.face_of.len();
                let mut face_darts: Vec<Vec<usize>> = vec![Vec::new(); self.face_size.len()];
                for d in 0..n {
                    face_darts[self.face_of[d]].push(d);
                }
                for f in regions {
                    if self.face_size[f] < 4 {
                        return true;
                    }
                    let inner_three = face_darts[f]
                        .iter()
                        .any(|&d| self.vertex_inner[self.vertex_of[d]] && self.valence[self.vertex_of[d]] == 3);
                    if inner_three && self.face_size[f] < 6 {
                        return true;
                    }
                    if self.face_inner[f] {
                        let mut nb: Vec<usize> = face_darts[f].iter().map(|&d| self.face_of[d ^ 1]).collect();
                        nb.sort_unstable();
                        nb.dedup();
                        if nb.len() < 4 || (inner_three && nb.len() < 6) {
                            return true;
                        }
                    }
                }
                false
            }
        }
    }
}

fn orbit_ids(n: usize, next: impl Fn(usize) -> usize) -> (Vec<usize>, Vec<usize>) {
    let mut id = vec![usize::MAX; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if id[s] != usize::MAX {
            continue;
        }
        let k = sizes.len();
        let mut len = 0;
        let mut d = s;
        while id[d] == usize::MAX {
            id[d] = k;
            len += 1;
            d = next(d);
        }
        sizes.push(len);
    }
    (id, sizes)
}

/// Lazily generated maps, one shelling level (region count) at a time.
pub struct MapStream {
    cfg: EnumConfig,
    level: usize,
    frontier: Vec<Raw>,
    pending: std::vec::IntoIter<Raw>,
    generated: usize,
}

impl MapStream {
    fn new(cfg: EnumConfig) -> Self {
        let (lo, hi) = cfg.region_edge_range;
        let mut frontier: Vec<Raw> = (lo..=hi).map(Raw::polygon).collect();
        if cfg.dedup == Dedup::On {
            frontier = frontier.iter().map(Raw::canonical).collect();
        }
        let filter = cfg.class_filter;
        let remaining = cfg.max_regions - 1;
        frontier.retain(|r| keep(r, filter, remaining, &cfg));
        MapStream {
            pending: frontier.clone().into_iter(),
            cfg,
            level: 1,
            frontier,
            generated: 0,
        }
    }

    /// Maps produced so far that survived pruning and the boundary bound,
    /// whether or not they are in the filtered class.
    pub fn generated(&self) -> usize {
        self.generated
    }

    /// Region count of the level currently being emitted.
    pub fn level(&self) -> usize {
        self.level
    }

    fn advance(&mut self) -> bool {
        if self.level >= self.cfg.max_regions || self.frontier.is_empty() {
            return false;
        }
        self.level += 1;
        let (lo, hi) = self.cfg.region_edge_range;
        let filter = self.cfg.class_filter;
        let remaining = self.cfg.max_regions - self.level;
        let cfg = self.cfg;
        let parents = std::mem::take(&mut self.frontier);
        let mut next: Vec<Raw> = parents
            .par_iter()
            .flat_map_iter(|p| {
                p.children(lo..=hi).into_iter().filter_map(move |c| {
                    if !keep(&c, filter, remaining, &cfg) {
                        return None;
                    }
                    Some(if cfg.dedup == Dedup::On { c.canonical() } else { c })
                })
            })
            .collect();
        if cfg.dedup == Dedup::On {
            next.par_sort_unstable();
            next.dedup();
        }
        self.pending = next.clone().into_iter();
        self.frontier = next;
        true
    }
}

fn keep(raw: &Raw, filter: ClassFilter, remaining: usize, cfg: &EnumConfig) -> bool {
    let shrink = cfg.region_edge_range.1.saturating_sub(2) * remaining;
    if raw.boundary_length().saturating_sub(shrink) > cfg.max_boundary_length {
        return false;
    }
    !Shape::of(raw).hereditary_violation(filter)
}

impl Iterator for MapStream {
    type Item = CombinatorialMap;

    fn next(&mut self) -> Option<CombinatorialMap> {
        loop {
            for raw in self.pending.by_ref() {
                if raw.boundary_length() > self.cfg.max_boundary_length {
                    continue;
                }
                self.generated += 1;
                let map = raw.to_map();
                if classify_map(&map).satisfies(self.cfg.class_filter) {
                    return Some(map);
                }
            }
            if !self.advance() {
                return None;
            }
        }
    }
}

/// Streams shelled maps with 1 to `max_regions` regions, level by level.
pub fn enumerate_maps(cfg: &EnumConfig) -> Result<MapStream, ConfigInvalid> {
    cfg.validate()?;
    Ok(MapStream::new(*cfg))
}

/// Every split ξ μ τ⁻¹ σ⁻¹ of the boundary with |ξ|, |τ| ≤ 1, over all basepoints.
pub fn enumerate_decompositions(map: &CombinatorialMap) -> Vec<BoundaryDecomposition> {
    let l = map.boundary_length();
    let mut out = Vec::new();
    for &base in map.boundary() {
        for x in 0..=1usize {
            for t in 0..=1usize {
                if x + t > l {
                    continue;
                }
                for m in 0..=l - x - t {
                    out.push(
                        BoundaryDecomposition::from_lengths(map, Dart(base), x, m, t)
                            .expect("lengths fit the boundary"),
                    );
                }
            }
        }
    }
    out
}

/// The mirror image of a map: same darts, reversed rotations.
pub fn mirror_map(map: &CombinatorialMap) -> CombinatorialMap {
    let n = map.num_darts();
    let rev = map.reversal().to_vec();
    let mut rot_inv = vec![0; n];
    for (d, &r) in map.rotation().iter().enumerate() {
        rot_inv[r] = d;
    }
    let outer = map.reverse(map.outer_dart());
    CombinatorialMap::from_permutations(rev, rot_inv, outer).expect("mirror of a valid map is valid")
}

/// Whether a map is isomorphic to its mirror image, outer face preserved.
pub fn is_achiral(map: &CombinatorialMap) -> bool {
    raw_of(map).map(|r| r.is_achiral()).unwrap_or(false)
}

/// Canonical relabelling of a map with paired darts.
pub fn canonical_form(map: &CombinatorialMap) -> Option<CombinatorialMap> {
    raw_of(map).map(|r| r.canonical().to_map())
}

fn raw_of(map: &CombinatorialMap) -> Option<Raw> {
    if !map.has_paired_darts() || map.num_darts() >= u16::MAX as usize {
        return None;
    }
    Some(Raw {
        rot: map.rotation().iter().map(|&r| r as u16).collect(),
        outer: map.outer_dart().0 as u16,
    })
}
