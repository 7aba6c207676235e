use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use super::{symmetric_closure, Letter, Presentation, PresentationError, Word};
use crate::map::{CombinatorialMap, Dart, RegionId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("edge of dart {0} has no label")]
    UnlabelledEdge(Dart),
    #[error("region {region} reads {word}, which is not a relator")]
    RegionLabelNotRelator { region: RegionId, word: Word },
    #[error("no boundary cycle reads {expected}; the outer face reads {found}")]
    BoundaryMismatch { expected: Word, found: Word },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// One letter per edge: a dart reads its letter, the reversed dart its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramLabelling {
    labels: Vec<Option<Letter>>,
}

impl DiagramLabelling {
    pub fn new(map: &CombinatorialMap) -> Self {
        DiagramLabelling {
            labels: vec![None; map.num_darts()],
        }
    }

    /// Labels `d` with `letter` and its reversal with the inverse letter.
    pub fn set(&mut self, map: &CombinatorialMap, d: Dart, letter: Letter) {
        self.labels[d.0] = Some(letter);
        self.labels[map.reverse(d).0] = Some(letter.inv());
    }

    pub fn clear(&mut self, map: &CombinatorialMap, d: Dart) {
        self.labels[d.0] = None;
        self.labels[map.reverse(d).0] = None;
    }

    pub fn get(&self, d: Dart) -> Option<Letter> {
        self.labels.get(d.0).copied().flatten()
    }

    pub fn read(&self, darts: impl IntoIterator<Item = Dart>) -> Result<Word, DiagramError> {
        darts
            .into_iter()
            .map(|d| self.get(d).ok_or(DiagramError::UnlabelledEdge(d)))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::from_letters)
    }

    /// The word around a region, starting at its smallest dart.
    pub fn region_word(&self, map: &CombinatorialMap, r: RegionId) -> Result<Word, DiagramError> {
        self.read(map.region_boundary(r).map_err(|_| DiagramError::UnlabelledEdge(Dart(0)))?)
    }

    /// The word along the outer face from the map's outer dart.
    pub fn boundary_word(&self, map: &CombinatorialMap) -> Result<Word, DiagramError> {
        self.read(map.boundary().iter().map(|&d| Dart(d)))
    }

    /// Neighboring regions that are mirror images across a shared edge.
    pub fn cancelling_pairs(&self, map: &CombinatorialMap) -> Result<Vec<(RegionId, RegionId)>, DiagramError> {
        let mut out = BTreeSet::new();
        for d in map.darts() {
            let e = map.reverse(d);
            let (Some(a), Some(b)) = (map.region_of(d), map.region_of(e)) else {
                continue;
            };
            if a >= b {
                continue;
            }
            let len_a = map.region_darts(a).map(|s| s.len()).unwrap_or(0);
            let len_b = map.region_darts(b).map(|s| s.len()).unwrap_or(0);
            if len_a != len_b {
                continue;
            }
            // Read a forward from d, and b backwards from d's position.
            let mut x = d;
            let mut y = e;
            let mut mirrored = true;
            for _ in 0..len_a {
                let lx = self.get(x).ok_or(DiagramError::UnlabelledEdge(x))?;
                let ly = self.get(y).ok_or(DiagramError::UnlabelledEdge(y))?;
                if lx != ly.inv() {
                    mirrored = false;
                    break;
                }
                x = map.face_next(x);
                // φ⁻¹ = rev ∘ rot
                y = map.reverse(map.rotate(y));
            }
            if mirrored {
                out.insert((a, b));
            }
        }
        Ok(out.into_iter().collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegionDiagnostic {
    pub region: RegionId,
    pub word: Word,
    pub is_relator: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramVerdict {
    pub regions: Vec<RegionDiagnostic>,
    pub boundary_word: Word,
    /// Whether the requested boundary word matched; `None` when none was requested.
    pub boundary_match: Option<bool>,
    pub cancelling_pairs: Vec<(RegionId, RegionId)>,
}

impl DiagramVerdict {
    pub fn is_valid(&self) -> bool {
        self.regions.iter().all(|r| r.is_relator) && self.boundary_match != Some(false)
    }

    pub fn is_reduced(&self) -> bool {
        self.cancelling_pairs.is_empty()
    }
}

/// Checks that every region reads a relator of the symmetric closure of P and,
/// when `boundary_word` is given, that some boundary cycle (either direction,
/// any starting point) reads it.
pub fn validate_diagram(
    map: &CombinatorialMap,
    labels: &DiagramLabelling,
    p: &Presentation,
    boundary_word: Option<&Word>,
) -> Result<DiagramVerdict, DiagramError> {
    let verdict = diagnose(map, labels, p, boundary_word)?;
    if let Some(bad) = verdict.regions.iter().find(|r| !r.is_relator) {
        return Err(DiagramError::RegionLabelNotRelator {
            region: bad.region,
            word: bad.word.clone(),
        });
    }
    if let (Some(false), Some(expected)) = (verdict.boundary_match, boundary_word) {
        return Err(DiagramError::BoundaryMismatch {
            expected: expected.clone(),
            found: verdict.boundary_word.clone(),
        });
    }
    Ok(verdict)
}

/// Like [`validate_diagram`] but reports failures in the verdict instead of erroring.
pub fn diagnose(
    map: &CombinatorialMap,
    labels: &DiagramLabelling,
    p: &Presentation,
    boundary_word: Option<&Word>,
) -> Result<DiagramVerdict, DiagramError> {
    for d in map.darts() {
        if labels.get(d).is_none() {
            return Err(DiagramError::UnlabelledEdge(d));
        }
    }
    let closure = symmetric_closure(&p.relators)?;
    let mut regions = Vec::with_capacity(map.num_regions());
    for r in map.regions() {
        let word = labels.region_word(map, r)?;
        regions.push(RegionDiagnostic {
            region: r,
            is_relator: closure.contains(&word),
            word,
        });
    }
    let outer = labels.boundary_word(map)?;
    let boundary_match = boundary_word.map(|w| cyclically_equal(&outer, w) || cyclically_equal(&outer.inverse(), w));
    Ok(DiagramVerdict {
        regions,
        boundary_word: outer,
        boundary_match,
        cancelling_pairs: labels.cancelling_pairs(map)?,
    })
}

fn cyclically_equal(a: &Word, b: &Word) -> bool {
    a.len() == b.len() && (0..a.len().max(1)).any(|k| &a.cyclic_shift(k) == b)
}
