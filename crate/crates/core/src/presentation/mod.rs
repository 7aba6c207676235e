//! Free-group words, relator sets and their small-cancellation classification.

mod diagram;
mod word;

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

pub use diagram::{diagnose as diagnose_diagram, validate_diagram, DiagramError, DiagramLabelling, DiagramVerdict, RegionDiagnostic};
pub use word::{free_reduce, Letter, Word, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("relator {0} is not cyclically reduced")]
    NotCyclicallyReduced(Word),
    #[error("relator {0} is not freely reduced")]
    NotFreelyReduced(Word),
    #[error("relator set is not symmetrically closed")]
    NotSymmetricallyClosed,
    #[error("generator '{0}' is not declared")]
    UnknownGenerator(char),
    #[error("empty relator")]
    EmptyRelator,
}

/// ⟨X | R⟩ with an ordered generator list and relator list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Presentation {
    pub generators: Vec<char>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Checks that every relator is non-empty, freely reduced and uses declared generators.
    pub fn new(generators: Vec<char>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        for r in &relators {
            if r.is_empty() {
                return Err(PresentationError::EmptyRelator);
            }
            if let Some(g) = r.generators().find(|g| !generators.contains(g)) {
                return Err(PresentationError::UnknownGenerator(g));
            }
            if !r.is_freely_reduced() {
                return Err(PresentationError::NotFreelyReduced(r.clone()));
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// The presentation with R replaced by its symmetric closure, sorted.
    pub fn symmetrized(&self) -> Result<Presentation, PresentationError> {
        Ok(Presentation {
            generators: self.generators.clone(),
            relators: symmetric_closure(&self.relators)?.into_iter().collect(),
        })
    }

    pub fn is_symmetrically_closed(&self) -> bool {
        let set: BTreeSet<&Word> = self.relators.iter().collect();
        self.relators.iter().all(|r| {
            set.contains(&r.inverse()) && (1..r.len()).all(|k| set.contains(&r.cyclic_shift(k)))
        })
    }

    fn closed_set(&self) -> Result<BTreeSet<Word>, PresentationError> {
        if !self.is_symmetrically_closed() {
            return Err(PresentationError::NotSymmetricallyClosed);
        }
        Ok(self.relators.iter().cloned().collect())
    }
}

/// Smallest superset closed under inversion and cyclic permutation.
pub fn symmetric_closure(relators: &[Word]) -> Result<BTreeSet<Word>, PresentationError> {
    let mut out = BTreeSet::new();
    for r in relators {
        if !r.is_cyclically_reduced() {
            return Err(PresentationError::NotCyclicallyReduced(r.clone()));
        }
        for base in [r.clone(), r.inverse()] {
            for k in 0..base.len().max(1) {
                out.insert(base.cyclic_shift(k));
            }
        }
    }
    Ok(out)
}

/// Non-empty common prefixes of two distinct relators of a symmetrically closed set.
pub fn pieces(p: &Presentation) -> Result<BTreeSet<Word>, PresentationError> {
    let rels: Vec<Word> = p.closed_set()?.into_iter().collect();
    let mut out = BTreeSet::new();
    // Sorted order puts the longest common prefix with any word next to it.
    for pair in rels.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let lcp = a
            .letters()
            .iter()
            .zip(b.letters())
            .take_while(|(x, y)| x == y)
            .count();
        for n in 1..=lcp {
            out.insert(a.prefix(n));
        }
    }
    Ok(out)
}

/// Fewest pieces whose concatenation is `r`, or `None` when `r` has no
/// decomposition into pieces.
pub fn min_piece_decomposition(r: &Word, pieces: &BTreeSet<Word>) -> Option<usize> {
    let n = r.len();
    let letters = r.letters();
    let max_piece = pieces.iter().map(Word::len).max().unwrap_or(0);
    let mut best: Vec<Option<usize>> = vec![None; n + 1];
    best[0] = Some(0);
    for end in 1..=n {
        for start in end.saturating_sub(max_piece)..end {
            let Some(k) = best[start] else { continue };
            let piece = Word::from_letters(letters[start..end].to_vec());
            if pieces.contains(&piece) {
                let cand = k + 1;
                if best[end].map_or(true, |b| cand < b) {
                    best[end] = Some(cand);
                }
            }
        }
    }
    if n == 0 {
        return None;
    }
    best[n]
}

/// Which triples (R, R′, R″) the three-word clause ranges over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum PairScope {
    /// Every ordered pair (R′, R″) ∈ R × R, repeats and R itself included.
    #[default]
    AllOrderedPairs,
    /// Only R′ and R″ distinct from each other and from R.
    DistinctTriples,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RelatorClause {
    /// ≥ 4 pieces and the three-word condition.
    Clause1,
    /// ≥ 6 pieces.
    Clause2,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorVerdict {
    pub relator: Word,
    pub min_pieces: Option<usize>,
    /// The piece-count requirement held only because no decomposition exists.
    pub vacuous: bool,
    pub pair_condition: bool,
    pub clause: RelatorClause,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationClass {
    pub v6: bool,
    pub vprime6: bool,
    pub pieces: Vec<Word>,
    /// No pieces at all, so every piece-length requirement holds vacuously.
    pub pieces_vacuous: bool,
    pub per_relator: Vec<RelatorVerdict>,
}

pub fn classify_presentation(p: &Presentation) -> Result<PresentationClass, PresentationError> {
    classify_presentation_with(p, PairScope::AllOrderedPairs)
}

pub fn classify_presentation_with(p: &Presentation, scope: PairScope) -> Result<PresentationClass, PresentationError> {
    let rels: Vec<Word> = p.closed_set()?.into_iter().collect();
    for r in &rels {
        if !r.is_freely_reduced() {
            return Err(PresentationError::NotFreelyReduced(r.clone()));
        }
    }
    let pieces = pieces(p)?;
    let reduced_join = |a: &Word, b: &Word| match (a.last(), b.first()) {
        (Some(x), Some(y)) => x != y.inv(),
        _ => true,
    };

    let mut per_relator = Vec::with_capacity(rels.len());
    for (i, r) in rels.iter().enumerate() {
        let min_pieces = min_piece_decomposition(r, &pieces);
        let at_least = |k: usize| min_pieces.map_or(true, |m| m >= k);
        let pair_condition = rels.iter().enumerate().all(|(j, r1)| {
            rels.iter().enumerate().all(|(k, r2)| {
                if scope == PairScope::DistinctTriples && (j == i || k == i || j == k) {
                    return true;
                }
                reduced_join(r, r1) || reduced_join(r1, r2) || reduced_join(r2, r)
            })
        });
        let clause = if at_least(4) && pair_condition {
            RelatorClause::Clause1
        } else if at_least(6) {
            RelatorClause::Clause2
        } else {
            RelatorClause::Fail
        };
        per_relator.push(RelatorVerdict {
            relator: r.clone(),
            min_pieces,
            vacuous: min_pieces.is_none(),
            pair_condition,
            clause,
        });
    }
    let v6 = per_relator.iter().all(|v| v.clause != RelatorClause::Fail);
    let vprime6 = v6 && pieces.iter().all(|u| u.len() == 1);
    Ok(PresentationClass {
        v6,
        vprime6,
        pieces_vacuous: pieces.is_empty(),
        pieces: pieces.into_iter().collect(),
        per_relator,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn closed(gens: &str, rels: &[&str]) -> Presentation {
        Presentation::new(gens.chars().collect(), rels.iter().map(|r| w(r)).collect())
            .unwrap()
            .symmetrized()
            .unwrap()
    }

    #[test]
    fn closure_examples() {
        let c = symmetric_closure(&[w("a")]).unwrap();
        assert_eq!(c, [w("a"), w("A")].into_iter().collect());
        assert_eq!(symmetric_closure(&[w("abAB")]).unwrap().len(), 8);
        assert!(symmetric_closure(&[]).unwrap().is_empty());
        assert_eq!(
            symmetric_closure(&[w("abA")]).unwrap_err(),
            PresentationError::NotCyclicallyReduced(w("abA"))
        );
    }

    #[test]
    fn pieces_examples() {
        let comm = closed("ab", &["abAB"]);
        let expected: BTreeSet<Word> = ["a", "b", "A", "B"].iter().map(|s| w(s)).collect();
        assert_eq!(pieces(&comm).unwrap(), expected);
        assert!(pieces(&closed("a", &["aaaa"])).unwrap().is_empty());
        assert!(pieces(&closed("a", &[])).unwrap().is_empty());
        let open = Presentation::new(vec!['a', 'b'], vec![w("abAB")]).unwrap();
        assert_eq!(pieces(&open).unwrap_err(), PresentationError::NotSymmetricallyClosed);
    }

    #[test]
    fn decompositions() {
        let comm = closed("ab", &["abAB"]);
        let ps = pieces(&comm).unwrap();
        assert_eq!(min_piece_decomposition(&w("abAB"), &ps), Some(4));
        assert_eq!(min_piece_decomposition(&w("aaaa"), &BTreeSet::new()), None);
        let p2 = closed("ab", &["aab", "aaB"]);
        let ps2 = pieces(&p2).unwrap();
        assert!(ps2.contains(&w("aa")));
        assert_eq!(min_piece_decomposition(&w("aab"), &ps2), Some(2));
    }

    #[test]
    fn classification_examples() {
        let c = classify_presentation(&closed("ab", &["abAB"])).unwrap();
        assert!(c.v6 && c.vprime6);
        assert!(c.per_relator.iter().all(|v| v.clause == RelatorClause::Clause1));

        let c = classify_presentation(&closed("ab", &["aab", "aaB"])).unwrap();
        assert!(!c.v6 && !c.vprime6);

        let c = classify_presentation(&closed("a", &["aaaa"])).unwrap();
        assert!(c.v6 && c.vprime6);
        assert!(c.pieces_vacuous);
        assert!(c.per_relator.iter().all(|v| v.vacuous && v.pair_condition));
    }

    #[test]
    fn hexagon_relator_is_vprime6_by_clause_two() {
        let c = classify_presentation(&closed("abc", &["abcABC"])).unwrap();
        assert!(c.vprime6);
        assert!(c.per_relator.iter().all(|v| v.min_pieces == Some(6)));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Presentation::new(vec!['a'], vec![w("aA")]).unwrap_err(),
            PresentationError::NotFreelyReduced(w("aA"))
        );
        assert_eq!(
            Presentation::new(vec!['a', 'b'], vec![w("abc")]).unwrap_err(),
            PresentationError::UnknownGenerator('c')
        );
    }
}
