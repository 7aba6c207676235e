use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_decompositions, enumerate_maps, is_achiral, mirror_map};
use super::{ConfigInvalid, EnumConfig, VerifyError};
use crate::conditions::{
    c7_witnesses, classify_map, cut_corners_on_path, ClassFilter, CutCornerKind, CutCornerReport, ThickConfigReport,
    ThickKind, ThinnessReading,
};
use crate::conditions::thin_unchecked;
use crate::conditions::thick_on_path;
use crate::io::{paired_numbering, parse_map, serialize_map, FormatError};
use crate::map::{BoundaryDecomposition, CombinatorialMap, Dart, RegionId, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    /// Non-thin proper V(6) maps have a cut corner on μ or σ.
    Main,
    /// Non-thin proper C(7) maps have a proper boundary region with at most
    /// three neighbors whose outer boundary lies in μ or σ.
    C7,
    /// Non-thin proper C(4)&T(4) maps have a thick configuration on μ or σ.
    C4T4,
}

impl Theorem {
    pub fn class(self) -> ClassFilter {
        match self {
            Theorem::Main => ClassFilter::ProperV6,
            Theorem::C7 => ClassFilter::ProperC7,
            Theorem::C4T4 => ClassFilter::ProperC4T4,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Pass,
    VacuousThin,
    Counterexample,
}

/// Everything needed to replay one (map, decomposition) check.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Reproduction {
    pub theorem: Theorem,
    /// The map in `kmap 1` format.
    pub map: String,
    /// Base dart, numbered as in `map`.
    pub base: usize,
    pub xi: usize,
    pub mu: usize,
    pub tau: usize,
}

impl Reproduction {
    pub fn new(theorem: Theorem, map: &CombinatorialMap, d: &BoundaryDecomposition) -> Self {
        let (xi, mu, tau, _) = d.lengths();
        Reproduction {
            theorem,
            map: serialize_map(map, None),
            base: paired_numbering(map)[d.base().0] + 1,
            xi,
            mu,
            tau,
        }
    }

    pub fn load(&self) -> Result<(CombinatorialMap, BoundaryDecomposition), FormatError> {
        let map = parse_map(&self.map)?.map;
        let d = BoundaryDecomposition::from_lengths(&map, Dart(self.base - 1), self.xi, self.mu, self.tau)
            .map_err(|e| FormatError::Syntax {
                line: 0,
                message: e.to_string(),
            })?;
        Ok((map, d))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// Cut corners on either side (main theorem).
    pub cut_corners: Vec<CutCornerReport>,
    /// Regions with at most three neighbors (C(7) corollary).
    pub witnesses: Vec<RegionId>,
    /// Thick configurations, μ side first (C(4)&T(4) corollary).
    pub thick: Vec<(Side, ThickConfigReport)>,
    pub reproduction: Option<Reproduction>,
}

pub fn verify_main_theorem(map: &CombinatorialMap, d: &BoundaryDecomposition) -> Result<Verdict, VerifyError> {
    verify(map, d, Theorem::Main)
}

pub fn verify_c7_corollary(map: &CombinatorialMap, d: &BoundaryDecomposition) -> Result<Verdict, VerifyError> {
    verify(map, d, Theorem::C7)
}

pub fn verify_c4t4_corollary(map: &CombinatorialMap, d: &BoundaryDecomposition) -> Result<Verdict, VerifyError> {
    verify(map, d, Theorem::C4T4)
}

/// Checks one decomposition of a map in the theorem's class.
pub fn verify(map: &CombinatorialMap, d: &BoundaryDecomposition, theorem: Theorem) -> Result<Verdict, VerifyError> {
    let class = theorem.class();
    if !classify_map(map).satisfies(class) {
        return Err(VerifyError::NotInClass { theorem, class });
    }
    d.check(map).map_err(crate::conditions::ConditionError::from)?;
    Ok(evaluate(map, d, theorem, ThinnessReading::default()))
}

fn both_sides(map: &CombinatorialMap, d: &BoundaryDecomposition) -> Vec<CutCornerReport> {
    let mut out = cut_corners_on_path(map, &d.mu, Side::Mu);
    out.extend(cut_corners_on_path(map, &d.sigma, Side::Sigma));
    out
}

fn thick_both(map: &CombinatorialMap, d: &BoundaryDecomposition) -> Vec<(Side, ThickConfigReport)> {
    let mut out: Vec<_> = thick_on_path(map, &d.mu).into_iter().map(|t| (Side::Mu, t)).collect();
    out.extend(thick_on_path(map, &d.sigma).into_iter().map(|t| (Side::Sigma, t)));
    out
}

/// Verdict for a decomposition already known to be valid, on a map in class.
fn evaluate(map: &CombinatorialMap, d: &BoundaryDecomposition, theorem: Theorem, reading: ThinnessReading) -> Verdict {
    let mut v = Verdict {
        status: VerdictStatus::VacuousThin,
        cut_corners: Vec::new(),
        witnesses: Vec::new(),
        thick: Vec::new(),
        reproduction: None,
    };
    if thin_unchecked(map, d, reading) {
        return v;
    }
    let found = match theorem {
        Theorem::Main => {
            v.cut_corners = both_sides(map, d);
            !v.cut_corners.is_empty()
        }
        Theorem::C7 => {
            v.witnesses = c7_witnesses(map, d).expect("valid decomposition");
            !v.witnesses.is_empty()
        }
        Theorem::C4T4 => {
            v.thick = thick_both(map, d);
            !v.thick.is_empty()
        }
    };
    if found {
        v.status = VerdictStatus::Pass;
    } else {
        v.status = VerdictStatus::Counterexample;
        v.reproduction = Some(Reproduction::new(theorem, map, d));
    }
    v
}

/// A side condition that failed even though the theorem itself held.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ConsistencyFailure {
    pub reason: String,
    pub reproduction: Reproduction,
}

/// Side conditions checked on every decomposition of a corollary campaign:
///
/// * C(7): every cut corner is T1 with s ≤ 3 and is a witness; every witness
///   has at most three neighbors and is a T1 cut corner.
/// * C(4)&T(4): every cut corner is T1 or T2 and matches a thick
///   configuration on the same side (T1 a single region, T2 a pair ending
///   in that region).
/// * Both: a non-thin decomposition also passes the main theorem.
fn side_conditions(
    map: &CombinatorialMap,
    d: &BoundaryDecomposition,
    theorem: Theorem,
    reading: ThinnessReading,
) -> Vec<String> {
    let mut bad = Vec::new();
    if theorem == Theorem::Main {
        return bad;
    }
    let corners = both_sides(map, d);
    let thin = thin_unchecked(map, d, reading);
    if !thin && corners.is_empty() {
        bad.push("non-thin but no cut corner".to_string());
    }
    match theorem {
        Theorem::C7 => {
            let witnesses = c7_witnesses(map, d).expect("valid decomposition");
            for c in &corners {
                if c.kind != CutCornerKind::T1 || c.s > 3 {
                    bad.push(format!("{:?} cut corner at {} with s = {}", c.kind, c.region, c.s));
                }
                if witnesses.binary_search(&c.region).is_err() {
                    bad.push(format!("cut corner {} is not a witness", c.region));
                }
            }
            for &w in &witnesses {
                let nb = map.region_profile(w).map(|p| p.neighbors.len()).unwrap_or(usize::MAX);
                if nb > 3 {
                    bad.push(format!("witness {w} has {nb} neighbors"));
                }
                if !corners.iter().any(|c| c.region == w && c.kind == CutCornerKind::T1) {
                    bad.push(format!("witness {w} is not a T1 cut corner"));
                }
            }
        }
        Theorem::C4T4 => {
            let thick = thick_both(map, d);
            for c in &corners {
                let wanted = match c.kind {
                    CutCornerKind::T1 => ThickKind::SingleRegion,
                    CutCornerKind::T2 => ThickKind::TwoRegion,
                    other => {
                        bad.push(format!("{other:?} cut corner at {}", c.region));
                        continue;
                    }
                };
                let matched = thick
                    .iter()
                    .any(|(side, t)| *side == c.side && t.kind == wanted && t.regions.last() == Some(&c.region));
                if !matched {
                    bad.push(format!("{:?} cut corner at {} has no thick configuration", c.kind, c.region));
                }
            }
        }
        Theorem::Main => {}
    }
    bad
}

/// Aggregate results of a campaign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CampaignReport {
    pub theorem: Theorem,
    pub config: EnumConfig,
    /// Shelled maps that survived pruning and the boundary bound.
    pub maps_generated: usize,
    pub maps_in_class: usize,
    /// Maps not isomorphic to their mirror image, whose mirror was also checked.
    pub mirror_images_checked: usize,
    pub decompositions_tested: usize,
    pub pass_count: usize,
    pub vacuous_count: usize,
    pub counterexamples: Vec<Reproduction>,
    pub consistency_failures: Vec<ConsistencyFailure>,
}

#[derive(Default)]
struct Tally {
    maps: usize,
    mirrors: usize,
    tested: usize,
    pass: usize,
    vacuous: usize,
    counterexamples: Vec<Reproduction>,
    failures: Vec<ConsistencyFailure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.maps += other.maps;
        self.mirrors += other.mirrors;
        self.tested += other.tested;
        self.pass += other.pass;
        self.vacuous += other.vacuous;
        self.counterexamples.extend(other.counterexamples);
        self.failures.extend(other.failures);
        self
    }

    fn check(&mut self, map: &CombinatorialMap, theorem: Theorem, reading: ThinnessReading) {
        for d in enumerate_decompositions(map) {
            let v = evaluate(map, &d, theorem, reading);
            self.tested += 1;
            match v.status {
                VerdictStatus::Pass => self.pass += 1,
                VerdictStatus::VacuousThin => self.vacuous += 1,
                VerdictStatus::Counterexample => self.counterexamples.extend(v.reproduction),
            }
            for reason in side_conditions(map, &d, theorem, reading) {
                self.failures.push(ConsistencyFailure {
                    reason,
                    reproduction: Reproduction::new(theorem, map, &d),
                });
            }
        }
    }
}

/// Runs `theorem` over every map of the theorem's class that `cfg` generates
/// and every decomposition of it. `cfg.class_filter` is replaced by the
/// theorem's class. Maps are checked together with their mirror images.
pub fn run_campaign(cfg: &EnumConfig, theorem: Theorem) -> Result<CampaignReport, ConfigInvalid> {
    run_campaign_with(cfg, theorem, ThinnessReading::default())
}

/// [`run_campaign`] under an alternative reading of thinness.
pub fn run_campaign_with(
    cfg: &EnumConfig,
    theorem: Theorem,
    reading: ThinnessReading,
) -> Result<CampaignReport, ConfigInvalid> {
    let cfg = cfg.with_filter(theorem.class());
    let mut stream = enumerate_maps(&cfg)?;
    let tally = stream
        .by_ref()
        .par_bridge()
        .map(|map| {
            let mut t = Tally {
                maps: 1,
                ..Tally::default()
            };
            t.check(&map, theorem, reading);
            if !is_achiral(&map) {
                t.mirrors += 1;
                t.check(&mirror_map(&map), theorem, reading);
            }
            t
        })
        .reduce(Tally::default, Tally::merge);
    let mut counterexamples = tally.counterexamples;
    counterexamples.sort();
    let mut consistency_failures = tally.failures;
    consistency_failures.sort();
    Ok(CampaignReport {
        theorem,
        config: cfg,
        maps_generated: stream.generated(),
        maps_in_class: tally.maps,
        mirror_images_checked: tally.mirrors,
        decompositions_tested: tally.tested,
        pass_count: tally.pass,
        vacuous_count: tally.vacuous,
        counterexamples,
        consistency_failures,
    })
}
