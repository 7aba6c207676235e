//! One line per acceptance criterion. Run with `cargo test --test acceptance`.
//!
//! The process fails when a criterion fails unexpectedly, or when one listed
//! in `KNOWN_FAILURES` starts passing (so the list cannot go stale).

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use vkmaps::conditions::{classify_map, find_cut_corners, is_thin, CutCornerKind};
use vkmaps::io::{parse_map, serialize_map};
use vkmaps::map::{fixtures, CombinatorialMap, Side};
use vkmaps::presentation::{
    classify_presentation, diagnose_diagram, free_reduce, min_piece_decomposition, pieces, symmetric_closure, Letter,
    Presentation, Word,
};
use vkmaps::verify::{enumerate_decompositions, enumerate_maps, run_campaign, CampaignReport, EnumConfig, Theorem};

/// Criteria that fail for reasons outside the implementation: the claim does
/// not hold for the definitions as read. See the README.
const KNOWN_FAILURES: &[(u32, &str)] = &[
    (3, "proper C(4)&T(4) maps do admit T3 and T4 cut corners"),
    (7, "GRID4 has thin decompositions when contact at a vertex counts"),
];

struct Line {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn campaign(theorem: Theorem, cfg: EnumConfig, budget: Duration) -> (CampaignReport, Duration, bool) {
    let start = Instant::now();
    let report = run_campaign(&cfg, theorem).expect("valid config");
    let took = start.elapsed();
    (report, took, took < budget)
}

fn summary(r: &CampaignReport, took: Duration) -> String {
    format!(
        "{} maps (+{} mirrors), {} decompositions, {} thin, {} counterexamples, {:.1?}",
        r.maps_in_class,
        r.mirror_images_checked,
        r.decompositions_tested,
        r.vacuous_count,
        r.counterexamples.len(),
        took
    )
}

fn main_campaign() -> Line {
    let cfg = EnumConfig::new(4, (4, 8)).with_max_boundary(16);
    let (r, took, in_time) = campaign(Theorem::Main, cfg, Duration::from_secs(300));
    Line {
        id: 1,
        title: "main theorem campaign",
        pass: r.counterexamples.is_empty() && r.maps_in_class > 0 && in_time,
        detail: summary(&r, took),
    }
}

fn c7_campaign() -> Line {
    let cfg = EnumConfig::new(3, (7, 9)).with_max_boundary(16);
    let (r, took, in_time) = campaign(Theorem::C7, cfg, Duration::from_secs(120));
    // a boundary of 16 leaves room for two heptagons at most; widen it once
    let wide = EnumConfig::new(3, (7, 9)).with_max_boundary(27);
    let (w, wide_took, _) = campaign(Theorem::C7, wide, Duration::from_secs(120));
    let clean = |r: &CampaignReport| r.counterexamples.is_empty() && r.consistency_failures.is_empty();
    Line {
        id: 2,
        title: "C(7) corollary campaign",
        pass: clean(&r) && clean(&w) && r.maps_in_class > 0 && in_time,
        detail: format!(
            "{}, {} witness mismatches; boundary up to 27: {}, {} witness mismatches",
            summary(&r, took),
            r.consistency_failures.len(),
            summary(&w, wide_took),
            w.consistency_failures.len()
        ),
    }
}

fn c4t4_campaign() -> Line {
    let cfg = EnumConfig::new(4, (4, 6)).with_max_boundary(16);
    let (r, took, in_time) = campaign(Theorem::C4T4, cfg, Duration::from_secs(180));
    let kind = |prefix: &str| {
        r.consistency_failures
            .iter()
            .filter(|f| f.reason.starts_with(prefix))
            .count()
    };
    let (t3, t4) = (kind("T3"), kind("T4"));
    let unmatched = r.consistency_failures.len() - t3 - t4;
    Line {
        id: 3,
        title: "C(4)&T(4) corollary campaign",
        pass: r.counterexamples.is_empty() && r.consistency_failures.is_empty() && r.maps_in_class > 0 && in_time,
        detail: format!(
            "{}; T3 reports {t3}, T4 reports {t4}, other side-condition failures {unmatched}",
            summary(&r, took)
        ),
    }
}

fn oracle_equivalence() -> Line {
    let mut maps: Vec<CombinatorialMap> = common::named_fixtures().into_iter().map(|(_, f)| f.map).collect();
    maps.push(fixtures::ladder(2, 7).map);
    maps.extend(common::maps_with_mirrors(&EnumConfig::new(3, (3, 8)).with_max_boundary(16)));
    let (mut checked, mut wrong) = (0usize, 0usize);
    for m in &maps {
        for d in enumerate_decompositions(m) {
            for side in [Side::Mu, Side::Sigma] {
                checked += 1;
                if find_cut_corners(m, &d, side).unwrap() != common::oracle::cut_corners(m, d.side(side), side) {
                    wrong += 1;
                }
            }
        }
    }

    let (mut words_checked, mut words_wrong) = (0usize, 0usize);
    for len in 1..=8 {
        for w in reduced_words(len) {
            let p = Presentation::new(vec!['a', 'b'], vec![w]).unwrap().symmetrized().unwrap();
            let ps = pieces(&p).unwrap();
            let closure: BTreeSet<Word> = p.relators.iter().cloned().collect();
            if ps != common::oracle::pieces(&closure) {
                words_wrong += 1;
            }
            for r in &closure {
                words_checked += 1;
                if min_piece_decomposition(r, &ps) != common::oracle::min_pieces(r, &ps) {
                    words_wrong += 1;
                }
            }
        }
    }
    Line {
        id: 4,
        title: "detector and piece decomposition match brute force",
        pass: wrong == 0 && words_wrong == 0,
        detail: format!(
            "{} maps, {checked} side paths, {wrong} cut-corner mismatches; {words_checked} relators, {words_wrong} piece mismatches",
            maps.len()
        ),
    }
}

/// Cyclically reduced words over {a, b}.
fn reduced_words(len: usize) -> Vec<Word> {
    let alphabet: Vec<Letter> = "abAB".chars().map(|c| Letter::from_char(c).unwrap()).collect();
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet
                    .iter()
                    .map(move |&l| w.concat(&Word::from_letters(vec![l])))
                    .filter(Word::is_freely_reduced)
            })
            .collect();
    }
    out.retain(Word::is_cyclically_reduced);
    out
}

fn observation_check() -> Line {
    let pres = |gens: &str, rel: &str| {
        Presentation::new(gens.chars().collect(), vec![Word::parse(rel).unwrap()]).unwrap()
    };
    let cases = [
        (pres("ab", "abAB"), EnumConfig::new(4, (4, 4)).with_max_boundary(16)),
        (pres("abc", "abcABC"), EnumConfig::new(3, (6, 6)).with_max_boundary(16)),
    ];
    let (mut reduced, mut unreduced, mut violations, mut unreduced_violations) = (0, 0, 0, 0);
    for (p, cfg) in &cases {
        assert!(classify_presentation(&p.symmetrized().unwrap()).unwrap().vprime6);
        for m in &common::maps_with_mirrors(cfg) {
            let class = classify_map(m);
            let inner_two = m.vertices().any(|v| m.is_inner_vertex(v) && m.valence(v) == 2);
            let bad = !class.is_proper_v6 || inner_two;
            for l in common::diagrams::labellings(m, p) {
                let v = diagnose_diagram(m, &l, p, None).unwrap();
                assert!(v.is_valid());
                if v.is_reduced() {
                    reduced += 1;
                    violations += bad as usize;
                } else {
                    unreduced += 1;
                    unreduced_violations += bad as usize;
                }
            }
        }
    }
    Line {
        id: 5,
        title: "reduced diagrams over V'(6) presentations are proper V(6)",
        pass: violations == 0 && reduced > 0,
        detail: format!(
            "{reduced} reduced diagrams, {violations} violations; {unreduced} unreduced diagrams skipped ({unreduced_violations} of them not proper)"
        ),
    }
}

fn structural_suite() -> Line {
    let mut failures = Vec::new();
    let cfg = EnumConfig::new(4, (3, 8)).with_max_boundary(16);
    let mut maps = 0;
    for m in enumerate_maps(&cfg).unwrap() {
        maps += 1;
        if m.euler_characteristic() != 1 {
            failures.push("euler");
        }
        for r in m.regions() {
            for &n in &m.region_profile(r).unwrap().neighbors {
                if !m.region_profile(n).unwrap().neighbors.contains(&r) {
                    failures.push("neighbors");
                }
            }
        }
        let text = serialize_map(&m, None);
        if serialize_map(&parse_map(&text).unwrap().map, None) != text {
            failures.push("round trip");
        }
    }

    let mut runner = TestRunner::new(Config {
        cases: 512,
        failure_persistence: None,
        ..Config::default()
    });
    let letter = (prop::sample::select(vec!['a', 'b', 'c']), any::<bool>()).prop_map(|(g, i)| Letter::new(g, i));
    let word = prop::collection::vec(letter, 0..10).prop_map(Word::from_letters);
    let relators = prop::collection::vec(
        word.clone()
            .prop_filter("relator", |w| !w.is_empty() && w.is_cyclically_reduced()),
        1..3,
    );
    if runner
        .run(&word, |w| {
            let r = free_reduce(&w);
            prop_assert_eq!(free_reduce(&r), r);
            Ok(())
        })
        .is_err()
    {
        failures.push("free_reduce");
    }
    if runner
        .run(&relators, |rels| {
            let once: Vec<Word> = symmetric_closure(&rels).unwrap().into_iter().collect();
            prop_assert_eq!(symmetric_closure(&once).unwrap().into_iter().collect::<Vec<_>>(), once.clone());
            let p = Presentation::new(vec!['a', 'b', 'c'], once).unwrap();
            let ps = pieces(&p).unwrap();
            for u in &ps {
                for k in 1..u.len() {
                    prop_assert!(ps.contains(&u.prefix(k)));
                }
            }
            Ok(())
        })
        .is_err()
    {
        failures.push("closure or pieces");
    }
    Line {
        id: 6,
        title: "structural suite",
        pass: failures.is_empty(),
        detail: format!("{maps} generated maps, 1024 random word cases, failures {failures:?}"),
    }
}

fn fixture_verdicts() -> Line {
    let grid = fixtures::grid4();
    let decs = enumerate_decompositions(&grid.map);
    let thin: Vec<_> = decs.iter().filter(|d| is_thin(&grid.map, d).unwrap()).collect();
    let without_t2 = decs
        .iter()
        .filter(|d| {
            ![Side::Mu, Side::Sigma].iter().any(|&s| {
                find_cut_corners(&grid.map, d, s)
                    .unwrap()
                    .iter()
                    .any(|c| c.kind == CutCornerKind::T2)
            })
        })
        .count();
    let admits_thin = |m: &CombinatorialMap| enumerate_decompositions(m).iter().any(|d| is_thin(m, d).unwrap());
    let sq1 = admits_thin(&fixtures::sq1().map);
    let lad2 = admits_thin(&fixtures::lad2().map);
    let golden = ["SQ1", "LAD2", "GRID4"]
        .iter()
        .all(|n| std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("tests/golden/{n}.json")).exists());
    Line {
        id: 7,
        title: "fixture verdicts",
        pass: thin.is_empty() && without_t2 == 0 && sq1 && lad2 && golden,
        detail: format!(
            "GRID4 thin in {} of {} decompositions, {without_t2} without a T2; SQ1 thin split {sq1}, LAD2 thin split {lad2}; golden files present {golden}",
            thin.len(),
            decs.len()
        ),
    }
}

fn main() {
    let checks: [fn() -> Line; 7] = [
        main_campaign,
        c7_campaign,
        c4t4_campaign,
        oracle_equivalence,
        observation_check,
        structural_suite,
        fixture_verdicts,
    ];
    let mut unexpected = Vec::new();
    for check in checks {
        let line = check();
        let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == line.id);
        let verdict = if line.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {:<55} {verdict}  {}", line.id, line.title, line.detail);
        match (line.pass, known) {
            (false, Some((_, why))) => println!("    known: {why}"),
            (false, None) => unexpected.push(format!("criterion {} failed", line.id)),
            (true, Some(_)) => unexpected.push(format!("criterion {} passes but is listed as known failing", line.id)),
            (true, None) => {}
        }
    }
    if !unexpected.is_empty() {
        eprintln!("{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
