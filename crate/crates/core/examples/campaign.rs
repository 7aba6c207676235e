//! Runs one theorem campaign and prints the report summary.
//!
//! cargo run --release --example campaign -- main 4 4 8
//!
//! THIN=edge or THIN=rungs swaps in an edge-contact thinness reading.

use std::time::Instant;

use vkmaps::conditions::ThinnessReading;
use vkmaps::verify::{run_campaign_with, EnumConfig, Theorem};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let theorem = match args.first().map(String::as_str) {
        Some("c7") => Theorem::C7,
        Some("c4t4") => Theorem::C4T4,
        _ => Theorem::Main,
    };
    let num = |i: usize, default: usize| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default);
    let cfg = EnumConfig::new(num(1, 4), (num(2, 4), num(3, 8))).with_max_boundary(num(4, 16));

    let start = Instant::now();
    let reading = match std::env::var("THIN").as_deref() {
        Ok("edge") => ThinnessReading::Edge,
        Ok("rungs") => ThinnessReading::EdgeWithRungs,
        _ => ThinnessReading::Vertex,
    };
    let report = run_campaign_with(&cfg, theorem, reading).expect("valid config");
    println!("theorem            {:?}", report.theorem);
    println!("maps generated     {}", report.maps_generated);
    println!("maps in class      {}", report.maps_in_class);
    println!("mirror images      {}", report.mirror_images_checked);
    println!("decompositions     {}", report.decompositions_tested);
    println!("pass               {}", report.pass_count);
    println!("vacuous (thin)     {}", report.vacuous_count);
    println!("counterexamples    {}", report.counterexamples.len());
    println!("side-condition failures {}", report.consistency_failures.len());
    for c in report.counterexamples.iter().take(3) {
        println!("--- counterexample base {} xi {} mu {} tau {}\n{}", c.base, c.xi, c.mu, c.tau, c.map);
    }
    let mut reasons = std::collections::BTreeMap::new();
    for f in &report.consistency_failures {
        let key = f.reason.split(" at ").next().unwrap_or(&f.reason).to_string();
        *reasons.entry(key).or_insert(0usize) += 1;
    }
    for (reason, n) in &reasons {
        println!("  {n:>8}  {reason}");
    }
    for f in report.consistency_failures.iter().take(5) {
        let r = &f.reproduction;
        println!("--- {} (base {} xi {} mu {} tau {})\n{}", f.reason, r.base, r.xi, r.mu, r.tau, r.map);
    }
    println!("elapsed            {:.1?}", start.elapsed());
}
