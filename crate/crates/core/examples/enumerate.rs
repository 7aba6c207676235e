//! Counts shellable disk maps level by level and per class.
//!
//! cargo run --release --example enumerate -- 4 4 6

use vkmaps::conditions::{classify_map, ClassFilter};
use vkmaps::verify::{enumerate_maps, is_achiral, Dedup, EnumConfig};

fn main() {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let regions = args.first().copied().unwrap_or(3);
    let range = (args.get(1).copied().unwrap_or(4), args.get(2).copied().unwrap_or(6));
    let cfg = EnumConfig::new(regions, range).with_max_boundary(16);

    let mut per_level = vec![0usize; regions + 1];
    let mut chiral = 0;
    let mut classes = [0usize; 3];
    for m in enumerate_maps(&cfg).unwrap() {
        per_level[m.num_regions()] += 1;
        chiral += !is_achiral(&m) as usize;
        let c = classify_map(&m);
        for (i, f) in [ClassFilter::ProperV6, ClassFilter::ProperC7, ClassFilter::ProperC4T4].iter().enumerate() {
            classes[i] += c.satisfies(*f) as usize;
        }
    }
    for (k, n) in per_level.iter().enumerate().skip(1) {
        println!("{k} regions: {n} maps");
    }
    println!("chiral: {chiral}");
    println!("proper V(6) {}, proper C(7) {}, proper C(4)&T(4) {}", classes[0], classes[1], classes[2]);

    let raw = enumerate_maps(&cfg.with_dedup(Dedup::Off)).unwrap().count();
    println!("without isomorphism dedup: {raw} maps");
}
