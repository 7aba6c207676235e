//! Words, symmetric closure, pieces and the V(6) / V'(6) classification.

use vkmaps::presentation::{classify_presentation, free_reduce, pieces, Presentation, Word};

fn classify(gens: &str, rels: &[&str]) {
    let p = Presentation::new(gens.chars().collect(), rels.iter().map(|r| Word::parse(r).unwrap()).collect())
        .unwrap()
        .symmetrized()
        .unwrap();
    let c = classify_presentation(&p).unwrap();
    let ps: Vec<String> = pieces(&p).unwrap().iter().map(|w| w.to_string()).collect();
    println!("<{gens} | {}>", rels.join(", "));
    println!("  {} relators after closure, pieces {{{}}}", p.relators.len(), ps.join(" "));
    println!("  V(6) {}, V'(6) {}", c.v6, c.vprime6);
    if let Some(r) = c.per_relator.first() {
        println!("  {}: at least {:?} pieces, {:?}", r.relator, r.min_pieces, r.clause);
    }
}

fn main() {
    let w = Word::parse("abBAcaA").unwrap();
    println!("free_reduce({w}) = {}", free_reduce(&w));
    classify("ab", &["abAB"]);
    classify("abc", &["abcABC"]);
    classify("ab", &["aab", "aaB"]);
    classify("a", &["aaaa"]);
}
