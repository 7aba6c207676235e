use std::fmt::Write;

use super::{content_lines, syntax, FormatError};
use crate::presentation::{Presentation, Word};

/// Parses a `pres 1` document. With `symmetrize`, the relators are replaced
/// by their symmetric closure.
pub fn parse_presentation(text: &str, symmetrize: bool) -> Result<Presentation, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, "pres 1")) => {}
        Some((n, other)) => return Err(syntax(n, format!("expected `pres 1`, found `{other}`"))),
        None => return Err(syntax(1, "empty document")),
    }
    let mut gens: Option<Vec<char>> = None;
    let mut rels = Vec::new();
    for (n, line) in lines {
        let mut words = line.split_whitespace();
        match words.next() {
            Some("gens") => {
                if gens.is_some() {
                    return Err(syntax(n, "repeated `gens` line"));
                }
                let mut list = Vec::new();
                for w in words {
                    let mut cs = w.chars();
                    match (cs.next(), cs.next()) {
                        (Some(c), None) if c.is_ascii_lowercase() => list.push(c),
                        _ => return Err(syntax(n, format!("`{w}` is not a lowercase generator"))),
                    }
                }
                gens = Some(list);
            }
            Some("rel") => {
                let (Some(w), None) = (words.next(), words.next()) else {
                    return Err(syntax(n, "`rel` takes one word"));
                };
                rels.push(Word::parse(w).map_err(|e| syntax(n, e.to_string()))?);
            }
            Some(other) => return Err(syntax(n, format!("unknown line `{other}`"))),
            None => {}
        }
    }
    let gens = gens.ok_or_else(|| syntax(1, "missing `gens` line"))?;
    let p = Presentation::new(gens, rels)?;
    Ok(if symmetrize { p.symmetrized()? } else { p })
}

pub fn serialize_presentation(p: &Presentation) -> String {
    let mut out = String::from("pres 1\n");
    let gens: Vec<String> = p.generators.iter().map(|c| c.to_string()).collect();
    let _ = writeln!(out, "gens {}", gens.join(" "));
    for r in &p.relators {
        let _ = writeln!(out, "rel {r}");
    }
    out
}
