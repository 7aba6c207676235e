use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// A generator or its inverse. Generators are lowercase ASCII letters; the
/// inverse of `a` is written `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: char,
    pub inverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("'{0}' is not a letter")]
    BadLetter(char),
}

impl Letter {
    pub fn new(generator: char, inverse: bool) -> Self {
        Letter {
            generator: generator.to_ascii_lowercase(),
            inverse,
        }
    }

    pub fn from_char(c: char) -> Result<Self, WordError> {
        if !c.is_ascii_alphabetic() {
            return Err(WordError::BadLetter(c));
        }
        Ok(Letter::new(c, c.is_ascii_uppercase()))
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }

    pub fn to_char(self) -> char {
        if self.inverse {
            self.generator.to_ascii_uppercase()
        } else {
            self.generator
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A word over X^{±1}. The empty word is ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// Parses the uppercase-inverse notation; `1` or `ε` or the empty string is ε.
    pub fn parse(s: &str) -> Result<Self, WordError> {
        let s = s.trim();
        if s == "1" || s == "ε" {
            return Ok(Word::empty());
        }
        s.chars().map(Letter::from_char).collect::<Result<Vec<_>, _>>().map(Word)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Rotates left by `k` letters.
    pub fn cyclic_shift(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return self.clone();
        }
        let k = k % self.0.len();
        let mut v = self.0[k..].to_vec();
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inv())
    }

    /// Freely reduced and, for length ≥ 2, the last letter does not cancel the first.
    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_freely_reduced()
            && match (self.first(), self.last()) {
                (Some(a), Some(b)) if self.len() >= 2 => a != b.inv(),
                _ => true,
            }
    }

    pub fn generators(&self) -> impl Iterator<Item = char> + '_ {
        self.0.iter().map(|l| l.generator)
    }
}

/// The unique freely reduced form, by a single stack pass.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in w.letters() {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl std::str::FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}
