//! Words in the Artin generators.
//!
//! Letters are stored 0-based. The text form is 1-based and
//! whitespace-separated, with `-k` for `s_k⁻¹`: `"1 2 -1"`.

use std::fmt;

use crate::error::{Error, Result};

/// A word in `s_1, …, s_n`, i.e. an element of the positive monoid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveWord(pub Vec<usize>);

/// A single letter `s_gen` or `s_gen⁻¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedWord(pub Vec<Letter>);

fn parse_letters(text: &str, rank: usize) -> Result<Vec<i64>> {
    text.split_whitespace()
        .map(|tok| {
            let v: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad letter {tok:?}")))?;
            if v == 0 || v.unsigned_abs() as usize > rank {
                return Err(Error::InvalidLetter { letter: v, rank });
            }
            Ok(v)
        })
        .collect()
}

impl PositiveWord {
    pub fn new(letters: Vec<usize>) -> Self {
        PositiveWord(letters)
    }

    pub fn empty() -> Self {
        PositiveWord(Vec::new())
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let letters = parse_letters(text, rank)?;
        if let Some(&v) = letters.iter().find(|&&v| v < 0) {
            return Err(Error::NegativeLetter { letter: v });
        }
        Ok(PositiveWord(letters.into_iter().map(|v| v as usize - 1).collect()))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &PositiveWord) -> Self {
        PositiveWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn to_signed(&self) -> SignedWord {
        SignedWord(self.0.iter().map(|&g| Letter::pos(g)).collect())
    }
}

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let letters = parse_letters(text, rank)?;
        Ok(SignedWord(
            letters
                .into_iter()
                .map(|v| Letter { gen: v.unsigned_abs() as usize - 1, inverse: v < 0 })
                .collect(),
        ))
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

    pub fn concat(&self, other: &SignedWord) -> Self {
        SignedWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> Self {
        SignedWord(self.0.iter().rev().map(|l| l.inverted()).collect())
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| (g + 1).to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|l| format!("{}{}", if l.inverse { "-" } else { "" }, l.gen + 1)).collect();
        f.write_str(&parts.join(" "))
    }
}
