use std::fmt;

use serde_json::{json, Value};

use super::{EntryCodec, EntryEncode, Group};
use crate::error::{Error, Result};

/// The free group on generators `g1, .., g_rank`.
///
/// Free-symbol simplices take distinct generators as entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FreeGroup {
    pub rank: usize,
}

/// A freely reduced word. Letter `i > 0` is `g_i`, letter `-i` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FreeWord(Vec<i32>);

impl FreeWord {
    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    /// Reduces an arbitrary letter sequence. Zero letters are rejected.
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Result<Self> {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            if l == 0 {
                return Err(Error::Parse("free group letter 0".into()));
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord(out))
    }
}

fn push_reduced(word: &mut Vec<i32>, letter: i32) {
    if word.last() == Some(&-letter) {
        word.pop();
    } else {
        word.push(letter);
    }
}

impl FreeGroup {
    pub fn new(rank: usize) -> Self {
        FreeGroup { rank }
    }

    /// The generator `g_i`, with `i` starting at 1.
    pub fn generator(&self, i: usize) -> FreeWord {
        assert!(i >= 1 && i <= self.rank, "generator index {i} out of range");
        FreeWord(vec![i as i32])
    }

    pub fn generators(&self) -> Vec<FreeWord> {
        (1..=self.rank).map(|i| self.generator(i)).collect()
    }
}

impl Group for FreeGroup {
    type Elem = FreeWord;

    fn identity(&self) -> FreeWord {
        FreeWord::default()
    }

    fn mul(&self, a: &FreeWord, b: &FreeWord) -> FreeWord {
        let mut out = a.0.clone();
        for &l in &b.0 {
            push_reduced(&mut out, l);
        }
        FreeWord(out)
    }

    fn inv(&self, a: &FreeWord) -> FreeWord {
        FreeWord(a.0.iter().rev().map(|l| -l).collect())
    }

    fn is_identity(&self, a: &FreeWord) -> bool {
        a.0.is_empty()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if *l > 0 {
                write!(f, "g{l}")?;
            } else {
                write!(f, "g{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

impl EntryEncode for FreeGroup {
    fn encode(&self, x: &FreeWord) -> Value {
        json!(x.0)
    }
}

impl EntryCodec for FreeGroup {
    fn decode(&self, v: &Value) -> Result<FreeWord> {
        let bad = || {
            Error::Parse(format!(
                "value {v} is not a word in the free group of rank {}",
                self.rank
            ))
        };
        let items = v.as_array().ok_or_else(bad)?;
        let letters = items
            .iter()
            .map(|i| {
                i.as_i64()
                    .filter(|&l| l != 0 && l.unsigned_abs() <= self.rank as u64)
                    .map(|l| l as i32)
                    .ok_or_else(bad)
            })
            .collect::<Result<Vec<_>>>()?;
        FreeWord::from_letters(letters)
    }
}
