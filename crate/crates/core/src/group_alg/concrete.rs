use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use serde_json::{json, Value};

use super::{EntryCodec, EntryEncode, Group};
use crate::error::{Error, Result};

const MAX_SYM_DEGREE: usize = 16;
const MAX_NESTING: usize = 16;

/// Small finite groups used as concrete carriers for exhaustive checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ConcreteGroup {
    /// Integers modulo `n` under addition.
    Cyclic(u32),
    /// Permutations of `{0, .., n-1}`, composed right to left.
    Permutation(usize),
    DirectProduct(Vec<ConcreteGroup>),
}

/// An element of a [`ConcreteGroup`]. Its shape mirrors the group's shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupElem {
    Cyclic(u32),
    Perm(Vec<u8>),
    Tuple(Vec<GroupElem>),
}

impl ConcreteGroup {
    pub fn cyclic(n: u32) -> Self {
        assert!(n >= 1, "cyclic group order must be positive");
        ConcreteGroup::Cyclic(n)
    }

    pub fn product(factors: Vec<ConcreteGroup>) -> Self {
        ConcreteGroup::DirectProduct(factors)
    }

    /// Number of elements, or `None` if it does not fit in a `u64`.
    pub fn order(&self) -> Option<u64> {
        match self {
            ConcreteGroup::Cyclic(n) => Some(u64::from(*n)),
            ConcreteGroup::Permutation(n) => {
                (1..=*n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
            }
            ConcreteGroup::DirectProduct(fs) => fs
                .iter()
                .try_fold(1u64, |acc, f| f.order().and_then(|o| acc.checked_mul(o))),
        }
    }

    /// All elements in a fixed order. Intended for small groups only.
    pub fn elements(&self) -> Vec<GroupElem> {
        match self {
            ConcreteGroup::Cyclic(n) => (0..*n).map(GroupElem::Cyclic).collect(),
            ConcreteGroup::Permutation(n) => (0..*n as u8)
                .permutations(*n)
                .map(GroupElem::Perm)
                .collect(),
            ConcreteGroup::DirectProduct(fs) if fs.is_empty() => vec![GroupElem::Tuple(Vec::new())],
            ConcreteGroup::DirectProduct(fs) => fs
                .iter()
                .map(|f| f.elements())
                .multi_cartesian_product()
                .map(GroupElem::Tuple)
                .collect(),
        }
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> GroupElem {
        match self {
            ConcreteGroup::Cyclic(n) => GroupElem::Cyclic(rng.gen_range(0..*n)),
            ConcreteGroup::Permutation(n) => {
                let mut p: Vec<u8> = (0..*n as u8).collect();
                p.shuffle(rng);
                GroupElem::Perm(p)
            }
            ConcreteGroup::DirectProduct(fs) => {
                GroupElem::Tuple(fs.iter().map(|f| f.random(rng)).collect())
            }
        }
    }

    /// Whether `x` has the right shape and range to be an element of `self`.
    pub fn contains(&self, x: &GroupElem) -> bool {
        match (self, x) {
            (ConcreteGroup::Cyclic(n), GroupElem::Cyclic(a)) => a < n,
            (ConcreteGroup::Permutation(n), GroupElem::Perm(p)) => {
                p.len() == *n && {
                    let mut seen = vec![false; *n];
                    p.iter().all(|&i| {
                        let i = i as usize;
                        i < *n && !std::mem::replace(&mut seen[i], true)
                    })
                }
            }
            (ConcreteGroup::DirectProduct(fs), GroupElem::Tuple(xs)) => {
                fs.len() == xs.len() && fs.iter().zip(xs).all(|(f, x)| f.contains(x))
            }
            _ => false,
        }
    }
}

impl Group for ConcreteGroup {
    type Elem = GroupElem;

    fn identity(&self) -> GroupElem {
        match self {
            ConcreteGroup::Cyclic(_) => GroupElem::Cyclic(0),
            ConcreteGroup::Permutation(n) => GroupElem::Perm((0..*n as u8).collect()),
            ConcreteGroup::DirectProduct(fs) => {
                GroupElem::Tuple(fs.iter().map(|f| f.identity()).collect())
            }
        }
    }

    fn mul(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        match (self, a, b) {
            (ConcreteGroup::Cyclic(n), GroupElem::Cyclic(x), GroupElem::Cyclic(y)) => {
                GroupElem::Cyclic(((u64::from(*x) + u64::from(*y)) % u64::from(*n)) as u32)
            }
            (ConcreteGroup::Permutation(_), GroupElem::Perm(p), GroupElem::Perm(q)) => {
                GroupElem::Perm(q.iter().map(|&i| p[i as usize]).collect())
            }
            (ConcreteGroup::DirectProduct(fs), GroupElem::Tuple(xs), GroupElem::Tuple(ys)) => {
                GroupElem::Tuple(
                    fs.iter()
                        .zip(xs.iter().zip(ys))
                        .map(|(f, (x, y))| f.mul(x, y))
                        .collect(),
                )
            }
            _ => panic!("element shape does not match group {self}"),
        }
    }

    fn inv(&self, a: &GroupElem) -> GroupElem {
        match (self, a) {
            (ConcreteGroup::Cyclic(n), GroupElem::Cyclic(x)) => {
                GroupElem::Cyclic(((u64::from(*n) - u64::from(*x)) % u64::from(*n)) as u32)
            }
            (ConcreteGroup::Permutation(_), GroupElem::Perm(p)) => {
                let mut out = vec![0u8; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    out[j as usize] = i as u8;
                }
                GroupElem::Perm(out)
            }
            (ConcreteGroup::DirectProduct(fs), GroupElem::Tuple(xs)) => {
                GroupElem::Tuple(fs.iter().zip(xs).map(|(f, x)| f.inv(x)).collect())
            }
            _ => panic!("element shape does not match group {self}"),
        }
    }
}

impl fmt::Display for ConcreteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConcreteGroup::Cyclic(n) => write!(f, "cyclic{n}"),
            ConcreteGroup::Permutation(n) => write!(f, "sym{n}"),
            ConcreteGroup::DirectProduct(fs) => {
                write!(f, "product({})", fs.iter().join(","))
            }
        }
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElem::Cyclic(a) => write!(f, "{a}"),
            GroupElem::Perm(p) => write!(f, "<{}>", p.iter().join(" ")),
            GroupElem::Tuple(xs) => write!(f, "({})", xs.iter().join(",")),
        }
    }
}

/// Parses `cyclicN`, `symN` (whitespace before `N` allowed) and
/// `product(A,B,...)`.
impl FromStr for ConcreteGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser {
            src: s.as_bytes(),
            pos: 0,
        };
        let g = p.group(0)?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(g)
    }
}

struct SpecParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("group spec: {what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self
            .src
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        if self.src[self.pos..].starts_with(word.as_bytes()) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.error("expected a number"))
    }

    fn group(&mut self, depth: usize) -> Result<ConcreteGroup> {
        if depth > MAX_NESTING {
            return Err(self.error("nesting too deep"));
        }
        self.skip_ws();
        if self.keyword("cyclic") {
            let n = self.number()?;
            if n == 0 || n > u64::from(u32::MAX) {
                return Err(self.error("cyclic order must be in 1..=2^32-1"));
            }
            Ok(ConcreteGroup::Cyclic(n as u32))
        } else if self.keyword("sym") {
            let n = self.number()?;
            if n == 0 || n as usize > MAX_SYM_DEGREE {
                return Err(self.error("symmetric degree must be in 1..=16"));
            }
            Ok(ConcreteGroup::Permutation(n as usize))
        } else if self.keyword("product") {
            self.expect(b'(')?;
            let mut factors = vec![self.group(depth + 1)?];
            loop {
                self.skip_ws();
                match self.src.get(self.pos) {
                    Some(b',') => {
                        self.pos += 1;
                        factors.push(self.group(depth + 1)?);
                    }
                    Some(b')') => {
                        self.pos += 1;
                        return Ok(ConcreteGroup::DirectProduct(factors));
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        } else {
            Err(self.error("expected cyclic, sym or product"))
        }
    }
}

impl EntryEncode for ConcreteGroup {
    fn encode(&self, x: &GroupElem) -> Value {
        match x {
            GroupElem::Cyclic(a) => json!(a),
            GroupElem::Perm(p) => json!(p),
            GroupElem::Tuple(xs) => Value::Array(xs.iter().map(|x| self.encode(x)).collect()),
        }
    }
}

impl EntryCodec for ConcreteGroup {
    fn decode(&self, v: &Value) -> Result<GroupElem> {
        let bad = || Error::Parse(format!("value {v} is not an element of {self}"));
        let x = match (self, v) {
            (ConcreteGroup::Cyclic(_), Value::Number(n)) => {
                let a = n.as_u64().ok_or_else(bad)?;
                GroupElem::Cyclic(u32::try_from(a).map_err(|_| bad())?)
            }
            (ConcreteGroup::Permutation(_), Value::Array(items)) => GroupElem::Perm(
                items
                    .iter()
                    .map(|i| {
                        i.as_u64()
                            .and_then(|i| u8::try_from(i).ok())
                            .ok_or_else(bad)
                    })
                    .collect::<Result<_>>()?,
            ),
            (ConcreteGroup::DirectProduct(fs), Value::Array(items)) if fs.len() == items.len() => {
                GroupElem::Tuple(
                    fs.iter()
                        .zip(items)
                        .map(|(f, i)| f.decode(i))
                        .collect::<Result<_>>()?,
                )
            }
            _ => return Err(bad()),
        };
        if self.contains(&x) {
            Ok(x)
        } else {
            Err(bad())
        }
    }
}
