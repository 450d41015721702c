//! Words and normal forms in iterated mitosis groups.
//!
//! The level-`n` mitosis group is generated by the level-`(n-1)` group
//! together with letters `u_n` and `t_n`, subject to `a^{t_n} = a·a^{u_n}`
//! and `[a^{u_n}, b] = 1` for `a, b` of the previous level. Two models live
//! here:
//!
//! * [`MitosisWord`]: reduced words over `gen(x)`, `u_k`, `t_k`. Equality is
//!   syntactic after free reduction and generator merging.
//! * [`MitosisElem`]: a leveled normal form for the elements that occur in
//!   the tower homotopy, closed under the adjacent products its faces need.

use std::fmt;

use serde_json::{json, Map, Value};

use super::{non_normalizable, Algebra, EntryCodec, EntryEncode, Group};
use crate::error::{Error, Result};

/// One letter of a mitosis word. Generator letters carry a base-group
/// element; `u_k` and `t_k` carry their level and an inversion flag.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MitosisLetter<E> {
    Gen(E),
    U { level: usize, inv: bool },
    T { level: usize, inv: bool },
}

impl<E> MitosisLetter<E> {
    fn cancels(&self, other: &Self) -> bool {
        match (self, other) {
            (MitosisLetter::U { level: a, inv: x }, MitosisLetter::U { level: b, inv: y })
            | (MitosisLetter::T { level: a, inv: x }, MitosisLetter::T { level: b, inv: y }) => {
                a == b && x != y
            }
            _ => false,
        }
    }
}

/// A word in the mitosis alphabet. Constructed values are kept reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MitosisWord<E>(Vec<MitosisLetter<E>>);

impl<E> MitosisWord<E> {
    pub fn letters(&self) -> &[MitosisLetter<E>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Wraps a letter sequence without reducing it.
    pub fn raw(letters: Vec<MitosisLetter<E>>) -> Self {
        MitosisWord(letters)
    }
}

/// Free reduction plus generator merging: `gen(x)·gen(y) → gen(x·y)`,
/// identity generators vanish and `u_k·ū_k`, `t_k·t̄_k` cancel.
pub fn mitosis_reduce<G: Group>(base: &G, w: MitosisWord<G::Elem>) -> MitosisWord<G::Elem> {
    let mut out: Vec<MitosisLetter<G::Elem>> = Vec::with_capacity(w.0.len());
    for letter in w.0 {
        push_letter(base, &mut out, letter);
    }
    MitosisWord(out)
}

fn push_letter<G: Group>(
    base: &G,
    out: &mut Vec<MitosisLetter<G::Elem>>,
    letter: MitosisLetter<G::Elem>,
) {
    match (out.last_mut(), letter) {
        (_, MitosisLetter::Gen(x)) if base.is_identity(&x) => {}
        (Some(MitosisLetter::Gen(y)), MitosisLetter::Gen(x)) => {
            let xy = base.mul(y, &x);
            if base.is_identity(&xy) {
                out.pop();
            } else {
                *y = xy;
            }
        }
        (Some(top), letter) if top.cancels(&letter) => {
            out.pop();
        }
        (_, letter) => out.push(letter),
    }
}

/// The free word algebra: products concatenate and reduce.
#[derive(Debug, Clone)]
pub struct WordAlgebra<G> {
    pub base: G,
    pub max_level: usize,
}

impl<G: Group> WordAlgebra<G> {
    pub fn new(base: G, max_level: usize) -> Self {
        WordAlgebra { base, max_level }
    }

    pub fn gen(&self, x: &G::Elem) -> MitosisWord<G::Elem> {
        mitosis_reduce(&self.base, MitosisWord(vec![MitosisLetter::Gen(x.clone())]))
    }

    pub fn u(&self, level: usize, inv: bool) -> MitosisWord<G::Elem> {
        MitosisWord(vec![MitosisLetter::U { level, inv }])
    }

    pub fn t(&self, level: usize, inv: bool) -> MitosisWord<G::Elem> {
        MitosisWord(vec![MitosisLetter::T { level, inv }])
    }

    pub fn concat<'a, I>(&self, words: I) -> MitosisWord<G::Elem>
    where
        I: IntoIterator<Item = &'a MitosisWord<G::Elem>>,
        G::Elem: 'a,
    {
        let mut out = Vec::new();
        for w in words {
            for l in &w.0 {
                push_letter(&self.base, &mut out, l.clone());
            }
        }
        MitosisWord(out)
    }

    pub fn inverse(&self, w: &MitosisWord<G::Elem>) -> MitosisWord<G::Elem> {
        let letters =
            w.0.iter()
                .rev()
                .map(|l| match l {
                    MitosisLetter::Gen(x) => MitosisLetter::Gen(self.base.inv(x)),
                    MitosisLetter::U { level, inv } => MitosisLetter::U {
                        level: *level,
                        inv: !inv,
                    },
                    MitosisLetter::T { level, inv } => MitosisLetter::T {
                        level: *level,
                        inv: !inv,
                    },
                })
                .collect();
        mitosis_reduce(&self.base, MitosisWord(letters))
    }
}

impl<G: Group> Algebra for WordAlgebra<G> {
    type Elem = MitosisWord<G::Elem>;

    fn one(&self) -> Self::Elem {
        MitosisWord(Vec::new())
    }

    fn try_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.concat([a, b]))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        a.0.is_empty()
    }
}

impl<G: Group + EntryEncode<Elem = <G as Group>::Elem>> EntryEncode for WordAlgebra<G> {
    fn encode(&self, w: &MitosisWord<<G as Group>::Elem>) -> Value {
        encode_word(&self.base, w)
    }
}

fn encode_word<G: EntryEncode>(base: &G, w: &MitosisWord<G::Elem>) -> Value {
    Value::Array(
        w.0.iter()
            .map(|l| match l {
                MitosisLetter::Gen(x) => {
                    json!({"letter": "gen", "level": 0, "arg": base.encode(x), "inv": false})
                }
                MitosisLetter::U { level, inv } => {
                    json!({"letter": "u", "level": level, "inv": inv})
                }
                MitosisLetter::T { level, inv } => {
                    json!({"letter": "t", "level": level, "inv": inv})
                }
            })
            .collect(),
    )
}

impl<G: Group + EntryCodec<Elem = <G as Group>::Elem>> EntryCodec for WordAlgebra<G> {
    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Parse(format!("mitosis word must be an array, got {v}")))?;
        let mut out = Vec::with_capacity(items.len());
        for item in items {
            let letter = self.decode_letter(item)?;
            push_letter(&self.base, &mut out, letter);
        }
        Ok(MitosisWord(out))
    }
}

impl<G: Group + EntryCodec<Elem = <G as Group>::Elem>> WordAlgebra<G> {
    fn decode_letter(&self, item: &Value) -> Result<MitosisLetter<<G as Group>::Elem>> {
        let bad = |why: &str| Error::Parse(format!("mitosis letter {item}: {why}"));
        let obj: &Map<String, Value> = item.as_object().ok_or_else(|| bad("not an object"))?;
        let inv = match obj.get("inv") {
            None => false,
            Some(v) => v.as_bool().ok_or_else(|| bad("inv must be a boolean"))?,
        };
        let level = match obj.get("level") {
            None => None,
            Some(v) => Some(
                v.as_u64()
                    .ok_or_else(|| bad("level must be a nonnegative integer"))?,
            ),
        };
        let kind = obj
            .get("letter")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("missing letter"))?;
        match kind {
            "gen" => {
                if level.unwrap_or(0) != 0 {
                    return Err(bad("generator letters live at level 0"));
                }
                let x = self
                    .base
                    .decode(obj.get("arg").ok_or_else(|| bad("missing arg"))?)?;
                Ok(MitosisLetter::Gen(if inv { self.base.inv(&x) } else { x }))
            }
            "u" | "t" => {
                let level = level.ok_or_else(|| bad("missing level"))?;
                if level == 0 || level > self.max_level as u64 {
                    return Err(bad("level out of range"));
                }
                let level = level as usize;
                Ok(if kind == "u" {
                    MitosisLetter::U { level, inv }
                } else {
                    MitosisLetter::T { level, inv }
                })
            }
            _ => Err(bad("unknown letter")),
        }
    }
}

impl<E: fmt::Display> fmt::Display for MitosisWord<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match l {
                MitosisLetter::Gen(x) => write!(f, "[{x}]")?,
                MitosisLetter::U { level, inv } => {
                    write!(f, "u{level}{}", if *inv { "'" } else { "" })?
                }
                MitosisLetter::T { level, inv } => {
                    write!(f, "t{level}{}", if *inv { "'" } else { "" })?
                }
            }
        }
        Ok(())
    }
}

/// Leveled normal form `F_n(a) · [M_n(c)] · x` of a level-`n` element.
///
/// Here `F_n(a) = a^{ū_n} = ū_n·a·u_n` is conjugation of a base element,
/// `M_n(c) = F_n(c̄)·l_n·F_n(c)` with `l_n = t̄_n^{ū_n}` is the pillar
/// element and `x` is an element of a strictly lower level.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MitosisElem<E> {
    Base(E),
    Layer(Box<Layer<E>>),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Layer<E> {
    level: usize,
    f: E,
    m: Option<E>,
    rest: MitosisElem<E>,
}

impl<E> MitosisElem<E> {
    pub fn level(&self) -> usize {
        match self {
            MitosisElem::Base(_) => 0,
            MitosisElem::Layer(l) => l.level,
        }
    }
}

#[derive(Debug, Clone)]
enum Piece<E> {
    F(E),
    M(E),
    X(MitosisElem<E>),
}

impl<E> Piece<E> {
    fn rank(&self) -> u8 {
        match self {
            Piece::F(_) => 0,
            Piece::M(_) => 1,
            Piece::X(_) => 2,
        }
    }
}

/// Normal-form arithmetic in the mitosis tower over a base group.
///
/// Products are computed with the rewrite rules
/// `F(a)F(b) = F(ab)`, `x·F(d) = F(d)·x` for lower-level `x`,
/// `M(c)F(d) = F(d)M(cd)` and `M(c)·a = M(ā·c)` for base elements `a`.
/// Any other out-of-order pair is reported as non-normalizable.
#[derive(Debug, Clone)]
pub struct MitosisAlgebra<G> {
    pub base: G,
}

impl<G: Group> MitosisAlgebra<G> {
    pub fn new(base: G) -> Self {
        MitosisAlgebra { base }
    }

    pub fn embed(&self, x: &G::Elem) -> MitosisElem<G::Elem> {
        MitosisElem::Base(x.clone())
    }

    /// `F_n(x) = x^{ū_n}`.
    pub fn conj_u(&self, level: usize, x: &G::Elem) -> MitosisElem<G::Elem> {
        self.assemble(level, vec![Piece::F(x.clone())])
    }

    /// `M_n(x) = F_n(x̄)·l_n·F_n(x)`.
    pub fn pillar(&self, level: usize, x: &G::Elem) -> MitosisElem<G::Elem> {
        self.assemble(level, vec![Piece::M(x.clone())])
    }

    /// `l_n = t̄_n^{ū_n} = M_n(e)`.
    pub fn ell(&self, level: usize) -> MitosisElem<G::Elem> {
        self.pillar(level, &self.base.identity())
    }

    fn pieces(&self, x: &MitosisElem<G::Elem>, level: usize) -> Vec<Piece<G::Elem>> {
        match x {
            MitosisElem::Layer(l) if l.level == level => {
                let mut out = Vec::with_capacity(3);
                if !self.base.is_identity(&l.f) {
                    out.push(Piece::F(l.f.clone()));
                }
                if let Some(c) = &l.m {
                    out.push(Piece::M(c.clone()));
                }
                if !self.is_one(&l.rest) {
                    out.push(Piece::X(l.rest.clone()));
                }
                out
            }
            x if self.is_one(x) => Vec::new(),
            x => vec![Piece::X(x.clone())],
        }
    }

    fn assemble(&self, level: usize, pieces: Vec<Piece<G::Elem>>) -> MitosisElem<G::Elem> {
        let mut f = None;
        let mut m = None;
        let mut rest = None;
        for p in pieces {
            match p {
                Piece::F(a) => f = Some(a),
                Piece::M(c) => m = Some(c),
                Piece::X(x) => rest = Some(x),
            }
        }
        let f = f.filter(|a| !self.base.is_identity(a));
        if f.is_none() && m.is_none() {
            return rest.unwrap_or_else(|| self.one());
        }
        MitosisElem::Layer(Box::new(Layer {
            level,
            f: f.unwrap_or_else(|| self.base.identity()),
            m,
            rest: rest.unwrap_or_else(|| self.one()),
        }))
    }

    fn normalize(&self, level: usize, mut w: Vec<Piece<G::Elem>>) -> Result<MitosisElem<G::Elem>> {
        let base = &self.base;
        'scan: loop {
            for i in 0..w.len().saturating_sub(1) {
                let replacement = match (&w[i], &w[i + 1]) {
                    (Piece::F(a), Piece::F(b)) => {
                        let ab = base.mul(a, b);
                        if base.is_identity(&ab) {
                            vec![]
                        } else {
                            vec![Piece::F(ab)]
                        }
                    }
                    (Piece::X(x), Piece::X(y)) => {
                        let xy = self.try_mul(x, y)?;
                        if self.is_one(&xy) {
                            vec![]
                        } else {
                            vec![Piece::X(xy)]
                        }
                    }
                    (Piece::X(x), Piece::F(d)) => vec![Piece::F(d.clone()), Piece::X(x.clone())],
                    (Piece::M(c), Piece::F(d)) => {
                        vec![Piece::F(d.clone()), Piece::M(base.mul(c, d))]
                    }
                    (Piece::M(c), Piece::X(MitosisElem::Base(a))) => {
                        vec![Piece::M(base.mul(&base.inv(a), c))]
                    }
                    (a, b) if a.rank() < b.rank() => continue,
                    (a, b) => return Err(non_normalizable(a, b)),
                };
                w.splice(i..i + 2, replacement);
                continue 'scan;
            }
            break;
        }
        Ok(self.assemble(level, w))
    }

    /// Flattens a normal form to its reduced mitosis word.
    pub fn to_word(&self, x: &MitosisElem<G::Elem>) -> MitosisWord<G::Elem> {
        let mut out = Vec::new();
        self.push_word(x, &mut out);
        MitosisWord(out)
    }

    fn push_word(&self, x: &MitosisElem<G::Elem>, out: &mut Vec<MitosisLetter<G::Elem>>) {
        let base = &self.base;
        let push = |out: &mut Vec<_>, l| push_letter(base, out, l);
        match x {
            MitosisElem::Base(a) => push(out, MitosisLetter::Gen(a.clone())),
            MitosisElem::Layer(l) => {
                let n = l.level;
                push(
                    out,
                    MitosisLetter::U {
                        level: n,
                        inv: true,
                    },
                );
                push(out, MitosisLetter::Gen(l.f.clone()));
                if let Some(c) = &l.m {
                    push(out, MitosisLetter::Gen(base.inv(c)));
                    push(
                        out,
                        MitosisLetter::T {
                            level: n,
                            inv: true,
                        },
                    );
                    push(out, MitosisLetter::Gen(c.clone()));
                }
                push(
                    out,
                    MitosisLetter::U {
                        level: n,
                        inv: false,
                    },
                );
                self.push_word(&l.rest, out);
            }
        }
    }
}

impl<G: Group> Algebra for MitosisAlgebra<G> {
    type Elem = MitosisElem<G::Elem>;

    fn one(&self) -> Self::Elem {
        MitosisElem::Base(self.base.identity())
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        matches!(a, MitosisElem::Base(x) if self.base.is_identity(x))
    }

    fn try_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let level = a.level().max(b.level());
        if let (MitosisElem::Base(x), MitosisElem::Base(y)) = (a, b) {
            return Ok(MitosisElem::Base(self.base.mul(x, y)));
        }
        let mut w = self.pieces(a, level);
        w.extend(self.pieces(b, level));
        self.normalize(level, w)
    }
}

impl<G: Group + EntryEncode<Elem = <G as Group>::Elem>> EntryEncode for MitosisAlgebra<G> {
    fn encode(&self, x: &Self::Elem) -> Value {
        encode_word(&self.base, &self.to_word(x))
    }
}
