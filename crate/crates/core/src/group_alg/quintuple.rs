use serde_json::{json, Map, Value};

use super::{non_normalizable, Algebra, EntryCodec, EntryEncode, Group};
use crate::error::{Error, Result};

/// Formal product `h(h_arg)·k(k_arg)·m(m_arg)·f(f_arg)·g(g_arg)`.
///
/// `m` is the pillar function `m(x) = h(x̄)·l·f(x)`; an absent `m` means the
/// product has no pillar letter. Canonical forms never carry an `m` letter
/// together with a nontrivial `f` or `g` letter. The rewrite rules move
/// those to the left of `m`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomotopyExpr<E> {
    pub h: E,
    pub k: E,
    pub m: Option<E>,
    pub f: E,
    pub g: E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Kind {
    H,
    K,
    M,
    F,
    G,
}

/// The algebra of canonical quintuples over a source group.
#[derive(Debug, Clone)]
pub struct QuintupleAlgebra<G> {
    pub base: G,
}

impl<G: Group> QuintupleAlgebra<G> {
    pub fn new(base: G) -> Self {
        QuintupleAlgebra { base }
    }

    fn single(&self, kind: Kind, x: G::Elem) -> HomotopyExpr<G::Elem> {
        let e = self.base.identity();
        let mut q = HomotopyExpr {
            h: e.clone(),
            k: e.clone(),
            m: None,
            f: e.clone(),
            g: e,
        };
        match kind {
            Kind::H => q.h = x,
            Kind::K => q.k = x,
            Kind::M => q.m = Some(x),
            Kind::F => q.f = x,
            Kind::G => q.g = x,
        }
        q
    }

    pub fn f(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.single(Kind::F, x.clone())
    }

    pub fn g(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.single(Kind::G, x.clone())
    }

    pub fn h(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.single(Kind::H, x.clone())
    }

    pub fn k(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.single(Kind::K, x.clone())
    }

    pub fn m(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.single(Kind::M, x.clone())
    }

    /// The distinguished element `l = m(e)`.
    pub fn ell(&self) -> HomotopyExpr<G::Elem> {
        self.m(&self.base.identity())
    }

    /// Canonical form of an arbitrary (possibly non-canonical) quintuple.
    pub fn normalize(&self, q: &HomotopyExpr<G::Elem>) -> Result<HomotopyExpr<G::Elem>> {
        self.normalize_letters(self.letters(q))
    }

    fn letters(&self, q: &HomotopyExpr<G::Elem>) -> Vec<(Kind, G::Elem)> {
        let nontrivial = |kind, x: &G::Elem| (!self.base.is_identity(x)).then(|| (kind, x.clone()));
        [
            nontrivial(Kind::H, &q.h),
            nontrivial(Kind::K, &q.k),
            q.m.clone().map(|x| (Kind::M, x)),
            nontrivial(Kind::F, &q.f),
            nontrivial(Kind::G, &q.g),
        ]
        .into_iter()
        .flatten()
        .collect()
    }

    fn normalize_letters(&self, mut w: Vec<(Kind, G::Elem)>) -> Result<HomotopyExpr<G::Elem>> {
        let base = &self.base;
        'scan: loop {
            for i in 0..w.len().saturating_sub(1) {
                let (ka, a) = w[i].clone();
                let (kb, b) = w[i + 1].clone();
                if ka < kb {
                    continue;
                }
                match (ka, kb) {
                    (Kind::M, Kind::M) => return Err(non_normalizable(&w[i], &w[i + 1])),
                    (x, y) if x == y => {
                        let ab = base.mul(&a, &b);
                        if base.is_identity(&ab) {
                            w.drain(i..i + 2);
                        } else {
                            w.splice(i..i + 2, [(x, ab)]);
                        }
                    }
                    (Kind::G, Kind::F) | (Kind::K, Kind::H) => w.swap(i, i + 1),
                    (Kind::M, Kind::H) | (Kind::M, Kind::K) => {
                        return Err(non_normalizable(&w[i], &w[i + 1]))
                    }
                    (Kind::F | Kind::G, _) | (Kind::K, _) => {
                        return Err(non_normalizable(&w[i], &w[i + 1]))
                    }
                    _ => unreachable!("ordered pairs are skipped"),
                }
                continue 'scan;
            }
            break;
        }
        // a pillar letter absorbs the f and g letters to its right
        for i in 0..w.len().saturating_sub(1) {
            if w[i].0 != Kind::M {
                continue;
            }
            let x = w[i].1.clone();
            let (kb, b) = w[i + 1].clone();
            let replacement = match kb {
                Kind::F => [(Kind::H, b.clone()), (Kind::M, base.mul(&x, &b))],
                Kind::G => [(Kind::K, b.clone()), (Kind::M, base.mul(&base.inv(&b), &x))],
                _ => continue,
            };
            w.splice(i..i + 2, replacement);
            return self.normalize_letters(w);
        }
        let mut q = self.single(Kind::H, base.identity());
        for (kind, x) in w {
            match kind {
                Kind::H => q.h = x,
                Kind::K => q.k = x,
                Kind::M => q.m = Some(x),
                Kind::F => q.f = x,
                Kind::G => q.g = x,
            }
        }
        Ok(q)
    }
}

/// Product of two quintuples, normalized by the pillar rewrite rules:
/// homomorphism merges, `f`/`g` and `h`/`k` commutation,
/// `m(x)·f(a) = h(a)·m(x·a)` and `m(x)·g(a) = k(a)·m(ā·x)`.
pub fn quintuple_mul<G: Group>(
    alg: &QuintupleAlgebra<G>,
    a: &HomotopyExpr<G::Elem>,
    b: &HomotopyExpr<G::Elem>,
) -> Result<HomotopyExpr<G::Elem>> {
    let mut w = alg.letters(a);
    w.extend(alg.letters(b));
    alg.normalize_letters(w)
}

impl<G: Group> Algebra for QuintupleAlgebra<G> {
    type Elem = HomotopyExpr<G::Elem>;

    fn one(&self) -> Self::Elem {
        self.single(Kind::H, self.base.identity())
    }

    fn try_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        quintuple_mul(self, a, b)
    }
}

impl<G: Group + EntryEncode<Elem = <G as Group>::Elem>> EntryEncode for QuintupleAlgebra<G> {
    fn encode(&self, q: &Self::Elem) -> Value {
        json!({
            "h": self.base.encode(&q.h),
            "k": self.base.encode(&q.k),
            "m": q.m.as_ref().map_or(Value::Null, |x| self.base.encode(x)),
            "f": self.base.encode(&q.f),
            "g": self.base.encode(&q.g),
        })
    }
}

impl<G: Group + EntryCodec<Elem = <G as Group>::Elem>> EntryCodec for QuintupleAlgebra<G> {
    fn decode(&self, v: &Value) -> Result<Self::Elem> {
        let obj: &Map<String, Value> = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("quintuple must be an object, got {v}")))?;
        let field = |name: &str| -> Result<<G as Group>::Elem> {
            match obj.get(name) {
                None => Ok(self.base.identity()),
                Some(x) => self.base.decode(x),
            }
        };
        let m = match obj.get("m") {
            None | Some(Value::Null) => None,
            Some(x) => Some(self.base.decode(x)?),
        };
        let q = HomotopyExpr {
            h: field("h")?,
            k: field("k")?,
            m,
            f: field("f")?,
            g: field("g")?,
        };
        self.normalize(&q)
    }
}
