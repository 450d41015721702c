//! Bar simplices, integer chains and the Moore complex operators.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::group_alg::Algebra;

/// An `n`-simplex `[g_1, .., g_n]` of the bar construction. The empty list
/// is the unique 0-simplex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BarSimplex<E>(pub Vec<E>);

impl<E> BarSimplex<E> {
    pub fn new(entries: Vec<E>) -> Self {
        BarSimplex(entries)
    }

    pub fn entries(&self) -> &[E] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn map<F, T>(&self, f: F) -> BarSimplex<T>
    where
        F: FnMut(&E) -> T,
    {
        BarSimplex(self.0.iter().map(f).collect())
    }
}

/// Anything that can be a basis element of a chain: it has a dimension and
/// an alternating face decomposition.
pub trait Simplex: Clone + Ord + Debug {
    type Entry: Clone + Ord + Debug;

    fn dim(&self) -> usize;

    /// The signed terms of the boundary of this simplex.
    fn boundary_terms<A>(&self, alg: &A) -> Result<Vec<(i64, Self)>>
    where
        A: Algebra<Elem = Self::Entry>;

    fn is_degenerate<A>(&self, alg: &A) -> bool
    where
        A: Algebra<Elem = Self::Entry>;
}

impl<E: Clone + Ord + Debug> Simplex for BarSimplex<E> {
    type Entry = E;

    fn dim(&self) -> usize {
        self.0.len()
    }

    fn boundary_terms<A>(&self, alg: &A) -> Result<Vec<(i64, Self)>>
    where
        A: Algebra<Elem = E>,
    {
        let n = self.dim();
        if n == 0 {
            return Ok(Vec::new());
        }
        (0..=n)
            .map(|i| Ok((sign(i), face(alg, i, self)?)))
            .collect()
    }

    fn is_degenerate<A>(&self, alg: &A) -> bool
    where
        A: Algebra<Elem = E>,
    {
        self.0.iter().any(|x| alg.is_one(x))
    }
}

/// `(-1)^i`.
pub fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The face `d_i`: `d_0` drops the first entry, `d_n` drops the last, and an
/// interior `d_i` multiplies entries `i` and `i+1`.
pub fn face<A: Algebra>(alg: &A, i: usize, s: &BarSimplex<A::Elem>) -> Result<BarSimplex<A::Elem>> {
    let n = s.dim();
    if i > n || n == 0 {
        return Err(Error::IndexOutOfRange { index: i, dim: n });
    }
    let e = &s.0;
    let out = if i == 0 {
        e[1..].to_vec()
    } else if i == n {
        e[..n - 1].to_vec()
    } else {
        let mut out = Vec::with_capacity(n - 1);
        out.extend_from_slice(&e[..i - 1]);
        out.push(alg.try_mul(&e[i - 1], &e[i])?);
        out.extend_from_slice(&e[i + 1..]);
        out
    };
    Ok(BarSimplex(out))
}

/// The degeneracy `s_i`, inserting the identity after position `i`.
pub fn degeneracy<A: Algebra>(
    alg: &A,
    i: usize,
    s: &BarSimplex<A::Elem>,
) -> Result<BarSimplex<A::Elem>> {
    let n = s.dim();
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, dim: n });
    }
    let mut out = s.0.clone();
    out.insert(i, alg.one());
    Ok(BarSimplex(out))
}

/// A finite formal sum of simplices of one dimension with nonzero integer
/// coefficients, stored in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain<S> {
    dim: usize,
    terms: BTreeMap<S, i64>,
}

impl<S: Simplex> Chain<S> {
    pub fn zero(dim: usize) -> Self {
        Chain {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(s: S, coeff: i64) -> Self {
        let mut c = Chain::zero(s.dim());
        c.add_term(s, coeff);
        c
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, S)>>(dim: usize, terms: I) -> Self {
        let mut c = Chain::zero(dim);
        for (coeff, s) in terms {
            c.add_term(s, coeff);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coeff(&self, s: &S) -> i64 {
        self.terms.get(s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, i64)> {
        self.terms.iter().map(|(s, c)| (s, *c))
    }

    /// Adds `coeff·s`.
    ///
    /// # Panics
    ///
    /// If `s` has a different dimension from the chain.
    pub fn add_term(&mut self, s: S, coeff: i64) {
        assert_eq!(
            s.dim(),
            self.dim,
            "mixed-dimension chain: {s:?} in a {}-chain",
            self.dim
        );
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(s);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o
                    .get()
                    .checked_add(coeff)
                    .expect("chain coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `k·other`. A zero `other` may have any dimension.
    ///
    /// # Panics
    ///
    /// If both chains are nonzero and their dimensions differ.
    pub fn add_scaled(&mut self, other: &Chain<S>, k: i64) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.dim = other.dim;
        }
        for (s, c) in other.iter() {
            self.add_term(s.clone(), c * k);
        }
    }

    /// Checked sum, failing on a dimension mismatch between nonzero chains.
    pub fn try_add(&self, other: &Chain<S>) -> Result<Chain<S>> {
        if !self.is_zero() && !other.is_zero() && self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let mut out = self.clone();
        out.add_scaled(other, 1);
        Ok(out)
    }

    pub fn scaled(&self, k: i64) -> Chain<S> {
        let mut out = Chain::zero(self.dim);
        out.add_scaled(self, k);
        out.dim = self.dim;
        out
    }

    /// The L¹ norm of the coefficient vector.
    pub fn diameter(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }
}

impl<S: Simplex> Add for Chain<S> {
    type Output = Chain<S>;

    fn add(mut self, rhs: Chain<S>) -> Chain<S> {
        self.add_scaled(&rhs, 1);
        self
    }
}

impl<S: Simplex> Sub for Chain<S> {
    type Output = Chain<S>;

    fn sub(mut self, rhs: Chain<S>) -> Chain<S> {
        self.add_scaled(&rhs, -1);
        self
    }
}

impl<S: Simplex> Neg for Chain<S> {
    type Output = Chain<S>;

    fn neg(self) -> Chain<S> {
        self.scaled(-1)
    }
}

/// Extends a per-simplex operation linearly to chains.
pub fn linear<S, T, F>(c: &Chain<S>, out_dim: usize, mut op: F) -> Result<Chain<T>>
where
    S: Simplex,
    T: Simplex,
    F: FnMut(&S) -> Result<Chain<T>>,
{
    let mut out = Chain::zero(out_dim);
    for (s, coeff) in c.iter() {
        out.add_scaled(&op(s)?, coeff);
    }
    out.dim = out_dim;
    Ok(out)
}

/// `∂ = Σ (-1)^i d_i`. The boundary of a 0-chain is the zero chain.
pub fn boundary<S, A>(alg: &A, c: &Chain<S>) -> Result<Chain<S>>
where
    S: Simplex,
    A: Algebra<Elem = S::Entry>,
{
    let mut out = Chain::zero(c.dim().saturating_sub(1));
    if c.dim() == 0 {
        return Ok(out);
    }
    for (s, coeff) in c.iter() {
        for (sg, t) in s.boundary_terms(alg)? {
            out.add_term(t, sg * coeff);
        }
    }
    Ok(out)
}

pub fn diameter<S: Simplex>(c: &Chain<S>) -> u64 {
    c.diameter()
}

/// Deletes every degenerate term.
pub fn project<S, A>(alg: &A, c: &Chain<S>) -> Chain<S>
where
    S: Simplex,
    A: Algebra<Elem = S::Entry>,
{
    Chain::from_terms(
        c.dim(),
        c.iter()
            .filter(|(s, _)| !s.is_degenerate(alg))
            .map(|(s, k)| (k, s.clone())),
    )
}

/// Σ|coefficient| over the degenerate terms.
pub fn count_degenerate<S, A>(alg: &A, c: &Chain<S>) -> u64
where
    S: Simplex,
    A: Algebra<Elem = S::Entry>,
{
    c.iter()
        .filter(|(s, _)| s.is_degenerate(alg))
        .map(|(_, k)| k.unsigned_abs())
        .sum()
}

pub fn is_degenerate<A: Algebra>(alg: &A, s: &BarSimplex<A::Elem>) -> bool {
    s.is_degenerate(alg)
}
