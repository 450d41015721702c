//! Shuffles, the Alexander-Whitney and Eilenberg-Zilber maps, and the
//! edgewise subdivision `Ed_(f,g)`.
//!
//! `Ed_(f,g)` is computed twice. [`edgewise_terms`] runs the composite
//! `T_* ∘ ∇ ∘ Δ ∘ (g,f)_* ∘ D_*` through explicit tensor and product chains;
//! [`edgewise_shuffle_terms`] places entries directly from the shuffle
//! permutations. The two must agree term for term.

use std::fmt::Debug;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::group_alg::Algebra;
use crate::moore::{degeneracy, face, linear, sign, BarSimplex, Chain, Simplex};

/// A `(p,q)`-shuffle `μ`, increasing on `1..=p` and on `p+1..=p+q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shuffle {
    pub p: usize,
    pub q: usize,
    /// `μ(1), .., μ(p+q)`, one-based.
    pub perm: Vec<usize>,
    pub sign: i64,
    /// One-based position in dictionary order.
    pub rank: usize,
}

/// Where a position of a shuffle term takes its entry from: `G(k)` is the
/// `g`-image of `σ`'s `k`-th entry, `F(k)` the `f`-image (zero-based `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    G(usize),
    F(usize),
}

impl Shuffle {
    /// For each position of the shuffled simplex, the entry placed there.
    pub fn slots(&self) -> Vec<Slot> {
        let mut out = vec![Slot::F(0); self.p + self.q];
        for (j, &pos) in self.perm.iter().enumerate() {
            out[pos - 1] = if j < self.p { Slot::G(j) } else { Slot::F(j) };
        }
        out
    }

    /// Zero-based positions `μ(1)-1, .., μ(p)-1` of the first block.
    pub fn first_block(&self) -> &[usize] {
        &self.perm[..self.p]
    }
}

fn inversion_sign(perm: &[usize]) -> i64 {
    let inversions = perm
        .iter()
        .enumerate()
        .map(|(i, a)| perm[i + 1..].iter().filter(|b| *b < a).count())
        .sum::<usize>();
    sign(inversions)
}

/// All `(p,q)`-shuffles in dictionary order, with inversion-count signs.
pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    (1..=n)
        .combinations(p)
        .enumerate()
        .map(|(r, first)| {
            let mut perm = first.clone();
            perm.extend((1..=n).filter(|i| !first.contains(i)));
            Shuffle {
                p,
                q,
                sign: inversion_sign(&perm),
                perm,
                rank: r + 1,
            }
        })
        .collect()
}

/// A simplex `σ × τ` of a product of classifying spaces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductSimplex<E> {
    pub first: BarSimplex<E>,
    pub second: BarSimplex<E>,
}

impl<E> ProductSimplex<E> {
    pub fn new(first: BarSimplex<E>, second: BarSimplex<E>) -> Result<Self> {
        if first.dim() != second.dim() {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                found: second.dim(),
            });
        }
        Ok(ProductSimplex { first, second })
    }
}

impl<E: Clone + Ord + Debug> Simplex for ProductSimplex<E> {
    type Entry = E;

    fn dim(&self) -> usize {
        self.first.dim()
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
            .map(|i| {
                Ok((
                    sign(i),
                    ProductSimplex {
                        first: face(alg, i, &self.first)?,
                        second: face(alg, i, &self.second)?,
                    },
                ))
            })
            .collect()
    }

    fn is_degenerate<A>(&self, alg: &A) -> bool
    where
        A: Algebra<Elem = E>,
    {
        (0..self.dim()).any(|i| alg.is_one(&self.first.0[i]) && alg.is_one(&self.second.0[i]))
    }
}

/// A basis element `σ ⊗ τ` of the tensor product of Moore complexes, graded
/// by total dimension.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorSimplex<E> {
    pub left: BarSimplex<E>,
    pub right: BarSimplex<E>,
}

impl<E: Clone + Ord + Debug> Simplex for TensorSimplex<E> {
    type Entry = E;

    fn dim(&self) -> usize {
        self.left.dim() + self.right.dim()
    }

    /// `∂(σ⊗τ) = ∂σ⊗τ + (-1)^p σ⊗∂τ`.
    fn boundary_terms<A>(&self, alg: &A) -> Result<Vec<(i64, Self)>>
    where
        A: Algebra<Elem = E>,
    {
        let mut out = Vec::new();
        for (s, l) in self.left.boundary_terms(alg)? {
            out.push((
                s,
                TensorSimplex {
                    left: l,
                    right: self.right.clone(),
                },
            ));
        }
        let p_sign = sign(self.left.dim());
        for (s, r) in self.right.boundary_terms(alg)? {
            out.push((
                p_sign * s,
                TensorSimplex {
                    left: self.left.clone(),
                    right: r,
                },
            ));
        }
        Ok(out)
    }

    fn is_degenerate<A>(&self, alg: &A) -> bool
    where
        A: Algebra<Elem = E>,
    {
        self.left.is_degenerate(alg) || self.right.is_degenerate(alg)
    }
}

/// Alexander-Whitney terms `Σ_i d_{i+1}⋯d_n σ ⊗ d_0^i τ`, in order of `i`.
pub fn aw_terms<A: Algebra>(
    alg: &A,
    x: &ProductSimplex<A::Elem>,
) -> Result<Vec<(i64, TensorSimplex<A::Elem>)>> {
    let n = x.dim();
    (0..=n)
        .map(|i| {
            let mut front = x.first.clone();
            for j in (i + 1..=n).rev() {
                front = face(alg, j, &front)?;
            }
            let mut back = x.second.clone();
            for _ in 0..i {
                back = face(alg, 0, &back)?;
            }
            Ok((
                1,
                TensorSimplex {
                    left: front,
                    right: back,
                },
            ))
        })
        .collect()
}

pub fn aw<A: Algebra>(
    alg: &A,
    sigma: &BarSimplex<A::Elem>,
    tau: &BarSimplex<A::Elem>,
) -> Result<Chain<TensorSimplex<A::Elem>>> {
    let x = ProductSimplex::new(sigma.clone(), tau.clone())?;
    Ok(Chain::from_terms(x.dim(), aw_terms(alg, &x)?))
}

/// Linear extension of Alexander-Whitney to product chains.
pub fn aw_chain<A: Algebra>(
    alg: &A,
    c: &Chain<ProductSimplex<A::Elem>>,
) -> Result<Chain<TensorSimplex<A::Elem>>> {
    linear(c, c.dim(), |x| {
        Ok(Chain::from_terms(x.dim(), aw_terms(alg, x)?))
    })
}

/// Eilenberg-Zilber terms
/// `Σ ε(μ,ν) (s_{ν_q}⋯s_{ν_1} σ) × (s_{μ_p}⋯s_{μ_1} τ)` in dictionary order.
pub fn ez_terms<A: Algebra>(
    alg: &A,
    x: &TensorSimplex<A::Elem>,
) -> Result<Vec<(i64, ProductSimplex<A::Elem>)>> {
    let (p, q) = (x.left.dim(), x.right.dim());
    shuffles(p, q)
        .into_iter()
        .map(|sh| {
            let mut first = x.left.clone();
            for &nu in &sh.perm[p..] {
                first = degeneracy(alg, nu - 1, &first)?;
            }
            let mut second = x.right.clone();
            for &mu in &sh.perm[..p] {
                second = degeneracy(alg, mu - 1, &second)?;
            }
            Ok((sh.sign, ProductSimplex { first, second }))
        })
        .collect()
}

pub fn ez<A: Algebra>(
    alg: &A,
    x: &TensorSimplex<A::Elem>,
) -> Result<Chain<ProductSimplex<A::Elem>>> {
    Ok(Chain::from_terms(x.dim(), ez_terms(alg, x)?))
}

/// Linear extension of Eilenberg-Zilber to tensor chains.
pub fn ez_chain<A: Algebra>(
    alg: &A,
    c: &Chain<TensorSimplex<A::Elem>>,
) -> Result<Chain<ProductSimplex<A::Elem>>> {
    linear(c, c.dim(), |x| ez(alg, x))
}

/// `T(σ × τ)`: the componentwise product simplex.
pub fn mult_simplex<A: Algebra>(
    alg: &A,
    x: &ProductSimplex<A::Elem>,
) -> Result<BarSimplex<A::Elem>> {
    x.first
        .0
        .iter()
        .zip(&x.second.0)
        .map(|(a, b)| alg.try_mul(a, b))
        .collect::<Result<Vec<_>>>()
        .map(BarSimplex)
}

/// `T_*` on product chains.
pub fn mult_map<A: Algebra>(
    alg: &A,
    c: &Chain<ProductSimplex<A::Elem>>,
) -> Result<Chain<BarSimplex<A::Elem>>> {
    linear(c, c.dim(), |x| Ok(Chain::single(mult_simplex(alg, x)?, 1)))
}

/// `T_* ∘ ∇` applied to one tensor simplex, keeping shuffle order.
pub fn shuffle_product_terms<A: Algebra>(
    alg: &A,
    x: &TensorSimplex<A::Elem>,
) -> Result<Vec<(i64, BarSimplex<A::Elem>)>> {
    ez_terms(alg, x)?
        .into_iter()
        .map(|(s, prod)| Ok((s, mult_simplex(alg, &prod)?)))
        .collect()
}

/// The diagonal `D(σ) = σ × σ`.
pub fn diagonal<E: Clone>(s: &BarSimplex<E>) -> ProductSimplex<E> {
    ProductSimplex {
        first: s.clone(),
        second: s.clone(),
    }
}

/// `Ed_(f,g)(σ)` through the composite of chain maps, terms in emission order.
pub fn edgewise_terms<A, S, F, G>(
    alg: &A,
    f: F,
    g: G,
    s: &BarSimplex<S>,
) -> Result<Vec<(i64, BarSimplex<A::Elem>)>>
where
    A: Algebra,
    S: Clone,
    F: Fn(&S) -> A::Elem,
    G: Fn(&S) -> A::Elem,
{
    let d = diagonal(s);
    let pair = ProductSimplex {
        first: d.first.map(&g),
        second: d.second.map(&f),
    };
    let mut out = Vec::new();
    for (c, t) in aw_terms(alg, &pair)? {
        for (sg, x) in shuffle_product_terms(alg, &t)? {
            out.push((c * sg, x));
        }
    }
    Ok(out)
}

/// `Ed_(f,g)(σ)` as a chain.
pub fn edgewise<A, S, F, G>(
    alg: &A,
    f: F,
    g: G,
    s: &BarSimplex<S>,
) -> Result<Chain<BarSimplex<A::Elem>>>
where
    A: Algebra,
    S: Clone,
    F: Fn(&S) -> A::Elem,
    G: Fn(&S) -> A::Elem,
{
    Ok(Chain::from_terms(s.dim(), edgewise_terms(alg, f, g, s)?))
}

/// The single term `S_(f,g)_j^{p,q} σ`: positions `μ(1..p)` carry
/// `g(g_1), .., g(g_p)` and the remaining positions carry
/// `f(g_{p+1}), .., f(g_n)`.
pub fn shuffle_term<S, T, F, G>(
    f: F,
    g: G,
    j: usize,
    p: usize,
    q: usize,
    s: &BarSimplex<S>,
) -> Result<BarSimplex<T>>
where
    F: Fn(&S) -> T,
    G: Fn(&S) -> T,
{
    if p + q != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: p + q,
            found: s.dim(),
        });
    }
    let sh = shuffle_at(j, p, q)?;
    Ok(place(&sh, &f, &g, s))
}

pub(crate) fn shuffle_at(j: usize, p: usize, q: usize) -> Result<Shuffle> {
    if j == 0 {
        return Err(Error::RankOutOfRange { rank: j, p, q });
    }
    shuffles(p, q)
        .into_iter()
        .nth(j - 1)
        .ok_or(Error::RankOutOfRange { rank: j, p, q })
}

pub(crate) fn place<S, T>(
    sh: &Shuffle,
    f: &impl Fn(&S) -> T,
    g: &impl Fn(&S) -> T,
    s: &BarSimplex<S>,
) -> BarSimplex<T> {
    BarSimplex(
        sh.slots()
            .into_iter()
            .map(|slot| match slot {
                Slot::G(k) => g(&s.0[k]),
                Slot::F(k) => f(&s.0[k]),
            })
            .collect(),
    )
}

/// `Ed_(f,g)(σ)` from the shuffle formula, summed over `i = 0..n` and
/// shuffle rank in dictionary order.
pub fn edgewise_shuffle_terms<S, T, F, G>(
    f: F,
    g: G,
    s: &BarSimplex<S>,
) -> Vec<(i64, BarSimplex<T>)>
where
    F: Fn(&S) -> T,
    G: Fn(&S) -> T,
{
    let n = s.dim();
    (0..=n)
        .flat_map(|i| shuffles(i, n - i))
        .map(|sh| (sh.sign, place(&sh, &f, &g, s)))
        .collect()
}
