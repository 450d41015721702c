//! Null-homotopies of the mitosis embedding `G → 𝒜ⁿ(G)`.
//!
//! At level `n` the cylinder homotopy runs from `Ed_(ū,id)` to `Ed_(ū,e)`,
//! where `ū` is conjugation by `ū_n`, with `l_n = t̄_n^{ū_n}`. Correcting it by
//! shuffle products of the level-`(n-1)` homotopy gives `Ψⁿ` with
//! `(∂Ψⁿ + Ψⁿ∂)(σ) = σ - [e, .., e]` on simplices of dimension at most `n`.

use super::{homotopy_p, verify_identity, HomotopyContext, PartialHomotopy};
use crate::error::{Error, Result};
use crate::group_alg::{Algebra, Group, MitosisAlgebra, MitosisElem, MitosisWord, WordAlgebra};
use crate::moore::{project, BarSimplex, Chain};
use crate::shuffle_ez::{edgewise, shuffle_product_terms, TensorSimplex};

/// The level-`n` specialization: `f = h = ū_n`, `g = id`, `k = e` and
/// `l = t̄_n^{ū_n}`.
#[derive(Debug, Clone)]
pub struct MitosisContext<'a, G> {
    pub level: usize,
    pub alg: &'a MitosisAlgebra<G>,
}

pub fn mitosis_context<G: Group>(alg: &MitosisAlgebra<G>, level: usize) -> MitosisContext<'_, G> {
    assert!(level >= 1, "mitosis levels start at 1");
    MitosisContext { level, alg }
}

impl<G: Group> HomotopyContext for MitosisContext<'_, G> {
    type Source = G;
    type Target = MitosisAlgebra<G>;

    fn source(&self) -> &G {
        &self.alg.base
    }

    fn target(&self) -> &MitosisAlgebra<G> {
        self.alg
    }

    fn f(&self, x: &G::Elem) -> MitosisElem<G::Elem> {
        self.alg.conj_u(self.level, x)
    }

    fn g(&self, x: &G::Elem) -> MitosisElem<G::Elem> {
        self.alg.embed(x)
    }

    fn h(&self, x: &G::Elem) -> MitosisElem<G::Elem> {
        self.alg.conj_u(self.level, x)
    }

    fn k(&self, _x: &G::Elem) -> MitosisElem<G::Elem> {
        self.alg.one()
    }

    fn m(&self, x: &G::Elem) -> MitosisElem<G::Elem> {
        self.alg.pillar(self.level, x)
    }
}

type ElemChain<G> = Chain<BarSimplex<MitosisElem<<G as Group>::Elem>>>;

/// The inductive step
/// `Q(σ) = P(σ) - Σ_{k=1}^{m-1} T_*∇(P_prev(g_1..g_k) ⊗ ū_*(g_{k+1}..g_m))`.
pub fn induct_q<G, P>(prev: &P, level: usize, s: &BarSimplex<G::Elem>) -> Result<ElemChain<G>>
where
    G: Group,
    P: PartialHomotopy<Source = G, Target = MitosisAlgebra<G>>,
{
    let m = s.dim();
    if m > level {
        return Err(Error::DimensionExceeded { dim: m, level });
    }
    let alg = prev.target();
    if m == 0 {
        return Ok(Chain::zero(1));
    }
    let ctx = mitosis_context(alg, level);
    let mut out = homotopy_p(&ctx, s)?;
    for k in 1..m {
        let front = BarSimplex(s.0[..k].to_vec());
        let back = BarSimplex(s.0[k..].iter().map(|x| ctx.f(x)).collect());
        for (t, c) in prev.apply(&front)?.iter() {
            let x = TensorSimplex {
                left: t.clone(),
                right: back.clone(),
            };
            for (sg, y) in shuffle_product_terms(alg, &x)? {
                out.add_term(y, -c * sg);
            }
        }
    }
    Ok(out)
}

/// `Ψⁿ` as a partial homotopy on simplices of dimension at most `n`.
#[derive(Debug, Clone)]
pub struct TowerHomotopy<'a, G> {
    pub alg: &'a MitosisAlgebra<G>,
    pub level: usize,
}

impl<'a, G: Group> TowerHomotopy<'a, G> {
    pub fn new(alg: &'a MitosisAlgebra<G>, level: usize) -> Self {
        TowerHomotopy { alg, level }
    }
}

impl<G: Group> PartialHomotopy for TowerHomotopy<'_, G> {
    type Source = G;
    type Target = MitosisAlgebra<G>;

    fn source(&self) -> &G {
        &self.alg.base
    }

    fn target(&self) -> &MitosisAlgebra<G> {
        self.alg
    }

    fn max_dim(&self) -> usize {
        self.level
    }

    fn apply(&self, s: &BarSimplex<G::Elem>) -> Result<ElemChain<G>> {
        if s.dim() > self.level {
            return Err(Error::DimensionExceeded {
                dim: s.dim(),
                level: self.level,
            });
        }
        if self.level == 0 || s.dim() == 0 {
            return Ok(Chain::zero(s.dim() + 1));
        }
        induct_q(&TowerHomotopy::new(self.alg, self.level - 1), self.level, s)
    }
}

/// `Ψⁿ(σ)`.
pub fn psi<G: Group>(
    alg: &MitosisAlgebra<G>,
    level: usize,
    s: &BarSimplex<G::Elem>,
) -> Result<ElemChain<G>> {
    TowerHomotopy::new(alg, level).apply(s)
}

/// `Φⁿ(σ) = p(Ψⁿ(σ))`: `Ψⁿ` with every degenerate term removed.
pub fn phi<G: Group>(
    alg: &MitosisAlgebra<G>,
    level: usize,
    s: &BarSimplex<G::Elem>,
) -> Result<ElemChain<G>> {
    Ok(project(alg, &psi(alg, level, s)?))
}

fn embedded<G: Group>(
    alg: &MitosisAlgebra<G>,
    s: &BarSimplex<G::Elem>,
) -> BarSimplex<MitosisElem<G::Elem>> {
    s.map(|x| alg.embed(x))
}

fn constant<G: Group>(alg: &MitosisAlgebra<G>, dim: usize) -> BarSimplex<MitosisElem<G::Elem>> {
    BarSimplex(vec![alg.one(); dim])
}

/// Residual of `(∂Ψⁿ + Ψⁿ∂)(σ) = σ - [e, .., e]`.
pub fn psi_residual<G: Group>(
    alg: &MitosisAlgebra<G>,
    level: usize,
    s: &BarSimplex<G::Elem>,
) -> Result<ElemChain<G>> {
    verify_identity(
        &alg.base,
        alg,
        |x| psi(alg, level, x),
        |x| Ok(Chain::single(embedded(alg, x), 1)),
        |x| Ok(Chain::single(constant(alg, x.dim()), 1)),
        s,
    )
}

/// Residual of the cylinder part alone:
/// `(∂P + P∂)(σ) = Σ_{i=1}^{m-1} T_*∇(([g_1..g_i] - [e..e]) ⊗ ū_*(g_{i+1}..g_m)) + σ - [e..e]`.
pub fn cylinder_part_residual<G: Group>(
    alg: &MitosisAlgebra<G>,
    level: usize,
    s: &BarSimplex<G::Elem>,
) -> Result<ElemChain<G>> {
    let ctx = mitosis_context(alg, level);
    let expected = |x: &BarSimplex<G::Elem>| -> Result<ElemChain<G>> {
        let m = x.dim();
        let mut out = Chain::single(embedded(alg, x), 1);
        out.add_term(constant(alg, m), -1);
        for i in 1..m {
            let back = BarSimplex(x.0[i..].iter().map(|y| ctx.f(y)).collect());
            let fronts = [
                (1, embedded(alg, &BarSimplex(x.0[..i].to_vec()))),
                (-1, constant(alg, i)),
            ];
            for (c, front) in fronts {
                let t = TensorSimplex {
                    left: front,
                    right: back.clone(),
                };
                for (sg, y) in shuffle_product_terms(alg, &t)? {
                    out.add_term(y, c * sg);
                }
            }
        }
        Ok(out)
    };
    verify_identity(
        &alg.base,
        alg,
        |x| homotopy_p(&ctx, x),
        expected,
        |x| Ok(Chain::zero(x.dim())),
        s,
    )
}

/// `Ed_(ū,id)(σ) - Ed_(ū,e)(σ)` at the given level.
pub fn edgewise_difference<G: Group>(
    alg: &MitosisAlgebra<G>,
    level: usize,
    s: &BarSimplex<G::Elem>,
) -> Result<ElemChain<G>> {
    let ctx = mitosis_context(alg, level);
    let top = edgewise(alg, |x| ctx.f(x), |x| ctx.g(x), s)?;
    let bottom = edgewise(alg, |x| ctx.h(x), |x| ctx.k(x), s)?;
    Ok(top - bottom)
}

/// Flattens every entry of a normal-form chain to its reduced word.
pub fn to_word_chain<G: Group>(
    alg: &MitosisAlgebra<G>,
    c: &ElemChain<G>,
) -> Chain<BarSimplex<MitosisWord<G::Elem>>> {
    Chain::from_terms(
        c.dim(),
        c.iter().map(|(s, k)| (k, s.map(|x| alg.to_word(x)))),
    )
}

/// Residual of the `Ψⁿ` identity after pushing every entry through a
/// homomorphism `eval: 𝒜ⁿ(G) → H` into a concrete group.
pub fn psi_residual_in<G, H, F>(
    alg: &MitosisAlgebra<G>,
    level: usize,
    s: &BarSimplex<G::Elem>,
    target: &H,
    eval: F,
) -> Result<Chain<BarSimplex<H::Elem>>>
where
    G: Group,
    H: Group,
    F: Fn(&MitosisElem<G::Elem>) -> H::Elem,
{
    let pushed =
        |c: ElemChain<G>| Chain::from_terms(c.dim(), c.iter().map(|(t, k)| (k, t.map(&eval))));
    verify_identity(
        &alg.base,
        target,
        |x| Ok(pushed(psi(alg, level, x)?)),
        |x| Ok(Chain::single(x.map(|y| eval(&alg.embed(y))), 1)),
        |x| {
            Ok(Chain::single(
                BarSimplex(vec![target.identity(); x.dim()]),
                1,
            ))
        },
        s,
    )
}

/// The level-1 chain `[t^ū, g^ū] - [g^ū, t^{ūḡ}] + [t^{ūḡ}, e] - [g, t^ū]`,
/// written with `t = t_1`, `u = u_1` and `a^b = b·a·b̄`. It is a homotopy
/// between the same two maps as `Ψ¹`, with the opposite orientation:
/// its boundary is `[e] - [g]`.
pub fn opposite_base_chain<G: Group>(
    words: &WordAlgebra<G>,
    g: &G::Elem,
) -> Chain<BarSimplex<MitosisWord<G::Elem>>> {
    let ubar = words.u(1, true);
    let u = words.u(1, false);
    let t = words.t(1, false);
    let gw = words.gen(g);
    let gbar = words.gen(&words.base.inv(g));
    let t_u = words.concat([&ubar, &t, &u]);
    let g_u = words.concat([&ubar, &gw, &u]);
    let t_ug = words.concat([&ubar, &gbar, &t, &gw, &u]);
    let e = words.one();
    Chain::from_terms(
        2,
        [
            (1, BarSimplex(vec![t_u.clone(), g_u.clone()])),
            (-1, BarSimplex(vec![g_u, t_ug.clone()])),
            (1, BarSimplex(vec![t_ug, e])),
            (-1, BarSimplex(vec![gw, t_u])),
        ],
    )
}
