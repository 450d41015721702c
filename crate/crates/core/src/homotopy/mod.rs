//! Controlled chain homotopies built from simplicial cylinders.
//!
//! Given commuting pairs `f, g` and `h, k` of homomorphisms `G → H` and an
//! element `l` with `l·f(x)·g(x) = h(x)·k(x)·l`, [`homotopy_p`] builds a
//! chain homotopy `P` from `Ed_(f,g)` to `Ed_(h,k)`: each shuffle term of
//! `Ed_(f,g)` is joined to the matching term of `Ed_(h,k)` by a cylinder whose
//! pillars are values of `m(x) = h(x̄)·l·f(x)`.
//!
//! [`tower`] specializes this to the mitosis tower and assembles the
//! null-homotopies `Ψⁿ` and their normalized versions `Φⁿ`.

pub mod tower;

use crate::cylinder::{cyl_chain, CylinderTerm, PillarSet, PillarSystem};
use crate::error::Result;
use crate::group_alg::{
    Algebra, ConcreteGroup, FreeGroup, Group, GroupElem, HomotopyExpr, QuintupleAlgebra,
    VerificationInstance,
};
use crate::moore::{boundary, linear, BarSimplex, Chain};
use crate::shuffle_ez::{edgewise, place, shuffle_at, shuffles, Shuffle, Slot};

pub use tower::{induct_q, mitosis_context, phi, psi, MitosisContext, TowerHomotopy};

/// The data of a cylinder homotopy: four homomorphisms and the pillar
/// function `m`, all landing in one target algebra.
pub trait HomotopyContext {
    type Source: Group;
    type Target: Algebra;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn f(&self, x: &SourceElem<Self>) -> TargetElem<Self>;
    fn g(&self, x: &SourceElem<Self>) -> TargetElem<Self>;
    fn h(&self, x: &SourceElem<Self>) -> TargetElem<Self>;
    fn k(&self, x: &SourceElem<Self>) -> TargetElem<Self>;

    /// `m(x) = h(x̄)·l·f(x)`.
    fn m(&self, x: &SourceElem<Self>) -> TargetElem<Self>;

    /// `l = m(e)`.
    fn ell(&self) -> TargetElem<Self> {
        self.m(&self.source().identity())
    }
}

pub type SourceElem<C> = <<C as HomotopyContext>::Source as Group>::Elem;
pub type TargetElem<C> = <<C as HomotopyContext>::Target as Algebra>::Elem;
pub type TargetChain<C> = Chain<BarSimplex<TargetElem<C>>>;

/// A chain homotopy defined on simplices up to a dimension bound.
pub trait PartialHomotopy {
    type Source: Group;
    type Target: Algebra;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;
    fn max_dim(&self) -> usize;

    fn apply(
        &self,
        s: &BarSimplex<<Self::Source as Group>::Elem>,
    ) -> Result<Chain<BarSimplex<<Self::Target as Algebra>::Elem>>>;
}

/// The formal context: entries are canonical quintuples over `G`.
#[derive(Debug, Clone)]
pub struct FormalContext<G> {
    pub alg: QuintupleAlgebra<G>,
}

impl<G: Group> FormalContext<G> {
    pub fn new(base: G) -> Self {
        FormalContext {
            alg: QuintupleAlgebra::new(base),
        }
    }
}

impl FormalContext<FreeGroup> {
    /// Free-symbol context on `rank` generators.
    pub fn free(rank: usize) -> Self {
        FormalContext::new(FreeGroup::new(rank))
    }
}

impl<G: Group> HomotopyContext for FormalContext<G> {
    type Source = G;
    type Target = QuintupleAlgebra<G>;

    fn source(&self) -> &G {
        &self.alg.base
    }

    fn target(&self) -> &QuintupleAlgebra<G> {
        &self.alg
    }

    fn f(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.alg.f(x)
    }

    fn g(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.alg.g(x)
    }

    fn h(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.alg.h(x)
    }

    fn k(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.alg.k(x)
    }

    fn m(&self, x: &G::Elem) -> HomotopyExpr<G::Elem> {
        self.alg.m(x)
    }
}

impl HomotopyContext for VerificationInstance {
    type Source = ConcreteGroup;
    type Target = ConcreteGroup;

    fn source(&self) -> &ConcreteGroup {
        &self.base
    }

    fn target(&self) -> &ConcreteGroup {
        &self.target
    }

    fn f(&self, x: &GroupElem) -> GroupElem {
        VerificationInstance::f(self, x)
    }

    fn g(&self, x: &GroupElem) -> GroupElem {
        VerificationInstance::g(self, x)
    }

    fn h(&self, x: &GroupElem) -> GroupElem {
        VerificationInstance::h(self, x)
    }

    fn k(&self, x: &GroupElem) -> GroupElem {
        VerificationInstance::k(self, x)
    }

    fn m(&self, x: &GroupElem) -> GroupElem {
        VerificationInstance::m(self, x)
    }
}

/// Arguments `x_0, .., x_n` of the pillars `m(x_r)` for one shuffle term.
///
/// Start from `g_1⋯g_p`; crossing an `f(g_k)` entry multiplies by `g_k` on the
/// right and crossing a `g(g_k)` entry strips `g_k` from the left.
pub fn pillar_args<G: Group>(source: &G, sh: &Shuffle, s: &BarSimplex<G::Elem>) -> Vec<G::Elem> {
    let mut x = source.product(&s.0[..sh.p]);
    let mut out = Vec::with_capacity(s.dim() + 1);
    out.push(x.clone());
    for slot in sh.slots() {
        x = match slot {
            Slot::F(k) => source.mul(&x, &s.0[k]),
            Slot::G(k) => source.mul(&source.inv(&s.0[k]), &x),
        };
        out.push(x.clone());
    }
    out
}

/// The pillar set `T_j^{p,q}(σ)`.
pub fn pillar_of_term<C: HomotopyContext>(
    ctx: &C,
    j: usize,
    p: usize,
    q: usize,
    s: &BarSimplex<SourceElem<C>>,
) -> Result<PillarSet<TargetElem<C>>> {
    let sh = shuffle_at(j, p, q)?;
    Ok(PillarSet(
        pillar_args(ctx.source(), &sh, s)
            .iter()
            .map(|x| ctx.m(x))
            .collect(),
    ))
}

/// All signed cylinders of `P(σ)`, in shuffle order, with compatibility
/// checked for every pillar set.
pub fn homotopy_system<C: HomotopyContext>(
    ctx: &C,
    s: &BarSimplex<SourceElem<C>>,
) -> Result<PillarSystem<TargetElem<C>>> {
    let n = s.dim();
    let mut terms = Vec::new();
    if n > 0 {
        for i in 0..=n {
            for sh in shuffles(i, n - i) {
                let top = place(&sh, &|x| ctx.f(x), &|x| ctx.g(x), s);
                let bottom = place(&sh, &|x| ctx.h(x), &|x| ctx.k(x), s);
                let pillars = PillarSet(
                    pillar_args(ctx.source(), &sh, s)
                        .iter()
                        .map(|x| ctx.m(x))
                        .collect(),
                );
                terms.push(CylinderTerm {
                    sign: sh.sign,
                    top,
                    bottom,
                    pillars,
                });
            }
        }
    }
    PillarSystem::new(ctx.target(), n, terms)
}

/// `P(σ) = Cyl(Ed_(f,g)(σ), Ed_(h,k)(σ), T(σ))`, with `P([ ]) = 0`.
pub fn homotopy_p<C: HomotopyContext>(
    ctx: &C,
    s: &BarSimplex<SourceElem<C>>,
) -> Result<TargetChain<C>> {
    Ok(cyl_chain(&homotopy_system(ctx, s)?))
}

/// The diameter of `P` on an `n`-simplex when no terms collide: `2ⁿ(n+1)`,
/// and `0` on the 0-simplex.
pub fn p_diameter(n: u32) -> u64 {
    if n == 0 {
        0
    } else {
        (1u64 << n) * (u64::from(n) + 1)
    }
}

/// `(∂H + H∂)(σ) - (lhs - rhs)(σ)`; the zero chain exactly when the identity
/// holds on `σ`.
pub fn verify_identity<SA, TA, H, L, R>(
    source: &SA,
    target: &TA,
    h: H,
    lhs: L,
    rhs: R,
    s: &BarSimplex<SA::Elem>,
) -> Result<Chain<BarSimplex<TA::Elem>>>
where
    SA: Group,
    TA: Algebra,
    H: Fn(&BarSimplex<SA::Elem>) -> Result<Chain<BarSimplex<TA::Elem>>>,
    L: Fn(&BarSimplex<SA::Elem>) -> Result<Chain<BarSimplex<TA::Elem>>>,
    R: Fn(&BarSimplex<SA::Elem>) -> Result<Chain<BarSimplex<TA::Elem>>>,
{
    let m = s.dim();
    let ds = boundary(source, &Chain::single(s.clone(), 1))?;
    let mut out = boundary(target, &h(s)?)?;
    out.add_scaled(&linear(&ds, m, &h)?, 1);
    out.add_scaled(&lhs(s)?, -1);
    out.add_scaled(&rhs(s)?, 1);
    Ok(out)
}

/// Residual of `(∂P + P∂)(σ) = (Ed_(f,g) - Ed_(h,k))(σ)`.
pub fn theorem_residual<C: HomotopyContext>(
    ctx: &C,
    s: &BarSimplex<SourceElem<C>>,
) -> Result<TargetChain<C>> {
    verify_identity(
        ctx.source(),
        ctx.target(),
        |x| homotopy_p(ctx, x),
        |x| edgewise(ctx.target(), |a| ctx.f(a), |a| ctx.g(a), x),
        |x| edgewise(ctx.target(), |a| ctx.h(a), |a| ctx.k(a), x),
        s,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_alg::FreeWord;

    fn free(n: usize) -> (FormalContext<FreeGroup>, BarSimplex<FreeWord>) {
        let ctx = FormalContext::free(n);
        let s = BarSimplex(ctx.alg.base.generators());
        (ctx, s)
    }

    #[test]
    fn pillars_of_sample_terms() {
        let (ctx, s) = free(3);
        let b = *ctx.source();
        let g = b.generators();
        let m = |x: &FreeWord| ctx.m(x);
        let t = pillar_of_term(&ctx, 1, 0, 3, &s).unwrap();
        assert_eq!(
            t.0,
            vec![
                ctx.ell(),
                m(&g[0]),
                m(&b.mul(&g[0], &g[1])),
                m(&b.product(&g))
            ]
        );
        let t = pillar_of_term(&ctx, 2, 1, 2, &s).unwrap();
        assert_eq!(
            t.0,
            vec![
                m(&g[0]),
                m(&b.mul(&g[0], &g[1])),
                m(&g[1]),
                m(&b.mul(&g[1], &g[2]))
            ]
        );
    }

    #[test]
    fn p_on_a_one_simplex() {
        let (ctx, s) = free(1);
        let g1 = ctx.source().generator(1);
        let p = homotopy_p(&ctx, &s).unwrap();
        let expected = Chain::from_terms(
            2,
            [
                (1, BarSimplex(vec![ctx.ell(), ctx.f(&g1)])),
                (-1, BarSimplex(vec![ctx.h(&g1), ctx.m(&g1)])),
                (1, BarSimplex(vec![ctx.m(&g1), ctx.g(&g1)])),
                (-1, BarSimplex(vec![ctx.k(&g1), ctx.ell()])),
            ],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn p_two_pillar_sets() {
        let (ctx, s) = free(2);
        let b = *ctx.source();
        let g = b.generators();
        let m = |x: &FreeWord| ctx.m(x);
        let g12 = b.mul(&g[0], &g[1]);
        let sys = homotopy_system(&ctx, &s).unwrap();
        let mut sets: Vec<_> = sys.terms().iter().map(|t| t.pillars.0.clone()).collect();
        let mut expected = vec![
            vec![ctx.ell(), m(&g[0]), m(&g12)],
            vec![m(&g[0]), m(&g12), m(&g[1])],
            vec![m(&g[0]), ctx.ell(), m(&g[1])],
            vec![m(&g12), m(&g[1]), ctx.ell()],
        ];
        sets.sort();
        expected.sort();
        assert_eq!(sets, expected);
        let p = homotopy_p(&ctx, &s).unwrap();
        assert_eq!(p.diameter(), 12);
        assert_eq!(
            p.coeff(&BarSimplex(vec![ctx.ell(), ctx.f(&g[0]), ctx.f(&g[1])])),
            1
        );
        assert_eq!(
            p.coeff(&BarSimplex(vec![ctx.h(&g[0]), m(&g[0]), ctx.f(&g[1])])),
            -1
        );
    }

    #[test]
    fn p_diameters_in_free_symbols() {
        for n in 0..=6 {
            let (ctx, s) = free(n);
            let p = homotopy_p(&ctx, &s).unwrap();
            assert_eq!(p.diameter(), p_diameter(n as u32), "n = {n}");
            assert_eq!(p.dim(), n + 1);
        }
    }

    #[test]
    fn theorem_identity_formally() {
        for n in 1..=4 {
            let (ctx, s) = free(n);
            let r = theorem_residual(&ctx, &s).unwrap();
            assert!(r.is_zero(), "n = {n}: {r:?}");
        }
    }

    #[test]
    fn theorem_identity_over_instance() {
        let inst = VerificationInstance::new(ConcreteGroup::cyclic(3), 5);
        let els = inst.base.elements();
        for a in &els {
            for b in &els {
                let s = BarSimplex(vec![a.clone(), b.clone()]);
                assert!(theorem_residual(&inst, &s).unwrap().is_zero());
            }
        }
        assert!(homotopy_p(&inst, &BarSimplex(vec![])).unwrap().is_zero());
        let s = BarSimplex(vec![els[1].clone()]);
        assert!(homotopy_p(&inst, &s)
            .unwrap()
            .iter()
            .all(|(x, _)| x.dim() == 2));
    }
}
