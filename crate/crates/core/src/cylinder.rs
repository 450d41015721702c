//! Simplicial cylinders between bar simplices and between chains.

use crate::error::{Error, Result};
use crate::group_alg::{Algebra, Group};
use crate::moore::{boundary, face, sign, BarSimplex, Chain};

/// Pillars `{t_0, .., t_n}` joining the vertices of an `n`-simplex pair.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PillarSet<E>(pub Vec<E>);

impl<E: Clone> PillarSet<E> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Checks `t_i·a_{i+1} = b_{i+1}·t_{i+1}` for `σ = [a_1..a_n]`,
/// `τ = [b_1..b_n]`, reporting the first failing index.
pub fn check_pillars<A: Algebra>(
    alg: &A,
    sigma: &BarSimplex<A::Elem>,
    tau: &BarSimplex<A::Elem>,
    t: &PillarSet<A::Elem>,
) -> Result<()> {
    let n = sigma.dim();
    if tau.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: tau.dim(),
        });
    }
    if t.len() != n + 1 {
        return Err(Error::DimensionMismatch {
            expected: n + 1,
            found: t.len(),
        });
    }
    for i in 0..n {
        let lhs = alg.try_mul(&t.0[i], &sigma.0[i])?;
        let rhs = alg.try_mul(&tau.0[i], &t.0[i + 1])?;
        if lhs != rhs {
            return Err(Error::IncompatiblePillars { index: i });
        }
    }
    Ok(())
}

/// `Cyl(σ, τ, T) = Σ_r (-1)^r [b_1, .., b_r, t_r, a_{r+1}, .., a_n]`.
///
/// The cylinder over the 0-simplex pair is the 1-simplex `[t_0]`.
pub fn cyl<A: Algebra>(
    alg: &A,
    sigma: &BarSimplex<A::Elem>,
    tau: &BarSimplex<A::Elem>,
    t: &PillarSet<A::Elem>,
) -> Result<Chain<BarSimplex<A::Elem>>> {
    check_pillars(alg, sigma, tau, t)?;
    Ok(cyl_unchecked(sigma, tau, t))
}

pub(crate) fn cyl_terms<'a, E: Clone>(
    sigma: &'a BarSimplex<E>,
    tau: &'a BarSimplex<E>,
    t: &'a PillarSet<E>,
) -> impl Iterator<Item = (i64, BarSimplex<E>)> + 'a {
    let n = sigma.dim();
    (0..=n).map(move |r| {
        let mut entries = Vec::with_capacity(n + 1);
        entries.extend_from_slice(&tau.0[..r]);
        entries.push(t.0[r].clone());
        entries.extend_from_slice(&sigma.0[r..]);
        (sign(r), BarSimplex(entries))
    })
}

fn cyl_unchecked<E: Clone + Ord + std::fmt::Debug>(
    sigma: &BarSimplex<E>,
    tau: &BarSimplex<E>,
    t: &PillarSet<E>,
) -> Chain<BarSimplex<E>> {
    Chain::from_terms(sigma.dim() + 1, cyl_terms(sigma, tau, t))
}

/// `d_i T`: delete the `i`-th pillar.
pub fn face_pillar<E: Clone>(i: usize, t: &PillarSet<E>) -> Result<PillarSet<E>> {
    if i >= t.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            dim: t.len().saturating_sub(1),
        });
    }
    let mut out = t.0.clone();
    out.remove(i);
    Ok(PillarSet(out))
}

/// The unique pillar set over `(σ, τ)` starting at `t_0`, from
/// `t_{i+1} = b̄_{i+1}·t_i·a_{i+1}`.
pub fn pillars_from<G: Group>(
    group: &G,
    sigma: &BarSimplex<G::Elem>,
    tau: &BarSimplex<G::Elem>,
    t0: G::Elem,
) -> Result<PillarSet<G::Elem>> {
    if tau.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: sigma.dim(),
            found: tau.dim(),
        });
    }
    let mut t = vec![t0];
    for (a, b) in sigma.0.iter().zip(&tau.0) {
        let next = group.product([&group.inv(b), t.last().unwrap(), a]);
        t.push(next);
    }
    Ok(PillarSet(t))
}

/// Residual of the boundary lemma
/// `∂Cyl(σ,τ,T) = (σ - τ) - Σ_i (-1)^i Cyl(d_iσ, d_iτ, d_iT)`.
pub fn boundary_lemma_residual<A: Algebra>(
    alg: &A,
    sigma: &BarSimplex<A::Elem>,
    tau: &BarSimplex<A::Elem>,
    t: &PillarSet<A::Elem>,
) -> Result<Chain<BarSimplex<A::Elem>>> {
    let n = sigma.dim();
    let mut out = boundary(alg, &cyl(alg, sigma, tau, t)?)?;
    out.add_term(sigma.clone(), -1);
    out.add_term(tau.clone(), 1);
    if n > 0 {
        for i in 0..=n {
            let side = cyl(
                alg,
                &face(alg, i, sigma)?,
                &face(alg, i, tau)?,
                &face_pillar(i, t)?,
            )?;
            out.add_scaled(&side, sign(i));
        }
    }
    Ok(out)
}

/// For two cylinders with `(-1)^s d_s σ + (-1)^m d_m μ = 0`, the same for
/// `τ, ν`, and `d_s T = d_m U`, returns the residual of
/// `∂(Cyl(σ,τ,T) + Cyl(μ,ν,U)) = (σ+μ) - (τ+ν) - Σ_{i≠s} (-1)^i Cyl(d_i..) - Σ_{j≠m} (-1)^j Cyl(d_j..)`.
pub fn cancellation_residual<A: Algebra>(
    alg: &A,
    first: &CylinderTerm<A::Elem>,
    second: &CylinderTerm<A::Elem>,
    s: usize,
    m: usize,
) -> Result<Chain<BarSimplex<A::Elem>>> {
    let n = first.top.dim();
    let shared = |c: &CylinderTerm<A::Elem>, k: usize| -> Result<_> {
        Ok((
            face(alg, k, &c.top)?,
            face(alg, k, &c.bottom)?,
            face_pillar(k, &c.pillars)?,
        ))
    };
    let (ds_top, ds_bottom, ds_t) = shared(first, s)?;
    let (dm_top, dm_bottom, dm_u) = shared(second, m)?;
    if ds_top != dm_top || ds_bottom != dm_bottom || sign(s) != -sign(m) || ds_t != dm_u {
        return Err(Error::Domain(
            "cylinders do not share a cancelling side".into(),
        ));
    }
    let mut out = boundary(alg, &cyl(alg, &first.top, &first.bottom, &first.pillars)?)?;
    out.add_scaled(
        &boundary(
            alg,
            &cyl(alg, &second.top, &second.bottom, &second.pillars)?,
        )?,
        1,
    );
    for c in [first, second] {
        out.add_term(c.top.clone(), -1);
        out.add_term(c.bottom.clone(), 1);
    }
    for (c, skip) in [(first, s), (second, m)] {
        for i in (0..=n).filter(|&i| i != skip) {
            let (a, b, t) = shared(c, i)?;
            out.add_scaled(&cyl(alg, &a, &b, &t)?, sign(i));
        }
    }
    Ok(out)
}

/// One signed cylinder `sign · Cyl(top, bottom, pillars)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderTerm<E> {
    pub sign: i64,
    pub top: BarSimplex<E>,
    pub bottom: BarSimplex<E>,
    pub pillars: PillarSet<E>,
}

/// A family of pillar sets indexed by term position, each attached to its
/// top and bottom simplex. Compatibility is checked on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PillarSystem<E> {
    dim: usize,
    terms: Vec<CylinderTerm<E>>,
}

impl<E: Clone + Ord + std::fmt::Debug> PillarSystem<E> {
    pub fn new<A: Algebra<Elem = E>>(
        alg: &A,
        dim: usize,
        terms: Vec<CylinderTerm<E>>,
    ) -> Result<Self> {
        for t in &terms {
            if t.top.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: t.top.dim(),
                });
            }
            check_pillars(alg, &t.top, &t.bottom, &t.pillars)?;
        }
        Ok(PillarSystem { dim, terms })
    }

    /// Pairs matched term lists of two chains with their pillar sets.
    pub fn from_term_lists<A: Algebra<Elem = E>>(
        alg: &A,
        dim: usize,
        top: &[(i64, BarSimplex<E>)],
        bottom: &[(i64, BarSimplex<E>)],
        pillars: Vec<PillarSet<E>>,
    ) -> Result<Self> {
        if top.len() != bottom.len() || top.len() != pillars.len() {
            return Err(Error::TermMismatch {
                position: top.len().min(bottom.len()).min(pillars.len()),
            });
        }
        let terms = top
            .iter()
            .zip(bottom)
            .zip(pillars)
            .enumerate()
            .map(|(position, (((s, a), (s2, b)), t))| {
                if s != s2 {
                    return Err(Error::TermMismatch { position });
                }
                Ok(CylinderTerm {
                    sign: *s,
                    top: a.clone(),
                    bottom: b.clone(),
                    pillars: t,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PillarSystem::new(alg, dim, terms)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[CylinderTerm<E>] {
        &self.terms
    }

    pub fn top_chain(&self) -> Chain<BarSimplex<E>> {
        Chain::from_terms(self.dim, self.terms.iter().map(|t| (t.sign, t.top.clone())))
    }

    pub fn bottom_chain(&self) -> Chain<BarSimplex<E>> {
        Chain::from_terms(
            self.dim,
            self.terms.iter().map(|t| (t.sign, t.bottom.clone())),
        )
    }
}

/// `Σ_i sign_i · Cyl(σ_i, τ_i, T_i)`.
pub fn cyl_chain<E: Clone + Ord + std::fmt::Debug>(s: &PillarSystem<E>) -> Chain<BarSimplex<E>> {
    let mut out = Chain::zero(s.dim + 1);
    for t in &s.terms {
        for (sg, x) in cyl_terms(&t.top, &t.bottom, &t.pillars) {
            out.add_term(x, sg * t.sign);
        }
    }
    out
}

/// The face-indexed system `{(-1)^k d_k T_i}` over `(∂Σσ, ∂Στ)`.
pub fn boundary_system<A: Algebra>(
    alg: &A,
    s: &PillarSystem<A::Elem>,
) -> Result<PillarSystem<A::Elem>> {
    let n = s.dim;
    let mut terms = Vec::new();
    if n > 0 {
        for t in &s.terms {
            for k in 0..=n {
                terms.push(CylinderTerm {
                    sign: t.sign * sign(k),
                    top: face(alg, k, &t.top)?,
                    bottom: face(alg, k, &t.bottom)?,
                    pillars: face_pillar(k, &t.pillars)?,
                });
            }
        }
    }
    PillarSystem::new(alg, n.saturating_sub(1), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_alg::{ConcreteGroup, FreeGroup, Group, GroupElem};

    fn free_pair() -> (FreeGroup, Vec<crate::group_alg::FreeWord>) {
        let f = FreeGroup::new(3);
        let g = f.generators();
        (f, g)
    }

    #[test]
    fn cylinder_of_one_simplices() {
        // [t0, a] - [b, t1] with t1 = b̄ t0 a
        let (f, g) = free_pair();
        let (a, b, t0) = (&g[0], &g[1], &g[2]);
        let t1 = f.product([&f.inv(b), t0, a]);
        let t = PillarSet(vec![t0.clone(), t1.clone()]);
        let c = cyl(
            &f,
            &BarSimplex(vec![a.clone()]),
            &BarSimplex(vec![b.clone()]),
            &t,
        )
        .unwrap();
        let expected = Chain::from_terms(
            2,
            [
                (1, BarSimplex(vec![t0.clone(), a.clone()])),
                (-1, BarSimplex(vec![b.clone(), t1])),
            ],
        );
        assert_eq!(c, expected);
    }

    #[test]
    fn incompatible_pillars_report_index() {
        let z = ConcreteGroup::cyclic(5);
        let s = BarSimplex(vec![GroupElem::Cyclic(1), GroupElem::Cyclic(2)]);
        let t = PillarSet(vec![
            GroupElem::Cyclic(0),
            GroupElem::Cyclic(0),
            GroupElem::Cyclic(1),
        ]);
        assert_eq!(
            cyl(&z, &s, &s, &t),
            Err(Error::IncompatiblePillars { index: 1 })
        );
    }

    #[test]
    fn zero_simplex_cylinder_is_pillar() {
        let z = ConcreteGroup::cyclic(5);
        let t = PillarSet(vec![GroupElem::Cyclic(3)]);
        let c = cyl(&z, &BarSimplex(vec![]), &BarSimplex(vec![]), &t).unwrap();
        assert_eq!(c, Chain::single(BarSimplex(vec![GroupElem::Cyclic(3)]), 1));
    }

    #[test]
    fn face_pillar_deletes() {
        let t = PillarSet(vec![0, 1, 2]);
        assert_eq!(face_pillar(0, &t).unwrap(), PillarSet(vec![1, 2]));
        assert_eq!(face_pillar(2, &t).unwrap(), PillarSet(vec![0, 1]));
        assert!(face_pillar(3, &t).is_err());
    }

    #[test]
    fn boundary_lemma_on_a_one_simplex() {
        let (f, g) = free_pair();
        let (a, b, t0) = (&g[0], &g[1], &g[2]);
        let t1 = f.product([&f.inv(b), t0, a]);
        let (s, tau) = (BarSimplex(vec![a.clone()]), BarSimplex(vec![b.clone()]));
        let sys = PillarSystem::new(
            &f,
            1,
            vec![CylinderTerm {
                sign: 1,
                top: s,
                bottom: tau,
                pillars: PillarSet(vec![t0.clone(), t1]),
            }],
        )
        .unwrap();
        let lhs = boundary(&f, &cyl_chain(&sys)).unwrap();
        let rhs =
            sys.top_chain() - sys.bottom_chain() - cyl_chain(&boundary_system(&f, &sys).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(boundary_system(&f, &sys).unwrap().terms().len(), 2);
    }

    #[test]
    fn empty_system_boundary_is_empty() {
        let f = FreeGroup::new(1);
        let sys = PillarSystem::new(&f, 2, vec![]).unwrap();
        assert!(boundary_system(&f, &sys).unwrap().terms().is_empty());
    }

    #[test]
    fn worked_cancellation_example() {
        let f = FreeGroup::new(7);
        let g = f.generators();
        let (a1, a2, a3, b1, b2, b3, t0) = (&g[0], &g[1], &g[2], &g[3], &g[4], &g[5], &g[6]);
        let sigma = BarSimplex(vec![a1.clone(), a2.clone()]);
        let tau = BarSimplex(vec![b1.clone(), b2.clone()]);
        let t = pillars_from(&f, &sigma, &tau, t0.clone()).unwrap();
        let mu = BarSimplex(vec![f.mul(a1, a2), a3.clone()]);
        let nu = BarSimplex(vec![f.mul(b1, b2), b3.clone()]);
        let t3 = f.product([&f.inv(b3), &t.0[2], a3]);
        let u = PillarSet(vec![t0.clone(), t.0[2].clone(), t3]);
        let first = CylinderTerm {
            sign: 1,
            top: sigma,
            bottom: tau,
            pillars: t,
        };
        let second = CylinderTerm {
            sign: 1,
            top: mu,
            bottom: nu,
            pillars: u,
        };
        assert!(cancellation_residual(&f, &first, &second, 1, 2)
            .unwrap()
            .is_zero());

        let sum = cyl(&f, &first.top, &first.bottom, &first.pillars).unwrap()
            + cyl(&f, &second.top, &second.bottom, &second.pillars).unwrap();
        let db = boundary(&f, &sum).unwrap();
        let side_a = BarSimplex(vec![t0.clone(), f.mul(a1, a2)]);
        let side_b = BarSimplex(vec![f.mul(b1, b2), first.pillars.0[2].clone()]);
        assert_eq!(db.coeff(&side_a), 0);
        assert_eq!(db.coeff(&side_b), 0);
        assert_eq!(db.diameter(), 4 + 8);
        assert!(cancellation_residual(&f, &first, &second, 0, 2).is_err());
    }

    #[test]
    fn boundary_lemma_in_each_dimension() {
        let f = FreeGroup::new(9);
        let g = f.generators();
        for n in 0..=4 {
            let sigma = BarSimplex(g[..n].to_vec());
            let tau = BarSimplex(g[4..4 + n].to_vec());
            let t = pillars_from(&f, &sigma, &tau, g[8].clone()).unwrap();
            assert!(
                boundary_lemma_residual(&f, &sigma, &tau, &t)
                    .unwrap()
                    .is_zero(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn mismatched_term_lists() {
        let f = FreeGroup::new(1);
        let s = BarSimplex(vec![f.generator(1)]);
        let err = PillarSystem::from_term_lists(
            &f,
            1,
            &[(1, s.clone())],
            &[(-1, s.clone())],
            vec![PillarSet(vec![f.identity(), f.identity()])],
        );
        assert_eq!(err, Err(Error::TermMismatch { position: 0 }));
    }
}
