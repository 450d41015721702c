//! Verification suites behind `barhom verify`.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cylinder::{
    boundary_lemma_residual, cancellation_residual, check_pillars, face_pillar, pillars_from,
    CylinderTerm,
};
use crate::error::Result;
use crate::group_alg::{
    ConcreteGroup, FreeGroup, Group, GroupElem, MitosisAlgebra, VerificationInstance,
};
use crate::homotopy::theorem_residual;
use crate::homotopy::tower::psi_residual;
use crate::moore::{boundary, degeneracy, face, linear, project, BarSimplex, Chain, Simplex};
use crate::shuffle_ez::{
    aw_chain, edgewise, edgewise_shuffle_terms, ez_chain, ProductSimplex, TensorSimplex,
};

/// Outcome of one named check over a number of cases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: u64,
    pub residual_terms: u64,
    pub first_offending: Option<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.into(),
            cases: 0,
            residual_terms: 0,
            first_offending: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.residual_terms == 0 && self.first_offending.is_none()
    }

    fn record<S: Simplex + std::fmt::Debug>(
        &mut self,
        input: &dyn std::fmt::Debug,
        residual: Result<Chain<S>>,
    ) {
        self.cases += 1;
        match residual {
            Ok(r) if r.is_zero() => {}
            Ok(r) => {
                self.residual_terms += r.len() as u64;
                if self.first_offending.is_none() {
                    let (t, c) = r.iter().next().unwrap();
                    self.first_offending =
                        Some(format!("input {input:?}: residual term {c} * {t:?}"));
                }
            }
            Err(e) => {
                self.residual_terms += 1;
                if self.first_offending.is_none() {
                    self.first_offending = Some(format!("input {input:?}: {e}"));
                }
            }
        }
    }

    fn record_bool(&mut self, input: &dyn std::fmt::Debug, ok: bool) {
        self.cases += 1;
        if !ok {
            self.residual_terms += 1;
            if self.first_offending.is_none() {
                self.first_offending = Some(format!("input {input:?}"));
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "cases": self.cases,
            "residual_terms": self.residual_terms,
            "status": if self.passed() { "pass" } else { "residual" },
            "first_offending": self.first_offending,
        })
    }
}

/// Every `n`-simplex over a finite group.
pub fn all_simplices(group: &ConcreteGroup, n: usize) -> Vec<BarSimplex<GroupElem>> {
    if n == 0 {
        return vec![BarSimplex(vec![])];
    }
    let elems = group.elements();
    std::iter::repeat_n(elems, n)
        .multi_cartesian_product()
        .map(BarSimplex)
        .collect()
}

pub fn random_simplex<R: Rng>(
    group: &ConcreteGroup,
    n: usize,
    rng: &mut R,
) -> BarSimplex<GroupElem> {
    BarSimplex((0..n).map(|_| group.random(rng)).collect())
}

/// Simplices of dimension `0..=max_dim`: exhaustive while the count stays
/// below `limit`, otherwise `limit` random ones.
fn simplices_up_to<R: Rng>(
    group: &ConcreteGroup,
    max_dim: usize,
    limit: u64,
    rng: &mut R,
) -> Vec<BarSimplex<GroupElem>> {
    let order = group.order().unwrap_or(u64::MAX);
    let mut out = Vec::new();
    for n in 0..=max_dim {
        let count = order.checked_pow(n as u32).unwrap_or(u64::MAX);
        if count <= limit {
            out.extend(all_simplices(group, n));
        } else {
            out.extend((0..limit).map(|_| random_simplex(group, n, rng)));
        }
    }
    out
}

/// `(∂P + P∂)(σ) = (Ed_(f,g) - Ed_(h,k))(σ)` over the verification
/// instance: exhaustive up to `max_dim`, then `samples` random simplices in
/// dimension `max_dim + 1`.
pub fn homotopy_identity(
    group: &ConcreteGroup,
    central: u32,
    max_dim: usize,
    samples: u64,
    seed: u64,
) -> Vec<CheckResult> {
    let inst = VerificationInstance::new(group.clone(), central);
    let mut exhaustive = CheckResult::new("homotopy_identity_exhaustive");
    for n in 0..=max_dim {
        for s in all_simplices(group, n) {
            exhaustive.record(&s, theorem_residual(&inst, &s));
        }
    }
    let mut out = vec![exhaustive];
    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut random = CheckResult::new("homotopy_identity_random");
        for _ in 0..samples {
            let s = random_simplex(group, max_dim + 1, &mut rng);
            random.record(&s, theorem_residual(&inst, &s));
        }
        out.push(random);
    }
    out
}

/// A random compatible cylinder pair `(σ, τ, T)` of dimension `n`.
pub fn random_cylinder<R: Rng>(
    group: &ConcreteGroup,
    n: usize,
    rng: &mut R,
) -> CylinderTerm<GroupElem> {
    let top = random_simplex(group, n, rng);
    let bottom = random_simplex(group, n, rng);
    let pillars = pillars_from(group, &top, &bottom, group.random(rng)).unwrap();
    CylinderTerm {
        sign: 1,
        top,
        bottom,
        pillars,
    }
}

/// Two cylinders sharing a cancelling side, cut from one `(n+1)`-cylinder:
/// `σ = d_i ρ`, `μ = d_j ρ` with `j - i` even, glued along `d_{j-1}σ = d_iμ`.
pub fn random_cancelling_pair<R: Rng>(
    group: &ConcreteGroup,
    n: usize,
    rng: &mut R,
) -> (
    CylinderTerm<GroupElem>,
    CylinderTerm<GroupElem>,
    usize,
    usize,
) {
    let outer = random_cylinder(group, n + 1, rng);
    let pairs: Vec<(usize, usize)> = (0..=n + 1)
        .tuple_combinations()
        .filter(|(i, j)| (j - i) % 2 == 0)
        .collect();
    let (i, j) = pairs[rng.gen_range(0..pairs.len())];
    let cut = |k: usize| CylinderTerm {
        sign: 1,
        top: face(group, k, &outer.top).unwrap(),
        bottom: face(group, k, &outer.bottom).unwrap(),
        pillars: face_pillar(k, &outer.pillars).unwrap(),
    };
    (cut(i), cut(j), j - 1, i)
}

/// The boundary lemma, face compatibility and the cancellation lemma on
/// `samples` random cylinders of each dimension up to `max_dim`.
pub fn cylinder(
    group: &ConcreteGroup,
    max_dim: usize,
    samples: u64,
    seed: u64,
) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lemma = CheckResult::new("cylinder_boundary");
    let mut faces = CheckResult::new("cylinder_face_compatibility");
    let mut cancel = CheckResult::new("cylinder_cancellation");
    for n in 0..=max_dim {
        for _ in 0..samples {
            let c = random_cylinder(group, n, &mut rng);
            lemma.record(
                &c,
                boundary_lemma_residual(group, &c.top, &c.bottom, &c.pillars),
            );
            if n > 0 {
                for i in 0..=n {
                    let ok = check_pillars(
                        group,
                        &face(group, i, &c.top).unwrap(),
                        &face(group, i, &c.bottom).unwrap(),
                        &face_pillar(i, &c.pillars).unwrap(),
                    )
                    .is_ok();
                    faces.record_bool(&(i, &c), ok);
                }
                let (a, b, s, m) = random_cancelling_pair(group, n, &mut rng);
                cancel.record(&(s, m, &a, &b), cancellation_residual(group, &a, &b, s, m));
            }
        }
    }
    vec![lemma, faces, cancel]
}

/// `(∂Ψ + Ψ∂)(σ) = σ - [e..e]` on free symbols `[g_1..g_m]` for
/// `m ≤ max_dim`, together with `samples` random simplices over the free
/// group of rank 2.
pub fn psi_identity(level: usize, max_dim: usize, samples: u64, seed: u64) -> Vec<CheckResult> {
    let mut generic = CheckResult::new("psi_identity_free_symbols");
    for m in 0..=max_dim {
        let alg = MitosisAlgebra::new(FreeGroup::new(m));
        let s = BarSimplex(alg.base.generators());
        generic.record(&s, psi_residual(&alg, level, &s));
    }
    let mut random = CheckResult::new("psi_identity_random_words");
    let alg = MitosisAlgebra::new(FreeGroup::new(2));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let m = rng.gen_range(1..=max_dim.max(1));
        let s = BarSimplex((0..m).map(|_| random_word(&alg.base, &mut rng)).collect());
        random.record(&s, psi_residual(&alg, level, &s));
    }
    vec![generic, random]
}

fn random_word<R: Rng>(f: &FreeGroup, rng: &mut R) -> crate::group_alg::FreeWord {
    let len = rng.gen_range(0..=2);
    let letters: Vec<i32> = (0..len)
        .map(|_| if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=f.rank as i32))
        .collect();
    crate::group_alg::FreeWord::from_letters(letters).unwrap()
}

fn random_chain<R: Rng>(
    group: &ConcreteGroup,
    n: usize,
    terms: usize,
    rng: &mut R,
) -> Chain<BarSimplex<GroupElem>> {
    Chain::from_terms(
        n,
        (0..terms).map(|_| (rng.gen_range(-3..=3), random_simplex(group, n, rng))),
    )
}

/// Structural identities: `∂² = 0`, simplicial identities, `p` as a chain
/// map with the `L¹` split, Ed's two forms and chain-map property, and the
/// AW and EZ chain maps.
pub fn chainmap(
    group: &ConcreteGroup,
    central: u32,
    max_dim: usize,
    limit: u64,
    seed: u64,
) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inst = VerificationInstance::new(group.clone(), central);
    let h = &inst.target;
    let mut dd = CheckResult::new("boundary_squared");
    let mut ident = CheckResult::new("simplicial_identities");
    let mut proj = CheckResult::new("project_chain_map");
    let mut split = CheckResult::new("project_l1_split");
    let mut agree = CheckResult::new("edgewise_forms_agree");
    let mut ed_map = CheckResult::new("edgewise_chain_map");
    let mut aw_map = CheckResult::new("aw_chain_map");
    let mut ez_map = CheckResult::new("ez_chain_map");

    let f = |x: &GroupElem| inst.f(x);
    let g = |x: &GroupElem| inst.g(x);
    for s in simplices_up_to(group, max_dim, limit, &mut rng) {
        let n = s.dim();
        let c = Chain::single(s.clone(), 1);
        dd.record(&s, boundary(group, &c).and_then(|b| boundary(group, &b)));
        ident.record_bool(&s, simplicial_identities_hold(group, &s));

        let formula = Chain::from_terms(n, edgewise_shuffle_terms(f, g, &s));
        agree.record(&s, edgewise(h, f, g, &s).map(|e| e - formula));
        let lhs = edgewise(h, f, g, &s).and_then(|e| boundary(h, &e));
        let rhs = boundary(group, &c)
            .and_then(|b| linear(&b, n.saturating_sub(1), |x| edgewise(h, f, g, x)));
        ed_map.record(&s, lhs.and_then(|l| Ok(l - rhs?)));

        let t = random_simplex(group, n, &mut rng);
        let prod = Chain::single(
            ProductSimplex {
                first: s.clone(),
                second: t.clone(),
            },
            1,
        );
        let lhs = aw_chain(group, &prod).and_then(|a| boundary(group, &a));
        let rhs = boundary(group, &prod).and_then(|b| aw_chain(group, &b));
        aw_map.record(&(&s, &t), lhs.and_then(|l| Ok(l - rhs?)));

        let p = rng.gen_range(0..=n);
        let tensor = Chain::single(
            TensorSimplex {
                left: BarSimplex(s.0[..p].to_vec()),
                right: BarSimplex(t.0[p..].to_vec()),
            },
            1,
        );
        let lhs = ez_chain(group, &tensor).and_then(|e| boundary(group, &e));
        let rhs = boundary(group, &tensor).and_then(|b| ez_chain(group, &b));
        ez_map.record(&(&s, &t, p), lhs.and_then(|l| Ok(l - rhs?)));

        let rc = random_chain(group, n, 6, &mut rng);
        let lhs = boundary(group, &project(group, &rc)).map(|b| project(group, &b));
        let rhs = boundary(group, &rc).map(|b| project(group, &b));
        proj.record(&rc, lhs.and_then(|l| Ok(l - rhs?)));
        let deg = crate::moore::count_degenerate(group, &rc);
        split.record_bool(&rc, rc.diameter() == project(group, &rc).diameter() + deg);
    }
    vec![dd, ident, proj, split, agree, ed_map, aw_map, ez_map]
}

/// `d_i d_j = d_{j-1} d_i` for `i < j`, `d_i s_j = s_{j-1} d_i` for `i < j`,
/// `d_j s_j = d_{j+1} s_j = id`, `d_i s_j = s_j d_{i-1}` for `i > j+1`,
/// and `s_i s_j = s_{j+1} s_i` for `i ≤ j`.
pub fn simplicial_identities_hold<G: Group>(group: &G, s: &BarSimplex<G::Elem>) -> bool {
    let n = s.dim();
    let d = |i, x: &BarSimplex<G::Elem>| face(group, i, x).unwrap();
    let sd = |i, x: &BarSimplex<G::Elem>| degeneracy(group, i, x).unwrap();
    let mut ok = true;
    if n >= 2 {
        for j in 1..=n {
            for i in 0..j {
                ok &= d(i, &d(j, s)) == d(j - 1, &d(i, s));
            }
        }
    }
    for j in 0..=n {
        let up = sd(j, s);
        ok &= d(j, &up) == *s && d(j + 1, &up) == *s;
        for i in 0..j {
            if n >= 1 {
                ok &= d(i, &up) == sd(j - 1, &d(i, s));
            }
        }
        for i in j + 2..=n + 1 {
            ok &= d(i, &up) == sd(j, &d(i - 1, s));
        }
        for i in 0..=j {
            ok &= sd(i, &up) == sd(j + 1, &sd(i, s));
        }
    }
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_all_simplices() {
        let z = ConcreteGroup::cyclic(3);
        assert_eq!(all_simplices(&z, 0).len(), 1);
        assert_eq!(all_simplices(&z, 3).len(), 27);
    }

    #[test]
    fn small_suites_pass() {
        let z = ConcreteGroup::cyclic(2);
        assert!(homotopy_identity(&z, 5, 2, 5, 0)
            .iter()
            .all(CheckResult::passed));
        assert!(cylinder(&z, 3, 5, 0).iter().all(CheckResult::passed));
        assert!(chainmap(&z, 5, 3, 20, 0).iter().all(CheckResult::passed));
        assert!(psi_identity(2, 2, 5, 0).iter().all(CheckResult::passed));
    }

    #[test]
    fn cancelling_pairs_share_a_side() {
        let g = ConcreteGroup::Permutation(3);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 1..=3 {
            let (a, b, s, m) = random_cancelling_pair(&g, n, &mut rng);
            assert_eq!(face(&g, s, &a.top).unwrap(), face(&g, m, &b.top).unwrap());
        }
    }

    #[test]
    fn residual_is_reported() {
        let mut r = CheckResult::new("x");
        let c: Chain<BarSimplex<u8>> = Chain::single(BarSimplex(vec![1]), 2);
        r.record(&"input", Ok(c));
        assert!(!r.passed());
        assert!(r.first_offending.unwrap().contains("residual term 2"));
    }
}
