use barhom::cli::suites::{random_cancelling_pair, random_cylinder, simplicial_identities_hold};
use barhom::cylinder::{
    boundary_lemma_residual, boundary_system, cancellation_residual, check_pillars, cyl, cyl_chain,
    face_pillar, pillars_from, CylinderTerm, PillarSet, PillarSystem,
};
use barhom::group_alg::{
    quintuple_mul, Algebra, ConcreteGroup, Group, GroupElem, HomotopyExpr, QuintupleAlgebra,
    VerificationInstance,
};
use barhom::moore::{
    boundary, count_degenerate, face, linear, project, BarSimplex, Chain, Simplex,
};
use barhom::shuffle_ez::{
    aw_chain, edgewise, edgewise_shuffle_terms, ez_chain, ProductSimplex, TensorSimplex,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn groups() -> Vec<ConcreteGroup> {
    ["cyclic3", "sym3", "product(cyclic2,sym3)", "cyclic2"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
}

fn pick(group: &ConcreteGroup, idx: &[usize]) -> BarSimplex<GroupElem> {
    let el = group.elements();
    BarSimplex(idx.iter().map(|&i| el[i % el.len()].clone()).collect())
}

prop_compose! {
    fn simplex_in(max_dim: usize)(g in 0..4usize, idx in prop::collection::vec(0..64usize, 0..=max_dim))
        -> (ConcreteGroup, BarSimplex<GroupElem>) {
        let group = groups()[g].clone();
        let s = pick(&group, &idx);
        (group, s)
    }
}

prop_compose! {
    fn chain_in(max_dim: usize)(g in 0..4usize, n in 0..=max_dim,
        terms in prop::collection::vec((-3i64..=3, prop::collection::vec(0..64usize, 8)), 0..8))
        -> (ConcreteGroup, Chain<BarSimplex<GroupElem>>) {
        let group = groups()[g].clone();
        let c = Chain::from_terms(n, terms.into_iter().map(|(k, idx)| (k, pick(&group, &idx[..n]))));
        (group, c)
    }
}

prop_compose! {
    fn cylinder_in(max_dim: usize)(g in 0..4usize, n in 0..=max_dim,
        a in prop::collection::vec(0..64usize, 8), b in prop::collection::vec(0..64usize, 8), t0 in 0..64usize)
        -> (ConcreteGroup, BarSimplex<GroupElem>, BarSimplex<GroupElem>, PillarSet<GroupElem>) {
        let group = groups()[g].clone();
        let (sigma, tau) = (pick(&group, &a[..n]), pick(&group, &b[..n]));
        let t0 = pick(&group, &[t0]).0.remove(0);
        let t = pillars_from(&group, &sigma, &tau, t0).unwrap();
        (group, sigma, tau, t)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn boundary_squared_vanishes((group, c) in chain_in(5)) {
        let dd = boundary(&group, &boundary(&group, &c).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
    }

    #[test]
    fn simplicial_identities((group, s) in simplex_in(5)) {
        prop_assert!(simplicial_identities_hold(&group, &s));
    }

    #[test]
    fn project_is_a_chain_map_with_split((group, c) in chain_in(4)) {
        let lhs = boundary(&group, &project(&group, &c)).unwrap();
        let rhs = project(&group, &boundary(&group, &c).unwrap());
        prop_assert_eq!(project(&group, &lhs), rhs);
        prop_assert_eq!(c.diameter(), project(&group, &c).diameter() + count_degenerate(&group, &c));
    }

    #[test]
    fn edgewise_forms_agree_and_commute_with_boundary((group, s) in simplex_in(4)) {
        let inst = VerificationInstance::new(group.clone(), 5);
        let h = &inst.target;
        let (f, g) = (|x: &GroupElem| inst.f(x), |x: &GroupElem| inst.g(x));
        let composite = edgewise(h, f, g, &s).unwrap();
        let formula = Chain::from_terms(s.dim(), edgewise_shuffle_terms(f, g, &s));
        prop_assert_eq!(&composite, &formula);
        let lhs = boundary(h, &composite).unwrap();
        let ds = boundary(&group, &Chain::single(s.clone(), 1)).unwrap();
        let rhs = linear(&ds, s.dim().saturating_sub(1), |x| edgewise(h, f, g, x)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn aw_and_ez_are_chain_maps((group, s) in simplex_in(4), idx in prop::collection::vec(0..64usize, 4), p in 0..5usize) {
        let t = pick(&group, &idx[..s.dim()]);
        let prod = Chain::single(ProductSimplex::new(s.clone(), t.clone()).unwrap(), 1);
        let lhs = boundary(&group, &aw_chain(&group, &prod).unwrap()).unwrap();
        let rhs = aw_chain(&group, &boundary(&group, &prod).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);

        let p = p.min(s.dim());
        let tensor = Chain::single(
            TensorSimplex { left: BarSimplex(s.0[..p].to_vec()), right: BarSimplex(t.0[p..].to_vec()) },
            1,
        );
        let lhs = boundary(&group, &ez_chain(&group, &tensor).unwrap()).unwrap();
        let rhs = ez_chain(&group, &boundary(&group, &tensor).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn aw_after_ez_is_identity((group, s) in simplex_in(4), idx in prop::collection::vec(0..64usize, 4), p in 0..5usize) {
        let p = p.min(s.dim());
        let t = pick(&group, &idx[..s.dim()]);
        let x = TensorSimplex { left: BarSimplex(s.0[..p].to_vec()), right: BarSimplex(t.0[p..].to_vec()) };
        let back = aw_chain(&group, &ez_chain(&group, &Chain::single(x.clone(), 1)).unwrap()).unwrap();
        let kept: Vec<_> = back.iter().filter(|(y, _)| !y.is_degenerate(&group)).collect();
        if !x.is_degenerate(&group) {
            prop_assert_eq!(kept.len(), 1);
            prop_assert_eq!(kept[0], (&x, 1));
        }
    }

    #[test]
    fn cylinder_boundary_lemma((group, sigma, tau, t) in cylinder_in(4)) {
        prop_assert!(check_pillars(&group, &sigma, &tau, &t).is_ok());
        let c = cyl(&group, &sigma, &tau, &t).unwrap();
        prop_assert_eq!(c.dim(), sigma.dim() + 1);
        prop_assert!(c.diameter() <= sigma.dim() as u64 + 1);
        prop_assert!(boundary_lemma_residual(&group, &sigma, &tau, &t).unwrap().is_zero());
        for i in 0..=sigma.dim() {
            if sigma.dim() > 0 {
                let (a, b) = (face(&group, i, &sigma).unwrap(), face(&group, i, &tau).unwrap());
                prop_assert!(check_pillars(&group, &a, &b, &face_pillar(i, &t).unwrap()).is_ok());
            }
        }
    }

    #[test]
    fn chain_level_boundary_lemma(g in 0..4usize, n in 0..4usize, signs in prop::collection::vec(prop::bool::ANY, 1..5), seed in any::<u64>()) {
        let group = groups()[g].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let terms: Vec<CylinderTerm<GroupElem>> = signs
            .iter()
            .map(|&s| {
                let c = random_cylinder(&group, n, &mut rng);
                CylinderTerm { sign: if s { 1 } else { -1 }, ..c }
            })
            .collect();
        let sys = PillarSystem::new(&group, n, terms).unwrap();
        let lhs = boundary(&group, &cyl_chain(&sys)).unwrap();
        let rhs = sys.top_chain() - sys.bottom_chain() - cyl_chain(&boundary_system(&group, &sys).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancellation_lemma(g in 0..4usize, n in 1..=4usize, seed in any::<u64>()) {
        let group = groups()[g].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, s, m) = random_cancelling_pair(&group, n, &mut rng);
        prop_assert!(cancellation_residual(&group, &a, &b, s, m).unwrap().is_zero());
    }
}

fn letters(
    alg: &QuintupleAlgebra<ConcreteGroup>,
    picks: &[(u8, usize)],
) -> Vec<HomotopyExpr<GroupElem>> {
    let el = alg.base.elements();
    picks
        .iter()
        .map(|&(kind, i)| {
            let x = &el[i % el.len()];
            match kind % 5 {
                0 => alg.h(x),
                1 => alg.k(x),
                2 => alg.m(x),
                3 => alg.f(x),
                _ => alg.g(x),
            }
        })
        .collect()
}

proptest! {
    #[test]
    fn quintuple_products_evaluate_multiplicatively(
        g in 0..4usize,
        picks in prop::collection::vec((0u8..5, 0..64usize), 1..6),
    ) {
        let group = groups()[g].clone();
        let inst = VerificationInstance::new(group.clone(), 5);
        let alg = QuintupleAlgebra::new(group);
        let ls = letters(&alg, &picks);
        let mut acc = alg.one();
        let mut expected = inst.target.identity();
        for l in &ls {
            match quintuple_mul(&alg, &acc, l) {
                Ok(next) => {
                    expected = inst.target.mul(&expected, &inst.instance_eval(l));
                    prop_assert_eq!(inst.instance_eval(&next), expected.clone());
                    acc = next;
                }
                Err(_) => break,
            }
        }
    }

    #[test]
    fn quintuple_products_associate(
        g in 0..4usize,
        picks in prop::collection::vec((0u8..5, 0..64usize), 3),
    ) {
        let group = groups()[g].clone();
        let alg = QuintupleAlgebra::new(group);
        let ls = letters(&alg, &picks);
        let left = quintuple_mul(&alg, &ls[0], &ls[1]).and_then(|ab| quintuple_mul(&alg, &ab, &ls[2]));
        let right = quintuple_mul(&alg, &ls[1], &ls[2]).and_then(|bc| quintuple_mul(&alg, &ls[0], &bc));
        if let (Ok(l), Ok(r)) = (left, right) {
            prop_assert_eq!(l, r);
        }
    }
}

#[test]
fn quintuple_pairs_exhaustive() {
    for spec in ["cyclic2", "cyclic3"] {
        let group: ConcreteGroup = spec.parse().unwrap();
        let inst = VerificationInstance::new(group.clone(), 5);
        assert!(inst.relation_holds());
        let alg = QuintupleAlgebra::new(group);
        let n = alg.base.elements().len();
        let all: Vec<(u8, usize)> = (0..5).flat_map(|k| (0..n).map(move |i| (k, i))).collect();
        let ls = letters(&alg, &all);
        for a in &ls {
            for b in &ls {
                if let Ok(p) = quintuple_mul(&alg, a, b) {
                    let expected = inst
                        .target
                        .mul(&inst.instance_eval(a), &inst.instance_eval(b));
                    assert_eq!(inst.instance_eval(&p), expected, "{a:?} * {b:?}");
                }
            }
        }
    }
}
