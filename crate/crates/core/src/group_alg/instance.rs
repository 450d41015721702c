use super::{ConcreteGroup, Group, GroupElem, HomotopyExpr};

/// A concrete target `H = (G × G) × Z_N` carrying four homomorphisms
/// `f, g, h, k : G → H` and a central element `l`:
///
/// `f(x) = (x, e, 0)`, `g(x) = (e, x, 0)`, `h(x) = (x, x, 0)`,
/// `k(x) = (e, e, 0)`, `l = (e, e, 1)`.
///
/// `f` and `g` commute, `h` and `k` commute, and
/// `l·f(x)·g(x) = h(x)·k(x)·l` for every `x`.
#[derive(Debug, Clone)]
pub struct VerificationInstance {
    pub base: ConcreteGroup,
    pub target: ConcreteGroup,
    central: u32,
}

impl VerificationInstance {
    pub fn new(base: ConcreteGroup, central: u32) -> Self {
        assert!(
            central >= 1,
            "central cyclic factor must have positive order"
        );
        let target = ConcreteGroup::product(vec![
            ConcreteGroup::product(vec![base.clone(), base.clone()]),
            ConcreteGroup::cyclic(central),
        ]);
        VerificationInstance {
            base,
            target,
            central,
        }
    }

    pub fn central_order(&self) -> u32 {
        self.central
    }

    fn pack(&self, x: GroupElem, y: GroupElem, c: u32) -> GroupElem {
        GroupElem::Tuple(vec![GroupElem::Tuple(vec![x, y]), GroupElem::Cyclic(c)])
    }

    pub fn f(&self, x: &GroupElem) -> GroupElem {
        self.pack(x.clone(), self.base.identity(), 0)
    }

    pub fn g(&self, x: &GroupElem) -> GroupElem {
        self.pack(self.base.identity(), x.clone(), 0)
    }

    pub fn h(&self, x: &GroupElem) -> GroupElem {
        self.pack(x.clone(), x.clone(), 0)
    }

    pub fn k(&self, _x: &GroupElem) -> GroupElem {
        self.target.identity()
    }

    pub fn ell(&self) -> GroupElem {
        self.pack(self.base.identity(), self.base.identity(), 1 % self.central)
    }

    /// The pillar function `m(x) = h(x̄)·l·f(x)`.
    pub fn m(&self, x: &GroupElem) -> GroupElem {
        let t = &self.target;
        t.product([&self.h(&self.base.inv(x)), &self.ell(), &self.f(x)])
    }

    /// Interprets a formal quintuple in `H`.
    pub fn instance_eval(&self, q: &HomotopyExpr<GroupElem>) -> GroupElem {
        let t = &self.target;
        let pillar = q.m.as_ref().map_or_else(|| t.identity(), |x| self.m(x));
        t.product([
            &self.h(&q.h),
            &self.k(&q.k),
            &pillar,
            &self.f(&q.f),
            &self.g(&q.g),
        ])
    }

    /// Whether `l·f(x)·g(x) = h(x)·k(x)·l` holds for every element of `G`.
    pub fn relation_holds(&self) -> bool {
        let t = &self.target;
        self.base.elements().iter().all(|x| {
            t.product([&self.ell(), &self.f(x), &self.g(x)])
                == t.product([&self.h(x), &self.k(x), &self.ell()])
        })
    }
}
