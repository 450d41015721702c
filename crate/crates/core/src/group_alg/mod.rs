//! Group contexts and the entry algebras that simplices are built from.
//!
//! A [`Group`] is an exact group with total multiplication. An [`Algebra`] is
//! the weaker structure that chains actually need: a multiplication that may
//! refuse a product it has no normal form for. Every group is an algebra.

mod concrete;
mod free;
mod instance;
mod mitosis;
mod quintuple;

use std::fmt::Debug;
use std::hash::Hash;

use serde_json::Value;

use crate::error::{Error, Result};

pub use concrete::{ConcreteGroup, GroupElem};
pub use free::{FreeGroup, FreeWord};
pub use instance::VerificationInstance;
pub use mitosis::{
    mitosis_reduce, MitosisAlgebra, MitosisElem, MitosisLetter, MitosisWord, WordAlgebra,
};
pub use quintuple::{quintuple_mul, HomotopyExpr, QuintupleAlgebra};

/// An exact group: identity, total product, inverse and decidable equality.
pub trait Group {
    type Elem: Clone + Ord + Hash + Debug;

    fn identity(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    /// Product of a sequence of elements, left to right.
    fn product<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.identity(), |acc, x| self.mul(&acc, x))
    }
}

/// Entries of bar simplices. Multiplication is partial: formal algebras only
/// know how to multiply the adjacent pairs that their rewrite rules cover.
pub trait Algebra {
    type Elem: Clone + Ord + Hash + Debug;

    fn one(&self) -> Self::Elem;
    fn try_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

impl<G: Group> Algebra for G {
    type Elem = G::Elem;

    fn one(&self) -> G::Elem {
        self.identity()
    }

    fn try_mul(&self, a: &G::Elem, b: &G::Elem) -> Result<G::Elem> {
        Ok(self.mul(a, b))
    }

    fn is_one(&self, a: &G::Elem) -> bool {
        self.is_identity(a)
    }
}

/// JSON encoding of algebra elements, used by the chain interchange format.
pub trait EntryEncode: Algebra {
    fn encode(&self, x: &Self::Elem) -> Value;
}

/// Decoding counterpart of [`EntryEncode`]. Decoders validate membership.
pub trait EntryCodec: EntryEncode {
    fn decode(&self, v: &Value) -> Result<Self::Elem>;
}

/// Conjugation `a^b = b·a·b̄`.
pub fn conj<G: Group>(group: &G, a: &G::Elem, b: &G::Elem) -> G::Elem {
    group.mul(&group.mul(b, a), &group.inv(b))
}

pub(crate) fn non_normalizable<A: Debug, B: Debug>(a: &A, b: &B) -> Error {
    Error::NonNormalizable {
        left: format!("{a:?}"),
        right: format!("{b:?}"),
    }
}
