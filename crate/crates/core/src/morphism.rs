//! Morphisms: a twisted operator with source and target objects.

use crate::twisted::TwistedOp;
use crate::{Error, Result};
use std::fmt::Debug;

#[derive(Clone, Debug)]
pub struct Morphism<O> {
    pub source: O,
    pub target: O,
    pub op: TwistedOp,
}

impl<O: Clone + PartialEq + Debug> Morphism<O> {
    pub fn new(target: O, source: O, op: TwistedOp) -> Self {
        Morphism { source, target, op }
    }

    /// self ∘ other (other acts first).
    pub fn then_after(&self, other: &Morphism<O>) -> Result<Morphism<O>> {
        if other.target != self.source {
            return Err(Error::Input(format!(
                "cannot compose: {:?} does not match {:?}",
                other.target, self.source
            )));
        }
        Ok(Morphism { source: other.source.clone(), target: self.target.clone(), op: &self.op * &other.op })
    }

    pub fn add(&self, other: &Morphism<O>) -> Result<Morphism<O>> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Input("cannot add morphisms between different objects".into()));
        }
        Ok(Morphism { source: self.source.clone(), target: self.target.clone(), op: &self.op + &other.op })
    }

    pub fn same_as(&self, other: &Morphism<O>) -> bool {
        self.source == other.source && self.target == other.target && self.op == other.op
    }
}

/// Left-to-right product of a nonempty chain.
pub fn compose_all<O: Clone + PartialEq + Debug>(chain: &[Morphism<O>]) -> Result<Morphism<O>> {
    let (first, rest) = chain
        .split_first()
        .ok_or_else(|| Error::Input("empty composition".into()))?;
    rest.iter().try_fold(first.clone(), |acc, m| acc.then_after(m))
}
