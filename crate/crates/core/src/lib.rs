//! Exact engine for the Higgs-side Steinberg presentation, the
//! Coulomb-side extended BFN presentation, and the functor between them.

pub mod arrangement;
pub mod bridge;
pub mod config;
pub mod coulomb;
pub mod gallery;
pub mod gauge;
pub mod group;
pub mod klr;
pub mod linalg;
pub mod morphism;
pub mod parse;
pub mod lp;
pub mod poly;
pub mod presets;
pub mod probe;
pub mod quiver;
pub mod ratfun;
pub mod rational;
pub mod report;
pub mod steinberg;
pub mod twisted;

pub use group::GroupElt;
pub use poly::Poly;
pub use ratfun::RatFun;
pub use rational::Q;
pub use twisted::TwistedOp;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
