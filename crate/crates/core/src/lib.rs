//! Exact computations in the inverse monoid of injective partial selfmaps
//! of ω with cofinite domain and range.
//!
//! Elements are restricted to the eventually-shift fragment: a finite
//! exception table followed by a translation `n ↦ n + k`. This fragment is
//! closed under products and inverses and contains every idempotent, every
//! finitary permutation and the generators of the bicyclic subsemigroups
//! built in [`chain`].
//!
//! All types are generic over a signed integer [`Scalar`]; the aliases at
//! the crate root fix it to `i64`.

pub mod chain;
pub mod cli;
pub mod congruence;
pub mod element;
pub mod error;
pub mod expr;
pub mod green;
pub mod oracle;
pub mod scalar;
pub mod set;

pub use chain::{BicyclicPair, ChainSpec};
pub use congruence::Side;
pub use element::{Classification, CofiniteInjection, Stats};
pub use error::Error;
pub use green::GreenRelation;
pub use scalar::Scalar;
pub use set::FiniteSet;

pub type Cfinj = CofiniteInjection<i64>;
pub type PointSet = FiniteSet<i64>;
pub type Chain = ChainSpec<i64>;
pub type Bicyclic = BicyclicPair<i64>;
