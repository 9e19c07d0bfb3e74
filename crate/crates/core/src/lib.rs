//! Exact tools for torus-level GIT stability of nets of quadrics in `P^4`,
//! together with the discriminant, Segre-symbol, and divisor-class
//! machinery that supports the classification of the associated genus-5
//! curves. All arithmetic is exact rational; floating point is never used.

pub mod catalog;
pub mod discriminant;
pub mod divisor;
pub mod factor;
pub mod flags;
pub mod fuzz;
pub mod monomial;
pub mod net;
pub mod parse;
pub(crate) mod par;
pub mod poly;
pub mod quadric;
pub mod rational;
pub mod segre;
pub mod simplex;
pub mod stability;
pub mod subgroup;
pub mod triples;

pub use monomial::Monomial2;
pub use net::{Net, Pencil};
pub use poly::MultiPoly;
pub use quadric::{CoordinateChange, ProjPoint, QuadraticForm};
pub use rational::Rat;
pub use stability::{StabilityVerdict, Status};
pub use subgroup::OneParamSubgroup;
