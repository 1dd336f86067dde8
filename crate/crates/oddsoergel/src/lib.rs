//! Exact symbolic engine for two-variable odd Soergel bimodules.
//!
//! The crate implements, over exact rationals:
//!
//! - the skew-commuting polynomial rings in two and three variables with
//!   their signed transposition actions and odd Demazure operators
//!   ([`skewpoly`]);
//! - graded bimodules over the base-ring pairs drawn from {R, R^s},
//!   presented by finite left bases and right-action matrices, with tensor
//!   products, morphism verification and degreewise Hom solvers ([`bimod`]);
//! - the generating morphisms of the diagrammatic calculus and the full
//!   relation suite checking them ([`calculus`]);
//! - bounded complexes of bimodules, the odd Rouquier complexes, and
//!   Gaussian elimination down to minimal forms ([`complexes`]);
//! - the split Grothendieck ring Z[q,q⁻¹]{1, b, c, bc} with its semilinear
//!   form and trace ([`grothendieck`]);
//! - the three-variable computation exhibiting the non-split extension of
//!   the twisted bimodule by the triple tensor product ([`threestrand`]).

pub mod bimod;
pub mod calculus;
pub mod complexes;
pub mod grothendieck;
pub mod linalg;
pub mod skewpoly;
pub mod threestrand;

pub use skewpoly::{Q, SkewPoly};
