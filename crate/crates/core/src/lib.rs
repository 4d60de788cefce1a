//! Exact computations in the character rings of the queer Lie supergroups
//! `Q(n)`, `SQ(n)`, `PQ(n)`, `PSQ(n)` and the superalgebras `q(n)`, `sq(n)`,
//! `pq(n)`.
//!
//! The ring `Jₙ` of symmetric Laurent polynomials `f` whose restriction to
//! `x₁ = -x₂ = t` does not depend on `t` is the character ring of `Q(n)`;
//! the Schur P-functions `p_λ`, `λ ∈ Λₙ`, form a basis. This crate computes
//! those functions exactly, tests membership, applies the evaluation map
//! `Jₙ → Jₙ₋₂`, and decomposes elements into the basis.
//!
//! Variable indices are 0-based in the API (`x₁` is index 0); text output
//! and diagnostics use 1-based names.

pub mod char_ring;
pub mod error;
pub mod expr;
pub mod laurent;
pub mod perm;
pub mod schur;
pub mod super_rings;
pub mod verify;
pub mod weyl_groupoid;

pub use error::{Error, Result};
pub use laurent::{Exponent, ExponentVector, LaurentPoly, Rational};
pub use schur::{GeneralWeight, Weight};
