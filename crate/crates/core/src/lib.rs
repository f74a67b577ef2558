//! Topological invariants of the Prym-Teichmüller curves W_D(6) in genus 4.
//!
//! For every real quadratic discriminant D this crate computes, in exact
//! arithmetic, the complete topological type of the curve W_D(6): the
//! orbifold Euler characteristic χ, the number of cusps C, the orbifold
//! points of orders 2, 3, 5 and 6, and the genus solved from
//!
//! ```text
//! 2·h₀ − 2·g = χ + C + Σ_d e_d·(1 − 1/d).
//! ```
//!
//! The pieces are:
//!
//! - [`arith`] — integer/rational plumbing: divisor sums, Kronecker symbol,
//!   conductor decomposition D = f²·D₀.
//! - [`class_numbers`] — h(−C) by enumerating primitive reduced binary
//!   quadratic forms.
//! - [`orbifold`] — the counts e₂ (class numbers), e₃ (lattice points of
//!   a²+3j²+(2i−j)² = D up to a 12-fold symmetry), e₅ and e₆.
//! - [`euler`] — ζ_{D₀}(−1) by a Siegel divisor sum, the conductor Euler
//!   factor F(D), and χ(W_D) = −7·χ(X_D) = −14·f³·ζ_{D₀}(−1)·F(D).
//! - [`cusps`] — cusp counting via splitting prototypes of the genus-2
//!   curves W_D(2), which have the same number of cusps.
//! - [`topology`] — assembly of the invariant record, genus bounds and the
//!   genus-zero classification.
//! - [`flat`] — polygonal models (Turtle, Hurricane, C₁₀, C₁₂) of the
//!   orbifold-point loci and their unfolded translation-surface covers.
//! - [`corpus`] — the checked-in reference table of all 86 nonsquare
//!   discriminants D ≤ 200 and the machinery to verify it.

pub mod arith;
pub mod class_numbers;
pub mod corpus;
pub mod cusps;
pub mod error;
pub mod euler;
pub mod flat;
pub mod orbifold;
pub mod topology;

pub use arith::{Discriminant, Rat};
pub use error::{Error, Result};
pub use topology::InvariantRecord;
