//! Kauffman bracket and Jones polynomial of link diagrams.
//!
//! Polynomials live in the bracket variable `A`; the Jones polynomial in the
//! usual variable is recovered by `t = A^-4`. Conventions:
//!
//! * `⟨D⟩ = Σ_S A^(σA - σB) δ^(loops - 1)` with `δ = -A^2 - A^-2`, so a
//!   single loop has bracket 1;
//! * at a crossing `X(a,b,c,d)` the A-smoothing joins `a-b` and `c-d`;
//! * `V(D) = (-A)^(-3 w(D)) ⟨D⟩`.
//!
//! Coefficients are generic over [`Coefficient`]; [`Poly`] (arbitrary
//! precision) is the type used for comparisons and caching.

mod engine;
mod error;
mod laurent;
mod naive;
mod sweep;

pub use engine::{bracket, bracket_pd, jones, jones_pd, jones_with, natural_order, normalise, Engine, EngineConfig, OrderStrategy};
pub use error::InvariantError;
pub use laurent::{Coefficient, Laurent};
pub use naive::{bracket_naive, DEFAULT_MAX_CROSSINGS};
pub use sweep::{bracket_sweep, greedy_order, SweepStats, DEFAULT_MAX_WIDTH};

/// Exact Laurent polynomial with big-integer coefficients.
pub type Poly = Laurent<num_bigint::BigInt>;
/// Machine-integer variant for quick cross-checks on small diagrams.
pub type SmallPoly = Laurent<i128>;
