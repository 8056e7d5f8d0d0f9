//! Exact algebra behind the ML1 affine pseudo-planes with a hyperbolic
//! C*-action: the surfaces `X = X~ / Z_d` where `X~` is the hypersurface
//! `x^m y = z^d - 1` in affine 3-space.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`algebra`]: exact rationals, sparse multivariate and dense univariate
//!   polynomials, gcd and squarefree decomposition, and the polynomial text
//!   format.
//! - [`qdivisor`]: Q-divisors on the affine line (floor, fractional part,
//!   denominators, canonical DPD pairs, the ML1 and Picard criteria).
//! - [`dpd`]: the graded pieces of `A_0[D+, D-]` as principal fractional
//!   ideals and the action-type decision table.
//! - [`hypersurface`]: the rings `C[u,v,s]/(u^k v - P(s))`, their normal
//!   forms, smoothness, fibers, normalization, and the derivation
//!   `u^e d/ds`.
//! - [`cyclic`]: diagonal `Z_d` actions, invariant monoids, weight-piece
//!   generators and the product-structure certificate comparing the
//!   invariant ring with the DPD presentation.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod cyclic;
pub mod dpd;
pub mod hypersurface;
pub mod qdivisor;

pub use algebra::{poly_gcd, squarefree_decomposition, AlgebraError, MultiPoly, Rational, UniPoly};
pub use cyclic::{CyclicAction, CyclicError, SurfaceTriple};
pub use dpd::{ActionClass, ActionKind, DpdError, FractionalIdealA1, PresentationDescriptor};
pub use hypersurface::{HypersurfaceRing, RingElement, RingError, SecondVar};
pub use qdivisor::{DivisorError, DpdPair, QDivisor};
