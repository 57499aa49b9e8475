//! Exact arithmetic in the rings D, Z[√2], D[√2], Z[ω] and D[ω].
//!
//! ω = e^{iπ/4} is the primitive eighth root of unity; every element of
//! Z[ω] is written in the (ω³, ω², ω, 1) basis with arbitrary-size integer
//! coefficients, and D[ω] elements carry a √2 denominator exponent k.
//! Two ring automorphisms matter throughout: complex conjugation
//! (a,b,c,d) ↦ (−c,−b,−a,d) and √2-conjugation (a,b,c,d) ↦ (−a,b,−c,d),
//! which restricted to Z[√2] negates the √2 coefficient.

mod dyadic;
mod zomega;
mod zroot2;

pub use dyadic::Dyadic;
pub use zomega::{DOmega, ZOmega};
pub use zroot2::{DRoot2, ZRoot2};

pub(crate) use zroot2::div_round as zroot2_div_round;
pub(crate) use zroot2::div_round as zroot2_div_round_pub;
