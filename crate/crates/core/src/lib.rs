//! Clifford+T synthesis over the ring D[ω] at arbitrary precision.
//!
//! The crate is organized around the synthesis pipeline:
//!
//! - [`bigring`]: exact arithmetic in Z[ω], D[ω], Z[√2], D[√2] and dyadic
//!   fractions, with the two conjugations and least-denominator-exponent
//!   normal forms.
//! - [`mpnum`]: arbitrary-precision complex scalars and dense matrices
//!   (Jacobi SVD, unitary eigendecomposition, QR).
//! - [`gridprob`]: one- and two-dimensional grid problem solvers that
//!   enumerate ring elements inside target regions by increasing
//!   denominator exponent.
//! - [`dioph`]: budgeted integer factorization and the relative norm
//!   equation t†t = ξ over D[ω].
//! - [`zrot`]: GridSynth for Z-rotations.
//! - [`exactsynth`]: exact synthesis of D[ω] unitaries into gate words.
//! - [`su2`]: Euler decomposition, magnitude approximation, and single-qubit
//!   synthesis.
//! - [`twoqubit`] / [`multiqubit`]: the three-CNOT template, block ZXZ
//!   recursion, multiplexed rotations, and diagonal-phase absorption.
//! - [`chanmetrics`]: PTM/Choi representations and diamond-norm distances
//!   (closed form for unitary pairs, SDP for mixtures).
//! - [`mixed`]: probabilistic mixtures of synthesized circuits via a
//!   PTM-matching linear program.

pub mod bigring;
pub mod chanmetrics;
pub mod circuit;
pub mod dioph;
pub mod exactsynth;
pub mod gridprob;
pub mod mixed;
pub mod mpnum;
pub mod multiqubit;
pub mod report;
pub mod su2;
pub mod twoqubit;
pub mod zrot;

use rug::Float;

/// Working precision in decimal digits for a target tolerance.
///
/// Chosen so that tolerances down to 1e-100 stay comfortably inside the
/// mantissa, with guard digits against cancellation in grid enumeration
/// and Euler-angle extraction.
pub fn digits_for_epsilon(eps: &Float) -> u32 {
    let log10_inv = -eps.clone().log10();
    let d = (2.5 * log10_inv.to_f64()).ceil() as i64 + 32;
    let d = d.max(64) as u32;
    if let Ok(v) = std::env::var("TCOMPILE_PRECISION") {
        if let Ok(n) = v.parse::<u32>() {
            return n.max(16);
        }
    }
    d
}

/// Binary precision corresponding to `digits` decimal digits, plus guard bits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 16
}

pub fn bits_for_epsilon(eps: &Float) -> u32 {
    bits_for_digits(digits_for_epsilon(eps))
}
