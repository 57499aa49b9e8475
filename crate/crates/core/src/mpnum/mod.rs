//! Arbitrary-precision complex scalars and dense matrices.
//!
//! Precision is carried per value in bits (MPFR semantics); matrix
//! factorizations are Jacobi-style, which behave well at high precision
//! and need no balancing.

mod complex;
mod factor;
mod matrix;

pub use complex::Complex;
pub use factor::{
    eig_hermitian, eig_unitary, haar_random_su, haar_random_unitary, polar_unitary, svd,
    SvdResult,
};
pub use matrix::CMatrix;

use rug::Float;

/// atan2 with the branch convention arg(·) ∈ [−π, π).
///
/// MPFR's atan2 returns +π for arg(−1); fold that single point to −π.
pub fn arg_atan2(y: &Float, x: &Float) -> Float {
    let prec = y.prec().max(x.prec());
    let mut a = Float::with_val(prec, y.atan2_ref(x));
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    if a == pi {
        a = -pi;
    }
    a
}

/// Wrap an angle into [−π, π).
pub fn wrap_angle(x: &Float) -> Float {
    let prec = x.prec();
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    let two_pi = Float::with_val(prec, &pi * 2u32);
    let mut v = x.clone();
    // v − 2π·round(v/(2π))
    let turns = Float::with_val(prec, &v / &two_pi).round();
    v -= turns * &two_pi;
    if v >= pi {
        v -= &two_pi;
    } else {
        let neg_pi = Float::with_val(prec, -&pi);
        if v < neg_pi {
            v += &two_pi;
        }
    }
    v
}
