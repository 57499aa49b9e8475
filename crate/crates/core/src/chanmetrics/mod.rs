//! Channel representations (PTM, Choi) and diamond-norm distances.
//!
//! Unitary-vs-unitary distances use the closed form
//! 2·√(1 − d₀²), where d₀ is the distance from the origin to the convex
//! hull of the eigenvalues of U†V (phase-invariant). Mixture distances go
//! through the Choi representation and a self-contained dense SDP.

mod ptm;
mod sdp;

pub use ptm::{choi_of_unitary, pauli_matrix, ptm_of_unitary};
pub use sdp::dnorm_sdp;

use crate::mpnum::{eig_unitary, CMatrix, Complex};
use rug::ops::CompleteRound;
use rug::Float;

/// Diamond distance between two unitary channels of the same dimension.
pub fn dnorm_unitary_pair(u: &CMatrix, v: &CMatrix) -> Result<Float, String> {
    assert_eq!(u.rows, v.rows);
    let prec = u.prec().max(v.prec());
    if u.rows == 2 {
        return Ok(dnorm_2x2(u, v));
    }
    let m = u.adjoint().mul(v);
    let (lambda, _) = eig_unitary(&m)?;
    let d0 = hull_distance(&lambda, prec);
    let one = Float::with_val(prec, 1);
    let inside = (&one - &(&d0 * &d0).complete(prec)).complete(prec).max(&Float::new(prec));
    Ok(inside.sqrt() * 2u32)
}

/// 2×2 closed form: ‖𝒰 − 𝒱‖⋄ = |λ₁ − λ₂| of U†V = √|τ² − 4·det|.
fn dnorm_2x2(u: &CMatrix, v: &CMatrix) -> Float {
    let m = u.adjoint().mul(v);
    let tau = m.trace();
    let det = m.det();
    let t2 = tau.mul(&tau);
    let four_det = det.mul(&Complex::from_f64(4.0, 0.0, m.prec()));
    t2.sub(&four_det).abs().sqrt()
}

/// Diamond distance between R_Z(θ) and a 2×2 unitary.
pub fn dnorm_rz_vs_unitary(theta: &Float, m: &CMatrix) -> Float {
    let prec = m.prec().max(theta.prec());
    let half = Float::with_val(prec, theta) / 2u32;
    let mut rz = CMatrix::zero(2, 2, prec);
    let neg_half = Float::with_val(prec, -&half);
    rz[(0, 0)] = Complex::from_polar_unit(&neg_half);
    rz[(1, 1)] = Complex::from_polar_unit(&half);
    dnorm_2x2(&rz, m)
}

/// Distance from the origin to the convex hull of unit-modulus points.
/// Zero when no open half-plane through the origin contains all points.
fn hull_distance(lambda: &[Complex], prec: u32) -> Float {
    let mut angles: Vec<Float> = lambda.iter().map(|l| l.arg()).collect();
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = angles.len();
    if n == 1 {
        return Float::with_val(prec, 1);
    }
    let two_pi = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    // Find the largest cyclic gap.
    let mut max_gap = Float::with_val(prec, &two_pi - &angles[n - 1]) + &angles[0];
    for i in 1..n {
        let g = (&angles[i] - &angles[i - 1]).complete(prec);
        if g > max_gap {
            max_gap = g;
        }
    }
    if max_gap <= pi {
        return Float::new(prec);
    }
    // All points lie on an arc of length 2π − G; the closest hull edge is
    // the chord closing the gap, at distance |cos(G/2)|.
    (max_gap / 2u32).cos().abs()
}

/// Align v's global phase to u (multiply v by the unit phase maximizing
/// |Tr(u†v)|) and return the max-norm difference.
pub fn phase_aligned_distance(u: &CMatrix, v: &CMatrix) -> Float {
    let tr = u.adjoint().mul(v).trace();
    let prec = u.prec().max(v.prec());
    if tr.abs().is_zero() {
        return u.sub(v).norm_max();
    }
    let phase = tr.arg();
    let unit = Complex::from_polar_unit(&Float::with_val(prec, -phase));
    u.sub(&v.scale(&unit)).norm_max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn identical_channels_have_zero_distance() {
        let prec = 160;
        let mut rng = {
            use rand::SeedableRng;
            rand_chacha::ChaCha8Rng::seed_from_u64(2)
        };
        let u = crate::mpnum::haar_random_unitary(4, prec, &mut rng);
        let d = dnorm_unitary_pair(&u, &u).unwrap();
        assert!(d.to_f64() < 1e-30);
    }

    #[test]
    fn global_phase_is_invisible() {
        let prec = 160;
        let u = CMatrix::identity(2, prec);
        let th = Float::with_val(prec, 1.234);
        let v = u.scale(&Complex::from_polar_unit(&th));
        let d = dnorm_unitary_pair(&u, &v).unwrap();
        assert!(d.to_f64() < 1e-40);
    }

    #[test]
    fn rz_distance_closed_form() {
        let prec = 160;
        for th in [0.3f64, 1.0, 2.5] {
            let theta = Float::with_val(prec, th);
            let id = CMatrix::identity(2, prec);
            let d = dnorm_rz_vs_unitary(&theta, &id);
            let expect = 2.0 * (th / 2.0).sin();
            assert!((d.to_f64() - expect).abs() < 1e-30, "θ={}", th);
        }
    }

    #[test]
    fn subadditivity_under_composition() {
        let prec = 160;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..10 {
            let u1 = crate::mpnum::haar_random_unitary(2, prec, &mut rng);
            let v1 = crate::mpnum::haar_random_unitary(2, prec, &mut rng);
            let u2 = crate::mpnum::haar_random_unitary(2, prec, &mut rng);
            let v2 = crate::mpnum::haar_random_unitary(2, prec, &mut rng);
            let lhs = dnorm_unitary_pair(&u2.mul(&u1), &v2.mul(&v1)).unwrap();
            let rhs = dnorm_unitary_pair(&u1, &v1).unwrap() + dnorm_unitary_pair(&u2, &v2).unwrap();
            let slack = Float::with_val(prec, 10f64).pow(-8);
            assert!(lhs <= rhs + slack);
        }
    }

    #[test]
    fn triangle_and_symmetry() {
        let prec = 128;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..6 {
            let a = crate::mpnum::haar_random_unitary(4, prec, &mut rng);
            let b = crate::mpnum::haar_random_unitary(4, prec, &mut rng);
            let c = crate::mpnum::haar_random_unitary(4, prec, &mut rng);
            let dab = dnorm_unitary_pair(&a, &b).unwrap();
            let dba = dnorm_unitary_pair(&b, &a).unwrap();
            assert!((dab.to_f64() - dba.to_f64()).abs() < 1e-25);
            let dac = dnorm_unitary_pair(&a, &c).unwrap();
            let dcb = dnorm_unitary_pair(&c, &b).unwrap();
            assert!(dab.to_f64() <= dac.to_f64() + dcb.to_f64() + 1e-9);
        }
    }
}
