use super::{CMatrix, Complex};
use rand::Rng;
use rug::ops::{CompleteRound, Pow};
use rug::Float;

pub struct SvdResult {
    pub u: CMatrix,
    pub sigma: Vec<Float>,
    /// V†, so that M = U · diag(σ) · V†.
    pub v_adj: CMatrix,
}

fn rot_for(app: &Float, aqq: &Float, apq: &Complex, prec: u32) -> (Float, Complex) {
    // Unitary 2x2 J = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]] diagonalizing
    // [[app, apq],[apq*, aqq]] with φ = arg(apq).
    let g = apq.abs();
    let phi = apq.arg();
    let tau = Float::with_val(prec, aqq - app) / (Float::with_val(prec, &g * 2u32));
    let t = if tau.is_zero() {
        Float::with_val(prec, 1)
    } else {
        let denom = tau.clone().abs() + (Float::with_val(prec, &tau * &tau) + 1u32).sqrt();
        let sgn = if tau > 0 { 1 } else { -1 };
        Float::with_val(prec, sgn) / denom
    };
    let c = (Float::with_val(prec, &t * &t) + 1u32).sqrt().recip();
    let s = Float::with_val(prec, &t * &c);
    let e_iphi = Complex::from_polar_unit(&phi);
    (c, e_iphi.mul_real(&s))
}

/// One-sided Jacobi SVD: M = U · diag(σ) · V†, σ non-negative and
/// non-increasing.
pub fn svd(m: &CMatrix) -> Result<SvdResult, String> {
    if m.rows < m.cols {
        let r = svd(&m.adjoint())?;
        return Ok(SvdResult { u: r.v_adj.adjoint(), sigma: r.sigma, v_adj: r.u.adjoint() });
    }
    let prec = m.prec();
    let n = m.cols;
    let mut w = m.clone();
    let mut v = CMatrix::identity(n, prec);
    let tol = Float::with_val(prec, 2f64).pow(-(prec as i32) + 6);
    let max_sweeps = 60 + 2 * n;
    let mut converged = false;
    for _ in 0..max_sweeps {
        let mut off = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut app = Float::new(prec);
                let mut aqq = Float::new(prec);
                let mut apq = Complex::zero(prec);
                for i in 0..w.rows {
                    app += w[(i, p)].norm_sqr();
                    aqq += w[(i, q)].norm_sqr();
                    apq = apq.add(&w[(i, p)].conj().mul(&w[(i, q)]));
                }
                let bound = Float::with_val(prec, &app * &aqq).sqrt() * &tol;
                if apq.abs() <= bound {
                    continue;
                }
                off = true;
                let (c, se) = rot_for(&app, &aqq, &apq, prec);
                let se_conj = se.conj();
                for i in 0..w.rows {
                    let wp = w[(i, p)].clone();
                    let wq = w[(i, q)].clone();
                    w[(i, p)] = wp.mul_real(&c).sub(&wq.mul(&se_conj));
                    w[(i, q)] = wp.mul(&se).add(&wq.mul_real(&c));
                }
                for i in 0..n {
                    let vp = v[(i, p)].clone();
                    let vq = v[(i, q)].clone();
                    v[(i, p)] = vp.mul_real(&c).sub(&vq.mul(&se_conj));
                    v[(i, q)] = vp.mul(&se).add(&vq.mul_real(&c));
                }
            }
        }
        if !off {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err("SVD Jacobi sweep budget exhausted".to_string());
    }
    // Column norms are the singular values.
    let mut order: Vec<usize> = (0..n).collect();
    let mut sigma_raw = Vec::with_capacity(n);
    for j in 0..n {
        let mut s = Float::new(prec);
        for i in 0..w.rows {
            s += w[(i, j)].norm_sqr();
        }
        sigma_raw.push(s.sqrt());
    }
    order.sort_by(|&a, &b| sigma_raw[b].partial_cmp(&sigma_raw[a]).unwrap());
    let mut u = CMatrix::zero(m.rows, n, prec);
    let mut v_sorted = CMatrix::zero(n, n, prec);
    let mut sigma = Vec::with_capacity(n);
    let tiny = Float::with_val(prec, 2f64).pow(-(prec as i32) + 20);
    for (new_j, &old_j) in order.iter().enumerate() {
        sigma.push(sigma_raw[old_j].clone());
        for i in 0..n {
            v_sorted[(i, new_j)] = v[(i, old_j)].clone();
        }
        if sigma_raw[old_j] > tiny {
            for i in 0..m.rows {
                u[(i, new_j)] = Complex {
                    re: (&w[(i, old_j)].re / &sigma_raw[old_j]).complete(prec),
                    im: (&w[(i, old_j)].im / &sigma_raw[old_j]).complete(prec),
                };
            }
        }
    }
    // Complete any null columns of U to an orthonormal set.
    for j in 0..n {
        let mut s = Float::new(prec);
        for i in 0..m.rows {
            s += u[(i, j)].norm_sqr();
        }
        if s.to_f64() < 0.5 {
            // insert the best unit vector and re-orthogonalize
            for basis in 0..m.rows {
                let mut cand = u.clone();
                for i in 0..m.rows {
                    cand[(i, j)] = Complex::zero(prec);
                }
                cand[(basis, j)] = Complex::one(prec);
                // project out other columns
                for k in 0..n {
                    if k == j {
                        continue;
                    }
                    let mut r = Complex::zero(prec);
                    for i in 0..m.rows {
                        r = r.add(&cand[(i, k)].conj().mul(&cand[(i, j)]));
                    }
                    for i in 0..m.rows {
                        let t = r.mul(&cand[(i, k)]);
                        cand[(i, j)] = cand[(i, j)].sub(&t);
                    }
                }
                let mut nn = Float::new(prec);
                for i in 0..m.rows {
                    nn += cand[(i, j)].norm_sqr();
                }
                if nn.to_f64() > 0.25 {
                    let nn = nn.sqrt();
                    for i in 0..m.rows {
                        cand[(i, j)] = Complex {
                            re: (&cand[(i, j)].re / &nn).complete(prec),
                            im: (&cand[(i, j)].im / &nn).complete(prec),
                        };
                    }
                    u = cand;
                    break;
                }
            }
        }
    }
    Ok(SvdResult { u, sigma, v_adj: v_sorted.adjoint() })
}

/// Unitary polar factor of M (the U of M = U·P); defined for any M via SVD.
pub fn polar_unitary(m: &CMatrix) -> Result<CMatrix, String> {
    let r = svd(m)?;
    Ok(r.u.mul(&r.v_adj))
}

/// Two-sided Jacobi eigendecomposition of a Hermitian matrix:
/// A = V · diag(λ) · V† with real λ.
pub fn eig_hermitian(a: &CMatrix) -> Result<(Vec<Float>, CMatrix), String> {
    assert_eq!(a.rows, a.cols);
    let prec = a.prec();
    let n = a.rows;
    let mut w = a.clone();
    let mut v = CMatrix::identity(n, prec);
    let tol = Float::with_val(prec, 2f64).pow(-(prec as i32) + 6);
    let mut scale = w.norm_max();
    if scale.is_zero() {
        scale = Float::with_val(prec, 1);
    }
    let max_sweeps = 60 + 2 * n;
    let mut converged = false;
    for _ in 0..max_sweeps {
        let mut off = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[(p, q)].clone();
                if apq.abs() <= Float::with_val(prec, &tol * &scale) {
                    continue;
                }
                off = true;
                let app = w[(p, p)].re.clone();
                let aqq = w[(q, q)].re.clone();
                let (c, se) = rot_for(&app, &aqq, &apq, prec);
                let se_conj = se.conj();
                // W ← J† W J
                for i in 0..n {
                    let wip = w[(i, p)].clone();
                    let wiq = w[(i, q)].clone();
                    w[(i, p)] = wip.mul_real(&c).sub(&wiq.mul(&se_conj));
                    w[(i, q)] = wip.mul(&se).add(&wiq.mul_real(&c));
                }
                for j in 0..n {
                    let wpj = w[(p, j)].clone();
                    let wqj = w[(q, j)].clone();
                    w[(p, j)] = wpj.mul_real(&c).sub(&wqj.mul(&se));
                    w[(q, j)] = wpj.mul(&se_conj).add(&wqj.mul_real(&c));
                }
                for i in 0..n {
                    let vip = v[(i, p)].clone();
                    let viq = v[(i, q)].clone();
                    v[(i, p)] = vip.mul_real(&c).sub(&viq.mul(&se_conj));
                    v[(i, q)] = vip.mul(&se).add(&viq.mul_real(&c));
                }
            }
        }
        if !off {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err("Hermitian Jacobi sweep budget exhausted".to_string());
    }
    let lambda: Vec<Float> = (0..n).map(|i| w[(i, i)].re.clone()).collect();
    Ok((lambda, v))
}

/// Eigendecomposition of a unitary matrix: M = V · diag(λ) · V† with
/// |λ| = 1.
///
/// M is normal, so the commuting Hermitian pair (M+M†)/2 and (M−M†)/2i is
/// diagonalized simultaneously: Jacobi on the first, then a refinement of
/// each near-degenerate cluster using the second.
pub fn eig_unitary(m: &CMatrix) -> Result<(Vec<Complex>, CMatrix), String> {
    assert_eq!(m.rows, m.cols);
    let prec = m.prec();
    let n = m.rows;
    let madj = m.adjoint();
    let half = Complex::from_f64(0.5, 0.0, prec);
    let neg_half_i = Complex::from_f64(0.0, -0.5, prec);
    let h1 = m.add(&madj).scale(&half);
    let h2 = m.sub(&madj).scale(&neg_half_i);
    let (lam1, mut v) = eig_hermitian(&h1)?;

    // Sort by the H1 eigenvalue to make clusters contiguous.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| lam1[a].partial_cmp(&lam1[b]).unwrap());
    let mut v_sorted = CMatrix::zero(n, n, prec);
    let mut lam_sorted = Vec::with_capacity(n);
    for (nj, &oj) in order.iter().enumerate() {
        lam_sorted.push(lam1[oj].clone());
        for i in 0..n {
            v_sorted[(i, nj)] = v[(i, oj)].clone();
        }
    }
    v = v_sorted;

    // Cluster threshold: well above roundoff, well below any honest gap.
    let digits = (prec as f64 / std::f64::consts::LOG2_10) as i32;
    let tau = Float::with_val(prec, 10f64).pow(-(digits - 12).max(8));
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n {
            let gap = Float::with_val(prec, &lam_sorted[end] - &lam_sorted[end - 1]).abs();
            if gap > tau {
                break;
            }
            end += 1;
        }
        if end - start > 1 {
            // Refine the cluster with H2.
            let vc = v.block(0, start, n, end - start);
            let sub = vc.adjoint().mul(&h2).mul(&vc);
            let (_, w) = eig_hermitian(&sub)?;
            let refined = vc.mul(&w);
            v.set_block(0, start, &refined);
        }
        start = end;
    }

    // Eigenvalues from the diagonal of V†MV.
    let d = v.adjoint().mul(m).mul(&v);
    let lambda: Vec<Complex> = (0..n).map(|i| d[(i, i)].clone()).collect();
    Ok((lambda, v))
}

/// Haar-style random unitary: QR of a complex Gaussian matrix via MGS.
/// Gaussian entries are sampled at f64 granularity, which is plenty for
/// benchmark targets.
pub fn haar_random_unitary(n: usize, prec: u32, rng: &mut impl Rng) -> CMatrix {
    use rand_distr::{Distribution, StandardNormal};
    let g = CMatrix::from_fn(n, n, prec, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex::from_f64(re, im, prec)
    });
    g.mgs_orthonormalize()
}

/// Haar-style random special unitary (determinant rotated to 1).
pub fn haar_random_su(n: usize, prec: u32, rng: &mut impl Rng) -> CMatrix {
    let u = haar_random_unitary(n, prec, rng);
    let det = u.det();
    let phase = det.arg();
    let corr = Float::with_val(prec, &phase / (n as u32));
    let unit = Complex::from_polar_unit(&Float::with_val(prec, -corr));
    u.scale(&unit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn reconstruct_svd(m: &CMatrix, r: &SvdResult) -> f64 {
        let prec = m.prec();
        let mut s = CMatrix::zero(r.sigma.len(), r.sigma.len(), prec);
        for (i, sv) in r.sigma.iter().enumerate() {
            s[(i, i)] = Complex::from_real(sv.clone());
        }
        r.u.mul(&s).mul(&r.v_adj).sub(m).norm_max().to_f64()
    }

    #[test]
    fn svd_identity_and_diag() {
        let prec = 192;
        let id = CMatrix::identity(2, prec);
        let r = svd(&id).unwrap();
        assert!(reconstruct_svd(&id, &r) < 1e-50);
        for s in &r.sigma {
            assert!((s.to_f64() - 1.0).abs() < 1e-30);
        }
        let mut d = CMatrix::zero(2, 2, prec);
        d[(0, 0)] = Complex::from_f64(3.0, 0.0, prec);
        d[(1, 1)] = Complex::from_f64(1.0, 0.0, prec);
        let r = svd(&d).unwrap();
        assert!((r.sigma[0].to_f64() - 3.0).abs() < 1e-30);
        assert!((r.sigma[1].to_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn svd_of_random_unitary_has_unit_singular_values() {
        let prec = 192; // ~57 digits
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let u = haar_random_unitary(4, prec, &mut rng);
        let r = svd(&u).unwrap();
        for s in &r.sigma {
            assert!((s.to_f64() - 1.0).abs() < 1e-30, "sigma = {}", s.to_f64());
        }
        assert!(reconstruct_svd(&u, &r) < 1e-30);
    }

    #[test]
    fn eig_unitary_reconstructs() {
        let prec = 192;
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let m = haar_random_unitary(4, prec, &mut rng);
        let (lam, v) = eig_unitary(&m).unwrap();
        // |λ| = 1
        for l in &lam {
            assert!((l.abs().to_f64() - 1.0).abs() < 1e-30);
        }
        // V D V† = M
        let mut d = CMatrix::zero(4, 4, prec);
        for (i, l) in lam.iter().enumerate() {
            d[(i, i)] = l.clone();
        }
        let res = v.mul(&d).mul(&v.adjoint()).sub(&m).norm_max().to_f64();
        assert!(res < 1e-30, "residual {}", res);
        // det(M) = Πλ
        let det = m.det();
        let mut prod = Complex::one(prec);
        for l in &lam {
            prod = prod.mul(l);
        }
        assert!(det.sub(&prod).abs().to_f64() < 1e-30);
    }

    #[test]
    fn eig_unitary_degenerate_scalar() {
        // ωI has a doubly-degenerate eigenvalue e^{iπ/4}
        let prec = 160;
        let th = Float::with_val(prec, rug::float::Constant::Pi) / 4u32;
        let w = Complex::from_polar_unit(&th);
        let m = CMatrix::identity(2, prec).scale(&w);
        let (lam, v) = eig_unitary(&m).unwrap();
        for l in &lam {
            assert!(l.sub(&w).abs().to_f64() < 1e-30);
        }
        assert!(v.unitarity_defect().to_f64() < 1e-30);
    }

    #[test]
    fn residual_scales_with_precision() {
        let mut last = f64::INFINITY;
        for digits in [30u32, 60, 120] {
            let prec = crate::bits_for_digits(digits);
            let mut rng = ChaCha8Rng::seed_from_u64(99);
            let m = haar_random_unitary(3, prec, &mut rng);
            let r = svd(&m).unwrap();
            let res = reconstruct_svd(&m, &r).max(1e-300);
            assert!(res < last * 1e-10 || res < 1e-250, "res {} last {}", res, last);
            last = res;
        }
    }
}
