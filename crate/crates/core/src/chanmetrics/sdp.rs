//! Dense SDP for the diamond norm of a Hermitian Choi-matrix difference:
//!
//!   min t  s.t.  X ⪰ 0,  X − JΔ ⪰ 0,  Y = Tr₂ X,  tI ∓ Y ⪰ 0,
//!
//! returning 2t. Solved with a log-det barrier and damped Newton steps —
//! dimensions stay small (Choi dimension ≤ 64), so dense linear algebra in
//! f64 reaches the ~1e-10 gap the cross-checks need.

use crate::mpnum::CMatrix;
use nalgebra::{DMatrix, DVector};

type C64 = nalgebra::Complex<f64>;
type CMat = DMatrix<C64>;

/// Cholesky with a strict positivity check on every pivot (nalgebra's
/// complex Cholesky does not reject indefinite input).
struct CholPd {
    l: CMat,
}

fn chol_pd(m: &CMat) -> Option<CholPd> {
    let n = m.nrows();
    let mut l = CMat::zeros(n, n);
    for j in 0..n {
        let mut d = m[(j, j)].re;
        for k in 0..j {
            d -= (l[(j, k)] * l[(j, k)].conj()).re;
        }
        if !d.is_finite() || d <= 0.0 {
            return None;
        }
        let dj = d.sqrt();
        l[(j, j)] = C64::new(dj, 0.0);
        for i in (j + 1)..n {
            let mut s = m[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / C64::new(dj, 0.0);
        }
    }
    Some(CholPd { l })
}

impl CholPd {
    fn logdet(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.l.nrows() {
            acc += self.l[(i, i)].re.ln();
        }
        2.0 * acc
    }

    /// Inverse via forward/back substitution against the identity.
    fn inverse(&self) -> CMat {
        let n = self.l.nrows();
        let mut inv = CMat::zeros(n, n);
        for col in 0..n {
            // L y = e_col
            let mut y = vec![C64::new(0.0, 0.0); n];
            for i in 0..n {
                let mut s = if i == col { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) };
                for k in 0..i {
                    s -= self.l[(i, k)] * y[k];
                }
                y[i] = s / self.l[(i, i)];
            }
            // L† x = y
            let mut x = vec![C64::new(0.0, 0.0); n];
            for i in (0..n).rev() {
                let mut s = y[i];
                for k in (i + 1)..n {
                    s -= self.l[(k, i)].conj() * x[k];
                }
                x[i] = s / self.l[(i, i)];
            }
            for i in 0..n {
                inv[(i, col)] = x[i];
            }
        }
        inv
    }
}

/// Real symmetric positive definite solve with pivot checks.
fn solve_spd_real(a: &DMatrix<f64>, b: &DVector<f64>) -> Option<DVector<f64>> {
    let n = a.nrows();
    let mut l = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !d.is_finite() || d <= 0.0 {
            return None;
        }
        let dj = d.sqrt();
        l[(j, j)] = dj;
        for i in (j + 1)..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / dj;
        }
    }
    let mut y = DVector::<f64>::zeros(n);
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[(i, k)] * y[k];
        }
        y[i] = s / l[(i, i)];
    }
    let mut x = DVector::<f64>::zeros(n);
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in (i + 1)..n {
            s -= l[(k, i)] * x[k];
        }
        x[i] = s / l[(i, i)];
    }
    Some(x)
}

fn hermitize(m: &CMat) -> CMat {
    (m + m.adjoint()) * C64::new(0.5, 0.0)
}

/// Partial trace over the second (system) factor: Y_ij = Σ_k X[id+k, jd+k].
fn ptrace2(x: &CMat, d: usize) -> CMat {
    let mut y = CMat::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..d {
                acc += x[(i * d + k, j * d + k)];
            }
            y[(i, j)] = acc;
        }
    }
    y
}

/// Hermitian parameter basis: diagonal entries, then (re, im) pairs above
/// the diagonal.
#[derive(Clone, Copy)]
enum Param {
    Diag(usize),
    Re(usize, usize),
    Im(usize, usize),
}

fn param_list(n: usize) -> Vec<Param> {
    let mut v = Vec::with_capacity(n * n);
    for i in 0..n {
        v.push(Param::Diag(i));
    }
    for i in 0..n {
        for j in (i + 1)..n {
            v.push(Param::Re(i, j));
            v.push(Param::Im(i, j));
        }
    }
    v
}

fn build_x(v: &DVector<f64>, params: &[Param], n: usize) -> CMat {
    let mut x = CMat::zeros(n, n);
    for (a, p) in params.iter().enumerate() {
        match *p {
            Param::Diag(i) => x[(i, i)] += C64::new(v[a], 0.0),
            Param::Re(i, j) => {
                x[(i, j)] += C64::new(v[a], 0.0);
                x[(j, i)] += C64::new(v[a], 0.0);
            }
            Param::Im(i, j) => {
                x[(i, j)] += C64::new(0.0, v[a]);
                x[(j, i)] += C64::new(0.0, -v[a]);
            }
        }
    }
    x
}

struct Blocks {
    f1: CMat,
    f2: CMat,
    f3: CMat,
    f4: CMat,
}

fn blocks(v: &DVector<f64>, params: &[Param], jd: &CMat, n: usize, d: usize) -> Blocks {
    let x = build_x(v, params, n);
    let t = v[params.len()];
    let y = ptrace2(&x, d);
    let tid = CMat::identity(d, d) * C64::new(t, 0.0);
    Blocks { f1: x.clone(), f2: &x - jd, f3: &tid - &y, f4: &tid + &y }
}

fn chol(m: &CMat) -> Option<CholPd> {
    chol_pd(&hermitize(m))
}

/// Apply Y-projection to one sparse parameter basis matrix; None when the
/// partial trace kills it.
fn y_of_param(p: Param, d: usize) -> Option<(usize, usize, C64)> {
    // Basis entries live at (p,q) with p = i·d+k, q = j·d+l; Tr₂ keeps
    // k == l terms only and sends e_pq ↦ e_ij.
    let split = |x: usize| (x / d, x % d);
    match p {
        Param::Diag(i) => {
            let (a, _) = split(i);
            Some((a, a, C64::new(1.0, 0.0)))
        }
        Param::Re(i, j) => {
            let (ai, ki) = split(i);
            let (aj, kj) = split(j);
            (ki == kj).then_some((ai, aj, C64::new(1.0, 0.0)))
        }
        Param::Im(i, j) => {
            let (ai, ki) = split(i);
            let (aj, kj) = split(j);
            (ki == kj).then_some((ai, aj, C64::new(0.0, 1.0)))
        }
    }
}

/// Tr(M · A_c) with A_c a parameter basis matrix; real by Hermiticity.
fn trace_against(m: &CMat, p: Param) -> f64 {
    match p {
        Param::Diag(i) => m[(i, i)].re,
        Param::Re(i, j) => (m[(j, i)] + m[(i, j)]).re,
        Param::Im(i, j) => (C64::i() * (m[(j, i)] - m[(i, j)])).re,
    }
}

/// Rank-structured product G·A_a·G for sparse Hermitian basis A_a.
fn g_a_g(g: &CMat, p: Param) -> CMat {
    let n = g.nrows();
    let col = |k: usize| g.column(k).into_owned();
    let row = |k: usize| g.row(k).into_owned();
    let outer = |c: &DVector<C64>, r: &nalgebra::RowDVector<C64>| -> CMat {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = c[i] * r[j];
            }
        }
        m
    };
    match p {
        Param::Diag(i) => outer(&col(i), &row(i)),
        Param::Re(i, j) => outer(&col(i), &row(j)) + outer(&col(j), &row(i)),
        Param::Im(i, j) => {
            outer(&col(i), &row(j)) * C64::i() - outer(&col(j), &row(i)) * C64::i()
        }
    }
}

/// Diamond norm of the channel difference whose Choi matrix is `jdelta`
/// (Hermitian, dimension d²×d²).
pub fn dnorm_sdp(jdelta: &CMatrix) -> Result<f64, String> {
    let n = jdelta.rows;
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n {
        return Err(format!("Choi dimension {} is not a perfect square", n));
    }
    // Downconvert; the SDP path is the mixture evaluator and runs in f64.
    let mut jd = CMat::zeros(n, n);
    let mut scale = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let (re, im) = jdelta[(i, j)].to_f64_pair();
            jd[(i, j)] = C64::new(re, im);
            scale = scale.max(re.abs()).max(im.abs());
        }
    }
    if scale < 1e-300 {
        return Ok(0.0);
    }
    jd /= C64::new(scale, 0.0);
    jd = hermitize(&jd);

    let params = param_list(n);
    let m = params.len() + 1; // + t
    let t_idx = params.len();

    // Strictly feasible start: X = κI with κ > ‖J‖₂, t > κd.
    let kappa = n as f64 + 1.0;
    let mut v = DVector::zeros(m);
    for i in 0..n {
        v[i] = kappa;
    }
    v[t_idx] = kappa * d as f64 + 1.0;

        let mut mu = 1.0f64;
    let mu_min = 1e-13;
    let barrier_val = |v: &DVector<f64>, mu: f64| -> Option<f64> {
        let b = blocks(v, &params, &jd, n, d);
        let c1 = chol(&b.f1)?;
        let c2 = chol(&b.f2)?;
        let c3 = chol(&b.f3)?;
        let c4 = chol(&b.f4)?;
        Some(v[t_idx] - mu * (c1.logdet() + c2.logdet() + c3.logdet() + c4.logdet()))
    };

    while mu > mu_min {
        for _newton in 0..60 {
            let b = blocks(&v, &params, &jd, n, d);
            let (Some(c1), Some(c2), Some(c3), Some(c4)) =
                (chol(&b.f1), chol(&b.f2), chol(&b.f3), chol(&b.f4))
            else {
                return Err("barrier iterate left the cone".to_string());
            };
            let g1 = c1.inverse();
            let g2 = c2.inverse();
            let g3 = c3.inverse();
            let g4 = c4.inverse();

            let mut grad = DVector::zeros(m);
            let mut hess = DMatrix::zeros(m, m);
            // d/dt
            grad[t_idx] = 1.0 - mu * (g3.trace().re + g4.trace().re);
            hess[(t_idx, t_idx)] =
                mu * ((&g3 * &g3).trace().re + (&g4 * &g4).trace().re);
            // X-blocks
            for (a, pa) in params.iter().enumerate() {
                grad[a] = -mu * (trace_against(&g1, *pa) + trace_against(&g2, *pa));
                let m1 = g_a_g(&g1, *pa);
                let m2 = g_a_g(&g2, *pa);
                for (c, pc) in params.iter().enumerate().skip(a) {
                    let h = mu * (trace_against(&m1, *pc) + trace_against(&m2, *pc));
                    hess[(a, c)] += h;
                    if c != a {
                        hess[(c, a)] += h;
                    }
                }
            }
            // Y-blocks (sparse in the parameters)
            for (a, pa) in params.iter().enumerate() {
                let Some((ia, ja, wa)) = y_of_param(*pa, d) else {
                    continue;
                };
                // B_a as a d×d matrix: wa·e_{ia,ja} (+ h.c. unless diagonal)
                let mut ba = CMat::zeros(d, d);
                ba[(ia, ja)] += wa;
                if ia != ja || wa.im != 0.0 {
                    ba[(ja, ia)] += wa.conj();
                }
                // F3 has −B_a, F4 has +B_a; gradients: −μTr(G ∂F)
                let tr3 = (&g3 * &ba).trace().re;
                let tr4 = (&g4 * &ba).trace().re;
                grad[a] += -mu * (-tr3 + tr4);
                let m3 = &g3 * &ba * &g3;
                let m4 = &g4 * &ba * &g4;
                // H[a][t]: ∂t на F3, F4 is I
                let ht = mu * (-(m3.trace().re) + m4.trace().re);
                // signs: Tr(G ∂aF G ∂tF): F3: ∂a = −B, ∂t = +I → −Tr(G B G)
                hess[(a, t_idx)] += ht;
                hess[(t_idx, a)] += ht;
                for (c, pc) in params.iter().enumerate().skip(a) {
                    let Some((ic, jc, wc)) = y_of_param(*pc, d) else {
                        continue;
                    };
                    let mut bc = CMat::zeros(d, d);
                    bc[(ic, jc)] += wc;
                    if ic != jc || wc.im != 0.0 {
                        bc[(jc, ic)] += wc.conj();
                    }
                    let h = mu * ((&m3 * &bc).trace().re + (&m4 * &bc).trace().re);
                    hess[(a, c)] += h;
                    if c != a {
                        hess[(c, a)] += h;
                    }
                }
            }
            // Damped Newton step.
            let mut ridge = 0.0;
            let delta = loop {
                let mut h = hess.clone();
                for i in 0..m {
                    h[(i, i)] += ridge;
                }
                if let Some(sol) = solve_spd_real(&h, &(-&grad)) {
                    break sol;
                }
                ridge = if ridge == 0.0 { 1e-12 } else { ridge * 100.0 };
                if ridge > 1e6 {
                    return Err("Hessian factorization failed".to_string());
                }
            };
            let decrement = -grad.dot(&delta);
            let f0 = barrier_val(&v, mu).ok_or("infeasible iterate")?;
            let mut alpha = 1.0f64;
            let mut accepted = false;
            for _ in 0..60 {
                let cand = &v + &delta * alpha;
                if let Some(fc) = barrier_val(&cand, mu) {
                    if fc <= f0 - 0.25 * alpha * decrement.max(0.0) + 1e-14 {
                        v = cand;
                        accepted = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            if !accepted || decrement.abs() < 1e-12 {
                break;
            }
        }
        mu /= 10.0;
    }
    Ok(2.0 * v[t_idx] * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chanmetrics::{choi_of_unitary, dnorm_unitary_pair};
    use crate::mpnum::haar_random_unitary;
    use rand::SeedableRng;

    #[test]
    fn zero_difference() {
        let prec = 96;
        let z = CMatrix::zero(4, 4, prec);
        assert_eq!(dnorm_sdp(&z).unwrap(), 0.0);
    }

    #[test]
    fn identity_vs_z_is_two() {
        let prec = 128;
        let id = CMatrix::identity(2, prec);
        let mut z = CMatrix::identity(2, prec);
        z[(1, 1)] = crate::mpnum::Complex::from_f64(-1.0, 0.0, prec);
        let jd = choi_of_unitary(&id).sub(&choi_of_unitary(&z));
        let v = dnorm_sdp(&jd).unwrap();
        assert!((v - 2.0).abs() < 1e-6, "got {}", v);
    }

    #[test]
    fn sdp_matches_closed_form_one_qubit() {
        let prec = 128;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for _ in 0..5 {
            let u = haar_random_unitary(2, prec, &mut rng);
            let v = haar_random_unitary(2, prec, &mut rng);
            let closed = dnorm_unitary_pair(&u, &v).unwrap().to_f64();
            let jd = choi_of_unitary(&u).sub(&choi_of_unitary(&v));
            let sdp = dnorm_sdp(&jd).unwrap();
            assert!((closed - sdp).abs() < 1e-6, "closed {} sdp {}", closed, sdp);
        }
    }

    #[test]
    fn sdp_matches_closed_form_two_qubit() {
        let prec = 128;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(78);
        let u = haar_random_unitary(4, prec, &mut rng);
        let v = haar_random_unitary(4, prec, &mut rng);
        let closed = dnorm_unitary_pair(&u, &v).unwrap().to_f64();
        let jd = choi_of_unitary(&u).sub(&choi_of_unitary(&v));
        let sdp = dnorm_sdp(&jd).unwrap();
        assert!((closed - sdp).abs() < 1e-6, "closed {} sdp {}", closed, sdp);
    }
}
