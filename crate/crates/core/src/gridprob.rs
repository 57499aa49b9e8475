//! One- and two-dimensional grid problems.
//!
//! ODGP: enumerate α ∈ Z[√2] with α ∈ A and α• ∈ B for closed intervals
//! A, B. The solver balances the interval widths with powers of the
//! fundamental unit λ = 1+√2 (α ↦ λα maps solutions of (A,B) to solutions
//! of (λA, λ•B)), which keeps the sweep output-sensitive.
//!
//! TDGP: enumerate u ∈ D[ω] with u in a target region and u• in the unit
//! disk, in order of increasing least denominator exponent k. Each fixed-k
//! slice is a lattice-point search: Z[ω] embeds as a rank-4 lattice in
//! R²×R² via z ↦ (z, z•), the region pair is covered by a product of
//! enclosing ellipses, and candidates are enumerated exhaustively with an
//! LLL-reduced basis and a Fincke-Pohst sweep. Because both ellipse blocks
//! scale by the same 2^{−k}, one reduction serves every k; only the sweep
//! center and radius move. Enumerated points are then filtered by the
//! exact membership predicates, so the enclosure only affects effort,
//! never correctness.

use crate::bigring::{DOmega, DRoot2, ZOmega, ZRoot2};
use crate::mpnum::Complex;
use rug::ops::{CompleteRound, Pow};
use rug::{Float, Integer};
use std::collections::VecDeque;

/// Closed interval with arbitrary-precision endpoints.
#[derive(Clone, Debug)]
pub struct Interval {
    pub lo: Float,
    pub hi: Float,
}

impl Interval {
    pub fn new(lo: Float, hi: Float) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn width(&self) -> Float {
        (&self.hi - &self.lo).complete(self.lo.prec())
    }

    pub fn contains(&self, x: &Float) -> bool {
        *x >= self.lo && *x <= self.hi
    }

    fn scale(&self, s: &Float) -> Interval {
        // s may be negative; keep endpoints ordered.
        let a = (&self.lo * s).complete(s.prec());
        let b = (&self.hi * s).complete(s.prec());
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    fn widen(&self, eps: &Float) -> Interval {
        Interval {
            lo: (&self.lo - eps).complete(eps.prec()),
            hi: (&self.hi + eps).complete(eps.prec()),
        }
    }
}

fn floor_int(x: &Float) -> Integer {
    x.clone().floor().to_integer().unwrap()
}

fn ceil_int(x: &Float) -> Integer {
    x.clone().ceil().to_integer().unwrap()
}

/// All α ∈ Z[√2] with α ∈ a and α• ∈ b, sorted by (a, b) coefficients.
pub fn solve_odgp(a: &Interval, b: &Interval, prec: u32) -> Vec<ZRoot2> {
    let lambda = Float::with_val(prec, 2).sqrt() + 1u32;
    let wa = a.width();
    let wb = b.width();
    // Balance widths: λ^m·wa ≈ λ^{−m}·wb.
    let m: i64 = if wa.is_zero() || wb.is_zero() {
        0
    } else {
        let r =
            Float::with_val(prec, &wb / &wa).ln() / (Float::with_val(prec, &lambda).ln() * 2u32);
        r.to_f64().round() as i64
    };
    let m = m.clamp(-4096, 4096);
    let lam_m = Float::with_val(prec, &lambda).pow(m as i32);
    let lam_conj_m = {
        // (λ•)^m = (1−√2)^m = (−1)^m λ^{−m}
        let mag = Float::with_val(prec, &lambda).pow(-(m as i32));
        if m.rem_euclid(2) == 1 {
            -mag
        } else {
            mag
        }
    };
    let ulp = Float::with_val(prec, 2f64).pow(-(prec as i32) + 16);
    let sa = a.scale(&lam_m).widen(&ulp);
    let sb = b.scale(&lam_conj_m).widen(&ulp);

    // λ^{-m} as an exact ring element for mapping solutions back.
    let lam_inv_pow = if m >= 0 {
        ZRoot2::lambda_inv().pow(m as u32)
    } else {
        ZRoot2::lambda().pow((-m) as u32)
    };

    let sqrt2 = Float::with_val(prec, 2).sqrt();
    let mut out = Vec::new();
    let a_lo = ceil_int(&(Float::with_val(prec, &sa.lo + &sb.lo) / 2u32));
    let a_hi = floor_int(&(Float::with_val(prec, &sa.hi + &sb.hi) / 2u32));
    let mut ai = a_lo.clone();
    while ai <= a_hi {
        let af = Float::with_val(prec, &ai);
        // α ∈ A': b ∈ [(lo−a)/√2, (hi−a)/√2]
        let b1_lo = Float::with_val(prec, &sa.lo - &af) / &sqrt2;
        let b1_hi = Float::with_val(prec, &sa.hi - &af) / &sqrt2;
        // α• ∈ B': b ∈ [(a−hi)/√2, (a−lo)/√2]
        let b2_lo = Float::with_val(prec, &af - &sb.hi) / &sqrt2;
        let b2_hi = Float::with_val(prec, &af - &sb.lo) / &sqrt2;
        let lo = if b1_lo > b2_lo { b1_lo } else { b2_lo };
        let hi = if b1_hi < b2_hi { b1_hi } else { b2_hi };
        if lo <= hi {
            let mut bi = ceil_int(&lo);
            let b_hi = floor_int(&hi);
            while bi <= b_hi {
                let cand = &ZRoot2 { a: ai.clone(), b: bi.clone() } * &lam_inv_pow;
                // Exact filter against the original intervals.
                let v = cand.to_float(prec);
                let vc = cand.conj_root2().to_float(prec);
                if a.contains(&v) && b.contains(&vc) {
                    out.push(cand);
                }
                bi += 1;
            }
        }
        ai += 1;
    }
    out.sort_by(|x, y| (x.a.clone(), x.b.clone()).cmp(&(y.a.clone(), y.b.clone())));
    out.dedup();
    out
}

/// Stream of D[√2] grid points m with m ∈ A, m• ∈ B, by increasing least
/// denominator exponent.
pub struct OdgpKStream {
    a: Interval,
    b: Interval,
    prec: u32,
    k: u32,
    k_max: u32,
    buf: VecDeque<DRoot2>,
}

impl OdgpKStream {
    pub fn new(a: Interval, b: Interval, prec: u32, k_max: u32) -> Self {
        OdgpKStream { a, b, prec, k: 0, k_max, buf: VecDeque::new() }
    }

    fn fill(&mut self) {
        let prec = self.prec;
        let scale = Float::with_val(prec, 2).sqrt().pow(self.k as i32);
        let conj_scale = if self.k % 2 == 1 { -scale.clone() } else { scale.clone() };
        let sa = self.a.scale(&scale);
        let sb = self.b.scale(&conj_scale);
        let mut sols = solve_odgp(&sa, &sb, prec);
        if self.k > 0 {
            sols.retain(|r| !r.divisible_by_sqrt2());
        }
        for r in sols {
            self.buf.push_back(DRoot2::new(r, self.k));
        }
    }
}

impl Iterator for OdgpKStream {
    type Item = DRoot2;
    fn next(&mut self) -> Option<DRoot2> {
        while self.buf.is_empty() {
            if self.k > self.k_max {
                return None;
            }
            self.fill();
            self.k += 1;
        }
        self.buf.pop_front()
    }
}

/// Ellipse {p : (p − c)ᵀ D (p − c) ≤ 1} with positive definite D.
#[derive(Clone, Debug)]
pub struct Ellipse {
    pub d: [[Float; 2]; 2],
    pub center: [Float; 2],
}

impl Ellipse {
    pub fn disk(radius_sq_inv: Float, prec: u32) -> Self {
        let z = Float::new(prec);
        Ellipse {
            d: [[radius_sq_inv.clone(), z.clone()], [z.clone(), radius_sq_inv]],
            center: [z.clone(), z],
        }
    }
}

/// The region R_ε(φ) = {u : |u| ≤ 1, u⃗·w⃗ ≥ c} with w = e^{−iφ/2} and
/// c = √(1 − ε²/4): a circuit whose top-left entry lies in the region
/// implements R_Z(φ) to diamond-norm error at most ε.
#[derive(Clone)]
pub struct EpsilonRegion {
    pub phi: Float,
    pub eps: Float,
    pub c: Float,
    /// Unit vector (cos(φ/2), −sin(φ/2)).
    pub dir: [Float; 2],
    prec: u32,
}

impl EpsilonRegion {
    pub fn new(phi: Float, eps: Float, prec: u32) -> Self {
        let phi = Float::with_val(prec, phi);
        let eps = Float::with_val(prec, eps);
        let quarter = Float::with_val(prec, &eps * &eps) / 4u32;
        let c2 = Float::with_val(prec, 1) - quarter;
        let c = if c2 < 0 { Float::new(prec) } else { c2.sqrt() };
        let half = Float::with_val(prec, &phi) / 2u32;
        let (s, cth) = half.sin_cos(Float::new(prec));
        EpsilonRegion { phi, eps, c, dir: [cth, -s], prec }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    /// Signed slack of the half-plane constraint: u⃗·w⃗ − c.
    pub fn halfplane_slack(&self, u: &Complex) -> Float {
        let prec = self.prec.max(u.prec());
        (&u.re * &self.dir[0]).complete(prec) + (&u.im * &self.dir[1]).complete(prec) - &self.c
    }

    /// Membership in the half-plane (the |u| ≤ 1 part is checked exactly
    /// in ring arithmetic by the caller).
    pub fn contains_halfplane(&self, u: &Complex) -> bool {
        self.halfplane_slack(u) >= 0
    }

    /// Enclosing ellipse of the circular cap: center ((1+c)/2)·w, radial
    /// semi-axis (1−c)/√2, tangential semi-axis √(2(1−c²)).
    pub fn enclosing_ellipse(&self) -> Ellipse {
        let prec = self.prec;
        let one = Float::with_val(prec, 1);
        let c = self.c.clone();
        // Degenerates to the unit disk as c → 0 (tolerance near 2).
        if c <= 0.0001 {
            return Ellipse::disk(one, prec);
        }
        let m = (Float::with_val(prec, &c) + 1u32) / 2u32;
        let rho1 = (Float::with_val(prec, 1) - &c) / Float::with_val(prec, 2).sqrt();
        let rho2 = (Float::with_val(prec, 2)
            * (Float::with_val(prec, 1) - Float::with_val(prec, &c * &c)))
        .sqrt();
        let inv1 = Float::with_val(prec, &rho1 * &rho1).recip();
        let inv2 = Float::with_val(prec, &rho2 * &rho2).recip();
        // Principal axes: dir (radial, 1/ρ₁²) and dir⊥ (tangential, 1/ρ₂²).
        let (wx, wy) = (&self.dir[0], &self.dir[1]);
        let dxx = (wx * wx).complete(prec) * &inv1 + (wy * wy).complete(prec) * &inv2;
        let dyy = (wy * wy).complete(prec) * &inv1 + (wx * wx).complete(prec) * &inv2;
        let dxy = (wx * wy).complete(prec) * (inv1 - inv2);
        Ellipse {
            d: [[dxx, dxy.clone()], [dxy, dyy]],
            center: [(wx * &m).complete(prec), (wy * &m).complete(prec)],
        }
    }
}

/// Real embedding of z ∈ Z[ω] as (Re z, Im z, Re z•, Im z•).
fn emb4(z: &ZOmega, prec: u32) -> [Float; 4] {
    let u = z.embed(prec);
    let v = z.conj_root2().embed(prec);
    [u.re, u.im, v.re, v.im]
}

fn zomega_from_coeffs(c: &[Integer; 4]) -> ZOmega {
    // coefficient order: (d, c, b, a) = ω⁰, ω¹, ω², ω³
    ZOmega { a: c[3].clone(), b: c[2].clone(), c: c[1].clone(), d: c[0].clone() }
}

/// 4×4 Gram matrix of Z[ω]'s ω-power basis under the block form
/// D_a ⊕ D_b applied to the (z, z•) embedding.
fn gram_matrix(da: &[[Float; 2]; 2], db: &[[Float; 2]; 2], prec: u32) -> [[Float; 4]; 4] {
    let basis: Vec<[Float; 4]> =
        (0..4).map(|j| emb4(&ZOmega::one().mul_by_omega_pow(j), prec)).collect();
    let q_apply = |v: &[Float; 4]| -> [Float; 4] {
        [
            (&da[0][0] * &v[0]).complete(prec) + (&da[0][1] * &v[1]).complete(prec),
            (&da[1][0] * &v[0]).complete(prec) + (&da[1][1] * &v[1]).complete(prec),
            (&db[0][0] * &v[2]).complete(prec) + (&db[0][1] * &v[3]).complete(prec),
            (&db[1][0] * &v[2]).complete(prec) + (&db[1][1] * &v[3]).complete(prec),
        ]
    };
    let mut s: [[Float; 4]; 4] =
        core::array::from_fn(|_| core::array::from_fn(|_| Float::new(prec)));
    for i in 0..4 {
        let qi = q_apply(&basis[i]);
        for j in 0..4 {
            let mut acc = Float::new(prec);
            for t in 0..4 {
                acc += (&qi[t] * &basis[j][t]).complete(prec);
            }
            s[i][j] = acc;
        }
    }
    s
}

/// LLL reduction driven by an explicit positive definite Gram matrix.
/// The Gram matrix is rounded to integers after scaling by 2^64 and the
/// reduction runs in exact integer/rational arithmetic, so extreme
/// condition numbers (the region form spans ~ε⁻⁴) cannot stall it.
/// Returns integer basis vectors (coefficients over the ω-power basis).
fn lll_reduce(gram: &[[Float; 4]; 4], _prec: u32) -> [[Integer; 4]; 4] {
    use rug::Rational;
    // Exact scaled Gram; diagonal entries of the source are ≥ 1, so
    // positive definiteness survives the rounding.
    let mut g = [[Integer::new(), Integer::new(), Integer::new(), Integer::new()],
                 [Integer::new(), Integer::new(), Integer::new(), Integer::new()],
                 [Integer::new(), Integer::new(), Integer::new(), Integer::new()],
                 [Integer::new(), Integer::new(), Integer::new(), Integer::new()]];
    for i in 0..4 {
        for j in 0..4 {
            let scaled = Float::with_val(gram[i][j].prec(), &gram[i][j]) << 64u32;
            g[i][j] = scaled.round().to_integer().unwrap();
        }
    }
    // Symmetrize exactly (float rounding may break symmetry by one ulp).
    for i in 0..4 {
        for j in (i + 1)..4 {
            let avg = Integer::from(&g[i][j] + &g[j][i]) >> 1u32;
            g[i][j] = avg.clone();
            g[j][i] = avg;
        }
    }
    let mut h: Vec<[Integer; 4]> =
        (0..4).map(|i| core::array::from_fn(|j| Integer::from((i == j) as u32))).collect();
    let ip = |x: &[Integer; 4], y: &[Integer; 4], g: &[[Integer; 4]; 4]| -> Integer {
        let mut acc = Integer::new();
        for i in 0..4 {
            for j in 0..4 {
                acc += Integer::from(&x[i] * &y[j]) * &g[i][j];
            }
        }
        acc
    };
    let gs = |h: &[[Integer; 4]; 4], g: &[[Integer; 4]; 4]| -> ([[Rational; 4]; 4], [Rational; 4]) {
        let mut mu: [[Rational; 4]; 4] =
            core::array::from_fn(|_| core::array::from_fn(|_| Rational::new()));
        let mut bstar: [Rational; 4] = core::array::from_fn(|_| Rational::new());
        for i in 0..4 {
            let mut norm = Rational::from(ip(&h[i], &h[i], g));
            for j in 0..i {
                let mut proj = Rational::from(ip(&h[i], &h[j], g));
                for t in 0..j {
                    proj -= Rational::from(&mu[i][t] * &mu[j][t]) * &bstar[t];
                }
                mu[i][j] = proj / &bstar[j];
                norm -= Rational::from(&mu[i][j] * &mu[i][j]) * &bstar[j];
            }
            bstar[i] = norm;
        }
        (mu, bstar)
    };
    let round_rat = |r: &Rational| -> Integer {
        crate::bigring::zroot2_div_round_pub(r.numer(), r.denom())
    };
    let delta = Rational::from((99u32, 100u32));
    let mut harr: [[Integer; 4]; 4] = core::array::from_fn(|i| h[i].clone());
    let mut kidx = 1usize;
    let mut guard = 0u32;
    while kidx < 4 {
        guard += 1;
        if guard > 100_000 {
            break;
        }
        // Size-reduce row kidx, refreshing the GS data between passes.
        for _pass in 0..64 {
            let (mu, _) = gs(&harr, &g);
            let mut changed = false;
            for j in (0..kidx).rev() {
                let q = round_rat(&mu[kidx][j]);
                if q != 0 {
                    for t in 0..4 {
                        let sub = Integer::from(&q * &harr[j][t]);
                        harr[kidx][t] -= sub;
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let (mu, bstar) = gs(&harr, &g);
        let lhs = bstar[kidx].clone();
        let rhs = (delta.clone() - Rational::from(&mu[kidx][kidx - 1] * &mu[kidx][kidx - 1]))
            * &bstar[kidx - 1];
        if lhs >= rhs {
            kidx += 1;
        } else {
            harr.swap(kidx, kidx - 1);
            kidx = kidx.max(2) - 1;
        }
    }
    h = harr.to_vec();
    core::array::from_fn(|i| h[i].clone())
}

/// Cholesky S = Rᵀ R with R upper triangular; None if not positive definite.
fn cholesky4(s: &[[Float; 4]; 4], prec: u32) -> Option<[[Float; 4]; 4]> {
    let mut rr: [[Float; 4]; 4] =
        core::array::from_fn(|_| core::array::from_fn(|_| Float::new(prec)));
    for i in 0..4 {
        let mut diag = s[i][i].clone();
        for t in 0..i {
            diag -= (&rr[t][i] * &rr[t][i]).complete(prec);
        }
        if diag <= 0 {
            return None;
        }
        rr[i][i] = diag.sqrt();
        for j in (i + 1)..4 {
            let mut v = s[i][j].clone();
            for t in 0..i {
                v -= (&rr[t][i] * &rr[t][j]).complete(prec);
            }
            rr[i][j] = v / &rr[i][i];
        }
    }
    Some(rr)
}

/// All integer vectors x with (x−w)ᵀ RᵀR (x−w) ≤ r², enumerated over a
/// precomputed Cholesky factor; exhaustive within the ellipsoid.
fn fincke_pohst(
    rr: &[[Float; 4]; 4],
    w: &[Float; 4],
    r_sq: &Float,
    prec: u32,
    limit: usize,
) -> Vec<[Integer; 4]> {
    struct Ctx<'a> {
        rr: &'a [[Float; 4]; 4],
        w: &'a [Float; 4],
        prec: u32,
        out: Vec<[Integer; 4]>,
        limit: usize,
    }

    // At depth i the inequality is
    //   Σ_{t≤i} (R_tt(x_t−w_t) + Σ_{j>t} R_tj(x_j−w_j))² ≤ r²,
    // so with partial_t = Σ_{j>t} R_tj(x_j−w_j) fixed by deeper levels,
    // x_i ranges over a closed interval.
    fn recurse(
        ctx: &mut Ctx,
        budget: &Float,
        partial: &[Float; 4],
        depth: usize,
        x: &mut [Integer; 4],
    ) {
        if ctx.out.len() >= ctx.limit {
            return;
        }
        let prec = ctx.prec;
        let i = depth;
        let radius = budget.clone().sqrt();
        let centre =
            (&ctx.w[i] - &Float::with_val(prec, &partial[i] / &ctx.rr[i][i])).complete(prec);
        let half = Float::with_val(prec, &radius / &ctx.rr[i][i]);
        let lo = ceil_int(&((&centre - &half).complete(prec)));
        let hi = floor_int(&((&centre + &half).complete(prec)));
        let mut xi = lo.clone();
        while xi <= hi {
            let dx = Float::with_val(prec, &xi) - &ctx.w[i];
            let term = Float::with_val(prec, &ctx.rr[i][i] * &dx) + &partial[i];
            let used = (&term * &term).complete(prec);
            let rem = Float::with_val(prec, budget - &used);
            if rem >= 0 {
                x[i] = xi.clone();
                if i == 0 {
                    ctx.out.push(x.clone());
                    if ctx.out.len() >= ctx.limit {
                        return;
                    }
                } else {
                    let mut next_partial = partial.clone();
                    for t in 0..i {
                        next_partial[t] += Float::with_val(prec, &ctx.rr[t][i] * &dx);
                    }
                    recurse(ctx, &rem, &next_partial, i - 1, x);
                }
            }
            xi += 1;
        }
    }

    let mut ctx = Ctx { rr, w, prec, out: Vec::new(), limit };
    let partial: [Float; 4] = core::array::from_fn(|_| Float::new(prec));
    let mut x = [Integer::new(), Integer::new(), Integer::new(), Integer::new()];
    recurse(&mut ctx, r_sq, &partial, 3, &mut x);
    ctx.out
}

/// Solve a 4×4 linear system M x = rhs (M given by columns), partial pivoting.
fn solve4(cols: &[[Float; 4]], rhs: &[Float; 4], prec: u32) -> [Float; 4] {
    let mut a: Vec<Vec<Float>> = (0..4)
        .map(|i| {
            let mut row: Vec<Float> = (0..4).map(|j| cols[j][i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for col in 0..4 {
        let mut piv = col;
        for r in (col + 1)..4 {
            if a[r][col].clone().abs() > a[piv][col].clone().abs() {
                piv = r;
            }
        }
        a.swap(col, piv);
        for r in 0..4 {
            if r == col {
                continue;
            }
            let f = Float::with_val(prec, &a[r][col] / &a[col][col]);
            for cc in col..5 {
                let sub = (&f * &a[col][cc]).complete(prec);
                a[r][cc] -= sub;
            }
        }
    }
    core::array::from_fn(|i| Float::with_val(prec, &a[i][4] / &a[i][i]))
}

/// Stream of u ∈ D[ω] with u ∈ R_ε(φ) and u• in the closed unit disk,
/// ordered by increasing least denominator exponent and lexicographically
/// on (a,b,c,d) within one exponent.
pub struct TdgpStream {
    region: EpsilonRegion,
    prec: u32,
    /// Precision for the lattice-enumeration step; the Gram matrix
    /// condition number grows like ε⁻⁴, which needs more head-room than
    /// the membership predicates.
    lattice_prec: u32,
    k: u32,
    k_max: u32,
    buf: VecDeque<DOmega>,
    /// Reduced basis vectors (ω-power coefficients); the Gram matrix of
    /// the scaled problem is 2^{−k}·S₀, so one reduction serves every k.
    basis_cols: [[Integer; 4]; 4],
    chol: [[Float; 4]; 4],
    w_base: [Float; 4],
    /// Candidate lattice points examined so far (effort metric).
    pub nodes_visited: usize,
}

impl TdgpStream {
    pub fn new(region: EpsilonRegion, k_max: u32) -> Self {
        let prec = region.prec();
        let log2_inv_eps = {
            let l = -region.eps.clone().log2().to_f64();
            if l.is_finite() && l > 0.0 {
                l.ceil() as u32
            } else {
                0
            }
        };
        let lattice_prec = prec + 4 * log2_inv_eps + 128;
        let ellipse = region.enclosing_ellipse();
        let lp = lattice_prec;
        let da: [[Float; 2]; 2] = core::array::from_fn(|i| {
            core::array::from_fn(|j| Float::with_val(lp, &ellipse.d[i][j]))
        });
        let db: [[Float; 2]; 2] = [
            [Float::with_val(lp, 1), Float::new(lp)],
            [Float::new(lp), Float::with_val(lp, 1)],
        ];
        let gram = gram_matrix(&da, &db, lp);
        let basis_cols = lll_reduce(&gram, lp);
        let mut s_red: [[Float; 4]; 4] =
            core::array::from_fn(|_| core::array::from_fn(|_| Float::new(lp)));
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Float::new(lp);
                for p in 0..4 {
                    for q in 0..4 {
                        let c = Integer::from(&basis_cols[i][p] * &basis_cols[j][q]);
                        acc += (&gram[p][q] * &Float::with_val(lp, c)).complete(lp);
                    }
                }
                s_red[i][j] = acc;
            }
        }
        let chol = cholesky4(&s_red, lp).expect("region Gram matrix must be positive definite");
        let emb_cols: Vec<[Float; 4]> =
            (0..4).map(|i| emb4(&zomega_from_coeffs(&basis_cols[i]), lp)).collect();
        let center4 = [
            Float::with_val(lp, &ellipse.center[0]),
            Float::with_val(lp, &ellipse.center[1]),
            Float::new(lp),
            Float::new(lp),
        ];
        let w_base = solve4(&emb_cols, &center4, lp);
        TdgpStream {
            region,
            prec,
            lattice_prec,
            k: 0,
            k_max,
            buf: VecDeque::new(),
            basis_cols,
            chol,
            w_base,
            nodes_visited: 0,
        }
    }

    pub fn current_k(&self) -> u32 {
        self.k
    }

    /// Diagnostic dump of the reduced-lattice state.
    pub fn debug_dump(&self) {
        for i in 0..4 {
            println!(
                "basis[{}] = {:?}  chol_diag={:e}  w_base={:e}",
                i,
                self.basis_cols[i],
                self.chol[i][i].to_f64(),
                self.w_base[i].to_f64()
            );
        }
    }

    /// Exact |z|² ≤ 2^k and |z•|² ≤ 2^k tests in Z[√2].
    fn inside_disks_exact(z: &ZOmega, k: u32) -> (bool, bool) {
        let bound = ZRoot2 { a: Integer::from(1) << k, b: Integer::from(0) };
        let n1 = z.norm_zroot2();
        let n2 = z.conj_root2().norm_zroot2();
        ((&bound - &n1).signum() >= 0, (&bound - &n2).signum() >= 0)
    }

    /// Half-plane predicate with 10 guard digits; borderline candidates are
    /// re-tested at doubled precision rather than rejected.
    fn inside_halfplane(&self, z: &ZOmega, k: u32) -> bool {
        let prec = self.prec;
        let u = DOmega::new(z.clone(), k).embed(prec);
        let slack = self.region.halfplane_slack(&u);
        let digits = (prec as f64 / std::f64::consts::LOG2_10) as i32;
        let margin = Float::with_val(prec, 10f64).pow(-(digits - 10));
        if slack >= margin {
            return true;
        }
        if slack <= -margin.clone() {
            return false;
        }
        let hi = 2 * prec;
        let region2 = EpsilonRegion::new(
            Float::with_val(hi, &self.region.phi),
            Float::with_val(hi, &self.region.eps),
            hi,
        );
        let u2 = DOmega::new(z.clone(), k).embed(hi);
        region2.contains_halfplane(&u2)
    }

    fn fill(&mut self) {
        let lp = self.lattice_prec;
        let k = self.k;
        // Scaled problem: form 2^{−k}·S₀ with center √2^k·c, i.e. the same
        // reduced lattice with radius² = 2·2^k around √2^k·w_base.
        let sqrt2k = Float::with_val(lp, 2).sqrt().pow(k as i32);
        let w: [Float; 4] = core::array::from_fn(|i| (&self.w_base[i] * &sqrt2k).complete(lp));
        let r_sq = Float::with_val(lp, 2) * Float::with_val(lp, 2f64).pow(k as i32);
        let cands = fincke_pohst(&self.chol, &w, &r_sq, lp, 4_000_000);
        self.nodes_visited += cands.len();
        let mut found: Vec<ZOmega> = Vec::new();
        for x in cands {
            let mut coeffs = [Integer::new(), Integer::new(), Integer::new(), Integer::new()];
            for (i, xi) in x.iter().enumerate() {
                for t in 0..4 {
                    coeffs[t] += Integer::from(xi * &self.basis_cols[i][t]);
                }
            }
            let z = zomega_from_coeffs(&coeffs);
            if z.is_zero() && k > 0 {
                continue;
            }
            if k > 0 && z.divisible_by_sqrt2() {
                continue; // already emitted at a smaller exponent
            }
            let (in_a_disk, in_b_disk) = Self::inside_disks_exact(&z, k);
            if !in_a_disk || !in_b_disk {
                continue;
            }
            if !self.inside_halfplane(&z, k) {
                continue;
            }
            found.push(z);
        }
        found.sort_by_key(|z| z.lex_key());
        for z in found {
            self.buf.push_back(DOmega::new(z, k));
        }
    }
}

impl Iterator for TdgpStream {
    type Item = DOmega;
    fn next(&mut self) -> Option<DOmega> {
        while self.buf.is_empty() {
            if self.k > self.k_max {
                return None;
            }
            self.fill();
            self.k += 1;
        }
        self.buf.pop_front()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64, prec: u32) -> Interval {
        Interval::new(Float::with_val(prec, lo), Float::with_val(prec, hi))
    }

    fn brute_force_odgp(a: &Interval, b: &Interval, bound: i64, prec: u32) -> Vec<ZRoot2> {
        let mut out = Vec::new();
        for ca in -bound..=bound {
            for cb in -bound..=bound {
                let z = ZRoot2::new(ca, cb);
                let v = z.to_float(prec);
                let vc = z.conj_root2().to_float(prec);
                if a.contains(&v) && b.contains(&vc) {
                    out.push(z);
                }
            }
        }
        out.sort_by(|x, y| (x.a.clone(), x.b.clone()).cmp(&(y.a.clone(), y.b.clone())));
        out
    }

    #[test]
    fn odgp_simple_window() {
        let prec = 96;
        let a = iv(0.0, 2.0, prec);
        let b = iv(-2.0, 2.0, prec);
        let sols = solve_odgp(&a, &b, prec);
        let expect = brute_force_odgp(&a, &b, 8, prec);
        assert_eq!(sols, expect);
        assert!(sols.contains(&ZRoot2::new(0, 0)));
        assert!(sols.contains(&ZRoot2::new(1, 0)));
        assert!(sols.contains(&ZRoot2::new(2, 0)));
        assert!(sols.contains(&ZRoot2::new(0, 1)));
        assert_eq!(sols.len(), 4);
    }

    #[test]
    fn odgp_point_interval() {
        let prec = 96;
        let a = iv(5.0, 5.0, prec);
        let b = iv(5.0, 5.0, prec);
        let sols = solve_odgp(&a, &b, prec);
        assert_eq!(sols, vec![ZRoot2::new(5, 0)]);
    }

    #[test]
    fn odgp_conjugate_exclusion() {
        // 2 − √2 ≈ 0.586 ∈ [0.4, 0.6] qualifies only if 2+√2 ∈ B.
        let prec = 96;
        let a = iv(0.4, 0.6, prec);
        let b_small = iv(-3.0, 3.0, prec);
        let sols = solve_odgp(&a, &b_small, prec);
        let expect = brute_force_odgp(&a, &b_small, 6, prec);
        assert_eq!(sols, expect);
        assert!(!sols.contains(&ZRoot2::new(2, -1)));
        let b_big = iv(-4.0, 4.0, prec);
        let sols = solve_odgp(&a, &b_big, prec);
        assert!(sols.contains(&ZRoot2::new(2, -1)));
    }

    #[test]
    fn odgp_matches_brute_force_random() {
        let prec = 128;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..40 {
            let (l1, l2): (f64, f64) = (rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
            let (m1, m2): (f64, f64) = (rng.gen_range(-8.0..8.0), rng.gen_range(-8.0..8.0));
            let a = iv(l1.min(l2), l1.max(l2), prec);
            let b = iv(m1.min(m2), m1.max(m2), prec);
            let sols = solve_odgp(&a, &b, prec);
            let expect = brute_force_odgp(&a, &b, 12, prec);
            assert_eq!(sols, expect);
        }
    }

    #[test]
    fn odgp_kstream_increasing_lde() {
        let prec = 128;
        let a = iv(0.2, 0.33, prec);
        let b = iv(0.0, 1.0, prec);
        let stream = OdgpKStream::new(a.clone(), b.clone(), prec, 40);
        let got: Vec<DRoot2> = stream.take(12).collect();
        let mut last_k = 0;
        for m in &got {
            assert!(m.lde() >= last_k);
            last_k = m.lde();
            let v = m.to_float(prec);
            let vc = m.conj_root2().to_float(prec);
            assert!(a.contains(&v), "value {} outside A", v.to_f64());
            assert!(b.contains(&vc), "conjugate {} outside B", vc.to_f64());
        }
        assert!(!got.is_empty());
    }

    #[test]
    fn tdgp_identity_angle_wide_tolerance() {
        let prec = 128;
        let region = EpsilonRegion::new(Float::with_val(prec, 0), Float::with_val(prec, 2), prec);
        let stream = TdgpStream::new(region, 8);
        let first: Vec<DOmega> = stream.take(6).collect();
        assert!(first.iter().any(|u| u == &DOmega::one()));
    }

    #[test]
    fn tdgp_candidates_satisfy_predicates_at_double_precision() {
        let prec = 160;
        let phi = Float::with_val(prec, rug::float::Constant::Pi) / 4u32;
        let eps = Float::with_val(prec, 1e-1);
        let region = EpsilonRegion::new(phi.clone(), eps.clone(), prec);
        let stream = TdgpStream::new(region, 80);
        let cands: Vec<DOmega> = stream.take(25).collect();
        assert!(!cands.is_empty());
        let hi = 2 * prec;
        let region2 = EpsilonRegion::new(Float::with_val(hi, &phi), Float::with_val(hi, &eps), hi);
        let mut last_k = 0;
        for u in &cands {
            assert!(u.lde() >= last_k, "k must be non-decreasing");
            last_k = u.lde();
            let e = u.embed(hi);
            assert!(e.abs().to_f64() <= 1.0 + 1e-25);
            assert!(region2.contains_halfplane(&e), "halfplane violated");
            let ec = u.conj_root2().embed(hi);
            assert!(ec.abs().to_f64() <= 1.0 + 1e-25);
        }
    }

    #[test]
    fn tdgp_matches_brute_force_small_k() {
        // For a generous region, compare the k ≤ 3 slices against brute
        // force over bounded coefficients (mapping solutions back through
        // the basis change is implicit in the equality check).
        let prec = 128;
        let phi = Float::with_val(prec, 0.7);
        let eps = Float::with_val(prec, 0.9);
        let region = EpsilonRegion::new(phi.clone(), eps.clone(), prec);
        let stream = TdgpStream::new(region.clone(), 3);
        let got: Vec<DOmega> = stream.collect();
        let mut expect = Vec::new();
        for k in 0u32..=3 {
            let mut slice = Vec::new();
            for a in -6i32..=6 {
                for b in -6i32..=6 {
                    for c in -6i32..=6 {
                        for d in -6i32..=6 {
                            let z = ZOmega::new(a, b, c, d);
                            if z.is_zero() && k > 0 {
                                continue;
                            }
                            if k > 0 && z.divisible_by_sqrt2() {
                                continue;
                            }
                            let (da, db) = TdgpStream::inside_disks_exact(&z, k);
                            if !da || !db {
                                continue;
                            }
                            let u = DOmega::new(z.clone(), k);
                            if region.contains_halfplane(&u.embed(prec)) {
                                slice.push(z);
                            }
                        }
                    }
                }
            }
            slice.sort_by_key(|z| z.lex_key());
            for z in slice {
                expect.push(DOmega::new(z, k));
            }
        }
        assert_eq!(got, expect);
    }
}
