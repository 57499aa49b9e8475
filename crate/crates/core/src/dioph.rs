//! Number-theoretic engine: budgeted integer factorization and the
//! relative norm equation t†t = ξ over D[ω] for ξ ∈ D[√2].
//!
//! Factorization is trial division plus Pollard-Brent rho under an explicit
//! step budget; when the budget runs out the outcome is reported as
//! abandoned and the caller skips the candidate. Primality certification is
//! Baillie-PSW style: strong probable-prime tests with fixed bases plus a
//! strong Lucas test.
//!
//! The norm equation is solved by prime splitting: each rational prime
//! dividing N(ξ) is lifted to Z[√2] (Euclidean gcd with √2 − u, u² ≡ 2) and
//! then to Z[ω] through square roots modulo p (Tonelli-Shanks), with the
//! residual totally-positive unit matched to an even power of λ = 1+√2.
//! Every returned solution is re-verified exactly in ring arithmetic.

use crate::bigring::{DOmega, DRoot2, ZOmega, ZRoot2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::RemRounding;
use rug::{Complete, Integer};

const MR_BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Strong probable-prime test to a given base.
fn sprp(n: &Integer, base: u32) -> bool {
    if *n == base {
        return true;
    }
    let n_minus_1 = (n - 1u32).complete();
    let s = n_minus_1.find_one(0).unwrap_or(0);
    let d = (&n_minus_1 >> s).complete();
    let mut x = Integer::from(base).pow_mod(&d, n).unwrap();
    if x == 1 || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = x.square() % n;
        if x == n_minus_1 {
            return true;
        }
        if x == 1 {
            return false;
        }
    }
    false
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas(n: &Integer) -> bool {
    if n.is_perfect_square() {
        return false;
    }
    // Find D ∈ {5, −7, 9, −11, …} with Jacobi(D, n) = −1.
    let mut d = Integer::from(5);
    loop {
        let j = d.jacobi(n);
        if j == 0 {
            // Shares a factor with n (and n ≠ |D| was screened by trial division).
            return n.clone().abs() == d.clone().abs();
        }
        if j == -1 {
            break;
        }
        d = if d > 0 { -(d + 2u32) } else { -(d - 2u32) };
        if d.clone().abs() > 1000 {
            // Unreachable for non-squares; fail safe.
            return false;
        }
    }
    // P = 1, Q = (1 − D)/4.
    let q = (Integer::from(1) - &d) / 4u32;
    let n_plus_1 = (n + 1u32).complete();
    let s = n_plus_1.find_one(0).unwrap_or(0);
    let dd = (&n_plus_1 >> s).complete();

    let inv2 = Integer::from(2).invert(n).unwrap();
    let modn = |x: Integer| -> Integer { x.rem_euc(n).into() };

    // Lucas ladder for U_dd, V_dd with Q^dd, binary from the MSB.
    let mut u = Integer::from(1);
    let mut v = Integer::from(1);
    let mut qk = q.clone().rem_euc(n);
    let bits = dd.significant_bits();
    for i in (0..bits - 1).rev() {
        // double: U_{2k} = U·V, V_{2k} = V² − 2Q^k, Q^{2k} = (Q^k)²
        u = modn((&u * &v).complete());
        v = modn(v.square() - (&qk << 1u32).complete());
        qk = modn(qk.square());
        if dd.get_bit(i) {
            // increment: U' = (U + V)/2, V' = (D·U + V)/2, Q^{k+1} = Q^k·Q
            let u_new = modn(((&u + &v).complete()) * &inv2);
            let v_new = modn(((&d * &u).complete() + &v) * &inv2);
            u = u_new;
            v = v_new;
            qk = modn((&qk * &q).complete());
        }
    }
    if u == 0 || v == 0 {
        return true;
    }
    // V_{dd·2^r} ≡ 0 for some 0 ≤ r < s.
    for _ in 1..s {
        v = modn(v.square() - (&qk << 1u32).complete());
        qk = modn(qk.square());
        if v == 0 {
            return true;
        }
    }
    false
}

/// Baillie-PSW style primality: small trial division, fixed-base strong
/// probable-prime rounds, then a strong Lucas test.
pub fn is_prime(n: &Integer) -> bool {
    let n = n.clone().abs();
    if n < 2 {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        if n == p {
            return true;
        }
        if n.is_divisible_u(p) {
            return false;
        }
    }
    for b in MR_BASES {
        if !sprp(&n, b) {
            return false;
        }
    }
    strong_lucas(&n)
}

/// Pollard-Brent rho; returns a non-trivial factor or None if the step
/// budget is exhausted.
fn pollard_brent(n: &Integer, budget: u64, rng: &mut ChaCha8Rng) -> Option<Integer> {
    if n.is_even() {
        return Some(Integer::from(2));
    }
    let n_minus_2 = (n - 2u32).complete();
    let mut steps: u64 = 0;
    while steps < budget {
        let c = Integer::from(rng.gen_range(1u64..1_000_003)).rem_euc(&n_minus_2) + 1u32;
        let mut y = Integer::from(rng.gen_range(2u64..1_000_003)).rem_euc(n);
        let m = 128u64;
        let mut g = Integer::from(1);
        let mut r: u64 = 1;
        let mut q = Integer::from(1);
        let mut x = y.clone();
        let mut ys = y.clone();
        while g == 1 && steps < budget {
            x = y.clone();
            for _ in 0..r {
                y = (y.square() + &c).rem_euc(n).into();
            }
            let mut k: u64 = 0;
            while k < r && g == 1 && steps < budget {
                ys = y.clone();
                let lim = m.min(r - k);
                for _ in 0..lim {
                    y = (y.square() + &c).rem_euc(n).into();
                    let diff = (&x - &y).complete().abs();
                    q = (q * diff).rem_euc(n).into();
                }
                steps += lim;
                g = q.clone().gcd(n);
                k += m;
            }
            r <<= 1;
        }
        if g == *n {
            // Backtrack one step at a time.
            loop {
                ys = (ys.square() + &c).rem_euc(n).into();
                let diff = (&x - &ys).complete().abs();
                g = diff.gcd(n);
                if g > 1 {
                    break;
                }
            }
        }
        if g > 1 && g < *n {
            return Some(g);
        }
    }
    None
}

/// Outcome of a budgeted factorization attempt.
#[derive(Clone, Debug)]
pub struct FactorizationOutcome {
    pub n: Integer,
    /// (prime, multiplicity), primes certified by `is_prime`.
    pub factors: Vec<(Integer, u32)>,
    /// Unfactored composite cofactor when the budget ran out.
    pub residual: Option<Integer>,
}

impl FactorizationOutcome {
    pub fn is_complete(&self) -> bool {
        self.residual.is_none()
    }
}

/// Factor |n| with a bounded effort budget (rho steps). Abandonment is a
/// value, not an error: the caller skips the candidate.
pub fn factor(n: &Integer, budget: u64, seed: u64) -> FactorizationOutcome {
    assert!(*n != 0, "factor() requires n ≠ 0");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let mut target = n.clone().abs();
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    let push = |p: Integer, factors: &mut Vec<(Integer, u32)>| {
        for f in factors.iter_mut() {
            if f.0 == p {
                f.1 += 1;
                return;
            }
        }
        factors.push((p, 1));
    };
    // Trial division to 10^4.
    let mut p = Integer::from(2);
    while p.clone().square() <= target && p < 10_000 {
        while target.is_divisible(&p) {
            target /= &p;
            push(p.clone(), &mut factors);
        }
        p = p.next_prime();
    }
    // Rho on the remaining stack.
    let mut residual: Option<Integer> = None;
    let mut stack = vec![target];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(&m) {
            push(m, &mut factors);
            continue;
        }
        match pollard_brent(&m, budget, &mut rng) {
            Some(g) => {
                stack.push((&m / &g).complete());
                stack.push(g);
            }
            None => {
                residual = Some(match residual {
                    None => m,
                    Some(r) => r * m,
                });
            }
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    FactorizationOutcome { n: n.clone(), factors, residual }
}

/// Square root modulo an odd prime (Tonelli-Shanks); `a` need not be reduced.
pub fn sqrt_mod_prime(a: &Integer, p: &Integer) -> Option<Integer> {
    let a = a.clone().rem_euc(p);
    if a == 0 {
        return Some(Integer::new());
    }
    if a.legendre(p) != 1 {
        return None;
    }
    if p.mod_u(4) == 3 {
        let e = (p + 1u32).complete() >> 2u32;
        return Some(a.pow_mod(&e, p).unwrap());
    }
    // p ≡ 1 (mod 4): full Tonelli-Shanks.
    let p_minus_1 = (p - 1u32).complete();
    let s = p_minus_1.find_one(0).unwrap();
    let q = (&p_minus_1 >> s).complete();
    // Find a quadratic non-residue.
    let mut z = Integer::from(2);
    while z.legendre(p) != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.pow_mod(&q, p).unwrap();
    let mut t = a.clone().pow_mod(&q, p).unwrap();
    let mut r = a.pow_mod(&((&q + 1u32).complete() >> 1u32), p).unwrap();
    while t != 1 {
        // Least i with t^{2^i} = 1.
        let mut i = 0u32;
        let mut tt = t.clone();
        while tt != 1 {
            tt = tt.square().rem_euc(p).into();
            i += 1;
            if i == m {
                return None;
            }
        }
        let b = c.pow_mod(&(Integer::from(1) << (m - i - 1)), p).unwrap();
        m = i;
        c = b.clone().square().rem_euc(p).into();
        t = (t * &c).rem_euc(p).into();
        r = (r * b).rem_euc(p).into();
    }
    Some(r)
}

/// Result of a norm-equation solve.
#[derive(Clone, Debug)]
pub enum NormEqResult {
    Solution(DOmega),
    /// Provably no solution exists.
    NoSolution,
    /// Factorization budget exhausted; the caller skips this candidate.
    Abandoned,
}

fn zroot2_from_int(n: &Integer) -> ZRoot2 {
    ZRoot2 { a: n.clone(), b: Integer::new() }
}

/// i√2 = ω + ω³.
fn i_sqrt2() -> ZOmega {
    ZOmega::new(1, 0, 1, 0)
}

/// i = ω².
fn i_unit() -> ZOmega {
    ZOmega::new(0, 1, 0, 0)
}

/// Multiplicity of an exact divisor d in x (both in Z[√2]).
fn divide_out(x: &mut ZRoot2, d: &ZRoot2) -> u32 {
    let mut m = 0;
    while let Some(q) = x.exact_div(d) {
        *x = q;
        m += 1;
    }
    m
}

/// Solve τ·τ† = p·(unit) for a rational prime p that stays prime in Z[√2].
/// For p ≡ 3 (mod 8) the solution lives in Z[i√2]; for p ≡ 5 (mod 8) in Z[i].
fn solve_inert_prime(p: &Integer) -> Option<ZOmega> {
    let pz = ZOmega::from_int(p.clone());
    match p.mod_u(8) {
        3 => {
            let s = sqrt_mod_prime(&Integer::from(-2), p)?;
            let seed = &ZOmega::from_int(s) - &i_sqrt2();
            let g = pz.gcd(&seed);
            if g.abs_norm() == (p * p).complete() {
                Some(g)
            } else {
                None
            }
        }
        5 => {
            let s = sqrt_mod_prime(&Integer::from(-1), p)?;
            let seed = &ZOmega::from_int(s) - &i_unit();
            let g = pz.gcd(&seed);
            if g.abs_norm() == (p * p).complete() {
                Some(g)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Solve τ·τ† = π·(unit) for a prime π of Z[√2] above p ≡ 1 (mod 8).
/// ω satisfies ω² − √2·ω + 1 = 0, so a root of x² − u·x + 1 mod p (with
/// u = √2 mod p under Z[√2]/(π) ≅ F_p) yields τ = gcd(π, ω − root).
fn solve_split_prime(pi: &ZRoot2, p: &Integer, u_sqrt2: &Integer) -> Option<ZOmega> {
    // Discriminant u² − 4 ≡ −2 (mod p).
    let s = sqrt_mod_prime(&Integer::from(-2), p)?;
    let inv2 = Integer::from(2).invert(p).ok()?;
    for root in [
        ((u_sqrt2 + &s).complete() * &inv2).rem_euc(p),
        ((u_sqrt2 - &s).complete() * &inv2).rem_euc(p),
    ] {
        let seed = &ZOmega::omega() - &ZOmega::from_int(root.clone());
        let g = ZOmega::from_zroot2(pi).gcd(&seed);
        if g.abs_norm() == *p {
            return Some(g);
        }
    }
    None
}

/// Match a totally positive unit of Z[√2] to λ^{2j}; returns j.
fn match_even_lambda_power(u: &ZRoot2) -> Option<i64> {
    if u.norm().clone().abs() != 1 {
        return None;
    }
    if u.signum() <= 0 || u.conj_root2().signum() <= 0 {
        return None;
    }
    let bits = u.a.significant_bits().max(u.b.significant_bits()).max(32) + 64;
    let f = u.to_float(bits);
    let lambda = rug::Float::with_val(bits, 2).sqrt() + 1u32;
    let j_f = (f.ln() / (lambda.ln() * 2u32)).to_f64().round() as i64;
    for j in [j_f, j_f - 1, j_f + 1] {
        let cand = if j >= 0 {
            ZRoot2::lambda().pow((2 * j) as u32)
        } else {
            ZRoot2::lambda_inv().pow((-2 * j) as u32)
        };
        if cand == *u {
            return Some(j);
        }
    }
    None
}

/// λ^j as an element of Z[ω] (real subring).
fn lambda_pow_zomega(j: i64) -> ZOmega {
    let l = if j >= 0 {
        ZRoot2::lambda().pow(j as u32)
    } else {
        ZRoot2::lambda_inv().pow((-j) as u32)
    };
    ZOmega::from_zroot2(&l)
}

/// Default factoring budget: trial division plus ~bits² rho steps with a
/// generous floor, matching the skip-on-failure control flow.
pub fn default_budget_for_bits(bits: u32) -> u64 {
    let b = bits as u64;
    (b * b * 4).max(1 << 15)
}

/// Solve t·t† = ξ over D[ω] for ξ ∈ D[√2].
///
/// Preconditions (checked): ξ and ξ• embed to non-negative reals; these are
/// necessary for solvability. Success is verified exactly before returning.
/// `budget` caps the rho steps per factorization attempt; `None` derives
/// the cap from the bit length of N(ξ).
pub fn solve_norm_equation(xi: &DRoot2, budget: Option<u64>, seed: u64) -> NormEqResult {
    if xi.is_zero() {
        return NormEqResult::Solution(DOmega::zero());
    }
    if xi.signum() < 0 || xi.conj_root2().signum() < 0 {
        return NormEqResult::NoSolution;
    }
    // Scale to an integral target: t = τ/√2^m with τ·τ† = ξ·2^m ∈ Z[√2].
    let k = xi.lde();
    let m_exp = k.div_ceil(2);
    let mut target = xi.numerator().clone();
    for _ in 0..(2 * m_exp - k) {
        target = target.mul_by_sqrt2();
    }

    let n = target.norm().abs();
    debug_assert!(n != 0);
    let budget = budget.unwrap_or_else(|| default_budget_for_bits(n.significant_bits()));
    let outcome = factor(&n, budget, seed);
    let Some(()) = outcome.is_complete().then_some(()) else {
        return NormEqResult::Abandoned;
    };

    let mut tau = ZOmega::one();
    let mut rem = target.clone();
    // √2-part: δ = 1+ω has δδ† = 2+√2 = √2·λ.
    let delta = ZOmega::new(0, 0, 1, 1);
    while rem.divisible_by_sqrt2() {
        rem = rem.div_by_sqrt2();
        tau = &tau * &delta;
    }
    for (p, _) in outcome.factors.iter().filter(|(p, _)| *p != 2) {
        match p.mod_u(8) {
            1 | 7 => {
                let Some(u_sqrt2) = sqrt_mod_prime(&Integer::from(2), p) else {
                    return NormEqResult::Abandoned;
                };
                let pi = zroot2_from_int(p).gcd(&(&zroot2_from_int(&u_sqrt2) - &ZRoot2::sqrt2()));
                if pi.norm().clone().abs() != *p {
                    return NormEqResult::Abandoned;
                }
                // √2 ≡ u (mod π) by construction, hence √2 ≡ −u (mod π•).
                let u_conj = (p - &u_sqrt2).complete();
                for (prime, u_eff) in
                    [(pi.clone(), u_sqrt2.clone()), (pi.conj_root2(), u_conj)]
                {
                    let mult = divide_out(&mut rem, &prime);
                    if mult == 0 {
                        continue;
                    }
                    if p.mod_u(8) == 7 {
                        if mult % 2 == 1 {
                            return NormEqResult::NoSolution;
                        }
                        let half = ZOmega::from_zroot2(&prime.pow(mult / 2));
                        tau = &tau * &half;
                    } else {
                        let Some(tp) = solve_split_prime(&prime, p, &u_eff) else {
                            return NormEqResult::Abandoned;
                        };
                        for _ in 0..mult {
                            tau = &tau * &tp;
                        }
                    }
                }
            }
            3 | 5 => {
                let mult = divide_out(&mut rem, &zroot2_from_int(p));
                if mult == 0 {
                    continue;
                }
                let Some(tp) = solve_inert_prime(p) else {
                    return NormEqResult::Abandoned;
                };
                for _ in 0..mult {
                    tau = &tau * &tp;
                }
            }
            _ => unreachable!("odd primes are ±1, ±3 mod 8"),
        }
    }
    // Residual unit: ξ·2^m / (ττ†) must be λ^{2j}.
    let tt = tau.norm_zroot2();
    let Some(unit) = target.exact_div(&tt) else {
        return NormEqResult::Abandoned;
    };
    let Some(j) = match_even_lambda_power(&unit) else {
        return NormEqResult::NoSolution;
    };
    tau = &tau * &lambda_pow_zomega(j);

    let t = DOmega::new(tau, m_exp);
    // Exact verification, zero tolerance.
    let lhs = t.norm_droot2();
    if lhs == *xi {
        NormEqResult::Solution(t)
    } else {
        NormEqResult::Abandoned
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_agrees_with_gmp_small() {
        for n in 2u32..2000 {
            let big = Integer::from(n);
            let gmp = big.is_probably_prime(40) != rug::integer::IsPrime::No;
            assert_eq!(is_prime(&big), gmp, "disagree at {}", n);
        }
    }

    #[test]
    fn primality_agrees_with_gmp_random() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = Integer::from(rng.gen::<u64>() | 1);
            let gmp = n.is_probably_prime(40) != rug::integer::IsPrime::No;
            assert_eq!(is_prime(&n), gmp, "disagree at {}", n);
        }
    }

    #[test]
    fn factor_small_and_trivial() {
        let out = factor(&Integer::from(12), 1 << 16, 1);
        assert!(out.is_complete());
        assert_eq!(out.factors, vec![(Integer::from(2), 2), (Integer::from(3), 1)]);
        let out = factor(&Integer::from(1), 1 << 16, 1);
        assert!(out.is_complete());
        assert!(out.factors.is_empty());
    }

    #[test]
    fn factor_two_40bit_primes() {
        let p = Integer::from(1_099_511_627_791u64); // 2^40 + 15, prime
        let q = Integer::from(1_099_511_627_873u64);
        assert!(is_prime(&p) && is_prime(&q));
        let n = (&p * &q).complete();
        let out = factor(&n, 1 << 22, 7);
        assert!(out.is_complete(), "factorization abandoned");
        let mut prod = Integer::from(1);
        for (f, m) in &out.factors {
            assert!(is_prime(f));
            for _ in 0..*m {
                prod *= f;
            }
        }
        assert_eq!(prod, n);
    }

    #[test]
    fn factor_abandons_hard_semiprime_with_tiny_budget() {
        // 128-bit semiprime with ~64-bit factors; rho with a tiny budget
        // must abandon rather than stall.
        let p = Integer::from_str_radix("18446744073709551629", 10).unwrap();
        let q = Integer::from_str_radix("18446744073709551653", 10).unwrap();
        let n = (&p * &q).complete();
        let out = factor(&n, 1 << 8, 3);
        assert!(!out.is_complete());
        assert_eq!(out.residual.as_ref().unwrap(), &n);
    }

    #[test]
    fn tonelli_shanks_roots() {
        for (a, p) in [(2i64, 7i64), (2, 17), (10, 13), (5, 41), (-1, 13), (-2, 11)] {
            let pp = Integer::from(p);
            let r = sqrt_mod_prime(&Integer::from(a), &pp);
            let expect = (0..p).any(|x| (x * x - a).rem_euclid(p) == 0);
            assert_eq!(r.is_some(), expect, "a={} p={}", a, p);
            if let Some(r) = r {
                assert_eq!(
                    Integer::from((r.clone() * &r).rem_euc(&pp)),
                    Integer::from(a).rem_euc(&pp)
                );
            }
        }
    }

    fn check_solution(xi: &DRoot2) -> DOmega {
        match solve_norm_equation(xi, None, 0) {
            NormEqResult::Solution(t) => {
                assert_eq!(t.norm_droot2(), *xi, "t†t ≠ ξ");
                t
            }
            other => panic!("expected solution for {:?}, got {:?}", xi, other),
        }
    }

    #[test]
    fn norm_equation_simple_cases() {
        // ξ = 1 → t is a unit with t·t† = 1
        let one = DRoot2::one();
        check_solution(&one);
        // ξ = 2 − √2: t = 1 − ω works; any exact solution accepted
        let xi = DRoot2::from_zroot2(ZRoot2::new(2, -1));
        check_solution(&xi);
        // ξ = 2: t = √2
        let xi = DRoot2::from_zroot2(ZRoot2::new(2, 0));
        check_solution(&xi);
        // ξ = 0
        match solve_norm_equation(&DRoot2::zero(), None, 0) {
            NormEqResult::Solution(t) => assert!(t.is_zero()),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn norm_equation_rejects_negative_embeddings() {
        // ξ = −1 embeds negative.
        let xi = DRoot2::from_zroot2(ZRoot2::new(-1, 0));
        assert!(matches!(solve_norm_equation(&xi, None, 0), NormEqResult::NoSolution));
        // ξ = 1 − √2 < 0 under the identity embedding.
        let xi = DRoot2::from_zroot2(ZRoot2::new(1, -1));
        assert!(matches!(solve_norm_equation(&xi, None, 0), NormEqResult::NoSolution));
        // ξ = 1 + √2 > 0 but ξ• < 0.
        let xi = DRoot2::from_zroot2(ZRoot2::new(1, 1));
        assert!(matches!(solve_norm_equation(&xi, None, 0), NormEqResult::NoSolution));
    }

    #[test]
    fn norm_equation_no_solution_for_inert_odd_power() {
        // ξ = 7: p ≡ 7 (mod 8) splits in Z[√2] as π·π• = 7 with each π
        // appearing once; odd multiplicity means no solution.
        let xi = DRoot2::from_zroot2(ZRoot2::new(7, 0));
        assert!(matches!(solve_norm_equation(&xi, None, 0), NormEqResult::NoSolution));
        // but ξ = 49 = π²·π•² is solvable
        let xi = DRoot2::from_zroot2(ZRoot2::new(49, 0));
        check_solution(&xi);
    }

    #[test]
    fn norm_equation_fuzz_constructed_targets() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            // Build ξ = t·t† from a random t, then solve and verify.
            let t = ZOmega::new(
                rng.gen_range(-6i64..=6),
                rng.gen_range(-6i64..=6),
                rng.gen_range(-6i64..=6),
                rng.gen_range(-6i64..=6),
            );
            if t.is_zero() {
                continue;
            }
            let k = rng.gen_range(0u32..4);
            let xi = DOmega::new(t, k).norm_droot2();
            check_solution(&xi);
        }
    }
}
