use super::{Dyadic, ZRoot2};
use crate::mpnum::Complex;
use rug::ops::Pow;
use rug::{Float, Integer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element a·ω³ + b·ω² + c·ω + d of Z[ω], ω = e^{iπ/4}.
///
/// Multiplication closes under ω⁴ = −1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZOmega {
    pub a: Integer,
    pub b: Integer,
    pub c: Integer,
    pub d: Integer,
}

impl ZOmega {
    pub fn new(
        a: impl Into<Integer>,
        b: impl Into<Integer>,
        c: impl Into<Integer>,
        d: impl Into<Integer>,
    ) -> Self {
        ZOmega { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn zero() -> Self {
        ZOmega::new(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        ZOmega::new(0, 0, 0, 1)
    }

    pub fn omega() -> Self {
        ZOmega::new(0, 0, 1, 0)
    }

    /// √2 = ω − ω³.
    pub fn sqrt2() -> Self {
        ZOmega::new(-1, 0, 1, 0)
    }

    pub fn from_int(n: impl Into<Integer>) -> Self {
        ZOmega::new(0, 0, 0, n.into())
    }

    pub fn from_zroot2(x: &ZRoot2) -> Self {
        // a + b√2 = −b·ω³ + b·ω + a
        ZOmega::new(Integer::from(-&x.b), 0, x.b.clone(), x.a.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0 && self.d == 0
    }

    /// Complex conjugation: (a,b,c,d) ↦ (−c,−b,−a,d).
    pub fn conj(&self) -> Self {
        ZOmega::new(
            Integer::from(-&self.c),
            Integer::from(-&self.b),
            Integer::from(-&self.a),
            self.d.clone(),
        )
    }

    /// √2-conjugation: (a,b,c,d) ↦ (−a,b,−c,d).
    pub fn conj_root2(&self) -> Self {
        ZOmega::new(
            Integer::from(-&self.a),
            self.b.clone(),
            Integer::from(-&self.c),
            self.d.clone(),
        )
    }

    pub fn mul_by_omega(&self) -> Self {
        // ω·(aω³ + bω² + cω + d) = −a + bω³ + cω² + dω
        ZOmega::new(self.b.clone(), self.c.clone(), self.d.clone(), Integer::from(-&self.a))
    }

    pub fn mul_by_omega_pow(&self, e: u32) -> Self {
        let mut v = self.clone();
        for _ in 0..(e % 8) {
            v = v.mul_by_omega();
        }
        v
    }

    pub fn mul_by_sqrt2(&self) -> Self {
        // √2·(a,b,c,d) = (b−d, a+c, b+d, c−a)
        ZOmega::new(
            Integer::from(&self.b - &self.d),
            Integer::from(&self.a + &self.c),
            Integer::from(&self.b + &self.d),
            Integer::from(&self.c - &self.a),
        )
    }

    /// Divisibility by √2 holds iff a+c and b+d are both even.
    pub fn divisible_by_sqrt2(&self) -> bool {
        Integer::from(&self.a + &self.c).is_even() && Integer::from(&self.b + &self.d).is_even()
    }

    /// Inverse of `mul_by_sqrt2`; requires divisibility.
    pub fn div_by_sqrt2(&self) -> Self {
        debug_assert!(self.divisible_by_sqrt2());
        ZOmega::new(
            Integer::from(&self.b - &self.d) >> 1u32,
            Integer::from(&self.a + &self.c) >> 1u32,
            Integer::from(&self.b + &self.d) >> 1u32,
            Integer::from(&self.c - &self.a) >> 1u32,
        )
    }

    /// z·z† as an element of Z[√2] (always totally non-negative).
    pub fn norm_zroot2(&self) -> ZRoot2 {
        // |z|² = (a²+b²+c²+d²) + (bc + cd − ab + ... )√2; compute via conj product.
        let p = self * &self.conj();
        debug_assert!(p.b == 0);
        debug_assert!(p.a == Integer::from(-&p.c));
        ZRoot2 { a: p.d.clone(), b: p.c.clone() }
    }

    /// Absolute norm N(z) = |z|²·|z•|² ∈ Z (non-negative).
    pub fn abs_norm(&self) -> Integer {
        self.norm_zroot2().norm().abs()
    }

    /// Residue class index mod √2: 0 if divisible, else 1/2/3 distinguishing
    /// the nonzero classes {1, ω, 1+ω}.
    pub fn residue_mod_sqrt2(&self) -> u8 {
        let r1 = !Integer::from(&self.a + &self.c).is_even();
        let r0 = !Integer::from(&self.b + &self.d).is_even();
        (r0 as u8) | ((r1 as u8) << 1)
    }

    /// Exact quotient self / d if d divides self in Z[ω].
    pub fn exact_div(&self, d: &ZOmega) -> Option<ZOmega> {
        // self/d = self·d†·(dd†)• / N(d), computed over Z.
        let dd = d.norm_zroot2();
        let n = d.abs_norm();
        if n == 0 {
            return None;
        }
        let sign: i32 = dd.norm().signum().to_i32().unwrap();
        let num = &(self * &d.conj()) * &ZOmega::from_zroot2(&dd.conj_root2());
        let div_one = |x: &Integer| -> Option<Integer> {
            let v = Integer::from(x * sign);
            let (q, r) = v.div_rem_euc(n.clone());
            if r == 0 {
                Some(q)
            } else {
                None
            }
        };
        Some(ZOmega::new(
            div_one(&num.a)?,
            div_one(&num.b)?,
            div_one(&num.c)?,
            div_one(&num.d)?,
        ))
    }

    /// Euclidean-style division by rounding in the ω-basis; the naive
    /// rounding cell does not always shrink the norm in Z[ω], so neighbors
    /// of the rounded quotient are searched for the smallest remainder norm.
    pub fn div_rem(&self, d: &ZOmega) -> (ZOmega, ZOmega) {
        let n = d.abs_norm();
        debug_assert!(n != 0);
        let dd = d.norm_zroot2();
        let sign: i32 = dd.norm().signum().to_i32().unwrap();
        let num = &(self * &d.conj()) * &ZOmega::from_zroot2(&dd.conj_root2());
        let num = ZOmega::new(
            Integer::from(&num.a * sign),
            Integer::from(&num.b * sign),
            Integer::from(&num.c * sign),
            Integer::from(&num.d * sign),
        );
        let base = [
            super::zroot2_div_round(&num.a, &n),
            super::zroot2_div_round(&num.b, &n),
            super::zroot2_div_round(&num.c, &n),
            super::zroot2_div_round(&num.d, &n),
        ];
        let mut best: Option<(Integer, ZOmega, ZOmega)> = None;
        for da in -1i32..=1 {
            for db in -1i32..=1 {
                for dc in -1i32..=1 {
                    for dd_ in -1i32..=1 {
                        let q = ZOmega::new(
                            Integer::from(&base[0] + da),
                            Integer::from(&base[1] + db),
                            Integer::from(&base[2] + dc),
                            Integer::from(&base[3] + dd_),
                        );
                        let r = self - &(&q * d);
                        let rn = r.abs_norm();
                        let better = match &best {
                            None => true,
                            Some((bn, _, _)) => rn < *bn,
                        };
                        if better {
                            let done = rn == 0;
                            best = Some((rn, q, r));
                            if done {
                                return {
                                    let (_, q, r) = best.unwrap();
                                    (q, r)
                                };
                            }
                        }
                    }
                }
            }
        }
        let (_, q, r) = best.unwrap();
        (q, r)
    }

    pub fn gcd(&self, other: &ZOmega) -> ZOmega {
        let mut x = self.clone();
        let mut y = other.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            // Guard against a rare non-reducing step.
            if r.abs_norm() >= y.abs_norm() {
                return ZOmega::one();
            }
            x = y;
            y = r;
        }
        x
    }

    pub fn embed(&self, prec: u32) -> Complex {
        let s = Float::with_val(prec, 2).sqrt() >> 1u32; // 1/√2
        // ω = (1+i)/√2, ω² = i, ω³ = (−1+i)/√2
        let re = Float::with_val(prec, &self.d)
            + (Float::with_val(prec, &self.c) - Float::with_val(prec, &self.a)) * &s;
        let im = Float::with_val(prec, &self.b)
            + (Float::with_val(prec, &self.c) + Float::with_val(prec, &self.a)) * &s;
        Complex::new(re, im)
    }

    /// Lexicographic key (a,b,c,d) for deterministic candidate ordering.
    pub fn lex_key(&self) -> (Integer, Integer, Integer, Integer) {
        (self.a.clone(), self.b.clone(), self.c.clone(), self.d.clone())
    }
}

impl Add for &ZOmega {
    type Output = ZOmega;
    fn add(self, rhs: &ZOmega) -> ZOmega {
        ZOmega::new(
            Integer::from(&self.a + &rhs.a),
            Integer::from(&self.b + &rhs.b),
            Integer::from(&self.c + &rhs.c),
            Integer::from(&self.d + &rhs.d),
        )
    }
}

impl Sub for &ZOmega {
    type Output = ZOmega;
    fn sub(self, rhs: &ZOmega) -> ZOmega {
        ZOmega::new(
            Integer::from(&self.a - &rhs.a),
            Integer::from(&self.b - &rhs.b),
            Integer::from(&self.c - &rhs.c),
            Integer::from(&self.d - &rhs.d),
        )
    }
}

impl Mul for &ZOmega {
    type Output = ZOmega;
    fn mul(self, rhs: &ZOmega) -> ZOmega {
        // (a₁ω³+b₁ω²+c₁ω+d₁)(a₂ω³+b₂ω²+c₂ω+d₂) with ω⁴ = −1
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&rhs.a, &rhs.b, &rhs.c, &rhs.d);
        let a = Integer::from(a1 * d2)
            + Integer::from(b1 * c2)
            + Integer::from(c1 * b2)
            + Integer::from(d1 * a2);
        let b = Integer::from(b1 * d2) + Integer::from(c1 * c2) + Integer::from(d1 * b2)
            - Integer::from(a1 * a2);
        let c = Integer::from(c1 * d2) + Integer::from(d1 * c2)
            - Integer::from(a1 * b2)
            - Integer::from(b1 * a2);
        let d = Integer::from(d1 * d2)
            - Integer::from(a1 * c2)
            - Integer::from(b1 * b2)
            - Integer::from(c1 * a2);
        ZOmega::new(a, b, c, d)
    }
}

impl Neg for ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        ZOmega::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl fmt::Debug for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Element of D[ω] in the normal form z / √2^k with k minimal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DOmega {
    z: ZOmega,
    k: u32,
}

impl DOmega {
    pub fn new(z: ZOmega, k: u32) -> Self {
        let mut v = DOmega { z, k };
        v.reduce();
        v
    }

    pub fn from_zomega(z: ZOmega) -> Self {
        DOmega { z, k: 0 }
    }

    pub fn from_int(n: impl Into<Integer>) -> Self {
        DOmega { z: ZOmega::from_int(n), k: 0 }
    }

    pub fn zero() -> Self {
        DOmega { z: ZOmega::zero(), k: 0 }
    }

    pub fn one() -> Self {
        DOmega { z: ZOmega::one(), k: 0 }
    }

    pub fn from_droot2(x: &super::DRoot2) -> Self {
        DOmega::new(ZOmega::from_zroot2(x.numerator()), x.lde())
    }

    fn reduce(&mut self) {
        if self.z.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 && self.z.divisible_by_sqrt2() {
            self.z = self.z.div_by_sqrt2();
            self.k -= 1;
        }
    }

    /// Least-denominator-exponent normal form (idempotent).
    pub fn reduce_lde(&self) -> Self {
        let mut v = self.clone();
        v.reduce();
        v
    }

    pub fn numerator(&self) -> &ZOmega {
        &self.z
    }

    pub fn lde(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero()
    }

    /// Numerator renormalized to denominator exponent `k` (k ≥ lde).
    pub fn numerator_at(&self, k: u32) -> ZOmega {
        debug_assert!(k >= self.k);
        let mut z = self.z.clone();
        for _ in 0..(k - self.k) {
            z = z.mul_by_sqrt2();
        }
        z
    }

    pub fn conj(&self) -> Self {
        DOmega { z: self.z.conj(), k: self.k }
    }

    pub fn conj_root2(&self) -> Self {
        let mut z = self.z.conj_root2();
        if self.k % 2 == 1 {
            z = -z;
        }
        DOmega { z, k: self.k }
    }

    pub fn mul_by_omega(&self) -> Self {
        DOmega { z: self.z.mul_by_omega(), k: self.k }
    }

    pub fn mul_by_omega_pow(&self, e: u32) -> Self {
        DOmega { z: self.z.mul_by_omega_pow(e), k: self.k }
    }

    pub fn mul_by_inv_sqrt2(&self) -> Self {
        DOmega::new(self.z.clone(), self.k + 1)
    }

    /// u·u† ∈ D[√2].
    pub fn norm_droot2(&self) -> super::DRoot2 {
        super::DRoot2::new(self.z.norm_zroot2(), 2 * self.k)
    }

    /// Dyadic coefficients (a,b,c,d) in the (ω³,ω²,ω,1) basis.
    pub fn dyadic_coeffs(&self) -> [Dyadic; 4] {
        let m = self.k / 2;
        if self.k % 2 == 0 {
            [
                Dyadic::new(self.z.a.clone(), m),
                Dyadic::new(self.z.b.clone(), m),
                Dyadic::new(self.z.c.clone(), m),
                Dyadic::new(self.z.d.clone(), m),
            ]
        } else {
            let zs = self.z.mul_by_sqrt2();
            [
                Dyadic::new(zs.a, m + 1),
                Dyadic::new(zs.b, m + 1),
                Dyadic::new(zs.c, m + 1),
                Dyadic::new(zs.d, m + 1),
            ]
        }
    }

    pub fn embed(&self, prec: u32) -> Complex {
        let num = self.z.embed(prec);
        let den = Float::with_val(prec, 2).sqrt().pow(self.k as i32);
        Complex::new(num.re / &den, num.im / &den)
    }
}

impl Add for &DOmega {
    type Output = DOmega;
    fn add(self, rhs: &DOmega) -> DOmega {
        let k = self.k.max(rhs.k);
        DOmega::new(&self.numerator_at(k) + &rhs.numerator_at(k), k)
    }
}

impl Sub for &DOmega {
    type Output = DOmega;
    fn sub(self, rhs: &DOmega) -> DOmega {
        let k = self.k.max(rhs.k);
        DOmega::new(&self.numerator_at(k) - &rhs.numerator_at(k), k)
    }
}

impl Mul for &DOmega {
    type Output = DOmega;
    fn mul(self, rhs: &DOmega) -> DOmega {
        DOmega::new(&self.z * &rhs.z, self.k + rhs.k)
    }
}

impl Neg for DOmega {
    type Output = DOmega;
    fn neg(self) -> DOmega {
        DOmega { z: -self.z, k: self.k }
    }
}

impl fmt::Debug for DOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}/{}", self.z, self.k)
    }
}
