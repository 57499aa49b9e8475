use super::Dyadic;
use rug::ops::{DivRounding, Pow};
use rug::{Float, Integer};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element a + b√2 of Z[√2].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZRoot2 {
    pub a: Integer,
    pub b: Integer,
}

/// Nearest-integer division, used by the Euclidean algorithms here and in Z[ω].
pub(crate) fn div_round(n: &Integer, d: &Integer) -> Integer {
    debug_assert!(*d != 0);
    let (n, d) = if *d < 0 {
        (Integer::from(-n), Integer::from(-d))
    } else {
        (n.clone(), d.clone())
    };
    let two_n_plus_d = (n << 1u32) + &d;
    two_n_plus_d.div_floor(Integer::from(&d << 1u32))
}

impl ZRoot2 {
    pub fn new(a: impl Into<Integer>, b: impl Into<Integer>) -> Self {
        ZRoot2 { a: a.into(), b: b.into() }
    }

    pub fn zero() -> Self {
        ZRoot2::new(0, 0)
    }

    pub fn one() -> Self {
        ZRoot2::new(1, 0)
    }

    pub fn sqrt2() -> Self {
        ZRoot2::new(0, 1)
    }

    /// Fundamental unit λ = 1 + √2.
    pub fn lambda() -> Self {
        ZRoot2::new(1, 1)
    }

    /// λ⁻¹ = √2 − 1.
    pub fn lambda_inv() -> Self {
        ZRoot2::new(-1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// √2-conjugation: a + b√2 ↦ a − b√2.
    pub fn conj_root2(&self) -> Self {
        ZRoot2 { a: self.a.clone(), b: Integer::from(-&self.b) }
    }

    /// Field norm to Z: x · x• = a² − 2b².
    pub fn norm(&self) -> Integer {
        Integer::from(&self.a * &self.a) - Integer::from(&self.b * &self.b) * 2u32
    }

    /// Exact sign of the embedded real number.
    pub fn signum(&self) -> i32 {
        let sa = self.a.cmp0() as i32;
        let sb = self.b.cmp0() as i32;
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // Opposite signs: compare a² with 2b².
        let n = self.norm();
        if n.cmp0() == Ordering::Equal {
            // a² = 2b² has no nonzero integer solutions.
            0
        } else if n > 0 {
            sa
        } else {
            sb
        }
    }

    pub fn mul_by_sqrt2(&self) -> Self {
        ZRoot2 { a: Integer::from(&self.b << 1u32), b: self.a.clone() }
    }

    pub fn divisible_by_sqrt2(&self) -> bool {
        self.a.is_even()
    }

    /// (a + b√2)/√2 = b + (a/2)√2; requires a even.
    pub fn div_by_sqrt2(&self) -> Self {
        debug_assert!(self.divisible_by_sqrt2());
        ZRoot2 { a: self.b.clone(), b: Integer::from(&self.a >> 1u32) }
    }

    /// Exact quotient self / d if d divides self, else None.
    pub fn exact_div(&self, d: &ZRoot2) -> Option<ZRoot2> {
        let n = d.norm();
        if n == 0 {
            return None;
        }
        let prod = self * &d.conj_root2();
        let (qa, ra) = prod.a.div_rem_euc(n.clone());
        let (qb, rb) = prod.b.div_rem_euc(n.clone());
        if ra == 0 && rb == 0 {
            Some(ZRoot2 { a: qa, b: qb })
        } else {
            None
        }
    }

    /// Euclidean division with |N(r)| < |N(d)|; Z[√2] is norm-Euclidean
    /// under coefficient rounding.
    pub fn div_rem(&self, d: &ZRoot2) -> (ZRoot2, ZRoot2) {
        let n = d.norm();
        debug_assert!(n != 0);
        let prod = self * &d.conj_root2();
        let q = ZRoot2 { a: div_round(&prod.a, &n), b: div_round(&prod.b, &n) };
        let r = self - &(&q * d);
        (q, r)
    }

    pub fn gcd(&self, other: &ZRoot2) -> ZRoot2 {
        let mut x = self.clone();
        let mut y = other.clone();
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x
    }

    pub fn pow(&self, e: u32) -> ZRoot2 {
        let mut acc = ZRoot2::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_float(&self, prec: u32) -> Float {
        let s = Float::with_val(prec, 2).sqrt();
        Float::with_val(prec, &self.a) + Float::with_val(prec, &self.b) * s
    }
}

impl Add for &ZRoot2 {
    type Output = ZRoot2;
    fn add(self, rhs: &ZRoot2) -> ZRoot2 {
        ZRoot2 { a: Integer::from(&self.a + &rhs.a), b: Integer::from(&self.b + &rhs.b) }
    }
}

impl Sub for &ZRoot2 {
    type Output = ZRoot2;
    fn sub(self, rhs: &ZRoot2) -> ZRoot2 {
        ZRoot2 { a: Integer::from(&self.a - &rhs.a), b: Integer::from(&self.b - &rhs.b) }
    }
}

impl Mul for &ZRoot2 {
    type Output = ZRoot2;
    fn mul(self, rhs: &ZRoot2) -> ZRoot2 {
        let a = Integer::from(&self.a * &rhs.a) + Integer::from(&self.b * &rhs.b) * 2u32;
        let b = Integer::from(&self.a * &rhs.b) + Integer::from(&self.b * &rhs.a);
        ZRoot2 { a, b }
    }
}

impl Neg for ZRoot2 {
    type Output = ZRoot2;
    fn neg(self) -> ZRoot2 {
        ZRoot2 { a: -self.a, b: -self.b }
    }
}

impl fmt::Debug for ZRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}√2", self.a, self.b)
    }
}

/// Element of D[√2] in the normal form z / √2^k with k minimal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DRoot2 {
    z: ZRoot2,
    k: u32,
}

impl DRoot2 {
    pub fn new(z: ZRoot2, k: u32) -> Self {
        let mut v = DRoot2 { z, k };
        v.reduce();
        v
    }

    pub fn from_zroot2(z: ZRoot2) -> Self {
        DRoot2 { z, k: 0 }
    }

    pub fn zero() -> Self {
        DRoot2 { z: ZRoot2::zero(), k: 0 }
    }

    pub fn one() -> Self {
        DRoot2 { z: ZRoot2::one(), k: 0 }
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

    pub fn numerator(&self) -> &ZRoot2 {
        &self.z
    }

    /// Least denominator exponent.
    pub fn lde(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero()
    }

    /// Coefficient of 1 as a dyadic fraction.
    pub fn coeff_a(&self) -> Dyadic {
        // z/√2^k with k = 2m: a/2^m; k = 2m+1: z√2/2^{m+1} so a-part = 2b/2^{m+1}.
        let m = self.k / 2;
        if self.k % 2 == 0 {
            Dyadic::new(self.z.a.clone(), m)
        } else {
            Dyadic::new(Integer::from(&self.z.b << 1u32), m + 1)
        }
    }

    /// Coefficient of √2 as a dyadic fraction.
    pub fn coeff_b(&self) -> Dyadic {
        let m = self.k / 2;
        if self.k % 2 == 0 {
            Dyadic::new(self.z.b.clone(), m)
        } else {
            Dyadic::new(self.z.a.clone(), m + 1)
        }
    }

    /// √2-conjugation; picks up (−1)^k because (√2)• = −√2.
    pub fn conj_root2(&self) -> Self {
        let mut z = self.z.conj_root2();
        if self.k % 2 == 1 {
            z = -z;
        }
        DRoot2 { z, k: self.k }
    }

    pub fn signum(&self) -> i32 {
        self.z.signum()
    }

    pub fn to_float(&self, prec: u32) -> Float {
        let num = self.z.to_float(prec);
        let half_pow = Float::with_val(prec, 2).sqrt().pow(self.k as i32);
        num / half_pow
    }

    /// self · 2^e for integer e (e may be negative).
    pub fn mul_pow2(&self, e: i64) -> Self {
        let e2 = 2 * e;
        if e2 >= 0 {
            let shift = (e2 / 2) as u32;
            DRoot2::new(
                ZRoot2 {
                    a: Integer::from(&self.z.a << shift),
                    b: Integer::from(&self.z.b << shift),
                },
                self.k,
            )
        } else {
            DRoot2::new(self.z.clone(), self.k + (-e2) as u32)
        }
    }
}

impl Add for &DRoot2 {
    type Output = DRoot2;
    fn add(self, rhs: &DRoot2) -> DRoot2 {
        let k = self.k.max(rhs.k);
        let mut za = self.z.clone();
        for _ in 0..(k - self.k) {
            za = za.mul_by_sqrt2();
        }
        let mut zb = rhs.z.clone();
        for _ in 0..(k - rhs.k) {
            zb = zb.mul_by_sqrt2();
        }
        DRoot2::new(&za + &zb, k)
    }
}

impl Sub for &DRoot2 {
    type Output = DRoot2;
    fn sub(self, rhs: &DRoot2) -> DRoot2 {
        self + &DRoot2 { z: rhs.z.clone().neg(), k: rhs.k }
    }
}

impl Mul for &DRoot2 {
    type Output = DRoot2;
    fn mul(self, rhs: &DRoot2) -> DRoot2 {
        DRoot2::new(&self.z * &rhs.z, self.k + rhs.k)
    }
}

impl Neg for DRoot2 {
    type Output = DRoot2;
    fn neg(self) -> DRoot2 {
        DRoot2 { z: -self.z, k: self.k }
    }
}

impl fmt::Debug for DRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/√2^{}", self.z, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signum_mixed_signs() {
        assert_eq!(ZRoot2::new(3, -2).signum(), 1); // 3 − 2√2 ≈ 0.17
        assert_eq!(ZRoot2::new(1, -1).signum(), -1); // 1 − √2 < 0
        assert_eq!(ZRoot2::new(-1, 1).signum(), 1); // √2 − 1 > 0
        assert_eq!(ZRoot2::new(0, 0).signum(), 0);
    }

    #[test]
    fn conj_negates_root2_part() {
        let x = ZRoot2::new(1, 1);
        assert_eq!(x.conj_root2(), ZRoot2::new(1, -1));
        assert_eq!(ZRoot2::new(7, 0).conj_root2(), ZRoot2::new(7, 0));
    }

    #[test]
    fn euclidean_division_reduces_norm() {
        let x = ZRoot2::new(37, -21);
        let y = ZRoot2::new(5, 2);
        let (q, r) = x.div_rem(&y);
        assert_eq!(&(&q * &y) + &r, x);
        assert!(r.norm().abs() < y.norm().abs());
    }

    #[test]
    fn gcd_divides_both() {
        let g = ZRoot2::new(3, 1);
        let x = &g * &ZRoot2::new(5, -2);
        let y = &g * &ZRoot2::new(1, 4);
        let d = x.gcd(&y);
        assert!(x.exact_div(&d).is_some());
        assert!(y.exact_div(&d).is_some());
        // The cofactor norms are coprime, so d is g up to a unit.
        assert_eq!(d.norm().abs(), g.norm().abs());
    }

    #[test]
    fn droot2_normal_form() {
        // (2 + 2√2)/√2² reduces: a even → divide once → (2 + √2·?)…
        let v = DRoot2::new(ZRoot2::new(2, 2), 2);
        // (2+2√2)/2 = 1+√2 exactly
        assert_eq!(v.numerator(), &ZRoot2::new(1, 1));
        assert_eq!(v.lde(), 0);
    }

    #[test]
    fn droot2_conj_parity() {
        // (1+√2)/√2 : conjugate must equal (1−√2)/(−√2) = (√2−1)/√2.
        let v = DRoot2::new(ZRoot2::new(1, 1), 1);
        let c = v.conj_root2();
        assert_eq!(c.numerator(), &ZRoot2::new(-1, 1));
        assert_eq!(c.lde(), 1);
        let prec = 64;
        let f = v.to_float(prec).to_f64();
        let g = c.to_float(prec).to_f64();
        // numeric cross-check: x = (1+√2)/√2, x• = (1−√2)/(−√2)
        assert!((f - (1.0 + 2f64.sqrt()) / 2f64.sqrt()).abs() < 1e-12);
        assert!((g - (1.0 - 2f64.sqrt()) / (-(2f64.sqrt()))).abs() < 1e-12);
    }
}
