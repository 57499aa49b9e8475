use rug::{Float, Integer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dyadic fraction m / 2^l in lowest form: m odd, or m = 0 with l = 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: Integer,
    log_den: u32,
}

impl Dyadic {
    pub fn new(num: Integer, log_den: u32) -> Self {
        let mut d = Dyadic { num, log_den };
        d.reduce();
        d
    }

    pub fn zero() -> Self {
        Dyadic { num: Integer::new(), log_den: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: Integer::from(1), log_den: 0 }
    }

    pub fn from_int(n: impl Into<Integer>) -> Self {
        Dyadic { num: n.into(), log_den: 0 }
    }

    pub fn numerator(&self) -> &Integer {
        &self.num
    }

    pub fn log_denominator(&self) -> u32 {
        self.log_den
    }

    fn reduce(&mut self) {
        if self.num == 0 {
            self.log_den = 0;
            return;
        }
        let tz = self.num.find_one(0).unwrap_or(0).min(self.log_den);
        if tz > 0 {
            self.num >>= tz;
            self.log_den -= tz;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.log_den == 0
    }

    /// Exact doubling: m/2^l * 2.
    pub fn mul_pow2(&self, e: i64) -> Self {
        if e >= 0 {
            Dyadic::new(self.num.clone() << (e as u32), self.log_den)
        } else {
            Dyadic::new(self.num.clone(), self.log_den + (-e) as u32)
        }
    }

    pub fn to_float(&self, prec: u32) -> Float {
        let mut f = Float::with_val(prec, &self.num);
        f >>= self.log_den;
        f
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let l = self.log_den.max(rhs.log_den);
        let a = self.num.clone() << (l - self.log_den);
        let b = rhs.num.clone() << (l - rhs.log_den);
        Dyadic::new(a + b, l)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs.clone())
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(Integer::from(&self.num * &rhs.num), self.log_den + rhs.log_den)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(mut self) -> Dyadic {
        self.num = -self.num;
        self
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log_den == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.log_den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_is_minimal() {
        let d = Dyadic::new(Integer::from(4), 3);
        assert_eq!(d.numerator(), &Integer::from(1));
        assert_eq!(d.log_denominator(), 1);
        let z = Dyadic::new(Integer::from(0), 7);
        assert!(z.is_zero());
        assert_eq!(z.log_denominator(), 0);
    }

    #[test]
    fn arithmetic() {
        let a = Dyadic::new(Integer::from(3), 1); // 3/2
        let b = Dyadic::new(Integer::from(1), 2); // 1/4
        let s = &a + &b; // 7/4
        assert_eq!(s.numerator(), &Integer::from(7));
        assert_eq!(s.log_denominator(), 2);
        let p = &a * &b; // 3/8
        assert_eq!(p.numerator(), &Integer::from(3));
        assert_eq!(p.log_denominator(), 3);
    }
}
