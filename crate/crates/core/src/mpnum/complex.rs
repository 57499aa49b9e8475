use rug::ops::CompleteRound;
use rug::Float;
use std::fmt;

/// Complex number with arbitrary-precision real and imaginary parts.
#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Self {
        Complex { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Complex { re: Float::new(prec), im: Float::new(prec) }
    }

    pub fn one(prec: u32) -> Self {
        Complex { re: Float::with_val(prec, 1), im: Float::new(prec) }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Complex { re: Float::with_val(prec, re), im: Float::with_val(prec, im) }
    }

    pub fn from_real(re: Float) -> Self {
        let prec = re.prec();
        Complex { re, im: Float::new(prec) }
    }

    /// e^{iθ}.
    pub fn from_polar_unit(theta: &Float) -> Self {
        let prec = theta.prec();
        let (s, c) = theta.clone().sin_cos(Float::new(prec));
        Complex { re: c, im: s }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex { re: self.re.clone(), im: (-&self.im).complete(self.im.prec()) }
    }

    pub fn neg(&self) -> Self {
        Complex {
            re: (-&self.re).complete(self.re.prec()),
            im: (-&self.im).complete(self.im.prec()),
        }
    }

    pub fn add(&self, rhs: &Complex) -> Self {
        let prec = self.prec().max(rhs.prec());
        Complex {
            re: (&self.re + &rhs.re).complete(prec),
            im: (&self.im + &rhs.im).complete(prec),
        }
    }

    pub fn sub(&self, rhs: &Complex) -> Self {
        let prec = self.prec().max(rhs.prec());
        Complex {
            re: (&self.re - &rhs.re).complete(prec),
            im: (&self.im - &rhs.im).complete(prec),
        }
    }

    pub fn mul(&self, rhs: &Complex) -> Self {
        let prec = self.prec().max(rhs.prec());
        let re = (&self.re * &rhs.re).complete(prec) - (&self.im * &rhs.im).complete(prec);
        let im = (&self.re * &rhs.im).complete(prec) + (&self.im * &rhs.re).complete(prec);
        Complex { re, im }
    }

    pub fn mul_real(&self, rhs: &Float) -> Self {
        let prec = self.prec().max(rhs.prec());
        Complex {
            re: (&self.re * rhs).complete(prec),
            im: (&self.im * rhs).complete(prec),
        }
    }

    pub fn div(&self, rhs: &Complex) -> Self {
        let prec = self.prec().max(rhs.prec());
        let den = rhs.norm_sqr();
        let num = self.mul(&rhs.conj());
        Complex {
            re: (&num.re / &den).complete(prec),
            im: (&num.im / &den).complete(prec),
        }
    }

    pub fn norm_sqr(&self) -> Float {
        let prec = self.prec();
        (&self.re * &self.re).complete(prec) + (&self.im * &self.im).complete(prec)
    }

    pub fn abs(&self) -> Float {
        self.re.clone().hypot(&self.im)
    }

    /// Complex argument in [−π, π).
    pub fn arg(&self) -> Float {
        super::arg_atan2(&self.im, &self.re)
    }

    /// Principal square root (argument halved).
    pub fn sqrt(&self) -> Self {
        let prec = self.prec();
        let r = self.abs().sqrt();
        let half = Float::with_val(prec, self.arg()) / 2u32;
        let unit = Complex::from_polar_unit(&half);
        unit.mul_real(&r)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:.6e}, {:.6e})", self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let prec = 128;
        let a = Complex::from_f64(1.5, -2.0, prec);
        let b = Complex::from_f64(-0.25, 3.0, prec);
        let q = a.mul(&b).div(&b);
        assert!((q.re.clone() - &a.re).to_f64().abs() < 1e-30);
        assert!((q.im.clone() - &a.im).to_f64().abs() < 1e-30);
    }

    #[test]
    fn sqrt_squares_back() {
        let prec = 128;
        let a = Complex::from_f64(-3.0, 4.0, prec);
        let s = a.sqrt();
        let s2 = s.mul(&s);
        assert!((s2.re.clone() - &a.re).to_f64().abs() < 1e-25);
        assert!((s2.im.clone() - &a.im).to_f64().abs() < 1e-25);
    }
}
