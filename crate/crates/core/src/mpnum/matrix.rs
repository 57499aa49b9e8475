use super::Complex;
use rug::Float;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Dense arbitrary-precision complex matrix, row major.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Complex>,
    prec: u32,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<[String; 2]>,
}

impl CMatrix {
    pub fn zero(rows: usize, cols: usize, prec: u32) -> Self {
        CMatrix { rows, cols, data: vec![Complex::zero(prec); rows * cols], prec }
    }

    pub fn identity(n: usize, prec: u32) -> Self {
        let mut m = CMatrix::zero(n, n, prec);
        for i in 0..n {
            m[(i, i)] = Complex::one(prec);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, prec: u32, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data, prec }
    }

    pub fn from_f64_rows(rows: &[Vec<(f64, f64)>], prec: u32) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        CMatrix::from_fn(r, c, prec, |i, j| Complex::from_f64(rows[i][j].0, rows[i][j].1, prec))
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn mul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows);
        let prec = self.prec.max(rhs.prec);
        let mut out = CMatrix::zero(self.rows, rhs.cols, prec);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a.mul(&rhs[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&t);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, self.prec.max(rhs.prec), |i, j| {
            self[(i, j)].add(&rhs[(i, j)])
        })
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, self.prec.max(rhs.prec), |i, j| {
            self[(i, j)].sub(&rhs[(i, j)])
        })
    }

    pub fn scale(&self, s: &Complex) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, self.prec, |i, j| self[(i, j)].mul(s))
    }

    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, self.prec, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, self.prec, |i, j| self[(j, i)].clone())
    }

    pub fn conj_entries(&self) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, self.prec, |i, j| self[(i, j)].conj())
    }

    pub fn kron(&self, rhs: &CMatrix) -> CMatrix {
        let prec = self.prec.max(rhs.prec);
        CMatrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, prec, |i, j| {
            let (i1, i2) = (i / rhs.rows, i % rhs.rows);
            let (j1, j2) = (j / rhs.cols, j % rhs.cols);
            self[(i1, j1)].mul(&rhs[(i2, j2)])
        })
    }

    pub fn trace(&self) -> Complex {
        let mut t = Complex::zero(self.prec);
        for i in 0..self.rows.min(self.cols) {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    /// max_{ij} |entry| as an upper-bound style norm.
    pub fn norm_max(&self) -> Float {
        let mut m = Float::new(self.prec);
        for e in &self.data {
            let a = e.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> CMatrix {
        CMatrix::from_fn(rows, cols, self.prec, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, m: &CMatrix) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                self[(r0 + i, c0 + j)] = m[(i, j)].clone();
            }
        }
    }

    /// Column as a vector (n×1 matrix).
    pub fn col(&self, j: usize) -> Vec<Complex> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// ‖U†U − I‖_max, the unitarity defect.
    pub fn unitarity_defect(&self) -> Float {
        let p = self.adjoint().mul(self);
        p.sub(&CMatrix::identity(self.rows, self.prec)).norm_max()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> Complex {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Complex::one(self.prec);
        for k in 0..n {
            // pivot
            let mut piv = k;
            let mut best = a[(k, k)].abs();
            for i in (k + 1)..n {
                let v = a[(i, k)].abs();
                if v > best {
                    best = v;
                    piv = i;
                }
            }
            if best.is_zero() {
                return Complex::zero(self.prec);
            }
            if piv != k {
                for j in 0..n {
                    let t = a[(k, j)].clone();
                    a[(k, j)] = a[(piv, j)].clone();
                    a[(piv, j)] = t;
                }
                det = det.neg();
            }
            det = det.mul(&a[(k, k)]);
            let inv = Complex::one(self.prec).div(&a[(k, k)]);
            for i in (k + 1)..n {
                let f = a[(i, k)].mul(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let t = f.mul(&a[(k, j)]);
                    a[(i, j)] = a[(i, j)].sub(&t);
                }
            }
        }
        det
    }

    /// Orthonormalize columns by modified Gram-Schmidt; input must have
    /// full column rank.
    pub fn mgs_orthonormalize(&self) -> CMatrix {
        let mut q = self.clone();
        for j in 0..q.cols {
            for k in 0..j {
                // r = <q_k, q_j>
                let mut r = Complex::zero(q.prec);
                for i in 0..q.rows {
                    r = r.add(&q[(i, k)].conj().mul(&q[(i, j)]));
                }
                for i in 0..q.rows {
                    let t = r.mul(&q[(i, k)]);
                    q[(i, j)] = q[(i, j)].sub(&t);
                }
            }
            let mut nrm = Float::new(q.prec);
            for i in 0..q.rows {
                nrm += q[(i, j)].norm_sqr();
            }
            let nrm = nrm.sqrt();
            for i in 0..q.rows {
                q[(i, j)] = Complex {
                    re: Float::with_val(q.prec, &q[(i, j)].re / &nrm),
                    im: Float::with_val(q.prec, &q[(i, j)].im / &nrm),
                };
            }
        }
        q
    }

    pub fn to_json(&self) -> String {
        let digits = (self.prec as f64 / std::f64::consts::LOG2_10).floor() as usize;
        let data = self
            .data
            .iter()
            .map(|c| {
                [
                    c.re.to_string_radix(10, Some(digits.max(17))),
                    c.im.to_string_radix(10, Some(digits.max(17))),
                ]
            })
            .collect();
        serde_json::to_string(&MatrixJson { rows: self.rows, cols: self.cols, data }).unwrap()
    }

    pub fn from_json(s: &str, prec: u32) -> Result<CMatrix, String> {
        let mj: MatrixJson = serde_json::from_str(s).map_err(|e| e.to_string())?;
        if mj.data.len() != mj.rows * mj.cols {
            return Err(format!(
                "matrix JSON has {} entries, expected {}",
                mj.data.len(),
                mj.rows * mj.cols
            ));
        }
        let mut data = Vec::with_capacity(mj.data.len());
        for [re, im] in &mj.data {
            let re = Float::parse(re).map_err(|e| e.to_string())?;
            let im = Float::parse(im).map_err(|e| e.to_string())?;
            data.push(Complex::new(Float::with_val(prec, re), Float::with_val(prec, im)));
        }
        Ok(CMatrix { rows: mj.rows, cols: mj.cols, data, prec })
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex;
    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let e = &self[(i, j)];
                write!(f, "({:+.4}{:+.4}i) ", e.re.to_f64(), e.im.to_f64())?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_preserves_precision() {
        let prec = 256;
        let m = CMatrix::from_fn(2, 2, prec, |i, j| {
            let v = Float::with_val(prec, (i + 2 * j + 1) as u32).sqrt();
            Complex::new(v.clone(), v / 3u32)
        });
        let s = m.to_json();
        let m2 = CMatrix::from_json(&s, prec).unwrap();
        assert!(m.sub(&m2).norm_max().to_f64() < 1e-70);
    }

    #[test]
    fn det_of_diag() {
        let prec = 96;
        let mut m = CMatrix::identity(3, prec);
        m[(0, 0)] = Complex::from_f64(2.0, 0.0, prec);
        m[(2, 2)] = Complex::from_f64(0.0, 1.0, prec);
        let d = m.det();
        assert!((d.re.to_f64() - 0.0).abs() < 1e-20);
        assert!((d.im.to_f64() - 2.0).abs() < 1e-20);
    }
}
