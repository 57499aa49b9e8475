//! Gate and circuit types with the JSON wire format.
//!
//! Gate arrays follow printed gate-string order: `gates[0]` is the leftmost
//! factor of the matrix product, i.e. the gate that acts last. The global
//! phase is tracked as an integer power of ω = e^{iπ/4} in `phase_w`.

use crate::mpnum::{CMatrix, Complex};
use rug::Float;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateOp {
    pub g: String,
    pub w: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circuit {
    pub wires: usize,
    pub gates: Vec<GateOp>,
    #[serde(default)]
    pub phase_w: u8,
}

impl Circuit {
    pub fn empty(wires: usize) -> Self {
        Circuit { wires, gates: Vec::new(), phase_w: 0 }
    }

    pub fn push(&mut self, g: &str, w: &[usize]) {
        self.gates.push(GateOp { g: g.to_string(), w: w.to_vec() });
    }

    /// Append another circuit on the right (it acts first).
    pub fn extend_right(&mut self, other: &Circuit) {
        assert_eq!(self.wires, other.wires);
        self.gates.extend(other.gates.iter().cloned());
        self.phase_w = (self.phase_w + other.phase_w) % 8;
    }

    pub fn t_count(&self) -> usize {
        self.gates.iter().filter(|g| g.g == "T").count()
    }

    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    fn single_qubit_matrix(name: &str, prec: u32) -> Option<CMatrix> {
        let inv_sqrt2 = Float::with_val(prec, 2).sqrt().recip();
        let mut m = CMatrix::zero(2, 2, prec);
        match name {
            "H" => {
                let v = Complex::from_real(inv_sqrt2);
                m[(0, 0)] = v.clone();
                m[(0, 1)] = v.clone();
                m[(1, 0)] = v.clone();
                m[(1, 1)] = v.neg();
            }
            "S" => {
                m[(0, 0)] = Complex::one(prec);
                m[(1, 1)] = Complex::from_f64(0.0, 1.0, prec);
            }
            "T" => {
                let th = Float::with_val(prec, rug::float::Constant::Pi) / 4u32;
                m[(0, 0)] = Complex::one(prec);
                m[(1, 1)] = Complex::from_polar_unit(&th);
            }
            "X" => {
                m[(0, 1)] = Complex::one(prec);
                m[(1, 0)] = Complex::one(prec);
            }
            _ => return None,
        }
        Some(m)
    }

    /// Dense unitary of the circuit at the given precision; wire 0 is the
    /// most significant qubit.
    pub fn to_matrix(&self, prec: u32) -> CMatrix {
        let dim = 1usize << self.wires;
        let mut acc = CMatrix::identity(dim, prec);
        // gates[0] is the leftmost factor: build right-to-left.
        for op in self.gates.iter().rev() {
            let g = self.gate_matrix(op, prec);
            acc = g.mul(&acc);
        }
        if self.phase_w != 0 {
            let th = Float::with_val(prec, rug::float::Constant::Pi)
                * Float::with_val(prec, self.phase_w) / 4u32;
            acc = acc.scale(&Complex::from_polar_unit(&th));
        }
        acc
    }

    fn gate_matrix(&self, op: &GateOp, prec: u32) -> CMatrix {
        let n = self.wires;
        let dim = 1usize << n;
        if op.g == "CX" {
            let (c, t) = (op.w[0], op.w[1]);
            let mut m = CMatrix::zero(dim, dim, prec);
            for b in 0..dim {
                let cbit = (b >> (n - 1 - c)) & 1;
                let out = if cbit == 1 { b ^ (1 << (n - 1 - t)) } else { b };
                m[(out, b)] = Complex::one(prec);
            }
            return m;
        }
        if op.g == "W" {
            let th = Float::with_val(prec, rug::float::Constant::Pi) / 4u32;
            return CMatrix::identity(dim, prec).scale(&Complex::from_polar_unit(&th));
        }
        let g2 = Self::single_qubit_matrix(&op.g, prec)
            .unwrap_or_else(|| panic!("unknown gate {}", op.g));
        let wire = op.w[0];
        let mut m = CMatrix::identity(1, prec);
        for q in 0..n {
            if q == wire {
                m = m.kron(&g2);
            } else {
                m = m.kron(&CMatrix::identity(2, prec));
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).unwrap()
    }

    pub fn from_json(s: &str) -> Result<Circuit, String> {
        serde_json::from_str(s).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut c = Circuit::empty(2);
        c.push("H", &[0]);
        c.push("CX", &[0, 1]);
        c.phase_w = 3;
        let s = c.to_json();
        assert_eq!(Circuit::from_json(&s).unwrap(), c);
    }

    #[test]
    fn string_order_is_matrix_order() {
        // "HT" must equal H·T (T acts first).
        let mut c = Circuit::empty(1);
        c.push("H", &[0]);
        c.push("T", &[0]);
        let prec = 128;
        let h = Circuit::single_qubit_matrix("H", prec).unwrap();
        let t = Circuit::single_qubit_matrix("T", prec).unwrap();
        let expect = h.mul(&t);
        assert!(c.to_matrix(prec).sub(&expect).norm_max().to_f64() < 1e-30);
    }

    #[test]
    fn cx_truth_table() {
        let mut c = Circuit::empty(2);
        c.push("CX", &[0, 1]);
        let m = c.to_matrix(96);
        // |10⟩ → |11⟩ (wire 0 = MSB)
        assert!((m[(3, 2)].re.to_f64() - 1.0).abs() < 1e-20);
        assert!((m[(2, 3)].re.to_f64() - 1.0).abs() < 1e-20);
        assert!((m[(0, 0)].re.to_f64() - 1.0).abs() < 1e-20);
    }
}
