//! Pauli transfer matrices and Choi matrices of unitary channels.

use crate::mpnum::{CMatrix, Complex};
use rug::Float;

/// Tensor-product Pauli string for a lexicographic index over (I,X,Y,Z)ⁿ;
/// index 0 is I⊗…⊗I and the most significant base-4 digit is wire 0.
pub fn pauli_matrix(index: usize, n: usize, prec: u32) -> CMatrix {
    let single = |d: usize| -> CMatrix {
        let mut m = CMatrix::zero(2, 2, prec);
        match d {
            0 => {
                m[(0, 0)] = Complex::one(prec);
                m[(1, 1)] = Complex::one(prec);
            }
            1 => {
                m[(0, 1)] = Complex::one(prec);
                m[(1, 0)] = Complex::one(prec);
            }
            2 => {
                m[(0, 1)] = Complex::from_f64(0.0, -1.0, prec);
                m[(1, 0)] = Complex::from_f64(0.0, 1.0, prec);
            }
            _ => {
                m[(0, 0)] = Complex::one(prec);
                m[(1, 1)] = Complex::from_f64(-1.0, 0.0, prec);
            }
        }
        m
    };
    let mut m = CMatrix::identity(1, prec);
    for q in 0..n {
        let digit = (index >> (2 * (n - 1 - q))) & 3;
        m = m.kron(&single(digit));
    }
    m
}

/// PTM of a unitary channel: M_ji = (1/d)·Tr[P_j U P_i U†], real 4ⁿ×4ⁿ.
pub fn ptm_of_unitary(u: &CMatrix, n: usize) -> Vec<Vec<Float>> {
    let prec = u.prec();
    let d = 1usize << n;
    assert_eq!(u.rows, d);
    let np = 1usize << (2 * n);
    let uadj = u.adjoint();
    // Conjugated Paulis U P_i U† once per column.
    let conj: Vec<CMatrix> =
        (0..np).map(|i| u.mul(&pauli_matrix(i, n, prec)).mul(&uadj)).collect();
    let paulis: Vec<CMatrix> = (0..np).map(|j| pauli_matrix(j, n, prec)).collect();
    let dim = Float::with_val(prec, d as u32);
    (0..np)
        .map(|j| {
            (0..np)
                .map(|i| {
                    let t = paulis[j].mul(&conj[i]).trace();
                    Float::with_val(prec, &t.re / &dim)
                })
                .collect()
        })
        .collect()
}

/// Choi matrix J(𝒰) = (I ⊗ 𝒰)(|Ω⟩⟨Ω|) with the unnormalized maximally
/// entangled |Ω⟩ = Σᵢ |i⟩|i⟩; rank 1 with trace d for a unitary channel.
pub fn choi_of_unitary(u: &CMatrix) -> CMatrix {
    let prec = u.prec();
    let d = u.rows;
    // v[(i,k)] = U[k,i]; J = v·v†.
    let mut v = Vec::with_capacity(d * d);
    for i in 0..d {
        for k in 0..d {
            v.push(u[(k, i)].clone());
        }
    }
    CMatrix::from_fn(d * d, d * d, prec, |r, c| v[r].mul(&v[c].conj()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f64_ptm(m: &[Vec<Float>]) -> Vec<Vec<f64>> {
        m.iter().map(|r| r.iter().map(|x| x.to_f64()).collect()).collect()
    }

    #[test]
    fn identity_channel_identity_ptm() {
        let prec = 96;
        let u = CMatrix::identity(2, prec);
        let m = f64_ptm(&ptm_of_unitary(&u, 1));
        for (j, row) in m.iter().enumerate() {
            for (i, v) in row.iter().enumerate() {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((v - expect).abs() < 1e-20);
            }
        }
    }

    #[test]
    fn x_gate_ptm_is_diag_1_1_m1_m1() {
        let prec = 96;
        let mut x = CMatrix::zero(2, 2, prec);
        x[(0, 1)] = Complex::one(prec);
        x[(1, 0)] = Complex::one(prec);
        let m = f64_ptm(&ptm_of_unitary(&x, 1));
        let expect = [1.0, 1.0, -1.0, -1.0];
        for j in 0..4 {
            for i in 0..4 {
                let e = if i == j { expect[i] } else { 0.0 };
                assert!((m[j][i] - e).abs() < 1e-20, "entry {},{}", j, i);
            }
        }
    }

    #[test]
    fn h_gate_ptm_swaps_x_z_and_flips_y() {
        let prec = 96;
        let mut c = crate::circuit::Circuit::empty(1);
        c.push("H", &[0]);
        let h = c.to_matrix(prec);
        let m = f64_ptm(&ptm_of_unitary(&h, 1));
        // X↔Z, Y→−Y in the (I,X,Y,Z) ordering
        assert!((m[3][1] - 1.0).abs() < 1e-20);
        assert!((m[1][3] - 1.0).abs() < 1e-20);
        assert!((m[2][2] + 1.0).abs() < 1e-20);
        assert!((m[0][0] - 1.0).abs() < 1e-20);
    }

    #[test]
    fn ptm_multiplicativity() {
        let prec = 128;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let u = crate::mpnum::haar_random_unitary(2, prec, &mut rng);
        let v = crate::mpnum::haar_random_unitary(2, prec, &mut rng);
        let muv = ptm_of_unitary(&u.mul(&v), 1);
        let mu = ptm_of_unitary(&u, 1);
        let mv = ptm_of_unitary(&v, 1);
        for j in 0..4 {
            for i in 0..4 {
                let mut acc = Float::new(prec);
                for k in 0..4 {
                    acc += Float::with_val(prec, &mu[j][k] * &mv[k][i]);
                }
                let diff = Float::with_val(prec, &muv[j][i] - &acc).abs();
                assert!(diff.to_f64() < 1e-20, "diff {}", diff.to_f64());
            }
        }
    }

    #[test]
    fn choi_structure() {
        let prec = 96;
        let id = CMatrix::identity(2, prec);
        let j = choi_of_unitary(&id);
        // 1s at the corners (0,0),(0,3),(3,0),(3,3)
        for (r, c) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            assert!((j[(r, c)].re.to_f64() - 1.0).abs() < 1e-20);
        }
        assert!((j.trace().re.to_f64() - 2.0).abs() < 1e-20);
        // Z: corner signs (+,−,−,+)
        let mut z = CMatrix::identity(2, prec);
        z[(1, 1)] = Complex::from_f64(-1.0, 0.0, prec);
        let jz = choi_of_unitary(&z);
        assert!((jz[(0, 3)].re.to_f64() + 1.0).abs() < 1e-20);
        assert!((jz[(3, 0)].re.to_f64() + 1.0).abs() < 1e-20);
        assert!((jz[(0, 0)].re.to_f64() - 1.0).abs() < 1e-20);
        assert!((jz.trace().re.to_f64() - 2.0).abs() < 1e-20);
    }
}
