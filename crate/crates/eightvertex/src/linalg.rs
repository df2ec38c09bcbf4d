//! Dense complex matrices sized for multi-qubit tensor algebra.
//!
//! Everything here is deliberately small-scale: matrices up to 512x512,
//! row-major storage, straightforward O(n^3) products, a cyclic Jacobi
//! eigensolver for Hermitian matrices, and an eigen-based least-squares
//! solve with singular-value reporting. No external linear-algebra crate
//! is used so results are bit-deterministic across platforms.

use crate::{C64, Error, Result};

/// Dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    pub n_rows: usize,
    pub n_cols: usize,
    pub data: Vec<C64>,
}

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

impl CMat {
    pub fn zeros(n_rows: usize, n_cols: usize) -> CMat {
        CMat { n_rows, n_cols, data: vec![ZERO; n_rows * n_cols] }
    }

    pub fn identity(n: usize) -> CMat {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = ONE;
        }
        m
    }

    /// Build from a nested row slice; all rows must share a length.
    pub fn from_rows(rows: &[Vec<C64>]) -> CMat {
        let n_rows = rows.len();
        let n_cols = if n_rows == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged rows");
            data.extend_from_slice(r);
        }
        CMat { n_rows, n_cols, data }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> C64 {
        self.data[r * self.n_cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: C64) {
        self.data[r * self.n_cols + c] = v;
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.n_cols, other.n_rows, "inner dimensions");
        let (n, k, m) = (self.n_rows, self.n_cols, other.n_cols);
        let mut out = CMat::zeros(n, m);
        for i in 0..n {
            for p in 0..k {
                let a = self.data[i * k + p];
                if a == ZERO {
                    continue;
                }
                let row = p * m;
                let orow = i * m;
                for j in 0..m {
                    out.data[orow + j] += a * other.data[row + j];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        CMat { n_rows: self.n_rows, n_cols: self.n_cols, data }
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        CMat { n_rows: self.n_rows, n_cols: self.n_cols, data }
    }

    pub fn scale(&self, s: C64) -> CMat {
        let data = self.data.iter().map(|a| a * s).collect();
        CMat { n_rows: self.n_rows, n_cols: self.n_cols, data }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMat {
        let mut out = CMat::zeros(self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                out.data[c * self.n_rows + r] = self.get(r, c).conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> CMat {
        let mut out = CMat::zeros(self.n_cols, self.n_rows);
        for r in 0..self.n_rows {
            for c in 0..self.n_cols {
                out.data[c * self.n_rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn trace(&self) -> C64 {
        assert_eq!(self.n_rows, self.n_cols);
        (0..self.n_rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry magnitude of (self - other).
    pub fn max_abs_diff(&self, other: &CMat) -> f64 {
        assert_eq!((self.n_rows, self.n_cols), (other.n_rows, other.n_cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Kronecker product self (x) other.
    pub fn kron(&self, other: &CMat) -> CMat {
        let (ar, ac) = (self.n_rows, self.n_cols);
        let (br, bc) = (other.n_rows, other.n_cols);
        let mut out = CMat::zeros(ar * br, ac * bc);
        for i in 0..ar {
            for j in 0..ac {
                let a = self.get(i, j);
                if a == ZERO {
                    continue;
                }
                for p in 0..br {
                    for q in 0..bc {
                        out.set(i * br + p, j * bc + q, a * other.get(p, q));
                    }
                }
            }
        }
        out
    }
}

/// Swap operator on a two-qubit space: P |i j> = |j i>.
pub fn perm_p4() -> CMat {
    let mut p = CMat::zeros(4, 4);
    p.set(0, 0, ONE);
    p.set(1, 2, ONE);
    p.set(2, 1, ONE);
    p.set(3, 3, ONE);
    p
}

/// Pauli matrices sigma_0..sigma_3 (identity, x, y, z).
pub fn pauli(mu: usize) -> CMat {
    let mut m = CMat::zeros(2, 2);
    match mu {
        0 => {
            m.set(0, 0, ONE);
            m.set(1, 1, ONE);
        }
        1 => {
            m.set(0, 1, ONE);
            m.set(1, 0, ONE);
        }
        2 => {
            m.set(0, 1, -I);
            m.set(1, 0, I);
        }
        3 => {
            m.set(0, 0, ONE);
            m.set(1, 1, -ONE);
        }
        _ => panic!("pauli index out of range"),
    }
    m
}

/// Embed a 4x4 two-qubit operator into an `n_qubits` space, acting on
/// qubits `p` and `q` (0-based, most significant bit first: qubit 0 is
/// the highest bit of the basis index). The operator's first tensor
/// factor acts on qubit `p`, the second on qubit `q`.
pub fn embed_two_qubit(r: &CMat, n_qubits: usize, p: usize, q: usize) -> CMat {
    assert_eq!((r.n_rows, r.n_cols), (4, 4));
    assert!(p != q && p < n_qubits && q < n_qubits);
    let dim = 1usize << n_qubits;
    let sp = n_qubits - 1 - p;
    let sq = n_qubits - 1 - q;
    let (mp, mq) = (1usize << sp, 1usize << sq);
    let mut out = CMat::zeros(dim, dim);
    for col in 0..dim {
        let jp = (col >> sp) & 1;
        let jq = (col >> sq) & 1;
        let base = col & !(mp | mq);
        for ip in 0..2usize {
            for iq in 0..2usize {
                let v = r.get(ip * 2 + iq, jp * 2 + jq);
                if v == ZERO {
                    continue;
                }
                let row = base | (ip << sp) | (iq << sq);
                out.set(row, col, v);
            }
        }
    }
    out
}

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Returns eigenvalues (ascending) and a unitary whose columns
/// are the matching eigenvectors.
pub fn hermitian_eigen(a: &CMat) -> Result<(Vec<f64>, CMat)> {
    if a.n_rows != a.n_cols {
        return Err(Error::DimensionMismatch(format!(
            "hermitian_eigen needs square input, got {}x{}",
            a.n_rows, a.n_cols
        )));
    }
    let n = a.n_rows;
    let mut m = a.clone();
    let mut v = CMat::identity(n);
    let scale = m.max_abs().max(1e-300);
    for _sweep in 0..120 {
        let mut off = 0.0f64;
        for r in 0..n {
            for c in (r + 1)..n {
                off = off.max(m.get(r, c).norm());
            }
        }
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let z = m.get(p, q);
                let az = z.norm();
                if az <= 1e-300 {
                    continue;
                }
                let phase = z / az;
                let tau = (m.get(q, q).re - m.get(p, p).re) / (2.0 * az);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Unitary U: identity except U[p][p]=c, U[p][q]=s*phase,
                // U[q][p]=-s*conj(phase), U[q][q]=c. Update M <- U^H M U, V <- V U.
                let (upp, upq) = (C64::new(c, 0.0), phase * s);
                let (uqp, uqq) = (-phase.conj() * s, C64::new(c, 0.0));
                for k in 0..n {
                    let (mkp, mkq) = (m.get(k, p), m.get(k, q));
                    m.set(k, p, mkp * upp + mkq * uqp);
                    m.set(k, q, mkp * upq + mkq * uqq);
                }
                for k in 0..n {
                    let (mpk, mqk) = (m.get(p, k), m.get(q, k));
                    m.set(p, k, upp.conj() * mpk + uqp.conj() * mqk);
                    m.set(q, k, upq.conj() * mpk + uqq.conj() * mqk);
                }
                for k in 0..n {
                    let (vkp, vkq) = (v.get(k, p), v.get(k, q));
                    v.set(k, p, vkp * upp + vkq * uqp);
                    v.set(k, q, vkp * upq + vkq * uqq);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    let evals: Vec<f64> = (0..n).map(|i| m.get(i, i).re).collect();
    order.sort_by(|&i, &j| evals[i].partial_cmp(&evals[j]).unwrap());
    let sorted_vals: Vec<f64> = order.iter().map(|&i| evals[i]).collect();
    let mut sorted_vecs = CMat::zeros(n, n);
    for (new_c, &old_c) in order.iter().enumerate() {
        for r in 0..n {
            sorted_vecs.set(r, new_c, v.get(r, old_c));
        }
    }
    Ok((sorted_vals, sorted_vecs))
}

/// Result of a least-squares solve with singular-value diagnostics.
pub struct LeastSquares {
    /// Minimizer of ||A x - b||.
    pub x: Vec<C64>,
    /// Singular values of A, descending.
    pub singular_values: Vec<f64>,
}

/// Solve min ||A x - b|| via the eigen-decomposition of the Gram matrix
/// A^H A. Singular values below `rel_threshold * sigma_max` are treated
/// as zero (their directions do not contribute to x).
pub fn least_squares(a: &CMat, b: &[C64], rel_threshold: f64) -> Result<LeastSquares> {
    if a.n_rows != b.len() {
        return Err(Error::DimensionMismatch(format!(
            "least_squares: A is {}x{} but b has length {}",
            a.n_rows, a.n_cols, b.len()
        )));
    }
    let n = a.n_cols;
    let ah = a.dagger();
    let gram = ah.mul(a);
    let (evals, vecs) = hermitian_eigen(&gram)?;
    // Eigenvalues of the Gram matrix are sigma^2; clamp tiny negatives from roundoff.
    let sigmas: Vec<f64> = evals.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let sigma_max = sigmas.iter().cloned().fold(0.0, f64::max);
    let cutoff = rel_threshold * sigma_max;
    // x = V diag(1/sigma^2 or 0) V^H (A^H b)
    let mut ahb = vec![ZERO; n];
    for r in 0..n {
        let mut s = ZERO;
        for k in 0..a.n_rows {
            s += a.get(k, r).conj() * b[k];
        }
        ahb[r] = s;
    }
    let mut x = vec![ZERO; n];
    for j in 0..n {
        let sj = sigmas[j];
        if sj <= cutoff || sj == 0.0 {
            continue;
        }
        let mut proj = ZERO;
        for r in 0..n {
            proj += vecs.get(r, j).conj() * ahb[r];
        }
        let coeff = proj / C64::new(sj * sj, 0.0);
        for r in 0..n {
            x[r] += vecs.get(r, j) * coeff;
        }
    }
    let mut sv_desc = sigmas;
    sv_desc.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(LeastSquares { x, singular_values: sv_desc })
}
