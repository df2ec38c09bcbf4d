//! Spin-chain generators from the logarithmic derivative of a solution.
//!
//! For a solution whose check form `R(u) P` reduces to a multiple of the
//! identity at `u = 0`, the first-order expansion
//!
//! ```text
//! R(u) P = s [ 1 + u H + O(u^2) ]
//! ```
//!
//! defines a two-site generator `H`, decomposed here in the Pauli basis
//! `C[mu][nu] = tr((sigma_mu x sigma_nu)^dagger H)/4`. The module builds
//! open and periodic chains from those coefficients, constructs the
//! inhomogeneity-free transfer matrix on a ring, and measures the
//! commutation defect that certifies a commuting transfer family.

use crate::catalog::Family;
use crate::linalg::{embed_two_qubit, pauli, perm_p4, CMat};
use crate::{C64, Error, Result};
use std::collections::BTreeMap;

/// Step for the central difference of the check matrix at the origin.
const DIFF_STEP: f64 = 1e-6;
/// Relative tolerance for the basepoint proportionality check.
const BASEPOINT_TOL: f64 = 1e-9;

/// The check form R(u) P.
pub fn check_matrix(fam: &Family, u: C64) -> Result<CMat> {
    Ok(fam.matrix(u)?.mul(&perm_p4()))
}

/// Two-site generator in the Pauli basis, together with the scalar
/// normalization of the check matrix at the origin.
#[derive(Clone, Debug)]
pub struct PauliCoefficients {
    /// s with R(0) P = s * identity.
    pub scalar: C64,
    /// c[mu][nu] multiplies sigma_mu (x) sigma_nu; index 0 is the identity.
    pub c: [[C64; 4]; 4],
}

impl PauliCoefficients {
    pub fn j1(&self) -> C64 {
        self.c[1][1]
    }
    pub fn j2(&self) -> C64 {
        self.c[2][2]
    }
    pub fn j3(&self) -> C64 {
        self.c[3][3]
    }
    /// Longitudinal field carried by the left site of the bond.
    pub fn h_left(&self) -> C64 {
        self.c[3][0]
    }
    /// Longitudinal field carried by the right site of the bond.
    pub fn h_right(&self) -> C64 {
        self.c[0][3]
    }
    pub fn cross_12(&self) -> C64 {
        self.c[1][2]
    }
    pub fn cross_21(&self) -> C64 {
        self.c[2][1]
    }
    /// Coefficient of sigma_+ (x) sigma_+ in the raising/lowering basis.
    pub fn pp_channel(&self) -> C64 {
        self.c[1][1] - self.c[2][2] - C64::i() * (self.c[1][2] + self.c[2][1])
    }
    /// Coefficient of sigma_- (x) sigma_-.
    pub fn mm_channel(&self) -> C64 {
        self.c[1][1] - self.c[2][2] + C64::i() * (self.c[1][2] + self.c[2][1])
    }
    /// Coefficient of sigma_+ (x) sigma_- (hopping).
    pub fn pm_channel(&self) -> C64 {
        self.c[1][1] + self.c[2][2] + C64::i() * (self.c[1][2] - self.c[2][1])
    }
    /// Coefficient of sigma_- (x) sigma_+ (hopping).
    pub fn mp_channel(&self) -> C64 {
        self.c[1][1] + self.c[2][2] - C64::i() * (self.c[1][2] - self.c[2][1])
    }

    /// Dense 4x4 operator form of the generator (identity term included).
    pub fn two_site_operator(&self) -> CMat {
        let mut h = CMat::zeros(4, 4);
        for mu in 0..4 {
            for nu in 0..4 {
                if self.c[mu][nu] == C64::new(0.0, 0.0) {
                    continue;
                }
                h = h.add(&pauli(mu).kron(&pauli(nu)).scale(self.c[mu][nu]));
            }
        }
        h
    }

    /// Stable JSON: complex values as [re, im], keys sorted; includes the
    /// derived channel couplings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut table = BTreeMap::new();
        for mu in 0..4 {
            for nu in 0..4 {
                let v = self.c[mu][nu];
                if v.norm() > 1e-14 {
                    table.insert(format!("c{mu}{nu}"), serde_json::json!([v.re, v.im]));
                }
            }
        }
        serde_json::json!({
            "scalar": [self.scalar.re, self.scalar.im],
            "coefficients": table,
            "channels": {
                "pp": [self.pp_channel().re, self.pp_channel().im],
                "mm": [self.mm_channel().re, self.mm_channel().im],
                "pm": [self.pm_channel().re, self.pm_channel().im],
                "mp": [self.mp_channel().re, self.mp_channel().im],
            },
        })
    }
}

/// Expand an arbitrary R-matrix-valued function around u = 0. The function
/// must produce a check matrix proportional to the identity at the origin.
/// The derivative uses a central difference at `1e-6` sharpened by one
/// Richardson extrapolation step.
pub fn expand_check_matrix_fn<F>(r_of_u: F) -> Result<PauliCoefficients>
where
    F: Fn(C64) -> Result<CMat>,
{
    let p = perm_p4();
    let check = |t: f64| -> Result<CMat> { Ok(r_of_u(C64::new(t, 0.0))?.mul(&p)) };
    let base = check(0.0)?;
    let s = base.trace() / 4.0;
    let deviation = base.sub(&CMat::identity(4).scale(s)).max_abs();
    if s.norm() <= 1e-12 || deviation > BASEPOINT_TOL * f64::max(1.0, s.norm()) {
        return Err(Error::Numerical(format!(
            "expansion basepoint is not proportional to the identity \
             (scalar {s}, deviation {deviation:e}); shift the spectral origin first"
        )));
    }
    let diff = |h: f64| -> Result<CMat> {
        Ok(check(h)?
            .sub(&check(-h)?)
            .scale(C64::new(1.0 / (2.0 * h), 0.0)))
    };
    let d1 = diff(DIFF_STEP)?;
    let d2 = diff(DIFF_STEP / 2.0)?;
    // One Richardson step: (4 D_{h/2} - D_h)/3 cancels the h^2 error term.
    let deriv = d2.scale(C64::new(4.0 / 3.0, 0.0)).sub(&d1.scale(C64::new(1.0 / 3.0, 0.0)));
    let h = deriv.scale(1.0 / s);
    let mut c = [[C64::new(0.0, 0.0); 4]; 4];
    for (mu, row) in c.iter_mut().enumerate() {
        for (nu, slot) in row.iter_mut().enumerate() {
            let basis = pauli(mu).kron(&pauli(nu));
            *slot = basis.dagger().mul(&h).trace() / 4.0;
        }
    }
    Ok(PauliCoefficients { scalar: s, c })
}

/// Expand a catalog family around u = 0.
pub fn expand_check_matrix(fam: &Family) -> Result<PauliCoefficients> {
    expand_check_matrix_fn(|u| fam.matrix(u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Boundary {
    Open,
    Periodic,
}

/// Sum the two-site generator over the bonds of an N-site chain
/// (2 <= N <= 10). Every bond contributes all Pauli channels including
/// the single-site identity-tensor parts, so fields enter once per site
/// on a ring and telescope on an open chain; the global identity term
/// c[0][0] is dropped.
pub fn build_chain(coeffs: &PauliCoefficients, n: usize, boundary: Boundary) -> Result<CMat> {
    if !(2..=10).contains(&n) {
        return Err(Error::DimensionMismatch(format!(
            "chain length must be between 2 and 10, got {n}"
        )));
    }
    let dim = 1usize << n;
    let mut h = CMat::zeros(dim, dim);
    let mut bonds: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    if boundary == Boundary::Periodic {
        bonds.push((n - 1, 0));
    }
    for (i, j) in bonds {
        for mu in 0..4 {
            for nu in 0..4 {
                if mu == 0 && nu == 0 {
                    continue;
                }
                let v = coeffs.c[mu][nu];
                if v.norm() <= 1e-15 {
                    continue;
                }
                let op = embed_two_qubit(&pauli(mu).kron(&pauli(nu)), n, i, j);
                h = h.add(&op.scale(v));
            }
        }
    }
    Ok(h)
}

/// Row-to-row transfer matrix of a periodic N-site chain (2 <= N <= 8)
/// built from an explicit 4x4 R-matrix: the auxiliary space is qubit 0,
/// the product runs over sites 1..=N, and the auxiliary index is traced.
pub fn transfer_matrix_mat(r: &CMat, n: usize) -> Result<CMat> {
    if !(2..=8).contains(&n) {
        return Err(Error::DimensionMismatch(format!(
            "transfer matrix supports 2..=8 sites, got {n}"
        )));
    }
    let nq = n + 1;
    let dim = 1usize << nq;
    let mut m = CMat::identity(dim);
    for site in 1..=n {
        m = m.mul(&embed_two_qubit(r, nq, 0, site));
    }
    let half = 1usize << n;
    let mut t = CMat::zeros(half, half);
    for row in 0..half {
        for col in 0..half {
            t.set(
                row,
                col,
                m.get(row, col) + m.get(row + half, col + half),
            );
        }
    }
    Ok(t)
}

/// Transfer matrix of a catalog family at spectral point u.
pub fn transfer_matrix(fam: &Family, u: C64, n: usize) -> Result<CMat> {
    transfer_matrix_mat(&fam.matrix(u)?, n)
}

/// Normalized commutator norm of two transfer matrices of the same family.
/// Vanishing defect certifies a commuting one-parameter family.
pub fn commutation_defect(fam: &Family, u1: C64, u2: C64, n: usize) -> Result<f64> {
    let t1 = transfer_matrix(fam, u1, n)?;
    let t2 = transfer_matrix(fam, u2, n)?;
    let t12 = t1.mul(&t2);
    let t21 = t2.mul(&t1);
    Ok(t12.max_abs_diff(&t21) / f64::max(1.0, t12.max_abs()))
}

/// Plain-text matrix export: a single dimension line, then one
/// `re im` pair per entry in row-major order.
pub fn export_matrix_text(m: &CMat) -> String {
    let mut out = format!("{}\n", m.n_rows);
    for row in 0..m.n_rows {
        for col in 0..m.n_cols {
            let z = m.get(row, col);
            out.push_str(&format!("{:.17e} {:.17e}\n", z.re, z.im));
        }
    }
    out
}
