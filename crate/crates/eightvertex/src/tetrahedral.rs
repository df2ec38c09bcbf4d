//! Mixed three-factor exchange relations and the explicit weight tensor
//! that intertwines products of two R-matrix kinds on three qubits.
//!
//! The objects here are a pair of 4x4 kernels `R^0`, `R^1` indexed by a
//! superscript triple `t = (t1, t2, t3)`, the ordered products
//!
//! ```text
//! L_t = R^{t1}_12(u1,u2) R^{t2}_13(u1,u3) R^{t3}_23(u2,u3)
//! B_s = R^{s3}_23(u2,u3) R^{s2}_13(u1,u3) R^{s1}_12(u1,u2)
//! ```
//!
//! and a 64-entry tensor `W` meant to satisfy `L_t = sum_s W[t][s] B_s`.
//! The module builds the published closed-form tensor, solves for the
//! best tensor by least squares (detecting non-uniqueness), contracts the
//! four-tensor consistency condition on six qubits, and checks the mixed
//! exchange relations satisfied by a sign-twisted free-fermion pair.

use crate::catalog::Family;
use crate::linalg::{least_squares, CMat};
use crate::verify::embed;
use crate::{C64, Error, Result};
use serde_json::json;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
/// Guard on sin(u1 - u3) and on the common denominator.
const SING_EPS: f64 = 1e-8;
/// Threshold under which the least-squares system is declared non-unique.
const UNIQUENESS_RATIO: f64 = 1e-10;

/// The printed trigonometric kernel pair, as difference kernels in
/// (u1 - u2).
pub fn r_pair(u1: f64, u2: f64) -> (CMat, CMat) {
    let d = u1 - u2;
    let (s, c) = (d.sin(), d.cos());
    let mut r1 = CMat::zeros(4, 4);
    r1.set(0, 0, C64::new(c, 0.0));
    r1.set(1, 1, C64::new(0.0, s));
    r1.set(1, 2, ONE);
    r1.set(2, 1, ONE);
    r1.set(2, 2, C64::new(0.0, -s));
    r1.set(3, 3, C64::new(c, 0.0));
    let mut r2 = CMat::zeros(4, 4);
    r2.set(0, 0, ONE);
    r2.set(0, 3, C64::new(s, 0.0));
    r2.set(1, 2, C64::new(c, 0.0));
    r2.set(2, 1, C64::new(c, 0.0));
    r2.set(3, 0, C64::new(s, 0.0));
    r2.set(3, 3, ONE);
    (r1, r2)
}

/// The sign twist diag(-1, 1) acting on the first tensor factor.
pub fn sign_twist() -> CMat {
    let mut t = CMat::identity(4);
    t.set(0, 0, -ONE);
    t.set(1, 1, -ONE);
    t
}

/// Difference/sum kernel pair built on a base solution (use a free-fermion
/// base such as the anisotropic hopping family): the first kernel is the
/// base at u - v, the second is the base at u + v with the sign twist
/// applied on the column side.
pub fn sign_twisted_pair(base: &Family, u: C64, v: C64) -> Result<(CMat, CMat)> {
    let r1 = base.matrix(u - v)?;
    let r2 = base.matrix(u + v)?.mul(&sign_twist());
    Ok((r1, r2))
}

/// Row-side variant of the twisted kernel: the twist multiplies from the
/// left instead of the right.
pub fn sign_twisted_tau(base: &Family, u: C64, v: C64) -> Result<CMat> {
    Ok(sign_twist().mul(&base.matrix(u + v)?))
}

/// Exchange residual of three explicit factors:
/// `|R12 R13 R23 - R23 R13 R12| / max(1, |R12 R13 R23|)`.
pub fn rri_residual_mats(r12: &CMat, r13: &CMat, r23: &CMat) -> f64 {
    let lhs = embed(r12, 12).mul(&embed(r13, 13)).mul(&embed(r23, 23));
    let rhs = embed(r23, 23).mul(&embed(r13, 13)).mul(&embed(r12, 12));
    lhs.max_abs_diff(&rhs) / f64::max(1.0, lhs.max_abs())
}

/// Mixed exchange residual for the printed trigonometric pair with the
/// second kernel in slots 13 and 23. This relation does NOT hold for the
/// printed pair; the residual is order one.
pub fn rri_residual_r_pair(u1: f64, u2: f64, u3: f64) -> f64 {
    let (r1_12, _) = r_pair(u1, u2);
    let (_, r2_13) = r_pair(u1, u3);
    let (_, r2_23) = r_pair(u2, u3);
    rri_residual_mats(&r1_12, &r2_13, &r2_23)
}

/// Mixed exchange residual for the sign-twisted pair: slot 12 carries the
/// difference kernel at u - v, slots 13 and 23 carry the twisted sum
/// kernel at u + w and v + w. This relation holds identically.
pub fn rri_residual_sign_twisted(base: &Family, u: C64, v: C64, w: C64) -> Result<f64> {
    let r12 = base.matrix(u - v)?;
    let r13 = base.matrix(u + w)?.mul(&sign_twist());
    let r23 = base.matrix(v + w)?.mul(&sign_twist());
    Ok(rri_residual_mats(&r12, &r13, &r23))
}

/// Row/column-twist intertwining relation: the twisted sum kernel in slot
/// 12 appears column-twisted on the left and row-twisted on the right,
/// with the plain base kernel at u - w in slot 13 and at v + w in slot 23:
///
/// ```text
/// (R T)_12 R_13(u-w) R_23(v+w) = R_23(v+w) R_13(u-w) (T R)_12
/// ```
pub fn tau_residual(base: &Family, u: C64, v: C64, w: C64) -> Result<f64> {
    let col = base.matrix(u + v)?.mul(&sign_twist());
    let row = sign_twist().mul(&base.matrix(u + v)?);
    let r13 = base.matrix(u - w)?;
    let r23 = base.matrix(v + w)?;
    let lhs = embed(&col, 12).mul(&embed(&r13, 13)).mul(&embed(&r23, 23));
    let rhs = embed(&r23, 23).mul(&embed(&r13, 13)).mul(&embed(&row, 12));
    Ok(lhs.max_abs_diff(&rhs) / f64::max(1.0, lhs.max_abs()))
}

/// Superscript triple to flat index: (t1, t2, t3) -> 4 t1 + 2 t2 + t3.
pub fn triple_index(t: (usize, usize, usize)) -> usize {
    4 * t.0 + 2 * t.1 + t.2
}

/// 8x8 intertwining tensor over superscript triples, with its spectral
/// point and the symmetric invariant f = s12^2 + s23^2 + s13^2.
#[derive(Clone, Debug)]
pub struct WTensor {
    pub u1: f64,
    pub u2: f64,
    pub u3: f64,
    /// entries[t][s] multiplies B_s in the expansion of L_t.
    pub entries: [[C64; 8]; 8],
    pub f_value: f64,
}

impl WTensor {
    pub fn get(&self, t: (usize, usize, usize), s: (usize, usize, usize)) -> C64 {
        self.entries[triple_index(t)][triple_index(s)]
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|v| v.norm() > 1e-14)
            .count()
    }

    /// Stable JSON: spectral point plus the nonzero entries in row-major
    /// order, each with its superscript triples and [re, im] value.
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = Vec::new();
        for t1 in 0..2 {
            for t2 in 0..2 {
                for t3 in 0..2 {
                    for s1 in 0..2 {
                        for s2 in 0..2 {
                            for s3 in 0..2 {
                                let v = self.get((t1, t2, t3), (s1, s2, s3));
                                if v.norm() > 1e-14 {
                                    entries.push(json!({
                                        "in": [t1, t2, t3],
                                        "out": [s1, s2, s3],
                                        "re": v.re,
                                        "im": v.im,
                                    }));
                                }
                            }
                        }
                    }
                }
            }
        }
        json!({
            "u1": self.u1,
            "u2": self.u2,
            "u3": self.u3,
            "entries": entries,
        })
    }
}

/// The identity tensor at a spectral point: L_t = B_t, which contracts the
/// six-qubit consistency condition to zero trivially.
pub fn identity_w(u1: f64, u2: f64, u3: f64) -> WTensor {
    let mut entries = [[ZERO; 8]; 8];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = ONE;
    }
    let (s12, s23, s13) = (
        (u1 - u2).sin(),
        (u2 - u3).sin(),
        (u1 - u3).sin(),
    );
    WTensor {
        u1,
        u2,
        u3,
        entries,
        f_value: s12 * s12 + s23 * s23 + s13 * s13,
    }
}

/// The published closed-form tensor. Corner entries are exactly 1; all
/// other nonzeros are trigonometric polynomials divided by the common
/// denominator D = 2 f - sin 2(u1-u2) sin 2(u2-u3). Errors when
/// sin(u1 - u3) or D fall below the singularity guard.
pub fn w_explicit(u1: f64, u2: f64, u3: f64) -> Result<WTensor> {
    let s12 = (u1 - u2).sin();
    let s23 = (u2 - u3).sin();
    let s13 = (u1 - u3).sin();
    let c12 = (u1 - u2).cos();
    let c23 = (u2 - u3).cos();
    let f = s12 * s12 + s23 * s23 + s13 * s13;
    let d = 2.0 * f - (2.0 * (u1 - u2)).sin() * (2.0 * (u2 - u3)).sin();
    if s13.abs() < SING_EPS {
        return Err(Error::SingularConfiguration(format!(
            "sin(u1 - u3) = {s13:e} is below the guard; the tensor entries diverge"
        )));
    }
    if d.abs() < SING_EPS {
        return Err(Error::SingularConfiguration(format!(
            "common denominator D = {d:e} is below the guard"
        )));
    }
    let csc = 1.0 / s13;
    let sin2a = (2.0 * (u1 - u2)).sin();
    let sin2b = (2.0 * (u2 - u3)).sin();
    type Key = ((usize, usize, usize), (usize, usize, usize));
    let table: [(Key, f64); 24] = [
        (((0, 0, 1), (0, 0, 1)), 2.0 * f * c23 * csc * s12),
        (((0, 1, 0), (0, 1, 0)), -sin2a * sin2b),
        (((0, 0, 1), (0, 1, 0)), c12 * s23 * s13),
        (((0, 1, 0), (0, 0, 1)), 2.0 * f * csc * csc * s23 * s23),
        (((0, 0, 0), (0, 1, 1)), -4.0 * s12 * s12 * s23 * s23),
        (((0, 1, 1), (0, 1, 1)), 2.0 * f * c12 * csc * s23),
        (((1, 0, 0), (0, 0, 1)), -4.0 * c23 * csc * s12 * s23 * s23),
        (((1, 0, 0), (0, 1, 0)), 4.0 * c23 * s12 * s13),
        (((1, 1, 1), (0, 0, 1)), -4.0 * csc * csc * s23 * s23),
        (((1, 1, 1), (0, 1, 0)), 4.0),
        (((1, 0, 1), (0, 1, 1)), 2.0 * f),
        (((1, 1, 0), (0, 1, 1)), -4.0 * c12 * csc * s23 * s23),
        (((0, 0, 1), (1, 0, 0)), -4.0 * c12 * csc * s12 * s12 * s23),
        (((0, 0, 0), (1, 0, 1)), 4.0 * s12 * s23 * s23),
        (((0, 1, 0), (1, 0, 0)), 2.0 * f * csc * csc * s12 * s12),
        (((0, 1, 1), (1, 0, 1)), 4.0 * c23 * csc * s12 * s12 * s12),
        (((0, 0, 0), (1, 1, 0)), -4.0 * s12 * s12 * s23 * s23),
        (((0, 1, 1), (1, 1, 0)), -4.0 * c23 * csc * s12 * s12 * s12),
        (((1, 1, 1), (1, 0, 0)), -4.0 * csc * csc * s12 * s12),
        (((1, 0, 0), (1, 0, 0)), -2.0 * f * c12 * csc * s23),
        (((1, 0, 1), (1, 0, 1)), -sin2a * sin2b),
        (((1, 1, 0), (1, 0, 1)), 4.0 * c12 * csc * s23),
        (((1, 0, 1), (1, 1, 0)), 2.0 * f),
        (((1, 1, 0), (1, 1, 0)), 2.0 * f * c23 * csc * s12),
    ];
    let mut entries = [[ZERO; 8]; 8];
    for ((t, s), v) in table {
        entries[triple_index(t)][triple_index(s)] = C64::new(v / d, 0.0);
    }
    entries[0][0] = ONE;
    entries[7][7] = ONE;
    Ok(WTensor {
        u1,
        u2,
        u3,
        entries,
        f_value: f,
    })
}

/// Kernel selector: a pair of functions of (ua, ub) giving the two kinds.
pub type KernelFn<'a> = &'a dyn Fn(f64, f64) -> CMat;

fn products(
    r1: KernelFn,
    r2: KernelFn,
    u1: f64,
    u2: f64,
    u3: f64,
) -> (Vec<CMat>, Vec<CMat>) {
    let pick = |which: usize, a: f64, b: f64| -> CMat {
        if which == 0 {
            r1(a, b)
        } else {
            r2(a, b)
        }
    };
    let mut ls = Vec::with_capacity(8);
    let mut bs = Vec::with_capacity(8);
    for t1 in 0..2 {
        for t2 in 0..2 {
            for t3 in 0..2 {
                let a12 = embed(&pick(t1, u1, u2), 12);
                let a13 = embed(&pick(t2, u1, u3), 13);
                let a23 = embed(&pick(t3, u2, u3), 23);
                ls.push(a12.mul(&a13).mul(&a23));
                bs.push(a23.mul(&a13).mul(&a12));
            }
        }
    }
    (ls, bs)
}

/// Worst-case residual of `L_t = sum_s W[t][s] B_s` over the eight
/// superscript triples, at the tensor's own spectral point.
pub fn algebra_residual(r1: KernelFn, r2: KernelFn, w: &WTensor) -> f64 {
    let (ls, bs) = products(r1, r2, w.u1, w.u2, w.u3);
    let mut worst: f64 = 0.0;
    for t in 0..8 {
        let mut m = CMat::zeros(8, 8);
        for (s, b) in bs.iter().enumerate() {
            let coeff = w.entries[t][s];
            if coeff != ZERO {
                m = m.add(&b.scale(coeff));
            }
        }
        let r = ls[t].max_abs_diff(&m) / f64::max(1.0, ls[t].max_abs());
        worst = worst.max(r);
    }
    worst
}

/// Least-squares solve for the tensor from the 64x8 system whose columns
/// are the vectorized reversed products. Returns the tensor and the
/// relative conditioning (smallest over largest singular value); errors
/// with `NonUniqueSolution` when the columns do not span an
/// eight-dimensional space.
pub fn solve_w(
    r1: KernelFn,
    r2: KernelFn,
    u1: f64,
    u2: f64,
    u3: f64,
) -> Result<(WTensor, f64)> {
    let (ls, bs) = products(r1, r2, u1, u2, u3);
    let mut a = CMat::zeros(64, 8);
    for (s, b) in bs.iter().enumerate() {
        for i in 0..64 {
            a.set(i, s, b.data[i]);
        }
    }
    let mut entries = [[ZERO; 8]; 8];
    let mut conditioning = f64::INFINITY;
    for (t, l) in ls.iter().enumerate() {
        let sol = least_squares(&a, &l.data, 1e-12)?;
        let smax = sol.singular_values[0];
        let smin = *sol.singular_values.last().unwrap();
        let ratio = if smax > 0.0 { smin / smax } else { 0.0 };
        conditioning = conditioning.min(ratio);
        if ratio < UNIQUENESS_RATIO {
            return Err(Error::NonUniqueSolution {
                min_sv: smin,
                threshold: UNIQUENESS_RATIO * smax,
            });
        }
        entries[t].copy_from_slice(&sol.x);
    }
    let (s12, s23, s13) = ((u1 - u2).sin(), (u2 - u3).sin(), (u1 - u3).sin());
    Ok((
        WTensor {
            u1,
            u2,
            u3,
            entries,
            f_value: s12 * s12 + s23 * s23 + s13 * s13,
        },
        conditioning,
    ))
}

/// Six-qubit consistency contraction of four tensors. With tensors indexed
/// as W[in][out] over bit triples, the two sides are
///
/// ```text
/// L[I,K] = sum_j W123[i1 i2 i3, j1 j2 j3] W124[j1 i4 i5, k1 j4 j5]
///                W134[j2 j4 i6, k2 k4 j6] W234[j3 j5 j6, k3 k5 k6]
/// R[I,K] = sum_j W234[i3 i5 i6, j3 j5 j6] W134[i2 i4 j6, j2 j4 k6]
///                W124[i1 j4 j5, j1 k4 k5] W123[j1 j2 j3, k1 k2 k3]
/// ```
///
/// and the residual is `max|L - R| / max(1, max|L|)`.
pub fn zte_residual<F>(wfun: F, u1: f64, u2: f64, u3: f64, u4: f64) -> Result<f64>
where
    F: Fn(f64, f64, f64) -> Result<WTensor>,
{
    let w123 = wfun(u1, u2, u3)?.entries;
    let w124 = wfun(u1, u2, u4)?.entries;
    let w134 = wfun(u1, u3, u4)?.entries;
    let w234 = wfun(u2, u3, u4)?.entries;
    let bit = |x: usize, b: usize| (x >> (5 - b)) & 1;
    let tid = |a: usize, b: usize, c: usize| 4 * a + 2 * b + c;
    let mut max_l: f64 = 0.0;
    let mut max_diff: f64 = 0.0;
    for i in 0..64usize {
        let (i1, i2, i3, i4, i5, i6) =
            (bit(i, 0), bit(i, 1), bit(i, 2), bit(i, 3), bit(i, 4), bit(i, 5));
        for k in 0..64usize {
            let (k1, k2, k3, k4, k5, k6) =
                (bit(k, 0), bit(k, 1), bit(k, 2), bit(k, 3), bit(k, 4), bit(k, 5));
            let mut sl = ZERO;
            let mut sr = ZERO;
            for j in 0..64usize {
                let (j1, j2, j3, j4, j5, j6) =
                    (bit(j, 0), bit(j, 1), bit(j, 2), bit(j, 3), bit(j, 4), bit(j, 5));
                sl += w123[tid(i1, i2, i3)][tid(j1, j2, j3)]
                    * w124[tid(j1, i4, i5)][tid(k1, j4, j5)]
                    * w134[tid(j2, j4, i6)][tid(k2, k4, j6)]
                    * w234[tid(j3, j5, j6)][tid(k3, k5, k6)];
                sr += w234[tid(i3, i5, i6)][tid(j3, j5, j6)]
                    * w134[tid(i2, i4, j6)][tid(j2, j4, k6)]
                    * w124[tid(i1, j4, j5)][tid(j1, k4, k5)]
                    * w123[tid(j1, j2, j3)][tid(k1, k2, k3)];
            }
            max_l = max_l.max(sl.norm());
            max_diff = max_diff.max((sl - sr).norm());
        }
    }
    Ok(max_diff / f64::max(1.0, max_l))
}
