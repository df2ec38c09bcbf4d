//! Elliptic kernel: complete elliptic integrals and Jacobi elliptic
//! functions of a complex argument and real modulus k in [0, 1].
//!
//! The quarter period K comes from the arithmetic-geometric mean; the
//! Jacobi triple (sn, cn, dn) is evaluated by a descending Landen chain
//! of moduli followed by the ascending recurrence, which converges for
//! every k in [0, 1) and every non-pole complex argument. The modulus-1
//! boundary degenerates to hyperbolic functions and is dispatched
//! separately. Arguments within 1e-8 of a pole of the function lattice
//! are rejected with `Error::PoleProximity` instead of returning huge
//! cancellation-dominated values.

use crate::{C64, Error, Result};

/// Threshold below which a Landen modulus is treated as zero.
const LANDEN_EPS: f64 = 1e-12;
/// Distance to the nearest pole below which evaluation is refused.
const POLE_GUARD: f64 = 1e-8;

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        if (a - b).abs() <= 1e-16 * a.abs() {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// Complete elliptic integral of the first kind, K(k), modulus convention
/// (NOT the parameter m = k^2). Diverges logarithmically as k -> 1.
pub fn ellip_k(k: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&k) || k.is_nan() {
        return Err(Error::ModulusRange { k });
    }
    if k == 1.0 {
        return Err(Error::EllipticDivergence);
    }
    let kp = ((1.0 - k) * (1.0 + k)).sqrt();
    Ok(std::f64::consts::PI / (2.0 * agm(1.0, kp)))
}

/// Complementary integral K'(k) = K(sqrt(1 - k^2)). Diverges as k -> 0.
pub fn ellip_k_prime(k: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&k) || k.is_nan() {
        return Err(Error::ModulusRange { k });
    }
    if k == 0.0 {
        return Err(Error::EllipticDivergence);
    }
    let kp = ((1.0 - k) * (1.0 + k)).sqrt();
    ellip_k(kp)
}

/// Distance from `u` to the nearest lattice point 2 m K + (2 n + 1) i K'.
fn pole_distance(u: C64, big_k: f64, big_k_prime: f64) -> f64 {
    let m = (u.re / (2.0 * big_k)).round();
    let n = ((u.im / big_k_prime - 1.0) / 2.0).round();
    let mut best = f64::INFINITY;
    for dm in [-1.0, 0.0, 1.0] {
        for dn in [-1.0, 0.0, 1.0] {
            let pole_re = 2.0 * (m + dm) * big_k;
            let pole_im = (2.0 * (n + dn) + 1.0) * big_k_prime;
            let d = (u.re - pole_re).hypot(u.im - pole_im);
            best = best.min(d);
        }
    }
    best
}

/// Jacobi elliptic triple (sn, cn, dn) at complex argument `u`, modulus `k`.
pub fn jacobi(u: C64, k: f64) -> Result<(C64, C64, C64)> {
    if !(0.0..=1.0).contains(&k) || k.is_nan() {
        return Err(Error::ModulusRange { k });
    }
    if 1.0 - k <= LANDEN_EPS {
        // Hyperbolic boundary: sn = tanh, cn = dn = sech. Poles of sech
        // sit at i (2n + 1) pi / 2.
        let half_pi = std::f64::consts::FRAC_PI_2;
        let n = ((u.im / half_pi - 1.0) / 2.0).round();
        let mut dist = f64::INFINITY;
        for dn in [-1.0, 0.0, 1.0] {
            let pole_im = (2.0 * (n + dn) + 1.0) * half_pi;
            dist = dist.min(u.re.hypot(u.im - pole_im));
        }
        if dist < POLE_GUARD {
            return Err(Error::PoleProximity { dist, re: u.re, im: u.im });
        }
        let sech = C64::new(1.0, 0.0) / u.cosh();
        return Ok((u.tanh(), sech, sech));
    }
    if k > LANDEN_EPS {
        let big_k = ellip_k(k)?;
        let big_k_prime = ellip_k_prime(k)?;
        let dist = pole_distance(u, big_k, big_k_prime);
        if dist < POLE_GUARD {
            return Err(Error::PoleProximity { dist, re: u.re, im: u.im });
        }
    }
    // Descending Landen chain of moduli.
    let mut chain: Vec<f64> = Vec::new();
    let mut kc = k;
    while kc > LANDEN_EPS {
        let kp = ((1.0 - kc) * (1.0 + kc)).sqrt();
        let k1 = (1.0 - kp) / (1.0 + kp);
        chain.push(k1);
        kc = k1;
    }
    let scale: f64 = chain.iter().map(|k1| 1.0 + k1).product();
    let v = u / scale;
    let (mut sn, mut cn, mut dn) = (v.sin(), v.cos(), C64::new(1.0, 0.0));
    for &k1 in chain.iter().rev() {
        let sn2 = sn * sn;
        let den = C64::new(1.0, 0.0) + sn2 * k1;
        if den.norm() < 1e-300 {
            return Err(Error::Numerical(format!(
                "Landen ascent hit a zero denominator at u = {} + {}i",
                u.re, u.im
            )));
        }
        let sn_new = sn * (1.0 + k1) / den;
        let cn_new = cn * dn / den;
        let dn_new = (C64::new(1.0, 0.0) - sn2 * k1) / den;
        sn = sn_new;
        cn = cn_new;
        dn = dn_new;
    }
    Ok((sn, cn, dn))
}

/// Jacobi triple at a purely imaginary rotation of the argument: returns
/// (sn, cn, dn) evaluated at (i u, k), computed from the complementary
/// modulus via sn(iu, k) = i sn(u, k') / cn(u, k'), cn(iu, k) = 1 / cn(u, k'),
/// dn(iu, k) = dn(u, k') / cn(u, k').
pub fn imaginary_transform(u: C64, k: f64) -> Result<(C64, C64, C64)> {
    if !(0.0..=1.0).contains(&k) || k.is_nan() {
        return Err(Error::ModulusRange { k });
    }
    let kp = ((1.0 - k) * (1.0 + k)).sqrt();
    let (snp, cnp, dnp) = jacobi(u, kp)?;
    if cnp.norm() < POLE_GUARD {
        return Err(Error::PoleProximity { dist: cnp.norm(), re: u.re, im: u.im });
    }
    let i = C64::new(0.0, 1.0);
    Ok((i * snp / cnp, C64::new(1.0, 0.0) / cnp, dnp / cnp))
}

/// Jacobi triple at the reciprocal modulus: returns (sn, cn, dn)
/// evaluated at (k u, 1/k), computed from sn(ku, 1/k) = k sn(u, k),
/// cn(ku, 1/k) = dn(u, k), dn(ku, 1/k) = cn(u, k). Requires k in (0, 1].
pub fn first_degree_transform(u: C64, k: f64) -> Result<(C64, C64, C64)> {
    if !(k > 0.0 && k <= 1.0) || k.is_nan() {
        return Err(Error::ModulusRange { k });
    }
    let (sn, cn, dn) = jacobi(u, k)?;
    Ok((sn * k, dn, cn))
}
