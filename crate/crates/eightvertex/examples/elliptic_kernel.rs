//! Tour of the elliptic kernel: quarter periods, the Jacobi triple at
//! complex arguments, and the identities the rest of the workbench
//! leans on.
//!
//! Reference values (15+ digits, independently computed):
//!   K(0)    = pi/2
//!   K(0.5)  = 1.6857503548125961
//!   K(0.9)  = 2.2805491384227703
//!   K'(0.5) = 2.1565156474996432
//!   sn(0.7, k=0.6) = 0.6299171153234868
//!   cn(0.7, k=0.6) = 0.7766623641084568
//!   dn(0.7, k=0.6) = 0.9258258983286833
//!
//! The example then checks, over a complex grid:
//!   * the Pythagorean pair sn^2 + cn^2 = 1 and dn^2 + k^2 sn^2 = 1,
//!   * the ascending modulus identity connecting k to 2 sqrt(k)/(1+k),
//!   * the imaginary-rotation transform against direct evaluation,
//! and demonstrates the pole guard near i K'.

use eightvertex::elliptic::{ellip_k, ellip_k_prime, imaginary_transform, jacobi};
use eightvertex::{C64, Error};

/// Bound for the Pythagorean identities on the test grid.
const PYTH_TOL: f64 = 1e-12;
/// Bound for the modulus-ascent and rotation identities.
const TRANSFORM_TOL: f64 = 1e-10;

fn main() {
    println!("quarter periods:");
    for k in [0.0, 0.5, 0.9] {
        println!("  K({k}) = {:.16}", ellip_k(k).unwrap());
    }
    println!("  K'(0.5) = {:.16}", ellip_k_prime(0.5).unwrap());
    assert!((ellip_k(0.0).unwrap() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
    assert!((ellip_k(0.5).unwrap() - 1.6857503548125961).abs() < 1e-14);
    assert!((ellip_k(0.9).unwrap() - 2.2805491384227703).abs() < 1e-14);

    let (sn, cn, dn) = jacobi(C64::new(0.7, 0.0), 0.6).unwrap();
    println!("\nJacobi triple at u = 0.7, k = 0.6:");
    println!("  sn = {:.16}", sn.re);
    println!("  cn = {:.16}", cn.re);
    println!("  dn = {:.16}", dn.re);
    assert!((sn.re - 0.6299171153234868).abs() < 1e-14);
    assert!((cn.re - 0.7766623641084568).abs() < 1e-14);
    assert!((dn.re - 0.9258258983286833).abs() < 1e-14);

    let grid = [
        C64::new(0.3, 0.2),
        C64::new(-0.7, 0.45),
        C64::new(1.1, -0.3),
        C64::new(0.05, 0.49),
    ];
    let one = C64::new(1.0, 0.0);
    let mut worst_pyth: f64 = 0.0;
    let mut worst_ascent: f64 = 0.0;
    let mut worst_rot: f64 = 0.0;
    for k in [0.1, 0.5, 0.9, 0.99] {
        for &u in &grid {
            let (sn, cn, dn) = jacobi(u, k).unwrap();
            worst_pyth = worst_pyth
                .max((sn * sn + cn * cn - one).norm())
                .max((dn * dn + sn * sn * (k * k) - one).norm());

            // Ascent: at modulus kap = 2 sqrt(k)/(1+k) and argument
            // (1+k) u the triple is a rational image of the original.
            let kap = 2.0 * k.sqrt() / (1.0 + k);
            let (snl, cnl, dnl) = jacobi(u * (1.0 + k), kap).unwrap();
            let den = one + sn * sn * k;
            worst_ascent = worst_ascent
                .max((snl - sn * (1.0 + k) / den).norm())
                .max((cnl - cn * dn / den).norm())
                .max((dnl - (one - sn * sn * k) / den).norm());

            // Rotation: triple at i u from the complementary modulus.
            let (si, ci, di) = imaginary_transform(u, k).unwrap();
            let (sd, cd, dd) = jacobi(u * C64::new(0.0, 1.0), k).unwrap();
            worst_rot = worst_rot
                .max((si - sd).norm())
                .max((ci - cd).norm())
                .max((di - dd).norm());
        }
    }
    println!("\nidentity defects over a complex grid, k in {{0.1, 0.5, 0.9, 0.99}}:");
    println!("  pythagorean pair : {worst_pyth:.3e}  (tolerance {PYTH_TOL:e})");
    println!("  modulus ascent   : {worst_ascent:.3e}  (tolerance {TRANSFORM_TOL:e})");
    println!("  rotation vs direct: {worst_rot:.3e}  (tolerance {TRANSFORM_TOL:e})");
    assert!(worst_pyth <= PYTH_TOL);
    assert!(worst_ascent <= TRANSFORM_TOL);
    assert!(worst_rot <= TRANSFORM_TOL);

    // Pole guard: sn has poles on the lattice 2 m K + (2 n + 1) i K'.
    let k = 0.6;
    let kp = ellip_k_prime(k).unwrap();
    match jacobi(C64::new(0.0, kp), k) {
        Err(Error::PoleProximity { dist, .. }) => {
            println!("\npole guard at i K': refused, distance {dist:.1e}");
        }
        other => panic!("expected a pole rejection, got {other:?}"),
    }
    let near = jacobi(C64::new(1e-6, kp), k).unwrap();
    println!("1e-6 away from the pole: |sn| = {:.3e} (finite, as expected)", near.0.norm());
}
