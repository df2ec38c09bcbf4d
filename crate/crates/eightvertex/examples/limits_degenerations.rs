//! Reproduce three degeneration limits connecting catalog families.
//!
//! Each limit evaluates a source family at extreme parameters and
//! compares its weights elementwise against a target family:
//!   A. split-diagonal variant two at modulus k -> 0 with a compensating
//!      corner twist e^gamma = (e^eps / (k sin u0))^2 approaches the
//!      corner-deformed eight-vertex family (after rescaling by sin u0);
//!   B. split-diagonal variant one at u0 = K(k), k -> 1 approaches the
//!      constant-diagonal hyperbolic family, one corner sign per sign2;
//!   C. split-diagonal variant two at u0 = i K' + h, evaluated through
//!      the modulus ascent k -> 2 sqrt(k)/(1+k), approaches the b = 0
//!      corner family.

use eightvertex::catalog::{Family, FamilyId, VertexWeights};
use eightvertex::elliptic::{ellip_k, ellip_k_prime};
use eightvertex::C64;
use std::collections::BTreeMap;

/// Elementwise agreement bound for limits A and B.
const LIMIT_TOL_AB: f64 = 1e-4;
/// Elementwise agreement bound for limit C.
const LIMIT_TOL_C: f64 = 1e-5;
/// Spectral probe points for every comparison.
const PROBES: [f64; 3] = [0.23, 0.41, -0.17];

fn fam_c(id: FamilyId, pairs: &[(&str, C64)]) -> Family {
    let map: BTreeMap<String, C64> = pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    Family::new(id, map).expect("valid parameters")
}

fn fam(id: FamilyId, pairs: &[(&str, f64)]) -> Family {
    let cpairs: Vec<(&str, C64)> = pairs
        .iter()
        .map(|(k, v)| (*k, C64::new(*v, 0.0)))
        .collect();
    fam_c(id, &cpairs)
}

fn weight_diff(a: &VertexWeights, scale: C64, b: &VertexWeights) -> f64 {
    a.as_array()
        .iter()
        .zip(b.as_array().iter())
        .map(|(x, y)| (x * scale - y).norm())
        .fold(0.0, f64::max)
}

fn main() {
    // Limit A.
    let (u0, eps, k_small): (f64, f64, f64) = (0.9, 0.5, 1e-6);
    let gamma = 2.0 * (eps - k_small.ln() - u0.sin().ln());
    let source = fam(
        FamilyId::R2Elliptic,
        &[("k", k_small), ("u0", u0), ("gamma", gamma), ("sign1", 1.0), ("sign2", 1.0)],
    );
    let target = fam(FamilyId::XyzD, &[("u0", u0), ("eps", eps)]);
    let mut worst: f64 = 0.0;
    for &u in &PROBES {
        let a = source.eval(C64::new(u, 0.0)).unwrap();
        let b = target.eval(C64::new(u, 0.0)).unwrap();
        worst = worst.max(weight_diff(&a, C64::new(u0.sin(), 0.0), &b));
    }
    println!(
        "A. {} (k = 1e-6, twisted) -> {}: max elementwise diff {worst:.3e}",
        source.id().name(),
        target.id().name()
    );
    assert!(worst <= LIMIT_TOL_AB);

    // Limit B.
    let k1 = 1.0 - 1e-10;
    let big_k = ellip_k(k1).unwrap();
    for s2 in [1.0, -1.0] {
        let source = fam(
            FamilyId::R1Elliptic,
            &[("k", k1), ("u0", big_k), ("gamma", 0.0), ("sign1", 1.0), ("sign2", s2)],
        );
        let target = fam(FamilyId::ExcAEqC, &[("sign1", s2), ("gamma", 0.0)]);
        let mut worst: f64 = 0.0;
        for &u in &PROBES {
            let a = source.eval(C64::new(u, 0.0)).unwrap();
            let b = target.eval(C64::new(u, 0.0)).unwrap();
            worst = worst.max(weight_diff(&a, C64::new(1.0, 0.0), &b));
        }
        println!(
            "B. {} (u0 = K, k = 1-1e-10, sign2 = {s2:+.0}) -> {} (corner sign {s2:+.0}): \
             max elementwise diff {worst:.3e}",
            source.id().name(),
            target.id().name()
        );
        assert!(worst <= LIMIT_TOL_AB);
    }

    // Limit C.
    let kel: f64 = 0.4;
    let kappa = 2.0 * kel.sqrt() / (1.0 + kel);
    let u0c = C64::new(1e-7, ellip_k_prime(kappa).unwrap());
    for s1 in [1.0, -1.0] {
        let source = fam_c(
            FamilyId::R2Elliptic,
            &[
                ("k", C64::new(kappa, 0.0)),
                ("u0", u0c),
                ("gamma", C64::new(0.0, 0.0)),
                ("sign1", C64::new(s1, 0.0)),
                ("sign2", C64::new(1.0, 0.0)),
            ],
        );
        let target = fam(FamilyId::EllB0D, &[("k", kel), ("sign1", 1.0), ("sign2", -s1)]);
        let mut worst: f64 = 0.0;
        for &w in &PROBES {
            let v = C64::new((1.0 + kel) * w / 2.0, 0.0);
            let a = source.eval(v).unwrap();
            let b = target.eval(C64::new(w, 0.0)).unwrap();
            worst = worst.max(weight_diff(&a, C64::new(1.0, 0.0), &b));
        }
        println!(
            "C. {} (u0 = iK'+1e-7, ascended modulus, sign1 = {s1:+.0}) -> {} \
             (diagonal sign {:+.0}): max elementwise diff {worst:.3e}",
            source.id().name(),
            target.id().name(),
            -s1
        );
        assert!(worst <= LIMIT_TOL_C);
    }
    println!("\nall three degenerations reproduce their targets");
}
