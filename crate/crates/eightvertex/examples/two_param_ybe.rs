//! Exercise the family with two independent spectral parameters.
//!
//! For this family the middle factor of the three-factor equation is
//! evaluated at the componentwise sum of the outer arguments: with outer
//! pairs (u, v) and (w, y) the middle pair is (u + w, v + y). The example
//! prints residuals over a deterministic grid of quadruples and shows
//! that the sum rule is essential by displaying the residual when the
//! middle pair is replaced by the naive single-argument convention.

use eightvertex::catalog::{Family, FamilyId};
use eightvertex::verify::{embed, ybe_residual_two};
use eightvertex::C64;
use std::collections::BTreeMap;

/// Largest acceptable equation residual for a genuine solution.
const PASS_TOL: f64 = 1e-9;

fn family(gamma: f64) -> Family {
    let mut params = BTreeMap::new();
    params.insert("gamma".to_string(), C64::new(gamma, 0.0));
    Family::new(FamilyId::Ff2Param, params).expect("valid parameters")
}

/// Residual with the WRONG middle argument (pairwise rule ignored).
fn naive_residual(f: &Family, u: C64, v: C64, w: C64, y: C64) -> f64 {
    let r12 = embed(&f.matrix_two(u, v).unwrap(), 12);
    let r13 = embed(&f.matrix_two(u, v).unwrap(), 13); // middle reuses (u, v)
    let r23 = embed(&f.matrix_two(w, y).unwrap(), 23);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    let diff = lhs.max_abs_diff(&rhs);
    diff / f64::max(1.0, lhs.max_abs())
}

fn main() {
    let f = family(0.4);
    println!("family {} (tag {})", f.id().name(), f.id().equation_tag());
    println!(
        "{:>6} {:>6} {:>6} {:>6} {:>13} {:>13}",
        "u", "v", "w", "y", "sum rule", "naive middle"
    );
    let grid = [
        (0.31, 0.11, -0.22, 0.07),
        (0.17, -0.09, 0.41, 0.13),
        (-0.25, 0.21, 0.19, -0.31),
        (0.45, 0.05, 0.33, 0.27),
    ];
    let mut worst: f64 = 0.0;
    for (u, v, w, y) in grid {
        let (cu, cv, cw, cy) = (
            C64::new(u, 0.0),
            C64::new(v, 0.0),
            C64::new(w, 0.0),
            C64::new(y, 0.0),
        );
        let good = ybe_residual_two(&f, cu, cv, cw, cy).expect("residual");
        let bad = naive_residual(&f, cu, cv, cw, cy);
        worst = worst.max(good);
        println!("{u:>6.2} {v:>6.2} {w:>6.2} {y:>6.2} {good:>13.3e} {bad:>13.3e}");
        assert!(good <= PASS_TOL, "sum-rule residual {good:e} too large");
        assert!(bad > 1e-3, "naive middle argument should not satisfy the equation");
    }
    println!("\nworst sum-rule residual: {worst:.3e} (tolerance {PASS_TOL:e})");
    println!("the equation holds only with the pairwise-sum middle argument");

    // The weights themselves: diagonal profile in the first parameter,
    // corner profile in the second.
    let ws = f.eval_two(C64::new(0.3, 0.0), C64::new(0.2, 0.0)).unwrap();
    println!("\nweights at (u, v) = (0.3, 0.2):");
    let names = ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"];
    for (name, value) in names.iter().zip(ws.as_array().iter()) {
        if value.im.abs() < 1e-12 {
            println!("  {name} = {:+.12}", value.re);
        } else {
            println!("  {name} = {:+.12}{:+.12}i", value.re, value.im);
        }
    }
}
