//! Estimate classification constants for every catalog family and print
//! the resulting branch labels.
//!
//! For each parameter set the weights are sampled on a fixed spectral
//! grid and the constancy of several weight ratios is tested:
//!   alpha  growth rate of c1/c2
//!   b0     b1/b2 (six-vertex) or its eight-vertex analog
//!   d0     d2/d1
//!   Delta  six-vertex anisotropy combination
//!   Delta8, DeltaBar, x, czg   eight-vertex combinations
//! Ratios that are not constant over the grid are reported as absent
//! rather than averaged, so the printed label never hides a defect.

use eightvertex::catalog::registry;
use eightvertex::classify::{classify_family, Branch};
use eightvertex::C64;

fn fmt_opt(v: Option<C64>) -> String {
    match v {
        None => "-".to_string(),
        Some(z) if z.im.abs() < 1e-9 => format!("{:+.4}", z.re),
        Some(z) => format!("{:+.3}{:+.3}i", z.re, z.im),
    }
}

fn main() {
    println!(
        "{:<18} {:>3} {:<9} {:>5} {:>8} {:>8} {:>8} {:>8}  {}",
        "family", "nv", "branch", "sub", "b0", "d0", "DeltaBar", "czg", "tag/exceptional"
    );
    for entry in registry() {
        let member = &entry.members[0];
        if member.id().is_two_param() {
            println!(
                "{:<18} (two spectral parameters; classified via its effective ray)",
                entry.id.name()
            );
            continue;
        }
        match classify_family(member) {
            Ok((inv, label)) => {
                let b0 = if inv.b0_six.is_some() { inv.b0_six } else { inv.b0_eight };
                println!(
                    "{:<18} {:>3} {:<9} {:>5} {:>8} {:>8} {:>8} {:>8}  {}",
                    entry.id.name(),
                    label.vertex_count,
                    match label.branch {
                        Branch::Star => "star",
                        Branch::StarStar => "star-star",
                    },
                    label
                        .sub
                        .map(|s| format!("{s:+}"))
                        .unwrap_or_else(|| "-".to_string()),
                    fmt_opt(b0),
                    fmt_opt(inv.d0),
                    fmt_opt(inv.delta_bar),
                    fmt_opt(inv.czg),
                    label.exceptional_tag.unwrap_or_default(),
                );
            }
            Err(e) => println!("{:<18} classification error: {e}", entry.id.name()),
        }
    }

    // Two worked invariant round-trips with closed forms.
    println!("\nround trips:");
    let xxz = &registry()[0].members[0]; // u0 = 0.9, b0 = 1, alpha = 0
    let (inv, _) = classify_family(xxz).unwrap();
    let delta = inv.delta.expect("Delta");
    println!(
        "  six-vertex anisotropy Delta/2 = {:+.12}   cos(u0) = {:+.12}",
        delta.re / 2.0,
        0.9f64.cos()
    );
    assert!((delta.re / 2.0 - 0.9f64.cos()).abs() < 1e-8);

    let xyz = &registry()[1].members[0]; // k = 0.5, lambda = 0.8
    let (inv, _) = classify_family(xyz).unwrap();
    let czg = inv.czg.expect("czg");
    let (_, cn, dn) = eightvertex::elliptic::jacobi(C64::new(0.8, 0.0), 0.5).unwrap();
    println!(
        "  eight-vertex combination czg = {:+.12}   2 cn dn = {:+.12}",
        czg.re,
        2.0 * (cn * dn).re
    );
    assert!((czg - cn * dn * 2.0).norm() < 1e-8);
}
