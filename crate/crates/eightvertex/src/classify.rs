//! Recovery of classification constants from sampled vertex weights and
//! assignment of the structural branch label.
//!
//! Every eight-vertex Yang-Baxter solution obeys a small set of algebraic
//! identities whose constants (alpha, b0, d0, Delta, DeltaBar, x, ...)
//! are invariant in the spectral parameter. This module estimates those
//! constants from weight samples on a real grid, reports how constant each
//! pointwise estimate actually is, and derives a discrete label: six- or
//! eight-vertex, equal-diagonal (star) or split-diagonal (star-star)
//! branch, the b0 = +/-1 sub-branch where applicable, and tags for the
//! degenerate families with identically vanishing elements.

use crate::catalog::{Family, VertexWeights};
use crate::{C64, Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

/// Real spectral grid used for invariant estimation.
pub const DEFAULT_GRID: [f64; 5] = [0.21, 0.34, 0.47, 0.55, 0.68];

/// Pointwise denominators smaller than this are skipped.
const DENOM_EPS: f64 = 1e-10;
/// A recovered constant whose pointwise spread exceeds this is rejected.
const CONST_TOL: f64 = 1e-7;
/// Relative threshold for "this element is identically zero".
const ZERO_REL: f64 = 1e-10;
/// Relative threshold for "these two element functions are identical".
const EQUAL_REL: f64 = 1e-8;

/// Classification constants with constancy diagnostics. A `None` value
/// means the constant was not estimable: its denominator vanished at too
/// many samples, or the pointwise estimates were not constant (in which
/// case the spread is still recorded in `constancy_defects`).
#[derive(Clone, Debug)]
pub struct ClassInvariants {
    /// Exponent of the c-weight ratio: c1/c2 = e^{alpha u}.
    pub alpha: Option<C64>,
    /// b1/b2 (six-vertex convention).
    pub b0_six: Option<C64>,
    /// b2/b1 (eight-vertex convention).
    pub b0_eight: Option<C64>,
    /// d2/d1.
    pub d0: Option<C64>,
    /// (a1 a2 + b1 b2 - c1 c2) / (a1 b2).
    pub delta: Option<C64>,
    /// (a1 a2 + b1 b2 - c1 c2 - d1 d2) / (2 a1 b1).
    pub delta8: Option<C64>,
    /// (a1 - a2) / b1.
    pub delta_bar: Option<C64>,
    /// a1 b1 / (c1 d1).
    pub x: Option<C64>,
    /// (a1^2 + b1^2 - c1^2 - d1 d2) / (a1 b1).
    pub czg: Option<C64>,
    /// Max pointwise deviation from the mean, per estimable constant.
    pub constancy_defects: BTreeMap<String, f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Equal diagonal: a1 = a2 pointwise.
    Star,
    /// Split diagonal: a1 != a2 with (a1 - a2)/b1 constant (or the
    /// degenerate cases with vanishing or constant elements).
    StarStar,
}

/// Discrete structural label of a solution.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClassLabel {
    pub vertex_count: u8,
    pub branch: Branch,
    /// +1 or -1: the b2/b1 sign of the eight-vertex equal-diagonal branch.
    /// Present only when vertex_count = 8, branch = Star and the b-weights
    /// do not vanish identically.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sub: Option<i8>,
    /// Degeneracy tag, e.g. "b=0" or "b1=0,d=0".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exceptional_tag: Option<String>,
}

fn complex_json(v: &Option<C64>) -> serde_json::Value {
    match v {
        Some(z) => serde_json::json!([z.re, z.im]),
        None => serde_json::Value::Null,
    }
}

impl ClassInvariants {
    /// Stable JSON rendering: complex values as [re, im], absent constants
    /// as null; keys are sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": complex_json(&self.alpha),
            "b0_six": complex_json(&self.b0_six),
            "b0_eight": complex_json(&self.b0_eight),
            "d0": complex_json(&self.d0),
            "Delta": complex_json(&self.delta),
            "Delta8": complex_json(&self.delta8),
            "DeltaBar": complex_json(&self.delta_bar),
            "x": complex_json(&self.x),
            "czg": complex_json(&self.czg),
            "constancy_defects": self.constancy_defects,
        })
    }
}

/// Mean of pointwise ratio estimates with a constancy gate. Samples where
/// the denominator is below `DENOM_EPS` are skipped; fewer than 3 usable
/// samples gives `None` silently; a pointwise spread above `CONST_TOL`
/// gives `None` with the spread recorded.
fn ratio_constant<F>(
    name: &str,
    samples: &[(C64, VertexWeights)],
    f: F,
    defects: &mut BTreeMap<String, f64>,
) -> Option<C64>
where
    F: Fn(&VertexWeights) -> (C64, C64),
{
    let mut ests: Vec<C64> = Vec::new();
    for (_, w) in samples {
        let (num, den) = f(w);
        if den.norm() < DENOM_EPS {
            continue;
        }
        ests.push(num / den);
    }
    if ests.len() < 3 {
        return None;
    }
    let mean = ests.iter().sum::<C64>() / ests.len() as f64;
    let spread = ests.iter().map(|e| (e - mean).norm()).fold(0.0, f64::max);
    defects.insert(name.to_string(), spread);
    if spread > CONST_TOL {
        None
    } else {
        Some(mean)
    }
}

/// Least-squares fit of log(c1/c2) = alpha u + const, with the logarithm
/// branch unwrapped along the samples sorted by Re(u).
fn fit_alpha(
    samples: &[(C64, VertexWeights)],
    defects: &mut BTreeMap<String, f64>,
) -> Option<C64> {
    let mut pts: Vec<(C64, C64)> = Vec::new();
    for (u, w) in samples {
        if w.c2.norm() < DENOM_EPS {
            continue;
        }
        pts.push((*u, w.c1 / w.c2));
    }
    if pts.len() < 3 {
        return None;
    }
    pts.sort_by(|a, b| a.0.re.partial_cmp(&b.0.re).unwrap());
    let mut logs: Vec<(C64, C64)> = Vec::with_capacity(pts.len());
    let mut prev_im: Option<f64> = None;
    for (u, r) in pts {
        if r.norm() < DENOM_EPS {
            continue;
        }
        let mut l = r.ln();
        if let Some(p) = prev_im {
            let two_pi = std::f64::consts::TAU;
            let k = ((p - l.im) / two_pi).round();
            l.im += k * two_pi;
        }
        prev_im = Some(l.im);
        logs.push((u, l));
    }
    if logs.len() < 3 {
        return None;
    }
    // Normal equations of the 2-unknown complex fit l = alpha u + beta.
    let n = C64::new(logs.len() as f64, 0.0);
    let su: C64 = logs.iter().map(|(u, _)| u).sum();
    let suu: C64 = logs.iter().map(|(u, _)| u * u).sum();
    let sl: C64 = logs.iter().map(|(_, l)| l).sum();
    let sul: C64 = logs.iter().map(|(u, l)| u * l).sum();
    let det = suu * n - su * su;
    if det.norm() < 1e-14 {
        return None;
    }
    let alpha = (sul * n - su * sl) / det;
    let beta = (suu * sl - su * sul) / det;
    let spread = logs
        .iter()
        .map(|(u, l)| (l - (alpha * u + beta)).norm())
        .fold(0.0, f64::max);
    defects.insert("alpha".to_string(), spread);
    if spread > CONST_TOL {
        None
    } else {
        Some(alpha)
    }
}

/// Estimate all classification constants from weight samples.
pub fn estimate_invariants(samples: &[(C64, VertexWeights)]) -> Result<ClassInvariants> {
    if samples.len() < 5 {
        return Err(Error::InsufficientData(format!(
            "invariant estimation needs at least 5 samples, got {}",
            samples.len()
        )));
    }
    let mut defects = BTreeMap::new();
    let alpha = fit_alpha(samples, &mut defects);
    let b0_six = ratio_constant("b0_six", samples, |w| (w.b1, w.b2), &mut defects);
    let b0_eight = ratio_constant("b0_eight", samples, |w| (w.b2, w.b1), &mut defects);
    let d0 = ratio_constant("d0", samples, |w| (w.d2, w.d1), &mut defects);
    let delta = ratio_constant(
        "Delta",
        samples,
        |w| (w.a1 * w.a2 + w.b1 * w.b2 - w.c1 * w.c2, w.a1 * w.b2),
        &mut defects,
    );
    let delta8 = ratio_constant(
        "Delta8",
        samples,
        |w| {
            (
                w.a1 * w.a2 + w.b1 * w.b2 - w.c1 * w.c2 - w.d1 * w.d2,
                w.a1 * w.b1 * 2.0,
            )
        },
        &mut defects,
    );
    let delta_bar = ratio_constant("DeltaBar", samples, |w| (w.a1 - w.a2, w.b1), &mut defects);
    let x = ratio_constant("x", samples, |w| (w.a1 * w.b1, w.c1 * w.d1), &mut defects);
    let czg = ratio_constant(
        "czg",
        samples,
        |w| {
            (
                w.a1 * w.a1 + w.b1 * w.b1 - w.c1 * w.c1 - w.d1 * w.d2,
                w.a1 * w.b1,
            )
        },
        &mut defects,
    );
    Ok(ClassInvariants {
        alpha,
        b0_six,
        b0_eight,
        d0,
        delta,
        delta8,
        delta_bar,
        x,
        czg,
        constancy_defects: defects,
    })
}

const ELEMENT_NAMES: [&str; 8] = ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2"];

/// Assign the discrete branch label from estimated invariants and samples.
pub fn classify(
    inv: &ClassInvariants,
    samples: &[(C64, VertexWeights)],
) -> Result<ClassLabel> {
    if samples.len() < 3 {
        return Err(Error::InsufficientData(format!(
            "classification needs at least 3 samples, got {}",
            samples.len()
        )));
    }
    let scale = samples
        .iter()
        .map(|(_, w)| w.max_abs())
        .fold(0.0, f64::max);
    if scale <= 0.0 {
        return Err(Error::Unclassifiable(
            "all weights vanish at every sample".into(),
        ));
    }
    // Per-element max magnitudes and pointwise diagnostics.
    let mut elem_max = [0.0f64; 8];
    let mut a_diff = 0.0f64;
    let mut elem_spread = [0.0f64; 8];
    let means: Vec<C64> = (0..8)
        .map(|i| {
            samples.iter().map(|(_, w)| w.as_array()[i]).sum::<C64>() / samples.len() as f64
        })
        .collect();
    for (_, w) in samples {
        let arr = w.as_array();
        for i in 0..8 {
            elem_max[i] = elem_max[i].max(arr[i].norm());
            elem_spread[i] = elem_spread[i].max((arr[i] - means[i]).norm());
        }
        a_diff = a_diff.max((w.a1 - w.a2).norm());
    }
    let zero: Vec<bool> = elem_max.iter().map(|m| *m <= ZERO_REL * scale).collect();
    let all_constant = elem_spread.iter().all(|s| *s <= EQUAL_REL * scale);
    let six = zero[6] && zero[7];
    let star = a_diff <= EQUAL_REL * scale;

    if !star {
        // The split-diagonal branch needs a constant (a1 - a2)/b1, unless the
        // b-weights vanish identically or the whole solution is constant.
        let b_gone = zero[2] && zero[3];
        if inv.delta_bar.is_none() && !b_gone && !all_constant {
            let mut msg = String::from(
                "diagonal weights differ but (a1 - a2)/b1 is not constant; defects:",
            );
            for (k, v) in &inv.constancy_defects {
                msg.push_str(&format!(" {k}={v:.3e}"));
            }
            return Err(Error::Unclassifiable(msg));
        }
    }

    // b0 = +/-1 sub-branch of the eight-vertex equal-diagonal case.
    let mut sub = None;
    if !six && star {
        if let Some(b0) = inv.b0_eight {
            if (b0 - C64::new(1.0, 0.0)).norm() <= 1e-6 {
                sub = Some(1);
            } else if (b0 + C64::new(1.0, 0.0)).norm() <= 1e-6 {
                sub = Some(-1);
            } else if !(zero[2] && zero[3]) {
                let mut msg = format!(
                    "eight-vertex equal-diagonal branch requires b2/b1 = +1 or -1, got {b0}"
                );
                for (k, v) in &inv.constancy_defects {
                    msg.push_str(&format!(" {k}={v:.3e}"));
                }
                return Err(Error::Unclassifiable(msg));
            }
        }
    }

    // Degeneracy tags.
    let exceptional_tag = if zero[2] && zero[3] {
        if six {
            Some("b=0,d=0".to_string())
        } else {
            Some("b=0".to_string())
        }
    } else if six && zero[2] {
        Some("b1=0,d=0".to_string())
    } else {
        let named: Vec<&str> = (0..6).filter(|&i| zero[i]).map(|i| ELEMENT_NAMES[i]).collect();
        if named.is_empty() {
            None
        } else {
            Some(
                named
                    .iter()
                    .map(|n| format!("{n}=0"))
                    .collect::<Vec<_>>()
                    .join(","),
            )
        }
    };

    Ok(ClassLabel {
        vertex_count: if six { 6 } else { 8 },
        branch: if star { Branch::Star } else { Branch::StarStar },
        sub,
        exceptional_tag,
    })
}

/// Evaluate a one-parameter family on the default real grid.
pub fn sample_grid(fam: &Family) -> Result<Vec<(C64, VertexWeights)>> {
    DEFAULT_GRID
        .iter()
        .map(|&u| {
            let z = C64::new(u, 0.0);
            Ok((z, fam.eval(z)?))
        })
        .collect()
}

/// Full pipeline: grid sampling, invariant estimation, labeling.
pub fn classify_family(fam: &Family) -> Result<(ClassInvariants, ClassLabel)> {
    let samples = sample_grid(fam)?;
    let inv = estimate_invariants(&samples)?;
    let label = classify(&inv, &samples)?;
    Ok((inv, label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::FamilyId;
    use std::collections::BTreeMap;

    fn fam(id: FamilyId, pairs: &[(&str, f64)]) -> Family {
        let params: BTreeMap<String, C64> = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), C64::new(*v, 0.0)))
            .collect();
        Family::new(id, params).unwrap()
    }

    fn close(got: Option<C64>, want: C64, tol: f64, what: &str) {
        let g = got.unwrap_or_else(|| panic!("{what}: expected Some, got None"));
        assert!((g - want).norm() <= tol, "{what}: got {g}, want {want}");
    }

    #[test]
    fn six_vertex_constants_recovered() {
        let f = fam(
            FamilyId::XxzTrig,
            &[("u0", 0.9), ("b0", 1.3), ("alpha", 0.2), ("sign1", 1.0)],
        );
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.alpha, C64::new(0.2, 0.0), 1e-8, "alpha");
        close(inv.b0_six, C64::new(1.3, 0.0), 1e-8, "b0_six");
        close(inv.delta, C64::new(1.4174888196, 0.0), 1e-9, "Delta");
        close(inv.delta8, C64::new(0.5451880076, 0.0), 1e-9, "Delta8");
        assert_eq!(label.vertex_count, 6);
        assert_eq!(label.branch, Branch::Star);
        assert_eq!(label.sub, None);
        // Plain b0 = 1 member: Delta = 2 cos(u0).
        let f = fam(
            FamilyId::XxzTrig,
            &[("u0", 0.9), ("b0", 1.0), ("alpha", 0.0), ("sign1", 1.0)],
        );
        let (inv, _) = classify_family(&f).unwrap();
        close(inv.delta, C64::new(1.2432199365, 0.0), 1e-9, "Delta(b0=1)");
        close(inv.delta8, C64::new(0.6216099683, 0.0), 1e-9, "Delta8(b0=1)");
        // Mixed-diagonal branch: DeltaBar = 2 cos(u0).
        let f = fam(
            FamilyId::XxzTrig,
            &[("u0", 0.9), ("b0", 1.0), ("alpha", 0.0), ("sign1", -1.0)],
        );
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.delta_bar, C64::new(1.2432199365, 0.0), 1e-9, "DeltaBar");
        assert_eq!(label.branch, Branch::StarStar);
    }

    #[test]
    fn eight_vertex_constants_recovered() {
        let f = fam(
            FamilyId::XyzElliptic,
            &[("k", 0.5), ("lambda", 0.8), ("gamma", 0.4)],
        );
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.delta8, C64::new(0.6645219575, 0.0), 1e-9, "Delta8");
        close(inv.d0, C64::new(1.4918246976, 0.0), 1e-9, "d0 = e^gamma");
        close(inv.x, C64::new(4.9258578497, 0.0), 1e-9, "x");
        close(inv.czg, C64::new(1.3290439151, 0.0), 1e-9, "czg");
        assert!(inv.delta.is_none(), "Delta must be rejected as non-constant");
        assert!(inv.constancy_defects["Delta"] > CONST_TOL);
        assert_eq!(
            label,
            ClassLabel {
                vertex_count: 8,
                branch: Branch::Star,
                sub: Some(1),
                exceptional_tag: None
            }
        );
    }

    #[test]
    fn split_diagonal_families_recover_delta_bar() {
        let f = fam(
            FamilyId::R1Elliptic,
            &[("k", 0.6), ("u0", 0.7), ("gamma", 0.4), ("sign1", 1.0), ("sign2", 1.0)],
        );
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.delta_bar, C64::new(1.8516517967, 0.0), 1e-9, "R1 DeltaBar");
        close(inv.czg, C64::new(1.8516517967, 0.0), 1e-9, "R1 czg");
        let db = inv.delta_bar.unwrap();
        assert!((db * db - C64::new(3.428614376064, 0.0)).norm() < 1e-8);
        assert_eq!(label.vertex_count, 8);
        assert_eq!(label.branch, Branch::StarStar);
        assert_eq!(label.sub, None);
        let f = fam(
            FamilyId::R2Elliptic,
            &[("k", 0.6), ("u0", 0.7), ("gamma", 0.4), ("sign1", 1.0), ("sign2", 1.0)],
        );
        let (inv, _) = classify_family(&f).unwrap();
        close(inv.delta_bar, C64::new(1.5533247282, 0.0), 1e-9, "R2 DeltaBar");
        let db = inv.delta_bar.unwrap();
        assert!((db * db - C64::new(2.412817711290, 0.0)).norm() < 1e-8);
        // Imaginary-axis family: DeltaBar = czg = 2k, d0 = 1.
        let f = fam(FamilyId::IsingElliptic, &[("k", 0.8)]);
        let (inv, _) = classify_family(&f).unwrap();
        close(inv.delta_bar, C64::new(1.6, 0.0), 1e-9, "Ising DeltaBar");
        close(inv.czg, C64::new(1.6, 0.0), 1e-9, "Ising czg");
        close(inv.d0, C64::new(1.0, 0.0), 1e-9, "Ising d0");
    }

    #[test]
    fn negative_b0_sub_branch() {
        let f = fam(
            FamilyId::FfTrivialRz,
            &[("alpha", 0.3), ("gamma", 0.45), ("sign1", 1.0)],
        );
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.b0_six, C64::new(-1.0, 0.0), 1e-9, "rz b0_six");
        close(inv.d0, C64::new(-2.4596031112, 0.0), 1e-9, "rz d0 = -e^{2 gamma}");
        close(inv.czg, C64::new(2.0, 0.0), 1e-9, "rz czg");
        assert_eq!(label.vertex_count, 8);
        assert_eq!(label.branch, Branch::Star);
        assert_eq!(label.sub, Some(-1));
        let f = fam(
            FamilyId::FfTrig1Param,
            &[("eps", 0.4), ("alpha", 0.3), ("gamma", 0.25)],
        );
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.b0_six, C64::new(-1.0, 0.0), 1e-9, "b0_six");
        close(inv.d0, C64::new(1.2840254167, 0.0), 1e-9, "d0 = e^gamma");
        assert_eq!(label.sub, Some(-1));
    }

    #[test]
    fn degenerate_families_get_tags() {
        let f = fam(FamilyId::RatB1D0, &[("p", 1.0)]);
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.delta, C64::new(0.0, 0.0), 1e-10, "Delta");
        close(inv.b0_six, C64::new(0.0, 0.0), 1e-10, "b0_six");
        assert_eq!(
            label,
            ClassLabel {
                vertex_count: 6,
                branch: Branch::Star,
                sub: None,
                exceptional_tag: Some("b1=0,d=0".into())
            }
        );
        let f = fam(FamilyId::XMinusXz, &[("u0", 0.9), ("gamma", 0.3)]);
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.d0, C64::new(1.8221188004, 0.0), 1e-9, "d0 = e^{2 gamma}");
        close(inv.x, C64::new(0.0, 0.0), 1e-10, "x");
        assert_eq!(
            label,
            ClassLabel {
                vertex_count: 8,
                branch: Branch::Star,
                sub: None,
                exceptional_tag: Some("b=0".into())
            }
        );
        // Purely diagonal family: every ratio constant is unavailable.
        let f = fam(FamilyId::DiagExp, &[("p", 0.5), ("q", -0.5)]);
        let (inv, label) = classify_family(&f).unwrap();
        assert!(inv.d0.is_none());
        assert!(inv.delta.is_none());
        assert!(inv.x.is_none());
        assert_eq!(label.vertex_count, 6);
        assert_eq!(label.branch, Branch::StarStar);
    }

    #[test]
    fn phase_twisted_family_constants() {
        let f = fam(FamilyId::XyzDPm, &[("u0", 0.9), ("eps", 0.5), ("sign1", 1.0)]);
        let (inv, label) = classify_family(&f).unwrap();
        close(
            inv.delta_bar,
            C64::new(0.7727979053, -0.9738476309),
            1e-9,
            "DeltaBar",
        );
        close(
            inv.b0_six,
            C64::new(-0.2272020947, 0.9738476309),
            1e-9,
            "b0_six = e^{2 i u0}",
        );
        close(inv.czg, C64::new(2.0, 0.0), 1e-9, "czg");
        assert_eq!(label.branch, Branch::StarStar);
        let f = fam(FamilyId::XxDTilde, &[("alpha", 0.4), ("eps", 0.5), ("sign1", 1.0)]);
        let (inv, _) = classify_family(&f).unwrap();
        close(inv.b0_six, C64::new(-1.0, 0.0), 1e-9, "b0_six");
        // One-corner deformations: d0 undefined because d1 vanishes.
        let f = fam(FamilyId::XxzD, &[("u0", 0.9), ("eps", 0.5)]);
        let (inv, _) = classify_family(&f).unwrap();
        assert!(inv.d0.is_none());
        close(inv.delta, C64::new(1.2432199365, 0.0), 1e-9, "Delta");
        close(inv.delta8, C64::new(0.6216099683, 0.0), 1e-9, "Delta8");
        let f = fam(FamilyId::XyzD, &[("u0", 0.9), ("eps", 0.5)]);
        let (inv, _) = classify_family(&f).unwrap();
        close(inv.delta_bar, C64::new(1.2432199365, 0.0), 1e-9, "DeltaBar");
    }

    #[test]
    fn corner_elliptic_family_constants() {
        let f = fam(FamilyId::EllB0D, &[("k", 0.6), ("sign1", 1.0), ("sign2", 1.0)]);
        let (inv, label) = classify_family(&f).unwrap();
        close(inv.d0, C64::new(1.0, 0.0), 1e-9, "d0");
        close(inv.x, C64::new(0.0, 0.0), 1e-10, "x");
        assert_eq!(label.vertex_count, 8);
        assert_eq!(label.branch, Branch::StarStar);
        assert_eq!(label.exceptional_tag.as_deref(), Some("b=0"));
        // Hyperbolic exceptional family: d0 = 1, x = 1, czg = 0.
        let f = fam(FamilyId::ExcAEqC, &[("sign1", 1.0), ("gamma", 0.0)]);
        let (inv, _) = classify_family(&f).unwrap();
        close(inv.d0, C64::new(1.0, 0.0), 1e-9, "d0");
        close(inv.x, C64::new(1.0, 0.0), 1e-9, "x");
        close(inv.czg, C64::new(0.0, 0.0), 1e-9, "czg");
        // Anisotropic hopping family: x = e^{gamma/2}/k.
        let f = fam(FamilyId::XyElliptic, &[("k", 0.5), ("gamma", 0.4)]);
        let (inv, _) = classify_family(&f).unwrap();
        close(inv.x, C64::new(2.4428055163, 0.0), 1e-9, "x");
        close(inv.czg, C64::new(0.0, 0.0), 1e-9, "czg");
    }

    #[test]
    fn guards_reject_degenerate_input() {
        let f = fam(FamilyId::ExcAEqC, &[("sign1", 1.0), ("gamma", 0.0)]);
        let samples = sample_grid(&f).unwrap();
        assert!(matches!(
            estimate_invariants(&samples[..4]),
            Err(Error::InsufficientData(_))
        ));
        // A non-constant diagonal split with nonvanishing b cannot be
        // assigned a branch.
        let bad: Vec<(C64, VertexWeights)> = DEFAULT_GRID
            .iter()
            .map(|&t| {
                let u = C64::new(t, 0.0);
                (
                    u,
                    VertexWeights {
                        a1: C64::new(1.0, 0.0),
                        a2: C64::new(1.0 + t * t, 0.0),
                        b1: u,
                        b2: u,
                        c1: C64::new(1.0, 0.0),
                        c2: C64::new(1.0, 0.0),
                        d1: C64::new(0.3, 0.0),
                        d2: C64::new(0.3, 0.0),
                    },
                )
            })
            .collect();
        let inv = estimate_invariants(&bad).unwrap();
        assert!(matches!(classify(&inv, &bad), Err(Error::Unclassifiable(_))));
    }

    #[test]
    fn scalar_renormalization_leaves_invariants_unchanged() {
        let f = fam(
            FamilyId::XyzElliptic,
            &[("k", 0.5), ("lambda", 0.8), ("gamma", 0.4)],
        );
        let samples = sample_grid(&f).unwrap();
        let rescaled: Vec<(C64, VertexWeights)> = samples
            .iter()
            .map(|(u, w)| {
                let s = (u * C64::new(0.3, 0.1)).exp() * 1.7;
                let arr = w.as_array();
                (
                    *u,
                    VertexWeights {
                        a1: arr[0] * s,
                        a2: arr[1] * s,
                        b1: arr[2] * s,
                        b2: arr[3] * s,
                        c1: arr[4] * s,
                        c2: arr[5] * s,
                        d1: arr[6] * s,
                        d2: arr[7] * s,
                    },
                )
            })
            .collect();
        let i1 = estimate_invariants(&samples).unwrap();
        let i2 = estimate_invariants(&rescaled).unwrap();
        for (a, b, name) in [
            (i1.d0, i2.d0, "d0"),
            (i1.delta8, i2.delta8, "Delta8"),
            (i1.x, i2.x, "x"),
            (i1.czg, i2.czg, "czg"),
            (i1.b0_eight, i2.b0_eight, "b0_eight"),
        ] {
            let (a, b) = (a.unwrap(), b.unwrap());
            assert!((a - b).norm() < 1e-10, "{name} changed under rescaling");
        }
    }
}
