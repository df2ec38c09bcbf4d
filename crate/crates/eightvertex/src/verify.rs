//! Direct numerical verification of the Yang-Baxter equation, unitarity,
//! the free-fermion quadratic, and the per-branch constraint identities,
//! plus seeded sweep reports with a stable JSON/CSV rendering.
//!
//! The central check is the braid consistency condition on three qubits:
//!
//! ```text
//! R_12(u) R_13(u + w) R_23(w)  =  R_23(w) R_13(u + w) R_12(u)
//! ```
//!
//! with the residual measured as a max-norm difference normalized by
//! `max(1, |LHS|_max)`. The two-parameter variant replaces the arguments
//! by pairs, with the middle factor at `(u + w, v + y)`.

use crate::catalog::{Family, VertexWeights};
use crate::classify::{classify_family, sample_grid, Branch, ClassInvariants, ClassLabel};
use crate::linalg::{embed_two_qubit, perm_p4, CMat};
use crate::{C64, Error, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

/// Default residual tolerance for a verification verdict.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Matrix elements above this magnitude mark a sample as too close to a
/// pole to be numerically meaningful.
const ELEMENT_CAP: f64 = 1e8;
/// Maximum rejection-sampling attempts per accepted sample.
const MAX_ATTEMPTS: usize = 1000;

/// Embed a two-qubit operator into the three-qubit space at the given
/// slot (12, 13 or 23). Qubit 0 is the most significant tensor factor.
pub fn embed(r: &CMat, slot: u8) -> CMat {
    assert_eq!((r.n_rows, r.n_cols), (4, 4), "embed expects a 4x4 operator");
    match slot {
        12 => r.kron(&CMat::identity(2)),
        23 => CMat::identity(2).kron(r),
        13 => embed_two_qubit(r, 3, 0, 2),
        _ => panic!("embed slot must be 12, 13 or 23, got {slot}"),
    }
}

/// Yang-Baxter residual for three explicit 4x4 factors already evaluated
/// at `u`, `u + w` and `w`.
pub fn ybe_residual_mats(r_u: &CMat, r_uw: &CMat, r_w: &CMat) -> f64 {
    let lhs = embed(r_u, 12).mul(&embed(r_uw, 13)).mul(&embed(r_w, 23));
    let rhs = embed(r_w, 23).mul(&embed(r_uw, 13)).mul(&embed(r_u, 12));
    lhs.max_abs_diff(&rhs) / f64::max(1.0, lhs.max_abs())
}

/// Yang-Baxter residual of a one-parameter family at spectral points (u, w).
pub fn ybe_residual(fam: &Family, u: C64, w: C64) -> Result<f64> {
    let r_u = fam.matrix(u)?;
    let r_uw = fam.matrix(u + w)?;
    let r_w = fam.matrix(w)?;
    Ok(ybe_residual_mats(&r_u, &r_uw, &r_w))
}

/// Yang-Baxter residual of a two-parameter family: factors at (u, v),
/// (u + w, v + y) and (w, y).
pub fn ybe_residual_two(fam: &Family, u: C64, v: C64, w: C64, y: C64) -> Result<f64> {
    let r12 = fam.matrix_two(u, v)?;
    let r13 = fam.matrix_two(u + w, v + y)?;
    let r23 = fam.matrix_two(w, y)?;
    Ok(ybe_residual_mats(&r12, &r13, &r23))
}

/// Residual after multiplying one weight (index into
/// [a1, a2, b1, b2, c1, c2, d1, d2]) by `1 + bump` in all three factors.
/// Used as a sensitivity control: a genuine solution must lose the
/// identity under such a perturbation.
pub fn corrupted_residual(
    fam: &Family,
    u: C64,
    w: C64,
    element: usize,
    bump: f64,
) -> Result<f64> {
    assert!(element < 8, "weight index must be 0..8");
    let corrupt = |z: C64| -> Result<CMat> {
        let mut arr = fam.eval(z)?.as_array();
        arr[element] *= C64::new(1.0 + bump, 0.0);
        Ok(VertexWeights {
            a1: arr[0],
            a2: arr[1],
            b1: arr[2],
            b2: arr[3],
            c1: arr[4],
            c2: arr[5],
            d1: arr[6],
            d2: arr[7],
        }
        .to_matrix())
    };
    Ok(ybe_residual_mats(&corrupt(u)?, &corrupt(u + w)?, &corrupt(w)?))
}

/// Deviation of R(u) P R(-u) P from a multiple of the identity, normalized
/// by that multiple. Zero for families satisfying the inversion relation.
pub fn unitarity_defect(fam: &Family, u: C64) -> Result<f64> {
    let p = perm_p4();
    let m = fam.matrix(u)?.mul(&p).mul(&fam.matrix(-u)?).mul(&p);
    let tr = m.trace() / 4.0;
    if tr.norm() <= 1e-12 * f64::max(1.0, m.max_abs()) {
        return Err(Error::Numerical(
            "inversion product has vanishing trace; normalization is degenerate".into(),
        ));
    }
    let deviation = m.sub(&CMat::identity(4).scale(tr)).max_abs();
    Ok(deviation / tr.norm())
}

/// The free-fermion quadratic |a1 a2 + b1 b2 - c1 c2 - d1 d2|, unnormalized.
pub fn free_fermion_defect(w: &VertexWeights) -> f64 {
    (w.a1 * w.a2 + w.b1 * w.b2 - w.c1 * w.c2 - w.d1 * w.d2).norm()
}

/// Pointwise defects of the algebraic laws implied by estimated constants
/// and the branch label: the c-ratio exponential law, the b- and d-ratio
/// laws, and the per-branch quadratic identity.
pub fn constraint_defects(
    w: &VertexWeights,
    u: C64,
    inv: &ClassInvariants,
    label: &ClassLabel,
) -> BTreeMap<String, f64> {
    let mut out = BTreeMap::new();
    if let Some(alpha) = inv.alpha {
        out.insert("c_law".into(), (w.c1 - (alpha * u).exp() * w.c2).norm());
    }
    if let Some(b0) = inv.b0_six {
        out.insert("b_ratio".into(), (w.b1 - b0 * w.b2).norm());
    }
    if let Some(d0) = inv.d0 {
        out.insert("d_ratio".into(), (w.d2 - d0 * w.d1).norm());
    }
    match (label.vertex_count, label.branch) {
        (6, Branch::Star) => {
            if let Some(delta) = inv.delta {
                out.insert(
                    "quad_star".into(),
                    (w.a1 * w.a2 + w.b1 * w.b2 - w.c1 * w.c2 - delta * w.a1 * w.b2).norm(),
                );
            }
        }
        (6, Branch::StarStar) => {
            out.insert(
                "quad_starstar".into(),
                (w.a2 * w.a1 - (w.c1 * w.c2 - w.b1 * w.b2)).norm(),
            );
        }
        (8, Branch::Star) => match label.sub {
            Some(1) => {
                if let Some(d8) = inv.delta8 {
                    out.insert(
                        "quad_star".into(),
                        (w.a1 * w.a2 + w.b1 * w.b2
                            - w.c1 * w.c2
                            - w.d1 * w.d2
                            - d8 * w.a1 * w.b1 * 2.0)
                            .norm(),
                    );
                }
                if let Some(x) = inv.x {
                    out.insert("x_law".into(), (w.a1 * w.b1 - x * w.c1 * w.d1).norm());
                }
            }
            Some(_) => {
                out.insert("quad_star".into(), free_fermion_defect(w));
            }
            None => {}
        },
        (8, Branch::StarStar) => {
            out.insert(
                "quad_starstar".into(),
                (w.a2 * w.a1 - w.d1 * w.d2 - (w.c1 * w.c2 - w.b1 * w.b2)).norm(),
            );
        }
        _ => {}
    }
    out
}

/// Configuration of a randomized verification sweep.
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub samples: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            samples: 20,
            seed: 42,
            tolerance: DEFAULT_TOL,
        }
    }
}

/// One verified spectral sample; complex numbers render as [re, im].
#[derive(Clone, Debug, Serialize)]
pub struct SampleRow {
    pub u: [f64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<[f64; 2]>,
    pub w: [f64; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<[f64; 2]>,
    pub residual: f64,
}

/// Full result of a seeded sweep over random spectral points.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub family: String,
    pub equation_tag: String,
    pub params: BTreeMap<String, [f64; 2]>,
    pub seed: u64,
    pub tolerance: f64,
    pub samples: Vec<SampleRow>,
    pub max_residual: f64,
    pub verdict: String,
    pub classification: Option<ClassLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification_error: Option<String>,
    pub invariant_defects: BTreeMap<String, f64>,
}

impl VerificationReport {
    /// Deterministic pretty JSON: struct fields in declaration order,
    /// map keys sorted.
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// CSV table of the sampled points. One-parameter sweeps emit
    /// `u_re,u_im,w_re,w_im,residual`; two-parameter sweeps insert the
    /// v and y columns.
    pub fn to_csv(&self) -> String {
        let two = self.samples.iter().any(|s| s.v.is_some());
        let mut out = String::new();
        if two {
            out.push_str("u_re,u_im,v_re,v_im,w_re,w_im,y_re,y_im,residual\n");
        } else {
            out.push_str("u_re,u_im,w_re,w_im,residual\n");
        }
        for s in &self.samples {
            if two {
                let v = s.v.unwrap_or([0.0, 0.0]);
                let y = s.y.unwrap_or([0.0, 0.0]);
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{:e}\n",
                    s.u[0], s.u[1], v[0], v[1], s.w[0], s.w[1], y[0], y[1], s.residual
                ));
            } else {
                out.push_str(&format!(
                    "{},{},{},{},{:e}\n",
                    s.u[0], s.u[1], s.w[0], s.w[1], s.residual
                ));
            }
        }
        out
    }
}

fn draw(rng: &mut ChaCha8Rng) -> C64 {
    // Order matters for determinism: real part first.
    let re = rng.gen_range(-1.0..=1.0);
    let im = rng.gen_range(-0.5..=0.5);
    C64::new(re, im)
}

fn finite(m: &CMat) -> bool {
    m.data.iter().all(|z| z.re.is_finite() && z.im.is_finite()) && m.max_abs() <= ELEMENT_CAP
}

fn sample_one(fam: &Family, rng: &mut ChaCha8Rng, two: bool) -> Result<SampleRow> {
    for _ in 0..MAX_ATTEMPTS {
        let u = draw(rng);
        let w = draw(rng);
        if two {
            let v = draw(rng);
            let y = draw(rng);
            let mats = (
                fam.matrix_two(u, v),
                fam.matrix_two(u + w, v + y),
                fam.matrix_two(w, y),
            );
            if let (Ok(a), Ok(b), Ok(c)) = mats {
                if finite(&a) && finite(&b) && finite(&c) {
                    let residual = ybe_residual_mats(&a, &b, &c);
                    if residual.is_finite() {
                        return Ok(SampleRow {
                            u: [u.re, u.im],
                            v: Some([v.re, v.im]),
                            w: [w.re, w.im],
                            y: Some([y.re, y.im]),
                            residual,
                        });
                    }
                }
            }
        } else {
            let mats = (fam.matrix(u), fam.matrix(u + w), fam.matrix(w));
            if let (Ok(a), Ok(b), Ok(c)) = mats {
                if finite(&a) && finite(&b) && finite(&c) {
                    let residual = ybe_residual_mats(&a, &b, &c);
                    if residual.is_finite() {
                        return Ok(SampleRow {
                            u: [u.re, u.im],
                            v: None,
                            w: [w.re, w.im],
                            y: None,
                            residual,
                        });
                    }
                }
            }
        }
    }
    Err(Error::Numerical(format!(
        "no usable spectral sample for {} after {MAX_ATTEMPTS} attempts",
        fam.id().name()
    )))
}

/// Run a seeded randomized sweep: `cfg.samples` spectral points drawn
/// uniformly from the box |Re| <= 1, |Im| <= 0.5 with rejection of
/// pole-adjacent draws, plus grid-based classification and constraint
/// defects for one-parameter families.
pub fn sweep(fam: &Family, cfg: &SweepConfig) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let two = fam.id().is_two_param();
    let mut samples = Vec::with_capacity(cfg.samples);
    for _ in 0..cfg.samples {
        samples.push(sample_one(fam, &mut rng, two)?);
    }
    let max_residual = samples.iter().map(|s| s.residual).fold(0.0, f64::max);
    let verdict = if max_residual <= cfg.tolerance {
        "pass".to_string()
    } else {
        "fail".to_string()
    };
    let mut classification = None;
    let mut classification_error = None;
    let mut invariant_defects = BTreeMap::new();
    if two {
        classification_error =
            Some("classification requires a one-parameter family".to_string());
    } else {
        match classify_family(fam) {
            Ok((inv, label)) => {
                invariant_defects.extend(inv.constancy_defects.clone());
                if let Ok(grid) = sample_grid(fam) {
                    for (u, wts) in &grid {
                        for (name, defect) in constraint_defects(wts, *u, &inv, &label) {
                            let slot = invariant_defects.entry(name).or_insert(0.0);
                            *slot = slot.max(defect);
                        }
                    }
                }
                classification = Some(label);
            }
            Err(e) => classification_error = Some(e.to_string()),
        }
    }
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        family: fam.id().name().to_string(),
        equation_tag: fam.id().equation_tag().to_string(),
        params: fam
            .params()
            .iter()
            .map(|(k, v)| (k.clone(), [v.re, v.im]))
            .collect(),
        seed: cfg.seed,
        tolerance: cfg.tolerance,
        samples,
        max_residual,
        verdict,
        classification,
        classification_error,
        invariant_defects,
    })
}
