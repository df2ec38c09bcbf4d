//! Catalog of spectral-parameter-dependent R-matrix families with
//! eight-vertex structure.
//!
//! Every family produces a 4x4 operator on two qubits whose only allowed
//! nonzero entries follow the eight-vertex pattern: two diagonal pairs
//! (a1, a2), (b1, b2), an inner anti-diagonal pair (c1, c2) and an outer
//! anti-diagonal pair (d1, d2). The catalog stores closed-form weight
//! functions of a complex spectral parameter, canonical parameter sets
//! that are known-good for regression sweeps, and the gauge / coupling
//! transformations that act on the weights.

use crate::linalg::CMat;
use crate::{elliptic, C64, Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const IM: C64 = C64::new(0.0, 1.0);

/// Threshold below which a required denominator counts as singular.
const SINGULAR_EPS: f64 = 1e-12;

/// The eight vertex weights of an R-matrix.
///
/// Operator layout (rows = outgoing pair state, columns = incoming, basis
/// order 00, 01, 10, 11):
///
/// ```text
///   [ a1  .   .   d2 ]
///   [ .   b1  c2  .  ]
///   [ .   c1  b2  .  ]
///   [ d1  .   .   a2 ]
/// ```
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VertexWeights {
    pub a1: C64,
    pub a2: C64,
    pub b1: C64,
    pub b2: C64,
    pub c1: C64,
    pub c2: C64,
    pub d1: C64,
    pub d2: C64,
}

impl VertexWeights {
    pub fn to_matrix(&self) -> CMat {
        let mut m = CMat::zeros(4, 4);
        m.set(0, 0, self.a1);
        m.set(0, 3, self.d2);
        m.set(1, 1, self.b1);
        m.set(1, 2, self.c2);
        m.set(2, 1, self.c1);
        m.set(2, 2, self.b2);
        m.set(3, 0, self.d1);
        m.set(3, 3, self.a2);
        m
    }

    /// Inverse of `to_matrix`. Entries outside the eight-vertex pattern
    /// must vanish (relative to the largest entry), otherwise the offending
    /// position is reported.
    pub fn from_matrix(m: &CMat) -> Result<VertexWeights> {
        assert_eq!((m.n_rows, m.n_cols), (4, 4));
        let scale = m.max_abs().max(1.0);
        const PATTERN: [(usize, usize); 8] =
            [(0, 0), (0, 3), (1, 1), (1, 2), (2, 1), (2, 2), (3, 0), (3, 3)];
        for r in 0..4 {
            for c in 0..4 {
                if PATTERN.contains(&(r, c)) {
                    continue;
                }
                if m.get(r, c).norm() > 1e-12 * scale {
                    return Err(Error::PatternViolation { row: r, col: c });
                }
            }
        }
        Ok(VertexWeights {
            a1: m.get(0, 0),
            a2: m.get(3, 3),
            b1: m.get(1, 1),
            b2: m.get(2, 2),
            c1: m.get(2, 1),
            c2: m.get(1, 2),
            d1: m.get(3, 0),
            d2: m.get(0, 3),
        })
    }

    pub fn as_array(&self) -> [C64; 8] {
        [self.a1, self.a2, self.b1, self.b2, self.c1, self.c2, self.d1, self.d2]
    }

    pub fn max_abs(&self) -> f64 {
        self.as_array().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Rescale the outer anti-diagonal pair: d1 -> e^{gamma/2} d1,
/// d2 -> e^{-gamma/2} d2. This twist preserves the Yang-Baxter property
/// and the free-fermion combination d1 d2.
pub fn gauge_twist(w: &VertexWeights, gamma: C64) -> VertexWeights {
    let mut out = *w;
    out.d1 = w.d1 * (gamma / 2.0).exp();
    out.d2 = w.d2 * (-gamma / 2.0).exp();
    out
}

/// Anisotropy couplings (J1, J2) of the checkerboard lattice model
/// attached to the elliptic self-dual family: solves
/// e^{2 J1} = cn(iu, k) + i sn(iu, k) and
/// e^{2 J2} = i (dn(iu, k) + 1) / (k sn(iu, k)) with principal logarithms.
pub fn baxter_couplings(u: C64, k: f64) -> Result<(C64, C64)> {
    let (sn, cn, dn) = elliptic::jacobi(IM * u, k)?;
    if sn.norm() < SINGULAR_EPS {
        return Err(Error::SingularConfiguration(
            "sn(iu) vanishes; couplings are singular at this point".into(),
        ));
    }
    let j1 = (cn + IM * sn).ln() / 2.0;
    let j2 = (IM * (dn + ONE) / (sn * k)).ln() / 2.0;
    Ok((j1, j2))
}

/// Identifier of a catalog family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyId {
    XxzTrig,
    XyzElliptic,
    XyElliptic,
    FfTrivialRz,
    FfTrig1Param,
    Ff2Param,
    R1Elliptic,
    R2Elliptic,
    IsingElliptic,
    ExcAEqC,
    ExcAEqPmB,
    ExcAEqPmD,
    ConstA10,
    ConstD10,
    ConstB10,
    ConstC0Diag,
    ConstC10Tri,
    XMinusXz,
    RatB1D0,
    DiagExp,
    EllB0D,
    XxzD,
    XyzD,
    XyzDPm,
    XxDTilde,
}

pub const ALL_FAMILIES: [FamilyId; 25] = [
    FamilyId::XxzTrig,
    FamilyId::XyzElliptic,
    FamilyId::XyElliptic,
    FamilyId::FfTrivialRz,
    FamilyId::FfTrig1Param,
    FamilyId::Ff2Param,
    FamilyId::R1Elliptic,
    FamilyId::R2Elliptic,
    FamilyId::IsingElliptic,
    FamilyId::ExcAEqC,
    FamilyId::ExcAEqPmB,
    FamilyId::ExcAEqPmD,
    FamilyId::ConstA10,
    FamilyId::ConstD10,
    FamilyId::ConstB10,
    FamilyId::ConstC0Diag,
    FamilyId::ConstC10Tri,
    FamilyId::XMinusXz,
    FamilyId::RatB1D0,
    FamilyId::DiagExp,
    FamilyId::EllB0D,
    FamilyId::XxzD,
    FamilyId::XyzD,
    FamilyId::XyzDPm,
    FamilyId::XxDTilde,
];

impl FamilyId {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::XxzTrig => "XXZ_trig",
            FamilyId::XyzElliptic => "XYZ_elliptic",
            FamilyId::XyElliptic => "XY_elliptic",
            FamilyId::FfTrivialRz => "FF_trivial_rz",
            FamilyId::FfTrig1Param => "FF_trig_1param",
            FamilyId::Ff2Param => "FF_2param",
            FamilyId::R1Elliptic => "R1_elliptic",
            FamilyId::R2Elliptic => "R2_elliptic",
            FamilyId::IsingElliptic => "Ising_elliptic",
            FamilyId::ExcAEqC => "EXC_a_eq_c",
            FamilyId::ExcAEqPmB => "EXC_a_eq_pm_b",
            FamilyId::ExcAEqPmD => "EXC_a_eq_pm_d",
            FamilyId::ConstA10 => "CONST_a1_0",
            FamilyId::ConstD10 => "CONST_d1_0",
            FamilyId::ConstB10 => "CONST_b1_0",
            FamilyId::ConstC0Diag => "CONST_c_0_diag",
            FamilyId::ConstC10Tri => "CONST_c1_0_tri",
            FamilyId::XMinusXz => "XminusXZ",
            FamilyId::RatB1D0 => "RAT_b1_d_0",
            FamilyId::DiagExp => "DIAG_exp",
            FamilyId::EllB0D => "ELL_b0_d",
            FamilyId::XxzD => "XXZ_d",
            FamilyId::XyzD => "XYZ_d",
            FamilyId::XyzDPm => "XYZ_d_pm",
            FamilyId::XxDTilde => "XX_d_tilde",
        }
    }

    /// Opaque per-family data identifier embedded in reports and exports.
    pub fn equation_tag(&self) -> &'static str {
        match self {
            FamilyId::XxzTrig => "rxxzi",
            FamilyId::XyzElliptic => "ybezi",
            FamilyId::XyElliptic => "rxy",
            FamilyId::FfTrivialRz => "rz",
            FamilyId::FfTrig1Param => "ybezi1",
            FamilyId::Ff2Param => "ybezuv",
            FamilyId::R1Elliptic => "rxydc",
            FamilyId::R2Elliptic => "rxycd",
            FamilyId::IsingElliptic => "r",
            FamilyId::ExcAEqC => "raeqc",
            FamilyId::ExcAEqPmB => "rff",
            FamilyId::ExcAEqPmD => "rapmd",
            FamilyId::ConstA10 => "const_a1_0",
            FamilyId::ConstD10 => "const_d1_0",
            FamilyId::ConstB10 => "const_b1_0",
            FamilyId::ConstC0Diag => "const_c0_diag",
            FamilyId::ConstC10Tri => "const_c1_0",
            FamilyId::XMinusXz => "rxyzs",
            FamilyId::RatB1D0 => "su",
            FamilyId::DiagExp => "dexp",
            FamilyId::EllB0D => "ellb0d",
            FamilyId::XxzD => "eps",
            FamilyId::XyzD => "epsi",
            FamilyId::XyzDPm => "epspm",
            FamilyId::XxDTilde => "eps_tilde",
        }
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        match self {
            FamilyId::XxzTrig => &["u0", "b0", "alpha", "sign1"],
            FamilyId::XyzElliptic => &["k", "lambda", "gamma"],
            FamilyId::XyElliptic => &["k", "gamma"],
            FamilyId::FfTrivialRz => &["alpha", "gamma", "sign1"],
            FamilyId::FfTrig1Param => &["eps", "alpha", "gamma"],
            FamilyId::Ff2Param => &["gamma"],
            FamilyId::R1Elliptic | FamilyId::R2Elliptic => {
                &["k", "u0", "gamma", "sign1", "sign2"]
            }
            FamilyId::IsingElliptic => &["k"],
            FamilyId::ExcAEqC => &["sign1", "gamma"],
            FamilyId::ExcAEqPmB => &["sign1", "sign2", "gamma", "p", "q"],
            FamilyId::ExcAEqPmD => &["sign1", "sign2", "d0", "gamma"],
            FamilyId::ConstA10 => &["sign1", "gamma"],
            FamilyId::ConstD10 => &["sign1", "gamma"],
            FamilyId::ConstB10 => &["sign1", "gamma"],
            FamilyId::ConstC0Diag => &["sign1", "a0", "gamma", "alpha"],
            FamilyId::ConstC10Tri => &["a0", "abar0", "gamma"],
            FamilyId::XMinusXz => &["u0", "gamma"],
            FamilyId::RatB1D0 => &["p"],
            FamilyId::DiagExp => &["p", "q"],
            FamilyId::EllB0D => &["k", "sign1", "sign2"],
            FamilyId::XxzD => &["u0", "eps"],
            FamilyId::XyzD => &["u0", "eps"],
            FamilyId::XyzDPm => &["u0", "eps", "sign1"],
            FamilyId::XxDTilde => &["alpha", "eps", "sign1"],
        }
    }

    /// One-line description for the CLI listing.
    pub fn description(&self) -> &'static str {
        match self {
            FamilyId::XxzTrig => "six-vertex trigonometric family with b-rescaling and exponential c-twist",
            FamilyId::XyzElliptic => "full eight-vertex elliptic family parameterized by modulus and shift",
            FamilyId::XyElliptic => "eight-vertex elliptic free-fermion family (anisotropic hopping)",
            FamilyId::FfTrivialRz => "constant-profile exponential family with inverted outer corners",
            FamilyId::FfTrig1Param => "one-parameter free-fermion family mixing hyperbolic and tangent profiles",
            FamilyId::Ff2Param => "free-fermion family with two independent spectral parameters",
            FamilyId::R1Elliptic => "elliptic family with split diagonal (dn/cn core, odd sn admixture)",
            FamilyId::R2Elliptic => "elliptic family with split diagonal (cn/dn core, odd sn admixture)",
            FamilyId::IsingElliptic => "self-dual elliptic family evaluated on the imaginary axis",
            FamilyId::ExcAEqC => "exceptional family with hyperbolic b-profile, a = c",
            FamilyId::ExcAEqPmB => "exceptional family, a = +/- b, with a free scalar profile",
            FamilyId::ExcAEqPmD => "constant exceptional family with unit diagonal and signed corners",
            FamilyId::ConstA10 => "constant solution with one vanishing diagonal weight",
            FamilyId::ConstD10 => "constant solution with one vanishing corner weight",
            FamilyId::ConstB10 => "constant solution with vanishing inner diagonal and eighth-root phases",
            FamilyId::ConstC0Diag => "diagonal-plus-corner solution with exponential corner drift",
            FamilyId::ConstC10Tri => "constant triangular solution with a single inner cross weight",
            FamilyId::XMinusXz => "six-weight family with vanishing inner diagonal and shifted cross terms",
            FamilyId::RatB1D0 => "rational family, linear inner diagonal, no corners",
            FamilyId::DiagExp => "purely diagonal exponential family",
            FamilyId::EllB0D => "elliptic corner family with coupled half-argument diagonal",
            FamilyId::XxzD => "six-vertex trigonometric family deformed by one outer corner",
            FamilyId::XyzD => "mixed-diagonal trigonometric family deformed by one outer corner",
            FamilyId::XyzDPm => "phase-twisted variant of the one-corner trigonometric deformation",
            FamilyId::XxDTilde => "isotropic hopping family with exponential cross weights and one corner",
        }
    }

    /// True for families whose weights depend on two independent spectral
    /// parameters.
    pub fn is_two_param(&self) -> bool {
        matches!(self, FamilyId::Ff2Param)
    }

    pub fn from_name(s: &str) -> Result<FamilyId> {
        for id in ALL_FAMILIES {
            if id.name() == s {
                return Ok(id);
            }
        }
        let valid = ALL_FAMILIES
            .iter()
            .map(|f| f.name())
            .collect::<Vec<_>>()
            .join(", ");
        Err(Error::UnknownFamily { id: s.to_string(), valid })
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Scalar profile used by `EXC_a_eq_pm_b` when no explicit closure is given.
pub type FreeFn = Arc<dyn Fn(C64) -> C64 + Send + Sync>;

/// A concrete member of a catalog family: identifier plus parameter values.
#[derive(Clone)]
pub struct Family {
    id: FamilyId,
    params: BTreeMap<String, C64>,
    free_fn: Option<FreeFn>,
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Family")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("free_fn", &self.free_fn.as_ref().map(|_| "<fn>"))
            .finish()
    }
}

fn is_pm_one(v: C64) -> bool {
    v.im.abs() < 1e-12 && (v.re - 1.0).abs() < 1e-12 || v.im.abs() < 1e-12 && (v.re + 1.0).abs() < 1e-12
}

impl Family {
    pub fn new(id: FamilyId, params: BTreeMap<String, C64>) -> Result<Family> {
        let fam = Family { id, params, free_fn: None };
        fam.validate()?;
        Ok(fam)
    }

    /// Like `new`, but additionally installs a custom scalar profile for
    /// the `EXC_a_eq_pm_b` family (other families reject it).
    pub fn with_free_fn(
        id: FamilyId,
        params: BTreeMap<String, C64>,
        f: FreeFn,
    ) -> Result<Family> {
        if id != FamilyId::ExcAEqPmB {
            return Err(Error::InvalidParams {
                family: id.name().to_string(),
                message: "a free scalar profile is only supported by EXC_a_eq_pm_b".into(),
            });
        }
        let fam = Family { id, params, free_fn: Some(f) };
        fam.validate()?;
        Ok(fam)
    }

    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn params(&self) -> &BTreeMap<String, C64> {
        &self.params
    }

    pub fn has_free_fn(&self) -> bool {
        self.free_fn.is_some()
    }

    fn invalid(&self, message: impl Into<String>) -> Error {
        Error::InvalidParams { family: self.id.name().to_string(), message: message.into() }
    }

    fn p(&self, name: &str) -> C64 {
        self.params[name]
    }

    fn real(&self, name: &str) -> f64 {
        self.params[name].re
    }

    fn validate(&self) -> Result<()> {
        let names = self.id.param_names();
        for n in names {
            if !self.params.contains_key(*n) {
                return Err(self.invalid(format!(
                    "missing parameter '{n}' (expected: {})",
                    names.join(", ")
                )));
            }
        }
        for k in self.params.keys() {
            if !names.contains(&k.as_str()) {
                return Err(self.invalid(format!(
                    "unknown parameter '{k}' (expected: {})",
                    names.join(", ")
                )));
            }
        }
        // Sign-valued parameters must be exactly +1 or -1.
        for n in ["sign1", "sign2", "d0", "a0", "abar0"] {
            if names.contains(&n) {
                let v = self.p(n);
                let sign_like = match (self.id, n) {
                    (FamilyId::ConstC0Diag, "a0") => true,
                    (FamilyId::ConstC10Tri, "a0") | (FamilyId::ConstC10Tri, "abar0") => true,
                    (FamilyId::ExcAEqPmD, "d0") => true,
                    (_, "sign1") | (_, "sign2") => true,
                    _ => false,
                };
                if sign_like && !is_pm_one(v) {
                    return Err(self.invalid(format!("parameter '{n}' must be +1 or -1, got {v}")));
                }
            }
        }
        // A real modulus in (0, 1) where an elliptic kernel is involved.
        if names.contains(&"k") {
            let k = self.p("k");
            if k.im.abs() > 1e-12 || !(k.re > 0.0 && k.re < 1.0) {
                return Err(self.invalid(format!(
                    "modulus 'k' must be a real number strictly between 0 and 1, got {k}"
                )));
            }
        }
        if self.id == FamilyId::ExcAEqPmB && self.free_fn.is_none() {
            let q = self.p("q");
            let near_int = (q.re - q.re.round()).abs() < 1e-12 && q.im.abs() < 1e-12;
            if !near_int || !(0.0..=2.0).contains(&q.re.round()) {
                return Err(self.invalid(
                    "profile selector 'q' must be 0 (tanh(p u)), 1 (p u) or 2 (exp(p u))",
                ));
            }
        }
        if self.id == FamilyId::XyzElliptic {
            let lam = self.p("lambda");
            let (sl, _, _) = elliptic::jacobi(lam, self.real("k"))?;
            if sl.norm() < SINGULAR_EPS {
                return Err(self.invalid("sn(lambda) vanishes; the weights are undefined"));
            }
        }
        Ok(())
    }

    /// True when this member is claimed to satisfy the free-fermion
    /// condition a1 a2 + b1 b2 - c1 c2 - d1 d2 = 0 identically in the
    /// spectral parameter(s).
    pub fn free_fermion_claimed(&self) -> bool {
        match self.id {
            // Claimed only on the mixed-diagonal branch.
            FamilyId::XxzTrig => self.real("sign1") < 0.0,
            // Claimed only when the two exponential rates cancel.
            FamilyId::DiagExp => (self.p("p") + self.p("q")).norm() < 1e-12,
            FamilyId::XyzElliptic
            | FamilyId::ExcAEqPmB
            | FamilyId::ConstC0Diag
            | FamilyId::XMinusXz
            | FamilyId::XxzD => false,
            _ => true,
        }
    }

    /// Evaluate the weights at a single spectral parameter.
    pub fn eval(&self, u: C64) -> Result<VertexWeights> {
        if self.id.is_two_param() {
            return Err(self.invalid(
                "this family depends on two spectral parameters; use eval_two(u, v)",
            ));
        }
        self.eval_impl(u, ZERO)
    }

    /// Evaluate a two-spectral-parameter family at (u, v).
    pub fn eval_two(&self, u: C64, v: C64) -> Result<VertexWeights> {
        if !self.id.is_two_param() {
            return Err(self.invalid(
                "this family depends on one spectral parameter; use eval(u)",
            ));
        }
        self.eval_impl(u, v)
    }

    /// 4x4 operator form of `eval`.
    pub fn matrix(&self, u: C64) -> Result<CMat> {
        Ok(self.eval(u)?.to_matrix())
    }

    /// 4x4 operator form of `eval_two`.
    pub fn matrix_two(&self, u: C64, v: C64) -> Result<CMat> {
        Ok(self.eval_two(u, v)?.to_matrix())
    }

    fn eval_impl(&self, u: C64, v: C64) -> Result<VertexWeights> {
        let w = match self.id {
            FamilyId::XxzTrig => {
                let u0 = self.p("u0");
                let b0 = self.p("b0");
                let alpha = self.p("alpha");
                let s1 = self.real("sign1");
                let s0 = u0.sin();
                let rb = b0.sqrt();
                if rb.norm() < SINGULAR_EPS {
                    return Err(self.invalid("b0 must be nonzero"));
                }
                let a2 = if s1 > 0.0 { (u0 + u).sin() } else { (u0 - u).sin() };
                VertexWeights {
                    a1: (u + u0).sin(),
                    a2,
                    b1: rb * u.sin(),
                    b2: u.sin() / rb,
                    c1: (alpha * u / 2.0).exp() * s0,
                    c2: (-alpha * u / 2.0).exp() * s0,
                    d1: ZERO,
                    d2: ZERO,
                }
            }
            FamilyId::XyzElliptic => {
                let k = self.real("k");
                let lam = self.p("lambda");
                let gamma = self.p("gamma");
                let (sl, _, _) = elliptic::jacobi(lam, k)?;
                if sl.norm() < SINGULAR_EPS {
                    return Err(Error::SingularConfiguration("sn(lambda) vanishes".into()));
                }
                let (snu, _, _) = elliptic::jacobi(u, k)?;
                let (snl, _, _) = elliptic::jacobi(u + lam, k)?;
                let a = snl / sl;
                let b = snu / sl;
                let d = snl * snu * k;
                VertexWeights {
                    a1: a,
                    a2: a,
                    b1: b,
                    b2: b,
                    c1: ONE,
                    c2: ONE,
                    d1: d * (-gamma / 2.0).exp(),
                    d2: d * (gamma / 2.0).exp(),
                }
            }
            FamilyId::XyElliptic => {
                let k = self.real("k");
                let gamma = self.p("gamma");
                let (sn, cn, dn) = elliptic::jacobi(u, k)?;
                if dn.norm() < SINGULAR_EPS {
                    return Err(Error::SingularConfiguration("dn(u) vanishes".into()));
                }
                let a = cn / dn;
                let d = cn * sn / dn * k;
                VertexWeights {
                    a1: a,
                    a2: a,
                    b1: sn,
                    b2: sn,
                    c1: ONE,
                    c2: ONE,
                    d1: d * (-gamma / 2.0).exp(),
                    d2: d * (gamma / 2.0).exp(),
                }
            }
            FamilyId::FfTrivialRz => {
                let alpha = self.p("alpha");
                let gamma = self.p("gamma");
                let s1 = self.real("sign1");
                let e = (alpha * u).exp();
                VertexWeights {
                    a1: e,
                    a2: e,
                    b1: e * s1,
                    b2: -e * s1,
                    c1: ONE,
                    c2: ONE,
                    d1: -(-gamma).exp(),
                    d2: gamma.exp(),
                }
            }
            FamilyId::FfTrig1Param => {
                let eps = self.p("eps");
                let alpha = self.p("alpha");
                let gamma = self.p("gamma");
                let cos_au = (alpha * u).cos();
                if cos_au.norm() < SINGULAR_EPS {
                    return Err(Error::SingularConfiguration("cos(alpha u) vanishes".into()));
                }
                let a = (eps * u).cosh() / cos_au;
                let b = (eps * u).sinh() / cos_au;
                let d = (alpha * u).sin() / cos_au;
                VertexWeights {
                    a1: a,
                    a2: a,
                    b1: b,
                    b2: -b,
                    c1: ONE,
                    c2: ONE,
                    d1: d * (-gamma / 2.0).exp(),
                    d2: d * (gamma / 2.0).exp(),
                }
            }
            FamilyId::Ff2Param => {
                let gamma = self.p("gamma");
                VertexWeights {
                    a1: u.cosh(),
                    a2: u.cosh(),
                    b1: u.sinh(),
                    b2: -u.sinh(),
                    c1: v.cos(),
                    c2: v.cos(),
                    d1: v.sin() * (-gamma / 2.0).exp(),
                    d2: v.sin() * (gamma / 2.0).exp(),
                }
            }
            FamilyId::R1Elliptic | FamilyId::R2Elliptic => {
                let k = self.real("k");
                let u0 = self.p("u0");
                let gamma = self.p("gamma");
                let s1 = self.real("sign1");
                let s2 = self.real("sign2");
                let (sn, cn, dn) = elliptic::jacobi(u, k)?;
                let (sn0, cn0, dn0) = elliptic::jacobi(u0, k)?;
                if sn0.norm() < SINGULAR_EPS {
                    return Err(Error::SingularConfiguration("sn(u0) vanishes".into()));
                }
                let (even, odd, d) = if self.id == FamilyId::R1Elliptic {
                    if cn.norm() < SINGULAR_EPS {
                        return Err(Error::SingularConfiguration("cn(u) vanishes".into()));
                    }
                    (dn / cn, dn0 * sn / sn0, dn * sn / cn * s2)
                } else {
                    if dn.norm() < SINGULAR_EPS {
                        return Err(Error::SingularConfiguration("dn(u) vanishes".into()));
                    }
                    (cn / dn, cn0 * sn / sn0, cn * sn / dn * (k * s2))
                };
                let b = sn / sn0;
                VertexWeights {
                    a1: even + odd * s1,
                    a2: even - odd * s1,
                    b1: b,
                    b2: b,
                    c1: ONE,
                    c2: ONE,
                    d1: d * (-gamma / 2.0).exp(),
                    d2: d * (gamma / 2.0).exp(),
                }
            }
            FamilyId::IsingElliptic => {
                let k = self.real("k");
                let (sn, cn, dn) = elliptic::jacobi(IM * u, k)?;
                VertexWeights {
                    a1: cn * dn - IM * sn * k,
                    a2: cn * dn + IM * sn * k,
                    b1: -IM * sn,
                    b2: -IM * sn,
                    c1: cn,
                    c2: cn,
                    d1: IM * sn * dn,
                    d2: IM * sn * dn,
                }
            }
            FamilyId::ExcAEqC => {
                let s1 = self.real("sign1");
                let gamma = self.p("gamma");
                let t = u.tanh();
                VertexWeights {
                    a1: ONE,
                    a2: ONE,
                    b1: t,
                    b2: t,
                    c1: ONE,
                    c2: ONE,
                    d1: t * s1 * (-gamma / 2.0).exp(),
                    d2: t * s1 * (gamma / 2.0).exp(),
                }
            }
            FamilyId::ExcAEqPmB => {
                let s1 = self.real("sign1");
                let s2 = self.real("sign2");
                let gamma = self.p("gamma");
                let f = if let Some(ff) = &self.free_fn {
                    ff(u)
                } else {
                    let p = self.p("p");
                    match self.real("q").round() as i64 {
                        0 => (p * u).tanh(),
                        1 => p * u,
                        _ => (p * u).exp(),
                    }
                };
                VertexWeights {
                    a1: ONE,
                    a2: ONE,
                    b1: C64::new(s1, 0.0),
                    b2: C64::new(s1, 0.0),
                    c1: f,
                    c2: f,
                    d1: f * s2 * (-gamma / 2.0).exp(),
                    d2: f * s2 * (gamma / 2.0).exp(),
                }
            }
            FamilyId::ExcAEqPmD => {
                let sb = self.real("sign1");
                let sc = self.real("sign2");
                let sd = self.real("d0");
                let gamma = self.p("gamma");
                VertexWeights {
                    a1: ONE,
                    a2: ONE,
                    b1: C64::new(sb, 0.0),
                    b2: C64::new(sb, 0.0),
                    c1: C64::new(sc, 0.0),
                    c2: C64::new(sc, 0.0),
                    d1: (-gamma / 2.0).exp() * sd,
                    d2: (gamma / 2.0).exp() * sd,
                }
            }
            FamilyId::ConstA10 => {
                let s = self.real("sign1");
                let gamma = self.p("gamma");
                let b = C64::new(s * std::f64::consts::SQRT_2, 0.0);
                VertexWeights {
                    a1: ZERO,
                    a2: C64::new(2.0, 0.0),
                    b1: b,
                    b2: b,
                    c1: ONE,
                    c2: ONE,
                    d1: (-gamma).exp(),
                    d2: gamma.exp(),
                }
            }
            FamilyId::ConstD10 => {
                let s = self.real("sign1");
                let gamma = self.p("gamma");
                VertexWeights {
                    a1: ONE,
                    a2: ZERO,
                    b1: ZERO,
                    b2: C64::new(s, 0.0),
                    c1: ZERO,
                    c2: ONE,
                    d1: gamma.exp(),
                    d2: ZERO,
                }
            }
            FamilyId::ConstB10 => {
                let s = self.real("sign1");
                let gamma = self.p("gamma");
                let ph = (IM * (s * std::f64::consts::FRAC_PI_4)).exp()
                    / std::f64::consts::SQRT_2;
                VertexWeights {
                    a1: ONE,
                    a2: IM * s,
                    b1: ZERO,
                    b2: ZERO,
                    c1: ph,
                    c2: ph,
                    d1: ph * (-gamma).exp(),
                    d2: ph * gamma.exp(),
                }
            }
            FamilyId::ConstC0Diag => {
                let s = self.real("sign1");
                let a0 = self.real("a0");
                let gamma = self.p("gamma");
                let alpha = self.p("alpha");
                VertexWeights {
                    a1: ONE,
                    a2: C64::new(a0, 0.0),
                    b1: C64::new(s, 0.0),
                    b2: C64::new(s, 0.0),
                    c1: ZERO,
                    c2: ZERO,
                    d1: ZERO,
                    d2: (gamma + alpha * u).exp(),
                }
            }
            FamilyId::ConstC10Tri => {
                let a0 = self.real("a0");
                let ab = self.real("abar0");
                let gamma = self.p("gamma");
                VertexWeights {
                    a1: ONE,
                    a2: C64::new(a0 * ab, 0.0),
                    b1: C64::new(a0, 0.0),
                    b2: C64::new(-ab, 0.0),
                    c1: C64::new(1.0 + a0 * ab, 0.0),
                    c2: ZERO,
                    d1: ZERO,
                    d2: gamma.exp(),
                }
            }
            FamilyId::XMinusXz => {
                let u0 = self.p("u0");
                let gamma = self.p("gamma");
                let s0 = u0.sin();
                VertexWeights {
                    a1: s0,
                    a2: s0,
                    b1: ZERO,
                    b2: ZERO,
                    c1: (u + u0).sin(),
                    c2: (u + u0).sin(),
                    d1: u.sin() * (-gamma).exp(),
                    d2: u.sin() * gamma.exp(),
                }
            }
            FamilyId::RatB1D0 => {
                let p = self.p("p");
                VertexWeights {
                    a1: ONE,
                    a2: ONE,
                    b1: ZERO,
                    b2: p * u,
                    c1: ONE,
                    c2: ONE,
                    d1: ZERO,
                    d2: ZERO,
                }
            }
            FamilyId::DiagExp => {
                let p = self.p("p");
                let q = self.p("q");
                VertexWeights {
                    a1: (p * u).exp(),
                    a2: (q * u).exp(),
                    b1: ZERO,
                    b2: ZERO,
                    c1: ONE,
                    c2: ONE,
                    d1: ZERO,
                    d2: ZERO,
                }
            }
            FamilyId::EllB0D => {
                let k = self.real("k");
                let s1 = self.real("sign1");
                let s2 = self.real("sign2");
                let ab0 = s1 * k.sqrt();
                let a0 = C64::new(0.0, s2 * (1.0 + k) / 2.0);
                let (sn, _, _) = elliptic::jacobi(u, k)?;
                let (snh, cnh, dnh) = elliptic::jacobi(u / 2.0, k)?;
                let dh = snh * ab0;
                let dph = cnh * dnh * ab0;
                let den_p = ONE + dh * dh;
                let den_m = ONE - dh * dh;
                if den_p.norm() < SINGULAR_EPS || den_m.norm() < SINGULAR_EPS {
                    return Err(Error::SingularConfiguration(
                        "half-argument corner profile hits a unit square".into(),
                    ));
                }
                let odd = a0 * dh * 2.0 / (den_p * ab0);
                let even = dph / (den_m * ab0);
                let d = sn * ab0;
                VertexWeights {
                    a1: odd + even,
                    a2: -odd + even,
                    b1: ZERO,
                    b2: ZERO,
                    c1: ONE,
                    c2: ONE,
                    d1: d,
                    d2: d,
                }
            }
            FamilyId::XxzD => {
                let u0 = self.p("u0");
                let eps = self.p("eps");
                let s0 = u0.sin();
                VertexWeights {
                    a1: (u + u0).sin(),
                    a2: (u + u0).sin(),
                    b1: u.sin(),
                    b2: u.sin(),
                    c1: s0,
                    c2: s0,
                    d1: ZERO,
                    d2: (u + u0).sin() * u.sin() * eps.exp(),
                }
            }
            FamilyId::XyzD => {
                let u0 = self.p("u0");
                let eps = self.p("eps");
                let s0 = u0.sin();
                VertexWeights {
                    a1: (u + u0).sin(),
                    a2: (u0 - u).sin(),
                    b1: u.sin(),
                    b2: u.sin(),
                    c1: s0,
                    c2: s0,
                    d1: ZERO,
                    d2: u.cos() * u.sin() * eps.exp(),
                }
            }
            FamilyId::XyzDPm => {
                let u0 = self.p("u0");
                let eps = self.p("eps");
                let s = self.real("sign1");
                let s0 = u0.sin();
                VertexWeights {
                    a1: (u + u0).sin(),
                    a2: (u0 - u).sin(),
                    b1: u.sin() * (IM * (s * u0)).exp(),
                    b2: u.sin() * (-IM * (s * u0)).exp(),
                    c1: s0 * (-IM * (s * u)).exp(),
                    c2: s0 * (IM * (s * u)).exp(),
                    d1: ZERO,
                    d2: u.sin() * eps.exp(),
                }
            }
            FamilyId::XxDTilde => {
                let alpha = self.p("alpha");
                let eps = self.p("eps");
                let s = self.real("sign1");
                VertexWeights {
                    a1: u.cos(),
                    a2: u.cos(),
                    b1: IM * u.sin() * s,
                    b2: -IM * u.sin() * s,
                    c1: (-alpha * u).exp(),
                    c2: (alpha * u).exp(),
                    d1: ZERO,
                    d2: (alpha * u).sinh() * eps.exp(),
                }
            }
        };
        Ok(w)
    }
}

fn pset(pairs: &[(&str, f64)]) -> BTreeMap<String, C64> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), C64::new(*v, 0.0)))
        .collect()
}

/// A family together with the canonical parameter sets used by the
/// regression sweep and the CLI.
pub struct CatalogEntry {
    pub id: FamilyId,
    pub members: Vec<Family>,
}

/// Canonical parameter sets for every family: each set is a verified
/// solution of the Yang-Baxter equation suitable for regression sweeps.
pub fn registry() -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut push = |id: FamilyId, sets: Vec<BTreeMap<String, C64>>| {
        let members = sets
            .into_iter()
            .map(|s| Family::new(id, s).expect("registry parameter set must validate"))
            .collect();
        entries.push(CatalogEntry { id, members });
    };

    push(
        FamilyId::XxzTrig,
        vec![
            pset(&[("u0", 0.9), ("b0", 1.0), ("alpha", 0.0), ("sign1", 1.0)]),
            pset(&[("u0", 0.9), ("b0", 1.3), ("alpha", 0.2), ("sign1", 1.0)]),
            pset(&[("u0", 0.7), ("b0", 0.8), ("alpha", -0.15), ("sign1", -1.0)]),
            pset(&[("u0", 1.1), ("b0", 1.0), ("alpha", 0.35), ("sign1", -1.0)]),
        ],
    );
    push(
        FamilyId::XyzElliptic,
        vec![
            pset(&[("k", 0.5), ("lambda", 0.8), ("gamma", 0.0)]),
            pset(&[("k", 0.5), ("lambda", 0.8), ("gamma", 0.4)]),
            pset(&[("k", 0.7), ("lambda", 1.1), ("gamma", -0.3)]),
        ],
    );
    push(
        FamilyId::XyElliptic,
        vec![
            pset(&[("k", 0.5), ("gamma", 0.0)]),
            pset(&[("k", 0.8), ("gamma", 0.25)]),
            pset(&[("k", 0.3), ("gamma", -0.4)]),
        ],
    );
    push(
        FamilyId::FfTrivialRz,
        vec![
            pset(&[("alpha", 0.3), ("gamma", 0.45), ("sign1", 1.0)]),
            pset(&[("alpha", -0.2), ("gamma", 0.1), ("sign1", -1.0)]),
            pset(&[("alpha", 0.0), ("gamma", 0.8), ("sign1", 1.0)]),
        ],
    );
    push(
        FamilyId::FfTrig1Param,
        vec![
            pset(&[("eps", 0.4), ("alpha", 0.3), ("gamma", 0.0)]),
            pset(&[("eps", 0.25), ("alpha", 0.5), ("gamma", 0.3)]),
            pset(&[("eps", -0.3), ("alpha", 0.2), ("gamma", -0.2)]),
        ],
    );
    push(
        FamilyId::Ff2Param,
        vec![
            pset(&[("gamma", 0.0)]),
            pset(&[("gamma", 0.3)]),
            pset(&[("gamma", -0.5)]),
        ],
    );
    for id in [FamilyId::R1Elliptic, FamilyId::R2Elliptic] {
        push(
            id,
            vec![
                pset(&[("k", 0.6), ("u0", 0.7), ("gamma", 0.0), ("sign1", 1.0), ("sign2", 1.0)]),
                pset(&[("k", 0.6), ("u0", 0.7), ("gamma", 0.4), ("sign1", 1.0), ("sign2", -1.0)]),
                pset(&[("k", 0.4), ("u0", 1.1), ("gamma", -0.2), ("sign1", -1.0), ("sign2", 1.0)]),
            ],
        );
    }
    push(
        FamilyId::IsingElliptic,
        vec![pset(&[("k", 0.8)]), pset(&[("k", 0.5)]), pset(&[("k", 0.3)])],
    );
    push(
        FamilyId::ExcAEqC,
        vec![
            pset(&[("sign1", 1.0), ("gamma", 0.0)]),
            pset(&[("sign1", 1.0), ("gamma", 0.6)]),
            pset(&[("sign1", -1.0), ("gamma", -0.3)]),
        ],
    );
    push(
        FamilyId::ExcAEqPmB,
        vec![
            pset(&[("sign1", 1.0), ("sign2", 1.0), ("gamma", 0.0), ("p", 1.0), ("q", 0.0)]),
            pset(&[("sign1", -1.0), ("sign2", 1.0), ("gamma", 0.3), ("p", 0.7), ("q", 2.0)]),
            pset(&[("sign1", 1.0), ("sign2", -1.0), ("gamma", -0.2), ("p", 1.3), ("q", 0.0)]),
        ],
    );
    push(
        FamilyId::ExcAEqPmD,
        vec![
            pset(&[("sign1", 1.0), ("sign2", 1.0), ("d0", 1.0), ("gamma", 0.0)]),
            pset(&[("sign1", -1.0), ("sign2", 1.0), ("d0", -1.0), ("gamma", 0.4)]),
            pset(&[("sign1", 1.0), ("sign2", -1.0), ("d0", 1.0), ("gamma", -0.3)]),
        ],
    );
    push(
        FamilyId::ConstA10,
        vec![
            pset(&[("sign1", 1.0), ("gamma", 0.0)]),
            pset(&[("sign1", -1.0), ("gamma", 0.5)]),
            pset(&[("sign1", 1.0), ("gamma", -0.7)]),
        ],
    );
    push(
        FamilyId::ConstD10,
        vec![
            pset(&[("sign1", 1.0), ("gamma", 0.0)]),
            pset(&[("sign1", -1.0), ("gamma", 0.3)]),
            pset(&[("sign1", 1.0), ("gamma", 0.9)]),
        ],
    );
    push(
        FamilyId::ConstB10,
        vec![
            pset(&[("sign1", 1.0), ("gamma", 0.0)]),
            pset(&[("sign1", -1.0), ("gamma", 0.4)]),
            pset(&[("sign1", 1.0), ("gamma", -0.6)]),
        ],
    );
    push(
        FamilyId::ConstC0Diag,
        vec![
            pset(&[("sign1", 1.0), ("a0", 1.0), ("gamma", 0.2), ("alpha", 0.3)]),
            pset(&[("sign1", -1.0), ("a0", -1.0), ("gamma", 0.0), ("alpha", 0.5)]),
            pset(&[("sign1", 1.0), ("a0", -1.0), ("gamma", -0.3), ("alpha", 0.1)]),
        ],
    );
    push(
        FamilyId::ConstC10Tri,
        vec![
            pset(&[("a0", 1.0), ("abar0", 1.0), ("gamma", 0.0)]),
            pset(&[("a0", 1.0), ("abar0", -1.0), ("gamma", 0.3)]),
            pset(&[("a0", -1.0), ("abar0", 1.0), ("gamma", -0.2)]),
        ],
    );
    push(
        FamilyId::XMinusXz,
        vec![
            pset(&[("u0", 0.9), ("gamma", 0.0)]),
            pset(&[("u0", 0.9), ("gamma", 0.3)]),
            pset(&[("u0", 1.2), ("gamma", -0.4)]),
        ],
    );
    push(
        FamilyId::RatB1D0,
        vec![pset(&[("p", 1.0)]), pset(&[("p", -0.7)]), pset(&[("p", 2.3)])],
    );
    push(
        FamilyId::DiagExp,
        vec![
            pset(&[("p", 0.5), ("q", -0.5)]),
            pset(&[("p", 1.2), ("q", -1.2)]),
            pset(&[("p", 0.3), ("q", 0.7)]),
        ],
    );
    push(
        FamilyId::EllB0D,
        vec![
            pset(&[("k", 0.6), ("sign1", 1.0), ("sign2", 1.0)]),
            pset(&[("k", 0.6), ("sign1", -1.0), ("sign2", 1.0)]),
            pset(&[("k", 0.4), ("sign1", 1.0), ("sign2", -1.0)]),
        ],
    );
    push(
        FamilyId::XxzD,
        vec![
            pset(&[("u0", 0.9), ("eps", 0.5)]),
            pset(&[("u0", 0.9), ("eps", 0.0)]),
            pset(&[("u0", 1.2), ("eps", -0.4)]),
        ],
    );
    push(
        FamilyId::XyzD,
        vec![
            pset(&[("u0", 0.9), ("eps", 0.5)]),
            pset(&[("u0", 0.7), ("eps", 0.2)]),
            pset(&[("u0", 1.1), ("eps", -0.3)]),
        ],
    );
    push(
        FamilyId::XyzDPm,
        vec![
            pset(&[("u0", 0.9), ("eps", 0.5), ("sign1", 1.0)]),
            pset(&[("u0", 0.9), ("eps", 0.5), ("sign1", -1.0)]),
            pset(&[("u0", 0.7), ("eps", -0.2), ("sign1", 1.0)]),
        ],
    );
    push(
        FamilyId::XxDTilde,
        vec![
            pset(&[("alpha", 0.4), ("eps", 0.5), ("sign1", 1.0)]),
            pset(&[("alpha", 0.4), ("eps", 0.5), ("sign1", -1.0)]),
            pset(&[("alpha", 0.7), ("eps", -0.3), ("sign1", 1.0)]),
        ],
    );
    entries
}

/// Look up the canonical members of one family.
pub fn registry_for(id: FamilyId) -> Vec<Family> {
    registry()
        .into_iter()
        .find(|e| e.id == id)
        .map(|e| e.members)
        .unwrap_or_default()
}
