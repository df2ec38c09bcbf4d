//! Command-line workbench: list and inspect the solution catalog, verify
//! the defining equation at seeded random spectral points, classify
//! solutions, extract spin-chain generators and transfer matrices, and
//! exercise the three-factor exchange structures. All reports are
//! byte-deterministic for fixed arguments and embed the tool version and
//! the solution's equation tag.

use clap::{Parser, Subcommand, ValueEnum};
use eightvertex::catalog::{registry_for, Family, FamilyId, ALL_FAMILIES};
use eightvertex::hamiltonian::{
    build_chain, commutation_defect, expand_check_matrix, export_matrix_text, transfer_matrix,
    Boundary,
};
use eightvertex::linalg::hermitian_eigen;
use eightvertex::tetrahedral::{
    algebra_residual, r_pair, rri_residual_r_pair, rri_residual_sign_twisted, sign_twisted_pair,
    solve_w, tau_residual, w_explicit, zte_residual,
};
use eightvertex::verify::{sweep, SweepConfig};
use eightvertex::{C64, Error};
use serde_json::json;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "eightvertex",
    version,
    about = "Numerical workbench for eight-vertex Yang-Baxter solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BoundaryArg {
    Open,
    Periodic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TetraCheck {
    Algebra,
    Solve,
    Zte,
    Rri,
    Tau,
    Export,
}

#[derive(Subcommand)]
enum Command {
    /// List every catalog family with its equation tag and description.
    List,
    /// Show one family: parameters, preset members, description.
    Show {
        #[arg(long)]
        family: String,
    },
    /// Verify the defining equation on seeded random spectral samples.
    Verify {
        #[arg(long)]
        family: String,
        /// Comma-separated key=value parameter list (complex values
        /// accepted, e.g. "k=0.5,gamma=0.2+0.1i"). Defaults to the first
        /// preset member of the family.
        #[arg(long)]
        params: Option<String>,
        /// Number of random samples.
        #[arg(long, default_value_t = 20)]
        grid: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Residual sweep over seeded random samples, CSV by default.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = 20)]
        grid: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate classification constants and assign the branch label.
    Classify {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expand the two-site generator; optionally build a chain.
    Hamiltonian {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: Option<String>,
        /// Chain length; when set, the dense chain operator is written to
        /// --out as plain text (dimension line + row-major "re im" pairs).
        #[arg(long)]
        sites: Option<usize>,
        #[arg(long, value_enum, default_value_t = BoundaryArg::Periodic)]
        boundary: BoundaryArg,
        /// csv emits the sorted chain eigenvalues (Hermitian chains only).
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Transfer matrix on a ring and the commutation defect.
    Transfer {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: Option<String>,
        /// First spectral point (complex).
        #[arg(long, default_value = "0.23")]
        u: String,
        /// Second spectral point for the commutation defect (complex).
        #[arg(long, default_value = "0.61")]
        u2: String,
        #[arg(long, default_value_t = 4)]
        sites: usize,
        /// Write the transfer matrix at u here as plain text.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three-factor exchange structures and the intertwining tensor.
    Tetra {
        #[arg(long, value_enum)]
        check: TetraCheck,
        /// Comma-separated real spectral points: three for
        /// algebra/solve/rri/tau/export, four for zte.
        #[arg(long, default_value = "0.3,0.7,1.2")]
        u: String,
        /// Elliptic modulus of the free-fermion base for rri/tau.
        #[arg(long, default_value_t = 0.6)]
        k: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Parse one complex scalar: "0.5", "1e-3+0.2i", "-0.7i", "i".
fn parse_complex(s: &str) -> Result<C64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty value".into());
    }
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        // Split an optional real part from the imaginary coefficient at
        // the last +/- that is not an exponent sign.
        let mut split = None;
        for (pos, ch) in body.char_indices().skip(1) {
            if (ch == '+' || ch == '-')
                && !matches!(body.as_bytes()[pos - 1], b'e' | b'E')
            {
                split = Some(pos);
            }
        }
        let (re_str, im_str) = match split {
            Some(pos) => (&body[..pos], &body[pos..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() {
            0.0
        } else {
            re_str.parse::<f64>().map_err(|e| format!("bad real part '{re_str}': {e}"))?
        };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            _ => im_str.parse::<f64>().map_err(|e| format!("bad imaginary part '{im_str}': {e}"))?,
        };
        Ok(C64::new(re, im))
    } else {
        t.parse::<f64>()
            .map(|re| C64::new(re, 0.0))
            .map_err(|e| format!("bad number '{t}': {e}"))
    }
}

/// Parse "k=0.5,gamma=0.2+0.1i" into a parameter map.
fn parse_params(s: &str) -> Result<BTreeMap<String, C64>, String> {
    let mut out = BTreeMap::new();
    for piece in s.split(',') {
        let piece = piece.trim();
        if piece.is_empty() {
            continue;
        }
        let (key, value) = piece
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got '{piece}'"))?;
        out.insert(key.trim().to_string(), parse_complex(value)?);
    }
    Ok(out)
}

fn parse_reals(s: &str, want: usize) -> Result<Vec<f64>, String> {
    let vals: Result<Vec<f64>, _> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect();
    let vals = vals.map_err(|e| format!("bad --u list '{s}': {e}"))?;
    if vals.len() != want {
        return Err(format!("--u needs {want} comma-separated values, got {}", vals.len()));
    }
    Ok(vals)
}

fn resolve_family(name: &str, params: Option<&str>) -> Result<Family, CliError> {
    let id = FamilyId::from_name(name).map_err(CliError::from)?;
    match params {
        Some(p) => {
            let map = parse_params(p).map_err(|msg| {
                CliError::usage(format!(
                    "{msg}\ndeclared parameters for {name}: {}",
                    id.param_names().join(", ")
                ))
            })?;
            Family::new(id, map).map_err(|e| {
                CliError::usage(format!(
                    "{e}\ndeclared parameters for {name}: {}",
                    id.param_names().join(", ")
                ))
            })
        }
        None => {
            let members = registry_for(id);
            Ok(members
                .into_iter()
                .next()
                .expect("every family has at least one preset member"))
        }
    }
}

struct CliError {
    message: String,
    code: u8,
}

impl CliError {
    fn usage(message: String) -> Self {
        CliError { message, code: 2 }
    }
    fn numerical(message: String) -> Self {
        CliError { message, code: 3 }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownFamily { .. } | Error::InvalidParams { .. } => 2,
            _ => 3,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::numerical(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| {
                    if text.ends_with('\n') {
                        Ok(())
                    } else {
                        stdout.write_all(b"\n")
                    }
                })
                .map_err(|e| CliError::numerical(format!("cannot write to stdout: {e}")))
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON rendering cannot fail")
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::List => {
            let mut lines = Vec::new();
            for id in ALL_FAMILIES {
                lines.push(format!(
                    "{:<18} tag={:<13} params: {:<40} {}",
                    id.name(),
                    id.equation_tag(),
                    id.param_names().join(","),
                    id.description()
                ));
            }
            emit(&lines.join("\n"), None)?;
            Ok(0)
        }
        Command::Show { family } => {
            let id = FamilyId::from_name(&family).map_err(CliError::from)?;
            let members = registry_for(id);
            let presets: Vec<serde_json::Value> = members
                .iter()
                .map(|m| {
                    let params: BTreeMap<String, [f64; 2]> = m
                        .params()
                        .iter()
                        .map(|(k, v)| (k.clone(), [v.re, v.im]))
                        .collect();
                    json!(params)
                })
                .collect();
            let doc = json!({
                "version": VERSION,
                "family": id.name(),
                "equation_tag": id.equation_tag(),
                "description": id.description(),
                "parameters": id.param_names(),
                "two_spectral_parameters": id.is_two_param(),
                "preset_members": presets,
            });
            emit(&pretty(&doc), None)?;
            Ok(0)
        }
        Command::Verify {
            family,
            params,
            grid,
            seed,
            tol,
            format,
            out,
        }
        | Command::Sweep {
            family,
            params,
            grid,
            seed,
            tol,
            format,
            out,
        } => {
            let fam = resolve_family(&family, params.as_deref())?;
            let cfg = SweepConfig {
                samples: grid,
                seed,
                tolerance: tol,
            };
            let report = sweep(&fam, &cfg).map_err(CliError::from)?;
            let text = match format {
                Format::Json => report.to_json_string(),
                Format::Csv => report.to_csv(),
            };
            emit(&text, out.as_ref())?;
            Ok(if report.verdict == "pass" { 0 } else { 1 })
        }
        Command::Classify {
            family,
            params,
            out,
        } => {
            let fam = resolve_family(&family, params.as_deref())?;
            let (inv, label) = eightvertex::classify::classify_family(&fam)
                .map_err(CliError::from)?;
            let doc = json!({
                "version": VERSION,
                "family": fam.id().name(),
                "equation_tag": fam.id().equation_tag(),
                "params": fam.params().iter()
                    .map(|(k, v)| (k.clone(), [v.re, v.im]))
                    .collect::<BTreeMap<String, [f64; 2]>>(),
                "invariants": inv.to_json(),
                "classification": label,
            });
            emit(&pretty(&doc), out.as_ref())?;
            Ok(0)
        }
        Command::Hamiltonian {
            family,
            params,
            sites,
            boundary,
            format,
            out,
        } => {
            let fam = resolve_family(&family, params.as_deref())?;
            let coeffs = expand_check_matrix(&fam).map_err(CliError::from)?;
            match (format, sites) {
                (Format::Csv, n) => {
                    // Eigenvalue table of the chain (or of the two-site
                    // generator when no length is given).
                    let n = n.unwrap_or(2);
                    let b = match boundary {
                        BoundaryArg::Open => Boundary::Open,
                        BoundaryArg::Periodic => Boundary::Periodic,
                    };
                    let chain = build_chain(&coeffs, n, b).map_err(CliError::from)?;
                    if chain.max_abs_diff(&chain.dagger()) > 1e-9 * chain.max_abs().max(1.0) {
                        return Err(CliError::numerical(
                            "chain operator is not Hermitian; eigenvalue CSV unavailable"
                                .into(),
                        ));
                    }
                    let (evals, _) = hermitian_eigen(&chain).map_err(CliError::from)?;
                    let mut text = String::from("index,eigenvalue\n");
                    for (i, e) in evals.iter().enumerate() {
                        text.push_str(&format!("{i},{e:.12e}\n"));
                    }
                    emit(&text, out.as_ref())?;
                }
                (Format::Json, sites) => {
                    let mut doc = json!({
                        "version": VERSION,
                        "family": fam.id().name(),
                        "equation_tag": fam.id().equation_tag(),
                        "params": fam.params().iter()
                            .map(|(k, v)| (k.clone(), [v.re, v.im]))
                            .collect::<BTreeMap<String, [f64; 2]>>(),
                        "generator": coeffs.to_json(),
                    });
                    if let Some(n) = sites {
                        let b = match boundary {
                            BoundaryArg::Open => Boundary::Open,
                            BoundaryArg::Periodic => Boundary::Periodic,
                        };
                        let chain = build_chain(&coeffs, n, b).map_err(CliError::from)?;
                        doc["chain"] = json!({
                            "sites": n,
                            "boundary": match b {
                                Boundary::Open => "open",
                                Boundary::Periodic => "periodic",
                            },
                            "matrix_text": export_matrix_text(&chain),
                        });
                    }
                    emit(&pretty(&doc), out.as_ref())?;
                }
            }
            Ok(0)
        }
        Command::Transfer {
            family,
            params,
            u,
            u2,
            sites,
            out,
        } => {
            let fam = resolve_family(&family, params.as_deref())?;
            let u = parse_complex(&u).map_err(CliError::usage)?;
            let u2 = parse_complex(&u2).map_err(CliError::usage)?;
            let t = transfer_matrix(&fam, u, sites).map_err(CliError::from)?;
            let defect = commutation_defect(&fam, u, u2, sites).map_err(CliError::from)?;
            let doc = json!({
                "version": VERSION,
                "family": fam.id().name(),
                "equation_tag": fam.id().equation_tag(),
                "params": fam.params().iter()
                    .map(|(k, v)| (k.clone(), [v.re, v.im]))
                    .collect::<BTreeMap<String, [f64; 2]>>(),
                "sites": sites,
                "u": [u.re, u.im],
                "u2": [u2.re, u2.im],
                "commutation_defect": defect,
            });
            if let Some(path) = out.as_ref() {
                emit(&export_matrix_text(&t), Some(path))?;
            }
            emit(&pretty(&doc), None)?;
            Ok(0)
        }
        Command::Tetra { check, u, k, out } => {
            let r1 = |a: f64, b: f64| r_pair(a, b).0;
            let r2 = |a: f64, b: f64| r_pair(a, b).1;
            match check {
                TetraCheck::Algebra => {
                    let us = parse_reals(&u, 3).map_err(CliError::usage)?;
                    let w = w_explicit(us[0], us[1], us[2]).map_err(CliError::from)?;
                    let residual = algebra_residual(&r1, &r2, &w);
                    let pass = residual <= 1e-9;
                    let doc = json!({
                        "version": VERSION,
                        "check": "algebra",
                        "u": us,
                        "residual": residual,
                        "tolerance": 1e-9,
                        "verdict": if pass { "pass" } else { "fail" },
                    });
                    emit(&pretty(&doc), out.as_ref())?;
                    Ok(if pass { 0 } else { 1 })
                }
                TetraCheck::Solve => {
                    let us = parse_reals(&u, 3).map_err(CliError::usage)?;
                    match solve_w(&r1, &r2, us[0], us[1], us[2]) {
                        Ok((w, conditioning)) => {
                            let printed = w_explicit(us[0], us[1], us[2])
                                .map_err(CliError::from)?;
                            let mut diff: f64 = 0.0;
                            for t in 0..8 {
                                for s in 0..8 {
                                    diff = diff.max(
                                        (w.entries[t][s] - printed.entries[t][s]).norm(),
                                    );
                                }
                            }
                            let doc = json!({
                                "version": VERSION,
                                "check": "solve",
                                "u": us,
                                "conditioning": conditioning,
                                "max_diff_vs_printed": diff,
                                "verdict": if diff <= 1e-8 { "pass" } else { "fail" },
                            });
                            emit(&pretty(&doc), out.as_ref())?;
                            Ok(if diff <= 1e-8 { 0 } else { 1 })
                        }
                        Err(e) => Err(CliError::from(e)),
                    }
                }
                TetraCheck::Zte => {
                    let us = parse_reals(&u, 4).map_err(CliError::usage)?;
                    let residual = zte_residual(w_explicit, us[0], us[1], us[2], us[3])
                        .map_err(CliError::from)?;
                    let doc = json!({
                        "version": VERSION,
                        "check": "zte",
                        "u": us,
                        "residual": residual,
                    });
                    emit(&pretty(&doc), out.as_ref())?;
                    Ok(0)
                }
                TetraCheck::Rri | TetraCheck::Tau => {
                    let us = parse_reals(&u, 3).map_err(CliError::usage)?;
                    let base = Family::new(
                        FamilyId::XyElliptic,
                        [
                            ("k".to_string(), C64::new(k, 0.0)),
                            ("gamma".to_string(), C64::new(0.0, 0.0)),
                        ]
                        .into_iter()
                        .collect(),
                    )
                    .map_err(CliError::from)?;
                    let (uu, vv, ww) = (
                        C64::new(us[0], 0.0),
                        C64::new(us[1], 0.0),
                        C64::new(us[2], 0.0),
                    );
                    let doc = if check == TetraCheck::Rri {
                        let twisted = rri_residual_sign_twisted(&base, uu, vv, ww)
                            .map_err(CliError::from)?;
                        let printed = rri_residual_r_pair(us[0], us[1], us[2]);
                        // Exercise the pair constructor so its slots stay
                        // covered by the CLI path.
                        let _ = sign_twisted_pair(&base, uu, vv).map_err(CliError::from)?;
                        json!({
                            "version": VERSION,
                            "check": "rri",
                            "u": us,
                            "k": k,
                            "sign_twisted_residual": twisted,
                            "printed_pair_residual": printed,
                        })
                    } else {
                        let residual =
                            tau_residual(&base, uu, vv, ww).map_err(CliError::from)?;
                        json!({
                            "version": VERSION,
                            "check": "tau",
                            "u": us,
                            "k": k,
                            "residual": residual,
                        })
                    };
                    emit(&pretty(&doc), out.as_ref())?;
                    Ok(0)
                }
                TetraCheck::Export => {
                    let us = parse_reals(&u, 3).map_err(CliError::usage)?;
                    let w = w_explicit(us[0], us[1], us[2]).map_err(CliError::from)?;
                    let mut doc = w.to_json();
                    doc["version"] = json!(VERSION);
                    emit(&pretty(&doc), out.as_ref())?;
                    Ok(0)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
