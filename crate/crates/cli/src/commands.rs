use std::path::{Path, PathBuf};

use interlacing_core::families::{mp_phi_window, parse_angle, pj_admissible};
use interlacing_core::interlace::InconclusiveDetail;
use interlacing_core::scan::{
    analyze_pair, scan_conjecture1, scan_conjecture2, theorem_sweep, ScanKind, ScanResult,
    SweepSpec,
};
use interlacing_core::tables::{reproduce_table, TableId};
use interlacing_core::{Error, FamilyKind, FamilySpec, Verdict, ZeroSet};
use serde_json::{json, Value};

use crate::output::{
    cell, emit_error, flat_table, render_csv, render_json, to_rounded, write_output, CsvTable,
    ErrorBody, Format, OutputRecord,
};
use crate::{Command, FamilyArg, FamilyArgs, ScanArg};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INADMISSIBLE: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;
pub const EXIT_COUNTEREXAMPLE: u8 = 5;

struct Failure {
    code: &'static str,
    exit: u8,
    message: String,
    reason: Option<String>,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: "invalid-input",
            exit: EXIT_INPUT,
            message: message.into(),
            reason: None,
        }
    }
}

/// Maps a library error to an exit status. `admissibility` selects whether
/// range and discriminant errors count as inadmissible parameters or plain
/// input errors.
fn classify_error(e: Error, admissibility: bool) -> Failure {
    let message = e.to_string();
    let (code, exit, reason) = match e {
        Error::ComplexRoots { reason } if admissibility => {
            ("inadmissible", EXIT_INADMISSIBLE, Some(reason))
        }
        Error::DiscriminantNegative(_) if admissibility => {
            ("inadmissible", EXIT_INADMISSIBLE, Some("discriminant-negative".into()))
        }
        Error::OrthogonalityRange { .. } if admissibility => {
            ("inadmissible", EXIT_INADMISSIBLE, Some("orthogonality-range".into()))
        }
        Error::DegenerateConfiguration(_) => (
            "inadmissible",
            EXIT_INADMISSIBLE,
            Some("degenerate-configuration".into()),
        ),
        Error::NumericalFailure { .. } | Error::Ordering { .. } | Error::Arity(_) => {
            ("internal", EXIT_MISMATCH, None)
        }
        _ => ("invalid-input", EXIT_INPUT, None),
    };
    Failure {
        code,
        exit,
        message,
        reason,
    }
}

struct Output {
    record: OutputRecord,
    csv: Option<CsvTable>,
    exit: u8,
}

pub fn run(command: Command) -> u8 {
    let (name, io) = match &command {
        Command::Zeros(f) => ("zeros", &f.io),
        Command::ExtraPoints(f) => ("extra-points", &f.io),
        Command::Classify(f) => ("classify", &f.io),
        Command::Table { io, .. } => ("table", io),
        Command::Scan { io, .. } => ("scan", io),
    };
    let (format, out) = (io.format, io.out.clone());
    let result = match &command {
        Command::Zeros(f) => cmd_zeros(f),
        Command::ExtraPoints(f) => cmd_extra_points(f),
        Command::Classify(f) => cmd_classify(f),
        Command::Table { id, .. } => cmd_table(id),
        Command::Scan { kind, spec, .. } => cmd_scan(*kind, spec.as_deref()),
    };
    match result {
        Ok(output) => match emit(&output, format, out.as_deref()) {
            Ok(()) => output.exit,
            Err(e) => {
                emit_error(
                    name,
                    ErrorBody {
                        code: "io".into(),
                        exit_code: EXIT_INPUT as i32,
                        message: e.to_string(),
                        reason: None,
                    },
                );
                EXIT_INPUT
            }
        },
        Err(f) => {
            emit_error(
                name,
                ErrorBody {
                    code: f.code.into(),
                    exit_code: f.exit as i32,
                    message: f.message,
                    reason: f.reason,
                },
            );
            f.exit
        }
    }
}

fn emit(output: &Output, format: Format, out: Option<&Path>) -> std::io::Result<()> {
    let bytes = match format {
        Format::Json => render_json(&output.record),
        Format::Csv => match &output.csv {
            Some(table) => render_csv(table)?,
            None => render_csv(&flat_table(&output.record.payload))?,
        },
    };
    write_output(&bytes, out)
}

fn require(value: Option<f64>, flag: &str, family: &str) -> Result<f64, Failure> {
    value.ok_or_else(|| Failure::input(format!("{family} needs --{flag}")))
}

fn family_spec(args: &FamilyArgs) -> Result<(FamilySpec, Value), Failure> {
    let foreign = |flags: &[(&str, bool)]| -> Result<(), Failure> {
        match flags.iter().find(|(_, set)| *set) {
            Some((flag, _)) => Err(Failure::input(format!("--{flag} does not apply to this family"))),
            None => Ok(()),
        }
    };
    match args.family {
        FamilyArg::Jacobi => {
            foreign(&[
                ("lambda", args.lambda.is_some()),
                ("phi", args.phi.is_some()),
                ("a", args.a.is_some()),
                ("b", args.b.is_some()),
            ])?;
            let alpha = require(args.alpha, "alpha", "jacobi")?;
            let beta = require(args.beta, "beta", "jacobi")?;
            Ok((
                FamilySpec::Jacobi { alpha, beta },
                json!({"family": "jacobi", "alpha": alpha, "beta": beta, "n": args.n}),
            ))
        }
        FamilyArg::Mp => {
            foreign(&[
                ("alpha", args.alpha.is_some()),
                ("beta", args.beta.is_some()),
                ("a", args.a.is_some()),
                ("b", args.b.is_some()),
            ])?;
            let lambda = require(args.lambda, "lambda", "mp")?;
            let phi_text = args
                .phi
                .clone()
                .ok_or_else(|| Failure::input("mp needs --phi"))?;
            let phi = parse_angle(&phi_text).map_err(|e| classify_error(e, false))?;
            Ok((
                FamilySpec::MeixnerPollaczek { lambda, phi },
                json!({"family": "mp", "lambda": lambda, "phi": phi_text, "phi_radians": phi, "n": args.n}),
            ))
        }
        FamilyArg::Pj => {
            foreign(&[
                ("alpha", args.alpha.is_some()),
                ("beta", args.beta.is_some()),
                ("lambda", args.lambda.is_some()),
                ("phi", args.phi.is_some()),
            ])?;
            let a = require(args.a, "a", "pj")?;
            let b = require(args.b, "b", "pj")?;
            Ok((
                FamilySpec::PseudoJacobi { a, b },
                json!({"family": "pj", "a": a, "b": b, "n": args.n}),
            ))
        }
    }
}

fn cmd_zeros(args: &FamilyArgs) -> Result<Output, Failure> {
    let (family, inputs) = family_spec(args)?;
    let n = args.n;
    family
        .validate_degree(n)
        .map_err(|e| classify_error(e, false))?;
    let zeros = if n == 0 {
        ZeroSet::empty()
    } else {
        family
            .recurrence(n)
            .and_then(|t| t.zeros(n))
            .map_err(|e| classify_error(e, false))?
    };
    let payload = to_rounded(&json!({
        "family": family,
        "n": n,
        "zeros": zeros.as_slice(),
    }));
    let rows = payload["zeros"]
        .as_array()
        .map(|zs| {
            zs.iter()
                .enumerate()
                .map(|(k, z)| vec![(k + 1).to_string(), cell(z)])
                .collect()
        })
        .unwrap_or_default();
    Ok(Output {
        record: OutputRecord::new("zeros", inputs, payload, Vec::new()),
        csv: Some((vec!["k".into(), "zero".into()], rows)),
        exit: EXIT_OK,
    })
}

fn cmd_extra_points(args: &FamilyArgs) -> Result<Output, Failure> {
    let (family, inputs) = family_spec(args)?;
    let n = args.n;
    family.validate().map_err(|e| classify_error(e, false))?;
    if n == 0 {
        return Err(Failure::input("extra points need n >= 1"));
    }
    let extra = family
        .extra_points(n)
        .map_err(|e| classify_error(e, true))?;
    let mut payload = json!({ "extra_points": extra });
    let mut diagnostics = Vec::new();
    match family {
        FamilySpec::MeixnerPollaczek { lambda, .. } => {
            payload["mp_window"] = json!(mp_phi_window(n, lambda));
        }
        FamilySpec::PseudoJacobi { a, b } => {
            let adm = pj_admissible(n, a, b);
            if adm.closed_form_agrees == Some(false) {
                diagnostics.push("closed-form |b| threshold disagrees with the discriminant test".into());
            }
            payload["pj_admissibility"] = json!(adm);
        }
        FamilySpec::Jacobi { .. } => {}
    }
    Ok(Output {
        record: OutputRecord::new("extra-points", inputs, payload, diagnostics),
        csv: None,
        exit: EXIT_OK,
    })
}

/// A verdict the theorems rule out, or a predicted chain missing from the
/// zero data.
fn theorem_mismatch(verdict: &Verdict) -> bool {
    matches!(
        verdict,
        Verdict::ImpossibleConfig
            | Verdict::Inconclusive {
                detail: InconclusiveDetail::ChainViolated { .. }
            }
    )
}

fn cmd_classify(args: &FamilyArgs) -> Result<Output, Failure> {
    let (family, inputs) = family_spec(args)?;
    family.validate().map_err(|e| classify_error(e, false))?;
    if args.n == 0 {
        return Err(Failure::input("classify needs n >= 1"));
    }
    let analysis = analyze_pair(family, args.n).map_err(|e| classify_error(e, true))?;
    let mut diagnostics = analysis.report.diagnostics.clone();
    if !analysis.signs.all() {
        diagnostics.push(format!("hypothesis checks: {:?}", analysis.signs));
    }
    let r = &analysis.report;
    let exit = if theorem_mismatch(&r.verdict) || !r.parity_consistent {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    Ok(Output {
        record: OutputRecord::new("classify", inputs, to_rounded(&analysis), diagnostics),
        csv: None,
        exit,
    })
}

fn cmd_table(id: &str) -> Result<Output, Failure> {
    let table: TableId = id.parse().map_err(|_| Failure {
        code: "unknown-table",
        exit: EXIT_INPUT,
        message: format!("unknown table '{id}' (expected T2..T6)"),
        reason: None,
    })?;
    let cmp = reproduce_table(table).map_err(|e| Failure {
        code: "internal",
        exit: EXIT_MISMATCH,
        message: e.to_string(),
        reason: None,
    })?;
    let mut diagnostics = Vec::new();
    for b in &cmp.blocks {
        for c in b.cells.iter().filter(|c| !c.within) {
            diagnostics.push(format!(
                "n={} {}: printed {} computed {:.9} (abs {:.3e}, rel {:.3e})",
                b.n, c.label, c.printed, c.computed, c.abs_dev, c.rel_dev
            ));
        }
        if !b.verdict_matches {
            diagnostics.push(format!("n={}: verdict {} expected {}", b.n, b.verdict, b.expected_verdict));
        }
        if !b.placements_match || !b.note_matches {
            diagnostics.push(format!("n={}: placement or positional note differs", b.n));
        }
        if !b.root_sum.ok {
            diagnostics.push(format!("n={}: root-sum identity off by {:.3e}", b.n, b.root_sum.rel_err));
        }
    }
    let exit = if cmp.passed { EXIT_OK } else { EXIT_MISMATCH };
    Ok(Output {
        record: OutputRecord::new("table", json!({"table": table}), to_rounded(&cmp), diagnostics),
        csv: None,
        exit,
    })
}

fn resolve_spec(path: Option<&Path>) -> Result<Option<SweepSpec>, Failure> {
    let Some(path) = path else {
        return Ok(None);
    };
    let name = path.to_string_lossy();
    if (name == "default" || name == "default.grid") && !path.exists() {
        return Ok(None);
    }
    SweepSpec::from_file(path).map(Some).map_err(|e| Failure {
        code: "bad-spec",
        exit: EXIT_INPUT,
        message: e.to_string(),
        reason: None,
    })
}

fn cmd_scan(kind: ScanArg, spec_path: Option<&Path>) -> Result<Output, Failure> {
    let spec = resolve_spec(spec_path)?;
    let to_failure = |e: Error| Failure::input(e.to_string());
    let result: ScanResult = match kind {
        ScanArg::Conjecture1 => {
            let spec = spec.unwrap_or_else(SweepSpec::default_conjecture1);
            scan_conjecture1(&spec).map_err(to_failure)?
        }
        ScanArg::Conjecture2 => {
            let spec = spec.unwrap_or_else(SweepSpec::default_conjecture2);
            scan_conjecture2(&spec).map_err(to_failure)?
        }
        ScanArg::Theorem => match spec {
            Some(spec) => theorem_sweep(&spec, spec.kind().variant()).map_err(to_failure)?,
            None => {
                let mut merged: Option<ScanResult> = None;
                for family in [FamilyKind::Jacobi, FamilyKind::MeixnerPollaczek, FamilyKind::PseudoJacobi] {
                    let spec = SweepSpec::default_theorem(family);
                    let r = theorem_sweep(&spec, family.variant()).map_err(to_failure)?;
                    match merged.as_mut() {
                        Some(m) => m.merge(r),
                        None => merged = Some(r),
                    }
                }
                merged.expect("three default grids")
            }
        },
    };
    let mut diagnostics: Vec<String> = result
        .failed
        .iter()
        .map(|f| format!("n={} {}: {}", f.n, f.family, f.reason))
        .collect();
    diagnostics.extend(
        result
            .defects
            .iter()
            .map(|d| format!("record {}: {}", d.record, d.reason)),
    );
    let exit = match result.kind {
        ScanKind::Theorem if !result.defects.is_empty() => EXIT_MISMATCH,
        ScanKind::Conjecture1 | ScanKind::Conjecture2 if !result.counterexamples.is_empty() => {
            EXIT_COUNTEREXAMPLE
        }
        _ => EXIT_OK,
    };
    let inputs = json!({
        "kind": format!("{kind:?}").to_lowercase(),
        "spec": spec_path.map(PathBuf::from),
    });
    Ok(Output {
        record: OutputRecord::new("scan", inputs, to_rounded(&result), diagnostics),
        csv: None,
        exit,
    })
}
