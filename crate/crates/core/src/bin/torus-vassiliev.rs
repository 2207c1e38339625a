use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use torus_vassiliev::analysis::{
    auxiliary_scalars, beta_curve, lissajous_obstructed, lissajous_obstruction, non_integer_witnesses,
};
use torus_vassiliev::ansatz::{compare_with_printed, fit_ansatz};
use torus_vassiliev::closed_form::{closed_form_alpha, closed_form_alpha_tilde, closed_form_beta};
use torus_vassiliev::extract::{solve_invariants, ExtractionReport};
use torus_vassiliev::knot::{canonicalize, CanonicalForm};
use torus_vassiliev::output::{self, OutputDocument};
use torus_vassiliev::polynomials::{normalized_series, unnormalized_series, Precision};
use torus_vassiliev::rational::to_fraction_string;
use torus_vassiliev::verify::{run_suite, Suite, VerifyOptions};
use torus_vassiliev::{Error, GroupFamily, GroupInstance, InvariantTable, TorusKnot, DEFAULT_GUARD, MAX_ORDER};

#[derive(Parser)]
#[command(name = "torus-vassiliev", version, about = "Exact Vassiliev invariants of torus knots up to order six")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Solve the linear systems built from the series expansions.
    Solve,
    /// Evaluate the closed-form polynomials.
    ClosedForm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "su_n")]
    SuN,
    #[value(name = "so_n")]
    SoN,
    #[value(name = "su2")]
    Su2,
    #[value(name = "su_n_x_su2")]
    SuNXSu2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    LissajousObstructed,
    NonInteger,
    BetaCurve,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    ClosedForms,
    Relations,
    Integrality,
    Injectivity,
    CrossChecks,
    Ansatz,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// α̃, α and β tables of a torus knot, with derived scalars.
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = MAX_ORDER as i64)]
        order: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "solve")]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard_terms: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Series coefficients of one group's invariant.
    Expand {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long = "N")]
        big_n: Option<i64>,
        #[arg(long)]
        j: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value_t = MAX_ORDER as i64)]
        order: i64,
        #[arg(long)]
        unnormalized: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard_terms: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exits 1 on any failure.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long)]
        bound: Option<i64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scans over canonical torus knots.
    Scan {
        #[arg(long, value_enum)]
        predicate: Predicate,
        #[arg(long, default_value_t = 10)]
        max: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit the g-polynomials of a family and compare with the reference table.
    Fit {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotAKnot { .. } => 2,
            Error::Unsupported(_)
            | Error::InvalidGroup(_)
            | Error::SingularBracket { .. }
            | Error::GuardInsufficient { .. }
            | Error::ZeroCasimirDivision { .. } => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn unsupported(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

/// Text to emit and whether it represents a verification failure.
struct Emitted {
    text: String,
    failed: Option<String>,
}

fn ok(text: String) -> Result<Emitted, Failure> {
    Ok(Emitted { text, failed: None })
}

fn knot(n: i64, m: i64) -> Result<TorusKnot, Failure> {
    Ok(TorusKnot::new(n, m)?)
}

fn check_order(order: i64) -> Result<(), Failure> {
    if !(0..=MAX_ORDER as i64).contains(&order) {
        return Err(unsupported(format!("order {order} is not supported (0..={MAX_ORDER})")));
    }
    Ok(())
}

fn family_of(f: Family) -> GroupFamily {
    match f {
        Family::SuN => GroupFamily::SuN,
        Family::SoN => GroupFamily::SoN,
        Family::Su2 => GroupFamily::Su2,
        Family::SuNXSu2 => GroupFamily::SuNxSu2,
    }
}

fn invariants(n: i64, m: i64, order: i64, format: Format, method: Method, guard: u32) -> Result<Emitted, Failure> {
    let k = knot(n, m)?;
    check_order(order)?;
    let precision = Precision::new(order, guard);
    let order = order as u8;
    let (tilde, alpha, beta, reports): (InvariantTable, InvariantTable, InvariantTable, Option<[ExtractionReport; 2]>) =
        match method {
            Method::ClosedForm => (
                closed_form_alpha_tilde(&k).restricted(order),
                closed_form_alpha(&k).restricted(order),
                closed_form_beta(&k).restricted(order),
                None,
            ),
            Method::Solve => {
                let s = solve_invariants(&k, precision)?;
                (s.alpha_tilde, s.alpha, s.beta, Some([s.alpha_tilde_report, s.alpha_report]))
            }
        };
    let aux = auxiliary_scalars(&k);
    let lissajous = match lissajous_obstruction(&k) {
        torus_vassiliev::analysis::LissajousVerdict::Obstructed => "obstructed",
        torus_vassiliev::analysis::LissajousVerdict::Inconclusive => "inconclusive",
    };
    let canonical = match canonicalize(n, m)? {
        CanonicalForm::Unknot => Value::Null,
        CanonicalForm::Torus(c) => json!({ "n": c.n(), "m": c.m() }),
    };
    match format {
        Format::Json => {
            let mut payload = json!({
                "knot": output::knot_json(&k),
                "canonical": canonical,
                "unknot": k.is_unknot(),
                "order": order,
                "method": match method { Method::Solve => "solve", Method::ClosedForm => "closed-form" },
                "guard_terms": guard,
                "alpha_tilde": output::table_json(&tilde),
                "alpha": output::table_json(&alpha),
                "beta": output::table_json(&beta),
                "derived": {
                    "v3": aux.v3.as_ref().map(output::rational_json),
                    "gordian": output::rational_json(&aux.gordian),
                    "lissajous": lissajous,
                    "curve_residual": output::rational_json(&aux.curve_residual),
                },
            });
            if let Some([r1, r2]) = &reports {
                payload["extraction"] = json!({
                    "alpha_tilde": output::extraction_report_json(r1),
                    "alpha": output::extraction_report_json(r2),
                });
            }
            let args =
                json!({ "n": n, "m": m, "order": order, "method": payload["method"].clone(), "guard_terms": guard });
            ok(OutputDocument::new("invariants", args, payload).to_json())
        }
        Format::Csv => ok(output::tables_csv(&[&tilde, &alpha, &beta])),
        Format::Table => {
            let mut rows = Vec::new();
            for t in [&tilde, &alpha, &beta] {
                for (slot, v) in &t.entries {
                    rows.push(vec![t.kind.name().to_string(), slot.id(), to_fraction_string(v)]);
                }
            }
            let mut text = format!("knot {k}{}\n", if k.is_unknot() { " (unknot)" } else { "" });
            text += &output::rows_table(&["kind", "slot", "value"], &rows);
            text += &format!(
                "v3 {}\ngordian {}\nlissajous {lissajous}\ncurve_residual {}\n",
                aux.v3.as_ref().map(to_fraction_string).unwrap_or_else(|| "n/a".into()),
                to_fraction_string(&aux.gordian),
                to_fraction_string(&aux.curve_residual)
            );
            ok(text)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn expand(
    family: Family,
    big_n: Option<i64>,
    j: Option<i64>,
    n: i64,
    m: i64,
    order: i64,
    unnormalized: bool,
    format: Format,
    guard: u32,
) -> Result<Emitted, Failure> {
    let k = knot(n, m)?;
    check_order(order)?;
    let need =
        |v: Option<i64>, name: &str| v.ok_or_else(|| unsupported(format!("--{name} is required for this family")));
    let group = match family {
        Family::SuN => GroupInstance::su_n(need(big_n, "N")?)?,
        Family::SoN => GroupInstance::so_n(need(big_n, "N")?)?,
        Family::Su2 => GroupInstance::su2(need(j, "j")?)?,
        Family::SuNXSu2 => GroupInstance::su_n_x_su2(need(big_n, "N")?, need(j, "j")?)?,
    };
    let precision = Precision::new(order, guard);
    let series = if unnormalized {
        unnormalized_series(&k, &group, precision)?
    } else {
        normalized_series(&k, &group, precision)?
    };
    let coefficients = series.power_coefficients(order)?;
    match format {
        Format::Json => {
            let payload = json!({
                "group": group.to_string(),
                "family": family_of(family).name(),
                "knot": output::knot_json(&k),
                "order": order,
                "normalized": !unnormalized,
                "coefficients": output::series_json(&coefficients),
            });
            let args = json!({
                "family": family_of(family).name(), "N": big_n, "j": j, "n": n, "m": m,
                "order": order, "unnormalized": unnormalized, "guard_terms": guard,
            });
            ok(OutputDocument::new("expand", args, payload).to_json())
        }
        Format::Csv | Format::Table => {
            let rows: Vec<Vec<String>> =
                coefficients.iter().enumerate().map(|(d, c)| vec![d.to_string(), to_fraction_string(c)]).collect();
            ok(match format {
                Format::Csv => output::rows_csv(&["degree", "coefficient"], &rows),
                _ => output::rows_table(&["degree", "coefficient"], &rows),
            })
        }
    }
}

fn verify(suite: SuiteArg, bound: Option<i64>, format: Format, inject: bool) -> Result<Emitted, Failure> {
    let suite = match suite {
        SuiteArg::ClosedForms => Suite::ClosedForms,
        SuiteArg::Relations => Suite::Relations,
        SuiteArg::Integrality => Suite::Integrality,
        SuiteArg::Injectivity => Suite::Injectivity,
        SuiteArg::CrossChecks => Suite::CrossChecks,
        SuiteArg::Ansatz => Suite::Ansatz,
        SuiteArg::All => Suite::All,
    };
    if bound.is_some_and(|b| b < 2) {
        return Err(unsupported("--bound must be at least 2"));
    }
    let options = VerifyOptions { bound, inject_sign_error: inject, ..VerifyOptions::new() };
    let reports = run_suite(suite, &options)?;
    let first = reports.iter().find_map(|r| r.first_failure()).map(|c| c.id.clone());
    let passed = first.is_none();
    let text = match format {
        Format::Json => {
            let payload = json!({
                "passed": passed,
                "first_failure": first,
                "suites": reports.iter().map(output::suite_report_json).collect::<Vec<_>>(),
            });
            OutputDocument::new("verify", json!({ "suite": suite.name(), "bound": bound }), payload).to_json()
        }
        Format::Csv | Format::Table => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .flat_map(|r| r.checks.iter())
                .map(|c| {
                    vec![c.id.clone(), c.checked.to_string(), if c.passed() { "pass" } else { "FAIL" }.to_string()]
                })
                .collect();
            match format {
                Format::Csv => output::rows_csv(&["check", "checked", "result"], &rows),
                _ => output::rows_table(&["check", "checked", "result"], &rows),
            }
        }
    };
    Ok(Emitted { text, failed: first })
}

fn scan(predicate: Predicate, max: i64, format: Format) -> Result<Emitted, Failure> {
    if max < 2 {
        return Err(unsupported("--max must be at least 2"));
    }
    let (name, header, rows): (&str, Vec<&str>, Vec<Vec<String>>) = match predicate {
        Predicate::LissajousObstructed => (
            "lissajous-obstructed",
            vec!["n", "m", "beta_2_1"],
            lissajous_obstructed(max)
                .iter()
                .map(|k| vec![k.n.to_string(), k.m.to_string(), to_fraction_string(&closed_form_beta(k).get(2, 1))])
                .collect(),
        ),
        Predicate::NonInteger => (
            "non-integer",
            vec!["n", "m", "invariant", "value"],
            non_integer_witnesses(max)
                .iter()
                .map(|w| {
                    vec![
                        w.n.to_string(),
                        w.m.unwrap_or_default().to_string(),
                        w.id.clone(),
                        to_fraction_string(&w.value),
                    ]
                })
                .collect(),
        ),
        Predicate::BetaCurve => (
            "beta-curve",
            vec!["n", "m", "beta_2_1", "beta_3_1"],
            beta_curve(max)
                .iter()
                .map(|(k, b21, b31)| {
                    vec![k.n.to_string(), k.m.to_string(), to_fraction_string(b21), to_fraction_string(b31)]
                })
                .collect(),
        ),
    };
    ok(match format {
        Format::Json => {
            let records: Vec<Value> = rows
                .iter()
                .map(|row| {
                    let mut obj = serde_json::Map::new();
                    for (h, cell) in header.iter().zip(row) {
                        let value = match h {
                            &"n" | &"m" => json!(cell.parse::<i64>().expect("integer label")),
                            &"invariant" => json!(cell),
                            _ => output::rational_json(&torus_vassiliev::rational::parse(cell).expect("exact value")),
                        };
                        obj.insert(h.to_string(), value);
                    }
                    Value::Object(obj)
                })
                .collect();
            let payload = json!({ "predicate": name, "max": max, "count": records.len(), "results": records });
            OutputDocument::new("scan", json!({ "predicate": name, "max": max }), payload).to_json()
        }
        Format::Csv => output::rows_csv(&header, &rows),
        Format::Table => output::rows_table(&header, &rows),
    })
}

fn fit(family: Family, format: Format) -> Result<Emitted, Failure> {
    let fit = fit_ansatz(family_of(family), Precision::default())?;
    let comparison = compare_with_printed(&fit)?;
    ok(match format {
        Format::Json => {
            let payload = output::ansatz_json(&fit, &comparison);
            OutputDocument::new("fit", json!({ "family": family_of(family).name() }), payload).to_json()
        }
        Format::Csv | Format::Table => {
            let rows: Vec<Vec<String>> = comparison
                .iter()
                .map(|c| vec![c.slot.id(), format!("{:?}", c.status), c.fitted.to_string(), c.printed_text.to_string()])
                .collect();
            let header = ["slot", "status", "fitted", "printed"];
            match format {
                Format::Csv => output::rows_csv(&header, &rows),
                _ => output::rows_table(&header, &rows),
            }
        }
    })
}

fn write_out(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure { code: 3, message: format!("{}: {e}", path.display()) })
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure { code: 3, message: e.to_string() })
        }
    }
}

fn run(cli: Cli) -> Result<Option<String>, Failure> {
    let (emitted, out) = match cli.command {
        Command::Invariants { n, m, order, format, method, guard_terms, out } => {
            (invariants(n, m, order, format, method, guard_terms)?, out)
        }
        Command::Expand { family, big_n, j, n, m, order, unnormalized, format, guard_terms, out } => {
            (expand(family, big_n, j, n, m, order, unnormalized, format, guard_terms)?, out)
        }
        Command::Verify { suite, bound, format, inject_fault, out } => {
            (verify(suite, bound, format, inject_fault)?, out)
        }
        Command::Scan { predicate, max, format, out } => (scan(predicate, max, format)?, out),
        Command::Fit { family, format, out } => (fit(family, format)?, out),
    };
    write_out(&emitted.text, out.as_ref())?;
    Ok(emitted.failed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(first)) => {
            eprintln!("verification failed: {first}");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
