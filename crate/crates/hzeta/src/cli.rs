//! Command-line front end: thin argument parsing and formatting over the
//! library. All numerics stay in the library modules; this file only
//! dispatches and prints.
//!
//! Exit codes: 0 success, 1 evaluation/verification failure (JSON error
//! object on stderr), 2 usage error.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde_json::json;

use crate::bernoulli::{generalized_bernoulli, rational_string};
use crate::error::Result;
use crate::precision::PrecisionContext;
use crate::roots;
use crate::verify;
use crate::zeta;

#[derive(Parser)]
#[command(
    name = "hzeta",
    about = "Hypergeometric zeta functions: evaluation, zeros, Bernoulli numbers",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Series,
    Integral,
    Strip,
    Leftsum,
}

#[derive(Clone, Copy, ValueEnum)]
enum RootFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate zeta_N(s) at one point; prints a JSON record.
    Eval {
        #[arg(long)]
        order: u32,
        #[arg(long, allow_negative_numbers = true)]
        re: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        im: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Absolute error target.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Tabulate the first K upper-half-plane zeros of e^z - T_{N-1}(z).
    Roots {
        #[arg(long)]
        order: u32,
        #[arg(long)]
        count: u32,
        #[arg(long, value_enum, default_value_t = RootFormat::Csv)]
        format: RootFormat,
    },
    /// Tabulate the generalized Bernoulli numbers B_{N,n}.
    Bernoulli {
        #[arg(long)]
        order: u32,
        #[arg(long)]
        max_n: u32,
        /// Print exact rationals instead of decimals.
        #[arg(long)]
        exact: bool,
    },
    /// List the poles of zeta_N and their residues.
    Residues {
        #[arg(long)]
        order: u32,
    },
    /// Run the self-verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Emit CSV samples of zeta_N(sigma) on a real grid, one column per order.
    PlotData {
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        orders: Vec<u32>,
        #[arg(long, default_value_t = 1.1, allow_negative_numbers = true)]
        sigma_min: f64,
        #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
        sigma_max: f64,
        #[arg(long, default_value_t = 0.05)]
        step: f64,
    },
}

/// Ten significant digits, for the CSV emitters.
fn fmt10(x: f64) -> String {
    format!("{x:.9e}")
}

fn eval_with_method(
    order: u32,
    s: Complex64,
    method: MethodArg,
    ctx: &PrecisionContext,
) -> Result<zeta::EvalResult> {
    match method {
        MethodArg::Auto => zeta::evaluate(order, s, ctx),
        MethodArg::Series => zeta::zeta_right_series(order, s, ctx),
        MethodArg::Integral => zeta::zeta_integral(order, s, ctx),
        MethodArg::Strip => zeta::zeta_strip(order, s, ctx),
        MethodArg::Leftsum => {
            let table = roots::root_table(order, 64, ctx)?;
            zeta::zeta_left_series(order, s, &table, ctx)
        }
    }
}

fn run_command<W: Write>(cmd: &Command, stdout: &mut W) -> Result<bool> {
    let write_err = |e: std::io::Error| crate::Error::InvalidInput(format!("write failed: {e}"));
    match cmd {
        Command::Eval {
            order,
            re,
            im,
            method,
            tol,
        } => {
            let ctx = PrecisionContext::with_tol(*tol);
            ctx.validate()?;
            let s = Complex64::new(*re, *im);
            let v = eval_with_method(*order, s, *method, &ctx)?;
            let record = json!({
                "order": order,
                "s": {"re": s.re, "im": s.im},
                "value": {"re": v.value.re, "im": v.value.im},
                "abs_err": v.abs_error_estimate,
                "method": v.method.as_str(),
                "region": v.region.as_str(),
            });
            writeln!(stdout, "{record}").map_err(write_err)?;
        }
        Command::Roots {
            order,
            count,
            format,
        } => {
            let ctx = PrecisionContext::default();
            let table = roots::root_table(*order, *count, &ctx)?;
            match format {
                RootFormat::Csv => write!(stdout, "{}", table.to_csv()).map_err(write_err)?,
                RootFormat::Json => writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string_pretty(&table).expect("table serializes")
                )
                .map_err(write_err)?,
            }
        }
        Command::Bernoulli {
            order,
            max_n,
            exact,
        } => {
            let table = generalized_bernoulli(*order, *max_n as usize)?;
            writeln!(stdout, "n,value").map_err(write_err)?;
            for n in 0..=*max_n as usize {
                if *exact {
                    writeln!(stdout, "{n},{}", rational_string(table.value(n)))
                        .map_err(write_err)?;
                } else {
                    writeln!(stdout, "{n},{}", fmt10(table.to_f64(n))).map_err(write_err)?;
                }
            }
        }
        Command::Residues { order } => {
            writeln!(stdout, "n,residue,residue_decimal").map_err(write_err)?;
            for n in (2 - *order as i64)..=1 {
                let r = zeta::residue_at(*order, n)?;
                writeln!(
                    stdout,
                    "{n},{},{}",
                    rational_string(&r),
                    fmt10(r.to_f64().unwrap_or(f64::NAN))
                )
                .map_err(write_err)?;
            }
        }
        Command::Verify { suite, format } => {
            let ctx = PrecisionContext::default();
            let reports = verify::run_suite(suite, &ctx)?;
            match format {
                ReportFormat::Table => {
                    write!(stdout, "{}", verify::reports_to_table(&reports)).map_err(write_err)?
                }
                ReportFormat::Json => {
                    writeln!(stdout, "{}", verify::reports_to_json(&reports)).map_err(write_err)?
                }
            }
            return Ok(verify::all_passed(&reports));
        }
        Command::PlotData {
            orders,
            sigma_min,
            sigma_max,
            step,
        } => {
            if orders.is_empty() || !(*step > 0.0) || sigma_max < sigma_min {
                return Err(crate::Error::InvalidInput(
                    "need a non-empty order list, positive step, and sigma_max >= sigma_min".into(),
                ));
            }
            let ctx = PrecisionContext::default();
            let header: Vec<String> = orders.iter().map(|n| format!("zeta{n}")).collect();
            writeln!(stdout, "sigma,{}", header.join(",")).map_err(write_err)?;
            let steps = ((sigma_max - sigma_min) / step).round() as usize;
            for i in 0..=steps {
                let sigma = sigma_min + *step * i as f64;
                if sigma > *sigma_max + 0.5 * step {
                    break;
                }
                let mut row = vec![fmt10(sigma)];
                for &order in orders {
                    let v = zeta::evaluate(order, Complex64::new(sigma, 0.0), &ctx)?;
                    row.push(fmt10(v.value.re));
                }
                writeln!(stdout, "{}", row.join(",")).map_err(write_err)?;
            }
        }
    }
    Ok(true)
}

/// Parse and run; returns the process exit code. Both streams are injected so
/// tests can capture output.
pub fn run<W: Write, E: Write>(args: &[String], stdout: &mut W, stderr: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    match run_command(&cli.command, stdout) {
        Ok(true) => 0,
        Ok(false) => {
            let _ = writeln!(stderr, "{}", json!({"error": "verification failures"}));
            1
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", json!({"error": e.to_string()}));
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let argv: Vec<String> = std::iter::once("hzeta".to_string())
            .chain(args.iter().map(|s| s.to_string()))
            .collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(&argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_emits_json_record() {
        let (code, out, _) = run_capture(&["eval", "--order", "2", "--re", "2"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["order"], 2);
        assert!((v["value"]["re"].as_f64().unwrap() - 2.24055254423856).abs() < 1e-9);
        assert!(v["abs_err"].as_f64().unwrap() < 1e-9);
        assert_eq!(v["region"], "right");
    }

    #[test]
    fn eval_forced_method_and_failure_path() {
        let (code, out, _) = run_capture(&[
            "eval", "--order", "1", "--re", "-0.5", "--method", "leftsum",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["value"]["re"].as_f64().unwrap() + 0.2078862249773545).abs() < 1e-9);
        // forcing the series off its region is an error, not a wrong number
        let (code, _, err) =
            run_capture(&["eval", "--order", "1", "--re", "-0.5", "--method", "series"]);
        assert_eq!(code, 1);
        let e: serde_json::Value = serde_json::from_str(&err).unwrap();
        assert!(e["error"].is_string());
    }

    #[test]
    fn pole_is_an_error() {
        let (code, _, err) = run_capture(&["eval", "--order", "2", "--re", "1"]);
        assert_eq!(code, 1);
        assert!(err.contains("pole"));
    }

    #[test]
    fn usage_error_is_exit_two() {
        let (code, _, _) = run_capture(&["eval", "--order", "2"]);
        assert_eq!(code, 2);
        let (code, _, _) = run_capture(&["no-such-command"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn roots_csv_and_json_agree() {
        let (code, csv, _) = run_capture(&["roots", "--order", "2", "--count", "3"]);
        assert_eq!(code, 0);
        assert_eq!(csv.lines().count(), 4); // header + 3 rows
        let (code, js, _) =
            run_capture(&["roots", "--order", "2", "--count", "3", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        assert_eq!(v["roots"].as_array().unwrap().len(), 3);
        let x0 = v["roots"][0]["x"].as_f64().unwrap();
        let x0_csv: f64 = csv
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .nth(1)
            .unwrap()
            .parse()
            .unwrap();
        assert!((x0 - x0_csv).abs() < 1e-9);
    }

    #[test]
    fn bernoulli_exact_and_decimal() {
        let (code, out, _) = run_capture(&["bernoulli", "--order", "2", "--max-n", "4", "--exact"]);
        assert_eq!(code, 0);
        assert!(out.contains("2,1/18"));
        assert!(out.contains("4,-1/270"));
        let (code, out, _) = run_capture(&["bernoulli", "--order", "2", "--max-n", "2"]);
        assert_eq!(code, 0);
        let b2: f64 = out
            .lines()
            .nth(3)
            .unwrap()
            .split(',')
            .nth(1)
            .unwrap()
            .parse()
            .unwrap();
        assert!((b2 - 1.0 / 18.0).abs() < 1e-9);
    }

    #[test]
    fn residues_lists_every_pole() {
        let (code, out, _) = run_capture(&["residues", "--order", "3"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 4); // header + poles at -1, 0, 1
        assert!(lines[3].starts_with("1,3,"));
        assert!(lines[1].starts_with("-1,3/40,"));
    }

    #[test]
    fn plot_data_grid_shape() {
        let (code, out, _) = run_capture(&[
            "plot-data",
            "--orders",
            "1,2",
            "--sigma-min",
            "2",
            "--sigma-max",
            "3",
            "--step",
            "0.5",
        ]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "sigma,zeta1,zeta2");
        assert_eq!(lines.len(), 4); // header + sigma in {2, 2.5, 3}
        let z1: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
        assert!((z1 - std::f64::consts::PI * std::f64::consts::PI / 6.0).abs() < 1e-8);
    }

    #[test]
    fn verify_tables_suite_passes() {
        let (code, out, _) = run_capture(&["verify", "--suite", "tables"]);
        assert_eq!(code, 0);
        assert!(out.contains("reference-tables"));
        assert!(out.contains("pass"));
        let (code, _, err) = run_capture(&["verify", "--suite", "bogus"]);
        assert_eq!(code, 1);
        assert!(err.contains("unknown suite"));
    }
}
