//! The `hawaii` command line: argument parsing, report assembly, text and
//! JSON rendering, and the exit-code contract.
//!
//! Exit codes: `0` success, `1` some asserted verdict or claim failed,
//! `2` bad input (parse, usage, parameter out of range), `3` a computation
//! that could not finish (search exhausted, perfect power in `--exact`).

pub mod report;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{family_by_name, ClaimStatus, FamilyInstance, Params};
use crate::kappa::{
    interval_partition, kappa_breakpoints_exact, kappa_sweep_grid, m_eval, per_interval_counts_with, q_reduced,
};
use crate::poly::{format_rational, parse_poly, parse_rational, parse_rational_list, Poly, Rational};
use crate::roots::ratio_to_f64;
use crate::theorems::{random_trials, verify_all, KappaChoice, Outcome, RootMode, TheoremVerdict, TrialConfig};

use report::{AnalyzeResult, GridRowView, ReportEnvelope, SweepResult, Timing, TrialsResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hawaii", version, about = "Exact zero counts for k(p')^2 - p p'' and related checks")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// H_k, the reduced Q_k, the interval partition and all zero counts.
    Analyze {
        /// Coefficients lowest degree first (`-1,0,1`) or `roots:1,2;lc:3`.
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        kappa: String,
    },
    /// Zero counts as k varies, on a grid or between exact breakpoints.
    Sweep {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// `lo:hi:step`, all rationals.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "exact")]
        range: Option<String>,
        #[arg(long)]
        exact: bool,
        /// Write `x,M[p](x)` samples as CSV, skipping poles.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Sample grid for `--plot`, `lo:hi:step`.
        #[arg(long, default_value = "-5:5:1/20", allow_hyphen_values = true)]
        plot_grid: String,
    },
    /// Every applicable statement for one polynomial at each k.
    Verify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Comma-separated rationals.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        kappa: String,
    },
    /// Seeded random campaign over generated polynomials.
    Trials {
        /// arbitrary, p-real-simple, p-prime-real-simple, both, real-rooted.
        #[arg(long, default_value = "arbitrary")]
        mode: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma list of rationals, `drop`, `drop+r` or `regimes`.
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<String>,
        #[arg(long, default_value_t = 2)]
        min_degree: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 10)]
        coeff_bound: i64,
        /// Include every per-trial verdict in the report.
        #[arg(long)]
        records: bool,
    },
    /// A named polynomial family with its claims checked.
    Family {
        name: String,
        /// `key=value` with a rational value; repeatable.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
    },
}

/// A finished command: its report and whether anything asserted failed.
pub struct Outcomes {
    pub json: String,
    pub text: String,
    pub failed: bool,
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SearchExhausted { .. } | Error::PerfectPower | Error::NoThreshold(_) => EXIT_COMPUTATION,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to stdout. Returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let body = if cli.json { out.json } else { out.text };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", body.trim_end());
            if out.failed {
                EXIT_FAILED
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn envelope<T: Serialize>(
    command: &'static str,
    input: BTreeMap<&'static str, String>,
    results: T,
    started: Instant,
) -> String {
    let env = ReportEnvelope {
        tool: "hawaii",
        version: env!("CARGO_PKG_VERSION"),
        command,
        input,
        results,
        timing: Timing {
            elapsed_ms: started.elapsed().as_millis(),
        },
    };
    serde_json::to_string_pretty(&env).expect("report types serialize")
}

/// Runs a parsed command without touching stdout.
pub fn execute(cli: &Cli) -> Result<Outcomes> {
    let started = Instant::now();
    match &cli.command {
        Command::Analyze { poly, kappa } => cmd_analyze(poly, kappa, started),
        Command::Sweep {
            poly,
            range,
            exact,
            plot,
            plot_grid,
        } => cmd_sweep(poly, range.as_deref(), *exact, plot.as_deref(), plot_grid, started),
        Command::Verify { poly, kappa } => cmd_verify(poly, kappa, started),
        Command::Trials {
            mode,
            trials,
            seed,
            kappa,
            min_degree,
            max_degree,
            coeff_bound,
            records,
        } => {
            let mut cfg = TrialConfig {
                mode: mode.parse::<RootMode>()?,
                trials: *trials,
                seed: *seed,
                min_degree: *min_degree,
                max_degree: *max_degree,
                coeff_bound: *coeff_bound,
                ..TrialConfig::default()
            };
            if let Some(k) = kappa {
                cfg.kappas = k.split(',').map(str::parse::<KappaChoice>).collect::<Result<_>>()?;
            }
            cmd_trials(cfg, *records, started)
        }
        Command::Family { name, params } => cmd_family(name, params, started),
    }
}

fn parse_range(s: &str) -> Result<(Rational, Rational, Rational)> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("expected lo:hi:step, found `{s}`"),
        });
    }
    let lo = parse_rational(parts[0])?;
    let hi = parse_rational(parts[1])?;
    let step = parse_rational(parts[2])?;
    if lo >= hi || step <= Rational::from_integer(0.into()) {
        return Err(Error::InvalidParameter(format!("range `{s}` needs lo < hi and step > 0")));
    }
    Ok((lo, hi, step))
}

pub fn cmd_analyze(poly: &str, kappa: &str, started: Instant) -> Result<Outcomes> {
    let p = parse_poly(poly)?;
    let k = parse_rational(kappa)?;
    let hq = q_reduced(&p, &k)?;
    let part = interval_partition(&p)?;
    let counts = if hq.degenerate {
        None
    } else {
        Some(per_interval_counts_with(&p, &k, &part)?)
    };
    let res = AnalyzeResult::build(&p, &hq, &part, counts.as_ref());

    let mut t = String::new();
    let _ = writeln!(t, "p      = {}  (degree {})", res.p, res.degree);
    let _ = writeln!(t, "k      = {}", res.kappa);
    let _ = writeln!(t, "H_k    = {}", res.h);
    if res.h_degenerate {
        let _ = writeln!(t, "H_k vanishes identically: p is a perfect power and k = (m-1)/m");
    } else {
        let _ = writeln!(t, "Q_k    = ({}) / ({})", res.q_num, res.q_den);
    }
    let _ = writeln!(t, "\n  #  interval                          type    tags          Z(H)  Z(Q)");
    for iv in &res.intervals {
        let span = format!("({}, {})", iv.lo, iv.hi);
        let show = |c: Option<usize>| c.map_or("-".to_string(), |c| c.to_string());
        let _ = writeln!(
            t,
            "{:>3}  {:<32}  {:<6}  {:<5}/{:<6}  {:>4}  {:>4}",
            iv.index,
            span,
            iv.kind,
            iv.left_tag,
            iv.right_tag,
            show(iv.count_h),
            show(iv.count_q)
        );
    }
    if let Some(c) = &res.totals {
        let _ = writeln!(
            t,
            "\nZ_R(p) = {}  Z_C(p) = {}  Z_R(H) = {}  Z_R(Q) = {}  (H zeros at poles {}, at multiple roots {})",
            c.z_r_p, c.z_c_p, c.z_r_h, c.z_r_q, c.h_zeros_at_poles, c.h_zeros_at_multiple_roots
        );
    }
    let input = BTreeMap::from([("poly", p.to_string()), ("kappa", format_rational(&k))]);
    Ok(Outcomes {
        json: envelope("analyze", input, res, started),
        text: t,
        failed: false,
    })
}

fn write_plot(p: &Poly, grid: &str, path: &Path) -> Result<usize> {
    let (lo, hi, step) = parse_range(grid)?;
    let mut out = String::from("x,m\n");
    let mut rows = 0;
    let mut x = lo;
    while x <= hi {
        match m_eval(p, &x) {
            Ok(m) => {
                let _ = writeln!(out, "{},{}", ratio_to_f64(&x), ratio_to_f64(&m));
                rows += 1;
            }
            Err(Error::Pole { .. }) => {}
            Err(e) => return Err(e),
        }
        x += &step;
    }
    std::fs::write(path, out)
        .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
    Ok(rows)
}

pub fn cmd_sweep(
    poly: &str,
    range: Option<&str>,
    exact: bool,
    plot: Option<&Path>,
    plot_grid: &str,
    started: Instant,
) -> Result<Outcomes> {
    let p = parse_poly(poly)?;
    let mut input = BTreeMap::from([("poly", p.to_string())]);
    let mut t = String::new();
    let res = if exact {
        input.insert("mode", "exact".into());
        let b = kappa_breakpoints_exact(&p)?;
        let res = SweepResult::exact(&p, &b);
        if let SweepResult::Exact { breakpoints, gaps, .. } = &res {
            let _ = writeln!(t, "p = {p}");
            let _ = writeln!(t, "{} breakpoint(s)", breakpoints.len());
            for (i, g) in gaps.iter().enumerate() {
                let _ = writeln!(
                    t,
                    "  ({}, {})  Z_R(H) = {}  Z_R(Q) = {}",
                    g.lo, g.hi, g.z_r_h, g.z_r_q
                );
                if let Some(bp) = breakpoints.get(i) {
                    let show = |c: Option<usize>| c.map_or("-".to_string(), |c| c.to_string());
                    let _ = writeln!(
                        t,
                        "  k = {}  Z_R(H) = {}  Z_R(Q) = {}",
                        bp.at,
                        show(bp.z_r_h),
                        show(bp.z_r_q)
                    );
                }
            }
        }
        res
    } else {
        let text = range.unwrap_or("0:1:1/10");
        input.insert("range", text.to_string());
        let (lo, hi, step) = parse_range(text)?;
        let rows: Vec<GridRowView> = kappa_sweep_grid(&p, &lo, &hi, &step)?.iter().map(Into::into).collect();
        let _ = writeln!(t, "p = {p}");
        let _ = writeln!(t, "{:>12}  {:>6}  {:>6}", "k", "Z_R(H)", "Z_R(Q)");
        for r in &rows {
            let show = |c: Option<usize>| c.map_or("-".to_string(), |c| c.to_string());
            let mut flags = String::new();
            if r.on_breakpoint {
                flags.push_str("  breakpoint");
            }
            if r.degree_drop {
                flags.push_str("  degree drop");
            }
            let _ = writeln!(t, "{:>12}  {:>6}  {:>6}{flags}", r.kappa, show(r.z_r_h), show(r.z_r_q));
        }
        SweepResult::Grid { p: p.clone(), rows }
    };
    if let Some(path) = plot {
        let n = write_plot(&p, plot_grid, path)?;
        input.insert("plot", path.display().to_string());
        input.insert("plot_grid", plot_grid.to_string());
        let _ = writeln!(t, "wrote {n} samples of M[p] to {}", path.display());
    }
    Ok(Outcomes {
        json: envelope("sweep", input, res, started),
        text: t,
        failed: false,
    })
}

fn outcome_str(o: Outcome) -> &'static str {
    match o {
        Outcome::Pass => "PASS",
        Outcome::Fail => "FAIL",
        Outcome::Inapplicable => "n/a",
        Outcome::DegenerateRange => "EMPTY",
        Outcome::Boundary => "BOUNDARY",
        Outcome::Discrepancy => "DISCREPANCY",
    }
}

fn verdict_line(v: &TheoremVerdict) -> String {
    let k = v.kappa.as_ref().map_or(String::new(), |k| format!(" k={}", format_rational(k)));
    let pred = v.predicted.as_ref().map_or(String::new(), |p| format!("  predicted {p}"));
    let comp = v.computed.map_or(String::new(), |c| format!("  computed {c}"));
    format!("{:<11} {}{k}{pred}{comp}  ({})", outcome_str(v.outcome), v.id, v.reason)
}

pub fn cmd_verify(poly: &str, kappa: &str, started: Instant) -> Result<Outcomes> {
    let p = parse_poly(poly)?;
    let kappas = parse_rational_list(kappa)?;
    let verdicts = verify_all(&p, &kappas)?;
    let failed = verdicts.iter().any(TheoremVerdict::failed);
    let mut t = format!("p = {p}\n");
    for v in &verdicts {
        t.push_str(&verdict_line(v));
        t.push('\n');
    }
    let fails = verdicts.iter().filter(|v| v.failed()).count();
    let _ = writeln!(t, "{} verdict(s), {fails} failed", verdicts.len());
    let input = BTreeMap::from([
        ("poly", p.to_string()),
        ("kappa", kappas.iter().map(format_rational).collect::<Vec<_>>().join(",")),
    ]);
    Ok(Outcomes {
        json: envelope("verify", input, verdicts, started),
        text: t,
        failed,
    })
}

pub fn cmd_trials(cfg: TrialConfig, keep_records: bool, started: Instant) -> Result<Outcomes> {
    let report = random_trials(&cfg)?;
    let res = TrialsResult::new(report, keep_records);
    let mut t = format!(
        "{} trials, mode {:?}, degrees {}..={}, seed {}\n",
        cfg.trials, cfg.mode, cfg.min_degree, cfg.max_degree, cfg.seed
    );
    let _ = writeln!(
        t,
        "{:<22} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
        "statement", "pass", "fail", "n/a", "empty", "bound", "discr"
    );
    for (id, tl) in &res.tally {
        let _ = writeln!(
            t,
            "{:<22} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
            id.tag(),
            tl.pass,
            tl.fail,
            tl.inapplicable,
            tl.degenerate_range,
            tl.boundary,
            tl.discrepancy
        );
    }
    let _ = writeln!(t, "{} failure(s)", res.failure_count);
    for f in res.failures.iter().take(20) {
        let _ = writeln!(t, "  #{} {}: {}", f.index, f.id, f.replay);
    }
    let input = BTreeMap::from([
        ("mode", cfg.mode.name().to_string()),
        ("trials", cfg.trials.to_string()),
        ("seed", cfg.seed.to_string()),
    ]);
    let failed = res.failure_count > 0;
    Ok(Outcomes {
        json: envelope("trials", input, res, started),
        text: t,
        failed,
    })
}

fn parse_params(raw: &[String]) -> Result<Params> {
    let mut out = Params::new();
    for item in raw {
        let (k, v) = item.split_once('=').ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("expected key=value, found `{item}`"),
        })?;
        out.insert(k.trim().to_string(), parse_rational(v)?);
    }
    Ok(out)
}

fn claim_status_str(s: ClaimStatus) -> &'static str {
    match s {
        ClaimStatus::Holds => "PASS",
        ClaimStatus::Fails => "FAIL",
        ClaimStatus::Discrepancy => "DISCREPANCY",
        ClaimStatus::NotAsserted => "not asserted",
    }
}

pub fn family_text(inst: &FamilyInstance) -> String {
    let params: Vec<String> = inst
        .params
        .iter()
        .map(|p| format!("{}={}", p.name, format_rational(&p.value)))
        .collect();
    let mut t = format!("family {} [{}]\np = {}\n", inst.name, params.join(", "), inst.p);
    for c in &inst.claims {
        let _ = writeln!(
            t,
            "{:<12} {}: expected {}, observed {}",
            claim_status_str(c.status),
            c.label,
            c.expected,
            c.observed
        );
    }
    t
}

pub fn cmd_family(name: &str, raw: &[String], started: Instant) -> Result<Outcomes> {
    let params = parse_params(raw)?;
    let inst = family_by_name(name, &params)?;
    let mut input = BTreeMap::from([("name", name.to_string())]);
    input.insert(
        "params",
        params
            .iter()
            .map(|(k, v)| format!("{k}={}", format_rational(v)))
            .collect::<Vec<_>>()
            .join(","),
    );
    let failed = !inst.all_hold();
    Ok(Outcomes {
        text: family_text(&inst),
        json: envelope("family", input, inst, started),
        failed,
    })
}
