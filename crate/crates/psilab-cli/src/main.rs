//! psilab: exact verification suites for elliptic and genus-2 ψ-functions
//! and the difference equations they solve.
//!
//! Exit codes: 0 all checks passed, 1 a residual check failed, 2 the curve
//! spec or arguments were malformed.

mod report;
mod spec;
mod suites;

use clap::Parser;
use report::{emit_report, Format, SuiteReport};
use spec::{parse_curve_spec, CurveSpec};
use suites::{genus2_spec_with_point, random_specs, run_suite, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "psilab",
    about = "Verification suites for psi-functions of elliptic and genus-2 curves"
)]
struct Args {
    /// Suite to run: elliptic-identities, elliptic-numeric, g2-calibrate,
    /// g2-identities, g2-dp1, g2-third-order, g2-sixth-order, seq-roundtrip
    #[arg(long)]
    suite: String,

    /// Largest index swept by the suite
    #[arg(long, default_value_t = 10)]
    n_max: usize,

    /// Tolerance for numeric suites
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,

    /// Output format: json, csv, human
    #[arg(long, default_value = "json")]
    format: String,

    /// Path to a curve-spec JSON document
    #[arg(long)]
    curve: Option<std::path::PathBuf>,

    /// Run the suite on this many seeded random curves instead of --curve
    #[arg(long)]
    random_curves: Option<usize>,

    /// Seed for --random-curves
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let args = Args::parse();
    let format = match args.format.parse::<Format>() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {}", e);
            return 2;
        }
    };
    let suite = match args.suite.parse::<Suite>() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}", e);
            return 2;
        }
    };
    let specs: Vec<CurveSpec> = if let Some(count) = args.random_curves {
        if suite == Suite::G2SixthOrder {
            (0..count)
                .map(|k| genus2_spec_with_point(args.seed.wrapping_add(k as u64)))
                .collect()
        } else {
            random_specs(suite.needs_elliptic(), count, args.seed)
        }
    } else if let Some(path) = &args.curve {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("error: cannot read {}: {}", path.display(), e);
                return 2;
            }
        };
        match parse_curve_spec(&text) {
            Ok(s) => vec![s],
            Err(e) => {
                eprintln!("error: {}", e);
                return 2;
            }
        }
    } else {
        eprintln!("error: pass --curve <path> or --random-curves <k>");
        return 2;
    };

    let mut aggregate: Option<SuiteReport> = None;
    for spec in &specs {
        match run_suite(spec, suite, args.n_max, args.tol) {
            Ok(r) => match aggregate.as_mut() {
                None => aggregate = Some(r),
                Some(agg) => agg.merge(r),
            },
            Err(e) => {
                eprintln!("error: {}", e);
                return 2;
            }
        }
    }
    let report = aggregate.expect("at least one curve");
    print!("{}", emit_report(&report, format));
    if report.pass {
        0
    } else {
        // name the first failing check for the caller
        if let Some(fail) = report.checks.iter().find(|c| !c.pass) {
            eprintln!(
                "failed: {} at index {} (residual {})",
                fail.identity, fail.index, fail.residual
            );
        }
        1
    }
}
