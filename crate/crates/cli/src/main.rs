//! Command-line front end: build Catalan-sum matrices, factor them, take
//! determinants, and run the identity verification suites, all in exact
//! arithmetic. Data goes to stdout (pretty text or JSON), diagnostics to
//! stderr. Exit status: 0 on success and all checks passing, 1 on domain
//! errors or failed checks, 2 on malformed flags.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use catalan_lu::closed_form::lu_closed_form;
use catalan_lu::comb::MAX_INDEX;
use catalan_lu::json::matrix_to_json;
use catalan_lu::verify::{
    verify_determinant, verify_entry_sum, verify_factorization, verify_u_world, Report, Status,
};
use catalan_lu::{
    bareiss_det, catalan_sum_matrix, catalan_sum_matrix_at, doolittle_lu, parse_rat, rat_to_string,
    Error, RatFun,
};

#[derive(Parser)]
#[command(
    name = "catalan-lu",
    version,
    about = "Exact LU factors, determinants, and identity checks for matrices of Catalan-number sums"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the n x n matrix with entries C[t+i+j-2] + x C[t+i+j-1]
    Matrix(CommonArgs),
    /// Print the LU factors (closed form at t = 0, elimination otherwise)
    Lu(LuArgs),
    /// Print the determinant polynomial, or its value when --x is given
    Det(CommonArgs),
    /// Run identity verification suites; nonzero exit on any failure
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Matrix dimension (>= 1)
    #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,

    /// Shift of the Catalan indices (>= 0)
    #[arg(short, long, default_value_t = 0)]
    t: u64,

    /// Exact rational value for x, e.g. 1/2 or -3 (default: symbolic)
    #[arg(long, value_name = "P/Q", allow_hyphen_values = true)]
    x: Option<String>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Output::Pretty)]
    output: Output,
}

#[derive(Args)]
struct LuArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Also print the elimination-oracle factors next to the closed form
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest matrix dimension to verify (also the default for the ranges)
    #[arg(short, long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,

    /// Checks to run
    #[arg(long = "checks", value_enum, value_delimiter = ',', num_args = 1.., default_values_t = [Check::All])]
    checks: Vec<Check>,

    /// Range for the u-substitution checks (default: n)
    #[arg(long, value_name = "K", value_parser = clap::value_parser!(u64).range(1..))]
    k_max: Option<u64>,

    /// Row range for the entry-sum check (default: n)
    #[arg(long, value_name = "I", value_parser = clap::value_parser!(u64).range(1..))]
    i_max: Option<u64>,

    /// Column range for the entry-sum and u-substitution checks (default: n)
    #[arg(long, value_name = "J", value_parser = clap::value_parser!(u64).range(1..))]
    j_max: Option<u64>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Output::Pretty)]
    output: Output,
}

#[derive(ValueEnum, Clone, Copy, PartialEq)]
enum Output {
    Pretty,
    Json,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Check {
    /// Closed-form factors equal the elimination factors and multiply back
    Theorem1,
    /// Entry-sum identity for the factor product
    Entry,
    /// Determinant and diagonal-telescoping identities
    Det,
    /// u-substitution consistency and the partial-fraction split
    Uworld,
    /// All of the above
    All,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Error> {
    match cli.cmd {
        Cmd::Matrix(args) => cmd_matrix(&args).map(|()| true),
        Cmd::Lu(args) => cmd_lu(&args).map(|()| true),
        Cmd::Det(args) => cmd_det(&args).map(|()| true),
        Cmd::Verify(args) => cmd_verify(&args),
    }
}

/// The largest Catalan index a command touches is t + 2n - 1.
fn check_ranges(n: u64, t: u64) -> Result<(), Error> {
    if t + 2 * n - 1 > MAX_INDEX {
        return Err(Error::Parse(format!(
            "n and t need Catalan index {} beyond the cap {MAX_INDEX}",
            t + 2 * n - 1
        )));
    }
    Ok(())
}

fn cmd_matrix(args: &CommonArgs) -> Result<(), Error> {
    check_ranges(args.n, args.t)?;
    let n = args.n as usize;
    match &args.x {
        None => {
            let m = catalan_sum_matrix(n, args.t);
            match args.output {
                Output::Pretty => print!("{m}"),
                Output::Json => println!("{}", matrix_to_json(&m)),
            }
        }
        Some(s) => {
            let x = parse_rat(s)?;
            let m = catalan_sum_matrix_at(n, args.t, &x);
            match args.output {
                Output::Pretty => print!("{m}"),
                Output::Json => println!("{}", matrix_to_json(&m)),
            }
        }
    }
    Ok(())
}

fn cmd_lu(args: &LuArgs) -> Result<(), Error> {
    let common = &args.common;
    check_ranges(common.n, common.t)?;
    let n = common.n as usize;

    if let Some(s) = &common.x {
        // numeric point: factor the specialized matrix directly
        let x = parse_rat(s)?;
        let lu = doolittle_lu(&catalan_sum_matrix_at(n, common.t, &x))?;
        match common.output {
            Output::Pretty => {
                print!("L =\n{}U =\n{}", lu.lower, lu.upper);
            }
            Output::Json => println!(
                "{}",
                serde_json::json!({
                    "elimination": {
                        "lower": matrix_to_json(&lu.lower),
                        "upper": matrix_to_json(&lu.upper),
                    }
                })
            ),
        }
        return Ok(());
    }

    if common.t > 0 {
        // only t = 0 has closed-form factors
        eprintln!(
            "note: no closed form is claimed for shift t = {}; showing elimination factors",
            common.t
        );
        let m = catalan_sum_matrix(n, common.t).map(|p| RatFun::from_poly(p.clone()));
        let lu = doolittle_lu(&m)?;
        match common.output {
            Output::Pretty => print!("L =\n{}U =\n{}", lu.lower, lu.upper),
            Output::Json => println!(
                "{}",
                serde_json::json!({
                    "elimination": {
                        "lower": matrix_to_json(&lu.lower),
                        "upper": matrix_to_json(&lu.upper),
                    }
                })
            ),
        }
        return Ok(());
    }

    let cf = lu_closed_form(n);
    let oracle = if args.oracle {
        let m = catalan_sum_matrix(n, 0).map(|p| RatFun::from_poly(p.clone()));
        Some(doolittle_lu(&m)?)
    } else {
        None
    };
    match common.output {
        Output::Pretty => {
            print!("L =\n{}U =\n{}", cf.lower, cf.upper);
            if let Some(lu) = &oracle {
                print!(
                    "L (elimination) =\n{}U (elimination) =\n{}",
                    lu.lower, lu.upper
                );
            }
        }
        Output::Json => {
            let mut doc = serde_json::json!({
                "closed_form": {
                    "lower": matrix_to_json(&cf.lower),
                    "upper": matrix_to_json(&cf.upper),
                }
            });
            if let Some(lu) = &oracle {
                doc["elimination"] = serde_json::json!({
                    "lower": matrix_to_json(&lu.lower),
                    "upper": matrix_to_json(&lu.upper),
                });
            }
            println!("{doc}");
        }
    }
    Ok(())
}

fn cmd_det(args: &CommonArgs) -> Result<(), Error> {
    check_ranges(args.n, args.t)?;
    let n = args.n as usize;
    let det = bareiss_det(&catalan_sum_matrix(n, args.t));
    match &args.x {
        None => match args.output {
            Output::Pretty => println!("{det}"),
            Output::Json => println!(
                "{}",
                serde_json::json!({ "n": args.n, "t": args.t, "det": det.to_json() })
            ),
        },
        Some(s) => {
            let x = parse_rat(s)?;
            let value = bareiss_det(&catalan_sum_matrix_at(n, args.t, &x));
            match args.output {
                Output::Pretty => println!("{}", rat_to_string(&value)),
                Output::Json => println!(
                    "{}",
                    serde_json::json!({
                        "n": args.n,
                        "t": args.t,
                        "x": rat_to_string(&x),
                        "det": det.to_json(),
                        "value": rat_to_string(&value),
                    })
                ),
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Error> {
    let n = args.n;
    check_ranges(
        n.max(args.i_max.unwrap_or(n)).max(args.j_max.unwrap_or(n)),
        0,
    )?;
    let k_max = args.k_max.unwrap_or(n) as usize;
    let i_max = args.i_max.unwrap_or(n) as usize;
    let j_max = args.j_max.unwrap_or(n) as usize;

    let all = args.checks.contains(&Check::All);
    let selected = |c: Check| all || args.checks.contains(&c);

    let mut reports: Vec<Report> = Vec::new();
    if selected(Check::Theorem1) {
        reports.push(verify_factorization(n as usize));
    }
    if selected(Check::Entry) {
        reports.push(verify_entry_sum(i_max, j_max));
    }
    if selected(Check::Det) {
        reports.push(verify_determinant(n as usize));
    }
    if selected(Check::Uworld) {
        reports.push(verify_u_world(k_max, j_max));
    }

    let all_pass = reports.iter().all(Report::passed);
    match args.output {
        Output::Json => {
            let doc: Vec<serde_json::Value> = reports.iter().map(Report::to_json).collect();
            println!("{}", serde_json::Value::Array(doc));
        }
        Output::Pretty => {
            for report in &reports {
                let total = report.instances.len();
                if report.passed() {
                    println!("{}: PASS ({total} instances)", report.check);
                } else {
                    println!(
                        "{}: FAIL ({}/{total} instances failed)",
                        report.check,
                        report.failures()
                    );
                    for inst in &report.instances {
                        if inst.status == Status::Fail {
                            println!(
                                "  {} -> lhs {} != rhs {}",
                                inst.params,
                                inst.lhs.as_ref().map_or("?".into(), |v| v.to_string()),
                                inst.rhs.as_ref().map_or("?".into(), |v| v.to_string()),
                            );
                        }
                    }
                }
            }
            println!(
                "{}",
                if all_pass {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                }
            );
        }
    }
    Ok(all_pass)
}
