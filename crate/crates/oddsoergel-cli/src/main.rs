//! Command-line front end: relation verification, Rouquier-power reduction,
//! graded Hom dimensions, Grothendieck-ring arithmetic, and the
//! three-variable splitting obstruction.
//!
//! Exit codes: 0 = all checks passed, 1 = a check failed, 2 = usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use oddsoergel::bimod::graded_hom_series;
use oddsoergel::calculus::{relation_suite_with_workers, suite_to_json, Catalog};
use oddsoergel::complexes::{parse_word, rouquier_power, word_obj};
use oddsoergel::grothendieck::{eval_expr, EvalResult};
use oddsoergel::threestrand::obstruction_report;

#[derive(Parser)]
#[command(name = "oddsoergel", version, about = "Exact engine for two-variable odd Soergel bimodules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full diagrammatic relation suite.
    Verify(VerifyArgs),
    /// Print the minimal complex of a power of the Rouquier complex.
    Reduce(ReduceArgs),
    /// Graded dimensions of the bimodule Hom space between two tensor words.
    Hom(HomArgs),
    /// Evaluate an expression in the Grothendieck ring.
    K0(K0Args),
    /// Run the three-variable splitting obstruction.
    Obstruct(ObstructArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReduceArgs {
    /// Tensor power to reduce.
    #[arg(long)]
    power: u32,
    /// Use the inverse complex.
    #[arg(long)]
    inverse: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HomArgs {
    /// Source word, e.g. `B*Bbar{1}`.
    #[arg(long)]
    source: String,
    /// Target word.
    #[arg(long)]
    target: String,
    /// Largest degree to compute.
    #[arg(long = "max-degree")]
    max_degree: i64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct K0Args {
    /// Expression, e.g. `b*b`, `tau(b)`, `form(b,1)`, `trace(b*c)`.
    #[arg(long)]
    expr: String,
    /// Also print the series expansion of a form value up to this degree.
    #[arg(long)]
    series: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ObstructArgs {
    /// Largest degree slice to verify (must be at least 8).
    #[arg(long = "max-degree", default_value_t = 12)]
    max_degree: i64,
    #[arg(long)]
    json: bool,
}

fn worker_count() -> usize {
    std::env::var("ODDSOERGEL_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
        })
}

fn run_verify(args: &VerifyArgs) -> ExitCode {
    let reports = relation_suite_with_workers(worker_count());
    let all_pass = reports.iter().all(|r| r.pass);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&suite_to_json(&reports)).unwrap());
    } else {
        let width = reports.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &reports {
            let status = if r.pass { "pass" } else { "FAIL" };
            match &r.witness {
                Some(w) => println!("{:width$}  {}  ({})", r.name, status, w),
                None => println!("{:width$}  {}", r.name, status),
            }
        }
        println!(
            "{} relations checked, {} failed",
            reports.len(),
            reports.iter().filter(|r| !r.pass).count()
        );
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_reduce(args: &ReduceArgs) -> ExitCode {
    if args.power == 0 {
        eprintln!("--power must be at least 1");
        return ExitCode::from(2);
    }
    let cat = Catalog::new();
    let c = rouquier_power(&cat, args.power, args.inverse);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&c.to_json()).unwrap());
    } else {
        let mut pieces = Vec::new();
        for deg in c.min_degree..=c.max_degree() {
            let labels: Vec<String> =
                c.summands(deg).iter().map(|s| s.label()).collect();
            pieces.push(if labels.is_empty() {
                "0".to_string()
            } else {
                labels.join(" + ")
            });
        }
        println!(
            "degrees {}..{}:  {}",
            c.min_degree,
            c.max_degree(),
            pieces.join("  ->  ")
        );
    }
    ExitCode::SUCCESS
}

fn run_hom(args: &HomArgs) -> ExitCode {
    let (src_word, src_shift) = match parse_word(&args.source) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("bad --source: {}", e);
            return ExitCode::from(2);
        }
    };
    let (tgt_word, tgt_shift) = match parse_word(&args.target) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("bad --target: {}", e);
            return ExitCode::from(2);
        }
    };
    let src = word_obj(&src_word, src_shift);
    let tgt = word_obj(&tgt_word, tgt_shift);
    let series = graded_hom_series(&src, &tgt, args.max_degree);
    if args.json {
        let dims: Vec<serde_json::Value> = series
            .dims
            .iter()
            .map(|(d, n)| serde_json::json!({"degree": d, "dim": n}))
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "source": args.source,
                "target": args.target,
                "max_degree": args.max_degree,
                "dims": dims,
            })
        );
    } else if series.dims.is_empty() {
        println!("0 (no maps up to degree {})", args.max_degree);
    } else {
        let parts: Vec<String> =
            series.dims.iter().map(|(d, n)| format!("{}@{}", n, d)).collect();
        println!("{}", parts.join(", "));
    }
    ExitCode::SUCCESS
}

fn run_k0(args: &K0Args) -> ExitCode {
    match eval_expr(&args.expr) {
        Ok(result) => {
            if args.json {
                let mut obj = serde_json::json!({ "value": result.to_string() });
                if let (EvalResult::Value(v), Some(cut)) = (&result, args.series) {
                    obj["series"] = serde_json::json!(v
                        .series(cut)
                        .iter()
                        .map(|(d, c)| serde_json::json!({"degree": d, "coeff": c}))
                        .collect::<Vec<_>>());
                }
                println!("{}", obj);
            } else {
                println!("{}", result);
                if let (EvalResult::Value(v), Some(cut)) = (&result, args.series) {
                    let parts: Vec<String> = v
                        .series(cut)
                        .iter()
                        .map(|(d, c)| format!("{}@{}", c, d))
                        .collect();
                    println!("series up to degree {}: {}", cut, parts.join(", "));
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("parse error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run_obstruct(args: &ObstructArgs) -> ExitCode {
    if args.max_degree < 8 {
        eprintln!("--max-degree must be at least 8 to constrain the computation");
        return ExitCode::from(2);
    }
    let report = obstruction_report(args.max_degree);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report.to_json()).unwrap());
    } else {
        println!("inclusion space dimension: {}", report.inclusion_dim);
        println!("generator injective on slices up to: {}", report.injective_upto);
        println!("cokernel matches the twisted bimodule: {}", report.cokernel_match);
        println!("section space dimension: {}", report.section_dim);
        println!(
            "conclusion: the sequence {} split",
            if report.section_dim == 0 { "does not" } else { "does" }
        );
    }
    if report.passes() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify(a) => run_verify(a),
        Command::Reduce(a) => run_reduce(a),
        Command::Hom(a) => run_hom(a),
        Command::K0(a) => run_k0(a),
        Command::Obstruct(a) => run_obstruct(a),
    }
}
