//! Command-line interface.
//!
//! Exit codes: 0 success/valid; 1 verification failed, inconclusive search,
//! or unreadable input; 2 inadmissible or unsupported order (also clap
//! usage errors); 3 internal construction defect.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use starfact::arrays::{complete_arrays, ledger_from_factors};
use starfact::base::{build_base_factor, BaseError, BaseParams};
use starfact::cert;
use starfact::construct::{construct, plan, ConstructError, Route};
use starfact::direct::{v102_base_stars, v42_base_stars};
use starfact::graph::Factor;
use starfact::lift::{build_base_block, develop};
use starfact::oracle::{exhaustive_search, SearchConfig, SearchOutcome};
use starfact::verify::{admissible, verify_decomposition};

#[derive(Parser)]
#[command(name = "starfact", version, about = "5-star factorizations of K_v minus a one-factor")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check admissibility of an order and show the construction plan.
    Check { v: u32 },
    /// Construct the decomposition for an admissible order.
    Construct {
        v: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
    /// Verify a JSON certificate ("-" reads standard input).
    Verify { file: String },
    /// Print the almost 5-star factor on g points, with labels.
    Base { g: u32 },
    /// Render the balanced star arrays for an order.
    Arrays { v: u32 },
    /// Brute-force existence search for small orders.
    Oracle {
        v: u32,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Check { v } => cmd_check(v),
        Command::Construct { v, format, out } => cmd_construct(v, format, out),
        Command::Verify { file } => cmd_verify(&file),
        Command::Base { g } => cmd_base(g),
        Command::Arrays { v } => cmd_arrays(v),
        Command::Oracle { v, budget } => cmd_oracle(v, budget),
    }
}

fn construct_exit(err: &ConstructError) -> ExitCode {
    match err {
        ConstructError::Inadmissible { .. } => ExitCode::from(2),
        ConstructError::Base(BaseError::UnsupportedParams { .. })
        | ConstructError::Base(BaseError::UnsupportedOrder(_)) => ExitCode::from(2),
        _ => ExitCode::from(3),
    }
}

/// Write bulk output to stdout; a closed pipe (e.g. `| head`) is not an
/// error.
fn emit(text: &str) -> ExitCode {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cannot write output: {e}");
            ExitCode::FAILURE
        }
    }
}

fn cmd_check(v: u32) -> ExitCode {
    match plan(v) {
        Ok(p) => {
            let (g, _, t) = admissible(v).params.expect("admissible");
            println!(
                "admissible, g={g}, t={t}, route={}, part I factors={}, part II factors={}",
                p.route, p.part1_factors, p.part2_factors
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn cmd_construct(v: u32, format: Format, out: Option<String>) -> ExitCode {
    let d = match construct(v) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{e}");
            return construct_exit(&e);
        }
    };
    let payload = match format {
        Format::Json => cert::to_json(&d),
        Format::Text => cert::to_text(&d),
    };
    match out {
        None => {
            let mut text = payload;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            emit(&text)
        }
        Some(path) => match fs::write(&path, payload) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("cannot write {path}: {e}");
                ExitCode::FAILURE
            }
        },
    }
}

fn cmd_verify(file: &str) -> ExitCode {
    let text = if file == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("cannot read standard input: {e}");
            return ExitCode::FAILURE;
        }
        buf
    } else {
        match fs::read_to_string(file) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("cannot read {file}: {e}");
                return ExitCode::FAILURE;
            }
        }
    };
    let d = match cert::from_json(&text) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::FAILURE;
        }
    };
    let report = verify_decomposition(&d);
    if report.valid {
        println!(
            "valid: v={}, {} factors, {} edges covered, {}/{} differences complete",
            d.v,
            report.stats.factor_count,
            report.stats.edge_total,
            report.stats.complete_differences,
            report.stats.total_differences
        );
        ExitCode::SUCCESS
    } else {
        for e in &report.errors {
            eprintln!("{e}");
        }
        eprintln!("invalid: {} error(s)", report.errors.len());
        ExitCode::FAILURE
    }
}

fn cmd_base(g: u32) -> ExitCode {
    let params = match BaseParams::from_g(g) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let f = match build_base_factor(&params) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(3);
        }
    };
    println!(
        "g={}  t={}  m={}  ({} branch)",
        f.g,
        f.t,
        params.m,
        if params.m % 2 == 0 { "even" } else { "odd" }
    );
    println!("pure stars:");
    for s in &f.pure_stars {
        println!("  ({s})");
    }
    if let Some(m) = &f.mixed_star {
        println!("mixed star:");
        println!(
            "  ({}; {} {} {} {}' {}')",
            m.center,
            m.pure_leaves[0],
            m.pure_leaves[1],
            m.pure_leaves[2],
            m.prime_leaves[0],
            m.prime_leaves[1]
        );
    }
    println!("prime stars:");
    for s in &f.prime_stars {
        print!("  ({};", s.center);
        for l in &s.leaves {
            print!(" {l}'");
        }
        println!(")");
    }
    if let Some(ls) = &f.little_star {
        print!("little star: ({};", ls.center);
        for l in &ls.leaves {
            print!(" {l}'");
        }
        println!(")");
    }
    if !f.isolated.is_empty() {
        let xs: Vec<String> = f.isolated.iter().map(u32::to_string).collect();
        println!("isolated: {}", xs.join(" "));
    }
    ExitCode::SUCCESS
}

/// Developed Part I factors for an admissible order other than 12.
fn part1_factors(v: u32) -> Result<Vec<Factor>, ConstructError> {
    let p = plan(v)?;
    let block = match p.route {
        Route::Direct12 => unreachable!("v = 12 has no development"),
        Route::Direct42 => v42_base_stars(),
        Route::Direct102 => v102_base_stars(),
        Route::General { t, m } => {
            let params = BaseParams::from_t_m(t, m)?;
            let base = build_base_factor(&params)?;
            build_base_block(&base)?.star_list()
        }
    };
    Ok(develop(&block, v, v / 6))
}

fn cmd_arrays(v: u32) -> ExitCode {
    if v == 12 {
        eprintln!("v = 12 is decomposed directly; it has no balanced star arrays");
        return ExitCode::from(2);
    }
    let factors = match part1_factors(v) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            return construct_exit(&e);
        }
    };
    let arrays = match ledger_from_factors(v, &factors).and_then(|l| complete_arrays(&l)) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(3);
        }
    };
    let text: String = arrays.iter().map(|a| format!("{a}\n")).collect();
    emit(&text)
}

fn cmd_oracle(v: u32, budget: u64) -> ExitCode {
    let cfg = match SearchConfig::new(v) {
        Ok(c) => c.with_budget(budget),
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    match exhaustive_search(&cfg) {
        SearchOutcome::Found(d) => {
            let header = format!(
                "found a verified decomposition of K_{v} - I into {} 5-star factors:\n",
                d.factors.len()
            );
            emit(&(header + &cert::to_text(&d)))
        }
        SearchOutcome::Nonexistent { reason } => {
            println!("no decomposition exists: {reason}");
            ExitCode::from(2)
        }
        SearchOutcome::BudgetExhausted { nodes } => {
            println!("inconclusive: node budget exhausted after {nodes} nodes");
            ExitCode::FAILURE
        }
    }
}
