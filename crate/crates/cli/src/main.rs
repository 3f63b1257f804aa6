//! Batch command-line surface over the library: enumerate permutation
//! classes, expand catalog series, emit triangles and basis-change
//! matrices, and run the verification suite.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fqsym::catalog::{self, CatalogTag};
use fqsym::classes::{enumerate_class, PermClass};
use fqsym::error::Error;
use fqsym::tilde_matrices as tm;
use fqsym::triangles::{self, TriangleKind};
use fqsym::verify::{self, VerifyConfig};
use fqsym::{Basis, GradedSeries};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "fqsym",
    about = "Exact series, triangles and matrices for alternating permutations and snakes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// List all members of a permutation class in canonical order.
    Enumerate(EnumerateArgs),
    /// Expand a catalog series degree by degree.
    Series(SeriesArgs),
    /// Emit a seed-and-sweep triangle.
    Triangle(TriangleArgs),
    /// Emit the basis-change matrices of the barred-alphabet specialization.
    Matrix(MatrixArgs),
    /// Run a suite of identity checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Class tag: alt-a, alt-b, snake-b-modified, snake-b-alt,
    /// snake-b-arnold, valley, d-positive-first, d-arnold, alt-colored.
    #[arg(long)]
    class: String,
    #[arg(long)]
    n: usize,
    /// Number of colors (for alt-colored).
    #[arg(long, default_value_t = 2)]
    r: u8,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Enumeration budget as a bound on r^n * n!.
    #[arg(long)]
    budget: Option<u128>,
}

#[derive(Args)]
struct SeriesArgs {
    /// Series tag: x-b, y-modified, y-alt, y-arnold, d-snakes, u, u-inv,
    /// v, v-inv, w, w-v-inv, z, z-u-inv, one-plus-z-u-inv, x-colored,
    /// y-colored, sec, tan, cos, sin, sec-tan.
    #[arg(long)]
    tag: String,
    /// Truncation degree.
    #[arg(long, visible_alias = "N", default_value_t = 7)]
    n_max: usize,
    /// Number of colors for the colored tags.
    #[arg(long, default_value_t = 3)]
    r: u8,
    /// Split point for y-colored (first-letter colors 0..=split).
    #[arg(long, default_value_t = 0)]
    split: u8,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct TriangleArgs {
    /// Table kind: alt-b, snake-b, d, colored, colored-first.
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    r: u8,
    /// First-letter color for colored-first.
    #[arg(long, default_value_t = 0)]
    first_color: u8,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print zero cells as dots in the text layout.
    #[arg(long)]
    dots: bool,
}

#[derive(Args)]
struct MatrixArgs {
    /// Sym basis: s, lambda, r.
    #[arg(long)]
    basis: String,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: all, combinatorics, kernel, fqsym, colored, ncsf, triangles,
    /// or a single check name.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Truncation degree for the series identities.
    #[arg(long, visible_alias = "N", default_value_t = 6)]
    n_max: usize,
    #[arg(long)]
    budget: Option<u128>,
}

fn exit_for(err: &Error) -> ExitCode {
    match err {
        Error::BudgetExceeded { .. } => ExitCode::from(EXIT_BUDGET),
        _ => ExitCode::from(EXIT_USAGE),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_for(&e)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Series(args) => cmd_series(args),
        Command::Triangle(args) => cmd_triangle(args),
        Command::Matrix(args) => cmd_matrix(args),
        Command::Verify(args) => Ok(cmd_verify(args)),
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<ExitCode, Error> {
    let tag = PermClass::from_name(&args.class, args.r)?;
    let members = enumerate_class(args.n, tag, args.budget)?;
    match args.format {
        Format::Json => {
            let out = serde_json::json!({
                "class": args.class,
                "n": args.n,
                "count": members.len(),
                "elements": members,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        _ => {
            for p in &members {
                println!("{p}");
            }
            println!("count {}", members.len());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn level1_series(tag: &str, n_max: usize) -> Option<GradedSeries> {
    use fqsym::sym::{trig_series, TrigTag};
    Some(match tag {
        "cos" => trig_series(TrigTag::Cos, n_max),
        "sin" => trig_series(TrigTag::Sin, n_max),
        "sec" => trig_series(TrigTag::Sec, n_max),
        "tan" => trig_series(TrigTag::Tan, n_max),
        "sec-tan" => fqsym::fqsym::sec_tan_g(n_max).ok()?,
        _ => return None,
    })
}

fn cmd_series(args: SeriesArgs) -> Result<ExitCode, Error> {
    let series = match level1_series(&args.tag, args.n_max) {
        Some(s) => s,
        None => {
            let tag = CatalogTag::from_name(&args.tag, args.r, args.split)?;
            catalog::series(tag, args.n_max)?
        }
    };
    match args.format {
        Format::Json => {
            let out = serde_json::json!({
                "tag": args.tag,
                "n_max": args.n_max,
                "support_sizes": series.support_sizes(),
                "components": series.components(),
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Format::Csv => {
            println!("degree,key,coeff");
            for (d, comp) in series.components().iter().enumerate() {
                for (k, c) in comp.terms() {
                    println!("{d},\"{k}\",\"{c}\"");
                }
            }
        }
        Format::Text => {
            for (d, comp) in series.components().iter().enumerate() {
                println!("degree {d}: {} terms", comp.len());
                for (k, c) in comp.terms() {
                    println!("  [{k}] {c}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn triangle_kind(args: &TriangleArgs) -> Result<TriangleKind, Error> {
    Ok(match args.kind.as_str() {
        "alt-b" => TriangleKind::AltB,
        "snake-b" => TriangleKind::SnakeB,
        "d" => TriangleKind::D,
        "colored" => TriangleKind::Colored(args.r),
        "colored-first" => TriangleKind::ColoredFirst(args.r, args.first_color),
        other => return Err(Error::InvalidInput(format!("unknown triangle kind {other}"))),
    })
}

fn cmd_triangle(args: TriangleArgs) -> Result<ExitCode, Error> {
    let kind = triangle_kind(&args)?;
    let tri = kind.sweep(args.n);
    match args.format {
        Format::Json => {
            let mut cells = Vec::new();
            for n in 1..=args.n {
                for (label, value) in triangles::row_cells(&tri, n) {
                    cells.push(serde_json::json!({"n": n, "p": label, "value": value.to_string()}));
                }
            }
            let out = serde_json::json!({"kind": args.kind, "n": args.n, "cells": cells});
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Format::Csv => {
            println!("n,p,value");
            for n in 1..=args.n {
                for (label, value) in triangles::row_cells(&tri, n) {
                    println!("{n},{label},{value}");
                }
            }
        }
        Format::Text => {
            // the alternating table is printed with a zero column between
            // the two triangles
            let phantom_zero = kind == TriangleKind::AltB;
            for n in 1..=args.n {
                let mut row: Vec<String> = triangles::row_cells(&tri, n)
                    .into_iter()
                    .map(|(_, v)| {
                        if args.dots && v == 0 {
                            ".".to_string()
                        } else {
                            v.to_string()
                        }
                    })
                    .collect();
                if phantom_zero {
                    row.insert(n, "0".to_string());
                }
                println!("{}", row.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_matrix(args: MatrixArgs) -> Result<ExitCode, Error> {
    let basis = match args.basis.to_lowercase().as_str() {
        "s" => Basis::S,
        "lambda" | "l" => Basis::Lambda,
        "r" => Basis::R,
        other => return Err(Error::InvalidInput(format!("unknown basis {other}"))),
    };
    if args.n == 0 {
        return Err(Error::InvalidInput("matrices start at n = 1".into()));
    }
    let m = tm::tilde_matrices_direct(args.n, basis)?;
    let rows = m.rows();
    let cols: Vec<String> = m
        .cols_zero()
        .iter()
        .map(|c| c.to_string())
        .chain(m.cols_plain().iter().map(|c| c.to_string()))
        .collect();
    let full: Vec<Vec<String>> = m
        .zero
        .iter()
        .zip(&m.plain)
        .map(|(a, b)| a.iter().chain(b).map(|c| c.to_string()).collect())
        .collect();
    match args.format {
        Format::Json => {
            let out = serde_json::json!({
                "basis": basis.name(),
                "n": args.n,
                "rows": rows.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
                "cols": cols,
                "entries": full,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Format::Csv => {
            println!("row,{}", cols.join(","));
            for (r, row) in rows.iter().zip(&full) {
                let cells: Vec<String> = row.iter().map(|c| format!("\"{c}\"")).collect();
                println!("\"{r}\",{}", cells.join(","));
            }
        }
        Format::Text => {
            println!("cols: {}", cols.join("  "));
            for (r, row) in rows.iter().zip(&full) {
                println!("{r}: {}", row.join(" ; "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let cfg = VerifyConfig {
        n_max: args.n_max,
        budget: args.budget,
    };
    let known_suite =
        args.suite == "all" || verify::SUITES.contains(&args.suite.as_str());
    let results = if known_suite {
        verify::run_suite(&args.suite, &cfg)
    } else if verify::CHECKS.iter().any(|(n, _)| *n == args.suite) {
        vec![(args.suite.clone(), verify::run_check(&args.suite, &cfg))]
    } else {
        eprintln!("error: unknown suite or check {}", args.suite);
        return ExitCode::from(EXIT_USAGE);
    };
    let mut failed = false;
    for (name, result) in &results {
        match result {
            Ok(()) => println!("ok   {name}"),
            Err(msg) => {
                failed = true;
                println!("FAIL {name}");
                println!(
                    "{}",
                    serde_json::json!({"check": name, "error": msg})
                );
            }
        }
    }
    println!(
        "{} checks, {} failed",
        results.len(),
        results.iter().filter(|(_, r)| r.is_err()).count()
    );
    if failed {
        ExitCode::from(EXIT_VERIFY_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}
