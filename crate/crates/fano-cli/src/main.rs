//! `fano`: compute, cross-validate and print the exact line-count
//! invariants. Exit codes: 0 success, 1 usage or capacity error,
//! 2 verification or cross-method mismatch.

// Grid cells are addressed by the degrees they stand for.
#![allow(clippy::needless_range_loop)]

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use fano_lines::complete_intersections::{ci_dimension_check, ci_lines, ci_table};
use fano_lines::schubert::{recursion_coeffs, theta_matrix, z_series_check};
use fano_lines::verify::{verify_all, Method};
use fano_lines::Result;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_MISMATCH: i32 = 2;

#[derive(Parser)]
#[command(
    name = "fano",
    version,
    about = "Exact counts of lines on generic hypersurfaces and complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the lines on a degree 2n-3 hypersurface in n-space.
    Lines {
        /// Ambient projective dimension, n >= 2.
        #[arg(long)]
        n: usize,
        /// Computation path, or `all` to run and compare every
        /// applicable one.
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// Emit one JSON object per result instead of plain text.
        #[arg(long)]
        json: bool,
    },
    /// Print C_n for every n from 2 through --max, one per line.
    Seq {
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Schubert)]
        method: MethodArg,
        #[arg(long)]
        json: bool,
    },
    /// Print the linear-recursion coefficients for one n.
    Recursion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the inverse-matrix rows and the inverted series.
    Genfun {
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Count the lines on a complete intersection of the given degrees.
    Ci {
        /// Comma-separated degrees, e.g. 3,5.
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate line counts for every valid degree tuple of a
    /// codimension.
    CiTable {
        #[arg(long)]
        codim: usize,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run the cross-method and identity suites up to --max.
    Verify {
        #[arg(long)]
        max: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    ZagierProduct,
    ZagierStirling,
    Libgober,
    Dominici,
    Harris,
    Schubert,
    Recursion,
    Bombieri,
    Oracle,
    All,
}

impl MethodArg {
    fn single(self) -> Option<Method> {
        match self {
            MethodArg::ZagierProduct => Some(Method::ZagierProduct),
            MethodArg::ZagierStirling => Some(Method::ZagierStirling),
            MethodArg::Libgober => Some(Method::Libgober),
            MethodArg::Dominici => Some(Method::Dominici),
            MethodArg::Harris => Some(Method::Harris),
            MethodArg::Schubert => Some(Method::Schubert),
            MethodArg::Recursion => Some(Method::Recursion),
            MethodArg::Bombieri => Some(Method::Bombieri),
            MethodArg::Oracle => Some(Method::Oracle),
            MethodArg::All => None,
        }
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command) -> Result<i32> {
    match command {
        Command::Lines { n, method, json } => cmd_lines(n, method, json),
        Command::Seq { max, method, json } => cmd_seq(max, method, json),
        Command::Recursion { n, json } => cmd_recursion(n, json),
        Command::Genfun { terms, json } => cmd_genfun(terms, json),
        Command::Ci { degrees, json } => cmd_ci(&degrees, json),
        Command::CiTable { codim, max_degree, json } => cmd_ci_table(codim, max_degree, json),
        Command::Verify { max } => cmd_verify(max),
    }
}

fn print_method_result(n: usize, method: &str, value: &BigInt, json: bool, label: bool) {
    if json {
        println!("{}", json!({ "method": method, "n": n, "value": value.to_string() }));
    } else if label {
        println!("{method} {value}");
    } else {
        println!("{value}");
    }
}

fn cmd_lines(n: usize, method: MethodArg, json: bool) -> Result<i32> {
    match method.single() {
        Some(m) => {
            let value = m.compute(n)?;
            print_method_result(n, m.name(), &value, json, false);
            Ok(EXIT_OK)
        }
        None => {
            let applicable: Vec<Method> =
                Method::ALL.iter().copied().filter(|m| m.applies_to(n)).collect();
            if applicable.is_empty() {
                // Let the strictest always-on method report the range.
                Method::Schubert.compute(n)?;
            }
            let mut values = Vec::with_capacity(applicable.len());
            let width = applicable.iter().map(|m| m.name().len()).max().unwrap_or(0);
            for m in &applicable {
                values.push((m.name(), m.compute(n)?));
            }
            let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
            for (name, value) in &values {
                if json {
                    println!(
                        "{}",
                        json!({ "method": name, "n": n, "value": value.to_string() })
                    );
                } else {
                    println!("{name:width$} {value}");
                }
            }
            let verdict = if agree { "AGREE" } else { "DISAGREE" };
            if json {
                println!("{}", json!({ "n": n, "verdict": verdict }));
            } else {
                println!("verdict {verdict}");
            }
            Ok(if agree { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

fn cmd_seq(max: usize, method: MethodArg, json: bool) -> Result<i32> {
    if max < 2 {
        return Err(fano_lines::Error::Domain {
            op: "seq",
            msg: format!("--max must be at least 2, got {max}"),
        });
    }
    // Validate capacity up front so nothing is printed before failing.
    if let Some(m) = method.single() {
        if let Some(cap) = m.max_n() {
            if max > cap {
                return Err(fano_lines::Error::Capacity {
                    op: "seq",
                    msg: format!("method {} caps at n={cap}, got --max {max}", m.name()),
                });
            }
        }
        if max < m.min_n() {
            return Err(fano_lines::Error::Domain {
                op: "seq",
                msg: format!("method {} starts at n={}, got --max {max}", m.name(), m.min_n()),
            });
        }
    }
    for n in 2..=max {
        match method.single() {
            Some(m) => {
                if !m.applies_to(n) {
                    continue;
                }
                let value = m.compute(n)?;
                print_method_result(n, m.name(), &value, json, false);
            }
            None => {
                let values = fano_lines::verify::cross_method_values(n)?;
                let (first_name, first) = &values[0];
                for (name, value) in &values[1..] {
                    if value != first {
                        eprintln!(
                            "error: n={n}: {name} gives {value}, {first_name} gives {first}"
                        );
                        return Ok(EXIT_MISMATCH);
                    }
                }
                print_method_result(n, "all", first, json, false);
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_recursion(n: usize, json: bool) -> Result<i32> {
    let (coeffs, inhomogeneous) = recursion_coeffs(n)?;
    if json {
        let b: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        println!(
            "{}",
            json!({ "b": b, "f": inhomogeneous.to_string(), "n": n })
        );
    } else {
        // Highest predecessor first, matching how the rows are read.
        let mut parts: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(i, c)| format!("B[{}]={c}", i + 2))
            .collect();
        parts.push(format!("F={inhomogeneous}"));
        println!("{}", parts.join(" "));
    }
    Ok(EXIT_OK)
}

fn cmd_genfun(terms: usize, json: bool) -> Result<i32> {
    let series = z_series_check(terms)?;
    let theta = theta_matrix(terms);
    if json {
        let rows: Vec<Vec<String>> = (0..terms)
            .map(|r| theta.row(r).iter().map(|v| v.to_string()).collect())
            .collect();
        let u: Vec<String> = series.iter().map(|v| v.to_string()).collect();
        println!("{}", json!({ "terms": terms, "theta": rows, "u": u }));
    } else {
        for r in 0..terms {
            let row: Vec<String> = theta.row(r).iter().map(|v| v.to_string()).collect();
            println!("theta[{r}] {}", row.join(" "));
        }
        let u: Vec<String> = series.iter().map(|v| v.to_string()).collect();
        println!("u {}", u.join(" "));
    }
    Ok(EXIT_OK)
}

fn cmd_ci(degrees: &[usize], json: bool) -> Result<i32> {
    let tuple = ci_dimension_check(degrees)?;
    if tuple.even_count() >= 4 {
        eprintln!(
            "note: {} even degrees; the Catalan index uses their halved total",
            tuple.even_count()
        );
    }
    let value = ci_lines(&tuple);
    if json {
        println!(
            "{}",
            json!({ "degrees": tuple.degrees(), "value": value.to_string() })
        );
    } else {
        println!("{value}");
    }
    Ok(EXIT_OK)
}

fn cmd_ci_table(codim: usize, max_degree: usize, json: bool) -> Result<i32> {
    if codim < 1 || max_degree < 1 {
        return Err(fano_lines::Error::Domain {
            op: "ci-table",
            msg: format!("--codim and --max-degree must be at least 1, got {codim}, {max_degree}"),
        });
    }
    let cells = ci_table(codim, max_degree);
    if json {
        for (degrees, value) in &cells {
            println!(
                "{}",
                json!({ "degrees": degrees, "value": value.to_string() })
            );
        }
    } else if codim == 2 {
        print_codim2_grid(max_degree, &cells);
    } else {
        for (degrees, value) in &cells {
            let label: Vec<String> = degrees.iter().map(|d| d.to_string()).collect();
            println!("{} {value}", label.join(","));
        }
    }
    Ok(EXIT_OK)
}

/// Upper-triangular grid with rows d1 and columns d2, blank where the
/// parity constraint rules the pair out.
fn print_codim2_grid(max_degree: usize, cells: &[(Vec<usize>, BigInt)]) {
    let mut grid = vec![vec![String::new(); max_degree + 1]; max_degree + 1];
    for (degrees, value) in cells {
        grid[degrees[0]][degrees[1]] = value.to_string();
    }
    let mut col_width = vec![0usize; max_degree + 1];
    for d2 in 1..=max_degree {
        col_width[d2] = d2.to_string().len();
        for d1 in 1..=max_degree {
            col_width[d2] = col_width[d2].max(grid[d1][d2].len());
        }
    }
    let label_width = max_degree.to_string().len();
    let mut header = format!("{:label_width$}", "");
    for d2 in 1..=max_degree {
        header.push_str(&format!("  {:>width$}", d2, width = col_width[d2]));
    }
    println!("{}", header.trim_end());
    for d1 in 1..=max_degree {
        let mut line = format!("{d1:label_width$}");
        for d2 in 1..=max_degree {
            line.push_str(&format!("  {:>width$}", grid[d1][d2], width = col_width[d2]));
        }
        println!("{}", line.trim_end());
    }
}

fn cmd_verify(max: usize) -> Result<i32> {
    if max < 2 {
        return Err(fano_lines::Error::Domain {
            op: "verify",
            msg: format!("--max must be at least 2, got {max}"),
        });
    }
    let threads = worker_count();
    let outcomes = verify_all(max, threads);
    let mut all_passed = true;
    for outcome in &outcomes {
        if outcome.passed {
            println!("ok {} ({})", outcome.name, outcome.detail);
        } else {
            println!("FAIL {}: {}", outcome.name, outcome.detail);
            all_passed = false;
        }
    }
    if all_passed {
        println!("all suites passed");
        Ok(EXIT_OK)
    } else {
        Ok(EXIT_MISMATCH)
    }
}

/// Worker count from FANO_THREADS, defaulting to the machine's
/// available parallelism.
fn worker_count() -> usize {
    match std::env::var("FANO_THREADS") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(v) if v >= 1 => v,
            _ => {
                eprintln!("note: ignoring invalid FANO_THREADS={raw:?}");
                default_workers()
            }
        },
        Err(_) => default_workers(),
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}
