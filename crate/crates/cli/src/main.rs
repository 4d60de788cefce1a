use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qchar::char_ring::{decompose_p, ev, kernel_decompose, lift_weight, Verdict};
use qchar::expr::{parse_general_weight, parse_input, parse_weight, render, Format};
use qchar::schur::{euler_char, schur_p, schur_s, typical_char_rational};
use qchar::super_rings::{is_in_ring_with_bound, RingId, DEFAULT_DENOM_BOUND};
use qchar::verify::{run_suite, Suite, VerifyConfig};
use qchar::weyl_groupoid::groupoid_verdict;
use qchar::{Exponent, LaurentPoly};

#[derive(Parser)]
#[command(name = "qchar", version, about = "Exact character computations for the queer Lie superalgebras")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutFormat::Text, global = true)]
    format: OutFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Latex,
}

impl From<OutFormat> for Format {
    fn from(f: OutFormat) -> Format {
        match f {
            OutFormat::Text => Format::Text,
            OutFormat::Json => Format::Json,
            OutFormat::Latex => Format::Latex,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Schur P-function p_λ.
    SchurP(WeightArgs),
    /// Schur Laurent polynomial s_λ.
    SchurS(WeightArgs),
    /// Euler characteristic E(λ).
    Euler(WeightArgs),
    /// Character of a typical simple module; entries may be fractions.
    Typical(WeightArgs),
    /// Evaluation map x_{n-1} = -x_n.
    Ev(PolyArgs),
    /// Membership test. Exit code 0 member, 1 non-member, 2 error.
    Member {
        #[command(flatten)]
        poly: PolyArgs,
        #[arg(long, value_enum, default_value_t = RingArg::Q)]
        ring: RingArg,
    },
    /// Coefficients in the P-basis.
    Decompose(PolyArgs),
    /// Factor a kernel element of ev as odd_product(n) times Schur polynomials.
    Kernel(PolyArgs),
    /// Pad a weight with two zeros.
    Lift(WeightArgs),
    /// Replay identity checks and print one line per check.
    Verify {
        #[arg(short = 'n', default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        max_entry: i64,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Print only the per-suite summaries.
        #[arg(long)]
        quiet: bool,
    },
}

#[derive(Args)]
struct WeightArgs {
    /// Number of variables; defaults to the weight length.
    #[arg(short = 'n')]
    n: Option<usize>,
    /// Comma-separated weight, e.g. 3,1,0,0.
    #[arg(short = 'w', allow_hyphen_values = true)]
    weight: String,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(short = 'n')]
    n: usize,
    /// Expression, JSON polynomial, basis shorthand (p:3,1,0,0 or s:2,1),
    /// or a file holding any of these.
    #[arg(short = 'f', allow_hyphen_values = true)]
    input: Option<String>,
    /// Basis shorthand, e.g. p:3,1,0,0.
    #[arg(long = "w-basis")]
    w_basis: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Q,
    Sq,
    Pq,
    Psq,
    Half,
    #[value(name = "alg-q")]
    AlgQ,
    #[value(name = "alg-pq")]
    AlgPq,
    Groupoid,
}

impl RingArg {
    fn ring(self) -> Option<RingId> {
        Some(match self {
            RingArg::Q => RingId::GroupQ,
            RingArg::Sq => RingId::GroupSQ,
            RingArg::Pq => RingId::GroupPQ,
            RingArg::Psq => RingId::GroupPSQ,
            RingArg::Half => RingId::HalfIntegerCategory,
            RingArg::AlgQ => RingId::AlgebraQ,
            RingArg::AlgPq => RingId::AlgebraPQ,
            RingArg::Groupoid => return None,
        })
    }
}

/// A failure that maps to exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    // `-w-basis` is accepted as a spelling of `--w-basis`.
    let args = std::env::args().map(|a| if a == "-w-basis" { "--w-basis".into() } else { a });
    let cli = Cli::parse_from(args);
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Outcome {
    let format: Format = cli.format.into();
    match cli.command {
        Command::SchurP(w) => {
            let lambda = parse_weight(&w.weight)?;
            check_len(w.n, lambda.n())?;
            print_poly(&schur_p(&lambda), format)
        }
        Command::SchurS(w) => {
            let mu = parse_general_weight(&w.weight)?;
            check_len(w.n, mu.n())?;
            print_poly(&schur_s(&mu), format)
        }
        Command::Euler(w) => {
            let lambda = parse_weight(&w.weight)?;
            check_len(w.n, lambda.n())?;
            print_poly(&euler_char(&lambda)?, format)
        }
        Command::Typical(w) => {
            let parts = parse_rational_weight(&w.weight)?;
            check_len(w.n, parts.len())?;
            print_poly(&typical_char_rational(&parts)?, format)
        }
        Command::Ev(p) => {
            let f = read_poly(&p)?;
            let g = ev(&f)?;
            print_poly(&g, format)?;
            if matches!(format, Format::Text) {
                println!("= {}", decompose_p(&g)?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { poly, ring } => {
            let f = read_poly(&poly)?;
            let (name, verdict) = match ring.ring() {
                Some(r) => (r.name(), is_in_ring_with_bound(&f, r, denom_bound()?)?),
                None => ("the groupoid invariants", groupoid_verdict(&f)?),
            };
            report_membership(name, &verdict);
            Ok(if verdict.member { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Decompose(p) => {
            let d = decompose_p(&read_poly(&p)?)?;
            let pairs = d.coefficients().iter().rev().map(|(l, c)| (l.to_string(), c.to_string()));
            match format {
                Format::Latex => {
                    let body = d
                        .coefficients()
                        .iter()
                        .rev()
                        .map(|(l, c)| format!("{c}\\,p_{{{l}}}"))
                        .collect::<Vec<_>>()
                        .join(" + ");
                    println!("{}", if body.is_empty() { "0".into() } else { body });
                }
                _ => println!("{}", coefficient_map(pairs)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Kernel(p) => {
            let k = kernel_decompose(&read_poly(&p)?)?;
            match format {
                Format::Json => {
                    let pairs =
                        k.s_coefficients().iter().rev().map(|(m, c)| (m.to_string(), c.to_string()));
                    println!("{}", coefficient_map(pairs));
                }
                _ => {
                    println!("{k}");
                    println!("= {}", k.to_p_expansion());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lift(w) => {
            let mu = parse_weight(&w.weight)?;
            if let Some(n) = w.n {
                check_len(Some(n), mu.n() + 2)?;
            }
            println!("{}", lift_weight(&mu));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, max_entry, suite, seed, quiet } => {
            let suites = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse::<Suite>()?] };
            let cfg = VerifyConfig { n, max_entry, seed };
            let mut all_ok = true;
            for s in suites {
                let report = run_suite(s, &cfg);
                if !quiet {
                    for c in &report.checks {
                        println!("[{}] {c}", report.suite);
                    }
                }
                println!("{}", report.summary());
                all_ok &= report.passed();
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn check_len(requested: Option<usize>, found: usize) -> Result<(), Failure> {
    match requested {
        Some(n) if n != found => Err(Failure(format!(
            "weight has {found} parts but -n {n} was given"
        ))),
        _ => Ok(()),
    }
}

fn parse_rational_weight(text: &str) -> Result<Vec<Exponent>, Failure> {
    let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner
        .split(',')
        .map(|s| s.trim().parse::<Exponent>().map_err(|e| Failure(format!("invalid weight '{text}': {e}"))))
        .collect()
}

fn read_poly(p: &PolyArgs) -> Result<LaurentPoly, Failure> {
    let text = match (&p.input, &p.w_basis) {
        (Some(_), Some(_)) => return Err(Failure("give either -f or --w-basis, not both".into())),
        (None, None) => return Err(Failure("missing input: use -f or --w-basis".into())),
        (None, Some(b)) => b.clone(),
        (Some(f), None) if Path::new(f).is_file() => std::fs::read_to_string(f)?,
        (Some(f), None) => f.clone(),
    };
    Ok(parse_input(&text, p.n)?)
}

fn denom_bound() -> Result<i64, Failure> {
    match std::env::var("QCHAR_DENOM_BOUND") {
        Ok(v) => v
            .trim()
            .parse::<i64>()
            .ok()
            .filter(|&b| b >= 1)
            .ok_or_else(|| Failure(format!("QCHAR_DENOM_BOUND must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_DENOM_BOUND),
    }
}

fn print_poly(f: &LaurentPoly, format: Format) -> Outcome {
    println!("{}", render(f, format));
    Ok(ExitCode::SUCCESS)
}

fn report_membership(ring: &str, v: &Verdict) {
    if v.member {
        println!("member of {ring}");
    } else {
        println!("not a member of {ring}: {}", v.reason.as_deref().unwrap_or("no reason given"));
    }
}

/// `{"(2,0)": "1", "(1,1)": "-1/2"}`
fn coefficient_map(pairs: impl Iterator<Item = (String, String)>) -> String {
    let body = pairs
        .map(|(k, v)| {
            format!(
                "{}: {}",
                serde_json::Value::String(k),
                serde_json::Value::String(v)
            )
        })
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{body}}}")
}
