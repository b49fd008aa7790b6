use std::io::Write;
use std::process::ExitCode;

use bilaguerre::arith::Rational;
use bilaguerre::congruence::{
    sweep, BinomialProductMode, Case, CongruenceReport, Location, Statement, SweepRanges,
    SweepSummary,
};
use bilaguerre::laguerre::Route;
use bilaguerre::pde::{ode_residual, pde_residuals, product_pde_residual};
use bilaguerre::poly::json::PolyDoc;
use bilaguerre::poly::BiPoly;
use bilaguerre::rook::{
    bilaguerre_rook_transform, rook_numbers_bruteforce, rook_polynomial_from_laguerre,
    rook_table_csv, RookVector,
};
use bilaguerre::structure::irreducibility_certificate;
use bilaguerre::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "bilaguerre", version, about = "Exact two-variable Laguerre polynomials and their congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Print L_{n,m}(x, y).
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "explicit", value_parser = parse_route)]
        route: Route,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate L_{n,m} at a rational point, coordinates as "num/den".
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x: Rational,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        y: Rational,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide one congruence instance.
    Check {
        #[arg(long, value_parser = parse_statement)]
        statement: Statement,
        #[command(flatten)]
        params: CheckParams,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check every admissible tuple of a statement over a box of parameters.
    Sweep {
        #[arg(long, value_parser = parse_statement)]
        statement: Statement,
        #[arg(long)]
        max_n: i64,
        #[arg(long)]
        max_m: i64,
        #[arg(long)]
        max_p: i64,
        #[arg(long)]
        max_q: i64,
        /// Upper end of the alpha range (Carlitz).
        #[arg(long, default_value_t = 5)]
        max_alpha: i64,
        /// Upper end of the s range (binomial product); defaults to max-n.
        #[arg(long)]
        max_s: Option<i64>,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, env = "BILAGUERRE_JOBS", default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Residuals of the differential equations; all zero when they hold.
    Pde {
        #[command(subcommand)]
        kind: Option<PdeKind>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Rook numbers of the n x n board, or the rook transform of L_{n,m}.
    Rook {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
        /// Also count placements directly and compare.
        #[arg(long)]
        brute: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Irreducibility certificate for L_{n,m}.
    Cert {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum PdeKind {
    /// Single-variable Laguerre equation for L_n^alpha.
    Ode {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        alpha: u32,
    },
    /// Equation satisfied by L_n^alpha(x) L_m^beta(y).
    Product {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        alpha: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 0)]
        beta: u32,
    },
}

#[derive(Args)]
struct CheckParams {
    #[arg(long, allow_hyphen_values = true)]
    n: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    i: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    /// Drop the factorial weight of the binomial-product statement.
    #[arg(long)]
    no_factorial: bool,
}

/// Failure modes of a command, mapped to exit codes.
enum Failure {
    Usage(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_statement(s: &str) -> Result<Statement, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| format!("expected \"num/den\" with decimal integers: {e}"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(EXIT_VIOLATION),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn emit(out: &mut impl Write, text: &str) -> Outcome {
    writeln!(out, "{text}").map_err(|e| Failure::Usage(format!("write failed: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn poly_json(p: &BiPoly) -> String {
    to_json(&PolyDoc::from(p))
}

fn unsupported(format: Format, command: &str) -> Failure {
    let name = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Pretty => "pretty",
    };
    Failure::Usage(format!("{command} does not support --format {name}"))
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Gen { n, m, route, format } => {
            let p = route.build(n, m);
            match format {
                Format::Json => emit(out, &poly_json(&p)),
                Format::Pretty => emit(out, &p.to_string()),
                Format::Csv => Err(unsupported(format, "gen")),
            }
        }
        Command::Eval { n, m, x, y, format } => {
            let v = bilaguerre::laguerre::bilaguerre(n, m).eval(&x, &y);
            match format {
                Format::Json => emit(
                    out,
                    &to_json(&json!({
                        "n": n, "m": m,
                        "x": x.to_string(), "y": y.to_string(),
                        "value": v.to_string(),
                    })),
                ),
                Format::Pretty => emit(out, &v.to_string()),
                Format::Csv => Err(unsupported(format, "eval")),
            }
        }
        Command::Check { statement, params, format } => {
            let report = build_case(statement, &params)?.check()?;
            match format {
                Format::Json => emit(out, &to_json(&report))?,
                Format::Pretty => emit(out, &pretty_report(&report))?,
                Format::Csv => return Err(unsupported(format, "check")),
            }
            if report.holds {
                Ok(())
            } else {
                Err(Failure::Violation)
            }
        }
        Command::Sweep { statement, max_n, max_m, max_p, max_q, max_alpha, max_s, jobs, format } => {
            let ranges = SweepRanges::up_to(max_n, max_m, max_p, max_q)
                .with_alpha(0..=max_alpha)
                .with_s(0..=max_s.unwrap_or(max_n));
            let summary = sweep(statement, &ranges, jobs)?;
            eprintln!("{} cases in {} ms", summary.checked, summary.elapsed_ms);
            match format {
                Format::Json => emit(out, &to_json(&summary))?,
                Format::Pretty => emit(out, &pretty_summary(&summary))?,
                Format::Csv => return Err(unsupported(format, "sweep")),
            }
            if summary.failed == 0 {
                Ok(())
            } else {
                Err(Failure::Violation)
            }
        }
        Command::Pde { kind, n, m, format } => run_pde(kind, n, m, format, out),
        Command::Rook { n, m, brute, format } => run_rook(n, m, brute, format, out),
        Command::Cert { n, m, format } => {
            let cert = irreducibility_certificate(n, m)?;
            match format {
                Format::Json => emit(out, &to_json(&cert)),
                Format::Pretty => emit(
                    out,
                    &format!(
                        "L_{{{n},{m}}}: diagonal {}, core degree {}, core {:?}, {:?}",
                        if cert.diagonal_ok { "ok" } else { "MISMATCH" },
                        cert.core_degree,
                        cert.core_irreducible,
                        cert.conclusion
                    ),
                ),
                Format::Csv => Err(unsupported(format, "cert")),
            }
        }
    }
}

fn build_case(statement: Statement, p: &CheckParams) -> Result<Case, Failure> {
    let need = |v: Option<i64>, name: &str| {
        v.ok_or_else(|| Failure::Usage(format!("--{name} is required for --statement {statement}")))
    };
    Ok(match statement {
        Statement::Carlitz => Case::Carlitz {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
            alpha: need(p.alpha, "alpha")?,
        },
        Statement::Pochhammer => Case::Pochhammer {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
            t: need(p.t, "t")?,
            l: need(p.l, "l")?,
            p: need(p.p, "p")?,
            q: need(p.q, "q")?,
        },
        Statement::ParameterShift => Case::ParameterShift {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
            q: need(p.q, "q")?,
            i: need(p.i, "i")?,
            p: need(p.p, "p")?,
        },
        Statement::AlphaPeriodicity => Case::AlphaPeriodicity {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
            q: need(p.q, "q")?,
        },
        Statement::BinomialPochhammer => Case::BinomialPochhammer {
            m: need(p.m, "m")?,
            n: need(p.n, "n")?,
            q: need(p.q, "q")?,
            i: need(p.i, "i")?,
            p: need(p.p, "p")?,
        },
        Statement::BinomialProduct => Case::BinomialProduct {
            m: need(p.m, "m")?,
            s: need(p.s, "s")?,
            q: need(p.q, "q")?,
            i: need(p.i, "i")?,
            mode: if p.no_factorial {
                BinomialProductMode::NoFactorial
            } else {
                BinomialProductMode::WithFactorial
            },
        },
        Statement::Main => Case::Main {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
            p: need(p.p, "p")?,
            q: need(p.q, "q")?,
        },
    })
}

fn pretty_report(r: &CongruenceReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let head = format!("{} {} (mod {})", r.statement, params.join(" "), r.modulus);
    match &r.witness {
        None => format!("{head}: holds"),
        Some(w) => {
            let at = match w.at {
                Location::Monomial([0, 0]) => "1".to_string(),
                Location::Monomial([x, y]) => bilaguerre::poly::Monomial::new(x, y).to_string(),
                Location::Scalar => "value".to_string(),
            };
            format!(
                "{head}: FAILS at {at}: lhs = {}, rhs = {}, difference = {}",
                w.lhs, w.rhs, w.difference
            )
        }
    }
}

fn pretty_summary(s: &SweepSummary) -> String {
    let mut text = format!("{}: {} checked, {} failed", s.statement, s.checked, s.failed);
    for f in &s.failures {
        text.push('\n');
        text.push_str(&pretty_report(f));
    }
    text
}

fn run_pde(kind: Option<PdeKind>, n: Option<u32>, m: Option<u32>, format: Format, out: &mut impl Write) -> Outcome {
    let (residuals, zero): (Vec<(&str, BiPoly)>, bool) = match kind {
        Some(PdeKind::Ode { n, alpha }) => {
            let r = BiPoly::from_x(&ode_residual(n, alpha));
            let z = r.is_zero();
            (vec![("residual", r)], z)
        }
        Some(PdeKind::Product { n, alpha, m, beta }) => {
            let r = product_pde_residual(n, alpha, m, beta);
            let z = r.is_zero();
            (vec![("residual", r)], z)
        }
        None => {
            let (Some(n), Some(m)) = (n, m) else {
                return Err(Failure::Usage("pde needs --n and --m, or a subcommand".into()));
            };
            let pair = pde_residuals(n, m);
            let z = pair.is_zero();
            (vec![("row1", pair.row1), ("row2", pair.row2)], z)
        }
    };
    match format {
        Format::Json => {
            let text = match residuals.as_slice() {
                [(_, r)] => to_json(&Residual { residual: r.into(), zero }),
                [(_, a), (_, b)] => to_json(&ResidualRows { row1: a.into(), row2: b.into(), zero }),
                _ => unreachable!("one or two residuals"),
            };
            emit(out, &text)?;
        }
        Format::Pretty => {
            for (name, p) in &residuals {
                emit(out, &format!("{name}: {p}"))?;
            }
        }
        Format::Csv => return Err(unsupported(format, "pde")),
    }
    if zero {
        Ok(())
    } else {
        Err(Failure::Violation)
    }
}

fn run_rook(n: u32, m: Option<u32>, brute: bool, format: Format, out: &mut impl Write) -> Outcome {
    if let Some(m) = m {
        if brute {
            return Err(Failure::Usage("--brute applies to the one-variable table only".into()));
        }
        let t = bilaguerre_rook_transform(n, m)?.to_rational_poly();
        return match format {
            Format::Json => emit(out, &poly_json(&t)),
            Format::Pretty => emit(out, &t.to_string()),
            Format::Csv => {
                let mut text = String::from("i,j,coefficient");
                for (mono, c) in t.terms() {
                    text.push_str(&format!("\n{},{},{}", mono.x, mono.y, c));
                }
                emit(out, &text)
            }
        };
    }
    let from_laguerre = RookVector::from_polynomial(n, &rook_polynomial_from_laguerre(n)?)?;
    let direct = if brute { Some(rook_numbers_bruteforce(n)?) } else { None };
    let agree = direct.as_ref().is_none_or(|d| d.r == from_laguerre.r);
    match format {
        Format::Csv => {
            let mut rows = vec![from_laguerre.clone()];
            rows.extend(direct.iter().filter(|_| !agree).cloned());
            out.write_all(rook_table_csv(&rows).as_bytes())
                .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
        }
        Format::Json => {
            let v = RookRows {
                n,
                laguerre: to_strings(&from_laguerre),
                brute: direct.as_ref().map(to_strings),
                agree: direct.as_ref().map(|_| agree),
            };
            emit(out, &to_json(&v))?;
        }
        Format::Pretty => {
            emit(out, &format!("laguerre: {}", to_strings(&from_laguerre).join(" ")))?;
            if let Some(d) = &direct {
                emit(out, &format!("brute:    {}", to_strings(d).join(" ")))?;
            }
        }
    }
    if agree {
        Ok(())
    } else {
        eprintln!("rook numbers from the two routes differ");
        Err(Failure::Violation)
    }
}

#[derive(Serialize)]
struct Residual {
    residual: PolyDoc,
    zero: bool,
}

#[derive(Serialize)]
struct ResidualRows {
    row1: PolyDoc,
    row2: PolyDoc,
    zero: bool,
}

#[derive(Serialize)]
struct RookRows {
    n: u32,
    laguerre: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn to_strings(v: &RookVector) -> Vec<String> {
    v.r.iter().map(ToString::to_string).collect()
}
