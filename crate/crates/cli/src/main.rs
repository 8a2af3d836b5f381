//! Command-line front end: exact rational input, exact rational output.

mod args;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use binsquare::arith::DEFAULT_EFFORT;
use binsquare::binsq::{elem_from_point, is_square_binomial, point_from_elem, star, star_terms};
use binsquare::classfield::{kappa_element, sqrt_ext_minpoly, table1_verify_rows, Table1};
use binsquare::purecubic::Precision;
use binsquare::{CubicField, Error, MordellCurve, Rat};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use args::{int, point, rat, UsageError};
use render::{element_json, point_json, Out};

#[derive(Parser)]
#[command(
    name = "binsquare",
    version,
    about = "Binomial squares in pure cubic fields and Mordell curve points"
)]
struct Cli {
    /// Output format: human-readable text or one JSON record per line.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Pollard-rho iteration budget for factorizations.
    #[arg(long, default_value_t = DEFAULT_EFFORT, global = true)]
    effort: u64,
    /// Decimal digits for numeric square roots in the field.
    #[arg(long, default_value_t = Precision::default().digits, global = true)]
    precision: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// P + Q on y^2 = x^3 + k. Points are `x y` or `inf`.
    CurveAdd {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(num_args = 2..=4, value_name = "P Q", allow_hyphen_values = true)]
        points: Vec<String>,
    },
    /// 2P on y^2 = x^3 + k.
    CurveDouble {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(num_args = 1..=2, value_name = "P", allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// nP on y^2 = x^3 + k.
    CurveMul {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(num_args = 1..=2, value_name = "P", allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// All rational Q with 2Q = P.
    Halve {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(num_args = 1..=2, value_name = "P", allow_hyphen_values = true)]
        point: Vec<String>,
    },
    /// Points with x = a/e^2, 1 <= e <= E, |a| <= A.
    Search {
        #[arg(allow_hyphen_values = true)]
        k: String,
        #[arg(long)]
        e_bound: u64,
        #[arg(long)]
        a_bound: u64,
    },
    /// Element α with α^2 = a - bω for (x, y) on y^2 = x^3 - m b^3.
    FromPoint {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Point of r + sω + tω^2 when its square is binomial.
    ToPoint {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Product of two elements through the induced group law.
    Star {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(num_args = 6, value_names = ["R1", "S1", "T1", "R2", "S2", "T2"], allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Whether a - bω is a square, with its root.
    SquareTest {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Norm of r + sω + tω^2.
    Norm {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Square root of r + sω + tω^2 in the field, if any.
    Sqrt {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        r: String,
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// α = a - b e^2 ω for (x, y) on y^2 = x^3 - m b^3, with its conditions.
    Kappa {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Sextic polynomial of √α over Q.
    ExtPoly {
        #[arg(allow_hyphen_values = true)]
        m: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Verify every tabulated row.
    Table1 {
        /// Alternative dataset in the built-in JSON format.
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e.0)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn field(m: &str, effort: u64) -> Result<CubicField, Failure> {
    Ok(CubicField::with_effort(int("m", m)?, effort)?)
}

fn curve(k: &str) -> Result<MordellCurve, Failure> {
    Ok(MordellCurve::new(int("k", k)?)?)
}

fn run(cli: Cli, out: &mut Out) -> Result<(), Failure> {
    let effort = cli.effort;
    match cli.command {
        Command::CurveAdd { k, points } => {
            let c = curve(&k)?;
            let (p, rest) = point(&points)?;
            let (q, rest) = point(rest)?;
            args::no_extra(rest)?;
            let r = c.add(&c.point_checked(p)?, &c.point_checked(q)?);
            out.record(
                "curve-add",
                &r.to_string(),
                json!({ "k": k, "sum": point_json(&r) }),
            );
        }
        Command::CurveDouble { k, point: toks } => {
            let c = curve(&k)?;
            let p = c.point_checked(args::single_point(&toks)?)?;
            let r = c.double(&p);
            out.record(
                "curve-double",
                &r.to_string(),
                json!({ "k": k, "double": point_json(&r) }),
            );
        }
        Command::CurveMul { k, n, point: toks } => {
            let c = curve(&k)?;
            let n: BigInt = int("n", &n)?;
            let p = c.point_checked(args::single_point(&toks)?)?;
            let r = c.scalar_mul(&n, &p);
            out.record(
                "curve-mul",
                &r.to_string(),
                json!({ "k": k, "n": n.to_string(), "product": point_json(&r) }),
            );
        }
        Command::Halve { k, point: toks } => {
            let c = curve(&k)?;
            let p = c.point_checked(args::single_point(&toks)?)?;
            let halves = c.halve(&p, effort)?;
            let text = if halves.is_empty() {
                "none".to_string()
            } else {
                halves
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let list: Vec<_> = halves.iter().map(point_json).collect();
            out.record("halve", &text, json!({ "k": k, "halves": list }));
        }
        Command::Search {
            k,
            e_bound,
            a_bound,
        } => {
            let c = curve(&k)?;
            if e_bound == 0 || a_bound == 0 {
                return Err(Failure::Usage("bounds must be at least 1".into()));
            }
            let found = c.search_points(e_bound, a_bound);
            let text = if found.is_empty() {
                "none".to_string()
            } else {
                found
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let list: Vec<_> = found.iter().map(point_json).collect();
            out.record("search", &text, json!({ "k": k, "points": list }));
        }
        Command::FromPoint { m, b, x, y } => {
            let f = field(&m, effort)?;
            let b = rat("b", &b)?;
            let c = MordellCurve::twist(f.m(), &b)?;
            let p = c.point(rat("x", &x)?, rat("y", &y)?)?;
            let w = elem_from_point(&f, &b, &p)?;
            let text = format!(
                "alpha = {}\nalpha^2 = {}",
                w.alpha,
                f.binomial(w.a.clone(), &w.b)
            );
            out.record(
                "from-point",
                &text,
                json!({ "m": m, "b": w.b.to_string(), "alpha": element_json(&w.alpha), "a": w.a.to_string() }),
            );
        }
        Command::ToPoint { m, r, s, t } => {
            let f = field(&m, effort)?;
            let alpha = f.element(rat("r", &r)?, rat("s", &s)?, rat("t", &t)?);
            let ep = point_from_elem(&alpha)?;
            let b = ep.b.as_ref().map(ToString::to_string);
            let k = ep.curve.as_ref().map(|c| c.k().to_string());
            let text = match (&b, &k) {
                (Some(b), Some(_)) => format!(
                    "{} on {} (b = {b}, a = {})",
                    ep.point,
                    ep.curve.as_ref().expect("twist curve"),
                    ep.a
                ),
                _ => format!("{} (rational element, alpha^2 = {})", ep.point, ep.a),
            };
            out.record(
                "to-point",
                &text,
                json!({ "m": m, "point": point_json(&ep.point), "b": b, "k": k, "a": ep.a.to_string() }),
            );
        }
        Command::Star { m, coeffs } => {
            let f = field(&m, effort)?;
            let c: Vec<Rat> = coeffs
                .iter()
                .enumerate()
                .map(|(i, s)| rat(&format!("coefficient {}", i + 1), s))
                .collect::<Result<_, _>>()?;
            let a1 = f.element(c[0].clone(), c[1].clone(), c[2].clone());
            let a2 = f.element(c[3].clone(), c[4].clone(), c[5].clone());
            let prod = star(&a1, &a2)?;
            let terms = star_terms(&a1, &a2)?;
            let mut text = format!("alpha3 = {prod}");
            let terms_json = terms.as_ref().map(|t| {
                text.push_str(&format!(
                    "\nS- = {}\nS+ = {}\nT- = {}\nT+ = {}\nSigma = {}\ns3 = {}\nt3 = {}\nr3 = {}",
                    t.s_minus, t.s_plus, t.t_minus, t.t_plus, t.sigma, t.s3, t.t3, t.r3
                ));
                json!({
                    "s_minus": t.s_minus.to_string(), "s_plus": t.s_plus.to_string(),
                    "t_minus": t.t_minus.to_string(), "t_plus": t.t_plus.to_string(),
                    "sigma": t.sigma.to_string(), "s3": t.s3.to_string(),
                    "t3": t.t3.to_string(), "r3": t.r3.to_string(),
                })
            });
            out.record(
                "star",
                &text,
                json!({ "m": m, "product": element_json(&prod), "terms": terms_json }),
            );
        }
        Command::SquareTest { m, a, b } => {
            let f = field(&m, effort)?;
            let root = is_square_binomial(&f, &rat("a", &a)?, &rat("b", &b)?, effort)?;
            let text = match &root {
                Some(r) => format!("present: ({r})^2 = {}, ω = cbrt({m})", r.square()),
                None => "absent".to_string(),
            };
            out.record(
                "square-test",
                &text,
                json!({ "m": m, "a": a, "b": b, "square": root.is_some(), "root": root.as_ref().map(element_json) }),
            );
        }
        Command::Norm { m, r, s, t } => {
            let f = field(&m, effort)?;
            let n = f
                .element(rat("r", &r)?, rat("s", &s)?, rat("t", &t)?)
                .norm();
            out.record(
                "norm",
                &n.to_string(),
                json!({ "m": m, "norm": n.to_string() }),
            );
        }
        Command::Sqrt { m, r, s, t } => {
            let f = field(&m, effort)?;
            let beta = f.element(rat("r", &r)?, rat("s", &s)?, rat("t", &t)?);
            let root = beta.sqrt_in_field(Precision {
                digits: cli.precision,
            })?;
            let text = root
                .as_ref()
                .map_or("absent".to_string(), ToString::to_string);
            out.record(
                "sqrt",
                &text,
                json!({ "m": m, "root": root.as_ref().map(element_json) }),
            );
        }
        Command::Kappa { m, b, x, y } => {
            let r = kappa(&m, &b, &x, &y, effort)?;
            out.record("kappa", &render::kappa_text(&r), render::kappa_json(&r));
        }
        Command::ExtPoly { m, b, x, y } => {
            let r = kappa(&m, &b, &x, &y, effort)?;
            let f = sqrt_ext_minpoly(&r, effort)?;
            let coeffs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
            out.record(
                "ext-poly",
                &f.to_string(),
                json!({ "m": m, "alpha": element_json(&r.alpha), "coefficients": coeffs, "polynomial": f.to_string() }),
            );
        }
        Command::Table1 { table } => {
            let data = match table {
                Some(path) => Table1::load(&path)?,
                None => Table1::builtin(),
            };
            let report = table1_verify_rows(&data.rows, effort);
            for row in &report.rows {
                out.record("table1-row", &render::row_text(row), render::row_json(row));
            }
            let passed = report.rows.iter().filter(|r| r.pass()).count();
            out.record(
                "table1-summary",
                &format!("{passed}/{} rows pass", report.rows.len()),
                json!({ "rows": report.rows.len(), "passed": passed, "all_pass": report.all_pass() }),
            );
        }
    }
    Ok(())
}

fn kappa(
    m: &str,
    b: &str,
    x: &str,
    y: &str,
    effort: u64,
) -> Result<binsquare::classfield::KappaReport, Failure> {
    let m = int("m", m)?;
    let b = int("b", b)?;
    let c = MordellCurve::twist(&m, &Rat::from_int(b.clone()))?;
    let p = c.point(rat("x", x)?, rat("y", y)?)?;
    Ok(kappa_element(&m, &b, &p, effort)?)
}

trait PointChecked {
    fn point_checked(&self, p: Option<(Rat, Rat)>) -> Result<binsquare::CurvePoint, Error>;
}

impl PointChecked for MordellCurve {
    fn point_checked(&self, p: Option<(Rat, Rat)>) -> Result<binsquare::CurvePoint, Error> {
        match p {
            None => Ok(binsquare::CurvePoint::infinity()),
            Some((x, y)) => self.point(x, y),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(args::hoist_global_flags(std::env::args().collect()));
    let mut out = Out::new(cli.format);
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}
