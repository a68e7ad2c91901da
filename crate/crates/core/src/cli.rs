//! Batch front end. Every command prints one JSON document; errors print
//! `{"error": ...}` and exit with 2, failed checks exit with 1.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::arc::{ts_check, DirectProduct, MonomialGeometry};
use crate::error::{Error, Result};
use crate::gauss::UElement;
use crate::json::{self, Json};
use crate::motive::{Character, MotiveFrac};
use crate::oracles::{check_gauss_jacobi, check_decomposition, IntPoly, ResidualFunction};
use crate::selftest::Suite;
use crate::series::{Coefficient, RationalSeries};
use crate::spectra::{sg, sg_brieskorn, sp, sp_brieskorn};

pub const THREADS_ENV: &str = "MOTIVIC_THREADS";

#[derive(Parser, Debug)]
#[command(name = "motivic", version, about = "Motivic exponential integrals, Gauss-sum classes and Hodge spectra")]
struct Cli {
    /// How coefficients are rendered in expansions.
    #[arg(long, value_enum, default_value_t = Display::Uv, global = true)]
    display: Display,
    /// Expansion window `min:max` of coefficients to list next to a series.
    #[arg(long, global = true)]
    window: Option<String>,
    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Display {
    /// `u^p v^q` monomials
    Uv,
    /// powers of `L` where `p = q`
    Lefschetz,
}

#[derive(Args, Debug)]
struct GeometryArg {
    /// Geometry as a JSON file, inline JSON, or `brieskorn(a,b,...)` where allowed.
    #[arg(long)]
    geometry: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Character-twisted zeta series `Z_{W,f,α}(T)`.
    Zeta {
        #[command(flatten)]
        geometry: GeometryArg,
        #[arg(long, default_value = "0/1")]
        character: String,
    },
    /// Exponential-integral series `E_{W,f}(T)`.
    ExpSeries {
        #[command(flatten)]
        geometry: GeometryArg,
    },
    /// Measure series `Σ μ(ord f > i) T^i`.
    Measure {
        #[command(flatten)]
        geometry: GeometryArg,
    },
    /// Coefficients of `E_{f ⊕ f'}` by the stratified computation, optionally
    /// checked against the product `E_f · E_{f'}`.
    ThomSebastiani {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 30)]
        imax: usize,
    },
    /// Hodge spectrum.
    Spectrum {
        #[command(flatten)]
        geometry: GeometryArg,
    },
    /// The class `SG = Σ_α G_{α⁻¹} S^φ_α`.
    Sg {
        #[command(flatten)]
        geometry: GeometryArg,
    },
    /// Floating-point oracles.
    Oracle {
        #[command(subcommand)]
        oracle: Oracle,
    },
    /// Runs the invariant suite.
    Selftest {
        /// Reduced sizes.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Oracle {
    /// Both sides of the p-adic decomposition of an exponential sum.
    Padic {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        level: u32,
        /// Working precision; at least level + 1, where the sums are already exact.
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long, value_enum, default_value_t = Phi::One)]
        phi: Phi,
    },
    /// Gauss and Jacobi sum identities mod p.
    Gauss {
        #[arg(long)]
        prime: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Phi {
    One,
    Origin,
}

/// Result of a command: the JSON document and whether a requested check failed.
struct Report {
    value: Value,
    failed: bool,
}

impl From<Value> for Report {
    fn from(value: Value) -> Self {
        Report { value, failed: false }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            return fail(&e.to_string());
        }
    };
    let outcome = configure_threads().and_then(|()| execute(&cli)).and_then(|r| {
        let text = json::render(&r.value);
        match &cli.output {
            Some(path) => std::fs::write(path, text + "\n")
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?,
            None => {
                // a closed pipe downstream is not an error of ours
                let _ = writeln!(std::io::stdout().lock(), "{text}");
            }
        }
        Ok(r.failed)
    });
    match outcome {
        Ok(false) => 0,
        Ok(true) => 1,
        Err(e) => fail(&e.to_string()),
    }
}

fn fail(msg: &str) -> i32 {
    println!("{}", json!({ "error": msg.trim() }));
    2
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    // a second configuration in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn parse_window(raw: &str) -> Result<(i64, i64)> {
    let bad = || Error::Parse(format!("window must be min:max with min <= max, got {raw:?}"));
    let (lo, hi) = raw.split_once(':').ok_or_else(bad)?;
    let (lo, hi): (i64, i64) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

enum GeometryInput {
    Monomial(MonomialGeometry),
    Brieskorn(Vec<u32>),
}

fn parse_brieskorn(raw: &str) -> Option<Result<Vec<u32>>> {
    let inner = raw.trim().strip_prefix("brieskorn(")?.strip_suffix(')')?;
    Some(
        inner
            .split(',')
            .map(|a| {
                a.trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|&a| a >= 2)
                    .ok_or_else(|| Error::Parse(format!("Brieskorn exponents must be integers >= 2, got {a:?}")))
            })
            .collect(),
    )
}

fn read_geometry(raw: &str, allow_brieskorn: bool) -> Result<GeometryInput> {
    if let Some(exps) = parse_brieskorn(raw) {
        if !allow_brieskorn {
            return Err(Error::Parse("brieskorn(...) is only accepted by spectrum and sg".into()));
        }
        return Ok(GeometryInput::Brieskorn(exps?));
    }
    let text = if raw.trim_start().starts_with('{') {
        raw.to_string()
    } else {
        std::fs::read_to_string(raw).map_err(|e| Error::Parse(format!("cannot read geometry {raw:?}: {e}")))?
    };
    Ok(GeometryInput::Monomial(json::parse(&text)?))
}

fn monomial(raw: &str) -> Result<MonomialGeometry> {
    match read_geometry(raw, false)? {
        GeometryInput::Monomial(g) => Ok(g),
        GeometryInput::Brieskorn(_) => unreachable!("rejected above"),
    }
}

trait Render {
    fn text(&self, display: Display) -> String;
}

impl Render for MotiveFrac {
    fn text(&self, display: Display) -> String {
        self.render(display == Display::Lefschetz)
    }
}

impl Render for UElement {
    fn text(&self, display: Display) -> String {
        self.render(display == Display::Lefschetz)
    }
}

fn series_report<B: Coefficient + Json + Render>(cli: &Cli, s: &RationalSeries<B>) -> Result<Value> {
    let Some(raw) = &cli.window else { return Ok(s.to_json()) };
    let (lo, hi) = parse_window(raw)?;
    let expansion: Vec<Value> = (lo..=hi)
        .map(|i| {
            let c = s.exp_t_coefficient(i);
            json!({ "i": i, "coefficient": c.to_json(), "text": c.text(cli.display) })
        })
        .collect();
    Ok(json!({ "series": s.to_json(), "expansion": expansion }))
}

fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

fn execute(cli: &Cli) -> Result<Report> {
    if let Some(raw) = &cli.window {
        parse_window(raw)?;
    }
    Ok(match &cli.command {
        Command::Zeta { geometry, character } => {
            let g = monomial(&geometry.geometry)?;
            let alpha: Character = character.parse()?;
            series_report(cli, &g.zeta_series(&alpha))?.into()
        }
        Command::ExpSeries { geometry } => series_report(cli, &monomial(&geometry.geometry)?.exp_series())?.into(),
        Command::Measure { geometry } => series_report(cli, &monomial(&geometry.geometry)?.measure_series())?.into(),
        Command::ThomSebastiani { left, right, check, imax } => thom_sebastiani(cli, left, right, *check, *imax)?,
        Command::Spectrum { geometry } => match read_geometry(&geometry.geometry, true)? {
            GeometryInput::Monomial(g) => sp(&g)?.to_json().into(),
            GeometryInput::Brieskorn(e) => sp_brieskorn(&e)?.to_json().into(),
        },
        Command::Sg { geometry } => match read_geometry(&geometry.geometry, true)? {
            GeometryInput::Monomial(g) => sg(&g).to_json().into(),
            GeometryInput::Brieskorn(e) => sg_brieskorn(&e)?.to_json().into(),
        },
        Command::Oracle { oracle: Oracle::Padic { poly, prime, level, precision, phi } } => {
            if precision.is_some_and(|n| n < level + 1) {
                return Err(Error::Precision(format!("precision must be at least level + 1 = {}", level + 1)));
            }
            let f: IntPoly = poly.parse()?;
            let m = f.arity().max(1);
            let phi = match phi {
                Phi::One => ResidualFunction::one(*prime, m),
                Phi::Origin => ResidualFunction::origin(*prime, m),
            };
            let r = check_decomposition(&f, *prime, &phi, *level)?;
            Report {
                value: json!({ "lhs": complex(r.lhs), "rhs": complex(r.rhs), "residue": r.residue, "pass": r.pass }),
                failed: !r.pass,
            }
        }
        Command::Oracle { oracle: Oracle::Gauss { prime } } => {
            let r = check_gauss_jacobi(*prime)?;
            Report {
                value: json!({
                    "prime": r.p,
                    "pairs": r.pairs,
                    "product_residue": r.product_residue,
                    "inverse_residue": r.inverse_residue,
                    "weight_residue": r.weight_residue,
                    "pass": r.pass(),
                }),
                failed: !r.pass(),
            }
        }
        Command::Selftest { quick } => {
            let suite = if *quick { Suite::quick() } else { Suite::full() };
            let outcomes = suite.run();
            let failed = outcomes.iter().any(|o| !o.pass);
            let rows: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({
                        "criterion": o.criterion,
                        "name": o.name,
                        "pass": o.pass,
                        "cases": o.cases,
                        "seconds": o.elapsed.as_secs_f64(),
                        "detail": o.detail,
                    })
                })
                .collect();
            Report { value: json!({ "pass": !failed, "checks": rows }), failed }
        }
    })
}

fn thom_sebastiani(cli: &Cli, left: &str, right: &str, check: bool, i_max: usize) -> Result<Report> {
    if i_max == 0 {
        return Err(Error::Parse("--imax must be positive".into()));
    }
    let (l, r) = (monomial(left)?, monomial(right)?);
    let direct = DirectProduct::new(&l, &r, i_max);
    let coefficients: Vec<Value> = (1..=i_max)
        .map(|i| {
            let c = direct.exp_coefficient(i);
            json!({ "i": i, "coefficient": c.to_json(), "text": c.text(cli.display) })
        })
        .collect();
    let mut value = json!({ "i_max": i_max, "coefficients": coefficients });
    let mut failed = false;
    if check {
        let report = ts_check(&l, &r, i_max);
        failed = !report.passed();
        value["pass"] = json!(report.passed());
        value["levels_checked"] = json!(report.levels_checked);
        value["first_mismatch"] = match &report.first_mismatch {
            None => Value::Null,
            Some(m) => json!({ "level": m.level, "product": m.product.to_json(), "direct": m.direct.to_json() }),
        };
    }
    Ok(Report { value, failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        assert_eq!(parse_window("-3:5").unwrap(), (-3, 5));
        assert!(parse_window("5:3").is_err());
        assert!(parse_window("5").is_err());
    }

    #[test]
    fn brieskorn_shorthand() {
        assert_eq!(parse_brieskorn("brieskorn(2, 3)").unwrap().unwrap(), vec![2, 3]);
        assert!(parse_brieskorn("brieskorn(1)").unwrap().is_err());
        assert!(parse_brieskorn("{\"f_exponents\": [2]}").is_none());
        assert!(read_geometry("brieskorn(2)", false).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["motivic", "--help"]), 0);
        assert_eq!(run(["motivic", "bogus"]), 2);
        assert_eq!(run(["motivic", "zeta", "--geometry", "{\"f_exponents\": [0]}"]), 2);
        assert_eq!(run(["motivic", "spectrum", "--geometry", "brieskorn(2,3)"]), 0);
    }
}
