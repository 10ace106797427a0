//! Command-line surface: flag parsing, dispatch, exit codes.
//!
//! Exit codes: 0 success, 1 identity not proved (or oracle disagreement),
//! 2 usage or input error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hallk::algebra::{
    normal_form, pbw_expand, q_bracket, verify_identity, AlgElement, GenSymbol, R4Mode,
    ReduceOptions, Schedule, DEFAULT_MAX_STEPS,
};
use hallk::coeff::LaurentQT;
use hallk::oracle::{self, OracleIdentity};
use hallk::quiver::{DimVector, Quiver};
use hallk::rmatrix::lambda_entry;
use hallk::simples::{enumerate_simple_labels, SimpleLabel};

use crate::parse::parse_element;
use crate::render;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_PROVED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Parser, Debug)]
#[command(
    name = "hallk",
    about = "Symbolic workbench for quiver Hall-algebra generators",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,

    /// Quiver: "A<n>" for the linear type-A quiver on n vertices, "jordan"
    /// for the one-loop quiver, or explicit "v=<n>; e=<a>b,..." text.
    #[arg(long, global = true, default_value = "A1")]
    quiver: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Rewrite fuel. Falls back to HALLK_MAX_STEPS, then the built-in limit.
    #[arg(long, global = true)]
    max_steps: Option<u64>,

    /// Same-vertex swap rule: off, aligned, or uniform.
    #[arg(long, global = true, default_value = "aligned")]
    r4: String,

    /// Scrambles the reduction worklist order; normal forms do not depend
    /// on it, which is exactly what the confluence suite exercises.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Reduce an expression to its normal form.
    Nf {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Parse an expression and re-emit it in canonical form.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Prove two expressions equal by normal form, or check a named
    /// relation family: bracket, u3, serre, or interval.
    Verify {
        /// Either one family name or two expressions. Expressions starting
        /// with a minus sign go after a "--" separator.
        #[arg(num_args = 1..=2)]
        args: Vec<String>,
        /// Base vertex for named families.
        #[arg(long, default_value_t = 1)]
        i: usize,
        /// End vertex for the interval family.
        #[arg(long)]
        j: Option<usize>,
        /// First loop index.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        l: i64,
        /// Second loop index.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lp: i64,
        /// Loop indices for the interval family, comma separated.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        loops: Vec<i64>,
    },
    /// Interaction degree of an ordered pair of generators.
    Lambda {
        #[arg(allow_hyphen_values = true)]
        g1: String,
        #[arg(allow_hyphen_values = true)]
        g2: String,
    },
    /// Enumerate simple labels for a dimension vector over a weight window.
    Simples {
        /// Dimension vector, comma separated: "2" or "1,1".
        #[arg(long, allow_hyphen_values = true)]
        dim: String,
        /// Weight window "lo..hi", inclusive.
        #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
        grades: String,
    },
    /// Geometric character-model checks.
    Oracle {
        #[command(subcommand)]
        what: OracleCmd,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Check one structural identity at the given parameters.
    Verify {
        /// ses1, ses2, ses3, ses4, reality, or bracket.
        identity: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        l: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        lp: i64,
    },
    /// Compare an element's character before and after reduction.
    Crosscheck {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn resolve_quiver(text: &str) -> Result<Quiver, UsageError> {
    if let Some(rest) = text.strip_prefix('A').or_else(|| text.strip_prefix('a')) {
        if let Ok(n) = rest.parse::<usize>() {
            if n >= 1 {
                return Ok(Quiver::type_a(n));
            }
        }
    }
    if text.eq_ignore_ascii_case("jordan") {
        return Ok(Quiver::jordan());
    }
    Ok(Quiver::parse(text)?)
}

fn resolve_options(cli: &Cli) -> Result<ReduceOptions, UsageError> {
    let r4 = R4Mode::parse(&cli.r4)
        .ok_or_else(|| UsageError(format!("unknown --r4 mode {:?}", cli.r4)))?;
    let max_steps = match cli.max_steps {
        Some(n) => n,
        None => match std::env::var("HALLK_MAX_STEPS") {
            Ok(text) => text
                .parse::<u64>()
                .map_err(|_| UsageError(format!("HALLK_MAX_STEPS is not an integer: {text:?}")))?,
            Err(_) => DEFAULT_MAX_STEPS,
        },
    };
    let schedule = match cli.seed {
        Some(s) => Schedule::Seeded(s),
        None => Schedule::Fifo,
    };
    Ok(ReduceOptions {
        r4,
        schedule,
        max_steps,
        trace: false,
    })
}

/// An expression that denotes one bare generator.
fn parse_generator(src: &str, quiver: &Quiver) -> Result<GenSymbol, UsageError> {
    let e = parse_element(src, quiver)?;
    let mut terms = e.terms();
    if let (Some((word, coeff)), None) = (terms.next(), terms.next()) {
        if coeff.is_one() && word.len() == 1 {
            return Ok(word[0].clone());
        }
    }
    Err(UsageError(format!(
        "expected a single generator, got {src:?}"
    )))
}

fn parse_grades(text: &str) -> Result<(i64, i64), UsageError> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| UsageError(format!("--grades wants lo..hi, got {text:?}")))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| UsageError(format!("bad grade bound {lo:?}")))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| UsageError(format!("bad grade bound {hi:?}")))?;
    Ok((lo, hi))
}

fn parse_dim(text: &str) -> Result<DimVector, UsageError> {
    let entries = text
        .split(',')
        .map(|p| p.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| {
            UsageError(format!(
                "--dim wants comma-separated naturals, got {text:?}"
            ))
        })?;
    Ok(DimVector::new(entries))
}

fn emit_element(e: &AlgElement, format: Format) -> String {
    match format {
        Format::Text => e.canonical_text(),
        Format::Json => render::element_json(e).to_string(),
        Format::Latex => render::element_latex(e),
    }
}

fn simple_label_json(label: &SimpleLabel) -> Value {
    let orbit: Vec<Vec<u32>> = label.orbit.iter().map(|p| p.parts().to_vec()).collect();
    json!({
        "orbit": orbit,
        "weight": label.weight.to_string(),
        "shift": { "c": label.shift.c, "l": label.shift.l, "s": label.shift.s },
        "dim": label.orbit_dim(),
    })
}

/// The named relation families behind `verify <name>`.
fn family_sides(
    name: &str,
    quiver: &Quiver,
    i: usize,
    j: Option<usize>,
    l: i64,
    lp: i64,
    loops: &[i64],
) -> Result<(AlgElement, AlgElement), UsageError> {
    let single = |v: usize, loop_ix: i64| AlgElement::single(quiver.clone(), v, loop_ix);
    let unit_coeff = &LaurentQT::q_pow(-1) - &LaurentQT::q_pow(1);
    match name {
        "bracket" => {
            let lhs = q_bracket(&single(i, l)?, &single(i + 1, lp)?, 1)?;
            let rhs =
                AlgElement::generator(quiver.clone(), GenSymbol::interval(i, i + 1, vec![l, lp])?)?
                    .scale(&unit_coeff);
            Ok((lhs, rhs))
        }
        "u3" => {
            let lhs = single(i, l + 1)?
                .mul_free(&single(i + 1, lp)?)?
                .scale(&LaurentQT::q_pow(-1))
                .sub(
                    &single(i, l)?
                        .mul_free(&single(i + 1, lp + 1)?)?
                        .scale(&LaurentQT::t_pow(1)),
                )?;
            let rhs = single(i + 1, lp)?.mul_free(&single(i, l + 1)?)?.sub(
                &single(i + 1, lp + 1)?
                    .mul_free(&single(i, l)?)?
                    .scale(&LaurentQT::monomial(1, -1, 1)),
            )?;
            Ok((lhs, rhs))
        }
        "serre" => {
            let inner = q_bracket(&single(i, l)?, &single(i + 1, lp)?, 1)?;
            let lhs = q_bracket(&single(i, l)?, &inner, -1)?;
            let rhs = AlgElement::zero(quiver.clone());
            Ok((lhs, rhs))
        }
        "interval" => {
            let j = j.ok_or_else(|| UsageError("interval family needs --j".into()))?;
            if j < i {
                return Err(UsageError(format!(
                    "interval wants --j >= --i, got {j} < {i}"
                )));
            }
            let loops = if loops.is_empty() {
                vec![0; j - i + 1]
            } else {
                loops.to_vec()
            };
            let lhs = pbw_expand(quiver, i, j, &loops)?;
            let mut scale = LaurentQT::one();
            for _ in i..j {
                scale = &scale * &unit_coeff;
            }
            let rhs = AlgElement::generator(quiver.clone(), GenSymbol::interval(i, j, loops)?)?
                .scale(&scale);
            Ok((lhs, rhs))
        }
        other => Err(UsageError(format!(
            "unknown relation family {other:?}; expected bracket, u3, serre, or interval"
        ))),
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, UsageError> {
    let quiver = resolve_quiver(&cli.quiver)?;
    let opts = resolve_options(cli)?;
    let format = cli.format;

    match &cli.verb {
        Verb::Parse { expr } => {
            let e = parse_element(expr, &quiver)?;
            writeln!(out, "{}", emit_element(&e, format))?;
            Ok(EXIT_OK)
        }
        Verb::Nf { expr } => {
            let e = parse_element(expr, &quiver)?;
            let red = normal_form(&e, &opts)?;
            match format {
                Format::Json => {
                    let v = json!({
                        "result": render::element_json(&red.result),
                        "steps": red.steps,
                        "unreduced": red.unreduced,
                    });
                    writeln!(out, "{v}")?;
                }
                _ => writeln!(out, "{}", emit_element(&red.result, format))?,
            }
            Ok(EXIT_OK)
        }
        Verb::Verify {
            args,
            i,
            j,
            l,
            lp,
            loops,
        } => {
            let (lhs, rhs) = match args.as_slice() {
                [lhs, rhs] => (parse_element(lhs, &quiver)?, parse_element(rhs, &quiver)?),
                [name] => family_sides(name, &quiver, *i, *j, *l, *lp, loops)?,
                _ => unreachable!("clap enforces 1..=2 positional arguments"),
            };
            let v = verify_identity(&lhs, &rhs, &opts)?;
            match format {
                Format::Json => {
                    let payload = json!({
                        "proved": v.proved,
                        "normal_form": render::element_json(&v.normal_form),
                        "steps": v.steps,
                        "unreduced": v.unreduced,
                    });
                    writeln!(out, "{payload}")?;
                }
                _ => {
                    if v.proved {
                        writeln!(out, "proved")?;
                    } else {
                        writeln!(out, "not proved: {}", emit_element(&v.normal_form, format))?;
                    }
                }
            }
            Ok(if v.proved { EXIT_OK } else { EXIT_NOT_PROVED })
        }
        Verb::Lambda { g1, g2 } => {
            let a = parse_generator(g1, &quiver)?;
            let b = parse_generator(g2, &quiver)?;
            let entry = lambda_entry(&quiver, &a, &b)?;
            let payload = json!({
                "lambda": entry.value,
                "source": entry.provenance.to_string(),
            });
            writeln!(out, "{payload}")?;
            Ok(EXIT_OK)
        }
        Verb::Simples { dim, grades } => {
            let a = parse_dim(dim)?;
            let (lo, hi) = parse_grades(grades)?;
            let labels = enumerate_simple_labels(&quiver, &a, lo, hi)?;
            match format {
                Format::Json => {
                    let rows: Vec<Value> = labels.iter().map(simple_label_json).collect();
                    writeln!(out, "{}", Value::Array(rows))?;
                }
                _ => {
                    for label in &labels {
                        writeln!(out, "{label}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Verb::Oracle { what } => match what {
            OracleCmd::Verify { identity, l, lp } => {
                let id = OracleIdentity::parse(identity).ok_or_else(|| {
                    UsageError(format!(
                        "unknown identity {identity:?}; expected ses1..ses4, reality, or bracket"
                    ))
                })?;
                let report = oracle::verify(id, *l, *lp);
                match format {
                    Format::Json => {
                        let params: Value = report
                            .params
                            .iter()
                            .map(|&(k, v)| (k.to_string(), json!(v)))
                            .collect::<serde_json::Map<_, _>>()
                            .into();
                        let payload = json!({
                            "identity": report.identity.to_string(),
                            "params": params,
                            "holds": report.holds,
                            "lhs": render::ratchar_json(&report.lhs),
                            "rhs": render::ratchar_json(&report.rhs),
                        });
                        writeln!(out, "{payload}")?;
                    }
                    _ => {
                        let params: Vec<String> = report
                            .params
                            .iter()
                            .map(|&(k, v)| format!("{k}={v}"))
                            .collect();
                        writeln!(
                            out,
                            "{} {}: {}",
                            report.identity,
                            params.join(" "),
                            if report.holds { "holds" } else { "fails" }
                        )?;
                    }
                }
                Ok(if report.holds {
                    EXIT_OK
                } else {
                    EXIT_NOT_PROVED
                })
            }
            OracleCmd::Crosscheck { expr } => {
                let e = parse_element(expr, &quiver)?;
                let direct = oracle::cross_check(&e)?;
                let red = normal_form(&e, &opts)?;
                let reduced = oracle::cross_check(&red.result)?;
                let holds = direct == reduced;
                match format {
                    Format::Json => {
                        let payload = json!({
                            "holds": holds,
                            "direct": render::ratchar_json(&direct),
                            "reduced": render::ratchar_json(&reduced),
                        });
                        writeln!(out, "{payload}")?;
                    }
                    _ => {
                        if holds {
                            writeln!(out, "agree: {direct}")?;
                        } else {
                            writeln!(out, "disagree: direct {direct} vs reduced {reduced}")?;
                        }
                    }
                }
                Ok(if holds { EXIT_OK } else { EXIT_NOT_PROVED })
            }
        },
    }
}

/// Parses and runs a command line (binary name excluded), writing all
/// output to `out`. Returns the process exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("hallk".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders --help and version requests through the same path
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(UsageError(message)) => {
            let _ = writeln!(out, "error: {message}");
            EXIT_USAGE
        }
    }
}
