//! `mckay`: catalog listing, quivers, Kostant vectors, Poincare series and
//! catalog-wide verification.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mckay::exactnum::RationalSeries;
use mckay::groups::{GroupPair, PairSpec};
use mckay::kostant::KostantSystem;
use mckay::quiver::{McKayQuiver, Mode};
use mckay::verify::{catalog, modes, verify, Level};
use mckay::Error;

#[derive(Parser)]
#[command(
    name = "mckay",
    version,
    about = "McKay-Slodowy quivers and Kostant generating functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Irreducible,
    Restricted,
    Induced,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Irreducible => Mode::Irreducible,
            ModeArg::Restricted => Mode::Restricted,
            ModeArg::Induced => Mode::Induced,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// List the cataloged groups and pairs with their affine types.
    List {
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Build the quiver of a group or pair.
    Quiver {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Kostant vectors x_0, ..., x_K.
    Kostant {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Depth K; defaults to 3h.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Poincare series of one node.
    Poincare {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, default_value_t = 0)]
        node: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Check every identity on one input or on the whole catalog.
    Verify {
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum, default_value = "fast")]
        level: LevelArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

/// Failure of a subcommand, mapped to the exit code.
enum Failure {
    Lib(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

fn parse_input(s: &str) -> mckay::Result<PairSpec> {
    s.trim().parse()
}

fn default_mode(spec: &PairSpec) -> Mode {
    if spec.is_equal() {
        Mode::Irreducible
    } else {
        Mode::Restricted
    }
}

fn resolve_mode(spec: &PairSpec, mode: Option<ModeArg>) -> mckay::Result<Mode> {
    let mode = mode.map_or_else(|| default_mode(spec), Mode::from);
    if !modes(spec).contains(&mode) {
        return Err(Error::BadInput(format!(
            "mode {mode} does not apply to {spec}"
        )));
    }
    Ok(mode)
}

fn system(input: &str, mode: Option<ModeArg>) -> mckay::Result<KostantSystem> {
    let spec = parse_input(input)?;
    let mode = resolve_mode(&spec, mode)?;
    let pair = Arc::new(GroupPair::build(spec)?);
    KostantSystem::build(pair, mode)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialisable") + "\n"
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_list(format: Format) -> Outcome {
    let mut rows = Vec::new();
    for spec in catalog(Level::Fast) {
        let pair = GroupPair::build(spec)?;
        let types: Vec<String> = modes(&spec)
            .into_iter()
            .map(|m| McKayQuiver::build(&pair, m).map(|q| q.affine_type.to_string()))
            .collect::<mckay::Result<_>>()?;
        rows.push((spec, types));
    }
    Ok(match format {
        Format::Plain => rows
            .iter()
            .map(|(spec, t)| match t.as_slice() {
                [t] => format!("{spec} : A-D-E type {t}\n"),
                [r, i] => format!("{spec} : restricted={r}, induced={i}\n"),
                _ => unreachable!(),
            })
            .collect(),
        Format::Csv => {
            let mut out = String::from("input,restricted,induced\n");
            for (spec, t) in &rows {
                let (r, i) = match t.as_slice() {
                    [t] => (t, t),
                    [r, i] => (r, i),
                    _ => unreachable!(),
                };
                out.push_str(&format!("{spec},{r},{i}\n"));
            }
            out
        }
        Format::Json => pretty(&Value::Array(
            rows.iter()
                .map(|(spec, t)| match t.as_slice() {
                    [t] => json!({"input": spec.name(), "type": t}),
                    [r, i] => json!({"input": spec.name(), "restricted": r, "induced": i}),
                    _ => unreachable!(),
                })
                .collect(),
        )),
    })
}

fn cmd_quiver(input: &str, mode: Option<ModeArg>, format: Format) -> Outcome {
    let sys = system(input, mode)?;
    let q = &sys.quiver;
    let coxeter = sys.coxeter.as_ref().ok();
    Ok(match format {
        Format::Plain => {
            let mut out = format!(
                "{} {} quiver: type {}\nlabels: [{}]\ndimensions: [{}]\n",
                sys.pair.spec,
                q.mode(),
                q.affine_type,
                join(&q.kac_labels),
                join(&q.nodes.dims()),
            );
            out.push_str(&format!(
                "adjacency: {}\ncartan: {}\n",
                q.adjacency, q.cartan
            ));
            out.push_str(&format!("canonical permutation: {:?}\n", q.type_perm));
            match coxeter {
                Some(cd) => out.push_str(&format!(
                    "coxeter number: {}\nbipartition: {:?} {:?}\n",
                    cd.h, cd.parts.0, cd.parts.1
                )),
                None => out.push_str("bipartition: none (odd cycle)\n"),
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for row in q.cartan.to_i64_rows() {
                out.push_str(&join(&row));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut v = q.to_json();
            v["pair"] = json!(sys.pair.spec.name());
            v["coxeter"] = match coxeter {
                Some(cd) => cd.to_json(sys.exponents().ok()),
                None => Value::Null,
            };
            pretty(&v)
        }
    })
}

fn cmd_kostant(input: &str, mode: Option<ModeArg>, k: Option<usize>, format: Format) -> Outcome {
    let sys = system(input, mode)?;
    let depth = k.unwrap_or_else(|| sys.default_depth());
    let perm = &sys.quiver.type_perm;
    let canonical = |x: &[i64]| {
        let mut c = vec![0; x.len()];
        for (i, &v) in x.iter().enumerate() {
            c[perm[i]] = v;
        }
        c
    };
    let xs: Vec<Vec<i64>> = sys
        .xk_recursive_all(depth)
        .iter()
        .map(|x| x.to_i64())
        .collect();
    Ok(match format {
        Format::Plain => xs
            .iter()
            .enumerate()
            .map(|(k, x)| format!("x_{k} = ({})\n", join(x)))
            .collect(),
        Format::Csv => xs
            .iter()
            .enumerate()
            .map(|(k, x)| format!("{k},{}\n", join(&canonical(x))))
            .collect(),
        Format::Json => {
            let mut v = sys.to_json(depth)?;
            v["canonical_permutation"] = json!(perm);
            v["xk_canonical"] = json!(xs.iter().map(|x| canonical(x)).collect::<Vec<_>>());
            pretty(&v)
        }
    })
}

fn factored_denominator(sys: &KostantSystem) -> Option<(usize, usize)> {
    if sys.supported() {
        sys.exponents().ok()
    } else {
        None
    }
}

fn cmd_poincare(input: &str, mode: Option<ModeArg>, node: usize, format: Format) -> Outcome {
    let sys = system(input, mode)?;
    let f: RationalSeries = sys.poincare_series(node)?;
    let num = f.num.to_i64();
    let den = f.den.to_i64();
    let factors = factored_denominator(&sys);
    Ok(match format {
        Format::Plain => {
            let den_text = match factors {
                Some((a, b)) => format!("(1-t^{a})(1-t^{b})"),
                None => format!("[{}]", join(&den)),
            };
            format!(
                "{} {} node {node}\nnum=[{}] (degree {})\nden={den_text}\n",
                sys.pair.spec,
                sys.mode(),
                join(&num),
                num.len().saturating_sub(1)
            )
        }
        Format::Csv => {
            let mut out = String::from("degree,num,den\n");
            for d in 0..num.len().max(den.len()) {
                out.push_str(&format!(
                    "{d},{},{}\n",
                    num.get(d).copied().unwrap_or(0),
                    den.get(d).copied().unwrap_or(0)
                ));
            }
            out
        }
        Format::Json => pretty(&json!({
            "pair": sys.pair.spec.name(),
            "mode": sys.mode().name(),
            "node": node,
            "num": num,
            "den": den,
            "exponents": factors.map(|(a, b)| json!({"a": a, "b": b})),
        })),
    })
}

fn cmd_verify(
    input: Option<&str>,
    mode: Option<ModeArg>,
    level: LevelArg,
    format: Format,
) -> Outcome {
    let level = match level {
        LevelArg::Fast => Level::Fast,
        LevelArg::Full => Level::Full,
    };
    let inputs = match input {
        Some(s) => {
            let spec = parse_input(s)?;
            if let Some(m) = mode {
                resolve_mode(&spec, Some(m))?;
            }
            vec![spec]
        }
        None => Vec::new(),
    };
    let report = verify(&inputs, level, mode.map(Mode::from));
    let text = match format {
        Format::Plain => report.to_plain(),
        Format::Csv => report.to_csv(),
        Format::Json => pretty(&report.to_json()),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::List { format } => cmd_list(*format),
        Command::Quiver {
            input,
            mode,
            format,
        } => cmd_quiver(input, *mode, *format),
        Command::Kostant {
            input,
            mode,
            k,
            format,
        } => cmd_kostant(input, *mode, *k, *format),
        Command::Poincare {
            input,
            mode,
            node,
            format,
        } => cmd_poincare(input, *mode, *node, *format),
        Command::Verify {
            input,
            mode,
            level,
            format,
        } => cmd_verify(input.as_deref(), *mode, *level, *format),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(text)) => {
            print!("{text}");
            eprintln!("error: verification failed");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BadInput(_) => 2,
                Error::IdentityViolation { .. } => 3,
                _ => 4,
            })
        }
    }
}
