use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tabtype::bridge::{embed_in_staircase, partial_fill_witness};
use tabtype::exchange::{column_exchange, reverse_column_exchange, reverse_line_exchange};
use tabtype::io::{count_to_json, from_json};
use tabtype::render::{render_diagram, render_tableau, render_type};
use tabtype::suites::{run_suite, DEFAULT_SEED, SUITES};
use tabtype::tableau::{enumerate_tableaux_limited, type_statistics};
use tabtype::{
    build_s_lambda, classical_schur, count_reduced_words, count_tableaux, enumeration_budget, full_exchange,
    line_exchange, nice_partial, partial_fill_count, sigma_lambda, sst_polynomial, type_of_permutation, verify_bridge, Cell,
    Diagram, ExchangeResult, Partition, Permutation, Tableau, TypeFilling,
};

#[derive(Parser)]
#[command(name = "tabtype", version, about = "Tableaux of a given type, reduced words and exchange algorithms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of tableaux of a type.
    Count(TypeInput),
    /// List the tableaux of a type.
    Enum {
        #[command(flatten)]
        input: TypeInput,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        render: bool,
    },
    /// Type of a tableau.
    TypeOf {
        /// Tableau JSON, inline or a file path.
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        render: bool,
    },
    /// Staircase type of a permutation, optionally after the full exchange.
    PermType {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        exchange: bool,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        render: bool,
        #[arg(long)]
        trace: bool,
    },
    /// Inversion statistics, shapes and reduced-word count of a permutation.
    Vexillary {
        #[arg(long)]
        perm: String,
    },
    /// Run an exchange algorithm on a type.
    Exchange {
        #[command(flatten)]
        input: TypeInput,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
        #[arg(long)]
        render: bool,
        #[arg(long)]
        trace: bool,
    },
    /// The falling construction S(λ) and its permutation.
    SLambda {
        #[arg(long)]
        shape: Option<String>,
        /// Output of an earlier `s-lambda` run to check again.
        #[arg(long = "in")]
        input: Option<String>,
        #[arg(long)]
        render: bool,
    },
    /// Balanced tableaux of a shape.
    Balanced(ShapeListing),
    /// Standard Young tableaux of a shape.
    Standard(ShapeListing),
    /// Semistandard generating polynomial of a type, or a Schur polynomial.
    Schur {
        #[command(flatten)]
        input: TypeInput,
        /// Classical Schur polynomial of this shape instead.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long)]
        render: bool,
    },
    /// Tableaux of the exchanged type of a vexillary permutation with the
    /// first entries in prescribed boxes.
    Partial {
        #[arg(long)]
        perm: String,
        /// Boxes holding 1, 2, ...: "(r,c);(r,c)".
        #[arg(long, default_value = "")]
        fixed: String,
    },
    /// Count, mean and variance of |Tab(T)| over all types of a shape.
    Stats {
        #[arg(long)]
        shape: Option<String>,
        /// Diagram JSON, inline or a file path.
        #[arg(long = "in")]
        input: Option<String>,
    },
    /// Run a named check suite.
    Verify {
        /// Suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Args)]
struct TypeInput {
    /// Type JSON, inline or a file path ("-" for stdin).
    #[arg(long = "in")]
    input: Option<String>,
    /// Use the staircase type of this permutation.
    #[arg(long)]
    perm: Option<String>,
    /// Apply the full exchange first (with --perm).
    #[arg(long)]
    exchange: bool,
}

#[derive(Args)]
struct ShapeListing {
    #[arg(long)]
    shape: String,
    #[arg(long)]
    count: bool,
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long)]
    render: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Line,
    Column,
    Full,
    ReverseLine,
    ReverseColumn,
}

enum Failure {
    Invalid(String),
    Truncated,
    Suite,
}

impl From<tabtype::Error> for Failure {
    fn from(e: tabtype::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(text) => {
            emit(&text);
            0
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Truncated) => 3,
        Err(Failure::Suite) => 1,
    };
    ExitCode::from(code)
}

fn emit(text: &str) {
    let mut stdout = io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush());
}

fn read_input(arg: &str) -> Result<String, Failure> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::Invalid(format!("{arg}: {e}")))
}

fn parse_perm(s: &str) -> Result<Permutation, Failure> {
    Ok(Permutation::parse(s)?)
}

fn parse_shape(s: &str) -> Result<Partition, Failure> {
    let parts = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<usize>().map_err(|_| Failure::Invalid(format!("bad part {p:?} in shape"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

fn parse_cells(s: &str) -> Result<Vec<Cell>, Failure> {
    s.split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let inner = p.trim_start_matches('(').trim_end_matches(')');
            let nums: Vec<usize> = inner
                .split(',')
                .map(|x| x.trim().parse().map_err(|_| Failure::Invalid(format!("bad box {p:?}"))))
                .collect::<Result<_, _>>()?;
            match nums[..] {
                [r, c] if r > 0 && c > 0 => Ok(Cell::new(r, c)),
                _ => Err(Failure::Invalid(format!("bad box {p:?}: expected (row,col), 1-based"))),
            }
        })
        .collect()
}

fn load_type(input: &TypeInput) -> Result<TypeFilling, Failure> {
    match (&input.input, &input.perm) {
        (Some(text), None) => {
            let ty: TypeFilling = from_json(&read_input(text)?)?;
            Ok(if input.exchange { full_exchange(&ty).result } else { ty })
        }
        (None, Some(p)) => {
            let ty = type_of_permutation(&parse_perm(p)?);
            Ok(if input.exchange { full_exchange(&ty).result } else { ty })
        }
        _ => Err(Failure::Invalid("give exactly one of --in and --perm".into())),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn trace(steps: &ExchangeResult) {
    for s in &steps.steps {
        eprintln!("{s}");
    }
}

fn list_tableaux(ty: &TypeFilling, limit: Option<usize>, render: bool) -> Outcome {
    let (tabs, truncated) = enumerate_tableaux_limited(ty, limit.unwrap_or(usize::MAX))?;
    let text = if render {
        tabs.iter().map(render_tableau).collect::<Vec<_>>().join("\n")
    } else {
        to_json(&tabs)
    };
    if truncated {
        emit(&text);
        return Err(Failure::Truncated);
    }
    Ok(text)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Count(input) => {
            let ty = load_type(&input)?;
            Ok(to_json(&count_to_json(&count_tableaux(&ty)?)))
        }
        Command::Enum { input, limit, render } => list_tableaux(&load_type(&input)?, limit, render),
        Command::TypeOf { input, render } => {
            let t: Tableau = from_json(&read_input(&input)?)?;
            let ty = t.type_of();
            Ok(if render { render_type(&ty) } else { to_json(&ty) })
        }
        Command::PermType { perm, exchange, count, render, trace: show } => {
            let sigma = parse_perm(&perm)?;
            let mut ty = type_of_permutation(&sigma);
            if exchange {
                let ex = full_exchange(&ty);
                if show {
                    trace(&ex);
                }
                ty = ex.result;
            }
            if render {
                return Ok(render_type(&ty));
            }
            if count {
                let shape: Vec<[usize; 2]> = ty.entries().keys().map(|c| [c.row, c.col]).collect();
                return Ok(to_json(&json!({ "shape": shape, "count": count_to_json(&count_tableaux(&ty)?) })));
            }
            Ok(to_json(&ty))
        }
        Command::Vexillary { perm } => {
            let sigma = parse_perm(&perm)?;
            let v = sigma.vexillary_data();
            Ok(to_json(&json!({
                "perm": sigma,
                "d": v.d,
                "g": v.g,
                "mu": v.mu,
                "lambda": v.lambda,
                "vexillary": v.is_vexillary,
                "reduced_words": count_to_json(&count_reduced_words(&sigma)),
                "f_lambda": count_to_json(&v.lambda.hook_length_formula()),
                "bar": sigma.bar_normalize(),
            })))
        }
        Command::Exchange { input, mode, render, trace: show } => {
            let ty = load_type(&input)?;
            let ex = match mode {
                Mode::Line => line_exchange(&ty),
                Mode::Column => column_exchange(&ty),
                Mode::Full => full_exchange(&ty),
                Mode::ReverseLine => reverse_line_exchange(&ty),
                Mode::ReverseColumn => reverse_column_exchange(&ty),
            };
            if show {
                trace(&ex);
            }
            Ok(if render { render_type(&ex.result) } else { to_json(&ex.result) })
        }
        Command::SLambda { shape, input, render } => s_lambda(shape, input, render),
        Command::Balanced(opts) => shape_listing(opts, TypeFilling::balanced),
        Command::Standard(opts) => shape_listing(opts, TypeFilling::standard),
        Command::Schur { input, shape, vars, render } => {
            let budget = enumeration_budget()?;
            let poly = match shape {
                Some(s) if input.input.is_none() && input.perm.is_none() => {
                    classical_schur(&parse_shape(&s)?, vars, budget)?
                }
                Some(_) => return Err(Failure::Invalid("--shape excludes --in and --perm".into())),
                None => sst_polynomial(&load_type(&input)?, vars, budget)?,
            };
            Ok(if render { format!("{poly}\n") } else { to_json(&poly) })
        }
        Command::Partial { perm, fixed } => {
            let sigma = parse_perm(&perm)?;
            let fill = parse_cells(&fixed)?;
            let count = partial_fill_count(&sigma, &fill)?;
            let witness = partial_fill_witness(&sigma, &fill)?;
            let red = witness.as_ref().map(count_reduced_words).unwrap_or_default();
            Ok(to_json(&json!({
                "count": count_to_json(&count),
                "witness": witness,
                "witness_reduced_words": count_to_json(&red),
                "nice": nice_partial(&sigma, &fill)?,
            })))
        }
        Command::Stats { shape, input } => {
            let diagram = match (shape, input) {
                (Some(s), None) => Diagram::ferrers(&parse_shape(&s)?),
                (None, Some(text)) => from_json(&read_input(&text)?)?,
                _ => return Err(Failure::Invalid("give exactly one of --shape and --in".into())),
            };
            let stats = type_statistics(&diagram, enumeration_budget()?)?;
            Ok(to_json(&json!({
                "types": count_to_json(&stats.count_of_types),
                "total": count_to_json(&stats.total),
                "mean": stats.mean.to_string(),
                "variance": stats.variance.to_string(),
            })))
        }
        Command::Verify { suite, max_n, seed } => verify(&suite, max_n, seed),
    }
}

fn shape_listing(opts: ShapeListing, make: fn(&Diagram) -> TypeFilling) -> Outcome {
    let ty = make(&Diagram::ferrers(&parse_shape(&opts.shape)?));
    if opts.count {
        return Ok(to_json(&count_to_json(&count_tableaux(&ty)?)));
    }
    list_tableaux(&ty, opts.limit, opts.render)
}

fn s_lambda(shape: Option<String>, input: Option<String>, render: bool) -> Outcome {
    let lambda = match (shape, input) {
        (Some(s), None) => parse_shape(&s)?,
        (None, Some(text)) => {
            let v: Value = from_json(&read_input(&text)?)?;
            let lambda: Partition = serde_json::from_value(v["shape"].clone())
                .map_err(|e| Failure::Invalid(format!("shape: {e}")))?;
            let diagram: Diagram = serde_json::from_value(v["diagram"].clone())
                .map_err(|e| Failure::Invalid(format!("diagram: {e}")))?;
            if build_s_lambda(&lambda)? != diagram {
                return Err(Failure::Invalid(format!("diagram is not S({lambda})")));
            }
            lambda
        }
        _ => return Err(Failure::Invalid("give exactly one of --shape and --in".into())),
    };
    let emb = embed_in_staircase(&lambda)?;
    let diagram = build_s_lambda(&lambda)?;
    let sigma = sigma_lambda(&lambda)?;
    if render {
        return Ok(format!("k = {}\n{}sigma = {sigma}\nbridge: {}\n", emb.k, render_diagram(&diagram), verify_bridge(&lambda)));
    }
    Ok(to_json(&json!({
        "shape": lambda,
        "k": emb.k,
        "diagram": diagram,
        "sigma": sigma,
        "bridge": verify_bridge(&lambda),
    })))
}

fn verify(suite: &str, max_n: Option<usize>, seed: u64) -> Outcome {
    let budget = enumeration_budget()?;
    let selected: Vec<(&str, usize)> = if suite == "all" {
        SUITES.to_vec()
    } else {
        match SUITES.iter().find(|(name, _)| *name == suite) {
            Some(&s) => vec![s],
            None => {
                let names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
                return Err(Failure::Invalid(format!("unknown suite {suite:?}; expected all or one of {}", names.join(", "))));
            }
        }
    };
    let mut text = String::new();
    let mut ok = true;
    for (name, default_n) in selected {
        let report = run_suite(name, max_n.unwrap_or(default_n), seed, budget)?;
        ok &= report.passed();
        for check in &report.checks {
            text.push_str(&format!("{name:<12} {check}\n"));
        }
    }
    if ok {
        Ok(text)
    } else {
        emit(&text);
        Err(Failure::Suite)
    }
}
