//! Command dispatch for the `graphzeta` binary. Everything is returned as
//! text plus an exit status so the commands can be driven from tests.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use graph_zeta::algebra::{Poly, Scalar, TruncatedSeries};
use graph_zeta::classical::{classical_closed_form, weighted_matrix, ClassicalVariant};
use graph_zeta::io::{coefficient_strings, parse_rational, parse_spec_with, AnyScheme, ParsedSpec, SchemeOverride};
use graph_zeta::lyndon::lyndon_words;
use graph_zeta::paths::{
    euler_expression_truncated, exp_expression_truncated, n_m, PathOptions, DEFAULT_MAX_CANDIDATES,
    DEFAULT_ORDER,
};
use graph_zeta::weights::{check_adjacency_condition, edge_matrix, AdjacencyCondition, Preset, WeightScheme};
use graph_zeta::zeta::{hashimoto_polynomial, ihara_data, ihara_polynomial, verify_main_theorem};
use graph_zeta::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_REJECTED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "graphzeta", version, about = "Exact weighted graph zeta functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// det(I - tM) for the edge matrix M
    Hashimoto(SpecArgs),
    /// f(t) det(I - tA(t) + t^2 D(t))
    Ihara(SpecArgs),
    /// Both polynomials and whether they agree
    Verify(SpecArgs),
    /// Exponential, Euler and inverse-determinant series to order T
    Series(SpecArgs),
    /// N_1, ..., N_T
    Nm(SpecArgs),
    /// Lyndon words up to length T
    Lyndon(LyndonArgs),
    /// Classical closed form for an undirected graph input
    Classical(SpecArgs),
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// Input document
    #[arg(long, short = 'i')]
    pub input: PathBuf,
    /// Weight preset, overriding the document
    #[arg(long)]
    pub scheme: Option<String>,
    /// Substitute this rational for q
    #[arg(long)]
    pub eval_q: Option<String>,
    /// Truncation order
    #[arg(short = 'T', long = "order", default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Bound on |A|^m for path enumeration
    #[arg(long, default_value_t = DEFAULT_MAX_CANDIDATES)]
    pub max_paths: u64,
    /// Use reduced closed paths
    #[arg(long)]
    pub reduced: bool,
}

#[derive(Args, Debug, Clone)]
pub struct LyndonArgs {
    /// Alphabet size
    #[arg(short = 'n', long = "alphabet")]
    pub alphabet: usize,
    /// Maximum word length
    #[arg(short = 'T', long = "order", default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Coeffs,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self::with_status(EXIT_OK, stdout)
    }

    fn with_status(status: i32, stdout: String) -> Self {
        Outcome {
            status,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(status: i32, message: String) -> Self {
        Outcome {
            status,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::Rejected(_) | Error::NotSimple(_) => EXIT_REJECTED,
        _ => EXIT_USAGE,
    }
}

/// Parses arguments (the first item is the program name) and runs.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_cli(&cli),
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if status == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Lyndon(args) => Ok(lyndon(args)),
        Command::Hashimoto(a)
        | Command::Ihara(a)
        | Command::Verify(a)
        | Command::Series(a)
        | Command::Nm(a)
        | Command::Classical(a) => load(a).and_then(|spec| run_command(&cli.command, a, &spec)),
    };
    result.unwrap_or_else(|e| Outcome::error(exit_code(&e), e.to_string()))
}

/// Reads and resolves the input document named by `args`.
pub fn load(args: &SpecArgs) -> Result<ParsedSpec, Error> {
    let text = fs::read_to_string(&args.input)
        .map_err(|e| Error::Parse(format!("{}: {e}", args.input.display())))?;
    let overrides = SchemeOverride {
        preset: args.scheme.as_deref().map(str::parse).transpose()?,
        eval_q: args.eval_q.as_deref().map(parse_rational).transpose()?,
    };
    parse_spec_with(&text, &overrides)
}

pub fn run_command(command: &Command, args: &SpecArgs, spec: &ParsedSpec) -> Result<Outcome, Error> {
    match &spec.scheme {
        AnyScheme::Rational(s) => dispatch(command, args, spec, s),
        AnyScheme::Symbolic(s) => dispatch(command, args, spec, s),
    }
}

fn dispatch<K: Scalar>(
    command: &Command,
    args: &SpecArgs,
    spec: &ParsedSpec,
    scheme: &WeightScheme<K>,
) -> Result<Outcome, Error> {
    match command {
        Command::Hashimoto(_) => hashimoto(args, spec, scheme),
        Command::Ihara(_) => ihara(args, spec, scheme),
        Command::Verify(_) => verify(args, spec, scheme),
        Command::Series(_) => series(args, spec, scheme),
        Command::Nm(_) => nm(args, spec, scheme),
        Command::Classical(_) => classical(args, spec, scheme),
        Command::Lyndon(a) => Ok(lyndon(a)),
    }
}

fn scheme_label(spec: &ParsedSpec) -> String {
    let mut label = spec.scheme.preset().name().to_string();
    if let Some(q) = &spec.q {
        label.push_str(&format!(" q={}", Scalar::render(q)));
    }
    label
}

fn header(spec: &ParsedSpec) -> String {
    format!(
        "scheme: {} over {}\n",
        scheme_label(spec),
        spec.scheme.field_name()
    )
}

fn coeff_line<K: Scalar>(coeffs: &[K]) -> String {
    coeffs.iter().map(Scalar::render).collect::<Vec<_>>().join(",")
}

fn json_text(value: Value) -> String {
    let mut s = serde_json::to_string_pretty(&value).expect("json serializes");
    s.push('\n');
    s
}

/// The reduced-path Hashimoto form exists only under the reduced adjacency
/// condition.
fn require_reduced_form<K: Scalar>(spec: &ParsedSpec, scheme: &WeightScheme<K>) -> Result<(), Error> {
    let m = edge_matrix(&spec.digraph, scheme)?;
    if check_adjacency_condition(&spec.digraph, &m)? != AdjacencyCondition::ReducedAdjacency {
        return Err(Error::Rejected(format!(
            "{} weights do not vanish on backtracks, so reduced closed paths have no Hashimoto expression",
            scheme.preset()
        )));
    }
    Ok(())
}

fn hashimoto<K: Scalar>(args: &SpecArgs, spec: &ParsedSpec, scheme: &WeightScheme<K>) -> Result<Outcome, Error> {
    if args.reduced {
        require_reduced_form(spec, scheme)?;
    }
    let p = hashimoto_polynomial(&spec.digraph, scheme)?;
    Ok(Outcome::ok(match args.format {
        Format::Human => format!("{}hashimoto: {}\n", header(spec), p.render("t")),
        Format::Coeffs => format!("{}\n", coefficient_strings(&p).join(",")),
        Format::Json => json_text(json!({
            "scheme": scheme_label(spec),
            "T": args.order,
            "hashimoto": coefficient_strings(&p),
        })),
    }))
}

fn ihara<K: Scalar>(args: &SpecArgs, spec: &ParsedSpec, scheme: &WeightScheme<K>) -> Result<Outcome, Error> {
    if args.reduced {
        require_reduced_form(spec, scheme)?;
    }
    let data = ihara_data(&spec.digraph, scheme)?;
    let p = ihara_polynomial(&spec.digraph, scheme)?;
    Ok(Outcome::ok(match args.format {
        Format::Human => {
            let mut out = header(spec);
            for (&(u, v), f) in &data.f_pairs {
                out.push_str(&format!(
                    "f({},{}): {}\n",
                    spec.vertex_names[u],
                    spec.vertex_names[v],
                    f.render("t")
                ));
            }
            out.push_str(&format!("f_delta: {}\n", data.f_delta.render("t")));
            out.push_str(&format!("ihara: {}\n", p.render("t")));
            out
        }
        Format::Coeffs => format!("{}\n", coefficient_strings(&p).join(",")),
        Format::Json => json_text(json!({
            "scheme": scheme_label(spec),
            "T": args.order,
            "ihara": coefficient_strings(&p),
            "f_delta": coefficient_strings(&data.f_delta),
        })),
    }))
}

fn verify<K: Scalar>(args: &SpecArgs, spec: &ParsedSpec, scheme: &WeightScheme<K>) -> Result<Outcome, Error> {
    if args.reduced {
        require_reduced_form(spec, scheme)?;
    }
    let report = verify_main_theorem(&spec.digraph, scheme)?;
    let status = if report.identity_holds { EXIT_OK } else { EXIT_MISMATCH };
    let verdict = if report.identity_holds { "MATCH" } else { "MISMATCH" };
    let text = match args.format {
        Format::Human => format!(
            "{}hashimoto: {}\nihara: {}\n{verdict}\n",
            header(spec),
            report.hashimoto.render("t"),
            report.ihara.render("t")
        ),
        Format::Coeffs => format!(
            "hashimoto: {}\nihara: {}\n{verdict}\n",
            coefficient_strings(&report.hashimoto).join(","),
            coefficient_strings(&report.ihara).join(",")
        ),
        Format::Json => json_text(json!({
            "scheme": scheme_label(spec),
            "T": args.order,
            "hashimoto": coefficient_strings(&report.hashimoto),
            "ihara": coefficient_strings(&report.ihara),
            "match": report.identity_holds,
        })),
    };
    Ok(Outcome::with_status(status, text))
}

fn series<K: Scalar>(args: &SpecArgs, spec: &ParsedSpec, scheme: &WeightScheme<K>) -> Result<Outcome, Error> {
    let opts = PathOptions {
        reduced: args.reduced,
        max_candidates: args.max_paths,
    };
    if args.reduced {
        require_reduced_form(spec, scheme)?;
    }
    let t = args.order;
    let exp = exp_expression_truncated(&spec.digraph, scheme, t, &opts)?;
    let euler = euler_expression_truncated(&spec.digraph, scheme, t, &opts)?;
    let det = hashimoto_polynomial(&spec.digraph, scheme)?;
    let inverse = TruncatedSeries::from_poly(&det, t).inverse()?;
    let agree = exp == euler && euler == inverse;
    let rows: [(&str, &TruncatedSeries<K>); 3] =
        [("exp", &exp), ("euler", &euler), ("hashimoto", &inverse)];
    let text = match args.format {
        Format::Human | Format::Coeffs => {
            let mut out = if args.format == Format::Human {
                format!("{}T: {t}\n", header(spec))
            } else {
                String::new()
            };
            for (name, s) in rows {
                out.push_str(&format!("{name}: {}\n", coeff_line(s.coeffs())));
            }
            out.push_str(if agree { "AGREE\n" } else { "DISAGREE\n" });
            out
        }
        Format::Json => {
            let strings = |s: &TruncatedSeries<K>| s.coeffs().iter().map(Scalar::render).collect::<Vec<_>>();
            json_text(json!({
                "scheme": scheme_label(spec),
                "T": t,
                "exp": strings(&exp),
                "euler": strings(&euler),
                "hashimoto": strings(&inverse),
                "match": agree,
            }))
        }
    };
    Ok(Outcome::with_status(if agree { EXIT_OK } else { EXIT_MISMATCH }, text))
}

fn nm<K: Scalar>(args: &SpecArgs, spec: &ParsedSpec, scheme: &WeightScheme<K>) -> Result<Outcome, Error> {
    let opts = PathOptions {
        reduced: args.reduced,
        max_candidates: args.max_paths,
    };
    let values = (1..=args.order)
        .map(|m| n_m(&spec.digraph, scheme, m, &opts))
        .collect::<Result<Vec<K>, Error>>()?;
    Ok(Outcome::ok(match args.format {
        Format::Human => {
            let mut out = header(spec);
            for (m, v) in values.iter().enumerate() {
                out.push_str(&format!("N_{}: {}\n", m + 1, v.render()));
            }
            out
        }
        Format::Coeffs => format!("{}\n", coeff_line(&values)),
        Format::Json => json_text(json!({
            "scheme": scheme_label(spec),
            "T": args.order,
            "N": values.iter().map(Scalar::render).collect::<Vec<_>>(),
        })),
    }))
}

fn classical<K: Scalar>(args: &SpecArgs, spec: &ParsedSpec, scheme: &WeightScheme<K>) -> Result<Outcome, Error> {
    let graph = spec.graph.as_ref().ok_or_else(|| {
        Error::Parse("classical needs an undirected graph given with \"edges\"".into())
    })?;
    let variant = match scheme.preset() {
        Preset::Ihara => ClassicalVariant::BassIhara,
        Preset::BowenLanford => ClassicalVariant::BowenLanford(weighted_matrix(graph, scheme)?),
        Preset::MizunoSato => ClassicalVariant::MizunoSato(weighted_matrix(graph, scheme)?),
        Preset::Sato => ClassicalVariant::Sato(weighted_matrix(graph, scheme)?),
        Preset::Bartholdi => ClassicalVariant::Bartholdi(match (&spec.q, scheme.upsilons().first()) {
            (Some(r), _) => K::from_rational(r),
            (None, Some(u)) => K::one().sub(u),
            (None, None) => K::zero(),
        }),
        Preset::General => {
            return Err(Error::Rejected(
                "GENERAL weights have no classical closed form".into(),
            ))
        }
    };
    let p: Poly<K> = classical_closed_form(graph, &variant)?;
    Ok(Outcome::ok(match args.format {
        Format::Human => format!("{}classical: {}\n", header(spec), p.render("t")),
        Format::Coeffs => format!("{}\n", coefficient_strings(&p).join(",")),
        Format::Json => json_text(json!({
            "scheme": scheme_label(spec),
            "T": args.order,
            "classical": coefficient_strings(&p),
        })),
    }))
}

fn lyndon(args: &LyndonArgs) -> Outcome {
    let words: Vec<String> = lyndon_words(args.alphabet, args.order)
        .iter()
        .map(ToString::to_string)
        .collect();
    Outcome::ok(match args.format {
        Format::Human | Format::Coeffs => format!("{}\n", words.join("; ")),
        Format::Json => json_text(json!({ "T": args.order, "words": words })),
    })
}
