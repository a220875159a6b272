//! `mvca`: evolve elementary cellular automata under multi-valued logics
//! and reproduce their analytical structure from the command line.
//!
//! Exit codes: 2 for domain/usage errors, 3 for solver failures, 4 for
//! I/O problems.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mvca_core::algebra::{rational_from_str, rational_to_f64, Rational};
use mvca_core::analysis::{
    classify_exceptional, diagonal_fixed_points, limit_cubic, solve_diagonal_limits,
};
use mvca_core::error::Error as CoreError;
use mvca_core::evolution::{agreement_horizon, render, Configuration, SpaceTimeDiagram};
use mvca_core::logic::LogicSystem;
use mvca_core::rules::{lookup_table, LocalRule};

/// Maximum exact-backend depth; rational denominators grow geometrically
/// with every row, so deep exact runs are rejected up front.
const EXACT_STEP_CAP: usize = 64;

#[derive(Parser)]
#[command(
    name = "mvca",
    version,
    about = "Elementary cellular automata under multi-valued logics",
    propagate_version = true
)]
struct Cli {
    /// Worker threads for row stepping and sweeps (default: machine
    /// parallelism; MVCA_THREADS is honored when the flag is absent).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the eight-row lookup table of a rule under a logic.
    Table(TableArgs),
    /// Evolve a space-time diagram from a seed or a finite string.
    Evolve(EvolveArgs),
    /// Solve the left-diagonal limits recursively.
    Limits(LimitsArgs),
    /// Homogeneous fixed points of the diagonal map, with stability.
    FixedPoints(RuleLogicArgs),
    /// List the rules whose diagonal fixes every point of `[0,1]`.
    ClassifyExceptional(OutputArgs),
    /// Certify and refine the first-diagonal cubic of probabilistic 110.
    Pca110Cubic(SeedArgs),
    /// Threshold a fuzzy evolution against the boolean one and report
    /// the first disagreement row.
    Compare(CompareArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RuleLogicArgs {
    #[arg(long, value_parser = clap::value_parser!(u8))]
    rule: u8,
    /// `boolean | zadeh | lukasiewicz[:p] | goedel | product | probabilistic | cfms`
    #[arg(long)]
    logic: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    rule_logic: RuleLogicArgs,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct EvolveArgs {
    #[arg(long, value_parser = clap::value_parser!(u8))]
    rule: u8,
    #[arg(long)]
    logic: String,
    /// Single seed in (0,1] placed in a zero background.
    #[arg(long, conflicts_with = "string")]
    seed: Option<String>,
    /// Comma-separated finite initial string of values in `[0,1]`.
    #[arg(long)]
    string: Option<String>,
    #[arg(long)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = EvolveFormat::Csv)]
    format: EvolveFormat,
    #[arg(long, value_enum, default_value_t = Backend::Float)]
    backend: Backend,
    /// Truncate CSV cells toward zero at this many decimals.
    #[arg(long)]
    trunc: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum EvolveFormat {
    Csv,
    Json,
    Pgm,
    Pbm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Float,
    Exact,
}

#[derive(Args)]
struct LimitsArgs {
    #[arg(long, value_parser = clap::value_parser!(u8))]
    rule: u8,
    #[arg(long)]
    logic: String,
    #[arg(long)]
    seed: String,
    #[arg(long, value_name = "M")]
    m_max: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SeedArgs {
    /// Seed in (0,1); fractions and decimals are read exactly.
    #[arg(long)]
    seed: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long, value_parser = clap::value_parser!(u8))]
    rule: u8,
    #[arg(long)]
    logic: String,
    #[arg(long)]
    seed: String,
    #[arg(long)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = CompareFormat::Text)]
    format: CompareFormat,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum CompareFormat {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Domain(_) | CoreError::Unsupported(_) => 2,
            CoreError::Solver(_) => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 4,
            message: format!("i/o error: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mvca: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads(flag: Option<usize>) {
    let from_env = std::env::var("MVCA_THREADS")
        .ok()
        .and_then(|v| v.parse().ok());
    if let Some(n) = flag.or(from_env) {
        // a failure here means the global pool already exists; fine
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Table(args) => table(args),
        Command::Evolve(args) => evolve(args),
        Command::Limits(args) => limits(args),
        Command::FixedPoints(args) => fixed_points(args),
        Command::ClassifyExceptional(args) => exceptional(args),
        Command::Pca110Cubic(args) => cubic(args),
        Command::Compare(args) => compare(args),
    }
}

fn parse_logic(s: &str) -> Result<LogicSystem, Failure> {
    Ok(LogicSystem::from_str(s)?)
}

fn parse_unit_seed(s: &str) -> Result<Rational, Failure> {
    let r = rational_from_str(s)?;
    if r <= Rational::new(0.into(), 1.into()) || r > Rational::new(1.into(), 1.into()) {
        return Err(Failure {
            code: 2,
            message: format!("seed {s} outside (0,1]"),
        });
    }
    Ok(r)
}

fn emit_text(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
        }
    }
    Ok(())
}

fn emit_bytes(out: &OutputArgs, bytes: &[u8]) -> Result<(), Failure> {
    match &out.output {
        Some(path) => fs::write(path, bytes)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
        }
    }
    Ok(())
}

fn emit_json(out: &OutputArgs, value: &serde_json::Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    emit_text(out, &text)
}

fn table(args: TableArgs) -> Result<(), Failure> {
    let logic = parse_logic(&args.rule_logic.logic)?;
    let rule = LocalRule::from_number(args.rule_logic.rule);
    let table = lookup_table(&rule, logic);
    match args.format {
        TableFormat::Csv => {
            let mut text = String::new();
            for i in 0..8usize {
                let render = |v: f64| {
                    if v == v.trunc() {
                        format!("{}", v as i64)
                    } else {
                        format!("{v}")
                    }
                };
                text.push_str(&format!(
                    "{},{},{},{}\n",
                    (i >> 2) & 1,
                    (i >> 1) & 1,
                    i & 1,
                    render(table.outputs[i])
                ));
            }
            emit_text(&args.rule_logic.out, &text)
        }
        TableFormat::Json => {
            let value = json!({
                "schema": 1,
                "rule": rule.number(),
                "logic": logic.to_string(),
                "outputs": table.outputs,
            });
            emit_json(&args.rule_logic.out, &value)
        }
    }
}

fn parse_initial_exact(args: &EvolveArgs) -> Result<Configuration<Rational>, Failure> {
    match (&args.seed, &args.string) {
        (Some(seed), None) => Ok(Configuration::single_seed(parse_unit_seed(seed)?)?),
        (None, Some(string)) => {
            let cells = string
                .split(',')
                .map(|v| rational_from_str(v.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Configuration::from_cells(0, cells)?)
        }
        _ => Err(Failure {
            code: 2,
            message: "exactly one of --seed or --string is required".into(),
        }),
    }
}

fn evolve(args: EvolveArgs) -> Result<(), Failure> {
    let logic = parse_logic(&args.logic)?;
    let rule = LocalRule::from_number(args.rule);
    let initial = parse_initial_exact(&args)?;
    let seed_label = args.seed.clone();
    let string_label = args.string.clone();

    match args.backend {
        Backend::Float => {
            let cells: Vec<f64> = initial.cells().iter().map(rational_to_f64).collect();
            let float_initial = Configuration::from_cells(initial.leftmost(), cells)?;
            let diagram = SpaceTimeDiagram::evolve(float_initial, &rule, logic, args.steps)?;
            emit_diagram(
                &args,
                &diagram,
                seed_label.as_deref(),
                string_label.as_deref(),
            )
        }
        Backend::Exact => {
            if args.steps > EXACT_STEP_CAP {
                return Err(Failure {
                    code: 2,
                    message: format!(
                        "exact backend is capped at {EXACT_STEP_CAP} steps (denominators grow \
                         geometrically); requested {}. Use --backend float for deep runs",
                        args.steps
                    ),
                });
            }
            if args.steps > 16 {
                eprintln!(
                    "mvca: warning: exact denominators roughly triple in size every row; \
                     {} steps may take a very long time and a lot of memory",
                    args.steps
                );
            }
            let diagram = SpaceTimeDiagram::evolve(initial, &rule, logic, args.steps)?;
            emit_diagram(
                &args,
                &diagram,
                seed_label.as_deref(),
                string_label.as_deref(),
            )
        }
    }
}

fn emit_diagram<T: mvca_core::CellValue>(
    args: &EvolveArgs,
    diagram: &SpaceTimeDiagram<T>,
    seed: Option<&str>,
    initial: Option<&str>,
) -> Result<(), Failure> {
    match args.format {
        EvolveFormat::Csv => emit_text(&args.out, &render::to_csv(diagram, args.trunc)),
        EvolveFormat::Json => emit_json(&args.out, &render::to_json(diagram, seed, initial)),
        EvolveFormat::Pgm => emit_bytes(&args.out, &render::to_pgm(diagram)),
        EvolveFormat::Pbm => {
            let (pbm, had_undecided) = render::to_pbm(&diagram.threshold());
            if had_undecided {
                eprintln!(
                    "mvca: warning: diagram contains cells at exactly 1/2; PBM renders them black"
                );
            }
            emit_text(&args.out, &pbm)
        }
    }
}

fn limits(args: LimitsArgs) -> Result<(), Failure> {
    let logic = parse_logic(&args.logic)?;
    let rule = LocalRule::from_number(args.rule);
    let seed = rational_to_f64(&parse_unit_seed(&args.seed)?);
    let report = solve_diagonal_limits(&rule, logic, seed, args.m_max)?;
    if !report.empirical_stabilized {
        eprintln!(
            "mvca: warning: empirical diagonals had not stabilized to 1e-8 by the check row; \
             solved limits may not be attained by the dynamics"
        );
    }
    let mut value = serde_json::to_value(&report).expect("serializable");
    value["schema"] = json!(1);
    emit_json(&args.out, &value)
}

fn fixed_points(args: RuleLogicArgs) -> Result<(), Failure> {
    let logic = parse_logic(&args.logic)?;
    let rule = LocalRule::from_number(args.rule);
    let report = diagonal_fixed_points(&rule, logic)?;
    let mut value = serde_json::to_value(&report).expect("serializable");
    value["schema"] = json!(1);
    emit_json(&args.out, &value)
}

fn exceptional(args: OutputArgs) -> Result<(), Failure> {
    let rules = classify_exceptional();
    let value = json!({
        "schema": 1,
        "count": rules.len(),
        "rules": rules,
    });
    emit_json(&args, &value)
}

fn cubic(args: SeedArgs) -> Result<(), Failure> {
    let seed = rational_from_str(&args.seed)?;
    let certificate = limit_cubic(&seed)?;
    let mut value = serde_json::to_value(&certificate).expect("serializable");
    value["schema"] = json!(1);
    emit_json(&args.out, &value)
}

fn compare(args: CompareArgs) -> Result<(), Failure> {
    let logic = parse_logic(&args.logic)?;
    let rule = LocalRule::from_number(args.rule);
    let seed = rational_to_f64(&parse_unit_seed(&args.seed)?);
    let horizon = agreement_horizon(&rule, logic, seed, args.steps)?;

    let fuzzy =
        SpaceTimeDiagram::evolve(Configuration::single_seed(seed)?, &rule, logic, args.steps)?
            .threshold();
    let boolean = SpaceTimeDiagram::evolve(
        Configuration::single_seed(1.0f64)?,
        &rule,
        LogicSystem::Boolean,
        args.steps,
    )?
    .threshold();
    let fuzzy_rows = render::to_text(&fuzzy);
    let boolean_rows = render::to_text(&boolean);

    match args.format {
        CompareFormat::Text => {
            let mut text = match horizon {
                None => format!("agreement through row {}\n", args.steps),
                Some(t) => format!("first disagreement at row {t}\n"),
            };
            let width = fuzzy_rows.iter().map(String::len).max().unwrap_or(0);
            text.push_str(&format!(
                "{:>4}  {:<width$}  {}\n",
                "t",
                format!("{logic} a={seed}"),
                "boolean a=1",
            ));
            for t in 0..fuzzy_rows.len() {
                let marker = match horizon {
                    Some(h) if t == h => "  <- first disagreement",
                    _ => "",
                };
                text.push_str(&format!(
                    "{t:>4}  {:<width$}  {}{marker}\n",
                    fuzzy_rows[t], boolean_rows[t],
                ));
            }
            emit_text(&args.out, &text)
        }
        CompareFormat::Json => {
            let value = json!({
                "schema": 1,
                "rule": rule.number(),
                "logic": logic.to_string(),
                "seed": seed,
                "steps": args.steps,
                "first_disagreement": horizon,
                "agreement_through": match horizon {
                    None => json!(args.steps),
                    Some(0) => json!(null),
                    Some(t) => json!(t - 1),
                },
                "fuzzy": fuzzy_rows,
                "boolean": boolean_rows,
            });
            emit_json(&args.out, &value)
        }
    }
}
