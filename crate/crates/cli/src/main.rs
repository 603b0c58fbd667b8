use clap::{Args, Parser, Subcommand};
use dblcheck_core::cli::{
    emit_report, exit_code, run_suite, CheckName, InstanceSel, OutFormat, SuiteConfig,
};
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "dblcheck",
    about = "Axiom checker and coherence-lifting engine for monoidal double categories",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run axiom suites on a built-in or file-backed instance.
    Check(CheckArgs),
    /// Build the lifted monoidal bicategory data and verify it, together
    /// with any pasting fixtures.
    Lift(LiftArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Built-in instance: span, mat, or square.
    #[arg(long, conflicts_with = "file")]
    instance: Option<String>,
    /// Enumeration bound for rule-backed instances.
    #[arg(long, default_value_t = 2)]
    size: usize,
    /// Coherence level: monoidal, braided, or symmetric.
    #[arg(long, default_value = "symmetric")]
    level: String,
    /// A presentation file for a table-backed instance.
    #[arg(long)]
    file: Option<String>,
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    out: String,
    /// Replay a single instantiation by its witness key.
    #[arg(long)]
    replay: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Comma-separated checks: double,monoidal,companions,theta,lift,alg,fixtures.
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,
}

#[derive(Args)]
struct LiftArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Pasting fixture files evaluated against the lifted data.
    #[arg(long, value_delimiter = ',')]
    fixtures: Vec<String>,
}

fn build_config(
    common: &CommonArgs,
    checks: Vec<CheckName>,
    fixtures: Vec<String>,
) -> Result<SuiteConfig, String> {
    let instance = match (&common.instance, &common.file) {
        (Some(name), None) => match name.as_str() {
            "span" => InstanceSel::Span { size: common.size },
            "mat" => InstanceSel::Mat { size: common.size },
            "square" => InstanceSel::Square,
            other => return Err(format!("unknown instance {other}")),
        },
        (None, Some(path)) => InstanceSel::File { path: path.clone() },
        _ => return Err("exactly one of --instance or --file is required".into()),
    };
    let format = match common.out.as_str() {
        "text" => OutFormat::Text,
        "json" => OutFormat::Json,
        other => return Err(format!("unknown output format {other}")),
    };
    Ok(SuiteConfig {
        instance,
        level: common.level.clone(),
        checks,
        fixtures,
        format,
        filter: common.replay.clone(),
    })
}

fn main() {
    let cli = Cli::parse();
    let cfg = match &cli.command {
        Command::Check(args) => {
            let names: Vec<String> = if args.checks.is_empty() {
                vec!["double".into(), "monoidal".into(), "companions".into()]
            } else {
                args.checks.clone()
            };
            let mut checks = Vec::new();
            for n in &names {
                match n.parse::<CheckName>() {
                    Ok(c) => checks.push(c),
                    Err(e) => {
                        eprintln!("error: {e}");
                        std::process::exit(2);
                    }
                }
            }
            build_config(&args.common, checks, vec![])
        }
        Command::Lift(args) => {
            let mut checks = vec![CheckName::Lift];
            if !args.fixtures.is_empty() {
                checks.push(CheckName::Fixtures);
            }
            build_config(&args.common, checks, args.fixtures.clone())
        }
    };
    let cfg = match cfg {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    };
    let start = Instant::now();
    let outcome = run_suite(&cfg);
    let code = exit_code(&outcome);
    match &outcome {
        Ok(report) => {
            print!("{}", emit_report(report, &cfg, start.elapsed().as_millis()));
        }
        Err(e) => eprintln!("error: {e}"),
    }
    std::process::exit(code);
}
