use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use duplex_twist::render::Annotation;
use duplex_twist::verify::Suite;

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "duplex-twist",
    version,
    about = "Domino tilings of duplex regions and their twist"
)]
struct Cli {
    /// Worker threads for enumeration and checks.
    #[arg(long, global = true, env = "DUPLEX_TWIST_JOBS", default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a base file describes a simply connected region.
    Validate { base: PathBuf },
    /// Stream every tiling as a JSON line, or print how many there are.
    Enumerate {
        base: PathBuf,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the twist histogram, or the twist evidence of individual tilings.
    Twist {
        base: PathBuf,
        /// JSON-lines tiling file, or `-` for stdin. Defaults to all tilings.
        #[arg(long)]
        tiling: Option<PathBuf>,
        /// With all tilings, print one evidence line per tiling.
        #[arg(long, conflicts_with = "tiling")]
        per_tiling: bool,
        /// Print the histogram as a JSON run report.
        #[arg(long)]
        json: bool,
    },
    /// Run identity checks over all tilings, or over the given tilings.
    Verify {
        base: PathBuf,
        /// Comma-separated selectors: all, 2.1, 3.1, 3.2, 3.3, 3.4, prop1.1,
        /// or the suite names.
        #[arg(long, default_value = "all", value_parser = parse_lemmas)]
        lemmas: Lemmas,
        #[arg(long)]
        tiling: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Draw a tiling or its sock.
    Render {
        /// Base file; required with `--index`.
        base: Option<PathBuf>,
        #[arg(long, required_unless_present = "index")]
        tiling: Option<PathBuf>,
        /// Position of the tiling in enumeration order.
        #[arg(long, conflicts_with = "tiling", requires = "base")]
        index: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        #[arg(long, value_enum, default_value_t = View::Tiling)]
        view: View,
        #[arg(long, value_enum, default_value_t = Annotate::None)]
        annotate: Annotate,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the sock of each tiling as a JSON line.
    Sock {
        base: PathBuf,
        #[arg(long)]
        tiling: PathBuf,
    },
    /// Summarize the connected components of the flip graph.
    Components { base: PathBuf },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Svg,
    Ascii,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum View {
    Tiling,
    Sock,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Annotate {
    None,
    Angles,
    Weights,
}

impl From<Annotate> for Annotation {
    fn from(a: Annotate) -> Annotation {
        match a {
            Annotate::None => Annotation::None,
            Annotate::Angles => Annotation::Angles,
            Annotate::Weights => Annotation::Weights,
        }
    }
}

#[derive(Clone, Debug)]
struct Lemmas(Vec<Suite>);

fn parse_lemmas(text: &str) -> Result<Lemmas, String> {
    let mut suites = Vec::new();
    for token in text.split(',').map(str::trim) {
        let picked: &[Suite] = match token {
            "all" => &Suite::ALL,
            "2.1" | "jewel-crossing" => &[Suite::JewelCrossing],
            "3.1" | "interior-charge" => &[Suite::InteriorCharge],
            "3.2" | "metric-balance" => &[Suite::MetricBalance],
            "3.3" | "weight-difference" => &[Suite::WeightDifference],
            "3.4" | "charge-equality" => &[Suite::ChargeEquality],
            "prop1.1" | "twist-identity" => &[Suite::TwistIdentity],
            other => return Err(format!("unknown lemma selector {other:?}")),
        };
        for &s in picked {
            if !suites.contains(&s) {
                suites.push(s);
            }
        }
    }
    suites.sort();
    Ok(Lemmas(suites))
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        c.downcast_ref::<std::io::Error>()
            .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe)
    })
}

fn main() -> ExitCode {
    // usage errors exit 1; status 2 is reserved for property violations
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let jobs = cli.jobs.max(1);
    let result = match cli.command {
        Command::Validate { base } => commands::validate(&base),
        Command::Enumerate {
            base,
            count_only,
            out,
        } => commands::enumerate(&base, count_only, out.as_deref(), jobs),
        Command::Twist {
            base,
            tiling,
            per_tiling,
            json,
        } => commands::twist(&base, tiling.as_deref(), per_tiling, json, jobs),
        Command::Verify {
            base,
            lemmas,
            tiling,
            json,
        } => commands::verify(&base, &lemmas.0, tiling.as_deref(), json, jobs),
        Command::Render {
            base,
            tiling,
            index,
            format,
            view,
            annotate,
            out,
        } => {
            let source = match (tiling, index) {
                (Some(path), _) => commands::TilingSource::File(path),
                (None, Some(i)) => commands::TilingSource::Index(i),
                (None, None) => unreachable!("clap requires one of them"),
            };
            commands::render(
                base.as_deref(),
                source,
                matches!(format, Format::Svg),
                matches!(view, View::Sock),
                annotate.into(),
                out.as_deref(),
            )
        }
        Command::Sock { base, tiling } => commands::sock(&base, &tiling),
        Command::Components { base } => commands::components(&base, jobs),
    };
    match result {
        Ok(commands::Outcome::Success) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Violation) => ExitCode::from(2),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
