//! `tpsearch`: generate datasets, run single searches and benchmark suites.
//!
//! Exit status: 0 on success or when the target is found, 1 when a search
//! finds nothing, 2 on any error (including invalid flags).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use tpsearch::{
    binary_search, linear_search, read_dataset, render_report, run_suite, two_pointer_find_all, two_pointer_find_first,
    two_pointer_pair_sum, write_dataset, Algorithm, BenchConfig, Cursor, DatasetSource, Element, Error, Format,
    GenSpec, Measure,
};

const EXIT_NOT_FOUND: u8 = 1;
const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "tpsearch", version, about = "Linear, binary and two-pointer search with probe counting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated dataset file (one integer per line).
    Generate(GenerateArgs),
    /// Search a dataset file for one target and print the outcome.
    Search(SearchArgs),
    /// Benchmark several algorithms on one dataset and print a report.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    /// 1, 2, ..., COUNT
    Sorted,
    /// COUNT uniform draws from LO..=HI
    Random,
}

#[derive(Debug, clap::Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Number of values, at least 1.
    #[arg(long)]
    count: usize,
    /// Random generator seed (random kind only).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Smallest random value [default: 1].
    #[arg(long, allow_negative_numbers = true)]
    lo: Option<Element>,
    /// Largest random value [default: COUNT].
    #[arg(long, allow_negative_numbers = true)]
    hi: Option<Element>,
    /// Output path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Linear,
    Binary,
    TwoPointer,
    TwoPointerAll,
    PairSum,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Linear => Algorithm::Linear,
            AlgoArg::Binary => Algorithm::Binary,
            AlgoArg::TwoPointer => Algorithm::TwoPointer,
            AlgoArg::TwoPointerAll => Algorithm::TwoPointerAll,
            AlgoArg::PairSum => Algorithm::PairSum,
        }
    }
}

#[derive(Debug, clap::Args)]
struct SearchArgs {
    #[arg(long, value_enum)]
    algo: AlgoArg,
    /// Dataset file.
    #[arg(long)]
    data: PathBuf,
    /// Value to find (the wanted sum for pair-sum).
    #[arg(long, allow_negative_numbers = true)]
    target: Element,
    /// Verify the file is in ascending order and treat it as sorted.
    /// Required by binary and pair-sum.
    #[arg(long)]
    sorted: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MeasureArg {
    WallClock,
    Probes,
    Both,
}

#[derive(Debug, clap::Args)]
#[command(group(ArgGroup::new("source").required(true).args(["data", "generate"])))]
struct BenchArgs {
    /// Dataset file.
    #[arg(long)]
    data: Option<PathBuf>,
    /// Treat the --data file as sorted (verified on load).
    #[arg(long, requires = "data")]
    sorted: bool,
    /// Generate the dataset instead: sorted:COUNT, random:COUNT:SEED or
    /// random:COUNT:SEED:LO:HI.
    #[arg(long, value_name = "SPEC")]
    generate: Option<String>,
    /// Comma-separated algorithms, one report row each.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "linear,binary,two-pointer")]
    algos: Vec<AlgoArg>,
    #[arg(long, allow_negative_numbers = true)]
    target: Element,
    /// Measured repetitions per algorithm.
    #[arg(long, default_value_t = BenchConfig::DEFAULT_REPETITIONS)]
    reps: usize,
    /// Unmeasured runs before the measured ones.
    #[arg(long, default_value_t = BenchConfig::DEFAULT_WARMUP)]
    warmup: usize,
    #[arg(long, value_enum, default_value = "both")]
    measure: MeasureArg,
    #[arg(long, value_enum, default_value = "table")]
    format: FormatArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Search(args) => cmd_search(args),
        Command::Bench(args) => cmd_bench(args),
    };
    result.unwrap_or_else(|e| {
        eprintln!("tpsearch: {e}");
        ExitCode::from(EXIT_ERROR)
    })
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, Error> {
    let spec = match args.kind {
        Kind::Sorted => GenSpec::sorted(args.count),
        Kind::Random => {
            let default = GenSpec::random(args.count, args.seed);
            let GenSpec::Random { lo, hi, .. } = default else { unreachable!() };
            default.with_range(args.lo.unwrap_or(lo), args.hi.unwrap_or(hi))
        }
    };
    let data = tpsearch::generate(&spec)?;
    write_dataset(&data, &args.out)?;
    println!("wrote {} values to {}", data.len(), args.out.display());
    Ok(ExitCode::SUCCESS)
}

fn cmd_search(args: SearchArgs) -> Result<ExitCode, Error> {
    let data = read_dataset(&args.data, args.sorted)?;
    let target = args.target;
    let algorithm = Algorithm::from(args.algo);
    let mut lines = vec![format!("algorithm: {algorithm}")];
    let found = match args.algo {
        AlgoArg::Linear | AlgoArg::Binary | AlgoArg::TwoPointer => {
            let out = match args.algo {
                AlgoArg::Linear => linear_search(&data, target),
                AlgoArg::Binary => binary_search(&data, target)?,
                _ => two_pointer_find_first(&data, target),
            };
            lines.push(status_line(out.is_found()));
            if let Some(k) = out.index {
                lines.push(format!("index: {k}"));
            }
            if let Some(cursor) = out.cursor {
                lines.push(format!("cursor: {}", if cursor == Cursor::Left { "left" } else { "right" }));
            }
            lines.push(format!("probes: {}", out.probes));
            lines.push(format!("element_comparisons: {}", out.element_comparisons));
            out.is_found()
        }
        AlgoArg::TwoPointerAll => {
            let out = two_pointer_find_all(&data, target);
            let indices: Vec<String> = out.indices.iter().map(usize::to_string).collect();
            lines.push(status_line(!indices.is_empty()));
            lines.push(format!("indices: {}", indices.join(",")));
            lines.push(format!("probes: {}", out.probes));
            lines.push(format!("element_comparisons: {}", out.element_comparisons));
            !indices.is_empty()
        }
        AlgoArg::PairSum => {
            let out = two_pointer_pair_sum(&data, target)?;
            lines.push(status_line(out.pair.is_some()));
            if let Some((i, j)) = out.pair {
                lines.push(format!("pair: {i},{j}"));
            }
            lines.push(format!("probes: {}", out.probes));
            lines.push(format!("element_comparisons: {}", out.element_comparisons));
            out.pair.is_some()
        }
    };
    println!("{}", lines.join("\n"));
    Ok(if found { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NOT_FOUND) })
}

fn status_line(found: bool) -> String {
    format!("status: {}", if found { "found" } else { "not_found" })
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, Error> {
    let source = match (args.data, args.generate) {
        (Some(path), _) => DatasetSource::File { path, sorted: args.sorted },
        (None, Some(spec)) => DatasetSource::Generate(spec.parse()?),
        (None, None) => unreachable!("clap enforces one source"),
    };
    let config = BenchConfig {
        source,
        algorithms: args.algos.into_iter().map(Algorithm::from).collect(),
        target: args.target,
        repetitions: args.reps,
        warmup: args.warmup,
        measure: match args.measure {
            MeasureArg::WallClock => Measure::WallClock,
            MeasureArg::Probes => Measure::Probes,
            MeasureArg::Both => Measure::Both,
        },
    };
    let format = match args.format {
        FormatArg::Table => Format::Table,
        FormatArg::Csv => Format::Csv,
        FormatArg::Markdown => Format::Markdown,
    };
    // Rendered in full before anything is written.
    let text = render_report(&run_suite(&config)?, format);
    match args.out {
        Some(path) => std::fs::write(&path, text).map_err(|source| Error::Io { path, source })?,
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io { path: PathBuf::from("<stdout>"), source })?,
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn algos_default_to_the_compared_three() {
        let cli = Cli::try_parse_from(["tpsearch", "bench", "--generate", "sorted:10", "--target", "3"]).unwrap();
        let Command::Bench(args) = cli.command else { panic!() };
        let algos: Vec<Algorithm> = args.algos.into_iter().map(Algorithm::from).collect();
        assert_eq!(algos, Algorithm::COMPARED.to_vec());
    }

    #[test]
    fn unknown_flags_are_rejected() {
        assert!(Cli::try_parse_from([
            "tpsearch", "generate", "--kind", "sorted", "--count", "3", "--out", "x", "--bogus"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["tpsearch", "bench", "--target", "3"]).is_err());
        assert!(Cli::try_parse_from(["tpsearch", "bench", "--data", "a", "--generate", "sorted:3", "--target", "3"])
            .is_err());
    }
}
