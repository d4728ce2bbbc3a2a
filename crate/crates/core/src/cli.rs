//! `simrank` command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};

use crate::correlation::{correlation_matrix, top_correlated_pairs};
use crate::dataset::{load_dataset, validate, Dataset, REFERENCE_CSV};
use crate::error::{Error, Result};
use crate::metrics::MetricChoice;
use crate::normalize::{normalize, NormalizedMatrix};
use crate::ranking::{nearest_k, rank_by_similarity, SimilarityRanking};
use crate::report::{self, Format};
use crate::schema::{reference_schema, CriteriaSchema};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "simrank",
    version,
    about = "Rank players by statistical similarity to a target player"
)]
struct Cli {
    #[command(flatten)]
    input: InputArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// CSV dataset (defaults to the bundled reference data)
    #[arg(long, global = true, value_name = "CSV")]
    data: Option<PathBuf>,

    /// JSON criteria schema (defaults to the bundled reference schema)
    #[arg(long, global = true, value_name = "JSON")]
    schema: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Table => Format::Table,
            OutputFormat::Csv => Format::Csv,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixFormat {
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full similarity ranking to a target player
    Rank {
        #[arg(long)]
        target: String,
        /// Distance exponent: p1 (Manhattan), p2 (Euclidean) or p<x> with x >= 1
        #[arg(long, default_value = "p1", value_parser = parse_metric)]
        metric: MetricChoice,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// The k players nearest to a target player
    Nearest {
        #[arg(long)]
        target: String,
        #[arg(short = 'k', long = "k")]
        k: usize,
        #[arg(long, default_value = "p1", value_parser = parse_metric)]
        metric: MetricChoice,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Pearson correlations between criteria
    Corr {
        #[arg(long, default_value_t = 4)]
        top: usize,
        /// table: top pairs; csv: full rho matrix; json: both
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Raw values of two criteria, one point per player
    Scatter {
        #[arg(short = 'x', value_name = "CRITERION")]
        x: String,
        #[arg(short = 'y', value_name = "CRITERION")]
        y: String,
        /// Fit a least-squares trend line
        #[arg(long)]
        trend: bool,
        /// Also write an SVG plot to this path
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
    },
    /// Normalized matrix with six decimals
    DumpNormalized {
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Check the dataset against every invariant
    Validate,
}

fn parse_metric(s: &str) -> std::result::Result<MetricChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn load(input: &InputArgs) -> Result<Dataset> {
    let schema = match &input.schema {
        Some(path) => CriteriaSchema::from_json(&std::fs::read_to_string(path)?)?,
        None => reference_schema(),
    };
    match &input.data {
        Some(path) => load_dataset(std::fs::File::open(path)?, &schema),
        None => load_dataset(REFERENCE_CSV.as_bytes(), &schema),
    }
}

fn normalized(dataset: &Dataset, err: &mut dyn Write) -> Result<NormalizedMatrix> {
    let matrix = normalize(dataset)?;
    for w in matrix.warnings() {
        writeln!(err, "warning: column `{}` is constant; scaled to 0", w.0)?;
    }
    Ok(matrix)
}

/// Parses `argv` (program name first) and runs one subcommand. Returns the
/// process exit code: 0 success, 1 usage error, 2 data or validation error.
pub fn cli_main<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let rendered = e.render().to_string();
                    let _ = write!(err, "{rendered}");
                    if !rendered.contains("Usage:") {
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    EXIT_USAGE
                }
            };
        }
    };
    match run(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_DATA
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let dataset = load(&cli.input)?;
    match cli.command {
        Command::Rank {
            target,
            metric,
            format,
        } => {
            let matrix = normalized(&dataset, err)?;
            let ranking = rank_by_similarity(&matrix, &target, metric)?;
            out.write_all(&report::emit_ranking(&ranking, format.into()))?;
        }
        Command::Nearest {
            target,
            k,
            metric,
            format,
        } => {
            let matrix = normalized(&dataset, err)?;
            let entries = nearest_k(&matrix, &target, k, metric)?;
            let ranking = SimilarityRanking {
                target,
                metric,
                entries,
            };
            out.write_all(&report::emit_ranking(&ranking, format.into()))?;
        }
        Command::Corr { top, format } => {
            let violations = validate(&dataset);
            if let Some(v) = violations.first() {
                return Err(Error::Invalid(v.to_string()));
            }
            let matrix = correlation_matrix(&dataset)?;
            let pairs = top_correlated_pairs(&matrix, top)?;
            match format {
                OutputFormat::Table => out.write_all(report::correlation_table(&pairs).as_bytes())?,
                OutputFormat::Csv => out.write_all(&report::correlation_csv(&matrix))?,
                OutputFormat::Json => {
                    let doc = serde_json::json!({ "matrix": matrix, "top": pairs });
                    let text = serde_json::to_string_pretty(&doc).expect("json value serializes");
                    writeln!(out, "{text}")?;
                }
            }
        }
        Command::Scatter {
            x,
            y,
            trend,
            svg,
            format,
        } => {
            let series = report::scatter_data(&dataset, &x, &y, trend)?;
            if let Some(path) = svg {
                let mut buf = Vec::new();
                report::emit_scatter_svg(&series, &mut buf)?;
                std::fs::write(path, buf)?;
            }
            match format {
                OutputFormat::Table => out.write_all(report::scatter_table(&series).as_bytes())?,
                OutputFormat::Csv => out.write_all(&report::scatter_csv(&series))?,
                OutputFormat::Json => {
                    let text = serde_json::to_string_pretty(&series).expect("series serializes");
                    writeln!(out, "{text}")?;
                }
            }
        }
        Command::DumpNormalized {
            format: MatrixFormat::Csv,
        } => {
            let matrix = normalized(&dataset, err)?;
            out.write_all(&report::normalized_csv(&matrix))?;
        }
        Command::Validate => {
            let violations = validate(&dataset);
            if violations.is_empty() {
                writeln!(
                    out,
                    "ok: {} players, {} criteria",
                    dataset.players().len(),
                    dataset.schema().included().count()
                )?;
            } else {
                for v in &violations {
                    writeln!(out, "violation: {v}")?;
                }
                return Ok(EXIT_DATA);
            }
        }
    }
    Ok(EXIT_OK)
}
