use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fuzzy_bspline::cli::{self, exit_code, OutputFormat, RunConfig};
use fuzzy_bspline::render::TableFormat;
use fuzzy_bspline::ParamChoice;

#[derive(Parser)]
#[command(
    name = "fuzzy-bspline",
    version,
    about = "Type-2 fuzzy data points and their B-spline curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Check a dataset file and report every violated constraint.
    Validate { file: PathBuf },
    /// Print the alpha-cut, type-reduction and defuzzification table.
    Table {
        file: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: TableKind,
        /// List the source table's misprinted cells next to the computed ones.
        #[arg(long)]
        source_values: bool,
    },
    /// Interpolate every channel and write one SVG (and sample file) per stage.
    Curves {
        file: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        alpha: f64,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = ParamChoice::ChordLength)]
        parametrization: ParamChoice,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, default_value_t = OutputFormat::Csv)]
        format: OutputFormat,
    },
}

fn run(command: Command) -> fuzzy_bspline::Result<()> {
    match command {
        Command::Validate { .. } => unreachable!("handled in main"),
        Command::Table {
            file,
            alpha,
            format,
            source_values,
        } => {
            let config = RunConfig {
                alpha,
                ..RunConfig::default()
            };
            config.validate()?;
            let d = cli::load_dataset(&file)?;
            let format = match format {
                TableKind::Text => TableFormat::Text,
                TableKind::Csv => TableFormat::Csv,
            };
            print!("{}", cli::cmd_table(&d, &config, format, source_values)?);
        }
        Command::Curves {
            file,
            alpha,
            degree,
            parametrization,
            samples,
            out,
            format,
        } => {
            let config = RunConfig {
                alpha,
                degree,
                parametrization,
                samples,
                format,
            };
            config.validate()?;
            let d = cli::load_dataset(&file)?;
            for path in cli::cmd_curves(&d, &config, &out)? {
                println!("{}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Cli::parse();
    if let Command::Validate { file } = &args.command {
        let (report, code) = cli::cmd_validate(file);
        if code == cli::exit::OK {
            println!("{report}");
        } else {
            eprintln!("{report}");
        }
        return ExitCode::from(code as u8);
    }
    match run(args.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
