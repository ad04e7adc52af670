use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qshape_cli::{
    cmd_converge, cmd_plot, cmd_qbinom, cmd_regions, cmd_shape, CommandError, Format, PlotOptions, ShapeMode,
};

/// Exact q-binomial coefficients [n+k choose k]_q, their quasipolynomial
/// regions, and the limit shapes of their normalized bar graphs.
#[derive(Parser)]
#[command(name = "qshape", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoxSize {
    /// Largest number of parts
    #[arg(long = "n")]
    n: usize,
    /// Largest part size
    #[arg(long = "k")]
    k: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of [n+k choose k]_q in ascending order
    Qbinom {
        #[command(flatten)]
        size: BoxSize,
        #[arg(long, value_enum, default_value_t = Format::Coeffs)]
        format: Format,
    },
    /// Print the quasipolynomial regions and transition zones
    Regions {
        #[command(flatten)]
        size: BoxSize,
        #[arg(long, value_enum, default_value_t = Format::Coeffs)]
        format: Format,
    },
    /// Print the limit shape L_k exactly or at evenly spaced points
    Shape {
        #[arg(long = "k")]
        k: usize,
        /// Number of evenly spaced samples on [0, 1]
        #[arg(long, conflicts_with = "exact", required_unless_present = "exact")]
        samples: Option<usize>,
        /// List each polynomial piece with exact rational coefficients
        #[arg(long)]
        exact: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Kolmogorov-Smirnov distance to L_k for each n
    Converge {
        #[arg(long = "k")]
        k: usize,
        /// Comma-separated, strictly increasing
        #[arg(long = "n-list", value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Write a normalized bar graph of [n+k choose k]_q as SVG
    Plot {
        #[command(flatten)]
        size: BoxSize,
        #[arg(long)]
        out: PathBuf,
        /// Draw the limit shape L_k over the bars.
        ///
        /// Bar i has height mass_i * (nk + 1) and the curve is L_k(x) in the
        /// same units, both scaled so the tallest bar reaches the plot
        /// height. A measure equal to its limit would trace the curve.
        #[arg(long, verbatim_doc_comment)]
        overlay: bool,
        /// Colour bars by quasipolynomial region, transition zones in black
        #[arg(long)]
        color_regions: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 400)]
        height: u32,
    },
}

fn run(command: Command) -> Result<(), CommandError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Qbinom { size, format } => cmd_qbinom(size.n, size.k, format, &mut out)?,
        Command::Regions { size, format } => cmd_regions(size.n, size.k, format, &mut out)?,
        Command::Shape { k, samples, exact, format } => {
            let mode = match (exact, samples) {
                (true, _) => ShapeMode::Exact,
                (false, Some(s)) => ShapeMode::Samples(s),
                (false, None) => return Err(CommandError::Usage("pass --samples or --exact".into())),
            };
            cmd_shape(k, mode, format, &mut out)?
        }
        Command::Converge { k, n_list, format } => cmd_converge(k, &n_list, format, &mut out)?,
        Command::Plot { size, out: path, overlay, color_regions, width, height } => {
            let options = PlotOptions {
                overlay,
                color_regions,
                width_px: width,
                height_px: height,
            };
            cmd_plot(size.n, size.k, &path, &options)?
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qshape: {e}");
            match e {
                CommandError::Usage(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
