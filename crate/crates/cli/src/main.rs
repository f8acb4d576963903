//! `finger`: command-line driver for the finger-core analyses.
//!
//! Exit status is 0 on success, 1 when the mechanism or operating point is
//! infeasible, 2 when the configuration or file system is at fault.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "finger",
    version,
    about = "Linkage finger kinematics, statics and assist checks"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Finger configuration JSON (defaults to the built-in configuration).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Directory for emitted files.
    #[arg(long, global = true, default_value = "out")]
    pub out: PathBuf,
    /// Output format for emitted files and printed reports.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Reference registry JSON (defaults to the built-in registry).
    #[arg(long, global = true)]
    pub registry: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TendonArg {
    Single,
    Double,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mobility, loop count and loop coefficients.
    Analyze,
    /// Joint angles and fingertip trace over the input range.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[arg(long, default_value_t = 181)]
        samples: usize,
        /// Gripper orientation for the trace (deg).
        #[arg(long, default_value_t = 0.0)]
        psi_deg: f64,
    },
    /// Fingertip cloud over input and orientation, with the widest opening.
    Workspace {
        /// Input-angle samples.
        #[arg(long, default_value_t = 61)]
        samples: usize,
        /// Orientation samples.
        #[arg(long, default_value_t = 13)]
        psi_samples: usize,
    },
    /// Tip force against input angle for one tendon model.
    #[command(allow_negative_numbers = true)]
    Force {
        #[arg(long, default_value_t = 181)]
        samples: usize,
        /// Tendon variant (defaults to the configured one).
        #[arg(long, value_enum)]
        tendon: Option<TendonArg>,
        /// Tendon tension (defaults to the configured nominal tension).
        #[arg(long)]
        tension_n: Option<f64>,
    },
    /// Grasp feasibility for a cylinder or a flat object.
    #[command(allow_negative_numbers = true)]
    Grasp {
        #[arg(
            long,
            conflicts_with = "thickness_mm",
            required_unless_present = "thickness_mm"
        )]
        diameter_mm: Option<f64>,
        #[arg(long)]
        thickness_mm: Option<f64>,
        #[arg(long, value_enum)]
        tendon: Option<TendonArg>,
        #[arg(long)]
        tension_n: Option<f64>,
        /// Input angle at contact (defaults to the end of the range).
        #[arg(long)]
        theta1_deg: Option<f64>,
    },
    /// Contact-force, clearance and stroke checks. Any failed check exits 1.
    #[command(allow_negative_numbers = true)]
    Safety {
        /// Contact force (defaults to the registered fingertip force).
        #[arg(long)]
        force_n: Option<f64>,
        #[arg(long)]
        space_mm: Option<f64>,
        #[arg(long)]
        body_mm: Option<f64>,
        #[arg(long)]
        device_mm: Option<f64>,
        #[arg(long)]
        required_mm: Option<f64>,
        #[arg(long)]
        available_mm: Option<f64>,
    },
    /// Closed-form solver against the bisection oracle.
    Validate {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Registry consistency rules.
    Registry {
        /// Also write the canonical registry document to this path.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.common, &cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
