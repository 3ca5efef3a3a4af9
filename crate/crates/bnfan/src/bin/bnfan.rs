//! Command-line front end: enumerate strings and modules, print stability
//! cones, walls and chambers, and run the verification checks.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bnfan::rep::ModuleId;
use bnfan::report::{self, VectorOrder};

#[derive(Parser)]
#[command(
    name = "bnfan",
    version,
    about = "Indecomposable modules and the stability wall-and-chamber fan of the biserial algebras B(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Ascending,
    PaperDescending,
}

impl From<Order> for VectorOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Ascending => VectorOrder::Ascending,
            Order::PaperDescending => VectorOrder::PaperDescending,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the *-classes of strings with canonical words and profiles
    Strings {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the catalogue of indecomposable modules with dimension vectors
    Indecomposables {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Order::Ascending)]
        order: Order,
    },
    /// Print stability cones (constraints and extreme rays) of one or all modules
    Stability {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Order::Ascending)]
        order: Order,
        /// Select one string class, e.g. `0,2,-1`, `S1` or `cycle`
        #[arg(long)]
        class: Option<String>,
        /// Select one catalogue module, e.g. `R0`, `M(0,2,-1)` or `S1`
        #[arg(long)]
        module: Option<String>,
        /// Write ray data for external plotting to this JSON file
        #[arg(long, value_name = "PATH")]
        emit_rays: Option<PathBuf>,
    },
    /// List the walls (codimension-1 stability spaces)
    Walls {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Order::Ascending)]
        order: Order,
        /// Write ray data for external plotting to this JSON file
        #[arg(long, value_name = "PATH")]
        emit_rays: Option<PathBuf>,
    },
    /// Compute the chamber decomposition and its count
    Chambers {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also list which regions make up each chamber
        #[arg(long)]
        compositions: bool,
        /// Allow n > 4 (region counts grow quickly)
        #[arg(long)]
        allow_large: bool,
    },
    /// Run the verification checks for the given n
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn require_n(n: usize) -> bnfan::Result<()> {
    if n < 1 {
        return Err(bnfan::Error::InvalidParameter(
            "n must be at least 1".into(),
        ));
    }
    Ok(())
}

fn emit<T: serde::Serialize>(value: &T, text: String, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("serializable")),
        Format::Text => print!("{text}"),
    }
}

fn run() -> bnfan::Result<ExitCode> {
    match Cli::parse().command {
        Command::Strings { n, format } => {
            require_n(n)?;
            let report = report::strings_report(n)?;
            emit(&report, report.to_text(), format);
        }
        Command::Indecomposables { n, format, order } => {
            require_n(n)?;
            let report = report::indecomposables_report(n, order.into())?;
            emit(&report, report.to_text(), format);
        }
        Command::Stability {
            n,
            format,
            order,
            class,
            module,
            emit_rays,
        } => {
            require_n(n)?;
            let target: Option<ModuleId> = match (class, module) {
                (Some(_), Some(_)) => {
                    return Err(bnfan::Error::InvalidParameter(
                        "pass either --class or --module, not both".into(),
                    ))
                }
                (Some(c), None) => Some(ModuleId::Str(c.parse()?)),
                (None, Some(m)) => Some(m.parse()?),
                (None, None) => None,
            };
            let report = report::stability_report(n, target, order.into())?;
            if let Some(path) = emit_rays {
                write_rays_for_stability(n, &report, order.into(), &path)?;
            }
            emit(&report, report.to_text(), format);
        }
        Command::Walls {
            n,
            format,
            order,
            emit_rays,
        } => {
            require_n(n)?;
            let report = report::walls_report(n, order.into())?;
            if let Some(path) = emit_rays {
                let walls = bnfan::stability::walls(n)?;
                let export = report::rays_export(n, &walls, order.into());
                write_json(&path, &export)?;
            }
            emit(&report, report.to_text(), format);
        }
        Command::Chambers {
            n,
            format,
            compositions,
            allow_large,
        } => {
            require_n(n)?;
            if n > 4 && !allow_large {
                return Err(bnfan::Error::InvalidParameter(
                    "chambers for n > 4 grows quickly; pass --allow-large to proceed".into(),
                ));
            }
            if n > 4 {
                eprintln!("warning: n = {n} may take a long time and a lot of memory");
            }
            let cs = bnfan::fan::chambers(n)?;
            let report = report::chambers_report(&cs, compositions);
            emit(&report, report.to_text(), format);
        }
        Command::Verify { n, format } => {
            require_n(n)?;
            let report = report::verify_report(n)?;
            emit(&report, report.to_text(), format);
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_json<T: serde::Serialize>(path: &PathBuf, value: &T) -> bnfan::Result<()> {
    let data = serde_json::to_string(value).expect("serializable");
    std::fs::write(path, data)
        .map_err(|e| bnfan::Error::InvalidParameter(format!("cannot write {path:?}: {e}")))
}

fn write_rays_for_stability(
    n: usize,
    report: &report::StabilityReport,
    order: VectorOrder,
    path: &PathBuf,
) -> bnfan::Result<()> {
    let catalogue = bnfan::rep::enumerate_indecomposables(n)?;
    let selected: Vec<(ModuleId, bnfan::ConeH)> = catalogue
        .iter()
        .filter(|e| report.modules.iter().any(|m| m.module == e.id.to_string()))
        .map(|e| Ok((e.id, bnfan::stability::stability_cone(&e.rep)?)))
        .collect::<bnfan::Result<_>>()?;
    let export = report::rays_export(n, &selected, order);
    write_json(path, &export)
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
