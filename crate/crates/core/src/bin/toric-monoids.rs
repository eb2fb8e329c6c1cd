use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use toric_monoids::cli::{run, Command, Format, JobSpec, EXIT_MALFORMED};

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    Roots,
    Validate,
    Build,
    Verify,
    Aut,
    ReductiveAut,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Json,
    Text,
}

/// Root monoids on affine toric varieties and automorphisms of root and reductive monoids.
#[derive(Parser)]
#[command(version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// JSON input file.
    #[arg(long)]
    input: PathBuf,
    /// Box half-width (roots, validate) or search bound (aut, reductive-aut).
    #[arg(long)]
    bound: Option<i64>,
    /// Total degree of generator products checked by `verify`.
    #[arg(long)]
    degree_bound: Option<i64>,
    #[arg(long, value_enum, default_value = "json")]
    format: Fmt,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let spec = JobSpec {
        command: match args.command {
            Cmd::Roots => Command::Roots,
            Cmd::Validate => Command::Validate,
            Cmd::Build => Command::Build,
            Cmd::Verify => Command::Verify,
            Cmd::Aut => Command::Aut,
            Cmd::ReductiveAut => Command::ReductiveAut,
        },
        input: args.input,
        bound: args.bound,
        degree_bound: args.degree_bound,
        format: match args.format {
            Fmt::Json => Format::Json,
            Fmt::Text => Format::Text,
        },
    };
    let out = run(&spec);
    match args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &out.report) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_MALFORMED as u8);
            }
        }
        None => print!("{}", out.report),
    }
    ExitCode::from(out.exit_code as u8)
}
