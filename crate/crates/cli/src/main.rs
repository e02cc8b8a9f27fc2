use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use sympair::{run, CliError, Command, Options};

/// Exact computations on symmetric pairs: structural checks, σ-stable
/// polarizations, the J function and the Rouvière map.
#[derive(Parser, Debug)]
#[command(name = "sympair", version)]
struct Cli {
    command: Command,
    /// A builtin (`cotangent:aff1`, `swap:sl2`, ...) or an AlgebraSpec JSON file.
    target: String,
    #[arg(long, default_value_t = 4)]
    degree: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 20)]
    count: usize,
    /// A p basis label or comma-separated coordinates on p.
    #[arg(long)]
    form: Option<String>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record wall-clock time in the report (breaks byte-identical output).
    #[arg(long)]
    timing: bool,
}

fn emit_error(err: &CliError, text: bool) -> ExitCode {
    if text {
        eprintln!("error: {err}");
    } else {
        eprintln!("{}", serde_json::to_string_pretty(&err.to_json()).expect("serializable"));
    }
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            let text = std::env::args().any(|a| a == "--text");
            return emit_error(&CliError::Usage(e.to_string().trim().to_string()), text);
        }
    };
    let opts = Options {
        seed: cli.seed,
        count: cli.count,
        degree: cli.degree,
        form: cli.form.clone(),
        timing: cli.timing,
    };
    let report = match run(cli.command, &cli.target, &opts) {
        Ok(r) => r,
        Err(e) => return emit_error(&e, cli.text),
    };
    let rendered = if cli.text {
        report.render_text()
    } else {
        report.render_json()
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &rendered) {
                return emit_error(&CliError::Io(format!("cannot write {}: {e}", path.display())), cli.text);
            }
        }
        None => {
            let _ = std::io::stdout().write_all(rendered.as_bytes());
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
