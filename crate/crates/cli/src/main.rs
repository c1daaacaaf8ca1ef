use std::path::PathBuf;
use std::process::ExitCode;

use coatsim_cli::commands;
use coatsim_cli::config::parse_config;

const USAGE: &str = "\
usage:
  coatsim simulate --config <path> [--out <dir>]
  coatsim steady   --config <path>
  coatsim verify   --config <path>

The config file is `key = value` lines; see configs/murray_fig1.cfg.
`simulate` writes diagnostics.csv plus u_<t>.csv / u_<t>.pgm / u_<t>.meta.txt
per snapshot into the output directory (--out overrides the config's out_dir).
`verify` runs the invariant suite and exits nonzero if any check fails.
";

struct Args {
    command: String,
    config: PathBuf,
    out: Option<PathBuf>,
}

fn parse_args() -> Result<Args, String> {
    let mut args = std::env::args().skip(1);
    let command = args.next().ok_or("missing command")?;
    let mut config = None;
    let mut out = None;
    while let Some(flag) = args.next() {
        match flag.as_str() {
            "--config" => config = Some(PathBuf::from(args.next().ok_or("--config needs a path")?)),
            "--out" => out = Some(PathBuf::from(args.next().ok_or("--out needs a directory")?)),
            other => return Err(format!("unknown argument `{other}`")),
        }
    }
    Ok(Args { command, config: config.ok_or("missing --config <path>")?, out })
}

fn run(args: Args) -> Result<ExitCode, String> {
    let text = std::fs::read_to_string(&args.config)
        .map_err(|e| format!("cannot read {}: {e}", args.config.display()))?;
    let cfg = parse_config(&text).map_err(|e| e.to_string())?;

    match args.command.as_str() {
        "simulate" => {
            let out_dir = args
                .out
                .or_else(|| cfg.out_dir.as_ref().map(PathBuf::from))
                .ok_or("no output directory: pass --out or set out_dir in the config")?;
            let summary = commands::cmd_simulate(&cfg, &out_dir).map_err(|e| e.to_string())?;
            println!("wrote {} files to {}", summary.files.len(), summary.out_dir.display());
            Ok(ExitCode::SUCCESS)
        }
        "steady" => {
            let report = commands::cmd_steady(&cfg).map_err(|e| e.to_string())?;
            print!("{report}");
            Ok(ExitCode::SUCCESS)
        }
        "verify" => {
            let report = commands::cmd_verify(&cfg).map_err(|e| e.to_string())?;
            print!("{}", report.table());
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        other => Err(format!("unknown command `{other}`")),
    }
}

fn main() -> ExitCode {
    match parse_args() {
        Ok(args) => match run(args) {
            Ok(code) => code,
            Err(message) => {
                eprintln!("error: {message}");
                ExitCode::FAILURE
            }
        },
        Err(message) => {
            eprintln!("error: {message}\n\n{USAGE}");
            ExitCode::from(2)
        }
    }
}
