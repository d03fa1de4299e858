mod commands;
mod corpus;
mod error;
mod pipeline;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Arg, ArgAction, Command};

use commands::{registry, Format};
use error::CliError;

fn cli() -> Command {
    let mut cmd = Command::new("ginbetti")
        .about("Generic initial ideals, Betti tables and tailing Betti numbers")
        .version(env!("CARGO_PKG_VERSION"))
        .subcommand_required(true)
        .arg_required_else_help(true)
        .arg(
            Arg::new("format")
                .long("format")
                .global(true)
                .value_parser(clap::builder::EnumValueParser::<Format>::new())
                .default_value("table")
                .help("Output format"),
        )
        .arg(
            Arg::new("out")
                .long("out")
                .global(true)
                .value_name("PATH")
                .value_parser(clap::value_parser!(PathBuf))
                .action(ArgAction::Set)
                .help("Write the output to a file instead of stdout"),
        );
    for sub in registry() {
        // about goes last: derived Args would otherwise overwrite it with a struct doc
        cmd = cmd.subcommand(sub.args(Command::new(sub.name())).about(sub.about()));
    }
    cmd
}

/// Write via a sibling temporary file so readers never see a partial report.
fn write_atomically(path: &Path, text: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    std::fs::write(&tmp, text).map_err(io)?;
    std::fs::rename(&tmp, path).map_err(io)
}

fn main() -> ExitCode {
    let matches = cli().get_matches();
    let (name, sub_matches) = matches.subcommand().expect("subcommand required");
    let format = *matches
        .get_one::<Format>("format")
        .expect("default format");
    let out = matches.get_one::<PathBuf>("out").cloned();
    let command = registry()
        .into_iter()
        .find(|c| c.name() == name)
        .expect("registered subcommand");

    let result = command.run(sub_matches).and_then(|output| {
        let text = match format {
            Format::Json => &output.json,
            Format::Table => &output.table,
        };
        match &out {
            Some(path) => write_atomically(path, text)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                let _ = stdout.write_all(text.as_bytes());
            }
        }
        Ok(output.code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
