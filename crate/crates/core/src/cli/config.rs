use std::ffi::OsString;

use clap::parser::ValueSource;
use clap::{CommandFactory, Parser};

use super::{usage, Cli, Failure};

pub(super) enum ParseOutcome {
    Clap(clap::Error),
    Failure(Failure),
}

impl From<clap::Error> for ParseOutcome {
    fn from(e: clap::Error) -> Self {
        ParseOutcome::Clap(e)
    }
}

impl From<Failure> for ParseOutcome {
    fn from(f: Failure) -> Self {
        ParseOutcome::Failure(f)
    }
}

/// Parses the command line. With `--config`, every key of the flat TOML
/// table that names a flag of the chosen subcommand and was not given on the
/// command line is appended as that flag.
pub(super) fn parse(argv: Vec<OsString>) -> Result<Cli, ParseOutcome> {
    let Some(path) = config_path(&argv) else {
        return Ok(Cli::try_parse_from(argv)?);
    };
    let text = std::fs::read_to_string(&path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    let table: toml::Table = text
        .parse()
        .map_err(|e| usage(format!("config {}: {e}", path.display())))?;

    // Tolerant pass: required flags may still come from the file.
    let matches = Cli::command().ignore_errors(true).try_get_matches_from(&argv)?;
    let Some((name, sub)) = matches.subcommand() else {
        return Ok(Cli::try_parse_from(argv)?);
    };
    let command = Cli::command();
    let subcommand = command
        .find_subcommand(name)
        .expect("parsed subcommand exists");

    let mut extra: Vec<OsString> = Vec::new();
    for (key, value) in &table {
        let id = key.replace('-', "_");
        let arg = subcommand
            .get_arguments()
            .find(|a| a.get_long() == Some(key.as_str()) || a.get_id() == id.as_str())
            .ok_or_else(|| usage(format!("config key `{key}` is not a flag of `{name}`")))?;
        if sub.value_source(arg.get_id().as_str()) == Some(ValueSource::CommandLine) {
            continue;
        }
        let flag = format!("--{}", arg.get_long().unwrap_or(key));
        let values = match value {
            toml::Value::Boolean(true) => {
                extra.push(flag.into());
                continue;
            }
            toml::Value::Boolean(false) => continue,
            toml::Value::Array(items) => items.iter().map(|v| scalar(key, v)).collect::<Result<Vec<_>, _>>()?,
            v => vec![scalar(key, v)?],
        };
        for v in values {
            extra.push(flag.clone().into());
            extra.push(v.into());
        }
    }

    let mut merged = argv;
    merged.extend(extra);
    Ok(Cli::try_parse_from(merged)?)
}

fn config_path(argv: &[OsString]) -> Option<std::path::PathBuf> {
    let mut args = argv.iter().skip(1);
    while let Some(a) = args.next() {
        let a = a.to_string_lossy();
        if a == "--config" {
            return args.next().map(Into::into);
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(p.into());
        }
    }
    None
}

fn scalar(key: &str, v: &toml::Value) -> Result<String, Failure> {
    match v {
        toml::Value::String(s) => Ok(s.clone()),
        toml::Value::Integer(i) => Ok(i.to_string()),
        toml::Value::Float(f) => Ok(f.to_string()),
        _ => Err(usage(format!("config key `{key}` must be a string, number or list of them"))),
    }
}
