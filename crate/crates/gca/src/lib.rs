//! Command-line front-end for `gca-core`: argument parsing, JSON/CSV reports and exit codes.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::Parser;

pub mod commands;
pub mod config;

pub use commands::{run, Outcome};
pub use config::RunConfig;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(gca_core::Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Compute(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<gca_core::Error> for CliError {
    fn from(e: gca_core::Error) -> Self {
        match e {
            gca_core::Error::SymbolicWeight(_) | gca_core::Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
            other => CliError::Compute(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 3,
        }
    }
}

fn command_name(cfg: &RunConfig) -> String {
    use clap::ValueEnum;
    cfg.command.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

/// Renders an outcome in the requested format.
pub fn render(cfg: &RunConfig, outcome: &Outcome) -> Result<String, CliError> {
    match cfg.format {
        config::Format::Json => {
            let mut report = serde_json::Map::new();
            report.insert("schemaVersion".into(), SCHEMA_VERSION.into());
            report.insert("command".into(), command_name(cfg).into());
            if let serde_json::Value::Object(body) = &outcome.report {
                report.extend(body.clone());
            }
            let mut s = serde_json::to_string_pretty(&serde_json::Value::Object(report))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        config::Format::Csv => {
            let table = outcome
                .table
                .as_ref()
                .ok_or_else(|| CliError::Usage(format!("{} has no numeric table for csv output", command_name(cfg))))?;
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in table {
                w.write_record(row).map_err(|e| CliError::Io(e.into()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code:
/// 0 success, 1 a checked property failed, 2 usage error, 3 computation error.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = run(&cfg).and_then(|o| render(&cfg, &o).map(|text| (o.passed, text)));
    let (passed, text) = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "gca: {e}");
            return e.exit_code();
        }
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &text),
        None => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "gca: io error: {e}");
        return 3;
    }
    if passed {
        0
    } else {
        let _ = writeln!(err, "gca: checked property failed");
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("gca").chain(args.iter().copied());
        let code = execute(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json(args: &[&str]) -> (i32, Value) {
        let (code, out, err) = call(args);
        let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
        (code, v)
    }

    #[test]
    fn dims_report() {
        let (code, v) = json(&["dims", "--level", "5"]);
        assert_eq!(code, 0);
        assert_eq!(v["schemaVersion"], 1);
        assert_eq!(v["command"], "dims");
        assert_eq!(v["dims"], serde_json::json!([1, 4, 14, 40, 105, 252]));
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["kac", "--level", "2", "--method", "sampled", "--seed", "7"];
        assert_eq!(call(&args).1, call(&args).1);
    }

    #[test]
    fn sampled_kac_at_level_two() {
        let (code, v) = json(&["kac", "--level", "2", "--method", "sampled", "--samples", "8"]);
        assert_eq!(code, 0);
        assert_eq!(v["power"], 12);
        assert_eq!(v["samples"], 8);
    }

    #[test]
    fn kac_compare_agrees() {
        let (code, v) = json(&["kac-compare", "--level", "2"]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["results"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn extensions_for_check_algebra() {
        let (code, v) = json(&["extensions", "--algebra", "g-check", "--window", "6", "--inner-window", "4"]);
        assert_eq!(code, 0);
        assert_eq!(v["nontrivialDim"], 2);
        assert!(v["zeroChannels"].as_array().unwrap().contains(&"h".into()));
    }

    #[test]
    fn malformed_rational_is_usage_error() {
        assert_eq!(call(&["gram", "--h", "1/0"]).0, 2);
        assert_eq!(call(&["gram", "--mu", "abc"]).0, 2);
    }

    #[test]
    fn unknown_flag_and_level_cap_are_usage_errors() {
        assert_eq!(call(&["dims", "--bogus"]).0, 2);
        assert_eq!(call(&["gram", "--level", "9"]).0, 2);
        assert_eq!(call(&["kac", "--level", "4", "--method", "brute"]).0, 2);
    }

    #[test]
    fn singular_needs_numeric_weights() {
        assert_eq!(call(&["singular", "--h", "1"]).0, 2);
        let (code, v) = json(&[
            "singular", "--h", "1", "--mu", "1", "--rho1", "0", "--rho2", "0", "--alpha", "1", "--beta", "1",
        ]);
        assert_eq!(code, 0);
        assert!(v["kernelDim"].as_u64().unwrap() >= 2);
    }

    #[test]
    fn csv_output() {
        let (code, out, _) = call(&["dims", "--level", "2", "--format", "csv"]);
        assert_eq!(code, 0);
        assert_eq!(out, "level,dim\n0,1\n1,4\n2,14\n");
        // symbolic Gram entries have no csv form
        assert_eq!(call(&["gram", "--format", "csv"]).0, 2);
        let numeric = ["gram", "--format", "csv", "--h", "1", "--mu", "2", "--rho1", "0", "--rho2", "0", "--alpha", "1", "--beta", "1"];
        let (code, out, _) = call(&numeric);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
    }

    #[test]
    fn writes_to_out_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("dims.json");
        let (code, out, _) = call(&["dims", "--level", "3", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["dims"], serde_json::json!([1, 4, 14, 40]));
    }

    #[test]
    fn property_checks_set_exit_code() {
        assert_eq!(call(&["jacobi", "--mode-bound", "4"]).0, 0);
        let (code, v) = json(&["omega", "--mode-bound", "3"]);
        assert_eq!(code, 1);
        assert!(!v["failures"].as_array().unwrap().is_empty());
        assert_eq!(call(&["realize-check", "--realization", "vf", "--mode-bound", "2", "--deg-bound", "3"]).0, 0);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("extensions"));
    }
}
