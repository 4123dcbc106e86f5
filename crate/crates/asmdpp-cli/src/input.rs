//! Input parsing for the CLI. Parse-level problems (unreadable files,
//! malformed integers or JSON, non-square matrices) are usage errors
//! (exit 2); objects that parse but fail validation are domain errors
//! (exit 1).

use crate::CliError;
use asmdpp::{Asm, Dpp, InversionWord, PathFamily, Permutation};
use std::io::Read;
use std::path::PathBuf;

pub fn read_source(file: Option<PathBuf>) -> Result<String, CliError> {
    match file {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

fn parse_int_rows(source: &str) -> Result<Vec<Vec<i64>>, CliError> {
    source
        .lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            line.split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>()
                        .map_err(|_| CliError::Usage(format!("cannot parse integer {tok:?}")))
                })
                .collect()
        })
        .collect()
}

fn parse_int_line(source: &str) -> Result<Vec<i64>, CliError> {
    source
        .split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| CliError::Usage(format!("cannot parse integer {tok:?}")))
        })
        .collect()
}

fn parse_json<T: serde::de::DeserializeOwned>(source: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(source).map_err(|e| CliError::Usage(format!("cannot parse {what} JSON: {e}")))
}

pub fn read_dpp(source: &str, json: bool) -> Result<Dpp, CliError> {
    let rows = if json {
        parse_json::<Vec<Vec<i64>>>(source, "DPP")?
    } else {
        parse_int_rows(source)?
    };
    Dpp::new(rows).map_err(|e| CliError::Domain(format!("{}: {e}", e.name())))
}

pub fn read_asm(source: &str, json: bool) -> Result<Asm, CliError> {
    let rows = if json {
        parse_json::<Vec<Vec<i64>>>(source, "ASM")?
    } else {
        parse_int_rows(source)?
    };
    // shape problems are parse errors, not validation failures
    if rows.is_empty() {
        return Err(CliError::Usage(String::from("empty input, expected a square matrix")));
    }
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(CliError::Usage(format!(
            "matrix is not square: {} rows but row lengths {:?}",
            rows.len(),
            rows.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    Asm::new(rows).map_err(|e| CliError::Domain(format!("{}: {e}", e.name())))
}

pub fn read_perm(source: &str, json: bool) -> Result<Permutation, CliError> {
    let word =
        if json { parse_json::<Vec<i64>>(source, "permutation")? } else { parse_int_line(source)? };
    Permutation::new(word).map_err(|e| CliError::Domain(format!("{}: {e}", e.name())))
}

pub fn read_invword(source: &str, json: bool) -> Result<InversionWord, CliError> {
    let entries = if json {
        parse_json::<Vec<i64>>(source, "inversion word")?
    } else {
        parse_int_line(source)?
    };
    InversionWord::new(entries).map_err(|e| CliError::Domain(format!("{}: {e}", e.name())))
}

/// Path families are interchanged as JSON regardless of the output format.
pub fn read_paths(source: &str) -> Result<PathFamily, CliError> {
    parse_json::<PathFamily>(source, "path family")
}
