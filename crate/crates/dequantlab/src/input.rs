//! Truth tables from the command line or from files.

use std::fs;
use std::path::{Path, PathBuf};

use dequantlab_core::oracle::{parse_truth_table, BooleanFunction, ParseError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{line}: {source}")]
    Line {
        path: PathBuf,
        line: usize,
        source: ParseError,
    },
    #[error("{0}")]
    Inline(#[from] ParseError),
    #[error("{0} contains no truth tables")]
    Empty(PathBuf),
}

/// A parsed table together with the text it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub source: String,
    pub function: BooleanFunction,
}

pub fn parse_inline(text: &str, declared_n: Option<usize>) -> Result<Table, InputError> {
    Ok(Table {
        source: text.trim().to_owned(),
        function: parse_truth_table(text, declared_n)?,
    })
}

/// One table per line; blank lines and lines starting with `#` are skipped.
pub fn parse_lines(
    path: &Path,
    text: &str,
    declared_n: Option<usize>,
) -> Result<Vec<Table>, InputError> {
    let mut tables = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let function = parse_truth_table(line, declared_n).map_err(|source| InputError::Line {
            path: path.to_owned(),
            line: k + 1,
            source,
        })?;
        tables.push(Table {
            source: line.to_owned(),
            function,
        });
    }
    if tables.is_empty() {
        return Err(InputError::Empty(path.to_owned()));
    }
    Ok(tables)
}

pub fn read_tables(path: &Path, declared_n: Option<usize>) -> Result<Vec<Table>, InputError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_lines(path, &text, declared_n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_blanks() {
        let t = parse_lines(Path::new("x"), "# header\n0011\n\n  0x6 \n", None).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].function.to_bit_string(), "0011");
        assert_eq!(t[1].source, "0x6");
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_lines(Path::new("tables.txt"), "0011\n012\n", None).unwrap_err();
        assert!(err.to_string().starts_with("tables.txt:2:"), "{err}");
        assert!(matches!(
            parse_lines(Path::new("e"), "# only\n", None),
            Err(InputError::Empty(_))
        ));
    }
}
