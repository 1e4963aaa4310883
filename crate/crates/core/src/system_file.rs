//! Plain-text system files.
//!
//! Lines starting with `#` and blank lines are ignored. The remaining seven
//! lines are, in order: `n`, then the vectors ã (n-2 entries), a (n-1),
//! d (n), b (n-1), b̃ (n-2) and y (n), whitespace separated. Entries are
//! integers, exact decimals or `p/q` rationals.
//!
//! ```text
//! # Example: solution (1, 2, 3, 4, 5)
//! 5
//! 3 2 3
//! -1 -2 1 4
//! 1 2 2 -2 -1
//! 4 1 2 1
//! 1 2 1
//! 10 26 20 14 4
//! ```

use std::fmt::Write as _;

use num_rational::BigRational;
use thiserror::Error;

use crate::banded::{BackwardPentaSystem, Band, SystemError, MIN_SIZE};
use crate::scalar::{parse_rational, LiteralError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("expected 7 data lines, found {0}")]
    LineCount(usize),
    #[error("line {line}: invalid size `{text}`")]
    BadSize { line: usize, text: String },
    #[error("line {line}: {source}")]
    Literal { line: usize, source: LiteralError },
    #[error("line {line}: vector {band} has {actual} entries, expected {expected}")]
    Count {
        line: usize,
        band: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error(transparent)]
    System(#[from] SystemError),
}

const VECTOR_ORDER: [Band; 6] = [
    Band::ATilde,
    Band::A,
    Band::D,
    Band::B,
    Band::BTilde,
    Band::Y,
];

pub fn parse_system(text: &str) -> Result<BackwardPentaSystem<BigRational>, ParseError> {
    let data: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if data.len() != 7 {
        return Err(ParseError::LineCount(data.len()));
    }
    let (size_line, size_text) = data[0];
    let n: usize = size_text.parse().map_err(|_| ParseError::BadSize {
        line: size_line,
        text: size_text.to_string(),
    })?;
    if n < MIN_SIZE {
        return Err(SystemError::SizeTooSmall(n).into());
    }

    let mut vectors = Vec::with_capacity(6);
    for (band, &(line, body)) in VECTOR_ORDER.iter().zip(&data[1..]) {
        let values = body
            .split_whitespace()
            .map(|tok| parse_rational(tok).map_err(|source| ParseError::Literal { line, source }))
            .collect::<Result<Vec<_>, _>>()?;
        let expected = band.len_for(n);
        if values.len() != expected {
            return Err(ParseError::Count {
                line,
                band: band.name(),
                expected,
                actual: values.len(),
            });
        }
        vectors.push(values);
    }
    let mut it = vectors.into_iter();
    let mut next = || it.next().expect("six vectors");
    Ok(BackwardPentaSystem::new(
        next(),
        next(),
        next(),
        next(),
        next(),
        next(),
    )?)
}

/// Writes `sys` in the file format, preceded by `comments` as `#` lines.
pub fn write_system(sys: &BackwardPentaSystem<BigRational>, comments: &[&str]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{}", sys.n());
    for band in VECTOR_ORDER {
        out.push_str(&join(sys.band(band)));
        out.push('\n');
    }
    out
}

fn join(v: &[BigRational]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}
