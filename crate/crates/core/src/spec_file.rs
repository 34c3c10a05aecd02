//! Line-oriented hypergraph description files.
//!
//! ```text
//! # arithmetic progressions of length 3 in F
//! prime 2147483647
//! hypergraph n=1 t=3
//! cell
//!   eq x3_1 - 2*x2_1 + x1_1
//!   neq x1_1 - x2_1
//! end
//! ```
//!
//! Coefficients are integer literals, so one file instantiates over any prime.

use std::fmt::Write;

use crate::field::{PrimeField, DEFAULT_PRIME};
use crate::geometry::{Cell, ConstructibleSet};
use crate::hypergraph::{hypergraph_ring, DefinableHypergraph};
use crate::parse::{parse_polynomial_at, ParseError};
use crate::poly::{Polynomial, Ring};

fn error(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

fn parse_int(word: &str, line: usize, column: usize) -> Result<u64, ParseError> {
    word.parse()
        .map_err(|_| error(line, column, format!("expected an integer, found `{word}`")))
}

fn key_value<'a>(
    word: &'a str,
    key: &str,
    line: usize,
    column: usize,
) -> Result<&'a str, ParseError> {
    word.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix('='))
        .ok_or_else(|| {
            error(
                line,
                column,
                format!("expected `{key}=<int>`, found `{word}`"),
            )
        })
}

/// Parses a hypergraph description. Without a `prime` line the default
/// prime is used.
pub fn parse_spec(text: &str) -> Result<DefinableHypergraph, ParseError> {
    parse_spec_with_prime(text, None)
}

/// Like [`parse_spec`], with `prime` overriding the file's `prime` line.
pub fn parse_spec_with_prime(
    text: &str,
    prime: Option<u64>,
) -> Result<DefinableHypergraph, ParseError> {
    let mut file_prime: Option<u64> = None;
    let mut shape: Option<(usize, usize, Ring)> = None;
    let mut cells: Vec<Cell> = Vec::new();
    let mut open: Option<(usize, Vec<Polynomial>, Vec<Polynomial>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = match trimmed.find(char::is_whitespace) {
            Some(pos) => (&trimmed[..pos], &trimmed[pos..]),
            None => (trimmed.trim_end(), ""),
        };
        let col = indent + 1;
        match keyword {
            "prime" => {
                if shape.is_some() {
                    return Err(error(line, col, "`prime` must precede `hypergraph`"));
                }
                let word = rest.trim();
                let p = parse_int(word, line, col + keyword.len() + 1)?;
                file_prime = Some(p);
            }
            "hypergraph" => {
                if shape.is_some() {
                    return Err(error(line, col, "duplicate `hypergraph` line"));
                }
                let words: Vec<&str> = rest.split_whitespace().collect();
                if words.len() != 2 {
                    return Err(error(line, col, "expected `hypergraph n=<int> t=<int>`"));
                }
                let n = parse_int(key_value(words[0], "n", line, col)?, line, col)? as usize;
                let t = parse_int(key_value(words[1], "t", line, col)?, line, col)? as usize;
                if n == 0 || t == 0 {
                    return Err(error(line, col, "n and t must be positive"));
                }
                let p = prime.or(file_prime).unwrap_or(DEFAULT_PRIME);
                let field = PrimeField::new(p).map_err(|e| error(line, col, e.to_string()))?;
                shape = Some((n, t, hypergraph_ring(n, t, field)));
            }
            "cell" => {
                if shape.is_none() {
                    return Err(error(line, col, "`cell` before `hypergraph`"));
                }
                if open.is_some() {
                    return Err(error(line, col, "nested `cell`"));
                }
                if !rest.trim().is_empty() {
                    return Err(error(
                        line,
                        col + keyword.len(),
                        "unexpected text after `cell`",
                    ));
                }
                open = Some((line, Vec::new(), Vec::new()));
            }
            "end" => {
                let Some((_, eqs, neqs)) = open.take() else {
                    return Err(error(line, col, "`end` without `cell`"));
                };
                let ring = &shape.as_ref().unwrap().2;
                let cell = Cell::from_polys(ring, eqs, neqs)
                    .map_err(|e| error(line, col, e.to_string()))?;
                cells.push(cell);
            }
            "eq" | "eq:" | "neq" | "neq:" => {
                let Some((_, eqs, neqs)) = open.as_mut() else {
                    return Err(error(line, col, format!("`{keyword}` outside a cell")));
                };
                let ring = &shape.as_ref().unwrap().2;
                let expr_col = col + keyword.len() + (rest.len() - rest.trim_start().len());
                let poly = parse_polynomial_at(rest.trim(), ring, line, expr_col)?;
                if keyword.starts_with("eq") {
                    eqs.push(poly);
                } else {
                    if poly.is_zero() {
                        return Err(error(line, expr_col, "inequation is identically zero"));
                    }
                    neqs.push(poly);
                }
            }
            other => return Err(error(line, col, format!("unknown directive `{other}`"))),
        }
    }
    if let Some((start, _, _)) = open {
        return Err(error(start, 1, "unterminated `cell`"));
    }
    let Some((n, t, ring)) = shape else {
        return Err(error(1, 1, "missing `hypergraph n=<int> t=<int>` line"));
    };
    let set = ConstructibleSet::new(&ring, cells).expect("cells share the ring");
    Ok(DefinableHypergraph::new(n, t, set).expect("ring has arity t*n"))
}

/// Canonical text form; `parse_spec(emit_spec(e)) == e` up to the
/// components flag.
pub fn emit_spec(e: &DefinableHypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "prime {}", e.field().modulus()).unwrap();
    writeln!(out, "hypergraph n={} t={}", e.n(), e.t()).unwrap();
    for cell in e.set().cells() {
        out.push_str("cell\n");
        for g in cell.equations().generators() {
            writeln!(out, "  eq {g}").unwrap();
        }
        for g in cell.inequations() {
            writeln!(out, "  neq {g}").unwrap();
        }
        out.push_str("end\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const AP: &str = "prime 2147483647\nhypergraph n=1 t=3\ncell\n  eq x3_1 - 2*x2_1 + x1_1\n  neq x1_1 - x2_1\nend\n";

    #[test]
    fn parses_ap() {
        let e = parse_spec(AP).unwrap();
        assert_eq!((e.n(), e.t()), (1, 3));
        assert_eq!(e.set().cells().len(), 1);
        let cell = &e.set().cells()[0];
        assert_eq!(cell.equations().generators().len(), 1);
        assert_eq!(cell.inequations().len(), 1);
    }

    #[test]
    fn round_trip() {
        let e = parse_spec(AP).unwrap();
        let text = emit_spec(&e);
        assert_eq!(parse_spec(&text).unwrap(), e);
        assert_eq!(emit_spec(&parse_spec(&text).unwrap()), text);
    }

    #[test]
    fn comments_and_colon_forms() {
        let text = "# header\nhypergraph n=2 t=2  # shape\ncell\n eq: x1_1 - x2_1\n neq: x1_2 - x2_2 # tail\nend\n";
        let e = parse_spec(text).unwrap();
        assert_eq!(e.field().modulus(), DEFAULT_PRIME);
        assert_eq!(e.set().cells()[0].inequations().len(), 1);
    }

    #[test]
    fn empty_cell_list() {
        let e = parse_spec("prime 5\nhypergraph n=1 t=2\n").unwrap();
        assert!(e.set().cells().is_empty());
        assert_eq!(e.field().modulus(), 5);
    }

    #[test]
    fn prime_override() {
        let e = parse_spec_with_prime(AP, Some(2)).unwrap();
        assert_eq!(e.field().modulus(), 2);
    }

    #[test]
    fn malformed_exponent_is_located() {
        let err = parse_spec("hypergraph n=1 t=2\ncell\n  eq x1_1^ + 1\nend\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.column >= 6, "{err}");
    }

    #[test]
    fn errors() {
        let unknown = parse_spec("hypergraph n=1 t=2\ncell\n eq x3_1\nend\n").unwrap_err();
        assert_eq!(unknown.line, 3);
        assert!(unknown.message.contains("x3_1"), "{unknown}");
        assert!(parse_spec("cell\nend\n").is_err());
        assert!(parse_spec("hypergraph n=1 t=2\ncell\n eq x1_1\n").is_err());
        assert!(parse_spec("hypergraph n=1\n").is_err());
        assert!(parse_spec("prime 4\nhypergraph n=1 t=1\n").is_err());
        assert!(parse_spec("hypergraph n=1 t=1\nbogus\n").is_err());
    }
}
