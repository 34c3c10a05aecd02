//! Text grammar for polynomials: identifiers, integer literals, `+ - * ^`,
//! and parentheses, e.g. `x1_2^2 - 3*y1`.

use thiserror::Error;

use crate::poly::{Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Op(char),
    End,
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Ring,
    line: usize,
    col_offset: usize,
}

/// Parses a polynomial over `ring`. Integer literals are reduced modulo the
/// ring's prime.
pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ParseError> {
    parse_polynomial_at(text, ring, 1, 1)
}

/// Like [`parse_polynomial`], with error locations offset to `line` and
/// `column` (1-based) of an enclosing document.
pub fn parse_polynomial_at(
    text: &str,
    ring: &Ring,
    line: usize,
    column: usize,
) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        toks: Vec::new(),
        pos: 0,
        ring,
        line,
        col_offset: column,
    };
    p.toks = p.lex(text)?;
    let poly = p.expr()?;
    match p.peek() {
        Tok::End => Ok(poly),
        other => Err(p.error(format!("unexpected {}", describe(&other)))),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(s) => format!("integer '{s}'"),
        Tok::Ident(s) => format!("identifier '{s}'"),
        Tok::Op(c) => format!("'{c}'"),
        Tok::End => "end of input".to_string(),
    }
}

impl<'a> Parser<'a> {
    fn lex(&self, text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
        let chars: Vec<char> = text.chars().collect();
        let mut out = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(chars[start..i].iter().collect()), start));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), start));
            } else if "+-*^()".contains(c) {
                out.push((Tok::Op(c), i));
                i += 1;
            } else {
                return Err(ParseError {
                    line: self.line,
                    column: self.col_offset + i,
                    message: format!("unexpected character '{c}'"),
                });
            }
        }
        out.push((Tok::End, chars.len()));
        Ok(out)
    }

    fn peek(&self) -> Tok {
        self.toks[self.pos].0.clone()
    }

    fn bump(&mut self) -> Tok {
        let t = self.peek();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            line: self.line,
            column: self.col_offset + self.toks[self.pos].1,
            message,
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Op('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Op('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.peek() == Tok::Op('*') {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Tok::Op('-') => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Op('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        self.bump();
        match self.peek() {
            Tok::Int(s) => {
                let e: u32 = s
                    .parse()
                    .ok()
                    .filter(|&e| e <= u16::MAX as u32)
                    .ok_or_else(|| self.error(format!("exponent '{s}' is too large")))?;
                self.bump();
                Ok(base.pow(e))
            }
            other => Err(self.error(format!(
                "malformed exponent: expected a nonnegative integer, found {}",
                describe(&other)
            ))),
        }
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Tok::Int(s) => {
                let p = self.ring.field().modulus();
                let v = s
                    .bytes()
                    .fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
                self.bump();
                Ok(Polynomial::constant(self.ring, v))
            }
            Tok::Ident(name) => match self.ring.var_index(&name) {
                Some(i) => {
                    self.bump();
                    Ok(Polynomial::var(self.ring, i))
                }
                None => Err(self.error(format!("unknown variable '{name}'"))),
            },
            Tok::Op('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Tok::Op(')') {
                    return Err(self.error("expected ')'".to_string()));
                }
                self.bump();
                Ok(inner)
            }
            other => Err(self.error(format!("expected a term, found {}", describe(&other)))),
        }
    }
}
