//! Text form of a series, e.g. `1 + x`, `-x`, `2*x^1.5 - 0.5 x y^2`.
//!
//! ```text
//! expr   := sign? term (("+" | "-") term)*
//! term   := number? ("*"? var)*          (at least one of the two)
//! var    := ("x" | "y") ("^" number)?
//! number := digits ["." digits] [("e" | "E") sign? digits]
//! ```
//!
//! Whitespace is ignored between tokens. Exponents are unsigned, so only
//! non-negative powers can be written.

use crate::error::{Error, Result};
use crate::series::{FracSeries, FracTerm};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
            p.pos - s
        };
        let mut n = digits(self);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            n += digits(self);
        }
        if n == 0 {
            self.pos = start;
            return self.error("expected number");
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let mark = self.pos;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            if digits(self) == 0 {
                self.pos = mark;
                return self.error("expected exponent digits");
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<f64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.error("malformed number")
            }
        }
    }

    fn term(&mut self, sign: f64) -> Result<FracTerm> {
        let mut term = FracTerm::new(sign, 0.0, 0.0);
        let mut seen = false;
        if matches!(self.peek(), Some(b'0'..=b'9' | b'.')) {
            term.coeff *= self.number()?;
            seen = true;
        }
        loop {
            let star = self.peek() == Some(b'*');
            if star {
                self.pos += 1;
            }
            let var = match self.peek() {
                Some(c @ (b'x' | b'y')) => c,
                _ if star => return self.error("expected 'x' or 'y' after '*'"),
                _ => break,
            };
            self.pos += 1;
            let exponent = if self.peek() == Some(b'^') {
                self.pos += 1;
                if matches!(self.peek(), Some(b'-')) {
                    return self.error("exponents must be non-negative");
                }
                self.number()?
            } else {
                1.0
            };
            if var == b'x' {
                term.px += exponent;
            } else {
                term.py += exponent;
            }
            seen = true;
        }
        if !seen {
            return self.error("expected number or variable");
        }
        Ok(term)
    }
}

/// Parses a series expression into a normalized [`FracSeries`].
pub fn parse_series(text: &str) -> Result<FracSeries> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut sign = match p.peek() {
        Some(b'-') => {
            p.pos += 1;
            -1.0
        }
        Some(b'+') => {
            p.pos += 1;
            1.0
        }
        _ => 1.0,
    };
    loop {
        terms.push(p.term(sign)?);
        sign = match p.peek() {
            Some(b'+') => 1.0,
            Some(b'-') => -1.0,
            None => break,
            Some(_) => return p.error("expected '+', '-' or end of input"),
        };
        p.pos += 1;
    }
    Ok(FracSeries::from_terms(terms))
}
