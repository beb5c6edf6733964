//! Text grammar for polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor | '/' factor)*
//! factor := atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```
//!
//! Variables are `x0`..`x9`, with `x`, `y`, `z`, `w` as synonyms for
//! `x0`..`x3`. Division is only allowed by nonzero constants.

use num_bigint::BigInt;

use super::poly::{Polynomial, Rational};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
    line: usize,
    line_start: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: at - self.line_start + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(self.error(at, "division only by a nonzero constant"));
                    }
                    acc = acc.scale(&d.terms()[0].1.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error(at, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(start, "expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let at = self.pos;
        match self.peek() {
            None => Err(self.error(self.pos, "unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error(self.pos, "expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.nvars, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let idx = match name {
                    "x" => 0,
                    "y" => 1,
                    "z" => 2,
                    "w" => 3,
                    _ => match name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()) {
                        Some(i) if i < 10 && name.len() == 2 => i,
                        _ => return Err(self.error(start, format!("unknown variable '{name}'"))),
                    },
                };
                if idx >= self.nvars {
                    return Err(self.error(start, format!("variable '{name}' exceeds {} variables", self.nvars)));
                }
                Ok(Polynomial::var(self.nvars, idx))
            }
            Some(c) => Err(self.error(at.max(self.pos), format!("unexpected character '{}'", c as char))),
        }
    }
}

fn parse_at(text: &str, nvars: usize, line: usize) -> Result<Polynomial> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, nvars, line, line_start: 0 };
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(p.pos, "trailing input"));
    }
    Ok(f)
}

/// Parses a single polynomial in `nvars` variables.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    if nvars > super::MAX_VARS {
        return Err(Error::TooManyVariables(nvars));
    }
    parse_at(text, nvars, 1)
}

/// Parses a list of polynomials separated by commas, semicolons or newlines.
/// Lines starting with `#` are skipped. Error positions refer to the full text.
pub fn parse_polynomial_list(text: &str, nvars: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut offset = 0;
        for piece in line.split([',', ';']) {
            if !piece.trim().is_empty() {
                let f = parse_at(piece, nvars, lineno + 1).map_err(|e| match e {
                    Error::Parse { line, column, message } => Error::Parse { line, column: column + offset, message },
                    other => other,
                })?;
                out.push(f);
            }
            offset += piece.len() + 1;
        }
    }
    Ok(out)
}

/// Largest variable index mentioned in `text`, plus one (at least 1).
pub fn infer_nvars(text: &str) -> usize {
    let b = text.as_bytes();
    let mut n = 1;
    let mut i = 0;
    while i < b.len() {
        if b[i].is_ascii_alphabetic() && (i == 0 || !b[i - 1].is_ascii_alphanumeric()) {
            let start = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let name = &text[start..i];
            let idx = match name {
                "x" => Some(0),
                "y" => Some(1),
                "z" => Some(2),
                "w" => Some(3),
                _ => name.strip_prefix('x').and_then(|d| d.parse::<usize>().ok()),
            };
            if let Some(k) = idx {
                n = n.max(k + 1);
            }
        } else {
            i += 1;
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::poly::rat;
    use crate::polyring::Monomial;

    #[test]
    fn synonyms_and_precedence() {
        let f = parse_polynomial("x*y^2 - 3/4*(z + x)", 3).unwrap();
        let g = parse_polynomial("x0*x1^2 - 3/4*x2 - 3/4*x0", 3).unwrap();
        assert_eq!(f, g);
        assert_eq!(f.coefficient(&Monomial::from_exps(&[1, 0, 0])), Rational::new(BigInt::from(-3), BigInt::from(4)));
    }

    #[test]
    fn whitespace_insensitive() {
        assert_eq!(parse_polynomial(" x0 ^ 2+  2 * x1 ", 2).unwrap(), parse_polynomial("x0^2+2*x1", 2).unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        match parse_polynomial("x0 + $", 3) {
            Err(Error::Parse { line: 1, column: 6, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("x3", 3).is_err());
        assert!(parse_polynomial("x0/x1", 3).is_err());
        assert!(parse_polynomial("(x0", 3).is_err());
    }

    #[test]
    fn list_parsing() {
        let fs = parse_polynomial_list("# comment\nx0^2, x1^2\n\nx0*x2", 3).unwrap();
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[2], parse_polynomial("x0*x2", 3).unwrap());
        match parse_polynomial_list("x0, x1 +\nx2", 3) {
            Err(Error::Parse { line: 1, column, .. }) => assert!(column >= 8),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn constants() {
        assert_eq!(parse_polynomial("-6/4", 1).unwrap(), Polynomial::constant(1, Rational::new(BigInt::from(-3), BigInt::from(2))));
        assert_eq!(parse_polynomial("2^3", 1).unwrap(), Polynomial::constant(1, rat(8)));
    }

    #[test]
    fn infers_variable_count() {
        assert_eq!(infer_nvars("x0^2, x1^2"), 2);
        assert_eq!(infer_nvars("x*z"), 3);
        assert_eq!(infer_nvars("x7 + 1"), 8);
    }
}
