//! Recursive-descent parser for polynomials in `x` over ℚ.
//!
//! ```text
//! expr   := sign? term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' uint)?
//! atom   := rational | 'x' | '(' expr ')'
//! ```
//!
//! Juxtaposition multiplies only when the right operand is `x` or a
//! parenthesised expression, so `3/4x^2` and `2(x+1)` parse but `2 3` does not.

use galois_core::exact::{BigInt, Rational};
use galois_core::{QPoly, RationalField};
use thiserror::Error;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    // next non-space char, with '−' read as '-'
    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next().map(|c| match c {
            '\u{2212}' => '-',
            c => c,
        })
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        self.pos += len;
        (len > 0).then(|| (start, &self.src[start..start + len]))
    }

    fn expr(&mut self) -> Result<QPoly, ParseError> {
        let mut negate = match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = QPoly::zero(RationalField);
        loop {
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn term(&mut self) -> Result<QPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some('x' | '(') => acc = acc.mul(&self.factor()?),
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<QPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.bump();
        let Some((start, e)) = self.digits() else {
            return err(self.pos, "expected an exponent");
        };
        match e.parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => err(start, format!("exponent exceeds {MAX_EXPONENT}")),
        }
    }

    fn atom(&mut self) -> Result<QPoly, ParseError> {
        match self.peek() {
            Some('x') => {
                self.bump();
                Ok(QPoly::x(RationalField))
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return err(self.pos, "expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let (_, num) = self.digits().expect("digit ahead");
                let num: BigInt = num.parse().expect("ascii digits");
                let mut value = Rational::from_integer(num);
                if self.peek() == Some('/') {
                    self.bump();
                    let Some((start, den)) = self.digits() else {
                        return err(self.pos, "expected a denominator");
                    };
                    let den: BigInt = den.parse().expect("ascii digits");
                    if den == BigInt::from(0) {
                        return err(start, "zero denominator");
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(QPoly::constant(RationalField, value))
            }
            Some(c) => err(self.pos, format!("unexpected '{c}'")),
            None => err(self.pos, "unexpected end of input"),
        }
    }
}

/// Parses a polynomial in `x` with rational coefficients.
pub fn parse_poly(s: &str) -> Result<QPoly, ParseError> {
    let mut p = Parser { src: s, pos: 0 };
    if p.peek().is_none() {
        return err(p.pos, "empty input");
    }
    let f = p.expr()?;
    match p.peek() {
        None => Ok(f),
        Some(c) => err(p.pos, format!("unexpected '{c}'")),
    }
}
