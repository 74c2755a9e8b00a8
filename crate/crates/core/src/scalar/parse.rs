//! Recursive-descent parser for the catalog scalar grammar:
//! signed rational literals, parameter names, `+ - * /`, `^` with integer
//! exponents, and parentheses. Examples: `-(q+1)`, `1/2`, `(p^2-1)/p`.

use super::{param_index, Rational, Scalar};
use crate::error::{Error, Result};

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        text,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::ScalarParse(format!("{msg} at byte {} in `{}`", self.pos, self.text))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add_ref(&self.term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = acc.mul_ref(&self.factor()?);
                }
                Some('/') => {
                    self.bump();
                    acc = acc.div_ref(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Scalar> {
        if self.peek() == Some('-') {
            self.bump();
            return Ok(self.factor()?.neg_ref());
        }
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.bump();
            let exp = self.integer()?;
            return base.pow(exp);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::from_rational(Rational::from_int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                let idx = param_index(&name)
                    .map_err(|_| Error::ScalarParse(format!("unknown parameter `{name}`")))?;
                Ok(Scalar::param(idx))
            }
            _ => Err(self.err("expected a literal, parameter, or `(`")),
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let value: i64 = digits
            .parse()
            .map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -value } else { value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_grammar_examples() {
        for (text, expected) in [
            ("-(q+1)", "-q - 1"),
            ("1/2", "1/2"),
            ("(p^2-1)/p", "(p^2 - 1)/(p)"),
            ("p^-1", "(1)/(p)"),
            ("2*p - p", "p"),
        ] {
            let v = parse_scalar(text).unwrap();
            assert_eq!(format!("{v}"), expected, "for input {text}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("p +").is_err());
        assert!(parse_scalar("(p").is_err());
        assert!(parse_scalar("x9").is_err());
        assert!(parse_scalar("1 1").is_err());
    }
}
