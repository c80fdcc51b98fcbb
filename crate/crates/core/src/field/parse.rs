//! Scalar expression parser: integers, the field variable, `+ - * / ^` and parentheses.

use num_bigint::BigInt;

use super::{FieldSpec, FieldValue};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn lex(text: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Int(s.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::ValueParse(format!("unexpected character '{c}' in \"{text}\"")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a FieldSpec,
    toks: Vec<Tok>,
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::ValueParse(format!("{what} in \"{}\"", self.text))
    }

    fn peek_op(&self, c: char) -> bool {
        self.toks.get(self.pos) == Some(&Tok::Op(c))
    }

    fn expr(&mut self) -> Result<FieldValue> {
        let mut acc = self.term()?;
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = acc.try_add(&self.term()?)?;
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = acc.try_sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldValue> {
        let mut acc = self.unary()?;
        loop {
            if self.peek_op('*') {
                self.pos += 1;
                acc = acc.try_mul(&self.unary()?)?;
            } else if self.peek_op('/') {
                self.pos += 1;
                acc = acc.try_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldValue> {
        if self.peek_op('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        if self.peek_op('+') {
            self.pos += 1;
            return self.unary();
        }
        let base = self.atom()?;
        if self.peek_op('^') {
            self.pos += 1;
            let negative = self.peek_op('-');
            if negative {
                self.pos += 1;
            }
            let Some(Tok::Int(e)) = self.toks.get(self.pos).cloned() else {
                return Err(self.err("expected integer exponent"));
            };
            self.pos += 1;
            let e: i64 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            return base.powi(if negative { -e } else { e });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FieldValue> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(self.field.from_bigint(&n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.field.variable_name() {
                    Some(v) if v == name => Ok(self.field.variable().expect("function field")),
                    _ => Err(self.err(&format!("unknown symbol '{name}' for field {}", self.field))),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.peek_op(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err("expected a value")),
        }
    }
}

pub(super) fn parse_scalar(field: &FieldSpec, text: &str) -> Result<FieldValue> {
    let toks = lex(text)?;
    let mut p = Parser { field, toks, pos: 0, text };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_powers() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse_value("1+2*3").unwrap(), q.from_i64(7));
        assert_eq!(q.parse_value("-2^2").unwrap(), q.from_i64(-4));
        assert_eq!(q.parse_value("(1+1)^3/4").unwrap(), q.from_i64(2));
        assert_eq!(q.parse_value("2^-1").unwrap(), q.from_ratio(1, 2).unwrap());
    }

    #[test]
    fn errors() {
        let q = FieldSpec::Rationals;
        assert!(q.parse_value("t").is_err());
        assert!(q.parse_value("1/0").is_err());
        assert!(q.parse_value("1 2").is_err());
        assert!(q.parse_value("(1").is_err());
        assert!(q.parse_value("").is_err());
    }

    #[test]
    fn residues_reduce() {
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.parse_value("7").unwrap().residue(), Some(2));
        assert_eq!(f.parse_value("-1").unwrap().residue(), Some(4));
        assert_eq!(f.parse_value("1/2").unwrap().residue(), Some(3));
    }
}
