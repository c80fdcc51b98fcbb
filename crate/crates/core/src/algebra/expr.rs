//! Element expressions over basis labels, e.g. `1 + 2*i - jl` or `(t+1)*il`.
//!
//! Letters are tokenized by longest match against the labels (and the field
//! variable), so `il` is one label even though `i` and `l` also exist.

use std::fmt;

use num_bigint::BigInt;

use super::{AlgElement, Algebra};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementErrorKind {
    Syntax(String),
    UnknownName(String),
    Math(Error),
}

/// Parse failure with a character offset into the parsed text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementParseError {
    pub offset: usize,
    pub kind: ElementErrorKind,
}

impl fmt::Display for ElementParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ElementErrorKind::Syntax(m) => write!(f, "{m} at offset {}", self.offset),
            ElementErrorKind::UnknownName(n) => write!(f, "unknown name '{n}' at offset {}", self.offset),
            ElementErrorKind::Math(e) => write!(f, "{e} at offset {}", self.offset),
        }
    }
}

impl std::error::Error for ElementParseError {}

impl From<ElementParseError> for Error {
    fn from(e: ElementParseError) -> Error {
        match e.kind {
            ElementErrorKind::Math(m) => m,
            _ => Error::ValueParse(e.to_string()),
        }
    }
}

#[derive(Clone, Debug)]
enum Tok {
    Int(BigInt),
    Label(usize),
    Var,
    Op(char),
}

fn lex(alg: &Algebra, text: &str) -> Result<Vec<(usize, Tok)>, ElementParseError> {
    let chars: Vec<char> = text.chars().collect();
    let var: Option<Vec<char>> = alg.field().variable_name().map(|v| v.chars().collect());
    let labels: Vec<(usize, Vec<char>)> = alg
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.chars().next().is_some_and(|c| !c.is_ascii_digit()))
        .map(|(i, l)| (i, l.chars().collect()))
        .collect();
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
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let rest = &chars[i..];
            let best = labels
                .iter()
                .filter(|(_, l)| rest.starts_with(l))
                .max_by_key(|(_, l)| l.len())
                .map(|(idx, l)| (Tok::Label(*idx), l.len()));
            let var_len = var.as_ref().filter(|v| rest.starts_with(v)).map(Vec::len);
            let pick = match (best, var_len) {
                (Some((_, n)), Some(m)) if m > n => (Tok::Var, m),
                (Some(b), _) => b,
                (None, Some(m)) => (Tok::Var, m),
                (None, None) => {
                    let end = rest.iter().position(|c| !(c.is_alphanumeric() || *c == '_')).unwrap_or(rest.len());
                    return Err(ElementParseError {
                        offset: i,
                        kind: ElementErrorKind::UnknownName(rest[..end].iter().collect()),
                    });
                }
            };
            out.push((i, pick.0));
            i += pick.1;
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ElementParseError { offset: i, kind: ElementErrorKind::Syntax(format!("unexpected character '{c}'")) });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alg: &'a Algebra,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

type PResult<T> = Result<T, ElementParseError>;

impl Parser<'_> {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn syntax(&self, msg: &str) -> ElementParseError {
        ElementParseError { offset: self.offset(), kind: ElementErrorKind::Syntax(msg.to_string()) }
    }

    fn math(&self, offset: usize, e: Error) -> ElementParseError {
        ElementParseError { offset, kind: ElementErrorKind::Math(e) }
    }

    fn is_op(&self, c: char) -> bool {
        matches!(self.toks.get(self.pos), Some((_, Tok::Op(o))) if *o == c)
    }

    fn expr(&mut self) -> PResult<AlgElement> {
        let mut acc = self.term()?;
        loop {
            if self.is_op('+') {
                self.pos += 1;
                acc = &acc + &self.term()?;
            } else if self.is_op('-') {
                self.pos += 1;
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> PResult<AlgElement> {
        let mut acc = self.unary()?;
        loop {
            if self.is_op('*') {
                self.pos += 1;
                let rhs = self.unary()?;
                acc = &acc * &rhs;
            } else if self.is_op('/') {
                self.pos += 1;
                let at = self.offset();
                let rhs = self.unary()?;
                if !rhs.is_scalar() {
                    return Err(ElementParseError { offset: at, kind: ElementErrorKind::Syntax("can only divide by a scalar".into()) });
                }
                let inv = rhs.scalar_part().inv().map_err(|e| self.math(at, e))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> PResult<AlgElement> {
        if self.is_op('-') {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        if self.is_op('+') {
            self.pos += 1;
            return self.unary();
        }
        let at = self.offset();
        let base = self.atom()?;
        if !self.is_op('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = self.is_op('-');
        if negative {
            self.pos += 1;
        }
        let Some((_, Tok::Int(e))) = self.toks.get(self.pos).cloned() else {
            return Err(self.syntax("expected integer exponent"));
        };
        self.pos += 1;
        if !base.is_scalar() {
            return Err(ElementParseError { offset: at, kind: ElementErrorKind::Syntax("powers are only allowed on scalars".into()) });
        }
        let e: i64 = i64::try_from(e).map_err(|_| self.syntax("exponent too large"))?;
        let s = base.scalar_part().powi(if negative { -e } else { e }).map_err(|err| self.math(at, err))?;
        Ok(self.alg.scalar(&s))
    }

    fn atom(&mut self) -> PResult<AlgElement> {
        let Some((_, tok)) = self.toks.get(self.pos).cloned() else {
            return Err(self.syntax("expected a term"));
        };
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(self.alg.scalar(&self.alg.field().from_bigint(&n))),
            Tok::Label(i) => Ok(self.alg.basis(i)),
            Tok::Var => Ok(self.alg.scalar(&self.alg.field().variable().expect("function field"))),
            Tok::Op('(') => {
                let v = self.expr()?;
                if !self.is_op(')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Op(c) => {
                self.pos -= 1;
                Err(self.syntax(&format!("unexpected '{c}'")))
            }
        }
    }
}

pub(super) fn parse_element(alg: &Algebra, text: &str) -> PResult<AlgElement> {
    let toks = lex(alg, text)?;
    let mut p = Parser { alg, toks, pos: 0, end: text.chars().count() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.syntax("expected an operator"));
    }
    Ok(v)
}
