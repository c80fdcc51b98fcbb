//! The algebra specification language.
//!
//! ```text
//! field Q
//! quaternion H = (-1, -1)
//! element c in H = 1 + 2*j
//! algebra A = cay_m(H, c)
//! opposite B = op(A)
//! ```
//!
//! One statement per line; `#` starts a comment.

use std::fmt;

use dickson_core::algebra::{ElementErrorKind, ElementParseError};
use dickson_core::{
    dickson_double, make_etale, make_octonion, make_quaternion, make_quaternion_char2, AlgElement, Algebra,
    DoublingSpec, Error, EtaleKind, FieldSpec, FieldValue, Placement,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagnosticKind {
    SyntaxError,
    UnknownName,
    DuplicateName,
    FieldMismatch,
    WrongCharacteristic,
    InvalidConstruction,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagnosticKind::SyntaxError => "SyntaxError",
            DiagnosticKind::UnknownName => "UnknownName",
            DiagnosticKind::DuplicateName => "DuplicateName",
            DiagnosticKind::FieldMismatch => "FieldMismatch",
            DiagnosticKind::WrongCharacteristic => "WrongCharacteristic",
            DiagnosticKind::InvalidConstruction => "InvalidConstruction",
        })
    }
}

/// An error with a 1-based source location.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.col, self.kind, self.message)
    }
}

impl std::error::Error for Diagnostic {}

/// A piece of source text with the column it started at. Equality ignores the column.
#[derive(Clone, Debug, Eq)]
pub struct Arg {
    pub text: String,
    pub col: usize,
}

impl PartialEq for Arg {
    fn eq(&self, other: &Arg) -> bool {
        self.text == other.text
    }
}

impl Arg {
    fn new(text: &str, col: usize) -> Arg {
        Arg { text: text.to_string(), col }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldDecl {
    Rationals,
    Prime(u64),
    Function(u64, String),
}

impl FieldDecl {
    pub fn to_spec(&self) -> dickson_core::Result<FieldSpec> {
        match self {
            FieldDecl::Rationals => Ok(FieldSpec::Rationals),
            FieldDecl::Prime(p) => FieldSpec::prime(*p),
            FieldDecl::Function(p, v) => FieldSpec::rational_functions(*p, v),
        }
    }
}

impl fmt::Display for FieldDecl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDecl::Rationals => f.write_str("Q"),
            FieldDecl::Prime(p) => write!(f, "GF({p})"),
            FieldDecl::Function(p, v) => write!(f, "GF({p})({v})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EtaleDecl {
    Split,
    Sqrt(Arg),
    ArtinSchreier(Arg),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementValue {
    /// `[c0, c1, ...]` in basis order.
    List(Vec<Arg>),
    /// A label expression such as `1 + 2*i - j`.
    Expr(Arg),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stmt {
    Quaternion { name: Arg, a: Arg, b: Arg },
    Quaternion2 { name: Arg, a: Arg, b: Arg },
    Etale { name: Arg, kind: EtaleDecl },
    Octonion { name: Arg, a: Arg, b: Arg, e: Arg },
    Element { name: Arg, algebra: Arg, value: ElementValue },
    Algebra { name: Arg, placement: Placement, base: Arg, scalar: Arg },
    Opposite { name: Arg, of: Arg },
}

impl Stmt {
    pub fn name(&self) -> &Arg {
        match self {
            Stmt::Quaternion { name, .. }
            | Stmt::Quaternion2 { name, .. }
            | Stmt::Etale { name, .. }
            | Stmt::Octonion { name, .. }
            | Stmt::Element { name, .. }
            | Stmt::Algebra { name, .. }
            | Stmt::Opposite { name, .. } => name,
        }
    }
}

/// A statement with its line number. Equality ignores the line.
#[derive(Clone, Debug, Eq)]
pub struct Statement {
    pub line: usize,
    pub stmt: Stmt,
}

impl PartialEq for Statement {
    fn eq(&self, other: &Statement) -> bool {
        self.stmt == other.stmt
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecProgram {
    pub field: FieldDecl,
    pub statements: Vec<Statement>,
}

// ---- parsing ----

struct Cursor<'a> {
    line: usize,
    chars: &'a [char],
    pos: usize,
}

type PResult<T> = Result<T, Diagnostic>;

impl Cursor<'_> {
    fn col(&self) -> usize {
        self.pos + 1
    }

    fn err(&self, kind: DiagnosticKind, col: usize, msg: impl Into<String>) -> Diagnostic {
        Diagnostic { kind, line: self.line, col, message: msg.into() }
    }

    fn syntax(&self, msg: impl Into<String>) -> Diagnostic {
        self.err(DiagnosticKind::SyntaxError, self.col(), msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn ident(&mut self, what: &str) -> PResult<Arg> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
            self.pos += 1;
        }
        if start == self.pos || self.chars[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.syntax(format!("expected {what}")));
        }
        Ok(Arg::new(&self.chars[start..self.pos].iter().collect::<String>(), start + 1))
    }

    fn expect(&mut self, c: char) -> PResult<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{c}'")))
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let save = self.pos;
        let word = self.ident(&format!("'{kw}'"))?;
        if word.text != kw {
            self.pos = save;
            self.skip_ws();
            return Err(self.syntax(format!("expected '{kw}'")));
        }
        Ok(())
    }

    fn integer(&mut self) -> PResult<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map(|n| (n, start + 1)).map_err(|_| {
            self.pos = start;
            self.syntax("expected an integer")
        })
    }

    /// Text up to a top-level `,` or the closing `close`, trimmed.
    fn argument(&mut self, close: char) -> PResult<Arg> {
        self.skip_ws();
        let start = self.pos;
        let mut depth = 0usize;
        while self.pos < self.chars.len() {
            match self.chars[self.pos] {
                '(' | '[' => depth += 1,
                ')' | ']' if depth > 0 => depth -= 1,
                c if depth == 0 && (c == ',' || c == close) => break,
                _ => {}
            }
            self.pos += 1;
        }
        if self.pos >= self.chars.len() {
            return Err(self.syntax(format!("expected '{close}'")));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        let text = text.trim_end();
        if text.is_empty() {
            return Err(self.syntax("expected an argument"));
        }
        Ok(Arg::new(text, start + 1))
    }

    /// `open arg, arg, ... close` with exactly `n` arguments.
    fn arguments(&mut self, open: char, close: char, n: usize) -> PResult<Vec<Arg>> {
        self.expect(open)?;
        let mut out = Vec::with_capacity(n);
        loop {
            out.push(self.argument(close)?);
            if self.chars[self.pos] == close {
                self.pos += 1;
                break;
            }
            self.pos += 1;
        }
        if out.len() != n {
            let col = out[0].col;
            return Err(self.err(DiagnosticKind::SyntaxError, col, format!("expected {n} arguments, found {}", out.len())));
        }
        Ok(out)
    }

    fn rest(&mut self) -> PResult<Arg> {
        self.skip_ws();
        let text: String = self.chars[self.pos..].iter().collect();
        let text = text.trim_end();
        if text.is_empty() {
            return Err(self.syntax("expected an element expression"));
        }
        let arg = Arg::new(text, self.pos + 1);
        self.pos = self.chars.len();
        Ok(arg)
    }

    fn finish(&mut self) -> PResult<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.syntax("unexpected trailing input"))
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.find('#').map_or(line, |i| &line[..i])
}

fn parse_field(cur: &mut Cursor) -> PResult<FieldDecl> {
    cur.keyword("field")?;
    let word = cur.ident("a field: Q, GF(p) or GF(p)(t)")?;
    let decl = match word.text.as_str() {
        "Q" => FieldDecl::Rationals,
        "GF" => {
            cur.expect('(')?;
            let (p, col) = cur.integer()?;
            if !dickson_core::field::is_prime(p) || p >= 1 << 31 {
                return Err(cur.err(
                    DiagnosticKind::SyntaxError,
                    col,
                    format!("{p} is not a prime below 2^31; only GF(p) is supported, extensions via GF(p)(t)"),
                ));
            }
            cur.expect(')')?;
            if cur.peek() == Some('(') {
                cur.pos += 1;
                let var = cur.ident("a variable name")?;
                cur.expect(')')?;
                FieldDecl::Function(p, var.text)
            } else {
                FieldDecl::Prime(p)
            }
        }
        other => {
            return Err(cur.err(DiagnosticKind::SyntaxError, word.col, format!("unknown field '{other}'")));
        }
    };
    cur.finish()?;
    Ok(decl)
}

fn parse_stmt(cur: &mut Cursor) -> PResult<Stmt> {
    let kw = cur.ident("a statement keyword")?;
    let stmt = match kw.text.as_str() {
        "quaternion" | "quaternion2" | "octonion" => {
            let name = cur.ident("a name")?;
            cur.expect('=')?;
            let args = match kw.text.as_str() {
                "quaternion" => cur.arguments('(', ')', 2)?,
                "quaternion2" => cur.arguments('[', ')', 2)?,
                _ => cur.arguments('(', ')', 3)?,
            };
            let mut it = args.into_iter();
            let mut next = || it.next().expect("argument count checked");
            match kw.text.as_str() {
                "quaternion" => Stmt::Quaternion { name, a: next(), b: next() },
                "quaternion2" => Stmt::Quaternion2 { name, a: next(), b: next() },
                _ => Stmt::Octonion { name, a: next(), b: next(), e: next() },
            }
        }
        "etale" => {
            let name = cur.ident("a name")?;
            cur.expect('=')?;
            let which = cur.ident("split, sqrt(a) or artinschreier(a)")?;
            let kind = match which.text.as_str() {
                "split" => EtaleDecl::Split,
                "sqrt" => EtaleDecl::Sqrt(cur.arguments('(', ')', 1)?.remove(0)),
                "artinschreier" => EtaleDecl::ArtinSchreier(cur.arguments('(', ')', 1)?.remove(0)),
                other => {
                    return Err(cur.err(DiagnosticKind::SyntaxError, which.col, format!("unknown etale kind '{other}'")));
                }
            };
            Stmt::Etale { name, kind }
        }
        "element" => {
            let name = cur.ident("a name")?;
            cur.keyword("in")?;
            let algebra = cur.ident("an algebra name")?;
            cur.expect('=')?;
            let value = if cur.peek() == Some('[') {
                let mut list = Vec::new();
                cur.pos += 1;
                loop {
                    list.push(cur.argument(']')?);
                    let c = cur.chars[cur.pos];
                    cur.pos += 1;
                    if c == ']' {
                        break;
                    }
                }
                ElementValue::List(list)
            } else {
                ElementValue::Expr(cur.rest()?)
            };
            Stmt::Element { name, algebra, value }
        }
        "algebra" => {
            let name = cur.ident("a name")?;
            cur.expect('=')?;
            let word = cur.ident("a placement")?;
            let placement = Placement::from_name(&word.text).ok_or_else(|| {
                cur.err(
                    DiagnosticKind::SyntaxError,
                    word.col,
                    format!("unknown placement '{}'; expected cay, cay_m, cay_r or a starred variant", word.text),
                )
            })?;
            let mut args = cur.arguments('(', ')', 2)?;
            let scalar = args.pop().expect("two arguments");
            let base = args.pop().expect("two arguments");
            Stmt::Algebra { name, placement, base, scalar }
        }
        "opposite" => {
            let name = cur.ident("a name")?;
            cur.expect('=')?;
            cur.keyword("op")?;
            let of = cur.arguments('(', ')', 1)?.remove(0);
            Stmt::Opposite { name, of }
        }
        "field" => return Err(cur.err(DiagnosticKind::SyntaxError, kw.col, "field declared twice")),
        other => return Err(cur.err(DiagnosticKind::SyntaxError, kw.col, format!("unknown statement '{other}'"))),
    };
    cur.finish()?;
    Ok(stmt)
}

/// Parses a program. Only syntax is checked here; names and values are resolved by [`build`].
pub fn parse_spec(text: &str) -> Result<SpecProgram, Diagnostic> {
    let mut field = None;
    let mut statements = Vec::new();
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let chars: Vec<char> = strip_comment(raw).chars().collect();
        let mut cur = Cursor { line, chars: &chars, pos: 0 };
        if cur.at_end() {
            continue;
        }
        if field.is_none() {
            field = Some(parse_field(&mut cur)?);
        } else {
            statements.push(Statement { line, stmt: parse_stmt(&mut cur)? });
        }
    }
    let field = field.ok_or_else(|| Diagnostic {
        kind: DiagnosticKind::SyntaxError,
        line: last_line,
        col: 1,
        message: "missing field declaration".into(),
    })?;
    Ok(SpecProgram { field, statements })
}

/// Canonical source text; `parse_spec(&render(p)) == Ok(p)`.
pub fn render(program: &SpecProgram) -> String {
    let mut out = format!("field {}\n", program.field);
    for s in &program.statements {
        let line = match &s.stmt {
            Stmt::Quaternion { name, a, b } => format!("quaternion {} = ({}, {})", name.text, a.text, b.text),
            Stmt::Quaternion2 { name, a, b } => format!("quaternion2 {} = [{}, {})", name.text, a.text, b.text),
            Stmt::Etale { name, kind } => {
                let k = match kind {
                    EtaleDecl::Split => "split".to_string(),
                    EtaleDecl::Sqrt(a) => format!("sqrt({})", a.text),
                    EtaleDecl::ArtinSchreier(a) => format!("artinschreier({})", a.text),
                };
                format!("etale {} = {k}", name.text)
            }
            Stmt::Octonion { name, a, b, e } => {
                format!("octonion {} = ({}, {}, {})", name.text, a.text, b.text, e.text)
            }
            Stmt::Element { name, algebra, value } => {
                let v = match value {
                    ElementValue::List(items) => {
                        format!("[{}]", items.iter().map(|a| a.text.as_str()).collect::<Vec<_>>().join(", "))
                    }
                    ElementValue::Expr(e) => e.text.clone(),
                };
                format!("element {} in {} = {v}", name.text, algebra.text)
            }
            Stmt::Algebra { name, placement, base, scalar } => {
                format!("algebra {} = {}({}, {})", name.text, placement.name(), base.text, scalar.text)
            }
            Stmt::Opposite { name, of } => format!("opposite {} = op({})", name.text, of.text),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

// ---- evaluation ----

#[derive(Clone, Debug)]
pub enum Binding {
    Algebra(Algebra),
    Element(AlgElement),
}

/// The named objects of an evaluated program, in declaration order.
#[derive(Clone, Debug)]
pub struct Env {
    pub field: FieldSpec,
    bindings: Vec<(String, Binding)>,
}

impl Env {
    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, b)| b)
    }

    pub fn algebra(&self, name: &str) -> Option<&Algebra> {
        match self.get(name) {
            Some(Binding::Algebra(a)) => Some(a),
            _ => None,
        }
    }

    pub fn algebra_names(&self) -> Vec<&str> {
        self.bindings
            .iter()
            .filter(|(_, b)| matches!(b, Binding::Algebra(_)))
            .map(|(n, _)| n.as_str())
            .collect()
    }

    pub fn last_algebra(&self) -> Option<(&str, &Algebra)> {
        self.bindings.iter().rev().find_map(|(n, b)| match b {
            Binding::Algebra(a) => Some((n.as_str(), a)),
            _ => None,
        })
    }
}

fn classify(e: &Error) -> DiagnosticKind {
    match e {
        Error::FieldMismatch { .. } | Error::AlgebraMismatch => DiagnosticKind::FieldMismatch,
        Error::WrongCharacteristic { .. } | Error::CharTwoField => DiagnosticKind::WrongCharacteristic,
        Error::ValueParse(m) if m.contains("unknown symbol") => DiagnosticKind::UnknownName,
        Error::ValueParse(_) => DiagnosticKind::SyntaxError,
        _ => DiagnosticKind::InvalidConstruction,
    }
}

struct Builder {
    env: Env,
    line: usize,
}

impl Builder {
    fn diag(&self, kind: DiagnosticKind, col: usize, message: impl Into<String>) -> Diagnostic {
        Diagnostic { kind, line: self.line, col, message: message.into() }
    }

    fn math(&self, col: usize, e: Error) -> Diagnostic {
        self.diag(classify(&e), col, e.to_string())
    }

    fn scalar(&self, arg: &Arg) -> PResult<FieldValue> {
        self.env.field.parse_value(&arg.text).map_err(|e| self.math(arg.col, e))
    }

    fn algebra(&self, arg: &Arg) -> PResult<Algebra> {
        match self.env.get(&arg.text) {
            Some(Binding::Algebra(a)) => Ok(a.clone()),
            Some(Binding::Element(_)) => {
                Err(self.diag(DiagnosticKind::UnknownName, arg.col, format!("'{}' is an element, not an algebra", arg.text)))
            }
            None => Err(self.diag(DiagnosticKind::UnknownName, arg.col, format!("unknown algebra '{}'", arg.text))),
        }
    }

    fn element_error(&self, arg: &Arg, e: ElementParseError) -> Diagnostic {
        let col = arg.col + e.offset;
        match e.kind {
            ElementErrorKind::Syntax(m) => self.diag(DiagnosticKind::SyntaxError, col, m),
            ElementErrorKind::UnknownName(n) => self.diag(DiagnosticKind::UnknownName, col, format!("unknown name '{n}'")),
            ElementErrorKind::Math(m) => self.math(col, m),
        }
    }

    /// A declared element name, or a label expression over `alg`.
    fn element_in(&self, alg: &Algebra, arg: &Arg) -> PResult<AlgElement> {
        if let Some(Binding::Element(x)) = self.env.get(&arg.text) {
            if !x.algebra().same_instance(alg) {
                return Err(self.diag(
                    DiagnosticKind::FieldMismatch,
                    arg.col,
                    format!("element '{}' belongs to a different algebra", arg.text),
                ));
            }
            return Ok(x.clone());
        }
        alg.parse_element(&arg.text).map_err(|e| self.element_error(arg, e))
    }

    fn eval(&mut self, stmt: &Stmt) -> PResult<Binding> {
        let f = self.env.field.clone();
        let name_col = stmt.name().col;
        let built = match stmt {
            Stmt::Quaternion { a, b, .. } => {
                make_quaternion(&f, &self.scalar(a)?, &self.scalar(b)?).map_err(|e| self.math(a.col, e))?
            }
            Stmt::Quaternion2 { a, b, .. } => {
                make_quaternion_char2(&f, &self.scalar(a)?, &self.scalar(b)?).map_err(|e| self.math(a.col, e))?
            }
            Stmt::Octonion { a, b, e, .. } => make_octonion(&f, &self.scalar(a)?, &self.scalar(b)?, &self.scalar(e)?)
                .map_err(|err| self.math(a.col, err))?,
            Stmt::Etale { kind, .. } => {
                let (k, col) = match kind {
                    EtaleDecl::Split => (EtaleKind::Split, name_col),
                    EtaleDecl::Sqrt(a) => (EtaleKind::Sqrt(self.scalar(a)?), a.col),
                    EtaleDecl::ArtinSchreier(a) => (EtaleKind::ArtinSchreier(self.scalar(a)?), a.col),
                };
                make_etale(&f, &k).map_err(|e| self.math(col, e))?
            }
            Stmt::Element { algebra, value, .. } => {
                let alg = self.algebra(algebra)?;
                let x = match value {
                    ElementValue::List(items) => {
                        let coeffs = items.iter().map(|a| self.scalar(a)).collect::<PResult<Vec<_>>>()?;
                        if coeffs.len() != alg.dim() {
                            let col = items.first().map_or(name_col, |a| a.col);
                            return Err(self.diag(
                                DiagnosticKind::InvalidConstruction,
                                col,
                                format!("expected {} coefficients, found {}", alg.dim(), coeffs.len()),
                            ));
                        }
                        alg.element(coeffs).map_err(|e| self.math(name_col, e))?
                    }
                    ElementValue::Expr(e) => self.element_in(&alg, e)?,
                };
                return Ok(Binding::Element(x));
            }
            Stmt::Algebra { placement, base, scalar, .. } => {
                let d = self.algebra(base)?;
                let c = self.element_in(&d, scalar)?;
                let spec = DoublingSpec::new(&d, &c, *placement).map_err(|e| self.math(scalar.col, e))?;
                dickson_double(&spec).map_err(|e| self.math(scalar.col, e))?
            }
            Stmt::Opposite { of, .. } => self.algebra(of)?.opposite(),
        };
        Ok(Binding::Algebra(built))
    }
}

/// Resolves names and constructs every algebra and element.
pub fn build(program: &SpecProgram) -> Result<Env, Diagnostic> {
    let field = program.field.to_spec().map_err(|e| Diagnostic {
        kind: DiagnosticKind::SyntaxError,
        line: 1,
        col: 7,
        message: e.to_string(),
    })?;
    let mut b = Builder { env: Env { field, bindings: Vec::new() }, line: 1 };
    for s in &program.statements {
        b.line = s.line;
        let name = s.stmt.name();
        if b.env.get(&name.text).is_some() {
            return Err(b.diag(DiagnosticKind::DuplicateName, name.col, format!("'{}' is already defined", name.text)));
        }
        let binding = b.eval(&s.stmt)?;
        b.env.bindings.push((name.text.clone(), binding));
    }
    Ok(b.env)
}

/// `parse_spec` followed by `build`.
pub fn load(text: &str) -> Result<(SpecProgram, Env), Diagnostic> {
    let program = parse_spec(text)?;
    let env = build(&program)?;
    Ok((program, env))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kind_at(text: &str) -> (DiagnosticKind, usize, usize) {
        let d = load(text).unwrap_err();
        (d.kind, d.line, d.col)
    }

    #[test]
    fn minimal_program() {
        let (p, env) = load("field Q\nquaternion D = (-1,-1)\nalgebra A = cay(D, i)").unwrap();
        assert_eq!(p.statements.len(), 2);
        assert_eq!(env.algebra("A").unwrap().dim(), 8);
    }

    #[test]
    fn gf4_is_rejected() {
        assert_eq!(kind_at("field GF(4)"), (DiagnosticKind::SyntaxError, 1, 10));
    }

    #[test]
    fn char2_quaternion_needs_char2() {
        let (k, line, _) = kind_at("field Q\nquaternion2 D = [1,1)");
        assert_eq!((k, line), (DiagnosticKind::WrongCharacteristic, 2));
        let (k, _, _) = kind_at("field GF(2)(t)\nquaternion D = (t, t)");
        assert_eq!(k, DiagnosticKind::WrongCharacteristic);
    }

    #[test]
    fn unknown_names_point_at_the_name() {
        assert_eq!(kind_at("field Q\nalgebra A = cay(D, i)"), (DiagnosticKind::UnknownName, 2, 17));
        assert_eq!(kind_at("field Q\nquaternion D = (-1,-1)\nalgebra A = cay(D, 2*q)"), (DiagnosticKind::UnknownName, 3, 22));
        assert_eq!(kind_at("field Q\nquaternion D = (x,-1)"), (DiagnosticKind::UnknownName, 2, 17));
    }

    #[test]
    fn element_from_another_algebra() {
        let text = "field Q\nquaternion D = (-1,-1)\nquaternion E = (-1,-3)\nelement c in E = j\nalgebra A = cay(D, c)";
        assert_eq!(kind_at(text), (DiagnosticKind::FieldMismatch, 5, 20));
    }

    #[test]
    fn duplicates_and_syntax() {
        assert_eq!(kind_at("field Q\nquaternion D = (-1,-1)\netale D = split").0, DiagnosticKind::DuplicateName);
        assert_eq!(kind_at("field Q\nquaternion D = (-1 -1)"), (DiagnosticKind::SyntaxError, 2, 17));
        assert_eq!(kind_at("quaternion D = (-1,-1)").0, DiagnosticKind::SyntaxError);
        assert_eq!(kind_at("field Q\nalgebra A = cay_x(D, i)"), (DiagnosticKind::SyntaxError, 2, 13));
        assert_eq!(kind_at("field Q\nfield Q").0, DiagnosticKind::SyntaxError);
    }

    #[test]
    fn coefficient_lists_and_expressions_agree() {
        let text = "field GF(5)\nquaternion D = (1,1)\nelement x in D = [1, 0, 2, 4]\nelement y in D = 1 + 2*j - k";
        let (_, env) = load(text).unwrap();
        let (Some(Binding::Element(x)), Some(Binding::Element(y))) = (env.get("x"), env.get("y")) else {
            panic!("elements missing")
        };
        assert_eq!(x, y);
    }

    #[test]
    fn render_round_trips() {
        let text = "# comment\nfield GF(2)(t)\n\nquaternion2 Q = [t, t)  # char 2\netale K = artinschreier(t^2 + t + 1)\n\
                    element c in Q = [0, 1, 0, 0]\nalgebra A = cay(Q,  c)\nopposite B = op(A)\n";
        let p = parse_spec(text).unwrap();
        let r = render(&p);
        assert_eq!(parse_spec(&r).unwrap(), p);
        assert!(r.starts_with("field GF(2)(t)\nquaternion2 Q = [t, t)\n"));
    }
}
