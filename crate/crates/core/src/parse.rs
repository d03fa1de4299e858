//! Ideal files.
//!
//! ```text
//! #! name quintic
//! ring 4
//! field q            # optional; or `field fp 32003`
//! gens:
//! x1*x2 - x0*x3
//! x1^4 - x0^3*x2
//! ```
//!
//! `#` starts a comment. Lines starting with `#!` carry `key value`
//! metadata. Expressions use integers, variables `x<k>`, `+ - * ^` and
//! parentheses; `^` binds tighter than `*`, which binds tighter than `+`/`-`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldMode};
use crate::ring::{Monomial, PolyIdeal, Polynomial, RingCtx};

/// A parsed file before coefficients are interpreted in a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealFile {
    pub num_vars: usize,
    pub field: Option<FieldMode>,
    /// Generator text with its 1-based line number.
    pub generators: Vec<(usize, String)>,
    pub metadata: BTreeMap<String, String>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut num_vars = None;
        let mut field = None;
        let mut generators = Vec::new();
        let mut metadata = BTreeMap::new();
        let mut in_gens = false;
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            if let Some(meta) = raw.trim_start().strip_prefix("#!") {
                let meta = meta.trim();
                let (key, value) = meta.split_once(char::is_whitespace).unwrap_or((meta, ""));
                if !key.is_empty() {
                    metadata.insert(key.to_string(), value.trim().to_string());
                }
                continue;
            }
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let column = content.len() - content.trim_start().len() + 1;
            if in_gens {
                generators.push((line_no, content.to_string()));
                continue;
            }
            let words: Vec<&str> = trimmed.split_whitespace().collect();
            match words.as_slice() {
                ["ring", k] => {
                    let k: usize = k
                        .parse()
                        .map_err(|_| parse_err(line_no, column, format!("bad variable count {k:?}")))?;
                    if k == 0 {
                        return Err(parse_err(line_no, column, "ring needs at least one variable"));
                    }
                    num_vars = Some(k);
                }
                ["field", "q"] => field = Some(FieldMode::Rationals),
                ["field", "fp", p] => {
                    let p: u32 = p
                        .parse()
                        .map_err(|_| parse_err(line_no, column, format!("bad prime {p:?}")))?;
                    field = Some(
                        FieldMode::prime(p).map_err(|e| parse_err(line_no, column, e.to_string()))?,
                    );
                }
                ["gens:"] => {
                    if num_vars.is_none() {
                        return Err(parse_err(line_no, column, "`gens:` before `ring`"));
                    }
                    in_gens = true;
                }
                _ => {
                    return Err(parse_err(
                        line_no,
                        column,
                        format!("expected `ring <k>`, `field ...` or `gens:`, found {trimmed:?}"),
                    ))
                }
            }
        }
        let num_vars = num_vars.ok_or_else(|| parse_err(1, 1, "missing `ring <k>` line"))?;
        if !in_gens {
            return Err(parse_err(text.lines().count().max(1), 1, "missing `gens:` line"));
        }
        if generators.is_empty() {
            return Err(parse_err(text.lines().count().max(1), 1, "no generators"));
        }
        Ok(IdealFile {
            num_vars,
            field,
            generators,
            metadata,
        })
    }

    /// Field mode: the explicit override, else the file's, else Q.
    pub fn field_mode(&self, override_mode: Option<FieldMode>) -> FieldMode {
        override_mode.or(self.field).unwrap_or(FieldMode::Rationals)
    }

    pub fn to_ideal<K: Field>(&self, mode: FieldMode) -> Result<PolyIdeal<K>> {
        let ring = RingCtx::new(self.num_vars, mode)?;
        let mut gens = Vec::with_capacity(self.generators.len());
        for (line, text) in &self.generators {
            let p: Polynomial<K> = parse_polynomial(text, *line, self.num_vars, mode)?;
            let column = text.len() - text.trim_start().len() + 1;
            if p.is_zero() {
                return Err(parse_err(*line, column, "generator is the zero polynomial"));
            }
            if !p.is_homogeneous() {
                return Err(parse_err(*line, column, "generator is not homogeneous"));
            }
            gens.push(p);
        }
        PolyIdeal::new(ring, gens)
    }
}

/// Parse a whole file straight to an ideal.
pub fn parse_ideal<K: Field>(text: &str, override_mode: Option<FieldMode>) -> Result<PolyIdeal<K>> {
    let file = IdealFile::parse(text)?;
    let mode = file.field_mode(override_mode);
    file.to_ideal(mode)
}

/// Render an ideal in the file format (round-trips through [`parse_ideal`]).
pub fn render_ideal<K: Field>(ideal: &PolyIdeal<K>, metadata: &[(&str, &str)]) -> String {
    let mut out = String::new();
    for (k, v) in metadata {
        out.push_str(&format!("#! {k} {v}\n"));
    }
    out.push_str(&format!("ring {}\n", ideal.ring().num_vars()));
    match ideal.ring().field() {
        FieldMode::Rationals => out.push_str("field q\n"),
        FieldMode::PrimeField(p) => out.push_str(&format!("field fp {p}\n")),
    }
    out.push_str("gens:\n");
    for g in ideal.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexed {
    tokens: Vec<(Tok, usize)>,
    end: usize,
}

fn lex(text: &str, line: usize, num_vars: usize) -> Result<Lexed> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            tokens.push((t, col));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            tokens.push((Tok::Int(s.parse().expect("digits")), col));
            continue;
        }
        if c == 'x' {
            let start = i + 1;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(parse_err(line, col, "expected a variable index after `x`"));
            }
            let s: String = chars[start..i].iter().collect();
            let idx: usize = s
                .parse()
                .map_err(|_| parse_err(line, col, format!("variable index {s} is too large")))?;
            if idx >= num_vars {
                return Err(parse_err(
                    line,
                    col,
                    format!("unknown variable x{idx} (ring has x0..x{})", num_vars - 1),
                ));
            }
            tokens.push((Tok::Var(idx), col));
            continue;
        }
        return Err(parse_err(line, col, format!("unexpected character {c:?}")));
    }
    Ok(Lexed {
        tokens,
        end: chars.len() + 1,
    })
}

struct Parser<'a, K: Field> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    end: usize,
    line: usize,
    num_vars: usize,
    mode: FieldMode,
    _field: std::marker::PhantomData<K>,
}

impl<K: Field> Parser<'_, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        parse_err(self.line, self.column(), msg)
    }

    fn constant(&self, v: &BigInt) -> Result<Polynomial<K>> {
        let c = K::from_bigint(v, self.mode)?;
        Ok(if c.is_zero() {
            Polynomial::zero(self.num_vars)
        } else {
            Polynomial::constant(c, self.num_vars)
        })
    }

    // expr := ['-'] term (('+' | '-') term)*
    fn expr(&mut self) -> Result<Polynomial<K>> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            if self.peek() == Some(&Tok::Plus) {
                self.pos += 1;
            }
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor (('*' | '/') factor)*   (division by integers only)
    fn term(&mut self) -> Result<Polynomial<K>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.checked_mul(&self.factor()?)?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.column();
                    let Some(Tok::Int(d)) = self.peek().cloned() else {
                        return Err(self.err("only integer denominators are allowed"));
                    };
                    self.pos += 1;
                    let d = K::from_bigint(&d, self.mode)?;
                    let inv = d
                        .inv()
                        .ok_or_else(|| parse_err(self.line, col, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    // factor := primary ('^' int)?
    fn factor(&mut self) -> Result<Polynomial<K>> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let Some(Tok::Int(e)) = self.peek().cloned() else {
                return Err(self.err("expected a nonnegative integer exponent"));
            };
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent is too large"))?;
            if e > i32::MAX as u32 {
                return Err(self.err("exponent is too large"));
            }
            self.pos += 1;
            if e == 0 {
                return self.constant(&BigInt::from(1));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    // primary := int | var | '(' expr ')' | '-' primary
    fn primary(&mut self) -> Result<Polynomial<K>> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                self.constant(&v)
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                let one = K::from_i64(1, self.mode)?;
                Ok(Polynomial::monomial(Monomial::var(i, self.num_vars), one))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(self.primary()?.neg())
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parse a single polynomial expression.
pub fn parse_polynomial<K: Field>(
    text: &str,
    line: usize,
    num_vars: usize,
    mode: FieldMode,
) -> Result<Polynomial<K>> {
    let lexed = lex(text, line, num_vars)?;
    let mut p = Parser::<K> {
        toks: &lexed.tokens,
        pos: 0,
        end: lexed.end,
        line,
        num_vars,
        mode,
        _field: std::marker::PhantomData,
    };
    let poly = p.expr()?;
    if p.pos != lexed.tokens.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}
