//! Canonical text form of polynomials and its parser.
//!
//! Grammar accepted by the parser (whitespace anywhere):
//! `expr := ['-'] term (('+' | '-') term)*`,
//! `term := factor ('*' factor)*`, `factor := atom ['^' int]`,
//! `atom := int ['/' int] | ident | '(' expr ')'`.
//! The Unicode minus sign is accepted as `-`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::polyalg::context::Ctx;
use crate::polyalg::poly::Polynomial;

impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let ctx = self.ctx().clone();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let (neg, abs) = c.sign_split();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            let is_unit = abs == C::one();
            let is_const = m.iter().all(|&e| e == 0);
            if !is_unit || is_const {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(ctx.var(i).name.clone()),
                    _ => factors.push(format!("{}^{}", ctx.var(i).name, e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' | '\u{00b7}' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(chars[start..i].iter().collect())));
                continue;
            }
            _ if c.is_alphabetic() => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            _ => return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") }),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, C> {
    ctx: &'a Ctx,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    _c: std::marker::PhantomData<C>,
}

impl<C: Field + FromStr> Parser<'_, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial<C>> {
        let mut acc = Polynomial::zero(self.ctx);
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<C>> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    let k: u32 = match k.parse() {
                        Ok(k) => k,
                        Err(_) => return self.err("exponent too large"),
                    };
                    Ok(base.pow(k))
                }
                _ => self.err("expected integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial<C>> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut lit = n;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.trim_start_matches('0').is_empty() => {
                            self.pos += 1;
                            lit = format!("{lit}/{d}");
                        }
                        _ => return self.err("expected nonzero integer denominator"),
                    }
                }
                match lit.parse::<C>() {
                    Ok(c) => Ok(Polynomial::constant(self.ctx, c)),
                    Err(_) => self.err("bad number"),
                }
            }
            Some(Tok::Ident(name)) => match self.ctx.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Polynomial::var_at(self.ctx, i))
                }
                None => self.err(format!("unknown variable `{name}`")),
            },
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

impl<C: Field + FromStr> Polynomial<C> {
    /// Parses the canonical text form (and the slightly larger grammar above).
    /// Error positions count characters.
    pub fn parse(ctx: &Ctx, s: &str) -> Result<Self> {
        let toks = lex(s)?;
        let mut p = Parser { ctx, toks, pos: 0, end: s.chars().count(), _c: std::marker::PhantomData };
        if p.toks.is_empty() {
            return p.err("empty polynomial");
        }
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("trailing input");
        }
        Ok(e)
    }
}
