//! Polynomial text parser.
//!
//! Accepts `+ - * ^ ( )`, integers and identifiers, with multiplication also
//! written as juxtaposition (`2y_1y_3`, `x_0 x_1`). An identifier is a letter,
//! optionally followed by digits or by `_` and either digits or one letter;
//! `y_12` is read as `y12`, while `x_u` keeps its underscore.

use std::iter::Peekable;
use std::str::CharIndices;
use std::sync::Arc;

use super::{Poly, Ring};
use crate::error::{Error, Result};
use crate::int::Int;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut it: Peekable<CharIndices> = text.char_indices().peekable();
    while let Some(&(pos, ch)) = it.peek() {
        match ch {
            c if c.is_whitespace() => {
                it.next();
            }
            '+' | '-' | '*' | '^' | '(' | ')' => {
                it.next();
                out.push(match ch {
                    '+' => Token::Plus,
                    '-' => Token::Minus,
                    '*' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::Open,
                    _ => Token::Close,
                });
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&(_, d)) = it.peek().filter(|(_, d)| d.is_ascii_digit()) {
                    s.push(d);
                    it.next();
                }
                out.push(Token::Num(s.parse().map_err(|e| Error::PolyParse(format!("{e}")))?));
            }
            c if c.is_ascii_alphabetic() => {
                it.next();
                let mut name = c.to_string();
                let rest = &text[pos + 1..];
                if rest.starts_with(|d: char| d.is_ascii_digit()) {
                    let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
                    for _ in 0..digits.len() {
                        it.next();
                    }
                    name.push_str(&digits);
                } else if let Some(after) = rest.strip_prefix('_') {
                    let digits: String = after.chars().take_while(char::is_ascii_digit).collect();
                    if !digits.is_empty() {
                        for _ in 0..=digits.len() {
                            it.next();
                        }
                        name.push_str(&digits);
                    } else if let Some(l) = after.chars().next().filter(char::is_ascii_alphabetic) {
                        it.next();
                        it.next();
                        name.push('_');
                        name.push(l);
                    } else {
                        return Err(Error::PolyParse(format!("dangling '_' at offset {pos}")));
                    }
                }
                out.push(Token::Ident(name));
            }
            _ => return Err(Error::PolyParse(format!("unexpected {ch:?} at offset {pos}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.ring);
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(Token::Plus) => negate = false,
                Some(Token::Minus) => negate = true,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                }
                Some(Token::Num(_) | Token::Ident(_) | Token::Open) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = match self.bump() {
            Some(Token::Num(n)) => Poly::constant(self.ring, n),
            Some(Token::Ident(name)) => self.ring.var(&name)?,
            Some(Token::Open) => {
                let inner = self.expr()?;
                if self.bump() != Some(Token::Close) {
                    return Err(Error::PolyParse("unbalanced parenthesis".into()));
                }
                inner
            }
            other => return Err(Error::PolyParse(format!("expected a factor, found {other:?}"))),
        };
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.bump() {
                Some(Token::Num(e)) => {
                    let e = e.to_i64().filter(|e| (0..=255).contains(e)).ok_or_else(|| {
                        Error::PolyParse(format!("exponent {e} out of range"))
                    })?;
                    return Ok(base.pow(e as u32));
                }
                other => return Err(Error::PolyParse(format!("expected an exponent, found {other:?}"))),
            }
        }
        Ok(base)
    }
}

impl Poly {
    /// Parses `text` as a polynomial over `ring`.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Poly> {
        let tokens = tokenize(text)?;
        if tokens.is_empty() {
            return Err(Error::PolyParse("empty polynomial".into()));
        }
        let mut p = Parser { ring, tokens, pos: 0 };
        let out = p.expr()?;
        if let Some(t) = p.peek() {
            return Err(Error::PolyParse(format!("trailing input at {t:?}")));
        }
        Ok(out)
    }
}
