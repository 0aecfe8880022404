//! Text form of [`ParamScalar`]: the inverse of its `Display`.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term { ('+'|'-') term }
//! term   := unary { ('*'|'/') unary }
//! unary  := '-' unary | power
//! power  := atom [ '^' [-] integer ]
//! atom   := integer | parameter | '(' expr ')'
//! ```
//!
//! Every string produced by `ParamScalar`'s `Display` parses back to an
//! equal scalar; the grammar also accepts unreduced input like `s^2/(1-c)`.

use crate::error::SymbolicError;
use crate::params::param_index;
use crate::scalar::ParamScalar;
use num::BigInt;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn lex(text: &str) -> Result<Vec<Tok>, SymbolicError> {
    let bad = || SymbolicError::BadExpression(text.to_string());
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                toks.push(Tok::Plus);
            }
            '-' => {
                chars.next();
                toks.push(Tok::Minus);
            }
            '*' => {
                chars.next();
                toks.push(Tok::Star);
            }
            '/' => {
                chars.next();
                toks.push(Tok::Slash);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '(' => {
                chars.next();
                toks.push(Tok::Open);
            }
            ')' => {
                chars.next();
                toks.push(Tok::Close);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Int(digits.parse().map_err(|_| bad())?));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Name(name));
            }
            _ => return Err(bad()),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn bad(&self) -> SymbolicError {
        SymbolicError::BadExpression(self.text.to_string())
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<ParamScalar, SymbolicError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<ParamScalar, SymbolicError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = &acc * &self.unary()?;
            } else if self.eat(&Tok::Slash) {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamScalar, SymbolicError> {
        if self.eat(&Tok::Minus) {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ParamScalar, SymbolicError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let negative = self.eat(&Tok::Minus);
        let exp = match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e: i32 = n.to_string().parse().map_err(|_| self.bad())?;
                if negative {
                    -e
                } else {
                    e
                }
            }
            _ => return Err(self.bad()),
        };
        base.pow(exp)
    }

    fn atom(&mut self) -> Result<ParamScalar, SymbolicError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(ParamScalar::from_rat(crate::Rat::from_integer(n)))
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                param_index(&name)
                    .map(ParamScalar::param_idx)
                    .ok_or(SymbolicError::UnknownParameter(name))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.eat(&Tok::Close) {
                    Ok(inner)
                } else {
                    Err(self.bad())
                }
            }
            _ => Err(self.bad()),
        }
    }
}

/// Parse a parameter expression into a canonical [`ParamScalar`].
pub fn parse_scalar(text: &str) -> Result<ParamScalar, SymbolicError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        text,
    };
    let value = p.expr()?;
    if p.pos == toks.len() {
        Ok(value)
    } else {
        Err(p.bad())
    }
}
