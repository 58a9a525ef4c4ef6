//! Propositional formulas over the tense signature, with a plain-text
//! concrete syntax.
//!
//! Grammar, loosest binding first: `->` (right-associative), `|`, `&`,
//! then the unary prefixes `~ g h f p`, then atoms `bot`, `top`, `x<digits>`
//! and parenthesised formulas. Whitespace separates tokens and is otherwise
//! ignored; `g`, `h`, `f`, `p`, `bot`, `top` are reserved words.
//!
//! `~q` is sugar for `q -> bot`; the parser desugars it and the printer
//! restores it, so parse ∘ print is the identity on ASTs.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::tense::TenseOp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Bot,
    Top,
    Var(u32),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Modal(TenseOp, Box<Formula>),
}

impl Formula {
    pub fn var(i: u32) -> Formula {
        Formula::Var(i)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    pub fn modal(op: TenseOp, a: Formula) -> Formula {
        Formula::Modal(op, Box::new(a))
    }

    /// `~a`, which is `a -> bot`.
    pub fn neg(a: Formula) -> Formula {
        Formula::imp(a, Formula::Bot)
    }

    /// Biconditional, spelled out as `(a -> b) & (b -> a)`.
    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(Formula::imp(a.clone(), b.clone()), Formula::imp(b, a))
    }

    /// Variable indices occurring in the formula, ascending.
    pub fn vars(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<u32>) {
        match self {
            Formula::Bot | Formula::Top => {}
            Formula::Var(i) => {
                out.insert(*i);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Formula::Modal(_, a) => a.collect_vars(out),
        }
    }

    pub fn parse(input: &str) -> Result<Formula, ParseError> {
        let tokens = tokenize(input)?;
        let mut p = Parser { tokens, pos: 0, input_len: input.len() };
        let f = p.formula()?;
        match p.peek() {
            None => Ok(f),
            Some(t) => Err(ParseError::SyntaxError {
                offset: t.offset,
                expected: "end of input".to_string(),
            }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: expected {expected}")]
    SyntaxError { offset: usize, expected: String },
    #[error("unknown symbol at byte {offset}: {found:?}")]
    UnknownSymbol { offset: usize, found: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Arrow,
    OrSign,
    AndSign,
    Tilde,
    Modal(TenseOp),
    Bot,
    Top,
    Var(u32),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    offset: usize,
}

fn tokenize(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let offset = i;
        let tok = match c {
            b'(' => {
                i += 1;
                Tok::LParen
            }
            b')' => {
                i += 1;
                Tok::RParen
            }
            b'|' => {
                i += 1;
                Tok::OrSign
            }
            b'&' => {
                i += 1;
                Tok::AndSign
            }
            b'~' => {
                i += 1;
                Tok::Tilde
            }
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    i += 2;
                    Tok::Arrow
                } else {
                    return Err(ParseError::UnknownSymbol {
                        offset,
                        found: "-".to_string(),
                    });
                }
            }
            _ if c.is_ascii_alphanumeric() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let word = &input[start..i];
                match word {
                    "bot" => Tok::Bot,
                    "top" => Tok::Top,
                    "g" => Tok::Modal(TenseOp::G),
                    "h" => Tok::Modal(TenseOp::H),
                    "f" => Tok::Modal(TenseOp::F),
                    "p" => Tok::Modal(TenseOp::P),
                    _ => {
                        let rest = word.strip_prefix('x');
                        match rest {
                            Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
                                let idx: u32 = d.parse().map_err(|_| ParseError::SyntaxError {
                                    offset,
                                    expected: "a smaller variable index".to_string(),
                                })?;
                                Tok::Var(idx)
                            }
                            _ => {
                                return Err(ParseError::UnknownSymbol {
                                    offset,
                                    found: word.to_string(),
                                })
                            }
                        }
                    }
                }
            }
            _ => {
                // take one whole character so the message is not a broken byte
                let ch = input[i..].chars().next().unwrap();
                return Err(ParseError::UnknownSymbol {
                    offset,
                    found: ch.to_string(),
                });
            }
        };
        out.push(Spanned { tok, offset });
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    input_len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> usize {
        self.peek().map(|t| t.offset).unwrap_or(self.input_len)
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        self.imp()
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if matches!(self.peek(), Some(Spanned { tok: Tok::Arrow, .. })) {
            self.bump();
            let rhs = self.imp()?;
            Ok(Formula::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while matches!(self.peek(), Some(Spanned { tok: Tok::OrSign, .. })) {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while matches!(self.peek(), Some(Spanned { tok: Tok::AndSign, .. })) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Tilde) => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Some(Tok::Modal(op)) => {
                self.bump();
                Ok(Formula::modal(op, self.unary()?))
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let off = self.here();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Bot) => Ok(Formula::Bot),
            Some(Tok::Top) => Ok(Formula::Top),
            Some(Tok::Var(i)) => Ok(Formula::Var(i)),
            Some(Tok::LParen) => {
                let inner = self.formula()?;
                match self.bump().map(|t| t.tok) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::SyntaxError {
                        offset: self.here().min(self.input_len),
                        expected: "\")\"".to_string(),
                    }),
                }
            }
            _ => Err(ParseError::SyntaxError {
                offset: off,
                expected: "a formula".to_string(),
            }),
        }
    }
}

// precedence levels for printing: -> is 0, | is 1, & is 2, unary 3, atoms 4
fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Imp(_, b) if **b == Formula::Bot => 3,
        Formula::Imp(_, _) => 0,
        Formula::Or(_, _) => 1,
        Formula::And(_, _) => 2,
        Formula::Modal(_, _) => 3,
        Formula::Bot | Formula::Top | Formula::Var(_) => 4,
    }
}

fn write_at(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mine = prec(f);
    if mine < min {
        write!(out, "(")?;
        write_at(f, 0, out)?;
        return write!(out, ")");
    }
    match f {
        Formula::Bot => write!(out, "bot"),
        Formula::Top => write!(out, "top"),
        Formula::Var(i) => write!(out, "x{i}"),
        Formula::Imp(a, b) if **b == Formula::Bot => {
            write!(out, "~")?;
            write_at(a, 3, out)
        }
        Formula::Imp(a, b) => {
            // right-associative: the left side needs strictly higher binding
            write_at(a, 1, out)?;
            write!(out, " -> ")?;
            write_at(b, 0, out)
        }
        Formula::Or(a, b) => {
            write_at(a, 1, out)?;
            write!(out, " | ")?;
            write_at(b, 2, out)
        }
        Formula::And(a, b) => {
            write_at(a, 2, out)?;
            write!(out, " & ")?;
            write_at(b, 3, out)
        }
        Formula::Modal(op, a) => {
            write!(out, "{} ", op.symbol())?;
            write_at(a, 3, out)
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_at(self, 0, out)
    }
}
