//! Polynomial expressions over the fixed alphabet.
//!
//! Grammar, loosest first:
//! `sum := prod (("+" | "-") prod)*`,
//! `prod := unary (("*" | "/") unary)*`,
//! `unary := "-" unary | power`,
//! `power := atom ("^" exponent)?`,
//! `atom := integer | variable | "(" sum ")"`.
//! Division is only by nonzero constants, which is enough to read back
//! rendered coefficients such as `1/2*a^2`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactalg::{MPoly, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    SyntaxError { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("division by a non-constant or zero expression at position {pos}")]
    BadDivisor { pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAST {
    Int(BigInt),
    Var(Var),
    Neg(Box<ExprAST>),
    /// Binary node; `pos` is the operator position.
    Bin {
        op: BinOp,
        lhs: Box<ExprAST>,
        rhs: Box<ExprAST>,
        pos: usize,
    },
    Pow(Box<ExprAST>, u32),
    Group(Box<ExprAST>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().collect();
            out.push((start, Tok::Int(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(bytes[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError::SyntaxError {
                pos: i,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::SyntaxError {
                pos: self.pos(),
                msg: format!("expected `{c}`"),
            })
        }
    }

    fn sum(&mut self) -> Result<ExprAST, ParseError> {
        let mut lhs = self.prod()?;
        loop {
            let pos = self.pos();
            let op = if self.eat('+') {
                BinOp::Add
            } else if self.eat('-') {
                BinOp::Sub
            } else {
                return Ok(lhs);
            };
            let rhs = self.prod()?;
            lhs = ExprAST::Bin {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
    }

    fn prod(&mut self) -> Result<ExprAST, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let op = if self.eat('*') {
                BinOp::Mul
            } else if self.eat('/') {
                BinOp::Div
            } else {
                return Ok(lhs);
            };
            let rhs = self.unary()?;
            lhs = ExprAST::Bin {
                op,
                lhs: Box::new(lhs),
                rhs: Box::new(rhs),
                pos,
            };
        }
    }

    fn unary(&mut self) -> Result<ExprAST, ParseError> {
        if self.eat('-') {
            Ok(ExprAST::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ExprAST, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let paren = self.eat('(');
        if self.eat('-') {
            return Err(ParseError::NegativeExponent { pos });
        }
        let e = match self.peek() {
            Some(Tok::Int(k)) => u32::try_from(k).map_err(|_| ParseError::SyntaxError {
                pos: self.pos(),
                msg: "exponent too large".into(),
            })?,
            _ => {
                return Err(ParseError::SyntaxError {
                    pos: self.pos(),
                    msg: "exponent must be an integer literal".into(),
                })
            }
        };
        self.at += 1;
        if paren {
            self.expect(')')?;
        }
        Ok(ExprAST::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<ExprAST, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.at += 1;
                Ok(ExprAST::Int(k))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                Var::from_name(&name)
                    .map(ExprAST::Var)
                    .map_err(|_| ParseError::UnknownVariable { name, pos })
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let inner = self.sum()?;
                self.expect(')')?;
                Ok(ExprAST::Group(Box::new(inner)))
            }
            _ => Err(ParseError::SyntaxError {
                pos,
                msg: "expected a number, variable or `(`".into(),
            }),
        }
    }
}

pub fn parse_expr(src: &str) -> Result<ExprAST, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        end: src.chars().count(),
    };
    let e = p.sum()?;
    if p.at < p.toks.len() {
        return Err(ParseError::SyntaxError {
            pos: p.pos(),
            msg: "trailing input".into(),
        });
    }
    Ok(e)
}

impl ExprAST {
    pub fn lower(&self) -> Result<MPoly, ParseError> {
        Ok(match self {
            ExprAST::Int(k) => MPoly::constant(Rational::from_integer(k.clone())),
            ExprAST::Var(v) => MPoly::var(*v),
            ExprAST::Neg(e) => -e.lower()?,
            ExprAST::Group(e) => e.lower()?,
            ExprAST::Pow(b, e) => b.lower()?.pow(*e),
            ExprAST::Bin { op, lhs, rhs, pos } => {
                let (l, r) = (lhs.lower()?, rhs.lower()?);
                match op {
                    BinOp::Add => &l + &r,
                    BinOp::Sub => &l - &r,
                    BinOp::Mul => &l * &r,
                    BinOp::Div => match r.constant_value() {
                        Some(c) if !num_traits::Zero::is_zero(&c) => l.scale(&c.recip()),
                        _ => return Err(ParseError::BadDivisor { pos: *pos }),
                    },
                }
            }
        })
    }
}

/// Parses and lowers in one step.
pub fn parse_poly(src: &str) -> Result<MPoly, ParseError> {
    parse_expr(src)?.lower()
}
