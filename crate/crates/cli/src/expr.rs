//! Expression language over named basis blades.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '^' | '.' | '&' | 'x') factor)*
//! factor := number | blade | '~' factor | '!' factor | '-' factor | '(' expr ')'
//! ```
//!
//! `*` geometric, `^` outer, `.` inner, `&` join, `x` commutator; `~` reverse,
//! `!` the dual map J. Products are left-associative with equal precedence.

use pga_core::{dual_j, join, Algebra, Multivector, PgaError};
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Geometric,
    Outer,
    Inner,
    Join,
    Commutator,
    Add,
    Sub,
}

impl BinOp {
    fn symbol(self) -> &'static str {
        match self {
            BinOp::Geometric => "*",
            BinOp::Outer => "^",
            BinOp::Inner => ".",
            BinOp::Join => "&",
            BinOp::Commutator => "x",
            BinOp::Add => "+",
            BinOp::Sub => "-",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnOp {
    Reverse,
    Dual,
    Neg,
}

/// Parse tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Number(f64),
    Blade(String),
    Unary(UnOp, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
}

impl fmt::Display for Expr {
    /// Fully parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Number(x) => write!(f, "{x}"),
            Expr::Blade(b) => write!(f, "{b}"),
            Expr::Unary(op, e) => {
                let s = match op {
                    UnOp::Reverse => "~",
                    UnOp::Dual => "!",
                    UnOp::Neg => "-",
                };
                write!(f, "{s}({e})")
            }
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    /// Byte offset into the input.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown blade {name:?} in Cl({sig})")]
    UnknownBlade { name: String, sig: String },
    #[error(transparent)]
    Algebra(#[from] PgaError),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Op(char),
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = src.as_bytes();
    let mut out: Vec<(usize, Tok)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let value_before = matches!(
            out.last(),
            Some((_, Tok::Num(_) | Tok::Ident(_) | Tok::RParen))
        );
        let starts_number = c.is_ascii_digit()
            || (c == '.' && !value_before && bytes.get(i + 1).is_some_and(u8::is_ascii_digit));
        if c.is_ascii_whitespace() {
            i += 1;
        } else if starts_number {
            let start = i;
            let mut seen_dot = false;
            while i < bytes.len() && (bytes[i].is_ascii_digit() || (bytes[i] == b'.' && !seen_dot)) {
                // a dot not followed by a digit is the inner product
                if bytes[i] == b'.' {
                    if !bytes.get(i + 1).is_some_and(u8::is_ascii_digit) {
                        break;
                    }
                    seen_dot = true;
                }
                i += 1;
            }
            let text = &src[start..i];
            let x = text.parse().map_err(|_| ExprError::Parse {
                pos: start,
                msg: format!("bad number {text:?}"),
            })?;
            out.push((start, Tok::Num(x)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            let word = &src[start..i];
            if word == "x" {
                out.push((start, Tok::Op('x')));
            } else {
                out.push((start, Tok::Ident(word.to_string())));
            }
        } else {
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '+' | '-' | '*' | '^' | '.' | '&' | '~' | '!' => Tok::Op(c),
                _ => {
                    return Err(ExprError::Parse {
                        pos: i,
                        msg: format!("unexpected character {c:?}"),
                    })
                }
            };
            out.push((i, tok));
            i += c.len_utf8();
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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek() {
            let op = if *c == '+' { BinOp::Add } else { BinOp::Sub };
            self.at += 1;
            let rhs = self.term()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Op('*')) => BinOp::Geometric,
                Some(Tok::Op('^')) => BinOp::Outer,
                Some(Tok::Op('.')) => BinOp::Inner,
                Some(Tok::Op('&')) => BinOp::Join,
                Some(Tok::Op('x')) => BinOp::Commutator,
                _ => break,
            };
            self.at += 1;
            let rhs = self.factor()?;
            lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ExprError> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        self.at += 1;
        match tok {
            Tok::Num(x) => Ok(Expr::Number(x)),
            Tok::Ident(name) => Ok(Expr::Blade(name)),
            Tok::Op('~') => Ok(Expr::Unary(UnOp::Reverse, Box::new(self.factor()?))),
            Tok::Op('!') => Ok(Expr::Unary(UnOp::Dual, Box::new(self.factor()?))),
            Tok::Op('-') => Ok(Expr::Unary(UnOp::Neg, Box::new(self.factor()?))),
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.at += 1;
                Ok(e)
            }
            Tok::RParen => {
                self.at -= 1;
                self.err("unexpected ')'")
            }
            Tok::Op(c) => {
                self.at -= 1;
                self.err(format!("unexpected operator {c:?}"))
            }
        }
    }
}

/// Parse a whole expression.
pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("expected an operator");
    }
    Ok(e)
}

/// Evaluate in `alg`.
pub fn eval(e: &Expr, alg: &'static Algebra) -> Result<Multivector, ExprError> {
    Ok(match e {
        Expr::Number(x) => Multivector::scalar_in(alg, *x),
        Expr::Blade(name) => {
            if alg.index_of(name).is_none() {
                return Err(ExprError::UnknownBlade {
                    name: name.clone(),
                    sig: alg.signature().to_string(),
                });
            }
            Multivector::basis_in(alg, name)?
        }
        Expr::Unary(op, a) => {
            let a = eval(a, alg)?;
            match op {
                UnOp::Reverse => a.reverse(),
                UnOp::Dual => dual_j(&a),
                UnOp::Neg => -a,
            }
        }
        Expr::Binary(op, a, b) => {
            let (a, b) = (eval(a, alg)?, eval(b, alg)?);
            match op {
                BinOp::Geometric => a.geometric_product(&b)?,
                BinOp::Outer => a.outer(&b)?,
                BinOp::Inner => a.inner(&b)?,
                BinOp::Join => join(&a, &b)?,
                BinOp::Commutator => a.commutator(&b)?,
                BinOp::Add => a + b,
                BinOp::Sub => a - b,
            }
        }
    })
}

/// Parse and evaluate.
pub fn evaluate(src: &str, alg: &'static Algebra) -> Result<Multivector, ExprError> {
    eval(&parse(src)?, alg)
}
