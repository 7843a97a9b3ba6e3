use std::fmt;
use std::ops::Range;

use num_bigint::BigUint;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Int(BigUint),
    Z,
    X(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("integer `{n}`"),
            Token::Z => "`z`".into(),
            Token::X(k) => format!("`X{k}`"),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Star => "`*`".into(),
            Token::Slash => "`/`".into(),
            Token::Caret => "`^`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::End => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxError {
    /// Byte offset of the offending token (or of the bad character).
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: found {}, expected one of: {}",
            self.offset,
            self.found,
            self.expected.join(", ")
        )
    }
}

impl std::error::Error for SyntaxError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigUint),
    Z,
    X(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Range<usize>,
}

impl Expr {
    fn new(kind: ExprKind, span: Range<usize>) -> Box<Expr> {
        Box::new(Expr { kind, span })
    }

    /// Largest `k` with `X_k` present.
    pub fn max_var(&self) -> Option<usize> {
        match &self.kind {
            ExprKind::Int(_) | ExprKind::Z => None,
            ExprKind::X(k) => Some(*k),
            ExprKind::Neg(e) | ExprKind::Pow(e, _) => e.max_var(),
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) | ExprKind::Div(a, b) => {
                a.max_var().max(b.max_var())
            }
        }
    }
}

const BASE: &[&str] = &["integer", "`z`", "`X<k>`", "`(`"];

fn lex(text: &str) -> Result<Vec<(Token, Range<usize>)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'/' => Some(Token::Slash),
            b'^' => Some(Token::Caret),
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b'z' => Some(Token::Z),
            _ => None,
        };
        if let Some(tok) = single {
            i += 1;
            out.push((tok, start..i));
            continue;
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigUint = text[start..i].parse().expect("ascii digits");
            out.push((Token::Int(n), start..i));
            continue;
        }
        if c == b'X' {
            i += 1;
            let digits = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let index = text[digits..i].parse::<usize>().map_err(|_| SyntaxError {
                offset: start,
                expected: vec!["variable index after `X`"],
                found: "`X`".into(),
            })?;
            out.push((Token::X(index), start..i));
            continue;
        }
        let ch = text[start..].chars().next().expect("in bounds");
        return Err(SyntaxError {
            offset: start,
            expected: vec!["integer", "`z`", "`X<k>`", "operator", "parenthesis"],
            found: format!("character `{ch}`"),
        });
    }
    out.push((Token::End, text.len()..text.len()));
    Ok(out)
}

struct Parser {
    tokens: Vec<(Token, Range<usize>)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn span(&self) -> Range<usize> {
        self.tokens[self.pos].1.clone()
    }

    fn bump(&mut self) -> (Token, Range<usize>) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&'static str]) -> SyntaxError {
        SyntaxError {
            offset: self.span().start,
            expected: expected.to_vec(),
            found: self.peek().describe(),
        }
    }

    fn expr(&mut self) -> Result<Box<Expr>, SyntaxError> {
        let start = self.span().start;
        let negate = match self.peek() {
            Token::Minus => {
                self.bump();
                true
            }
            Token::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut lhs = self.term()?;
        if negate {
            let end = lhs.span.end;
            lhs = Expr::new(ExprKind::Neg(lhs), start..end);
        }
        loop {
            let op = match self.peek() {
                Token::Plus => ExprKind::Add as fn(_, _) -> _,
                Token::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Expr::new(op(lhs, rhs), span);
        }
    }

    fn term(&mut self) -> Result<Box<Expr>, SyntaxError> {
        let mut lhs = self.factor()?;
        loop {
            let op = match self.peek() {
                Token::Star => ExprKind::Mul as fn(_, _) -> _,
                Token::Slash => ExprKind::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.factor()?;
            let span = lhs.span.start..rhs.span.end;
            lhs = Expr::new(op(lhs, rhs), span);
        }
    }

    fn factor(&mut self) -> Result<Box<Expr>, SyntaxError> {
        let base = self.base()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let (tok, span) = (self.peek().clone(), self.span());
        let Token::Int(n) = tok else {
            return Err(self.error(&["nonnegative integer exponent"]));
        };
        let k = u32::try_from(&n).map_err(|_| SyntaxError {
            offset: span.start,
            expected: vec!["exponent below 2^32"],
            found: format!("integer `{n}`"),
        })?;
        self.bump();
        let whole = base.span.start..span.end;
        Ok(Expr::new(ExprKind::Pow(base, k), whole))
    }

    fn base(&mut self) -> Result<Box<Expr>, SyntaxError> {
        let (tok, span) = self.bump();
        match tok {
            Token::Int(n) => Ok(Expr::new(ExprKind::Int(n), span)),
            Token::Z => Ok(Expr::new(ExprKind::Z, span)),
            Token::X(k) => Ok(Expr::new(ExprKind::X(k), span)),
            Token::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Token::RParen {
                    return Err(self.error(&["`)`", "`+`", "`-`", "`*`", "`/`", "`^`"]));
                }
                let close = self.bump().1;
                Ok(Expr::new(inner.kind, span.start..close.end))
            }
            _ => Err(SyntaxError {
                offset: span.start,
                expected: BASE.to_vec(),
                found: tok.describe(),
            }),
        }
    }
}

/// Parses a whole expression; trailing input is an error.
pub fn parse(text: &str) -> Result<Expr, SyntaxError> {
    let mut p = Parser {
        tokens: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Token::End {
        return Err(p.error(&["`+`", "`-`", "`*`", "`/`", "`^`", "end of input"]));
    }
    Ok(*e)
}
