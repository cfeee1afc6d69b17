//! Lexer and Pratt parser for q-series expressions.
//!
//! Precedence, loosest first: `+ -`, `* /`, unary `-`, `^` (or `**`).
//! Binary operators associate to the left, including `^`, whose right
//! operand must be an integer literal.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use super::ast::{Expr, ExprKind, SourceSpan};
use crate::series::Monomial;

const MAX_DEPTH: usize = 200;

/// A syntax error with its location in the input.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub message: String,
    pub span: SourceSpan,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    fn new(src: &str, span: SourceSpan, message: impl Into<String>) -> Self {
        let before = &src[..span.start.min(src.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ParseError {
            message: message.into(),
            span,
            line,
            column,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(v) => write!(f, "integer {v}"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    span: SourceSpan,
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = |tok| Token {
            tok,
            span: SourceSpan::new(start, start + 1),
        };
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = src[start..i].parse().expect("ascii digits");
                out.push(Token {
                    tok: Tok::Int(v),
                    span: SourceSpan::new(start, i),
                });
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(src[start..i].to_string()),
                    span: SourceSpan::new(start, i),
                });
                continue;
            }
            b'*' if bytes.get(i + 1) == Some(&b'*') => {
                out.push(Token {
                    tok: Tok::Caret,
                    span: SourceSpan::new(start, start + 2),
                });
                i += 2;
                continue;
            }
            b'+' => out.push(single(Tok::Plus)),
            b'-' => out.push(single(Tok::Minus)),
            b'*' => out.push(single(Tok::Star)),
            b'/' => out.push(single(Tok::Slash)),
            b'^' => out.push(single(Tok::Caret)),
            b'(' => out.push(single(Tok::LParen)),
            b')' => out.push(single(Tok::RParen)),
            b',' => out.push(single(Tok::Comma)),
            _ => {
                let ch = src[start..].chars().next().expect("in bounds");
                let end = start + ch.len_utf8();
                return Err(ParseError::new(
                    src,
                    SourceSpan::new(start, end),
                    format!("unexpected character `{ch}`"),
                ));
            }
        }
        i += 1;
    }
    out.push(Token {
        tok: Tok::Eof,
        span: SourceSpan::new(src.len(), src.len()),
    });
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
    depth: usize,
}

/// Parses a complete expression.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        src,
        tokens: lex(src)?,
        pos: 0,
        depth: 0,
    };
    let e = p.expr(0)?;
    match &p.peek().tok {
        Tok::Eof => Ok(e),
        t => {
            let msg = format!("unexpected {t} after expression");
            Err(p.err(p.peek().span, msg))
        }
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let i = (self.pos + k).min(self.tokens.len() - 1);
        &self.tokens[i].tok
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, span: SourceSpan, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.src, span, msg)
    }

    fn expect(&mut self, want: Tok, context: &str) -> Result<Token, ParseError> {
        if self.peek().tok == want {
            Ok(self.bump())
        } else {
            let t = self.peek().clone();
            Err(self.err(t.span, format!("expected {want} {context}, found {}", t.tok)))
        }
    }

    fn expr(&mut self, min_bp: u8) -> Result<Expr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err(self.peek().span, "expression nested too deeply"));
        }
        let mut lhs = self.prefix()?;
        loop {
            let (l_bp, r_bp) = match self.peek().tok {
                Tok::Plus | Tok::Minus => (1, 2),
                Tok::Star | Tok::Slash => (3, 4),
                Tok::Caret => (7, 8),
                _ => break,
            };
            if l_bp < min_bp {
                break;
            }
            let op = self.bump();
            if op.tok == Tok::Caret {
                let (k, end) = self.exponent(op.span)?;
                let span = lhs.span.join(end);
                lhs = Expr::new(ExprKind::Pow(Box::new(lhs), k), span);
                continue;
            }
            let rhs = self.expr(r_bp)?;
            let span = lhs.span.join(rhs.span);
            let (a, b) = (Box::new(lhs), Box::new(rhs));
            let kind = match op.tok {
                Tok::Plus => ExprKind::Add(a, b),
                Tok::Minus => ExprKind::Sub(a, b),
                Tok::Star => ExprKind::Mul(a, b),
                _ => ExprKind::Div(a, b),
            };
            lhs = Expr::new(kind, span);
        }
        self.depth -= 1;
        Ok(lhs)
    }

    /// Integer exponent after `^`: `k`, `-k`, `(k)` or `(-k)`.
    fn exponent(&mut self, caret: SourceSpan) -> Result<(i64, SourceSpan), ParseError> {
        let missing = |p: &Self| p.err(caret, "expected an integer exponent after `^`");
        let parens = self.peek().tok == Tok::LParen;
        if parens {
            self.bump();
        }
        let negative = self.peek().tok == Tok::Minus;
        if negative {
            self.bump();
        }
        let t = self.bump();
        let Tok::Int(v) = t.tok else {
            return Err(missing(self));
        };
        let mut end = t.span;
        if parens {
            end = self.expect(Tok::RParen, "to close the exponent")?.span;
        }
        let k = v
            .to_i64()
            .ok_or_else(|| self.err(t.span, "exponent out of range"))?;
        Ok((if negative { -k } else { k }, end))
    }

    fn prefix(&mut self) -> Result<Expr, ParseError> {
        let t = self.bump();
        match t.tok {
            Tok::Minus => {
                let inner = self.expr(5)?;
                let span = t.span.join(inner.span);
                Ok(Expr::new(ExprKind::Neg(Box::new(inner)), span))
            }
            Tok::LParen => {
                let mut inner = self.expr(0)?;
                let close = self.expect(Tok::RParen, "to close `(`")?;
                inner.span = t.span.join(close.span);
                Ok(inner)
            }
            Tok::Int(v) => Ok(Expr::new(ExprKind::Int(v), t.span)),
            Tok::Ident(name) => self.ident(&name, t.span),
            Tok::Eof => {
                // point at the operator that is missing its operand
                let at = if self.pos >= 2 {
                    self.tokens[self.pos - 2].span
                } else {
                    t.span
                };
                Err(self.err(at, "expected an expression, found end of input"))
            }
            other => Err(self.err(t.span, format!("expected an expression, found {other}"))),
        }
    }

    fn ident(&mut self, name: &str, span: SourceSpan) -> Result<Expr, ParseError> {
        use ExprKind::*;
        let leaf = |k| Ok(Expr::new(k, span));
        match name {
            "q" => self.q_power(span),
            "phi" if self.peek().tok == Tok::LParen => {
                let (args, call) = self.args(span, 1, "phi")?;
                match monomial_of(&args[0]) {
                    Some(m) if !m.negative && m.exponent >= 1 => {
                        Ok(Expr::new(PhiAt(m.exponent), call))
                    }
                    _ => Err(self.err(args[0].span, "phi(...) takes q^m with m >= 1")),
                }
            }
            "phi" => leaf(Phi),
            "D" => leaf(D),
            "E" => leaf(E),
            "pbar" => leaf(Pbar),
            "p" => leaf(ParamP),
            "k" => leaf(ParamK),
            "dissect" => {
                let (mut args, call) = self.args(span, 3, name)?;
                let r = self.small_int(&args[2])?;
                let m = self.positive_int(&args[1])?;
                let e = args.swap_remove(0);
                Ok(Expr::new(Dissect(Box::new(e), m, r), call))
            }
            "subst" => {
                let (mut args, call) = self.args(span, 2, name)?;
                let m = self.positive_int(&args[1])?;
                Ok(Expr::new(SubstQ(Box::new(args.swap_remove(0)), m), call))
            }
            "shiftdiv" => {
                let (mut args, call) = self.args(span, 2, name)?;
                let r = self.small_int(&args[1])?;
                Ok(Expr::new(ShiftDiv(Box::new(args.swap_remove(0)), r), call))
            }
            "negq" => {
                let (mut args, call) = self.args(span, 1, name)?;
                Ok(Expr::new(NegQ(Box::new(args.swap_remove(0))), call))
            }
            "mod" => {
                let (mut args, call) = self.args(span, 2, name)?;
                let m = self.positive_int(&args[1])? as u64;
                Ok(Expr::new(ModReduce(Box::new(args.swap_remove(0)), m), call))
            }
            "theta" | "poch" => {
                let (args, call) = self.args(span, 2, name)?;
                let mono = |e: &Expr| {
                    monomial_of(e).ok_or_else(|| self.err(e.span, "expected a monomial such as q^3, -q or -1"))
                };
                let (a, b) = (mono(&args[0])?, mono(&args[1])?);
                let kind = if name == "theta" { Theta(a, b) } else { Poch(a, b) };
                Ok(Expr::new(kind, call))
            }
            _ => {
                if let Some(digits) = name.strip_prefix('f') {
                    if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                        return match digits.parse::<usize>() {
                            Ok(n) if n >= 1 => leaf(EtaF(n)),
                            _ => Err(self.err(span, format!("invalid eta level in `{name}`"))),
                        };
                    }
                }
                Err(self.err(span, format!("unknown identifier `{name}`")))
            }
        }
    }

    fn q_power(&mut self, span: SourceSpan) -> Result<Expr, ParseError> {
        if self.peek().tok != Tok::Caret {
            return Ok(Expr::new(ExprKind::QPower(1), span));
        }
        match (self.peek_at(1).clone(), self.peek_at(2).clone()) {
            (Tok::Int(v), _) => {
                let caret = self.bump();
                let t = self.bump();
                let j = v
                    .to_usize()
                    .ok_or_else(|| self.err(t.span, "power of q out of range"))?;
                let _ = caret;
                Ok(Expr::new(ExprKind::QPower(j), span.join(t.span)))
            }
            (Tok::Minus, _) | (Tok::LParen, Tok::Minus) => {
                let at = self.peek().span;
                Err(self.err(at, "negative powers of q are not supported"))
            }
            _ => Ok(Expr::new(ExprKind::QPower(1), span)),
        }
    }

    fn args(
        &mut self,
        name_span: SourceSpan,
        arity: usize,
        name: &str,
    ) -> Result<(Vec<Expr>, SourceSpan), ParseError> {
        self.expect(Tok::LParen, &format!("after `{name}`"))?;
        let mut args = vec![self.expr(0)?];
        while self.peek().tok == Tok::Comma {
            self.bump();
            args.push(self.expr(0)?);
        }
        let close = self.expect(Tok::RParen, &format!("to close `{name}(`"))?;
        let call = name_span.join(close.span);
        if args.len() != arity {
            return Err(self.err(
                call,
                format!("`{name}` takes {arity} argument(s), got {}", args.len()),
            ));
        }
        Ok((args, call))
    }

    fn small_int(&self, e: &Expr) -> Result<usize, ParseError> {
        match &e.kind {
            ExprKind::Int(v) => v
                .to_usize()
                .ok_or_else(|| self.err(e.span, "integer argument out of range")),
            _ => Err(self.err(e.span, "expected a nonnegative integer literal")),
        }
    }

    fn positive_int(&self, e: &Expr) -> Result<usize, ParseError> {
        match self.small_int(e)? {
            0 => Err(self.err(e.span, "expected a positive integer")),
            v => Ok(v),
        }
    }
}

/// `q^j`, `-q^j`, `1` or `-1` as a monomial.
fn monomial_of(e: &Expr) -> Option<Monomial> {
    match &e.kind {
        ExprKind::QPower(j) => Some(Monomial::q(*j)),
        ExprKind::Int(v) if v.is_one() => Some(Monomial::q(0)),
        ExprKind::Neg(inner) => monomial_of(inner)
            .filter(|m| !m.negative)
            .map(Monomial::negated),
        _ => None,
    }
}
