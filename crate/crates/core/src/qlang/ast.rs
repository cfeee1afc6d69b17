use std::fmt;

use num_bigint::BigInt;

use crate::series::Monomial;

/// Byte range `[start, end)` of a node in its source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub start: usize,
    pub end: usize,
}

impl SourceSpan {
    pub fn new(start: usize, end: usize) -> Self {
        SourceSpan { start, end }
    }

    pub fn join(self, other: SourceSpan) -> Self {
        SourceSpan {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }

    pub fn contains(&self, other: &SourceSpan) -> bool {
        self.start <= other.start && other.end <= self.end
    }
}

/// An expression node with its source span.
///
/// Equality compares structure only; spans are ignored.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: SourceSpan,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    /// `f<n>`
    EtaF(usize),
    /// `phi`
    Phi,
    /// `phi(q^m)`
    PhiAt(usize),
    D,
    E,
    /// `pbar`, the overpartition generating function from the counting oracle.
    Pbar,
    /// `p` of the `(p, k)` parametrisation.
    ParamP,
    /// `k` of the `(p, k)` parametrisation.
    ParamK,
    /// `theta(a, b)`
    Theta(Monomial, Monomial),
    /// `poch(a, base)` = `(a; base)_inf`
    Poch(Monomial, Monomial),
    Int(BigInt),
    /// `q^j`
    QPower(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    /// `subst(e, m)`: `q -> q^m`
    SubstQ(Box<Expr>, usize),
    /// `dissect(e, m, r)`
    Dissect(Box<Expr>, usize, usize),
    /// `shiftdiv(e, r)`
    ShiftDiv(Box<Expr>, usize),
    /// `negq(e)`: `q -> -q`
    NegQ(Box<Expr>),
    /// `mod(e, m)`
    ModReduce(Box<Expr>, u64),
}

impl Expr {
    pub fn new(kind: ExprKind, span: SourceSpan) -> Self {
        Expr { kind, span }
    }

    /// Builds a node with an empty span, for programmatic construction.
    pub fn bare(kind: ExprKind) -> Self {
        Expr {
            kind,
            span: SourceSpan::default(),
        }
    }

    pub fn children(&self) -> Vec<&Expr> {
        use ExprKind::*;
        match &self.kind {
            EtaF(_) | Phi | PhiAt(_) | D | E | Pbar | ParamP | ParamK | Theta(..) | Poch(..)
            | Int(_) | QPower(_) => vec![],
            Neg(a) | Pow(a, _) | SubstQ(a, _) | Dissect(a, ..) | ShiftDiv(a, _) | NegQ(a)
            | ModReduce(a, _) => vec![a],
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => vec![a, b],
        }
    }

    fn precedence(&self) -> u8 {
        use ExprKind::*;
        match &self.kind {
            Add(..) | Sub(..) => 1,
            Mul(..) | Div(..) => 2,
            Neg(_) => 3,
            Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            write!(f, "(")?;
        }
        self.write_inner(f)?;
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }

    fn write_inner(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExprKind::*;
        match &self.kind {
            EtaF(n) => write!(f, "f{n}"),
            Phi => write!(f, "phi"),
            PhiAt(1) => write!(f, "phi(q)"),
            PhiAt(m) => write!(f, "phi(q^{m})"),
            D => write!(f, "D"),
            E => write!(f, "E"),
            Pbar => write!(f, "pbar"),
            ParamP => write!(f, "p"),
            ParamK => write!(f, "k"),
            Theta(a, b) => write!(f, "theta({a}, {b})"),
            Poch(a, b) => write!(f, "poch({a}, {b})"),
            Int(v) => write!(f, "{v}"),
            QPower(1) => write!(f, "q"),
            QPower(j) => write!(f, "q^{j}"),
            Neg(a) => {
                write!(f, "-")?;
                a.write_prec(f, 3)
            }
            Add(a, b) => binary(f, a, " + ", b, 1),
            Sub(a, b) => binary(f, a, " - ", b, 1),
            Mul(a, b) => binary(f, a, "*", b, 2),
            Div(a, b) => binary(f, a, "/", b, 2),
            Pow(a, k) => {
                // a bare `q` base would re-lex as q^j
                let min = if matches!(a.kind, QPower(1)) { 6 } else { 4 };
                a.write_prec(f, min)?;
                write!(f, "^{k}")
            }
            SubstQ(a, m) => write!(f, "subst({a}, {m})"),
            Dissect(a, m, r) => write!(f, "dissect({a}, {m}, {r})"),
            ShiftDiv(a, r) => write!(f, "shiftdiv({a}, {r})"),
            NegQ(a) => write!(f, "negq({a})"),
            ModReduce(a, m) => write!(f, "mod({a}, {m})"),
        }
    }
}

fn binary(f: &mut fmt::Formatter<'_>, a: &Expr, op: &str, b: &Expr, prec: u8) -> fmt::Result {
    a.write_prec(f, prec)?;
    write!(f, "{op}")?;
    b.write_prec(f, prec + 1)
}

/// Prints in the concrete syntax accepted by [`crate::qlang::parse`].
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_prec(f, 0)
    }
}
