//! A small expression language for q-series.
//!
//! ```text
//! 64 * f2^22 / f1^23
//! dissect(f2/f1^2, 4, 3)
//! phi(q^25)^4 + 3*q*phi(q^25)^3*subst(D, 5)
//! theta(-q, -q^2) - poch(q, q^3)*poch(q^2, q^3)*poch(q^3, q^3)
//! ```
//!
//! Atoms: integers, `q`, `q^j`, `f<n>`, `phi`, `phi(q^m)`, `D`, `E`, `pbar`,
//! `p`, `k`, `theta(a, b)` and `poch(a, base)` with monomial arguments.
//! Functions: `dissect(e, m, r)`, `subst(e, m)`, `shiftdiv(e, r)`, `negq(e)`,
//! `mod(e, m)`.

mod ast;
mod eval;
mod parser;

pub use ast::{Expr, ExprKind, SourceSpan};
pub use eval::{eval, EvalError};
pub use parser::{parse, ParseError};

/// Parses and evaluates in one step.
pub fn expand(src: &str, order: usize, modulus: u64) -> Result<crate::TruncatedSeries, QlangError> {
    let e = parse(src)?;
    Ok(eval(&e, order, modulus)?)
}

#[derive(Clone, Debug, thiserror::Error, PartialEq, Eq)]
pub enum QlangError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("evaluation error: {0}")]
    Eval(#[from] EvalError),
}

impl QlangError {
    pub fn span(&self) -> SourceSpan {
        match self {
            QlangError::Parse(e) => e.span,
            QlangError::Eval(e) => e.span,
        }
    }
}
