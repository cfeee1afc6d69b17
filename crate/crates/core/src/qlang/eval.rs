//! Evaluation of expressions to truncated series.
//!
//! Every node is asked for a specific order. Operators that lose precision
//! ask their operand for more: `dissect(e, m, r)` at order `N` needs `e`
//! through `mN + r`, `shiftdiv(e, r)` needs `e` through `N + r`, while
//! `subst(e, m)` only needs `e` through `N / m`.

use std::cell::RefCell;
use std::collections::HashMap;

use thiserror::Error;

use super::ast::{Expr, ExprKind, SourceSpan};
use crate::error::SeriesError;
use crate::overpartitions::overpartition_series;
use crate::pk::{compute_k, compute_p};
use crate::series::{check_modulus, TruncatedSeries};
use crate::special::{d_series, e_series, eta_f, phi, phi_at, pochhammer_base, theta_f};

/// A series failure attributed to the node that raised it.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("at {}..{} (`{node}`): {source}", span.start, span.end)]
pub struct EvalError {
    pub span: SourceSpan,
    pub node: String,
    pub source: SeriesError,
}

impl EvalError {
    fn at(e: &Expr, source: SeriesError) -> Self {
        let mut node = e.to_string();
        if node.len() > 60 {
            let cut = (0..=57).rev().find(|&i| node.is_char_boundary(i)).unwrap_or(0);
            node.truncate(cut);
            node.push_str("...");
        }
        EvalError {
            span: e.span,
            node,
            source,
        }
    }
}

/// Expands `expr` through `q^order`, over `Z` (`modulus` 0) or `Z/modulus`.
///
/// The result has order exactly `order`. A `mod(e, m)` node makes its value
/// a residue series; when operands live in different rings the exact one is
/// reduced, and of two residue rings `Z/a`, `Z/b` with `b | a` the result
/// lives in `Z/b`.
pub fn eval(expr: &Expr, order: usize, modulus: u64) -> Result<TruncatedSeries, EvalError> {
    if modulus != 0 {
        check_modulus(modulus).map_err(|e| EvalError::at(expr, e))?;
    }
    let ev = Evaluator {
        modulus,
        leaves: RefCell::new(HashMap::new()),
    };
    ev.go(expr, order)
}

struct Evaluator {
    modulus: u64,
    leaves: RefCell<HashMap<(String, usize), TruncatedSeries>>,
}

fn unify(a: TruncatedSeries, b: TruncatedSeries) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
    let (ma, mb) = (a.modulus(), b.modulus());
    Ok(match (ma, mb) {
        _ if ma == mb => (a, b),
        (0, _) => (a.reduce_mod(mb)?, b),
        (_, 0) => (a, b.reduce_mod(ma)?),
        _ if ma % mb == 0 => (a.reduce_mod(mb)?, b),
        _ if mb % ma == 0 => (a, b.reduce_mod(ma)?),
        _ => return Err(SeriesError::ModulusMismatch { left: ma, right: mb }),
    })
}

impl Evaluator {
    fn go(&self, e: &Expr, n: usize) -> Result<TruncatedSeries, EvalError> {
        use ExprKind::*;
        let m = self.modulus;
        let here = |err| EvalError::at(e, err);
        let binary = |a: &Expr, b: &Expr| -> Result<_, EvalError> {
            unify(self.go(a, n)?, self.go(b, n)?).map_err(here)
        };
        match &e.kind {
            EtaF(_) | Phi | PhiAt(_) | D | E | Pbar | ParamP | ParamK | Theta(..) | Poch(..) => {
                self.leaf(e, n)
            }
            Int(v) => Ok(TruncatedSeries::constant_big(v, n, m)),
            QPower(j) => {
                let c = i64::from(*j <= n);
                Ok(TruncatedSeries::from_sparse(n, m, [(*j, c)]))
            }
            Neg(a) => Ok(self.go(a, n)?.neg()),
            Add(a, b) => {
                let (x, y) = binary(a, b)?;
                x.add(&y).map_err(here)
            }
            Sub(a, b) => {
                let (x, y) = binary(a, b)?;
                x.sub(&y).map_err(here)
            }
            Mul(a, b) => {
                let (x, y) = binary(a, b)?;
                x.mul(&y).map_err(here)
            }
            Div(a, b) => {
                let (x, y) = binary(a, b)?;
                x.div(&y).map_err(here)
            }
            Pow(a, k) => self.go(a, n)?.pow(*k).map_err(here),
            SubstQ(a, s) => Ok(self
                .go(a, n / s)?
                .substitute_power(*s)
                .map_err(here)?
                .truncate(n)),
            Dissect(a, s, r) => {
                let need = s
                    .checked_mul(n)
                    .and_then(|x| x.checked_add(*r))
                    .ok_or_else(|| here(SeriesError::InsufficientOrder { order: n, needed: usize::MAX }))?;
                self.go(a, need)?.dissect(*s, *r).map_err(here)
            }
            ShiftDiv(a, r) => self.go(a, n + r)?.shift_div(*r).map_err(here),
            NegQ(a) => Ok(self.go(a, n)?.negate_q()),
            ModReduce(a, k) => {
                let inner = self.go(a, n)?;
                inner.reduce_mod(*k).map_err(here)
            }
        }
    }

    fn leaf(&self, e: &Expr, n: usize) -> Result<TruncatedSeries, EvalError> {
        let key = (e.to_string(), n);
        if let Some(s) = self.leaves.borrow().get(&key) {
            return Ok(s.clone());
        }
        let m = self.modulus;
        let here = |err| EvalError::at(e, err);
        let reduce = |s: TruncatedSeries| if m == 0 { Ok(s) } else { s.reduce_mod(m) };
        let s = match &e.kind {
            ExprKind::EtaF(l) => eta_f(*l, n, m),
            ExprKind::Phi => phi(n, m),
            ExprKind::PhiAt(l) => phi_at(*l, n, m),
            ExprKind::D => d_series(n, m),
            ExprKind::E => e_series(n, m),
            ExprKind::Pbar => overpartition_series(n, m),
            ExprKind::ParamP => compute_p(n).and_then(reduce).map_err(here)?,
            ExprKind::ParamK => compute_k(n).and_then(reduce).map_err(here)?,
            ExprKind::Theta(a, b) => theta_f(*a, *b, n, m).map_err(here)?,
            ExprKind::Poch(a, b) => pochhammer_base(*a, *b, n, m).map_err(here)?,
            _ => unreachable!("not a leaf"),
        };
        self.leaves.borrow_mut().insert(key, s.clone());
        Ok(s)
    }
}
