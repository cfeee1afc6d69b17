//! Named series: eta products `f_n`, Pochhammer products, Ramanujan theta
//! functions and the quotients built from them.
//!
//! All constructors take the coefficient modulus up front so that residue
//! computations never materialise large integers.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Roots;

use crate::error::SeriesError;
use crate::series::{Monomial, TruncatedSeries};

/// `f_n = (q^n; q^n)_inf` via the pentagonal number theorem.
///
/// Nonzero coefficients sit at `n*k*(3k -+ 1)/2` with value `(-1)^k`.
///
/// # Panics
/// If `level == 0`.
pub fn eta_f(level: usize, order: usize, modulus: u64) -> TruncatedSeries {
    assert!(level >= 1, "eta level must be positive");
    TruncatedSeries::from_sparse(order, modulus, pentagonal_terms(level, order))
}

/// `(exponent, sign)` pairs of `f_level` up to `order`.
fn pentagonal_terms(level: usize, order: usize) -> Vec<(usize, i64)> {
    let mut terms = vec![(0, 1)];
    for k in 1usize.. {
        let lo = level * (k * (3 * k - 1) / 2);
        if lo > order {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        terms.push((lo, sign));
        let hi = level * (k * (3 * k + 1) / 2);
        if hi <= order {
            terms.push((hi, sign));
        }
    }
    terms
}

/// A finite product `prod f_n^{e_n}` of eta factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EtaQuotient {
    factors: BTreeMap<usize, i64>,
}

impl EtaQuotient {
    /// Collects `(level, exponent)` pairs; repeated levels add up and zero
    /// exponents are dropped.
    ///
    /// # Panics
    /// If any level is 0.
    pub fn new(pairs: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut factors = BTreeMap::new();
        for (level, e) in pairs {
            assert!(level >= 1, "eta level must be positive");
            *factors.entry(level).or_insert(0) += e;
        }
        factors.retain(|_, e| *e != 0);
        EtaQuotient { factors }
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.factors.iter().map(|(&n, &e)| (n, e))
    }

    pub fn exponent(&self, level: usize) -> i64 {
        self.factors.get(&level).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of two quotients (exponents add).
    pub fn times(&self, other: &Self) -> Self {
        Self::new(self.factors().chain(other.factors()))
    }
}

impl fmt::Display for EtaQuotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors()
            .map(|(n, e)| if e == 1 { format!("f{n}") } else { format!("f{n}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Expands an eta quotient to `order`.
///
/// Each factor is applied by repeated multiplication or division by the
/// sparse pentagonal series, so the cost is `O(|e| * N * sqrt(N/n))` per factor.
pub fn eta_quotient(eq: &EtaQuotient, order: usize, modulus: u64) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order, modulus);
    for (level, e) in eq.factors() {
        let base = eta_f(level, order, modulus);
        for _ in 0..e.unsigned_abs() {
            acc = if e > 0 {
                acc.mul(&base)
            } else {
                acc.div(&base)
            }
            .expect("eta factors share modulus and have constant term 1");
        }
    }
    acc
}

/// `(a; base)_inf = prod_{n >= 0} (1 - a * base^n)` truncated at `order`.
pub fn pochhammer_base(
    a: Monomial,
    base: Monomial,
    order: usize,
    modulus: u64,
) -> Result<TruncatedSeries, SeriesError> {
    if base.exponent == 0 || (a.exponent == 0 && !a.negative) {
        return Err(SeriesError::DivergentProduct(format!("({a}; {base})")));
    }
    let mut acc = TruncatedSeries::one(order, modulus);
    for n in 0.. {
        let c = a.times(base.power(n));
        if c.exponent > order {
            break;
        }
        // factor 1 - c; for c = -1 this is the constant 2
        let factor = TruncatedSeries::from_sparse(order, modulus, [(0, 1), (c.exponent, -c.sign())]);
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// `(a; q^level)_inf`.
pub fn pochhammer(
    a: Monomial,
    level: usize,
    order: usize,
    modulus: u64,
) -> Result<TruncatedSeries, SeriesError> {
    pochhammer_base(a, Monomial::q(level), order, modulus)
}

fn exponent_bound(quad: usize, lin: usize, order: usize) -> i64 {
    // largest |n| with quad*n^2 - lin*|n| <= order, plus one guard term
    let quad = quad as u128;
    let lin = lin as u128;
    let disc = lin * lin + 4 * quad * order as u128;
    ((lin + disc.sqrt()) / (2 * quad)) as i64 + 1
}

/// Ramanujan's `f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}`.
pub fn theta_f(
    a: Monomial,
    b: Monomial,
    order: usize,
    modulus: u64,
) -> Result<TruncatedSeries, SeriesError> {
    let (i, j) = (a.exponent, b.exponent);
    if i + j == 0 {
        return Err(SeriesError::DegenerateTheta {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    // 2 * exponent = (i+j) n^2 + (i-j) n
    let bound = exponent_bound(i + j, i.abs_diff(j), 2 * order);
    let mut terms = Vec::new();
    for n in -bound..=bound {
        let up = (n * (n + 1) / 2) as usize;
        let down = (n * (n - 1) / 2) as usize;
        let e = i * up + j * down;
        if e > order {
            continue;
        }
        let neg = (a.negative && up % 2 == 1) != (b.negative && down % 2 == 1);
        terms.push((e, if neg { -1 } else { 1 }));
    }
    Ok(TruncatedSeries::from_sparse(order, modulus, terms))
}

/// The triple product side `(-a, -b, ab; ab)_inf` of `f(a, b)`.
pub fn theta_product(
    a: Monomial,
    b: Monomial,
    order: usize,
    modulus: u64,
) -> Result<TruncatedSeries, SeriesError> {
    let ab = a.times(b);
    if ab.exponent == 0 {
        return Err(SeriesError::DegenerateTheta {
            a: a.to_string(),
            b: b.to_string(),
        });
    }
    let x = pochhammer_base(a.negated(), ab, order, modulus)?;
    let y = pochhammer_base(b.negated(), ab, order, modulus)?;
    let z = pochhammer_base(ab, ab, order, modulus)?;
    x.mul(&y)?.mul(&z)
}

/// `sum_{n in Z} q^{s n^2 + t n}` for `s >= 1`, `|t| <= s`.
fn quadratic_sum(s: usize, t: i64, order: usize, modulus: u64) -> TruncatedSeries {
    assert!(s >= 1 && t.unsigned_abs() as usize <= s);
    let bound = exponent_bound(s, t.unsigned_abs() as usize, order);
    let terms = (-bound..=bound).filter_map(|n| {
        let e = s as i64 * n * n + t * n;
        (e as usize <= order).then_some((e as usize, 1))
    });
    TruncatedSeries::from_sparse(order, modulus, terms)
}

/// `phi(q) = sum q^{n^2}`.
pub fn phi(order: usize, modulus: u64) -> TruncatedSeries {
    phi_at(1, order, modulus)
}

/// `phi(q^level)`.
///
/// # Panics
/// If `level == 0`.
pub fn phi_at(level: usize, order: usize, modulus: u64) -> TruncatedSeries {
    assert!(level >= 1, "phi level must be positive");
    quadratic_sum(level, 0, order, modulus)
}

/// `phi(q)` as the eta quotient `f_2^5 / (f_1^2 f_4^2)`.
pub fn phi_eta(order: usize, modulus: u64) -> TruncatedSeries {
    eta_quotient(&EtaQuotient::new([(2, 5), (1, -2), (4, -2)]), order, modulus)
}

/// `phi(-q)`.
pub fn phi_neg(order: usize, modulus: u64) -> TruncatedSeries {
    phi(order, modulus).negate_q()
}

/// `f(q) = (-q; -q)_inf = f_2^3 / (f_1 f_4)`.
pub fn f_pos(order: usize, modulus: u64) -> TruncatedSeries {
    eta_quotient(&EtaQuotient::new([(2, 3), (1, -1), (4, -1)]), order, modulus)
}

/// `D(q) = sum q^{5n^2 + 2n}`.
pub fn d_series(order: usize, modulus: u64) -> TruncatedSeries {
    quadratic_sum(5, 2, order, modulus)
}

/// `E(q) = sum q^{5n^2 + 4n}`.
pub fn e_series(order: usize, modulus: u64) -> TruncatedSeries {
    quadratic_sum(5, 4, order, modulus)
}
