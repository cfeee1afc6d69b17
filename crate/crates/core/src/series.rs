//! Dense truncated power series in `q`.
//!
//! A [`TruncatedSeries`] stores the coefficients of `q^0 ..= q^N` for a
//! truncation order `N`. Coefficients live either in the integers (exact,
//! arbitrary precision) or in `Z/m` for a machine-word modulus `m < 2^63`.
//! Every binary operation truncates to the smaller operand order, so the
//! order of a result is always an honest bound on its validity.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::SeriesError;

/// Exclusive upper bound for residue moduli.
pub const MAX_MODULUS: u64 = 1 << 63;

pub(crate) fn check_modulus(m: u64) -> Result<(), SeriesError> {
    if m >= MAX_MODULUS {
        Err(SeriesError::ModulusTooLarge(m))
    } else {
        Ok(())
    }
}

/// Coefficient ring behind a series representation.
pub(crate) trait Ring: Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem);
    fn sub_assign(&self, a: &mut Self::Elem, b: &Self::Elem);
    fn negate(&self, a: &mut Self::Elem);
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// First `len` coefficients of the Cauchy product of `a` and `b`.
    fn convolve(&self, a: &[Self::Elem], b: &[Self::Elem], len: usize) -> Vec<Self::Elem>;

    /// First `len` coefficients of `num / den`, or `None` when the constant
    /// term of `den` is not a unit.
    fn divide(&self, num: &[Self::Elem], den: &[Self::Elem], len: usize)
        -> Option<Vec<Self::Elem>>;
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Integers;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Residues {
    m: u64,
}

impl Residues {
    pub(crate) fn new(m: u64) -> Self {
        debug_assert!((1..MAX_MODULUS).contains(&m));
        Residues { m }
    }

    #[inline]
    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.m as u128) as u64
    }

    // Products of two residues below 2^32 fit in a u64, so sums of them can
    // be accumulated in u128 without intermediate reduction.
    #[inline]
    fn word_sized(&self) -> bool {
        self.m <= 1 << 32
    }
}

/// Nonzero positions of `den[1..len]`, in increasing order.
fn taps<E, F: Fn(&E) -> bool>(den: &[E], len: usize, is_zero: F) -> Vec<(usize, &E)> {
    den.iter()
        .enumerate()
        .take(len)
        .skip(1)
        .filter(|(_, d)| !is_zero(d))
        .collect()
}

fn nonzeros<E, F: Fn(&E) -> bool>(v: &[E], is_zero: F) -> usize {
    v.iter().filter(|c| !is_zero(c)).count()
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn from_bigint(&self, v: &BigInt) -> BigInt {
        v.clone()
    }

    fn add_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a += b;
    }

    fn sub_assign(&self, a: &mut BigInt, b: &BigInt) {
        *a -= b;
    }

    fn negate(&self, a: &mut BigInt) {
        *a = -std::mem::take(a);
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn convolve(&self, a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
        let (a, b) = if nonzeros(a, BigInt::is_zero) <= nonzeros(b, BigInt::is_zero) {
            (a, b)
        } else {
            (b, a)
        };
        let minus_one = -BigInt::one();
        let mut out = vec![BigInt::zero(); len];
        for (i, ai) in a.iter().enumerate().take(len) {
            if ai.is_zero() {
                continue;
            }
            let row = &b[..b.len().min(len - i)];
            let dst = &mut out[i..];
            if ai.is_one() {
                for (o, bj) in dst.iter_mut().zip(row) {
                    if !bj.is_zero() {
                        *o += bj;
                    }
                }
            } else if *ai == minus_one {
                for (o, bj) in dst.iter_mut().zip(row) {
                    if !bj.is_zero() {
                        *o -= bj;
                    }
                }
            } else {
                for (o, bj) in dst.iter_mut().zip(row) {
                    if !bj.is_zero() {
                        *o += ai * bj;
                    }
                }
            }
        }
        out
    }

    fn divide(&self, num: &[BigInt], den: &[BigInt], len: usize) -> Option<Vec<BigInt>> {
        let lead = den.first()?;
        if !lead.abs().is_one() {
            return None;
        }
        let flip = lead.is_negative();
        let taps = taps(den, len, BigInt::is_zero);
        let minus_one = -BigInt::one();
        let mut out: Vec<BigInt> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = num[n].clone();
            for &(i, d) in &taps {
                if i > n {
                    break;
                }
                let prev = &out[n - i];
                if d.is_one() {
                    acc -= prev;
                } else if *d == minus_one {
                    acc += prev;
                } else {
                    acc -= d * prev;
                }
            }
            if flip {
                acc = -acc;
            }
            out.push(acc);
        }
        Some(out)
    }
}

impl Ring for Residues {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn from_i64(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.m as i128) as u64
    }

    fn from_bigint(&self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.m))
            .to_u64()
            .expect("residue below modulus")
    }

    fn add_assign(&self, a: &mut u64, b: &u64) {
        let s = *a + *b;
        *a = if s >= self.m { s - self.m } else { s };
    }

    fn sub_assign(&self, a: &mut u64, b: &u64) {
        *a = if *a >= *b { *a - *b } else { *a + self.m - *b };
    }

    fn negate(&self, a: &mut u64) {
        if *a != 0 {
            *a = self.m - *a;
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mul_mod(*a, *b)
    }

    fn convolve(&self, a: &[u64], b: &[u64], len: usize) -> Vec<u64> {
        let is_zero = |c: &u64| *c == 0;
        let (a, b) = if nonzeros(a, is_zero) <= nonzeros(b, is_zero) {
            (a, b)
        } else {
            (b, a)
        };
        let m = self.m as u128;
        let mut acc = vec![0u128; len];
        for (i, &ai) in a.iter().enumerate().take(len) {
            if ai == 0 {
                continue;
            }
            let row = &b[..b.len().min(len - i)];
            let dst = &mut acc[i..];
            if self.word_sized() {
                for (o, &bj) in dst.iter_mut().zip(row) {
                    *o += (ai * bj) as u128;
                }
            } else {
                for (o, &bj) in dst.iter_mut().zip(row) {
                    *o += (ai as u128 * bj as u128) % m;
                }
            }
        }
        acc.into_iter().map(|x| (x % m) as u64).collect()
    }

    fn divide(&self, num: &[u64], den: &[u64], len: usize) -> Option<Vec<u64>> {
        let inv = mod_inverse(*den.first()?, self.m)?;
        let taps = taps(den, len, |c: &u64| *c == 0);
        let m = self.m as u128;
        let mut out: Vec<u64> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc: u128 = 0;
            for &(i, &d) in &taps {
                if i > n {
                    break;
                }
                if self.word_sized() {
                    acc += (d * out[n - i]) as u128;
                } else {
                    acc += (d as u128 * out[n - i] as u128) % m;
                }
            }
            let s = (acc % m) as u64;
            let v = if num[n] >= s {
                num[n] - s
            } else {
                num[n] + self.m - s
            };
            out.push(self.mul_mod(v, inv));
        }
        Some(out)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Exact(Vec<BigInt>),
    Residue { modulus: u64, coeffs: Vec<u64> },
}

/// A power series in `q` known up to and including `q^order`.
///
/// Values are immutable; every operation returns a fresh series.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    repr: Repr,
}

macro_rules! map_ring {
    ($s:expr, |$ring:ident, $c:ident| $body:expr) => {
        match &$s.repr {
            Repr::Exact($c) => {
                let $ring = &Integers;
                TruncatedSeries {
                    repr: Repr::Exact($body),
                }
            }
            Repr::Residue {
                modulus,
                coeffs: $c,
            } => {
                let $ring = &Residues::new(*modulus);
                TruncatedSeries {
                    repr: Repr::Residue {
                        modulus: *modulus,
                        coeffs: $body,
                    },
                }
            }
        }
    };
}

macro_rules! zip_ring {
    ($a:expr, $b:expr, |$ring:ident, $x:ident, $y:ident| $body:expr) => {
        match (&$a.repr, &$b.repr) {
            (Repr::Exact($x), Repr::Exact($y)) => {
                let $ring = &Integers;
                TruncatedSeries {
                    repr: Repr::Exact($body),
                }
            }
            (
                Repr::Residue {
                    modulus: m1,
                    coeffs: $x,
                },
                Repr::Residue {
                    modulus: m2,
                    coeffs: $y,
                },
            ) if m1 == m2 => {
                let $ring = &Residues::new(*m1);
                TruncatedSeries {
                    repr: Repr::Residue {
                        modulus: *m1,
                        coeffs: $body,
                    },
                }
            }
            _ => {
                return Err(SeriesError::ModulusMismatch {
                    left: $a.modulus(),
                    right: $b.modulus(),
                })
            }
        }
    };
}

impl TruncatedSeries {
    /// Builds a series from integer coefficients of `q^0, q^1, ...`.
    ///
    /// `modulus` 0 keeps exact integers; any other value reduces into `[0, m)`.
    pub fn new(coeffs: Vec<BigInt>, modulus: u64) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        check_modulus(modulus)?;
        let repr = if modulus == 0 {
            Repr::Exact(coeffs)
        } else {
            let r = Residues::new(modulus);
            Repr::Residue {
                modulus,
                coeffs: coeffs.iter().map(|c| r.from_bigint(c)).collect(),
            }
        };
        Ok(TruncatedSeries { repr })
    }

    pub fn from_i64s(coeffs: &[i64], modulus: u64) -> Result<Self, SeriesError> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), modulus)
    }

    /// Builds a series from `(exponent, coefficient)` pairs; exponents above
    /// `order` are dropped and repeated exponents accumulate.
    ///
    /// # Panics
    /// If `modulus >= 2^63`.
    pub fn from_sparse(
        order: usize,
        modulus: u64,
        terms: impl IntoIterator<Item = (usize, i64)>,
    ) -> Self {
        let mut s = Self::zero(order, modulus);
        match &mut s.repr {
            Repr::Exact(c) => {
                for (e, v) in terms {
                    if e <= order {
                        c[e] += v;
                    }
                }
            }
            Repr::Residue { modulus, coeffs } => {
                let r = Residues::new(*modulus);
                for (e, v) in terms {
                    if e <= order {
                        let v = r.from_i64(v);
                        r.add_assign(&mut coeffs[e], &v);
                    }
                }
            }
        }
        s
    }

    /// The zero series to `order`.
    ///
    /// # Panics
    /// If `modulus >= 2^63`.
    pub fn zero(order: usize, modulus: u64) -> Self {
        assert!(modulus < MAX_MODULUS, "modulus {modulus} too large");
        let repr = if modulus == 0 {
            Repr::Exact(vec![BigInt::zero(); order + 1])
        } else {
            Repr::Residue {
                modulus,
                coeffs: vec![0; order + 1],
            }
        };
        TruncatedSeries { repr }
    }

    pub fn one(order: usize, modulus: u64) -> Self {
        Self::monomial(0, 1, order, modulus)
    }

    pub fn constant(c: i64, order: usize, modulus: u64) -> Self {
        Self::monomial(0, c, order, modulus)
    }

    pub fn constant_big(c: &BigInt, order: usize, modulus: u64) -> Self {
        let mut v = vec![BigInt::zero(); order + 1];
        v[0] = c.clone();
        Self::new(v, modulus).expect("nonempty coefficient vector")
    }

    /// `coeff * q^exponent`, or zero when `exponent > order`.
    pub fn monomial(exponent: usize, coeff: i64, order: usize, modulus: u64) -> Self {
        Self::from_sparse(order, modulus, [(exponent, coeff)])
    }

    pub fn order(&self) -> usize {
        self.len() - 1
    }

    fn len(&self) -> usize {
        match &self.repr {
            Repr::Exact(c) => c.len(),
            Repr::Residue { coeffs, .. } => coeffs.len(),
        }
    }

    /// 0 for exact integer coefficients, otherwise the residue modulus.
    pub fn modulus(&self) -> u64 {
        match &self.repr {
            Repr::Exact(_) => 0,
            Repr::Residue { modulus, .. } => *modulus,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.repr, Repr::Exact(_))
    }

    /// Coefficient of `q^n` (residues are reported in `[0, m)`).
    ///
    /// # Panics
    /// If `n > self.order()`.
    pub fn coeff(&self, n: usize) -> BigInt {
        match &self.repr {
            Repr::Exact(c) => c[n].clone(),
            Repr::Residue { coeffs, .. } => BigInt::from(coeffs[n]),
        }
    }

    pub fn coeff_is_zero(&self, n: usize) -> bool {
        match &self.repr {
            Repr::Exact(c) => c[n].is_zero(),
            Repr::Residue { coeffs, .. } => coeffs[n] == 0,
        }
    }

    pub fn coefficients(&self) -> Vec<BigInt> {
        (0..self.len()).map(|n| self.coeff(n)).collect()
    }

    /// Residue-backend coefficients, if this series lives in `Z/m`.
    pub fn residues(&self) -> Option<&[u64]> {
        match &self.repr {
            Repr::Residue { coeffs, .. } => Some(coeffs),
            Repr::Exact(_) => None,
        }
    }

    /// Coefficients as `i64`, if every one of them fits.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        match &self.repr {
            Repr::Exact(c) => c.iter().map(|x| x.to_i64()).collect(),
            Repr::Residue { coeffs, .. } => coeffs.iter().map(|&x| i64::try_from(x).ok()).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        (0..self.len()).all(|n| self.coeff_is_zero(n))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        (0..self.len()).find(|&n| !self.coeff_is_zero(n))
    }

    /// Drops every coefficient above `order` (no-op if already shorter).
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        map_ring!(self, |_r, c| c[..keep].to_vec())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        let len = self.len().min(other.len());
        Ok(zip_ring!(self, other, |r, x, y| x[..len]
            .iter()
            .zip(&y[..len])
            .map(|(a, b)| {
                let mut a = a.clone();
                r.add_assign(&mut a, b);
                a
            })
            .collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        let len = self.len().min(other.len());
        Ok(zip_ring!(self, other, |r, x, y| x[..len]
            .iter()
            .zip(&y[..len])
            .map(|(a, b)| {
                let mut a = a.clone();
                r.sub_assign(&mut a, b);
                a
            })
            .collect()))
    }

    pub fn neg(&self) -> Self {
        map_ring!(self, |r, c| c
            .iter()
            .map(|a| {
                let mut a = a.clone();
                r.negate(&mut a);
                a
            })
            .collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        self.scale_big(&BigInt::from(k))
    }

    pub fn scale_big(&self, k: &BigInt) -> Self {
        map_ring!(self, |r, c| {
            let k = r.from_bigint(k);
            c.iter().map(|a| r.mul(a, &k)).collect()
        })
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        let len = self.len().min(other.len());
        Ok(zip_ring!(self, other, |r, x, y| r.convolve(x, y, len)))
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        self.one_like().div(self)
    }

    /// `self / den`, truncated to the smaller order.
    pub fn div(&self, den: &Self) -> Result<Self, SeriesError> {
        let len = self.len().min(den.len());
        let lead = den.coeff(0);
        Ok(zip_ring!(self, den, |r, x, y| r
            .divide(x, y, len)
            .ok_or_else(|| SeriesError::NonUnitConstant(lead.to_string()))?))
    }

    /// `self^k` by binary exponentiation; negative `k` inverts first.
    pub fn pow(&self, k: i64) -> Result<Self, SeriesError> {
        let one = self.one_like();
        if k == 0 {
            return Ok(one);
        }
        let mut base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = one;
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(acc)
    }

    fn one_like(&self) -> Self {
        Self::one(self.order(), self.modulus())
    }

    /// `s(q) -> s(q^m)`.
    ///
    /// A series known to `q^N` determines `s(q^m)` through `q^(mN + m - 1)`,
    /// which is the order of the result.
    pub fn substitute_power(&self, m: usize) -> Result<Self, SeriesError> {
        if m == 0 {
            return Err(SeriesError::ZeroStep);
        }
        let len = self.len() * m;
        Ok(map_ring!(self, |r, c| {
            let mut out = vec![r.zero(); len];
            for (i, v) in c.iter().enumerate() {
                out[i * m] = v.clone();
            }
            out
        }))
    }

    /// Coefficients at exponents `m*n + r`, re-indexed by `n`.
    pub fn dissect(&self, m: usize, r: usize) -> Result<Self, SeriesError> {
        if m == 0 {
            return Err(SeriesError::ZeroStep);
        }
        if r >= m {
            return Err(SeriesError::ResidueOutOfRange {
                residue: r,
                modulus: m,
            });
        }
        if r > self.order() {
            return Err(SeriesError::InsufficientOrder {
                order: self.order(),
                needed: r,
            });
        }
        Ok(map_ring!(self, |_r, c| c[r..].iter().step_by(m).cloned().collect()))
    }

    /// Divides by `q^r`; the coefficients of `q^0 .. q^(r-1)` must vanish.
    pub fn shift_div(&self, r: usize) -> Result<Self, SeriesError> {
        if r > self.order() {
            return Err(SeriesError::InsufficientOrder {
                order: self.order(),
                needed: r,
            });
        }
        if let Some(e) = (0..r).find(|&n| !self.coeff_is_zero(n)) {
            return Err(SeriesError::ShiftNonZero {
                shift: r,
                exponent: e,
                value: self.coeff(e).to_string(),
            });
        }
        Ok(map_ring!(self, |_r, c| c[r..].to_vec()))
    }

    /// Multiplies by `q^r`, keeping the order (top coefficients fall off).
    pub fn shift_mul(&self, r: usize) -> Self {
        map_ring!(self, |ring, c| {
            let n = c.len();
            let mut out = vec![ring.zero(); n];
            if r < n {
                out[r..].clone_from_slice(&c[..n - r]);
            }
            out
        })
    }

    /// `s(q) -> s(-q)`: negates odd-exponent coefficients.
    pub fn negate_q(&self) -> Self {
        map_ring!(self, |r, c| c
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut a = a.clone();
                if i % 2 == 1 {
                    r.negate(&mut a);
                }
                a
            })
            .collect())
    }

    /// Reduces into `Z/m`. Allowed from exact series or from `Z/M` with `m | M`.
    pub fn reduce_mod(&self, m: u64) -> Result<Self, SeriesError> {
        if m == 0 {
            return Err(SeriesError::ZeroModulus);
        }
        check_modulus(m)?;
        let coeffs = match &self.repr {
            Repr::Exact(c) => {
                let r = Residues::new(m);
                c.iter().map(|x| r.from_bigint(x)).collect()
            }
            Repr::Residue { modulus, coeffs } => {
                if modulus % m != 0 {
                    return Err(SeriesError::IncompatibleModulus { from: *modulus, to: m });
                }
                coeffs.iter().map(|x| x % m).collect()
            }
        };
        Ok(TruncatedSeries {
            repr: Repr::Residue { modulus: m, coeffs },
        })
    }

    /// First exponent where two series disagree, over their common order.
    pub fn first_difference(&self, other: &Self) -> Result<Option<usize>, SeriesError> {
        Ok(self.sub(other)?.valuation())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries")
            .field("modulus", &self.modulus())
            .field("coeffs", &self.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in 0..self.len() {
            let c = self.coeff(n);
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if n == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{n}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.len())?;
        if self.modulus() != 0 {
            write!(f, " (mod {})", self.modulus())?;
        }
        Ok(())
    }
}

/// A signed monomial `±q^j`, the argument type of products and theta
/// functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub negative: bool,
    pub exponent: usize,
}

impl Monomial {
    /// `q^j`
    pub const fn q(exponent: usize) -> Self {
        Monomial {
            negative: false,
            exponent,
        }
    }

    /// `-q^j`
    pub const fn neg_q(exponent: usize) -> Self {
        Monomial {
            negative: true,
            exponent,
        }
    }

    pub fn negated(self) -> Self {
        Monomial {
            negative: !self.negative,
            ..self
        }
    }

    pub fn times(self, other: Self) -> Self {
        Monomial {
            negative: self.negative != other.negative,
            exponent: self.exponent + other.exponent,
        }
    }

    /// `self^k`
    pub fn power(self, k: usize) -> Self {
        Monomial {
            negative: self.negative && k % 2 == 1,
            exponent: self.exponent * k,
        }
    }

    pub fn sign(self) -> i64 {
        if self.negative {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            write!(f, "-")?;
        }
        match self.exponent {
            0 => write!(f, "1"),
            1 => write!(f, "q"),
            e => write!(f, "q^{e}"),
        }
    }
}
