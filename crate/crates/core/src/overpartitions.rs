//! Overpartition counts and congruence scanning.
//!
//! [`overpartition_oracle`] is a direct dynamic program over part sizes and
//! never touches series division, so it can serve as an independent check on
//! the eta-quotient route of [`overpartition_gf`].

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::series::{check_modulus, Integers, Residues, Ring, TruncatedSeries};
use crate::special::{eta_quotient, EtaQuotient};

/// Multiplies in `(1 + q^k)/(1 - q^k) = 1 + 2q^k + 2q^{2k} + ...` for every
/// part size `k`, one residue chain at a time.
fn overpartition_table<R: Ring>(ring: &R, n_max: usize) -> Vec<R::Elem> {
    let mut table = vec![ring.zero(); n_max + 1];
    table[0] = ring.from_i64(1);
    for k in 1..=n_max {
        for start in 0..k {
            // acc holds the sum of the old values below the current index
            let mut acc = ring.zero();
            let mut n = start;
            while n <= n_max {
                let cell = &mut table[n];
                ring.add_assign(cell, &acc);
                ring.add_assign(cell, &acc);
                // new cell = old + 2 acc, so old + acc = new cell - acc
                ring.negate(&mut acc);
                ring.add_assign(&mut acc, cell);
                n += k;
            }
        }
    }
    table
}

/// Exact `p̄(0..=n_max)`.
pub fn overpartition_oracle(n_max: usize) -> Vec<BigInt> {
    overpartition_table(&Integers, n_max)
}

/// `p̄(0..=n_max)` reduced modulo `m`.
///
/// # Panics
/// If `m == 0` or `m >= 2^63`.
pub fn overpartition_oracle_mod(n_max: usize, m: u64) -> Vec<u64> {
    assert!(m >= 1 && check_modulus(m).is_ok(), "invalid modulus {m}");
    overpartition_table(&Residues::new(m), n_max)
}

/// The oracle table as a series (`modulus` 0 for exact counts).
pub fn overpartition_series(order: usize, modulus: u64) -> TruncatedSeries {
    if modulus == 0 {
        TruncatedSeries::new(overpartition_oracle(order), 0).expect("nonempty")
    } else {
        let table = overpartition_oracle_mod(order, modulus);
        TruncatedSeries::from_sparse(
            order,
            modulus,
            table.into_iter().enumerate().map(|(n, c)| (n, c as i64)),
        )
    }
}

/// `sum p̄(n) q^n = f_2 / f_1^2`.
pub fn overpartition_gf(order: usize, modulus: u64) -> TruncatedSeries {
    eta_quotient(&EtaQuotient::new([(2, 1), (1, -2)]), order, modulus)
}

/// The claim `p̄(step*n + offset) ≡ 0 (mod modulus)` for `0 <= n <= n_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceClaim {
    pub step: usize,
    pub offset: usize,
    pub modulus: u64,
    pub n_max: usize,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ClaimError {
    #[error("step must be at least 1")]
    ZeroStep,
    #[error("offset {offset} must be below step {step}")]
    OffsetOutOfRange { step: usize, offset: usize },
    #[error("modulus must be in [2, 2^63), got {0}")]
    BadModulus(u64),
}

impl CongruenceClaim {
    pub fn new(step: usize, offset: usize, modulus: u64, n_max: usize) -> Result<Self, ClaimError> {
        if step == 0 {
            return Err(ClaimError::ZeroStep);
        }
        if offset >= step {
            return Err(ClaimError::OffsetOutOfRange { step, offset });
        }
        if modulus < 2 || check_modulus(modulus).is_err() {
            return Err(ClaimError::BadModulus(modulus));
        }
        Ok(CongruenceClaim {
            step,
            offset,
            modulus,
            n_max,
        })
    }

    /// Largest exponent of the full generating function the scan needs.
    pub fn required_order(&self) -> usize {
        self.step * self.n_max + self.offset
    }
}

/// One `n` with `p̄(step*n + offset) ≢ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    pub residue: u64,
}

/// Where scan coefficients come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScanMode {
    /// `f_2 / f_1^2` expanded directly in `Z/m`.
    #[default]
    Residue,
    /// Exact oracle counts, reduced afterwards (audit path).
    Exact,
}

/// Checks a congruence claim; violations come back in increasing `n`.
pub fn scan_congruence(claim: &CongruenceClaim) -> Vec<Violation> {
    scan_congruence_with(claim, ScanMode::Residue)
}

pub fn scan_congruence_with(claim: &CongruenceClaim, mode: ScanMode) -> Vec<Violation> {
    let order = claim.required_order();
    let residues: Vec<u64> = match mode {
        ScanMode::Residue => overpartition_gf(order, claim.modulus)
            .residues()
            .expect("residue series")
            .to_vec(),
        ScanMode::Exact => {
            let m = BigInt::from(claim.modulus);
            overpartition_oracle(order)
                .iter()
                .map(|c| u64::try_from(c % &m).expect("nonnegative residue"))
                .collect()
        }
    };
    (0..=claim.n_max)
        .filter_map(|n| {
            let r = residues[claim.step * n + claim.offset];
            (r != 0).then_some(Violation { n, residue: r })
        })
        .collect()
}
