//! The `(p, k)` parametrisation built from `phi(q)` and `phi(q^3)`.
//!
//! `p = (phi(q)^2 - phi(q^3)^2) / (2 phi(q^3)^2)` and
//! `k = phi(q^3)^3 / phi(q)` both have integer coefficients. The degree-20
//! polynomial `F` expresses `2^19 sum p̄(40n+35) q^n` modulo 5 as
//! `f_2^22 / f_1^23 * F(p)`.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::SeriesError;
use crate::overpartitions::overpartition_series;
use crate::series::TruncatedSeries;
use crate::special::{eta_quotient, phi, phi_at, EtaQuotient};
use crate::verify::VerificationReport;

/// Coefficients `c_0 ..= c_20` of `F(p) = sum c_j p^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FPolynomial {
    coeffs: [i64; 21],
}

impl FPolynomial {
    pub const PRINTED: [i64; 21] = [
        2621440,
        30146560,
        443678720,
        4203806720,
        25364889600,
        112351805440,
        378957086720,
        980173332480,
        1961928110080,
        3051430471680,
        3658168560640,
        3316049272320,
        2205104730880,
        1020945279360,
        295430818880,
        40648474720,
        694662000,
        168540920,
        -82928860,
        12386590,
        98305,
    ];

    pub fn printed() -> Self {
        FPolynomial {
            coeffs: Self::PRINTED,
        }
    }

    pub fn coefficients(&self) -> &[i64; 21] {
        &self.coeffs
    }

    /// A copy with `c_degree` replaced.
    pub fn with_coefficient(&self, degree: usize, value: i64) -> Self {
        let mut coeffs = self.coeffs;
        coeffs[degree] = value;
        FPolynomial { coeffs }
    }

    /// Horner evaluation at a series argument.
    pub fn evaluate(&self, p: &TruncatedSeries) -> TruncatedSeries {
        let (order, m) = (p.order(), p.modulus());
        let mut acc = TruncatedSeries::constant(self.coeffs[20], order, m);
        for &c in self.coeffs[..20].iter().rev() {
            acc = acc
                .mul(p)
                .and_then(|a| a.add(&TruncatedSeries::constant(c, order, m)))
                .expect("same modulus");
        }
        acc
    }
}

impl Default for FPolynomial {
    fn default() -> Self {
        Self::printed()
    }
}

/// `p(q)` to `order`, from its defining theta quotient.
pub fn compute_p(order: usize) -> Result<TruncatedSeries, SeriesError> {
    let phi1 = phi(order, 0);
    let phi3 = phi_at(3, order, 0);
    let phi3_sq = phi3.pow(2)?;
    let num = phi1.pow(2)?.sub(&phi3_sq)?;
    halve_exact(&num.div(&phi3_sq)?)
}

fn halve_exact(s: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    let two = BigInt::from(2);
    let mut out = Vec::with_capacity(s.order() + 1);
    for (n, c) in s.coefficients().into_iter().enumerate() {
        let (q, r) = c.div_rem(&two);
        if !r.is_zero() {
            return Err(SeriesError::InexactDivision {
                divisor: 2,
                exponent: n,
            });
        }
        out.push(q);
    }
    TruncatedSeries::new(out, 0)
}

/// `p = 2q f_2^3 f_3^3 f_12^6 / (f_1 f_4^2 f_6^9)`.
pub fn p_eta_form(order: usize) -> TruncatedSeries {
    eta_quotient(
        &EtaQuotient::new([(2, 3), (3, 3), (12, 6), (1, -1), (4, -2), (6, -9)]),
        order,
        0,
    )
    .shift_mul(1)
    .scale(2)
}

/// The eta form as commonly printed, `2 f_2^3 f_3^3 f_12^6 / (f_1 f_4^2 f_9^6)`,
/// which has weight 3 and a nonzero constant term, so it cannot equal `p`.
pub fn p_eta_form_printed(order: usize) -> TruncatedSeries {
    eta_quotient(
        &EtaQuotient::new([(2, 3), (3, 3), (12, 6), (1, -1), (4, -2), (9, -6)]),
        order,
        0,
    )
    .scale(2)
}

/// `k(q) = phi(q^3)^3 / phi(q)` to `order`.
pub fn compute_k(order: usize) -> Result<TruncatedSeries, SeriesError> {
    phi_at(3, order, 0).pow(3)?.div(&phi(order, 0))
}

/// `F(p)` for the printed polynomial.
pub fn evaluate_f(p: &TruncatedSeries, order: usize) -> TruncatedSeries {
    FPolynomial::printed().evaluate(&p.truncate(order))
}

/// `2^19 sum p̄(40n+35) q^n ≡ f_2^22/f_1^23 F(p) (mod 5)` to `order`.
pub fn verify_r7(order: usize) -> VerificationReport {
    verify_r7_with(&FPolynomial::printed(), order)
}

pub fn verify_r7_with(poly: &FPolynomial, order: usize) -> VerificationReport {
    let start = Instant::now();
    let sides = r7_sides(poly, order).map_err(|e| e.to_string());
    VerificationReport::from_result("R-7", order, sides, start.elapsed())
}

/// Both sides of the parametrised congruence, reduced mod 5.
pub fn r7_sides(
    poly: &FPolynomial,
    order: usize,
) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
    const M: u64 = 5;
    let lhs = overpartition_series(40 * order + 35, M)
        .dissect(40, 35)?
        .scale(1 << 19);
    let p = compute_p(order)?.reduce_mod(M)?;
    let rhs = eta_quotient(&EtaQuotient::new([(2, 22), (1, -23)]), order, M).mul(&poly.evaluate(&p))?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::eta_f;

    fn poly(coeffs: &[TruncatedSeries]) -> TruncatedSeries {
        coeffs
            .iter()
            .skip(1)
            .fold(coeffs[0].clone(), |acc, s| acc.mul(s).unwrap())
    }

    fn lin(a: i64, b: i64, p: &TruncatedSeries) -> TruncatedSeries {
        // a + b p
        let n = p.order();
        TruncatedSeries::constant(a, n, 0).add(&p.scale(b)).unwrap()
    }

    #[test]
    fn p_matches_eta_form() {
        let p = compute_p(300).unwrap();
        assert!(p.coeff_is_zero(0));
        assert_eq!(p, p_eta_form(300));
        assert_eq!(p.coeff(1), BigInt::from(2));
        assert_ne!(p, p_eta_form_printed(300));
    }

    #[test]
    fn k_identity() {
        let k = compute_k(300).unwrap();
        assert_eq!(k.coeff(0), BigInt::from(1));
        assert_eq!(k.mul(&phi(300, 0)).unwrap(), phi_at(3, 300, 0).pow(3).unwrap());
    }

    #[test]
    fn f1_power_form() {
        // 16 q f_1^24 = p (1-p)^12 (1+p)^4 (1+2p)^3 (2+p)^3 k^12
        let n = 200;
        let p = compute_p(n).unwrap();
        let k = compute_k(n).unwrap();
        let lhs = eta_f(1, n, 0).pow(24).unwrap().shift_mul(1).scale(16);
        let rhs = poly(&[
            p.clone(),
            lin(1, -1, &p).pow(12).unwrap(),
            lin(1, 1, &p).pow(4).unwrap(),
            lin(1, 2, &p).pow(3).unwrap(),
            lin(2, 1, &p).pow(3).unwrap(),
            k.pow(12).unwrap(),
        ]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn f_coefficients_divisible_by_five() {
        let f = FPolynomial::printed();
        assert!(f.coefficients().iter().all(|c| c % 5 == 0));
        assert_eq!(f.coefficients()[0], 2621440);
        assert_eq!(f.coefficients()[20], 98305);
        assert_eq!(f.coefficients()[19], 12386590);
    }

    #[test]
    fn evaluate_f_cases() {
        let zero = TruncatedSeries::zero(10, 0);
        assert_eq!(evaluate_f(&zero, 10), TruncatedSeries::constant(2621440, 10, 0));
        let p = compute_p(200).unwrap();
        assert!(evaluate_f(&p, 200).reduce_mod(5).unwrap().is_zero());
        // F(x) with x = 1 (a constant argument) is the coefficient sum
        let one = TruncatedSeries::one(0, 0);
        let sum: i64 = FPolynomial::PRINTED.iter().sum();
        assert_eq!(evaluate_f(&one, 0).coeff(0), BigInt::from(sum));
    }

    #[test]
    fn r7_passes_and_both_sides_vanish() {
        let report = verify_r7(100);
        assert!(report.passed(), "{report:?}");
        let (l, r) = r7_sides(&FPolynomial::printed(), 60).unwrap();
        assert!(l.is_zero() && r.is_zero());
    }

    #[test]
    fn r7_detects_perturbed_constant() {
        let bad = FPolynomial::printed().with_coefficient(0, FPolynomial::PRINTED[0] + 1);
        let report = verify_r7_with(&bad, 30);
        assert!(!report.passed());
        assert_eq!(report.first_mismatch.unwrap().exponent, 0);
    }

    #[test]
    fn r7_perturbation_surfaces_at_matching_power() {
        // p = 2q + ..., so a change in c_j first shows at q^j
        let bad = FPolynomial::printed().with_coefficient(3, FPolynomial::PRINTED[3] + 1);
        let report = verify_r7_with(&bad, 30);
        assert_eq!(report.first_mismatch.unwrap().exponent, 3);
    }
}
