use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use qdissect_core::overpartitions::{overpartition_oracle_mod, overpartition_series};
use qdissect_core::qlang::{eval, expand};
use qdissect_core::series::TruncatedSeries;
use qdissect_core::special::{d_series, e_series, phi_at};
use qdissect_core::verify::{
    catalog, export_catalog, find, parse_catalog, perturb_rhs, verify, verify_records, Backend, Status,
};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x7140_0035),
        failure_persistence: None,
        ..Config::default()
    }
}

/// (A + 2qB + 2q^4 C)^4 mod 5, expanded term by term from multinomial
/// coefficients rather than by repeated multiplication.
fn fourth_power_by_multinomials(n: usize) -> TruncatedSeries {
    let m = 5;
    let a = phi_at(25, n, m);
    let b = d_series(n / 5, m).substitute_power(5).unwrap().truncate(n);
    let c = e_series(n / 5, m).substitute_power(5).unwrap().truncate(n);
    let fact = [1u64, 1, 2, 6, 24];
    let mut total = TruncatedSeries::zero(n, m);
    for i in 0..=4usize {
        for j in 0..=4 - i {
            let k = 4 - i - j;
            let coeff = 24 / (fact[i] * fact[j] * fact[k]) * (1 << (j + k));
            let term = a
                .pow(i as i64)
                .unwrap()
                .mul(&b.pow(j as i64).unwrap())
                .unwrap()
                .mul(&c.pow(k as i64).unwrap())
                .unwrap()
                .shift_mul(j + 4 * k)
                .scale(coeff as i64);
            total = total.add(&term).unwrap();
        }
    }
    total
}

#[test]
fn corrected_expansion_matches_multinomials() {
    let n = 150;
    let want = fourth_power_by_multinomials(n);
    let rec = find("3-6c").unwrap();
    let got = eval(&rec.rhs, n, 5).unwrap().mul(&phi_at(5, n, 5)).unwrap();
    assert_eq!(got, want);
    let printed = rec.as_verbatim().unwrap();
    let bad = eval(&printed.rhs, n, 5).unwrap().mul(&phi_at(5, n, 5)).unwrap();
    assert_ne!(bad, want);
}

#[test]
fn residue_oracle_matches_series() {
    for m in [2u64, 8, 40, 64, 1 << 40] {
        let dp = overpartition_oracle_mod(600, m);
        let gf = overpartition_series(600, m);
        let gf: Vec<u64> = gf.coefficients().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(dp, gf, "mod {m}");
    }
}

#[test]
fn catalog_survives_a_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("qdissect-core-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cat.qcat");
    std::fs::write(&path, export_catalog(catalog())).unwrap();
    let back = parse_catalog(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back.as_slice(), catalog());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reports_are_reproducible() {
    let sample: Vec<_> = ["M-1", "3-9", "R-7", "1-12"].iter().map(|id| find(id).unwrap().clone()).collect();
    let strip = |v: Vec<qdissect_core::VerificationReport>| {
        v.iter().map(|r| r.without_timing()).collect::<Vec<_>>()
    };
    let a = strip(verify_records(&sample, Some(60), false, Backend::Residue));
    let b = strip(verify_records(&sample, Some(60), true, Backend::Residue));
    assert_eq!(a, b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn every_record_passes_at_its_minimum_order() {
    for rec in catalog() {
        let r = verify(rec, Some(rec.min_order), Backend::Residue);
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn negq_commutes_with_odd_dissection() {
    // (-1)^(5n+4) = (-1)^n
    let s = expand("dissect(negq(pbar), 5, 4)", 30, 5).unwrap();
    let t = expand("negq(dissect(pbar, 5, 4))", 30, 5).unwrap();
    assert_eq!(s, t);
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn first_mismatch_follows_the_perturbation(idx in 0usize..1000, e in 0usize..8) {
        let cat = catalog();
        let rec = &cat[idx % cat.len()];
        let r = verify(&perturb_rhs(rec, e), Some(rec.min_order), Backend::Residue);
        prop_assert_eq!(r.status, Status::Fail);
        prop_assert_eq!(r.first_mismatch.unwrap().exponent, e);
    }

    #[test]
    fn audit_backend_agrees(idx in 0usize..1000) {
        let cat = catalog();
        let rec = &cat[idx % cat.len()];
        let a = verify(rec, Some(rec.min_order + 4), Backend::Residue).without_timing();
        let b = verify(rec, Some(rec.min_order + 4), Backend::Audit).without_timing();
        prop_assert_eq!(a, b);
    }
}
