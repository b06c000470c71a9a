use num_traits::{Signed, Zero};
use proptest::prelude::*;
use stabop::exactpoly::elementary_symmetric;
use stabop::identities::{lkp_sr_decomposition, toeplitz_minor_scan};
use stabop::lpclass::{corpus_member, jensen_polynomial};
use stabop::operators::{apply_lkp, apply_sr, apply_tmu, OperatorSpec};
use stabop::rootcert::{certify_all_real_negative, Verdict};
use stabop::search::SearchRecord;
use stabop::{Polynomial, Rational, TaylorData};

fn member(seed: u64) -> stabop::lpclass::RootedProduct {
    corpus_member(seed, 0, (1, 9), 20).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lkp_preserves_negative_roots(seed in any::<u64>(), p in 1u32..=5) {
        let out = apply_lkp(&member(seed).expand(), p).unwrap();
        prop_assert_eq!(certify_all_real_negative(&out).unwrap().verdict, Verdict::AllRealNegative);
    }

    #[test]
    fn coefficients_are_elementary_symmetric_in_rhos(seed in any::<u64>()) {
        let m = member(seed);
        let p = m.expand();
        for k in 0..=m.degree() {
            prop_assert_eq!(p.coeff(k as i64), elementary_symmetric(&m.rhos, k as i64));
        }
    }

    #[test]
    fn lkp_is_tmu_after_squaring(seed in any::<u64>(), p in 1u32..=4) {
        let psi = member(seed).expand();
        let spec = OperatorSpec::Lkp { p };
        let via_tmu = apply_tmu(&psi, &spec.mu().unwrap()).unwrap();
        let direct = spec.apply(&psi).unwrap();
        for (k, c) in direct.coeffs().iter().enumerate() {
            prop_assert_eq!(&via_tmu.coeff(2 * k as i64), c);
        }
    }

    #[test]
    fn lkp_is_weighted_sum_of_sr(seed in any::<u64>(), p in 1u32..=6) {
        let psi = member(seed).expand();
        let mut sum = Polynomial::zero();
        for (j, w) in lkp_sr_decomposition(p).unwrap() {
            sum = &sum + &apply_sr(&psi, j).unwrap().scale(&w);
        }
        prop_assert_eq!(sum, apply_lkp(&psi, p).unwrap());
    }

    #[test]
    fn rooted_coefficients_have_nonnegative_minors(seed in any::<u64>()) {
        let psi = member(seed).expand();
        let scan = toeplitz_minor_scan(psi.coeffs(), 4, 10).unwrap();
        prop_assert!(scan.first_negative.is_none());
    }

    #[test]
    fn jensen_polynomials_of_products_stay_negative_rooted(seed in any::<u64>(), n in 1usize..=10) {
        let gammas = TaylorData::from_polynomial(&member(seed).expand());
        for scaled in [false, true] {
            let g = jensen_polynomial(&gammas, n, scaled).unwrap();
            prop_assert!(certify_all_real_negative(&g).unwrap().is_all_real_negative());
        }
    }

    #[test]
    fn sr_output_positive_ends(seed in any::<u64>(), r in 1u32..=6) {
        let psi = member(seed).expand();
        let out = apply_sr(&psi, r).unwrap();
        prop_assert!(out.coeff(0).is_positive());
        prop_assert_eq!(out.degree(), psi.degree());
    }
}

#[test]
fn tampered_record_fails_revalidation() {
    let input = Polynomial::from_ints(&[1, 1]).pow(8);
    let operator = OperatorSpec::Sr { r: 6 };
    let certificate = certify_all_real_negative(&operator.apply(&input).unwrap()).unwrap();
    let rec = SearchRecord {
        operator,
        input,
        certificate,
        seed: 0,
        source: "test".into(),
        found_at: 0,
    };
    // S_6 maps (1+x)^8 to a negative-rooted polynomial, so this is not a hit.
    assert!(!rec.revalidate().unwrap());
    let mut forged = rec.clone();
    forged.certificate.verdict = Verdict::NotAllReal;
    assert!(!forged.revalidate().unwrap());
    let mut bad_input = rec;
    bad_input.input = Polynomial::from_ints(&[1, 0, 1]);
    assert!(!bad_input.revalidate().unwrap());
}

#[test]
fn half_integer_rational_roundtrip_in_json() {
    let p = Polynomial::new(vec![
        Rational::new(1.into(), 2.into()),
        Rational::zero(),
        Rational::new((-7).into(), 3.into()),
    ]);
    assert_eq!(Polynomial::from_json(&p.to_json()).unwrap(), p);
    assert_eq!(p.to_json(), r#"{"coeffs":["1/2","0","-7/3"]}"#);
}
