use kummer_core::codes::{
    ag_code, divisor_gcd, divisor_lmd, is_lcp, min_distance, verify_pair_divisors, weight, Distance,
};
use kummer_core::constructions::{t1_s_range, teocodes1, teocodes_r, tr_s_range};
use kummer_core::rrspace::dim_oracle;
use kummer_core::{presets, Divisor, FieldElement, KummerCurve, LinearCode, Matrix, Place};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn split_places(c: &KummerCurve) -> Vec<Place> {
    c.split_x_values().into_iter().flat_map(|x| c.affine_fiber(x)).collect()
}

fn place_strategy() -> impl Strategy<Value = Place> {
    prop_oneof![
        Just(Place::Infinity),
        (0usize..4).prop_map(Place::RamifiedRoot),
        (0usize..3).prop_map(Place::Bundle),
        (0u32..9, 0u32..9)
            .prop_map(|(x, y)| Place::affine(FieldElement::from_encoding(x), FieldElement::from_encoding(y))),
    ]
}

fn divisor_strategy() -> impl Strategy<Value = Divisor> {
    prop::collection::vec((place_strategy(), -6i64..7), 0..8).prop_map(Divisor::from_pairs)
}

proptest! {
    #[test]
    fn gcd_plus_lmd_is_sum(a in divisor_strategy(), b in divisor_strategy()) {
        prop_assert_eq!(divisor_gcd(&a, &b).plus(&divisor_lmd(&a, &b)), a.plus(&b));
        prop_assert_eq!(divisor_gcd(&a, &a), a.clone());
        prop_assert_eq!(divisor_gcd(&a, &b), divisor_gcd(&b, &a));
    }
}

#[test]
fn pointwise_gcd_example() {
    let (q1, q2, q3) = (Place::RamifiedRoot(0), Place::RamifiedRoot(1), Place::RamifiedRoot(2));
    let a = Divisor::from_pairs([(q1, 1), (q2, 2)]);
    let b = Divisor::from_pairs([(q2, 3), (q3, -1)]);
    assert_eq!(divisor_gcd(&a, &b), Divisor::from_pairs([(q2, 2), (q3, -1)]));
    assert_eq!(divisor_lmd(&a, &b), Divisor::from_pairs([(q1, 1), (q2, 3)]));
}

/// `T * generator` for a random invertible `T`.
fn scramble(code: &LinearCode, rng: &mut ChaCha8Rng) -> LinearCode {
    let f = code.field().clone();
    let k = code.dim();
    loop {
        let data = (0..k * k).map(|_| FieldElement::from_encoding(rng.gen_range(0..f.size()))).collect();
        let t = Matrix::new(f.clone(), k, k, data).unwrap();
        if t.rank() == k {
            return LinearCode::from_generator(t.mul(code.generator()).unwrap());
        }
    }
}

#[test]
fn lcp_verdict_ignores_row_operations() {
    let h3 = presets::hermitian(3).unwrap();
    let e = Divisor::from_pairs([(Place::Infinity, -1), (Place::RamifiedRoot(1), 1), (Place::RamifiedRoot(2), 2)]);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = teocodes1(&h3, &e, 3, None).unwrap();
    let (a, b) = &r.codes;
    for _ in 0..5 {
        let (a2, b2) = (scramble(a, &mut rng), scramble(b, &mut rng));
        assert!(is_lcp(&a2, &b2).unwrap().is_lcp);
        assert!(!is_lcp(&a2, &scramble(a, &mut rng)).unwrap().is_lcp);
    }
}

#[test]
fn one_point_codes_on_hermitian() {
    let h3 = presets::hermitian(3).unwrap();
    let places = split_places(&h3);
    let n = places.len() as i64;
    let g = h3.genus() as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for a in -2..=n + 8 {
        let gdiv = Divisor::single(Place::Infinity, a);
        let code = ag_code(&h3, &places, &gdiv).unwrap();
        // D is equivalent to N/m fibres, i.e. N Q_inf
        let expected =
            dim_oracle(&h3, &gdiv).unwrap() - dim_oracle(&h3, &Divisor::single(Place::Infinity, a - n)).unwrap();
        assert_eq!(code.dim() as u64, expected, "a = {a}");
        if 2 * g - 2 < a && a < n {
            assert_eq!(code.dim() as i64, a + 1 - g);
        }
        if code.dim() > 0 && a < n {
            for _ in 0..200 {
                let msg: Vec<FieldElement> =
                    (0..code.dim()).map(|_| FieldElement::from_encoding(rng.gen_range(0..9))).collect();
                let w = weight(&code.encode(&msg));
                assert!(w == 0 || w as i64 >= n - a);
            }
        }
    }
}

#[test]
fn exact_distance_respects_goppa_bound() {
    let h3 = presets::hermitian(3).unwrap();
    let places = split_places(&h3);
    for a in 3..=7 {
        let code = ag_code(&h3, &places, &Divisor::single(Place::Infinity, a)).unwrap();
        match min_distance(&code, Some(&h3)) {
            Distance::Exact(d) => assert!(d as i64 >= 24 - a),
            other => panic!("{other:?}"),
        }
    }
    let big = ag_code(&h3, &places, &Divisor::single(Place::Infinity, 12)).unwrap();
    assert_eq!(min_distance(&big, Some(&h3)), Distance::LowerBoundOnly(12));
}

#[test]
fn construction_invariants_on_hermitian() {
    let h3 = presets::hermitian(3).unwrap();
    let g = h3.genus() as i64;
    let e1 = Divisor::from_pairs([(Place::Infinity, -1), (Place::RamifiedRoot(1), 1), (Place::RamifiedRoot(2), 2)]);
    let (lo, hi) = t1_s_range(&h3, 24);
    for s in lo..=hi {
        let r = teocodes1(&h3, &e1, s, None).unwrap();
        let n = r.d_places.len() as i64;
        assert_eq!(r.g.degree(&h3) + r.h.degree(&h3), n + 2 * g - 2);
        assert_eq!(divisor_gcd(&r.g, &r.h), e1);
        assert!(r.all_pass());
        let divisor_checks = r.report.checks.iter().all(|c| c.passed);
        assert_eq!(divisor_checks, r.report.is_lcp);
    }
    let er = Divisor::from_pairs([(Place::RamifiedRoot(1), 1), (Place::RamifiedRoot(2), 2)]);
    let (lo, hi) = tr_s_range(&h3, 24);
    for s in lo..=hi {
        let r = teocodes_r(&h3, &er, s, None).unwrap();
        let n = r.d_places.len() as i64;
        assert_eq!(n, 21);
        assert_eq!(r.g.degree(&h3) + r.h.degree(&h3), n + 2 * g - 2);
        let first = h3.affine_fiber(h3.split_x_values()[0]);
        assert_eq!(divisor_gcd(&r.g, &r.h), er.plus(&Divisor::single(first[0], -1)));
        assert!(r.all_pass());
        assert!(!r.kernel_degenerate);
    }
}

#[test]
fn divisor_checks_catch_perturbations() {
    let h3 = presets::hermitian(3).unwrap();
    let e = Divisor::from_pairs([(Place::Infinity, -1), (Place::RamifiedRoot(1), 1), (Place::RamifiedRoot(2), 2)]);
    let r = teocodes1(&h3, &e, 3, None).unwrap();
    let failed = |checks: &[kummer_core::codes::Check]| -> Vec<String> {
        checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect()
    };
    let h_plus = r.h.plus(&Divisor::single(Place::RamifiedRoot(0), 1));
    let mut certs = r.certificates.clone();
    certs.gcd.reduced = divisor_gcd(&r.g, &h_plus);
    certs.lmd_minus_d.reduced = certs.lmd_minus_d.reduced.plus(&Divisor::single(Place::RamifiedRoot(0), 1));
    let checks = verify_pair_divisors(&h3, &r.d_places, &r.g, &h_plus, &certs).unwrap();
    assert!(failed(&checks).contains(&"degree_sum".to_string()));

    let g_minus = r.g.minus(&Divisor::single(Place::RamifiedRoot(1), 1));
    let h_plus = r.h.plus(&Divisor::single(Place::RamifiedRoot(1), 1));
    let mut certs = r.certificates.clone();
    certs.gcd.reduced = divisor_gcd(&g_minus, &h_plus);
    certs.lmd_minus_d.reduced = certs.lmd_minus_d.reduced.plus(&Divisor::single(Place::RamifiedRoot(1), 1));
    let checks = verify_pair_divisors(&h3, &r.d_places, &g_minus, &h_plus, &certs).unwrap();
    assert!(failed(&checks).contains(&"gcd_degree".to_string()));

    let mut bad = r.certificates.clone();
    bad.lmd_minus_d.chain[0].1 += 1;
    assert!(verify_pair_divisors(&h3, &r.d_places, &r.g, &r.h, &bad).is_err());
}
