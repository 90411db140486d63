use kummer_core::rrspace::{dim_oracle, evaluation_matrix, monomial_valuation, rr_monomials};
use kummer_core::semigroup::{beta, dim_formula, dim_via_classes};
use kummer_core::{presets, Divisor, KummerCurve, Place, QTuple};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod common;

/// A random curve with at least two totally ramified places, a random tuple
/// on them and a random alpha.
fn instance(seed: u64) -> (KummerCurve, Vec<Place>, Vec<i64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let c = common::random_curve(&mut rng, &common::TEST_FIELDS, 12, 12);
        let mut ram = c.totally_ramified_places();
        if ram.len() < 2 {
            continue;
        }
        ram.shuffle(&mut rng);
        let n = rng.gen_range(2..=ram.len().min(c.field().size() as usize));
        ram.truncate(n);
        let m = c.m() as i64;
        let alpha = (0..n).map(|_| rng.gen_range(-2 * m..=3 * m)).collect();
        return (c, ram, alpha);
    }
}

#[test]
fn three_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut curves = 0;
    let mut divisors = 0;
    while curves < 25 {
        let c = common::random_curve(&mut rng, &common::TEST_FIELDS, 12, 12);
        let ram = c.totally_ramified_places();
        if ram.len() < 2 {
            continue;
        }
        curves += 1;
        for _ in 0..50 {
            let mut places = ram.clone();
            places.shuffle(&mut rng);
            places.truncate(rng.gen_range(2..=ram.len().min(c.field().size() as usize)));
            let t = QTuple::new(&c, places).unwrap();
            let m = c.m() as i64;
            let alpha: Vec<i64> = (0..t.len()).map(|_| rng.gen_range(-2 * m..=3 * m)).collect();
            let a = dim_formula(&t, &alpha).unwrap();
            let b = dim_via_classes(&t, &alpha).unwrap();
            let o = dim_oracle(&c, &t.divisor(&alpha)).unwrap();
            assert_eq!((a, b), (o, o), "{c:?} {:?} {alpha:?}", t.places());
            divisors += 1;
        }
    }
    assert!(divisors >= 1000);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn formula_matches_class_count(seed in any::<u64>()) {
        let (c, places, alpha) = instance(seed);
        let t = QTuple::new(&c, places).unwrap();
        prop_assert_eq!(dim_formula(&t, &alpha).unwrap(), dim_via_classes(&t, &alpha).unwrap());
        prop_assert_eq!(dim_formula(&t, &alpha).unwrap(), dim_oracle(&c, &t.divisor(&alpha)).unwrap());
    }

    #[test]
    fn dimension_grows_by_at_most_degree(seed in any::<u64>(), k in 0usize..16, step in 1i64..4) {
        let (c, places, alpha) = instance(seed);
        let t = QTuple::new(&c, places).unwrap();
        let k = k % t.len();
        let mut bigger = alpha.clone();
        bigger[k] += step;
        let (small, large) = (dim_formula(&t, &alpha).unwrap(), dim_formula(&t, &bigger).unwrap());
        prop_assert!(small <= large && large <= small + step as u64);
    }

    #[test]
    fn riemann_roch_regimes(seed in any::<u64>()) {
        let (c, places, alpha) = instance(seed);
        let t = QTuple::new(&c, places).unwrap();
        let g = c.genus() as i64;
        let deg: i64 = alpha.iter().sum();
        let ell = dim_formula(&t, &alpha).unwrap() as i64;
        if deg < 0 {
            prop_assert_eq!(ell, 0);
        }
        if deg >= 2 * g - 1 {
            prop_assert_eq!(ell, deg + 1 - g);
        }
        prop_assert!(ell >= deg + 1 - g);
    }

    #[test]
    fn basis_monomials_lie_in_the_space(seed in any::<u64>()) {
        let (c, places, alpha) = instance(seed);
        let d = Divisor::from_pairs(places.iter().copied().zip(alpha.iter().copied()));
        let monos = rr_monomials(&c, &d).unwrap();
        prop_assert_eq!(monos.len() as u64, dim_oracle(&c, &d).unwrap());
        let mut checked: Vec<Place> = c.totally_ramified_places();
        checked.extend((0..c.root_count()).filter(|&k| c.d_root(k) > 1).map(Place::Bundle));
        for mono in &monos {
            for p in &checked {
                if *p == Place::Infinity && c.d_infinity() != 1 {
                    continue;
                }
                let v = monomial_valuation(&c, mono, p).unwrap();
                prop_assert!(v + d.coeff(p) >= 0, "{:?} at {} has valuation {}", mono, p, v);
            }
        }
    }
}

#[test]
fn basis_is_independent_on_enough_places() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut done = 0;
    while done < 40 {
        let (c, places, alpha) = instance(rng.gen());
        let d = Divisor::from_pairs(places.iter().copied().zip(alpha.iter().copied()));
        let monos = rr_monomials(&c, &d).unwrap();
        let need = monos.len() + c.genus() as usize;
        let eval: Vec<Place> = c.split_x_values().into_iter().flat_map(|x| c.affine_fiber(x)).take(need).collect();
        if eval.len() < need || monos.is_empty() {
            continue;
        }
        assert_eq!(evaluation_matrix(&c, &monos, &eval).unwrap().rank(), monos.len());
        done += 1;
    }
}

fn gap_count(c: &KummerCurve, p: Place) -> u64 {
    let g = c.genus() as i64;
    let mut prev = 1;
    let mut gaps = 0;
    for a in 1..=2 * g {
        let ell = dim_oracle(c, &Divisor::single(p, a)).unwrap();
        if ell == prev {
            gaps += 1;
        }
        prev = ell;
    }
    gaps
}

#[test]
fn gap_counts_equal_genus() {
    let mut curves: Vec<KummerCurve> = presets::NAMES.iter().map(|n| presets::by_name(n).unwrap()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    curves.extend((0..30).map(|_| common::random_curve(&mut rng, &common::TEST_FIELDS, 12, 12)));
    for c in &curves {
        for p in c.totally_ramified_places() {
            assert_eq!(gap_count(c, p), c.genus(), "{c:?} at {p}");
        }
    }
}

#[test]
fn beta_sums_to_genus() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let c = common::random_curve(&mut rng, &common::TEST_FIELDS, 12, 12);
        let s: i64 = (1..c.m()).map(|i| beta(&c, i).unwrap()).sum();
        assert_eq!(s, c.genus() as i64);
    }
}
