#![allow(dead_code)]

use kummer_core::{Field, FieldElement, KummerCurve};
use rand::seq::SliceRandom;
use rand::Rng;

pub const TEST_FIELDS: [(u32, u32); 5] = [(2, 3), (3, 2), (2, 4), (5, 2), (3, 4)];

/// A random valid curve with `m <= max_m` and `deg f <= max_deg` over one of
/// the given fields.
pub fn random_curve<R: Rng>(rng: &mut R, fields: &[(u32, u32)], max_m: u32, max_deg: u32) -> KummerCurve {
    loop {
        let (p, e) = *fields.choose(rng).unwrap();
        let field = Field::new(p, e).unwrap();
        let m = rng.gen_range(2..=max_m);
        if m % p == 0 {
            continue;
        }
        let q = field.size();
        let r = rng.gen_range(1..=q.min(max_deg)) as usize;
        let mut pool: Vec<u32> = (0..q).collect();
        pool.shuffle(rng);
        let mut deg = 0;
        let mut roots = Vec::new();
        for &a in &pool[..r] {
            let lambda = rng.gen_range(1..m);
            if deg + lambda > max_deg {
                break;
            }
            deg += lambda;
            roots.push((FieldElement::from_encoding(a), lambda));
        }
        if roots.is_empty() {
            continue;
        }
        let leading = FieldElement::from_encoding(rng.gen_range(1..q));
        if let Ok(c) = KummerCurve::new(field, m, leading, roots) {
            return c;
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
