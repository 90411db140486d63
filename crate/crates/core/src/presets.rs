//! Curves used throughout the tests and shipped as CLI curve files.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{is_prime, prime_factors};
use crate::curve::KummerCurve;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Poly;

fn prime_power(q: u32) -> Result<(u32, u32)> {
    let f = prime_factors(q as u64);
    if f.len() != 1 {
        return Err(Error::NotPrime(q));
    }
    let p = f[0] as u32;
    let mut e = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        e += 1;
    }
    Ok((p, e))
}

/// Builds `y^m = f(x)` from a polynomial that splits into linear factors.
pub fn from_split_polynomial(field: &Field, m: u32, f: &Poly) -> Result<KummerCurve> {
    let lead = *f.coeffs().last().ok_or(Error::ZeroLeading)?;
    let mut rest = f.clone();
    let mut roots = Vec::new();
    for a in f.roots(field) {
        let mut mult = 0u32;
        loop {
            let (quo, r) = rest.div_by_x_minus(a, field);
            if !r.is_zero() {
                break;
            }
            rest = quo;
            mult += 1;
        }
        roots.push((a, mult));
    }
    if rest.degree() != Some(0) {
        return Err(Error::UnsupportedPlaceStructure(format!(
            "f does not split over GF({}^{})",
            field.characteristic(),
            field.degree()
        )));
    }
    KummerCurve::new(field.clone(), m, lead, roots)
}

/// `y^(q+1) = x^q + x` over `GF(q^2)`.
pub fn hermitian(q: u32) -> Result<KummerCurve> {
    let (p, e) = prime_power(q)?;
    let field = Field::new(p, 2 * e)?;
    let f = Poly::monomial(FieldElement::ONE, q as usize).add(&Poly::monomial(FieldElement::ONE, 1), &field);
    from_split_polynomial(&field, q + 1, &f)
}

/// `y^7 = x^5 (1 - x^8)` over `GF(3^6)`.
pub fn z_curve() -> Result<KummerCurve> {
    let field = Field::new(3, 6)?;
    let one = FieldElement::ONE;
    let f = Poly::monomial(one, 5).mul(&Poly::constant(one).sub(&Poly::monomial(one, 8), &field), &field);
    from_split_polynomial(&field, 7, &f)
}

/// `y^(q^3+1) = (x^q + x) h(x)^(q+1)` with
/// `h(x) = sum_{i=0}^{q} (-1)^(i+1) x^(i(q-1))`, over `GF(q^6)`.
pub fn gk(q: u32) -> Result<KummerCurve> {
    let (p, e) = prime_power(q)?;
    let field = Field::new(p, 6 * e)?;
    let mut h = Poly::zero();
    for i in 0..=q {
        let sign = if i % 2 == 1 { FieldElement::ONE } else { field.neg(FieldElement::ONE) };
        h = h.add(&Poly::monomial(sign, (i * (q - 1)) as usize), &field);
    }
    let xq_x = Poly::monomial(FieldElement::ONE, q as usize).add(&Poly::monomial(FieldElement::ONE, 1), &field);
    let f = xq_x.mul(&h.pow(q + 1, &field), &field);
    from_split_polynomial(&field, q * q * q + 1, &f)
}

/// A small curve of the shape `y^m = h_1(x) h_2(x)^lambda`: over `GF(11)`,
/// `m = 5`, `lambda = 3`, `h_2` with roots `{0, 1}` and `h_1` with roots
/// `{2, 3, 4, 5}`, so that `deg h_1 >= deg h_2 * (m - lambda)`.
pub fn w_curve() -> Result<KummerCurve> {
    let field = Field::new(11, 1)?;
    let roots: Vec<(FieldElement, u32)> = [(0, 3), (1, 3), (2, 1), (3, 1), (4, 1), (5, 1)]
        .into_iter()
        .map(|(a, l)| (FieldElement::from_encoding(a), l))
        .collect();
    KummerCurve::new(field, 5, FieldElement::ONE, roots)
}

/// Separable `y^m = prod_{a in roots} (x - a)` with leading coefficient 1.
pub fn separable(p: u32, e: u32, m: u32, roots: &[u32]) -> Result<KummerCurve> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let field = Field::new(p, e)?;
    let roots: Vec<(FieldElement, u32)> = roots.iter().map(|&a| Ok((field.element(a)?, 1))).collect::<Result<_>>()?;
    KummerCurve::new(field, m, FieldElement::ONE, roots)
}

/// Names accepted by [`by_name`].
pub const NAMES: [&str; 5] = ["h2", "h3", "z", "gk2", "w"];

pub fn by_name(name: &str) -> Result<KummerCurve> {
    match name {
        "h2" => hermitian(2),
        "h3" => hermitian(3),
        "z" => z_curve(),
        "gk2" => gk(2),
        "w" => w_curve(),
        _ => Err(Error::Parse(format!("unknown preset {name:?}"))),
    }
}
