//! Elements of the function field as `sum_{i<m} (n_i(x) / d_i(x)) y^i`.

use alloc::vec::Vec;

use crate::curve::KummerCurve;
use crate::divisor::Place;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFunction {
    /// `terms[i] = (numerator, denominator)` of the coefficient of `y^i`.
    terms: Vec<(Poly, Poly)>,
}

impl CurveFunction {
    pub fn zero(m: u32) -> Self {
        CurveFunction { terms: (0..m).map(|_| (Poly::zero(), Poly::one())).collect() }
    }

    pub fn constant(m: u32, c: FieldElement) -> Self {
        let mut f = CurveFunction::zero(m);
        f.terms[0].0 = Poly::constant(c);
        f
    }

    /// `(num / den) * y^i` with `i < m`.
    pub fn monomial(m: u32, i: usize, num: Poly, den: Poly) -> Result<Self> {
        if i >= m as usize {
            return Err(Error::IndexOutOfRange(alloc::format!("y power {i} >= m = {m}")));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut f = CurveFunction::zero(m);
        f.terms[i] = (num, den);
        Ok(f)
    }

    pub fn y(curve: &KummerCurve) -> Self {
        CurveFunction::y_pow(curve, 1)
    }

    /// `y^k`, reduced with `y^m = f`.
    pub fn y_pow(curve: &KummerCurve, k: u64) -> Self {
        let m = curve.m() as u64;
        let mut f = CurveFunction::zero(curve.m());
        let num = curve.f().pow((k / m) as u32, curve.field());
        f.terms[(k % m) as usize] = (num, Poly::one());
        f
    }

    pub fn x_minus(curve: &KummerCurve, b: FieldElement) -> Self {
        let mut f = CurveFunction::zero(curve.m());
        f.terms[0].0 = Poly::x_minus(curve.field(), b);
        f
    }

    pub fn m(&self) -> u32 {
        self.terms.len() as u32
    }

    pub fn terms(&self) -> &[(Poly, Poly)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(n, _)| n.is_zero())
    }

    pub fn add(&self, other: &CurveFunction, field: &Field) -> CurveFunction {
        let terms =
            self.terms.iter().zip(&other.terms).map(|((n1, d1), (n2, d2))| frac_add(n1, d1, n2, d2, field)).collect();
        CurveFunction { terms }
    }

    pub fn scale(&self, c: FieldElement, field: &Field) -> CurveFunction {
        let terms = self.terms.iter().map(|(n, d)| (n.scale(c, field), d.clone())).collect();
        CurveFunction { terms }
    }

    pub fn mul(&self, other: &CurveFunction, curve: &KummerCurve) -> CurveFunction {
        let field = curve.field();
        let m = self.terms.len();
        let mut out = CurveFunction::zero(m as u32);
        for (i, (n1, d1)) in self.terms.iter().enumerate() {
            if n1.is_zero() {
                continue;
            }
            for (j, (n2, d2)) in other.terms.iter().enumerate() {
                if n2.is_zero() {
                    continue;
                }
                let mut num = n1.mul(n2, field);
                if i + j >= m {
                    num = num.mul(curve.f(), field);
                }
                let den = d1.mul(d2, field);
                let k = (i + j) % m;
                let (on, od) = &out.terms[k];
                out.terms[k] = frac_add(on, od, &num, &den, field);
            }
        }
        out
    }

    /// Value at an affine place.
    pub fn evaluate(&self, curve: &KummerCurve, place: &Place) -> Result<FieldElement> {
        let Place::Affine { x, y } = *place else {
            return Err(Error::UnsupportedPlaceStructure(alloc::format!("evaluation at {place} is not supported")));
        };
        curve.validate_place(place)?;
        let field = curve.field();
        let mut acc = FieldElement::ZERO;
        let mut ypow = FieldElement::ONE;
        for (n, d) in &self.terms {
            if !n.is_zero() {
                let dv = d.eval(field, x);
                if dv.is_zero() {
                    return Err(Error::PoleAtPlace);
                }
                let c = field.div(n.eval(field, x), dv)?;
                acc = field.add(acc, field.mul(c, ypow));
            }
            ypow = field.mul(ypow, y);
        }
        Ok(acc)
    }
}

fn frac_add(n1: &Poly, d1: &Poly, n2: &Poly, d2: &Poly, field: &Field) -> (Poly, Poly) {
    if n1.is_zero() {
        return (n2.clone(), d2.clone());
    }
    if n2.is_zero() {
        return (n1.clone(), d1.clone());
    }
    if d1 == d2 {
        return (n1.add(n2, field), d1.clone());
    }
    (n1.mul(d2, field).add(&n2.mul(d1, field), field), d1.mul(d2, field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;

    #[test]
    fn y4_over_x_reduces_on_hermitian() {
        let h3 = presets::hermitian(3).unwrap();
        let field = h3.field();
        let y4 = CurveFunction::y_pow(&h3, 4);
        let inv_x = CurveFunction::monomial(4, 0, Poly::one(), Poly::x_minus(field, FieldElement::ZERO)).unwrap();
        let g = y4.mul(&inv_x, &h3);
        for x0 in h3.split_x_values() {
            let direct = field.div(h3.f_at(x0), x0).unwrap();
            for p in h3.affine_fiber(x0) {
                assert_eq!(g.evaluate(&h3, &p).unwrap(), direct);
            }
        }
    }

    #[test]
    fn coordinate_and_constant_values() {
        let h3 = presets::hermitian(3).unwrap();
        let x0 = h3.split_x_values()[0];
        let p = h3.affine_fiber(x0)[1];
        let Place::Affine { y, .. } = p else { unreachable!() };
        assert_eq!(CurveFunction::y(&h3).evaluate(&h3, &p).unwrap(), y);
        assert_eq!(CurveFunction::constant(4, FieldElement::ONE).evaluate(&h3, &p).unwrap(), FieldElement::ONE);
        let pole = CurveFunction::monomial(4, 1, Poly::one(), Poly::x_minus(h3.field(), x0)).unwrap();
        assert_eq!(pole.evaluate(&h3, &p), Err(Error::PoleAtPlace));
    }

    #[test]
    fn product_of_y_powers_wraps() {
        let h3 = presets::hermitian(3).unwrap();
        let a = CurveFunction::y_pow(&h3, 3).mul(&CurveFunction::y_pow(&h3, 2), &h3);
        assert_eq!(a, CurveFunction::y_pow(&h3, 5));
    }
}
