//! Dense univariate polynomials over a [`Field`], coefficients low degree first.

use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(FieldElement::ONE)
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `x - b`
    pub fn x_minus(field: &Field, b: FieldElement) -> Self {
        Poly::from_coeffs(vec![field.neg(b), FieldElement::ONE])
    }

    pub fn monomial(c: FieldElement, degree: usize) -> Self {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, field: &Field, x: FieldElement) -> FieldElement {
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| field.add(field.mul(acc, x), c))
    }

    pub fn add(&self, other: &Poly, field: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Poly, i: usize| p.coeffs.get(i).copied().unwrap_or_default();
        Poly::from_coeffs((0..n).map(|i| field.add(get(self, i), get(other, i))).collect())
    }

    pub fn neg(&self, field: &Field) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|&c| field.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Poly, field: &Field) -> Poly {
        self.add(&other.neg(field), field)
    }

    pub fn scale(&self, c: FieldElement, field: &Field) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly, field: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, k: u32, field: &Field) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self, field))
    }

    /// Quotient and remainder of division by `x - a`.
    pub fn div_by_x_minus(&self, a: FieldElement, field: &Field) -> (Poly, FieldElement) {
        let Some(d) = self.degree() else {
            return (Poly::zero(), FieldElement::ZERO);
        };
        let mut q = vec![FieldElement::ZERO; d];
        let mut carry = FieldElement::ZERO;
        for k in (0..=d).rev() {
            let v = field.add(self.coeffs[k], field.mul(carry, a));
            if k == 0 {
                return (Poly::from_coeffs(q), v);
            }
            q[k - 1] = v;
            carry = v;
        }
        unreachable!()
    }

    /// Distinct roots in the field, ascending by encoding (exhaustive scan).
    pub fn roots(&self, field: &Field) -> Vec<FieldElement> {
        field.elements().filter(|&x| self.eval(field, x).is_zero()).collect()
    }
}
