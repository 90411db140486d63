//! Riemann-Roch spaces of divisors supported on ramified places, bundles
//! and infinity, via the decomposition `L(D) = sum_i y^i L_x(A_i)` over the
//! rational subfield.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::floor_div;
use crate::codes::Matrix;
use crate::curve::KummerCurve;
use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, LOG_ZERO};
use crate::function::CurveFunction;
use crate::poly::Poly;

/// A divisor of `F_q(x)` supported on the roots of `f` and infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XLineDivisor {
    /// Coefficient at `x = a_k`, indexed like the curve's roots.
    pub at_roots: Vec<i64>,
    pub at_infinity: i64,
}

impl XLineDivisor {
    pub fn degree(&self) -> i64 {
        self.at_roots.iter().sum::<i64>() + self.at_infinity
    }
}

/// Per-root and infinity coefficients of `D` (bundles and ramified places
/// merged), rejecting affine places.
fn ramified_coefficients(curve: &KummerCurve, d: &Divisor) -> Result<(Vec<i64>, i64)> {
    let mut at_roots = vec![0i64; curve.root_count()];
    let mut at_inf = 0;
    for (p, &c) in d.iter() {
        match *p {
            Place::Infinity if curve.d_infinity() == 1 => at_inf += c,
            Place::RamifiedRoot(k) if k < curve.root_count() && curve.d_root(k) == 1 => at_roots[k] += c,
            Place::Bundle(k) if k < curve.root_count() => at_roots[k] += c,
            _ => return Err(Error::UnsupportedSupport(format!("{p} is not a ramified place or bundle"))),
        }
    }
    Ok((at_roots, at_inf))
}

/// The largest `A` with `y^i h` in `L(D)` for all `h` in `L_x(A)`.
pub fn restrict_to_xline(curve: &KummerCurve, d: &Divisor, i: u32) -> Result<XLineDivisor> {
    if i >= curve.m() {
        return Err(Error::IndexOutOfRange(format!("i = {i} >= m = {}", curve.m())));
    }
    let (coeffs, c_inf) = ramified_coefficients(curve, d)?;
    Ok(restrict_coeffs(curve, &coeffs, c_inf, i))
}

fn restrict_coeffs(curve: &KummerCurve, coeffs: &[i64], c_inf: i64, i: u32) -> XLineDivisor {
    let m = curve.m() as i64;
    let i = i as i64;
    let at_roots = curve
        .roots()
        .iter()
        .enumerate()
        .map(|(k, r)| floor_div(coeffs[k] * curve.d_root(k) as i64 + i * r.lambda as i64, m))
        .collect();
    let at_infinity = floor_div(c_inf * curve.d_infinity() as i64 - i * curve.deg_f() as i64, m);
    XLineDivisor { at_roots, at_infinity }
}

/// `sum_i max(0, deg A_i + 1)`.
pub fn dim_oracle(curve: &KummerCurve, d: &Divisor) -> Result<u64> {
    let (coeffs, c_inf) = ramified_coefficients(curve, d)?;
    Ok((0..curve.m()).map(|i| (restrict_coeffs(curve, &coeffs, c_inf, i).degree() + 1).max(0) as u64).sum())
}

/// `y^i x^j prod_k (x - a_k)^{-A_k}`, the basis elements of [`rr_basis`] in a
/// form that evaluates quickly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrMonomial {
    pub ypow: u32,
    pub xpow: u32,
    /// `(root index, exponent of (x - a_k))`, nonzero exponents only.
    pub factors: Vec<(usize, i64)>,
}

impl RrMonomial {
    pub fn to_function(&self, curve: &KummerCurve) -> CurveFunction {
        let field = curve.field();
        let mut num = Poly::monomial(FieldElement::ONE, self.xpow as usize);
        let mut den = Poly::one();
        for &(k, e) in &self.factors {
            let lin = Poly::x_minus(field, curve.roots()[k].a);
            if e > 0 {
                num = num.mul(&lin.pow(e as u32, field), field);
            } else {
                den = den.mul(&lin.pow((-e) as u32, field), field);
            }
        }
        CurveFunction::monomial(curve.m(), self.ypow as usize, num, den)
            .expect("ypow < m and the denominator is a nonzero product")
    }

    /// Value at an affine place `(x, y)` with `f(x) != 0`.
    pub fn evaluate(&self, curve: &KummerCurve, x: FieldElement, y: FieldElement) -> FieldElement {
        let field = curve.field();
        let log = field.log_table();
        let order = field.size() as u64 - 1;
        let mut acc: u64 = 0;
        if self.xpow > 0 {
            let lx = log[x.encoding() as usize];
            if lx == LOG_ZERO {
                return FieldElement::ZERO;
            }
            acc += lx as u64 * self.xpow as u64;
        }
        let ly = log[y.encoding() as usize] as u64;
        acc += ly * self.ypow as u64;
        for &(k, e) in &self.factors {
            let l = log[field.sub(x, curve.roots()[k].a).encoding() as usize] as u64;
            acc += (l * e.rem_euclid(order as i64) as u64) % order;
        }
        field.exp(acc)
    }
}

/// A basis of `L(D)` as monomials.
pub fn rr_monomials(curve: &KummerCurve, d: &Divisor) -> Result<Vec<RrMonomial>> {
    let (coeffs, c_inf) = ramified_coefficients(curve, d)?;
    let mut out = Vec::new();
    for i in 0..curve.m() {
        let a = restrict_coeffs(curve, &coeffs, c_inf, i);
        let deg = a.degree();
        if deg < 0 {
            continue;
        }
        let factors: Vec<(usize, i64)> =
            a.at_roots.iter().enumerate().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, -c)).collect();
        for j in 0..=deg {
            out.push(RrMonomial { ypow: i, xpow: j as u32, factors: factors.clone() });
        }
    }
    Ok(out)
}

/// A basis of `L(D)`.
pub fn rr_basis(curve: &KummerCurve, d: &Divisor) -> Result<Vec<CurveFunction>> {
    Ok(rr_monomials(curve, d)?.iter().map(|mono| mono.to_function(curve)).collect())
}

/// Valuation of a monomial at a place of the ramified/bundle/infinity kind.
/// For a bundle the value is the common valuation at each place over `a_k`.
pub fn monomial_valuation(curve: &KummerCurve, mono: &RrMonomial, place: &Place) -> Result<i64> {
    let m = curve.m() as i64;
    let exp_at = |k: usize| mono.factors.iter().find(|f| f.0 == k).map_or(0, |f| f.1);
    match *place {
        Place::Infinity if curve.d_infinity() == 1 => {
            let total: i64 = mono.xpow as i64 + mono.factors.iter().map(|f| f.1).sum::<i64>();
            Ok(-(mono.ypow as i64) * curve.deg_f() as i64 - m * total)
        }
        Place::RamifiedRoot(k) | Place::Bundle(k) if k < curve.root_count() => {
            if matches!(place, Place::RamifiedRoot(_)) && curve.d_root(k) != 1 {
                return Err(Error::NotTotallyRamified(place.id()));
            }
            let dk = curve.d_root(k) as i64;
            let mut v = mono.ypow as i64 * curve.roots()[k].lambda as i64 / dk + (m / dk) * exp_at(k);
            if curve.roots()[k].a.is_zero() {
                v += (m / dk) * mono.xpow as i64;
            }
            Ok(v)
        }
        _ => Err(Error::UnsupportedSupport(format!("{place} has no symbolic valuation"))),
    }
}

/// Combinations of `basis` vanishing at every constraint place, as
/// coefficient vectors over `basis`.
pub fn kernel_combinations(
    curve: &KummerCurve,
    basis: &[CurveFunction],
    constraints: &[Place],
) -> Result<Vec<Vec<FieldElement>>> {
    let field = curve.field();
    let mut rows = Vec::with_capacity(constraints.len());
    for p in constraints {
        let row = basis.iter().map(|f| f.evaluate(curve, p)).collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let mat = Matrix::from_rows(field.clone(), basis.len(), rows)?;
    Ok(mat.null_space())
}

/// A basis of the subspace of `span(basis)` vanishing at the constraint places.
pub fn kernel_basis(curve: &KummerCurve, basis: &[CurveFunction], constraints: &[Place]) -> Result<Vec<CurveFunction>> {
    let field = curve.field();
    let combos = kernel_combinations(curve, basis, constraints)?;
    Ok(combos
        .iter()
        .map(|v| {
            v.iter().zip(basis).fold(CurveFunction::zero(curve.m()), |acc, (&c, f)| {
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&f.scale(c, field), field)
                }
            })
        })
        .collect())
}

/// Evaluation of monomials at affine places, one row per monomial.
pub fn evaluation_matrix(curve: &KummerCurve, monos: &[RrMonomial], places: &[Place]) -> Result<Matrix> {
    let coords: Vec<(FieldElement, FieldElement)> = places
        .iter()
        .map(|p| match *p {
            Place::Affine { x, y } => Ok((x, y)),
            _ => Err(Error::UnsupportedPlaceStructure(format!("{p} is not affine"))),
        })
        .collect::<Result<_>>()?;
    let field: &Field = curve.field();
    let mut data = Vec::with_capacity(monos.len() * places.len());
    for mono in monos {
        for &(x, y) in &coords {
            data.push(mono.evaluate(curve, x, y));
        }
    }
    Matrix::new(field.clone(), monos.len(), places.len(), data)
}
