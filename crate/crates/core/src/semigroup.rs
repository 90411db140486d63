//! `t_k(i)`, `beta(i)` and the absolute maximal elements of the generalized
//! Weierstrass semigroup of a tuple of totally ramified places.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{ceil_div, floor_div};
use crate::curve::KummerCurve;
use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};

fn check_index(curve: &KummerCurve, i: u32) -> Result<()> {
    if i == 0 || i >= curve.m() {
        return Err(Error::IndexOutOfRange(format!("i = {i} outside [1, {}]", curve.m() - 1)));
    }
    Ok(())
}

/// `(i * lambda) mod m` for a totally ramified place.
pub fn t_val(curve: &KummerCurve, place: &Place, i: u32) -> Result<u32> {
    check_index(curve, i)?;
    let lambda = curve.signed_lambda(place)?;
    Ok((i as i64 * lambda).rem_euclid(curve.m() as i64) as u32)
}

/// `sum_k ceil(i lambda_k / m) + ceil(-i deg f / m) - 1`.
pub fn beta(curve: &KummerCurve, i: u32) -> Result<i64> {
    check_index(curve, i)?;
    Ok(beta_unchecked(curve, i))
}

pub(crate) fn beta_unchecked(curve: &KummerCurve, i: u32) -> i64 {
    let m = curve.m() as i64;
    let i = i as i64;
    let zeros: i64 = curve.roots().iter().map(|r| ceil_div(i * r.lambda as i64, m)).sum();
    zeros + ceil_div(-i * curve.deg_f() as i64, m) - 1
}

/// An ordered tuple of distinct totally ramified places.
#[derive(Clone, Debug)]
pub struct QTuple<'c> {
    curve: &'c KummerCurve,
    places: Vec<Place>,
    lambdas: Vec<i64>,
    betas: Vec<i64>,
}

impl<'c> QTuple<'c> {
    pub fn new(curve: &'c KummerCurve, places: Vec<Place>) -> Result<QTuple<'c>> {
        let mut seen = BTreeSet::new();
        let mut lambdas = Vec::with_capacity(places.len());
        for p in &places {
            if !seen.insert(*p) {
                return Err(Error::DuplicatePlace(p.id()));
            }
            lambdas.push(curve.signed_lambda(p)?);
        }
        let betas = (0..curve.m()).map(|i| if i == 0 { 0 } else { beta_unchecked(curve, i) }).collect();
        Ok(QTuple { curve, places, lambdas, betas })
    }

    /// Every totally ramified place, infinity first.
    pub fn all_ramified(curve: &'c KummerCurve) -> Result<QTuple<'c>> {
        QTuple::new(curve, curve.totally_ramified_places())
    }

    pub fn curve(&self) -> &'c KummerCurve {
        self.curve
    }

    pub fn places(&self) -> &[Place] {
        &self.places
    }

    pub fn lambdas(&self) -> &[i64] {
        &self.lambdas
    }

    pub fn len(&self) -> usize {
        self.places.len()
    }

    pub fn is_empty(&self) -> bool {
        self.places.is_empty()
    }

    pub fn m(&self) -> u32 {
        self.curve.m()
    }

    /// `beta(i)` for `1 <= i < m`.
    pub fn beta(&self, i: u32) -> i64 {
        self.betas[i as usize]
    }

    /// `t_k(i)` with `t_k(0) = 0`.
    pub fn t(&self, k: usize, i: u32) -> i64 {
        (i as i64 * self.lambdas[k]).rem_euclid(self.m() as i64)
    }

    /// Fails unless `2 <= n <= q`.
    pub fn require_formula_range(&self) -> Result<()> {
        let n = self.places.len();
        let q = self.curve.field().size();
        if n < 2 || n as u64 > q as u64 {
            return Err(Error::QTupleTooSmallOrTooLarge { n, q });
        }
        Ok(())
    }

    pub fn check_alpha(&self, alpha: &[i64]) -> Result<()> {
        if alpha.len() != self.places.len() {
            return Err(Error::AlphaLength { expected: self.places.len(), got: alpha.len() });
        }
        Ok(())
    }

    /// `sum_k alpha_k Q_k`.
    pub fn divisor(&self, alpha: &[i64]) -> Divisor {
        Divisor::from_pairs(self.places.iter().copied().zip(alpha.iter().copied()))
    }

    /// Reads the coefficients of `d` on the tuple; fails if `d` has support
    /// elsewhere.
    pub fn alpha_of(&self, d: &Divisor) -> Result<Vec<i64>> {
        if let Some(p) = d.support().find(|p| !self.places.contains(p)) {
            return Err(Error::UnsupportedSupport(format!("{p} is not in the tuple")));
        }
        Ok(self.places.iter().map(|p| d.coeff(p)).collect())
    }

    /// `n + sum_k floor((alpha_k - t_k(i)) / m)` for `1 <= i < m`.
    pub(crate) fn stratum_sum(&self, alpha: &[i64], i: u32) -> i64 {
        let m = self.m() as i64;
        self.places.len() as i64 + alpha.iter().enumerate().map(|(k, &a)| floor_div(a - self.t(k, i), m)).sum::<i64>()
    }

    /// `sum_k floor(alpha_k / m)`.
    pub(crate) fn floor_sum(&self, alpha: &[i64]) -> i64 {
        let m = self.m() as i64;
        alpha.iter().map(|&a| floor_div(a, m)).sum()
    }
}

/// `(i, j)` naming the point `(m j_k + t_k(i))_k` of the semigroup.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaElement {
    pub i: u32,
    pub j: Vec<i64>,
}

impl GammaElement {
    pub fn embedded(&self, tuple: &QTuple<'_>) -> Vec<i64> {
        let m = tuple.m() as i64;
        self.j.iter().enumerate().map(|(k, &jk)| m * jk + tuple.t(k, self.i)).collect()
    }
}

/// Absolute maximal elements dominated by `alpha`, stratum by stratum, each
/// stratum in lexicographic order of `j`.
pub struct GammaBelow<'t, 'c> {
    tuple: &'t QTuple<'c>,
    alpha: Vec<i64>,
    i: u32,
    upper: Vec<i64>,
    current: Option<Vec<i64>>,
}

/// Smallest `j` in lexicographic order with `sum(j[from..]) = rem` and
/// `j_k <= upper_k`, written into `j[from..]`.
fn fill_minimal(j: &mut [i64], upper: &[i64], from: usize, mut rem: i64) {
    let n = j.len();
    let mut tail: i64 = upper[from + 1..].iter().sum();
    for k in from..n - 1 {
        j[k] = rem - tail;
        rem -= j[k];
        tail -= upper[k + 1];
    }
    j[n - 1] = rem;
}

impl<'t, 'c> GammaBelow<'t, 'c> {
    fn start_stratum(&mut self) {
        while self.i < self.tuple.m() {
            let m = self.tuple.m() as i64;
            let i = self.i;
            self.upper = self.alpha.iter().enumerate().map(|(k, &a)| floor_div(a - self.tuple.t(k, i), m)).collect();
            let target = if i == 0 { 0 } else { self.tuple.beta(i) + 1 - self.alpha.len() as i64 };
            if target <= self.upper.iter().sum::<i64>() {
                let mut j = vec![0; self.alpha.len()];
                fill_minimal(&mut j, &self.upper, 0, target);
                self.current = Some(j);
                return;
            }
            self.i += 1;
        }
        self.current = None;
    }
}

impl Iterator for GammaBelow<'_, '_> {
    type Item = GammaElement;

    fn next(&mut self) -> Option<GammaElement> {
        let j = self.current.take()?;
        let out = GammaElement { i: self.i, j: j.clone() };
        let n = j.len();
        let pos = (0..n.saturating_sub(1)).rev().find(|&p| j[p] < self.upper[p]);
        match pos {
            Some(p) => {
                let mut next = j;
                next[p] += 1;
                let rem: i64 = next[p + 1..].iter().sum::<i64>() - 1;
                fill_minimal(&mut next, &self.upper, p + 1, rem);
                self.current = Some(next);
            }
            None => {
                self.i += 1;
                self.start_stratum();
            }
        }
        Some(out)
    }
}

pub fn gamma_below<'t, 'c>(tuple: &'t QTuple<'c>, alpha: &[i64]) -> Result<GammaBelow<'t, 'c>> {
    tuple.check_alpha(alpha)?;
    if tuple.is_empty() {
        return Err(Error::QTupleTooSmallOrTooLarge { n: 0, q: tuple.curve().field().size() });
    }
    let mut it = GammaBelow { tuple, alpha: alpha.to_vec(), i: 0, upper: Vec::new(), current: None };
    it.start_stratum();
    Ok(it)
}

/// Number of distinct first coordinates among the elements below `alpha`.
pub fn dim_via_classes(tuple: &QTuple<'_>, alpha: &[i64]) -> Result<u64> {
    tuple.require_formula_range()?;
    let m = tuple.m() as i64;
    let firsts: BTreeSet<i64> = gamma_below(tuple, alpha)?.map(|g| m * g.j[0] + tuple.t(0, g.i)).collect();
    Ok(firsts.len() as u64)
}

/// Closed form `max(0, 1 + sum floor(alpha_k/m)) + sum_i max(0, n - beta(i) + sum floor((alpha_k - t_k(i))/m))`.
pub fn dim_formula(tuple: &QTuple<'_>, alpha: &[i64]) -> Result<u64> {
    tuple.require_formula_range()?;
    tuple.check_alpha(alpha)?;
    let mut total = (1 + tuple.floor_sum(alpha)).max(0);
    for i in 1..tuple.m() {
        total += (tuple.stratum_sum(alpha, i) - tuple.beta(i)).max(0);
    }
    Ok(total as u64)
}
