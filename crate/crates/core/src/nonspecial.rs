//! Non-special divisors of degree `g - 1` and `g` supported on totally
//! ramified places: criteria, explicit families and classification.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{ceil_div, floor_div, gcd};
use crate::curve::KummerCurve;
use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::semigroup::{dim_formula, QTuple};

/// Largest `m^n` box [`scan_gminus1`] will walk.
pub const SCAN_CAP: u128 = 1 << 22;

/// `sum floor(alpha_k/m) = -1` and `n + sum floor((alpha_k - t_k(i))/m) = beta(i)` for all `i`.
pub fn check_gminus1(tuple: &QTuple<'_>, alpha: &[i64]) -> Result<bool> {
    tuple.require_formula_range()?;
    tuple.check_alpha(alpha)?;
    let ok = gminus1_conditions(tuple, alpha);
    if ok {
        debug_assert_eq!(alpha.iter().sum::<i64>(), tuple.curve().genus() as i64 - 1);
        debug_assert_eq!(dim_formula(tuple, alpha), Ok(0));
    }
    Ok(ok)
}

fn gminus1_conditions(tuple: &QTuple<'_>, alpha: &[i64]) -> bool {
    tuple.floor_sum(alpha) == -1 && (1..tuple.m()).all(|i| tuple.stratum_sum(alpha, i) == tuple.beta(i))
}

/// Either all equalities with `sum floor(alpha_k/m) = 0`, or
/// `sum floor(alpha_k/m) = -1` with exactly one index exceeding `beta` by one.
pub fn check_g(tuple: &QTuple<'_>, alpha: &[i64]) -> Result<bool> {
    tuple.require_formula_range()?;
    tuple.check_alpha(alpha)?;
    let diffs: Vec<i64> = (1..tuple.m()).map(|i| tuple.stratum_sum(alpha, i) - tuple.beta(i)).collect();
    let ok = match tuple.floor_sum(alpha) {
        0 => diffs.iter().all(|&d| d == 0),
        -1 => diffs.iter().filter(|&&d| d == 1).count() == 1 && diffs.iter().all(|&d| d == 0 || d == 1),
        _ => false,
    };
    if ok {
        debug_assert_eq!(alpha.iter().sum::<i64>(), tuple.curve().genus() as i64);
        debug_assert_eq!(dim_formula(tuple, alpha), Ok(1));
    }
    Ok(ok)
}

/// For `alpha` in `[0, m-1]^n`: `n + sum floor((alpha_k - t_k(i))/m) = beta(i)` for all `i`.
pub fn check_effective_g(tuple: &QTuple<'_>, alpha: &[i64]) -> Result<bool> {
    tuple.check_alpha(alpha)?;
    let m = tuple.m() as i64;
    if let Some(&a) = alpha.iter().find(|&&a| a < 0 || a >= m) {
        return Err(Error::AlphaOutOfRange(a));
    }
    Ok((1..tuple.m()).all(|i| tuple.stratum_sum(alpha, i) == tuple.beta(i)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryCondition {
    pub possible: bool,
    pub witness: Option<String>,
}

/// Necessary conditions for a degree `g - 1` non-special divisor supported on
/// the tuple: `floor(deg f / m) >= r - n - 1`, where `r` counts the roots and
/// the pole, and `max beta(i) <= n - 1`.
pub fn necessary_condition(tuple: &QTuple<'_>) -> NecessaryCondition {
    let curve = tuple.curve();
    let n = tuple.len() as i64;
    let r = curve.root_count() as i64 + 1;
    let lhs = curve.deg_f() as i64 / curve.m() as i64;
    if lhs < r - n - 1 {
        return NecessaryCondition {
            possible: false,
            witness: Some(format!("floor(degf/m)={lhs} < r-n-1={}", r - n - 1)),
        };
    }
    for i in 1..curve.m() {
        let b = tuple.beta(i);
        if b > n - 1 {
            return NecessaryCondition { possible: false, witness: Some(format!("beta({i})={b} > n-1={}", n - 1)) };
        }
    }
    NecessaryCondition { possible: true, witness: None }
}

/// All divisors `sum m j_k Q_k + alpha_0 Q_0 + D_sigma(alpha)` with
/// `sum j_k = -1`. `alpha0`, when present, is pinned to the first place;
/// the multiset is distributed over the remaining places by permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GMinus1Family {
    pub places: Vec<Place>,
    pub alpha0: Option<i64>,
    pub alpha_multiset: Vec<i64>,
    pub j_sum: i64,
    pub canonical: Divisor,
}

impl GMinus1Family {
    fn new(places: Vec<Place>, alpha0: Option<i64>, mut alpha_multiset: Vec<i64>, m: u32) -> Self {
        alpha_multiset.sort_unstable();
        let mut fam = GMinus1Family { places, alpha0, alpha_multiset, j_sum: -1, canonical: Divisor::zero() };
        let first = fam.alpha_vector(&fam.alpha_multiset.clone(), m);
        fam.canonical = Divisor::from_pairs(fam.places.iter().copied().zip(first));
        fam
    }

    /// Coefficients on `places` for one arrangement of the multiset, with
    /// `j = (-1, 0, ..., 0)`.
    fn alpha_vector(&self, arrangement: &[i64], m: u32) -> Vec<i64> {
        let mut v: Vec<i64> = self.alpha0.into_iter().chain(arrangement.iter().copied()).collect();
        v[0] -= m as i64;
        v
    }

    /// Coefficient vectors (on `places`) of every instantiation with the
    /// canonical `j`, over all distinct arrangements, in lexicographic order.
    pub fn instantiations(&self, m: u32) -> Vec<Vec<i64>> {
        distinct_permutations(&self.alpha_multiset).into_iter().map(|arr| self.alpha_vector(&arr, m)).collect()
    }
}

/// Distinct permutations of a sorted multiset, lexicographic order.
pub fn distinct_permutations(sorted: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = sorted.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("a larger element exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// Block sizes of the separable family: the first `m - 1` from consecutive
/// floor differences, the last from the remaining count.
fn separable_blocks(m: i64, n: i64, alpha0: i64) -> Result<Vec<i64>> {
    let mut blocks: Vec<i64> =
        (0..m - 1).map(|i| floor_div(alpha0 + (i + 1) * n, m) - floor_div(alpha0 + i * n, m)).collect();
    let generic_last = n - floor_div(alpha0 + (m - 1) * n, m);
    let closed_last = ceil_div(n - alpha0, m);
    if generic_last != closed_last {
        return Err(Error::BlockSizeMismatch(format!(
            "last block {generic_last} vs ceil((n-alpha0)/m) = {closed_last}"
        )));
    }
    blocks.push(closed_last);
    if blocks.iter().any(|&b| b < 0) || blocks.iter().sum::<i64>() != n {
        return Err(Error::BlockSizeMismatch(format!("blocks {blocks:?} do not sum to n = {n}")));
    }
    Ok(blocks)
}

fn multiset_from_blocks(blocks: &[i64]) -> Vec<i64> {
    blocks.iter().enumerate().flat_map(|(i, &b)| core::iter::repeat_n(i as i64, b as usize)).collect()
}

/// The family for separable `f` of degree `n` on `(Q_inf, Q_1, ..., Q_n)`.
/// With `gcd(m, n) > 1` only `alpha0 = 0` is available, on the roots alone.
pub fn enum_separable_gminus1(curve: &KummerCurve, alpha0: i64) -> Result<GMinus1Family> {
    if !curve.is_separable() {
        return Err(Error::NotSeparable);
    }
    let m = curve.m() as i64;
    let n = curve.root_count() as i64;
    let q = curve.field().size();
    if n < 2 || n as u64 > q as u64 {
        return Err(Error::QTupleTooSmallOrTooLarge { n: n as usize, q });
    }
    if alpha0 < 0 || alpha0 >= m {
        return Err(Error::Alpha0OutOfRange(alpha0));
    }
    let coprime = gcd(m as u64, n as u64) == 1;
    if !coprime && alpha0 != 0 {
        return Err(Error::GcdNotOne(gcd(m as u64, n as u64) as u32));
    }
    let blocks = separable_blocks(m, n, alpha0)?;
    let roots = (0..n as usize).map(Place::RamifiedRoot);
    let (places, a0) = if coprime {
        (core::iter::once(Place::Infinity).chain(roots).collect(), Some(alpha0))
    } else {
        (roots.collect(), None)
    };
    Ok(GMinus1Family::new(places, a0, multiset_from_blocks(&blocks), curve.m()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lambda1Outcome {
    Family(GMinus1Family),
    /// The chain `beta(m-1) <= ... <= beta(1) <= n - 1` breaks at `i`.
    NonExistence {
        i: u32,
        witness: String,
    },
}

/// The family on a tuple whose multiplicities are all `1 mod m`.
pub fn enum_lambda1_gminus1(tuple: &QTuple<'_>) -> Result<Lambda1Outcome> {
    tuple.require_formula_range()?;
    let m = tuple.m() as i64;
    for (p, &l) in tuple.places().iter().zip(tuple.lambdas()) {
        if l.rem_euclid(m) != 1 {
            return Err(Error::LambdaNotCongruentOne(format!("{p} has multiplicity {l}")));
        }
    }
    let n = tuple.len() as i64;
    if tuple.beta(1) > n - 1 {
        return Ok(Lambda1Outcome::NonExistence {
            i: 1,
            witness: format!("beta(1)={} > n-1={}", tuple.beta(1), n - 1),
        });
    }
    for i in 1..tuple.m() - 1 {
        if tuple.beta(i + 1) > tuple.beta(i) {
            return Ok(Lambda1Outcome::NonExistence {
                i: i + 1,
                witness: format!("beta({})={} > beta({i})={}", i + 1, tuple.beta(i + 1), tuple.beta(i)),
            });
        }
    }
    let mut blocks = vec![n - 1 - tuple.beta(1)];
    blocks.extend((1..tuple.m() - 1).map(|i| tuple.beta(i) - tuple.beta(i + 1)));
    blocks.push(tuple.beta(tuple.m() - 1) + 1);
    debug_assert_eq!(blocks.iter().sum::<i64>(), n);
    Ok(Lambda1Outcome::Family(GMinus1Family::new(
        tuple.places().to_vec(),
        None,
        multiset_from_blocks(&blocks),
        tuple.m(),
    )))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    NonspecialDegGminus1,
    NonspecialDegG,
    NonspecialHighDeg,
    Special,
    NegativeDim,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NonspecialDegGminus1 => "NonspecialDegGminus1",
            Verdict::NonspecialDegG => "NonspecialDegG",
            Verdict::NonspecialHighDeg => "NonspecialHighDeg",
            Verdict::Special => "Special",
            Verdict::NegativeDim => "NegativeDim",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    pub degree: i64,
    pub dim: u64,
}

/// Classifies `D_alpha` from its degree and `dim_formula`.
pub fn classify(tuple: &QTuple<'_>, alpha: &[i64]) -> Result<Classification> {
    let dim = dim_formula(tuple, alpha)?;
    let degree: i64 = alpha.iter().sum();
    let g = tuple.curve().genus() as i64;
    let verdict = if dim as i64 == degree + 1 - g {
        match degree - g {
            -1 => Verdict::NonspecialDegGminus1,
            0 => Verdict::NonspecialDegG,
            d if d > 0 => Verdict::NonspecialHighDeg,
            _ => Verdict::Special,
        }
    } else if degree < 0 {
        Verdict::NegativeDim
    } else {
        Verdict::Special
    };
    Ok(Classification { verdict, degree, dim })
}

/// Brute force: every `alpha` in `[0, m-1]^n` with `j = (-1, 0, ..., 0)`
/// applied that passes [`check_gminus1`], as coefficient vectors on the
/// tuple in lexicographic order.
pub fn scan_gminus1(tuple: &QTuple<'_>) -> Result<Vec<Vec<i64>>> {
    tuple.require_formula_range()?;
    let m = tuple.m() as i64;
    let n = tuple.len();
    let size = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if size > SCAN_CAP {
        return Err(Error::ScanTooLarge { size });
    }
    let mut found = BTreeSet::new();
    let mut alpha = vec![0i64; n];
    alpha[0] = -m;
    loop {
        if gminus1_conditions(tuple, &alpha) {
            found.insert(alpha.clone());
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(found.into_iter().collect());
            }
            k -= 1;
            let lo = if k == 0 { -m } else { 0 };
            if alpha[k] < lo + m - 1 {
                alpha[k] += 1;
                break;
            }
            alpha[k] = lo;
        }
    }
}

/// Divisors from [`scan_gminus1`].
pub fn scan_gminus1_divisors(tuple: &QTuple<'_>) -> Result<BTreeSet<Divisor>> {
    Ok(scan_gminus1(tuple)?.iter().map(|a| tuple.divisor(a)).collect())
}
