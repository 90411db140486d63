//! Three constructions of LCPs of AG codes on a Kummer curve, each emitting
//! the divisors, equivalence certificates, codes and the verification report.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{ceil_div, floor_div};
use crate::codes::{
    ag_code, is_lcp, verify_pair_divisors, EquivalenceCertificate, LcpReport, LinearCode, PairCertificates,
};
use crate::curve::{Generator, KummerCurve};
use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::nonspecial::{check_g, check_gminus1};
use crate::rrspace::{evaluation_matrix, rr_monomials};
use crate::semigroup::QTuple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    T1,
    T2,
    TR,
}

impl Construction {
    pub fn as_str(self) -> &'static str {
        match self {
            Construction::T1 => "1",
            Construction::T2 => "2",
            Construction::TR => "R",
        }
    }

    pub fn parse(s: &str) -> Result<Construction> {
        match s {
            "1" | "T1" => Ok(Construction::T1),
            "2" | "T2" => Ok(Construction::T2),
            "R" | "r" | "TR" => Ok(Construction::TR),
            _ => Err(Error::Parse(format!("construction {s:?}; expected 1, 2 or R"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LcpConstructionResult {
    pub construction: Construction,
    pub s: i64,
    pub d_places: Vec<Place>,
    pub g: Divisor,
    pub h: Divisor,
    pub certificates: PairCertificates,
    pub codes: (LinearCode, LinearCode),
    pub report: LcpReport,
    /// Dimensions stated by the construction.
    pub expected_dims: (usize, usize),
    /// For the R construction: vanishing at `R_1` imposed no condition on
    /// `L(H + R_1)`.
    pub kernel_degenerate: bool,
}

impl LcpConstructionResult {
    pub fn dims(&self) -> (usize, usize) {
        (self.codes.0.dim(), self.codes.1.dim())
    }

    /// Rank verdict, every divisor check, and the stated dimensions.
    pub fn all_pass(&self) -> bool {
        self.report.is_lcp && self.report.checks.iter().all(|c| c.passed) && self.dims() == self.expected_dims
    }
}

/// Evaluation `x`-values: all split values when `None`, otherwise validated
/// and sorted.
fn resolve_eval_x(curve: &KummerCurve, eval_x: Option<&[FieldElement]>) -> Result<Vec<FieldElement>> {
    let split = curve.split_x_values();
    let Some(xs) = eval_x else {
        return Ok(split);
    };
    let mut xs = xs.to_vec();
    xs.sort_unstable();
    xs.dedup();
    if let Some(x) = xs.iter().find(|x| !split.contains(x)) {
        return Err(Error::UnsupportedPlaceStructure(format!("x = {x} is not a split value")));
    }
    Ok(xs)
}

fn fibers(curve: &KummerCurve, xs: &[FieldElement]) -> Vec<Place> {
    xs.iter().flat_map(|&x| curve.affine_fiber(x)).collect()
}

fn require_infinity(curve: &KummerCurve) -> Result<()> {
    if curve.d_infinity() != 1 {
        return Err(Error::UnsupportedPlaceStructure(format!(
            "gcd(deg f, m) = {} so infinity is not totally ramified",
            curve.d_infinity()
        )));
    }
    Ok(())
}

fn require_separable_full(curve: &KummerCurve) -> Result<()> {
    if !curve.is_separable() {
        return Err(Error::NotSeparable);
    }
    require_infinity(curve)
}

/// Certifies `E` with `check_gminus1` (or `check_g` when `degree_g`) on
/// the tuple of its support places listed in `tuple_places` order.
fn certify_e(curve: &KummerCurve, e: &Divisor, tuple_places: Vec<Place>, degree_g: bool) -> Result<()> {
    let tuple = QTuple::new(curve, tuple_places)?;
    let alpha = tuple.alpha_of(e).map_err(|err| Error::ENotCertified(format!("{err}")))?;
    let ok = if degree_g { check_g(&tuple, &alpha)? } else { check_gminus1(&tuple, &alpha)? };
    if !ok {
        let what = if degree_g { "non-special of degree g" } else { "non-special of degree g-1" };
        return Err(Error::ENotCertified(format!("{e} is not {what}")));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn finish(
    curve: &KummerCurve,
    construction: Construction,
    s: i64,
    d_places: Vec<Place>,
    g: Divisor,
    h: Divisor,
    certificates: PairCertificates,
    expected_dims: (usize, usize),
) -> Result<LcpConstructionResult> {
    let checks = verify_pair_divisors(curve, &d_places, &g, &h, &certificates)?;
    let cg = ag_code(curve, &d_places, &g)?;
    let ch = ag_code(curve, &d_places, &h)?;
    let mut report = is_lcp(&cg, &ch)?;
    report.checks = checks;
    Ok(LcpConstructionResult {
        construction,
        s,
        d_places,
        g,
        h,
        certificates,
        codes: (cg, ch),
        report,
        expected_dims,
        kernel_degenerate: false,
    })
}

fn lmd_chain(s: i64, xs: &[FieldElement]) -> Vec<(Generator, i64)> {
    let mut chain = Vec::with_capacity(xs.len() + 1);
    chain.push((Generator::Y, s));
    chain.extend(xs.iter().map(|&b| (Generator::XMinus(b), -1)));
    chain
}

/// Open interval `lo/den < s < hi/den` as an inclusive integer range.
fn open_range(lo: i64, hi: i64, den: i64) -> (i64, i64) {
    (floor_div(lo, den) + 1, ceil_div(hi, den) - 1)
}

/// Admissible `s` for the first construction with `N = m t`.
pub fn t1_s_range(curve: &KummerCurve, n_len: i64) -> (i64, i64) {
    let g = curve.genus() as i64;
    open_range(g - 1, n_len + 1 - g, curve.deg_f() as i64)
}

/// `G = E + (N - s deg f) Q_inf`, `H = E + s (y) + s deg f Q_inf`.
pub fn teocodes1(
    curve: &KummerCurve,
    e: &Divisor,
    s: i64,
    eval_x: Option<&[FieldElement]>,
) -> Result<LcpConstructionResult> {
    require_infinity(curve)?;
    let xs = resolve_eval_x(curve, eval_x)?;
    let n_len = (curve.m() as usize * xs.len()) as i64;
    let lambda0 = curve.deg_f() as i64;
    let (lo, hi) = t1_s_range(curve, n_len);
    if s < lo || s > hi {
        return Err(Error::SRangeViolation {
            s,
            detail: format!("need (g-1)/deg f < s < (N+1-g)/deg f, i.e. {lo} <= s <= {hi}"),
        });
    }
    certify_e(curve, e, curve.totally_ramified_places(), false)?;
    let d_places = fibers(curve, &xs);
    let y = curve.principal_divisor(Generator::Y)?;
    let g = e.plus(&Divisor::single(Place::Infinity, n_len - s * lambda0));
    let h = e.plus(&y.scaled(s)).plus(&Divisor::single(Place::Infinity, s * lambda0));
    let certificates = PairCertificates {
        gcd: EquivalenceCertificate::trivial(e.clone()),
        lmd_minus_d: EquivalenceCertificate { chain: lmd_chain(s, &xs), reduced: e.clone() },
    };
    let k2 = (s * lambda0) as usize;
    finish(curve, Construction::T1, s, d_places, g, h, certificates, (n_len as usize - k2, k2))
}

/// Conditions i)-iii) of the second construction; the first failing one.
fn t2_conditions(
    alpha: &[i64],
    beta: &[i64],
    s: i64,
    n_len: i64,
    genus: i64,
) -> core::result::Result<(), (&'static str, alloc::string::String)> {
    let n = alpha.len() as i64;
    for k in 0..alpha.len() - 1 {
        if alpha[k] - beta[k + 1] > s {
            return Err(("i", format!("alpha_{} - beta_{} = {} > s = {s}", k + 1, k + 1, alpha[k] - beta[k + 1])));
        }
    }
    let alpha_n = alpha[alpha.len() - 1];
    if alpha_n > s || s * n > beta[0] + n_len {
        return Err((
            "ii",
            format!("need alpha_n = {alpha_n} <= s = {s} <= (beta_0 + N)/n = ({} + {n_len})/{n}", beta[0]),
        ));
    }
    let lo = genus - 1 + beta[0] - alpha_n;
    let hi = n_len - genus + 1 + beta[0] - alpha_n;
    if !((n - 1) * s > lo && (n - 1) * s < hi) {
        return Err(("iii", format!("need {lo}/{} < s < {hi}/{}", n - 1, n - 1)));
    }
    Ok(())
}

/// Every `s` satisfying conditions i)-iii), ascending.
pub fn t2_admissible_s(curve: &KummerCurve, e1: &Divisor, e2: &Divisor, n_len: i64) -> Result<Vec<i64>> {
    let (alpha, beta) = t2_coefficients(curve, e1, e2)?;
    let genus = curve.genus() as i64;
    Ok((0..=n_len).filter(|&s| t2_conditions(&alpha, &beta, s, n_len, genus).is_ok()).collect())
}

fn t2_places(curve: &KummerCurve) -> (Vec<Place>, Vec<Place>) {
    let n = curve.root_count();
    let roots: Vec<Place> = (0..n).map(Place::RamifiedRoot).collect();
    let mut e2 = Vec::with_capacity(n);
    e2.push(Place::Infinity);
    e2.extend_from_slice(&roots[..n - 1]);
    (roots, e2)
}

fn t2_coefficients(curve: &KummerCurve, e1: &Divisor, e2: &Divisor) -> Result<(Vec<i64>, Vec<i64>)> {
    require_separable_full(curve)?;
    let (p1, p2) = t2_places(curve);
    let alpha = QTuple::new(curve, p1)?.alpha_of(e1).map_err(|err| Error::ENotCertified(format!("E1: {err}")))?;
    let beta = QTuple::new(curve, p2)?.alpha_of(e2).map_err(|err| Error::ENotCertified(format!("E2: {err}")))?;
    Ok((alpha, beta))
}

/// `E1` on the roots, `E2` on infinity and the first `n - 1` roots.
/// `G = sum_{k<n} alpha_k Q_k + s Q_n + (beta_0 + N - s n) Q_inf`,
/// `H = sum_{k<n} (s + beta_k) Q_k + alpha_n Q_n`.
pub fn teocodes2(
    curve: &KummerCurve,
    e1: &Divisor,
    e2: &Divisor,
    s: i64,
    eval_x: Option<&[FieldElement]>,
) -> Result<LcpConstructionResult> {
    let (alpha, beta) = t2_coefficients(curve, e1, e2)?;
    let (p1, p2) = t2_places(curve);
    certify_e(curve, e1, p1.clone(), false)?;
    certify_e(curve, e2, p2, false)?;
    let xs = resolve_eval_x(curve, eval_x)?;
    let n_len = (curve.m() as usize * xs.len()) as i64;
    let genus = curve.genus() as i64;
    if let Err((which, detail)) = t2_conditions(&alpha, &beta, s, n_len, genus) {
        return Err(Error::ConditionViolation { which, detail });
    }
    let n = p1.len();
    let alpha_n = alpha[n - 1];
    let mut g = Divisor::zero();
    let mut h = Divisor::zero();
    for k in 0..n - 1 {
        g.add_at(p1[k], alpha[k]);
        h.add_at(p1[k], s + beta[k + 1]);
    }
    g.add_at(p1[n - 1], s);
    g.add_at(Place::Infinity, beta[0] + n_len - s * n as i64);
    h.add_at(p1[n - 1], alpha_n);
    let d_places = fibers(curve, &xs);
    let certificates = PairCertificates {
        gcd: EquivalenceCertificate::trivial(e1.clone()),
        lmd_minus_d: EquivalenceCertificate { chain: lmd_chain(s, &xs), reduced: e2.clone() },
    };
    let k2 = s * (n as i64 - 1) + alpha_n - beta[0];
    let expected = ((n_len - k2) as usize, k2 as usize);
    finish(curve, Construction::T2, s, d_places, g, h, certificates, expected)
}

/// Admissible `s` for the R construction, `(g-1)/n < s < (N-m-g+2)/n`.
pub fn tr_s_range(curve: &KummerCurve, n_len: i64) -> (i64, i64) {
    let g = curve.genus() as i64;
    open_range(g - 1, n_len - curve.m() as i64 - g + 2, curve.root_count() as i64)
}

/// `E` of degree `g` on `(Q_inf, roots)`. With `R_1, R_2` the two smallest
/// places over the first split `x`, `D` is `R_2` plus the other fibers,
/// `G = E + (N - m - s n) Q_inf` and `H = E + s sum Q_k - R_1`.
pub fn teocodes_r(
    curve: &KummerCurve,
    e: &Divisor,
    s: i64,
    eval_x: Option<&[FieldElement]>,
) -> Result<LcpConstructionResult> {
    require_separable_full(curve)?;
    let xs = resolve_eval_x(curve, eval_x)?;
    if xs.len() < 2 {
        return Err(Error::NeedTwoFibers);
    }
    let m = curve.m() as i64;
    let n = curve.root_count() as i64;
    let n_len = m * xs.len() as i64;
    let (lo, hi) = tr_s_range(curve, n_len);
    if s < lo || s > hi {
        return Err(Error::SRangeViolation {
            s,
            detail: format!("need (g-1)/n < s < (N-m-g+2)/n, i.e. {lo} <= s <= {hi}"),
        });
    }
    certify_e(curve, e, curve.totally_ramified_places(), true)?;
    let first = curve.affine_fiber(xs[0]);
    let (r1, r2) = (first[0], first[1]);
    let mut d_places = Vec::with_capacity((n_len - m + 1) as usize);
    d_places.push(r2);
    d_places.extend(fibers(curve, &xs[1..]));
    let roots_sum = Divisor::from_pairs((0..n as usize).map(|k| (Place::RamifiedRoot(k), s)));
    let g = e.plus(&Divisor::single(Place::Infinity, n_len - m - s * n));
    let h = e.plus(&roots_sum).plus(&Divisor::single(r1, -1));
    let certificates = PairCertificates {
        gcd: EquivalenceCertificate::trivial(e.plus(&Divisor::single(r1, -1))),
        lmd_minus_d: EquivalenceCertificate {
            chain: lmd_chain(s, &xs[1..]),
            reduced: e.plus(&Divisor::single(r2, -1)),
        },
    };
    let len = d_places.len();
    let k2 = (s * n) as usize;
    let mut result = finish(curve, Construction::TR, s, d_places, g, h.clone(), certificates, (len - k2, k2))?;
    // vanishing at R_1 must cut L(H + R_1) by one dimension
    let lifted = h.plus(&Divisor::single(r1, 1));
    let monos = rr_monomials(curve, &lifted)?;
    let at_r1 = evaluation_matrix(curve, &monos, &[r1])?;
    result.kernel_degenerate = at_r1.rank() == 0;
    Ok(result)
}

/// Inclusive `s` range for the first construction given a length.
pub fn admissible_s(curve: &KummerCurve, construction: Construction, n_len: i64) -> Option<(i64, i64)> {
    match construction {
        Construction::T1 => Some(t1_s_range(curve, n_len)),
        Construction::TR => Some(tr_s_range(curve, n_len)),
        Construction::T2 => None,
    }
}
