//! Algebraic geometry codes `C_L(D, G)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::matrix::Matrix;
use crate::curve::KummerCurve;
use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::rrspace::{evaluation_matrix, rr_monomials};

/// A linear code given by a generator matrix whose rows form a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Matrix,
    eval_places: Vec<Place>,
    g: Option<Divisor>,
    ell: Option<u64>,
}

impl LinearCode {
    /// Wraps a generator matrix, reducing it to a basis when rank deficient.
    pub fn from_generator(generator: Matrix) -> LinearCode {
        let generator = if generator.rank() == generator.rows() { generator } else { generator.echelon() };
        LinearCode { generator, eval_places: Vec::new(), g: None, ell: None }
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn field(&self) -> &Field {
        self.generator.field()
    }

    /// Length `N`.
    pub fn len(&self) -> usize {
        self.generator.cols()
    }

    pub fn is_empty(&self) -> bool {
        self.generator.cols() == 0
    }

    /// Dimension `k`.
    pub fn dim(&self) -> usize {
        self.generator.rows()
    }

    pub fn eval_places(&self) -> &[Place] {
        &self.eval_places
    }

    /// The divisor `G` for codes built by [`ag_code`].
    pub fn divisor(&self) -> Option<&Divisor> {
        self.g.as_ref()
    }

    /// `l(G)`, the size of the evaluated basis, for codes built by [`ag_code`].
    pub fn ell(&self) -> Option<u64> {
        self.ell
    }

    pub fn encode(&self, message: &[FieldElement]) -> Vec<FieldElement> {
        self.generator.combine(message)
    }
}

pub fn weight(word: &[FieldElement]) -> usize {
    word.iter().filter(|a| !a.is_zero()).count()
}

/// `C_L(D, G)` where `D` is the sum of `eval_places`. `G` may carry
/// coefficient `-1` at affine places outside `D`; those are imposed as
/// vanishing conditions on `L(G + sum P)`.
pub fn ag_code(curve: &KummerCurve, eval_places: &[Place], g: &Divisor) -> Result<LinearCode> {
    for p in eval_places {
        if !p.is_affine() {
            return Err(Error::UnsupportedPlaceStructure(format!("evaluation place {p} is not affine")));
        }
        curve.validate_place(p)?;
        if g.coeff(p) != 0 {
            return Err(Error::SupportOverlap(format!("{p} lies in Supp(G)")));
        }
    }
    let (affine, rest) = g.split_affine();
    let mut zeros = Vec::new();
    for (p, &c) in affine.iter() {
        if c != -1 {
            return Err(Error::UnsupportedSupport(format!("affine coefficient {c} at {p}; only -1 is supported")));
        }
        curve.validate_place(p)?;
        zeros.push(*p);
    }
    let monos = rr_monomials(curve, &rest)?;
    let field = curve.field().clone();
    let full = evaluation_matrix(curve, &monos, eval_places)?;
    let (generator, ell) = if zeros.is_empty() {
        (full, monos.len() as u64)
    } else {
        // combinations of the monomials vanishing at the affine zeros
        let constraints = evaluation_matrix(curve, &monos, &zeros)?;
        let mut t = Matrix::zero(field.clone(), constraints.cols(), constraints.rows());
        for r in 0..constraints.rows() {
            for c in 0..constraints.cols() {
                t.set(c, r, constraints.get(r, c));
            }
        }
        let kernel = t.null_space();
        let k = kernel.len();
        let comb = Matrix::from_rows(field.clone(), monos.len(), kernel)?;
        (comb.mul(&full)?, k as u64)
    };
    let mut code = LinearCode::from_generator(generator);
    code.eval_places = eval_places.to_vec();
    code.g = Some(g.clone());
    code.ell = Some(ell);
    let deg = g.degree(curve);
    let genus = curve.genus() as i64;
    let n = eval_places.len() as i64;
    if 2 * genus - 2 < deg && deg < n && code.dim() as i64 != deg + 1 - genus {
        return Err(Error::DimensionMismatch(format!("k = {} but deg G + 1 - g = {}", code.dim(), deg + 1 - genus)));
    }
    Ok(code)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exact(u64),
    /// Goppa bound `N - deg G`; the search space was too large.
    LowerBoundOnly(i64),
    /// The zero code.
    Infinite,
}

/// Largest `q^k` searched exhaustively.
pub const EXHAUSTIVE_CAP: u128 = 1 << 20;

/// Exact minimum weight when `q^k <= 2^20`, otherwise the Goppa bound.
pub fn min_distance(code: &LinearCode, curve: Option<&KummerCurve>) -> Distance {
    let k = code.dim();
    if k == 0 {
        return Distance::Infinite;
    }
    let q = code.field().size() as u128;
    let space = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    if space > EXHAUSTIVE_CAP {
        let bound = match (code.divisor(), curve) {
            (Some(g), Some(c)) => code.len() as i64 - g.degree(c),
            _ => 1,
        };
        return Distance::LowerBoundOnly(bound);
    }
    let field = code.field();
    let gen = code.generator();
    let n = code.len();
    let mut best = n;
    // messages normalized so the first nonzero coordinate is 1
    for lead in 0..k {
        let mut word = gen.row(lead).to_vec();
        let mut digits = vec![0u32; k];
        loop {
            best = best.min(weight(&word));
            let mut pos = k;
            let advanced = loop {
                if pos == lead + 1 {
                    break false;
                }
                pos -= 1;
                let old = FieldElement::from_encoding(digits[pos]);
                let next_enc = (digits[pos] + 1) % q as u32;
                let delta = field.sub(FieldElement::from_encoding(next_enc), old);
                for (w, &a) in word.iter_mut().zip(gen.row(pos)) {
                    *w = field.add(*w, field.mul(delta, a));
                }
                digits[pos] = next_enc;
                if next_enc != 0 {
                    break true;
                }
            };
            if !advanced {
                break;
            }
        }
    }
    Distance::Exact(best as u64)
}
