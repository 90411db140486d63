//! Places of a Kummer curve and divisors over them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::curve::KummerCurve;
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// A place of the curve, or a symbolic bundle of places.
///
/// `RamifiedRoot(k)` is the unique place over the `k`-th root of `f` (roots
/// in ascending encoding order) and requires `gcd(lambda_k, m) = 1`.
/// `Bundle(k)` stands for the sum of all places over the `k`-th root taken
/// with one common coefficient; its degree is `gcd(lambda_k, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    RamifiedRoot(usize),
    Affine { x: FieldElement, y: FieldElement },
    Bundle(usize),
}

impl Place {
    pub fn affine(x: FieldElement, y: FieldElement) -> Place {
        Place::Affine { x, y }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, Place::Affine { .. })
    }

    /// Stable identifier: `inf`, `root:<k>`, `aff:<x>:<y>`, `bundle:<k>`.
    pub fn id(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::RamifiedRoot(k) => write!(f, "root:{k}"),
            Place::Affine { x, y } => write!(f, "aff:{}:{}", x.encoding(), y.encoding()),
            Place::Bundle(k) => write!(f, "bundle:{k}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Place> {
        let bad = || Error::Parse(format!("place id {s:?}"));
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let mut parts = s.split(':');
        let place = match (parts.next(), parts.next(), parts.next()) {
            (Some("inf"), None, None) => Place::Infinity,
            (Some("root"), Some(k), None) => Place::RamifiedRoot(num(k)? as usize),
            (Some("bundle"), Some(k), None) => Place::Bundle(num(k)? as usize),
            (Some("aff"), Some(x), Some(y)) => {
                Place::Affine { x: FieldElement::from_encoding(num(x)?), y: FieldElement::from_encoding(num(y)?) }
            }
            _ => return Err(bad()),
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(place)
    }
}

/// A finite formal sum of places with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct Divisor {
    coeffs: BTreeMap<Place, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Place, i64)>>(pairs: I) -> Self {
        let mut d = Divisor::zero();
        for (p, c) in pairs {
            d.add_at(p, c);
        }
        d
    }

    pub fn single(place: Place, c: i64) -> Self {
        Divisor::from_pairs([(place, c)])
    }

    pub fn coeff(&self, place: &Place) -> i64 {
        self.coeffs.get(place).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, place: Place, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(place).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&place);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Place, &i64)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Place> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (&p, &c) in &other.coeffs {
            out.add_at(p, c);
        }
        out
    }

    pub fn minus(&self, other: &Divisor) -> Divisor {
        self.plus(&other.scaled(-1))
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        Divisor::from_pairs(self.coeffs.iter().map(|(&p, &c)| (p, c * k)))
    }

    /// Sum of coefficients ignoring place degrees (all enumerated places are
    /// rational; bundles are weighted by [`Divisor::degree`]).
    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn degree(&self, curve: &KummerCurve) -> i64 {
        self.coeffs.iter().map(|(p, &c)| c * curve.place_degree(p) as i64).sum()
    }

    /// Pointwise minimum over the union of supports.
    pub fn gcd(&self, other: &Divisor) -> Divisor {
        self.pointwise(other, i64::min)
    }

    /// Pointwise maximum over the union of supports.
    pub fn lmd(&self, other: &Divisor) -> Divisor {
        self.pointwise(other, i64::max)
    }

    fn pointwise(&self, other: &Divisor, op: impl Fn(i64, i64) -> i64) -> Divisor {
        let places: Vec<Place> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        Divisor::from_pairs(
            places
                .into_iter()
                .collect::<alloc::collections::BTreeSet<_>>()
                .into_iter()
                .map(|p| (p, op(self.coeff(&p), other.coeff(&p)))),
        )
    }

    /// Splits into the part on affine places and the rest.
    pub fn split_affine(&self) -> (Divisor, Divisor) {
        let (aff, rest): (Vec<_>, Vec<_>) = self.coeffs.iter().partition(|(p, _)| p.is_affine());
        (
            Divisor::from_pairs(aff.into_iter().map(|(&p, &c)| (p, c))),
            Divisor::from_pairs(rest.into_iter().map(|(&p, &c)| (p, c))),
        )
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}*{p}")?;
        }
        Ok(())
    }
}
