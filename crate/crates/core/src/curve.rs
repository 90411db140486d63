//! The curve `y^m = c * prod (x - a_k)^{lambda_k}` and its place structure.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::arith::gcd;
use crate::divisor::{Divisor, Place};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::function::CurveFunction;
use crate::poly::Poly;
use crate::semigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Root {
    pub a: FieldElement,
    pub lambda: u32,
}

/// Functions whose principal divisors serve as linear-equivalence steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Generator {
    Y,
    XMinus(FieldElement),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPlaces {
    pub places: Vec<Place>,
    /// Places over infinity or over roots with `gcd(lambda, m) > 1` exist
    /// but are not enumerated.
    pub partial: bool,
}

#[derive(Clone, Debug)]
pub struct KummerCurve {
    field: Field,
    m: u32,
    leading: FieldElement,
    roots: Vec<Root>,
    deg_f: u32,
    f: Poly,
}

impl KummerCurve {
    /// Validates and builds the curve. Roots are sorted by encoding.
    pub fn new(
        field: Field,
        m: u32,
        leading: FieldElement,
        roots: impl IntoIterator<Item = (FieldElement, u32)>,
    ) -> Result<KummerCurve> {
        if m < 2 {
            return Err(Error::InvalidM(m));
        }
        let p = field.characteristic();
        if m.is_multiple_of(p) {
            return Err(Error::CharDividesM { p, m });
        }
        if !field.contains(leading) {
            return Err(Error::FieldMismatch);
        }
        if leading.is_zero() {
            return Err(Error::ZeroLeading);
        }
        let mut roots: Vec<Root> = roots.into_iter().map(|(a, lambda)| Root { a, lambda }).collect();
        roots.sort_by_key(|r| r.a);
        for w in roots.windows(2) {
            if w[0].a == w[1].a {
                return Err(Error::DuplicateRoot(w[0].a.encoding()));
            }
        }
        for r in &roots {
            if !field.contains(r.a) {
                return Err(Error::FieldMismatch);
            }
            if r.lambda == 0 || r.lambda >= m {
                return Err(Error::MultiplicityOutOfRange { lambda: r.lambda, m });
            }
        }
        let deg_f: u32 = roots.iter().map(|r| r.lambda).sum();
        let mut f = Poly::constant(leading);
        for r in &roots {
            f = f.mul(&Poly::x_minus(&field, r.a).pow(r.lambda, &field), &field);
        }
        let curve = KummerCurve { field, m, leading, roots, deg_f, f };
        let any_total = curve.d_infinity() == 1 || (0..curve.roots.len()).any(|k| curve.d_root(k) == 1);
        if !any_total {
            return Err(Error::NoTotallyRamifiedPlace);
        }
        Ok(curve)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn leading(&self) -> FieldElement {
        self.leading
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    pub fn deg_f(&self) -> u32 {
        self.deg_f
    }

    /// `f` expanded as a polynomial.
    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn f_at(&self, x: FieldElement) -> FieldElement {
        self.f.eval(&self.field, x)
    }

    /// Valuation of `f` at the infinite place of `F_q(x)`: `-deg f`.
    pub fn lambda_infinity(&self) -> i64 {
        -(self.deg_f as i64)
    }

    /// `gcd(lambda_k, m)`, the number of places over the `k`-th root.
    pub fn d_root(&self, k: usize) -> u32 {
        gcd(self.roots[k].lambda as u64, self.m as u64) as u32
    }

    /// `gcd(deg f, m)`, the number of places over infinity.
    pub fn d_infinity(&self) -> u32 {
        gcd(self.deg_f as u64, self.m as u64) as u32
    }

    pub fn is_separable(&self) -> bool {
        self.roots.iter().all(|r| r.lambda == 1)
    }

    pub fn root_index(&self, a: FieldElement) -> Option<usize> {
        self.roots.binary_search_by_key(&a, |r| r.a).ok()
    }

    /// Signed multiplicity used by `t` and `beta` for a totally ramified place.
    pub fn signed_lambda(&self, place: &Place) -> Result<i64> {
        match *place {
            Place::Infinity if self.d_infinity() == 1 => Ok(self.lambda_infinity()),
            Place::RamifiedRoot(k) if k < self.roots.len() && self.d_root(k) == 1 => Ok(self.roots[k].lambda as i64),
            _ => Err(Error::NotTotallyRamified(place.id())),
        }
    }

    pub fn place_degree(&self, place: &Place) -> u32 {
        match *place {
            Place::Bundle(k) if k < self.roots.len() => self.d_root(k),
            _ => 1,
        }
    }

    /// Checks that a place id refers to something that exists on this curve.
    pub fn validate_place(&self, place: &Place) -> Result<()> {
        let ok = match *place {
            Place::Infinity => self.d_infinity() == 1,
            Place::RamifiedRoot(k) => k < self.roots.len() && self.d_root(k) == 1,
            Place::Bundle(k) => k < self.roots.len(),
            Place::Affine { x, y } => {
                let fx = self.f_at(x);
                self.field.contains(x)
                    && self.field.contains(y)
                    && !fx.is_zero()
                    && self.field.pow(y, self.m as u64) == fx
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedPlaceStructure(format!("{place} is not a place of this curve")))
        }
    }

    /// The bundle of places over root `k`, collapsed to the single place when
    /// the root is totally ramified.
    pub fn places_over_root(&self, k: usize) -> Place {
        if self.d_root(k) == 1 {
            Place::RamifiedRoot(k)
        } else {
            Place::Bundle(k)
        }
    }

    /// `sum_{i=1}^{m-1} beta(i)`.
    pub fn genus(&self) -> u64 {
        let g: i64 = (1..self.m).map(|i| semigroup::beta_unchecked(self, i)).sum();
        debug_assert_eq!(g as u64, self.genus_riemann_hurwitz());
        g as u64
    }

    /// Tame Riemann-Hurwitz: `1 + (-2m + sum_P (m - d_P)) / 2`.
    pub fn genus_riemann_hurwitz(&self) -> u64 {
        let m = self.m as i64;
        let contributions: i64 = (0..self.roots.len())
            .map(|k| self.d_root(k) as i64)
            .chain(core::iter::once(self.d_infinity() as i64))
            .map(|d| d * (m / d - 1))
            .sum();
        (1 + (-2 * m + contributions) / 2) as u64
    }

    /// Infinity first when `gcd(deg f, m) = 1`, then totally ramified roots.
    pub fn totally_ramified_places(&self) -> Vec<Place> {
        let mut out = Vec::new();
        if self.d_infinity() == 1 {
            out.push(Place::Infinity);
        }
        out.extend((0..self.roots.len()).filter(|&k| self.d_root(k) == 1).map(Place::RamifiedRoot));
        out
    }

    /// Affine places over `x0`, ascending by `y`. Empty over roots of `f`.
    pub fn affine_fiber(&self, x0: FieldElement) -> Vec<Place> {
        let fx = self.f_at(x0);
        if fx.is_zero() {
            return Vec::new();
        }
        self.field.mth_roots(fx, self.m).into_iter().map(|y| Place::affine(x0, y)).collect()
    }

    pub fn rational_places(&self) -> RationalPlaces {
        let mut places = Vec::new();
        let ramified = self.totally_ramified_places();
        for x0 in self.field.elements() {
            places.extend(self.affine_fiber(x0));
        }
        places.extend(ramified);
        places.sort();
        let partial = self.d_infinity() > 1 || (0..self.roots.len()).any(|k| self.d_root(k) > 1);
        RationalPlaces { places, partial }
    }

    /// The `x0` whose fiber consists of `m` distinct rational places.
    pub fn split_x_values(&self) -> Vec<FieldElement> {
        split_x_values_of(&self.field, self.m, &self.f)
    }

    pub fn evaluate(&self, function: &CurveFunction, place: &Place) -> Result<FieldElement> {
        function.evaluate(self, place)
    }

    /// Principal divisor of `y` or of `x - b`. Places over roots with
    /// `gcd(lambda, m) > 1` appear as bundles.
    pub fn principal_divisor(&self, generator: Generator) -> Result<Divisor> {
        let need_infinity = || {
            if self.d_infinity() == 1 {
                Ok(())
            } else {
                Err(Error::UnsupportedPlaceStructure("places at infinity are not totally ramified".to_string()))
            }
        };
        let m = self.m as i64;
        match generator {
            Generator::Y => {
                need_infinity()?;
                let mut d = Divisor::single(Place::Infinity, self.lambda_infinity());
                for (k, r) in self.roots.iter().enumerate() {
                    let dk = self.d_root(k) as i64;
                    d.add_at(self.places_over_root(k), r.lambda as i64 / dk);
                }
                Ok(d)
            }
            Generator::XMinus(b) => {
                if !self.field.contains(b) {
                    return Err(Error::FieldMismatch);
                }
                need_infinity()?;
                let mut d = Divisor::single(Place::Infinity, -m);
                if let Some(k) = self.root_index(b) {
                    d.add_at(self.places_over_root(k), m / self.d_root(k) as i64);
                } else {
                    let fiber = self.affine_fiber(b);
                    if fiber.len() != self.m as usize {
                        return Err(Error::UnsupportedPlaceStructure(format!(
                            "fiber over x = {b} has {} rational places, not m = {}",
                            fiber.len(),
                            self.m
                        )));
                    }
                    for p in fiber {
                        d.add_at(p, 1);
                    }
                }
                Ok(d)
            }
        }
    }
}

/// Split `x`-values for `y^m = f(x)`; usable for any `m >= 1`.
pub fn split_x_values_of(field: &Field, m: u32, f: &Poly) -> Vec<FieldElement> {
    field
        .elements()
        .filter(|&x| {
            let fx = f.eval(field, x);
            !fx.is_zero() && field.mth_roots(fx, m).len() == m as usize
        })
        .collect()
}
