//! Arithmetic in `GF(p^e)`.
//!
//! Elements are encoded as integers in `[0, q)` whose base-`p` digits are the
//! coefficients (low degree first) of the polynomial-basis representative.
//! The defining modulus is the smallest monic primitive polynomial of degree
//! `e`, where candidates `x^e + c(x)` are ordered by the encoding of `c`.
//! Because the modulus is primitive, `x` generates the multiplicative group
//! and all arithmetic runs through exp/log and Zech-logarithm tables.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{gcd, is_prime, mod_inverse, prime_factors};
use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Sentinel for "logarithm of zero" in the tables.
pub(crate) const LOG_ZERO: u32 = u32::MAX;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub const fn from_encoding(encoding: u32) -> Self {
        FieldElement(encoding)
    }

    pub const fn encoding(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for `k < 2(q-1)`, so sums of two logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[d] = log(1 + g^d)`, or `LOG_ZERO` when `g^d = -1`.
    zech: Vec<u32>,
    neg: Vec<u32>,
    log_minus_one: u32,
}

/// A finite field `GF(p^e)`. Cloning is cheap; the tables are shared.
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || (self.t.p == other.t.p && self.t.e == other.t.e)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.t.p, self.t.e)
    }
}

fn digits(mut v: u32, p: u32, e: u32) -> Vec<u32> {
    let mut d = vec![0; e as usize];
    for slot in d.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    d
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

fn add_digitwise(a: u32, b: u32, p: u32, e: u32) -> u32 {
    let (da, db) = (digits(a, p, e), digits(b, p, e));
    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
    undigits(&sum, p)
}

/// Multiply the encoded polynomial by `x` modulo `x^e + low(x)`.
fn mul_by_x(v: u32, low: &[u32], p: u32, e: u32) -> u32 {
    let d = digits(v, p, e);
    let top = d[e as usize - 1];
    let mut out = vec![0u32; e as usize];
    for i in 0..e as usize {
        let shifted = if i == 0 { 0 } else { d[i - 1] };
        out[i] = (shifted + p * p - (top * low[i]) % p) % p;
    }
    undigits(&out, p)
}

/// Successive powers of `x` modulo `x^e + low(x)`, provided `x` has order
/// exactly `q - 1` (which forces the modulus to be irreducible and primitive).
fn powers_if_primitive(low: &[u32], p: u32, e: u32, q: u32) -> Option<Vec<u32>> {
    let mut powers = Vec::with_capacity(q as usize - 1);
    let mut cur = 1u32;
    powers.push(cur);
    for _ in 1..q - 1 {
        cur = mul_by_x(cur, low, p, e);
        if cur == 1 {
            return None;
        }
        powers.push(cur);
    }
    (mul_by_x(cur, low, p, e) == 1).then_some(powers)
}

fn mod_pow(mut b: u64, mut k: u64, n: u64) -> u64 {
    let mut acc = 1 % n;
    b %= n;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        k >>= 1;
    }
    acc
}

fn smallest_primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let order = (p - 1) as u64;
    let factors = prime_factors(order);
    (2..p)
        .find(|&g| factors.iter().all(|&l| mod_pow(g as u64, order / l, p as u64) != 1))
        .expect("every prime field has a primitive root")
}

impl Field {
    /// Builds `GF(p^e)` with its canonical modulus. The result depends only on
    /// `(p, e)`.
    pub fn new(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidExtensionDegree);
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_FIELD_SIZE).ok_or(Error::TooLarge { p, e })? as u32;

        let (modulus, powers) = if e == 1 {
            let g = smallest_primitive_root(p);
            let mut powers = Vec::with_capacity(q as usize - 1);
            let mut cur = 1u64;
            for _ in 0..q - 1 {
                powers.push(cur as u32);
                cur = cur * g as u64 % p as u64;
            }
            (vec![0, 1], powers)
        } else {
            let mut found = None;
            for low_enc in 0..q {
                if low_enc % p == 0 {
                    // constant term zero: x divides the candidate
                    continue;
                }
                let low = digits(low_enc, p, e);
                if let Some(powers) = powers_if_primitive(&low, p, e, q) {
                    let mut modulus = low;
                    modulus.push(1);
                    found = Some((modulus, powers));
                    break;
                }
            }
            found.expect("a primitive polynomial of every degree exists")
        };

        let order = q as usize - 1;
        let mut exp = Vec::with_capacity(2 * order);
        exp.extend_from_slice(&powers);
        exp.extend_from_slice(&powers);
        let mut log = vec![LOG_ZERO; q as usize];
        for (k, &v) in powers.iter().enumerate() {
            log[v as usize] = k as u32;
        }
        let neg: Vec<u32> = (0..q)
            .map(|v| {
                let d: Vec<u32> = digits(v, p, e).iter().map(|&c| (p - c) % p).collect();
                undigits(&d, p)
            })
            .collect();
        let zech = powers.iter().map(|&v| log[add_digitwise(1, v, p, e) as usize]).collect();
        let log_minus_one = log[neg[1] as usize];

        Ok(Field { t: Arc::new(Tables { p, e, q, modulus, exp, log, zech, neg, log_minus_one }) })
    }

    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    pub fn degree(&self) -> u32 {
        self.t.e
    }

    pub fn size(&self) -> u32 {
        self.t.q
    }

    /// Modulus coefficients, low degree first. For prime fields this is the
    /// conventional `x - 0`, i.e. `[0, 1]`.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    pub fn contains(&self, a: FieldElement) -> bool {
        a.0 < self.t.q
    }

    pub fn element(&self, encoding: u32) -> Result<FieldElement> {
        if encoding < self.t.q {
            Ok(FieldElement(encoding))
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.t.q).map(FieldElement)
    }

    /// The image of an integer under `Z -> GF(p) -> GF(q)`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.t.p as i64) as u32)
    }

    /// The primitive element `x` (or the smallest primitive root for `e = 1`).
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.t.exp[(1 % (self.t.q - 1).max(1)) as usize])
    }

    pub fn log(&self, a: FieldElement) -> Option<u32> {
        let l = self.t.log[a.0 as usize];
        (l != LOG_ZERO).then_some(l)
    }

    pub fn exp(&self, k: u64) -> FieldElement {
        FieldElement(self.t.exp[(k % (self.t.q as u64 - 1)) as usize])
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let t = &*self.t;
        let (la, lb) = (t.log[a.0 as usize], t.log[b.0 as usize]);
        let order = t.q - 1;
        let d = if lb >= la { lb - la } else { lb + order - la };
        let z = t.zech[d as usize];
        if z == LOG_ZERO {
            FieldElement::ZERO
        } else {
            FieldElement(t.exp[(la + z) as usize])
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.t.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let t = &*self.t;
        FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        let l = self.log(a).ok_or(Error::DivisionByZero)?;
        let order = self.t.q - 1;
        Ok(FieldElement(self.t.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        if k == 0 {
            return FieldElement::ONE;
        }
        match self.log(a) {
            None => FieldElement::ZERO,
            Some(l) => {
                let order = self.t.q as u64 - 1;
                FieldElement(self.t.exp[((l as u64 * (k % order)) % order) as usize])
            }
        }
    }

    /// `a^k` for a signed exponent; negative powers of zero are an error.
    pub fn pow_signed(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            Ok(self.pow(self.inv(a)?, k.unsigned_abs()))
        }
    }

    /// Checked binary operation on encodings that must belong to this field.
    pub fn arith(&self, a: FieldElement, b: FieldElement, op: ArithOp) -> Result<FieldElement> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::FieldMismatch);
        }
        Ok(match op {
            ArithOp::Add => self.add(a, b),
            ArithOp::Sub => self.sub(a, b),
            ArithOp::Mul => self.mul(a, b),
            ArithOp::Div => self.div(a, b)?,
        })
    }

    /// All `y` with `y^m = c`, ascending by encoding. For `c != 0` the count
    /// is `0` or `gcd(m, q - 1)`.
    pub fn mth_roots(&self, c: FieldElement, m: u32) -> Vec<FieldElement> {
        if m == 0 {
            return if c == FieldElement::ONE { self.elements().skip(1).collect() } else { Vec::new() };
        }
        let Some(lc) = self.log(c) else {
            return vec![FieldElement::ZERO];
        };
        let order = self.t.q as u64 - 1;
        let d = gcd(m as u64, order);
        if !(lc as u64).is_multiple_of(d) {
            return Vec::new();
        }
        let sub_order = order / d;
        let base = if sub_order == 1 {
            0
        } else {
            let inv = mod_inverse((m as u64 / d) % sub_order, sub_order).expect("m/d is a unit modulo (q-1)/d");
            (lc as u64 / d) % sub_order * inv % sub_order
        };
        let mut out: Vec<FieldElement> = (0..d).map(|j| self.exp(base + j * sub_order)).collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn log_table(&self) -> &[u32] {
        &self.t.log
    }

    pub(crate) fn zech_table(&self) -> &[u32] {
        &self.t.zech
    }

    pub(crate) fn log_minus_one(&self) -> u32 {
        self.t.log_minus_one
    }
}
