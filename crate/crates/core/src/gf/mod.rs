//! Exact arithmetic in GF(q), q = p^h ≤ 2^16.
//!
//! An element is stored as its index in `[0, q)`: the base-p digits of the
//! index, least significant first, are the coefficients of the representing
//! polynomial modulo the field modulus. Index 0 is zero and index 1 is one in
//! every field. Multiplication goes through exp/log tables built from a
//! verified primitive element.

mod conway;
mod quadratic;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use conway::conway_polynomial;
pub use quadratic::{Ext2, QuadraticExtension};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

/// Fields up to this order precompute a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("modulus {0:?} is reducible over GF({1})")]
    Reducible(Vec<u16>, u32),
    #[error("modulus must be monic of degree {expected} with coefficients below {p}, got {got:?}")]
    BadModulus { expected: u32, p: u32, got: Vec<u16> },
    #[error("field order {p}^{h} exceeds the table limit {MAX_ORDER}")]
    NoTableRoom { p: u32, h: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("division by zero")]
    DivideByZero,
    #[error("elements belong to different fields")]
    SpecMismatch,
    #[error("index {index} is not an element of GF({q})")]
    OutOfRange { index: u32, q: u32 },
    #[error("every element of GF({0}) is a square")]
    EvenField(u32),
}

/// A field element, identified by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u16);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Serialized form of a field: characteristic, degree and modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub h: u32,
    pub modulus: Vec<u16>,
}

/// The finite field GF(p^h) together with its lookup tables.
#[derive(Clone, Serialize, Deserialize)]
#[serde(into = "FieldDescriptor", try_from = "FieldDescriptor")]
pub struct FieldSpec {
    p: u32,
    h: u32,
    q: u32,
    xi: i8,
    modulus: Vec<u16>,
    generator: Elem,
    exp: Vec<u16>,
    log: Vec<u16>,
    add_table: Vec<u16>,
    neg_table: Vec<u16>,
    rho: Option<Elem>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("h", &self.h)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.h == other.h && self.modulus == other.modulus
    }
}

impl Eq for FieldSpec {}

impl From<FieldSpec> for FieldDescriptor {
    fn from(f: FieldSpec) -> Self {
        f.descriptor()
    }
}

impl TryFrom<FieldDescriptor> for FieldSpec {
    type Error = FieldError;

    fn try_from(d: FieldDescriptor) -> Result<Self, Self::Error> {
        FieldSpec::new(d.p, d.h, Some(&d.modulus))
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^h`, if it is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut h = 0;
    while rest % p == 0 {
        rest /= p;
        h += 1;
    }
    (rest == 1).then_some((p, h))
}

/// `q mod 3`, centered in {-1, 0, 1}.
pub fn centered_mod3(q: u32) -> i8 {
    match q % 3 {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

// Polynomials over GF(p), coefficients low-to-high, trailing zeros trimmed.
type Poly = Vec<u32>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Poly {
    // m is monic.
    let mut r: Poly = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let k = i + shift;
                r[k] = (r[k] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn digits(index: u32, p: u32, h: u32) -> Poly {
    let mut v = Vec::with_capacity(h as usize);
    let mut n = index;
    for _ in 0..h {
        v.push(n % p);
        n /= p;
    }
    trim(v)
}

fn undigits(poly: &[u32], p: u32) -> u32 {
    poly.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Monic polynomials of degree `d` over GF(p), enumerated by coefficient index.
fn monic_polys(p: u32, d: u32) -> impl Iterator<Item = Poly> {
    let count = p.pow(d);
    (0..count).map(move |n| {
        let mut v: Poly = (0..d).map(|i| n / p.pow(i) % p).collect();
        v.push(1);
        v
    })
}

/// Trial division by every monic polynomial of degree at most `deg/2`.
pub fn is_irreducible(modulus: &[u16], p: u32) -> bool {
    let m: Poly = modulus.iter().map(|&c| u32::from(c)).collect();
    let deg = m.len() as u32 - 1;
    if deg <= 1 {
        return true;
    }
    for d in 1..=deg / 2 {
        for f in monic_polys(p, d) {
            if poly_rem(&m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Builds GF(p^h). Without an explicit modulus the shipped Conway
    /// polynomial is used; pairs without one fall back to the least monic
    /// irreducible polynomial in coefficient-index order.
    pub fn new(p: u32, h: u32, modulus: Option<&[u16]>) -> Result<Self, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if h == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(h).filter(|&q| q <= MAX_ORDER as u64);
        let Some(q) = q else {
            return Err(FieldError::NoTableRoom { p, h });
        };
        let q = q as u32;

        let modulus: Vec<u16> = match modulus {
            Some(m) => {
                let ok = m.len() as u32 == h + 1
                    && m.last() == Some(&1)
                    && m.iter().all(|&c| u32::from(c) < p);
                if !ok {
                    return Err(FieldError::BadModulus { expected: h, p, got: m.to_vec() });
                }
                if !is_irreducible(m, p) {
                    return Err(FieldError::Reducible(m.to_vec(), p));
                }
                m.to_vec()
            }
            None => match conway_polynomial(p, h) {
                Some(m) => m.to_vec(),
                None => monic_polys(p, h)
                    .map(|v| v.into_iter().map(|c| c as u16).collect::<Vec<_>>())
                    .find(|m| is_irreducible(m, p))
                    .expect("irreducible polynomials exist in every degree"),
            },
        };

        let m32: Poly = modulus.iter().map(|&c| u32::from(c)).collect();
        let mulmod = |a: u32, b: u32| -> u32 {
            let prod = poly_mul(&digits(a, p, h), &digits(b, p, h), p);
            undigits(&poly_rem(&prod, &m32, p), p)
        };

        // Root of the modulus, i.e. the class of x.
        let x_class = undigits(&poly_rem(&[0, 1], &m32, p), p);
        let powers_of = |g: u32| -> Option<Vec<u16>> {
            if g == 0 {
                return None;
            }
            let mut seq = Vec::with_capacity(q as usize - 1);
            let mut cur = 1u32;
            loop {
                seq.push(cur as u16);
                cur = mulmod(cur, g);
                if cur == 1 {
                    break;
                }
                if seq.len() >= q as usize - 1 {
                    return None;
                }
            }
            (seq.len() == q as usize - 1).then_some(seq)
        };
        let (generator, powers) = std::iter::once(x_class)
            .chain(1..q)
            .find_map(|g| powers_of(g).map(|s| (g, s)))
            .expect("the multiplicative group of a finite field is cyclic");

        let order = q as usize - 1;
        let mut exp = vec![0u16; 2 * order];
        let mut log = vec![0u16; q as usize];
        for (i, &v) in powers.iter().enumerate() {
            exp[i] = v;
            exp[i + order] = v;
            log[v as usize] = i as u16;
        }

        let add_digits = |a: u32, b: u32| -> u32 {
            if p == 2 {
                return a ^ b;
            }
            let (mut a, mut b, mut out, mut scale) = (a, b, 0, 1);
            for _ in 0..h {
                out += (a % p + b % p) % p * scale;
                a /= p;
                b /= p;
                scale *= p;
            }
            out
        };
        let neg_digits = |a: u32| -> u32 {
            let (mut a, mut out, mut scale) = (a, 0, 1);
            for _ in 0..h {
                out += (p - a % p) % p * scale;
                a /= p;
                scale *= p;
            }
            out
        };
        let add_table = if q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_digits(a, b) as u16;
                }
            }
            t
        } else {
            Vec::new()
        };
        let neg_table = (0..q).map(|a| neg_digits(a) as u16).collect();

        let mut field = FieldSpec {
            p,
            h,
            q,
            xi: centered_mod3(q),
            modulus,
            generator: Elem(generator as u16),
            exp,
            log,
            add_table,
            neg_table,
            rho: None,
        };
        field.rho = field.nonsquare().ok();
        Ok(field)
    }

    /// Builds GF(q) with the default modulus.
    pub fn with_order(q: u32) -> Result<Self, FieldError> {
        let (p, h) = prime_power(q).ok_or(FieldError::NotPrimePower(q))?;
        Self::new(p, h, None)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn h(&self) -> u32 {
        self.h
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q mod 3` centered in {-1, 0, 1}.
    #[inline]
    pub fn xi(&self) -> i8 {
        self.xi
    }

    pub fn is_odd(&self) -> bool {
        self.p != 2
    }

    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }

    /// The primitive element the tables were built from.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// The designated non-square (odd q only).
    pub fn rho(&self) -> Option<Elem> {
        self.rho
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.p, h: self.h, modulus: self.modulus.clone() }
    }

    pub fn element(&self, index: u32) -> Result<Elem, FieldError> {
        if index < self.q {
            Ok(Elem(index as u16))
        } else {
            Err(FieldError::OutOfRange { index, q: self.q })
        }
    }

    /// All elements in ascending index order.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.q).map(|i| Elem(i as u16))
    }

    /// Nonzero elements in ascending index order.
    pub fn units(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.q).map(|i| Elem(i as u16))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u16)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if !self.add_table.is_empty() {
            return Elem(self.add_table[a.index() * self.q as usize + b.index()]);
        }
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.h == 1 {
            return Elem(((a.0 as u32 + b.0 as u32) % self.p) as u16);
        }
        let (p, mut x, mut y) = (self.p, a.0 as u32, b.0 as u32);
        let (mut out, mut scale) = (0u32, 1u32);
        for _ in 0..self.h {
            out += (x % p + y % p) % p * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        Elem(out as u16)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg_table[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        Elem(self.exp[self.log[a.index()] as usize + self.log[b.index()] as usize])
    }

    /// Multiplicative inverse. Panics on zero; see [`FieldSpec::try_inv`].
    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        assert!(!a.is_zero(), "inverse of zero");
        let order = self.q as usize - 1;
        Elem(self.exp[(order - self.log[a.index()] as usize) % order])
    }

    pub fn try_inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            Err(FieldError::DivideByZero)
        } else {
            Ok(self.inv(a))
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.try_inv(b)?))
    }

    /// `a^n` for any integer `n`; negative exponents need `a != 0`.
    /// `0^0` is one.
    pub fn pow(&self, a: Elem, n: i64) -> Result<Elem, FieldError> {
        if n == 0 {
            return Ok(Elem::ONE);
        }
        if a.is_zero() {
            return if n > 0 { Ok(Elem::ZERO) } else { Err(FieldError::DivideByZero) };
        }
        let order = self.q as i64 - 1;
        let e = (self.log[a.index()] as i64 * n).rem_euclid(order);
        Ok(Elem(self.exp[e as usize]))
    }

    /// Discrete logarithm with respect to [`FieldSpec::generator`].
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| u32::from(self.log[a.index()]))
    }

    /// `generator^k`.
    pub fn exp(&self, k: u64) -> Elem {
        Elem(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    /// The Frobenius map `x -> x^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p as i64).expect("positive exponent")
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a.is_zero() || self.p == 2 || self.log[a.index()] % 2 == 0
    }

    /// Least-index element failing the Euler criterion.
    pub fn nonsquare(&self) -> Result<Elem, FieldError> {
        if self.p == 2 {
            return Err(FieldError::EvenField(self.q));
        }
        let half = (self.q as i64 - 1) / 2;
        Ok(self
            .units()
            .find(|&x| self.pow(x, half).unwrap() != Elem::ONE)
            .expect("odd fields have non-squares"))
    }

    /// Square root, when one exists (least index of the two roots).
    pub fn sqrt(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&x| self.mul(x, x) == a)
    }

    /// Digits of an element, least significant first.
    pub fn coefficients(&self, a: Elem) -> Vec<u16> {
        let mut n = a.0 as u32;
        (0..self.h)
            .map(|_| {
                let d = n % self.p;
                n /= self.p;
                d as u16
            })
            .collect()
    }

    /// Multiplication by direct polynomial reduction, bypassing the tables.
    pub fn mul_by_polynomial(&self, a: Elem, b: Elem) -> Elem {
        let m: Poly = self.modulus.iter().map(|&c| u32::from(c)).collect();
        let prod = poly_mul(&digits(a.0 as u32, self.p, self.h), &digits(b.0 as u32, self.p, self.h), self.p);
        Elem(undigits(&poly_rem(&prod, &m, self.p), self.p) as u16)
    }

    /// A checked handle pairing an element with this field.
    pub fn scalar(&self, a: Elem) -> Scalar<'_> {
        Scalar { field: self, value: a }
    }
}

/// An element bound to its field, with operator overloads.
///
/// The operators panic when the operands come from different fields; the
/// `try_*` methods report [`FieldError::SpecMismatch`] instead.
#[derive(Debug, Clone, Copy)]
pub struct Scalar<'f> {
    field: &'f FieldSpec,
    value: Elem,
}

impl<'f> Scalar<'f> {
    pub fn value(self) -> Elem {
        self.value
    }

    pub fn field(self) -> &'f FieldSpec {
        self.field
    }

    fn check(self, other: Scalar<'_>) -> Result<(), FieldError> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::SpecMismatch)
        }
    }

    pub fn try_add(self, other: Scalar<'_>) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.field.scalar(self.field.add(self.value, other.value)))
    }

    pub fn try_mul(self, other: Scalar<'_>) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.field.scalar(self.field.mul(self.value, other.value)))
    }

    pub fn try_div(self, other: Scalar<'_>) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.field.scalar(self.field.div(self.value, other.value)?))
    }

    pub fn inv(self) -> Result<Self, FieldError> {
        Ok(self.field.scalar(self.field.try_inv(self.value)?))
    }

    pub fn pow(self, n: i64) -> Result<Self, FieldError> {
        Ok(self.field.scalar(self.field.pow(self.value, n)?))
    }
}

impl PartialEq for Scalar<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.check(*other).is_ok() && self.value == other.value
    }
}

impl fmt::Display for Scalar<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl<'f> Add for Scalar<'f> {
    type Output = Scalar<'f>;
    fn add(self, rhs: Self) -> Self {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl<'f> Sub for Scalar<'f> {
    type Output = Scalar<'f>;
    fn sub(self, rhs: Self) -> Self {
        self.try_add(-rhs).expect("field mismatch")
    }
}

impl<'f> Mul for Scalar<'f> {
    type Output = Scalar<'f>;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl<'f> Div for Scalar<'f> {
    type Output = Scalar<'f>;
    fn div(self, rhs: Self) -> Self {
        self.try_div(rhs).expect("division failed")
    }
}

impl<'f> Neg for Scalar<'f> {
    type Output = Scalar<'f>;
    fn neg(self) -> Self {
        self.field.scalar(self.field.neg(self.value))
    }
}
