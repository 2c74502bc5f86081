//! The quadratic extension GF(q^2) = GF(q)(θ) as a tower over a base field.

use super::{Elem, FieldSpec};

/// `re + im·θ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ext2 {
    pub re: Elem,
    pub im: Elem,
}

impl Ext2 {
    pub const ZERO: Ext2 = Ext2 { re: Elem::ZERO, im: Elem::ZERO };
    pub const ONE: Ext2 = Ext2 { re: Elem::ONE, im: Elem::ZERO };

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Whether the element lies in the base field.
    pub fn is_base(self) -> bool {
        self.im.is_zero()
    }
}

/// GF(q)(θ) where θ is a root of the least-index irreducible
/// `x^2 - trace·x + norm`.
#[derive(Debug, Clone, Copy)]
pub struct QuadraticExtension<'f> {
    base: &'f FieldSpec,
    trace: Elem,
    norm: Elem,
}

impl<'f> QuadraticExtension<'f> {
    pub fn new(base: &'f FieldSpec) -> Self {
        let (trace, norm) = base
            .elements()
            .flat_map(|n| base.elements().map(move |t| (t, n)))
            .find(|&(t, n)| Self::is_irreducible(base, t, n))
            .expect("every finite field has an irreducible quadratic");
        QuadraticExtension { base, trace, norm }
    }

    /// Whether `x^2 - t·x + n` has no root in the base field.
    pub fn is_irreducible(base: &FieldSpec, t: Elem, n: Elem) -> bool {
        base.elements().all(|x| {
            let v = base.add(base.sub(base.mul(x, x), base.mul(t, x)), n);
            !v.is_zero()
        })
    }

    pub fn base(&self) -> &'f FieldSpec {
        self.base
    }

    /// Trace and norm of θ.
    pub fn minimal_polynomial(&self) -> (Elem, Elem) {
        (self.trace, self.norm)
    }

    pub fn embed(&self, a: Elem) -> Ext2 {
        Ext2 { re: a, im: Elem::ZERO }
    }

    pub fn theta(&self) -> Ext2 {
        Ext2 { re: Elem::ZERO, im: Elem::ONE }
    }

    /// Every element, `re` varying fastest.
    pub fn elements(&self) -> impl Iterator<Item = Ext2> + '_ {
        self.base
            .elements()
            .flat_map(move |im| self.base.elements().map(move |re| Ext2 { re, im }))
    }

    pub fn add(&self, a: Ext2, b: Ext2) -> Ext2 {
        let f = self.base;
        Ext2 { re: f.add(a.re, b.re), im: f.add(a.im, b.im) }
    }

    pub fn sub(&self, a: Ext2, b: Ext2) -> Ext2 {
        let f = self.base;
        Ext2 { re: f.sub(a.re, b.re), im: f.sub(a.im, b.im) }
    }

    pub fn neg(&self, a: Ext2) -> Ext2 {
        let f = self.base;
        Ext2 { re: f.neg(a.re), im: f.neg(a.im) }
    }

    pub fn mul(&self, a: Ext2, b: Ext2) -> Ext2 {
        // θ^2 = trace·θ - norm
        let f = self.base;
        let bd = f.mul(a.im, b.im);
        Ext2 {
            re: f.sub(f.mul(a.re, b.re), f.mul(bd, self.norm)),
            im: f.add(f.add(f.mul(a.re, b.im), f.mul(a.im, b.re)), f.mul(bd, self.trace)),
        }
    }

    /// The Galois conjugate `a^q`.
    pub fn conj(&self, a: Ext2) -> Ext2 {
        let f = self.base;
        Ext2 { re: f.add(a.re, f.mul(a.im, self.trace)), im: f.neg(a.im) }
    }

    /// `a · conj(a)`, an element of the base field.
    pub fn norm(&self, a: Ext2) -> Elem {
        let p = self.mul(a, self.conj(a));
        debug_assert!(p.is_base());
        p.re
    }

    pub fn inv(&self, a: Ext2) -> Option<Ext2> {
        if a.is_zero() {
            return None;
        }
        let n = self.base.inv(self.norm(a));
        let c = self.conj(a);
        Some(Ext2 { re: self.base.mul(c.re, n), im: self.base.mul(c.im, n) })
    }

    pub fn pow(&self, a: Ext2, mut n: u64) -> Ext2 {
        let (mut acc, mut base) = (Ext2::ONE, a);
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }
}
