//! Dense polynomials with integer coefficients, lowest degree first.
//!
//! Only what the rational-function backend needs: ring operations,
//! content, pseudo-remainders and a primitive-PRS gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct IntPoly(pub(crate) Vec<BigInt>);

impl IntPoly {
    pub(crate) fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub(crate) fn one() -> Self {
        IntPoly(vec![BigInt::one()])
    }

    pub(crate) fn constant(c: BigInt) -> Self {
        let mut p = IntPoly(vec![c]);
        p.trim();
        p
    }

    pub(crate) fn from_coeffs(c: Vec<BigInt>) -> Self {
        let mut p = IntPoly(c);
        p.trim();
        p
    }

    pub(crate) fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial reports 0.
    pub(crate) fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub(crate) fn leading(&self) -> Option<&BigInt> {
        self.0.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub(crate) fn low_order(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub(crate) fn shift_down(&mut self, k: usize) {
        if k > 0 {
            self.0.drain(..k.min(self.0.len()));
        }
    }

    pub(crate) fn shifted_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.0.iter().cloned());
        IntPoly(c)
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut c = long.0.clone();
        for (a, b) in c.iter_mut().zip(short.0.iter()) {
            *a += b;
        }
        IntPoly::from_coeffs(c)
    }

    pub(crate) fn neg(&self) -> Self {
        IntPoly(self.0.iter().map(|c| -c).collect())
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut c = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }

    /// Exact division of every coefficient by an integer.
    pub(crate) fn div_integer(&self, k: &BigInt) -> Self {
        if k.is_one() {
            return self.clone();
        }
        IntPoly(self.0.iter().map(|c| c / k).collect())
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub(crate) fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub(crate) fn primitive(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            g = -g;
        }
        self.div_integer(&g)
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^k * self mod d`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let mut r = self.0.clone();
        let dl = d.0.len();
        let lc = d.leading().expect("nonzero divisor");
        while r.len() >= dl {
            let top = r.last().cloned().unwrap();
            let shift = r.len() - dl;
            for c in r.iter_mut() {
                *c *= lc;
            }
            for (j, dc) in d.0.iter().enumerate() {
                r[shift + j] -= &top * dc;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly(r)
    }

    /// Primitive gcd (positive leading coefficient). `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.degree() == 0 || other.degree() == 0 {
            return IntPoly::one();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            if r.degree() == 0 {
                return IntPoly::one();
            }
            a = b;
            b = r.primitive();
        }
    }

    /// Quotient of an exact division; panics if `d` does not divide `self`.
    pub(crate) fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact_div by zero polynomial");
        if d.is_one() {
            return self.clone();
        }
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut r = self.0.clone();
        let dl = d.0.len();
        assert!(r.len() >= dl, "exact_div: divisor has larger degree");
        let lc = d.leading().unwrap();
        let mut q = vec![BigInt::zero(); r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lc);
            assert!(rem.is_zero(), "exact_div: inexact coefficient division");
            for (j, dc) in d.0.iter().enumerate() {
                r[k + j] -= &qc * dc;
            }
            q[k] = qc;
        }
        assert!(r.iter().all(|c| c.is_zero()), "exact_div: nonzero remainder");
        IntPoly::from_coeffs(q)
    }

    /// Total bit size, used as a pivot-selection heuristic.
    pub(crate) fn bits(&self) -> usize {
        self.0.iter().map(|c| c.bits() as usize + 1).sum()
    }
}
