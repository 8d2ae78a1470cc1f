use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intpoly::IntPoly;
use super::Scalar;
use crate::error::ScalarError;

/// An element of `Q(q)`, `q` transcendental.
///
/// Stored as `q^shift * num / den` where `num` and `den` are integer
/// polynomials with nonzero constant terms, coprime over `Q`, with no common
/// integer content, and `den` has a positive leading coefficient. This form
/// is unique, so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    pub(crate) shift: i64,
    pub(crate) num: IntPoly,
    pub(crate) den: IntPoly,
}

impl RationalFunction {
    /// The monomial `c * q^k`.
    pub fn monomial(c: i64, k: i64) -> Self {
        Self::from_parts(k, IntPoly::constant(BigInt::from(c)), IntPoly::one())
    }

    /// `sum_k c_k q^k` from `(c_k, k)` pairs.
    pub fn laurent(terms: &[(i64, i64)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, &(c, k)| acc + Self::monomial(c, k))
    }

    pub(crate) fn from_parts(shift: i64, num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = (num, den);
        let kn = num.low_order();
        let kd = den.low_order();
        num.shift_down(kn);
        den.shift_down(kd);
        let shift = shift + kn as i64 - kd as i64;
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g);
            den = den.exact_div(&g);
        }
        Self::finish(shift, num, den)
    }

    /// Content and sign normalization for already coprime parts.
    fn finish(shift: i64, mut num: IntPoly, mut den: IntPoly) -> Self {
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_integer(&c);
            den = den.div_integer(&c);
        }
        RationalFunction { shift, num, den }
    }

    pub fn is_laurent_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// `(coefficient, exponent)` pairs of the numerator, highest exponent first.
    fn numerator_terms(&self) -> Vec<(BigInt, i64)> {
        terms_desc(&self.num, self.shift)
    }
}

fn terms_desc(p: &IntPoly, shift: i64) -> Vec<(BigInt, i64)> {
    p.0.iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (c.clone(), i as i64 + shift))
        .collect()
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(BigInt, i64)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (c, k)) in terms.iter().enumerate() {
        if i > 0 {
            write!(f, "+")?;
        }
        write!(f, "{c}*q^{k}")?;
    }
    Ok(())
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.numerator_terms())?;
        write!(f, "/")?;
        write_terms(f, &terms_desc(&self.den, 0))
    }
}

fn parse_laurent(s: &str, whole: &str) -> Result<(i64, IntPoly), ScalarError> {
    let err = |reason: &str| ScalarError::Parse {
        input: whole.to_string(),
        reason: reason.to_string(),
    };
    if s == "0" {
        return Ok((0, IntPoly::zero()));
    }
    let mut terms = Vec::new();
    for t in s.split('+') {
        let (c, k) = t.split_once("*q^").ok_or_else(|| err("expected c*q^k term"))?;
        let c: BigInt = c.parse().map_err(|_| err("bad coefficient"))?;
        let k: i64 = k.parse().map_err(|_| err("bad exponent"))?;
        terms.push((c, k));
    }
    let low = terms.iter().map(|t| t.1).min().unwrap_or(0);
    let high = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (c, k) in terms {
        coeffs[(k - low) as usize] += c;
    }
    Ok((low, IntPoly::from_coeffs(coeffs)))
}

impl FromStr for RationalFunction {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let (n, d) = s.split_once('/').ok_or_else(|| ScalarError::Parse {
            input: s.to_string(),
            reason: "expected num/den".to_string(),
        })?;
        let (ns, np) = parse_laurent(n, s)?;
        let (ds, dp) = parse_laurent(d, s)?;
        if dp.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::from_parts(ns - ds, np, dp))
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction {
            shift: 0,
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction {
            shift: 0,
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }
}

impl<'a> Add<&'a RationalFunction> for RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self;
        }
        let s = self.shift.min(rhs.shift);
        let a = self.num.shifted_up((self.shift - s) as usize);
        let b = rhs.num.shifted_up((rhs.shift - s) as usize);
        if self.den == rhs.den {
            RationalFunction::from_parts(s, a.add(&b), self.den)
        } else {
            let num = a.mul(&rhs.den).add(&b.mul(&self.den));
            RationalFunction::from_parts(s, num, self.den.mul(&rhs.den))
        }
    }
}

impl<'a> Mul<&'a RationalFunction> for RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        let shift = self.shift + rhs.shift;
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::finish(shift, self.num.mul(&rhs.num), IntPoly::one());
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num, rhs.den.clone())
        } else {
            (self.num.exact_div(&g1), rhs.den.exact_div(&g1))
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den)
        } else {
            (rhs.num.exact_div(&g2), self.den.exact_div(&g2))
        };
        RationalFunction::finish(shift, n1.mul(&n2), d1.mul(&d2))
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl<'a> Sub<&'a RationalFunction> for RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs.clone())
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        self * &rhs
    }
}

impl Scalar for RationalFunction {
    const ROOT_ORDER: u32 = 0;

    fn q() -> Self {
        Self::monomial(1, 1)
    }

    fn from_integer(c: i64) -> Self {
        Self::monomial(c, 0)
    }

    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(RationalFunction::finish(
            -self.shift,
            self.den.clone(),
            self.num.clone(),
        ))
    }

    fn complexity(&self) -> usize {
        self.num.bits() + self.den.bits()
    }
}
