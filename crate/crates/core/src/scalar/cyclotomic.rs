use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ratfunc::RationalFunction;
use super::Scalar;
use crate::error::ScalarError;

const MAX_WORK: usize = 2048;

const fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Multiply `poly` (degree `deg`) by `x^d - 1` in place.
const fn mul_binomial(poly: &mut [i64; MAX_WORK], deg: usize, d: usize) -> usize {
    let mut k = deg + d;
    loop {
        let high = if k >= d { poly[k - d] } else { 0 };
        let low = if k <= deg { poly[k] } else { 0 };
        poly[k] = high - low;
        if k == 0 {
            break;
        }
        k -= 1;
    }
    deg + d
}

/// Divide `poly` (degree `deg`) by `x^d - 1` exactly, in place.
const fn div_binomial(poly: &mut [i64; MAX_WORK], deg: usize, d: usize) -> usize {
    // poly = (x^d - 1) * r  =>  r_k = poly_{k+d} + r_{k+d}, top down.
    let qdeg = deg - d;
    let mut r = [0i64; MAX_WORK];
    let mut k = qdeg + 1;
    while k > 0 {
        k -= 1;
        let above = if k + d <= qdeg { r[k + d] } else { 0 };
        r[k] = poly[k + d] + above;
    }
    let mut i = 0;
    while i < MAX_WORK {
        poly[i] = if i <= qdeg { r[i] } else { 0 };
        i += 1;
    }
    qdeg
}

/// Coefficients (lowest first) and degree of the `l`-th cyclotomic
/// polynomial, via `prod_{d | l} (x^d - 1)^{mu(l/d)}`.
pub const fn cyclotomic_coefficients(l: u32) -> ([i64; 64], usize) {
    let mut poly = [0i64; MAX_WORK];
    poly[0] = 1;
    let mut deg = 0;
    let mut d = 1;
    while d <= l {
        if l.is_multiple_of(d) && mobius(l / d) == 1 {
            deg = mul_binomial(&mut poly, deg, d as usize);
        }
        d += 1;
    }
    d = 1;
    while d <= l {
        if l.is_multiple_of(d) && mobius(l / d) == -1 {
            deg = div_binomial(&mut poly, deg, d as usize);
        }
        d += 1;
    }
    let mut out = [0i64; 64];
    let mut i = 0;
    while i <= deg {
        out[i] = poly[i];
        i += 1;
    }
    (out, deg)
}

/// The `l`-th cyclotomic polynomial, lowest coefficient first.
pub fn cyclotomic_polynomial(l: u32) -> Vec<i64> {
    let (c, d) = cyclotomic_coefficients(l);
    c[..=d].to_vec()
}

/// An element of `Q(zeta_L)`, with `q = zeta_L` a primitive `L`-th root of
/// unity.
///
/// Stored as an integer vector of length `deg Phi_L` over a positive common
/// denominator, with the content of the vector coprime to the denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<const L: u32> {
    coeffs: Vec<BigInt>,
    den: BigInt,
}

impl<const L: u32> Cyclotomic<L> {
    const MODULUS: ([i64; 64], usize) = {
        assert!(L >= 2 && L < 64, "cyclotomic order out of supported range");
        cyclotomic_coefficients(L)
    };

    /// `deg Phi_L`, the dimension of the field over `Q`.
    pub const DEGREE: usize = Self::MODULUS.1;

    fn raw(coeffs: Vec<BigInt>, den: BigInt) -> Self {
        debug_assert_eq!(coeffs.len(), Self::DEGREE);
        let mut g = den.clone();
        for c in &coeffs {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if den.is_negative() {
            g = -g;
        }
        if g.is_one() {
            Cyclotomic { coeffs, den }
        } else {
            Cyclotomic {
                coeffs: coeffs.iter().map(|c| c / &g).collect(),
                den: den / g,
            }
        }
    }

    /// Reduce an arbitrary-length integer polynomial modulo `Phi_L`.
    fn reduce(mut p: Vec<BigInt>, den: BigInt) -> Self {
        let (phi, d) = Self::MODULUS;
        while p.len() > d {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = p.len() - d;
            for (j, &c) in phi[..d].iter().enumerate() {
                if c != 0 {
                    p[base + j] -= &top * c;
                }
            }
        }
        p.resize(d, BigInt::zero());
        Self::raw(p, den)
    }

    /// `q^k` for any integer `k`, using `q^L = 1`.
    pub fn q_power(k: i64) -> Self {
        let e = k.rem_euclid(L as i64) as usize;
        let mut p = vec![BigInt::zero(); e + 1];
        p[e] = BigInt::one();
        Self::reduce(p, BigInt::one())
    }

    /// Rational coefficients with respect to `1, q, ..., q^(deg - 1)`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn from_coefficients(c: &[BigRational]) -> Result<Self, ScalarError> {
        if c.len() != Self::DEGREE {
            return Err(ScalarError::Parse {
                input: format!("{c:?}"),
                reason: format!("expected {} coefficients", Self::DEGREE),
            });
        }
        let den = c
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let coeffs = c
            .iter()
            .map(|x| x.numer() * (&den / x.denom()))
            .collect();
        Ok(Self::raw(coeffs, den))
    }

    /// Image of a generic rational function under `q -> zeta_L`.
    pub fn specialize(f: &RationalFunction) -> Result<Self, ScalarError> {
        let eval = |p: &super::intpoly::IntPoly| Self::reduce(p.0.clone(), BigInt::one());
        let num = eval(&f.num) * &Self::q_power(f.shift);
        let den = eval(&f.den);
        if den.is_zero() {
            return Err(ScalarError::Pole { order: L });
        }
        num.try_div(&den)
    }

    fn as_rational_poly(&self) -> Vec<BigRational> {
        self.coefficients()
    }
}

fn trim_q(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Remainder and quotient of `a / b` over `Q`.
fn rat_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim_q(&mut r);
    let lb = b.last().expect("nonzero divisor").clone();
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let k = r.len() - b.len();
        let c = r.last().unwrap() / &lb;
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &c * bc;
        }
        q[k] = c;
        r.pop();
        trim_q(&mut r);
    }
    (q, r)
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim_q(&mut out);
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim_q(&mut out);
    out
}

impl<const L: u32> fmt::Display for Cyclotomic<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coefficients().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<const L: u32> FromStr for Cyclotomic<L> {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let err = |reason: &str| ScalarError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("expected [c0,...]"))?;
        let c = body
            .split(',')
            .map(|t| t.trim().parse::<BigRational>().map_err(|_| err("bad coefficient")))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_coefficients(&c)
    }
}

impl<const L: u32> Zero for Cyclotomic<L> {
    fn zero() -> Self {
        Cyclotomic {
            coeffs: vec![BigInt::zero(); Self::DEGREE],
            den: BigInt::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<const L: u32> One for Cyclotomic<L> {
    fn one() -> Self {
        let mut c = vec![BigInt::zero(); Self::DEGREE];
        c[0] = BigInt::one();
        Cyclotomic {
            coeffs: c,
            den: BigInt::one(),
        }
    }
}

impl<'a, const L: u32> Add<&'a Cyclotomic<L>> for Cyclotomic<L> {
    type Output = Cyclotomic<L>;

    fn add(self, rhs: &'a Cyclotomic<L>) -> Cyclotomic<L> {
        if self.den == rhs.den {
            let c = self
                .coeffs
                .into_iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return Cyclotomic::raw(c, self.den);
        }
        let den = self.den.lcm(&rhs.den);
        let fa = &den / &self.den;
        let fb = &den / &rhs.den;
        let c = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a * &fa + b * &fb)
            .collect();
        Cyclotomic::raw(c, den)
    }
}

impl<'a, const L: u32> Mul<&'a Cyclotomic<L>> for Cyclotomic<L> {
    type Output = Cyclotomic<L>;

    fn mul(self, rhs: &'a Cyclotomic<L>) -> Cyclotomic<L> {
        let d = Self::DEGREE;
        let mut p = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    p[i + j] += a * b;
                }
            }
        }
        Cyclotomic::reduce(p, self.den * &rhs.den)
    }
}

impl<const L: u32> Neg for Cyclotomic<L> {
    type Output = Cyclotomic<L>;

    fn neg(self) -> Cyclotomic<L> {
        Cyclotomic {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            den: self.den,
        }
    }
}

impl<'a, const L: u32> Sub<&'a Cyclotomic<L>> for Cyclotomic<L> {
    type Output = Cyclotomic<L>;

    fn sub(self, rhs: &'a Cyclotomic<L>) -> Cyclotomic<L> {
        self + &(-rhs.clone())
    }
}

impl<const L: u32> Add for Cyclotomic<L> {
    type Output = Cyclotomic<L>;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<const L: u32> Sub for Cyclotomic<L> {
    type Output = Cyclotomic<L>;
    fn sub(self, rhs: Self) -> Self {
        self + &(-rhs)
    }
}

impl<const L: u32> Mul for Cyclotomic<L> {
    type Output = Cyclotomic<L>;
    fn mul(self, rhs: Self) -> Self {
        self * &rhs
    }
}

impl<const L: u32> Scalar for Cyclotomic<L> {
    const ROOT_ORDER: u32 = L;

    fn q() -> Self {
        Self::q_power(1)
    }

    fn from_integer(c: i64) -> Self {
        let mut v = vec![BigInt::zero(); Self::DEGREE];
        v[0] = BigInt::from(c);
        Cyclotomic {
            coeffs: v,
            den: BigInt::one(),
        }
    }

    fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // Extended Euclid on (Phi_L, self): track t with t * self = r mod Phi_L.
        let (phi, d) = Self::MODULUS;
        let modulus: Vec<BigRational> = phi[..=d]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let mut a = self.as_rational_poly();
        trim_q(&mut a);
        let (mut r0, mut r1) = (modulus, a);
        let (mut t0, mut t1): (Vec<BigRational>, Vec<BigRational>) =
            (Vec::new(), vec![BigRational::one()]);
        while r1.len() > 1 {
            let (quot, rem) = rat_divrem(&r0, &r1);
            let t2 = rat_sub(&t0, &rat_mul(&quot, &t1));
            r0 = std::mem::replace(&mut r1, rem);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r1 is a nonzero constant because Phi_L is irreducible.
        let c = r1[0].clone();
        let mut inv: Vec<BigRational> = t1.iter().map(|x| x / &c).collect();
        inv.resize(d, BigRational::zero());
        Self::from_coefficients(&inv)
    }

    fn complexity(&self) -> usize {
        self.coeffs.iter().map(|c| c.bits() as usize + 1).sum::<usize>() + self.den.bits() as usize
    }
}
