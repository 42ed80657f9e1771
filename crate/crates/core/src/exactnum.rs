//! Exact scalars: big rationals, Gaussian rationals and products of square roots.
//!
//! Every computation in this crate runs over [`GaussRational`]. Real-field
//! algebras simply never leave the subfield with zero imaginary part.
//! [`RootProduct`] is a multiplicative extension used for normalization
//! witnesses, where square roots of contraction values appear.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Element of Q(i), stored as `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRational {
    re: Rational,
    im: Rational,
}

/// The scalar type used throughout the crate.
pub type Scalar = GaussRational;

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// |z|² as a rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_real() {
            return Ok(Self::from_rational(self.re.recip()));
        }
        let n = self.norm_sqr();
        Ok(GaussRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, exp: i64) -> Result<Self, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Positive real rational part; `None` when the value is not a positive rational.
    pub fn as_positive_rational(&self) -> Option<&Rational> {
        (self.is_real() && self.re.is_positive()).then_some(&self.re)
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for GaussRational {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::from_rational(&self.re + &rhs.re);
        }
        GaussRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::from_rational(&self.re - &rhs.re);
        }
        GaussRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::from_rational(&self.re * &rhs.re);
        }
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

/// Panics on a zero divisor; use [`GaussRational::checked_div`] for fallible division.
impl<'a> Div<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn div(self, rhs: &GaussRational) -> GaussRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: GaussRational) -> GaussRational { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: &GaussRational) -> GaussRational { (&self).$m(rhs) }
        }
        impl<'a> $tr<GaussRational> for &'a GaussRational {
            type Output = GaussRational;
            fn $m(self, rhs: GaussRational) -> GaussRational { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&GaussRational> for GaussRational {
    fn add_assign(&mut self, rhs: &GaussRational) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&GaussRational> for GaussRational {
    fn sub_assign(&mut self, rhs: &GaussRational) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl MulAssign<&GaussRational> for GaussRational {
    fn mul_assign(&mut self, rhs: &GaussRational) {
        *self = &*self * rhs;
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational { re: -&self.re, im: -&self.im }
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        if self.im.is_one() {
            write!(f, "i")
        } else if (-&self.im).is_one() {
            write!(f, "-i")
        } else {
            fmt_rational(&self.im, f)?;
            write!(f, "i")
        }
    }
}

impl fmt::Debug for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return None;
    }
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            (!q.is_zero()).then(|| Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

impl FromStr for GaussRational {
    type Err = ScalarError;

    /// Accepts `p`, `p/q`, `ri`, `p/q+r/si`, `-i`, with optional signs.
    fn from_str(input: &str) -> Result<Self, ScalarError> {
        let err = || ScalarError::Parse(input.to_string());
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err());
        }
        let Some(body) = s.strip_suffix('i') else {
            return parse_rational(&s).map(Self::from_rational).ok_or_else(err);
        };
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .rev()
            .find(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k);
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let re = if re_part.is_empty() {
            Rational::zero()
        } else {
            parse_rational(re_part).ok_or_else(err)?
        };
        let im = match im_part {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other).ok_or_else(err)?,
        };
        Ok(GaussRational { re, im })
    }
}

impl Serialize for GaussRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Splits a positive integer as `s² · m` with `m` squarefree (up to trial-division limits).
fn square_free_split(n: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(n.is_positive());
    let mut square = BigInt::one();
    let mut rest = n.clone();
    let mut free = BigInt::one();
    let mut d = BigInt::from(2u32);
    let limit = BigInt::from(1u64 << 20);
    while &d * &d <= rest && d < limit {
        let mut count = 0u32;
        while rest.is_multiple_of(&d) {
            rest /= &d;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= &d;
        }
        if count % 2 == 1 {
            free *= &d;
        }
        d += if d == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigInt::one() {
        let root = rest.sqrt();
        if &root * &root == rest {
            square *= root;
        } else {
            free *= rest;
        }
    }
    (square, free)
}

/// `coeff · ∏ √radicand`, kept in a canonical form.
///
/// Canonical radicands are either a single positive squarefree integer
/// greater than one, or primitive non-real Gaussian integers (coprime real
/// and imaginary parts). Equal radicands never appear twice: `√v·√v` is
/// folded into the coefficient. Square roots are principal branches, so
/// `√(a²w) = a√w` for rational `a > 0` and `√(−m) = i√m` for `m > 0`.
/// Equality is syntactic on this form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootProduct {
    coeff: GaussRational,
    radicands: Vec<GaussRational>,
}

impl RootProduct {
    pub fn zero() -> Self {
        RootProduct { coeff: GaussRational::zero(), radicands: Vec::new() }
    }

    pub fn one() -> Self {
        RootProduct::from_scalar(GaussRational::one())
    }

    pub fn from_scalar(coeff: GaussRational) -> Self {
        RootProduct { coeff, radicands: Vec::new() }
    }

    /// Builds `coeff · ∏ √r` and canonicalizes.
    pub fn new(coeff: GaussRational, radicands: Vec<GaussRational>) -> Self {
        let mut acc = RootProduct::from_scalar(coeff);
        for r in radicands {
            acc = acc.mul(&RootProduct::sqrt(&r));
        }
        acc
    }

    pub fn coeff(&self) -> &GaussRational {
        &self.coeff
    }

    pub fn radicands(&self) -> &[GaussRational] {
        &self.radicands
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The plain scalar value, when no radical remains.
    pub fn as_scalar(&self) -> Option<&GaussRational> {
        self.radicands.is_empty().then_some(&self.coeff)
    }

    /// Principal square root of an exact scalar.
    pub fn sqrt(v: &GaussRational) -> Self {
        if v.is_zero() {
            return RootProduct::zero();
        }
        if v.is_real() {
            let (p, q) = (v.re.numer(), v.re.denom());
            let pq = p * q;
            let negative = pq.sign() == Sign::Minus;
            let (s, m) = square_free_split(&pq.abs());
            let mut coeff = GaussRational::from_rational(Rational::new(s, q.clone()));
            if negative {
                coeff = &coeff * &GaussRational::i();
            }
            let radicands = if m.is_one() { Vec::new() } else { vec![int_scalar(m)] };
            return RootProduct { coeff, radicands };
        }
        // v = (c/D)·w with w primitive Gaussian integer and c/D > 0
        let denom = v.re.denom().lcm(v.im.denom());
        let a = (&v.re * Rational::from_integer(denom.clone())).to_integer();
        let b = (&v.im * Rational::from_integer(denom.clone())).to_integer();
        let c = a.gcd(&b);
        let w = GaussRational::new(
            Rational::from_integer(&a / &c),
            Rational::from_integer(&b / &c),
        );
        let scale = RootProduct::sqrt(&GaussRational::from_rational(Rational::new(c, denom)));
        match gaussian_root(&w) {
            Some(root) => scale.mul(&root),
            None => scale.mul_radicand(w),
        }
    }

    /// `v^(n/2)` for integer `n`, realized as a power times at most one root.
    pub fn pow_half(v: &GaussRational, n: i64) -> Result<Self, ScalarError> {
        let whole = v.powi(n.div_euclid(2))?;
        let mut out = RootProduct::from_scalar(whole);
        if n.rem_euclid(2) == 1 {
            out = out.mul(&RootProduct::sqrt(v));
        }
        Ok(out)
    }

    // Multiplies by √w for a canonical radicand w.
    fn mul_radicand(mut self, w: GaussRational) -> Self {
        if self.is_zero() {
            return RootProduct::zero();
        }
        if w.is_real() {
            let m = w.re.to_integer();
            if m.is_one() {
                return self;
            }
            match self.radicands.iter().position(|r| r.is_real()) {
                Some(pos) => {
                    let other = self.radicands[pos].re.to_integer();
                    let g = other.gcd(&m);
                    let merged = (&other / &g) * (&m / &g);
                    self.coeff = &self.coeff * &int_scalar(g);
                    if merged.is_one() {
                        self.radicands.remove(pos);
                    } else {
                        self.radicands[pos] = int_scalar(merged);
                    }
                }
                None => self.radicands.push(int_scalar(m)),
            }
        } else {
            match self.radicands.iter().position(|r| *r == w) {
                Some(pos) => {
                    self.radicands.remove(pos);
                    self.coeff = &self.coeff * &w;
                }
                None => self.radicands.push(w),
            }
        }
        self.radicands.sort();
        self
    }

    pub fn mul(&self, rhs: &RootProduct) -> RootProduct {
        if self.is_zero() || rhs.is_zero() {
            return RootProduct::zero();
        }
        let mut out = RootProduct { coeff: &self.coeff * &rhs.coeff, radicands: self.radicands.clone() };
        for r in &rhs.radicands {
            out = out.mul_radicand(r.clone());
        }
        out
    }

    pub fn scale(&self, s: &GaussRational) -> RootProduct {
        if s.is_zero() {
            return RootProduct::zero();
        }
        RootProduct { coeff: &self.coeff * s, radicands: self.radicands.clone() }
    }

    pub fn inv(&self) -> Result<RootProduct, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // 1/(c·∏√r) = ∏√r / (c·∏r)
        let denom = self.radicands.iter().fold(self.coeff.clone(), |acc, r| &acc * r);
        Ok(RootProduct { coeff: denom.inv()?, radicands: self.radicands.clone() })
    }

    pub fn checked_div(&self, rhs: &RootProduct) -> Result<RootProduct, ScalarError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn neg(&self) -> RootProduct {
        RootProduct { coeff: -&self.coeff, radicands: self.radicands.clone() }
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, n: i64) -> Result<RootProduct, ScalarError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut out = RootProduct::one();
        for _ in 0..n.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// The exact square, always a plain scalar.
    pub fn square(&self) -> GaussRational {
        let sq = self.mul(self);
        debug_assert!(sq.radicands.is_empty());
        sq.coeff
    }
}

/// Principal root of `a + bi` in Z[i], if it has one.
fn gauss_int_sqrt(a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt)> {
    let n2 = a * a + b * b;
    let n = n2.sqrt();
    if &n * &n != n2 {
        return None;
    }
    let two = BigInt::from(2u32);
    let (xx, yy) = (&n + a, &n - a);
    if !xx.is_multiple_of(&two) {
        return None;
    }
    let (xx, yy) = (xx / &two, yy / &two);
    let (x, y) = (xx.sqrt(), yy.sqrt());
    if &x * &x != xx || &y * &y != yy {
        return None;
    }
    // principal branch: Re > 0, or Re = 0 and Im ≥ 0
    if x.is_zero() {
        return Some((x, y));
    }
    let y = if b.is_negative() { -y } else { y };
    Some((x, y))
}

// √w for a primitive non-real Gaussian integer `w` that is `t²` or `±i·t²`.
fn gaussian_root(w: &GaussRational) -> Option<RootProduct> {
    let (a, b) = (w.re.to_integer(), w.im.to_integer());
    let gi = |x: BigInt, y: BigInt| GaussRational::new(Rational::from_integer(x), Rational::from_integer(y));
    if let Some((x, y)) = gauss_int_sqrt(&a, &b) {
        return Some(RootProduct::from_scalar(gi(x, y)));
    }
    // w = i·t²: √w = ±t(1+i)/√2;  w = −i·t²: √w = ±t(1−i)/√2
    for (twist, unit) in [(gi(BigInt::zero(), -BigInt::one()), gi(BigInt::one(), BigInt::one())), (gi(BigInt::zero(), BigInt::one()), gi(BigInt::one(), -BigInt::one()))] {
        let t2 = &twist * w;
        if let Some((x, y)) = gauss_int_sqrt(&t2.re.to_integer(), &t2.im.to_integer()) {
            let mut r = &gi(x, y) * &unit;
            if r.re.is_negative() || (r.re.is_zero() && r.im.is_negative()) {
                r = -r;
            }
            let half = GaussRational::from_frac(1, 2);
            return Some(RootProduct { coeff: &r * &half, radicands: vec![int_scalar(BigInt::from(2u32))] });
        }
    }
    None
}

fn int_scalar(n: BigInt) -> GaussRational {
    GaussRational::from_rational(Rational::from_integer(n))
}

impl fmt::Display for RootProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicands.is_empty() {
            return write!(f, "{}", self.coeff);
        }
        write!(f, "({})", self.coeff)?;
        for r in &self.radicands {
            write!(f, "*sqrt({})", r)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RootProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for RootProduct {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Total order used to pick canonical representatives: `(re, im)` lexicographic.
pub fn cmp_scalar(a: &GaussRational, b: &GaussRational) -> Ordering {
    a.cmp(b)
}

/// Small integer view, used by formatting and tests.
pub fn to_i64(s: &GaussRational) -> Option<i64> {
    if s.is_real() && s.re.denom().is_one() {
        s.re.numer().to_i64()
    } else {
        None
    }
}

/// Ground field of an algebra. Real algebras keep every scalar in Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Real => "R",
            Field::Complex => "C",
        })
    }
}

impl FromStr for Field {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        match s {
            "R" | "r" | "real" => Ok(Field::Real),
            "C" | "c" | "complex" => Ok(Field::Complex),
            _ => Err(ScalarError::Parse(s.to_string())),
        }
    }
}

impl Field {
    /// Small random element: numerators in `-9..=9`, denominators in `1..=5`.
    pub fn sample<R: rand::Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        let part = |rng: &mut R| GaussRational::from_frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let re = part(rng);
        match self {
            Field::Real => re,
            Field::Complex => {
                let im = part(rng);
                GaussRational::new(re.re, im.re)
            }
        }
    }

    pub fn sample_nonzero<R: rand::Rng + ?Sized>(self, rng: &mut R) -> Scalar {
        loop {
            let s = self.sample(rng);
            if !s.is_zero() {
                return s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> GaussRational {
        GaussRational::from_frac(p, d)
    }

    fn g(s: &str) -> GaussRational {
        s.parse().unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn conjugate_product() {
        assert_eq!(g("1+i") * g("1-i"), q(2, 1));
    }

    #[test]
    fn root_pair_extraction() {
        let r2 = RootProduct::sqrt(&q(2, 1));
        assert_eq!(r2.mul(&r2), RootProduct::from_scalar(q(2, 1)));
    }

    #[test]
    fn root_product_equality_is_syntactic() {
        let two = RootProduct::from_scalar(q(2, 1));
        assert_eq!(two, RootProduct::from_scalar(q(2, 1)));
        let root_two = RootProduct::new(q(1, 1), vec![q(2, 1)]);
        assert_ne!(root_two, two);
        assert_eq!(RootProduct::new(q(1, 1), vec![q(4, 1)]), two);
    }

    #[test]
    fn negative_and_fractional_radicands() {
        // √(-4) = 2i
        assert_eq!(RootProduct::sqrt(&q(-4, 1)), RootProduct::from_scalar(g("2i")));
        // √(1/8) = √2/4
        assert_eq!(RootProduct::sqrt(&q(1, 8)), RootProduct::new(q(1, 4), vec![q(2, 1)]));
        // √2·√3 = √6
        let r6 = RootProduct::sqrt(&q(2, 1)).mul(&RootProduct::sqrt(&q(3, 1)));
        assert_eq!(r6, RootProduct::sqrt(&q(6, 1)));
    }

    #[test]
    fn gaussian_radicands_pair() {
        let v = g("1+2i");
        let r = RootProduct::sqrt(&v);
        assert_eq!(r.radicands().len(), 1);
        assert_eq!(r.mul(&r), RootProduct::from_scalar(v.clone()));
        assert_eq!(r.checked_div(&r).unwrap(), RootProduct::one());
        // (2+2i) = 2·(1+i): √2 splits off as a rational radicand
        let s = RootProduct::sqrt(&g("2+2i"));
        assert_eq!(s.radicands(), &[g("1+i"), q(2, 1)]);
    }

    #[test]
    fn gaussian_squares_are_recognized() {
        // (2+i)² = 3+4i
        assert_eq!(RootProduct::sqrt(&g("3+4i")), RootProduct::from_scalar(g("2+i")));
        assert_eq!(RootProduct::sqrt(&g("-3-4i")), RootProduct::from_scalar(g("1-2i")));
        // √(2i) = 1+i and √i = (1+i)/√2
        assert_eq!(RootProduct::sqrt(&g("2i")), RootProduct::from_scalar(g("1+i")));
        assert_eq!(RootProduct::sqrt(&g("i")), RootProduct::new(g("1/2+1/2i"), vec![q(2, 1)]));
        assert_eq!(RootProduct::sqrt(&g("-i")), RootProduct::new(g("1/2-1/2i"), vec![q(2, 1)]));
        assert_eq!(RootProduct::sqrt(&g("i")).square(), g("i"));
        assert_eq!(RootProduct::sqrt(&g("-2i")).square(), g("-2i"));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q(1, 1).checked_div(&q(0, 1)), Err(ScalarError::DivisionByZero));
        assert!(RootProduct::zero().inv().is_err());
    }

    #[test]
    fn text_forms() {
        assert_eq!(g("3/2"), q(3, 2));
        assert_eq!(g("-1/3i"), GaussRational::new(Rational::zero(), -Rational::new(1.into(), 3.into())));
        assert_eq!(g("1/2+1/2i"), GaussRational::new(Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into())));
        assert_eq!(g("-i"), -GaussRational::i());
        assert_eq!(g("2-i").to_string(), "2-i");
        assert_eq!(g("-1/2+3i").to_string(), "-1/2+3i");
        assert!("1/0".parse::<GaussRational>().is_err());
        assert!("abc".parse::<GaussRational>().is_err());
        assert!("".parse::<GaussRational>().is_err());
    }

    #[test]
    fn pow_half_matches_sqrt() {
        let v = q(-6, 5);
        let cube_half = RootProduct::pow_half(&v, 3).unwrap();
        assert_eq!(cube_half, RootProduct::sqrt(&v).mul(&RootProduct::from_scalar(v.clone())));
        let inv_half = RootProduct::pow_half(&v, -1).unwrap();
        assert_eq!(inv_half.mul(&RootProduct::sqrt(&v)), RootProduct::one());
    }

    fn small() -> impl Strategy<Value = GaussRational> {
        (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5).prop_map(|(a, b, c, d)| {
            GaussRational::new(Rational::new(a.into(), b.into()), Rational::new(c.into(), d.into()))
        })
    }

    fn nonzero() -> impl Strategy<Value = GaussRational> {
        small().prop_filter("nonzero", |x| !x.is_zero())
    }

    proptest! {
        #[test]
        fn field_axioms(a in small(), b in small(), c in small()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(a.conj().conj(), a.clone());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), GaussRational::one());
            }
        }

        #[test]
        fn text_round_trip(a in small()) {
            prop_assert_eq!(a.to_string().parse::<GaussRational>().unwrap(), a);
        }

        #[test]
        fn root_products_commute_and_associate(a in nonzero(), b in nonzero(), c in nonzero()) {
            let (ra, rb, rc) = (RootProduct::sqrt(&a), RootProduct::sqrt(&b), RootProduct::sqrt(&c));
            prop_assert_eq!(ra.mul(&rb), rb.mul(&ra));
            prop_assert_eq!(ra.mul(&rb).mul(&rc), ra.mul(&rb.mul(&rc)));
            prop_assert_eq!(ra.square(), a.clone());
            // canonical form is idempotent: rebuilding from its parts changes nothing
            let rebuilt = RootProduct::new(ra.coeff().clone(), ra.radicands().to_vec());
            prop_assert_eq!(rebuilt, ra.clone());
            prop_assert_eq!(ra.mul(&ra.inv().unwrap()), RootProduct::one());
        }
    }
}
