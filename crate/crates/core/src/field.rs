//! Exact scalars over the rationals and the Gaussian rationals.
//!
//! A [`Scalar`] is always a Gaussian rational `re + im·i`; a scalar that
//! belongs to a [`FieldConfig`] with base [`Base::Rationals`] simply has a
//! zero imaginary part. Rationals are kept in lowest terms by
//! `num_rational`, so derived equality is field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Underlying field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Base {
    Rationals,
    GaussianRationals,
}

/// Involution used to form adjoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Involution {
    Identity,
    Conjugation,
}

/// A field together with its involution.
///
/// Conjugation over the rationals is the identity map, so [`FieldConfig::new`]
/// normalizes that combination to `Identity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FieldConfig {
    base: Base,
    involution: Involution,
}

impl FieldConfig {
    pub const RATIONALS: FieldConfig = FieldConfig {
        base: Base::Rationals,
        involution: Involution::Identity,
    };
    pub const GAUSSIAN_IDENTITY: FieldConfig = FieldConfig {
        base: Base::GaussianRationals,
        involution: Involution::Identity,
    };
    pub const GAUSSIAN_CONJUGATION: FieldConfig = FieldConfig {
        base: Base::GaussianRationals,
        involution: Involution::Conjugation,
    };

    pub fn new(base: Base, involution: Involution) -> Self {
        let involution = match base {
            Base::Rationals => Involution::Identity,
            Base::GaussianRationals => involution,
        };
        FieldConfig { base, involution }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn involution(&self) -> Involution {
        self.involution
    }

    /// Whether `x` is an element of this field.
    pub fn contains(&self, x: &Scalar) -> bool {
        self.base == Base::GaussianRationals || x.im.is_zero()
    }

    pub fn check(&self, x: &Scalar) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::FieldViolation(format!(
                "{x} is not a rational number"
            )))
        }
    }

    pub fn involute(&self, x: &Scalar) -> Scalar {
        match self.involution {
            Involution::Identity => x.clone(),
            Involution::Conjugation => x.conj(),
        }
    }
}

impl Default for FieldConfig {
    fn default() -> Self {
        FieldConfig::RATIONALS
    }
}

impl<'de> Deserialize<'de> for FieldConfig {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            base: Base,
            #[serde(default = "identity")]
            involution: Involution,
        }
        fn identity() -> Involution {
            Involution::Identity
        }
        let raw = Raw::deserialize(d)?;
        Ok(FieldConfig::new(raw.base, raw.involution))
    }
}

/// Gaussian rational `re + im·i` with arbitrary-precision parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar::from(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn real(re: BigRational) -> Self {
        Scalar {
            re,
            im: BigRational::zero(),
        }
    }

    /// `re + im·i` from small integers.
    pub fn gaussian(re: i64, im: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(re.into()),
            im: BigRational::from_integer(im.into()),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate, regardless of any configured involution.
    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.im.is_zero() {
            return Ok(Scalar::real(self.re.recip()));
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Ok(Scalar {
            re: &self.re / &norm,
            im: -&self.im / &norm,
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn involute(&self, cfg: FieldConfig) -> Self {
        cfg.involute(self)
    }

    /// Parse with the grammar `rational | rational? 'i' | rational ('+'|'-') rational? 'i'`.
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).scalar()
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::real(BigRational::from_integer(v.into()))
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::real(v)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => Scalar::real(&self.re * &rhs.re),
            (true, false) => Scalar {
                re: &self.re * &rhs.re,
                im: &self.re * &rhs.im,
            },
            (false, true) => Scalar {
                re: &self.re * &rhs.re,
                im: &self.im * &rhs.re,
            },
            (false, false) => Scalar {
                re: &self.re * &rhs.re - &self.im * &rhs.im,
                im: &self.re * &rhs.im + &self.im * &rhs.re,
            },
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Panics on a zero divisor; use [`Scalar::div`] for a checked division.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        Scalar::div(self, rhs).expect("division by zero scalar")
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            // bare unit
        } else if (-&self.im).is_one() {
            f.write_str("-")?;
        } else {
            fmt_rational(&self.im, f)?;
        }
        f.write_str("i")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse(s)
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        Scalar::parse(&text).map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn offset(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.text.len(), |&(o, _)| o)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.offset(),
            message: message.into(),
        }
    }

    /// Accepts ASCII '-' and U+2212.
    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            _ => None,
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse().ok()
    }

    /// Unsigned rational, or `None` if no digits start here.
    fn magnitude(&mut self) -> Result<Option<BigRational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if self.peek() != Some('/') {
            return Ok(Some(BigRational::from_integer(num)));
        }
        self.pos += 1;
        let den = self
            .digits()
            .ok_or_else(|| self.error("expected denominator digits after '/'"))?;
        if den.is_zero() {
            return Err(self.error("zero denominator"));
        }
        Ok(Some(BigRational::new(num, den)))
    }

    fn scalar(&mut self) -> Result<Scalar> {
        if self.chars.is_empty() {
            return Err(self.error("empty scalar"));
        }
        let leading_negative = match self.sign() {
            Some(true) => true,
            Some(false) => return Err(Error::Parse {
                position: 0,
                message: "leading '+' is not allowed".into(),
            }),
            None => false,
        };
        let first = self.magnitude()?;
        let apply = |neg: bool, q: BigRational| if neg { -q } else { q };

        match self.peek() {
            None => {
                let q = first.ok_or_else(|| self.error("expected digits"))?;
                Ok(Scalar::real(apply(leading_negative, q)))
            }
            Some('i') => {
                self.pos += 1;
                self.finish()?;
                let q = first.unwrap_or_else(BigRational::one);
                Ok(Scalar::new(BigRational::zero(), apply(leading_negative, q)))
            }
            Some(_) => {
                let re = first.ok_or_else(|| self.error("expected digits"))?;
                let re = apply(leading_negative, re);
                let negative = self
                    .sign()
                    .ok_or_else(|| self.error("expected '+', '-' or 'i'"))?;
                let im = self.magnitude()?.unwrap_or_else(BigRational::one);
                if self.peek() != Some('i') {
                    return Err(self.error("expected 'i'"));
                }
                self.pos += 1;
                self.finish()?;
                Ok(Scalar::new(re, apply(negative, im)))
            }
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.chars.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}
