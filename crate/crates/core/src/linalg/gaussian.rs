use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A complex number with arbitrary-precision rational real and imaginary parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(n.into()),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(num.into(), den.into()),
            im: BigRational::zero(),
        }
    }

    pub fn from_parts(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussianRational {
            re: BigRational::new(re.0.into(), re.1.into()),
            im: BigRational::new(im.0.into(), im.1.into()),
        }
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

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `|z|^2`, a nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Least common multiple of the two denominators.
    pub(crate) fn denom_lcm(&self) -> BigInt {
        num_integer::Integer::lcm(self.re.denom(), self.im.denom())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational {
                re: &self.re * &o.re,
                im: BigRational::zero(),
            };
        }
        GaussianRational {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &GaussianRational) -> GaussianRational {
        self * &o.inv().expect("division by zero")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: GaussianRational) -> GaussianRational {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, o: &GaussianRational) -> GaussianRational {
                (&self).$m(o)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, o: &GaussianRational) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", self.re, sign, self.im.abs())
            }
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Parses `a`, `bi`, `a+bi` or `a-bi` with rational `a`, `b` such as `3/5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("invalid Gaussian rational `{s}`"));
        let rat = |t: &str| -> Result<BigRational> {
            let t = t.trim();
            let t = if t.is_empty() || t == "+" { "1" } else if t == "-" { "-1" } else { t };
            t.parse::<BigRational>().map_err(|_| bad())
        };
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from(rat(s)?));
        };
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with('/'))
            .map(|(i, _)| i)
            .last();
        match split {
            Some(i) => Ok(GaussianRational::new(rat(&body[..i])?, rat(&body[i..])?)),
            None => Ok(GaussianRational::new(BigRational::zero(), rat(body)?)),
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A Gaussian integer, used by fraction-free elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn zero() -> Self {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn div_exact(&self, o: &GaussInt) -> GaussInt {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero());
        GaussInt { re: re / &n, im: im / &n }
    }

    /// `scale * q`, which must be a Gaussian integer.
    pub fn from_scaled(q: &GaussianRational, scale: &BigInt) -> GaussInt {
        let re = q.re.clone() * BigRational::from_integer(scale.clone());
        let im = q.im.clone() * BigRational::from_integer(scale.clone());
        debug_assert!(re.is_integer() && im.is_integer());
        GaussInt {
            re: re.to_integer(),
            im: im.to_integer(),
        }
    }
}
