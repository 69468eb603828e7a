//! Exact fractions with `i64` numerator and denominator.
//!
//! Products are formed in `i128` and narrowed after reduction. A result that
//! does not fit in `i64` panics with the operands in the message; there is no
//! lossy fallback.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse `{0}` as a rational (expected `p`, `p/q` or a decimal)")]
    Parse(String),
    #[error("rational overflow")]
    Overflow,
}

/// Canonical fraction: `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self, RationalError> {
        Self::from_i128(num as i128, den as i128)
    }

    /// Panicking shorthand for literals, e.g. `Rational::frac(1, 6)`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::new(num, den).expect("valid fraction")
    }

    pub fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    fn from_i128(num: i128, den: i128) -> Result<Self, RationalError> {
        if den == 0 {
            return Err(RationalError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Rational {
            num: i64::try_from(num).map_err(|_| RationalError::Overflow)?,
            den: i64::try_from(den).map_err(|_| RationalError::Overflow)?,
        })
    }

    pub fn numer(self) -> i64 {
        self.num
    }

    pub fn denom(self) -> i64 {
        self.den
    }

    pub fn is_zero(self) -> bool {
        self.num == 0
    }

    pub fn is_positive(self) -> bool {
        self.num > 0
    }

    pub fn is_negative(self) -> bool {
        self.num < 0
    }

    pub fn is_integer(self) -> bool {
        self.den == 1
    }

    pub fn recip(self) -> Option<Self> {
        (self.num != 0).then(|| Self::from_i128(self.den as i128, self.num as i128).unwrap())
    }

    pub fn abs(self) -> Self {
        Rational {
            num: self.num.abs(),
            den: self.den,
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self, RationalError> {
        let (a, b, c, d) = self.wide(rhs);
        let l = b.lcm(&d);
        Self::from_i128(a * (l / b) + c * (l / d), l)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self, RationalError> {
        self.checked_add(-rhs)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self, RationalError> {
        let (a, b, c, d) = self.wide(rhs);
        // Cross-reduce first so intermediate products stay small.
        let g1 = a.gcd(&d).max(1);
        let g2 = c.gcd(&b).max(1);
        Self::from_i128((a / g1) * (c / g2), (b / g2) * (d / g1))
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self, RationalError> {
        let inv = rhs.recip().ok_or(RationalError::ZeroDenominator)?;
        self.checked_mul(inv)
    }

    fn wide(self, rhs: Self) -> (i128, i128, i128, i128) {
        (
            self.num as i128,
            self.den as i128,
            rhs.num as i128,
            rhs.den as i128,
        )
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Decimal rendering rounded to `places` digits, for display only.
    pub fn to_decimal(self, places: usize) -> String {
        format!("{:.*}", places, self.to_f64())
    }
}

fn overflow(op: &str, a: Rational, b: Rational) -> ! {
    panic!("rational overflow in {a} {op} {b}")
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).unwrap_or_else(|_| overflow("+", self, rhs))
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).unwrap_or_else(|_| overflow("-", self, rhs))
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|_| overflow("*", self, rhs))
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Self) -> Self {
        match self.checked_div(rhs) {
            Ok(r) => r,
            Err(RationalError::ZeroDenominator) => panic!("division of {self} by zero"),
            Err(_) => overflow("/", self, rhs),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Self {
        Rational {
            num: self.num.checked_neg().expect("rational overflow in negation"),
            den: self.den,
        }
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, Add::add)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, c, d) = self.wide(*other);
        (a * d).cmp(&(c * b))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p`, `p/q` and finite decimals such as `0.125`.
impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RationalError::Parse(s.to_string());
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            return Rational::new(p, q);
        }
        if let Some((whole, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 18 {
                return Err(bad());
            }
            let negative = whole.starts_with('-');
            let w: i64 = match whole {
                "" | "-" | "+" => 0,
                w => w.parse().map_err(|_| bad())?,
            };
            let scale = 10i64.pow(frac.len() as u32);
            let f: i64 = frac.parse().map_err(|_| bad())?;
            let f = Rational::new(f, scale)?;
            let w = Rational::integer(w.abs());
            let v = w.checked_add(f)?;
            return Ok(if negative { -v } else { v });
        }
        t.parse::<i64>().map(Rational::integer).map_err(|_| bad())
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Rational", 3)?;
        s.serialize_field("num", &self.num)?;
        s.serialize_field("den", &self.den)?;
        s.serialize_field("decimal", &self.to_decimal(6))?;
        s.end()
    }
}
