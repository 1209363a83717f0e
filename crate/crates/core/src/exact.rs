//! Exact arithmetic over the rationals and a single real quadratic field Q(√d).
//!
//! [`QuadNum`] is the scalar used for every coordinate and length in the crate.
//! Values are kept in canonical form: the radicand is square-free, and a
//! rational value always carries `irr == 0` and `radicand == 1`. Structural
//! equality and hashing are therefore exact value equality.
//!
//! The `std::ops` operators and [`Ord`] panic when the operands live in two
//! different quadratic fields. Code that handles untrusted input goes through
//! the `checked_*` methods, which return [`ExactError::FieldMismatch`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("square root of negative value {0}")]
    NegativeSqrt(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine values from Q(sqrt({0})) and Q(sqrt({1}))")]
    FieldMismatch(u64, u64),
    #[error("radicand {0} is too large to reduce")]
    RadicandTooLarge(String),
    #[error("malformed number {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ExactError>;

/// Shorthand for the rational `num/den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rational_from_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `INT` or `INT/INT`, with an optional leading sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || ExactError::Parse(s.to_string());
    let int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            Ok(Rational::new(int(n)?, d))
        }
    }
}

/// Splits `n` into `(k, m)` with `n = k² · m` and `m` square-free.
///
/// Trial division runs up to the cube root; whatever survives has at most two
/// prime factors above that bound, so it is either square-free or a prime
/// square.
fn square_free_split(n: &BigUint) -> Result<(BigUint, u64)> {
    if n.is_zero() {
        return Ok((BigUint::zero(), 0));
    }
    let root = n.sqrt();
    if &(&root * &root) == n {
        return Ok((root, 1));
    }
    let mut rest = n
        .to_u128()
        .ok_or_else(|| ExactError::RadicandTooLarge(n.to_string()))?;
    let mut square_part: u128 = 1;
    let mut free: u128 = 1;
    let mut p: u128 = 2;
    while p * p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            square_part *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if r * r == rest && rest > 1 {
        square_part *= r;
    } else {
        free *= rest;
    }
    let free = u64::try_from(free).map_err(|_| ExactError::RadicandTooLarge(n.to_string()))?;
    Ok((BigUint::from(square_part), free))
}

/// An exact real number `rat + irr·√radicand`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadNum {
    rat: Rational,
    irr: Rational,
    radicand: u64,
}

impl QuadNum {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rational_from_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(ratio(num, den))
    }

    pub fn from_rational(rat: Rational) -> Self {
        QuadNum {
            rat,
            irr: Rational::zero(),
            radicand: 1,
        }
    }

    /// Builds `rat + irr·√radicand`, pulling square factors out of the radicand.
    pub fn new(rat: Rational, irr: Rational, radicand: u64) -> Result<Self> {
        let (k, free) = square_free_split(&BigUint::from(radicand))?;
        let k = Rational::from_integer(BigInt::from_biguint(BigSign::Plus, k));
        match free {
            0 => Ok(Self::from_rational(rat)),
            1 => Ok(Self::from_rational(rat + irr * k)),
            d => Ok(Self::canonical(rat, irr * k, d)),
        }
    }

    /// `√n` for a nonnegative integer `n`.
    pub fn sqrt_int(n: i64) -> Result<Self> {
        normalize_sqrt(&rational_from_int(n))
    }

    fn canonical(rat: Rational, irr: Rational, radicand: u64) -> Self {
        if irr.is_zero() || radicand <= 1 {
            Self::from_rational(rat)
        } else {
            QuadNum { rat, irr, radicand }
        }
    }

    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    /// Square-free radicand; 1 for rational values.
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rat)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    /// Exact sign of `r + s√d`: -1, 0 or +1.
    pub fn sign(&self) -> i8 {
        let sr = signum(&self.rat);
        let ss = signum(&self.irr);
        if ss == 0 || sr == ss {
            return if sr == 0 { ss } else { sr };
        }
        if sr == 0 {
            return ss;
        }
        // Opposite signs: the larger of r² and s²·d wins. They are never equal
        // because d is square-free and greater than one.
        let r2 = &self.rat * &self.rat;
        let s2d = &self.irr * &self.irr * rational_from_int(self.radicand as i64);
        if r2 > s2d {
            sr
        } else {
            ss
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn conjugate(&self) -> Self {
        Self::canonical(self.rat.clone(), -&self.irr, self.radicand)
    }

    /// Field norm `r² − s²·d`.
    pub fn norm(&self) -> Rational {
        &self.rat * &self.rat - &self.irr * &self.irr * rational_from_int(self.radicand as i64)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// The radicand shared by two operands, or a mismatch error.
    pub fn common_radicand(&self, other: &Self) -> Result<u64> {
        if self.is_rational() {
            Ok(other.radicand)
        } else if other.is_rational() || self.radicand == other.radicand {
            Ok(self.radicand)
        } else {
            Err(ExactError::FieldMismatch(self.radicand, other.radicand))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::canonical(
            &self.rat + &other.rat,
            &self.irr + &other.irr,
            d,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::canonical(
            &self.rat - &other.rat,
            &self.irr - &other.irr,
            d,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        if self.is_rational() {
            return Ok(Self::canonical(
                &self.rat * &other.rat,
                &self.rat * &other.irr,
                d,
            ));
        }
        if other.is_rational() {
            return Ok(Self::canonical(
                &self.rat * &other.rat,
                &self.irr * &other.rat,
                d,
            ));
        }
        let dd = rational_from_int(d as i64);
        let rat = &self.rat * &other.rat + &self.irr * &other.irr * dd;
        let irr = &self.rat * &other.irr + &self.irr * &other.rat;
        Ok(Self::canonical(rat, irr, d))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        self.common_radicand(other)?;
        if other.is_rational() {
            return Ok(Self::canonical(
                &self.rat / &other.rat,
                &self.irr / &other.rat,
                self.radicand,
            ));
        }
        let norm = other.norm();
        let num = self.checked_mul(&other.conjugate())?;
        Ok(Self::canonical(
            num.rat / &norm,
            num.irr / norm,
            num.radicand,
        ))
    }

    pub fn checked_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.sign().cmp(&0))
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            r
        } else {
            r + self.irr.to_f64().unwrap_or(f64::NAN) * (self.radicand as f64).sqrt()
        }
    }
}

fn signum(q: &Rational) -> i8 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// The single radicand shared by a collection of values (1 if all are rational).
pub fn common_radicand<'a>(values: impl IntoIterator<Item = &'a QuadNum>) -> Result<u64> {
    let mut d = 1;
    for v in values {
        if v.is_rational() {
            continue;
        }
        if d == 1 {
            d = v.radicand;
        } else if d != v.radicand {
            return Err(ExactError::FieldMismatch(d, v.radicand));
        }
    }
    Ok(d)
}

/// Exact square root of a nonnegative rational, with a square-free radicand.
pub fn normalize_sqrt(q: &Rational) -> Result<QuadNum> {
    if q.is_negative() {
        return Err(ExactError::NegativeSqrt(format_rational(q)));
    }
    // √(n/d) = √(n·d) / d
    let n = q.numer().magnitude();
    let d = q.denom().magnitude();
    let (k, free) = square_free_split(&(n * d))?;
    let coeff = Rational::new(
        BigInt::from_biguint(BigSign::Plus, k),
        BigInt::from_biguint(BigSign::Plus, d.clone()),
    );
    Ok(match free {
        0 => QuadNum::zero(),
        1 => QuadNum::from_rational(coeff),
        d => QuadNum::canonical(Rational::zero(), coeff, d),
    })
}

impl From<i64> for QuadNum {
    fn from(n: i64) -> Self {
        QuadNum::from_int(n)
    }
}

impl From<Rational> for QuadNum {
    fn from(q: Rational) -> Self {
        QuadNum::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadNum> for QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadNum> for &QuadNum {
            type Output = QuadNum;
            fn $method(self, rhs: QuadNum) -> QuadNum {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum::canonical(-&self.rat, -&self.irr, self.radicand)
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        -&self
    }
}

impl PartialOrd for QuadNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadNum {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.checked_cmp(other) {
            Ok(o) => o,
            Err(e) => panic!("{e}"),
        }
    }
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.rat))?;
        if !self.irr.is_zero() {
            let sep = if self.irr.is_negative() { '-' } else { '+' };
            write!(
                f,
                "{sep}{}*sqrt({})",
                format_rational(&self.irr.abs()),
                self.radicand
            )?;
        }
        Ok(())
    }
}

impl FromStr for QuadNum {
    type Err = ExactError;

    /// Grammar: `INT | INT/INT | (INT|INT/INT)(+|-)(INT|INT/INT)*sqrt(INT)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || ExactError::Parse(s.to_string());
        let Some(head) = s.strip_suffix(')') else {
            return Ok(QuadNum::from_rational(parse_rational(s)?));
        };
        let (body, radicand) = head.rsplit_once("*sqrt(").ok_or_else(bad)?;
        let sep = body
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .ok_or_else(bad)?;
        let rat = parse_rational(&body[..sep])?;
        let mut irr = parse_rational(&body[sep + 1..])?;
        if &body[sep..sep + 1] == "-" {
            irr = -irr;
        }
        let radicand = parse_rational(radicand)?;
        if !radicand.is_integer() {
            return Err(bad());
        }
        if radicand.is_negative() {
            return Err(ExactError::NegativeSqrt(format_rational(&radicand)));
        }
        let root = normalize_sqrt(&radicand)?;
        QuadNum::from_rational(rat).checked_add(&(QuadNum::from_rational(irr) * root))
    }
}
