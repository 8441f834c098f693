//! Decimal fixed-point reals with 70 fractional digits.
//!
//! Every operation rounds to the nearest representable value, so a chain of
//! `k` operations is accurate to roughly `k * 1e-70`. Reported values carry
//! far fewer digits than that.

use std::cmp::Ordering;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::qseries::Rational;

const SCALE_DIGITS: u32 = 70;

fn scale() -> &'static BigInt {
    static SCALE: OnceLock<BigInt> = OnceLock::new();
    SCALE.get_or_init(|| BigInt::from(10).pow(SCALE_DIGITS))
}

/// Nearest integer to `a / b`, ties away from zero.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (r.abs() * 2) >= b.abs() {
        if (a.sign() == Sign::Minus) != (b.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fixed(BigInt);

impl Fixed {
    pub fn zero() -> Self {
        Self(BigInt::zero())
    }

    pub fn one() -> Self {
        Self(scale().clone())
    }

    pub fn from_int(v: i64) -> Self {
        Self(BigInt::from(v) * scale())
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self(div_round(&(r.numer() * scale()), r.denom()))
    }

    /// The exact rational this value stands for.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.0.clone(), scale().clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self(&self.0 - &o.0)
    }

    pub fn neg(&self) -> Self {
        Self(-&self.0)
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self(div_round(&(&self.0 * &o.0), scale()))
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self(&self.0 * k)
    }

    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.0.is_zero(), "fixed-point division by zero");
        Self(div_round(&(&self.0 * scale()), &o.0))
    }

    pub fn div_int(&self, k: i64) -> Self {
        Self(div_round(&self.0, &BigInt::from(k)))
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `10^(-digits)`
    pub fn epsilon(digits: u32) -> Self {
        assert!(digits <= SCALE_DIGITS);
        Self(BigInt::from(10).pow(SCALE_DIGITS - digits))
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative value");
        Self((&self.0 * scale()).sqrt())
    }

    pub fn pi() -> Self {
        static PI: OnceLock<Fixed> = OnceLock::new();
        PI.get_or_init(|| {
            // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
            atan_inv(5).mul_int(16).sub(&atan_inv(239).mul_int(4))
        })
        .clone()
    }

    pub fn ln2() -> Self {
        static LN2: OnceLock<Fixed> = OnceLock::new();
        LN2.get_or_init(|| atanh(&Fixed::one().div_int(3)).mul_int(2))
            .clone()
    }

    /// Natural logarithm of a positive rational.
    pub fn ln_rational(r: &Rational) -> Self {
        assert!(r.is_positive(), "logarithm of a non-positive value");
        // r = 2^k m with m in [1, 2)
        let mut k = r.numer().bits() as i64 - r.denom().bits() as i64;
        let two = Rational::from_integer(BigInt::from(2));
        let mut m = if k >= 0 {
            r / Rational::from_integer(BigInt::one() << k as usize)
        } else {
            r * Rational::from_integer(BigInt::one() << (-k) as usize)
        };
        while m >= two {
            m /= &two;
            k += 1;
        }
        while m < Rational::one() {
            m *= &two;
            k -= 1;
        }
        let t = (&m - Rational::one()) / (&m + Rational::one());
        let ln_m = atanh(&Fixed::from_rational(&t)).mul_int(2);
        ln_m.add(&Self::ln2().mul_int(k))
    }

    pub fn exp(&self) -> Self {
        let ln2 = Self::ln2();
        let k = div_round(&self.0, &ln2.0);
        let k_i64: i64 = k.try_into().expect("exponent out of range");
        let r = self.sub(&ln2.mul_int(k_i64));
        let mut term = Self::one();
        let mut sum = Self::one();
        let mut n = 1i64;
        while !term.is_zero() {
            term = term.mul(&r).div_int(n);
            sum = sum.add(&term);
            n += 1;
        }
        if k_i64 >= 0 {
            Self(sum.0 << k_i64 as usize)
        } else {
            Self(div_round(&sum.0, &(BigInt::one() << (-k_i64) as usize)))
        }
    }

    /// Rounded to `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.min(SCALE_DIGITS as usize) as u32;
        let unit = BigInt::from(10).pow(SCALE_DIGITS - digits);
        let q = div_round(&self.0, &unit);
        let neg = q.is_negative();
        let s = q.abs().to_string();
        let d = digits as usize;
        let s = if s.len() <= d {
            format!("{}{}", "0".repeat(d + 1 - s.len()), s)
        } else {
            s
        };
        let (int_part, frac_part) = s.split_at(s.len() - d);
        let sign = if neg { "-" } else { "" };
        if d == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part}")
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_decimal(20).parse().unwrap()
    }
}

/// `atanh(t)` for `|t| < 1/2`.
fn atanh(t: &Fixed) -> Fixed {
    let t2 = t.mul(t);
    let mut power = t.clone();
    let mut sum = t.clone();
    let mut k = 1i64;
    loop {
        power = power.mul(&t2);
        let term = power.div_int(2 * k + 1);
        if term.is_zero() {
            return sum;
        }
        sum = sum.add(&term);
        k += 1;
    }
}

/// `atan(1/x)` for integer `x > 1`.
fn atan_inv(x: i64) -> Fixed {
    let x2 = x * x;
    let mut power = Fixed::one().div_int(x);
    let mut sum = power.clone();
    let mut k = 1i64;
    loop {
        power = power.div_int(x2);
        let term = power.div_int(2 * k + 1);
        if term.is_zero() {
            return sum;
        }
        if k % 2 == 1 {
            sum = sum.sub(&term);
        } else {
            sum = sum.add(&term);
        }
        k += 1;
    }
}

impl fmt::Debug for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(30))
    }
}

impl fmt::Display for Fixed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(10);
        f.write_str(&self.to_decimal(digits))
    }
}

pub(crate) fn cmp_abs(a: &Fixed, b: &Fixed) -> Ordering {
    a.0.abs().cmp(&b.0.abs())
}
