//! Truncated formal power series over exact rationals.
//!
//! A [`Series`] of order `N` knows the coefficients of `x^0 ..= x^N`;
//! everything from `x^(N+1)` on is unknown. Binary operations return the
//! minimum of their operand orders, so a result never claims a coefficient
//! that one of its inputs did not determine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use super::factorial::factorial;
use super::rational::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("cannot differentiate a series of order 0")]
    OrderTooLow,
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("series is not revertible: need a0 = 0 and a1 != 0")]
    NotRevertible,
    #[error("series needs at least one coefficient")]
    Empty,
    #[error("invalid series coefficient: {0}")]
    BadCoefficient(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Takes `coeffs[0..=N]` as a series of order `N`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(Self { coeffs })
    }

    /// An exactly known polynomial viewed at order `order`: missing
    /// coefficients are genuine zeros, higher ones are dropped.
    pub fn from_poly(poly: &[Rational], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| poly.get(k).cloned().unwrap_or_else(Rational::zero))
            .collect();
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        Self::from_poly(&[Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, or `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&Rational> {
        self.coeffs.get(k)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Lowers the order. Asking for a higher order is a no-op; coefficients
    /// are never invented.
    pub fn truncate(&self, order: usize) -> Self {
        let n = order.min(self.order());
        Self {
            coeffs: self.coeffs[..=n].to_vec(),
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: cauchy(&self.coeffs, &other.coeffs, n),
        }
    }

    /// Binary exponentiation in the truncated ring.
    pub fn pow(&self, mut exponent: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        while exponent > 0 {
            if exponent & 1 == 1 {
                result = Series::mul(&result, &base);
            }
            exponent >>= 1;
            if exponent > 0 {
                base = Series::mul(&base, &base);
            }
        }
        result
    }

    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::OrderTooLow);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(k.into()))
            .collect();
        Ok(Self { coeffs })
    }

    /// `n`-fold derivative; order drops by `n`.
    pub fn nth_derivative(&self, n: usize) -> Result<Self, SeriesError> {
        let mut s = self.clone();
        for _ in 0..n {
            s = s.derivative()?;
        }
        Ok(s)
    }

    pub fn antiderivative(&self, constant: Rational) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(constant);
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Rational::from_integer((k + 1).into()));
        }
        Self { coeffs }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        let mut b: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &b[n - k];
                }
            }
            b.push(-(acc * &inv0));
        }
        Ok(Self { coeffs: b })
    }

    /// `self(inner(x))`, evaluated by Horner's rule. Order is the smaller of
    /// the two operand orders.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroInnerConstant);
        }
        let n = self.order().min(inner.order());
        Ok(Self {
            coeffs: compose_coeffs(&self.coeffs[..=n], &inner.coeffs, n),
        })
    }

    /// Compositional inverse by Newton iteration, doubling the number of
    /// correct coefficients per step.
    pub fn revert(&self) -> Result<Self, SeriesError> {
        self.check_revertible()?;
        let target = self.order();
        let a1 = self.coeffs[1].clone();
        let mut b = vec![Rational::zero(), a1.recip()];
        let mut correct = 1usize;
        if target <= 1 {
            return Ok(Self::from_poly(&b, target));
        }
        let da = self.derivative()?;
        // `da` is one order short; its missing top coefficient only affects
        // terms that the Newton correction multiplies by x^(correct+1).
        let mut da_coeffs = da.coeffs;
        da_coeffs.push(Rational::zero());
        while correct < target {
            let next = (2 * correct + 1).min(target);
            b.resize(next + 1, Rational::zero());
            let mut residual = compose_coeffs(&self.coeffs[..=next], &b, next);
            residual[1] -= Rational::one();
            let slope = compose_coeffs(&da_coeffs[..=next], &b, next);
            let step = Self { coeffs: slope }.reciprocal()?;
            let correction = cauchy(&residual, &step.coeffs, next);
            for (bk, ck) in b.iter_mut().zip(correction) {
                *bk -= ck;
            }
            correct = next;
        }
        Ok(Self { coeffs: b })
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[x^n] b = (1/n) [y^(n-1)] (y / a(y))^n`.
    pub fn revert_lagrange(&self) -> Result<Self, SeriesError> {
        self.check_revertible()?;
        let target = self.order();
        let mut b = vec![Rational::zero(); target + 1];
        if target == 0 {
            return Ok(Self { coeffs: b });
        }
        // a(y)/y, known to order target - 1
        let shifted = Self {
            coeffs: self.coeffs[1..].to_vec(),
        };
        let h = shifted.reciprocal()?;
        let mut power = Self::one(target - 1);
        for (n, bn) in b.iter_mut().enumerate().skip(1) {
            power = Series::mul(&power, &h);
            *bn = &power.coeffs[n - 1] / Rational::from_integer(n.into());
        }
        Ok(Self { coeffs: b })
    }

    fn check_revertible(&self) -> Result<(), SeriesError> {
        if self.order() == 0 || !self.coeffs[0].is_zero() || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotRevertible);
        }
        Ok(())
    }
}

fn cauchy(a: &[Rational], b: &[Rational], n: usize) -> Vec<Rational> {
    let a = &a[..a.len().min(n + 1)];
    let b = &b[..b.len().min(n + 1)];
    // integer convolution over common denominators, reduced once per output
    let (na, da) = common_denominator(a);
    let (nb, db) = common_denominator(b);
    let mut out = vec![BigInt::zero(); n + 1];
    for (i, ai) in na.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in nb.iter().enumerate().take(n + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    let denom = da * db;
    out.into_iter()
        .map(|c| Rational::new(c, denom.clone()))
        .collect()
}

/// Integer numerators and the least common denominator of `coeffs`.
fn common_denominator(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let lcm = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let numers = coeffs
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    (numers, lcm)
}

fn compose_coeffs(outer: &[Rational], inner: &[Rational], n: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::zero(); n + 1];
    for c in outer.iter().rev() {
        acc = cauchy(&acc, inner, n);
        acc[0] += c;
    }
    acc
}

/// `x(y) = sum_{k>=1} (-1)^(k-1) y^k / ((k-1)! k!)`, the series whose
/// compositional inverse is `y(x)`.
pub fn bessel_x_of_y(order: usize) -> Series {
    let coeffs = (0..=order)
        .map(|k| {
            if k == 0 {
                return Rational::zero();
            }
            let c = Rational::new(1.into(), factorial(k - 1) * factorial(k));
            if k % 2 == 0 {
                -c
            } else {
                c
            }
        })
        .collect();
    Series { coeffs }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for Series {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Series {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                repr.order,
                repr.order + 1,
                repr.coeffs.len()
            )));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|c| parse_rational(c).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Series { coeffs })
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                Series::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
