//! Genus expansion of the volume generating functions
//! `phi_g(x) = sum_n V_{g,n} / (n! (3g-3+n)!) x^n`.
//!
//! Genus 0 is determined by `y = phi_0''`, the compositional inverse of
//! `x(y) = sum_{k>=1} (-1)^(k-1) y^k / ((k-1)! k!)`. From `y` one builds
//!
//! ```text
//! f_1 = 1 - 1/y',   f_2 = y'' / y'^3,   f_i = f_{i-1}' / y'   (i >= 3)
//! ```
//!
//! and for `g >= 2`
//!
//! ```text
//! phi_g = sum_{|l| = 3g-3} <tau_2^{l_2} ... tau_{3g-2}^{l_{3g-2}}>_g
//!           * y'^{2(g-1) + ||l||} * prod_i f_i^{l_i} / l_i!
//! ```
//!
//! Each `f_i` costs one order of truncation, so a context asked for output
//! order `N` with indices up to `i_max` works internally at `N + i_max`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::kappavol::{enumerate_multiindices, volume, MultiIndex};
use crate::qseries::factorial::factorial;
use crate::qseries::{bessel_x_of_y, format_rational, Rational, Series, SeriesError};
use crate::taucalc::{TauEngine, TauKey};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenexpError {
    #[error("genus {0} is not covered by the genus expansion (need g >= 2)")]
    UnsupportedGenus(u32),
    #[error("order {requested} exceeds the supported order {available}")]
    OrderExceeded { requested: usize, available: usize },
    #[error("f_{requested} is outside the context range 1..={i_max}")]
    IndexOutOfRange { requested: usize, i_max: usize },
    #[error("multi-index has weight {weight}, expected {expected}")]
    WeightMismatch { weight: u32, expected: i64 },
    #[error("need n >= 1")]
    NeedsPuncture,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum PowerBase {
    YPrime,
    F(usize),
}

/// `y`, `y'` and `f_1 ..= f_{i_max}` at a common working order.
#[derive(Debug)]
pub struct GenusExpansionContext {
    order: usize,
    working_order: usize,
    i_max: usize,
    y: Series,
    y_prime: Series,
    f: Vec<Series>,
    powers: Mutex<HashMap<(PowerBase, u32), Arc<Series>>>,
}

impl GenusExpansionContext {
    /// Context whose `f_1 ..= f_{i_max}` are all valid to `order`.
    pub fn new(order: usize, i_max: usize) -> Result<Self, GenexpError> {
        let i_max = i_max.max(2);
        let working_order = order + i_max;
        let y = build_y(working_order);
        let y_prime = y.derivative()?;
        let f = f_sequence(&y, i_max)?;
        Ok(Self {
            order,
            working_order,
            i_max,
            y,
            y_prime,
            f,
            powers: Mutex::new(HashMap::new()),
        })
    }

    /// Context sized for `phi_g` at `order` (`i_max = 3g - 2`).
    pub fn for_genus(g: u32, order: usize) -> Result<Self, GenexpError> {
        Self::new(order, (3 * g as usize).saturating_sub(2))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn working_order(&self) -> usize {
        self.working_order
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn y(&self) -> &Series {
        &self.y
    }

    pub fn y_prime(&self) -> &Series {
        &self.y_prime
    }

    pub fn f(&self, i: usize) -> Result<&Series, GenexpError> {
        if i == 0 || i > self.i_max {
            return Err(GenexpError::IndexOutOfRange {
                requested: i,
                i_max: self.i_max,
            });
        }
        Ok(&self.f[i - 1])
    }

    fn base(&self, base: PowerBase) -> &Series {
        match base {
            PowerBase::YPrime => &self.y_prime,
            PowerBase::F(i) => &self.f[i - 1],
        }
    }

    fn power(&self, base: PowerBase, exp: u32) -> Arc<Series> {
        if let Some(p) = self.powers.lock().unwrap().get(&(base, exp)) {
            return p.clone();
        }
        let p = Arc::new(self.base(base).pow(exp));
        self.powers
            .lock()
            .unwrap()
            .entry((base, exp))
            .or_insert(p)
            .clone()
    }

    /// `y'^{y_exp} prod f_i^{l_i} / l_i!`, truncated to `order`.
    fn monomial(&self, y_exp: u32, l: &MultiIndex, order: usize) -> Series {
        let mut acc = self.power(PowerBase::YPrime, y_exp).truncate(order);
        for (i, count) in l.entries() {
            acc = acc.mul(&self.power(PowerBase::F(i as usize), count));
        }
        acc.scale(&l.factorial_product().recip())
    }

    /// `sum_{|l| = weight} <tau_0^n prod tau_i^{l_i}>_g y'^{2(g-1)+n+||l||}
    /// prod f_i^{l_i}/l_i!`, to `order`.
    fn tau_weighted_sum(
        &self,
        engine: &TauEngine,
        g: u32,
        n: u32,
        order: usize,
    ) -> Result<Series, GenexpError> {
        let weight = 3 * g + n - 3;
        let top = weight as usize + 1;
        if top > self.i_max {
            return Err(GenexpError::IndexOutOfRange {
                requested: top,
                i_max: self.i_max,
            });
        }
        let available = self.working_order - top.max(1);
        if order > available {
            return Err(GenexpError::OrderExceeded {
                requested: order,
                available,
            });
        }
        let terms: Vec<Option<Series>> = enumerate_multiindices(weight, top as u32)
            .par_iter()
            .map(|l| {
                let tau = engine.tau(&TauKey::new(g, l.tau_indices(n as usize)));
                if tau.is_zero() {
                    return None;
                }
                let y_exp = 2 * (g - 1) + n + l.norm();
                Some(self.monomial(y_exp, l, order).scale(&tau))
            })
            .collect();
        let mut sum = Series::zero(order);
        for t in terms.into_iter().flatten() {
            sum = sum.add(&t);
        }
        Ok(sum)
    }
}

/// `y(x)`, the compositional inverse of [`bessel_x_of_y`].
pub fn build_y(order: usize) -> Series {
    bessel_x_of_y(order.max(1))
        .revert()
        .expect("x(y) = y + O(y^2) is revertible")
        .truncate(order)
}

/// `phi_0`, the double antiderivative of `y` with vanishing constants.
pub fn build_phi0(order: usize) -> Result<Series, GenexpError> {
    if order < 3 {
        return Err(GenexpError::OrderExceeded {
            requested: 3,
            available: order,
        });
    }
    let zero = Rational::zero();
    Ok(build_y(order - 2)
        .antiderivative(zero.clone())
        .antiderivative(zero))
}

/// `f_1 ..= f_{i_max}` from `y` by the derivative recursion.
pub fn f_sequence(y: &Series, i_max: usize) -> Result<Vec<Series>, GenexpError> {
    let y1 = y.derivative()?;
    let y2 = y1.derivative()?;
    let inv = y1.reciprocal()?;
    let mut f = Vec::with_capacity(i_max);
    f.push(&Series::one(inv.order()) - &inv);
    if i_max >= 2 {
        f.push(y2.mul(&inv.pow(3)));
    }
    for i in 3..=i_max {
        let prev = &f[i - 2];
        let next = prev.derivative()?.mul(&inv);
        f.push(next);
    }
    Ok(f)
}

/// `f_i` from the context.
pub fn build_f(i: usize, ctx: &GenusExpansionContext) -> Result<Series, GenexpError> {
    ctx.f(i).cloned()
}

/// `f_i = sum_{k>=0} (-1)^{i+k} / (i+k-1)! * y^k / k!`, for `i >= 2`.
///
/// For `i = 1` the `k = 0` term would be `-1`, contradicting `f_1(0) = 0`,
/// so only `i >= 2` is accepted.
pub fn build_f_lemma(
    i: usize,
    ctx: &GenusExpansionContext,
    order: usize,
) -> Result<Series, GenexpError> {
    if i < 2 {
        return Err(GenexpError::IndexOutOfRange {
            requested: i,
            i_max: ctx.i_max,
        });
    }
    if order > ctx.working_order {
        return Err(GenexpError::OrderExceeded {
            requested: order,
            available: ctx.working_order,
        });
    }
    let outer: Vec<Rational> = (0..=order)
        .map(|k| {
            let c = Rational::new(1.into(), factorial(i + k - 1) * factorial(k));
            if (i + k).is_multiple_of(2) {
                c
            } else {
                -c
            }
        })
        .collect();
    Ok(Series::from_poly(&outer, order).compose(&ctx.y.truncate(order))?)
}

/// `phi_g` for `g >= 2` to `order`.
pub fn build_phi_g(
    g: u32,
    ctx: &GenusExpansionContext,
    engine: &TauEngine,
    order: usize,
) -> Result<Series, GenexpError> {
    if g < 2 {
        return Err(GenexpError::UnsupportedGenus(g));
    }
    ctx.tau_weighted_sum(engine, g, 0, order)
}

/// Right side of the `n`-th derivative formula
/// `phi_g^{(n)} = sum_{|l| = 3g-3+n} <tau_0^n prod tau_i^{l_i}>_g
/// y'^{2(g-1)+n+||l||} prod f_i^{l_i}/l_i!`.
pub fn derivative_formula_rhs(
    g: u32,
    n: u32,
    ctx: &GenusExpansionContext,
    engine: &TauEngine,
    order: usize,
) -> Result<Series, GenexpError> {
    if g < 2 {
        return Err(GenexpError::UnsupportedGenus(g));
    }
    ctx.tau_weighted_sum(engine, g, n, order)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub power: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification, in its wire form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: String,
    pub g: u32,
    pub n: u32,
    pub pass: bool,
    pub first_mismatch: Option<Mismatch>,
}

impl CheckReport {
    fn from_pairs<'a>(
        check: impl Into<String>,
        g: u32,
        n: u32,
        pairs: impl IntoIterator<Item = (usize, &'a Rational, &'a Rational)>,
    ) -> Self {
        let first_mismatch = pairs
            .into_iter()
            .find(|(_, a, b)| a != b)
            .map(|(power, a, b)| Mismatch {
                power,
                lhs: format_rational(a),
                rhs: format_rational(b),
            });
        Self {
            check: check.into(),
            g,
            n,
            pass: first_mismatch.is_none(),
            first_mismatch,
        }
    }

    /// Coefficient-wise comparison up to the smaller order.
    pub fn compare_series(
        check: impl Into<String>,
        g: u32,
        n: u32,
        lhs: &Series,
        rhs: &Series,
    ) -> Self {
        Self::from_pairs(
            check,
            g,
            n,
            lhs.coeffs()
                .iter()
                .zip(rhs.coeffs())
                .enumerate()
                .map(|(k, (a, b))| (k, a, b)),
        )
    }
}

/// `build_f(i) == build_f_lemma(i)` to the order `f_i` carries.
pub fn check_lemma(i: usize, ctx: &GenusExpansionContext) -> Result<CheckReport, GenexpError> {
    let direct = build_f(i, ctx)?;
    let lemma = build_f_lemma(i, ctx, direct.order())?;
    Ok(CheckReport::compare_series(
        format!("lemma[i={i}]"),
        0,
        0,
        &direct,
        &lemma,
    ))
}

/// `f_i(0) = (-1)^i / (i-1)!` for `2 <= i <= i_max`.
pub fn check_lemma_constants(ctx: &GenusExpansionContext) -> CheckReport {
    let expected: Vec<(usize, Rational, Rational)> = (2..=ctx.i_max)
        .map(|i| {
            let e = Rational::new(1.into(), factorial(i - 1));
            let e = if i % 2 == 0 { e } else { -e };
            (i, ctx.f[i - 1].constant_term().clone(), e)
        })
        .collect();
    CheckReport::from_pairs(
        "lemma_constants",
        0,
        0,
        expected.iter().map(|(i, a, b)| (*i, a, b)),
    )
}

/// `[x^n] phi_g == volume(g, n).v` for every `n <= order`.
pub fn check_theorem(
    g: u32,
    ctx: &GenusExpansionContext,
    engine: &TauEngine,
    order: usize,
) -> Result<Vec<CheckReport>, GenexpError> {
    let phi = build_phi_g(g, ctx, engine, order)?;
    Ok((0..=order)
        .map(|n| {
            let v = volume(engine, g, n as u32).normalized;
            CheckReport::from_pairs("theorem1", g, n as u32, [(n, &phi.coeffs()[n], &v)])
        })
        .collect())
}

/// `phi_g^{(n)}` against [`derivative_formula_rhs`], both at the largest
/// order the context supports for them.
pub fn check_derivative_formula(
    g: u32,
    n: u32,
    ctx: &GenusExpansionContext,
    engine: &TauEngine,
) -> Result<CheckReport, GenexpError> {
    let n_us = n as usize;
    if n_us > ctx.order {
        return Err(GenexpError::OrderExceeded {
            requested: n_us,
            available: ctx.order,
        });
    }
    let lhs = build_phi_g(g, ctx, engine, ctx.order)?.nth_derivative(n_us)?;
    let rhs = derivative_formula_rhs(g, n, ctx, engine, lhs.order())?;
    Ok(CheckReport::compare_series("derivative", g, n, &lhs, &rhs))
}

/// Both sides of the puncture/dilaton identity
///
/// ```text
/// <tau_0^n prod tau_i^{l_i}> = l_2 (2(g-1) + (n-1) + (||l||-1)) <tau_0^{n-1} prod tau_i^{l_i - d_{i,2}}>
///     + sum_{j>=3} l_j <tau_0^{n-1} prod tau_i^{l_i - d_{i,j} + d_{i,j-1}}>
/// ```
pub fn induction_identity_sides(
    engine: &TauEngine,
    g: u32,
    n: u32,
    l: &MultiIndex,
) -> Result<(Rational, Rational), GenexpError> {
    if n == 0 {
        return Err(GenexpError::NeedsPuncture);
    }
    let expected = 3 * g as i64 - 3 + n as i64;
    if l.weight() as i64 != expected {
        return Err(GenexpError::WeightMismatch {
            weight: l.weight(),
            expected,
        });
    }
    let tau =
        |m: &MultiIndex, zeros: u32| engine.tau(&TauKey::new(g, m.tau_indices(zeros as usize)));
    let lhs = tau(l, n);
    let mut rhs = Rational::zero();
    let l2 = l.get(2);
    if l2 > 0 {
        let factor = 2 * (g as i64 - 1) + (n as i64 - 1) + (l.norm() as i64 - 1);
        let reduced = l.adjusted(2, -1).unwrap();
        rhs += Rational::from_integer((l2 as i64 * factor).into()) * tau(&reduced, n - 1);
    }
    for (j, lj) in l.entries().filter(|&(j, _)| j >= 3) {
        let shifted = l.adjusted(j, -1).unwrap().adjusted(j - 1, 1).unwrap();
        rhs += Rational::from_integer(lj.into()) * tau(&shifted, n - 1);
    }
    Ok((lhs, rhs))
}

pub fn check_induction_identity(
    engine: &TauEngine,
    g: u32,
    n: u32,
    l: &MultiIndex,
) -> Result<bool, GenexpError> {
    let (lhs, rhs) = induction_identity_sides(engine, g, n, l)?;
    Ok(lhs == rhs)
}

/// Runs the identity over every multi-index of weight `3g-3+n`; the report
/// `power` field carries the position of the first failing multi-index.
pub fn check_induction_all(engine: &TauEngine, g: u32, n: u32) -> Result<CheckReport, GenexpError> {
    let weight = (3 * g + n)
        .checked_sub(3)
        .ok_or(GenexpError::UnsupportedGenus(g))?;
    let mut sides = Vec::new();
    for l in enumerate_multiindices(weight, weight + 1) {
        sides.push(induction_identity_sides(engine, g, n, &l)?);
    }
    Ok(CheckReport::from_pairs(
        "induction",
        g,
        n,
        sides.iter().enumerate().map(|(k, (a, b))| (k, a, b)),
    ))
}

/// `compose(x(y), y(x)) = x` and `compose(x'(y), y) * y' = 1`.
pub fn check_reversion(ctx: &GenusExpansionContext) -> Result<Vec<CheckReport>, GenexpError> {
    let order = ctx.working_order;
    let x_of_y = bessel_x_of_y(order);
    let identity = x_of_y.compose(&ctx.y)?;
    let inverse = x_of_y.derivative()?.compose(&ctx.y)?.mul(&ctx.y_prime);
    Ok(vec![
        CheckReport::compare_series("reversion", 0, 0, &identity, &Series::x(order)),
        CheckReport::compare_series(
            "inverse_derivative",
            0,
            0,
            &inverse,
            &Series::one(inverse.order()),
        ),
    ])
}

/// Volume conventions for the unstable cases and `V_{0,3} = 1`.
pub fn check_base_values(engine: &TauEngine) -> CheckReport {
    let cases = [(0, 0, 0), (0, 1, 0), (0, 2, 0), (1, 0, 0), (0, 3, 1)];
    let pairs: Vec<(usize, Rational, Rational)> = cases
        .iter()
        .enumerate()
        .map(|(k, &(g, n, v))| {
            (
                k,
                volume(engine, g, n).volume,
                Rational::from_integer(v.into()),
            )
        })
        .collect();
    CheckReport::from_pairs(
        "base_values",
        0,
        3,
        pairs.iter().map(|(k, a, b)| (*k, a, b)),
    )
}

/// The genus-0 generating function against the volumes: `[x^n] phi_0 =
/// volume(0, n).v` for `n <= order`.
pub fn check_genus_zero(engine: &TauEngine, order: usize) -> Result<Vec<CheckReport>, GenexpError> {
    let phi0 = build_phi0(order)?;
    Ok((0..=order)
        .map(|n| {
            let v = volume(engine, 0, n as u32).normalized;
            CheckReport::from_pairs("genus_zero", 0, n as u32, [(n, &phi0.coeffs()[n], &v)])
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rational::rat;

    #[test]
    fn y_examples() {
        let y = build_y(3);
        assert_eq!(y.coeffs(), &[rat(0, 1), rat(1, 1), rat(1, 2), rat(5, 12)]);
    }

    #[test]
    fn phi0_examples() {
        let phi0 = build_phi0(6).unwrap();
        assert_eq!(phi0.coeff(3), Some(&rat(1, 6)));
        assert_eq!(phi0.coeff(4), Some(&rat(1, 24)));
        assert!(phi0.coeffs()[..3].iter().all(Zero::is_zero));
        assert!(build_phi0(2).is_err());
    }

    #[test]
    fn phi0_matches_volumes() {
        let e = TauEngine::new();
        for r in check_genus_zero(&e, 12).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn f_constant_terms() {
        let ctx = GenusExpansionContext::new(2, 10).unwrap();
        assert!(ctx.f(1).unwrap().constant_term().is_zero());
        assert_eq!(ctx.f(2).unwrap().constant_term(), &rat(1, 1));
        assert_eq!(ctx.f(4).unwrap().constant_term(), &rat(1, 6));
        assert!(check_lemma_constants(&ctx).pass);
        assert!(ctx.f(11).is_err());
    }

    #[test]
    fn f_orders() {
        let ctx = GenusExpansionContext::new(5, 4).unwrap();
        assert_eq!(ctx.working_order(), 9);
        for i in 1..=4 {
            assert_eq!(ctx.f(i).unwrap().order(), 9 - i);
        }
    }

    #[test]
    fn lemma_examples() {
        let ctx = GenusExpansionContext::new(3, 4).unwrap();
        assert_eq!(
            build_f_lemma(2, &ctx, 3).unwrap().constant_term(),
            &rat(1, 1)
        );
        assert_eq!(
            build_f_lemma(3, &ctx, 3).unwrap().constant_term(),
            &rat(-1, 2)
        );
        assert_eq!(
            build_f(2, &ctx).unwrap().truncate(3),
            build_f_lemma(2, &ctx, 3).unwrap()
        );
        assert!(build_f_lemma(1, &ctx, 3).is_err());
    }

    #[test]
    fn lemma_fails_for_i_one_as_printed() {
        // The k = 0 term of the i = 1 sum is -1 while f_1(0) = 0; starting
        // the sum at k = 1 instead does reproduce f_1.
        let ctx = GenusExpansionContext::new(6, 2).unwrap();
        let f1 = build_f(1, &ctx).unwrap();
        let order = f1.order();
        let outer: Vec<Rational> = (0..=order)
            .map(|k| {
                if k == 0 {
                    return rat(0, 1);
                }
                let c = Rational::new(1.into(), factorial(k) * factorial(k));
                if (1 + k) % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        let from_k1 = Series::from_poly(&outer, order)
            .compose(&ctx.y().truncate(order))
            .unwrap();
        assert_eq!(f1, from_k1);
    }

    #[test]
    fn phi_g_rejects_low_genus() {
        let ctx = GenusExpansionContext::new(3, 4).unwrap();
        let e = TauEngine::new();
        assert_eq!(
            build_phi_g(1, &ctx, &e, 3),
            Err(GenexpError::UnsupportedGenus(1))
        );
        assert_eq!(
            build_phi_g(0, &ctx, &e, 3),
            Err(GenexpError::UnsupportedGenus(0))
        );
    }

    #[test]
    fn phi_2_constant_and_linear_terms() {
        let ctx = GenusExpansionContext::for_genus(2, 3).unwrap();
        let e = TauEngine::new();
        let phi2 = build_phi_g(2, &ctx, &e, 3).unwrap();
        assert_eq!(phi2.constant_term(), &rat(43, 17280));
        assert_eq!(phi2.coeffs()[1], volume(&e, 2, 1).normalized);
        assert_eq!(
            build_phi_g(2, &ctx, &e, 4),
            Err(GenexpError::OrderExceeded {
                requested: 4,
                available: 3
            })
        );
    }

    #[test]
    fn phi_3_constant_term() {
        let ctx = GenusExpansionContext::for_genus(3, 0).unwrap();
        let e = TauEngine::new();
        let phi3 = build_phi_g(3, &ctx, &e, 0).unwrap();
        assert_eq!(phi3.constant_term(), &volume(&e, 3, 0).normalized);
    }

    #[test]
    fn derivative_formula_small() {
        let ctx = GenusExpansionContext::new(5, 4 + 3).unwrap();
        let e = TauEngine::new();
        for n in [0, 1, 3] {
            let r = check_derivative_formula(2, n, &ctx, &e).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn induction_examples() {
        let e = TauEngine::new();
        let l = MultiIndex::from_counts([(2, 4)]);
        assert!(check_induction_identity(&e, 2, 1, &l).unwrap());
        let l = MultiIndex::from_counts([(5, 1)]);
        assert!(check_induction_identity(&e, 2, 1, &l).unwrap());
        assert_eq!(
            check_induction_identity(&e, 2, 0, &l),
            Err(GenexpError::NeedsPuncture)
        );
        assert!(matches!(
            check_induction_identity(&e, 2, 2, &l),
            Err(GenexpError::WeightMismatch { .. })
        ));
    }

    #[test]
    fn induction_without_tau_two() {
        // l_2 = 0: the right side is just the shifted sum.
        let e = TauEngine::new();
        let l = MultiIndex::from_counts([(3, 2)]);
        let (lhs, rhs) = induction_identity_sides(&e, 2, 1, &l).unwrap();
        let shifted = MultiIndex::from_counts([(2, 1), (3, 1)]);
        let expected = rat(2, 1) * e.tau(&TauKey::new(2, shifted.tau_indices(0)));
        assert_eq!(rhs, expected);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reversion_checks() {
        let ctx = GenusExpansionContext::new(10, 2).unwrap();
        for r in check_reversion(&ctx).unwrap() {
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn report_json() {
        let r = CheckReport::compare_series(
            "demo",
            2,
            1,
            &Series::x(2),
            &Series::from_poly(&[rat(0, 1), rat(1, 1), rat(1, 3)], 2),
        );
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"check":"demo","g":2,"n":1,"pass":false,"first_mismatch":{"power":2,"lhs":"0","rhs":"1/3"}}"#
        );
        assert!(check_base_values(&TauEngine::new()).pass);
    }
}
