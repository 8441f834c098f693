//! Large-`n` growth of normalized volumes.
//!
//! For fixed `g`, `v_{g,n} = V_{g,n} / (n! (3g-3+n)!)` is expected to grow
//! like `C^n n^{-1 + 5(g-1)/2}` with one constant `C` for every genus. This
//! module fits that law to exact volumes and compares the fitted `C` with
//! `1/x_c`, where `x_c` is the radius of convergence of `y(x)`. The radius
//! is reached where `x'(y) = J_0(2 sqrt(y))` first vanishes, so
//! `y_c = (j_{0,1}/2)^2` with `j_{0,1}` the first zero of `J_0`.
//!
//! All decimals are [`Fixed`] values (70 fractional digits internally) and
//! only exact rationals enter them, so reports are reproducible bit for
//! bit.

pub mod fixed;

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

pub use fixed::Fixed;

use crate::kappavol::volume;
use crate::qseries::Rational;
use crate::taucalc::TauEngine;

/// Digits used when rendering reports.
pub const REPORT_DIGITS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymptError {
    #[error("need at least 6 data points, got {0}")]
    InsufficientPoints(usize),
    #[error("v_{{g,n}} must be positive, got {value} at n = {n}")]
    NonPositive { n: u32, value: String },
}

/// `-1 + 5(g-1)/2`
pub fn predicted_exponent(g: u32) -> Rational {
    Rational::new((5 * g as i64 - 7).into(), 2.into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthFit {
    pub g: u32,
    pub n_range: (u32, u32),
    /// `exp` of the slope in `n` of the three-parameter fit
    /// `log v = n log C + e log n + c`.
    pub c_est: Fixed,
    /// Fitted `e`.
    pub exponent_est: Fixed,
    /// Root-mean-square residual of the three-parameter fit.
    pub residual: Fixed,
    /// `C` from the two-parameter fit with `e` pinned to
    /// [`predicted_exponent`].
    pub c_est_pinned: Fixed,
}

/// Fits the growth law to `v_{g,n}` for `n_min <= n <= n_max`.
pub fn fit_growth(
    engine: &TauEngine,
    g: u32,
    n_min: u32,
    n_max: u32,
) -> Result<GrowthFit, AsymptError> {
    let values: Vec<(u32, Rational)> = (n_min..=n_max)
        .map(|n| (n, volume(engine, g, n).normalized))
        .collect();
    fit_values(g, &values)
}

/// Same fit, on given `(n, v_n)` pairs.
pub fn fit_values(g: u32, values: &[(u32, Rational)]) -> Result<GrowthFit, AsymptError> {
    if values.len() < 6 {
        return Err(AsymptError::InsufficientPoints(values.len()));
    }
    if let Some((n, v)) = values.iter().find(|(n, v)| !v.is_positive() || *n == 0) {
        return Err(AsymptError::NonPositive {
            n: *n,
            value: v.to_string(),
        });
    }
    let ln_n: Vec<Rational> = values
        .iter()
        .map(|(n, _)| Fixed::ln_rational(&Rational::from_integer((*n).into())).to_rational())
        .collect();
    let ln_v: Vec<Rational> = values
        .iter()
        .map(|(_, v)| Fixed::ln_rational(v).to_rational())
        .collect();
    let ns: Vec<Rational> = values
        .iter()
        .map(|(n, _)| Rational::from_integer((*n).into()))
        .collect();
    let ones = vec![Rational::from_integer(1.into()); values.len()];

    let free = least_squares(&[&ns, &ln_n, &ones], &ln_v);
    let residual = rms_residual(&[&ns, &ln_n, &ones], &free, &ln_v);

    let e = predicted_exponent(g);
    let shifted: Vec<Rational> = ln_v.iter().zip(&ln_n).map(|(v, l)| v - &e * l).collect();
    let pinned = least_squares(&[&ns, &ones], &shifted);

    Ok(GrowthFit {
        g,
        n_range: (values[0].0, values[values.len() - 1].0),
        c_est: Fixed::from_rational(&free[0]).exp(),
        exponent_est: Fixed::from_rational(&free[1]),
        residual,
        c_est_pinned: Fixed::from_rational(&pinned[0]).exp(),
    })
}

/// Exact least squares on the normal equations.
fn least_squares(columns: &[&Vec<Rational>], target: &[Rational]) -> Vec<Rational> {
    let k = columns.len();
    let dot =
        |a: &[Rational], b: &[Rational]| -> Rational { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let mut m: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            let mut row: Vec<Rational> = (0..k).map(|j| dot(columns[i], columns[j])).collect();
            row.push(dot(columns[i], target));
            row
        })
        .collect();
    for col in 0..k {
        let pivot = (col..k)
            .find(|&r| !m[r][col].is_zero())
            .expect("design matrix has full column rank");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter().map(|row| row[k].clone()).collect()
}

fn rms_residual(columns: &[&Vec<Rational>], coef: &[Rational], target: &[Rational]) -> Fixed {
    let mut sq = Rational::zero();
    for (i, t) in target.iter().enumerate() {
        let model: Rational = columns.iter().zip(coef).map(|(c, a)| &c[i] * a).sum();
        let r = t - model;
        sq += &r * &r;
    }
    let mean = sq / Rational::from_integer(target.len().into());
    Fixed::from_rational(&mean).sqrt()
}

/// `v_{n+1}/v_n * ((n+1)/n)^{-e}` with `e` the predicted exponent; tends
/// to `C`.
pub fn ratio_diagnostic(g: u32, values: &[(u32, Rational)]) -> Vec<Fixed> {
    let e = Fixed::from_rational(&predicted_exponent(g));
    values
        .windows(2)
        .map(|w| {
            let (n, vn) = (&w[0].0, &w[0].1);
            let (m, vm) = (&w[1].0, &w[1].1);
            let ratio = Fixed::ln_rational(&(vm / vn));
            let correction = Fixed::ln_rational(&Rational::new((*m).into(), (*n).into())).mul(&e);
            ratio.sub(&correction).exp()
        })
        .collect()
}

/// Location of the dominant singularity of `y(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BesselSingularity {
    /// First positive zero of `J_0`.
    pub j01: Fixed,
    /// `(j01 / 2)^2`, the zero of `x'(y)`.
    pub y_c: Fixed,
    /// `x(y_c)`, the radius of convergence of `y(x)`.
    pub x_c: Fixed,
    /// `1 / x_c`
    pub c: Fixed,
    /// `|x'(y_c)|` as evaluated, including its tail bound.
    pub derivative_at_root: Fixed,
}

/// Series value with an error bound covering truncation and rounding.
struct Enclosure {
    value: Fixed,
    bound: Fixed,
}

/// Sums an alternating series whose terms are produced by `next(k, prev)`,
/// stopping once the terms decrease and fall below `1e-66`.
fn alternating_sum(
    first: Fixed,
    first_k: i64,
    y: &Fixed,
    next: impl Fn(i64, &Fixed) -> Fixed,
) -> Enclosure {
    let tiny = Fixed::epsilon(66);
    let mut term = first;
    let mut sum = term.clone();
    let mut k = first_k;
    loop {
        let t = next(k + 1, &term);
        k += 1;
        let decreasing = Fixed::from_int(k) > *y;
        if decreasing && fixed::cmp_abs(&t, &tiny).is_lt() {
            // alternating tail beyond this point is bounded by |t|; add one
            // ulp-scale allowance per summed term for rounding
            let rounding = Fixed::epsilon(70).mul_int(4 * k);
            return Enclosure {
                value: sum,
                bound: t.abs().add(&rounding).add(&tiny),
            };
        }
        sum = sum.add(&t);
        term = t;
    }
}

/// `x'(y) = sum_{k>=0} (-1)^k y^k / (k!)^2 = J_0(2 sqrt(y))`
fn bessel_derivative(y: &Fixed) -> Enclosure {
    alternating_sum(Fixed::one(), 0, y, |k, prev| {
        prev.mul(y).div_int(k * k).neg()
    })
}

/// `x(y) = sum_{k>=1} (-1)^(k-1) y^k / ((k-1)! k!)`
fn bessel_x(y: &Fixed) -> Enclosure {
    alternating_sum(y.clone(), 1, y, |k, prev| {
        prev.mul(y).div_int((k - 1) * k).neg()
    })
}

/// Locates `y_c` by bisection on `[1, 2]` (where `x'` changes sign) using
/// rigorous enclosures, then evaluates `x_c` and `C = 1/x_c`.
pub fn predicted_c() -> BesselSingularity {
    let mut lo = Fixed::from_int(1);
    let mut hi = Fixed::from_int(2);
    let stop = Fixed::epsilon(62);
    while hi.sub(&lo) > stop {
        let mid = lo.add(&hi).div_int(2);
        let f = bessel_derivative(&mid);
        if fixed::cmp_abs(&f.value, &f.bound).is_le() {
            // sign undecidable at this precision; mid is within the root's
            // enclosure already
            lo = mid.clone();
            hi = mid;
            break;
        }
        if f.value.is_negative() {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let y_c = lo.add(&hi).div_int(2);
    let at_root = bessel_derivative(&y_c);
    let x_c = bessel_x(&y_c).value;
    BesselSingularity {
        j01: y_c.sqrt().mul_int(2),
        c: Fixed::one().div(&x_c),
        derivative_at_root: at_root.value.abs().add(&at_root.bound),
        y_c,
        x_c,
    }
}

/// Growth comparison for one genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusComparison {
    pub fit: GrowthFit,
    /// `|C_pinned - C_pred| / C_pred`
    pub rel_dev: Fixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDeviation {
    pub g1: u32,
    pub g2: u32,
    /// `|C_1 - C_2| / C_1`, pinned-exponent estimates.
    pub rel_dev: Fixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub predicted_c: Fixed,
    pub genera: Vec<GenusComparison>,
    pub pairwise: Vec<PairDeviation>,
}

/// Default fitting window for a given `n_max`: the upper half, never below
/// the first stable `n`.
pub fn default_n_min(g: u32, n_max: u32) -> u32 {
    let first = match g {
        0 => 3,
        _ => 1,
    };
    (n_max / 2).max(first)
}

pub fn relative_deviation(value: &Fixed, reference: &Fixed) -> Fixed {
    value.sub(reference).abs().div(reference)
}

/// Fits every genus in `g_list` on `[default_n_min(g, n_max), n_max]` and
/// compares the constants with each other and with [`predicted_c`].
pub fn compare_c(
    engine: &TauEngine,
    g_list: &[u32],
    n_max: u32,
) -> Result<CompareReport, AsymptError> {
    let predicted = predicted_c().c;
    let mut genera = Vec::new();
    for &g in g_list {
        let fit = fit_growth(engine, g, default_n_min(g, n_max), n_max)?;
        let rel_dev = relative_deviation(&fit.c_est_pinned, &predicted);
        genera.push(GenusComparison { fit, rel_dev });
    }
    let mut pairwise = Vec::new();
    for (i, a) in genera.iter().enumerate() {
        for b in &genera[i + 1..] {
            pairwise.push(PairDeviation {
                g1: a.fit.g,
                g2: b.fit.g,
                rel_dev: relative_deviation(&b.fit.c_est_pinned, &a.fit.c_est_pinned),
            });
        }
    }
    Ok(CompareReport {
        predicted_c: predicted,
        genera,
        pairwise,
    })
}

/// Wire form of one genus' fit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub g: u32,
    #[serde(rename = "C_est")]
    pub c_est: String,
    pub exponent_est: String,
    #[serde(rename = "predicted_C")]
    pub predicted_c: String,
    pub rel_dev: String,
    pub n_range: [u32; 2],
}

impl GrowthReport {
    /// `C_est` is the pinned-exponent estimate, the one compared against
    /// the prediction.
    pub fn new(fit: &GrowthFit, predicted: &Fixed) -> Self {
        Self {
            g: fit.g,
            c_est: fit.c_est_pinned.to_decimal(REPORT_DIGITS),
            exponent_est: fit.exponent_est.to_decimal(REPORT_DIGITS),
            predicted_c: predicted.to_decimal(REPORT_DIGITS),
            rel_dev: relative_deviation(&fit.c_est_pinned, predicted).to_decimal(REPORT_DIGITS),
            n_range: [fit.n_range.0, fit.n_range.1],
        }
    }
}
