//! Weil–Petersson volumes `V_{g,n} = <kappa_1^{3g-3+n}>` from correlators.
//!
//! The kappa-to-tau conversion reads
//!
//! ```text
//! V_{g,n} / d! = sum_{|l| = d} <tau_0^n tau_2^{l_2} tau_3^{l_3} ...>_g
//!                 * (-1)^{g-1+n+||l||} / prod_i l_i! ((i-1)!)^{l_i}
//! ```
//!
//! with `d = 3g - 3 + n`, `|l| = sum (i-1) l_i` and `||l|| = sum l_i`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::asympt::fixed::Fixed;
use crate::qseries::factorial::factorial;
use crate::qseries::rational::sign;
use crate::qseries::{format_rational, Rational};
use crate::taucalc::{TauEngine, TauKey};

/// Counts `l_i` of `tau_i` insertions for `i >= 2`. Absent entries are 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex {
    entries: BTreeMap<u32, u32>,
}

impl MultiIndex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds from `(i, l_i)` pairs; zero counts are dropped.
    ///
    /// # Panics
    /// If some `i < 2`.
    pub fn from_counts(counts: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut entries = BTreeMap::new();
        for (i, l) in counts {
            assert!(i >= 2, "multi-index positions start at 2, got {i}");
            if l > 0 {
                *entries.entry(i).or_insert(0) += l;
            }
        }
        Self { entries }
    }

    /// From a list of parts `i - 1`.
    fn from_parts(parts: &[u32]) -> Self {
        Self::from_counts(parts.iter().map(|&p| (p + 1, 1)))
    }

    pub fn get(&self, i: u32) -> u32 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&i, &l)| (i, l))
    }

    /// `|l| = sum (i - 1) l_i`
    pub fn weight(&self) -> u32 {
        self.entries.iter().map(|(&i, &l)| (i - 1) * l).sum()
    }

    /// `||l|| = sum l_i`
    pub fn norm(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.entries.keys().next_back().copied()
    }

    /// Index list `[i, ..., i, 0, ..., 0]` with `zeros` trailing `tau_0`s.
    pub fn tau_indices(&self, zeros: usize) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .entries
            .iter()
            .rev()
            .flat_map(|(&i, &l)| std::iter::repeat_n(i, l as usize))
            .collect();
        out.extend(std::iter::repeat_n(0, zeros));
        out
    }

    /// Same multi-index with `l_i` shifted by `delta`; `None` if it would go
    /// negative or `i < 2`.
    pub fn adjusted(&self, i: u32, delta: i32) -> Option<Self> {
        if i < 2 {
            return None;
        }
        let l = self.get(i) as i64 + delta as i64;
        if l < 0 {
            return None;
        }
        let mut out = self.clone();
        if l == 0 {
            out.entries.remove(&i);
        } else {
            out.entries.insert(i, l as u32);
        }
        Some(out)
    }

    /// `prod_i l_i!`
    pub fn factorial_product(&self) -> Rational {
        self.entries
            .values()
            .map(|&l| Rational::from_integer(factorial(l as usize)))
            .product()
    }
}

/// All multi-indices with `|l| = weight` and every `i <= max_i`, i.e. the
/// partitions of `weight` into parts `i - 1` in `[1, max_i - 1]`.
///
/// Order: each multi-index is read as its descending list of parts, and
/// the lists are sorted lexicographically. For weight 3 that gives
/// `{l_2=3}`, `{l_2=1, l_3=1}`, `{l_4=1}`.
pub fn enumerate_multiindices(weight: u32, max_i: u32) -> Vec<MultiIndex> {
    let max_part = max_i.saturating_sub(1);
    let mut out = Vec::new();
    let mut parts = Vec::new();
    partitions(weight, max_part, &mut parts, &mut out);
    out
}

fn partitions(remaining: u32, max_part: u32, parts: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
    if remaining == 0 {
        out.push(MultiIndex::from_parts(parts));
        return;
    }
    for p in 1..=remaining.min(max_part) {
        parts.push(p);
        partitions(remaining - p, p, parts, out);
        parts.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VolumeRecord {
    pub g: u32,
    pub n: u32,
    /// `3g - 3 + n`, negative for the unstable genus-0 cases.
    pub dim: i64,
    /// `<kappa_1^dim>`
    #[serde(rename = "V", serialize_with = "ser_rational")]
    pub volume: Rational,
    /// `V / (n! dim!)`, the coefficient of `x^n` in the genus-`g`
    /// generating function.
    #[serde(rename = "v", serialize_with = "ser_rational")]
    pub normalized: Rational,
    pub pi_power: i64,
}

fn ser_rational<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(v))
}

impl VolumeRecord {
    pub fn csv_header() -> &'static str {
        "g,n,dim,V,v"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.g,
            self.n,
            self.dim,
            format_rational(&self.volume),
            format_rational(&self.normalized)
        )
    }
}

/// Computes `V_{g,n}`; the conventional cases `(0,0)`, `(0,1)`, `(0,2)`
/// and `(1,0)` are 0.
pub fn volume(engine: &TauEngine, g: u32, n: u32) -> VolumeRecord {
    let dim = 3 * g as i64 - 3 + n as i64;
    let unstable = matches!((g, n), (0, 0) | (0, 1) | (0, 2) | (1, 0));
    if unstable || dim < 0 {
        return VolumeRecord {
            g,
            n,
            dim,
            volume: Rational::zero(),
            normalized: Rational::zero(),
            pi_power: 2 * dim.max(0),
        };
    }
    let d = dim as u32;
    let mut sum = Rational::zero();
    for l in enumerate_multiindices(d, d + 1) {
        let key = TauKey::new(g, l.tau_indices(n as usize));
        let tau = engine.tau(&key);
        if tau.is_zero() {
            continue;
        }
        let mut denom = l.factorial_product();
        for (i, count) in l.entries() {
            let f = Rational::from_integer(factorial((i - 1) as usize));
            for _ in 0..count {
                denom *= &f;
            }
        }
        let s = sign(g as i64 - 1 + n as i64 + l.norm() as i64);
        sum += tau * s / denom;
    }
    let dim_fact = Rational::from_integer(factorial(d as usize));
    let volume = sum * &dim_fact;
    let normalized = &volume / (dim_fact * Rational::from_integer(factorial(n as usize)));
    VolumeRecord {
        g,
        n,
        dim,
        volume,
        normalized,
        pi_power: 2 * dim,
    }
}

/// Exact and decimal forms of `Vol_WP(M_{g,n}) = pi^{2 dim} V / (n! dim!)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WpVolumeDisplay {
    #[serde(serialize_with = "ser_rational")]
    pub rational: Rational,
    pub pi_power: i64,
    pub decimal: String,
}

pub fn wp_volume_display(engine: &TauEngine, g: u32, n: u32, digits: usize) -> WpVolumeDisplay {
    let record = volume(engine, g, n);
    let pi = Fixed::pi();
    let mut value = Fixed::from_rational(&record.normalized);
    for _ in 0..record.pi_power {
        value = value.mul(&pi);
    }
    WpVolumeDisplay {
        rational: record.normalized,
        pi_power: record.pi_power,
        decimal: value.to_decimal(digits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rational::rat;

    fn m(counts: &[(u32, u32)]) -> MultiIndex {
        MultiIndex::from_counts(counts.iter().copied())
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_multiindices(0, 2), vec![MultiIndex::empty()]);
        assert_eq!(
            enumerate_multiindices(3, 5),
            vec![m(&[(2, 3)]), m(&[(2, 1), (3, 1)]), m(&[(4, 1)])]
        );
        assert_eq!(
            enumerate_multiindices(2, 4),
            vec![m(&[(2, 2)]), m(&[(3, 1)])]
        );
        assert_eq!(enumerate_multiindices(3, 3).len(), 2);
    }

    #[test]
    fn weights() {
        let l = m(&[(2, 3), (5, 2)]);
        assert_eq!(l.weight(), 3 + 8);
        assert_eq!(l.norm(), 5);
        assert_eq!(l.tau_indices(2), vec![5, 5, 2, 2, 2, 0, 0]);
        assert_eq!(l.adjusted(5, -2), Some(m(&[(2, 3)])));
        assert_eq!(l.adjusted(3, -1), None);
        assert_eq!(l.factorial_product(), rat(12, 1));
    }

    #[test]
    fn volume_examples() {
        let e = TauEngine::new();
        assert_eq!(volume(&e, 0, 3).volume, rat(1, 1));
        assert_eq!(volume(&e, 1, 0).volume, rat(0, 1));
        assert_eq!(volume(&e, 0, 4).volume, rat(1, 1));
        assert_eq!(volume(&e, 0, 5).volume, rat(5, 1));
        assert_eq!(volume(&e, 1, 1).volume, rat(1, 24));
        assert_eq!(volume(&e, 2, 0).volume, rat(43, 2880));
        for n in 0..3 {
            let r = volume(&e, 0, n);
            assert!(r.volume.is_zero() && r.normalized.is_zero());
        }
    }

    #[test]
    fn normalization_identity() {
        let e = TauEngine::new();
        for (g, n) in [(0, 6), (1, 3), (2, 2)] {
            let r = volume(&e, g, n);
            let d = r.dim as usize;
            let back = &r.normalized * Rational::from_integer(factorial(n as usize) * factorial(d));
            assert_eq!(back, r.volume);
        }
    }

    #[test]
    fn display_examples() {
        let e = TauEngine::new();
        let d = wp_volume_display(&e, 0, 3, 6);
        assert_eq!((d.rational.clone(), d.pi_power), (rat(1, 6), 0));
        assert_eq!(d.decimal, "0.166667");
        let d = wp_volume_display(&e, 1, 1, 8);
        assert_eq!((d.rational.clone(), d.pi_power), (rat(1, 24), 2));
        // pi^2 / 24
        assert_eq!(d.decimal, "0.41123352");
        let d = wp_volume_display(&e, 2, 0, 4);
        assert_eq!((d.rational, d.pi_power), (rat(43, 17280), 6));
    }

    #[test]
    fn json_and_csv() {
        let e = TauEngine::new();
        let r = volume(&e, 1, 1);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"g":1,"n":1,"dim":1,"V":"1/24","v":"1/24","pi_power":2}"#
        );
        assert_eq!(r.csv_row(), "1,1,1,1/24,1/24");
    }
}
