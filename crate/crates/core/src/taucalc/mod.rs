//! Witten–Kontsevich correlators `<tau_{d_1} ... tau_{d_n}>_g` as exact
//! rationals.
//!
//! Evaluation reduces every admissible key to the two base values
//! `<tau_0^3>_0 = 1` and `<tau_1>_1 = 1/24`:
//!
//! 1. if some index is 0, the string equation removes it,
//! 2. if every index is 1, the dilaton equation removes one,
//! 3. otherwise the DVV recursion is applied to the largest index `k`:
//!
//! ```text
//! (2k+1)!! <tau_k S>_g = sum_j (2(k+d_j)-1)!!/(2d_j-1)!! <tau_{k+d_j-1} S\j>_g
//!     + 1/2 sum_{a+b=k-2} (2a+1)!!(2b+1)!! ( <tau_a tau_b S>_{g-1}
//!         + sum_{g1+g2=g, I+J=S} <tau_a I>_{g1} <tau_b J>_{g2} )
//! ```
//!
//! Marked points are labeled, so a splitting that takes `c` of the `m`
//! copies of some index carries the weight `C(m, c)`.

mod key;
mod store;

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use key::TauKey;
pub use store::{load_cache, save_cache, CacheError, MemoStore};

use crate::kappavol::MultiIndex;
use crate::qseries::factorial::{binomial, odd_double_factorial};
use crate::qseries::Rational;

/// A single reduction step, used to evaluate a key through a chosen
/// equation instead of the default priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reduction {
    /// Remove one `tau_0`.
    String,
    /// Remove one `tau_1`.
    Dilaton,
    /// Apply DVV to one occurrence of `tau_k`, `k >= 2`.
    Dvv(u32),
}

/// One summand of a DVV expansion: `coeff * prod tau(factors)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DvvTerm {
    pub coeff: Rational,
    pub factors: Vec<TauKey>,
}

/// `lhs_factor * <tau_k S>_g = sum terms`, with every term whose factors
/// are not all admissible already dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct DvvExpansion {
    pub lhs_factor: BigInt,
    pub terms: Vec<DvvTerm>,
}

impl DvvExpansion {
    /// Expands `key` around one occurrence of `tau_k`. Returns `None` if
    /// `k < 2` or `key` holds no `tau_k`.
    pub fn new(key: &TauKey, k: u32) -> Option<Self> {
        if k < 2 {
            return None;
        }
        let rest = key.without(k)?;
        let g = key.genus();
        let groups = multiplicities(rest.indices());
        let mut terms = Vec::new();

        for &(d, m) in &groups {
            let mut indices = rest.without(d).unwrap().indices().to_vec();
            indices.push(k + d - 1);
            let factor = TauKey::new(g, indices);
            if factor.is_admissible() {
                let coeff = Rational::new(
                    odd_double_factorial((k + d) as usize) * m,
                    odd_double_factorial(d as usize),
                );
                terms.push(DvvTerm {
                    coeff,
                    factors: vec![factor],
                });
            }
        }

        for a in 0..=k - 2 {
            let b = k - 2 - a;
            let weight = Rational::new(
                odd_double_factorial(a as usize + 1) * odd_double_factorial(b as usize + 1),
                BigInt::from(2),
            );
            if g >= 1 {
                let mut indices = rest.indices().to_vec();
                indices.extend([a, b]);
                let factor = TauKey::new(g - 1, indices);
                if factor.is_admissible() {
                    terms.push(DvvTerm {
                        coeff: weight.clone(),
                        factors: vec![factor],
                    });
                }
            }
            for_each_split(&groups, |left, right, mult| {
                // genus of the left factor is forced by its dimension
                let sum: i64 = left.iter().map(|&d| d as i64).sum::<i64>() + a as i64;
                let twice = sum + 2 - left.len() as i64;
                if twice < 0 || twice % 3 != 0 || twice / 3 > g as i64 {
                    return;
                }
                let g1 = (twice / 3) as u32;
                let mut li = left.to_vec();
                li.push(a);
                let mut ri = right.to_vec();
                ri.push(b);
                let lk = TauKey::new(g1, li);
                let rk = TauKey::new(g - g1, ri);
                if lk.is_admissible() && rk.is_admissible() {
                    terms.push(DvvTerm {
                        coeff: &weight * Rational::from_integer(mult),
                        factors: vec![lk, rk],
                    });
                }
            });
        }

        Some(Self {
            lhs_factor: odd_double_factorial(k as usize + 1),
            terms,
        })
    }
}

/// Distinct values of a descending index list with their multiplicities.
fn multiplicities(indices: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &d in indices {
        match out.last_mut() {
            Some((v, m)) if *v == d => *m += 1,
            _ => out.push((d, 1)),
        }
    }
    out
}

/// Calls `f(I, J, weight)` for every submultiset `I` of the grouped
/// multiset, `J` its complement, and `weight = prod C(m_v, |I|_v)`.
fn for_each_split(groups: &[(u32, usize)], mut f: impl FnMut(&[u32], &[u32], BigInt)) {
    let mut chosen = vec![0usize; groups.len()];
    loop {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut weight = BigInt::one();
        for (&(d, m), &c) in groups.iter().zip(&chosen) {
            left.extend(std::iter::repeat_n(d, c));
            right.extend(std::iter::repeat_n(d, m - c));
            weight *= binomial(m, c);
        }
        f(&left, &right, weight);

        let mut pos = 0;
        loop {
            if pos == groups.len() {
                return;
            }
            if chosen[pos] < groups[pos].1 {
                chosen[pos] += 1;
                break;
            }
            chosen[pos] = 0;
            pos += 1;
        }
    }
}

/// Memoizing correlator evaluator. Safe to share across threads: racing
/// computations of the same key produce the same value and the first
/// insert wins.
#[derive(Debug, Default)]
pub struct TauEngine {
    memo: RwLock<HashMap<TauKey, Rational>>,
}

impl TauEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_store(store: MemoStore) -> Self {
        Self {
            memo: RwLock::new(store.into_entries()),
        }
    }

    pub fn snapshot(&self) -> MemoStore {
        MemoStore::from_entries(self.memo.read().unwrap().clone())
    }

    pub fn memo_len(&self) -> usize {
        self.memo.read().unwrap().len()
    }

    pub fn tau_of(&self, genus: u32, indices: &[u32]) -> Rational {
        self.tau(&TauKey::new(genus, indices.to_vec()))
    }

    pub fn tau(&self, key: &TauKey) -> Rational {
        if !key.is_admissible() {
            return Rational::zero();
        }
        if let Some(v) = base_value(key) {
            return v;
        }
        if let Some(v) = self.memo.read().unwrap().get(key) {
            return v.clone();
        }
        let value = self.compute(key);
        self.memo
            .write()
            .unwrap()
            .entry(key.clone())
            .or_insert(value)
            .clone()
    }

    /// `<tau_2^{l_2} tau_3^{l_3} ...>_g` for a multi-index.
    pub fn tau_batch(&self, genus: u32, multi: &MultiIndex) -> Rational {
        self.tau(&TauKey::new(genus, multi.tau_indices(0)))
    }

    fn compute(&self, key: &TauKey) -> Rational {
        let step = if key.contains(0) {
            Reduction::String
        } else if key.indices().iter().all(|&d| d == 1) {
            Reduction::Dilaton
        } else {
            Reduction::Dvv(key.indices()[0])
        };
        self.reduce(key, step)
            .expect("default reduction applies to every non-base admissible key")
    }

    /// Evaluates `key` by applying `step` once and `tau` to everything it
    /// produces. `None` if the step does not apply, or `key` is a base case
    /// or inadmissible.
    pub fn reduce(&self, key: &TauKey, step: Reduction) -> Option<Rational> {
        if !key.is_admissible() || base_value(key).is_some() {
            return None;
        }
        match step {
            Reduction::String => {
                let rest = key.without(0)?;
                let mut acc = Rational::zero();
                for (d, m) in multiplicities(rest.indices()) {
                    if d == 0 {
                        continue;
                    }
                    let mut indices = rest.without(d).unwrap().indices().to_vec();
                    indices.push(d - 1);
                    acc += self.tau(&TauKey::new(key.genus(), indices))
                        * Rational::from_integer(m.into());
                }
                Some(acc)
            }
            Reduction::Dilaton => {
                let rest = key.without(1)?;
                let factor = 2 * key.genus() as i64 - 2 + rest.n() as i64;
                Some(self.tau(&rest) * Rational::from_integer(factor.into()))
            }
            Reduction::Dvv(k) => {
                let expansion = DvvExpansion::new(key, k)?;
                let mut acc = Rational::zero();
                for term in &expansion.terms {
                    let mut product = term.coeff.clone();
                    for factor in &term.factors {
                        product *= self.tau(factor);
                        if product.is_zero() {
                            break;
                        }
                    }
                    acc += product;
                }
                Some(acc / Rational::from_integer(expansion.lhs_factor))
            }
        }
    }
}

fn base_value(key: &TauKey) -> Option<Rational> {
    match (key.genus(), key.indices()) {
        (0, [0, 0, 0]) => Some(Rational::one()),
        (1, [1]) => Some(Rational::new(1.into(), 24.into())),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rational::rat;

    #[test]
    fn spec_examples() {
        let e = TauEngine::new();
        assert_eq!(e.tau_of(0, &[0, 0, 0]), rat(1, 1));
        assert_eq!(e.tau_of(0, &[0, 0, 1]), rat(0, 1));
        assert_eq!(e.tau_of(0, &[1, 0, 0, 0]), rat(1, 1));
        assert_eq!(e.tau_of(1, &[1]), rat(1, 24));
        assert_eq!(e.tau_of(0, &[2, 0, 0, 0, 0]), rat(1, 1));
    }

    #[test]
    fn genus_two_one_point() {
        // Golden value, hand-checked through DVV (k = 4, no other points):
        // 9!! <t4>_2 = 15/2 <t0 t2>_1 + 9/2 <t1 t1>_1 + 15/2 <t2 t0>_1
        //            + 9/2 <t1>_1 <t1>_1
        let e = TauEngine::new();
        let by_hand =
            rat(15, 2) * rat(1, 24) * rat(2, 1) + rat(9, 2) * rat(1, 24) + rat(9, 2) * rat(1, 576);
        assert_eq!(by_hand / rat(945, 1), rat(1, 1152));
        assert_eq!(e.tau_of(2, &[4]), rat(1, 1152));
    }

    #[test]
    fn known_genus_two_values() {
        let e = TauEngine::new();
        assert_eq!(e.tau_of(2, &[3, 2]), rat(29, 5760));
        assert_eq!(e.tau_of(2, &[2, 2, 2]), rat(7, 240));
        assert_eq!(e.tau_of(1, &[1, 1]), rat(1, 24));
    }

    #[test]
    fn unstable_and_inadmissible() {
        let e = TauEngine::new();
        assert!(e.tau_of(0, &[]).is_zero());
        assert!(e.tau_of(1, &[]).is_zero());
        assert!(e.tau_of(0, &[0, 0]).is_zero());
        assert!(e.tau_of(2, &[3]).is_zero());
        assert_eq!(e.memo_len(), 0);
    }

    #[test]
    fn pinning_equation_for_genus_one() {
        // DVV on <t2 t0>_1 with <t1>_1 = t left unknown.
        let key = TauKey::new(1, vec![2, 0]);
        let exp = DvvExpansion::new(&key, 2).unwrap();
        assert_eq!(exp.lhs_factor, BigInt::from(15));
        let unknown = TauKey::new(1, vec![1]);
        let e = TauEngine::new();
        let mut t_coeff = Rational::zero();
        let mut constant = Rational::zero();
        for term in &exp.terms {
            if term.factors == [unknown.clone()] {
                t_coeff += &term.coeff;
            } else {
                let mut p = term.coeff.clone();
                for f in &term.factors {
                    p *= e.tau(f);
                }
                constant += p;
            }
        }
        assert_eq!(t_coeff, rat(3, 1));
        assert_eq!(constant, rat(1, 2));
        // string: <t2 t0>_1 = t, so 15 t = 3 t + 1/2
        let t = constant / (rat(15, 1) - t_coeff);
        assert_eq!(t, rat(1, 24));
    }

    #[test]
    fn reduce_rejects_inapplicable_steps() {
        let e = TauEngine::new();
        let k = TauKey::new(1, vec![1]);
        assert_eq!(e.reduce(&k, Reduction::Dilaton), None);
        let k = TauKey::new(2, vec![4]);
        assert_eq!(e.reduce(&k, Reduction::String), None);
        assert_eq!(e.reduce(&k, Reduction::Dvv(3)), None);
        assert_eq!(e.reduce(&k, Reduction::Dvv(4)), Some(rat(1, 1152)));
    }

    #[test]
    fn tau_batch_expands_multiindex() {
        let e = TauEngine::new();
        let l = MultiIndex::from_counts([(2, 1), (3, 1)]);
        assert_eq!(e.tau_batch(2, &l), e.tau_of(2, &[3, 2]));
        let l = MultiIndex::from_counts([(2, 3)]);
        assert_eq!(e.tau_batch(2, &l), e.tau_of(2, &[2, 2, 2]));
        let l = MultiIndex::from_counts([(4, 1)]);
        assert_eq!(e.tau_batch(2, &l), e.tau_of(2, &[4]));
    }

    #[test]
    fn split_weights() {
        let mut seen = Vec::new();
        for_each_split(&[(3, 2), (1, 1)], |l, r, w| {
            seen.push((l.to_vec(), r.to_vec(), w))
        });
        assert_eq!(seen.len(), 6);
        let total: BigInt = seen.iter().map(|s| s.2.clone()).sum();
        assert_eq!(total, BigInt::from(8));
    }

    #[test]
    fn snapshot_and_restore() {
        let e = TauEngine::new();
        let v = e.tau_of(2, &[2, 2, 2]);
        let store = e.snapshot();
        assert!(!store.is_empty());
        let warm = TauEngine::from_store(store);
        assert_eq!(warm.tau_of(2, &[2, 2, 2]), v);
    }
}
