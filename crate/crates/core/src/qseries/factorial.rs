//! Memoized factorials and odd double factorials.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

fn extend_and_get(
    table: &'static OnceLock<RwLock<Vec<BigInt>>>,
    n: usize,
    step: impl Fn(&BigInt, usize) -> BigInt,
) -> BigInt {
    let table = table.get_or_init(|| RwLock::new(vec![BigInt::one()]));
    if let Some(v) = table.read().unwrap().get(n) {
        return v.clone();
    }
    let mut guard = table.write().unwrap();
    while guard.len() <= n {
        let k = guard.len();
        let next = step(&guard[k - 1], k);
        guard.push(next);
    }
    guard[n].clone()
}

/// `n!`
pub fn factorial(n: usize) -> BigInt {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    extend_and_get(&TABLE, n, |prev, k| prev * k)
}

/// `(2m - 1)!!` for `m >= 0`, with `(-1)!! = 1`.
pub fn odd_double_factorial(m: usize) -> BigInt {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    extend_and_get(&TABLE, m, |prev, k| prev * (2 * k - 1))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}
