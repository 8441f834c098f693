use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use wpvol::kappavol::{enumerate_multiindices, volume};
use wpvol::qseries::factorial::factorial;
use wpvol::qseries::rational::rat;
use wpvol::taucalc::{load_cache, save_cache, Reduction, TauEngine, TauKey};
use wpvol::Rational;

/// Indices summing to `total` spread over `n` slots by `picks`.
fn spread(total: u32, n: usize, picks: &[usize]) -> Vec<u32> {
    let mut ds = vec![0; n];
    for k in 0..total as usize {
        ds[picks[k % picks.len()] % n] += 1;
    }
    ds
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn genus_zero_multinomial(n in 3usize..10, picks in prop::collection::vec(0usize..10, 1..12)) {
        let ds = spread(n as u32 - 3, n, &picks);
        let expected = ds.iter().fold(Rational::from_integer(factorial(n - 3)), |acc, &d| {
            acc / Rational::from_integer(factorial(d as usize))
        });
        prop_assert_eq!(TauEngine::new().tau_of(0, &ds), expected);
    }

    #[test]
    fn every_reduction_order_agrees(
        g in 0u32..4,
        n in 1usize..7,
        picks in prop::collection::vec(0usize..8, 1..10),
    ) {
        prop_assume!(2 * g + n as u32 > 2);
        let ds = spread(3 * g + n as u32 - 3, n, &picks);
        let engine = TauEngine::new();
        let key = TauKey::new(g, ds);
        let value = engine.tau(&key);
        prop_assert!(value >= Rational::zero());
        let steps = [Reduction::String, Reduction::Dilaton]
            .into_iter()
            .chain(key.indices().iter().filter(|&&d| d >= 2).map(|&d| Reduction::Dvv(d)));
        for step in steps {
            if let Some(r) = engine.reduce(&key, step) {
                prop_assert_eq!(&r, &value, "{:?} on {:?}", step, key);
            }
        }
    }

    #[test]
    fn off_dimension_is_zero(g in 0u32..4, ds in prop::collection::vec(0u32..6, 1..6)) {
        let key = TauKey::new(g, ds.clone());
        prop_assume!(!key.satisfies_dimension());
        prop_assert!(TauEngine::new().tau_of(g, &ds).is_zero());
    }
}

#[test]
fn one_point_closed_form() {
    let engine = TauEngine::new();
    for g in 1..=5u32 {
        let expected = Rational::new(1.into(), BigInt::from(24).pow(g) * factorial(g as usize));
        assert_eq!(engine.tau_of(g, &[3 * g - 2]), expected, "g = {g}");
    }
}

#[test]
fn genus_one_dilaton_tower() {
    let engine = TauEngine::new();
    for n in 1..=8usize {
        let expected = Rational::from_integer(factorial(n - 1)) / Rational::from_integer(24.into());
        assert_eq!(engine.tau_of(1, &vec![1; n]), expected);
    }
}

#[test]
fn genus_zero_volumes() {
    let engine = TauEngine::new();
    let known = [1i64, 1, 5, 61, 1379, 49946, 2648967, 193530835];
    for (k, &v) in known.iter().enumerate() {
        assert_eq!(
            volume(&engine, 0, k as u32 + 3).volume,
            rat(v, 1),
            "n = {}",
            k + 3
        );
    }
    assert_eq!(volume(&engine, 1, 1).volume, rat(1, 24));
    assert_eq!(volume(&engine, 2, 0).volume, rat(43, 2880));
}

#[test]
fn multiindex_counts_are_partition_numbers() {
    let p = [
        1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176,
    ];
    for (w, &count) in p.iter().enumerate() {
        let all = enumerate_multiindices(w as u32, w as u32 + 1);
        assert_eq!(all.len(), count, "weight {w}");
        assert!(all.iter().all(|l| l.weight() == w as u32));
        assert!(all.windows(2).all(|pair| pair[0] != pair[1]));
    }
    // parts of size at most 2, i.e. i <= 3
    assert_eq!(enumerate_multiindices(10, 3).len(), 6);
}

#[test]
fn warm_cache_matches_cold() {
    let cold = TauEngine::new();
    let values: Vec<Rational> = (0..=6).map(|n| volume(&cold, 2, n).volume).collect();

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("memo.txt");
    save_cache(&cold.snapshot(), &path).unwrap();
    let warm = TauEngine::from_store(load_cache(&path).unwrap());
    assert_eq!(warm.memo_len(), cold.memo_len());
    let again: Vec<Rational> = (0..=6).map(|n| volume(&warm, 2, n).volume).collect();
    assert_eq!(values, again);
    assert_eq!(warm.memo_len(), cold.memo_len());
}
