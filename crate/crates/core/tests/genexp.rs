use wpvol::asympt::{compare_c, predicted_c, ratio_diagnostic, relative_deviation, Fixed};
use wpvol::genexp::{
    build_f, build_f_lemma, build_phi0, build_phi_g, check_derivative_formula, check_induction_all,
    check_theorem, GenexpError, GenusExpansionContext,
};
use wpvol::kappavol::volume;
use wpvol::qseries::factorial::factorial;
use wpvol::qseries::rational::rat;
use wpvol::taucalc::TauEngine;
use wpvol::Rational;

#[test]
fn f_closed_form_to_order_twenty() {
    let ctx = GenusExpansionContext::new(20, 10).unwrap();
    for i in 2..=8 {
        let f = build_f(i, &ctx).unwrap().truncate(20);
        assert_eq!(f, build_f_lemma(i, &ctx, 20).unwrap(), "i = {i}");
    }
    for i in 2..=10usize {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let expected = Rational::new(sign.into(), factorial(i - 1));
        assert_eq!(
            build_f(i, &ctx).unwrap().constant_term(),
            &expected,
            "i = {i}"
        );
    }
    assert!(matches!(
        build_f_lemma(1, &ctx, 5),
        Err(GenexpError::IndexOutOfRange { .. })
    ));
}

#[test]
fn phi_coefficients_are_normalized_volumes() {
    let engine = TauEngine::new();
    for (g, order) in [(2u32, 10usize), (3, 5), (4, 2)] {
        let ctx = GenusExpansionContext::for_genus(g, order).unwrap();
        let reports = check_theorem(g, &ctx, &engine, order).unwrap();
        assert_eq!(reports.len(), order + 1);
        assert!(reports.iter().all(|r| r.pass), "{reports:?}");
    }
    let ctx = GenusExpansionContext::for_genus(2, 0).unwrap();
    let phi = build_phi_g(2, &ctx, &engine, 0).unwrap();
    assert_eq!(phi.constant_term(), &rat(43, 2880 * 6));
    assert!(matches!(
        build_phi_g(1, &ctx, &engine, 0),
        Err(GenexpError::UnsupportedGenus(1))
    ));
}

#[test]
fn genus_zero_generating_function() {
    let engine = TauEngine::new();
    let phi = build_phi0(9).unwrap();
    for n in 3..=9u32 {
        assert_eq!(
            phi.coeffs()[n as usize],
            volume(&engine, 0, n).normalized,
            "n = {n}"
        );
    }
    assert!(build_phi0(2).is_err());
}

#[test]
fn derivative_and_induction_identities() {
    let engine = TauEngine::new();
    for g in [2u32, 3] {
        let ctx = GenusExpansionContext::new(5, 3 * g as usize - 2 + 4).unwrap();
        for n in 0..=4 {
            let r = check_derivative_formula(g, n, &ctx, &engine).unwrap();
            assert!(r.pass, "{r:?}");
        }
        for n in 1..=4 {
            let r = check_induction_all(&engine, g, n).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }
}

#[test]
fn bessel_constants() {
    let s = predicted_c();
    assert_eq!(s.j01.to_decimal(20), "2.40482555769577276862");
    assert_eq!(s.c.to_decimal(6), "1.601975");
    assert_eq!(Fixed::one().div(&s.x_c), s.c);
    assert!(s.derivative_at_root < Fixed::epsilon(40));
}

#[test]
fn ratios_approach_the_predicted_constant() {
    let engine = TauEngine::new();
    let values: Vec<(u32, Rational)> = (10..=24)
        .map(|n| (n, volume(&engine, 0, n).normalized))
        .collect();
    let ratios = ratio_diagnostic(0, &values);
    assert_eq!(ratios.len(), values.len() - 1);
    let c = predicted_c().c;
    let first = relative_deviation(&ratios[0], &c);
    let last = relative_deviation(ratios.last().unwrap(), &c);
    assert!(last < first, "{first} then {last}");
    assert!(last < Fixed::from_rational(&rat(1, 50)), "{last}");
}

#[test]
fn constants_agree_across_genera() {
    let engine = TauEngine::new();
    let report = compare_c(&engine, &[0, 1, 2], 18).unwrap();
    assert_eq!(report.genera.len(), 3);
    assert_eq!(report.pairwise.len(), 3);
    let tolerance = Fixed::from_rational(&rat(1, 10));
    for g in &report.genera {
        assert!(g.rel_dev < tolerance, "g = {}: {}", g.fit.g, g.rel_dev);
    }
    for p in &report.pairwise {
        assert!(p.rel_dev < tolerance, "{} vs {}: {}", p.g1, p.g2, p.rel_dev);
    }
}
