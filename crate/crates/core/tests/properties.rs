use hzeta::barnes::{barnes_zeta, log_multiple_gamma, WeightVector};
use hzeta::explicit::completed_riemann_zeta;
use hzeta::higher_zeta::{dirichlet_coeffs, higher_zeta, tail_bound, HigherZetaContext};
use hzeta::numerics::{c64, ComplexValue, PrecisionPolicy};
use hzeta::sequences::SequenceSpec;
use hzeta::series::{series_inv, series_mul, PowerSeries};
use proptest::prelude::*;

fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `sum_{n in N^r, |n| <= cutoff per axis} (z + n.w)^{-s}` for real positive data.
fn direct_barnes(s: f64, z: f64, w: &[f64], cutoff: usize) -> f64 {
    fn rec(s: f64, acc: f64, w: &[f64], cutoff: usize) -> f64 {
        match w.split_first() {
            None => acc.powf(-s),
            Some((first, rest)) => (0..cutoff).map(|n| rec(s, acc + n as f64 * first, rest, cutoff)).sum(),
        }
    }
    rec(s, z, w, cutoff)
}

fn series_strategy() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), 6).prop_map(|v| {
        let mut c: Vec<ComplexValue> = v.into_iter().map(|(a, b)| c64(a, b)).collect();
        c[0] = c64(1.0, 0.0) + c[0] * 0.25;
        PowerSeries::new(c, 6)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn series_product_is_associative(a in series_strategy(), b in series_strategy(), c in series_strategy()) {
        let left = series_mul(&series_mul(&a, &b).unwrap(), &c).unwrap();
        let right = series_mul(&a, &series_mul(&b, &c).unwrap()).unwrap();
        for k in 0..6 {
            prop_assert!(close(left[k], right[k], 1e-12));
        }
    }

    #[test]
    fn series_inverse_cancels(a in series_strategy()) {
        let prod = series_mul(&a, &series_inv(&a).unwrap()).unwrap();
        prop_assert!(close(prod[0], c64(1.0, 0.0), 1e-12));
        for k in 1..6 {
            prop_assert!(prod[k].norm() < 1e-9);
        }
    }

    #[test]
    fn barnes_is_permutation_invariant(w1 in 0.5..3.0f64, w2 in 0.5..3.0f64, w3 in 0.5..3.0f64,
                                       zr in 0.2..2.0f64, zi in -1.0..1.0f64, sr in -2.5..4.5f64, si in -2.0..2.0f64) {
        prop_assume!((sr - 1.0).abs() > 0.05 && (sr - 2.0).abs() > 0.05 && (sr - 3.0).abs() > 0.05 || si.abs() > 0.05);
        let pol = PrecisionPolicy::default();
        let z = c64(zr, zi);
        let s = c64(sr, si);
        let a = barnes_zeta(s, z, &WeightVector::from_real(&[w1, w2, w3]).unwrap(), &pol).unwrap();
        let b = barnes_zeta(s, z, &WeightVector::from_real(&[w3, w1, w2]).unwrap(), &pol).unwrap();
        prop_assert!(close(a, b, 1e-8), "{a} vs {b}");
    }

    #[test]
    fn barnes_is_homogeneous(w1 in 0.5..2.0f64, w2 in 0.5..2.0f64, c in 0.3..3.0f64,
                             zr in 0.2..2.0f64, sr in -1.5..3.5f64, si in 0.1..2.0f64) {
        let pol = PrecisionPolicy::default();
        let s = c64(sr, si);
        let z = c64(zr, 0.0);
        let base = barnes_zeta(s, z, &WeightVector::from_real(&[w1, w2]).unwrap(), &pol).unwrap();
        let scaled = barnes_zeta(s, z * c, &WeightVector::from_real(&[c * w1, c * w2]).unwrap(), &pol).unwrap();
        prop_assert!(close(scaled, base * c64(c, 0.0).powc(-s), 1e-8), "{scaled} vs {base}");
    }

    #[test]
    fn dirichlet_coefficients_are_multiplicative(l1 in 0.0..2.0f64, l2 in 0.0..2.0f64, m in 2usize..60, n in 2usize..60) {
        prop_assume!(gcd(m, n) == 1);
        let ctx = HigherZetaContext::with_spec(SequenceSpec::real_list(&[l1, l2]).unwrap());
        let table = dirichlet_coeffs(&ctx, 3600).unwrap();
        prop_assert!(close(table.get(m * n), table.get(m) * table.get(n), 1e-12));
    }

    #[test]
    fn zeta_hat_is_symmetric(sr in -3.0..4.0f64, si in -8.0..8.0f64) {
        let pol = PrecisionPolicy::default();
        let s = c64(sr, si);
        let a = completed_riemann_zeta(s, &pol).unwrap();
        let b = completed_riemann_zeta(1.0 - s, &pol).unwrap();
        prop_assert!((a - b).norm() <= 1e-9 * (1.0 + a.norm()));
    }

    #[test]
    fn higher_zeta_list_is_a_product_of_zetas(l1 in 0.0..1.0f64, l2 in 0.0..1.0f64, sr in 2.5..5.0f64, si in -3.0..3.0f64) {
        let s = c64(sr, si);
        let both = HigherZetaContext::with_spec(SequenceSpec::real_list(&[l1, l2]).unwrap());
        let one = HigherZetaContext::with_spec(SequenceSpec::real_list(&[l1]).unwrap());
        let two = HigherZetaContext::with_spec(SequenceSpec::real_list(&[l2]).unwrap());
        let lhs = higher_zeta(s, &both).unwrap();
        let rhs = higher_zeta(s, &one).unwrap() * higher_zeta(s, &two).unwrap();
        prop_assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn tail_bound_decreases_in_index(a in 0.5..3.0f64, x in 2.0..4.0f64) {
        let spec = SequenceSpec::progression(c64(a, 0.0), 0).unwrap();
        let mut prev = f64::INFINITY;
        for j in 0..6 {
            let b = tail_bound(&spec, j, x).unwrap();
            prop_assert!(b <= prev);
            prev = b;
        }
    }

    #[test]
    fn spec_text_round_trips(a in 0.0..3.0f64, b in 0.1..3.0f64, c in 0.1..3.0f64) {
        for spec in [
            SequenceSpec::real_list(&[a, b]).unwrap(),
            SequenceSpec::lattice(WeightVector::from_real(&[b, c]).unwrap()),
            SequenceSpec::progression(c64(b, 0.0), 1).unwrap(),
        ] {
            let text = spec.to_string();
            prop_assert_eq!(text.parse::<SequenceSpec>().unwrap(), spec);
        }
    }
}

#[test]
fn barnes_matches_direct_sums_up_to_rank_three() {
    let pol = PrecisionPolicy::default();
    let cases: [(&[f64], f64); 3] = [(&[1.3], 9.0), (&[1.0, 1.7], 11.0), (&[1.0, 1.5, 2.0], 13.0)];
    for (w, s) in cases {
        let z = 0.7;
        let direct = direct_barnes(s, z, w, 60);
        let got = barnes_zeta(c64(s, 0.0), c64(z, 0.0), &WeightVector::from_real(w).unwrap(), &pol).unwrap();
        assert!((got.re - direct).abs() < 1e-10 * direct, "{w:?}: {got} vs {direct}");
    }
}

#[test]
fn log_gamma_shift_relation() {
    // Gamma(z, w) / Gamma(z + w_2, w) = Gamma(z, (w_1)) for rank two
    let pol = PrecisionPolicy::default();
    let full = WeightVector::from_real(&[1.0, 2.0]).unwrap();
    let head = WeightVector::from_real(&[1.0]).unwrap();
    for z in [c64(0.6, 0.3), c64(1.4, -0.8)] {
        let lhs = log_multiple_gamma(z, &full, &pol).unwrap() - log_multiple_gamma(z + 2.0, &full, &pol).unwrap();
        let rhs = log_multiple_gamma(z, &head, &pol).unwrap();
        let d = lhs - rhs;
        let wrapped = c64(d.re, (d.im / (2.0 * std::f64::consts::PI)).round() * 2.0 * std::f64::consts::PI - d.im);
        assert!(d.re.abs() < 1e-10 && wrapped.im.abs() < 1e-10, "{z}: {d}");
    }
}
