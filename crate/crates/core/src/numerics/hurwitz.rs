use super::{c64, cpow, log_gamma, ComplexValue, PrecisionPolicy};
use crate::error::{Error, Result};
use std::sync::OnceLock;

/// Largest Euler-Maclaurin correction order (in pairs).
const MAX_PAIRS: usize = 30;

/// `B_{2k} / (2k)!` for `k = 0..=MAX_PAIRS`.
///
/// Built from the power series of `x / (e^x - 1)`, whose coefficients are
/// exactly `B_n / n!`. The recurrence is stable: rounding errors get damped
/// by the `(2 pi)^-n` decay of the series.
pub fn bernoulli_even_scaled() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n_max = 2 * MAX_PAIRS + 1;
        let mut inv_fact = vec![1.0f64; n_max + 2];
        for k in 1..inv_fact.len() {
            inv_fact[k] = inv_fact[k - 1] / k as f64;
        }
        let mut c = vec![0.0f64; n_max + 1];
        c[0] = 1.0;
        for n in 1..=n_max {
            let mut acc = 0.0;
            for k in 0..n {
                acc += c[k] * inv_fact[n - k + 1];
            }
            c[n] = -acc;
        }
        (0..=MAX_PAIRS).map(|k| c[2 * k]).collect()
    })
}

/// Hurwitz zeta `sum_{n>=0} (a + n)^{-s}` continued to all `s != 1` by
/// Euler-Maclaurin summation.
pub fn hurwitz_zeta(s: ComplexValue, a: ComplexValue, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    if !(a.re > 0.0) {
        return Err(Error::domain(format!("hurwitz_zeta needs Re(a) > 0, got {a}")));
    }
    if s == c64(1.0, 0.0) {
        return Err(Error::Pole("s = 1".into()));
    }
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::domain("non-finite s"));
    }

    // Large Re(s): plain summation converges fast and avoids overflow of
    // the shifted correction terms.
    if s.re > 40.0 && a.norm() < 20.0 {
        let mut acc = c64(0.0, 0.0);
        for n in 0..64 {
            let b = a + n as f64;
            let term = cpow(b, -s);
            acc += term;
            if n > 0 && term.norm() < 1e-18 * acc.norm() {
                break;
            }
        }
        return Ok(acc);
    }

    // left of the axis the head sum grows like N^{1-Re s}; keep N small there
    let target = if s.re < 0.0 { 6f64.max(0.5 * s.norm()) } else { 10f64.max(s.norm()) } + 2.0;
    let mut shift = 0usize;
    while (a + shift as f64).norm() < target {
        shift += 1;
    }
    let mut head = c64(0.0, 0.0);
    for n in 0..shift {
        head += cpow(a + n as f64, -s);
    }

    let big = a + shift as f64;
    let big_pow = cpow(big, -s);
    let inv_big = big.inv();
    let mut acc = head + big_pow * big / (s - 1.0) + big_pow * 0.5;

    let bern = bernoulli_even_scaled();
    let tol = 0.01 * pol.eps_abs.min(1e-12 * acc.norm().max(1e-300)).max(1e-300);
    // term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * big^{-s-2k+1}
    let mut rising = s; // s(s+1)...(s+2k-2)
    let mut power = big_pow * inv_big; // big^{-s-1}
    let mut small_run = 0;
    for k in 1..=MAX_PAIRS {
        let term = rising * power * bern[k];
        acc += term;
        if term.norm() <= tol || term.norm() <= 1e-17 * acc.norm() {
            small_run += 1;
            if small_run >= 2 {
                break;
            }
        } else {
            small_run = 0;
        }
        let m = 2.0 * k as f64;
        rising *= (s + (m - 1.0)) * (s + m);
        power *= inv_big * inv_big;
    }
    Ok(acc)
}

/// Riemann zeta; `hurwitz_zeta(s, 1)` for `Re(s) >= 0`, the functional
/// equation `zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)` otherwise.
pub fn riemann_zeta(s: ComplexValue, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    if s.re >= 0.0 {
        return hurwitz_zeta(s, c64(1.0, 0.0), pol);
    }
    let one_minus = c64(1.0, 0.0) - s;
    let log_factor = s * std::f64::consts::LN_2 + (s - 1.0) * std::f64::consts::PI.ln() + log_gamma(one_minus)?;
    let sine = (s * std::f64::consts::FRAC_PI_2).sin();
    Ok(log_factor.exp() * sine * hurwitz_zeta(one_minus, c64(1.0, 0.0), pol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn pol() -> PrecisionPolicy {
        PrecisionPolicy::default()
    }

    /// Direct summation with an integral tail correction; reference oracle.
    fn direct_sum(s: ComplexValue, a: ComplexValue) -> ComplexValue {
        let n = 200_000usize;
        let mut acc = c64(0.0, 0.0);
        for k in (0..n).rev() {
            acc += cpow(a + k as f64, -s);
        }
        let big = a + n as f64;
        // Euler-Maclaurin to second order for the remainder
        acc + cpow(big, c64(1.0, 0.0) - s) / (s - 1.0) + cpow(big, -s) * 0.5
            + s * cpow(big, -s - 1.0) / 12.0
    }

    #[test]
    fn bernoulli_scaled_values() {
        let b = bernoulli_even_scaled();
        assert!((b[0] - 1.0).abs() < 1e-16);
        assert!((b[1] - 1.0 / 12.0).abs() < 1e-16); // B2/2! = 1/12
        assert!((b[2] * 720.0 + 1.0).abs() < 1e-14); // B4/4! = -1/720
        // B_60 / 60! = (-1)^31 * 2 * zeta(60) / (2 pi)^60
        let expect = -2.0 / (2.0 * PI).powi(60);
        assert!(((b[30] - expect) / expect).abs() < 1e-12);
    }

    #[test]
    fn zeta_two_and_four() {
        let z2 = riemann_zeta(c64(2.0, 0.0), &pol()).unwrap();
        assert!((z2.re - PI * PI / 6.0).abs() < 1e-13 && z2.im == 0.0);
        let z4 = riemann_zeta(c64(4.0, 0.0), &pol()).unwrap();
        assert!((z4.re - PI.powi(4) / 90.0).abs() < 1e-13);
        let oracle = direct_sum(c64(2.0, 0.0), c64(1.0, 0.0));
        assert!((oracle.re - z2.re).abs() < 1e-12);
    }

    #[test]
    fn special_values_at_nonpositive_integers() {
        let z0 = riemann_zeta(c64(0.0, 0.0), &pol()).unwrap();
        assert!((z0.re + 0.5).abs() < 1e-13);
        let zm1 = riemann_zeta(c64(-1.0, 0.0), &pol()).unwrap();
        assert!((zm1.re + 1.0 / 12.0).abs() < 1e-13);
        for k in 1..=5 {
            let v = riemann_zeta(c64(-2.0 * k as f64, 0.0), &pol()).unwrap();
            assert!(v.norm() <= 1e-10, "zeta(-{}) = {v}", 2 * k);
        }
        // zeta(-3) = 1/120, zeta(-5) = -1/252, and the Hurwitz path agrees
        let z3 = riemann_zeta(c64(-3.0, 0.0), &pol()).unwrap();
        assert!((z3.re - 1.0 / 120.0).abs() < 1e-13);
        let z5 = hurwitz_zeta(c64(-5.0, 0.0), c64(1.0, 0.0), &pol()).unwrap();
        assert!((z5.re + 1.0 / 252.0).abs() < 1e-10);
        let s = c64(-2.5, 1.0);
        let a = riemann_zeta(s, &pol()).unwrap();
        let b = hurwitz_zeta(s, c64(1.0, 0.0), &pol()).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm().max(1.0));
        // zeta(0, a) = 1/2 - a
        for &a in &[0.3, 1.0, 2.7] {
            for &b in &[0.0, 0.8] {
                let z = c64(a, b);
                let v = hurwitz_zeta(c64(0.0, 0.0), z, &pol()).unwrap();
                assert!((v - (c64(0.5, 0.0) - z)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn agrees_with_direct_sum_in_convergence_region() {
        for &(sr, si) in &[(1.5, 0.0), (2.0, 3.0), (3.3, -1.0)] {
            for &(ar, ai) in &[(0.2, 0.0), (1.0, 0.5), (4.9, -2.0)] {
                let s = c64(sr, si);
                let a = c64(ar, ai);
                let v = hurwitz_zeta(s, a, &pol()).unwrap();
                let o = direct_sum(s, a);
                assert!((v - o).norm() < 1e-10, "s={s} a={a}: {v} vs {o}");
            }
        }
    }

    #[test]
    fn shift_identity_holds_left_of_critical_strip() {
        for &(sr, si) in &[(-3.5, 0.0), (-1.2, 2.0), (0.5, 14.0), (2.5, -1.0)] {
            for &(ar, ai) in &[(0.4, 0.0), (1.5, -0.7)] {
                let s = c64(sr, si);
                let a = c64(ar, ai);
                let lhs = hurwitz_zeta(s, a, &pol()).unwrap() - hurwitz_zeta(s, a + 1.0, &pol()).unwrap();
                let rhs = cpow(a, -s);
                assert!((lhs - rhs).norm() < 1e-10, "s={s} a={a}");
            }
        }
    }

    #[test]
    fn pole_and_domain_errors() {
        assert!(matches!(riemann_zeta(c64(1.0, 0.0), &pol()), Err(Error::Pole(_))));
        assert!(matches!(
            hurwitz_zeta(c64(2.0, 0.0), c64(-0.5, 0.0), &pol()),
            Err(Error::Domain(_))
        ));
    }
}
