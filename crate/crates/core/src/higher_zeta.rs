//! Higher Riemann zeta functions `Z(s, Lambda) = prod_k zeta(s + lambda_k)`,
//! their Dirichlet coefficients, the lattice case `Z(s, w)`, the completed
//! `Z_hat(s, w)` and `Lambda_hat(s, w) = Z_hat(s, w) Z_hat(1 + |w| - s, w)^{(-1)^{r+1}}`.
//!
//! `Lambda_hat` is the function written `Lambda(s, w)` in the literature; the
//! hat keeps it apart from the sequence `Lambda`.

use crate::barnes::{log_multiple_gamma_shifted, WeightVector};
use crate::error::{Error, Result};
use crate::explicit::completed_riemann_zeta;
use crate::numerics::{c64, riemann_zeta, ComplexValue, PrecisionPolicy};
use crate::sequences::{enumerate_up_to, SequenceSpec};
use crate::series::{bernoulli_for_weights, PowerSeries};
use std::f64::consts::{LN_2, PI};

/// Tail factors `zeta(s + lambda_k)` are folded into the logarithm once
/// `Re(s + lambda_k) > 1 + SPLIT_MARGIN`.
pub const SPLIT_MARGIN: f64 = 0.25;

/// Largest `n_max` accepted by [`dirichlet_coeffs`].
pub const MAX_COEFFS: usize = 50_000_000;

const MAX_ENUMERATION_BOUND: f64 = 1.0e4;

#[derive(Debug, Clone)]
pub struct HigherZetaContext {
    pub spec: SequenceSpec,
    pub prime_bound: u64,
    pub pol: PrecisionPolicy,
}

impl HigherZetaContext {
    pub fn new(spec: SequenceSpec, prime_bound: u64, pol: PrecisionPolicy) -> Result<Self> {
        if prime_bound < 2 {
            return Err(Error::domain(format!("prime bound must be >= 2, got {prime_bound}")));
        }
        pol.validate()?;
        Ok(HigherZetaContext { spec, prime_bound, pol })
    }

    pub fn with_spec(spec: SequenceSpec) -> Self {
        HigherZetaContext {
            spec,
            prime_bound: 1_000_000,
            pol: PrecisionPolicy::default(),
        }
    }
}

/// Dirichlet coefficients `g(1), ..., g(n_max)` of `Z(s, Lambda)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    pub n_max: usize,
    /// `g[n]` for `n = 1..=n_max`; `g[0]` is an unused zero.
    pub g: Vec<ComplexValue>,
}

impl CoeffTable {
    pub fn get(&self, n: usize) -> ComplexValue {
        self.g[n]
    }

    /// `sum_{n <= N} g(n) n^{-s}` for `N <= n_max`.
    pub fn dirichlet_sum(&self, s: ComplexValue, n: usize) -> ComplexValue {
        (1..=n.min(self.n_max))
            .rev()
            .map(|k| self.g[k] * (-s * (k as f64).ln()).exp())
            .sum()
    }

    /// Cumulative sums `sum_{k <= n} g(k)`, index 0 unused.
    pub fn partial_sums(&self) -> Vec<ComplexValue> {
        let mut acc = c64(0.0, 0.0);
        self.g
            .iter()
            .map(|g| {
                acc += *g;
                acc
            })
            .collect()
    }
}

/// Certified bound `|log zeta(sigma + it)| <= LOG_ZETA_SCALE * 2^{-sigma}`
/// for `sigma >= 1 + SPLIT_MARGIN`, from `log zeta(sigma) <= 2^{sigma_0 - sigma} log zeta(sigma_0)`.
fn log_zeta_scale() -> f64 {
    let s0 = 1.0 + SPLIT_MARGIN;
    let z = riemann_zeta(c64(s0, 0.0), &PrecisionPolicy::default()).expect("zeta(1.25)");
    2f64.powf(s0) * z.re.ln()
}

/// `k`-th element of the sorted sequence, when it exists.
fn nth_element(spec: &SequenceSpec, j: usize) -> Result<Option<ComplexValue>> {
    match spec {
        SequenceSpec::ExplicitList { values } => Ok(values.get(j).copied()),
        SequenceSpec::ArithmeticProgression { l, offset } => Ok(Some(*l * (j as f64 + f64::from(*offset)))),
        SequenceSpec::SemiLattice { .. } => {
            let pol = PrecisionPolicy::default();
            let mut r = 1.0;
            loop {
                let pts = enumerate_up_to(spec, r, &pol)?;
                if pts.len() > j {
                    return Ok(Some(pts[j]));
                }
                r *= 2.0;
            }
        }
    }
}

/// `x^{-Re(lambda_j)} * sum_{k >= j} 2^{-(Re(lambda_k) - Re(lambda_j))}`, which bounds
/// `|sum_{k >= j} x^{-lambda_k}|` for every `x >= 2`.
pub fn tail_bound(spec: &SequenceSpec, j: usize, x: f64) -> Result<f64> {
    if !(x >= 2.0) {
        return Err(Error::domain(format!("tail bound needs x >= 2, got {x}")));
    }
    let Some(lj) = nth_element(spec, j)? else {
        return Ok(0.0);
    };
    let a = lj.re;
    Ok(x.powf(-a) * 2f64.powf(a) * spec.tail_mass(a)?)
}

/// Elements `lambda_k` (sorted, after skipping the first `skip`) that can
/// contribute more than `eps / 10` to `log Z(s)`, plus the certified bound
/// on everything left out.
fn certified_elements(s: ComplexValue, spec: &SequenceSpec, skip: usize, pol: &PrecisionPolicy) -> Result<(Vec<ComplexValue>, f64)> {
    let c = log_zeta_scale();
    let target = 0.1 * pol.eps_abs;
    let mut r = (1.0 + SPLIT_MARGIN - s.re).max(0.0);
    let remainder = |r: f64| -> Result<f64> { Ok(c * 2f64.powf(-s.re) * spec.tail_mass(r)?) };
    if !spec.is_finite() {
        while remainder(r)? > target {
            r += 1.0;
            if r > MAX_ENUMERATION_BOUND {
                return Err(Error::Divergence(format!("tail of {spec} does not decay")));
            }
        }
    } else {
        r = f64::INFINITY;
    }
    let mut elems = match spec {
        SequenceSpec::ExplicitList { values } => values.clone(),
        _ => {
            // strictly below r, so the certificate at r covers the rest
            let mut v = enumerate_up_to(spec, r, pol)?;
            v.retain(|l| l.re < r);
            v
        }
    };
    if skip > 0 {
        while elems.len() < skip && !spec.is_finite() {
            r = 2.0 * r + 1.0;
            elems = enumerate_up_to(spec, r, pol)?;
        }
        elems.drain(..skip.min(elems.len()));
    }
    let rest = if spec.is_finite() { 0.0 } else { remainder(r)? };
    Ok((elems, rest))
}

fn check_poles(s: ComplexValue, elems: &[ComplexValue]) -> Result<()> {
    for l in elems {
        if s + *l == c64(1.0, 0.0) {
            return Err(Error::Pole(format!("s = 1 - lambda with lambda = {l}")));
        }
    }
    Ok(())
}

/// Smallest split index `j` with `Re(s + lambda_j) > 1 + SPLIT_MARGIN`.
fn minimal_split(s: ComplexValue, elems: &[ComplexValue]) -> usize {
    elems
        .iter()
        .position(|l| s.re + l.re > 1.0 + SPLIT_MARGIN)
        .unwrap_or(elems.len())
}

/// `prod_{k<j} zeta(s + lambda_k) * exp(sum_{k>=j} log zeta(s + lambda_k))`.
fn split_product(s: ComplexValue, elems: &[ComplexValue], j: usize, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    let mut head = c64(1.0, 0.0);
    for l in &elems[..j] {
        head *= riemann_zeta(s + *l, pol)?;
    }
    let small = 0.1 * pol.eps_abs;
    let scale = log_zeta_scale();
    let tail = &elems[j..];
    let mut log_tail = c64(0.0, 0.0);
    let mut quiet = 0;
    for (i, l) in tail.iter().enumerate() {
        let inc = riemann_zeta(s + *l, pol)?.ln();
        log_tail += inc;
        quiet = if inc.norm() < small { quiet + 1 } else { 0 };
        // later elements have larger real parts, so each is below this bound
        let rest = (tail.len() - i - 1) as f64 * scale * 2f64.powf(-(s.re + l.re));
        if quiet >= 3 && rest < small {
            break;
        }
    }
    Ok(head * log_tail.exp())
}

fn product_from_index(s: ComplexValue, spec: &SequenceSpec, skip: usize, split: Option<usize>, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    let (elems, _) = certified_elements(s, spec, skip, pol)?;
    check_poles(s, &elems)?;
    let j0 = minimal_split(s, &elems);
    let j = match split {
        None => j0,
        Some(j) if j >= j0 && j <= elems.len() => j,
        Some(j) => {
            return Err(Error::domain(format!(
                "split index {j} must lie in [{j0}, {}]",
                elems.len()
            )))
        }
    };
    split_product(s, &elems, j, pol)
}

/// `Z(s, Lambda)`, continued by splitting off the factors with `Re(s + lambda_k) <= 1.25`.
pub fn higher_zeta(s: ComplexValue, ctx: &HigherZetaContext) -> Result<ComplexValue> {
    product_from_index(s, &ctx.spec, 0, None, &ctx.pol)
}

/// [`higher_zeta`] with an explicit split index `j` (at least the minimal one).
pub fn higher_zeta_split(s: ComplexValue, ctx: &HigherZetaContext, j: usize) -> Result<ComplexValue> {
    product_from_index(s, &ctx.spec, 0, Some(j), &ctx.pol)
}

/// Smallest admissible split index at `s`.
pub fn minimal_split_index(s: ComplexValue, ctx: &HigherZetaContext) -> Result<usize> {
    let (elems, _) = certified_elements(s, &ctx.spec, 0, &ctx.pol)?;
    Ok(minimal_split(s, &elems))
}

/// `R_cut = (ln n_max + |ln eps|) / ln 2`.
pub fn local_factor_cutoff(n_max: usize, eps: f64) -> f64 {
    ((n_max.max(1) as f64).ln() + eps.ln().abs()) / LN_2
}

fn local_factor_from(p: u64, lambdas: &[ComplexValue], m: usize) -> Vec<ComplexValue> {
    let mut c = vec![c64(0.0, 0.0); m + 1];
    c[0] = c64(1.0, 0.0);
    let lp = (p as f64).ln();
    for l in lambdas {
        let a = (-*l * lp).exp();
        for k in 1..=m {
            let prev = c[k - 1];
            c[k] += a * prev;
        }
    }
    c
}

/// `prod_{Re(lambda) <= R_cut} (1 - p^{-lambda} X)^{-1}` up to and including `X^m`.
pub fn dirichlet_local_factor(p: u64, spec: &SequenceSpec, m: usize, r_cut: f64) -> Result<PowerSeries> {
    if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    if m < 1 {
        return Err(Error::domain("local factor order must be >= 1"));
    }
    let lambdas = enumerate_up_to(spec, r_cut.max(0.0), &PrecisionPolicy::default())?;
    Ok(PowerSeries::new(local_factor_from(p, &lambdas, m), m + 1))
}

/// `g(n)` for `n <= n_max`, assembled multiplicatively from local factors.
pub fn dirichlet_coeffs(ctx: &HigherZetaContext, n_max: usize) -> Result<CoeffTable> {
    if n_max < 1 {
        return Err(Error::domain("n_max must be >= 1"));
    }
    if n_max > MAX_COEFFS {
        return Err(Error::Capacity(format!("n_max = {n_max} exceeds {MAX_COEFFS}")));
    }
    let r_cut = local_factor_cutoff(n_max, ctx.pol.eps_abs);
    let lambdas = enumerate_up_to(&ctx.spec, r_cut, &ctx.pol)?;

    // smallest prime factor sieve
    let mut spf = vec![0u32; n_max + 1];
    for i in 2..=n_max {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n_max {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    let mut g = vec![c64(0.0, 0.0); n_max + 1];
    g[1] = c64(1.0, 0.0);
    // local factors of primes with p^2 <= n_max, indexed by p
    let mut local: Vec<Vec<ComplexValue>> = vec![Vec::new(); (n_max as f64).sqrt() as usize + 2];
    for n in 2..=n_max {
        let p = spf[n] as usize;
        let mut q = n / p;
        let mut m = 1;
        while q.is_multiple_of(p) {
            q /= p;
            m += 1;
        }
        let gp = if p * p <= n_max {
            if local[p].is_empty() {
                let mut top = 1;
                let mut pk = p;
                while pk <= n_max / p {
                    pk *= p;
                    top += 1;
                }
                local[p] = local_factor_from(p as u64, &lambdas, top);
            }
            local[p][m]
        } else if q == 1 && m == 1 {
            local_factor_from(p as u64, &lambdas, 1)[1]
        } else {
            g[p]
        };
        g[n] = gp * g[q];
    }
    Ok(CoeffTable { n_max, g })
}

/// `(c, K, lambda_0)` with `sum_{n <= x} g(n) ~ c x^{1 - lambda_0} log^{K-1} x`.
pub fn tauberian_constant(ctx: &HigherZetaContext) -> Result<(ComplexValue, usize, f64)> {
    if !ctx.spec.is_real() {
        return Err(Error::domain("Tauberian asymptotics need a real sequence"));
    }
    let lambda0 = ctx.spec.first().re;
    let mut k = 1;
    while let Some(l) = nth_element(&ctx.spec, k)? {
        if l.re != lambda0 {
            break;
        }
        k += 1;
    }
    let s = c64(1.0 - lambda0, 0.0);
    let tail = product_from_index(s, &ctx.spec, k, None, &ctx.pol)?;
    let fact: f64 = (1..k).map(|i| i as f64).product();
    Ok((tail / fact, k, lambda0))
}

/// `(sum_{n <= x} Re g(n), c x^{1 - lambda_0} log^{K-1} x)`.
pub fn tauberian_check(ctx: &HigherZetaContext, x: f64) -> Result<(f64, f64)> {
    if !(x >= 100.0) {
        return Err(Error::domain(format!("Tauberian check needs x >= 100, got {x}")));
    }
    let (c, k, lambda0) = tauberian_constant(ctx)?;
    let n = x.floor() as usize;
    let table = dirichlet_coeffs(ctx, n)?;
    let lhs: f64 = table.g[1..].iter().map(|g| g.re).sum();
    let rhs = c.re * x.powf(1.0 - lambda0) * x.ln().powi(k as i32 - 1);
    Ok((lhs, rhs))
}

/// `Z(s, w)` for any rank `r >= 0` (`Z(s, ()) = zeta(s)`).
pub fn lattice_higher_zeta_weights(s: ComplexValue, omega: &[ComplexValue], pol: &PrecisionPolicy) -> Result<ComplexValue> {
    if omega.is_empty() {
        return riemann_zeta(s, pol);
    }
    let spec = SequenceSpec::lattice(WeightVector::new(omega.to_vec())?);
    product_from_index(s, &spec, 0, None, pol)
}

/// `Z(s, w) = Z(s, {n . w})`.
pub fn lattice_higher_zeta(s: ComplexValue, omega: &WeightVector, ctx: &HigherZetaContext) -> Result<ComplexValue> {
    lattice_higher_zeta_weights(s, omega.as_slice(), &ctx.pol)
}

/// `log Z_hat(s, w)` up to `2 pi i`; rank 0 gives the completed Riemann zeta.
fn log_z_hat_weights(s: ComplexValue, omega: &[ComplexValue], pol: &PrecisionPolicy) -> Result<ComplexValue> {
    if omega.is_empty() {
        return Ok(completed_riemann_zeta(s, pol)?.ln());
    }
    let r = omega.len();
    let mut with_two = vec![c64(2.0, 0.0)];
    with_two.extend_from_slice(omega);
    let b_s = bernoulli_for_weights(s, omega, r).scaled(r);
    let b_s1 = bernoulli_for_weights(s - 1.0, omega, r).scaled(r);
    let b_2 = bernoulli_for_weights(s, &with_two, r + 1).scaled(r + 1);
    let exponent = (-b_s - b_s1 + b_2) * (2.0 * PI).ln();
    let lg = log_multiple_gamma_shifted(s, omega, pol)?;
    let lg1 = log_multiple_gamma_shifted(s - 1.0, omega, pol)?;
    let lg2 = log_multiple_gamma_shifted(s, &with_two, pol)?;
    let z = lattice_higher_zeta_weights(s, omega, pol)?;
    if z == c64(0.0, 0.0) {
        return Err(Error::domain(format!("Z(s, w) vanishes at s = {s}")));
    }
    Ok(exponent - lg - lg1 + lg2 + z.ln())
}

/// `Z_hat(s, w)` for any rank `r >= 0`.
pub fn completed_z_hat_weights(s: ComplexValue, omega: &[ComplexValue], pol: &PrecisionPolicy) -> Result<ComplexValue> {
    if omega.is_empty() {
        return completed_riemann_zeta(s, pol);
    }
    Ok(log_z_hat_weights(s, omega, pol)?.exp())
}

/// Completed lattice zeta
/// `Z_hat(s, w) = exp[(-B_r(s,w)/r! - B_r(s-1,w)/r! + B_{r+1}(s,(2,w))/(r+1)!) log 2 pi]
///  * Gamma(s,w)^{-1} Gamma(s-1,w)^{-1} Gamma(s,(2,w)) Z(s,w)`.
///
/// The multiple gamma factors are continued to the left with the ladder
/// relation, so any `s` off the poles and zeros of the factors is accepted.
pub fn completed_z_hat(s: ComplexValue, omega: &WeightVector, ctx: &HigherZetaContext) -> Result<ComplexValue> {
    completed_z_hat_weights(s, omega.as_slice(), &ctx.pol)
}

/// `Lambda_hat(s, w)` for any rank `r >= 0`.
pub fn lambda_hat_weights(s: ComplexValue, omega: &[ComplexValue], pol: &PrecisionPolicy) -> Result<ComplexValue> {
    let r = omega.len();
    let total: ComplexValue = omega.iter().sum();
    let reflected = 1.0 + total - s;
    let a = completed_z_hat_weights(s, omega, pol)?;
    let b = completed_z_hat_weights(reflected, omega, pol)?;
    if r % 2 == 1 {
        Ok(a * b)
    } else {
        Ok(a / b)
    }
}

/// `Lambda_hat(s, w) = Z_hat(s, w) Z_hat(1 + |w| - s, w)^{(-1)^{r+1}}`.
pub fn lambda_hat(s: ComplexValue, omega: &WeightVector, ctx: &HigherZetaContext) -> Result<ComplexValue> {
    lambda_hat_weights(s, omega.as_slice(), &ctx.pol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(spec: SequenceSpec) -> HigherZetaContext {
        HigherZetaContext::with_spec(spec)
    }

    fn list(v: &[f64]) -> SequenceSpec {
        SequenceSpec::real_list(v).unwrap()
    }

    fn zeta(s: f64) -> f64 {
        riemann_zeta(c64(s, 0.0), &PrecisionPolicy::default()).unwrap().re
    }

    #[test]
    fn finite_products() {
        let v = higher_zeta(c64(3.0, 0.0), &ctx(list(&[0.0]))).unwrap();
        assert!((v.re - zeta(3.0)).abs() < 1e-14);
        let v = higher_zeta(c64(3.0, 0.0), &ctx(list(&[0.0, 1.0]))).unwrap();
        assert!((v.re - zeta(3.0) * zeta(4.0)).abs() < 1e-13);
        // continued: both factors in the head
        let s = c64(0.3, 2.0);
        let v = higher_zeta(s, &ctx(list(&[0.0, 0.5]))).unwrap();
        let p = PrecisionPolicy::default();
        let want = riemann_zeta(s, &p).unwrap() * riemann_zeta(s + 0.5, &p).unwrap();
        assert!((v - want).norm() < 1e-12 * want.norm());
    }

    #[test]
    fn progression_product_two_depths() {
        let spec = SequenceSpec::progression(c64(1.0, 0.0), 1).unwrap();
        let c = ctx(spec.clone());
        let v = higher_zeta(c64(2.0, 0.0), &c).unwrap();
        let direct: f64 = (1..80).map(|n| zeta(2.0 + n as f64).ln()).sum::<f64>().exp();
        let shallow: f64 = (1..40).map(|n| zeta(2.0 + n as f64).ln()).sum::<f64>().exp();
        assert!((v.re - direct).abs() < 1e-10);
        assert!((direct - shallow).abs() < 1e-10);
        assert!(tail_bound(&spec, 1, 10.0).unwrap() <= 0.1 * 2.0 + 1e-15);
    }

    #[test]
    fn split_index_consistency() {
        let c = ctx(SequenceSpec::lattice(WeightVector::from_real(&[1.0, 2.0]).unwrap()));
        for &s in &[c64(2.0, 0.5), c64(-0.4, 1.0), c64(0.8, -3.0)] {
            let j = minimal_split_index(s, &c).unwrap();
            let a = higher_zeta_split(s, &c, j).unwrap();
            let b = higher_zeta_split(s, &c, j + 1).unwrap();
            assert!((a - b).norm() < 1e-8 * a.norm(), "s={s}: {a} vs {b}");
        }
        assert!(higher_zeta_split(c64(-0.4, 1.0), &c, 0).is_err());
    }

    #[test]
    fn poles_are_reported() {
        let r = higher_zeta(c64(0.5, 0.0), &ctx(list(&[0.0, 0.5])));
        assert!(matches!(r, Err(Error::Pole(_))));
        let r = higher_zeta(c64(-1.0, 0.0), &ctx(SequenceSpec::lattice(WeightVector::from_real(&[1.0]).unwrap())));
        assert!(matches!(r, Err(Error::Pole(_))));
    }

    #[test]
    fn tail_bound_dominates_and_decreases() {
        let spec = SequenceSpec::lattice(WeightVector::from_real(&[1.0]).unwrap());
        let pts = enumerate_up_to(&spec, 200.0, &PrecisionPolicy::default()).unwrap();
        for &x in &[2.0f64, 3.0, 10.0] {
            let actual: f64 = pts.iter().map(|l| x.powf(-l.re)).sum();
            assert!(tail_bound(&spec, 0, x).unwrap() >= actual - 1e-12);
        }
        let mut prev = f64::INFINITY;
        for &x in &[2.0, 4.0, 8.0, 100.0] {
            let b = tail_bound(&spec, 3, x).unwrap();
            assert!(b < prev);
            prev = b;
        }
        assert!(tail_bound(&spec, 0, 1.5).is_err());
    }

    #[test]
    fn local_factor_examples() {
        let f = dirichlet_local_factor(2, &list(&[0.0, 1.0]), 2, 10.0).unwrap();
        assert!((f[1].re - 1.5).abs() < 1e-15 && (f[2].re - 1.75).abs() < 1e-15);
        let f = dirichlet_local_factor(7, &list(&[0.0]), 4, 10.0).unwrap();
        assert!(f.coeffs().iter().all(|c| *c == c64(1.0, 0.0)));
        let lat = SequenceSpec::lattice(WeightVector::from_real(&[1.0]).unwrap());
        let f = dirichlet_local_factor(2, &lat, 1, local_factor_cutoff(100, 1e-12)).unwrap();
        assert!((f[1].re - 2.0).abs() < 1e-12);
        assert!(dirichlet_local_factor(4, &lat, 1, 5.0).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let t = dirichlet_coeffs(&ctx(list(&[0.0, 1.0])), 100).unwrap();
        assert!((t.get(6).re - 2.0).abs() < 1e-14);
        assert_eq!(t.get(1), c64(1.0, 0.0));
        for n in 1..=100usize {
            let sigma: usize = (1..=n).filter(|d| n % d == 0).sum();
            assert!((t.get(n).re - sigma as f64 / n as f64).abs() < 1e-12, "n={n}");
        }
        let d = dirichlet_coeffs(&ctx(list(&[0.0, 0.0])), 12).unwrap();
        assert!((d.get(12).re - 6.0).abs() < 1e-14);
        let sums = d.partial_sums();
        assert!((sums[12].re - 35.0).abs() < 1e-12);
    }

    #[test]
    fn tauberian_constants() {
        let (c, k, l0) = tauberian_constant(&ctx(list(&[0.0, 1.0]))).unwrap();
        assert_eq!((k, l0), (1, 0.0));
        assert!((c.re - PI * PI / 6.0).abs() < 1e-12);
        let (c, k, _) = tauberian_constant(&ctx(list(&[0.0, 0.0]))).unwrap();
        assert_eq!(k, 2);
        assert_eq!(c, c64(1.0, 0.0));
        let (c, k, _) = tauberian_constant(&ctx(list(&[0.0]))).unwrap();
        assert_eq!((c, k), (c64(1.0, 0.0), 1));
        let complex = SequenceSpec::list(vec![c64(0.0, 0.0), c64(1.0, 1.0)]).unwrap();
        assert!(matches!(tauberian_constant(&ctx(complex)), Err(Error::Domain(_))));
        let (lhs, rhs) = tauberian_check(&ctx(list(&[0.0])), 1e4).unwrap();
        assert_eq!((lhs, rhs), (1e4, 1e4));
        assert!(tauberian_check(&ctx(list(&[0.0])), 50.0).is_err());
    }

    #[test]
    fn z_hat_rank_zero_is_completed_zeta() {
        let p = PrecisionPolicy::default();
        let s = c64(2.0, 0.0);
        let want = 1.0 / (12.0 * 2f64.sqrt() * PI);
        assert!((completed_z_hat_weights(s, &[], &p).unwrap().re - want).abs() < 1e-14);
        // the generic formula with r = 0 factors reproduces it as well
        let b = bernoulli_for_weights(s, &[c64(2.0, 0.0)], 1).scaled(1);
        let generic = ((-2.0 + b) * (2.0 * PI).ln() - log_multiple_gamma_shifted(s, &[], &p).unwrap()
            - log_multiple_gamma_shifted(s - 1.0, &[], &p).unwrap()
            + log_multiple_gamma_shifted(s, &[c64(2.0, 0.0)], &p).unwrap())
        .exp()
            * riemann_zeta(s, &p).unwrap();
        assert!((generic.re - want).abs() < 1e-12);
    }
}
