//! Barnes multiple zeta `zeta(s, z, w) = sum (z + n.w)^{-s}` over the integer
//! orthant, continued to all `s` off `{1, ..., r}`, together with the
//! multiple gamma `Gamma(z, w) = exp(d/ds zeta(s, z, w) at s = 0)` and the
//! multiple sine `S(z, w) = Gamma(z, w)^{-1} Gamma(|w| - z, w)^{(-1)^r}`.
//!
//! Continuation uses the Mellin representation
//!
//! ```text
//! zeta(s, z, w) = 1/Gamma(s) * int_0^inf x^{s-1} e^{-zx} / prod (1 - e^{-w_j x}) dx
//! ```
//!
//! split at a point `x0 <= 1`: on `[0, x0]` the integrand is expanded in the
//! multiple Bernoulli series and integrated term by term (exact for every
//! `s`), and `[x0, inf)` is integrated with Gauss-Legendre panels.

use crate::error::{Error, Result};
use crate::numerics::quadrature::GaussLegendre;
use crate::numerics::{c64, cpow, rgamma, ComplexValue, PrecisionPolicy, EULER_GAMMA};
use crate::series::{bernoulli_for_weights, BernoulliTable};
use std::f64::consts::PI;

/// Smallest `Re(z)` accepted by the s-derivative at 0.
pub const MIN_RE_Z_DERIVATIVE: f64 = 1e-3;

/// Distance to a pole below which evaluation is refused.
pub const NEAR_POLE: f64 = 1e-8;

const MAX_PANELS: usize = 200_000;

/// Lattice generators `(w_1, ..., w_r)`, every `Re(w_j) > 0`, `r >= 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    omegas: Vec<ComplexValue>,
}

impl WeightVector {
    pub fn new(omegas: Vec<ComplexValue>) -> Result<Self> {
        if omegas.is_empty() {
            return Err(Error::domain("weight vector must have at least one entry"));
        }
        for w in &omegas {
            if !(w.re.is_finite() && w.im.is_finite()) || !(w.re > 0.0) {
                return Err(Error::domain(format!("weight {w} must have positive real part")));
            }
        }
        Ok(WeightVector { omegas })
    }

    pub fn from_real(omegas: &[f64]) -> Result<Self> {
        Self::new(omegas.iter().map(|&w| c64(w, 0.0)).collect())
    }

    pub fn rank(&self) -> usize {
        self.omegas.len()
    }

    pub fn as_slice(&self) -> &[ComplexValue] {
        &self.omegas
    }

    pub fn last(&self) -> ComplexValue {
        *self.omegas.last().expect("non-empty")
    }

    /// `w_1 + ... + w_r`.
    pub fn sum(&self) -> ComplexValue {
        self.omegas.iter().sum()
    }

    /// `(w_1, ..., w_{r-1})`, or `None` when `r = 1`.
    pub fn without_last(&self) -> Option<WeightVector> {
        if self.omegas.len() <= 1 {
            None
        } else {
            Some(WeightVector {
                omegas: self.omegas[..self.omegas.len() - 1].to_vec(),
            })
        }
    }

    /// `(w0, w_1, ..., w_r)`.
    pub fn prepend(&self, w0: ComplexValue) -> Result<WeightVector> {
        let mut v = Vec::with_capacity(self.omegas.len() + 1);
        v.push(w0);
        v.extend_from_slice(&self.omegas);
        WeightVector::new(v)
    }

    pub fn permuted(&self, order: &[usize]) -> Result<WeightVector> {
        if order.len() != self.omegas.len() {
            return Err(Error::Shape("permutation length differs from rank".into()));
        }
        WeightVector::new(order.iter().map(|&i| self.omegas[i]).collect())
    }

    /// Radius of convergence of the Bernoulli generating function,
    /// `min_j |2 pi / w_j|`.
    pub fn bernoulli_radius(&self) -> f64 {
        self.omegas
            .iter()
            .map(|w| 2.0 * PI / w.norm())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Parameters of the split Mellin representation for one `(s, z, w)`.
#[derive(Debug, Clone)]
pub struct MellinSplit {
    pub bernoulli: BernoulliTable,
    /// Split point between the series head and the quadrature tail.
    pub split: f64,
    /// Panel edges of the tail quadrature, `split = edges[0] < ... = x_max`.
    pub tail_edges: Vec<f64>,
    pub n_terms: usize,
    pub x_max: f64,
}

impl MellinSplit {
    pub fn build(s: ComplexValue, z: ComplexValue, omega: &WeightVector, pol: &PrecisionPolicy) -> Result<Self> {
        let r = omega.rank();
        // the term-by-term head integral needs Re(s) + N + 1 - r > 0
        let n_terms = pol.max_terms.max((r as f64 - s.re).ceil().max(0.0) as usize + 8);
        let extra = 4;
        let rg = rgamma(s).norm().max(1.0);
        let mut split = (omega.bernoulli_radius() / 3.0).min(1.0);
        let mut attempt = 0;
        let bernoulli = loop {
            let table = bernoulli_for_weights(z, omega.as_slice(), n_terms + extra);
            // first omitted head terms, integrated against x^{s-1-r}
            let omitted: f64 = (n_terms + 1..=n_terms + extra)
                .map(|k| {
                    let e = s.re + k as f64 - r as f64;
                    table.scaled(k).norm() * split.powf(e) / e
                })
                .sum();
            if omitted * rg <= 1e-3 * pol.eps_abs {
                break table;
            }
            attempt += 1;
            if attempt > 60 {
                return Err(Error::Continuation(format!(
                    "Bernoulli head does not converge for z = {z}"
                )));
            }
            split *= 0.8;
        };
        let tail_edges = tail_panels(s, z, omega, split, pol)?;
        let x_max = *tail_edges.last().expect("at least the split point");
        Ok(MellinSplit {
            bernoulli,
            split,
            tail_edges,
            n_terms: n_terms + extra,
            x_max,
        })
    }
}

/// `prod_j 1/(1 - e^{-w_j x})`.
fn theta_lattice(x: f64, omega: &[ComplexValue]) -> ComplexValue {
    omega
        .iter()
        .fold(c64(1.0, 0.0), |acc, &w| acc / (1.0 - (-w * x).exp()))
}

fn tail_panels(
    s: ComplexValue,
    z: ComplexValue,
    omega: &WeightVector,
    split: f64,
    pol: &PrecisionPolicy,
) -> Result<Vec<f64>> {
    let decay = z.re;
    let w_max = omega.as_slice().iter().map(|w| w.norm()).fold(0.0, f64::max);
    let w_min_re = omega.as_slice().iter().map(|w| w.re).fold(f64::INFINITY, f64::min);
    let mut cap = 1.0f64.min(2.0 / w_max.max(1e-300));
    if z.im != 0.0 {
        cap = cap.min(1.5 / z.im.abs());
    }
    if decay > 2.0 {
        cap = cap.min(3.0 / decay);
    }
    let peak = (s.re - 1.0).max(0.0) / decay;
    let bound = |x: f64| -> f64 {
        let mut t = x.powf(s.re - 1.0) * (-decay * x).exp();
        for w in omega.as_slice() {
            t /= 1.0 - (-w.re * x).exp();
        }
        t
    };
    let mut edges = vec![split];
    let mut a = split;
    loop {
        let mut width = (0.5 * a).min(cap);
        if s.im != 0.0 {
            width = width.min(2.0 * a / s.im.abs());
        }
        let b = a + width;
        edges.push(b);
        a = b;
        if a > 2.0 * peak && a > split + 1.0 {
            let slope = decay - (s.re - 1.0).max(0.0) / a;
            if slope > 0.0 && bound(a) / slope < 1e-3 * pol.eps_abs && (-w_min_re * a).exp() < 0.5 {
                break;
            }
        }
        if edges.len() > MAX_PANELS {
            return Err(Error::Continuation(format!(
                "tail quadrature needs more than {MAX_PANELS} panels (Re z = {decay})"
            )));
        }
    }
    Ok(edges)
}

fn check_args(s: ComplexValue, z: ComplexValue, omega: &WeightVector) -> Result<()> {
    if !(z.re > 0.0) {
        return Err(Error::domain(format!("Barnes zeta needs Re(z) > 0, got {z}")));
    }
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::domain("non-finite s"));
    }
    for k in 1..=omega.rank() {
        let d = (s - k as f64).norm();
        if d == 0.0 {
            return Err(Error::Pole(format!("s = {k}")));
        }
        if d < NEAR_POLE {
            return Err(Error::NearPole(format!("s = {k}")));
        }
    }
    Ok(())
}

/// `1 / (Gamma(s) (s + m))` for integer `m >= 0`, finite at `s = -m`.
fn rgamma_over_shift(s: ComplexValue, m: usize) -> ComplexValue {
    let d = s + m as f64;
    if d.norm() >= 0.5 {
        return rgamma(s) / d;
    }
    // 1/Gamma(s) = s (s+1) ... (s+m) / Gamma(s+m+1)
    let mut num = c64(1.0, 0.0);
    for j in 0..m {
        num *= s + j as f64;
    }
    num * rgamma(s + (m + 1) as f64)
}

fn tail_integral(s: ComplexValue, z: ComplexValue, omega: &[ComplexValue], edges: &[f64], rule: &GaussLegendre) -> ComplexValue {
    let sm1 = s - 1.0;
    rule.integrate_panels(edges, |x| {
        let xc = c64(x, 0.0);
        let pw = if sm1.im == 0.0 {
            c64(x.powf(sm1.re), 0.0)
        } else {
            (sm1 * xc.ln()).exp()
        };
        pw * (-z * x).exp() * theta_lattice(x, omega)
    })
}

/// Barnes multiple zeta `zeta(s, z, w)` with full continuation in `s`.
pub fn barnes_zeta(s: ComplexValue, z: ComplexValue, omega: &WeightVector, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    check_args(s, z, omega)?;
    let split = MellinSplit::build(s, z, omega, pol)?;
    let r = omega.rank();
    let x0 = c64(split.split, 0.0);
    let rg = rgamma(s);

    let mut head = c64(0.0, 0.0);
    for k in 0..=split.n_terms {
        let c = split.bernoulli.scaled(k);
        let e = s + k as f64 - r as f64;
        let factor = if k >= r {
            rgamma_over_shift(s, k - r)
        } else {
            rg / e
        };
        head += c * cpow(x0, e) * factor;
    }
    let rule = GaussLegendre::new(pol.quad_points);
    let tail = tail_integral(s, z, omega.as_slice(), &split.tail_edges, &rule);
    Ok(head + rg * tail)
}

/// `zeta(-m, z, w) = (-1)^m m! B_{m+r}(z, w) / (m+r)!`.
pub fn barnes_zeta_special(m: usize, z: ComplexValue, omega: &WeightVector) -> Result<ComplexValue> {
    if !(z.re > 0.0) {
        return Err(Error::domain(format!("Barnes zeta needs Re(z) > 0, got {z}")));
    }
    let r = omega.rank();
    let table = bernoulli_for_weights(z, omega.as_slice(), m + r);
    let mut fact = 1.0f64;
    for j in 2..=m {
        fact *= j as f64;
    }
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(table.scaled(m + r) * (sign * fact))
}

/// `d/ds zeta(s, z, w)` at `s = 0`, from the split representation:
/// `c_r (gamma + ln x0) + sum_{k != r} c_k x0^{k-r}/(k-r) + int_{x0}^inf e^{-zx} theta(x) dx/x`
/// where `c_k = B_k(z, w)/k!`.
pub fn barnes_zeta_s_derivative_at_0(z: ComplexValue, omega: &WeightVector, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    if !(z.re >= MIN_RE_Z_DERIVATIVE) {
        return Err(Error::domain(format!(
            "log multiple gamma needs Re(z) >= {MIN_RE_Z_DERIVATIVE}, got {z}"
        )));
    }
    let s = c64(0.0, 0.0);
    let split = MellinSplit::build(s, z, omega, pol)?;
    let r = omega.rank();
    let x0 = split.split;
    let mut acc = split.bernoulli.scaled(r) * (EULER_GAMMA + x0.ln());
    for k in 0..=split.n_terms {
        if k == r {
            continue;
        }
        let e = k as f64 - r as f64;
        acc += split.bernoulli.scaled(k) * (x0.powf(e) / e);
    }
    let rule = GaussLegendre::new(pol.quad_points);
    acc += tail_integral(s, z, omega.as_slice(), &split.tail_edges, &rule);
    Ok(acc)
}

/// `log Gamma(z, w)`; equal to [`barnes_zeta_s_derivative_at_0`].
pub fn log_multiple_gamma(z: ComplexValue, omega: &WeightVector, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    barnes_zeta_s_derivative_at_0(z, omega, pol)
}

/// Below this real part, [`log_multiple_gamma_shifted`] moves `z` right with
/// the ladder relation before evaluating the integral representation.
pub const SHIFT_THRESHOLD: f64 = 0.5;

/// `log Gamma(z, w)` for any `z` off the poles `z = -n.w`, any rank `r >= 0`.
///
/// Uses `Gamma(z, w) = Gamma(z, w \ w_j) Gamma(z + w_j, w)` (shifting along the
/// generator with the largest real part) until `Re(z) >= SHIFT_THRESHOLD`,
/// with `Gamma(z, ()) = 1/z`. The branch is the sum of the pieces' branches.
pub fn log_multiple_gamma_shifted(z: ComplexValue, omega: &[ComplexValue], pol: &PrecisionPolicy) -> Result<ComplexValue> {
    if omega.is_empty() {
        if z == c64(0.0, 0.0) {
            return Err(Error::Pole("Gamma(z, ()) at z = 0".into()));
        }
        return Ok(-z.ln());
    }
    if z.re >= SHIFT_THRESHOLD {
        return log_multiple_gamma(z, &WeightVector::new(omega.to_vec())?, pol);
    }
    let j = (0..omega.len())
        .max_by(|&a, &b| omega[a].re.total_cmp(&omega[b].re))
        .expect("non-empty");
    let reduced: Vec<ComplexValue> = omega
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j)
        .map(|(_, w)| *w)
        .collect();
    Ok(log_multiple_gamma_shifted(z, &reduced, pol)? + log_multiple_gamma_shifted(z + omega[j], omega, pol)?)
}

/// Multiple gamma `Gamma(z, w)`.
pub fn multiple_gamma(z: ComplexValue, omega: &WeightVector, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    Ok(log_multiple_gamma(z, omega, pol)?.exp())
}

/// Multiple sine `S(z, w)`; both `z` and `|w| - z` must lie in the right
/// half-plane.
pub fn multiple_sine(z: ComplexValue, omega: &WeightVector, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    let reflected = omega.sum() - z;
    if !(z.re > 0.0) || !(reflected.re > 0.0) {
        return Err(Error::domain(format!(
            "multiple sine needs Re(z) > 0 and Re(|w| - z) > 0, got z = {z}"
        )));
    }
    let lg = log_multiple_gamma(z, omega, pol)?;
    let lr = log_multiple_gamma(reflected, omega, pol)?;
    let sign = if omega.rank().is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok((-lg + lr * sign).exp())
}

/// `S(z, w)` for any rank `r >= 0` and any `z` off the poles of the gamma
/// factors, through [`log_multiple_gamma_shifted`]; `S(z, ()) = -1`.
pub fn multiple_sine_shifted(z: ComplexValue, omega: &[ComplexValue], pol: &PrecisionPolicy) -> Result<ComplexValue> {
    let total: ComplexValue = omega.iter().sum();
    let lg = log_multiple_gamma_shifted(z, omega, pol)?;
    let lr = log_multiple_gamma_shifted(total - z, omega, pol)?;
    let sign = if omega.len().is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok((-lg + lr * sign).exp())
}
