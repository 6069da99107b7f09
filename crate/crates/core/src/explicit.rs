//! Sums over the non-trivial zeros `rho = 1/2 + i gamma` of `zeta`, the
//! prime side of the explicit formula
//!
//! ```text
//! sum_rho (z - rho)^{-s} = z^{-s} + (z-1)^{-s} - sum_{n>=0} (z+2n)^{-s}
//!     - 1/Gamma(s) sum_{n>=1} sum_p log p p^{-nz} (n log p)^{s-1}
//! ```
//!
//! and the completed zeta `zeta_hat(s) = 2^{-1/2} (2 pi)^{-2} s (s-1) pi^{-s/2} Gamma(s/2) zeta(s)`.

use crate::barnes::{barnes_zeta_special, WeightVector};
use crate::error::{Error, Result};
use crate::higher_zeta::{higher_zeta, HigherZetaContext};
use crate::numerics::quadrature::GaussLegendre;
use crate::numerics::{c64, cpow, hurwitz_zeta, log_gamma, primes_up_to, rgamma, riemann_zeta, ComplexValue, PrecisionPolicy, EULER_GAMMA};
use crate::sequences::{dotted_product, enumerate_up_to, SequenceSpec};
use std::f64::consts::PI;
use std::path::Path;

/// Imaginary parts of zeros on the critical line, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    pub gammas: Vec<f64>,
    pub count: usize,
    pub source: String,
}

/// Parse one ordinate per line, optionally preceded by an index column.
/// Blank lines and lines starting with `#` are skipped.
pub fn parse_zeros(text: &str, source: &str) -> Result<ZeroTable> {
    let mut gammas: Vec<f64> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let value = match fields.as_slice() {
            [v] => *v,
            [i, v] => {
                i.parse::<u64>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad index `{i}`"),
                })?;
                *v
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected `[index] value`, got `{line}`"),
                })
            }
        };
        let g: f64 = value.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("bad number `{value}`"),
        })?;
        if !g.is_finite() || g <= 0.0 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("ordinate must be positive, got {g}"),
            });
        }
        if let Some(&prev) = gammas.last() {
            if g <= prev {
                return Err(Error::Order { line: line_no });
            }
        }
        gammas.push(g);
    }
    if gammas.is_empty() {
        return Err(Error::Parse {
            line: last_line,
            msg: "no zeros in table".into(),
        });
    }
    Ok(ZeroTable {
        count: gammas.len(),
        gammas,
        source: format!("{source} (zeros taken on Re(rho) = 1/2)"),
    })
}

pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_zeros(&text, &path.display().to_string())
}

fn check_half_planes(z: ComplexValue, s: ComplexValue) -> Result<()> {
    if !(z.re > 1.0) || !(s.re > 1.0) {
        return Err(Error::domain(format!("explicit formula needs Re(z) > 1 and Re(s) > 1, got z = {z}, s = {s}")));
    }
    Ok(())
}

/// `sum_{k <= nz} (z - 1/2 - i gamma_k)^{-s} + (z - 1/2 + i gamma_k)^{-s}`.
pub fn zero_sum(z: ComplexValue, s: ComplexValue, table: &ZeroTable, nz: usize) -> Result<ComplexValue> {
    check_half_planes(z, s)?;
    if nz > table.count {
        return Err(Error::domain(format!("{nz} zeros requested, table has {}", table.count)));
    }
    let w = z - 0.5;
    Ok(table.gammas[..nz]
        .iter()
        .rev()
        .map(|&g| cpow(w - c64(0.0, g), -s) + cpow(w + c64(0.0, g), -s))
        .sum())
}

/// Estimate of the omitted zeros' contribution,
/// `2 int_T^inf (log(t / 2 pi) / 2 pi) t^{-Re s} dt` with `T = gamma_nz`.
pub fn zero_tail_estimate(s: ComplexValue, table: &ZeroTable, nz: usize) -> f64 {
    let t = if nz == 0 { 14.0 } else { table.gammas[nz - 1] };
    let a = s.re - 1.0;
    (((t / (2.0 * PI)).ln().max(0.0) + 1.0 / a) * t.powf(-a) / a) / PI
}

/// Primes and their logarithms up to a bound.
#[derive(Debug, Clone)]
pub struct PrimeTable {
    pub bound: u64,
    pub primes: Vec<u64>,
    pub logs: Vec<f64>,
}

impl PrimeTable {
    pub fn new(bound: u64) -> Result<Self> {
        let list = primes_up_to(bound)?;
        let logs = list.primes.iter().map(|&p| (p as f64).ln()).collect();
        Ok(PrimeTable {
            bound,
            primes: list.primes,
            logs,
        })
    }
}

/// `sum_{m <= P} Lambda(m) f(log m)` over prime powers with exponent `<= n_bound`,
/// together with `psi(P)` restricted the same way.
fn von_mangoldt_sum<F>(primes: &PrimeTable, n_bound: u32, mut f: F) -> (ComplexValue, f64, bool)
where
    F: FnMut(f64) -> ComplexValue,
{
    let log_bound = (primes.bound as f64).ln() + 1e-12;
    let mut acc = c64(0.0, 0.0);
    let mut psi = 0.0;
    let mut complete = true;
    for &lp in &primes.logs {
        let mut n = 1u32;
        while f64::from(n) * lp <= log_bound {
            if n > n_bound {
                complete = false;
                break;
            }
            acc += f(f64::from(n) * lp) * lp;
            psi += lp;
            n += 1;
        }
    }
    (acc, psi, complete)
}

/// Prime-number-theorem estimate of `sum_{m > P} Lambda(m) f(m)`:
/// `int_P^inf f(t) dt - (psi(P) - P) f(P)`, with `f(e^u) e^u` integrated in `u`.
fn smoothed_tail<F>(bound: f64, psi: f64, decay: f64, osc: f64, quad_points: usize, f: F) -> ComplexValue
where
    F: Fn(f64) -> ComplexValue,
{
    let u0 = bound.ln();
    let span = 60.0 / decay;
    let width = (0.5 / decay).min(1.0).min(if osc > 0.0 { 1.0 / osc } else { f64::INFINITY });
    let panels = (span / width).ceil() as usize;
    let edges: Vec<f64> = (0..=panels).map(|k| u0 + span * k as f64 / panels as f64).collect();
    let rule = GaussLegendre::new(quad_points);
    let integral = rule.integrate_panels(&edges, |u| f(u) * u.exp());
    integral - f(u0) * (psi - bound)
}

/// Prime-power sum `sum_{n>=1} sum_p log p p^{-nz} (n log p)^{s-1}` (without
/// the `1/Gamma(s)`), exact up to `P` plus the smoothed tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimeSide {
    pub exact: ComplexValue,
    pub smoothed_tail: ComplexValue,
    pub psi: f64,
}

fn prime_side(z: ComplexValue, s: ComplexValue, primes: &PrimeTable, n_bound: u32, pol: &PrecisionPolicy) -> Result<PrimeSide> {
    let sm1 = s - 1.0;
    let f = |l: f64| (-z * l + sm1 * l.ln()).exp();
    let (exact, psi, complete) = von_mangoldt_sum(primes, n_bound, f);
    if !complete {
        // the first omitted power of 2 dominates what is missing
        let missing = f((n_bound + 1) as f64 * std::f64::consts::LN_2).norm() * 2.0 * std::f64::consts::LN_2;
        if missing > pol.eps_abs {
            return Err(Error::Truncation(format!(
                "prime powers beyond n = {n_bound} contribute about {missing:.3e}"
            )));
        }
    }
    let smoothed_tail = smoothed_tail(primes.bound as f64, psi, z.re - 1.0, z.im.abs() + sm1.im.abs(), pol.quad_points, f);
    Ok(PrimeSide {
        exact,
        smoothed_tail,
        psi,
    })
}

/// Right side of the explicit formula using a precomputed prime table.
pub fn explicit_formula_rhs_with(z: ComplexValue, s: ComplexValue, primes: &PrimeTable, n_bound: u32, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    check_half_planes(z, s)?;
    let trivial = cpow(c64(2.0, 0.0), -s) * hurwitz_zeta(s, z * 0.5, pol)?;
    let ps = prime_side(z, s, primes, n_bound, pol)?;
    Ok(cpow(z, -s) + cpow(z - 1.0, -s) - trivial - rgamma(s) * (ps.exact + ps.smoothed_tail))
}

/// Right side of the explicit formula with primes up to `prime_bound` and
/// prime powers `p^n`, `n <= n_bound`; the prime sum beyond `prime_bound` is
/// replaced by its smoothed estimate.
pub fn explicit_formula_rhs(z: ComplexValue, s: ComplexValue, prime_bound: u64, n_bound: u32, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    explicit_formula_rhs_with(z, s, &PrimeTable::new(prime_bound)?, n_bound, pol)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExplicitFormulaReport {
    pub z: ComplexValue,
    pub s: ComplexValue,
    /// Zero sum truncated at `nz` conjugate pairs.
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub residual: f64,
    pub nz: usize,
    pub prime_bound: u64,
    pub n_bound: u32,
    /// Size of the omitted zeros, see [`zero_tail_estimate`].
    pub zero_tail: f64,
    /// Magnitude of the smoothed prime tail included in `rhs`.
    pub prime_tail: f64,
}

pub fn explicit_formula_report(
    z: ComplexValue,
    s: ComplexValue,
    table: &ZeroTable,
    nz: usize,
    primes: &PrimeTable,
    n_bound: u32,
    pol: &PrecisionPolicy,
) -> Result<ExplicitFormulaReport> {
    let lhs = zero_sum(z, s, table, nz)?;
    check_half_planes(z, s)?;
    let trivial = cpow(c64(2.0, 0.0), -s) * hurwitz_zeta(s, z * 0.5, pol)?;
    let ps = prime_side(z, s, primes, n_bound, pol)?;
    let rg = rgamma(s);
    let rhs = cpow(z, -s) + cpow(z - 1.0, -s) - trivial - rg * (ps.exact + ps.smoothed_tail);
    Ok(ExplicitFormulaReport {
        z,
        s,
        lhs,
        rhs,
        residual: (lhs - rhs).norm(),
        nz,
        prime_bound: primes.bound,
        n_bound,
        zero_tail: zero_tail_estimate(s, table, nz),
        prime_tail: (rg * ps.smoothed_tail).norm(),
    })
}

/// Within this distance of `s = 1` the factor `(s-1) zeta(s)` is taken from its Laurent expansion.
const NEAR_ONE: f64 = 1e-5;

/// `zeta_hat(s) = 2^{-1/2} (2 pi)^{-2} s (s-1) pi^{-s/2} Gamma(s/2) zeta(s)`, entire.
///
/// Evaluated as `2^{1/2} (2 pi)^{-2} (s-1) pi^{-s/2} Gamma(1 + s/2) zeta(s)`; at the
/// trivial zeros, where `Gamma(1 + s/2)` has poles, the value `zeta_hat(1 - s)` is used.
pub fn completed_riemann_zeta(s: ComplexValue, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    let half = s * 0.5 + 1.0;
    if half.im.abs() < 1e-9 && half.re <= 0.0 && (half.re - half.re.round()).abs() < 1e-9 {
        return completed_riemann_zeta(1.0 - s, pol);
    }
    let d = s - 1.0;
    let pole_part = if d.norm() < NEAR_ONE {
        1.0 + d * EULER_GAMMA
    } else {
        d * riemann_zeta(s, pol)?
    };
    let log_factor = 0.5 * std::f64::consts::LN_2 - 2.0 * (2.0 * PI).ln() - s * 0.5 * PI.ln() + log_gamma(half)?;
    Ok(log_factor.exp() * pole_part)
}

/// `log Z(z, Lambda) = sum_lambda sum_p sum_{n>=1} 1/(n p^{n(z + lambda)})`.
pub fn log_z_prime_sum_with(z: ComplexValue, spec: &SequenceSpec, primes: &PrimeTable, n_bound: u32, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    let lambdas = match spec {
        SequenceSpec::ExplicitList { values } => values.clone(),
        _ => {
            // |log zeta(w)| <= 2 * 2^{-Re w} for Re w >= 2
            let r = (1.0 + (1.0 / pol.eps_abs).log2() - z.re).max(0.0);
            enumerate_up_to(spec, r, pol)?
        }
    };
    if !(z.re + spec.first().re > 1.0) {
        return Err(Error::domain(format!("prime sum needs Re(z + lambda_0) > 1, got z = {z}")));
    }
    let mut total = c64(0.0, 0.0);
    for lam in lambdas {
        let w = z + lam;
        let sigma = w.re;
        let cutoff = 1e-3 * pol.eps_abs;
        // Lambda(m) / log m * m^{-w}
        let f = |l: f64| (-w * l).exp() / l;
        let mut acc = c64(0.0, 0.0);
        let mut psi = 0.0;
        let mut reached_end = true;
        let log_bound = (primes.bound as f64).ln() + 1e-12;
        for (&p, &lp) in primes.primes.iter().zip(&primes.logs) {
            // all later primes together stay below int_p^inf t^{-sigma} dt
            if (p as f64).powf(1.0 - sigma) / (sigma - 1.0) < cutoff {
                reached_end = false;
                break;
            }
            let mut n = 1u32;
            while f64::from(n) * lp <= log_bound && n <= n_bound {
                acc += f(f64::from(n) * lp) * lp;
                psi += lp;
                n += 1;
            }
        }
        if reached_end {
            acc += smoothed_tail(primes.bound as f64, psi, sigma - 1.0, w.im.abs(), pol.quad_points, f);
        }
        total += acc;
    }
    Ok(total)
}

/// [`log_z_prime_sum_with`] sieving primes up to `prime_bound`.
pub fn log_z_prime_sum(z: ComplexValue, spec: &SequenceSpec, prime_bound: u64, n_bound: u32, pol: &PrecisionPolicy) -> Result<ComplexValue> {
    log_z_prime_sum_with(z, spec, &PrimeTable::new(prime_bound)?, n_bound, pol)
}

/// Both sides of the regularized product identity for a finite sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct BbbReport {
    pub s: ComplexValue,
    /// `prod_lambda zeta_hat(s + lambda)`.
    pub lhs: ComplexValue,
    /// `prod_lambda [(s+lambda)/2pi * (s-1+lambda)/2pi * prod^_n ((s+lambda+2n)/2pi)^{-1}] * Z(s, Lambda)`.
    pub rhs: ComplexValue,
    /// `|lhs - rhs| / |lhs|`.
    pub residual: f64,
}

/// Checks the regularized product expression of `Z(s, Lambda)` factor by factor.
///
/// For each `lambda`, with `w = s + lambda` and `zeta_2(t) = sum_n (w + 2n)^{-t}`,
/// `prod^_n ((w + 2n)/2pi) = (2pi)^{-zeta_2(0)} * dotted_product(w, {2n})`.
pub fn verify_bbb(s: ComplexValue, spec: &SequenceSpec, pol: &PrecisionPolicy) -> Result<BbbReport> {
    let SequenceSpec::ExplicitList { values } = spec else {
        return Err(Error::Unsupported("regularized product check needs a finite sequence".into()));
    };
    if !(s.re > 1.0) {
        return Err(Error::domain(format!("regularized product check needs Re(s) > 1, got {s}")));
    }
    let two_pi = 2.0 * PI;
    let evens = WeightVector::from_real(&[2.0])?;
    let even_spec = SequenceSpec::lattice(evens.clone());
    let mut lhs = c64(1.0, 0.0);
    let mut rhs = c64(1.0, 0.0);
    for &lam in values {
        let w = s + lam;
        lhs *= completed_riemann_zeta(w, pol)?;
        let zeta2_at_0 = barnes_zeta_special(0, w, &evens)?;
        let evens_product = cpow(c64(two_pi, 0.0), -zeta2_at_0) * dotted_product(w, &even_spec, pol)?;
        rhs *= (w / two_pi) * ((w - 1.0) / two_pi) / evens_product;
    }
    rhs *= higher_zeta(s, &HigherZetaContext::new(spec.clone(), 2, *pol)?)?;
    Ok(BbbReport {
        s,
        lhs,
        rhs,
        residual: (lhs - rhs).norm() / lhs.norm(),
    })
}
