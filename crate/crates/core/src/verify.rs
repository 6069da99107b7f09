//! Identity suites: each check evaluates both sides of a relation at a set
//! of points and records the residual against a per-row tolerance.

use crate::barnes::{log_multiple_gamma_shifted, multiple_sine_shifted, WeightVector};
use crate::error::{Error, Result};
use crate::explicit::{completed_riemann_zeta, explicit_formula_report, verify_bbb, PrimeTable, ZeroTable};
use crate::higher_zeta::{
    completed_z_hat_weights, dirichlet_coeffs, higher_zeta, lambda_hat_weights, lattice_higher_zeta_weights, HigherZetaContext,
};
use crate::numerics::{c64, riemann_zeta, ComplexValue, PrecisionPolicy};
use crate::sequences::SequenceSpec;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    LadderGamma,
    LadderSine,
    Ccc,
    Telescope,
    Ddd,
    LambdaProduct,
    Aaa,
    Bbb,
    EulerDirichlet,
    ZhatSymmetry,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::LadderGamma,
        Suite::LadderSine,
        Suite::Ccc,
        Suite::Telescope,
        Suite::Ddd,
        Suite::LambdaProduct,
        Suite::Aaa,
        Suite::Bbb,
        Suite::EulerDirichlet,
        Suite::ZhatSymmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LadderGamma => "ladder-gamma",
            Suite::LadderSine => "ladder-sine",
            Suite::Ccc => "ccc",
            Suite::Telescope => "telescope",
            Suite::Ddd => "ddd",
            Suite::LambdaProduct => "lambda-product",
            Suite::Aaa => "aaa",
            Suite::Bbb => "bbb",
            Suite::EulerDirichlet => "euler-dirichlet",
            Suite::ZhatSymmetry => "zhat-symmetry",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .iter()
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown suite `{s}`"),
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub label: String,
    pub point: ComplexValue,
    pub lhs: ComplexValue,
    pub rhs: ComplexValue,
    pub residual: f64,
    pub tolerance: f64,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.residual <= self.tolerance
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub rows: Vec<CheckRow>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(CheckRow::passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.rows.iter().map(|r| r.residual).fold(0.0, f64::max)
    }
}

/// `|a - b| / |b|`, or `|a - b|` when `b = 0`.
pub fn relative(a: ComplexValue, b: ComplexValue) -> f64 {
    let d = (a - b).norm();
    if b.norm() > 0.0 {
        d / b.norm()
    } else {
        d
    }
}

fn row(label: impl Into<String>, point: ComplexValue, lhs: ComplexValue, rhs: ComplexValue, tolerance: f64) -> CheckRow {
    CheckRow {
        label: label.into(),
        point,
        lhs,
        rhs,
        residual: relative(lhs, rhs),
        tolerance,
    }
}

fn weights_label(omega: &[ComplexValue]) -> String {
    let parts: Vec<String> = omega
        .iter()
        .map(|w| if w.im == 0.0 { format!("{}", w.re) } else { format!("{}{:+}i", w.re, w.im) })
        .collect();
    format!("({})", parts.join(","))
}

/// Ten points with `Re z` in `[0.15, 1.32]` and `Im z` in `[-0.9, 0.9]`.
pub fn default_z_points() -> Vec<ComplexValue> {
    (0..10).map(|k| c64(0.15 + 0.13 * k as f64, -0.9 + 0.2 * k as f64)).collect()
}

/// Ten points with `Re s` in `[1.5, 3]` and `Im s` in `[0.5, 2.75]`.
pub fn default_s_points() -> Vec<ComplexValue> {
    (0..10).map(|k| c64(1.5 + k as f64 / 6.0, 0.5 + 0.25 * k as f64)).collect()
}

fn split_last(omega: &WeightVector) -> (Vec<ComplexValue>, ComplexValue) {
    let w = omega.as_slice();
    (w[..w.len() - 1].to_vec(), omega.last())
}

/// Subset sums `sum_{k in S} w_k` with sign `(-1)^{|S|}`, including the empty set.
fn signed_subset_sums(omega: &[ComplexValue]) -> Vec<(ComplexValue, bool)> {
    let r = omega.len();
    (0..1usize << r)
        .map(|mask| {
            let mut sum = c64(0.0, 0.0);
            for (k, w) in omega.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    sum += *w;
                }
            }
            (sum, mask.count_ones() % 2 == 1)
        })
        .collect()
}

/// `Gamma(z, w) = Gamma(z, w') Gamma(z + w_r, w)` with `w' = (w_1..w_{r-1})`.
pub fn ladder_gamma(omega: &WeightVector, zs: &[ComplexValue], tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let (head, last) = split_last(omega);
    let full = omega.as_slice();
    let mut rows = Vec::new();
    for &z in zs {
        let lhs = log_multiple_gamma_shifted(z, full, pol)?.exp();
        let rhs = (log_multiple_gamma_shifted(z, &head, pol)? + log_multiple_gamma_shifted(z + last, full, pol)?).exp();
        rows.push(row(format!("gamma{}", weights_label(full)), z, lhs, rhs, tol));
    }
    Ok(SuiteReport {
        suite: Suite::LadderGamma,
        rows,
    })
}

/// `S(z, w) = S(z, w') S(z + w_r, w)`.
pub fn ladder_sine(omega: &WeightVector, zs: &[ComplexValue], tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let (head, last) = split_last(omega);
    let full = omega.as_slice();
    let mut rows = Vec::new();
    for &z in zs {
        let lhs = multiple_sine_shifted(z, full, pol)?;
        let rhs = multiple_sine_shifted(z, &head, pol)? * multiple_sine_shifted(z + last, full, pol)?;
        rows.push(row(format!("sine{}", weights_label(full)), z, lhs, rhs, tol));
    }
    Ok(SuiteReport {
        suite: Suite::LadderSine,
        rows,
    })
}

/// `Z(s, w) = Z(s, w') Z(s + w_r, w)`.
pub fn ccc(omega: &WeightVector, ss: &[ComplexValue], tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let (head, last) = split_last(omega);
    let full = omega.as_slice();
    let mut rows = Vec::new();
    for &s in ss {
        let lhs = lattice_higher_zeta_weights(s, full, pol)?;
        let rhs = lattice_higher_zeta_weights(s, &head, pol)? * lattice_higher_zeta_weights(s + last, full, pol)?;
        rows.push(row(format!("Z{}", weights_label(full)), s, lhs, rhs, tol));
    }
    Ok(SuiteReport { suite: Suite::Ccc, rows })
}

/// `prod_S Z(s + sum_S w, w)^{(-1)^{|S|}} = zeta(s)`.
pub fn telescope(omega: &WeightVector, ss: &[ComplexValue], tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let full = omega.as_slice();
    let subsets = signed_subset_sums(full);
    let mut rows = Vec::new();
    for &s in ss {
        let mut lhs = c64(1.0, 0.0);
        for &(shift, odd) in &subsets {
            let v = lattice_higher_zeta_weights(s + shift, full, pol)?;
            lhs = if odd { lhs / v } else { lhs * v };
        }
        let rhs = riemann_zeta(s, pol)?;
        rows.push(row(format!("telescope{}", weights_label(full)), s, lhs, rhs, tol));
    }
    Ok(SuiteReport {
        suite: Suite::Telescope,
        rows,
    })
}

/// `Z_hat(s, w) = Z_hat(s, w') Z_hat(s + w_r, w)` and
/// `Lambda_hat(s, w) = Lambda_hat(s, w') Lambda_hat(s + w_r, w)`,
/// with `Z_hat(s, ()) = zeta_hat(s)` and `Lambda_hat(s, ()) = zeta_hat(s)/zeta_hat(1-s)`.
pub fn ddd(omega: &WeightVector, ss: &[ComplexValue], tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let (head, last) = split_last(omega);
    let full = omega.as_slice();
    let mut rows = Vec::new();
    for &s in ss {
        let lhs = completed_z_hat_weights(s, full, pol)?;
        let rhs = completed_z_hat_weights(s, &head, pol)? * completed_z_hat_weights(s + last, full, pol)?;
        rows.push(row(format!("zhat{}", weights_label(full)), s, lhs, rhs, tol));
    }
    for &s in ss {
        let lhs = lambda_hat_weights(s, full, pol)?;
        let rhs = lambda_hat_weights(s, &head, pol)? * lambda_hat_weights(s + last, full, pol)?;
        rows.push(row(format!("lambda{}", weights_label(full)), s, lhs, rhs, tol));
    }
    Ok(SuiteReport { suite: Suite::Ddd, rows })
}

/// `prod_S Lambda_hat(s + sum_S w, w)^{(-1)^{|S|}} = 1`; the residual is `|product - 1|`.
pub fn lambda_product(omega: &WeightVector, ss: &[ComplexValue], tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let full = omega.as_slice();
    let subsets = signed_subset_sums(full);
    let mut rows = Vec::new();
    for &s in ss {
        let mut prod = c64(1.0, 0.0);
        for &(shift, odd) in &subsets {
            let v = lambda_hat_weights(s + shift, full, pol)?;
            prod = if odd { prod / v } else { prod * v };
        }
        rows.push(row(format!("lambda-product{}", weights_label(full)), s, prod, c64(1.0, 0.0), tol));
    }
    Ok(SuiteReport {
        suite: Suite::LambdaProduct,
        rows,
    })
}

/// Settings of the explicit-formula suite.
#[derive(Debug, Clone)]
pub struct AaaConfig {
    pub points: Vec<(ComplexValue, ComplexValue)>,
    /// Increasing zero counts; the trend compares the first and the last.
    pub counts: Vec<usize>,
    pub n_bound: u32,
    /// Required improvement `residual(first) / residual(last)`.
    pub min_gain: f64,
    /// Bound on `residual(last)`.
    pub max_final: f64,
}

impl Default for AaaConfig {
    fn default() -> Self {
        AaaConfig {
            points: vec![(c64(2.0, 0.0), c64(2.0, 0.0)), (c64(2.0, 0.0), c64(3.0, 0.0)), (c64(2.5, 0.0), c64(2.0, 0.0))],
            counts: vec![100, 500, 1000],
            n_bound: 64,
            min_gain: 3.0,
            max_final: 1e-3,
        }
    }
}

/// One row per `(z, s, Nz)` with the raw residual `|zero sum - right side|`
/// (tolerance infinite, informational), then per `(z, s)` a trend row
/// (`lhs` = last residual, `rhs` = first residual / min_gain, only with two or
/// more counts) and a bound row.
pub fn aaa(table: &ZeroTable, primes: &PrimeTable, cfg: &AaaConfig, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    if cfg.counts.is_empty() {
        return Err(Error::Shape("no zero counts given".into()));
    }
    let mut rows = Vec::new();
    for &(z, s) in &cfg.points {
        let mut residuals = Vec::new();
        for &nz in &cfg.counts {
            let rep = explicit_formula_report(z, s, table, nz, primes, cfg.n_bound, pol)?;
            rows.push(CheckRow {
                label: format!("aaa z={} nz={nz} zero-tail~{:.2e} prime-tail~{:.2e}", z.re, rep.zero_tail, rep.prime_tail),
                point: s,
                lhs: rep.lhs,
                rhs: rep.rhs,
                residual: rep.residual,
                tolerance: f64::INFINITY,
            });
            residuals.push(rep.residual);
        }
        let (first, last) = (residuals[0], *residuals.last().expect("counts"));
        if residuals.len() > 1 {
            rows.push(CheckRow {
                label: format!("aaa-trend z={}", z.re),
                point: s,
                lhs: c64(last, 0.0),
                rhs: c64(first / cfg.min_gain, 0.0),
                residual: last / (first / cfg.min_gain),
                tolerance: 1.0,
            });
        }
        rows.push(CheckRow {
            label: format!("aaa-bound z={}", z.re),
            point: s,
            lhs: c64(last, 0.0),
            rhs: c64(cfg.max_final, 0.0),
            residual: last,
            tolerance: cfg.max_final,
        });
    }
    Ok(SuiteReport { suite: Suite::Aaa, rows })
}

/// Regularized product expression for finite sequences, residual relative.
pub fn bbb(specs: &[SequenceSpec], s: ComplexValue, tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for spec in specs {
        let rep = verify_bbb(s, spec, pol)?;
        rows.push(CheckRow {
            label: format!("bbb {spec}"),
            point: s,
            lhs: rep.lhs,
            rhs: rep.rhs,
            residual: rep.residual,
            tolerance: tol,
        });
    }
    Ok(SuiteReport { suite: Suite::Bbb, rows })
}

/// `|Z(s, Lambda) - sum_{n <= N} g(n) n^{-s}|` (absolute), one row per spec.
pub fn euler_dirichlet(specs: &[SequenceSpec], s: ComplexValue, n: usize, tol: f64, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for spec in specs {
        let ctx = HigherZetaContext::new(spec.clone(), 2, *pol)?;
        let euler = higher_zeta(s, &ctx)?;
        let table = dirichlet_coeffs(&ctx, n)?;
        let dirichlet = table.dirichlet_sum(s, n);
        rows.push(CheckRow {
            label: format!("euler-dirichlet {spec} N={n}"),
            point: s,
            lhs: euler,
            rhs: dirichlet,
            residual: (euler - dirichlet).norm(),
            tolerance: tol,
        });
    }
    Ok(SuiteReport {
        suite: Suite::EulerDirichlet,
        rows,
    })
}

/// `re_steps x im_steps` grid over `Re s in [-2, 3]`, `Im s in [-5, 5]`.
pub fn symmetry_grid(re_steps: usize, im_steps: usize) -> Vec<ComplexValue> {
    let mut out = Vec::with_capacity(re_steps * im_steps);
    for i in 0..re_steps {
        for j in 0..im_steps {
            let re = -2.0 + 5.0 * i as f64 / (re_steps - 1) as f64;
            let im = -5.0 + 10.0 * j as f64 / (im_steps - 1) as f64;
            out.push(c64(re, im));
        }
    }
    out
}

/// `|zeta_hat(s) - zeta_hat(1-s)| / (1 + |zeta_hat(s)|)` on a grid, plus
/// `|zeta_hat(1/2 + i gamma_1)|` when a zero table is supplied.
pub fn zhat_symmetry(grid: &[ComplexValue], tol: f64, first_zero: Option<(f64, f64)>, pol: &PrecisionPolicy) -> Result<SuiteReport> {
    let mut rows = Vec::new();
    for &s in grid {
        let a = completed_riemann_zeta(s, pol)?;
        let b = completed_riemann_zeta(1.0 - s, pol)?;
        rows.push(CheckRow {
            label: "zhat-symmetry".into(),
            point: s,
            lhs: a,
            rhs: b,
            residual: (a - b).norm() / (1.0 + a.norm()),
            tolerance: tol,
        });
    }
    if let Some((gamma, zero_tol)) = first_zero {
        let s = c64(0.5, gamma);
        let v = completed_riemann_zeta(s, pol)?;
        rows.push(CheckRow {
            label: "zhat-first-zero".into(),
            point: s,
            lhs: v,
            rhs: c64(0.0, 0.0),
            residual: v.norm(),
            tolerance: zero_tol,
        });
    }
    Ok(SuiteReport {
        suite: Suite::ZhatSymmetry,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn subset_signs() {
        let subs = signed_subset_sums(&[c64(1.0, 0.0), c64(2.0, 0.0)]);
        let odd: Vec<f64> = subs.iter().filter(|x| x.1).map(|x| x.0.re).collect();
        let even: Vec<f64> = subs.iter().filter(|x| !x.1).map(|x| x.0.re).collect();
        assert_eq!(odd, vec![1.0, 2.0]);
        assert_eq!(even, vec![0.0, 3.0]);
    }

    #[test]
    fn rank_one_ladders() {
        let pol = PrecisionPolicy::default();
        let om = WeightVector::from_real(&[1.0]).unwrap();
        let pts = [c64(0.4, 0.3), c64(1.1, -0.5)];
        assert!(ladder_gamma(&om, &pts, 1e-8, &pol).unwrap().passed());
        assert!(ladder_sine(&om, &pts, 1e-8, &pol).unwrap().passed());
        let ss = [c64(2.0, 0.5)];
        assert!(ccc(&om, &ss, 1e-8, &pol).unwrap().passed());
        assert!(telescope(&om, &ss, 1e-8, &pol).unwrap().passed());
    }
}
