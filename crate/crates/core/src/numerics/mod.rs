//! Scalar numerics shared by every other module: principal complex powers,
//! Hurwitz/Riemann zeta with continuation, log-gamma, the prime sieve and
//! Gauss-Legendre quadrature.

mod gamma;
mod hurwitz;
mod primes;
pub mod quadrature;

pub use gamma::{gamma, log_gamma, rgamma, EULER_GAMMA};
pub use hurwitz::{bernoulli_even_scaled, hurwitz_zeta, riemann_zeta};
pub use primes::{primes_up_to, PrimeList};

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Complex scalar used throughout the crate.
pub type ComplexValue = Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

/// Accuracy targets and truncation caps for series, products and quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionPolicy {
    pub eps_abs: f64,
    pub eps_rel: f64,
    pub max_terms: usize,
    pub quad_points: usize,
}

/// Smallest absolute tolerance that binary64 can realistically honour.
pub const MIN_EPS_ABS: f64 = 3.552713678800501e-15; // 2^-48

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            eps_abs: 1e-10,
            eps_rel: 1e-10,
            max_terms: 32,
            quad_points: 20,
        }
    }
}

impl PrecisionPolicy {
    pub fn new(eps_abs: f64, eps_rel: f64, max_terms: usize, quad_points: usize) -> Result<Self> {
        let pol = PrecisionPolicy {
            eps_abs,
            eps_rel,
            max_terms,
            quad_points,
        };
        pol.validate()?;
        Ok(pol)
    }

    pub fn with_eps(eps_abs: f64) -> Result<Self> {
        let pol = PrecisionPolicy {
            eps_abs,
            eps_rel: eps_abs,
            ..Default::default()
        };
        pol.validate()?;
        Ok(pol)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps_abs.is_finite() && self.eps_abs >= MIN_EPS_ABS) {
            return Err(Error::domain(format!(
                "eps_abs must be at least 2^-48, got {}",
                self.eps_abs
            )));
        }
        if !(self.eps_rel.is_finite() && self.eps_rel > 0.0) {
            return Err(Error::domain("eps_rel must be positive"));
        }
        if self.max_terms < 8 {
            return Err(Error::domain("max_terms must be at least 8"));
        }
        if self.quad_points == 0 {
            return Err(Error::domain("quad_points must be positive"));
        }
        Ok(())
    }
}

/// `base^expo` on the principal branch, restricted to `Re(base) > 0`.
pub fn complex_power(base: ComplexValue, expo: ComplexValue) -> Result<ComplexValue> {
    if !(base.re > 0.0) {
        return Err(Error::domain(format!(
            "complex_power needs Re(base) > 0, got {base}"
        )));
    }
    Ok(cpow(base, expo))
}

/// Unchecked principal power for internal hot loops; callers guarantee
/// `Re(base) > 0`.
#[inline]
pub(crate) fn cpow(base: ComplexValue, expo: ComplexValue) -> ComplexValue {
    if expo.im == 0.0 && base.im == 0.0 {
        return c64(base.re.powf(expo.re), 0.0);
    }
    (expo * base.ln()).exp()
}

/// Parses complex literals such as `1.5`, `-2`, `0.3i`, `i`, `1+2i`, `1e-3-4.5i`.
pub fn parse_complex(text: &str) -> Result<ComplexValue> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse {
        line: 0,
        msg: format!("invalid complex literal '{text}'"),
    };
    if t.is_empty() {
        return Err(bad());
    }
    let imag_part = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => s.parse::<f64>().map_err(|_| bad()),
        }
    };
    if let Some(body) = t.strip_suffix(['i', 'j']) {
        // split at the last sign that is not the leading one and not an exponent sign
        let bytes = body.as_bytes();
        let mut split = None;
        for k in (1..bytes.len()).rev() {
            if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
                split = Some(k);
                break;
            }
        }
        match split {
            Some(k) => {
                let re = body[..k].parse::<f64>().map_err(|_| bad())?;
                let im = imag_part(&body[k..])?;
                Ok(c64(re, im))
            }
            None => Ok(c64(0.0, imag_part(body)?)),
        }
    } else {
        t.parse::<f64>().map(|re| c64(re, 0.0)).map_err(|_| bad())
    }
}
