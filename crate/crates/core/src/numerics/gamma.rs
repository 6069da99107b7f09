use super::{c64, hurwitz::bernoulli_even_scaled, ComplexValue};
use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_7;

fn nonpositive_integer(s: ComplexValue) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round()
}

/// Principal branch of `log Gamma(s)`.
///
/// Stirling's series at `w = s + n`, with `n` chosen so that `|w| >= 15` and
/// `Re(w) >= 1/2`, minus the principal logarithms of `s, s+1, ..., s+n-1`.
/// The result is the branch analytic off the negative real axis.
pub fn log_gamma(s: ComplexValue) -> Result<ComplexValue> {
    if nonpositive_integer(s) {
        return Err(Error::Pole(format!("Gamma at s = {}", s.re)));
    }
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::domain("non-finite argument to log_gamma"));
    }
    let mut w = s;
    let mut shift_log = c64(0.0, 0.0);
    while w.norm() < 15.0 || w.re < 0.5 {
        shift_log += w.ln();
        w += 1.0;
    }

    let bern = bernoulli_even_scaled();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = c64(0.0, 0.0);
    let mut pw = inv;
    // B_2k / (2k (2k-1) w^{2k-1}) = (B_2k/(2k)!) * (2k-2)! / w^{2k-1}
    let mut fact = 1.0f64; // (2k-2)!
    for k in 1..=14 {
        let term = pw * (bern[k] * fact);
        series += term;
        if term.norm() < 1e-17 * series.norm() {
            break;
        }
        let m = 2.0 * k as f64;
        fact *= (m - 1.0) * m;
        pw *= inv2;
    }
    let stirling = (w - 0.5) * w.ln() - w + HALF_LN_2PI + series;
    Ok(stirling - shift_log)
}

/// `Gamma(s)`; errors at the poles.
pub fn gamma(s: ComplexValue) -> Result<ComplexValue> {
    Ok(log_gamma(s)?.exp())
}

/// `1 / Gamma(s)`, entire: exactly zero at the non-positive integers.
pub fn rgamma(s: ComplexValue) -> ComplexValue {
    if nonpositive_integer(s) {
        return c64(0.0, 0.0);
    }
    match log_gamma(s) {
        Ok(l) => (-l).exp(),
        Err(_) => c64(0.0, 0.0),
    }
}
