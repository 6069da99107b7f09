//! Truncated formal power series with complex coefficients, and the multiple
//! Bernoulli polynomials `B_n(z, w)` defined by
//!
//! ```text
//! x^r e^{-z x} / prod_j (1 - e^{-w_j x}) = sum_n B_n(z, w) x^n / n!
//! ```

use crate::barnes::WeightVector;
use crate::error::{Error, Result};
use crate::numerics::{c64, ComplexValue};
use std::ops::Index;

/// Power series truncated to `order` coefficients (`x^0 .. x^{order-1}`).
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<ComplexValue>,
}

impl PowerSeries {
    /// Pads with zeros or truncates `coeffs` to exactly `order` entries.
    pub fn new(mut coeffs: Vec<ComplexValue>, order: usize) -> Self {
        coeffs.resize(order, c64(0.0, 0.0));
        PowerSeries { coeffs }
    }

    pub fn from_real(coeffs: &[f64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| c64(c, 0.0)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_real(&[1.0], order)
    }

    /// `exp(c x) = sum (c x)^n / n!`.
    pub fn exp_linear(c: ComplexValue, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut term = c64(1.0, 0.0);
        for n in 0..order {
            coeffs.push(term);
            term *= c / (n + 1) as f64;
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[ComplexValue] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<ComplexValue> {
        self.coeffs
    }

    pub fn scale(&self, k: ComplexValue) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&c| c * k).collect(),
        }
    }

    /// Evaluates the truncated polynomial at `x` (Horner).
    pub fn eval(&self, x: ComplexValue) -> ComplexValue {
        self.coeffs
            .iter()
            .rev()
            .fold(c64(0.0, 0.0), |acc, &c| acc * x + c)
    }
}

impl Index<usize> for PowerSeries {
    type Output = ComplexValue;
    fn index(&self, i: usize) -> &ComplexValue {
        &self.coeffs[i]
    }
}

/// Cauchy product truncated to the common order.
pub fn series_mul(a: &PowerSeries, b: &PowerSeries) -> Result<PowerSeries> {
    if a.order() != b.order() {
        return Err(Error::Shape(format!(
            "series orders differ: {} vs {}",
            a.order(),
            b.order()
        )));
    }
    let n = a.order();
    let mut out = vec![c64(0.0, 0.0); n];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai == c64(0.0, 0.0) {
            continue;
        }
        for (j, &bj) in b.coeffs[..n - i].iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    Ok(PowerSeries { coeffs: out })
}

/// Multiplicative inverse; the constant term must be nonzero.
pub fn series_inv(a: &PowerSeries) -> Result<PowerSeries> {
    let n = a.order();
    if n == 0 {
        return Ok(a.clone());
    }
    let a0 = a.coeffs[0];
    if a0 == c64(0.0, 0.0) {
        return Err(Error::domain("series_inv: constant term is zero"));
    }
    let inv0 = a0.inv();
    let mut b = vec![c64(0.0, 0.0); n];
    b[0] = inv0;
    for k in 1..n {
        let mut acc = c64(0.0, 0.0);
        for j in 1..=k {
            acc += a.coeffs[j] * b[k - j];
        }
        b[k] = -acc * inv0;
    }
    Ok(PowerSeries { coeffs: b })
}

/// `B_0(z, w) ..= B_N(z, w)` for one base point and weight vector.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    pub z: ComplexValue,
    pub omega: Vec<ComplexValue>,
    pub values: Vec<ComplexValue>,
    /// `B_n / n!`, i.e. the raw coefficients of the generating function.
    scaled: Vec<ComplexValue>,
}

impl BernoulliTable {
    pub fn rank(&self) -> usize {
        self.omega.len()
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    /// `B_n(z, w)`.
    pub fn get(&self, n: usize) -> ComplexValue {
        self.values[n]
    }

    /// `B_n(z, w) / n!`.
    pub fn scaled(&self, n: usize) -> ComplexValue {
        self.scaled[n]
    }

    pub fn scaled_values(&self) -> &[ComplexValue] {
        &self.scaled
    }
}

/// Multiple Bernoulli polynomials `B_0(z, w) ..= B_N(z, w)`.
pub fn multiple_bernoulli(z: ComplexValue, omega: &WeightVector, n: usize) -> BernoulliTable {
    bernoulli_for_weights(z, omega.as_slice(), n)
}

/// Same as [`multiple_bernoulli`] but over a raw weight slice; the empty
/// slice gives `B_n(z, ()) = (-z)^n`.
pub(crate) fn bernoulli_for_weights(z: ComplexValue, omega: &[ComplexValue], n: usize) -> BernoulliTable {
    let order = n + 1;
    // product of (w x) / (1 - e^{-w x}); each factor is the inverse of
    // (1 - e^{-w x}) / (w x) = sum_k (-w x)^k / (k+1)!
    let mut acc = PowerSeries::exp_linear(-z, order);
    for &w in omega {
        let mut c = Vec::with_capacity(order);
        let mut term = c64(1.0, 0.0); // (-w)^k / (k+1)!
        for k in 0..order {
            c.push(term);
            term *= -w / (k + 2) as f64;
        }
        let factor = series_inv(&PowerSeries { coeffs: c }).expect("unit constant term");
        acc = series_mul(&acc, &factor).expect("equal orders");
    }
    let norm = omega.iter().fold(c64(1.0, 0.0), |p, &w| p * w).inv();
    let scaled: Vec<ComplexValue> = acc.coeffs.iter().map(|&c| c * norm).collect();
    let mut values = Vec::with_capacity(order);
    let mut fact = 1.0f64;
    for (k, &c) in scaled.iter().enumerate() {
        if k > 0 {
            fact *= k as f64;
        }
        values.push(c * fact);
    }
    BernoulliTable {
        z,
        omega: omega.to_vec(),
        values,
        scaled,
    }
}

/// `B_n(z, w)` for a single index.
pub fn multiple_bernoulli_value(z: ComplexValue, omega: &[ComplexValue], n: usize) -> ComplexValue {
    bernoulli_for_weights(z, omega, n).get(n)
}
