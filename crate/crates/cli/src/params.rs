use hzeta::barnes::WeightVector;
use hzeta::error::{Error, Result};
use hzeta::numerics::{c64, parse_complex, ComplexValue};
use hzeta::sequences::SequenceSpec;

const GRID_SLACK: f64 = 1e-12;
const MAX_GRID_POINTS: usize = 1_000_000;

fn usage(msg: impl Into<String>) -> Error {
    Error::Parse { line: 0, msg: msg.into() }
}

/// `start:stop:step` (real, stop included when on-grid), a single complex
/// literal, or a comma-separated list of complex literals.
pub fn parse_points(text: &str) -> Result<Vec<ComplexValue>> {
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [single] => single.split(',').map(|t| parse_complex(t.trim())).collect(),
        [start, stop, step] => {
            let num = |t: &str| t.trim().parse::<f64>().map_err(|_| usage(format!("grid `{text}`: `{t}` is not a real number")));
            let (a, b, h) = (num(start)?, num(stop)?, num(step)?);
            if !(a.is_finite() && b.is_finite() && h.is_finite()) || h == 0.0 || (b - a) * h < 0.0 {
                return Err(usage(format!("grid `{text}`: step must be nonzero and point from start to stop")));
            }
            let count = ((b - a) / h + GRID_SLACK).floor();
            if count >= MAX_GRID_POINTS as f64 {
                return Err(usage(format!("grid `{text}` has more than {MAX_GRID_POINTS} points")));
            }
            Ok((0..=count as usize).map(|k| c64(a + k as f64 * h, 0.0)).collect())
        }
        _ => Err(usage(format!("`{text}` is neither a point list nor start:stop:step"))),
    }
}

pub fn parse_weights(text: &str) -> Result<WeightVector> {
    let values = text.split(',').map(|t| parse_complex(t.trim())).collect::<Result<Vec<_>>>()?;
    WeightVector::new(values)
}

/// Empty string is the rank-0 vector.
pub fn parse_weights_any_rank(text: &str) -> Result<Vec<ComplexValue>> {
    if text.trim().is_empty() || text.trim() == "()" {
        return Ok(Vec::new());
    }
    Ok(parse_weights(text)?.as_slice().to_vec())
}

pub fn parse_counts(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| usage(format!("`{t}` is not a count"))))
        .collect()
}

pub fn parse_spec(text: &str) -> Result<SequenceSpec> {
    text.parse()
}

/// Rejects flags that the chosen target does not read, and reports missing ones.
pub fn check_flags(context: &str, given: &[(&str, bool)], allowed: &[&str], required: &[&str]) -> Result<()> {
    for (name, present) in given {
        if *present && !allowed.contains(name) {
            return Err(usage(format!("{context} does not accept --{name}")));
        }
    }
    for name in required {
        if !given.iter().any(|(n, p)| n == name && *p) {
            return Err(usage(format!("{context} needs --{name}")));
        }
    }
    Ok(())
}
