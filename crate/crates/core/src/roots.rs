//! Bracketing and bisection for first-crossing times.

use crate::error::Result;

/// Bisection stops once the bracket is narrower than this (in units of `1/Gamma`).
pub const BISECTION_TOL: f64 = 1e-9;

/// Successive bracket ends tried before declaring that no crossing exists
/// (in units of `1/Gamma`).
pub const BRACKET_ENDS: [f64; 4] = [50.0, 100.0, 200.0, 400.0];

/// Narrows `[lo, hi]` with `alive(lo) && !alive(hi)` to width `tol` and
/// returns its midpoint.
pub fn bisect<F>(mut alive: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<bool>,
{
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if alive(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// First time at which a non-increasing `margin` stops being positive.
///
/// `None` when the margin is already non-positive at `t = 0` or stays
/// positive through the last bracket end. `time_unit` rescales the bracket
/// ends and tolerance (pass `1 / Gamma`).
pub fn first_crossing<F>(mut margin: F, time_unit: f64) -> Result<Option<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    if margin(0.0)? <= 0.0 {
        return Ok(None);
    }
    let mut lo = 0.0;
    for &end in &BRACKET_ENDS {
        let hi = end * time_unit;
        if margin(hi)? <= 0.0 {
            let t = bisect(|t| Ok(margin(t)? > 0.0), lo, hi, BISECTION_TOL * time_unit)?;
            return Ok(Some(t));
        }
        lo = hi;
    }
    Ok(None)
}
