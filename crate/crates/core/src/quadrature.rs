//! Adaptive Simpson quadrature with interval bisection.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    /// Sum of the Richardson error estimates over accepted panels.
    pub error_bound: f64,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const DEFAULT_MAX_DEPTH: u32 = 60;

/// Integrate `f` over `[lo, hi]` to absolute tolerance `tol`.
///
/// A panel is accepted when |S(left) + S(right) - S(whole)| <= 15·tol_panel,
/// with the tolerance halved at each bisection. Panels still failing at
/// `max_depth` are accepted as is and reported through
/// [`Error::Quadrature`] together with the partial estimate.
pub fn adaptive_simpson<F>(f: F, lo: f64, hi: f64, tol: f64, max_depth: u32) -> Result<Integral>
where
    F: Fn(f64) -> f64,
{
    if lo == hi {
        return Ok(Integral { value: 0.0, error_bound: 0.0 });
    }
    let (flo, fmid, fhi) = (f(lo), f(0.5 * (lo + hi)), f(hi));
    let whole = simpson(lo, hi, flo, fmid, fhi);
    let mut acc = Accumulator::default();
    recurse(&f, lo, hi, flo, fmid, fhi, whole, tol, max_depth, &mut acc);
    if !acc.value.is_finite() {
        return Err(Error::Quadrature { estimate: acc.value, error_bound: f64::INFINITY });
    }
    if acc.unconverged {
        return Err(Error::Quadrature { estimate: acc.value, error_bound: acc.error });
    }
    Ok(Integral { value: acc.value, error_bound: acc.error })
}

#[derive(Default)]
struct Accumulator {
    value: f64,
    error: f64,
    unconverged: bool,
}

fn simpson(lo: f64, hi: f64, flo: f64, fmid: f64, fhi: f64) -> f64 {
    (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    flo: f64,
    fmid: f64,
    fhi: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    acc: &mut Accumulator,
) {
    let mid = 0.5 * (lo + hi);
    let (lm, rm) = (0.5 * (lo + mid), 0.5 * (mid + hi));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(lo, mid, flo, flm, fmid);
    let right = simpson(mid, hi, fmid, frm, fhi);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || depth == 0 || !delta.is_finite() {
        if depth == 0 && delta.abs() > 15.0 * tol {
            acc.unconverged = true;
        }
        acc.value += left + right + delta / 15.0;
        acc.error += delta.abs() / 15.0;
        return;
    }
    recurse(f, lo, mid, flo, flm, fmid, left, 0.5 * tol, depth - 1, acc);
    recurse(f, mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth - 1, acc);
}
