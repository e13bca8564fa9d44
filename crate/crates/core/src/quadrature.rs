//! Arclength of sampled curves on the hyperboloid.
//!
//! Composite midpoint quadrature of the Minkowski speed, with the step
//! refined until the relative change drops below the requested tolerance.
//! This is verification scaffolding: the closed forms elsewhere in the crate
//! are checked against it, never derived from it.

use crate::hyperboloid::{mdot, Vec4};
use crate::math;

/// Length of a curve given by `f(t) -> (point, velocity)` over `[t0, t1]`.
///
/// The velocity must be the analytic derivative of the point path; the speed
/// integrand is `sqrt(<v,v>_M)`, which is real for curves on the sheet.
pub fn curve_length<F>(f: F, t0: f64, t1: f64, rel_tol: f64) -> f64
where
    F: Fn(f64) -> (Vec4, Vec4),
{
    let speed = |t: f64| {
        let (_, v) = f(t);
        math::sqrt(mdot(v, v).max(0.0))
    };
    let mut n = 16usize;
    let mut prev = midpoint_sum(&speed, t0, t1, n);
    loop {
        n *= 2;
        let cur = midpoint_sum(&speed, t0, t1, n);
        let denom = math::abs(cur).max(1e-300);
        if math::abs(cur - prev) / denom < rel_tol || n >= 1 << 22 {
            return cur;
        }
        prev = cur;
    }
}

fn midpoint_sum<F: Fn(f64) -> f64>(speed: &F, t0: f64, t1: f64, n: usize) -> f64 {
    let h = (t1 - t0) / n as f64;
    let mut acc = 0.0;
    for i in 0..n {
        let t = t0 + (i as f64 + 0.5) * h;
        acc += speed(t);
    }
    acc * h
}
