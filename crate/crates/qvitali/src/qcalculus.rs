//! The q-derivative and a quadrature oracle for the q-integral.
//!
//! `q_integrate` evaluates `\int_a^b f(x) dx / (1 + (1-q) x)` with
//! adaptive Simpson and an interval-halving error estimate. It is kept
//! deliberately independent of the closed forms in [`crate::qmeasure`]:
//! every closed-form measure is validated against it.

use crate::error::{Error, Result};
use crate::qparam::QParam;

/// Adaptive-quadrature controls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    abs_tol: f64,
    max_depth: u32,
}

impl Quadrature {
    pub fn new(abs_tol: f64, max_depth: u32) -> Result<Self> {
        if !(abs_tol > 0.0) {
            return Err(Error::precondition(format!(
                "quadrature abs_tol must be positive, got {abs_tol}"
            )));
        }
        if max_depth == 0 {
            return Err(Error::precondition("quadrature max_depth must be >= 1"));
        }
        Ok(Quadrature { abs_tol, max_depth })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_depth(&self) -> u32 {
        self.max_depth
    }
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            abs_tol: 1e-10,
            max_depth: 40,
        }
    }
}

/// Quadrature result. `converged` is false when some subinterval hit
/// `max_depth` before meeting its share of `abs_tol`; the value is still
/// the best available estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralEstimate {
    pub value: f64,
    pub converged: bool,
}

/// Lower endpoints closer to lambda than this are rejected: the improper
/// integral diverges at the boundary and divergence is handled
/// symbolically by the measure layer.
const LAMBDA_GUARD: f64 = 1e-12;

/// q-derivative `(D_q f)(x) = (1 + (1-q) x) f'(x)`, with `f'` estimated
/// by the central difference at step `h`.
pub fn q_derivative<F>(f: F, x: f64, q: &QParam, h: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(h > 0.0) {
        return Err(Error::precondition(format!("step h must be positive, got {h}")));
    }
    let factor = 1.0 + q.one_minus_q_f64() * x;
    if !q.is_classical() && !(factor > 0.0) {
        return Err(Error::domain(format!(
            "q_derivative undefined at x = {x} <= lambda = {}",
            q.lambda_f64()
        )));
    }
    Ok(factor * (f(x + h) - f(x - h)) / (2.0 * h))
}

/// Default central-difference step for callers without an opinion.
pub const DEFAULT_DERIVATIVE_STEP: f64 = 1e-6;

/// q-integral `\int_a^b f(x) d_q x = \int_a^b f(x) dx / (1 + (1-q) x)`.
///
/// Requires `lambda < a <= b` with `a` at least `1e-12` above the
/// boundary; the integral is improper (divergent) at `a = lambda`.
pub fn q_integrate<F>(f: F, a: f64, b: f64, q: &QParam, quad: &Quadrature) -> Result<IntegralEstimate>
where
    F: Fn(f64) -> f64,
{
    if !(a <= b) {
        return Err(Error::precondition(format!(
            "integration bounds must satisfy a <= b, got [{a}, {b}]"
        )));
    }
    let omq = q.one_minus_q_f64();
    if !q.is_classical() {
        let lambda = q.lambda_f64();
        if !(a - lambda > LAMBDA_GUARD) {
            return Err(Error::domain(format!(
                "lower bound {a} too close to lambda = {lambda}"
            )));
        }
    }
    if a == b {
        return Ok(IntegralEstimate {
            value: 0.0,
            converged: true,
        });
    }

    // Kernel 1/(1 + (1-q) x) written as 1/((1-q)(x - lambda)): identical
    // since lambda = -1/(1-q), but x - lambda stays exact near the
    // boundary where 1 + (1-q) x cancels catastrophically.
    let classical = q.is_classical();
    let lambda = q.lambda_f64();
    let g = move |x: f64| {
        if classical {
            f(x)
        } else {
            f(x) / (omq * (x - lambda))
        }
    };
    Ok(global_simpson(&g, a, b, quad))
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// One panel with a Richardson-corrected value and an error estimate
/// from comparing the single-panel rule against its two-panel split.
struct Segment {
    a: f64,
    m: f64,
    b: f64,
    ga: f64,
    gm: f64,
    gb: f64,
    value: f64,
    err: f64,
    depth: u32,
    splittable: bool,
}

impl Segment {
    fn build<G: Fn(f64) -> f64>(g: &G, a: f64, m: f64, b: f64, ga: f64, gm: f64, gb: f64, depth: u32, max_depth: u32) -> Self {
        let whole = simpson(a, b, ga, gm, gb);
        let ml = 0.5 * (a + m);
        let mr = 0.5 * (m + b);
        if ml <= a || mr >= b {
            // Width at float resolution; nothing left to refine.
            return Segment { a, m, b, ga, gm, gb, value: whole, err: 0.0, depth, splittable: false };
        }
        let halves = simpson(a, m, ga, g(ml), gm) + simpson(m, b, gm, g(mr), gb);
        let diff = halves - whole;
        Segment {
            a,
            m,
            b,
            ga,
            gm,
            gb,
            value: halves + diff / 15.0,
            err: (diff / 15.0).abs(),
            depth,
            splittable: depth < max_depth,
        }
    }
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err && self.a == other.a
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Max-heap by error estimate; ties broken by position so heap
        // behavior is fully deterministic.
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Hard cap on panel count, independent of max_depth, so adversarial
/// integrands terminate.
const MAX_SEGMENTS: usize = 200_000;

/// Globally adaptive Simpson: keep splitting the worst panel until the
/// summed error estimate meets the budget. Unlike the textbook
/// depth-recursive variant this does not starve deep zooms toward a
/// near-singular endpoint, where per-leaf halved tolerances fall below
/// f64 resolution.
fn global_simpson<G: Fn(f64) -> f64>(g: &G, a: f64, b: f64, quad: &Quadrature) -> IntegralEstimate {
    use std::collections::BinaryHeap;

    let m = 0.5 * (a + b);
    let root = Segment::build(g, a, m, b, g(a), g(m), g(b), 0, quad.max_depth);

    let mut heap = BinaryHeap::new();
    let mut frozen: Vec<Segment> = Vec::new();
    let mut heap_err = root.err;
    let mut frozen_err = 0.0;
    heap.push(root);

    while heap_err + frozen_err > quad.abs_tol && frozen.len() + heap.len() < MAX_SEGMENTS {
        let seg = match heap.pop() {
            Some(s) => s,
            None => break,
        };
        heap_err -= seg.err;
        if !seg.splittable {
            frozen_err += seg.err;
            frozen.push(seg);
            if heap.is_empty() {
                break;
            }
            continue;
        }
        let Segment { a, m, b, ga, gm, gb, depth, .. } = seg;
        let ml = 0.5 * (a + m);
        let mr = 0.5 * (m + b);
        let left = Segment::build(g, a, ml, m, ga, g(ml), gm, depth + 1, quad.max_depth);
        let right = Segment::build(g, m, mr, b, gm, g(mr), gb, depth + 1, quad.max_depth);
        heap_err += left.err + right.err;
        heap.push(left);
        heap.push(right);
    }

    let mut segments: Vec<Segment> = heap.into_vec();
    segments.extend(frozen);
    segments.sort_by(|s, t| s.a.total_cmp(&t.a));
    let value: f64 = segments.iter().map(|s| s.value).sum();
    let total_err: f64 = segments.iter().map(|s| s.err).sum();
    let converged = value.is_finite() && total_err <= quad.abs_tol;
    IntegralEstimate { value, converged }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalgebra::{deformed_f64, q_exp};
    use crate::rational::ratio;

    fn q(n: i64, d: i64) -> QParam {
        QParam::new(ratio(n, d)).unwrap()
    }

    #[test]
    fn derivative_of_deformed_number_is_one() {
        let half = q(1, 2);
        let f = |t: f64| deformed_f64(t, &half).unwrap();
        let d = q_derivative(f, 1.0, &half, 1e-6).unwrap();
        assert!((d - 1.0).abs() <= 1e-6, "got {d}");
    }

    #[test]
    fn derivative_of_identity_at_origin() {
        let d = q_derivative(|t| t, 0.0, &q(2, 7), 1e-6).unwrap();
        assert!((d - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn q_exponential_is_an_eigenfunction() {
        let half = q(1, 2);
        let f = |t: f64| q_exp(t, &half);
        let d = q_derivative(f, 0.5, &half, 1e-6).unwrap();
        let expected = q_exp(0.5, &half);
        assert!((d - expected).abs() <= 1e-5, "got {d}, expected {expected}");
    }

    #[test]
    fn derivative_domain_and_step_checks() {
        let half = q(1, 2);
        assert!(matches!(
            q_derivative(|t| t, -2.0, &half, 1e-6),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            q_derivative(|t| t, 0.0, &half, 0.0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn unit_integrand_matches_closed_form() {
        let est = q_integrate(|_| 1.0, 0.0, 1.0, &q(1, 2), &Quadrature::default()).unwrap();
        assert!(est.converged);
        let expected = 2.0 * 1.5_f64.ln();
        assert!((est.value - expected).abs() <= 1e-9, "got {}", est.value);
    }

    #[test]
    fn empty_interval_and_classical_length() {
        let est = q_integrate(|_| 1.0, 3.25, 3.25, &q(2, 3), &Quadrature::default()).unwrap();
        assert_eq!(est.value, 0.0);

        let est = q_integrate(|_| 1.0, 0.0, 1.0, &QParam::classical(), &Quadrature::default()).unwrap();
        assert!((est.value - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn rejects_bounds_at_or_below_lambda() {
        let half = q(1, 2);
        for a in [-2.0, -2.5, -2.0 + 1e-13] {
            assert!(matches!(
                q_integrate(|_| 1.0, a, 1.0, &half, &Quadrature::default()),
                Err(Error::Domain(_))
            ));
        }
        assert!(matches!(
            q_integrate(|_| 1.0, 1.0, 0.0, &half, &Quadrature::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn near_singular_long_interval_converges() {
        // Lower bound 1e-3 above lambda, upper bound 1000: the integrand
        // spikes to ~2000 at the left end.
        let half = q(1, 2);
        let a = -2.0 + 1e-3;
        let b = 1000.0;
        let est = q_integrate(|_| 1.0, a, b, &half, &Quadrature::default()).unwrap();
        assert!(est.converged);
        let expected = 2.0 * ((1.0 + 0.5 * b) / (1.0 + 0.5 * a)).ln();
        assert!(
            (est.value - expected).abs() <= 1e-8 * (1.0 + expected.abs()),
            "got {}, expected {expected}",
            est.value
        );
    }

    #[test]
    fn reports_nonconvergence_when_depth_exhausted() {
        let shallow = Quadrature::new(1e-14, 2).unwrap();
        let est = q_integrate(|x: f64| (50.0 * x).sin().abs(), 0.0, 10.0, &q(1, 2), &shallow).unwrap();
        assert!(!est.converged);
    }

    #[test]
    fn quadrature_construction_validates() {
        assert!(Quadrature::new(0.0, 10).is_err());
        assert!(Quadrature::new(1e-8, 0).is_err());
        assert!(Quadrature::new(1e-8, 10).is_ok());
    }
}
