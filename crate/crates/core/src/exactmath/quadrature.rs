//! Floating-point Gauss–Legendre quadrature.
//!
//! Independent oracle for the exact integration path: it never touches the
//! rational antiderivatives, evaluating the integrand numerically instead.
//! 16 nodes per axis integrate polynomials up to degree 31 exactly in f64,
//! far above the degree of any profile integrand, so agreement to 1e-9
//! relative is the expected behaviour, not a tuned tolerance.

use std::sync::OnceLock;

use super::{to_f64, BiPoly, LinForm, Rational};

const NODES: usize = 16;

/// Nodes and weights for [-1, 1], computed once by Newton iteration on the
/// Legendre polynomial recurrence.
fn gauss_legendre() -> &'static [(f64, f64)] {
    static TABLE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = NODES;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..64 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
        }
        out
    })
}

/// Value and derivative of the degree-n Legendre polynomial at x.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Estimates `∫_{u_lo}^{u_hi} ∫_{lo·t(u)}^{hi·t(u)} p(t(u), v) dv du`.
pub fn quadrature_check(
    p: &BiPoly,
    t_of_u: &LinForm,
    u_lo: &Rational,
    u_hi: &Rational,
    lo_frac: &Rational,
    hi_frac: &Rational,
) -> f64 {
    let gl = gauss_legendre();
    let (a, b) = (to_f64(u_lo), to_f64(u_hi));
    let (lo, hi) = (to_f64(lo_frac), to_f64(hi_frac));
    let mut total = 0.0;
    for (xu, wu) in gl {
        let u = 0.5 * (b - a) * xu + 0.5 * (a + b);
        let t = t_of_u.eval_f64(u);
        let (va, vb) = (lo * t, hi * t);
        let mut inner = 0.0;
        for (xv, wv) in gl {
            let v = 0.5 * (vb - va) * xv + 0.5 * (va + vb);
            inner += wv * p.eval_f64(t, v);
        }
        total += wu * 0.5 * (vb - va) * inner;
    }
    total * 0.5 * (b - a)
}
