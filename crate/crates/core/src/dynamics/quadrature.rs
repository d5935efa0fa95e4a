//! Adaptive Simpson quadrature with Richardson correction.

use crate::error::DynamicsError;

const MAX_DEPTH: u32 = 48;
const MAX_EVALS: usize = 2_000_000;

struct Budget {
    evals: usize,
}

fn simpson(a: f64, fa: f64, fm: f64, b: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    budget: &mut Budget,
) -> Option<f64> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    budget.evals += 2;
    let left = simpson(a, fa, flm, m, fm);
    let right = simpson(m, fm, frm, b, fb);
    let delta = left + right - whole;
    // Below a few ulps of the panel value the estimate cannot improve.
    let floor = 4.0 * f64::EPSILON * (left.abs() + right.abs());
    if delta.abs() <= 15.0 * tol.max(floor) || (m - a).abs() <= f64::EPSILON * a.abs().max(1.0) {
        return Some(left + right + delta / 15.0);
    }
    if depth == 0 || budget.evals > MAX_EVALS || !delta.is_finite() {
        return None;
    }
    let l = recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1, budget)?;
    let r = recurse(
        f,
        m,
        fm,
        rm,
        frm,
        b,
        fb,
        right,
        0.5 * tol,
        depth - 1,
        budget,
    )?;
    Some(l + r)
}

/// `∫_a^b f` to absolute tolerance `tol`. Exact (up to rounding) for
/// polynomials of degree three or less.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<f64, DynamicsError> {
    if a == b {
        return Ok(0.0);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, fa, fm, b, fb);
    let mut budget = Budget { evals: 3 };
    recurse(&f, a, fa, m, fm, b, fb, whole, tol, MAX_DEPTH, &mut budget)
        .filter(|v| v.is_finite())
        .ok_or(DynamicsError::QuadratureFailure { a, b, tol })
}

/// Like [`adaptive_simpson`], splitting `[a, b]` at the given interior
/// points first so that kinks and jumps never sit inside a panel. A jump at
/// a split belongs to the right-hand piece; each piece is sampled on its
/// half-open interior so a step is integrated exactly.
pub fn integrate_piecewise<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    splits: &[f64],
    tol: f64,
) -> Result<f64, DynamicsError> {
    let mut edges = vec![a];
    edges.extend(splits.iter().copied().filter(|&s| s > a && s < b));
    edges.push(b);
    let width = b - a;
    let mut total = 0.0;
    for w in edges.windows(2) {
        let share = if width > 0.0 {
            (w[1] - w[0]) / width
        } else {
            1.0
        };
        let (lo, hi) = (w[0].min(w[1]), w[0].max(w[1]));
        let inside = |x: f64| f(x.clamp(lo, hi.next_down().max(lo)));
        total += adaptive_simpson(inside, w[0], w[1], tol * share)?;
    }
    Ok(total)
}
