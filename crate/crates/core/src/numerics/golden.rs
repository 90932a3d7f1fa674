//! Golden-section search for a one-dimensional extremum.

/// Minimize `f` on `[a, b]` to absolute tolerance `xtol` in the abscissa.
///
/// Returns `(x_min, f_min)`. The bracket endpoints are included in the
/// comparison, so a monotone `f` reports the winning endpoint.
pub fn minimize<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, xtol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let (mut lo, mut hi) = (a, b);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while (hi - lo).abs() > xtol {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let fa = f(a);
    let fb = f(b);
    let (mut xm, mut fm) = if f1 < f2 { (x1, f1) } else { (x2, f2) };
    if fa < fm {
        xm = a;
        fm = fa;
    }
    if fb < fm {
        xm = b;
        fm = fb;
    }
    (xm, fm)
}

/// Maximize `f` on `[a, b]`; returns `(x_max, f_max)`.
pub fn maximize<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, xtol: f64) -> (f64, f64) {
    let (x, v) = minimize(|t| -f(t), a, b, xtol);
    (x, -v)
}

/// Dense scan over `n` points followed by a golden-section polish around
/// the best sample. Robust for multimodal functions.
pub fn scan_then_minimize<F: FnMut(f64) -> f64>(
    mut f: F,
    a: f64,
    b: f64,
    n: usize,
    xtol: f64,
) -> (f64, f64) {
    let mut best_i = 0usize;
    let mut best = f64::INFINITY;
    for i in 0..=n {
        let x = a + (b - a) * i as f64 / n as f64;
        let v = f(x);
        if v < best {
            best = v;
            best_i = i;
        }
    }
    let lo = a + (b - a) * best_i.saturating_sub(1) as f64 / n as f64;
    let hi = a + (b - a) * (best_i + 1).min(n) as f64 / n as f64;
    minimize(f, lo, hi, xtol)
}
