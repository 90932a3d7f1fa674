//! Bracketed scalar root finding.
//!
//! The workhorse is a bisection/Newton hybrid: Newton steps are taken
//! whenever they stay inside the current bracket and shrink it fast
//! enough, otherwise the step falls back to bisection. The bracket is
//! never lost, so convergence is guaranteed for continuous functions.

/// Result of a bracketed solve.
#[derive(Debug, Clone, Copy)]
pub struct Root {
    pub x: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Hybrid bisection/Newton on a sign-changing bracket `[a, b]`.
///
/// `f` returns `(value, derivative)`. Stops when `|value| <= ftol` or the
/// bracket width drops below machine resolution around the iterate.
pub fn newton_bisect<F>(mut f: F, a: f64, b: f64, ftol: f64) -> Result<Root, String>
where
    F: FnMut(f64) -> (f64, f64),
{
    let (mut xl, mut xh) = (a, b);
    let (fl, _) = f(xl);
    if fl == 0.0 {
        return Ok(Root {
            x: xl,
            residual: 0.0,
            iterations: 0,
        });
    }
    let (fh, _) = f(xh);
    if fh == 0.0 {
        return Ok(Root {
            x: xh,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fl * fh > 0.0 {
        return Err(format!("no sign change on [{a}, {b}]"));
    }
    if fl > 0.0 {
        std::mem::swap(&mut xl, &mut xh);
    }
    let mut x = 0.5 * (xl + xh);
    let mut dxold = (xh - xl).abs();
    let mut dx = dxold;
    let (mut fx, mut dfx) = f(x);
    for it in 0..200 {
        let newton_out_of_bracket = ((x - xh) * dfx - fx) * ((x - xl) * dfx - fx) > 0.0;
        let newton_too_slow = (2.0 * fx).abs() > (dxold * dfx).abs();
        if newton_out_of_bracket || newton_too_slow || dfx == 0.0 {
            dxold = dx;
            dx = 0.5 * (xh - xl);
            x = xl + dx;
            if x == xl {
                return Ok(Root {
                    x,
                    residual: fx,
                    iterations: it,
                });
            }
        } else {
            dxold = dx;
            dx = fx / dfx;
            let t = x;
            x -= dx;
            if t == x {
                return Ok(Root {
                    x,
                    residual: fx,
                    iterations: it,
                });
            }
        }
        let r = f(x);
        fx = r.0;
        dfx = r.1;
        if fx.abs() <= ftol {
            return Ok(Root {
                x,
                residual: fx,
                iterations: it,
            });
        }
        if fx < 0.0 {
            xl = x;
        } else {
            xh = x;
        }
    }
    Ok(Root {
        x,
        residual: fx,
        iterations: 200,
    })
}

/// Bisection-only solve on a sign-changing bracket (derivative-free).
pub fn bisect<F>(mut f: F, a: f64, b: f64, xtol: f64) -> Result<Root, String>
where
    F: FnMut(f64) -> f64,
{
    let (mut xl, mut xh) = (a, b);
    let fl = f(xl);
    if fl == 0.0 {
        return Ok(Root {
            x: xl,
            residual: 0.0,
            iterations: 0,
        });
    }
    let fh = f(xh);
    if fh == 0.0 {
        return Ok(Root {
            x: xh,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fl * fh > 0.0 {
        return Err(format!("no sign change on [{a}, {b}]"));
    }
    if fl > 0.0 {
        std::mem::swap(&mut xl, &mut xh);
    }
    let mut it = 0;
    loop {
        let xm = 0.5 * (xl + xh);
        let fm = f(xm);
        if fm == 0.0 || (xh - xl).abs() <= xtol || it >= 200 {
            return Ok(Root {
                x: xm,
                residual: fm,
                iterations: it,
            });
        }
        if fm < 0.0 {
            xl = xm;
        } else {
            xh = xm;
        }
        it += 1;
    }
}

/// Expand a bracket geometrically from `start` in direction `dir` until
/// `f` changes sign relative to `f(start + dir*step0)`, up to `limit`.
///
/// Returns the sign-changing bracket ordered so `bracket.0` is closer to
/// `start`.
pub fn expand_until_sign_change<F>(
    mut f: F,
    start: f64,
    step0: f64,
    dir: f64,
    limit: f64,
) -> Option<(f64, f64)>
where
    F: FnMut(f64) -> f64,
{
    let mut prev = start + dir * step0;
    let mut fprev = f(prev);
    if fprev == 0.0 {
        return Some((prev, prev));
    }
    let mut step = step0;
    loop {
        step *= 2.0;
        let mut next = start + dir * step;
        let past_limit = (next - start).abs() >= (limit - start).abs();
        if past_limit {
            next = limit;
        }
        let fnext = f(next);
        if fprev * fnext <= 0.0 {
            return Some((prev, next));
        }
        if past_limit {
            return None;
        }
        prev = next;
        fprev = fnext;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_root() {
        let r = newton_bisect(|x| (x * x * x - 2.0, 3.0 * x * x), 0.0, 2.0, 1e-14).unwrap();
        assert!((r.x - 2f64.cbrt()).abs() < 1e-12);
    }

    #[test]
    fn bisect_cosine() {
        let r = bisect(|x| x.cos(), 0.0, 3.0, 1e-13).unwrap();
        assert!((r.x - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn expansion_finds_sign_change() {
        let b = expand_until_sign_change(|x| x - 5.0, 0.0, 1e-3, 1.0, 100.0).unwrap();
        assert!(b.0 <= 5.0 && 5.0 <= b.1);
    }

    #[test]
    fn expansion_respects_limit() {
        assert!(expand_until_sign_change(|x| x + 1.0, 0.0, 1e-3, 1.0, 10.0).is_none());
    }

    #[test]
    fn no_sign_change_is_an_error() {
        assert!(newton_bisect(|x| (x * x + 1.0, 2.0 * x), -1.0, 1.0, 1e-12).is_err());
    }
}
