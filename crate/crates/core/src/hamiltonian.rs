//! Function model for the two potentials F and G, validation of the
//! center hypotheses, and geometric queries on energy levels.

use crate::error::Error;
use crate::numerics::roots::{expand_until_sign_change, newton_bisect};
use crate::Result;
use serde::{Deserialize, Serialize};

/// Absolute residual tolerance for turning-point solves.
pub const ROOT_TOL: f64 = 1e-12;

/// Horizon used when scanning unbounded domains for critical points.
pub const SCAN_HORIZON: f64 = 1e6;

/// Closed family of one-variable functions with analytic derivatives up
/// to order 3.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum SmoothFunction {
    /// `c0 + c1 x + c2 x^2 + ...` (coefficients in ascending degree).
    Polynomial { coeffs: Vec<f64> },
    /// `1 - cos x`.
    TrigCos,
    /// `cosh x - 1`.
    Cosh,
    /// `sqrt(1 + x^2) - 1`.
    SqrtRelativistic,
    /// Translated slug potential `V(u0 + x) - V(u0)` on `(-u0, k)`, with
    /// `V(u) = -a/(1-m) u^{1-m} - b/(1-n) (k + u0 - u)^{1-n}` and the
    /// logarithmic limit when an exponent equals 1. Exponents `m = n = 1`
    /// give the log-potential; other exponents the power-law family.
    /// `translated-sum` is the same shape with free parameters.
    #[serde(alias = "log-potential", alias = "power-law")]
    TranslatedSum {
        a: f64,
        b: f64,
        m: f64,
        n: f64,
        u0: f64,
        k: f64,
    },
}

impl SmoothFunction {
    /// Admissible open domain.
    pub fn domain(&self) -> (f64, f64) {
        match self {
            SmoothFunction::TranslatedSum { u0, k, .. } => (-u0, *k),
            _ => (f64::NEG_INFINITY, f64::INFINITY),
        }
    }

    pub fn check_domain(&self, x: f64) -> Result<()> {
        let (lo, hi) = self.domain();
        if x <= lo || x >= hi {
            return Err(Error::DomainViolation { point: x, lo, hi });
        }
        Ok(())
    }

    /// Analytic derivative of order `order` (0..=3).
    pub fn deriv(&self, order: usize, x: f64) -> f64 {
        debug_assert!(order <= 3);
        match self {
            SmoothFunction::Polynomial { coeffs } => {
                // Horner on the shifted coefficients
                let mut acc = 0.0;
                for i in (order..coeffs.len()).rev() {
                    let mut c = coeffs[i];
                    for j in 0..order {
                        c *= (i - j) as f64;
                    }
                    acc = acc * x + c;
                }
                acc
            }
            SmoothFunction::TrigCos => match order {
                0 => 2.0 * (x / 2.0).sin().powi(2), // 1 - cos x, stable near 0
                1 => x.sin(),
                2 => x.cos(),
                _ => -x.sin(),
            },
            SmoothFunction::Cosh => match order {
                0 => 2.0 * (x / 2.0).sinh().powi(2), // cosh x - 1
                1 => x.sinh(),
                2 => x.cosh(),
                _ => x.sinh(),
            },
            SmoothFunction::SqrtRelativistic => {
                let s = (1.0 + x * x).sqrt();
                match order {
                    0 => x * x / (1.0 + s), // sqrt(1+x^2) - 1
                    1 => x / s,
                    2 => 1.0 / (s * s * s),
                    _ => -3.0 * x / (s * s * s * s * s),
                }
            }
            SmoothFunction::TranslatedSum { a, b, m, n, u0, k } => {
                let l = u0 + x; // distance to the left edge
                let r = k - x; // distance to the right edge
                match order {
                    0 => {
                        let left = if (*m - 1.0).abs() < 1e-12 {
                            // a ln(u0/(u0+x)) computed via ln(1 + x/u0)
                            -a * (x / u0).ln_1p()
                        } else {
                            -a / (1.0 - m) * (l.powf(1.0 - m) - u0.powf(1.0 - m))
                        };
                        let right = if (*n - 1.0).abs() < 1e-12 {
                            -b * (-x / k).ln_1p()
                        } else {
                            -b / (1.0 - n) * (r.powf(1.0 - n) - k.powf(1.0 - n))
                        };
                        left + right
                    }
                    1 => -a * l.powf(-m) + b * r.powf(-n),
                    2 => a * m * l.powf(-m - 1.0) + b * n * r.powf(-n - 1.0),
                    _ => {
                        -a * m * (m + 1.0) * l.powf(-m - 2.0) + b * n * (n + 1.0) * r.powf(-n - 2.0)
                    }
                }
            }
        }
    }

    pub fn value(&self, x: f64) -> f64 {
        self.deriv(0, x)
    }

    /// Whether the family is even by construction.
    pub fn is_even_by_construction(&self) -> bool {
        match self {
            SmoothFunction::Polynomial { coeffs } => coeffs
                .iter()
                .enumerate()
                .all(|(i, &c)| i % 2 == 0 || c == 0.0),
            SmoothFunction::TrigCos | SmoothFunction::Cosh | SmoothFunction::SqrtRelativistic => {
                true
            }
            SmoothFunction::TranslatedSum { a, b, m, n, u0, k } => a == b && m == n && u0 == k,
        }
    }
}

/// Pair (F, G) with validated center hypotheses; G is required even.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeparableHamiltonian {
    pub f: SmoothFunction,
    pub g: SmoothFunction,
    /// Tolerance for hypothesis residual checks.
    pub tolerance: f64,
}

impl SeparableHamiltonian {
    pub fn new(f: SmoothFunction, g: SmoothFunction) -> Self {
        SeparableHamiltonian {
            f,
            g,
            tolerance: 1e-10,
        }
    }

    pub fn energy(&self, x: f64, y: f64) -> f64 {
        self.f.value(x) + self.g.value(y)
    }
}

/// One hypothesis check with its measured residual.
#[derive(Debug, Clone, Serialize)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub residual: f64,
    pub pass: bool,
}

/// Report of the center-hypothesis validation.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<HypothesisCheck>,
    pub pass: bool,
}

/// Check the standing hypotheses: F(0)=G(0)=F'(0)=G'(0)=0, F''(0)>0,
/// G''(0)>0, and evenness of G (declared family shape plus 64 sampled
/// symmetric probe pairs).
pub fn validate_center(h: &SeparableHamiltonian) -> ValidationReport {
    let tol = h.tolerance;
    let mut checks = Vec::new();
    let mut zero = |name: &'static str, v: f64| {
        checks.push(HypothesisCheck {
            name,
            residual: v.abs(),
            pass: v.abs() <= tol,
        });
    };
    zero("F(0) = 0", h.f.value(0.0));
    zero("G(0) = 0", h.g.value(0.0));
    zero("F'(0) = 0", h.f.deriv(1, 0.0));
    zero("G'(0) = 0", h.g.deriv(1, 0.0));
    let f2 = h.f.deriv(2, 0.0);
    checks.push(HypothesisCheck {
        name: "F''(0) > 0",
        residual: f2,
        pass: f2 > 0.0,
    });
    let g2 = h.g.deriv(2, 0.0);
    checks.push(HypothesisCheck {
        name: "G''(0) > 0",
        residual: g2,
        pass: g2 > 0.0,
    });

    // evenness of G over the annulus-relevant range
    let (lo, hi) = h.g.domain();
    let reach = probe_reach(lo, hi);
    let mut worst: f64 = 0.0;
    for i in 1..=64 {
        let y = reach * i as f64 / 64.0;
        worst = worst.max((h.g.value(y) - h.g.value(-y)).abs());
    }
    let flag = h.g.is_even_by_construction();
    checks.push(HypothesisCheck {
        name: "G even (sampled + declared)",
        residual: worst,
        pass: flag && worst <= 1e-10,
    });

    let pass = checks.iter().all(|c| c.pass);
    ValidationReport { checks, pass }
}

fn probe_reach(lo: f64, hi: f64) -> f64 {
    if lo.is_finite() && hi.is_finite() {
        0.99 * lo.abs().min(hi.abs())
    } else {
        2.0
    }
}

/// Turning points of the level `H = E` on the axes.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct TurningPoints {
    pub x_minus: f64,
    pub x_plus: f64,
    pub y_plus: f64,
    pub energy: f64,
}

/// How the period annulus is bounded in energy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundaryKind {
    CriticalPointOfF,
    CriticalPointOfG,
    DomainEdge,
    Unbounded,
}

/// Upper energy bound of the period annulus.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct AnnulusBound {
    /// `f64::INFINITY` marks an unbounded annulus.
    pub e_star: f64,
    pub boundary: BoundaryKind,
}

/// Solve `func(x) = target` for the root nearest 0 in direction `dir`
/// (+1 or -1), bracketing by geometric expansion and polishing with the
/// Newton/bisection hybrid on the residual.
fn nearest_level_crossing(func: &SmoothFunction, target: f64, dir: f64, limit: f64) -> Option<f64> {
    let scale = if limit.is_finite() { limit.abs() } else { 1.0 };
    let step0 = 1e-9 * scale.max(1e-3);
    let lim = if limit.is_finite() {
        // stay strictly inside the open domain
        limit - dir.signum() * 1e-14 * scale
    } else {
        dir * SCAN_HORIZON
    };
    let (a, b) = expand_until_sign_change(|x| func.value(x) - target, 0.0, step0, dir, lim)?;
    let r = newton_bisect(
        |x| (func.value(x) - target, func.deriv(1, x)),
        a.min(b),
        a.max(b),
        ROOT_TOL,
    )
    .ok()?;
    Some(r.x)
}

/// One side of the well: the abscissa past which the level solve would
/// leave the monotone stretch, its energy, and what sits there.
#[derive(Debug, Clone, Copy)]
struct SideBound {
    x: f64,
    e: f64,
    kind: BoundaryKind,
}

/// Turning points `x_-(E) < 0 < x_+(E)` and `y_+(E) > 0`.
pub fn turning_points(h: &SeparableHamiltonian, energy: f64) -> Result<TurningPoints> {
    let bound = annulus_energy_bound(h);
    if energy <= 0.0 || energy >= bound.e_star {
        return Err(Error::EnergyOutOfAnnulus(energy));
    }
    let x_plus =
        monotone_level_solve(&h.f, energy, 1.0).ok_or(Error::EnergyOutOfAnnulus(energy))?;
    let x_minus =
        monotone_level_solve(&h.f, energy, -1.0).ok_or(Error::EnergyOutOfAnnulus(energy))?;
    let y_plus =
        monotone_level_solve(&h.g, energy, 1.0).ok_or(Error::EnergyOutOfAnnulus(energy))?;
    Ok(TurningPoints {
        x_minus,
        x_plus,
        y_plus,
        energy,
    })
}

/// Solve `func(x) = energy` on side `dir`, using that `func` is
/// strictly monotone between 0 and the side bound. Near-critical
/// energies are handled by the guaranteed bracket `(0, bound.x)`.
fn monotone_level_solve(func: &SmoothFunction, energy: f64, dir: f64) -> Option<f64> {
    let bound = side_bound(func, dir);
    if energy >= bound.e {
        return None;
    }
    if bound.e.is_finite() {
        let (lo, hi) = if dir > 0.0 {
            (0.0, bound.x)
        } else {
            (bound.x, 0.0)
        };
        return newton_bisect(
            |x| (func.value(x) - energy, func.deriv(1, x)),
            lo,
            hi,
            ROOT_TOL,
        )
        .ok()
        .map(|r| r.x);
    }
    nearest_level_crossing(func, energy, dir, bound.x)
}

/// First positive critical point of `func` on side `dir`, or the domain
/// edge limit, scanning the derivative on a log-spaced grid.
fn side_bound(func: &SmoothFunction, dir: f64) -> SideBound {
    let (lo, hi) = func.domain();
    let edge = if dir > 0.0 { hi } else { lo };
    let reach = if edge.is_finite() {
        edge.abs() * (1.0 - 1e-12)
    } else {
        SCAN_HORIZON
    };
    // log-spaced scan of the derivative for its first zero away from 0
    let mut prev = dir * 1e-9 * reach.clamp(1e-3, 1.0);
    let mut fprev = func.deriv(1, prev);
    let n = 400;
    let lmin = prev.abs().ln();
    let lmax = reach.ln();
    for i in 1..=n {
        let x = dir * (lmin + (lmax - lmin) * i as f64 / n as f64).exp();
        let fx = func.deriv(1, x);
        if fprev * fx <= 0.0 {
            let (a, b) = (prev.min(x), prev.max(x));
            if let Ok(r) = newton_bisect(|t| (func.deriv(1, t), func.deriv(2, t)), a, b, ROOT_TOL) {
                return SideBound {
                    x: r.x,
                    e: func.value(r.x),
                    kind: BoundaryKind::CriticalPointOfF,
                };
            }
        }
        prev = x;
        fprev = fx;
    }
    if edge.is_finite() {
        // no interior critical point: the edge limit bounds the annulus
        let x = edge - dir.signum() * 1e-12 * edge.abs().max(1.0);
        let v = func.value(x);
        if v.is_finite() && v < SCAN_HORIZON {
            return SideBound {
                x,
                e: v,
                kind: BoundaryKind::DomainEdge,
            };
        }
        return SideBound {
            x,
            e: f64::INFINITY,
            kind: BoundaryKind::Unbounded,
        };
    }
    SideBound {
        x: dir * SCAN_HORIZON,
        e: f64::INFINITY,
        kind: BoundaryKind::Unbounded,
    }
}

fn side_energy_bound(func: &SmoothFunction, dir: f64) -> (f64, BoundaryKind) {
    let b = side_bound(func, dir);
    (b.e, b.kind)
}

/// Least positive critical value of F or G (or domain-edge limit), the
/// energy at which the period annulus ends.
pub fn annulus_energy_bound(h: &SeparableHamiltonian) -> AnnulusBound {
    let mut best = (f64::INFINITY, BoundaryKind::Unbounded);
    for dir in [1.0, -1.0] {
        let (e, kind) = side_energy_bound(&h.f, dir);
        if e < best.0 {
            best = (e, kind);
        }
    }
    for dir in [1.0, -1.0] {
        let (e, kind) = side_energy_bound(&h.g, dir);
        if e < best.0 {
            let kind = if kind == BoundaryKind::CriticalPointOfF {
                BoundaryKind::CriticalPointOfG
            } else {
                kind
            };
            best = (e, kind);
        }
    }
    AnnulusBound {
        e_star: best.0,
        boundary: best.1,
    }
}

/// The abscissa `r` with `sign(r) = -sign(x0)` and `F(r) = F(x0)`,
/// nearest 0 on that side.
pub fn conjugate_point(f: &SmoothFunction, x0: f64) -> Result<f64> {
    f.check_domain(x0)?;
    let target = f.value(x0);
    let dir = -x0.signum();
    let bound = side_bound(f, dir);
    // tangent level: the opposite side is critical at the same height
    if bound.e.is_finite() && (bound.e - target).abs() <= 1e-9 * target.abs().max(1e-9) {
        return Ok(bound.x);
    }
    if target >= bound.e {
        return Err(Error::NoConjugate(target));
    }
    let mut x = if bound.e.is_finite() {
        let (lo, hi) = if dir > 0.0 {
            (0.0, bound.x)
        } else {
            (bound.x, 0.0)
        };
        newton_bisect(|t| (f.value(t) - target, f.deriv(1, t)), lo, hi, ROOT_TOL)
            .map_err(|_| Error::NoConjugate(target))?
            .x
    } else {
        nearest_level_crossing(f, target, dir, bound.x).ok_or(Error::NoConjugate(target))?
    };
    // polish to machine precision: downstream thresholds are rational
    // functions of this abscissa and inherit its accuracy
    for _ in 0..3 {
        let d = f.deriv(1, x);
        if d == 0.0 {
            break;
        }
        x -= (f.value(x) - target) / d;
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[f64]) -> SmoothFunction {
        SmoothFunction::Polynomial {
            coeffs: coeffs.to_vec(),
        }
    }

    fn half_square() -> SmoothFunction {
        poly(&[0.0, 0.0, 0.5])
    }

    #[test]
    fn linear_center_validates_with_zero_residuals() {
        let h = SeparableHamiltonian::new(half_square(), half_square());
        let report = validate_center(&h);
        assert!(report.pass);
        for c in report.checks.iter().take(4) {
            assert_eq!(c.residual, 0.0);
        }
    }

    #[test]
    fn cubic_quartic_family_validates() {
        // F = x^2/2 + x^3/3, G = y^2/2 + y^4/4
        let f = poly(&[0.0, 0.0, 0.5, 1.0 / 3.0]);
        let g = poly(&[0.0, 0.0, 0.5, 0.0, 0.25]);
        assert!(validate_center(&SeparableHamiltonian::new(f, g)).pass);
    }

    #[test]
    fn odd_cubic_g_fails_evenness_and_convexity() {
        let g = poly(&[0.0, 0.0, 0.0, 1.0]); // y^3
        let report = validate_center(&SeparableHamiltonian::new(half_square(), g));
        assert!(!report.pass);
        let by_name: Vec<_> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        assert!(by_name.contains(&"G''(0) > 0"));
        assert!(by_name.contains(&"G even (sampled + declared)"));
    }

    #[test]
    fn turning_points_linear() {
        let h = SeparableHamiltonian::new(half_square(), half_square());
        let tp = turning_points(&h, 2.0).unwrap();
        assert!((tp.x_plus - 2.0).abs() < 1e-10);
        assert!((tp.x_minus + 2.0).abs() < 1e-10);
        assert!((tp.y_plus - 2.0).abs() < 1e-10);
    }

    #[test]
    fn turning_point_quartic_g() {
        // G = y^2/2 + y^4/4, E = 3/4 -> y_+ = 1
        let h = SeparableHamiltonian::new(half_square(), poly(&[0.0, 0.0, 0.5, 0.0, 0.25]));
        let tp = turning_points(&h, 0.75).unwrap();
        assert!((tp.y_plus - 1.0).abs() < 1e-10);
    }

    #[test]
    fn turning_points_freire() {
        // F = x^2/2 + x^3/3, E = 1/6 is the boundary level; just below it
        // the turning points approach -1 and 1/2
        let f = poly(&[0.0, 0.0, 0.5, 1.0 / 3.0]);
        let h = SeparableHamiltonian::new(f, half_square());
        let tp = turning_points(&h, 1.0 / 6.0 - 1e-12).unwrap();
        assert!((tp.x_minus + 1.0).abs() < 1e-4);
        assert!((tp.x_plus - 0.5).abs() < 1e-4);
    }

    #[test]
    fn energy_out_of_annulus() {
        let f = poly(&[0.0, 0.0, 0.5, 1.0 / 3.0]);
        let h = SeparableHamiltonian::new(f, half_square());
        assert!(matches!(
            turning_points(&h, 0.5),
            Err(Error::EnergyOutOfAnnulus(_))
        ));
        assert!(matches!(
            turning_points(&h, -1.0),
            Err(Error::EnergyOutOfAnnulus(_))
        ));
    }

    #[test]
    fn annulus_bound_cubic() {
        let f = poly(&[0.0, 0.0, 0.5, 1.0 / 3.0]);
        let h = SeparableHamiltonian::new(f, half_square());
        let b = annulus_energy_bound(&h);
        assert!((b.e_star - 1.0 / 6.0).abs() < 1e-10);
        assert_eq!(b.boundary, BoundaryKind::CriticalPointOfF);
    }

    #[test]
    fn annulus_bound_unbounded() {
        let g = poly(&[0.0, 0.0, 0.5, 0.0, 0.25]);
        let h = SeparableHamiltonian::new(half_square(), g);
        let b = annulus_energy_bound(&h);
        assert!(b.e_star.is_infinite());
        assert_eq!(b.boundary, BoundaryKind::Unbounded);
    }

    #[test]
    fn annulus_bound_pendulum() {
        let h = SeparableHamiltonian::new(SmoothFunction::TrigCos, SmoothFunction::TrigCos);
        let b = annulus_energy_bound(&h);
        assert!((b.e_star - 2.0).abs() < 1e-9);
        assert_eq!(b.boundary, BoundaryKind::CriticalPointOfF);
    }

    #[test]
    fn conjugate_point_freire() {
        let f = poly(&[0.0, 0.0, 0.5, 1.0 / 3.0]);
        let r = conjugate_point(&f, -1.0).unwrap();
        assert!((r - 0.5).abs() < 1e-10);
    }

    #[test]
    fn conjugate_point_even() {
        let r = conjugate_point(&half_square(), 3.0).unwrap();
        assert!((r + 3.0).abs() < 1e-10);
    }

    #[test]
    fn conjugate_point_ab3() {
        // F with a = b = 3: conjugate of x1 = -1/3 is about 0.1958
        let f = poly(&[0.0, 0.0, 0.5, 1.0, 0.75]);
        let r = conjugate_point(&f, -1.0 / 3.0).unwrap();
        assert!((r - 0.1958).abs() < 1e-3, "r = {r}");
    }

    #[test]
    fn conjugate_point_none() {
        // F = x^2/2 + x^3/3: on the left branch F tops out at 1/6, so the
        // value F(1) = 5/6 is never reattained for x < 0
        let f = poly(&[0.0, 0.0, 0.5, 1.0 / 3.0]);
        assert!(matches!(
            conjugate_point(&f, 1.0),
            Err(Error::NoConjugate(_))
        ));
    }

    #[test]
    fn derivative_families_match_finite_differences() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let funcs = vec![
            poly(&[0.0, 0.0, 0.5, 0.7, -0.3, 0.11]),
            SmoothFunction::TrigCos,
            SmoothFunction::Cosh,
            SmoothFunction::SqrtRelativistic,
            SmoothFunction::TranslatedSum {
                a: 1.0,
                b: 2.0,
                m: 1.0,
                n: 1.0,
                u0: 1.0,
                k: 2.0,
            },
            SmoothFunction::TranslatedSum {
                a: 1.0,
                b: 1.0,
                m: 2.0,
                n: 1.5,
                u0: 1.0,
                k: 1.0,
            },
        ];
        for f in &funcs {
            let (lo, hi) = f.domain();
            let reach = if lo.is_finite() {
                0.6 * lo.abs().min(hi)
            } else {
                1.5
            };
            for _ in 0..20 {
                let x = rng.gen_range(-reach..reach);
                for order in 1..=3usize {
                    // step balances truncation against roundoff, which
                    // grows like eps/h^order
                    let h = [1e-6, 1e-5, 5e-4][order - 1] * (1.0 + x.abs());
                    let fd = match order {
                        1 => (f.value(x + h) - f.value(x - h)) / (2.0 * h),
                        2 => (f.value(x + h) - 2.0 * f.value(x) + f.value(x - h)) / (h * h),
                        _ => {
                            (f.value(x + 2.0 * h) - 2.0 * f.value(x + h) + 2.0 * f.value(x - h)
                                - f.value(x - 2.0 * h))
                                / (2.0 * h * h * h)
                        }
                    };
                    let exact = f.deriv(order, x);
                    let scale = 1.0 + exact.abs().max(fd.abs());
                    assert!(
                        (fd - exact).abs() / scale < 2e-4,
                        "{f:?} order {order} at {x}: fd {fd} vs {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn turning_points_monotone_in_energy() {
        let f = poly(&[0.0, 0.0, 0.5, 1.0 / 3.0]);
        let h = SeparableHamiltonian::new(f, half_square());
        let mut prev: Option<TurningPoints> = None;
        for i in 1..20 {
            let e = 1.0 / 6.0 * i as f64 / 20.0;
            let tp = turning_points(&h, e).unwrap();
            assert!(tp.x_minus < 0.0 && tp.x_plus > 0.0 && tp.y_plus > 0.0);
            if let Some(p) = prev {
                assert!(tp.x_plus > p.x_plus && tp.x_minus < p.x_minus);
            }
            prev = Some(tp);
        }
    }

    #[test]
    fn domain_violation_is_an_error() {
        let f = SmoothFunction::TranslatedSum {
            a: 1.0,
            b: 1.0,
            m: 1.0,
            n: 1.0,
            u0: 1.0,
            k: 1.0,
        };
        assert!(f.check_domain(1.5).is_err());
        assert!(f.check_domain(0.5).is_ok());
    }
}
