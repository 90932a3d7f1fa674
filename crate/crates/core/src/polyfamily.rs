//! The cubic-quartic family `H = x²/2 + a x³/3 + b x⁴/4 + y²/2 + c y⁴/4`:
//! normalization from raw coefficients, the `A/B/P/Q` polynomial
//! machinery behind the factored criterion
//! `M = (x⁴y⁴/24)(A(x)P(y) − B(x)Q(y))`, the monotonicity thresholds
//! `c0`/`c1`, and the full case classifier.

use crate::error::Error;
use crate::hamiltonian::{conjugate_point, SeparableHamiltonian, SmoothFunction};
use crate::numerics::golden;
use crate::numerics::poly::Poly;
use crate::Result;
use serde::{Deserialize, Serialize};

const ROOT_TOL: f64 = 1e-12;

/// Normalized family parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl FamilyParams {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        FamilyParams { a, b, c }
    }

    /// `F(x) = x²/2 + a x³/3 + b x⁴/4` as a polynomial.
    pub fn f_poly(&self) -> Poly {
        Poly::new(vec![0.0, 0.0, 0.5, self.a / 3.0, self.b / 4.0])
    }

    pub fn f_smooth(&self) -> SmoothFunction {
        SmoothFunction::Polynomial {
            coeffs: vec![0.0, 0.0, 0.5, self.a / 3.0, self.b / 4.0],
        }
    }

    pub fn g_smooth(&self) -> SmoothFunction {
        SmoothFunction::Polynomial {
            coeffs: vec![0.0, 0.0, 0.5, 0.0, self.c / 4.0],
        }
    }

    pub fn hamiltonian(&self) -> SeparableHamiltonian {
        SeparableHamiltonian::new(self.f_smooth(), self.g_smooth())
    }
}

/// Raw system `H = a1 x²/2 + a2 x³/3 + a3 x⁴/4 + b1 y²/2 + b2 y⁴/4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormalizationInput {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub b1: f64,
    pub b2: f64,
}

/// Result of rescaling a raw system to the normalized family.
///
/// Raw and normalized dynamics are related by `E_norm = E_raw / a1` and
/// `T_raw(E_raw) = T_norm(E_raw / a1) / sqrt(a1 b1)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Normalization {
    pub params: FamilyParams,
    /// Divide raw energies by this to get normalized energies.
    pub energy_scale: f64,
    /// Divide normalized periods by this to get raw periods.
    pub time_scale: f64,
}

pub fn normalize(n: NormalizationInput) -> Result<Normalization> {
    if !(n.a1 > 0.0 && n.b1 > 0.0) {
        return Err(Error::NonPositiveLinearPart { a1: n.a1, b1: n.b1 });
    }
    Ok(Normalization {
        params: FamilyParams::new(n.a2 / n.a1, n.a3 / n.a1, n.a1 * n.b2 / (n.b1 * n.b1)),
        energy_scale: n.a1,
        time_scale: (n.a1 * n.b1).sqrt(),
    })
}

/// The polynomials entering the factored criterion
/// `24 M / (x⁴ y⁴) = A(x) P(y) − B(x) Q(y)`.
#[derive(Debug, Clone)]
pub struct Abpq {
    pub a_poly: Poly,
    /// `B = b_factors.0 · b_factors.1² · b_factors.2`.
    pub b_factors: (Poly, Poly, Poly),
    pub b_poly: Poly,
    c: f64,
}

impl Abpq {
    pub fn eval_a(&self, x: f64) -> f64 {
        self.a_poly.eval(x)
    }

    pub fn eval_b(&self, x: f64) -> f64 {
        self.b_poly.eval(x)
    }

    /// `P(y) = (1 + c y²)² (2 + c y²)`.
    pub fn eval_p(&self, y: f64) -> f64 {
        let u = self.c * y * y;
        (1.0 + u) * (1.0 + u) * (2.0 + u)
    }

    /// `Q(y) = c (3 + c y²)`.
    pub fn eval_q(&self, y: f64) -> f64 {
        self.c * (3.0 + self.c * y * y)
    }

    /// `A(x)/B(x)`, the function whose extrema locate the thresholds.
    pub fn ratio(&self, x: f64) -> f64 {
        self.a_poly.eval(x) / self.b_poly.eval(x)
    }

    /// `σ(x) = 2A(x) − 3cB(x)`.
    pub fn sigma(&self) -> Poly {
        self.a_poly.scale(2.0).sub(&self.b_poly.scale(3.0 * self.c))
    }
}

pub fn abpq(p: &FamilyParams) -> Abpq {
    let (a, b, c) = (p.a, p.b, p.c);
    let a_poly = Poly::new(vec![
        10.0 * a * a - 9.0 * b,
        a * (30.0 * b + 4.0 * a * a),
        b * (36.0 * b + 16.0 * a * a),
        24.0 * a * b * b,
        9.0 * b * b * b,
    ]);
    let f1 = Poly::new(vec![6.0, 4.0 * a, 3.0 * b]);
    let f2 = Poly::new(vec![1.0, a, b]);
    let f3 = Poly::new(vec![1.0, 2.0 * a, 3.0 * b]);
    let b_poly = f1.mul(&f2).mul(&f2).mul(&f3);
    Abpq {
        a_poly,
        b_factors: (f1, f2, f3),
        b_poly,
        c,
    }
}

/// Critical-point geometry of `F` for the family.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyGeometry {
    /// Discriminant `a² − 4b` of `p(x) = 1 + a x + b x²` (`F' = x·p`).
    pub delta: f64,
    /// Real roots of `p`, ascending.
    pub crit_roots: Vec<f64>,
    /// The critical point whose level bounds the period annulus.
    pub x0: Option<f64>,
    /// Conjugate point: opposite side of 0, same `F` level as `x0`.
    pub r0: Option<f64>,
    /// `F(x0)`, or infinity when the annulus is unbounded.
    pub e_star: f64,
}

pub fn geometry(p: &FamilyParams) -> FamilyGeometry {
    let delta = p.a * p.a - 4.0 * p.b;
    let f = p.f_poly();
    let crit_roots: Vec<f64> = if p.b == 0.0 {
        if p.a == 0.0 {
            Vec::new()
        } else {
            vec![-1.0 / p.a]
        }
    } else if delta >= 0.0 {
        let s = delta.sqrt();
        let mut r = vec![(-p.a - s) / (2.0 * p.b), (-p.a + s) / (2.0 * p.b)];
        r.sort_by(|u, v| u.partial_cmp(v).unwrap());
        r.dedup_by(|u, v| (*u - *v).abs() < ROOT_TOL);
        r
    } else {
        Vec::new()
    };
    if crit_roots.is_empty() {
        return FamilyGeometry {
            delta,
            crit_roots,
            x0: None,
            r0: None,
            e_star: f64::INFINITY,
        };
    }
    // boundary root: the critical point with the smaller F level, ties
    // broken toward negative x
    let mut x0 = crit_roots[0];
    for &r in &crit_roots[1..] {
        let (fr, f0) = (f.eval(r), f.eval(x0));
        if fr < f0 - ROOT_TOL || ((fr - f0).abs() <= ROOT_TOL && r < x0) {
            x0 = r;
        }
    }
    let e_star = f.eval(x0);
    let r0 = conjugate_point(&p.f_smooth(), x0).ok();
    FamilyGeometry {
        delta,
        crit_roots,
        x0: Some(x0),
        r0,
        e_star,
    }
}

/// Real roots of a quadratic (or degenerate linear) factor.
fn quadratic_roots(f: &Poly) -> Vec<f64> {
    let c = &f.0;
    let (q0, q1, q2) = (
        c[0],
        c.get(1).copied().unwrap_or(0.0),
        c.get(2).copied().unwrap_or(0.0),
    );
    if q2 == 0.0 {
        return if q1 == 0.0 { vec![] } else { vec![-q0 / q1] };
    }
    let disc = q1 * q1 - 4.0 * q2 * q0;
    if disc < 0.0 {
        return vec![];
    }
    // Citardauq pairing avoids cancellation in the small root
    let s = -0.5 * (q1 + q1.signum() * disc.sqrt());
    if s == 0.0 {
        return vec![0.0];
    }
    vec![s / q2, q0 / s]
}

/// The open interval around 0 on which `B > 0` (clipped to `[lo, hi]`).
///
/// Roots come from the quadratic factors of `B` rather than the expanded
/// sextic: the squared middle factor makes the product non-squarefree,
/// which defeats Sturm bracketing.
fn b_positive_component(ab: &Abpq, lo: f64, hi: f64) -> (f64, f64) {
    let (f1, f2, f3) = &ab.b_factors;
    let mut roots: Vec<f64> = quadratic_roots(f1);
    roots.extend(quadratic_roots(f2));
    roots.extend(quadratic_roots(f3));
    roots.retain(|r| r.abs() > ROOT_TOL);
    let mut left = lo;
    let mut right = hi;
    let mut clipped = (false, false);
    for r in roots {
        if r < 0.0 && r > left {
            left = r;
            clipped.0 = true;
        }
        if r > 0.0 && r < right {
            right = r;
            clipped.1 = true;
        }
    }
    // stay strictly inside the component: A/B blows up at roots of B
    let inset = 1e-9 * (right - left);
    if clipped.0 {
        left += inset;
    }
    if clipped.1 {
        right -= inset;
    }
    (left, right)
}

/// Threshold pair `(c0, c1)` for the cases that define both:
/// C (`b = 0`), D (`Δ ≥ 0, b ≠ 0`), and G.i (`a²/4 < b ≤ a²/3`).
pub fn thresholds(p: &FamilyParams, g: &FamilyGeometry) -> Result<(f64, f64)> {
    let ab = abpq(p);
    let c1 = 2.0 * ab.eval_a(0.0) / (3.0 * ab.eval_b(0.0));
    let c0 = if p.b == 0.0 && p.a != 0.0 {
        let r0 =
            g.r0.ok_or_else(|| Error::CaseMismatch("missing conjugate point".into()))?;
        2.0 * ab.eval_a(r0) / (3.0 * ab.eval_b(r0))
    } else if p.b != 0.0 && g.delta >= 0.0 {
        let (x0, r0) = match (g.x0, g.r0) {
            (Some(x0), Some(r0)) => (x0, r0),
            _ => {
                return Err(Error::CaseMismatch(
                    "annulus is not critically bounded".into(),
                ))
            }
        };
        let (r, _) = ratio_argmin(&ab, x0.min(r0), x0.max(r0));
        2.0 * ab.eval_a(r) / (3.0 * ab.eval_b(r))
    } else if p.a != 0.0 && g.delta < 0.0 && p.b <= p.a * p.a / 3.0 {
        // G.i: evaluate at the conjugate of the first root of A
        let x1 = a_root_near_origin(p, &ab)?;
        let x0 = conjugate_point(&p.f_smooth(), x1)
            .map_err(|_| Error::CaseMismatch("no conjugate for the A-root".into()))?;
        2.0 * ab.eval_a(x0) / (3.0 * ab.eval_b(x0))
    } else {
        return Err(Error::CaseMismatch(format!(
            "no threshold defined at a={}, b={}",
            p.a, p.b
        )));
    };
    Ok((c0, c1))
}

/// Argmin of `A/B` on the `B > 0` component of `[lo, hi]` around 0.
/// Returns the abscissa and whether it sits on the interval boundary.
fn ratio_argmin(ab: &Abpq, lo: f64, hi: f64) -> (f64, bool) {
    let (left, right) = b_positive_component(ab, lo, hi);
    let (x, _) = golden::scan_then_minimize(|t| ab.ratio(t), left, right, 10_000, 1e-10);
    let width = right - left;
    let boundary = x - left < 1e-6 * width || right - x < 1e-6 * width;
    (x, boundary)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremumKind {
    Min,
    Max,
}

/// Extremum of `f = A/B` on `[lo, hi]` by dense scan plus
/// golden-section polish. The flag reports an extremum pinned to the
/// interval boundary.
pub fn f_extremum(p: &FamilyParams, lo: f64, hi: f64, kind: ExtremumKind) -> (f64, bool) {
    let ab = abpq(p);
    let obj = |x: f64| match kind {
        ExtremumKind::Min => ab.ratio(x),
        ExtremumKind::Max => -ab.ratio(x),
    };
    let (x, _) = golden::scan_then_minimize(obj, lo, hi, 10_000, 1e-10);
    let width = hi - lo;
    let boundary = x - lo < 1e-6 * width || hi - x < 1e-6 * width;
    (x, boundary)
}

/// First root of `A` on each side of 0, keeping the one with the lower
/// `F` level (the level that closes off the certified region first).
fn a_root_near_origin(p: &FamilyParams, ab: &Abpq) -> Result<f64> {
    let g = geometry(p);
    let (lo, hi) = annulus_x_range(p, &g);
    pick_min_f_root(&p.f_poly(), &ab.a_poly.real_roots_in(lo, hi, ROOT_TOL))
}

/// x-extent of the period annulus (finite stand-in when unbounded).
fn annulus_x_range(p: &FamilyParams, g: &FamilyGeometry) -> (f64, f64) {
    match (g.x0, g.r0) {
        (Some(x0), Some(r0)) => (x0.min(r0), x0.max(r0)),
        _ => {
            let w = 50.0 / p.b.abs().max(p.a.abs()).max(1.0).sqrt();
            (-w, w)
        }
    }
}

fn pick_min_f_root(f: &Poly, roots: &[f64]) -> Result<f64> {
    let neg = roots.iter().rev().find(|r| **r < -ROOT_TOL);
    let pos = roots.iter().find(|r| **r > ROOT_TOL);
    match (neg, pos) {
        (None, None) => Err(Error::NoRootInAnnulus),
        (Some(&r), None) | (None, Some(&r)) => Ok(r),
        (Some(&rn), Some(&rp)) => Ok(if f.eval(rn) <= f.eval(rp) { rn } else { rp }),
    }
}

/// Root `x_c` of `σ(x) = 2A(x) − 3cB(x)` nearest 0, choosing between
/// the sides by the lower `F` level.
pub fn sigma_root(p: &FamilyParams) -> Result<f64> {
    let ab = abpq(p);
    let g = geometry(p);
    let (lo, hi) = annulus_x_range(p, &g);
    let pad = 1e-9 * (hi - lo);
    let roots = ab.sigma().real_roots_in(lo - pad, hi + pad, ROOT_TOL);
    pick_min_f_root(&p.f_poly(), &roots)
}

/// Result of solving the tangency equation
/// `A(x_m)/B(x_m) = Q(y_m)/P(y_m)` with `G(y_m) = F(x_m)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Tangency {
    pub c0: f64,
    pub x_m: f64,
    /// `F(x_m)`, the certified energy bound for cases E.ii / G.ii.
    pub e0: f64,
}

/// Interior maximum `x_m` of `A/B` for the Δ < 0 cases.
fn interior_maximum(p: &FamilyParams) -> (f64, f64) {
    let ab = abpq(p);
    let w = 20.0 / p.b.max(1e-12).sqrt();
    let (lo, hi) = if p.a == 0.0 {
        // even case: the maximum lies right of the positive root of A
        let x0 = ab
            .a_poly
            .real_roots_in(0.0, w, ROOT_TOL)
            .first()
            .copied()
            .unwrap_or(0.0);
        (x0, x0 + w)
    } else {
        (-w, w)
    };
    let (x_m, _) = f_extremum(p, lo, hi, ExtremumKind::Max);
    (x_m, ab.ratio(x_m))
}

/// Solve for the tangency threshold `c0` (cases E.ii / G.ii).
pub fn tangency_c0(p: &FamilyParams) -> Result<Tangency> {
    let (x_m, f_m) = interior_maximum(p);
    let e0 = p.f_poly().eval(x_m);
    let c0 = tangency_solve(f_m, e0)?;
    Ok(Tangency { c0, x_m, e0 })
}

/// Bisection on `c` of `f_m − Q(y_m(c))/P(y_m(c))`, where `y_m(c)` is
/// the positive solution of `y²/2 + c y⁴/4 = e0`.
fn tangency_solve(f_m: f64, e0: f64) -> Result<f64> {
    if f_m <= 0.0 || e0 <= 0.0 {
        return Err(Error::NoBracket(f_m));
    }
    let residual = |c: f64| {
        let y2 = ((1.0 + 4.0 * c * e0).sqrt() - 1.0) / c;
        let u = c * y2;
        let q = c * (3.0 + u);
        let pv = (1.0 + u) * (1.0 + u) * (2.0 + u);
        f_m - q / pv
    };
    let mut hi = 1e-3;
    while residual(hi) > 0.0 {
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::NoBracket(hi));
        }
    }
    let mut lo = hi / 2.0;
    while residual(lo) < 0.0 {
        lo /= 2.0;
        if lo < 1e-12 {
            break;
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if residual(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-7 {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Case labels of the classification theorem for the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseLabel {
    A,
    B,
    C,
    D,
    EI,
    EII,
    FI,
    FII,
    FCritical,
    GI,
    GII,
    Unclassified,
}

impl CaseLabel {
    pub fn tag(&self) -> &'static str {
        match self {
            CaseLabel::A => "A",
            CaseLabel::B => "B",
            CaseLabel::C => "C",
            CaseLabel::D => "D",
            CaseLabel::EI => "E.i",
            CaseLabel::EII => "E.ii",
            CaseLabel::FI => "F.i",
            CaseLabel::FII => "F.ii",
            CaseLabel::FCritical => "F.critical",
            CaseLabel::GI => "G.i",
            CaseLabel::GII => "G.ii",
            CaseLabel::Unclassified => "unclassified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Constant,
    Increasing,
    Decreasing,
    IndeterminateNearOrigin,
    OutsideTheorem,
    Unclassified,
}

/// Full classification record for one parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyClassification {
    pub params: FamilyParams,
    pub case: CaseLabel,
    pub verdict: Verdict,
    /// Upper end of the certified energy interval `(0, e0)`; infinite
    /// for the globally monotone/constant cases; absent otherwise.
    pub e0: Option<f64>,
    pub c0: Option<f64>,
    pub c1: Option<f64>,
    pub geometry: FamilyGeometry,
    pub note: Option<String>,
}

impl FamilyClassification {
    fn new(p: &FamilyParams, case: CaseLabel, verdict: Verdict) -> Self {
        FamilyClassification {
            params: *p,
            case,
            verdict,
            e0: None,
            c0: None,
            c1: None,
            geometry: geometry(p),
            note: None,
        }
    }

    fn with_e0(mut self, e0: f64) -> Self {
        self.e0 = Some(e0);
        self
    }

    fn with_thresholds(mut self, c0: Option<f64>, c1: Option<f64>) -> Self {
        self.c0 = c0;
        self.c1 = c1;
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Classify a parameter point. Total: parameter points not covered by
/// the theorem come back as `Unclassified`/`OutsideTheorem` with a note
/// naming the nearest covered case.
pub fn classify(p: &FamilyParams) -> FamilyClassification {
    let (a, b, c) = (p.a, p.b, p.c);
    if c < 0.0 {
        return FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::OutsideTheorem)
            .with_note("c < 0 lies outside the classification");
    }
    if a == 0.0 && b == 0.0 {
        return if c == 0.0 {
            FamilyClassification::new(p, CaseLabel::A, Verdict::Constant).with_e0(f64::INFINITY)
        } else {
            FamilyClassification::new(p, CaseLabel::B, Verdict::Decreasing).with_e0(f64::INFINITY)
        };
    }
    let g = geometry(p);
    let ab = abpq(p);
    if b == 0.0 {
        // a ≠ 0: case C up to the conjugate-point threshold
        let (c0, c1) = match thresholds(p, &g) {
            Ok(v) => v,
            Err(_) => {
                return FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                    .with_note("degenerate geometry near case C")
            }
        };
        return if c <= c0 {
            FamilyClassification::new(p, CaseLabel::C, Verdict::Increasing)
                .with_e0(g.e_star)
                .with_thresholds(Some(c0), Some(c1))
        } else {
            FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                .with_thresholds(Some(c0), Some(c1))
                .with_note(format!("nearest case C: c exceeds the threshold c0 = {c0}"))
        };
    }
    if g.delta >= 0.0 {
        // b ≠ 0 with real critical pair: case D
        let (c0, c1) = match thresholds(p, &g) {
            Ok(v) => v,
            Err(_) => {
                return FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                    .with_note("degenerate geometry near case D")
            }
        };
        return if c <= c0 {
            FamilyClassification::new(p, CaseLabel::D, Verdict::Increasing)
                .with_e0(g.e_star)
                .with_thresholds(Some(c0), Some(c1))
        } else {
            FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                .with_thresholds(Some(c0), Some(c1))
                .with_note(format!("nearest case D: c exceeds the threshold c0 = {c0}"))
        };
    }
    // Δ < 0 from here on (so b > a²/4 > 0, annulus unbounded)
    if a == 0.0 {
        if c == 0.0 {
            // E.i: decreasing up to the level of the positive root of A
            return match a_root_near_origin(p, &ab) {
                Ok(x0) => {
                    let x0 = x0.abs(); // A is even here; report the positive root
                    FamilyClassification::new(p, CaseLabel::EI, Verdict::Decreasing)
                        .with_e0(p.f_poly().eval(x0))
                        .with_note(format!("A vanishes at x0 = {x0}"))
                }
                Err(_) => {
                    FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                        .with_note("nearest case E.i: no root of A found")
                }
            };
        }
        return match tangency_c0(p) {
            Ok(t) if c >= t.c0 => FamilyClassification::new(p, CaseLabel::EII, Verdict::Decreasing)
                .with_e0(t.e0)
                .with_thresholds(Some(t.c0), None),
            Ok(t) => FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                .with_thresholds(Some(t.c0), None)
                .with_note(format!(
                    "nearest case E.ii: c below the tangency threshold c0 = {}",
                    t.c0
                )),
            Err(_) => FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                .with_note("nearest case E.ii: tangency equation has no bracket"),
        };
    }
    // a ≠ 0, Δ < 0
    if c == 0.0 {
        let critical = 10.0 * a * a / 9.0;
        if b == critical {
            return FamilyClassification::new(
                p,
                CaseLabel::FCritical,
                Verdict::IndeterminateNearOrigin,
            )
            .with_note("A(0) = 0: the criterion sign is not defined near the origin");
        }
        let (case, verdict) = if b < critical {
            (CaseLabel::FI, Verdict::Increasing)
        } else {
            (CaseLabel::FII, Verdict::Decreasing)
        };
        return match a_root_near_origin(p, &ab) {
            Ok(x1) => FamilyClassification::new(p, case, verdict)
                .with_e0(p.f_poly().eval(x1))
                .with_note(format!("A vanishes at x1 = {x1}")),
            Err(_) => FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                .with_note("nearest case F: no root of A found"),
        };
    }
    if b <= a * a / 3.0 {
        // G.i: threshold at the conjugate of the first A-root
        let x1 = match a_root_near_origin(p, &ab) {
            Ok(x) => x,
            Err(_) => {
                return FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                    .with_note("nearest case G.i: no root of A found")
            }
        };
        let x0 = match conjugate_point(&p.f_smooth(), x1) {
            Ok(x) => x,
            Err(_) => {
                return FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                    .with_note("nearest case G.i: A-root has no conjugate")
            }
        };
        if ab.eval_b(x0) <= 0.0 {
            return FamilyClassification::new(p, CaseLabel::GI, Verdict::IndeterminateNearOrigin)
                .with_note("B(x0) is not positive; the threshold formula does not apply");
        }
        let c0 = 2.0 * ab.eval_a(x0) / (3.0 * ab.eval_b(x0));
        let c1 = 2.0 * ab.eval_a(0.0) / (3.0 * ab.eval_b(0.0));
        return if c <= c0 {
            FamilyClassification::new(p, CaseLabel::GI, Verdict::Increasing)
                .with_e0(p.f_poly().eval(x1))
                .with_thresholds(Some(c0), Some(c1))
        } else {
            FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
                .with_thresholds(Some(c0), Some(c1))
                .with_note(format!(
                    "nearest case G.i: c exceeds the threshold c0 = {c0}"
                ))
        };
    }
    // G.ii: b > a²/3, tangency threshold
    match tangency_c0(p) {
        Ok(t) if c >= t.c0 => FamilyClassification::new(p, CaseLabel::GII, Verdict::Decreasing)
            .with_e0(t.e0)
            .with_thresholds(Some(t.c0), None),
        Ok(t) => FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
            .with_thresholds(Some(t.c0), None)
            .with_note(format!(
                "nearest case G.ii: c below the tangency threshold c0 = {}",
                t.c0
            )),
        Err(_) => FamilyClassification::new(p, CaseLabel::Unclassified, Verdict::Unclassified)
            .with_note("nearest case G.ii: tangency equation has no bracket"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;

    fn params(a: f64, b: f64, c: f64) -> FamilyParams {
        FamilyParams::new(a, b, c)
    }

    #[test]
    fn normalize_identity_and_scalings() {
        let n = normalize(NormalizationInput {
            a1: 1.0,
            a2: 0.0,
            a3: 0.0,
            b1: 1.0,
            b2: 0.0,
        })
        .unwrap();
        assert_eq!(n.params, params(0.0, 0.0, 0.0));
        let k = 3.0;
        let n = normalize(NormalizationInput {
            a1: k,
            a2: k,
            a3: 0.0,
            b1: 1.0,
            b2: 1.0,
        })
        .unwrap();
        assert_eq!(n.params, params(1.0, 0.0, k));
        let n = normalize(NormalizationInput {
            a1: 2.0,
            a2: 4.0,
            a3: 6.0,
            b1: 1.0,
            b2: 0.5,
        })
        .unwrap();
        assert_eq!(n.params, params(2.0, 3.0, 1.0));
        assert!(normalize(NormalizationInput {
            a1: -1.0,
            a2: 0.0,
            a3: 0.0,
            b1: 1.0,
            b2: 0.0
        })
        .is_err());
    }

    #[test]
    fn abpq_origin_invariants() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let p = params(
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
                rng.gen_range(-3.0..3.0),
            );
            let ab = abpq(&p);
            assert!((ab.eval_a(0.0) - (10.0 * p.a * p.a - 9.0 * p.b)).abs() < 1e-12);
            assert_eq!(ab.eval_b(0.0), 6.0);
            assert_eq!(ab.eval_p(0.0), 2.0);
            assert!((ab.eval_q(0.0) - 3.0 * p.c).abs() < 1e-14);
        }
    }

    #[test]
    fn abpq_known_forms() {
        // a=1, b=0: A = 10 + 4x, B = (6+4x)(1+x)²(1+2x)
        let ab = abpq(&params(1.0, 0.0, 0.0));
        assert_eq!(&ab.a_poly.0[..2], &[10.0, 4.0]);
        assert!(ab.a_poly.degree() <= 1);
        let x = 0.3;
        let expect = (6.0 + 4.0 * x) * (1.0 + x) * (1.0 + x) * (1.0 + 2.0 * x);
        assert!((ab.eval_b(x) - expect).abs() < 1e-12);
        // a=0, b=1: A = 9(x⁴ + 4x² − 1)
        let ab = abpq(&params(0.0, 1.0, 0.0));
        assert_eq!(ab.a_poly.0, vec![-9.0, 0.0, 36.0, 0.0, 9.0]);
        // a=b=3: A(−1/3) = 0
        let ab = abpq(&params(3.0, 3.0, 0.0));
        assert!(ab.eval_a(-1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn factored_criterion_identity() {
        // 24 M / (x⁴ y⁴) = A·P − B·Q against the direct M evaluation
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let p = params(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let h = p.hamiltonian();
            let ab = abpq(&p);
            for _ in 0..100 {
                let x: f64 = rng.gen_range(-0.5..0.5);
                let y: f64 = rng.gen_range(-0.5..0.5);
                if x.abs() < 1e-3 || y.abs() < 1e-3 {
                    continue;
                }
                let direct = crate::criterion::criterion_m(&h, x, y).unwrap().m;
                let factored = x.powi(4) * y.powi(4) / 24.0
                    * (ab.eval_a(x) * ab.eval_p(y) - ab.eval_b(x) * ab.eval_q(y));
                let scale = direct.abs().max(factored.abs()).max(1e-30);
                assert!(
                    (direct - factored).abs() / scale < 1e-9,
                    "a={} b={} c={} x={x} y={y}: {direct} vs {factored}",
                    p.a,
                    p.b,
                    p.c
                );
            }
        }
    }

    #[test]
    fn case_b_specialization() {
        // a = b = 0: A ≡ 0, B ≡ 6, so A·P − B·Q = −6Q ≤ 0 for c > 0
        let ab = abpq(&params(0.0, 0.0, 1.5));
        assert!(ab.a_poly.is_zero());
        assert_eq!(ab.b_poly.0, vec![6.0]);
        for y in [0.1, 1.0, 3.0] {
            assert!(-6.0 * ab.eval_q(y) <= 0.0);
        }
    }

    #[test]
    fn geometry_freire() {
        let g = geometry(&params(1.0, 0.0, 0.0));
        assert_eq!(g.crit_roots, vec![-1.0]);
        assert_eq!(g.x0, Some(-1.0));
        assert!((g.r0.unwrap() - 0.5).abs() < 1e-10);
        assert!((g.e_star - 1.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn geometry_symmetric_double_well() {
        // a=0, b=−1: roots ±1 at equal levels, ties toward negative x
        let g = geometry(&params(0.0, -1.0, 0.0));
        assert_eq!(g.x0, Some(-1.0));
        assert!((g.r0.unwrap() - 1.0).abs() < 1e-10);
        assert!((g.e_star - 0.25).abs() < 1e-14);
    }

    #[test]
    fn geometry_unbounded() {
        let g = geometry(&params(3.0, 3.0, 0.0));
        assert!(g.delta < 0.0);
        assert!(g.crit_roots.is_empty());
        assert!(g.e_star.is_infinite());
    }

    #[test]
    fn thresholds_freire() {
        let p = params(1.0, 0.0, 0.0);
        let g = geometry(&p);
        let (c0, c1) = thresholds(&p, &g).unwrap();
        assert!((c0 - 2.0 / 9.0).abs() < 1e-14 * (2.0 / 9.0));
        assert!((c1 - 10.0 / 9.0).abs() < 1e-14 * (10.0 / 9.0));
    }

    #[test]
    fn thresholds_coincide_for_even_double_well() {
        let p = params(0.0, -1.0, 0.0);
        let g = geometry(&p);
        let (c0, c1) = thresholds(&p, &g).unwrap();
        assert!((c1 - 1.0).abs() < 1e-12);
        assert!((c0 - c1).abs() < 1e-6, "c0 = {c0}, c1 = {c1}");
    }

    #[test]
    fn thresholds_g1() {
        let p = params(3.0, 3.0, 0.0);
        let g = geometry(&p);
        let (c0, c1) = thresholds(&p, &g).unwrap();
        assert!((c1 - 7.0).abs() < 1e-12);
        assert!((c0 - 1.797631496846238).abs() < 1e-3, "c0 = {c0}");
    }

    #[test]
    fn thresholds_case_mismatch() {
        let p = params(0.0, 2.0, 0.0); // case E geometry
        let g = geometry(&p);
        assert!(matches!(thresholds(&p, &g), Err(Error::CaseMismatch(_))));
    }

    #[test]
    fn sigma_root_freire() {
        let x = sigma_root(&params(1.0, 0.0, 1.0)).unwrap();
        assert!((x - 0.025147).abs() < 1e-4, "x = {x}");
        let f = params(1.0, 0.0, 1.0).f_poly().eval(x);
        assert!((f - 0.000321).abs() < 1e-5);
        let x = sigma_root(&params(1.0, 0.0, 2.0)).unwrap();
        assert!((x + 0.12449).abs() < 1e-4, "x = {x}");
        let f = params(1.0, 0.0, 2.0).f_poly().eval(x);
        assert!((f - 0.007106).abs() < 1e-5);
        // at c = c0 the root sits at the conjugate point by construction
        let x = sigma_root(&params(1.0, 0.0, 2.0 / 9.0)).unwrap();
        assert!((x - 0.5).abs() < 1e-9, "x = {x}");
    }

    #[test]
    fn f_extremum_boundary_minimum() {
        // a=1, b=0 on the B>0 part of the annulus: minimum at r0 = 1/2
        let (x, boundary) = f_extremum(&params(1.0, 0.0, 0.0), -0.499, 0.5, ExtremumKind::Min);
        assert!((x - 0.5).abs() < 1e-6, "x = {x}");
        assert!(boundary);
    }

    #[test]
    fn interior_maximum_anchors() {
        let (x_m, f_m) = interior_maximum(&params(2.0, 2.0, 0.0));
        assert!((x_m + 0.0748706245).abs() < 1e-6, "x_m = {x_m}");
        assert!(f_m > 0.0);
        let (x_m, f_m) = interior_maximum(&params(0.0, 2.0, 0.0));
        assert!(x_m > 0.0 && f_m > 0.0);
    }

    #[test]
    fn tangency_anchor_ab2() {
        let t = tangency_c0(&params(2.0, 2.0, 0.0)).unwrap();
        assert!((t.x_m + 0.0748706245).abs() < 1e-6);
        assert!((t.e0 - 0.0025387196).abs() < 1e-8);
        assert!((t.c0 - 2.8004647).abs() < 1e-5, "c0 = {}", t.c0);
    }

    #[test]
    fn tangency_requires_positive_ratio() {
        assert!(matches!(
            tangency_solve(-1.0, 0.5),
            Err(Error::NoBracket(_))
        ));
        assert!(matches!(tangency_solve(0.0, 0.5), Err(Error::NoBracket(_))));
    }

    #[test]
    fn classify_dispatch() {
        let cl = classify(&params(0.0, 0.0, 0.0));
        assert_eq!(cl.case, CaseLabel::A);
        assert_eq!(cl.verdict, Verdict::Constant);

        let cl = classify(&params(0.0, 0.0, 2.0));
        assert_eq!(cl.case, CaseLabel::B);
        assert_eq!(cl.verdict, Verdict::Decreasing);

        let cl = classify(&params(1.0, 0.0, 2.0 / 9.0));
        assert_eq!(cl.case, CaseLabel::C);
        assert_eq!(cl.verdict, Verdict::Increasing);
        assert!((cl.e0.unwrap() - 1.0 / 6.0).abs() < 1e-12);

        let cl = classify(&params(0.0, -1.0, 0.5));
        assert_eq!(cl.case, CaseLabel::D);
        assert!((cl.e0.unwrap() - 0.25).abs() < 1e-12);

        let cl = classify(&params(0.0, 2.0, 0.0));
        assert_eq!(cl.case, CaseLabel::EI);
        assert!((cl.e0.unwrap() - 0.06598301).abs() < 1e-6);

        let cl = classify(&params(0.0, 2.0, 100.0));
        assert_eq!(cl.case, CaseLabel::EII);
        assert_eq!(cl.verdict, Verdict::Decreasing);

        let cl = classify(&params(1.0, 0.5, 0.0));
        assert_eq!(cl.case, CaseLabel::FI);
        assert_eq!(cl.verdict, Verdict::Increasing);

        let cl = classify(&params(1.0, 2.0, 0.0));
        assert_eq!(cl.case, CaseLabel::FII);
        assert_eq!(cl.verdict, Verdict::Decreasing);

        let cl = classify(&params(1.0, 10.0 / 9.0, 0.0));
        assert_eq!(cl.case, CaseLabel::FCritical);
        assert_eq!(cl.verdict, Verdict::IndeterminateNearOrigin);

        let cl = classify(&params(3.0, 3.0, 1.0));
        assert_eq!(cl.case, CaseLabel::GI);
        assert_eq!(cl.verdict, Verdict::Increasing);
        assert!((cl.e0.unwrap() - 1.0 / 36.0).abs() < 1e-10);

        let cl = classify(&params(2.0, 2.0, 3.0));
        assert_eq!(cl.case, CaseLabel::GII);
        assert_eq!(cl.verdict, Verdict::Decreasing);
        assert!((cl.e0.unwrap() - 0.0025387196).abs() < 1e-8);

        let cl = classify(&params(1.0, 0.0, -1.0));
        assert_eq!(cl.verdict, Verdict::OutsideTheorem);

        // intermediate c regimes stay unclassified with a pointer
        let cl = classify(&params(1.0, 0.0, 1.0));
        assert_eq!(cl.case, CaseLabel::Unclassified);
        assert!(cl.note.unwrap().contains("case C"));
    }

    #[test]
    fn e1_boundary_root_tracks_b() {
        // positive root of A for a=0 is sqrt((sqrt 5 − 2)/b)
        for b in [0.5, 1.0, 2.0, 5.0] {
            let cl = classify(&params(0.0, b, 0.0));
            let expect = ((5f64.sqrt() - 2.0) / b).sqrt();
            let x0 = params(0.0, b, 0.0).f_poly().eval(expect);
            assert!((cl.e0.unwrap() - x0).abs() < 1e-10, "b = {b}");
        }
    }
}
