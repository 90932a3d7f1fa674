//! The sign criterion for monotonicity of the period function.
//!
//! For a potential system (`G = y^2/2`) the classical criterion is the
//! one-variable function
//!
//! ```text
//! N(x) = 6 F (F'')^2 - 3 (F')^2 F'' - 2 F F' F'''
//! ```
//!
//! whose one-signedness on `K(E0) = {F <= E0}` forces monotonicity of
//! `T` on `(0, E0)`. The separable generalization is
//!
//! ```text
//! M(x, y) = N(x) G (G')^2 + F (F')^2 F'' ((G')^2 - 2 G G'')
//! ```
//!
//! one-signed on `Omega(E0) = {0 <= H <= E0}`. Certificates here are
//! sampled (grid plus local refinement), not interval-rigorous, and are
//! labeled as such in all serialized output.

use crate::error::Error;
use crate::hamiltonian::{turning_points, SeparableHamiltonian, SmoothFunction};
use crate::Result;
use serde::Serialize;

/// Pointwise criterion evaluation with its two-term breakdown.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CriterionValue {
    pub x: f64,
    pub y: f64,
    /// The generalized criterion value.
    pub m: f64,
    /// The potential-case criterion N(x) (meaningful when `G = y^2/2`).
    pub n: f64,
    /// First bracketed term: `N(x) * G * (G')^2`.
    pub term_g: f64,
    /// Second term: `F (F')^2 F'' * ((G')^2 - 2 G G'')`.
    pub term_margin: f64,
    /// Forward-error scale of the evaluation; `|m|` below this is
    /// numerically indistinguishable from zero (the isochronous case
    /// cancels exactly in real arithmetic but not in floats).
    pub roundoff: f64,
}

/// `N(x)` from analytic derivatives of F.
pub fn chicone_n(f: &SmoothFunction, x: f64) -> Result<f64> {
    f.check_domain(x)?;
    let v = f.deriv(0, x);
    let d1 = f.deriv(1, x);
    let d2 = f.deriv(2, x);
    let d3 = f.deriv(3, x);
    Ok(6.0 * v * d2 * d2 - 3.0 * d1 * d1 * d2 - 2.0 * v * d1 * d3)
}

/// `M(x, y)` assembled from analytic derivatives of F and G.
pub fn criterion_m(h: &SeparableHamiltonian, x: f64, y: f64) -> Result<CriterionValue> {
    let n = chicone_n(&h.f, x)?;
    h.g.check_domain(y)?;
    let fv = h.f.deriv(0, x);
    let f1 = h.f.deriv(1, x);
    let f2 = h.f.deriv(2, x);
    let gv = h.g.deriv(0, y);
    let g1 = h.g.deriv(1, y);
    let g2 = h.g.deriv(2, y);
    let term_g = n * gv * g1 * g1;
    let term_margin = fv * f1 * f1 * f2 * (g1 * g1 - 2.0 * gv * g2);
    // magnitude of the terms that cancel in exact arithmetic, bounding
    // the floating-point residue of the sum
    let f3 = h.f.deriv(3, x);
    let n_mag = 6.0 * fv.abs() * f2 * f2 + 3.0 * f1 * f1 * f2.abs() + 2.0 * (fv * f1 * f3).abs();
    let roundoff = 1e-13
        * (n_mag * (gv * g1 * g1).abs()
            + (fv * f1 * f1 * f2).abs() * (g1 * g1 + 2.0 * (gv * g2).abs()));
    Ok(CriterionValue {
        x,
        y,
        m: term_g + term_margin,
        n,
        term_g,
        term_margin,
        roundoff,
    })
}

/// The relativistic margin `(G')^2 - 2 G G''` for `G = sqrt(1+y^2) - 1`,
/// returned both from direct derivatives and from the closed form
/// `(s-1)^2 (s+2) / s^3` with `s = sqrt(1+y^2)`.
pub fn relativistic_margin(y: f64) -> (f64, f64) {
    let g = SmoothFunction::SqrtRelativistic;
    let gv = g.deriv(0, y);
    let g1 = g.deriv(1, y);
    let g2 = g.deriv(2, y);
    let direct = g1 * g1 - 2.0 * gv * g2;
    let s = (1.0 + y * y).sqrt();
    let closed = (s - 1.0) * (s - 1.0) * (s + 2.0) / (s * s * s);
    (direct, closed)
}

/// Verdict of a sampled sign certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SignVerdict {
    NonNegative,
    NonPositive,
    Mixed,
    /// Both signs occur arbitrarily close to the origin, so no energy
    /// sublevel set is one-signed.
    Indeterminate,
}

/// A sampled point together with its criterion value.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Witness {
    pub x: f64,
    pub y: f64,
    pub m: f64,
    /// Energy of the witness point, `H(x, y)`.
    pub energy: f64,
}

/// Sampled (non-rigorous) sign verdict for M over `Omega(E0)`.
#[derive(Debug, Clone, Serialize)]
pub struct SignCertificate {
    pub verdict: SignVerdict,
    pub e0: f64,
    /// Grid points per axis.
    pub resolution: usize,
    pub refinement_depth: usize,
    /// Most positive sampled value, if any sample exceeded the margin.
    pub max_positive: Option<Witness>,
    /// Most negative sampled value, if any sample fell below the margin.
    pub min_negative: Option<Witness>,
    /// Smallest |M| over retained nonzero samples away from the axes.
    pub margin: f64,
    /// Certificates are sampled, not interval-rigorous.
    pub sampled_only: bool,
}

impl SignCertificate {
    /// Whether this certificate supports the requested sign. A grid on
    /// which M vanishes identically (the isochronous case) supports both.
    pub fn admits(&self, sign: SignVerdict) -> bool {
        if self.verdict == sign {
            return true;
        }
        self.max_positive.is_none() && self.min_negative.is_none()
    }
}

/// Relative threshold below which a sample counts as a zero of M.
const MARGIN_FACTOR: f64 = 1e-12;

struct GridScan {
    max_pos: Option<Witness>,
    min_neg: Option<Witness>,
    min_abs_nonzero: f64,
    ambiguous: usize,
}

fn scan_box(
    h: &SeparableHamiltonian,
    e0: f64,
    x_lo: f64,
    x_hi: f64,
    y_hi: f64,
    resolution: usize,
    depth: usize,
) -> GridScan {
    let mut values = Vec::with_capacity(resolution * resolution);
    let mut scale: f64 = 0.0;
    for i in 0..resolution {
        // cell centers; the axes x=0 and y=0 are excluded by sampling
        // off-grid of them and by the margin threshold
        let x = x_lo + (x_hi - x_lo) * (i as f64 + 0.5) / resolution as f64;
        for j in 0..resolution {
            let y = -y_hi + 2.0 * y_hi * (j as f64 + 0.5) / resolution as f64;
            if h.energy(x, y) > e0 {
                continue;
            }
            if let Ok(cv) = criterion_m(h, x, y) {
                let m = if cv.m.abs() <= cv.roundoff { 0.0 } else { cv.m };
                scale = scale.max(m.abs());
                values.push((x, y, m));
            }
        }
    }
    let tau = MARGIN_FACTOR * scale;
    let dx = (x_hi - x_lo) / resolution as f64;
    let dy = 2.0 * y_hi / resolution as f64;

    let mut max_pos: Option<Witness> = None;
    let mut min_neg: Option<Witness> = None;
    let mut min_abs = f64::INFINITY;
    let ambiguous = 0usize;

    let mut record = |x: f64, y: f64, m: f64| {
        if m > tau {
            if max_pos.is_none_or(|w| m > w.m) {
                max_pos = Some(Witness {
                    x,
                    y,
                    m,
                    energy: h.energy(x, y),
                });
            }
            min_abs = min_abs.min(m.abs());
        } else if m < -tau {
            if min_neg.is_none_or(|w| m < w.m) {
                min_neg = Some(Witness {
                    x,
                    y,
                    m,
                    energy: h.energy(x, y),
                });
            }
            min_abs = min_abs.min(m.abs());
        }
    };

    for &(x, y, m) in &values {
        record(x, y, m);
        // refine cells whose sample sits inside the margin band: a sign
        // may be hiding below the grid scale (tangency neighborhoods)
        if m.abs() <= tau && scale > 0.0 {
            let mut resolved = false;
            let (mut cx, mut cy, mut cdx, mut cdy) = (x, y, dx, dy);
            for _ in 0..depth {
                cdx /= 4.0;
                cdy /= 4.0;
                let mut local_max: f64 = 0.0;
                let mut best = (cx, cy, 0.0f64);
                for ii in -2i32..=2 {
                    for jj in -2i32..=2 {
                        let sx = cx + ii as f64 * cdx;
                        let sy = cy + jj as f64 * cdy;
                        if h.energy(sx, sy) > e0 {
                            continue;
                        }
                        if let Ok(cv) = criterion_m(h, sx, sy) {
                            if cv.m.abs() > cv.roundoff && cv.m.abs() > local_max {
                                local_max = cv.m.abs();
                                best = (sx, sy, cv.m);
                            }
                        }
                    }
                }
                if local_max > tau {
                    record(best.0, best.1, best.2);
                    resolved = true;
                    break;
                }
                cx = best.0;
                cy = best.1;
            }
            // cells still inside the band after full refinement are
            // accepted as zeros of M
            let _ = resolved;
        }
    }
    GridScan {
        max_pos,
        min_neg,
        min_abs_nonzero: min_abs,
        ambiguous,
    }
}

/// Sample M on a grid over the bounding box of `Omega(E0)` restricted to
/// `H <= E0` and classify its sign pattern.
///
/// Points within the margin band around zero (which includes the axes,
/// where M vanishes identically in all shipped factorizations) are
/// excluded from sign counting; such cells are refined up to
/// `refinement_depth` before being accepted as zeros.
pub fn sign_certificate(
    h: &SeparableHamiltonian,
    e0: f64,
    resolution: usize,
    refinement_depth: usize,
) -> Result<SignCertificate> {
    if e0 <= 0.0 {
        return Err(Error::EnergyOutOfAnnulus(e0));
    }
    let bound = crate::hamiltonian::annulus_energy_bound(h);
    if e0 > bound.e_star {
        return Err(Error::EnergyOutOfAnnulus(e0));
    }
    // e0 == e_star evaluates on the open region H < e_star only
    let closure_caveat = e0 == bound.e_star;
    let level = if closure_caveat {
        e0 * (1.0 - 1e-9)
    } else {
        e0
    };
    let tp = turning_points(h, level * (1.0 - 1e-12))?;

    let full = scan_box(
        h,
        level,
        tp.x_minus,
        tp.x_plus,
        tp.y_plus,
        resolution,
        refinement_depth,
    );

    let verdict = match (&full.max_pos, &full.min_neg) {
        (Some(_), Some(_)) => {
            // distinguish a genuine mixed region from sign breakdown at
            // the origin: rescan a small energy sublevel around 0
            let small = level * 1e-3;
            if let Ok(tps) = turning_points(h, small) {
                let near = scan_box(
                    h,
                    small,
                    tps.x_minus,
                    tps.x_plus,
                    tps.y_plus,
                    resolution.min(128),
                    refinement_depth,
                );
                if near.max_pos.is_some() && near.min_neg.is_some() {
                    SignVerdict::Indeterminate
                } else {
                    SignVerdict::Mixed
                }
            } else {
                SignVerdict::Mixed
            }
        }
        (Some(_), None) => SignVerdict::NonNegative,
        (None, Some(_)) => SignVerdict::NonPositive,
        // M identically within the margin band on the whole grid
        (None, None) => SignVerdict::NonNegative,
    };
    if full.ambiguous > 0 {
        return Err(Error::ResolutionTooCoarse);
    }
    Ok(SignCertificate {
        verdict,
        e0,
        resolution,
        refinement_depth,
        max_positive: full.max_pos,
        min_negative: full.min_neg,
        margin: if full.min_abs_nonzero.is_finite() {
            full.min_abs_nonzero
        } else {
            0.0
        },
        sampled_only: true,
    })
}

/// Largest certified energy for the requested sign, found by bisection.
#[derive(Debug, Clone, Serialize)]
pub struct CertifiedEnergy {
    pub sign: SignVerdict,
    /// Largest energy whose certificate has the requested sign.
    pub e0: f64,
    /// Last passing and first failing energies of the bisection.
    pub bracket: (f64, f64),
    /// Opposite-sign sample nearest the failing level set (a tangency
    /// witness for where the sign first breaks).
    pub tangency_witness: Option<Witness>,
}

/// Bisect on energy between the largest passing and smallest failing
/// certificates, to relative width 1e-3.
pub fn max_certified_energy(
    h: &SeparableHamiltonian,
    sign: SignVerdict,
    e_hi: f64,
    resolution: usize,
    refinement_depth: usize,
) -> Result<CertifiedEnergy> {
    let bound = crate::hamiltonian::annulus_energy_bound(h);
    let cap = if bound.e_star.is_finite() {
        bound.e_star.min(e_hi)
    } else {
        e_hi
    };

    let cert_at = |e: f64| sign_certificate(h, e, resolution, refinement_depth);

    let top = cert_at(cap)?;
    if top.admits(sign) {
        return Ok(CertifiedEnergy {
            sign,
            e0: cap,
            bracket: (cap, cap),
            tangency_witness: None,
        });
    }
    // walk down geometrically for a passing energy
    let mut lo = cap;
    let mut lo_cert = None;
    for _ in 0..60 {
        lo /= 2.0;
        let c = cert_at(lo)?;
        if c.admits(sign) {
            lo_cert = Some(c);
            break;
        }
    }
    if lo_cert.is_none() {
        return Err(Error::NoCertifiedRegion);
    }
    let mut hi = (lo * 2.0).min(cap);
    let mut fail_cert = cert_at(hi)?;
    while (hi - lo) > 1e-3 * hi {
        let mid = 0.5 * (lo + hi);
        let c = cert_at(mid)?;
        if c.admits(sign) {
            lo = mid;
        } else {
            hi = mid;
            fail_cert = c;
        }
    }
    // counter-witness closest to the failing level
    let counter = match sign {
        SignVerdict::NonNegative => fail_cert.min_negative,
        SignVerdict::NonPositive => fail_cert.max_positive,
        _ => None,
    };
    Ok(CertifiedEnergy {
        sign,
        e0: lo,
        bracket: (lo, hi),
        tangency_witness: counter,
    })
}

/// `K(E0) = [x_-(E0), x_+(E0)]`, the potential-case interval.
pub fn chicone_interval(f: &SmoothFunction, e0: f64) -> Result<(f64, f64)> {
    let h = SeparableHamiltonian::new(
        f.clone(),
        SmoothFunction::Polynomial {
            coeffs: vec![0.0, 0.0, 0.5],
        },
    );
    let tp = turning_points(&h, e0)?;
    Ok((tp.x_minus, tp.x_plus))
}
