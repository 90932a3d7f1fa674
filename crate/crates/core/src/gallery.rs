//! Built-in example systems with closed-form criterion factorizations
//! and expected monotonicity verdicts. They double as regression
//! fixtures for the numerical pipeline.

use crate::criterion::{relativistic_margin, SignVerdict};
use crate::error::Error;
use crate::hamiltonian::{SeparableHamiltonian, SmoothFunction};
use crate::numerics::{golden, roots};
use crate::polyfamily::Verdict;
use crate::Result;

/// A registered example with its expected behaviour.
#[derive(Debug, Clone)]
pub struct ExampleSystem {
    pub name: String,
    pub hamiltonian: SeparableHamiltonian,
    pub expected_verdict: Verdict,
    /// Upper end of the interval on which the verdict is certified
    /// (infinite when global).
    pub expected_e0: f64,
    /// Closed-form value of the criterion function M, when one exists.
    pub closed_form_m: Option<fn(f64, f64) -> f64>,
    pub note: &'static str,
}

impl ExampleSystem {
    /// The certificate sign that corresponds to the expected verdict.
    pub fn expected_sign(&self) -> Option<SignVerdict> {
        match self.expected_verdict {
            Verdict::Increasing => Some(SignVerdict::NonNegative),
            Verdict::Decreasing => Some(SignVerdict::NonPositive),
            _ => None,
        }
    }
}

fn half_square() -> SmoothFunction {
    SmoothFunction::Polynomial {
        coeffs: vec![0.0, 0.0, 0.5],
    }
}

fn m_zero(_x: f64, _y: f64) -> f64 {
    0.0
}

fn m_relativistic(x: f64, y: f64) -> f64 {
    // F = x²/2 makes the first criterion term vanish identically
    0.5 * x.powi(4) * relativistic_margin(y).1
}

fn m_pendulum_pair(x: f64, y: f64) -> f64 {
    let n = 5.0 + (2.0 * x).cos() - 2.0 * (x.cos() - 2.0) * y.cos();
    4.0 * (1.0 - y.cos()) * (x / 2.0).sin().powi(4) * (y / 2.0).sin().powi(2) * n
}

fn m_sinh(x: f64, y: f64) -> f64 {
    let (a, b) = (x.cosh(), y.cosh());
    -(a - 1.0).powi(2) * (b - 1.0).powi(2) * (a * a - a * b + 2.0 * b + 2.0)
}

/// Registered example names, in listing order.
pub fn names() -> &'static [&'static str] {
    &["linear", "relativistic", "pendulum-pair", "sinh", "ohp"]
}

/// Construct a registered example by name.
pub fn builtin(name: &str) -> Result<ExampleSystem> {
    let sys = match name {
        "linear" => ExampleSystem {
            name: name.into(),
            hamiltonian: SeparableHamiltonian::new(half_square(), half_square()),
            expected_verdict: Verdict::Constant,
            expected_e0: f64::INFINITY,
            closed_form_m: Some(m_zero),
            note: "harmonic oscillator; isochronous with T = 2π",
        },
        "relativistic" => ExampleSystem {
            name: name.into(),
            hamiltonian: SeparableHamiltonian::new(half_square(), SmoothFunction::SqrtRelativistic),
            expected_verdict: Verdict::Increasing,
            expected_e0: f64::INFINITY,
            closed_form_m: Some(m_relativistic),
            note: "relativistic oscillator; period grows without bound",
        },
        "pendulum-pair" => ExampleSystem {
            name: name.into(),
            hamiltonian: SeparableHamiltonian::new(
                SmoothFunction::TrigCos,
                SmoothFunction::TrigCos,
            ),
            expected_verdict: Verdict::Increasing,
            expected_e0: 2.0,
            closed_form_m: Some(m_pendulum_pair),
            note: "two coupled pendulum potentials; increasing up to the separatrix level",
        },
        "sinh" => ExampleSystem {
            name: name.into(),
            hamiltonian: SeparableHamiltonian::new(SmoothFunction::Cosh, SmoothFunction::Cosh),
            expected_verdict: Verdict::Decreasing,
            expected_e0: 4.0 + 4.0 * 3f64.sqrt(),
            closed_form_m: Some(m_sinh),
            note: "hyperbolic pair; decreasing up to the certified hyperbola bound",
        },
        "ohp" => ohp_build(1.0, 2.0, 4.0, 1.0, 1.0, 1.0)?,
        other => return Err(Error::UnknownExample(other.into())),
    };
    Ok(sys)
}

/// All registered examples.
pub fn all() -> Vec<ExampleSystem> {
    names()
        .iter()
        .map(|n| builtin(n).expect("registry entry"))
        .collect()
}

/// Build the piston-on-gas oscillator: a particle between two pressure
/// terms, `V'(u) = -a u^{-m} + b (L - γ - u)^{-n}` on `0 < u < L - γ`,
/// recentred at the equilibrium `u0` and paired with `G = y²/2`.
pub fn ohp_build(a: f64, b: f64, l: f64, gamma: f64, m: f64, n: f64) -> Result<ExampleSystem> {
    if !(a > 0.0 && b > 0.0 && l > 0.0 && gamma > 0.0 && m > 0.0 && n > 0.0) {
        return Err(Error::InvalidGeometry(
            "all parameters must be positive".into(),
        ));
    }
    if gamma >= l {
        return Err(Error::InvalidGeometry(format!(
            "gamma = {gamma} must be below L = {l}"
        )));
    }
    let width = l - gamma;
    let v_prime = |u: f64| -a * u.powf(-m) + b * (width - u).powf(-n);
    let u0 = if m == 1.0 && n == 1.0 {
        a * width / (a + b)
    } else {
        // V' is strictly increasing (V'' > 0), so bisection suffices
        let eps = 1e-12 * width;
        roots::bisect(v_prime, eps, width - eps, 1e-14 * width)
            .map_err(Error::InvalidGeometry)?
            .x
    };
    let k = width - u0;
    let f = SmoothFunction::TranslatedSum { a, b, m, n, u0, k };
    let sys_h = SeparableHamiltonian::new(f, half_square());
    let mut sys = ExampleSystem {
        name: format!("ohp(a={a},b={b},L={l},gamma={gamma},m={m},n={n})"),
        hamiltonian: sys_h,
        expected_verdict: Verdict::Decreasing,
        expected_e0: f64::NAN,
        closed_form_m: None,
        note: "piston-gas oscillator; decreasing on the certified near-equilibrium range",
    };
    let x0 = ohp_x0(&sys)?;
    sys.expected_e0 = sys.hamiltonian.f.value(x0);
    Ok(sys)
}

/// The smaller-magnitude zero of the potential criterion N for a
/// piston-gas system: N < 0 between the zeros `x_- < 0 < x_+` and
/// turns positive toward both domain edges.
pub fn ohp_x0(sys: &ExampleSystem) -> Result<f64> {
    let f = &sys.hamiltonian.f;
    let (lo, hi) = f.domain();
    // clamp away from the edges, where the pressure terms diverge
    let eps = 1e-9 * (-lo).min(hi);
    let (lo, hi) = (lo + eps, hi - eps);
    let n_of = |x: f64| crate::criterion::chicone_n(f, x).unwrap_or(f64::NAN);
    let mut zeros = Vec::new();
    for dir in [1.0f64, -1.0] {
        let limit = if dir > 0.0 { hi } else { lo };
        // N(0) = 0, so start far enough out that roundoff in N cannot
        // fake a sign change next to the origin
        let start = dir * 1e-3 * if dir > 0.0 { hi } else { -lo };
        let (xa, xb) = roots::expand_until_sign_change(n_of, start, start.abs(), dir, limit)
            .ok_or_else(|| {
                Error::NoSignChange(format!(
                    "N stays negative toward the domain edge in direction {dir} \
                     (domain ({lo}, {hi}))"
                ))
            })?;
        let root = roots::bisect(n_of, xa.min(xb), xa.max(xb), 1e-13 * (hi - lo))
            .map_err(Error::NoSignChange)?;
        zeros.push(root.x);
    }
    let x0 = if zeros[0].abs() <= zeros[1].abs() {
        zeros[0]
    } else {
        zeros[1]
    };
    // sanity sweep: N must be nonpositive strictly between the zeros
    let r = x0.abs();
    for i in 1..200 {
        let x = -r + 2.0 * r * i as f64 / 200.0;
        if x.abs() < 1e-9 * r {
            continue;
        }
        let v = n_of(0.999 * x);
        if v > 1e-9 * (1.0 + v.abs()) {
            return Err(Error::NoSignChange(format!(
                "N positive at interior point {x}"
            )));
        }
    }
    Ok(x0)
}

/// Certified energy bound for the `sinh` example: the minimum over
/// `a > 2` of `S(a) = a + (a² + 2)/(a − 2)`, minus 2.
pub fn sinh_certified_bound() -> f64 {
    let s = |a: f64| a + (a * a + 2.0) / (a - 2.0);
    let (a_min, value) = golden::minimize(s, 2.0 + 1e-9, 50.0, 1e-12);
    let expected_argmin = 2.0 + 3f64.sqrt();
    let expected_bound = 4.0 + 4.0 * 3f64.sqrt();
    assert!(
        (a_min - expected_argmin).abs() < 1e-9,
        "argmin of S drifted: {a_min}"
    );
    assert!(
        (value - 2.0 - expected_bound).abs() < 1e-9,
        "bound drifted: {}",
        value - 2.0
    );
    value - 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamiltonian::validate_center;
    use rand::Rng;
    use rand::SeedableRng;

    #[test]
    fn registry_validates() {
        for sys in all() {
            let report = validate_center(&sys.hamiltonian);
            assert!(
                report.pass,
                "{} failed validation: {:?}",
                sys.name, report.checks
            );
        }
    }

    #[test]
    fn unknown_name_rejected() {
        assert!(matches!(builtin("no-such"), Err(Error::UnknownExample(_))));
    }

    #[test]
    fn closed_forms_match_direct_criterion() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for sys in all() {
            let Some(mf) = sys.closed_form_m else {
                continue;
            };
            for _ in 0..1000 {
                let x: f64 = rng.gen_range(-2.0..2.0);
                let y: f64 = rng.gen_range(-2.0..2.0);
                let direct = crate::criterion::criterion_m(&sys.hamiltonian, x, y)
                    .unwrap()
                    .m;
                let closed = mf(x, y);
                let scale = direct.abs().max(closed.abs()).max(1.0);
                assert!(
                    (direct - closed).abs() / scale < 1e-10,
                    "{}: x={x} y={y}: {direct} vs {closed}",
                    sys.name
                );
            }
        }
    }

    #[test]
    fn ohp_symmetric_build() {
        let sys = ohp_build(1.0, 1.0, 3.0, 1.0, 1.0, 1.0).unwrap();
        match &sys.hamiltonian.f {
            SmoothFunction::TranslatedSum { u0, k, .. } => {
                assert!((u0 - 1.0).abs() < 1e-12);
                assert!((k - 1.0).abs() < 1e-12);
            }
            _ => panic!("unexpected potential shape"),
        }
        assert!(sys.hamiltonian.f.is_even_by_construction());
        let x0 = ohp_x0(&sys).unwrap();
        // symmetry: the two zeros of N mirror each other
        let other = crate::criterion::chicone_n(&sys.hamiltonian.f, -x0).unwrap();
        assert!(other.abs() < 1e-9, "N(-x0) = {other}");
    }

    #[test]
    fn ohp_asymmetric_build() {
        let sys = ohp_build(1.0, 2.0, 4.0, 1.0, 1.0, 1.0).unwrap();
        match &sys.hamiltonian.f {
            SmoothFunction::TranslatedSum { u0, k, .. } => {
                assert!((u0 - 1.0).abs() < 1e-12);
                assert!((k - 2.0).abs() < 1e-12);
            }
            _ => panic!("unexpected potential shape"),
        }
        assert!(sys.expected_e0 > 0.0 && sys.expected_e0.is_finite());
    }

    #[test]
    fn ohp_root_found_exponents() {
        // exponents away from 1: equilibrium by bisection on V'
        let sys = ohp_build(1.0, 1.0, 3.0, 1.0, 2.0, 1.0).unwrap();
        let (a, b, m, n, u0, k) = match sys.hamiltonian.f {
            SmoothFunction::TranslatedSum { a, b, m, n, u0, k } => (a, b, m, n, u0, k),
            _ => panic!("unexpected potential shape"),
        };
        let width = u0 + k;
        let vp = -a * u0.powf(-m) + b * (width - u0).powf(-n);
        assert!(vp.abs() < 1e-10, "V'(u0) = {vp}");
        let vpp = a * m * u0.powf(-m - 1.0) + b * n * (width - u0).powf(-n - 1.0);
        assert!(vpp > 0.0);
    }

    #[test]
    fn ohp_power_law_sign_structure() {
        let sys = ohp_build(1.0, 1.0, 3.0, 1.0, 3.0, 2.0).unwrap();
        let u0 = match sys.hamiltonian.f {
            SmoothFunction::TranslatedSum { u0, .. } => u0,
            _ => unreachable!(),
        };
        for s in [-1.0, 1.0] {
            let n = crate::criterion::chicone_n(&sys.hamiltonian.f, s * 1e-3 * u0).unwrap();
            assert!(n < 0.0, "N({}) = {n}", s * 1e-3 * u0);
        }
    }

    #[test]
    fn ohp_invalid_geometry() {
        assert!(matches!(
            ohp_build(1.0, 1.0, 2.0, 2.0, 1.0, 1.0),
            Err(Error::InvalidGeometry(_))
        ));
        assert!(matches!(
            ohp_build(-1.0, 1.0, 3.0, 1.0, 1.0, 1.0),
            Err(Error::InvalidGeometry(_))
        ));
    }

    #[test]
    fn sinh_bound_value() {
        let e0 = sinh_certified_bound();
        assert!((e0 - (4.0 + 4.0 * 3f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn ohp_decreasing_at_shipped_energies() {
        let sys = builtin("ohp").unwrap();
        for i in 1..=5 {
            let e = sys.expected_e0 * i as f64 / 6.0;
            let (d, _) = crate::period::period_derivative(&sys.hamiltonian, e).unwrap();
            assert!(d < 0.0, "dT/dE = {d} at E = {e}");
        }
    }
}
