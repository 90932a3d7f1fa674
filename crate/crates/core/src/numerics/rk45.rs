//! Dormand-Prince 5(4) integrator for planar autonomous systems, with
//! fourth-order dense output and sign-change event localization.

type State = [f64; 2];

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = B1 - 5179.0 / 57600.0;
const E3: f64 = B3 - 7571.0 / 16695.0;
const E4: f64 = B4 - 393.0 / 640.0;
const E5: f64 = B5 + 92097.0 / 339200.0;
const E6: f64 = B6 - 187.0 / 2100.0;
const E7: f64 = -1.0 / 40.0;
// dense output weights
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// One accepted step together with its dense-output polynomial.
struct DenseStep {
    t0: f64,
    h: f64,
    cont: [[f64; 2]; 5],
}

impl DenseStep {
    fn eval(&self, t: f64) -> State {
        let s = (t - self.t0) / self.h;
        let s1 = 1.0 - s;
        let mut out = [0.0; 2];
        for i in 0..2 {
            let c = &self.cont;
            out[i] = c[0][i] + s * (c[1][i] + s1 * (c[2][i] + s * (c[3][i] + s1 * c[4][i])));
        }
        out
    }
}

/// Outcome of integrating until the event function changes sign.
#[derive(Debug, Clone, Copy)]
pub struct EventResult {
    pub t: f64,
    pub state: State,
    pub steps: usize,
    /// Maximum absolute value of the monitor function over the run.
    pub max_monitor: f64,
}

/// Integrate `y' = rhs(y)` from `y0` at `t = 0` until `event` changes
/// sign at some `t > t_min`, or until `t_end`.
///
/// `monitor` is evaluated at every accepted step endpoint; its maximum
/// absolute value is reported (used for conserved-quantity drift).
#[allow(clippy::too_many_arguments)]
pub fn integrate_to_event<R, G, M>(
    rhs: R,
    y0: State,
    t_end: f64,
    rtol: f64,
    atol: f64,
    event: G,
    t_min: f64,
    mut monitor: M,
) -> Option<EventResult>
where
    R: Fn(State) -> State,
    G: Fn(State) -> f64,
    M: FnMut(State) -> f64,
{
    let mut t = 0.0;
    let mut y = y0;
    let mut k1 = rhs(y);
    let mut h = initial_step(&rhs, y, k1, rtol, atol, t_end);
    let mut steps = 0usize;
    let mut max_monitor: f64 = monitor(y).abs();
    let mut g_prev = event(y);

    while t < t_end && steps < 1_000_000 {
        if t + h > t_end {
            h = t_end - t;
        }
        let k2 = rhs(axpy(y, h, [(A21, k1)]));
        let k3 = rhs(axpy(y, h, [(A31, k1), (A32, k2)]));
        let k4 = rhs(axpy(y, h, [(A41, k1), (A42, k2), (A43, k3)]));
        let k5 = rhs(axpy(y, h, [(A51, k1), (A52, k2), (A53, k3), (A54, k4)]));
        let k6 = rhs(axpy(
            y,
            h,
            [(A61, k1), (A62, k2), (A63, k3), (A64, k4), (A65, k5)],
        ));
        let y1 = axpy(y, h, [(B1, k1), (B3, k3), (B4, k4), (B5, k5), (B6, k6)]);
        let k7 = rhs(y1);

        let mut err: f64 = 0.0;
        for i in 0..2 {
            let e =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = atol + rtol * y[i].abs().max(y1[i].abs());
            err += (e / sc) * (e / sc);
        }
        err = (err / 2.0).sqrt();

        if err <= 1.0 {
            // build dense output before advancing
            let ydiff = [y1[0] - y[0], y1[1] - y[1]];
            let mut cont = [[0.0; 2]; 5];
            for i in 0..2 {
                cont[0][i] = y[i];
                cont[1][i] = ydiff[i];
                cont[2][i] = h * k1[i] - ydiff[i];
                cont[3][i] = ydiff[i] - h * k7[i] - cont[2][i];
                cont[4][i] = h
                    * (D1 * k1[i] + D3 * k3[i] + D4 * k4[i] + D5 * k5[i] + D6 * k6[i] + D7 * k7[i]);
            }
            let dense = DenseStep { t0: t, h, cont };
            let t1 = t + h;
            let g_new = event(y1);
            let crossed = g_prev * g_new < 0.0 || (g_new == 0.0 && g_prev != 0.0);
            if crossed && t1 > t_min {
                // root-polish on the dense output
                let (mut ta, mut tb) = (t, t1);
                let (mut ga, _gb) = (g_prev, g_new);
                for _ in 0..100 {
                    let tm = 0.5 * (ta + tb);
                    let gm = event(dense.eval(tm));
                    if gm == 0.0 || (tb - ta) < 1e-14 * t1.max(1.0) {
                        ta = tm;
                        tb = tm;
                        break;
                    }
                    if ga * gm < 0.0 {
                        tb = tm;
                    } else {
                        ta = tm;
                        ga = gm;
                    }
                }
                let te = 0.5 * (ta + tb);
                if te > t_min {
                    let ye = dense.eval(te);
                    max_monitor = max_monitor.max(monitor(ye).abs());
                    return Some(EventResult {
                        t: te,
                        state: ye,
                        steps,
                        max_monitor,
                    });
                }
            }
            t = t1;
            y = y1;
            k1 = k7; // FSAL
            g_prev = g_new;
            max_monitor = max_monitor.max(monitor(y).abs());
            steps += 1;
        }
        let factor = if err == 0.0 {
            5.0
        } else {
            (0.9 * err.powf(-0.2)).clamp(0.2, 5.0)
        };
        h *= factor;
        if h < 1e-14 * t_end.max(1.0) {
            return None;
        }
    }
    None
}

fn axpy<const N: usize>(y: State, h: f64, terms: [(f64, State); N]) -> State {
    let mut out = y;
    for (c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

fn initial_step<R: Fn(State) -> State>(
    rhs: &R,
    y: State,
    k: State,
    rtol: f64,
    atol: f64,
    t_end: f64,
) -> f64 {
    let norm_y = (y[0] * y[0] + y[1] * y[1]).sqrt();
    let norm_k = (k[0] * k[0] + k[1] * k[1]).sqrt();
    let h0 = if norm_k > 1e-12 {
        0.01 * (norm_y.max(atol) / norm_k)
    } else {
        1e-4 * t_end
    };
    // one Euler probe to bound the second derivative
    let y1 = [y[0] + h0 * k[0], y[1] + h0 * k[1]];
    let k1 = rhs(y1);
    let d2 = ((k1[0] - k[0]).powi(2) + (k1[1] - k[1]).powi(2)).sqrt() / h0;
    let h1 = if d2 > 1e-12 {
        (rtol / d2).powf(1.0 / 5.0)
    } else {
        h0 * 10.0
    };
    h0.min(h1).min(t_end * 0.1).max(1e-10)
}
