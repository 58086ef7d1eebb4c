//! Adaptive explicit Runge–Kutta integration of two-component systems with
//! the Dormand–Prince 8(5,3) tableau (Hairer's DOP853 step control).

use crate::error::{Error, Result};

pub(crate) type State = [f64; 2];

/// Tolerances and step limits for [`integrate`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Tolerance {
    pub rtol: f64,
    pub atol: f64,
    /// Component weights of the amplitude norm `‖w∘y‖`.
    pub weights: [f64; 2],
    pub h_max: f64,
    pub max_steps: usize,
}

/// What the step callback wants done with the freshly accepted state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum StepAction {
    Continue,
    /// The callback rescaled `y` in place; derivatives must be recomputed.
    Rescaled,
    Stop,
}

/// Counters returned by [`integrate`].
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Stats {
    pub accepted: usize,
    pub rejected: usize,
    pub evals: usize,
}

#[inline]
fn axpy(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for (c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

fn amplitude(w: &[f64; 2], y: &State) -> f64 {
    (w[0] * y[0]).hypot(w[1] * y[1])
}

fn initial_step<F>(rhs: &F, t: f64, y: &State, f0: &State, dir: f64, tol: &Tolerance) -> f64
where
    F: Fn(f64, &State) -> State,
{
    let amp = amplitude(&tol.weights, y);
    let sk = |i: usize| (tol.atol + tol.rtol * amp) / tol.weights[i];
    let dnf: f64 = (0..2).map(|i| (f0[i] / sk(i)).powi(2)).sum();
    let dny: f64 = (0..2).map(|i| (y[i] / sk(i)).powi(2)).sum();
    let mut h = if dnf <= 1e-10 || dny <= 1e-10 {
        1e-6
    } else {
        (dny / dnf).sqrt() * 0.01
    };
    h = h.min(tol.h_max);
    let y1 = axpy(y, dir * h, &[(1.0, f0)]);
    let f1 = rhs(t + dir * h, &y1);
    let der2 = (0..2).map(|i| ((f1[i] - f0[i]) / sk(i)).powi(2)).sum::<f64>().sqrt() / h;
    let der12 = der2.max(dnf.sqrt());
    let h1 = if der12 <= 1e-15 {
        (h * 1e-3).max(1e-6)
    } else {
        (0.01 / der12).powf(1.0 / 8.0)
    };
    (100.0 * h).min(h1).min(tol.h_max)
}

/// Integrates `y' = rhs(t, y)` from `t0` to `t1` (either direction).
///
/// `on_step(t_old, y_old, t_new, y_new)` runs after every accepted step and
/// may rescale `y_new` in place or stop the integration early. Returns the
/// final abscissa, state and counters.
pub(crate) fn integrate<F, C>(
    rhs: F,
    t0: f64,
    y0: State,
    t1: f64,
    tol: &Tolerance,
    mut on_step: C,
) -> Result<(f64, State, Stats)>
where
    F: Fn(f64, &State) -> State,
    C: FnMut(f64, &State, f64, &mut State) -> StepAction,
{
    let mut stats = Stats::default();
    if t1 == t0 {
        return Ok((t0, y0, stats));
    }
    let dir = (t1 - t0).signum();
    let span = (t1 - t0).abs();
    let mut t = t0;
    let mut y = y0;
    let mut k1 = rhs(t, &y);
    stats.evals += 1;
    let mut h = initial_step(&rhs, t, &y, &k1, dir, tol).min(span);
    stats.evals += 1;
    let mut last_rejected = false;
    let (safe, facc1, facc2, expo): (f64, f64, f64, f64) = (0.9, 1.0 / 0.333, 1.0 / 6.0, 1.0 / 8.0);

    loop {
        if stats.accepted + stats.rejected >= tol.max_steps {
            return Err(Error::Integration {
                r: t,
                reason: format!("step budget of {} exhausted", tol.max_steps),
            });
        }
        let remaining = (t1 - t).abs();
        let last = h >= remaining * (1.0 - 1e-14);
        if last {
            h = remaining;
        }
        if h <= 16.0 * f64::EPSILON * t.abs().max(1e-300) {
            return Err(Error::Integration {
                r: t,
                reason: format!("step size underflow (h = {h:e})"),
            });
        }
        let hs = dir * h;

        let k2 = rhs(t + C2 * hs, &axpy(&y, hs, &[(A21, &k1)]));
        let k3 = rhs(t + C3 * hs, &axpy(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = rhs(t + C4 * hs, &axpy(&y, hs, &[(A41, &k1), (A43, &k3)]));
        let k5 = rhs(t + C5 * hs, &axpy(&y, hs, &[(A51, &k1), (A53, &k3), (A54, &k4)]));
        let k6 = rhs(t + C6 * hs, &axpy(&y, hs, &[(A61, &k1), (A64, &k4), (A65, &k5)]));
        let k7 = rhs(
            t + C7 * hs,
            &axpy(&y, hs, &[(A71, &k1), (A74, &k4), (A75, &k5), (A76, &k6)]),
        );
        let k8 = rhs(
            t + C8 * hs,
            &axpy(&y, hs, &[(A81, &k1), (A84, &k4), (A85, &k5), (A86, &k6), (A87, &k7)]),
        );
        let k9 = rhs(
            t + C9 * hs,
            &axpy(
                &y,
                hs,
                &[(A91, &k1), (A94, &k4), (A95, &k5), (A96, &k6), (A97, &k7), (A98, &k8)],
            ),
        );
        let k10 = rhs(
            t + C10 * hs,
            &axpy(
                &y,
                hs,
                &[
                    (A101, &k1),
                    (A104, &k4),
                    (A105, &k5),
                    (A106, &k6),
                    (A107, &k7),
                    (A108, &k8),
                    (A109, &k9),
                ],
            ),
        );
        let k11 = rhs(
            t + C11 * hs,
            &axpy(
                &y,
                hs,
                &[
                    (A111, &k1),
                    (A114, &k4),
                    (A115, &k5),
                    (A116, &k6),
                    (A117, &k7),
                    (A118, &k8),
                    (A119, &k9),
                    (A1110, &k10),
                ],
            ),
        );
        let t_new = if last { t1 } else { t + hs };
        let y12 = axpy(
            &y,
            hs,
            &[
                (A121, &k1),
                (A124, &k4),
                (A125, &k5),
                (A126, &k6),
                (A127, &k7),
                (A128, &k8),
                (A129, &k9),
                (A1210, &k10),
                (A1211, &k11),
            ],
        );
        let k12 = rhs(t + hs, &y12);
        stats.evals += 11;

        let mut incr = [0.0; 2];
        for i in 0..2 {
            incr[i] = B1 * k1[i]
                + B6 * k6[i]
                + B7 * k7[i]
                + B8 * k8[i]
                + B9 * k9[i]
                + B10 * k10[i]
                + B11 * k11[i]
                + B12 * k12[i];
        }
        let mut y_new = axpy(&y, hs, &[(1.0, &incr)]);

        let amp = amplitude(&tol.weights, &y).max(amplitude(&tol.weights, &y_new));
        let mut err = 0.0;
        let mut err2 = 0.0;
        for i in 0..2 {
            let sk = (tol.atol + tol.rtol * amp) / tol.weights[i];
            let e2 = incr[i] - BHH1 * k1[i] - BHH2 * k9[i] - BHH3 * k12[i];
            err2 += (e2 / sk).powi(2);
            let e = ER1 * k1[i]
                + ER6 * k6[i]
                + ER7 * k7[i]
                + ER8 * k8[i]
                + ER9 * k9[i]
                + ER10 * k10[i]
                + ER11 * k11[i]
                + ER12 * k12[i];
            err += (e / sk).powi(2);
        }
        let mut deno = err + 0.01 * err2;
        if deno <= 0.0 {
            deno = 1.0;
        }
        let err = h * err * (1.0 / (2.0 * deno)).sqrt();
        if !err.is_finite() {
            return Err(Error::Integration {
                r: t,
                reason: "non-finite local error estimate".into(),
            });
        }

        let fac11 = err.powf(expo);
        let fac = facc2.max(facc1.min(fac11 / safe));
        let mut h_new = h / fac;

        if err <= 1.0 {
            stats.accepted += 1;
            let action = on_step(t, &y, t_new, &mut y_new);
            t = t_new;
            y = y_new;
            if action == StepAction::Stop || last {
                return Ok((t, y, stats));
            }
            k1 = rhs(t, &y);
            stats.evals += 1;
            if last_rejected {
                h_new = h_new.min(h);
            }
            last_rejected = false;
        } else {
            h_new = h / facc1.min(fac11 / safe);
            last_rejected = true;
            stats.rejected += 1;
        }
        h = h_new.min(tol.h_max);
    }
}

const A21: f64 = 5.26001519587677318785587544488E-2;
const A31: f64 = 1.97250569845378994544595329183E-2;
const A32: f64 = 5.91751709536136983633785987549E-2;
const A41: f64 = 2.95875854768068491816892993775E-2;
const A43: f64 = 8.87627564304205475450678981324E-2;
const A51: f64 = 2.41365134159266685502369798665E-1;
const A53: f64 = -8.84549479328286085344864962717E-1;
const A54: f64 = 9.24834003261792003115737966543E-1;
const A61: f64 = 3.7037037037037037037037037037E-2;
const A64: f64 = 1.70828608729473871279604482173E-1;
const A65: f64 = 1.25467687566822425016691814123E-1;
const A71: f64 = 3.7109375E-2;
const A74: f64 = 1.70252211019544039314978060272E-1;
const A75: f64 = 6.02165389804559606850219397283E-2;
const A76: f64 = -1.7578125E-2;
const A81: f64 = 3.70920001185047927108779319836E-2;
const A84: f64 = 1.70383925712239993810214054705E-1;
const A85: f64 = 1.07262030446373284651809199168E-1;
const A86: f64 = -1.53194377486244017527936158236E-2;
const A87: f64 = 8.27378916381402288758473766002E-3;
const A91: f64 = 6.24110958716075717114429577812E-1;
const A94: f64 = -3.36089262944694129406857109825E0;
const A95: f64 = -8.68219346841726006818189891453E-1;
const A96: f64 = 2.75920996994467083049415600797E1;
const A97: f64 = 2.01540675504778934086186788979E1;
const A98: f64 = -4.34898841810699588477366255144E1;
const A101: f64 = 4.77662536438264365890433908527E-1;
const A104: f64 = -2.48811461997166764192642586468E0;
const A105: f64 = -5.90290826836842996371446475743E-1;
const A106: f64 = 2.12300514481811942347288949897E1;
const A107: f64 = 1.52792336328824235832596922938E1;
const A108: f64 = -3.32882109689848629194453265587E1;
const A109: f64 = -2.03312017085086261358222928593E-2;
const A111: f64 = -9.3714243008598732571704021658E-1;
const A114: f64 = 5.18637242884406370830023853209E0;
const A115: f64 = 1.09143734899672957818500254654E0;
const A116: f64 = -8.14978701074692612513997267357E0;
const A117: f64 = -1.85200656599969598641566180701E1;
const A118: f64 = 2.27394870993505042818970056734E1;
const A119: f64 = 2.49360555267965238987089396762E0;
const A1110: f64 = -3.0467644718982195003823669022E0;
const A121: f64 = 2.27331014751653820792359768449E0;
const A124: f64 = -1.05344954667372501984066689879E1;
const A125: f64 = -2.00087205822486249909675718444E0;
const A126: f64 = -1.79589318631187989172765950534E1;
const A127: f64 = 2.79488845294199600508499808837E1;
const A128: f64 = -2.85899827713502369474065508674E0;
const A129: f64 = -8.87285693353062954433549289258E0;
const A1210: f64 = 1.23605671757943030647266201528E1;
const A1211: f64 = 6.43392746015763530355970484046E-1;

const B1: f64 = 5.42937341165687622380535766363E-2;
const B6: f64 = 4.45031289275240888144113950566E0;
const B7: f64 = 1.89151789931450038304281599044E0;
const B8: f64 = -5.8012039600105847814672114227E0;
const B9: f64 = 3.1116436695781989440891606237E-1;
const B10: f64 = -1.52160949662516078556178806805E-1;
const B11: f64 = 2.01365400804030348374776537501E-1;
const B12: f64 = 4.47106157277725905176885569043E-2;

const BHH1: f64 = 0.244094488188976377952755905512E+00;
const BHH2: f64 = 0.733846688281611857341361741547E+00;
const BHH3: f64 = 0.220588235294117647058823529412E-01;

const C2: f64 = 0.526001519587677318785587544488E-01;
const C3: f64 = 0.789002279381515978178381316732E-01;
const C4: f64 = 0.118350341907227396726757197510E+00;
const C5: f64 = 0.281649658092772603273242802490E+00;
const C6: f64 = 0.333333333333333333333333333333E+00;
const C7: f64 = 0.25E+00;
const C8: f64 = 0.307692307692307692307692307692E+00;
const C9: f64 = 0.651282051282051282051282051282E+00;
const C10: f64 = 0.6E+00;
const C11: f64 = 0.857142857142857142857142857142E+00;

const ER1: f64 = 0.1312004499419488073250102996E-01;
const ER6: f64 = -0.1225156446376204440720569753E+01;
const ER7: f64 = -0.4957589496572501915214079952E+00;
const ER8: f64 = 0.1664377182454986536961530415E+01;
const ER9: f64 = -0.3503288487499736816886487290E+00;
const ER10: f64 = 0.3341791187130174790297318841E+00;
const ER11: f64 = 0.8192320648511571246570742613E-01;
const ER12: f64 = -0.2235530786388629525884427845E-01;
