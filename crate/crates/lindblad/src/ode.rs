//! Generic adaptive Dormand-Prince 5(4) integration over matrix-valued states.

use nalgebra::DMatrix;
use spin_core::C64;

use crate::noise::IntegratorConfig;

/// State vector abstraction for the integrator.
pub trait OdeState: Clone {
    /// `self += a * x`
    fn axpy(&mut self, a: f64, x: &Self);
    fn copy_from(&mut self, x: &Self);
    fn set_zero(&mut self);
    /// Weighted RMS of `self` interpreted as an error vector, with the scale
    /// `atol + rtol * max(|y0_i|, |y1_i|)` taken componentwise.
    fn error_rms(&self, y0: &Self, y1: &Self, atol: f64, rtol: f64) -> f64;
}

impl OdeState for DMatrix<C64> {
    fn axpy(&mut self, a: f64, x: &Self) {
        let dst = self.as_mut_slice();
        let src = x.as_slice();
        for (d, s) in dst.iter_mut().zip(src) {
            d.re += a * s.re;
            d.im += a * s.im;
        }
    }

    fn copy_from(&mut self, x: &Self) {
        self.as_mut_slice().copy_from_slice(x.as_slice());
    }

    fn set_zero(&mut self) {
        self.as_mut_slice().fill(C64::new(0.0, 0.0));
    }

    fn error_rms(&self, y0: &Self, y1: &Self, atol: f64, rtol: f64) -> f64 {
        let (e, a, b) = (self.as_slice(), y0.as_slice(), y1.as_slice());
        let mut acc = 0.0;
        for i in 0..e.len() {
            let scale = atol + rtol * a[i].norm().max(b[i].norm());
            let r = e[i].norm() / scale;
            acc += r * r;
        }
        (acc / e.len() as f64).sqrt()
    }
}

impl<S: OdeState> OdeState for Vec<S> {
    fn axpy(&mut self, a: f64, x: &Self) {
        for (d, s) in self.iter_mut().zip(x) {
            d.axpy(a, s);
        }
    }

    fn copy_from(&mut self, x: &Self) {
        for (d, s) in self.iter_mut().zip(x) {
            d.copy_from(s);
        }
    }

    fn set_zero(&mut self) {
        for d in self.iter_mut() {
            d.set_zero();
        }
    }

    fn error_rms(&self, y0: &Self, y1: &Self, atol: f64, rtol: f64) -> f64 {
        // Quadratic mean over blocks weighted by nothing fancier than count;
        // blocks here always hold equally sized matrices or close enough.
        let mut acc = 0.0;
        for ((e, a), b) in self.iter().zip(y0).zip(y1) {
            let r = e.error_rms(a, b, atol, rtol);
            acc += r * r;
        }
        (acc / self.len().max(1) as f64).sqrt()
    }
}

/// Counters reported by one integration run.
#[derive(Debug, Clone, Copy, Default)]
pub struct OdeStats {
    pub steps: usize,
    pub rejected: usize,
    pub rhs_evals: usize,
}

/// Step-underflow failure carrying the last good time.
#[derive(Debug, Clone, Copy)]
pub struct StepUnderflow {
    pub t_reached: f64,
}

// Dormand-Prince 5(4) tableau.
const A2: [f64; 1] = [1.0 / 5.0];
const A3: [f64; 2] = [3.0 / 40.0, 9.0 / 40.0];
const A4: [f64; 3] = [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0];
const A5: [f64; 4] =
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0];
const A6: [f64; 5] =
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0];
const B5: [f64; 6] =
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0];
// b5 - b4, the embedded error weights (7 stages, FSAL).
const E: [f64; 7] = [
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
];

/// Integrates `dy/dt = f(y)` (autonomous right-hand side) from 0 to `t_final`,
/// mutating `y` in place. `f(state, out)` must write the full derivative.
pub fn integrate<S, F>(
    mut f: F,
    y: &mut S,
    t_final: f64,
    cfg: &IntegratorConfig,
) -> Result<OdeStats, StepUnderflow>
where
    S: OdeState,
    F: FnMut(&S, &mut S),
{
    let mut stats = OdeStats::default();
    if t_final == 0.0 {
        return Ok(stats);
    }
    let mut k: Vec<S> = (0..7).map(|_| y.clone()).collect();
    let mut y_stage = y.clone();
    let mut y_new = y.clone();
    let mut err_vec = y.clone();

    f(y, &mut k[0]);
    stats.rhs_evals += 1;

    // Initial step from the magnitude of the first derivative.
    let d0 = y.error_rms(y, y, cfg.atol, cfg.rtol);
    let d1 = k[0].error_rms(y, y, cfg.atol, cfg.rtol);
    let mut h = if d0 > 1e-12 && d1 > 1e-12 { 0.01 * d0 / d1 } else { 1e-6 * t_final.abs() };
    h = h.min(cfg.max_step).min(t_final.abs()).max(1e-12 * t_final.abs());

    let mut t = 0.0;
    let min_step = 1e-13 * t_final.abs().max(1.0);

    while t < t_final {
        let remaining = t_final - t;
        if remaining <= min_step {
            break; // done to within roundoff of the requested span
        }
        h = h.min(remaining).min(cfg.max_step);
        if h < min_step {
            return Err(StepUnderflow { t_reached: t });
        }

        // Stages 2..6
        y_stage.copy_from(y);
        y_stage.axpy(h * A2[0], &k[0]);
        f(&y_stage, &mut k[1]);

        y_stage.copy_from(y);
        y_stage.axpy(h * A3[0], &k[0]);
        y_stage.axpy(h * A3[1], &k[1]);
        f(&y_stage, &mut k[2]);

        y_stage.copy_from(y);
        for (i, a) in A4.iter().enumerate() {
            y_stage.axpy(h * a, &k[i]);
        }
        f(&y_stage, &mut k[3]);

        y_stage.copy_from(y);
        for (i, a) in A5.iter().enumerate() {
            y_stage.axpy(h * a, &k[i]);
        }
        f(&y_stage, &mut k[4]);

        y_stage.copy_from(y);
        for (i, a) in A6.iter().enumerate() {
            y_stage.axpy(h * a, &k[i]);
        }
        f(&y_stage, &mut k[5]);

        // 5th-order candidate (a7 row equals b5).
        y_new.copy_from(y);
        for (i, b) in B5.iter().enumerate() {
            if *b != 0.0 {
                y_new.axpy(h * b, &k[i]);
            }
        }
        f(&y_new, &mut k[6]);
        stats.rhs_evals += 6;

        // Embedded error estimate.
        err_vec.set_zero();
        for (i, e) in E.iter().enumerate() {
            if *e != 0.0 {
                err_vec.axpy(h * e, &k[i]);
            }
        }
        let err = err_vec.error_rms(y, &y_new, cfg.atol, cfg.rtol);

        if err <= 1.0 {
            t += h;
            std::mem::swap(y, &mut y_new);
            k.swap(0, 6); // FSAL
            stats.steps += 1;
            let fac = if err == 0.0 { 5.0 } else { (0.9 * err.powf(-0.2)).clamp(0.2, 5.0) };
            h *= fac;
        } else {
            stats.rejected += 1;
            h *= (0.9 * err.powf(-0.2)).clamp(0.1, 1.0);
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn scalar(x: f64) -> DMatrix<C64> {
        DMatrix::from_element(1, 1, C64::new(x, 0.0))
    }

    #[test]
    fn exponential_decay() {
        let mut y = scalar(1.0);
        let cfg = IntegratorConfig::default();
        integrate(
            |s: &DMatrix<C64>, out: &mut DMatrix<C64>| {
                out.copy_from(s);
                out[(0, 0)] *= -2.0;
            },
            &mut y,
            1.5,
            &cfg,
        )
        .unwrap();
        assert_relative_eq!(y[(0, 0)].re, (-3.0f64).exp(), epsilon = 1e-9);
    }

    #[test]
    fn oscillator_phase() {
        // dy/dt = i w y
        let w = 3.0;
        let mut y = DMatrix::from_element(1, 1, C64::new(1.0, 0.0));
        let cfg = IntegratorConfig::default();
        integrate(
            |s: &DMatrix<C64>, out: &mut DMatrix<C64>| {
                out[(0, 0)] = C64::new(0.0, w) * s[(0, 0)];
            },
            &mut y,
            2.0,
            &cfg,
        )
        .unwrap();
        assert_relative_eq!(y[(0, 0)].re, (2.0 * w).cos(), epsilon = 5e-8);
        assert_relative_eq!(y[(0, 0)].im, (2.0 * w).sin(), epsilon = 5e-8);
    }

    #[test]
    fn tolerance_controls_accuracy() {
        let run = |rtol: f64| {
            let mut y = scalar(1.0);
            let cfg = IntegratorConfig::with_tolerances(rtol, rtol * 1e-2);
            let stats = integrate(
                |s: &DMatrix<C64>, out: &mut DMatrix<C64>| {
                    out[(0, 0)] = C64::new(0.0, 5.0) * s[(0, 0)];
                },
                &mut y,
                3.0,
                &cfg,
            )
            .unwrap();
            ((y[(0, 0)] - C64::new((15.0f64).cos(), (15.0f64).sin())).norm(), stats.steps)
        };
        let (e_loose, s_loose) = run(1e-5);
        let (e_tight, s_tight) = run(1e-10);
        assert!(e_tight < e_loose);
        assert!(s_tight > s_loose);
        assert!(e_tight < 1e-8);
    }

    #[test]
    fn zero_duration_no_op() {
        let mut y = scalar(0.7);
        let cfg = IntegratorConfig::default();
        let stats =
            integrate(|_: &DMatrix<C64>, out: &mut DMatrix<C64>| out.set_zero(), &mut y, 0.0, &cfg)
                .unwrap();
        assert_eq!(stats.steps, 0);
        assert_relative_eq!(y[(0, 0)].re, 0.7);
    }
}
