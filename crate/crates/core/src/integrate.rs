//! Time integration of the semidiscrete system by two independent schemes,
//! plus the fixed-step driver with snapshot and observer hooks.
//!
//! Both steppers advance `dX/dt + A X = F(X)` with `A` the diagonalized
//! diffusion-decay operator and `F` the regularized split nonlinearity:
//!
//! * IMEX: backward-Euler in `A`, explicit in `F` — per mode
//!   `c' = (c + dt f) / (1 + dt lam)`.
//! * ETD (exponential Euler): the variation-of-constants formula with `F`
//!   frozen at the left endpoint — per mode
//!   `c' = e^{-dt lam} c + (1 - e^{-dt lam})/lam f`.

use crate::analysis::{diagnostics_record, DiagnosticsRecord};
use crate::error::{Error, Result};
use crate::grid::{Field, Grid, State};
use crate::model::{reaction_split_state, Params};
use crate::rng::SplitMix64;
use crate::spectral::SpectralOperator;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Imex,
    Etd,
}

/// Fixed-step run description. Steps are shortened to land exactly on every
/// snapshot time and on `t_end`; snapshots are never interpolated.
#[derive(Debug, Clone, PartialEq)]
pub struct SchemeConfig {
    pub scheme: Scheme,
    pub dt: f64,
    pub t_end: f64,
    pub snapshot_times: Vec<f64>,
}

impl SchemeConfig {
    pub fn new(scheme: Scheme, dt: f64, t_end: f64, snapshot_times: Vec<f64>) -> Result<Self> {
        let cfg = Self { scheme, dt, t_end, snapshot_times };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.dt > 0.0 && self.dt.is_finite()) {
            return Err(Error::InvalidParameter(format!("dt must be positive, got {}", self.dt)));
        }
        if !(self.t_end >= 0.0 && self.t_end.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "t_end must be nonnegative, got {}",
                self.t_end
            )));
        }
        for &t in &self.snapshot_times {
            if !(0.0..=self.t_end).contains(&t) {
                return Err(Error::InvalidParameter(format!(
                    "snapshot time {t} outside [0, {}]",
                    self.t_end
                )));
            }
        }
        Ok(())
    }

    /// Snapshot schedule: requested times plus the endpoints, sorted and
    /// deduplicated. The initial state is always recorded.
    pub fn snapshot_schedule(&self) -> Vec<f64> {
        let mut times = self.snapshot_times.clone();
        times.push(0.0);
        times.push(self.t_end);
        times.sort_by(|a, b| a.partial_cmp(b).unwrap());
        times.dedup();
        times
    }
}

/// Snapshots and per-snapshot diagnostics of one run.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub snapshots: Vec<(f64, State)>,
    pub diagnostics: Vec<DiagnosticsRecord>,
}

impl Trajectory {
    pub fn final_state(&self) -> &State {
        &self.snapshots.last().expect("trajectory has at least the initial snapshot").1
    }
}

/// One IMEX coefficient update: solve `(1 + dt lam) c' = c + dt f`.
pub fn imex_mode_update(c: f64, f: f64, lam: f64, dt: f64) -> f64 {
    (c + dt * f) / (1.0 + dt * lam)
}

/// One exponential-Euler coefficient update, exact for frozen forcing:
/// `c' = e^{-dt lam} c + (1 - e^{-dt lam})/lam f`.
pub fn etd_mode_update(c: f64, f: f64, lam: f64, dt: f64) -> f64 {
    let z = dt * lam;
    let decay = (-z).exp();
    // (1 - e^{-z})/lam via expm1 to keep small-z accuracy
    let phi = -(-z).exp_m1() / lam;
    decay * c + phi * f
}

fn step_spectral(
    x: &State,
    dt: f64,
    g: &Grid,
    sop: &SpectralOperator,
    p: &Params,
    update: impl Fn(f64, f64, f64, f64) -> f64,
) -> Result<State> {
    let dt_valid = dt > 0.0;
    if !dt_valid {
        return Err(Error::InvalidParameter(format!("dt must be positive, got {dt}")));
    }
    g.check_state(x)?;
    let f = reaction_split_state(x, p);
    let plan = sop.plan();
    let mut cu = plan.forward(&x.u)?;
    let mut cv = plan.forward(&x.v)?;
    let fu = plan.forward(&f.u)?;
    let fv = plan.forward(&f.v)?;
    for (idx, c) in cu.values_mut().iter_mut().enumerate() {
        *c = update(*c, fu.values()[idx], sop.lam_u()[idx], dt);
    }
    for (idx, c) in cv.values_mut().iter_mut().enumerate() {
        *c = update(*c, fv.values()[idx], sop.lam_v()[idx], dt);
    }
    let next = State::new(plan.inverse(&cu)?, plan.inverse(&cv)?);
    if !next.is_finite() {
        return Err(Error::NonFinite { step: 0 });
    }
    Ok(next)
}

/// Semi-implicit step: implicit diffusion and decay, explicit nonlinearity.
/// Unconditionally stable in the linear part.
pub fn step_imex(
    x: &State,
    dt: f64,
    g: &Grid,
    sop: &SpectralOperator,
    p: &Params,
) -> Result<State> {
    step_spectral(x, dt, g, sop, p, imex_mode_update)
}

/// Exponential-Euler step: the discrete variation-of-constants formula with
/// the nonlinearity frozen over the step.
pub fn step_etd(x: &State, dt: f64, g: &Grid, sop: &SpectralOperator, p: &Params) -> Result<State> {
    step_spectral(x, dt, g, sop, p, etd_mode_update)
}

/// Advance `ic` to `t_end` with fixed steps, shortening steps to land exactly
/// on each snapshot time. `on_step` sees every accepted step.
pub fn simulate<F>(
    ic: &State,
    cfg: &SchemeConfig,
    g: &Grid,
    sop: &SpectralOperator,
    p: &Params,
    mut on_step: F,
) -> Result<Trajectory>
where
    F: FnMut(usize, f64, &State),
{
    cfg.validate()?;
    g.check_state(ic)?;

    let step_fn = match cfg.scheme {
        Scheme::Imex => step_imex,
        Scheme::Etd => step_etd,
    };

    let mut snapshots = Vec::new();
    let mut diagnostics = Vec::new();
    let mut state = ic.clone();
    let mut t = 0.0;
    let mut step_index = 0usize;

    snapshots.push((0.0, state.clone()));
    diagnostics.push(diagnostics_record(0.0, &state, g, sop)?);

    for &target in cfg.snapshot_schedule().iter().skip(1) {
        let tiny = 1e-12 * target.max(1.0);
        loop {
            let remaining = target - t;
            if remaining <= tiny {
                break;
            }
            let landing = remaining <= cfg.dt * (1.0 + 1e-9);
            let h = if landing { remaining } else { cfg.dt };
            // step indices are 1-based: the failing step is the one being taken
            state = step_fn(&state, h, g, sop, p).map_err(|e| match e {
                Error::NonFinite { .. } => Error::NonFinite { step: step_index + 1 },
                other => other,
            })?;
            step_index += 1;
            t = if landing { target } else { t + cfg.dt };
            on_step(step_index, t, &state);
        }
        t = target;
        snapshots.push((target, state.clone()));
        diagnostics.push(diagnostics_record(target, &state, g, sop)?);
    }

    Ok(Trajectory { snapshots, diagnostics })
}

/// Deterministic uniform initial condition: i.i.d. per cell from a seeded
/// SplitMix64 stream, activator cells first, then inhibitor cells.
pub fn random_ic(g: &Grid, u_lo: f64, u_hi: f64, v_lo: f64, v_hi: f64, seed: u64) -> Result<State> {
    for (lo, hi) in [(u_lo, u_hi), (v_lo, v_hi)] {
        let ordered = lo < hi;
        if !ordered || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::BadRange { lo, hi });
        }
    }
    let mut rng = SplitMix64::new(seed);
    let mut draw = |lo: f64, hi: f64| {
        let n = g.cell_count();
        let mut values = Vec::with_capacity(n);
        for _ in 0..n {
            values.push(lo + (hi - lo) * rng.next_f64());
        }
        Field::from_vec(values)
    };
    let u = draw(u_lo, u_hi);
    let v = draw(v_lo, v_hi);
    Ok(State::new(u, v))
}
