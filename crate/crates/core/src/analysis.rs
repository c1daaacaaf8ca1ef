//! Numerical verification of the model's analytical guarantees: positivity
//! monitor, dissipative energy estimate, continuous dependence on initial
//! data, absorbing-set radius, spectral squeezing diagnostic, and the
//! closed-form attractor dimension bound.

use crate::error::{Error, Result};
use crate::grid::{l2_norm, Field, Grid, State};
use crate::integrate::{simulate, SchemeConfig, Trajectory};
use crate::model::Params;
use crate::spectral::{Component, SpectralOperator};

/// Per-snapshot norms, extrema, and energies, ready for CSV emission.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagnosticsRecord {
    pub t: f64,
    pub norm_x: f64,
    pub min_u: f64,
    pub min_v: f64,
    pub max_u: f64,
    pub max_v: f64,
    pub std_u: f64,
    pub neg_energy_u: f64,
    pub neg_energy_v: f64,
    /// Spectral norm of the diffusion-decay operator applied to the state,
    /// `sqrt(w sum lam^2 c^2)` over all modes and components.
    pub a_norm: f64,
}

/// Compute the full diagnostics record for one state.
pub fn diagnostics_record(
    t: f64,
    x: &State,
    g: &Grid,
    sop: &SpectralOperator,
) -> Result<DiagnosticsRecord> {
    g.check_state(x)?;
    let cu = sop.plan().forward(&x.u)?;
    let cv = sop.plan().forward(&x.v)?;
    let mut a_sq = 0.0;
    for (idx, &c) in cu.values().iter().enumerate() {
        let lc = sop.lam_u()[idx] * c;
        a_sq += lc * lc;
    }
    for (idx, &c) in cv.values().iter().enumerate() {
        let lc = sop.lam_v()[idx] * c;
        a_sq += lc * lc;
    }
    Ok(DiagnosticsRecord {
        t,
        norm_x: l2_norm(x, g)?,
        min_u: x.u.min(),
        min_v: x.v.min(),
        max_u: x.u.max(),
        max_v: x.v.max(),
        std_u: x.u.std(),
        neg_energy_u: negative_part_energy(&x.u, g)?,
        neg_energy_v: negative_part_energy(&x.v, g)?,
        a_norm: (g.weight() * a_sq).sqrt(),
    })
}

/// Quadratic cutoff energy of the negative part, `w sum H(f)` with
/// `H(x) = x^2/2` for `x < 0` and `0` otherwise. Zero exactly when the field
/// is nonnegative everywhere.
pub fn negative_part_energy(f: &Field, g: &Grid) -> Result<f64> {
    g.check_field(f)?;
    let sum: f64 = f.values().iter().filter(|&&x| x < 0.0).map(|&x| 0.5 * x * x).sum();
    Ok(g.weight() * sum)
}

/// Outcome of fitting the dissipative energy inequality
/// `E(t) <= e^{-2 gamma* (t - s)} E(s) + C / (2 gamma*)` over all snapshot
/// pairs, with `E = ||X||^2` and `gamma* = min(gamma, gamma beta) / 2`.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyReport {
    pub gamma_star: f64,
    /// Smallest constant making the inequality hold between all pairs.
    pub c_hat: f64,
    pub sup_energy: f64,
    /// Energy never increases once above the fitted absorbing level
    /// (with a small margin), and stays finite.
    pub uniformly_bounded: bool,
}

/// Relative headroom over the fitted absorbing level before the
/// no-increase requirement kicks in.
const ENERGY_BAND_MARGIN: f64 = 0.05;

pub fn energy_inequality_check(traj: &Trajectory, p: &Params) -> Result<EnergyReport> {
    if traj.diagnostics.len() < 2 {
        return Err(Error::EmptyTrajectory);
    }
    let gamma_star = p.gamma().min(p.gamma() * p.beta()) / 2.0;
    let records: Vec<(f64, f64)> =
        traj.diagnostics.iter().map(|r| (r.t, r.norm_x * r.norm_x)).collect();

    let mut c_hat = 0.0_f64;
    for (i, &(s, e_s)) in records.iter().enumerate() {
        for &(t, e_t) in &records[i + 1..] {
            let decayed = (-2.0 * gamma_star * (t - s)).exp() * e_s;
            c_hat = c_hat.max(2.0 * gamma_star * (e_t - decayed));
        }
    }
    c_hat = c_hat.max(0.0);

    let sup_energy = records.iter().fold(0.0_f64, |m, &(_, e)| m.max(e));
    let threshold = c_hat / (2.0 * gamma_star) * (1.0 + ENERGY_BAND_MARGIN);
    let mut bounded = sup_energy.is_finite();
    for pair in records.windows(2) {
        let (e_now, e_next) = (pair[0].1, pair[1].1);
        if e_now > threshold && e_next > e_now * (1.0 + 1e-9) {
            bounded = false;
        }
    }

    Ok(EnergyReport { gamma_star, c_hat, sup_energy, uniformly_bounded: bounded })
}

/// Linear-response probe of continuous dependence on initial data.
#[derive(Debug, Clone, PartialEq)]
pub struct DependenceReport {
    pub eps: Vec<f64>,
    /// `D(eps) = ||X(t, x0 + eps d) - X(t, x0)||` for each epsilon.
    pub d: Vec<f64>,
    pub ratios: Vec<f64>,
    /// Largest observed `D(eps)/eps`; every probe satisfies `D <= K eps`.
    pub k_max: f64,
    /// Ratios agree within 10% across the epsilon list.
    pub lipschitz_consistent: bool,
}

/// Runs the base trajectory and one perturbed trajectory per epsilon, all to
/// time `t`, and reports the response ratios `D(eps)/eps`.
#[allow(clippy::too_many_arguments)]
pub fn continuous_dependence_experiment(
    x0: &State,
    direction: &State,
    eps_list: &[f64],
    t: f64,
    cfg: &SchemeConfig,
    g: &Grid,
    sop: &SpectralOperator,
    p: &Params,
) -> Result<DependenceReport> {
    if eps_list.len() < 3 {
        return Err(Error::Domain("need at least 3 epsilon values".into()));
    }
    for pair in eps_list.windows(2) {
        let decreasing = pair[1] < pair[0];
        if !decreasing {
            return Err(Error::Domain("epsilon list must be strictly decreasing".into()));
        }
    }
    let all_positive = eps_list[eps_list.len() - 1] > 0.0;
    if !all_positive {
        return Err(Error::Domain("epsilon values must be positive".into()));
    }
    if l2_norm(direction, g)? == 0.0 {
        return Err(Error::Domain("direction must be nonzero".into()));
    }

    let run_cfg = SchemeConfig::new(cfg.scheme, cfg.dt, t, vec![])?;
    let base = simulate(x0, &run_cfg, g, sop, p, |_, _, _| {})?;
    let base_final = base.final_state();

    let mut d = Vec::with_capacity(eps_list.len());
    let mut ratios = Vec::with_capacity(eps_list.len());
    for &eps in eps_list {
        let perturbed = x0.add_scaled(eps, direction);
        let traj = simulate(&perturbed, &run_cfg, g, sop, p, |_, _, _| {})?;
        let dist = l2_norm(&traj.final_state().sub(base_final), g)?;
        d.push(dist);
        ratios.push(dist / eps);
    }

    let k_max = ratios.iter().fold(0.0_f64, |m, &r| m.max(r));
    let k_min = ratios.iter().fold(f64::INFINITY, |m, &r| m.min(r));
    let lipschitz_consistent = k_min > 0.0 && (k_max - k_min) <= 0.10 * k_min;

    Ok(DependenceReport { eps: eps_list.to_vec(), d, ratios, k_max, lipschitz_consistent })
}

/// Head/tail split of an evolved difference across the rank-N spectral
/// projection, plus the overall contraction factor.
#[derive(Debug, Clone, PartialEq)]
pub struct SqueezeReport {
    pub rank: usize,
    /// Energy of the difference inside the first N modes of the sorted order.
    pub head: f64,
    /// Energy outside the projection.
    pub tail: f64,
    /// `||S(t0)x - S(t0)y|| / ||x - y||`.
    pub contraction: f64,
    pub tail_le_head: bool,
}

fn squeeze_energies(diff: &State, g: &Grid, sop: &SpectralOperator) -> Result<(Vec<f64>, f64)> {
    let cu = sop.plan().forward(&diff.u)?;
    let cv = sop.plan().forward(&diff.v)?;
    let mut energies = Vec::with_capacity(sop.mode_count());
    for (idx, component) in sop.sorted_triples() {
        let c = match component {
            Component::U => cu.values()[idx],
            Component::V => cv.values()[idx],
        };
        energies.push(g.weight() * c * c);
    }
    let total: f64 = energies.iter().sum();
    Ok((energies, total))
}

/// Evolve `x0` and `y0` to `t0`, split the difference at rank `n` in the
/// sorted eigenmode order, and report head/tail energies and contraction.
#[allow(clippy::too_many_arguments)]
pub fn squeeze_diagnostic(
    x0: &State,
    y0: &State,
    t0: f64,
    n: usize,
    cfg: &SchemeConfig,
    g: &Grid,
    sop: &SpectralOperator,
    p: &Params,
) -> Result<SqueezeReport> {
    let initial_gap = l2_norm(&x0.sub(y0), g)?;
    if initial_gap == 0.0 {
        return Err(Error::Domain("x0 and y0 must differ".into()));
    }
    if n > sop.mode_count() {
        return Err(Error::Domain(format!(
            "rank {n} exceeds the {} available modes",
            sop.mode_count()
        )));
    }
    let run_cfg = SchemeConfig::new(cfg.scheme, cfg.dt, t0, vec![])?;
    let ax = simulate(x0, &run_cfg, g, sop, p, |_, _, _| {})?;
    let ay = simulate(y0, &run_cfg, g, sop, p, |_, _, _| {})?;
    let diff = ax.final_state().sub(ay.final_state());

    let (energies, total) = squeeze_energies(&diff, g, sop)?;
    let head_sq: f64 = energies[..n].iter().sum();
    let tail_sq = (total - head_sq).max(0.0);
    let head = head_sq.sqrt();
    let tail = tail_sq.sqrt();
    Ok(SqueezeReport {
        rank: n,
        head,
        tail,
        contraction: l2_norm(&diff, g)? / initial_gap,
        tail_le_head: tail <= head,
    })
}

/// Smallest rank N at which the evolved difference has at least as much
/// energy in the projection head as in the tail (equivalently, the head
/// holds at least half the total energy).
pub fn minimal_squeeze_rank(
    x0: &State,
    y0: &State,
    t0: f64,
    cfg: &SchemeConfig,
    g: &Grid,
    sop: &SpectralOperator,
    p: &Params,
) -> Result<usize> {
    let initial_gap = l2_norm(&x0.sub(y0), g)?;
    if initial_gap == 0.0 {
        return Err(Error::Domain("x0 and y0 must differ".into()));
    }
    let run_cfg = SchemeConfig::new(cfg.scheme, cfg.dt, t0, vec![])?;
    let ax = simulate(x0, &run_cfg, g, sop, p, |_, _, _| {})?;
    let ay = simulate(y0, &run_cfg, g, sop, p, |_, _, _| {})?;
    let diff = ax.final_state().sub(ay.final_state());

    let (energies, total) = squeeze_energies(&diff, g, sop)?;
    let mut head = 0.0;
    for (n, e) in energies.iter().enumerate() {
        if head >= total - head {
            return Ok(n);
        }
        head += e;
    }
    Ok(sop.mode_count())
}

/// Closed-form fractal dimension bound of the exponential attractor:
/// `1 + N max{ -log(3L/theta + 1) / log(2 delta + theta), 1 }`.
///
/// Requires `0 < delta < 1/4`, `L > 0`, and `0 < theta < 1 - 2 delta` so the
/// denominator's logarithm is negative.
pub fn fractal_dimension_bound(delta: f64, n: usize, l: f64, theta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 0.25) {
        return Err(Error::Domain(format!("delta must lie in (0, 1/4), got {delta}")));
    }
    if !(l > 0.0 && l.is_finite()) {
        return Err(Error::Domain(format!("L must be positive, got {l}")));
    }
    if !(theta > 0.0 && theta < 1.0 - 2.0 * delta) {
        return Err(Error::Domain(format!(
            "theta must lie in (0, 1 - 2 delta) = (0, {}), got {theta}",
            1.0 - 2.0 * delta
        )));
    }
    let ratio = -((3.0 * l / theta + 1.0).ln()) / (2.0 * delta + theta).ln();
    Ok(1.0 + n as f64 * ratio.max(1.0))
}

/// Largest observed spectral norm `||A X(t)||` past the burn-in time: the
/// empirical radius of the absorbing ball in the graph norm.
pub fn absorbing_radius_estimate(traj: &Trajectory, burn_in: f64) -> Result<f64> {
    let mut radius: Option<f64> = None;
    for record in &traj.diagnostics {
        if record.t >= burn_in {
            radius = Some(radius.map_or(record.a_norm, |r: f64| r.max(record.a_norm)));
        }
    }
    radius.ok_or(Error::InsufficientData { burn_in })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrate::{random_ic, Scheme};
    use crate::model::steady_state;
    use crate::spectral::build_spectral_operator;

    fn setup() -> (Grid, Params, SpectralOperator) {
        let g = Grid::new(26, 26, 25.0, 25.0).unwrap();
        let p = Params::murray();
        let sop = build_spectral_operator(&g, &p);
        (g, p, sop)
    }

    #[test]
    fn negative_energy_zero_iff_nonnegative() {
        let (g, _, _) = setup();
        let f = Field::constant(&g, 2.0);
        assert_eq!(negative_part_energy(&f, &g).unwrap(), 0.0);

        let mut f = Field::zeros(&g);
        f.values_mut()[g.idx(3, 3)] = -2.0;
        let e = negative_part_energy(&f, &g).unwrap();
        assert!((e - 2.0 * g.weight()).abs() < 1e-15);
        assert!(e > 0.0);
    }

    #[test]
    fn gamma_star_for_demo_params() {
        let (g, p, sop) = setup();
        let ic = State::constant(&g, 1.0, 1.0);
        let cfg = SchemeConfig::new(Scheme::Imex, 0.01, 0.2, vec![0.1]).unwrap();
        let traj = simulate(&ic, &cfg, &g, &sop, &p, |_, _, _| {}).unwrap();
        let report = energy_inequality_check(&traj, &p).unwrap();
        assert_eq!(report.gamma_star, 7.5);
    }

    #[test]
    fn energy_check_needs_two_snapshots() {
        let (g, p, sop) = setup();
        let ic = State::constant(&g, 1.0, 1.0);
        let cfg = SchemeConfig::new(Scheme::Imex, 0.01, 0.0, vec![]).unwrap();
        let traj = simulate(&ic, &cfg, &g, &sop, &p, |_, _, _| {}).unwrap();
        assert_eq!(energy_inequality_check(&traj, &p), Err(Error::EmptyTrajectory));
    }

    #[test]
    fn steady_trajectory_pins_the_fitted_constant() {
        let (g, p, sop) = setup();
        let (us, vs) = steady_state(&p, 1e-12).unwrap();
        let ic = State::constant(&g, us, vs);
        let snapshots: Vec<f64> = (1..=15).map(|k| 10.0 * k as f64).collect();
        let cfg = SchemeConfig::new(Scheme::Etd, 0.05, 150.0, snapshots).unwrap();
        let traj = simulate(&ic, &cfg, &g, &sop, &p, |_, _, _| {}).unwrap();
        let report = energy_inequality_check(&traj, &p).unwrap();
        let e_star = traj.diagnostics[0].norm_x.powi(2);
        // over a 150-unit span the decayed term underflows, so the fit
        // equals 2 gamma* E* up to the tiny numerical drift of the run
        assert!(
            (report.c_hat / (2.0 * report.gamma_star) - e_star).abs() < 1e-6 * e_star,
            "c_hat/(2 gamma*) = {}, E* = {}",
            report.c_hat / (2.0 * report.gamma_star),
            e_star
        );
        assert!(report.uniformly_bounded);
    }

    #[test]
    fn dependence_at_time_zero_is_the_identity() {
        let (g, p, sop) = setup();
        let x0 = State::constant(&g, 20.0, 20.0);
        let direction = State::constant(&g, 1.0, 0.0);
        let cfg = SchemeConfig::new(Scheme::Imex, 0.01, 1.0, vec![]).unwrap();
        let eps = [1e-3, 5e-4, 2.5e-4];
        let report =
            continuous_dependence_experiment(&x0, &direction, &eps, 0.0, &cfg, &g, &sop, &p)
                .unwrap();
        let dir_norm = l2_norm(&direction, &g).unwrap();
        for (d, e) in report.d.iter().zip(&eps) {
            assert!((d - e * dir_norm).abs() < 1e-12 * dir_norm);
        }
        assert!(report.lipschitz_consistent);
    }

    #[test]
    fn dependence_rejects_bad_probes() {
        let (g, p, sop) = setup();
        let x0 = State::constant(&g, 20.0, 20.0);
        let direction = State::constant(&g, 1.0, 0.0);
        let zero = State::constant(&g, 0.0, 0.0);
        let cfg = SchemeConfig::new(Scheme::Imex, 0.01, 1.0, vec![]).unwrap();
        assert!(continuous_dependence_experiment(
            &x0,
            &direction,
            &[1e-3, 5e-4],
            1.0,
            &cfg,
            &g,
            &sop,
            &p
        )
        .is_err());
        assert!(continuous_dependence_experiment(
            &x0,
            &direction,
            &[1e-3, 2e-3, 5e-4],
            1.0,
            &cfg,
            &g,
            &sop,
            &p
        )
        .is_err());
        assert!(continuous_dependence_experiment(
            &x0,
            &zero,
            &[1e-3, 5e-4, 2.5e-4],
            1.0,
            &cfg,
            &g,
            &sop,
            &p
        )
        .is_err());
    }

    #[test]
    fn squeeze_split_is_orthogonal_and_exhaustive() {
        let (g, p, sop) = setup();
        let x0 = random_ic(&g, 23.0, 24.0, 24.0, 25.0, 11).unwrap();
        let y0 = random_ic(&g, 23.0, 24.0, 24.0, 25.0, 12).unwrap();
        let cfg = SchemeConfig::new(Scheme::Etd, 0.01, 1.0, vec![]).unwrap();

        let total_modes = sop.mode_count();
        let run = simulate(
            &x0,
            &SchemeConfig::new(Scheme::Etd, 0.01, 1.0, vec![]).unwrap(),
            &g,
            &sop,
            &p,
            |_, _, _| {},
        )
        .unwrap();
        let run_y = simulate(
            &y0,
            &SchemeConfig::new(Scheme::Etd, 0.01, 1.0, vec![]).unwrap(),
            &g,
            &sop,
            &p,
            |_, _, _| {},
        )
        .unwrap();
        let diff_norm = l2_norm(&run.final_state().sub(run_y.final_state()), &g).unwrap();

        for n in [0, 1, 7, 100, total_modes] {
            let report = squeeze_diagnostic(&x0, &y0, 1.0, n, &cfg, &g, &sop, &p).unwrap();
            let recomposed = (report.head * report.head + report.tail * report.tail).sqrt();
            assert!(
                (recomposed - diff_norm).abs() < 1e-10 * diff_norm,
                "n = {n}: {} vs {}",
                recomposed,
                diff_norm
            );
        }

        let all = squeeze_diagnostic(&x0, &y0, 1.0, total_modes, &cfg, &g, &sop, &p).unwrap();
        assert_eq!(all.tail, 0.0);
        assert!(all.tail_le_head);

        let none = squeeze_diagnostic(&x0, &y0, 1.0, 0, &cfg, &g, &sop, &p).unwrap();
        assert_eq!(none.head, 0.0);
        assert!((none.tail - diff_norm).abs() < 1e-10 * diff_norm);
    }

    #[test]
    fn squeeze_rejects_equal_states() {
        let (g, p, sop) = setup();
        let x0 = State::constant(&g, 1.0, 1.0);
        let cfg = SchemeConfig::new(Scheme::Etd, 0.01, 1.0, vec![]).unwrap();
        assert!(squeeze_diagnostic(&x0, &x0, 1.0, 3, &cfg, &g, &sop, &p).is_err());
        assert!(minimal_squeeze_rank(&x0, &x0, 1.0, &cfg, &g, &sop, &p).is_err());
    }

    #[test]
    fn minimal_rank_matches_diagnostic_sweep() {
        let (g, p, sop) = setup();
        let x0 = random_ic(&g, 23.0, 24.0, 24.0, 25.0, 21).unwrap();
        let y0 = x0.add_scaled(1e-3, &random_ic(&g, -1.0, 1.0, -1.0, 1.0, 22).unwrap());
        let cfg = SchemeConfig::new(Scheme::Imex, 0.01, 1.0, vec![]).unwrap();
        let n_star = minimal_squeeze_rank(&x0, &y0, 1.0, &cfg, &g, &sop, &p).unwrap();
        let at = squeeze_diagnostic(&x0, &y0, 1.0, n_star, &cfg, &g, &sop, &p).unwrap();
        assert!(at.tail_le_head);
        if n_star > 0 {
            let below = squeeze_diagnostic(&x0, &y0, 1.0, n_star - 1, &cfg, &g, &sop, &p).unwrap();
            assert!(!below.tail_le_head);
        }
    }

    #[test]
    fn dimension_bound_values() {
        // empty projection
        assert_eq!(fractal_dimension_bound(0.1, 0, 1.0, 0.5).unwrap(), 1.0);

        // hand evaluation of the closed form: 1 + 10 ln(7)/(-ln(3/4))
        let expected = 1.0 + 10.0 * (7.0_f64.ln() / -(0.75_f64.ln()));
        let got = fractal_dimension_bound(0.125, 10, 1.0, 0.5).unwrap();
        assert!((got - expected).abs() < 1e-12);
        assert!((got - 68.640994535086).abs() < 1e-9);

        // linear in N: slope per mode is the max-term
        let at_n = fractal_dimension_bound(0.125, 10, 1.0, 0.5).unwrap();
        let at_2n = fractal_dimension_bound(0.125, 20, 1.0, 0.5).unwrap();
        assert!(((at_2n - at_n) - (at_n - 1.0)).abs() < 1e-9);
    }

    #[test]
    fn dimension_bound_monotone_toward_the_theta_limit() {
        // on a grid approaching theta -> (1 - 2 delta)^- the bound stays
        // finite and is nonincreasing in |log(2 delta + theta)|, i.e.
        // nondecreasing in theta on this range
        let delta = 0.125;
        let mut prev = f64::NEG_INFINITY;
        let mut prev_log = f64::INFINITY;
        for k in 0..=40 {
            let theta = 0.25 + 0.012 * k as f64; // up to 0.73 < 0.75
            let bound = fractal_dimension_bound(delta, 10, 1.0, theta).unwrap();
            let log_mag = (2.0 * delta + theta).ln().abs();
            assert!(bound.is_finite());
            assert!(log_mag < prev_log);
            assert!(bound >= prev, "bound regressed at theta = {theta}");
            prev = bound;
            prev_log = log_mag;
        }
    }

    #[test]
    fn dimension_bound_domain_errors() {
        assert!(fractal_dimension_bound(0.3, 1, 1.0, 0.1).is_err());
        assert!(fractal_dimension_bound(0.0, 1, 1.0, 0.1).is_err());
        assert!(fractal_dimension_bound(0.1, 1, 0.0, 0.1).is_err());
        assert!(fractal_dimension_bound(0.1, 1, 1.0, 0.8).is_err()); // theta >= 1 - 2 delta
        assert!(fractal_dimension_bound(0.1, 1, 1.0, 0.0).is_err());
    }

    #[test]
    fn absorbing_radius_of_steady_and_zero_states() {
        let (g, p, sop) = setup();
        let (us, vs) = steady_state(&p, 1e-12).unwrap();
        let ic = State::constant(&g, us, vs);
        let cfg = SchemeConfig::new(Scheme::Etd, 0.05, 30.0, vec![25.0]).unwrap();
        let traj = simulate(&ic, &cfg, &g, &sop, &p, |_, _, _| {}).unwrap();
        let radius = absorbing_radius_estimate(&traj, 20.0).unwrap();
        // A X* = (gamma u*, gamma beta v*) on constants
        let expected =
            (g.volume() * ((p.gamma() * us).powi(2) + (p.gamma() * p.beta() * vs).powi(2))).sqrt();
        assert!((radius - expected).abs() < 1e-6 * expected, "{radius} vs {expected}");

        assert_eq!(
            absorbing_radius_estimate(&traj, 50.0),
            Err(Error::InsufficientData { burn_in: 50.0 })
        );

        let zero = State::constant(&g, 0.0, 0.0);
        let cfg0 = SchemeConfig::new(Scheme::Etd, 0.05, 0.0, vec![]).unwrap();
        let traj0 = simulate(&zero, &cfg0, &g, &sop, &p, |_, _, _| {}).unwrap();
        assert_eq!(absorbing_radius_estimate(&traj0, 0.0).unwrap(), 0.0);
    }
}
