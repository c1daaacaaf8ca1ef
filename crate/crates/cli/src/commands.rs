//! The three commands behind the binary: `simulate`, `steady`, `verify`.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use coatsim::analysis::{
    continuous_dependence_experiment, energy_inequality_check, minimal_squeeze_rank,
};
use coatsim::grid::l2_norm;
use coatsim::integrate::{random_ic, simulate, Scheme, SchemeConfig};
use coatsim::model::{reaction_full, steady_state};
use coatsim::spectral::build_spectral_operator;
use coatsim::Error as CoreError;

use crate::config::RunConfig;
use crate::error::Result;
use crate::output;

/// Files written by one `simulate` invocation.
#[derive(Debug)]
pub struct SimulateSummary {
    pub out_dir: PathBuf,
    pub files: Vec<PathBuf>,
    pub final_std_u: f64,
}

/// Run the configured experiment and emit diagnostics.csv plus per-snapshot
/// `u_<t>.csv` / `u_<t>.pgm` / `u_<t>.meta.txt` (and `u_<t>.ppm` when enabled).
pub fn cmd_simulate(cfg: &RunConfig, out_dir: &Path) -> Result<SimulateSummary> {
    let g = cfg.grid()?;
    let p = cfg.params;
    let sop = build_spectral_operator(&g, &p);
    let ic = cfg.initial_state(&g)?;
    let scheme_cfg = cfg.scheme_config()?;

    let traj = simulate(&ic, &scheme_cfg, &g, &sop, &p, |_, _, _| {})?;

    fs::create_dir_all(out_dir)?;
    let mut files = Vec::new();
    let mut write = |name: String, bytes: Vec<u8>| -> Result<()> {
        let path = out_dir.join(name);
        fs::write(&path, bytes)?;
        files.push(path);
        Ok(())
    };

    write("diagnostics.csv".into(), output::diagnostics_csv(&traj.diagnostics).into_bytes())?;
    for (t, state) in &traj.snapshots {
        let stamp = output::format_time(*t);
        write(format!("u_{stamp}.csv"), output::field_csv(&state.u, &g).into_bytes())?;
        write(format!("u_{stamp}.pgm"), output::pgm_bytes(&state.u, &g))?;
        write(format!("u_{stamp}.meta.txt"), output::meta_text(*t, &state.u, &g).into_bytes())?;
        if cfg.ppm {
            write(format!("u_{stamp}.ppm"), output::ppm_bytes(&state.u, &g))?;
        }
    }

    let final_std_u = traj.diagnostics.last().map(|r| r.std_u).unwrap_or(0.0);
    Ok(SimulateSummary { out_dir: out_dir.to_path_buf(), files, final_std_u })
}

/// Report the homogeneous steady state and its residuals, 12 significant
/// digits.
pub fn cmd_steady(cfg: &RunConfig) -> Result<String> {
    let (us, vs) = steady_state(&cfg.params, 1e-10)?;
    let kv = reaction_full(us, vs, &cfg.params);
    Ok(format!(
        "u* = {us:.11e}\nv* = {vs:.11e}\nresidual_fu = {:.3e}\nresidual_fv = {:.3e}\n",
        kv.fu, kv.fv
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => write!(f, "PASS"),
            CheckStatus::Fail => write!(f, "FAIL"),
            CheckStatus::Skip => write!(f, "SKIP"),
        }
    }
}

#[derive(Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    /// True when no check failed (skips are fine).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn table(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            out.push_str(&format!("[{}] {:<18} {}\n", check.status, check.name, check.detail));
        }
        out.push_str(if self.passed() { "verification passed\n" } else { "verification FAILED\n" });
        out
    }
}

/// Fraction of the total mode count the squeeze rank may reach.
const SQUEEZE_RANK_FRACTION: f64 = 0.40;
const DEPENDENCE_EPS: [f64; 3] = [1e-3, 5e-4, 2.5e-4];

/// Run the invariant suite on one configuration: positivity, the energy
/// inequality, the cross-scheme gap, dependence ratios, and the squeeze
/// sweep. Trajectory-free checks are skipped when `t_end = 0`.
pub fn cmd_verify(cfg: &RunConfig) -> Result<VerifyReport> {
    let g = cfg.grid()?;
    let p = cfg.params;
    let sop = build_spectral_operator(&g, &p);
    let ic = cfg.initial_state(&g)?;
    let scheme_cfg = cfg.scheme_config()?;
    let mut checks = Vec::new();

    // positivity of the configured run, sampled at every accepted step
    let mut min_u = ic.u.min();
    let mut min_v = ic.v.min();
    let run = simulate(&ic, &scheme_cfg, &g, &sop, &p, |_, _, state| {
        min_u = min_u.min(state.u.min());
        min_v = min_v.min(state.v.min());
    });
    let traj = match run {
        Ok(traj) => {
            let neg_energy_clean =
                traj.diagnostics.iter().all(|r| r.neg_energy_u == 0.0 && r.neg_energy_v == 0.0);
            let ok = min_u >= 0.0 && min_v >= 0.0 && neg_energy_clean;
            checks.push(CheckResult {
                name: "positivity",
                status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
                detail: format!("min u = {min_u:.6}, min v = {min_v:.6} over every step"),
            });
            Some(traj)
        }
        Err(CoreError::NonFinite { step }) => {
            checks.push(CheckResult {
                name: "positivity",
                status: CheckStatus::Fail,
                detail: format!("run blew up: non-finite value at step {step}"),
            });
            None
        }
        Err(other) => return Err(other.into()),
    };

    // energy inequality on the recorded snapshots
    match &traj {
        Some(traj) if traj.diagnostics.len() >= 2 => {
            let report = energy_inequality_check(traj, &p)?;
            checks.push(CheckResult {
                name: "energy-inequality",
                status: if report.uniformly_bounded {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                detail: format!(
                    "gamma* = {}, fitted C = {:.6e}, sup E = {:.6e}",
                    report.gamma_star, report.c_hat, report.sup_energy
                ),
            });
        }
        _ => checks.push(CheckResult {
            name: "energy-inequality",
            status: CheckStatus::Skip,
            detail: "needs a trajectory with at least two snapshots".into(),
        }),
    }

    let horizon = cfg.t_end.min(1.0);
    if horizon <= 0.0 {
        for name in ["cross-scheme-gap", "dependence-ratios", "squeeze-sweep"] {
            checks.push(CheckResult {
                name,
                status: CheckStatus::Skip,
                detail: "t_end = 0: no trajectory to compare".into(),
            });
        }
        return Ok(VerifyReport { checks });
    }

    // cross-scheme gap under dt refinement
    let mut gaps = Vec::new();
    let mut gap_failure = None;
    for divisor in [1.0, 2.0, 4.0] {
        let dt = cfg.dt / divisor;
        let imex_cfg = SchemeConfig::new(Scheme::Imex, dt, horizon, vec![])?;
        let etd_cfg = SchemeConfig::new(Scheme::Etd, dt, horizon, vec![])?;
        let a = simulate(&ic, &imex_cfg, &g, &sop, &p, |_, _, _| {});
        let b = simulate(&ic, &etd_cfg, &g, &sop, &p, |_, _, _| {});
        match (a, b) {
            (Ok(a), Ok(b)) => {
                gaps.push(l2_norm(&a.final_state().sub(b.final_state()), &g)?);
            }
            (Err(e), _) | (_, Err(e)) => {
                gap_failure = Some(e.to_string());
                break;
            }
        }
    }
    if let Some(message) = gap_failure {
        checks.push(CheckResult {
            name: "cross-scheme-gap",
            status: CheckStatus::Fail,
            detail: message,
        });
    } else {
        let monotone = gaps[0] > gaps[1] && gaps[1] > gaps[2];
        let r1 = gaps[0] / gaps[1];
        let r2 = gaps[1] / gaps[2];
        let in_band = (1.5..=2.5).contains(&r1) && (1.5..=2.5).contains(&r2);
        let shown: Vec<String> = gaps.iter().map(|g| format!("{g:.3e}")).collect();
        checks.push(CheckResult {
            name: "cross-scheme-gap",
            status: if monotone && in_band { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("gaps {shown:?} refinement ratios {r1:.3}, {r2:.3}"),
        });
    }

    // linear response to perturbed initial data
    let raw_dir = random_ic(&g, -1.0, 1.0, -1.0, 1.0, cfg.seed.wrapping_add(1))?;
    let dir_norm = l2_norm(&raw_dir, &g)?;
    let direction = coatsim::State::constant(&g, 0.0, 0.0).add_scaled(1.0 / dir_norm, &raw_dir);
    match continuous_dependence_experiment(
        &ic,
        &direction,
        &DEPENDENCE_EPS,
        horizon,
        &scheme_cfg,
        &g,
        &sop,
        &p,
    ) {
        Ok(report) => checks.push(CheckResult {
            name: "dependence-ratios",
            status: if report.lipschitz_consistent { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!(
                "D(eps)/eps = {:?}",
                report.ratios.iter().map(|r| format!("{r:.5}")).collect::<Vec<_>>()
            ),
        }),
        Err(e) => checks.push(CheckResult {
            name: "dependence-ratios",
            status: CheckStatus::Fail,
            detail: e.to_string(),
        }),
    }

    // squeeze sweep over nearby random pairs
    let mut worst_rank = 0usize;
    let mut squeeze_failure = None;
    for trial in 0..10u64 {
        let x0 = random_ic(&g, 23.0, 24.0, 24.0, 25.0, cfg.seed.wrapping_add(100 + trial))?;
        let noise = random_ic(&g, -1.0, 1.0, -1.0, 1.0, cfg.seed.wrapping_add(200 + trial))?;
        let y0 = x0.add_scaled(1e-3, &noise);
        match minimal_squeeze_rank(&x0, &y0, horizon, &scheme_cfg, &g, &sop, &p) {
            Ok(rank) => worst_rank = worst_rank.max(rank),
            Err(e) => {
                squeeze_failure = Some(e.to_string());
                break;
            }
        }
    }
    if let Some(message) = squeeze_failure {
        checks.push(CheckResult {
            name: "squeeze-sweep",
            status: CheckStatus::Fail,
            detail: message,
        });
    } else {
        let budget = (SQUEEZE_RANK_FRACTION * sop.mode_count() as f64) as usize;
        checks.push(CheckResult {
            name: "squeeze-sweep",
            status: if worst_rank <= budget { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("N* = {worst_rank} of {} modes (budget {budget})", sop.mode_count()),
        });
    }

    Ok(VerifyReport { checks })
}
