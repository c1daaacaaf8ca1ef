//! `key = value` run configuration: parsing, validation, and rendering.
//!
//! Unknown and duplicate keys are rejected with the offending line number.
//! Defaults: `scheme = imex`, `dt = 0.01`, `seed = 0`, no extra snapshots,
//! `ppm = false`.

use std::collections::HashMap;

use coatsim::integrate::{Scheme, SchemeConfig};
use coatsim::model::steady_state;
use coatsim::{Grid, Params, State};

use crate::error::{CliError, Result};

/// How the initial state is built.
#[derive(Debug, Clone, PartialEq)]
pub enum IcMode {
    /// i.i.d. uniform per cell within the configured boxes.
    UniformBox { u_lo: f64, u_hi: f64, v_lo: f64, v_hi: f64 },
    /// The homogeneous steady state.
    Steady,
    /// The steady state scaled by a constant factor.
    SteadyTimes(f64),
}

/// One fully validated experiment description.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: Params,
    pub nx: usize,
    pub ny: usize,
    pub lx: f64,
    pub ly: f64,
    pub scheme: Scheme,
    pub dt: f64,
    pub t_end: f64,
    pub snapshot_times: Vec<f64>,
    pub seed: u64,
    pub ic: IcMode,
    pub out_dir: Option<String>,
    /// Also emit a false-color P6 image next to each grayscale P5.
    pub ppm: bool,
}

impl RunConfig {
    pub fn grid(&self) -> Result<Grid> {
        Ok(Grid::new(self.nx, self.ny, self.lx, self.ly)?)
    }

    pub fn scheme_config(&self) -> Result<SchemeConfig> {
        Ok(SchemeConfig::new(self.scheme, self.dt, self.t_end, self.snapshot_times.clone())?)
    }

    pub fn initial_state(&self, g: &Grid) -> Result<State> {
        match self.ic {
            IcMode::UniformBox { u_lo, u_hi, v_lo, v_hi } => {
                Ok(coatsim::integrate::random_ic(g, u_lo, u_hi, v_lo, v_hi, self.seed)?)
            }
            IcMode::Steady => {
                let (us, vs) = steady_state(&self.params, 1e-10)?;
                Ok(State::constant(g, us, vs))
            }
            IcMode::SteadyTimes(scale) => {
                let (us, vs) = steady_state(&self.params, 1e-10)?;
                Ok(State::constant(g, scale * us, scale * vs))
            }
        }
    }
}

const KNOWN_KEYS: &[&str] = &[
    "a",
    "b",
    "alpha",
    "beta",
    "gamma",
    "rho",
    "k",
    "nx",
    "ny",
    "lx",
    "ly",
    "scheme",
    "dt",
    "t_end",
    "snapshot_times",
    "seed",
    "ic_mode",
    "u_lo",
    "u_hi",
    "v_lo",
    "v_hi",
    "ic_scale",
    "out_dir",
    "ppm",
];

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, message: message.into() }
}

/// Parse a `key = value` config text into a validated [`RunConfig`].
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut raw: HashMap<&str, (usize, String)> = HashMap::new();
    for (number, full_line) in text.lines().enumerate() {
        let line_no = number + 1;
        let line = match full_line.find('#') {
            Some(pos) => &full_line[..pos],
            None => full_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| parse_err(line_no, format!("expected `key = value`, got `{line}`")))?;
        let key = key.trim();
        let value = value.trim();
        if !KNOWN_KEYS.contains(&key) {
            return Err(parse_err(line_no, format!("unknown key `{key}`")));
        }
        if raw
            .insert(KNOWN_KEYS.iter().find(|k| **k == key).unwrap(), (line_no, value.to_string()))
            .is_some()
        {
            return Err(parse_err(line_no, format!("duplicate key `{key}`")));
        }
    }

    let take = |key: &str| raw.get(key).cloned();
    let require = |key: &str| {
        take(key).ok_or_else(|| CliError::Validation(format!("missing required key `{key}`")))
    };
    let parse_f64 = |key: &str, (line, value): (usize, String)| {
        value
            .parse::<f64>()
            .map_err(|_| parse_err(line, format!("`{key}` is not a number: `{value}`")))
    };
    let parse_usize = |key: &str, (line, value): (usize, String)| {
        value
            .parse::<usize>()
            .map_err(|_| parse_err(line, format!("`{key}` is not a positive integer: `{value}`")))
    };

    let a = parse_f64("a", require("a")?)?;
    let b = parse_f64("b", require("b")?)?;
    let alpha = parse_f64("alpha", require("alpha")?)?;
    let beta = parse_f64("beta", require("beta")?)?;
    let gamma = parse_f64("gamma", require("gamma")?)?;
    let rho = parse_f64("rho", require("rho")?)?;
    let k = parse_f64("k", require("k")?)?;
    let params = Params::new(a, b, alpha, beta, gamma, rho, k)
        .map_err(|e| CliError::Validation(e.to_string()))?;

    let nx = parse_usize("nx", require("nx")?)?;
    let ny = parse_usize("ny", require("ny")?)?;
    let lx = parse_f64("lx", require("lx")?)?;
    let ly = parse_f64("ly", require("ly")?)?;
    Grid::new(nx, ny, lx, ly).map_err(|e| CliError::Validation(e.to_string()))?;

    let scheme = match take("scheme") {
        None => Scheme::Imex,
        Some((line, value)) => match value.as_str() {
            "imex" => Scheme::Imex,
            "etd" => Scheme::Etd,
            other => return Err(parse_err(line, format!("unknown scheme `{other}`"))),
        },
    };
    let dt = match take("dt") {
        None => 0.01,
        Some(entry) => parse_f64("dt", entry)?,
    };
    let t_end = parse_f64("t_end", require("t_end")?)?;
    let snapshot_times = match take("snapshot_times") {
        None => Vec::new(),
        Some((line, value)) => {
            let mut times = Vec::new();
            for piece in value.split(',') {
                let piece = piece.trim();
                if piece.is_empty() {
                    continue;
                }
                times.push(
                    piece
                        .parse::<f64>()
                        .map_err(|_| parse_err(line, format!("bad snapshot time `{piece}`")))?,
                );
            }
            times
        }
    };
    let mut sorted = snapshot_times.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    if sorted != snapshot_times {
        return Err(CliError::Validation("snapshot_times must be sorted ascending".into()));
    }
    SchemeConfig::new(scheme, dt, t_end, snapshot_times.clone())
        .map_err(|e| CliError::Validation(e.to_string()))?;

    let seed = match take("seed") {
        None => 0,
        Some((line, value)) => value
            .parse::<u64>()
            .map_err(|_| parse_err(line, format!("`seed` is not a 64-bit integer: `{value}`")))?,
    };

    let (ic_line, ic_value) = require("ic_mode")?;
    let ic = match ic_value.as_str() {
        "uniform_box" => {
            let u_lo = parse_f64("u_lo", require("u_lo")?)?;
            let u_hi = parse_f64("u_hi", require("u_hi")?)?;
            let v_lo = parse_f64("v_lo", require("v_lo")?)?;
            let v_hi = parse_f64("v_hi", require("v_hi")?)?;
            for (name, lo, hi) in [("u", u_lo, u_hi), ("v", v_lo, v_hi)] {
                // NaN bounds fail this test too
                let ordered = lo < hi;
                if !ordered {
                    return Err(CliError::Validation(format!(
                        "{name} bounds must satisfy lo < hi, got [{lo}, {hi}]"
                    )));
                }
            }
            IcMode::UniformBox { u_lo, u_hi, v_lo, v_hi }
        }
        "steady" => IcMode::Steady,
        "steady_times" => {
            let scale = parse_f64("ic_scale", require("ic_scale")?)?;
            let valid = scale > 0.0 && scale.is_finite();
            if !valid {
                return Err(CliError::Validation(format!(
                    "ic_scale must be positive, got {scale}"
                )));
            }
            IcMode::SteadyTimes(scale)
        }
        other => return Err(parse_err(ic_line, format!("unknown ic_mode `{other}`"))),
    };

    let out_dir = take("out_dir").map(|(_, value)| value);
    let ppm = match take("ppm") {
        None => false,
        Some((line, value)) => match value.as_str() {
            "true" => true,
            "false" => false,
            other => {
                return Err(parse_err(line, format!("`ppm` must be true or false, got `{other}`")))
            }
        },
    };

    Ok(RunConfig {
        params,
        nx,
        ny,
        lx,
        ly,
        scheme,
        dt,
        t_end,
        snapshot_times,
        seed,
        ic,
        out_dir,
        ppm,
    })
}

/// Render a config back to `key = value` text; `parse_config` recovers an
/// equal [`RunConfig`].
pub fn render_config(cfg: &RunConfig) -> String {
    let mut out = String::new();
    let p = &cfg.params;
    let mut push = |key: &str, value: String| {
        out.push_str(key);
        out.push_str(" = ");
        out.push_str(&value);
        out.push('\n');
    };
    push("a", format!("{}", p.a()));
    push("b", format!("{}", p.b()));
    push("alpha", format!("{}", p.alpha()));
    push("beta", format!("{}", p.beta()));
    push("gamma", format!("{}", p.gamma()));
    push("rho", format!("{}", p.rho()));
    push("k", format!("{}", p.k()));
    push("nx", format!("{}", cfg.nx));
    push("ny", format!("{}", cfg.ny));
    push("lx", format!("{}", cfg.lx));
    push("ly", format!("{}", cfg.ly));
    push(
        "scheme",
        match cfg.scheme {
            Scheme::Imex => "imex".into(),
            Scheme::Etd => "etd".into(),
        },
    );
    push("dt", format!("{}", cfg.dt));
    push("t_end", format!("{}", cfg.t_end));
    if !cfg.snapshot_times.is_empty() {
        let times: Vec<String> = cfg.snapshot_times.iter().map(|t| format!("{t}")).collect();
        push("snapshot_times", times.join(", "));
    }
    push("seed", format!("{}", cfg.seed));
    match cfg.ic {
        IcMode::UniformBox { u_lo, u_hi, v_lo, v_hi } => {
            push("ic_mode", "uniform_box".into());
            push("u_lo", format!("{u_lo}"));
            push("u_hi", format!("{u_hi}"));
            push("v_lo", format!("{v_lo}"));
            push("v_hi", format!("{v_hi}"));
        }
        IcMode::Steady => push("ic_mode", "steady".into()),
        IcMode::SteadyTimes(scale) => {
            push("ic_mode", "steady_times".into());
            push("ic_scale", format!("{scale}"));
        }
    }
    if let Some(dir) = &cfg.out_dir {
        push("out_dir", dir.clone());
    }
    push("ppm", format!("{}", cfg.ppm));
    out
}
