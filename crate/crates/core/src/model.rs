//! Pointwise substrate-inhibition kinetics, parameter validation, the
//! homogeneous steady state, and explicit Lipschitz/growth bounds on the
//! regularized nonlinearity.

use crate::error::{Error, Result};
use crate::grid::{l2_norm, Grid, State};

/// The seven constants of the activator-inhibitor system.
///
/// `a`, `b` are the supply rates, `alpha` the inhibitor/activator diffusion
/// ratio, `beta` the inhibitor decay factor, `gamma` the domain-scale factor,
/// `rho` the reaction strength, and `k` the severity of substrate inhibition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    a: f64,
    b: f64,
    alpha: f64,
    beta: f64,
    gamma: f64,
    rho: f64,
    k: f64,
}

impl Params {
    pub fn new(
        a: f64,
        b: f64,
        alpha: f64,
        beta: f64,
        gamma: f64,
        rho: f64,
        k: f64,
    ) -> Result<Self> {
        let positive = [("a", a), ("b", b), ("beta", beta), ("gamma", gamma)];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be positive and finite, got {value}"
                )));
            }
        }
        // rho = 0 is the decoupled limit and stays admissible.
        for (name, value) in [("rho", rho), ("k", k)] {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be nonnegative and finite, got {value}"
                )));
            }
        }
        if !(alpha > 1.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "alpha must exceed 1 (inhibitor diffuses faster), got {alpha}"
            )));
        }
        Ok(Self { a, b, alpha, beta, gamma, rho, k })
    }

    /// The classic coat-pattern parameter set used by the shipped
    /// `murray_fig1` experiment.
    pub fn murray() -> Self {
        Self::new(103.0, 77.0, 7.0, 1.5, 15.0, 13.0, 0.125).expect("preset is valid")
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn k(&self) -> f64 {
        self.k
    }
}

/// Reaction rates for the two components at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KineticsValue {
    pub fu: f64,
    pub fv: f64,
}

/// Coupling term `gamma rho u v / (1 + u + k u^2)`.
///
/// The denominator is at least 1 on `u >= 0`; negative inputs are the
/// business of [`reaction_split`], whose absolute values keep the quotient
/// globally defined.
pub fn thomas_h(u: f64, v: f64, p: &Params) -> f64 {
    p.gamma * p.rho * u * v / (1.0 + u + p.k * u * u)
}

/// Complete right-hand-side reaction terms:
/// `fu = gamma (a - u) - h`, `fv = gamma beta (b - v) - h`.
pub fn reaction_full(u: f64, v: f64, p: &Params) -> KineticsValue {
    let h = thomas_h(u, v, p);
    KineticsValue { fu: p.gamma * (p.a - u) - h, fv: p.gamma * p.beta * (p.b - v) - h }
}

/// Regularized nonlinearity with the linear decays absorbed into the
/// diffusion-decay operator:
/// `(gamma a - gamma rho u |v| / d, gamma beta b - gamma rho |u| v / d)`
/// with `d = 1 + |u| + k u^2`.
///
/// On the nonnegative orthant this equals [`reaction_full`] plus
/// `(gamma u, gamma beta v)`.
pub fn reaction_split(u: f64, v: f64, p: &Params) -> KineticsValue {
    let d = 1.0 + u.abs() + p.k * u * u;
    let c = p.gamma * p.rho / d;
    KineticsValue {
        fu: p.gamma * p.a - c * u * v.abs(),
        fv: p.gamma * p.beta * p.b - c * u.abs() * v,
    }
}

/// Evaluate [`reaction_split`] across a whole state.
pub fn reaction_split_state(x: &State, p: &Params) -> State {
    let n = x.u.len();
    let mut fu = Vec::with_capacity(n);
    let mut fv = Vec::with_capacity(n);
    for (&u, &v) in x.u.values().iter().zip(x.v.values()) {
        let kv = reaction_split(u, v, p);
        fu.push(kv.fu);
        fv.push(kv.fv);
    }
    State::new(crate::grid::Field::from_vec(fu), crate::grid::Field::from_vec(fv))
}

const STEADY_SCAN_POINTS: usize = 1024;
const STEADY_DEFAULT_ITERATIONS: usize = 200;

/// Homogeneous steady state `(u*, v*)` with both reaction rates below `tol`.
///
/// Subtracting the two stationarity equations gives `v = b - (a - u)/beta`;
/// the remaining scalar residual is bracketed by a uniform scan of `(0, a]`
/// (first sign change wins) and bisected.
pub fn steady_state(p: &Params, tol: f64) -> Result<(f64, f64)> {
    steady_state_with_iterations(p, tol, STEADY_DEFAULT_ITERATIONS)
}

/// Same as [`steady_state`] with an explicit bisection iteration budget.
pub fn steady_state_with_iterations(p: &Params, tol: f64, max_iter: usize) -> Result<(f64, f64)> {
    let tol_valid = tol > 0.0;
    if !tol_valid {
        return Err(Error::InvalidParameter(format!("tol must be positive, got {tol}")));
    }
    let v_of_u = |u: f64| p.b - (p.a - u) / p.beta;
    let residual = |u: f64| {
        let kv = reaction_full(u, v_of_u(u), p);
        kv.fu
    };

    // Scan for the first bracket (deterministic tie-breaking if several
    // equilibria exist).
    let mut lo = 0.0;
    let mut hi = 0.0;
    let mut r_lo = 0.0;
    let mut found = false;
    let mut prev_u = p.a / STEADY_SCAN_POINTS as f64;
    let mut prev_r = residual(prev_u);
    if prev_r == 0.0 {
        return finish_steady(prev_u, v_of_u(prev_u), p, tol);
    }
    for step in 2..=STEADY_SCAN_POINTS {
        let u = p.a * step as f64 / STEADY_SCAN_POINTS as f64;
        let r = residual(u);
        if r == 0.0 {
            return finish_steady(u, v_of_u(u), p, tol);
        }
        if prev_r.signum() != r.signum() {
            lo = prev_u;
            hi = u;
            r_lo = prev_r;
            found = true;
            break;
        }
        prev_u = u;
        prev_r = r;
    }
    if !found {
        return Err(Error::NoBracket);
    }

    let mut mid = 0.5 * (lo + hi);
    for _ in 0..max_iter {
        mid = 0.5 * (lo + hi);
        let r = residual(mid);
        if r.abs() < tol || hi - lo <= f64::EPSILON * mid.abs() {
            break;
        }
        if r.signum() == r_lo.signum() {
            lo = mid;
            r_lo = r;
        } else {
            hi = mid;
        }
    }
    finish_steady(mid, v_of_u(mid), p, tol)
}

fn finish_steady(u: f64, v: f64, p: &Params, tol: f64) -> Result<(f64, f64)> {
    let kv = reaction_full(u, v, p);
    if kv.fu.abs() >= tol || kv.fv.abs() >= tol {
        return Err(Error::NoBracket);
    }
    if !(u > 0.0 && v > 0.0) {
        return Err(Error::NoBracket);
    }
    Ok((u, v))
}

/// One side-by-side evaluation of an inequality: `lhs <= rhs` up to a tiny
/// relative slack for roundoff.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

const BOUND_SLACK: f64 = 1e-12;

fn bound_report(lhs: f64, rhs: f64) -> BoundReport {
    BoundReport { lhs, rhs, holds: lhs <= rhs * (1.0 + BOUND_SLACK) }
}

/// Lipschitz estimate for the regularized nonlinearity:
/// `||F(x) - F(y)|| <= sqrt(2) gamma rho max{k+1, 4} (1 + ||x||_inf + ||y||_inf) ||x - y||`.
pub fn lipschitz_bound_check(x: &State, y: &State, g: &Grid, p: &Params) -> Result<BoundReport> {
    g.check_state(x)?;
    g.check_state(y)?;
    let fx = reaction_split_state(x, p);
    let fy = reaction_split_state(y, p);
    let lhs = l2_norm(&fx.sub(&fy), g)?;
    let constant = std::f64::consts::SQRT_2 * p.gamma * p.rho * (p.k + 1.0).max(4.0);
    let rhs = constant * (1.0 + x.sup_norm() + y.sup_norm()) * l2_norm(&x.sub(y), g)?;
    Ok(bound_report(lhs, rhs))
}

/// Linear growth estimate for the regularized nonlinearity:
/// `||F(x)|| <= sqrt(2) gamma [max{a, gamma b} Vol + rho ||x||]`.
pub fn growth_bound_check(x: &State, g: &Grid, p: &Params) -> Result<BoundReport> {
    g.check_state(x)?;
    let lhs = l2_norm(&reaction_split_state(x, p), g)?;
    let rhs = std::f64::consts::SQRT_2
        * p.gamma
        * (p.a.max(p.gamma * p.b) * g.volume() + p.rho * l2_norm(x, g)?);
    Ok(bound_report(lhs, rhs))
}
