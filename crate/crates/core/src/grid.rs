//! Cell-centered rectangle discretization, grid functions, and the
//! zero-flux (Neumann) five-point Laplacian.

use crate::error::{Error, Result};

/// Uniform cell-centered grid of `nx * ny` cells covering `[0, lx] x [0, ly]`.
///
/// Cell `(i, j)` is centered at `((i + 1/2) hx, (j + 1/2) hy)`. The quadrature
/// weight `w = hx * hy` turns plain sums over cells into integrals over the
/// rectangle.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    nx: usize,
    ny: usize,
    lx: f64,
    ly: f64,
    hx: f64,
    hy: f64,
    w: f64,
}

impl Grid {
    pub fn new(nx: usize, ny: usize, lx: f64, ly: f64) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least 2 cells per axis, got {nx} x {ny}"
            )));
        }
        if !(lx > 0.0 && lx.is_finite()) || !(ly > 0.0 && ly.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "side lengths must be positive and finite, got {lx} x {ly}"
            )));
        }
        let hx = lx / nx as f64;
        let hy = ly / ny as f64;
        Ok(Self { nx, ny, lx, ly, hx, hy, w: hx * hy })
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    pub fn lx(&self) -> f64 {
        self.lx
    }

    pub fn ly(&self) -> f64 {
        self.ly
    }

    pub fn hx(&self) -> f64 {
        self.hx
    }

    pub fn hy(&self) -> f64 {
        self.hy
    }

    /// Quadrature weight per cell, `hx * hy`.
    pub fn weight(&self) -> f64 {
        self.w
    }

    /// Area of the rectangle, `lx * ly`.
    pub fn volume(&self) -> f64 {
        self.lx * self.ly
    }

    pub fn cell_count(&self) -> usize {
        self.nx * self.ny
    }

    /// Row-major index of cell `(i, j)`.
    pub fn idx(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    pub fn check_field(&self, f: &Field) -> Result<()> {
        if f.len() != self.cell_count() {
            return Err(Error::ShapeMismatch { expected: self.cell_count(), got: f.len() });
        }
        Ok(())
    }

    pub fn check_state(&self, x: &State) -> Result<()> {
        self.check_field(&x.u)?;
        self.check_field(&x.v)
    }
}

/// One scalar grid function, stored row-major (`j * nx + i`).
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    values: Vec<f64>,
}

impl Field {
    pub fn from_vec(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn zeros(g: &Grid) -> Self {
        Self { values: vec![0.0; g.cell_count()] }
    }

    pub fn constant(g: &Grid, value: f64) -> Self {
        Self { values: vec![value; g.cell_count()] }
    }

    /// Build a field by evaluating `f(i, j)` at every cell.
    pub fn from_fn(g: &Grid, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut values = Vec::with_capacity(g.cell_count());
        for j in 0..g.ny() {
            for i in 0..g.nx() {
                values.push(f(i, j));
            }
        }
        Self { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Population standard deviation over cells.
    pub fn std(&self) -> f64 {
        let mean = self.mean();
        let var =
            self.values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / self.len() as f64;
        var.sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }
}

/// The (activator, inhibitor) pair of grid functions.
#[derive(Debug, Clone, PartialEq)]
pub struct State {
    pub u: Field,
    pub v: Field,
}

impl State {
    pub fn new(u: Field, v: Field) -> Self {
        Self { u, v }
    }

    pub fn constant(g: &Grid, u_value: f64, v_value: f64) -> Self {
        Self { u: Field::constant(g, u_value), v: Field::constant(g, v_value) }
    }

    /// `max{ max |u|, max |v| }` over grid nodes.
    pub fn sup_norm(&self) -> f64 {
        let max_abs = |f: &Field| f.values().iter().fold(0.0_f64, |m, v| m.max(v.abs()));
        max_abs(&self.u).max(max_abs(&self.v))
    }

    /// `self + alpha * dir`, component-wise.
    pub fn add_scaled(&self, alpha: f64, dir: &State) -> State {
        let combine = |a: &Field, b: &Field| {
            Field::from_vec(a.values().iter().zip(b.values()).map(|(x, d)| x + alpha * d).collect())
        };
        State { u: combine(&self.u, &dir.u), v: combine(&self.v, &dir.v) }
    }

    /// `self - other`, component-wise.
    pub fn sub(&self, other: &State) -> State {
        self.add_scaled(-1.0, other)
    }

    pub fn is_finite(&self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }
}

/// Five-point Laplacian with zero-flux closure: an out-of-range neighbor is
/// replaced by the boundary cell itself, which zeroes the flux through the
/// boundary face and conserves the plain sum exactly.
pub fn laplacian_neumann(f: &Field, g: &Grid) -> Result<Field> {
    g.check_field(f)?;
    let (nx, ny) = (g.nx(), g.ny());
    let inv_hx2 = 1.0 / (g.hx() * g.hx());
    let inv_hy2 = 1.0 / (g.hy() * g.hy());
    let v = f.values();
    let mut out = vec![0.0; v.len()];
    for j in 0..ny {
        for i in 0..nx {
            let c = v[j * nx + i];
            let xl = if i > 0 { v[j * nx + i - 1] } else { c };
            let xr = if i + 1 < nx { v[j * nx + i + 1] } else { c };
            let yd = if j > 0 { v[(j - 1) * nx + i] } else { c };
            let yu = if j + 1 < ny { v[(j + 1) * nx + i] } else { c };
            out[j * nx + i] = (xl - 2.0 * c + xr) * inv_hx2 + (yd - 2.0 * c + yu) * inv_hy2;
        }
    }
    Ok(Field::from_vec(out))
}

/// Quadrature inner product `w * sum(f g)`.
pub fn inner_product(f: &Field, g_field: &Field, g: &Grid) -> Result<f64> {
    g.check_field(f)?;
    g.check_field(g_field)?;
    let s: f64 = f.values().iter().zip(g_field.values()).map(|(a, b)| a * b).sum();
    Ok(g.weight() * s)
}

/// Product-space norm `sqrt(||u||^2 + ||v||^2)` with `||.||` the quadrature
/// L2 norm on the grid.
pub fn l2_norm(x: &State, g: &Grid) -> Result<f64> {
    g.check_state(x)?;
    let sq = |f: &Field| f.values().iter().map(|v| v * v).sum::<f64>();
    Ok((g.weight() * (sq(&x.u) + sq(&x.v))).sqrt())
}
