//! Orthonormal cosine eigenbasis of the zero-flux Laplacian and the
//! diagonalized diffusion-decay operator built on it.
//!
//! The tensor basis `cos(m pi (i+1/2)/nx) cos(n pi (j+1/2)/ny)` diagonalizes
//! the cell-centered stencil exactly, so the spectral and finite-difference
//! paths share one discrete operator.

use std::f64::consts::PI;

use crate::error::Result;
use crate::grid::{Field, Grid};
use crate::model::Params;

/// 1-D stencil symbol: the cosine mode `m` is an eigenvector of the closed
/// five-point stencil with eigenvalue `-mu`, `mu = (2/h^2)(1 - cos(m pi / n))`.
pub fn stencil_symbol(m: usize, n_cells: usize, h: f64) -> f64 {
    (2.0 / (h * h)) * (1.0 - (m as f64 * PI / n_cells as f64).cos())
}

/// Precomputed orthonormal cosine tables for one grid.
///
/// `forward`/`inverse` are exact inverses up to roundoff, and the transform
/// preserves the plain sum of squares (orthonormal scaling).
#[derive(Debug, Clone)]
pub struct DctPlan {
    nx: usize,
    ny: usize,
    // cos_x[m * nx + i] = s_m cos(m pi (i+1/2)/nx), s_0 = sqrt(1/nx), else sqrt(2/nx)
    cos_x: Vec<f64>,
    cos_y: Vec<f64>,
}

fn cosine_table(n: usize) -> Vec<f64> {
    let mut table = vec![0.0; n * n];
    let nf = n as f64;
    for m in 0..n {
        let scale = if m == 0 { (1.0 / nf).sqrt() } else { (2.0 / nf).sqrt() };
        for i in 0..n {
            table[m * n + i] = scale * (m as f64 * PI * (i as f64 + 0.5) / nf).cos();
        }
    }
    table
}

impl DctPlan {
    pub fn new(g: &Grid) -> Self {
        Self { nx: g.nx(), ny: g.ny(), cos_x: cosine_table(g.nx()), cos_y: cosine_table(g.ny()) }
    }

    fn check(&self, f: &Field) -> Result<()> {
        if f.len() != self.nx * self.ny {
            return Err(crate::error::Error::ShapeMismatch {
                expected: self.nx * self.ny,
                got: f.len(),
            });
        }
        Ok(())
    }

    /// Coefficients of `f` in the tensor cosine basis; layout `c[n * nx + m]`.
    pub fn forward(&self, f: &Field) -> Result<Field> {
        self.check(f)?;
        let (nx, ny) = (self.nx, self.ny);
        let v = f.values();
        // transform along x: tmp[j * nx + m] = sum_i v[j * nx + i] cos_x[m, i]
        let mut tmp = vec![0.0; nx * ny];
        for j in 0..ny {
            let row = &v[j * nx..(j + 1) * nx];
            for m in 0..nx {
                let basis = &self.cos_x[m * nx..(m + 1) * nx];
                let mut acc = 0.0;
                for i in 0..nx {
                    acc += row[i] * basis[i];
                }
                tmp[j * nx + m] = acc;
            }
        }
        // transform along y
        let mut out = vec![0.0; nx * ny];
        for n in 0..ny {
            let basis = &self.cos_y[n * ny..(n + 1) * ny];
            for m in 0..nx {
                let mut acc = 0.0;
                for j in 0..ny {
                    acc += tmp[j * nx + m] * basis[j];
                }
                out[n * nx + m] = acc;
            }
        }
        Ok(Field::from_vec(out))
    }

    /// Exact inverse of [`DctPlan::forward`] up to roundoff.
    pub fn inverse(&self, c: &Field) -> Result<Field> {
        self.check(c)?;
        let (nx, ny) = (self.nx, self.ny);
        let v = c.values();
        // invert along y: tmp[j * nx + m] = sum_n c[n * nx + m] cos_y[n, j]
        let mut tmp = vec![0.0; nx * ny];
        for j in 0..ny {
            for m in 0..nx {
                let mut acc = 0.0;
                for n in 0..ny {
                    acc += v[n * nx + m] * self.cos_y[n * ny + j];
                }
                tmp[j * nx + m] = acc;
            }
        }
        // invert along x
        let mut out = vec![0.0; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                let mut acc = 0.0;
                for m in 0..nx {
                    acc += tmp[j * nx + m] * self.cos_x[m * nx + i];
                }
                out[j * nx + i] = acc;
            }
        }
        Ok(Field::from_vec(out))
    }
}

/// Forward cosine transform of `f` on grid `g` (one-off convenience; hot
/// paths should hold a [`DctPlan`] or a [`SpectralOperator`]).
pub fn dct2_forward(f: &Field, g: &Grid) -> Result<Field> {
    DctPlan::new(g).forward(f)
}

/// Inverse cosine transform of coefficients `c` on grid `g`.
pub fn dct2_inverse(c: &Field, g: &Grid) -> Result<Field> {
    DctPlan::new(g).inverse(c)
}

/// Which component of the product space a spectral mode belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    U,
    V,
}

/// Eigenvalues of the diagonal diffusion-decay operator on the cosine basis:
/// `lam_u = mu_m + mu_n + gamma` for the activator and
/// `lam_v = alpha (mu_m + mu_n) + gamma beta` for the inhibitor,
/// plus the global mode ordering used by rank-N projections.
#[derive(Debug, Clone)]
pub struct SpectralOperator {
    nx: usize,
    ny: usize,
    lam_u: Vec<f64>,
    lam_v: Vec<f64>,
    // (m, n) pairs sorted ascending by min(lam_u, lam_v), ties by (m, n)
    modes: Vec<(usize, usize)>,
    // every (coefficient, component) mode sorted by its own eigenvalue:
    // the discrete operator's full spectrum in increasing order
    triples: Vec<(usize, Component)>,
    plan: DctPlan,
}

pub fn build_spectral_operator(g: &Grid, p: &Params) -> SpectralOperator {
    let (nx, ny) = (g.nx(), g.ny());
    let mu_x: Vec<f64> = (0..nx).map(|m| stencil_symbol(m, nx, g.hx())).collect();
    let mu_y: Vec<f64> = (0..ny).map(|n| stencil_symbol(n, ny, g.hy())).collect();

    let mut lam_u = vec![0.0; nx * ny];
    let mut lam_v = vec![0.0; nx * ny];
    for n in 0..ny {
        for m in 0..nx {
            let mu = mu_x[m] + mu_y[n];
            lam_u[n * nx + m] = mu + p.gamma();
            lam_v[n * nx + m] = p.alpha() * mu + p.gamma() * p.beta();
        }
    }

    let mut modes: Vec<(usize, usize)> =
        (0..ny).flat_map(|n| (0..nx).map(move |m| (m, n))).collect();
    modes.sort_by(|&(m1, n1), &(m2, n2)| {
        let k1 = lam_u[n1 * nx + m1].min(lam_v[n1 * nx + m1]);
        let k2 = lam_u[n2 * nx + m2].min(lam_v[n2 * nx + m2]);
        k1.partial_cmp(&k2).unwrap().then(m1.cmp(&m2)).then(n1.cmp(&n2))
    });

    let mut triples: Vec<(usize, Component)> =
        (0..nx * ny).flat_map(|idx| [(idx, Component::U), (idx, Component::V)]).collect();
    triples.sort_by(|&(i1, c1), &(i2, c2)| {
        let eig = |idx: usize, c: Component| match c {
            Component::U => lam_u[idx],
            Component::V => lam_v[idx],
        };
        let rank = |c: Component| if c == Component::U { 0 } else { 1 };
        eig(i1, c1)
            .partial_cmp(&eig(i2, c2))
            .unwrap()
            .then((i1 % nx).cmp(&(i2 % nx)))
            .then((i1 / nx).cmp(&(i2 / nx)))
            .then(rank(c1).cmp(&rank(c2)))
    });

    SpectralOperator { nx, ny, lam_u, lam_v, modes, triples, plan: DctPlan::new(g) }
}

impl SpectralOperator {
    /// Activator eigenvalues in coefficient layout (`n * nx + m`).
    pub fn lam_u(&self) -> &[f64] {
        &self.lam_u
    }

    /// Inhibitor eigenvalues in coefficient layout.
    pub fn lam_v(&self) -> &[f64] {
        &self.lam_v
    }

    pub fn plan(&self) -> &DctPlan {
        &self.plan
    }

    /// `(m, n)` pairs sorted ascending by `min(lam_u, lam_v)`.
    pub fn sorted_modes(&self) -> &[(usize, usize)] {
        &self.modes
    }

    /// Total number of scalar modes across both components.
    pub fn mode_count(&self) -> usize {
        2 * self.nx * self.ny
    }

    /// `(coefficient index, component)` triples sorted ascending by their own
    /// eigenvalue — the operator's full spectrum in increasing order. Rank-N
    /// projections take the first N entries.
    pub fn sorted_triples(&self) -> impl Iterator<Item = (usize, Component)> + '_ {
        self.triples.iter().copied()
    }

    /// Eigenvalue of one `(coefficient index, component)` mode.
    pub fn eigenvalue(&self, idx: usize, component: Component) -> f64 {
        match component {
            Component::U => self.lam_u[idx],
            Component::V => self.lam_v[idx],
        }
    }
}
