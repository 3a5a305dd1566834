//! Spectral radius and Perron vector of the adjacency matrix.
//!
//! Power iteration runs on `A + I` for each connected component. The shift
//! keeps the iteration convergent on bipartite components, where `A` alone
//! has `-ρ` in its spectrum and the plain iteration oscillates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

/// Eigen-solver knobs: stopping tolerance on `‖Ax − ρx‖_∞` and an iteration cap.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralConfig {
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

impl SpectralConfig {
    pub fn with_tol(tol: f64) -> Self {
        SpectralConfig {
            tol,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub rho: f64,
    /// Perron vector of the dominant component, max entry 1, zero elsewhere.
    pub perron: Vec<f64>,
    /// `‖Ax − ρx‖_∞` of the returned pair.
    pub residual: f64,
    pub iterations: usize,
    /// Index into `Graph::components()`.
    pub dominant_component: usize,
}

struct ComponentPair {
    rho: f64,
    x: Vec<f64>,
    residual: f64,
    iterations: usize,
}

/// `ρ(G)` and its max-normalized Perron vector, with default settings.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectrumResult> {
    spectral_radius_with(g, &SpectralConfig::with_tol(tol))
}

pub fn spectral_radius_with(g: &Graph, cfg: &SpectralConfig) -> Result<SpectrumResult> {
    if g.n() == 0 {
        return Err(Error::param(
            "spectral radius of the empty graph is undefined",
        ));
    }
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err(Error::param(format!(
            "tolerance must be positive, got {}",
            cfg.tol
        )));
    }

    let comps = g.components();
    let mut pairs = Vec::with_capacity(comps.len());
    let mut failure = None;
    for comp in &comps {
        let (pair, converged) = power_iterate(g, comp, cfg);
        if !converged && failure.is_none() {
            failure = Some(pairs.len());
        }
        pairs.push(pair);
    }

    let max_rho = pairs
        .iter()
        .map(|p| p.rho)
        .fold(f64::NEG_INFINITY, f64::max);
    let dominant = pairs
        .iter()
        .position(|p| p.rho >= max_rho - cfg.tol)
        .expect("at least one component");
    let iterations = pairs.iter().map(|p| p.iterations).sum();

    let mut perron = vec![0.0; g.n()];
    for (&v, &xv) in comps[dominant].iter().zip(&pairs[dominant].x) {
        perron[v] = xv;
    }
    let result = SpectrumResult {
        rho: pairs[dominant].rho,
        perron,
        residual: pairs[dominant].residual,
        iterations,
        dominant_component: dominant,
    };
    match failure {
        Some(i) => Err(Error::NotConverged {
            iterations,
            residual: pairs[i].residual,
            best: Box::new(result),
        }),
        None => Ok(result),
    }
}

/// Shifted power iteration on one component. Returns the pair and whether
/// the residual reached `cfg.tol`.
fn power_iterate(g: &Graph, comp: &[usize], cfg: &SpectralConfig) -> (ComponentPair, bool) {
    let k = comp.len();
    if k == 1 {
        let pair = ComponentPair {
            rho: 0.0,
            x: vec![1.0],
            residual: 0.0,
            iterations: 0,
        };
        return (pair, true);
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in comp.iter().enumerate() {
        local[v] = i;
    }
    let nbrs: Vec<Vec<usize>> = comp
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|w| local[w]).collect())
        .collect();

    let mut x = vec![1.0f64; k];
    let mut ax = vec![0.0f64; k];
    let mut iterations = 0;
    let (rho, residual) = loop {
        for (i, row) in nbrs.iter().enumerate() {
            ax[i] = row.iter().map(|&j| x[j]).sum();
        }
        let (num, den) = x
            .iter()
            .zip(&ax)
            .fold((0.0, 0.0), |(n, d), (xi, axi)| (n + xi * axi, d + xi * xi));
        let rho = num / den;
        let residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, axi)| (axi - rho * xi).abs())
            .fold(0.0, f64::max);
        if residual <= cfg.tol || iterations >= cfg.max_iter {
            break (rho, residual);
        }
        let mut top: f64 = 0.0;
        for (xi, axi) in x.iter_mut().zip(&ax) {
            *xi += axi;
            top = top.max(*xi);
        }
        x.iter_mut().for_each(|xi| *xi /= top);
        iterations += 1;
    };
    let converged = residual <= cfg.tol;
    (
        ComponentPair {
            rho,
            x,
            residual,
            iterations,
        },
        converged,
    )
}

/// `ρ(K_{2,n-2}) = √(2n-4)`.
pub fn rho_k2_bipartite(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::param(format!("K_(2,n-2) needs n >= 3, got {n}")));
    }
    Ok(((2 * n - 4) as f64).sqrt())
}

/// `ρ(K_2 + (n-2)K_1) = (1 + √(8n-15)) / 2`.
pub fn rho_book(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::param(format!("book graph needs n >= 2, got {n}")));
    }
    Ok((1.0 + ((8 * n - 15) as f64).sqrt()) / 2.0)
}

/// `ρ(K_{1,n-1}) = √(n-1)`.
pub fn rho_star(n: usize) -> Result<f64> {
    if n < 1 {
        return Err(Error::param("star needs n >= 1"));
    }
    Ok(((n - 1) as f64).sqrt())
}

/// Upper bound `2 + √(2n-6)` on the spectral radius of a planar graph.
pub fn ellingham_zha_bound(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::param(format!(
            "planar spectral bound needs n >= 3, got {n}"
        )));
    }
    Ok(2.0 + ((2 * n - 6) as f64).sqrt())
}

/// Window constant in the upper end `2/ρ + c/ρ²` of the eigenvector window.
pub const WINDOW_CONSTANT: f64 = 4.496;

#[derive(Clone, Debug, Serialize)]
pub struct WindowEntry {
    pub vertex: usize,
    pub x: f64,
    pub inside: bool,
}

/// Perron-vector window around two hubs joined to every other vertex.
#[derive(Clone, Debug, Serialize)]
pub struct WindowReport {
    pub rho: f64,
    pub hubs: (usize, usize),
    pub hub_values: (f64, f64),
    /// Both hub entries equal 1 within tolerance.
    pub hubs_at_one: bool,
    pub lower: f64,
    pub upper: f64,
    pub entries: Vec<WindowEntry>,
    pub all_inside: bool,
}

/// For hubs `u1`, `u2` adjacent to all other vertices, report whether the
/// Perron entries satisfy `x_{u1} = x_{u2} = 1` and
/// `2/ρ ≤ x_u ≤ 2/ρ + 4.496/ρ²` for every other `u`, each within `tol`.
pub fn eigen_window_check(g: &Graph, u1: usize, u2: usize, tol: f64) -> Result<WindowReport> {
    let n = g.n();
    if u1 >= n || u2 >= n || u1 == u2 {
        return Err(Error::Precondition(format!(
            "invalid hub pair ({u1},{u2}) for n={n}"
        )));
    }
    for u in (0..n).filter(|&u| u != u1 && u != u2) {
        if !g.has_edge(u, u1) || !g.has_edge(u, u2) {
            return Err(Error::Precondition(format!(
                "vertex {u} is not adjacent to both hubs {u1} and {u2}"
            )));
        }
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }

    let spec = spectral_radius(g, tol.min(DEFAULT_TOL))?;
    let rho = spec.rho;
    let x = &spec.perron;
    let lower = 2.0 / rho;
    let upper = 2.0 / rho + WINDOW_CONSTANT / (rho * rho);
    let entries: Vec<WindowEntry> = (0..n)
        .filter(|&u| u != u1 && u != u2)
        .map(|u| WindowEntry {
            vertex: u,
            x: x[u],
            inside: x[u] >= lower - tol && x[u] <= upper + tol,
        })
        .collect();
    Ok(WindowReport {
        rho,
        hubs: (u1, u2),
        hub_values: (x[u1], x[u2]),
        hubs_at_one: (x[u1] - 1.0).abs() <= tol && (x[u2] - 1.0).abs() <= tol,
        lower,
        upper,
        all_inside: entries.iter().all(|e| e.inside),
        entries,
    })
}
