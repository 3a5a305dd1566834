//! Exhaustive search for the spectral extremal graphs among connected
//! F-free planar graphs of a given order.

use std::ops::ControlFlow;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{canonical_graph6, enumerate, to_graph6, EnumerationConfig};
use crate::error::{Error, Result};
use crate::families::{family_f, family_m, family_w};
use crate::graph::{disjoint_union, Graph};
use crate::patterns::{is_pattern_free, ForbiddenPattern};
use crate::spectral::{spectral_radius_with, SpectralConfig};

pub const DEFAULT_TIE_TOL: f64 = 1e-9;
const BATCH: usize = 4096;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub tie_tol: f64,
    /// Also report the best graph of the form `G_1 ∪ (n - m)K_1`, `m < n`.
    pub include_disconnected: bool,
    pub threads: usize,
    pub spectral: SpectralConfig,
    /// Keep `(graph6, ρ)` for every examined graph.
    pub dump_all: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            tie_tol: DEFAULT_TIE_TOL,
            include_disconnected: false,
            threads: 1,
            spectral: SpectralConfig::default(),
            dump_all: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphRho {
    pub graph6: String,
    pub rho: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DisconnectedBest {
    pub max_rho: f64,
    /// Order of the nontrivial component.
    pub component_order: usize,
    pub argmax: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub pattern: Option<ForbiddenPattern>,
    /// `None` only when nothing passed the filters.
    pub max_rho: Option<f64>,
    /// Canonical graph6 strings within `tie_tolerance` of `max_rho`, sorted.
    pub argmax: Vec<String>,
    pub examined: usize,
    pub tie_tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matches_paper_family: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disconnected: Option<DisconnectedBest>,
    pub runtime_ms: u64,
    #[serde(skip)]
    pub all: Option<Vec<GraphRho>>,
}

/// Maximum spectral radius over connected planar graphs on `n` vertices
/// free of `pattern` (or over all of them when `pattern` is `None`).
pub fn spex_search(
    n: usize,
    pattern: Option<&ForbiddenPattern>,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    if opts.tie_tol.is_nan() || opts.tie_tol <= 0.0 {
        return Err(Error::param(format!(
            "tie tolerance must be positive, got {}",
            opts.tie_tol
        )));
    }
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads.max(1))
        .build()
        .map_err(|e| Error::param(format!("thread pool: {e}")))?;

    let mut acc = Accumulator::new(opts.tie_tol, opts.dump_all);
    let mut batch: Vec<Graph> = Vec::with_capacity(BATCH);
    let mut failure: Option<Error> = None;
    let mut cfg = EnumerationConfig::new(n);
    cfg.pattern = pattern.cloned();

    let flush = |batch: &mut Vec<Graph>, acc: &mut Accumulator| -> Result<()> {
        let rhos: Vec<Result<f64>> = pool.install(|| {
            batch
                .par_iter()
                .map(|g| spectral_radius_with(g, &opts.spectral).map(|s| s.rho))
                .collect()
        });
        for (g, rho) in batch.drain(..).zip(rhos) {
            acc.push(&g, rho?);
        }
        Ok(())
    };

    let walked = enumerate(&cfg, |g| {
        batch.push(g.clone());
        if batch.len() == BATCH {
            if let Err(e) = flush(&mut batch, &mut acc) {
                failure = Some(e);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = failure {
        return Err(e);
    }
    walked?;
    flush(&mut batch, &mut acc)?;

    let (max_rho, argmax) = acc.finish();
    let disconnected = if opts.include_disconnected {
        disconnected_best(n, pattern, opts)?
    } else {
        None
    };
    let matches_paper_family = match (pattern, max_rho) {
        (Some(p), Some(_)) => paper_family(n, p).map(|fam| argmax == [canonical_graph6(&fam)]),
        _ => None,
    };
    Ok(SearchReport {
        n,
        pattern: pattern.cloned(),
        max_rho,
        argmax,
        examined: acc.examined,
        tie_tolerance: opts.tie_tol,
        matches_paper_family,
        disconnected,
        runtime_ms: started.elapsed().as_millis() as u64,
        all: acc.all,
    })
}

/// The conjectured extremal graph for `pattern` at order `n`, when the
/// family is defined there.
pub fn paper_family(n: usize, pattern: &ForbiddenPattern) -> Option<Graph> {
    match *pattern {
        ForbiddenPattern::Wheel(k) => family_w(n, k).ok(),
        ForbiddenPattern::Friendship(k) => family_f(n, k).ok(),
        ForbiddenPattern::Matching(m) if m >= 2 => family_m(n, m - 1).ok(),
        _ => None,
    }
}

fn disconnected_best(
    n: usize,
    pattern: Option<&ForbiddenPattern>,
    opts: &SearchOptions,
) -> Result<Option<DisconnectedBest>> {
    let sub_opts = SearchOptions {
        include_disconnected: false,
        dump_all: false,
        ..opts.clone()
    };
    let mut best: Option<DisconnectedBest> = None;
    for m in 1..n {
        let sub = spex_search(m, pattern, &sub_opts)?;
        let Some(rho) = sub.max_rho else { continue };
        let padded: Vec<String> = sub
            .argmax
            .iter()
            .map(|s| {
                let g = crate::enumerate::from_graph6(s).expect("argmax strings are valid graph6");
                disjoint_union(&g, &Graph::empty(n - m))
            })
            .filter(|g| pattern.is_none_or(|p| is_pattern_free(g, p)))
            .map(|g| canonical_graph6(&g))
            .collect();
        if padded.is_empty() {
            continue;
        }
        let better = best.as_ref().is_none_or(|b| rho > b.max_rho + opts.tie_tol);
        if better {
            best = Some(DisconnectedBest {
                max_rho: rho,
                component_order: m,
                argmax: padded,
            });
        }
    }
    Ok(best)
}

struct Accumulator {
    tie_tol: f64,
    max: Option<f64>,
    near: Vec<GraphRho>,
    examined: usize,
    all: Option<Vec<GraphRho>>,
}

impl Accumulator {
    fn new(tie_tol: f64, dump_all: bool) -> Self {
        Accumulator {
            tie_tol,
            max: None,
            near: Vec::new(),
            examined: 0,
            all: dump_all.then(Vec::new),
        }
    }

    fn push(&mut self, g: &Graph, rho: f64) {
        self.examined += 1;
        let entry = GraphRho {
            graph6: to_graph6(g),
            rho,
        };
        if let Some(all) = &mut self.all {
            all.push(entry.clone());
        }
        let max = self.max.map_or(rho, |m| m.max(rho));
        self.max = Some(max);
        if rho >= max - self.tie_tol {
            self.near.push(entry);
            let tol = self.tie_tol;
            self.near.retain(|e| e.rho >= max - tol);
        }
    }

    fn finish(&mut self) -> (Option<f64>, Vec<String>) {
        let mut argmax: Vec<String> = self.near.drain(..).map(|e| e.graph6).collect();
        argmax.sort();
        (self.max, argmax)
    }
}
