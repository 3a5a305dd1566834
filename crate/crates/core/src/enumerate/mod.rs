//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Orderly generation by canonical augmentation: a graph on `m + 1`
//! vertices is produced from a canonical parent on `m` vertices by adding a
//! vertex joined to a subset of the parent, and kept only when the new
//! vertex is in the automorphism orbit of the canonically last eligible
//! vertex (the last non-cut vertex when generating connected graphs).
//! Planarity and pattern-freeness are inherited by subgraphs, so partial
//! graphs failing either filter are cut immediately.

pub mod canon;
pub mod graph6;

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{ForbiddenPattern, PatternChecker};
use crate::planarity::is_planar;

pub use canon::{canonical_form, canonical_graph6, canonical_order, same_orbit};
pub use graph6::{from_graph6, to_graph6};

/// Largest order enumerated without an explicit override.
pub const MAX_N: usize = 11;

/// Connected planar graphs on `n` vertices up to isomorphism, `n = 1..=9`.
pub const CONNECTED_PLANAR_COUNTS: [u64; 9] = [1, 1, 2, 6, 20, 99, 646, 5974, 71885];

#[derive(Clone, Debug)]
pub struct EnumerationConfig {
    pub n: usize,
    pub connected_only: bool,
    pub planar_only: bool,
    pub pattern: Option<ForbiddenPattern>,
    pub limit: Option<usize>,
    /// Lift the `n <= MAX_N` cap.
    pub allow_large: bool,
}

impl EnumerationConfig {
    /// Connected planar graphs on `n` vertices, no pattern, no limit.
    pub fn new(n: usize) -> Self {
        EnumerationConfig {
            n,
            connected_only: true,
            planar_only: true,
            pattern: None,
            limit: None,
            allow_large: false,
        }
    }

    pub fn with_pattern(mut self, p: ForbiddenPattern) -> Self {
        self.pattern = Some(p);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::param("enumeration needs n >= 1"));
        }
        if self.n > MAX_N && !self.allow_large {
            return Err(Error::param(format!(
                "n = {} exceeds the enumeration cap {MAX_N} (override required)",
                self.n
            )));
        }
        if self.n > 63 {
            return Err(Error::param(format!(
                "n = {} is beyond what subset augmentation can address",
                self.n
            )));
        }
        if self.limit == Some(0) {
            return Err(Error::param("limit must be at least 1"));
        }
        Ok(())
    }
}

/// Rough size of the connected planar search space at `n`: exact where
/// known, otherwise extrapolated from the last two known counts.
pub fn estimated_class_count(n: usize) -> f64 {
    let c = &CONNECTED_PLANAR_COUNTS;
    if (1..=c.len()).contains(&n) {
        return c[n - 1] as f64;
    }
    let ratio = c[c.len() - 1] as f64 / c[c.len() - 2] as f64;
    c[c.len() - 1] as f64 * ratio.powi(n as i32 - c.len() as i32)
}

/// Streams one canonical representative per isomorphism class passing the
/// filters to `sink`, and returns how many were emitted.
///
/// Emission order is deterministic: depth-first over the generation tree,
/// siblings in increasing canonical graph6 order. The sink stops the run
/// with `ControlFlow::Break`, reported as [`Error::Aborted`].
pub fn enumerate<F>(cfg: &EnumerationConfig, mut sink: F) -> Result<usize>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    cfg.validate()?;
    let gen = Generator {
        cfg,
        checker: cfg.pattern.as_ref().map(ForbiddenPattern::checker),
    };
    let root = Graph::empty(1);
    let mut emitted = 0;
    if !gen.accepts_filters(&root) {
        return Ok(0);
    }
    match gen.grow(&root, &mut sink, &mut emitted) {
        Walk::Continue | Walk::Limit => Ok(emitted),
        Walk::Aborted => Err(Error::Aborted),
    }
}

/// Collects [`enumerate`] output into a vector.
pub fn enumerate_all(cfg: &EnumerationConfig) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    enumerate(cfg, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

enum Walk {
    Continue,
    Limit,
    Aborted,
}

struct Generator<'a> {
    cfg: &'a EnumerationConfig,
    checker: Option<PatternChecker>,
}

impl Generator<'_> {
    fn accepts_filters(&self, g: &Graph) -> bool {
        if self.cfg.planar_only && !is_planar(g).planar {
            return false;
        }
        self.checker.as_ref().is_none_or(|c| c.is_free(g))
    }

    fn grow<F>(&self, parent: &Graph, sink: &mut F, emitted: &mut usize) -> Walk
    where
        F: FnMut(&Graph) -> ControlFlow<()>,
    {
        let m = parent.n();
        if m == self.cfg.n {
            if sink(parent).is_break() {
                return Walk::Aborted;
            }
            *emitted += 1;
            return match self.cfg.limit {
                Some(l) if *emitted >= l => Walk::Limit,
                _ => Walk::Continue,
            };
        }

        let first = if self.cfg.connected_only { 1u64 } else { 0 };
        let mut children: BTreeMap<String, Graph> = BTreeMap::new();
        for mask in first..(1u64 << m) {
            let mut child = parent.clone();
            let w = child.add_vertex();
            for v in 0..m {
                if mask >> v & 1 == 1 {
                    child.add_edge(v, w);
                }
            }
            if !self.accepts_filters(&child) {
                continue;
            }
            let order = canonical_order(&child);
            let last = self.last_eligible(&child, &order);
            if last != w && !same_orbit(&child, last, w) {
                continue;
            }
            let canon = canon::relabel_by_order(&child, &order);
            children.entry(to_graph6(&canon)).or_insert(canon);
        }

        for child in children.values() {
            match self.grow(child, sink, emitted) {
                Walk::Continue => {}
                stop => return stop,
            }
        }
        Walk::Continue
    }

    /// The eligible vertex with the highest canonical position.
    fn last_eligible(&self, g: &Graph, order: &[usize]) -> usize {
        if !self.cfg.connected_only {
            return *order.last().expect("nonempty graph");
        }
        let cut = g.cut_vertices();
        *order
            .iter()
            .rev()
            .find(|&&v| !cut.contains(v))
            .expect("a connected graph has a non-cut vertex")
    }
}
