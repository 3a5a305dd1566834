//! Forbidden patterns and the containment tests behind them.

mod matching;
mod subgraph;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::enumerate::graph6;
use crate::error::{Error, Result};
use crate::families::{friendship, wheel};
use crate::graph::Graph;

pub use matching::{matching_number, maximum_matching};
pub use subgraph::{contains_subgraph, find_embedding};

/// A single forbidden subgraph.
///
/// Text form: `wheel:k`, `friendship:k`, `matching:m` or `g6:<graph6>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForbiddenPattern {
    Generic(Graph),
    /// `W_k`, `k >= 3`.
    Wheel(usize),
    /// `F_k`, `k >= 1`.
    Friendship(usize),
    /// `mK_2`, `m >= 1`.
    Matching(usize),
}

impl ForbiddenPattern {
    pub fn generic(f: Graph) -> Result<Self> {
        if f.n() == 0 {
            return Err(Error::param(
                "generic pattern must have at least one vertex",
            ));
        }
        Ok(ForbiddenPattern::Generic(f))
    }

    pub fn wheel(k: usize) -> Result<Self> {
        wheel(k)?;
        Ok(ForbiddenPattern::Wheel(k))
    }

    pub fn friendship(k: usize) -> Result<Self> {
        friendship(k)?;
        Ok(ForbiddenPattern::Friendship(k))
    }

    pub fn matching(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::param("matching pattern needs m >= 1"));
        }
        Ok(ForbiddenPattern::Matching(m))
    }

    /// The pattern as a concrete graph.
    pub fn graph(&self) -> Graph {
        match self {
            ForbiddenPattern::Generic(f) => f.clone(),
            ForbiddenPattern::Wheel(k) => wheel(*k).expect("validated wheel order"),
            ForbiddenPattern::Friendship(k) => friendship(*k).expect("validated friendship order"),
            ForbiddenPattern::Matching(m) => Graph::k_disjoint_edges(*m),
        }
    }

    /// Prepares a reusable checker; avoids rebuilding the pattern graph.
    pub fn checker(&self) -> PatternChecker {
        PatternChecker {
            pattern: self.clone(),
            graph: self.graph(),
        }
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenPattern::Generic(g) => write!(f, "g6:{}", graph6::to_graph6(g)),
            ForbiddenPattern::Wheel(k) => write!(f, "wheel:{k}"),
            ForbiddenPattern::Friendship(k) => write!(f, "friendship:{k}"),
            ForbiddenPattern::Matching(m) => write!(f, "matching:{m}"),
        }
    }
}

impl FromStr for ForbiddenPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Pattern {
            token: s.to_string(),
            reason,
        };
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| bad("expected kind:argument".into()))?;
        if kind == "g6" {
            let g = graph6::from_graph6(arg).map_err(|e| bad(e.to_string()))?;
            return ForbiddenPattern::generic(g).map_err(|e| bad(e.to_string()));
        }
        let k: usize = arg
            .parse()
            .map_err(|_| bad(format!("`{arg}` is not a nonnegative integer")))?;
        let p = match kind {
            "wheel" => ForbiddenPattern::wheel(k),
            "friendship" => ForbiddenPattern::friendship(k),
            "matching" => ForbiddenPattern::matching(k),
            other => return Err(bad(format!("unknown pattern kind `{other}`"))),
        };
        p.map_err(|e| bad(e.to_string()))
    }
}

impl Serialize for ForbiddenPattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A pattern with its graph built once, for repeated freeness checks.
#[derive(Clone, Debug)]
pub struct PatternChecker {
    pattern: ForbiddenPattern,
    graph: Graph,
}

impl PatternChecker {
    pub fn pattern(&self) -> &ForbiddenPattern {
        &self.pattern
    }

    pub fn is_free(&self, g: &Graph) -> bool {
        match self.pattern {
            ForbiddenPattern::Matching(m) => matching_number(g) < m,
            ForbiddenPattern::Wheel(k) if k >= 4 && g.max_degree() < k - 1 => true,
            ForbiddenPattern::Friendship(k) => !has_friendship(g, k),
            _ => !contains_subgraph(g, &self.graph),
        }
    }
}

/// `F_k = K_1 + kK_2` sits in `g` iff some neighbourhood spans a matching
/// of size `k`.
fn has_friendship(g: &Graph, k: usize) -> bool {
    (0..g.n()).any(|v| {
        g.degree(v) >= 2 * k && matching_number(&g.induced_subgraph(g.neighbors(v)).0) >= k
    })
}

/// True iff `g` has no subgraph isomorphic to the pattern.
pub fn is_pattern_free(g: &Graph, p: &ForbiddenPattern) -> bool {
    p.checker().is_free(g)
}

/// True iff `f` is a subgraph of `K_{2,|V(F)|}` (and hence of every larger `K_{2,m}`).
pub fn fits_in_k2m(f: &Graph) -> Result<bool> {
    if f.n() == 0 {
        return Err(Error::param("pattern must have at least one vertex"));
    }
    Ok(contains_subgraph(&Graph::complete_bipartite(2, f.n()), f))
}
