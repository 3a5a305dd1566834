//! Per-theorem checks of the extremal families.
//!
//! Planarity, pattern-freeness, closed-form radii and (for the matching
//! family) the exact matching number are hard checks: they hold for every
//! valid `(n, k)`. Whether the family is the unique maximizer at small `n`
//! is only observed, by exhaustive search, and recorded as data.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{canonical_graph6, to_graph6};
use crate::error::{Error, Result};
use crate::families::{family_f, family_m, family_w};
use crate::graph::Graph;
use crate::patterns::{is_pattern_free, matching_number, ForbiddenPattern};
use crate::planarity::is_planar;
use crate::spectral::{rho_book, rho_k2_bipartite, rho_star, spectral_radius_with};

use super::search::{spex_search, SearchOptions};

/// Agreement required between the iterated radius and a closed form.
pub const CLOSED_FORM_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Wheel-free: family `W_{n,k}`.
    T2,
    /// Friendship-free: family `F_{n,k}`.
    T3,
    /// `(k+1)K_2`-free: family `M_{n,k}`.
    T4,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T2 => "T2",
            Theorem::T3 => "T3",
            Theorem::T4 => "T4",
        })
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T2" | "W" => Ok(Theorem::T2),
            "T3" | "F" => Ok(Theorem::T3),
            "T4" | "M" => Ok(Theorem::T4),
            _ => Err(Error::param(format!(
                "unknown theorem `{s}` (expected T2, T3 or T4)"
            ))),
        }
    }
}

impl Theorem {
    pub fn family(self, n: usize, k: usize) -> Result<Graph> {
        match self {
            Theorem::T2 => family_w(n, k),
            Theorem::T3 => family_f(n, k),
            Theorem::T4 => family_m(n, k),
        }
    }

    pub fn pattern(self, k: usize) -> Result<ForbiddenPattern> {
        match self {
            Theorem::T2 => ForbiddenPattern::wheel(k),
            Theorem::T3 => ForbiddenPattern::friendship(k),
            Theorem::T4 => ForbiddenPattern::matching(k + 1),
        }
    }

    /// Closed-form radius of the family, where one is available.
    pub fn closed_form(self, n: usize, k: usize) -> Option<f64> {
        match (self, k) {
            (Theorem::T2, 3) | (Theorem::T3, 1) => rho_k2_bipartite(n).ok(),
            (Theorem::T3, 2) | (Theorem::T4, 2) => rho_book(n).ok(),
            (Theorem::T4, 1) => rho_star(n).ok(),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Run the exhaustive search only up to this order.
    pub search_max_n: usize,
    pub search: SearchOptions,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            search_max_n: 9,
            search: SearchOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchObservation {
    pub max_rho: Option<f64>,
    pub argmax: Vec<String>,
    pub examined: usize,
    /// Best `G_1 ∪ isolated vertices` with a smaller nontrivial component.
    pub disconnected_max_rho: Option<f64>,
    pub family_is_unique_argmax: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub n: usize,
    pub k: usize,
    pub pattern: ForbiddenPattern,
    pub family_graph6: String,
    pub planar: bool,
    pub pattern_free: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching_number: Option<usize>,
    pub rho: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form_rho: Option<f64>,
    pub closed_form_ok: bool,
    /// All hard checks passed.
    pub hard_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchObservation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search_skipped: Option<String>,
}

pub fn verify_theorem(
    n: usize,
    k: usize,
    which: Theorem,
    opts: &VerifyOptions,
) -> Result<TheoremReport> {
    let family = which.family(n, k)?;
    let pattern = which.pattern(k)?;
    let planar = is_planar(&family).planar;
    let pattern_free = is_pattern_free(&family, &pattern);
    let matching = (which == Theorem::T4).then(|| matching_number(&family));
    let rho = spectral_radius_with(&family, &opts.search.spectral)?.rho;
    let closed = which.closed_form(n, k);
    let closed_form_ok = closed.is_none_or(|c| (c - rho).abs() <= CLOSED_FORM_TOL);
    let hard_ok = planar && pattern_free && closed_form_ok && matching.is_none_or(|m| m == k);

    let (search, search_skipped) = if n <= opts.search_max_n {
        let sopts = SearchOptions {
            include_disconnected: true,
            ..opts.search.clone()
        };
        let report = spex_search(n, Some(&pattern), &sopts)?;
        let disconnected_max_rho = report.disconnected.as_ref().map(|d| d.max_rho);
        let family_key = canonical_graph6(&family);
        let unique_connected = report.argmax == [family_key];
        let beats_disconnected = match (report.max_rho, disconnected_max_rho) {
            (Some(m), Some(d)) => m > d + sopts.tie_tol,
            _ => true,
        };
        let obs = SearchObservation {
            max_rho: report.max_rho,
            argmax: report.argmax,
            examined: report.examined,
            disconnected_max_rho,
            family_is_unique_argmax: unique_connected && beats_disconnected,
        };
        (Some(obs), None)
    } else {
        (
            None,
            Some(format!(
                "n = {n} exceeds the search limit {}",
                opts.search_max_n
            )),
        )
    };

    Ok(TheoremReport {
        theorem: which,
        n,
        k,
        pattern,
        family_graph6: to_graph6(&family),
        planar,
        pattern_free,
        matching_number: matching,
        rho,
        closed_form_rho: closed,
        closed_form_ok,
        hard_ok,
        search,
        search_skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wheel_k3_at_ten() {
        let r = verify_theorem(10, 3, Theorem::T2, &VerifyOptions::default()).unwrap();
        assert!(r.hard_ok && r.planar && r.pattern_free);
        assert!((r.rho - 4.0).abs() < 1e-8);
        assert!(r.search.is_none() && r.search_skipped.is_some());
    }

    #[test]
    fn friendship_k1() {
        let r = verify_theorem(8, 1, Theorem::T3, &VerifyOptions::default()).unwrap();
        assert!(r.hard_ok);
        assert_eq!(r.family_graph6, to_graph6(&Graph::complete_bipartite(2, 6)));
        assert!(r.search.is_some());
    }

    #[test]
    fn matching_k2_at_seven() {
        let r = verify_theorem(7, 2, Theorem::T4, &VerifyOptions::default()).unwrap();
        assert!(r.hard_ok);
        assert_eq!(r.matching_number, Some(2));
        assert!((r.rho - (1.0 + 41f64.sqrt()) / 2.0).abs() < 1e-8);
        let s = r.search.unwrap();
        assert!(s.max_rho.unwrap() >= r.rho - 1e-9);
    }

    #[test]
    fn parameter_errors() {
        assert!(verify_theorem(4, 4, Theorem::T2, &VerifyOptions::default()).is_err());
        assert!("T9".parse::<Theorem>().is_err());
        assert_eq!("t3".parse::<Theorem>().unwrap(), Theorem::T3);
    }
}
