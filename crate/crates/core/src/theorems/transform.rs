//! Path systems and the `(s1, s2)`-transformation that lengthens one path
//! at the expense of another.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::k2_join_paths;
use crate::spectral::{spectral_radius_with, SpectralConfig};

/// A disjoint union of paths, recorded as the multiset of path orders.
/// Isolated vertices are paths of order 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathSystem {
    // sorted descending
    parts: Vec<usize>,
}

impl PathSystem {
    pub fn new(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        if parts.contains(&0) {
            return Err(Error::param("path orders must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PathSystem { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of vertices.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    fn count(&self, s: usize) -> usize {
        self.parts.iter().filter(|&&p| p == s).count()
    }

    fn without(&self, drop: &[usize]) -> Vec<usize> {
        let mut rest = self.parts.clone();
        for d in drop {
            let i = rest.iter().position(|p| p == d).expect("part present");
            rest.remove(i);
        }
        rest
    }

    /// Replace `P_{s1} ∪ P_{s2}` by `P_{s1+1} ∪ P_{s2-1}`, or by `P_{s1+s2}`
    /// when `s2 = 1`.
    pub fn transform(&self, s1: usize, s2: usize) -> Result<PathSystem> {
        if s2 == 0 || s1 < s2 {
            return Err(Error::param(format!(
                "transformation needs s1 >= s2 >= 1, got ({s1},{s2})"
            )));
        }
        let have = if s1 == s2 {
            self.count(s1) >= 2
        } else {
            self.count(s1) >= 1 && self.count(s2) >= 1
        };
        if !have {
            return Err(Error::param(format!(
                "{self} has no distinct components P_{s1}, P_{s2}"
            )));
        }
        let mut parts = self.without(&[s1, s2]);
        if s2 == 1 {
            parts.push(s1 + s2);
        } else {
            parts.push(s1 + 1);
            parts.push(s2 - 1);
        }
        PathSystem::new(parts)
    }
}

impl fmt::Display for PathSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for PathSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransformStep {
    pub s1: usize,
    pub s2: usize,
    pub result: PathSystem,
}

/// A sequence of transformations carrying `from` to `target`.
///
/// Greedy: after cancelling parts common to both, grow the largest
/// remaining part of `from` using the smallest other remaining part as
/// `s2`. `None` when the greedy run stalls, which happens whenever a part of
/// `from` exceeds every unmatched target part (the largest part never
/// shrinks).
pub fn transformation_path(
    from: &PathSystem,
    target: &PathSystem,
) -> Result<Option<Vec<TransformStep>>> {
    if from.total() != target.total() {
        return Err(Error::param(format!(
            "vertex totals differ: {} has {}, {} has {}",
            from,
            from.total(),
            target,
            target.total()
        )));
    }
    let mut cur = from.clone();
    let mut steps = Vec::new();
    while cur != *target {
        // multiset difference
        let mut left = cur.parts.clone();
        let mut right = target.parts.clone();
        let mut i = 0;
        while i < left.len() {
            if let Some(j) = right.iter().position(|&p| p == left[i]) {
                right.remove(j);
                left.remove(i);
            } else {
                i += 1;
            }
        }
        let (grow, goal) = (left[0], right[0]);
        if grow > goal || left.len() < 2 {
            return Ok(None);
        }
        let s2 = *left.last().expect("two parts");
        let (s1, s2) = (grow, s2);
        cur = cur.transform(s1, s2)?;
        steps.push(TransformStep {
            s1,
            s2,
            result: cur.clone(),
        });
    }
    Ok(Some(steps))
}

/// Smallest gain counted as an increase. Two radii computed to a residual
/// of `1e-10` cannot be ordered more finely than this.
pub const GAIN_RESOLUTION: f64 = 1e-11;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TransformComparison {
    pub n: usize,
    pub s1: usize,
    pub s2: usize,
    pub before: PathSystem,
    pub after: PathSystem,
    pub rho_before: f64,
    pub rho_after: f64,
    /// `rho_after - rho_before > GAIN_RESOLUTION`.
    pub strict_increase: bool,
}

impl TransformComparison {
    pub fn gain(&self) -> f64 {
        self.rho_after - self.rho_before
    }
}

/// Compare `ρ(K_2 + H)` with `ρ(K_2 + H*)` for the `(s1, s2)`-transform `H*`.
pub fn verify_lemma9(
    n: usize,
    h: &PathSystem,
    s1: usize,
    s2: usize,
    spectral: &SpectralConfig,
) -> Result<TransformComparison> {
    if h.total() + 2 != n {
        return Err(Error::param(format!(
            "{h} has {} vertices, expected n - 2 = {}",
            h.total(),
            n.saturating_sub(2)
        )));
    }
    let after = h.transform(s1, s2)?;
    let rho_before = spectral_radius_with(&k2_join_paths(h.parts()), spectral)?.rho;
    let rho_after = spectral_radius_with(&k2_join_paths(after.parts()), spectral)?.rho;
    Ok(TransformComparison {
        n,
        s1,
        s2,
        before: h.clone(),
        after,
        rho_before,
        rho_after,
        strict_increase: rho_after - rho_before > GAIN_RESOLUTION,
    })
}
