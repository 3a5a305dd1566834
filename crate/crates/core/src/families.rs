//! Named graphs: wheels, friendship graphs and the extremal families
//! `W_{n,k}`, `F_{n,k}`, `M_{n,k}` for wheel-, friendship- and matching-free
//! planar graphs.
//!
//! All joins place the two hub vertices first, so vertices `0` and `1` are
//! the hubs of every `K_2 + H` and `2K_1 + H` built here.

use crate::error::{Error, Result};
use crate::graph::{join, union_all, Graph};

/// `W_k = K_1 + C_{k-1}`, with `W_3` taken to be the triangle.
pub fn wheel(k: usize) -> Result<Graph> {
    match k {
        0..=2 => Err(Error::param(format!("wheel needs k >= 3, got {k}"))),
        3 => Ok(Graph::complete(3)),
        _ => Ok(join(&Graph::empty(1), &Graph::cycle(k - 1)?)),
    }
}

/// `F_k = K_1 + kK_2`: `k` triangles sharing vertex 0.
pub fn friendship(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::param("friendship needs k >= 1"));
    }
    Ok(join(&Graph::empty(1), &Graph::k_disjoint_edges(k)))
}

/// The book `K_2 + (n-2)K_1`.
pub fn book(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param(format!("book needs n >= 2, got {n}")));
    }
    Ok(join(&Graph::complete(2), &Graph::empty(n - 2)))
}

/// Disjoint union of paths with the given orders, in order.
pub fn path_forest(parts: &[usize]) -> Graph {
    let paths: Vec<Graph> = parts.iter().map(|&s| Graph::path(s)).collect();
    union_all(&paths)
}

/// `K_2 + (P_{s_1} ∪ P_{s_2} ∪ ...)`.
pub fn k2_join_paths(parts: &[usize]) -> Graph {
    join(&Graph::complete(2), &path_forest(parts))
}

/// Path orders of `R` in `W_{n,k}` for `k >= 5`: `⌊(n-2)/(k-3)⌋` copies of
/// `P_{k-3}` followed by the remainder path (omitted when empty).
pub fn wheel_free_parts(n: usize, k: usize) -> Vec<usize> {
    let m = n - 2;
    let q = m / (k - 3);
    let mut parts = vec![k - 3; q];
    let rem = m - (k - 3) * q;
    if rem > 0 {
        parts.push(rem);
    }
    parts
}

/// Extremal graph for wheel-free planar graphs.
///
/// * `k = 3`: `K_{2,n-2}`
/// * `k = 4`: `2K_1 + C_{n-2}`
/// * `k >= 5`: `K_2 + (⌊(n-2)/(k-3)⌋ P_{k-3} ∪ P_{rem})`
pub fn family_w(n: usize, k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::param(format!("family W needs k >= 3, got {k}")));
    }
    if n < k + 1 {
        return Err(Error::param(format!(
            "family W needs n >= k+1 = {}, got {n}",
            k + 1
        )));
    }
    Ok(match k {
        3 => Graph::complete_bipartite(2, n - 2),
        4 => join(&Graph::empty(2), &Graph::cycle(n - 2)?),
        _ => k2_join_paths(&wheel_free_parts(n, k)),
    })
}

/// Extremal graph for friendship-free planar graphs.
///
/// * `k = 1`: `K_{2,n-2}`
/// * `k = 2`: `K_2 + (n-2)K_1`
/// * `k >= 3`: `K_2 + (P_{2k-3} ∪ (n-2k+1)K_1)`
pub fn family_f(n: usize, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::param("family F needs k >= 1"));
    }
    if n < 2 * k + 1 {
        return Err(Error::param(format!(
            "family F needs n >= 2k+1 = {}, got {n}",
            2 * k + 1
        )));
    }
    Ok(match k {
        1 => Graph::complete_bipartite(2, n - 2),
        2 => book(n)?,
        _ => path_plus_isolated(n, k),
    })
}

/// Extremal graph for planar graphs without `k+1` independent edges.
///
/// * `k = 1`: `K_{1,n-1}`
/// * `k = 2`: `K_2 + (n-2)K_1`
/// * `k >= 3`: `K_2 + (P_{2k-3} ∪ (n-2k+1)K_1)`
pub fn family_m(n: usize, k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::param("family M needs k >= 1"));
    }
    if n < 2 * k {
        return Err(Error::param(format!(
            "family M needs n >= 2k = {}, got {n}",
            2 * k
        )));
    }
    Ok(match k {
        1 => Graph::star(n),
        2 => book(n)?,
        _ => path_plus_isolated(n, k),
    })
}

fn path_plus_isolated(n: usize, k: usize) -> Graph {
    let mut parts = vec![2 * k - 3];
    parts.extend(std::iter::repeat_n(1, n - 2 * k + 1));
    k2_join_paths(&parts)
}

/// `K_2 + P_{n-2}`, the planar graph of maximum spectral radius for large `n`.
pub fn k2_plus_path(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param(format!("K_2 + P_(n-2) needs n >= 2, got {n}")));
    }
    Ok(k2_join_paths(&[n - 2]))
}
