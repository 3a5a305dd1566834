//! Brute-force oracles and random graph sources shared by the integration
//! tests. Nothing here calls the library algorithms it is used to check.
#![allow(dead_code)]

use nalgebra::{DMatrix, SymmetricEigen};
use planar_spex::planarity::is_planar;
use planar_spex::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Largest adjacency eigenvalue from a dense symmetric eigensolver.
pub fn dense_rho(g: &Graph) -> f64 {
    let n = g.n();
    if n == 0 {
        return 0.0;
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    SymmetricEigen::new(a)
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Maximum matching size by exhaustive branching on the lowest free vertex.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(g: &Graph, free: &mut Vec<bool>) -> usize {
        let Some(v) = free.iter().position(|&f| f) else {
            return 0;
        };
        free[v] = false;
        let mut best = go(g, free);
        for u in 0..g.n() {
            if free[u] && g.has_edge(u, v) {
                free[u] = false;
                best = best.max(1 + go(g, free));
                free[u] = true;
            }
        }
        free[v] = true;
        best
    }
    go(g, &mut vec![true; g.n()])
}

/// Tries every injective map `F -> G`.
pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    fn go(host: &Graph, pattern: &Graph, image: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = image.len();
        if v == pattern.n() {
            return true;
        }
        for h in 0..host.n() {
            if used[h] {
                continue;
            }
            if (0..v).any(|u| pattern.has_edge(u, v) && !host.has_edge(image[u], h)) {
                continue;
            }
            used[h] = true;
            image.push(h);
            if go(host, pattern, image, used) {
                return true;
            }
            image.pop();
            used[h] = false;
        }
        false
    }
    go(host, pattern, &mut Vec::new(), &mut vec![false; host.n()])
}

fn induced_connected(g: &Graph, members: &[usize]) -> bool {
    let Some(&start) = members.first() else {
        return false;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in members {
            if !seen.contains(&w) && g.has_edge(v, w) {
                seen.push(w);
                stack.push(w);
            }
        }
    }
    seen.len() == members.len()
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if items.len() < size {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], size - 1);
    for s in &mut with {
        s.insert(0, items[0]);
    }
    with.extend(subsets(&items[1..], size));
    with
}

/// Connects every branch pair by an edge or by a path through unused
/// non-branch vertices, all paths internally disjoint.
fn route(g: &Graph, pairs: &[(usize, usize)], free: &mut Vec<bool>) -> bool {
    let Some((&(a, b), rest)) = pairs.split_first() else {
        return true;
    };
    // a direct edge is never worse than a detour
    if g.has_edge(a, b) {
        return route(g, rest, free);
    }
    fn walk(
        g: &Graph,
        at: usize,
        target: usize,
        rest: &[(usize, usize)],
        free: &mut Vec<bool>,
    ) -> bool {
        for next in 0..g.n() {
            if !free[next] || !g.has_edge(at, next) {
                continue;
            }
            free[next] = false;
            let done = (g.has_edge(next, target) && route(g, rest, free))
                || walk(g, next, target, rest, free);
            free[next] = true;
            if done {
                return true;
            }
        }
        false
    }
    walk(g, a, b, rest, free)
}

fn has_k5_subdivision(g: &Graph) -> bool {
    let big: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 4).collect();
    subsets(&big, 5).into_iter().any(|branch| {
        let pairs: Vec<_> = subsets(&branch, 2)
            .into_iter()
            .map(|p| (p[0], p[1]))
            .collect();
        let mut free: Vec<bool> = (0..g.n()).map(|v| !branch.contains(&v)).collect();
        route(g, &pairs, &mut free)
    })
}

fn has_k33_subdivision(g: &Graph) -> bool {
    let big: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= 3).collect();
    subsets(&big, 6).into_iter().any(|branch| {
        // side A always holds branch[0]
        subsets(&branch[1..], 2).into_iter().any(|others| {
            let side_a: Vec<usize> = std::iter::once(branch[0]).chain(others).collect();
            let side_b: Vec<usize> = branch
                .iter()
                .copied()
                .filter(|v| !side_a.contains(v))
                .collect();
            let pairs: Vec<_> = side_a
                .iter()
                .flat_map(|&x| side_b.iter().map(move |&y| (x, y)))
                .collect();
            let mut free: Vec<bool> = (0..g.n()).map(|v| !branch.contains(&v)).collect();
            route(g, &pairs, &mut free)
        })
    })
}

/// Planar iff no subdivision of `K_5` or `K_{3,3}` is a subgraph.
pub fn kuratowski_planar(g: &Graph) -> bool {
    !has_k5_subdivision(g) && !has_k33_subdivision(g)
}

fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

fn graph_of_mask(n: usize, slots: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<_> = slots
        .iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative per isomorphism class of graphs on `n <= 7`
/// vertices: scan labeled graphs as edge bitmasks, and mark every relabeling
/// of each new class as seen.
pub fn all_graph_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "labeled scan is 2^(n choose 2)");
    let slots = edge_slots(n);
    let index = |i: usize, j: usize| {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        b * (b - 1) / 2 + a
    };
    let maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| slots.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect();
    let total = 1u64 << slots.len();
    let mut seen = vec![false; total as usize];
    let mut reps = Vec::new();
    for mask in 0..total {
        if seen[mask as usize] {
            continue;
        }
        reps.push(graph_of_mask(n, &slots, mask));
        for map in &maps {
            let mut image = 0u64;
            for (b, &t) in map.iter().enumerate() {
                image |= (mask >> b & 1) << t;
            }
            seen[image as usize] = true;
        }
    }
    reps
}

pub fn bfs_connected(g: &Graph) -> bool {
    let all: Vec<usize> = (0..g.n()).collect();
    g.n() <= 1 || induced_connected(g, &all)
}

/// `G(n, p)` with `n` and `p` drawn uniformly from the given ranges.
pub fn random_graph_in<R: Rng>(
    rng: &mut R,
    n: std::ops::RangeInclusive<usize>,
    p: std::ops::Range<f64>,
) -> Graph {
    let n = rng.gen_range(n);
    let p = rng.gen_range(p);
    random_graph(rng, n, p)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = edge_slots(n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Random planar graph: offer edges in random order, keep those that leave
/// the graph planar, stop at a random edge budget.
pub fn random_planar<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut slots = edge_slots(n);
    slots.shuffle(rng);
    let cap = if n >= 3 {
        3 * n - 6
    } else {
        n.saturating_sub(1)
    };
    let budget = rng.gen_range(0..=cap);
    let mut g = Graph::empty(n);
    for (u, v) in slots {
        if g.edge_count() >= budget {
            break;
        }
        g.add_edge(u, v);
        if !is_planar(&g).planar {
            g.remove_edge(u, v);
        }
    }
    g
}

/// Random connected planar graph: a random spanning tree plus planar extras.
pub fn random_connected_planar<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(n);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(order[i], parent);
    }
    let mut slots = edge_slots(n);
    slots.shuffle(rng);
    let cap = if n >= 3 {
        3 * n - 6
    } else {
        n.saturating_sub(1)
    };
    let budget = rng.gen_range(n.saturating_sub(1)..=cap);
    for (u, v) in slots {
        if g.edge_count() >= budget {
            break;
        }
        if g.has_edge(u, v) {
            continue;
        }
        g.add_edge(u, v);
        if !is_planar(&g).planar {
            g.remove_edge(u, v);
        }
    }
    g
}
