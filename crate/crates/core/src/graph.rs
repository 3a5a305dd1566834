//! Simple undirected graphs on dense vertex indices, stored as neighbor bitsets.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Rows are symmetric and loop-free; every mutating method preserves that.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: (0..n).map(|_| VertexSet::with_capacity(n)).collect(),
        }
    }

    /// Build from an edge list, rejecting loops and out-of-range endpoints.
    /// Repeated edges collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({u},{v}) out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
        }
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        join(&Graph::empty(a), &Graph::empty(b))
    }

    /// `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Self {
        match n {
            0 => Graph::empty(0),
            _ => Graph::complete_bipartite(1, n - 1),
        }
    }

    /// `kK_2`: edges `{2i, 2i+1}`.
    pub fn k_disjoint_edges(k: usize) -> Self {
        let mut g = Graph::empty(2 * k);
        for i in 0..k {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loop at vertex {u}");
        assert!(u < self.n() && v < self.n(), "edge ({u},{v}) out of range");
        self.adj[v].insert(u);
        self.adj[u].insert(v)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.adj[v].remove(u);
        self.adj[u].remove(v)
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(VertexSet::with_capacity(self.n() + 1));
        self.n() - 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.adj[u].iter() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in self.adj[u].iter() {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `G[S]`, with vertices renumbered in increasing order of `S`.
    /// Returns the subgraph and the map from new to old indices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = s.iter().filter(|&v| v < self.n()).collect();
        let mut new_of = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut g = Graph::empty(old.len());
        for (i, &v) in old.iter().enumerate() {
            for w in self.adj[v].iter() {
                if new_of[w] != usize::MAX && new_of[w] > i {
                    g.add_edge(i, new_of[w]);
                }
            }
        }
        (g, old)
    }

    /// Relabel so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertices whose removal disconnects their component.
    pub fn cut_vertices(&self) -> VertexSet {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut cut = VertexSet::with_capacity(n);
        let mut timer = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, neighbor iterator position)
            let mut stack: Vec<(usize, usize, Vec<usize>, usize)> = Vec::new();
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, self.adj[root].iter().collect(), 0));
            let mut root_children = 0;
            while let Some(top) = stack.last_mut() {
                let (u, parent) = (top.0, top.1);
                if top.3 < top.2.len() {
                    let w = top.2[top.3];
                    top.3 += 1;
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, self.adj[w].iter().collect(), 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if parent != root && low[u] >= disc[parent] {
                            cut.insert(parent);
                        }
                    }
                }
            }
            if root_children > 1 {
                cut.insert(root);
            }
        }
        cut
    }

    /// `e(S)`: number of edges with both endpoints in `S`.
    pub fn edge_count_within(&self, s: &VertexSet) -> Result<usize> {
        self.check_subset(s)?;
        Ok(s.iter()
            .map(|v| self.adj[v].intersection_len(s))
            .sum::<usize>()
            / 2)
    }

    /// `e(S, T)` for disjoint `S`, `T`.
    pub fn edge_count_between(&self, s: &VertexSet, t: &VertexSet) -> Result<usize> {
        self.check_subset(s)?;
        self.check_subset(t)?;
        if !s.is_disjoint(t) {
            return Err(Error::param("vertex sets S and T overlap"));
        }
        Ok(s.iter().map(|v| self.adj[v].intersection_len(t)).sum())
    }

    fn check_subset(&self, s: &VertexSet) -> Result<()> {
        match s.max() {
            Some(m) if m >= self.n() => Err(Error::param(format!(
                "vertex {m} outside graph on {} vertices",
                self.n()
            ))),
            _ => Ok(()),
        }
    }

    /// Checks symmetry, looplessness and index range of every row.
    pub fn is_well_formed(&self) -> bool {
        let n = self.n();
        self.adj.iter().enumerate().all(|(u, row)| {
            !row.contains(u) && row.iter().all(|v| v < n && self.adj[v].contains(u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// `G ∪ H` with `H`'s vertices shifted by `|G|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut out = Graph::empty(off + h.n());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(u + off, v + off);
    }
    out
}

/// Disjoint union of a sequence of graphs, in order.
pub fn union_all<'a>(parts: impl IntoIterator<Item = &'a Graph>) -> Graph {
    parts
        .into_iter()
        .fold(Graph::empty(0), |acc, g| disjoint_union(&acc, g))
}

/// `G + H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.add_edge(u, g.n() + v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graphs() {
        assert_eq!(Graph::empty(0).n(), 0);
        let g = Graph::empty(3);
        assert_eq!((g.n(), g.edge_count()), (3, 0));
        assert_eq!(
            join(&Graph::empty(2), &Graph::empty(5)),
            Graph::complete_bipartite(2, 5)
        );
    }

    #[test]
    fn basic_families() {
        let kb = Graph::complete_bipartite(2, 3);
        assert_eq!(kb.edge_count(), 6);
        assert!(kb.is_bipartite());
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!(c5.degrees().iter().all(|&d| d == 2));
        assert!(Graph::cycle(2).is_err());
        let m = Graph::k_disjoint_edges(3);
        assert_eq!((m.n(), m.edge_count()), (6, 3));
        assert_eq!(Graph::path(0).n(), 0);
        assert_eq!((Graph::path(1).n(), Graph::path(1).edge_count()), (1, 0));
        assert!(Graph::complete(3).has_edge(0, 2));
    }

    #[test]
    fn unions_and_joins() {
        let g = disjoint_union(&Graph::path(2), &Graph::path(1));
        assert_eq!((g.n(), g.edge_count()), (3, 1));
        let c3 = Graph::complete(3);
        let two = disjoint_union(&c3, &c3);
        assert_eq!(
            (two.n(), two.edge_count(), two.components().len()),
            (6, 6, 2)
        );
        let p4 = Graph::path(4);
        assert_eq!(disjoint_union(&Graph::empty(0), &p4), p4);

        let w5 = join(&Graph::empty(1), &Graph::cycle(4).unwrap());
        assert_eq!((w5.n(), w5.edge_count()), (5, 8));
        let book = join(&Graph::complete(2), &Graph::empty(3));
        assert_eq!(book.edge_count(), 7);
    }

    #[test]
    fn edge_counts() {
        let k4 = Graph::complete(4);
        assert_eq!(k4.edge_count_within(&VertexSet::full(4)).unwrap(), 6);
        let kb = Graph::complete_bipartite(2, 3);
        let s = VertexSet::from_iter_cap(5, [0, 1]);
        let t = VertexSet::from_iter_cap(5, [2, 3, 4]);
        assert_eq!(kb.edge_count_between(&s, &t).unwrap(), 6);
        assert!(kb.edge_count_between(&s, &s).is_err());
        assert!(kb
            .edge_count_within(&VertexSet::from_iter_cap(9, [8]))
            .is_err());

        let mut k5e = Graph::complete(5);
        k5e.remove_edge(0, 1);
        assert_eq!(
            k5e.edge_count_within(&VertexSet::full(5)).unwrap(),
            3 * 5 - 6
        );
    }

    #[test]
    fn cut_vertices_of_small_graphs() {
        let p = Graph::path(4);
        assert_eq!(p.cut_vertices().iter().collect::<Vec<_>>(), vec![1, 2]);
        assert!(Graph::cycle(5).unwrap().cut_vertices().is_empty());
        assert_eq!(
            Graph::star(4).cut_vertices().iter().collect::<Vec<_>>(),
            vec![0]
        );
    }

    #[test]
    fn induced_and_permuted() {
        let c5 = Graph::cycle(5).unwrap();
        let (sub, map) = c5.induced_subgraph(&VertexSet::from_iter_cap(5, [0, 1, 2]));
        assert_eq!(sub, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let q = c5.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(q.edge_count(), 5);
        assert!(q.is_well_formed());
    }

    #[test]
    fn from_edges_validates() {
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap().edge_count(),
            1
        );
    }
}
