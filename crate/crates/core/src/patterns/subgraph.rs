//! Subgraph (monomorphism) search by VF2-style backtracking.
//!
//! Pattern vertices are matched hub-first: highest degree, then most
//! neighbours already placed. Each candidate set is the intersection of the
//! host neighbourhoods of the images of already-placed pattern neighbours,
//! filtered by degree.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// True iff `pattern` is isomorphic to a (not necessarily induced)
/// subgraph of `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, pattern).is_some()
}

/// An injective map from pattern vertices to host vertices carrying every
/// pattern edge onto a host edge, if one exists.
pub fn find_embedding(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let (hn, pn) = (host.n(), pattern.n());
    if pn == 0 {
        return Some(Vec::new());
    }
    if pn > hn || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut hd = host.degrees();
    let mut pd = pattern.degrees();
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.sort_unstable_by(|a, b| b.cmp(a));
    if pd.iter().zip(&hd).any(|(p, h)| p > h) {
        return None;
    }

    let order = match_order(pattern);
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            order[..i]
                .iter()
                .copied()
                .filter(|&u| pattern.has_edge(u, v))
                .collect()
        })
        .collect();

    let mut search = Search {
        host,
        pattern,
        order: &order,
        earlier: &earlier,
        host_deg: host.degrees(),
        image: vec![usize::MAX; pn],
        used: VertexSet::with_capacity(hn),
    };
    search.extend(0).then_some(search.image)
}

fn match_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let deg = pattern.degrees();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| (links[a], deg[a]).cmp(&(links[b], deg[b])).then(b.cmp(&a)))
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
        for w in pattern.neighbors(next).iter() {
            links[w] += 1;
        }
    }
    order
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    earlier: &'a [Vec<usize>],
    host_deg: Vec<usize>,
    image: Vec<usize>,
    used: VertexSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let need = self.pattern.degree(v);
        let candidates: Vec<usize> = match self.earlier[depth].split_first() {
            Some((&first, rest)) => {
                let mut c = self.host.neighbors(self.image[first]).clone();
                for &u in rest {
                    c.intersect_with(self.host.neighbors(self.image[u]));
                }
                c.difference_with(&self.used);
                c.iter().filter(|&h| self.host_deg[h] >= need).collect()
            }
            None => (0..self.host.n())
                .filter(|&h| !self.used.contains(h) && self.host_deg[h] >= need)
                .collect(),
        };
        for h in candidates {
            self.image[v] = h;
            self.used.insert(h);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(h);
        }
        self.image[v] = usize::MAX;
        false
    }
}
