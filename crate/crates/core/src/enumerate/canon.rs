//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree individualizes one vertex of the first non-singleton cell
//! at each level and refines to an equitable partition; every leaf is a
//! labeling and the canonical one maximizes the relabeled adjacency
//! certificate. Branches are pruned two ways: among twins in the target cell
//! (vertices with equal neighbourhoods up to each other) only one is tried,
//! and at the root, candidates already reached by a discovered automorphism
//! are skipped.

use std::cmp::Ordering;

use crate::graph::Graph;

use super::graph6::to_graph6;

type Cells = Vec<Vec<usize>>;

/// A canonical labeling: `order[i]` is the vertex placed at position `i`.
pub fn canonical_order(g: &Graph) -> Vec<usize> {
    canonical_order_colored(g, &vec![0; g.n()])
}

/// Canonical labeling of a vertex-colored graph. Colors are compared by
/// value, so isomorphisms must map each color class onto itself.
pub fn canonical_order_colored(g: &Graph, colors: &[usize]) -> Vec<usize> {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    if g.n() == 0 {
        return Vec::new();
    }
    let mut by_color: Vec<usize> = (0..g.n()).collect();
    by_color.sort_by_key(|&v| (colors[v], v));
    let mut cells: Cells = Vec::new();
    for v in by_color {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut search = Search::new(g);
    search.descend(cells, 0);
    search.best.expect("search reaches at least one leaf").1
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    relabel_by_order(g, &canonical_order(g))
}

/// graph6 string of the canonical form; equal strings ⇔ isomorphic graphs.
pub fn canonical_graph6(g: &Graph) -> String {
    to_graph6(&canonical_form(g))
}

pub(crate) fn relabel_by_order(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    g.permuted(&pos)
}

/// True iff some automorphism of `g` maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    if g.degree(u) != g.degree(v) {
        return false;
    }
    let mark = |w: usize| {
        let mut c = vec![1; g.n()];
        c[w] = 0;
        c
    };
    let cu = canonical_order_colored(g, &mark(u));
    let cv = canonical_order_colored(g, &mark(v));
    relabel_by_order(g, &cu) == relabel_by_order(g, &cv)
}

/// Equitable refinement: split every cell by its vertices' neighbour counts
/// into every cell, ordering the pieces by that count vector, until stable.
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let k = cells.len();
        if k == n {
            return;
        }
        let mut next: Cells = Vec::with_capacity(n);
        let mut sig = vec![0u32; n * k];
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            for &v in cell {
                let row = &mut sig[v * k..(v + 1) * k];
                row.iter_mut().for_each(|c| *c = 0);
                for w in g.neighbors(v).iter() {
                    row[cell_of[w]] += 1;
                }
            }
            let mut sorted = cell.clone();
            sorted.sort_by(|&a, &b| sig[a * k..(a + 1) * k].cmp(&sig[b * k..(b + 1) * k]));
            let mut start = 0;
            for i in 1..=sorted.len() {
                if i == sorted.len()
                    || sig[sorted[i] * k..(sorted[i] + 1) * k]
                        != sig[sorted[start] * k..(sorted[start] + 1) * k]
                {
                    let mut piece = sorted[start..i].to_vec();
                    piece.sort_unstable();
                    next.push(piece);
                    start = i;
                }
            }
        }
        let stable = next.len() == k;
        *cells = next;
        if stable {
            return;
        }
    }
}

struct Search<'g> {
    g: &'g Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    /// Union-find over vertices, merged along discovered automorphisms.
    orbit: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph) -> Self {
        Search {
            g,
            best: None,
            orbit: (0..g.n()).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.orbit[v] != v {
            self.orbit[v] = self.orbit[self.orbit[v]];
            v = self.orbit[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.orbit[ra.max(rb)] = ra.min(rb);
        }
    }

    fn certificate(&self, order: &[usize]) -> Vec<u64> {
        let n = order.len();
        let words = n.div_ceil(64);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut cert = vec![0u64; n * words];
        for (i, &v) in order.iter().enumerate() {
            for w in self.g.neighbors(v).iter() {
                let p = pos[w];
                // most significant bit first so that lexicographic word
                // order equals lexicographic bit order
                cert[i * words + p / 64] |= 1u64 << (63 - p % 64);
            }
        }
        cert
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let mut na = self.g.neighbors(a).clone();
        let mut nb = self.g.neighbors(b).clone();
        na.remove(b);
        nb.remove(a);
        na == nb
    }

    fn descend(&mut self, mut cells: Cells, depth: usize) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().map(|c| c[0]).collect());
            return;
        };

        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            if depth == 0 {
                let rv = self.find(v);
                if tried.iter().any(|&t| self.find(t) == rv) {
                    continue;
                }
            }
            tried.push(v);
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(rest);
            child.extend_from_slice(&cells[target + 1..]);
            self.descend(child, depth + 1);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let cert = self.certificate(&order);
        let cmp = match &self.best {
            None => Ordering::Greater,
            Some((best, _)) => cert.cmp(best),
        };
        match cmp {
            Ordering::Greater => self.best = Some((cert, order)),
            Ordering::Equal => {
                let best_order = self.best.as_ref().expect("best set").1.clone();
                for (&a, &b) in best_order.iter().zip(&order) {
                    self.union(a, b);
                }
            }
            Ordering::Less => {}
        }
    }
}
