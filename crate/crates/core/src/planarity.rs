//! Planarity testing.
//!
//! Two Euler-type edge bounds reject dense graphs outright; everything else
//! goes through the left-right (edge orientation) criterion, which decides
//! planarity from a DFS orientation, lowpoints and a stack of conflict pairs
//! without building an embedding.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Filter {
    EulerBound,
    BipartiteEulerBound,
    FullTest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub filter_used: Filter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerVerdict {
    MaybePlanar,
    DefinitelyNonplanar,
}

/// `e > 3n-6`, or bipartite with `e > 2n-4` (both for `n >= 3`).
pub fn euler_filter(g: &Graph) -> EulerVerdict {
    match bound_violated(g) {
        Some(_) => EulerVerdict::DefinitelyNonplanar,
        None => EulerVerdict::MaybePlanar,
    }
}

fn bound_violated(g: &Graph) -> Option<Filter> {
    let (n, e) = (g.n(), g.edge_count());
    if n < 3 {
        return None;
    }
    if e > 3 * n - 6 {
        return Some(Filter::EulerBound);
    }
    if e > 2 * n - 4 && g.is_bipartite() {
        return Some(Filter::BipartiteEulerBound);
    }
    None
}

pub fn is_planar(g: &Graph) -> PlanarityVerdict {
    if let Some(filter_used) = bound_violated(g) {
        return PlanarityVerdict {
            planar: false,
            filter_used,
        };
    }
    PlanarityVerdict {
        planar: LrState::new(g).run(),
        filter_used: Filter::FullTest,
    }
}

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'g> {
    g: &'g Graph,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    // per oriented edge
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    reference: Vec<usize>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    edge_id: HashMap<(usize, usize), usize>,
    out_edges: Vec<Vec<usize>>,
    stack: Vec<ConflictPair>,
    next_pair_id: usize,
}

impl<'g> LrState<'g> {
    fn new(g: &'g Graph) -> Self {
        let (n, m) = (g.n(), g.edge_count());
        LrState {
            g,
            height: vec![NONE; n],
            parent_edge: vec![NONE; n],
            src: Vec::with_capacity(m),
            dst: Vec::with_capacity(m),
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting_depth: Vec::with_capacity(m),
            reference: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            edge_id: HashMap::with_capacity(m),
            out_edges: vec![Vec::new(); n],
            stack: Vec::new(),
            next_pair_id: 0,
        }
    }

    fn run(mut self) -> bool {
        let n = self.g.n();
        let mut roots = Vec::new();
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                roots.push(v);
                self.orient(v);
            }
        }
        let m = self.src.len();
        self.reference = vec![NONE; m];
        self.lowpt_edge = vec![NONE; m];
        self.stack_bottom = vec![NONE; m];
        for v in 0..n {
            let depth = &self.nesting_depth;
            self.out_edges[v].sort_by_key(|&e| depth[e]);
        }
        roots.into_iter().all(|r| self.test(r))
    }

    fn orient(&mut self, v: usize) {
        let e = self.parent_edge[v];
        let neighbors: Vec<usize> = self.g.neighbors(v).iter().collect();
        for w in neighbors {
            let key = (v.min(w), v.max(w));
            if self.edge_id.contains_key(&key) {
                continue;
            }
            let vw = self.src.len();
            self.edge_id.insert(key, vw);
            self.src.push(v);
            self.dst.push(w);
            self.out_edges[v].push(vw);
            self.lowpt.push(self.height[v]);
            self.lowpt2.push(self.height[v]);
            self.nesting_depth.push(0);
            if self.height[w] == NONE {
                self.parent_edge[w] = vw;
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[vw] = self.height[w];
            }

            self.nesting_depth[vw] = 2 * self.lowpt[vw];
            if self.lowpt2[vw] < self.height[v] {
                // chordal
                self.nesting_depth[vw] += 1;
            }

            if e != NONE {
                if self.lowpt[vw] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                    self.lowpt[e] = self.lowpt[vw];
                } else if self.lowpt[vw] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                }
            }
        }
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn push_pair(&mut self, left: Interval, right: Interval) {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, iv: &Interval, b: usize) -> bool {
        !iv.is_empty() && iv.high != NONE && self.lowpt[iv.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low];
        }
        self.lowpt[p.left.low].min(self.lowpt[p.right.low])
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let out = self.out_edges[v].clone();
        for (i, &ei) in out.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.top_id();
            if ei == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.push_pair(Interval::EMPTY, Interval { low: ei, high: ei });
            }

            if self.lowpt[ei] < self.height[v] {
                if i == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p_left = Interval::EMPTY;
        let mut p_right = Interval::EMPTY;

        // merge return edges of ei into the right interval
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p_right.is_empty() {
                    p_right = q.right;
                } else {
                    self.reference[p_right.low] = q.right.high;
                }
                p_right.low = q.right.low;
            } else {
                self.reference[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }

        // merge conflicting return edges of earlier siblings into the left interval
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("nonempty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p_right.low != NONE {
                self.reference[p_right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p_right.low = q.right.low;
            }
            if p_left.is_empty() {
                p_left = q.left;
            } else if p_left.low != NONE {
                self.reference[p_left.low] = q.left.high;
            }
            p_left.low = q.left.low;
        }

        if !(p_left.is_empty() && p_right.is_empty()) {
            self.push_pair(p_left, p_right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }

        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.reference[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.reference[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.reference[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.reference[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }

        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr])
                {
                    hl
                } else {
                    hr
                };
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{family_w, k2_plus_path};
    use crate::graph::{disjoint_union, join};

    #[test]
    fn euler_filter_examples() {
        assert_eq!(
            euler_filter(&Graph::complete(5)),
            EulerVerdict::DefinitelyNonplanar
        );
        assert_eq!(
            euler_filter(&Graph::complete_bipartite(3, 3)),
            EulerVerdict::DefinitelyNonplanar
        );
        assert_eq!(
            euler_filter(&Graph::cycle(6).unwrap()),
            EulerVerdict::MaybePlanar
        );
    }

    #[test]
    fn small_verdicts() {
        assert!(is_planar(&Graph::complete(4)).planar);
        let k5 = is_planar(&Graph::complete(5));
        assert!(!k5.planar);
        assert_eq!(k5.filter_used, Filter::EulerBound);
        assert_eq!(
            is_planar(&Graph::complete_bipartite(3, 3)).filter_used,
            Filter::BipartiteEulerBound
        );
        assert!(is_planar(&Graph::empty(0)).planar);
        assert!(is_planar(&Graph::empty(7)).planar);
    }

    #[test]
    fn families_are_planar() {
        assert!(is_planar(&family_w(20, 6).unwrap()).planar);
        assert!(is_planar(&k2_plus_path(40).unwrap()).planar);
    }

    #[test]
    fn sparse_nonplanar_needs_full_test() {
        // K_{3,3} with one edge subdivided: 7 vertices, 10 edges, bipartite bound 10
        let mut g = Graph::empty(7);
        for a in 0..3 {
            for b in 3..6 {
                if (a, b) != (0, 3) {
                    g.add_edge(a, b);
                }
            }
        }
        g.add_edge(0, 6);
        g.add_edge(6, 3);
        let v = is_planar(&g);
        assert_eq!(
            v,
            PlanarityVerdict {
                planar: false,
                filter_used: Filter::FullTest
            }
        );

        // Petersen graph
        let mut p = Graph::empty(10);
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(i, i + 5);
            p.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        assert!(!is_planar(&p).planar);
    }

    #[test]
    fn disconnected_components() {
        let g = disjoint_union(&Graph::complete(4), &Graph::cycle(5).unwrap());
        assert!(is_planar(&g).planar);
        let mut k5e = Graph::complete(5);
        k5e.remove_edge(0, 1);
        let bad = disjoint_union(&k5e, &Graph::complete_bipartite(3, 3));
        assert!(!is_planar(&bad).planar);
        // K_5 plus isolated vertices is sparse enough to pass the edge bound
        let k5_pad = disjoint_union(&Graph::complete(5), &Graph::empty(2));
        assert!(!is_planar(&k5_pad).planar);
    }

    #[test]
    fn wheel_joins() {
        assert!(is_planar(&join(&Graph::empty(2), &Graph::cycle(12).unwrap())).planar);
        // 3K_1 + C_4 contains K_{3,3}
        assert!(!is_planar(&join(&Graph::empty(3), &Graph::cycle(4).unwrap())).planar);
        // K_2 + C_5 contains K_5 minor
        assert!(!is_planar(&join(&Graph::complete(2), &Graph::cycle(5).unwrap())).planar);
    }
}
