//! Two-hub structure: vertices `u1`, `u2` whose common neighbourhood is
//! everything else, with the remainder `R` split into paths and cycles.

use serde::Serialize;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Path,
    Cycle,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RClass {
    AllPaths,
    SingleCycleSpanningR,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RComponent {
    pub kind: ComponentKind,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureWitness {
    pub u1: usize,
    pub u2: usize,
    pub r: VertexSet,
    pub hub_edge: bool,
    pub r_class: RClass,
    pub components_of_r: Vec<RComponent>,
    /// `G[R]` is paths or one spanning cycle, and paths only when the hubs
    /// are adjacent.
    pub consistent: bool,
}

impl StructureWitness {
    /// Path orders of `G[R]`, when every component is a path.
    pub fn path_parts(&self) -> Option<Vec<usize>> {
        (self.r_class == RClass::AllPaths)
            .then(|| self.components_of_r.iter().map(|c| c.size).collect())
    }
}

/// Searches vertex pairs in lexicographic order for two hubs adjacent to
/// every other vertex. Returns the first consistent witness, else the first
/// witness found, else `None`. Graphs with fewer than 4 vertices have none.
pub fn structure_witness(g: &Graph) -> Option<StructureWitness> {
    let n = g.n();
    if n < 4 {
        return None;
    }
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= n - 2).collect();
    let mut first = None;
    for (i, &u1) in hubs.iter().enumerate() {
        for &u2 in &hubs[i + 1..] {
            let mut r = VertexSet::full(n);
            r.remove(u1);
            r.remove(u2);
            if !r.is_subset(g.neighbors(u1)) || !r.is_subset(g.neighbors(u2)) {
                continue;
            }
            let w = classify(g, u1, u2, r);
            if w.consistent {
                return Some(w);
            }
            first.get_or_insert(w);
        }
    }
    first
}

fn classify(g: &Graph, u1: usize, u2: usize, r: VertexSet) -> StructureWitness {
    let (sub, _) = g.induced_subgraph(&r);
    let components_of_r: Vec<RComponent> = sub
        .components()
        .into_iter()
        .map(|comp| {
            let size = comp.len();
            let edges: usize = comp.iter().map(|&v| sub.degree(v)).sum::<usize>() / 2;
            let max_deg = comp.iter().map(|&v| sub.degree(v)).max().unwrap_or(0);
            let kind = if max_deg <= 2 && edges + 1 == size {
                ComponentKind::Path
            } else if size >= 3 && edges == size && comp.iter().all(|&v| sub.degree(v) == 2) {
                ComponentKind::Cycle
            } else {
                ComponentKind::Other
            };
            RComponent { kind, size }
        })
        .collect();

    let r_class = if components_of_r
        .iter()
        .all(|c| c.kind == ComponentKind::Path)
    {
        RClass::AllPaths
    } else if components_of_r.len() == 1 && components_of_r[0].kind == ComponentKind::Cycle {
        RClass::SingleCycleSpanningR
    } else {
        RClass::Other
    };
    let hub_edge = g.has_edge(u1, u2);
    let consistent = match r_class {
        RClass::AllPaths => true,
        RClass::SingleCycleSpanningR => !hub_edge,
        RClass::Other => false,
    };
    StructureWitness {
        u1,
        u2,
        r,
        hub_edge,
        r_class,
        components_of_r,
        consistent,
    }
}
