//! The defining graph and the factorisation of a piling into non-split
//! factors.
//!
//! Vertices are the generators `1..=N` and edges join exactly the
//! non-commuting pairs, so connected components of the subgraph induced on
//! the support of an element correspond to its non-split factors.

use std::collections::{BTreeMap, BTreeSet};

use crate::pilings::Piling;
use crate::words::{GroupSpec, Word};
use crate::Error;

/// Graph on the generators with an edge for each non-commuting pair.
#[derive(Debug, Clone)]
pub struct DefiningGraph {
    n: u32,
    adj: Vec<Vec<u32>>,
}

impl DefiningGraph {
    /// Builds the complement of the commuting list.
    pub fn from_spec(spec: &GroupSpec) -> Self {
        let n = spec.n_generators();
        let mut adj = vec![Vec::new(); n as usize + 1];
        for a in 1..=n {
            for b in (a + 1)..=n {
                if !spec.generators_commute(a, b) {
                    adj[a as usize].push(b);
                    adj[b as usize].push(a);
                }
            }
        }
        DefiningGraph { n, adj }
    }

    pub fn n_vertices(&self) -> u32 {
        self.n
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        a != b && self.adj[a as usize].binary_search(&b).is_ok()
    }

    /// All edges as `(min, max)` pairs, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for &b in self.neighbors(a) {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Restriction to a vertex subset, keeping all edges between members.
    pub fn induced_subgraph(&self, vertices: &BTreeSet<u32>) -> InducedSubgraph {
        let mut adj = BTreeMap::new();
        for &v in vertices {
            let nbrs: Vec<u32> = self
                .neighbors(v)
                .iter()
                .copied()
                .filter(|u| vertices.contains(u))
                .collect();
            adj.insert(v, nbrs);
        }
        InducedSubgraph { adj }
    }
}

/// A subgraph induced on a subset of the generators.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    adj: BTreeMap<u32, Vec<u32>>,
}

impl InducedSubgraph {
    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.adj.keys().copied()
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (&a, nbrs) in &self.adj {
            for &b in nbrs {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Maximal connected vertex sets, sorted by minimal vertex.
    pub fn connected_components(&self) -> Vec<BTreeSet<u32>> {
        let mut components = Vec::new();
        let mut seen = BTreeSet::new();
        for &start in self.adj.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                if !component.insert(v) {
                    continue;
                }
                seen.insert(v);
                queue.extend(self.adj[&v].iter().copied());
            }
            components.push(component);
        }
        // Keys iterate in ascending order, so components already come out
        // sorted by their minimal vertex.
        components
    }
}

/// Vertex sets of the non-split factors of `p`: connected components of the
/// defining graph induced on the support of `p`.
pub fn factorise(graph: &DefiningGraph, p: &Piling) -> Vec<BTreeSet<u32>> {
    graph
        .induced_subgraph(&p.support())
        .connected_components()
}

/// The factor pilings of `w`, one per component: each is the piling of the
/// subword of `w` supported on that component, over the full column range.
pub fn non_split_factors(
    components: &[BTreeSet<u32>],
    w: &Word,
    spec: &GroupSpec,
) -> Vec<Piling> {
    let graph = DefiningGraph::from_spec(spec);
    components
        .iter()
        .map(|component| {
            let letters: Vec<i32> = w
                .letters()
                .iter()
                .copied()
                .filter(|k| component.contains(&k.unsigned_abs()))
                .collect();
            Piling::from_letters_unchecked(&letters, &graph)
        })
        .collect()
}

/// A non-split factor: the vertices of one component together with the
/// piling of the corresponding subword.
#[derive(Debug, Clone)]
pub struct Factor {
    pub vertices: BTreeSet<u32>,
    pub piling: Piling,
}

/// Factorises a cyclically reduced piling into its non-split factors,
/// sorted by minimal vertex.
pub fn factor_list(
    graph: &DefiningGraph,
    p: &Piling,
    spec: &GroupSpec,
) -> Result<Vec<Factor>, Error> {
    let components = factorise(graph, p);
    let word = p.normal_form(spec)?;
    let pilings = non_split_factors(&components, &word, spec);
    Ok(components
        .into_iter()
        .zip(pilings)
        .map(|(vertices, piling)| Factor { vertices, piling })
        .collect())
}
