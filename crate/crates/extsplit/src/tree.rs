//! Cubic trees: trees whose vertices all have degree 1 or 3. They appear
//! both standalone (dense ids, enumeration for the lemma sweep) and as
//! subgraphs of a host cubic graph (host ids), so a tree carries its own
//! vertex set instead of assuming `0..n-1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::GeneralGraph;

/// A tree with every degree in {1, 3}. A single edge (two leaves) is the
/// smallest one; a tree on n vertices has n/2 + 1 leaves.
///
/// Serializes as its sorted edge list; deserialization re-runs the full
/// shape validation, so a corrupted tree certificate cannot be smuggled in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TreeWire", into = "TreeWire")]
pub struct CubicTree {
    adj: BTreeMap<usize, Vec<usize>>,
}

/// JSON shape of a [`CubicTree`]: an explicit edge list.
#[derive(Serialize, Deserialize)]
struct TreeWire {
    edges: Vec<(usize, usize)>,
}

impl From<CubicTree> for TreeWire {
    fn from(t: CubicTree) -> TreeWire {
        TreeWire { edges: t.edges() }
    }
}

impl TryFrom<TreeWire> for CubicTree {
    type Error = Error;

    fn try_from(w: TreeWire) -> Result<CubicTree> {
        CubicTree::from_edges(&w.edges)
    }
}

impl CubicTree {
    pub fn from_edges(edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adj.get(&u).is_some_and(|ns| ns.contains(&v)) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj.entry(u).or_default().push(v);
            adj.entry(v).or_default().push(u);
        }
        for ns in adj.values_mut() {
            ns.sort_unstable();
        }
        let t = CubicTree { adj };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        if n < 2 {
            return Err(Error::TreeTooSmall { need: 2, got: n });
        }
        for (&v, ns) in &self.adj {
            if ns.len() != 1 && ns.len() != 3 {
                return Err(Error::NotCubicTree { vertex: v, degree: ns.len() });
            }
        }
        // connected + |E| = |V| - 1 makes it a tree
        if self.edge_count() != n - 1 {
            return Err(Error::NotATree);
        }
        let start = *self.adj.keys().next().unwrap();
        let mut seen = vec![start];
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &v in &self.adj[&u] {
                if !seen.contains(&v) {
                    seen.push(v);
                    queue.push(v);
                }
            }
        }
        if seen.len() != n {
            return Err(Error::NotATree);
        }
        debug_assert_eq!(self.leaves().len(), n / 2 + 1);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.get(&v).map_or(0, Vec::len)
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        self.adj.get(&v).map_or(&[], Vec::as_slice)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(&u).is_some_and(|ns| ns.contains(&v))
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.len().saturating_sub(1));
        for (&u, ns) in &self.adj {
            for &v in ns {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(Vec::len).sum::<usize>() / 2
    }

    /// Degree-1 vertices, sorted.
    pub fn leaves(&self) -> Vec<usize> {
        self.adj
            .iter()
            .filter(|(_, ns)| ns.len() == 1)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn internal_vertices(&self) -> Vec<usize> {
        self.adj
            .iter()
            .filter(|(_, ns)| ns.len() == 3)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Remove a set of vertices, keeping the remainder (caller guarantees the
    /// remainder is again a cubic tree; debug-checked).
    pub(crate) fn without_vertices(&self, gone: &[usize]) -> CubicTree {
        let mut adj = self.adj.clone();
        for v in gone {
            adj.remove(v);
        }
        for ns in adj.values_mut() {
            ns.retain(|v| !gone.contains(v));
        }
        let t = CubicTree { adj };
        debug_assert!(t.validate().is_ok(), "removal left a non-cubic-tree");
        t
    }

    /// Dense relabelling (vertex ids compacted to `0..len`), e.g. for
    /// canonical forms.
    pub fn to_general_graph(&self) -> GeneralGraph {
        let index: BTreeMap<usize, usize> = self
            .vertices()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (index[&u], index[&v]))
            .collect();
        GeneralGraph::from_edges(self.len(), &edges).expect("tree edges are simple")
    }
}

/// Two leaves with a common neighbour, plus that neighbour (the apex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CherryPair {
    pub leaf_a: usize,
    pub leaf_b: usize,
    pub apex: usize,
}

/// All cherry pairs of `t`, ordered by (apex, leaf_a, leaf_b) with
/// `leaf_a < leaf_b`. An apex with three leaf neighbours (the 4-vertex star)
/// yields all three pairs. Every cubic tree with at least 4 vertices has at
/// least one pair: walk to the far end of a longest path.
pub fn find_cherry_pairs(t: &CubicTree) -> Vec<CherryPair> {
    let mut out = Vec::new();
    for apex in t.internal_vertices() {
        let leaf_neighbours: Vec<usize> = t
            .neighbours(apex)
            .iter()
            .copied()
            .filter(|&v| t.degree(v) == 1)
            .collect();
        for i in 0..leaf_neighbours.len() {
            for j in (i + 1)..leaf_neighbours.len() {
                out.push(CherryPair {
                    leaf_a: leaf_neighbours[i],
                    leaf_b: leaf_neighbours[j],
                    apex,
                });
            }
        }
    }
    out
}

/// All cubic trees with `2 <= n <= max_n` vertices, one per isomorphism
/// class, with dense ids. Grown by leaf expansion (replace a leaf's slot: the
/// leaf becomes an apex carrying two fresh leaves), which reaches every cubic
/// tree because removing a cherry pair inverts it; duplicates are rejected by
/// canonical form.
pub fn enumerate_cubic_trees(max_n: usize) -> Vec<CubicTree> {
    let mut out: Vec<CubicTree> = Vec::new();
    if max_n < 2 {
        return out;
    }
    let mut level: Vec<CubicTree> = vec![CubicTree::from_edges(&[(0, 1)]).unwrap()];
    out.extend(level.iter().cloned());
    let mut n = 4;
    while n <= max_n {
        let mut next: Vec<CubicTree> = Vec::new();
        let mut seen: Vec<Vec<u32>> = Vec::new();
        for t in &level {
            for u in t.leaves() {
                let mut edges = t.edges();
                edges.push((u, n - 2));
                edges.push((u, n - 1));
                let grown = CubicTree::from_edges(&edges).expect("leaf expansion stays cubic");
                let code = canonical_form(&grown.to_general_graph());
                if !seen.contains(&code) {
                    seen.push(code);
                    next.push(grown);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
        n += 2;
    }
    out
}
