//! Graph model: dense vertex ids `0..n-1`, sorted adjacency lists, and a
//! validated cubic wrapper.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n-1`.
///
/// Neighbour lists are kept sorted so that equal graphs compare equal and all
/// iteration orders are deterministic.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for GeneralGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneralGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl GeneralGraph {
    pub fn empty(n: usize) -> Self {
        GeneralGraph { n, adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = GeneralGraph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        let pos_u = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos_u, v);
        let pos_v = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos_v, u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Proper 2-colouring as `sides[v] = 0 or 1`, with the smallest vertex of
    /// every component on side 0. `None` when some component has an odd cycle.
    /// Isolated vertices are left unassigned (`usize::MAX`) so a caller can
    /// tell "coloured arbitrarily" apart from "forced by an edge".
    pub fn bipartition(&self) -> Option<Vec<usize>> {
        const UNSET: usize = usize::MAX;
        let mut side = vec![UNSET; self.n];
        for s in 0..self.n {
            if side[s] != UNSET || self.degree(s) == 0 {
                continue;
            }
            side[s] = 0;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &v in &self.adj[u] {
                    if side[v] == UNSET {
                        side[v] = 1 - side[u];
                        queue.push(v);
                    } else if side[v] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// Subgraph on the same vertex set containing exactly `edges`.
    pub fn subgraph_with_edges(&self, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = GeneralGraph::empty(self.n);
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// `self` minus the given edge set (edges absent from `self` are ignored).
    pub fn without_edges(&self, edges: &[(usize, usize)]) -> Self {
        let mut g = self.clone();
        for &(u, v) in edges {
            if let Ok(pos) = g.adj[u].binary_search(&v) {
                g.adj[u].remove(pos);
                let pos = g.adj[v].binary_search(&u).expect("symmetric adjacency");
                g.adj[v].remove(pos);
            }
        }
        g
    }

    /// Size of the largest connected component, 0 for an edgeless empty set.
    pub fn largest_component_within(&self, verts: &[usize]) -> usize {
        let mut in_set = vec![false; self.n];
        for &v in verts {
            in_set[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut best = 0;
        for &s in verts {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut size = 1;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &v in &self.adj[u] {
                    if in_set[v] && !seen[v] {
                        seen[v] = true;
                        size += 1;
                        queue.push(v);
                    }
                }
            }
            best = best.max(size);
        }
        best
    }

    pub fn is_tree(&self) -> bool {
        self.n > 0 && self.edge_count() == self.n - 1 && self.is_connected()
    }
}

/// A validated cubic (3-regular simple) graph. `n` is even and at least 4.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GeneralGraph", into = "GeneralGraph")]
pub struct CubicGraph(GeneralGraph);

impl fmt::Debug for CubicGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cubic{:?}", self.0)
    }
}

impl CubicGraph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        CubicGraph::try_from(GeneralGraph::from_edges(n, edges)?)
    }

    pub fn general(&self) -> &GeneralGraph {
        &self.0
    }

    pub fn into_general(self) -> GeneralGraph {
        self.0
    }
}

impl TryFrom<GeneralGraph> for CubicGraph {
    type Error = Error;

    fn try_from(g: GeneralGraph) -> Result<Self> {
        if g.n < 4 || g.n % 2 != 0 {
            return Err(Error::BadCubicOrder(g.n));
        }
        for v in 0..g.n {
            if g.degree(v) != 3 {
                return Err(Error::NotCubic { vertex: v, degree: g.degree(v) });
            }
        }
        Ok(CubicGraph(g))
    }
}

impl From<CubicGraph> for GeneralGraph {
    fn from(g: CubicGraph) -> GeneralGraph {
        g.0
    }
}

impl Deref for CubicGraph {
    type Target = GeneralGraph;

    fn deref(&self) -> &GeneralGraph {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        let mut g = GeneralGraph::empty(3);
        assert_eq!(g.add_edge(1, 1), Err(Error::LoopEdge(1)));
        assert_eq!(g.add_edge(0, 3), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        g.add_edge(2, 0).unwrap();
        assert_eq!(g.add_edge(0, 2), Err(Error::DuplicateEdge(0, 2)));
        assert_eq!(g.neighbours(0), &[2]);
    }

    #[test]
    fn cubic_validation() {
        let k4 = CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(k4.is_ok());
        let path = GeneralGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            CubicGraph::try_from(path),
            Err(Error::NotCubic { vertex: 0, degree: 1 })
        );
        assert_eq!(
            CubicGraph::from_edges(3, &[]).unwrap_err(),
            Error::BadCubicOrder(3)
        );
    }

    #[test]
    fn bipartition_marks_components_and_rejects_odd_cycles() {
        let g = GeneralGraph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let side = g.bipartition().unwrap();
        assert_eq!(side[0], 0);
        assert_eq!(side[1], 1);
        assert_eq!(side[2], 0);
        assert_eq!(side[3], 0); // smallest vertex of its component
        assert_eq!(side[4], 1);
        let tri = GeneralGraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(tri.bipartition().is_none());
    }

    #[test]
    fn components_and_largest_within() {
        let g = GeneralGraph::from_edges(6, &[(0, 1), (1, 2), (4, 5)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert_eq!(g.largest_component_within(&[0, 1, 4]), 2);
        assert_eq!(g.largest_component_within(&[0, 2]), 1);
        assert_eq!(g.largest_component_within(&[]), 0);
    }
}
