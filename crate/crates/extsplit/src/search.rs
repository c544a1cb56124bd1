//! Deterministic certificate searches.
//!
//! Each search walks its candidate space in a fixed lexicographic order
//! under a step budget, so reruns give identical answers. The outcome
//! distinguishes a completed, empty search ([`SearchOutcome::NotFound`] is a
//! proof that no certificate exists) from running out of budget.
//!
//! Certificates carry their own validators so a caller never has to trust
//! the search: a tree-plus-cycle edge partition, a proper 3-edge-colouring,
//! and a nowhere-zero k-flow.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::tree::CubicTree;

/// Default step budget for every search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 20_000_000;

/// Result of a budgeted exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", content = "certificate", rename_all = "snake_case")]
pub enum SearchOutcome<T> {
    /// A certificate, the first one in search order.
    Found(T),
    /// The whole space was examined: no certificate exists.
    NotFound,
    /// The step budget ran out before the space was exhausted.
    BudgetExhausted,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

struct Steps {
    left: u64,
}

impl Steps {
    fn new(budget: u64) -> Self {
        Steps { left: budget }
    }

    /// False once the budget is gone.
    fn tick(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

/// Edge partition of a cubic graph into a spanning cubic tree and a cycle
/// through the tree's leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCycleDecomposition {
    /// Cycle as a vertex sequence; the closing edge is implicit.
    pub cycle: Vec<usize>,
    pub tree_edges: Vec<(usize, usize)>,
}

impl TreeCycleDecomposition {
    /// Check the partition against `g` and hand back the tree.
    pub fn validated_tree(&self, g: &CubicGraph) -> Result<CubicTree> {
        let n = g.n();
        if self.cycle.len() != n / 2 + 1 {
            return Err(Error::BadDecomposition("cycle length must be n/2 + 1"));
        }
        let mut cycle_edges = Vec::new();
        for (i, &u) in self.cycle.iter().enumerate() {
            let v = self.cycle[(i + 1) % self.cycle.len()];
            if u >= n || !g.has_edge(u, v) {
                return Err(Error::BadDecomposition("cycle uses a non-edge"));
            }
            cycle_edges.push((u.min(v), u.max(v)));
        }
        let mut seen = self.cycle.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != self.cycle.len() {
            return Err(Error::BadDecomposition("cycle revisits a vertex"));
        }
        let mut all = cycle_edges.clone();
        all.extend(self.tree_edges.iter().map(|&(u, v)| (u.min(v), u.max(v))));
        all.sort_unstable();
        all.dedup();
        if all.len() != g.edge_count() || all != g.edges() {
            return Err(Error::BadDecomposition("edges do not partition the graph"));
        }
        let tree = CubicTree::from_edges(&self.tree_edges)?;
        if tree.len() != n {
            return Err(Error::BadDecomposition("tree does not span the graph"));
        }
        Ok(tree)
    }
}

/// Look for a partition of the edges into a spanning cubic tree and one
/// cycle. Cycles are enumerated canonically: anchored at their smallest
/// vertex, smaller second endpoint first.
pub fn find_tree_cycle_decomposition(
    g: &CubicGraph,
    budget: u64,
) -> SearchOutcome<TreeCycleDecomposition> {
    let n = g.n();
    let target = n / 2 + 1;
    let mut steps = Steps::new(budget);
    let mut path: Vec<usize> = Vec::with_capacity(target);
    for start in 0..n {
        path.clear();
        path.push(start);
        match extend_cycle(g, target, &mut path, &mut steps) {
            CycleScan::Found(d) => return SearchOutcome::Found(d),
            CycleScan::OutOfBudget => return SearchOutcome::BudgetExhausted,
            CycleScan::Done => {}
        }
    }
    SearchOutcome::NotFound
}

enum CycleScan {
    Found(TreeCycleDecomposition),
    Done,
    OutOfBudget,
}

fn extend_cycle(
    g: &CubicGraph,
    target: usize,
    path: &mut Vec<usize>,
    steps: &mut Steps,
) -> CycleScan {
    if !steps.tick() {
        return CycleScan::OutOfBudget;
    }
    let start = path[0];
    let last = *path.last().expect("path never empty");
    if path.len() == target {
        // canonical direction: second vertex smaller than last
        if g.has_edge(last, start) && path[1] < last {
            if let Some(d) = close_cycle(g, path) {
                return CycleScan::Found(d);
            }
        }
        return CycleScan::Done;
    }
    for &next in g.neighbours(last) {
        // anchor the cycle at its smallest vertex
        if next <= start || path.contains(&next) {
            continue;
        }
        path.push(next);
        match extend_cycle(g, target, path, steps) {
            CycleScan::Done => {}
            other => return other,
        }
        path.pop();
    }
    CycleScan::Done
}

fn close_cycle(g: &CubicGraph, path: &[usize]) -> Option<TreeCycleDecomposition> {
    let mut cycle_edges = Vec::new();
    for (i, &u) in path.iter().enumerate() {
        let v = path[(i + 1) % path.len()];
        cycle_edges.push((u.min(v), u.max(v)));
    }
    let tree_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|e| !cycle_edges.contains(e))
        .collect();
    let candidate = TreeCycleDecomposition { cycle: path.to_vec(), tree_edges };
    candidate.validated_tree(g).ok().map(|_| candidate)
}

/// Look for a cubic tree subgraph (not necessarily spanning) whose edge
/// removal leaves a bipartite graph. Trees are enumerated from their
/// smallest vertex outward, so the first hit is stable across runs.
pub fn find_bipartite_complement_tree(g: &CubicGraph, budget: u64) -> SearchOutcome<CubicTree> {
    let mut steps = Steps::new(budget);
    for root in 0..g.n() {
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut verts: Vec<usize> = vec![root];
        match grow_tree(g, root, &mut verts, &mut edges, &mut Vec::new(), &mut steps) {
            TreeScan::Found(t) => return SearchOutcome::Found(t),
            TreeScan::OutOfBudget => return SearchOutcome::BudgetExhausted,
            TreeScan::Done => {}
        }
    }
    SearchOutcome::NotFound
}

enum TreeScan {
    Found(CubicTree),
    Done,
    OutOfBudget,
}

fn grow_tree(
    g: &CubicGraph,
    root: usize,
    verts: &mut Vec<usize>,
    edges: &mut Vec<(usize, usize)>,
    banned: &mut Vec<(usize, usize)>,
    steps: &mut Steps,
) -> TreeScan {
    if !steps.tick() {
        return TreeScan::OutOfBudget;
    }
    if !edges.is_empty() && tree_degrees_ok(verts, edges) {
        let t = CubicTree::from_edges(edges).expect("grown edges form a cubic tree");
        if g.without_edges(edges).bipartition().is_some() {
            return TreeScan::Found(t);
        }
    }
    // frontier edges in lexicographic order; each is either taken now or
    // banned for the rest of this branch, so no subtree repeats
    let frontier: Vec<(usize, usize)> = verts
        .iter()
        .flat_map(|&u| {
            g.neighbours(u)
                .iter()
                .filter(|&&v| v > root && !verts.contains(&v))
                .map(move |&v| (u, v))
        })
        .filter(|e| !banned.contains(e))
        .collect();
    let banned_before = banned.len();
    for &(u, v) in &frontier {
        if banned.contains(&(u, v)) || degree_in(edges, u) >= 3 {
            continue;
        }
        verts.push(v);
        edges.push((u.min(v), u.max(v)));
        match grow_tree(g, root, verts, edges, banned, steps) {
            TreeScan::Done => {}
            other => return other,
        }
        edges.pop();
        verts.pop();
        banned.push((u, v));
    }
    banned.truncate(banned_before);
    TreeScan::Done
}

fn degree_in(edges: &[(usize, usize)], v: usize) -> usize {
    edges.iter().filter(|&&(a, b)| a == v || b == v).count()
}

fn tree_degrees_ok(verts: &[usize], edges: &[(usize, usize)]) -> bool {
    verts.iter().all(|&v| matches!(degree_in(edges, v), 1 | 3))
}

/// Proper 3-edge-colouring; `colours[i]` in {1, 2, 3} refers to the i-th
/// edge of the graph's sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColouring3 {
    pub colours: Vec<u8>,
}

impl EdgeColouring3 {
    pub fn validate(&self, g: &CubicGraph) -> Result<()> {
        let edges = g.edges();
        if self.colours.len() != edges.len() {
            return Err(Error::BadEdgeColouring("one colour per edge required"));
        }
        if self.colours.iter().any(|&c| !(1..=3).contains(&c)) {
            return Err(Error::BadEdgeColouring("colours must be 1, 2 or 3"));
        }
        for v in 0..g.n() {
            let mut seen = [false; 4];
            for (i, &(a, b)) in edges.iter().enumerate() {
                if a == v || b == v {
                    let c = self.colours[i] as usize;
                    if seen[c] {
                        return Err(Error::BadEdgeColouring("colour repeated at a vertex"));
                    }
                    seen[c] = true;
                }
            }
        }
        Ok(())
    }

    /// Edges of one colour class (a perfect matching).
    pub fn colour_class(&self, g: &CubicGraph, colour: u8) -> Vec<(usize, usize)> {
        g.edges()
            .into_iter()
            .zip(&self.colours)
            .filter(|&(_, &c)| c == colour)
            .map(|(e, _)| e)
            .collect()
    }
}

/// Backtracking search for a proper 3-edge-colouring. The three edges at
/// vertex 0 are pinned to colours 1, 2, 3 (any proper colouring can be
/// permuted into this form, so pinning does not affect existence).
pub fn find_3_edge_colouring(g: &CubicGraph, budget: u64) -> SearchOutcome<EdgeColouring3> {
    let edges = g.edges();
    let mut colours: Vec<u8> = vec![0; edges.len()];
    let mut pinned = 0usize;
    for (i, &(u, _)) in edges.iter().enumerate() {
        if u == 0 {
            pinned += 1;
            colours[i] = pinned as u8;
        }
    }
    debug_assert_eq!(pinned, 3);
    let mut steps = Steps::new(budget);
    match colour_edges(g, &edges, &mut colours, 0, &mut steps) {
        ColourScan::Found => SearchOutcome::Found(EdgeColouring3 { colours }),
        ColourScan::Done => SearchOutcome::NotFound,
        ColourScan::OutOfBudget => SearchOutcome::BudgetExhausted,
    }
}

enum ColourScan {
    Found,
    Done,
    OutOfBudget,
}

fn colour_edges(
    g: &CubicGraph,
    edges: &[(usize, usize)],
    colours: &mut Vec<u8>,
    from: usize,
    steps: &mut Steps,
) -> ColourScan {
    if !steps.tick() {
        return ColourScan::OutOfBudget;
    }
    let Some(i) = (from..edges.len()).find(|&i| colours[i] == 0) else {
        return ColourScan::Found;
    };
    let (u, v) = edges[i];
    'colour: for c in 1u8..=3 {
        for (j, &(a, b)) in edges.iter().enumerate() {
            if j != i && colours[j] == c && (a == u || b == u || a == v || b == v) {
                continue 'colour;
            }
        }
        colours[i] = c;
        match colour_edges(g, edges, colours, i + 1, steps) {
            ColourScan::Done => {}
            other => return other,
        }
        colours[i] = 0;
    }
    ColourScan::Done
}

/// Nowhere-zero k-flow: `values[i]` is the signed flow on the i-th sorted
/// edge (u, v) with u < v; positive means u to v. All values are nonzero
/// with |value| < k and the signed sum at every vertex is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NowhereZeroFlow {
    pub k: u32,
    pub values: Vec<i64>,
}

impl NowhereZeroFlow {
    pub fn validate(&self, g: &CubicGraph) -> Result<()> {
        let edges = g.edges();
        if self.values.len() != edges.len() {
            return Err(Error::BadFlow("one value per edge required"));
        }
        if !(2..=6).contains(&self.k) {
            return Err(Error::FlowOrderOutOfRange(self.k));
        }
        let bound = i64::from(self.k) - 1;
        if self.values.iter().any(|&f| f == 0 || f.abs() > bound) {
            return Err(Error::BadFlow("values must be nonzero with |f| < k"));
        }
        let mut balance = vec![0i64; g.n()];
        for (&(u, v), &f) in edges.iter().zip(&self.values) {
            balance[u] += f;
            balance[v] -= f;
        }
        if balance.iter().any(|&b| b != 0) {
            return Err(Error::BadFlow("flow is not conserved at every vertex"));
        }
        Ok(())
    }
}

/// Backtracking search for a nowhere-zero k-flow, k in 2..=6. Values on a
/// spanning forest are forced by conservation; only the remaining edges are
/// enumerated, in the order 1, -1, 2, -2, ...
pub fn find_nowhere_zero_flow(
    g: &CubicGraph,
    k: u32,
    budget: u64,
) -> Result<SearchOutcome<NowhereZeroFlow>> {
    if !(2..=6).contains(&k) {
        return Err(Error::FlowOrderOutOfRange(k));
    }
    let edges = g.edges();
    let forest = spanning_forest(g, &edges);
    let free: Vec<usize> = (0..edges.len()).filter(|i| !forest.contains(i)).collect();
    let mut order: Vec<i64> = Vec::new();
    for v in 1..i64::from(k) {
        order.push(v);
        order.push(-v);
    }
    let mut choice = vec![0usize; free.len()];
    let mut steps = Steps::new(budget);
    loop {
        if !steps.tick() {
            return Ok(SearchOutcome::BudgetExhausted);
        }
        let mut values = vec![0i64; edges.len()];
        for (slot, &edge_idx) in free.iter().enumerate() {
            values[edge_idx] = order[choice[slot]];
        }
        if force_forest_values(g, &edges, &forest, &mut values, i64::from(k) - 1) {
            let flow = NowhereZeroFlow { k, values };
            debug_assert!(flow.validate(g).is_ok());
            return Ok(SearchOutcome::Found(flow));
        }
        // odometer step through the free-edge assignments
        let mut slot = free.len();
        loop {
            if slot == 0 {
                return Ok(SearchOutcome::NotFound);
            }
            slot -= 1;
            choice[slot] += 1;
            if choice[slot] < order.len() {
                break;
            }
            choice[slot] = 0;
        }
    }
}

/// Indices (into the sorted edge list) of a BFS spanning forest.
fn spanning_forest(g: &CubicGraph, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut forest = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbours(u) {
                if !seen[v] {
                    seen[v] = true;
                    let key = (u.min(v), u.max(v));
                    forest.push(edges.binary_search(&key).expect("edge exists"));
                    queue.push_back(v);
                }
            }
        }
    }
    forest.sort_unstable();
    forest
}

/// Fill in forest-edge values so every vertex balances; false if any forced
/// value is zero or exceeds the bound.
fn force_forest_values(
    g: &CubicGraph,
    edges: &[(usize, usize)],
    forest: &[usize],
    values: &mut [i64],
    bound: i64,
) -> bool {
    // peel forest leaves: at a vertex with exactly one unset edge, that
    // edge's value is forced by conservation
    let mut unset_count = vec![0usize; g.n()];
    let mut balance = vec![0i64; g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        if forest.contains(&i) {
            unset_count[u] += 1;
            unset_count[v] += 1;
        } else {
            balance[u] += values[i];
            balance[v] -= values[i];
        }
    }
    let mut ready: Vec<usize> = (0..g.n()).filter(|&v| unset_count[v] == 1).collect();
    while let Some(v) = ready.pop() {
        if unset_count[v] != 1 {
            continue;
        }
        let &i = forest
            .iter()
            .find(|&&i| values[i] == 0 && (edges[i].0 == v || edges[i].1 == v))
            .expect("one unset edge at a ready vertex");
        let (a, b) = edges[i];
        // choose f so the balance at v becomes zero
        let f = if a == v { -balance[v] } else { balance[v] };
        if f == 0 || f.abs() > bound {
            return false;
        }
        values[i] = f;
        balance[a] += f;
        balance[b] -= f;
        unset_count[a] -= 1;
        unset_count[b] -= 1;
        let other = if a == v { b } else { a };
        if unset_count[other] == 1 {
            ready.push(other);
        }
    }
    debug_assert!(values.iter().all(|&f| f != 0));
    debug_assert!(balance.iter().all(|&b| b == 0));
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{k33, k4, petersen, prism};

    #[test]
    fn k4_decomposes_into_star_and_triangle() {
        let g = k4();
        let d = find_tree_cycle_decomposition(&g, DEFAULT_SEARCH_BUDGET)
            .found()
            .unwrap();
        let t = d.validated_tree(&g).unwrap();
        assert_eq!(d.cycle.len(), 3);
        assert_eq!(t.len(), 4);
        assert_eq!(t.leaves().len(), 3);
    }

    #[test]
    fn prism_and_k33_decompose() {
        for g in [prism(3).unwrap(), k33()] {
            let d = find_tree_cycle_decomposition(&g, DEFAULT_SEARCH_BUDGET)
                .found()
                .unwrap();
            assert_eq!(d.cycle.len(), 4);
            d.validated_tree(&g).unwrap();
        }
    }

    #[test]
    fn petersen_certificates_match_theory() {
        let g = petersen();
        // Not 3-edge-colourable (it is a snark), but it does decompose: a
        // 6-cycle plus a spanning tree with all degrees in {1, 3}, which is
        // also a cubic tree whose complement (that even cycle) is bipartite.
        assert_eq!(find_3_edge_colouring(&g, DEFAULT_SEARCH_BUDGET), SearchOutcome::NotFound);
        let d = find_tree_cycle_decomposition(&g, DEFAULT_SEARCH_BUDGET)
            .found()
            .unwrap();
        assert_eq!(d.cycle.len(), 6);
        d.validated_tree(&g).unwrap();
        let t = find_bipartite_complement_tree(&g, DEFAULT_SEARCH_BUDGET)
            .found()
            .unwrap();
        assert!(g.without_edges(&t.edges()).bipartition().is_some());
    }

    #[test]
    fn tiny_budget_reports_exhaustion() {
        let g = petersen();
        assert_eq!(
            find_tree_cycle_decomposition(&g, 3),
            SearchOutcome::BudgetExhausted
        );
        assert_eq!(
            find_bipartite_complement_tree(&g, 3),
            SearchOutcome::BudgetExhausted
        );
    }

    #[test]
    fn k33_has_bipartite_complement_tree() {
        let g = k33();
        let t = find_bipartite_complement_tree(&g, DEFAULT_SEARCH_BUDGET)
            .found()
            .unwrap();
        assert!(g.without_edges(&t.edges()).bipartition().is_some());
    }

    #[test]
    fn colourable_graphs_get_proper_colourings() {
        for g in [k4(), k33(), prism(3).unwrap()] {
            let c = find_3_edge_colouring(&g, DEFAULT_SEARCH_BUDGET).found().unwrap();
            c.validate(&g).unwrap();
            assert_eq!(c.colour_class(&g, 3).len(), g.n() / 2);
        }
    }

    #[test]
    fn flow_existence_matches_theory() {
        let k4 = k4();
        // cubic graphs have no nowhere-zero 2-flow, and a 3-flow only if
        // bipartite
        assert_eq!(find_nowhere_zero_flow(&k4, 2, DEFAULT_SEARCH_BUDGET).unwrap(), SearchOutcome::NotFound);
        assert_eq!(find_nowhere_zero_flow(&k4, 3, DEFAULT_SEARCH_BUDGET).unwrap(), SearchOutcome::NotFound);
        let f = find_nowhere_zero_flow(&k4, 4, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .found()
            .unwrap();
        f.validate(&k4).unwrap();
        let f = find_nowhere_zero_flow(&k33(), 3, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .found()
            .unwrap();
        f.validate(&k33()).unwrap();
    }

    #[test]
    fn petersen_flows() {
        let g = petersen();
        assert_eq!(
            find_nowhere_zero_flow(&g, 4, DEFAULT_SEARCH_BUDGET).unwrap(),
            SearchOutcome::NotFound
        );
        let f = find_nowhere_zero_flow(&g, 5, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .found()
            .unwrap();
        f.validate(&g).unwrap();
    }

    #[test]
    fn flow_order_is_checked() {
        assert_eq!(
            find_nowhere_zero_flow(&k4(), 7, DEFAULT_SEARCH_BUDGET).unwrap_err(),
            Error::FlowOrderOutOfRange(7)
        );
        assert_eq!(
            find_nowhere_zero_flow(&k4(), 1, DEFAULT_SEARCH_BUDGET).unwrap_err(),
            Error::FlowOrderOutOfRange(1)
        );
    }

    #[test]
    fn searches_are_deterministic() {
        let g = petersen();
        let f1 = find_nowhere_zero_flow(&g, 5, DEFAULT_SEARCH_BUDGET).unwrap();
        let f2 = find_nowhere_zero_flow(&g, 5, DEFAULT_SEARCH_BUDGET).unwrap();
        assert_eq!(f1, f2);
        let g = prism(4).unwrap();
        assert_eq!(
            find_tree_cycle_decomposition(&g, DEFAULT_SEARCH_BUDGET),
            find_tree_cycle_decomposition(&g, DEFAULT_SEARCH_BUDGET)
        );
        assert_eq!(
            find_bipartite_complement_tree(&g, DEFAULT_SEARCH_BUDGET),
            find_bipartite_complement_tree(&g, DEFAULT_SEARCH_BUDGET)
        );
    }

    #[test]
    fn certificate_validators_reject_corruption() {
        let g = k4();
        let d = find_tree_cycle_decomposition(&g, DEFAULT_SEARCH_BUDGET)
            .found()
            .unwrap();
        // Swap one cycle vertex for the vertex outside the triangle: the
        // edge sets no longer partition the graph.
        let mut bad = d.clone();
        let outside = (0..4).find(|v| !bad.cycle.contains(v)).unwrap();
        bad.cycle[0] = outside;
        assert!(bad.validated_tree(&g).is_err());
        let mut bad = d.clone();
        bad.tree_edges.pop();
        assert!(bad.validated_tree(&g).is_err());
        let mut c = find_3_edge_colouring(&g, DEFAULT_SEARCH_BUDGET).found().unwrap();
        c.colours[4] = c.colours[3];
        assert!(c.validate(&g).is_err());
        let mut f = find_nowhere_zero_flow(&g, 4, DEFAULT_SEARCH_BUDGET)
            .unwrap()
            .found()
            .unwrap();
        f.values[0] = 0;
        assert_eq!(f.validate(&g).unwrap_err(), Error::BadFlow("values must be nonzero with |f| < k"));
    }
}
