//! Canonical forms for small graphs (n <= 32) by individualization and
//! refinement, used for isomorph rejection in the tree and graph enumerators.
//!
//! The canonical form of a graph is the lexicographically smallest list of
//! adjacency bitmasks over the labellings explored by the search tree:
//! refine an ordered partition to equitability, then branch on the vertices
//! of the first non-singleton cell. Cells produced by refinement are ordered
//! by invariant data only (degree counts), so the result is independent of
//! the input labelling.

use crate::graph::GeneralGraph;

/// Canonical adjacency masks; equal iff the graphs are isomorphic.
pub fn canonical_form(g: &GeneralGraph) -> Vec<u32> {
    let n = g.n();
    assert!(n <= 32, "canonical form supports at most 32 vertices");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    if n == 0 {
        return Vec::new();
    }
    // initial partition: one cell per degree, ascending
    let mut by_degree: Vec<Vec<usize>> = Vec::new();
    let mut degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for d in degrees {
        by_degree.push((0..n).filter(|&v| g.degree(v) == d).collect());
    }
    let mut best: Option<Vec<u32>> = None;
    search(&adj, n, refine(&adj, by_degree), &mut best);
    best.expect("search visits at least one leaf")
}

/// Split every cell by neighbour counts into every other cell until stable.
/// Sub-cells are ordered by the count value, never by vertex id.
fn refine(adj: &[u32], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        'outer: for pivot in 0..cells.len() {
            let pivot_mask: u32 = cells[pivot].iter().fold(0, |m, &v| m | 1 << v);
            for target in 0..cells.len() {
                if cells[target].len() < 2 {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[target]
                    .iter()
                    .map(|&v| ((adj[v] & pivot_mask).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                if keyed.first().unwrap().0 == keyed.last().unwrap().0 {
                    continue;
                }
                let mut pieces: Vec<Vec<usize>> = Vec::new();
                for (key, v) in keyed {
                    match pieces.last_mut() {
                        Some(last) if last_key(adj, pivot_mask, last) == key => last.push(v),
                        _ => pieces.push(vec![v]),
                    }
                }
                cells.splice(target..=target, pieces);
                changed = true;
                continue 'outer;
            }
        }
        if !changed {
            return cells;
        }
    }
}

fn last_key(adj: &[u32], pivot_mask: u32, cell: &[usize]) -> u32 {
    (adj[cell[0]] & pivot_mask).count_ones()
}

fn search(adj: &[u32], n: usize, cells: Vec<Vec<usize>>, best: &mut Option<Vec<u32>>) {
    if let Some(target) = cells.iter().position(|c| c.len() > 1) {
        for i in 0..cells[target].len() {
            let mut split: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            split.extend_from_slice(&cells[..target]);
            split.push(vec![cells[target][i]]);
            let mut rest = cells[target].clone();
            rest.remove(i);
            split.push(rest);
            split.extend_from_slice(&cells[target + 1..]);
            search(adj, n, refine(adj, split), best);
        }
        return;
    }
    // discrete partition: cells[i][0] receives the new label i
    let mut label = vec![0usize; n];
    for (i, cell) in cells.iter().enumerate() {
        label[cell[0]] = i;
    }
    let mut code = vec![0u32; n];
    for (v, &lv) in label.iter().enumerate() {
        let mut mask = adj[v];
        while mask != 0 {
            let w = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            code[lv] |= 1 << label[w];
        }
    }
    match best {
        Some(b) if *b <= code => {}
        _ => *best = Some(code),
    }
}
