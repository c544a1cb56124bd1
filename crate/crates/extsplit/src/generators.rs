//! Named cubic graphs and a seeded random generator.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::CubicGraph;

/// K4, the complete graph on 4 vertices.
pub fn k4() -> CubicGraph {
    CubicGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("K4 is cubic")
}

/// K3,3 with parts {0,1,2} and {3,4,5}.
pub fn k33() -> CubicGraph {
    let edges: Vec<(usize, usize)> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    CubicGraph::from_edges(6, &edges).expect("K3,3 is cubic")
}

/// Prism over an m-cycle: triangles-at-the-ends labelling. Vertices `0..m`
/// form one cycle, `m..2m` the other, and `i` is matched with `i + m`.
pub fn prism(m: usize) -> Result<CubicGraph> {
    if m < 3 {
        return Err(Error::Generator(format!("prism needs m >= 3, got {m}")));
    }
    let mut edges = Vec::with_capacity(3 * m);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
        edges.push((m + i, m + (i + 1) % m));
        edges.push((i, m + i));
    }
    CubicGraph::from_edges(2 * m, &edges)
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes
/// `i -- i+5`.
pub fn petersen() -> CubicGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    CubicGraph::from_edges(10, &edges).expect("Petersen is cubic")
}

/// Moebius-Kantor graph, the generalized Petersen graph GP(8, 3).
pub fn moebius_kantor() -> CubicGraph {
    let mut edges = Vec::with_capacity(24);
    for i in 0..8 {
        edges.push((i, (i + 1) % 8));
        edges.push((8 + i, 8 + (i + 3) % 8));
        edges.push((i, 8 + i));
    }
    CubicGraph::from_edges(16, &edges).expect("GP(8,3) is cubic")
}

/// Random cubic graph by the pairing model: 3 stubs per vertex are shuffled
/// and paired; samples with loops or parallel edges are rejected and redrawn.
/// Reproducible for a fixed seed. The sample may be disconnected.
pub fn random_cubic(n: usize, seed: u64) -> Result<CubicGraph> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::Generator(format!(
            "random cubic graph needs even n >= 4, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| [v, v, v]).collect();
    // Acceptance probability for cubic pairings is bounded away from zero
    // (about e^-2 for large n), so a fixed retry cap is safe.
    for _ in 0..100_000 {
        stubs.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(3 * n / 2);
        let mut ok = true;
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                ok = false;
                break;
            }
            edges.push((u, v));
        }
        if ok {
            return CubicGraph::from_edges(n, &edges);
        }
    }
    Err(Error::Generator(format!(
        "pairing model failed to produce a simple graph for n = {n}, seed = {seed}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs_have_expected_shape() {
        assert_eq!(k4().n(), 4);
        assert_eq!(k33().n(), 6);
        assert!(k33().general().bipartition().is_some());
        assert_eq!(prism(3).unwrap().n(), 6);
        assert_eq!(prism(5).unwrap().n(), 10);
        assert!(prism(2).is_err());
        assert_eq!(moebius_kantor().n(), 16);
    }

    #[test]
    fn petersen_has_girth_five() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        // no 3- or 4-cycles: adjacent vertices share no neighbours, and
        // non-adjacent vertices share exactly one
        for u in 0..10 {
            for v in (u + 1)..10 {
                let common = g
                    .neighbours(u)
                    .iter()
                    .filter(|w| g.neighbours(v).contains(w))
                    .count();
                if g.has_edge(u, v) {
                    assert_eq!(common, 0, "triangle through {u},{v}");
                } else {
                    assert_eq!(common, 1, "4-cycle through {u},{v}");
                }
            }
        }
    }

    #[test]
    fn random_cubic_is_reproducible() {
        let a = random_cubic(12, 7).unwrap();
        let b = random_cubic(12, 7).unwrap();
        assert_eq!(a, b);
        let c = random_cubic(12, 8).unwrap();
        assert_ne!(a, c);
        assert!(random_cubic(7, 0).is_err());
        assert!(random_cubic(2, 0).is_err());
    }
}
