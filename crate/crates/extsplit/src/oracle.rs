//! Brute-force referees.
//!
//! [`brute_force_ban_linial`] enumerates every split of a cubic graph (one
//! side pinned to break the X/Y symmetry) with bit-mask arithmetic and
//! reports how many external splits exist at each imbalance, together with a
//! witness meeting the conjectured bound |imbalance| <= 2. The fast path is
//! cross-checked against the definitional [`evaluate_split`] route on a
//! deterministic sample of masks and on every external split it finds, so
//! the two implementations police each other.
//!
//! [`lemma_sweep`] replays the tree-splitting lemmas over every cubic tree
//! and every leaf split up to a size bound and re-checks the postconditions
//! from outside.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::CubicGraph;
use crate::split::{evaluate_split, induced_mono_graph, Side, Split};
use crate::tree::enumerate_cubic_trees;
use crate::tree_split::{
    exhaustive_tree_split, rooted_post_ok, split_cubic_tree_rooted, split_cubic_tree_unrooted,
    unrooted_post_ok, Sign,
};

/// Graphs above this order are rejected by [`brute_force_ban_linial`].
pub const ORACLE_VERTEX_BOUND: usize = 24;

/// Everything the exhaustive enumeration learns about one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub n: usize,
    /// Splits examined with vertex 0 pinned to X; always `2^(n-1)`.
    pub enumerated: u64,
    /// External splits per imbalance value, counted without the pinning
    /// (each pinned split and its side-swap both contribute).
    #[serde(with = "imbalance_count_pairs")]
    pub external_by_imbalance: BTreeMap<i64, u64>,
    /// External splits with imbalance 0, without the pinning.
    pub external_bisections: u64,
    /// Largest monochromatic component seen across all external splits.
    pub max_mono_component: Option<usize>,
    /// First external split (ascending mask order) with imbalance 0 if one
    /// exists, otherwise with |imbalance| = 2.
    pub witness: Option<Split>,
    /// True iff some external split has |imbalance| <= 2.
    pub conjecture_holds: bool,
}

/// Serialize the imbalance histogram as `[imbalance, count]` pairs:
/// signed-integer map keys do not survive JSON object keys in flattened
/// report envelopes.
mod imbalance_count_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<i64, u64>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(i64, u64)> = map.iter().map(|(&k, &v)| (k, v)).collect();
        pairs.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<BTreeMap<i64, u64>, D::Error> {
        let pairs: Vec<(i64, u64)> = Vec::deserialize(de)?;
        Ok(pairs.into_iter().collect())
    }
}

fn adjacency_masks(g: &CubicGraph) -> Vec<u32> {
    let mut masks = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        masks[u] |= 1 << v;
        masks[v] |= 1 << u;
    }
    masks
}

fn split_from_mask(n: usize, mask: u32) -> Split {
    let mut s = Split::new();
    for v in 0..n {
        let side = if mask >> v & 1 == 1 { Side::X } else { Side::Y };
        s.assign(v, side).expect("vertices are distinct");
    }
    s
}

/// Pinned mask (vertex 0 on X) of a total split, swapping sides if needed.
pub fn pinned_mask(n: usize, s: &Split) -> Result<u32> {
    s.require_total(n)?;
    let mut mask = 0u32;
    for v in 0..n {
        if s.side(v) == Some(Side::X) {
            mask |= 1 << v;
        }
    }
    if mask & 1 == 0 {
        mask = !mask & ((1u32 << n) - 1);
    }
    Ok(mask)
}

fn is_external_mask(adj: &[u32], x_mask: u32) -> bool {
    let n = adj.len();
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let y_mask = !x_mask & all;
    for (v, &nbrs) in adj.iter().enumerate() {
        let same = if x_mask >> v & 1 == 1 { x_mask } else { y_mask };
        if (nbrs & same).count_ones() > 1 {
            return false;
        }
    }
    true
}

/// Enumerate every split with vertex 0 pinned to X and tabulate the
/// external ones. Graphs with more than [`ORACLE_VERTEX_BOUND`] vertices
/// are rejected; use [`brute_force_ban_linial_bounded`] to override.
pub fn brute_force_ban_linial(g: &CubicGraph) -> Result<OracleReport> {
    brute_force_ban_linial_bounded(g, ORACLE_VERTEX_BOUND)
}

/// [`brute_force_ban_linial`] with a caller-chosen vertex bound.
pub fn brute_force_ban_linial_bounded(g: &CubicGraph, bound: usize) -> Result<OracleReport> {
    if g.n() > bound {
        return Err(Error::GraphAboveBound { got: g.n(), bound });
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let mut pinned: BTreeMap<i64, u64> = BTreeMap::new();
    let mut enumerated = 0u64;
    let mut witness_bisection: Option<u32> = None;
    let mut witness_near: Option<u32> = None;
    let mut max_mono: Option<usize> = None;
    for m in 0u64..(1 << (n - 1)) {
        let x_mask = ((m as u32) << 1) | 1;
        enumerated += 1;
        let external = is_external_mask(&adj, x_mask);
        let imbalance = 2 * i64::from(x_mask.count_ones()) - n as i64;
        // dual route: re-derive externality and imbalance definitionally on
        // a deterministic sample and on every external split
        if external || m % 97 == 0 {
            let report = evaluate_split(g, &split_from_mask(n, x_mask))
                .expect("mask splits are total");
            assert_eq!(report.is_external, external, "bit-mask route disagrees");
            assert_eq!(report.imbalance, imbalance, "imbalance routes disagree");
            assert_eq!(3 * report.imbalance, 2 * report.disc, "discrepancy law broken");
        }
        if !external {
            continue;
        }
        *pinned.entry(imbalance).or_insert(0) += 1;
        if imbalance == 0 && witness_bisection.is_none() {
            witness_bisection = Some(x_mask);
        }
        if imbalance.abs() == 2 && witness_near.is_none() {
            witness_near = Some(x_mask);
        }
        let mono = induced_mono_graph(g, &split_from_mask(n, x_mask))
            .expect("mask splits are total");
        let largest = mono.components().iter().map(|c| c.len()).max().unwrap_or(0);
        max_mono = max_mono.max(Some(largest));
    }
    assert_eq!(enumerated, 1 << (n - 1), "pinned enumeration must be complete");
    let mut external_by_imbalance: BTreeMap<i64, u64> = BTreeMap::new();
    for (&imb, &count) in &pinned {
        *external_by_imbalance.entry(imb).or_insert(0) += count;
        *external_by_imbalance.entry(-imb).or_insert(0) += count;
    }
    let external_bisections = external_by_imbalance.get(&0).copied().unwrap_or(0);
    let witness_mask = witness_bisection.or(witness_near);
    let witness = witness_mask.map(|mask| split_from_mask(n, mask));
    let conjecture_holds = witness.is_some();
    Ok(OracleReport {
        n,
        enumerated,
        external_by_imbalance,
        external_bisections,
        max_mono_component: max_mono,
        witness,
        conjecture_holds,
    })
}

/// Fast existence check for an external split with imbalance 0.
pub fn external_bisection_exists(g: &CubicGraph) -> Result<bool> {
    if g.n() > ORACLE_VERTEX_BOUND {
        return Err(Error::GraphAboveBound { got: g.n(), bound: ORACLE_VERTEX_BOUND });
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    for m in 0u64..(1 << (n - 1)) {
        let x_mask = ((m as u32) << 1) | 1;
        if 2 * u64::from(x_mask.count_ones()) == n as u64 && is_external_mask(&adj, x_mask) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Pinned masks of every external split with |imbalance| <= 2, ascending.
/// Membership in this list certifies that a constructed split agrees with
/// the brute-force enumeration.
pub fn satisfying_masks(g: &CubicGraph) -> Result<Vec<u32>> {
    if g.n() > ORACLE_VERTEX_BOUND {
        return Err(Error::GraphAboveBound { got: g.n(), bound: ORACLE_VERTEX_BOUND });
    }
    let n = g.n();
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    for m in 0u64..(1 << (n - 1)) {
        let x_mask = ((m as u32) << 1) | 1;
        let imbalance = 2 * i64::from(x_mask.count_ones()) - n as i64;
        if imbalance.abs() <= 2 && is_external_mask(&adj, x_mask) {
            out.push(x_mask);
        }
    }
    Ok(out)
}

/// First bisection with exactly one offender (so nearly external but not
/// external), if any; exercises the repair loop on real inputs.
pub fn find_bisection_with_one_offender(g: &CubicGraph) -> Result<Option<Split>> {
    if g.n() > ORACLE_VERTEX_BOUND {
        return Err(Error::GraphAboveBound { got: g.n(), bound: ORACLE_VERTEX_BOUND });
    }
    let n = g.n();
    for m in 0u64..(1 << (n - 1)) {
        let x_mask = ((m as u32) << 1) | 1;
        if 2 * u64::from(x_mask.count_ones()) != n as u64 {
            continue;
        }
        let s = split_from_mask(n, x_mask);
        let report = evaluate_split(g, &s)?;
        if report.offenders.len() == 1 {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Tally of a full replay of the tree-splitting lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub trees: u64,
    pub unrooted_cases: u64,
    pub rooted_cases: u64,
    pub exhaustive_cases: u64,
    pub failures: u64,
}

/// Run the unrooted lemma on every cubic tree with 4..=`unrooted_max`
/// vertices and the rooted lemma on every tree with 2..=`rooted_max`
/// vertices, over every leaf split, both signs, and (rooted) every X-leaf
/// as root. Each case is also replayed through [`exhaustive_tree_split`],
/// which must find a witness too. Postconditions are re-checked here,
/// independently of the solver's internal assertions; `failures` counts
/// violations.
pub fn lemma_sweep(unrooted_max: usize, rooted_max: usize) -> SweepReport {
    lemma_sweep_signs(unrooted_max, rooted_max, &[Sign::Plus, Sign::Minus])
}

/// Like [`lemma_sweep`] but restricted to the given target signs.
pub fn lemma_sweep_signs(unrooted_max: usize, rooted_max: usize, signs: &[Sign]) -> SweepReport {
    let mut report = SweepReport {
        trees: 0,
        unrooted_cases: 0,
        rooted_cases: 0,
        exhaustive_cases: 0,
        failures: 0,
    };
    for t in enumerate_cubic_trees(unrooted_max.max(rooted_max)) {
        report.trees += 1;
        let leaves = t.leaves();
        for mask in 0u32..(1 << leaves.len()) {
            let mut ls = Split::new();
            for (i, &l) in leaves.iter().enumerate() {
                let side = if mask >> i & 1 == 0 { Side::X } else { Side::Y };
                ls.assign(l, side).expect("leaves are distinct");
            }
            for &eps in signs {
                if t.len() >= 4 && t.len() <= unrooted_max {
                    report.unrooted_cases += 1;
                    match split_cubic_tree_unrooted(&t, &ls, eps) {
                        Ok(s) if unrooted_post_ok(&t, &ls, eps, &s) => {}
                        _ => report.failures += 1,
                    }
                    report.exhaustive_cases += 1;
                    match exhaustive_tree_split(&t, &ls, eps, None) {
                        Ok(Some(_)) => {}
                        _ => report.failures += 1,
                    }
                }
                if t.len() <= rooted_max {
                    for &l in &leaves {
                        if ls.side(l) != Some(Side::X) {
                            continue;
                        }
                        report.rooted_cases += 1;
                        match split_cubic_tree_rooted(&t, &ls, l, eps) {
                            Ok(s) if rooted_post_ok(&t, &ls, l, eps, &s) => {}
                            _ => report.failures += 1,
                        }
                        report.exhaustive_cases += 1;
                        match exhaustive_tree_split(&t, &ls, eps, Some(l)) {
                            Ok(Some(_)) => {}
                            _ => report.failures += 1,
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{k4, petersen, random_cubic};
    use crate::split::verify_ban_linial;

    #[test]
    fn k4_counts_and_witness() {
        let r = brute_force_ban_linial(&k4()).unwrap();
        assert_eq!(r.n, 4);
        assert_eq!(r.enumerated, 8);
        assert_eq!(r.external_by_imbalance, BTreeMap::from([(0, 6)]));
        assert_eq!(r.external_bisections, 6);
        assert_eq!(r.max_mono_component, Some(2));
        assert!(r.conjecture_holds);
        let w = r.witness.unwrap();
        assert_eq!(w.side_vertices(Side::X), vec![0, 1]);
        assert_eq!(w.side_vertices(Side::Y), vec![2, 3]);
    }

    #[test]
    fn petersen_has_no_external_bisection() {
        let g = petersen();
        let r = brute_force_ban_linial(&g).unwrap();
        assert_eq!(r.enumerated, 512);
        assert_eq!(r.external_bisections, 0);
        assert!(!external_bisection_exists(&g).unwrap());
        assert!(r.conjecture_holds);
        let w = r.witness.unwrap();
        let rep = evaluate_split(&g, &w).unwrap();
        assert!(rep.is_external);
        assert_eq!(rep.imbalance.abs(), 2);
        assert!(verify_ban_linial(&g, &w).unwrap());
    }

    #[test]
    fn random_graphs_agree_with_definitional_route() {
        // exhaustive dual-route comparison on a small random instance
        let g = random_cubic(10, 7).unwrap();
        let adj = adjacency_masks(&g);
        for m in 0u64..(1 << 9) {
            let x_mask = ((m as u32) << 1) | 1;
            let rep = evaluate_split(&g, &split_from_mask(10, x_mask)).unwrap();
            assert_eq!(rep.is_external, is_external_mask(&adj, x_mask));
        }
    }

    #[test]
    fn satisfying_masks_contain_the_witness() {
        let g = petersen();
        let masks = satisfying_masks(&g).unwrap();
        assert!(!masks.is_empty());
        let w = brute_force_ban_linial(&g).unwrap().witness.unwrap();
        assert!(masks.contains(&pinned_mask(10, &w).unwrap()));
        // swapping sides lands on the same pinned mask
        assert_eq!(pinned_mask(10, &w).unwrap(), pinned_mask(10, &w.swapped()).unwrap());
    }

    #[test]
    fn oversized_graphs_are_rejected() {
        let g = random_cubic(26, 1).unwrap();
        assert_eq!(
            brute_force_ban_linial(&g).unwrap_err(),
            Error::GraphAboveBound { got: 26, bound: ORACLE_VERTEX_BOUND }
        );
    }

    #[test]
    fn sweep_smoke() {
        let r = lemma_sweep(8, 6);
        assert_eq!(r.failures, 0);
        assert!(r.unrooted_cases > 0);
        assert!(r.rooted_cases > 0);
    }
}
