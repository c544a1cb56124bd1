//! Randomized invariant checks: structural laws that must hold for every
//! graph and every split, probed over generated inputs.

use proptest::prelude::*;

use extsplit::generators::random_cubic;
use extsplit::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use extsplit::oracle::{pinned_mask, satisfying_masks};
use extsplit::split::Split;
use extsplit::{evaluate_split, CubicGraph, GeneralGraph};

/// An arbitrary simple graph on 1..=12 vertices, from a random edge mask
/// over the upper triangle of the adjacency matrix.
fn arbitrary_graph() -> impl Strategy<Value = GeneralGraph> {
    (1usize..=12).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if mask[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            GeneralGraph::from_edges(n, &edges).expect("upper-triangle edges are simple")
        })
    })
}

/// A connected cubic graph of random even order together with a seed.
fn arbitrary_cubic() -> impl Strategy<Value = CubicGraph> {
    ((2usize..=7), any::<u64>()).prop_map(|(half, seed)| {
        random_cubic(2 * half, seed).expect("orders 4..=14 are feasible")
    })
}

/// A split of `n` vertices taken from the low bits of a random mask.
fn split_from_mask(n: usize, mask: u64) -> Split {
    Split::from_x_set(n, (0..n).filter(|i| mask >> i & 1 == 1)).expect("vertices are in range")
}

proptest! {
    #[test]
    fn degree_sum_law_ties_imbalance_to_discrepancy(g in arbitrary_cubic(), mask in any::<u64>()) {
        let split = split_from_mask(g.n(), mask);
        let report = evaluate_split(g.general(), &split).unwrap();
        // In a cubic graph, counting edge ends on each side gives
        // 3|X| = 2 e(X) + cut and 3|Y| = 2 e(Y) + cut.
        prop_assert_eq!(3 * report.imbalance, 2 * report.disc);
    }

    #[test]
    fn every_edge_is_mono_or_cut(g in arbitrary_graph(), mask in any::<u64>()) {
        let split = split_from_mask(g.n(), mask);
        let report = evaluate_split(&g, &split).unwrap();
        let x = split.side_vertices(extsplit::Side::X);
        let mono = |side: &[usize]| -> usize {
            side.iter()
                .flat_map(|&u| side.iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| u < v && g.has_edge(u, v))
                .count()
        };
        let y = split.side_vertices(extsplit::Side::Y);
        prop_assert_eq!(
            mono(&x) + mono(&y) + report.cut_size,
            g.edge_count()
        );
        prop_assert_eq!(report.disc, mono(&x) as i64 - mono(&y) as i64);
    }

    #[test]
    fn swapping_sides_negates_counts_and_keeps_structure(g in arbitrary_graph(), mask in any::<u64>()) {
        let split = split_from_mask(g.n(), mask);
        let flipped = split_from_mask(g.n(), !mask);
        let a = evaluate_split(&g, &split).unwrap();
        let b = evaluate_split(&g, &flipped).unwrap();
        prop_assert_eq!(a.disc, -b.disc);
        prop_assert_eq!(a.imbalance, -b.imbalance);
        prop_assert_eq!(a.cut_size, b.cut_size);
        prop_assert_eq!(a.is_external, b.is_external);
        prop_assert_eq!(a.is_internal, b.is_internal);
        prop_assert_eq!(a.is_nearly_external, b.is_nearly_external);
        prop_assert_eq!(a.offenders, b.offenders);
        prop_assert_eq!(a.max_mono_component, b.max_mono_component);
    }

    #[test]
    fn offender_flags_agree_with_the_offender_list(g in arbitrary_graph(), mask in any::<u64>()) {
        let split = split_from_mask(g.n(), mask);
        let report = evaluate_split(&g, &split).unwrap();
        prop_assert_eq!(report.is_external, report.offenders.is_empty());
        prop_assert_eq!(report.is_nearly_external, report.offenders.len() <= 1);
        for &v in &report.offenders {
            let side = split.side(v);
            let own = g
                .neighbours(v)
                .iter()
                .filter(|&&w| split.side(w) == side)
                .count();
            prop_assert!(2 * own > g.degree(v), "vertex {} is not an offender", v);
        }
    }

    #[test]
    fn graph6_round_trips_any_simple_graph(g in arbitrary_graph()) {
        let line = emit_graph6(&g);
        let back = parse_graph6(&line).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(emit_graph6(&back), line);
    }

    #[test]
    fn edge_list_round_trips_graphs_with_edges(g in arbitrary_graph()) {
        prop_assume!(g.edge_count() > 0);
        // Isolated trailing vertices cannot survive an edge list, which
        // only records endpoints; restrict to graphs without them.
        prop_assume!(g.degree(g.n() - 1) > 0);
        let text = emit_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn graph6_parser_never_panics(line in "[ -~]{0,30}") {
        let _ = parse_graph6(&line);
    }

    #[test]
    fn edge_list_parser_never_panics(text in "[ -~\n]{0,60}") {
        let _ = parse_edge_list(&text);
    }

    #[test]
    fn satisfying_masks_are_exactly_the_conjecture_witnesses(g in arbitrary_cubic()) {
        prop_assume!(g.n() <= 10);
        let masks = satisfying_masks(&g).unwrap();
        for &m in &masks {
            let split = split_from_mask(g.n(), m as u64);
            let report = evaluate_split(g.general(), &split).unwrap();
            prop_assert!(report.is_external && report.imbalance.abs() <= 2);
        }
        // Complete: any witness split must map back into the mask list.
        for mask in 0u64..(1 << (g.n() - 1)) {
            let split = split_from_mask(g.n(), mask);
            let report = evaluate_split(g.general(), &split).unwrap();
            if report.is_external && report.imbalance.abs() <= 2 {
                let pinned = pinned_mask(g.n(), &split).unwrap();
                prop_assert!(masks.contains(&pinned));
            }
        }
    }

    #[test]
    fn random_cubic_generator_keeps_its_promises(g in arbitrary_cubic()) {
        prop_assert!(g.is_connected());
        for v in 0..g.n() {
            prop_assert_eq!(g.general().degree(v), 3);
        }
    }
}
