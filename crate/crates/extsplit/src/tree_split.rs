//! Splitting lemmas for cubic trees.
//!
//! Given a cubic tree and a prescribed two-colouring of its leaves, these
//! routines extend the colouring to all vertices so that the discrepancy
//! (monochromatic X-edges minus monochromatic Y-edges) lands in a small
//! sign-controlled window and the monochromatic subgraph stays close to a
//! matching. Two variants exist:
//!
//! * unrooted (trees with >= 4 vertices): discrepancy in eps * {0, 1, 2} and
//!   at most one vertex of monochromatic degree > 1;
//! * rooted at a leaf r on side X (trees with >= 2 vertices): discrepancy in
//!   eps * {-1, 0, 1, 2, 3} and either (a) r has monochromatic degree 1 and
//!   the monochromatic subgraph is a matching, or (b) r has monochromatic
//!   degree 0 and at most one vertex has monochromatic degree > 1.
//!
//! The recursion has three moves, tried in this order:
//!
//! 1. merge a same-coloured cherry pair (delete the two leaves, force the
//!    apex to the opposite colour);
//! 2. exhaust trees with at most 8 vertices directly;
//! 3. contract every opposite-coloured cherry pair to a "red" apex and pick
//!    a cherry pair of the contracted tree with a red member. Two red
//!    members: delete both red apexes and their four leaves, flip eps, force
//!    the shared neighbour opposite to eps's preferred side (reduction 1).
//!    One red member: delete the red apex, its two leaves, and the plain
//!    leaf; keep eps; recolour according to the colour the recursion gives
//!    the surviving neighbour (reduction 2).
//!
//! Every extension is postcondition-checked before being returned; if a
//! reduction ever produced an invalid extension the routine logs a warning
//! and falls back to exhaustive search rather than returning a bad split.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::split::{Side, Split};
use crate::tree::{find_cherry_pairs, CherryPair, CubicTree};

/// Which end of the discrepancy window to aim for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl FromStr for Sign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+1" | "+" | "1" | "plus" => Ok(Sign::Plus),
            "-1" | "-" | "minus" => Ok(Sign::Minus),
            other => Err(format!("expected +1 or -1, got {other:?}")),
        }
    }
}

/// Trees above this size are rejected by [`exhaustive_tree_split`].
pub const EXHAUSTIVE_TREE_BOUND: usize = 16;

/// Discrepancy of a total split over the tree's edges alone.
pub fn tree_disc(t: &CubicTree, s: &Split) -> i64 {
    let mut disc = 0;
    for (u, v) in t.edges() {
        match (s.side(u), s.side(v)) {
            (Some(Side::X), Some(Side::X)) => disc += 1,
            (Some(Side::Y), Some(Side::Y)) => disc -= 1,
            _ => {}
        }
    }
    disc
}

/// Monochromatic degree of every tree vertex under a total split.
fn mono_degrees(t: &CubicTree, s: &Split) -> Vec<(usize, usize)> {
    let mut degs: Vec<(usize, usize)> = t.vertices().map(|v| (v, 0)).collect();
    for (u, v) in t.edges() {
        if s.side(u) == s.side(v) {
            for (w, d) in degs.iter_mut() {
                if *w == u || *w == v {
                    *d += 1;
                }
            }
        }
    }
    degs
}

fn total_and_extends(t: &CubicTree, ls: &Split, s: &Split) -> bool {
    t.vertices().all(|v| s.side(v).is_some()) && s.extends(ls) && s.len() == t.len()
}

/// Unrooted lemma postconditions for a candidate total split.
pub fn unrooted_post_ok(t: &CubicTree, ls: &Split, eps: Sign, s: &Split) -> bool {
    if !total_and_extends(t, ls, s) {
        return false;
    }
    if !(0..=2).contains(&(tree_disc(t, s) * eps.value())) {
        return false;
    }
    mono_degrees(t, s).iter().filter(|&&(_, d)| d > 1).count() <= 1
}

/// Rooted lemma postconditions for a candidate total split.
pub fn rooted_post_ok(t: &CubicTree, ls: &Split, root: usize, eps: Sign, s: &Split) -> bool {
    if !total_and_extends(t, ls, s) {
        return false;
    }
    if !(-1..=3).contains(&(tree_disc(t, s) * eps.value())) {
        return false;
    }
    let degs = mono_degrees(t, s);
    let root_deg = degs
        .iter()
        .find(|&&(v, _)| v == root)
        .map(|&(_, d)| d)
        .unwrap_or(0);
    let max_deg = degs.iter().map(|&(_, d)| d).max().unwrap_or(0);
    let heavy = degs.iter().filter(|&&(_, d)| d > 1).count();
    (root_deg == 1 && max_deg <= 1) || (root_deg == 0 && heavy <= 1)
}

fn validate_leaf_split(t: &CubicTree, ls: &Split) -> Result<()> {
    for v in ls.domain() {
        if !t.contains(v) || t.degree(v) != 1 {
            return Err(Error::BadLeafSplit { vertex: v, problem: "not a leaf of the tree" });
        }
    }
    for l in t.leaves() {
        if ls.side(l).is_none() {
            return Err(Error::BadLeafSplit { vertex: l, problem: "unassigned" });
        }
    }
    Ok(())
}

fn validate_root(t: &CubicTree, ls: &Split, root: usize) -> Result<()> {
    if !t.contains(root) || t.degree(root) != 1 {
        return Err(Error::RootNotLeaf(root));
    }
    if ls.side(root) != Some(Side::X) {
        return Err(Error::RootOnYSide(root));
    }
    Ok(())
}

/// Try every colouring of the internal vertices (in vertex order, X before
/// Y) and return the first one meeting the postconditions; `None` means no
/// colouring works, which for a valid leaf split would falsify the lemma.
pub fn exhaustive_tree_split(
    t: &CubicTree,
    ls: &Split,
    eps: Sign,
    rooted_at: Option<usize>,
) -> Result<Option<Split>> {
    exhaustive_tree_split_bounded(t, ls, eps, rooted_at, EXHAUSTIVE_TREE_BOUND)
}

/// [`exhaustive_tree_split`] with a caller-chosen size bound.
pub fn exhaustive_tree_split_bounded(
    t: &CubicTree,
    ls: &Split,
    eps: Sign,
    rooted_at: Option<usize>,
    bound: usize,
) -> Result<Option<Split>> {
    if t.len() > bound {
        return Err(Error::TreeAboveBound { got: t.len(), bound });
    }
    validate_leaf_split(t, ls)?;
    if let Some(root) = rooted_at {
        validate_root(t, ls, root)?;
    }
    Ok(exhaustive_search(t, ls, eps, rooted_at))
}

fn exhaustive_search(t: &CubicTree, ls: &Split, eps: Sign, rooted_at: Option<usize>) -> Option<Split> {
    let internal = t.internal_vertices();
    assert!(internal.len() <= 26, "exhaustive fallback out of range");
    for mask in 0u64..(1 << internal.len()) {
        let mut s = ls.clone();
        for (i, &v) in internal.iter().enumerate() {
            let side = if mask >> i & 1 == 0 { Side::X } else { Side::Y };
            s.assign(v, side).expect("internal vertices are fresh");
        }
        let ok = match rooted_at {
            None => unrooted_post_ok(t, ls, eps, &s),
            Some(root) => rooted_post_ok(t, ls, root, eps, &s),
        };
        if ok {
            return Some(s);
        }
    }
    None
}

/// Extend a leaf split of a cubic tree with >= 4 vertices to a total split
/// with discrepancy in `eps * {0, 1, 2}` and at most one vertex of
/// monochromatic degree > 1.
pub fn split_cubic_tree_unrooted(t: &CubicTree, ls: &Split, eps: Sign) -> Result<Split> {
    if t.len() < 4 {
        return Err(Error::TreeTooSmall { need: 4, got: t.len() });
    }
    validate_leaf_split(t, ls)?;
    let s = solve_rec(t, ls, eps, None);
    assert!(unrooted_post_ok(t, ls, eps, &s), "unrooted split postconditions violated");
    Ok(s)
}

/// Rooted variant: `root` is a leaf pinned to side X; trees with >= 2
/// vertices. The discrepancy window widens to `eps * {-1, .., 3}` and the
/// monochromatic subgraph obeys the rooted conditions (a) or (b).
pub fn split_cubic_tree_rooted(t: &CubicTree, ls: &Split, root: usize, eps: Sign) -> Result<Split> {
    validate_leaf_split(t, ls)?;
    validate_root(t, ls, root)?;
    let s = solve_rec(t, ls, eps, Some(root));
    assert!(rooted_post_ok(t, ls, root, eps, &s), "rooted split postconditions violated");
    Ok(s)
}

fn post_ok(t: &CubicTree, ls: &Split, eps: Sign, root: Option<usize>, s: &Split) -> bool {
    match root {
        None => unrooted_post_ok(t, ls, eps, s),
        Some(r) => rooted_post_ok(t, ls, r, eps, s),
    }
}

fn solve_rec(t: &CubicTree, ls: &Split, eps: Sign, root: Option<usize>) -> Split {
    let n = t.len();
    if n == 2 {
        // both vertices are leaves, so the leaf split is already total; it
        // always meets the rooted postconditions
        let s = ls.clone();
        debug_assert!(post_ok(t, ls, eps, root, &s));
        return s;
    }
    if n == 4 {
        return exhaustive_expect(t, ls, eps, root);
    }

    // same-coloured cherry pairs merge; in rooted mode prefer pairs that
    // keep the root alive
    let mut merges: Vec<&CherryPair> = Vec::new();
    let pairs = find_cherry_pairs(t);
    for pair in &pairs {
        if ls.side(pair.leaf_a) == ls.side(pair.leaf_b) {
            merges.push(pair);
        }
    }
    merges.sort_by_key(|p| root.is_some_and(|r| r == p.leaf_a || r == p.leaf_b));
    if let Some(&pair) = merges.first() {
        let colour = ls.side(pair.leaf_a).expect("leaf split is total on leaves");
        let t2 = t.without_vertices(&[pair.leaf_a, pair.leaf_b]);
        let ls2 = leaf_split_for(&t2, ls, &[(pair.apex, colour.opposite())]);
        let sub_root = root.filter(|&r| r != pair.leaf_a && r != pair.leaf_b);
        let sub = solve_rec(&t2, &ls2, eps, sub_root);
        let mut s = sub;
        s.assign(pair.leaf_a, colour).expect("removed leaf is fresh");
        s.assign(pair.leaf_b, colour).expect("removed leaf is fresh");
        assert!(
            post_ok(t, ls, eps, root, &s),
            "cherry merge must preserve the splitting lemma"
        );
        return s;
    }

    if n <= 8 {
        return exhaustive_expect(t, ls, eps, root);
    }

    // red-vertex device: contract every (necessarily opposite-coloured)
    // cherry pair, then reduce through a contracted cherry pair with a red
    // member
    let (t_c, reds) = contract_opposite_cherries(t, ls);
    let mut candidates: Vec<CherryPair> = find_cherry_pairs(&t_c)
        .into_iter()
        .filter(|p| reds.contains(&p.leaf_a) || reds.contains(&p.leaf_b))
        .collect();
    assert!(
        !candidates.is_empty(),
        "contracted tree must contain a cherry pair with a red member"
    );
    if let Some(r) = root {
        candidates.sort_by_key(|p| reduction_removes(t, &reds, p).contains(&r));
    }
    for cand in &candidates {
        let attempt = if reds.contains(&cand.leaf_a) && reds.contains(&cand.leaf_b) {
            try_reduction_1(t, ls, eps, root, cand.apex, cand.leaf_a, cand.leaf_b)
        } else {
            let (w, q) = if reds.contains(&cand.leaf_a) {
                (cand.leaf_a, cand.leaf_b)
            } else {
                (cand.leaf_b, cand.leaf_a)
            };
            try_reduction_2(t, ls, eps, root, cand.apex, w, q)
        };
        match attempt {
            Some(s) => return s,
            None => log::warn!(
                "reduction through apex {} produced an invalid extension; trying the next candidate",
                cand.apex
            ),
        }
    }
    log::warn!(
        "all reductions failed on a {n}-vertex tree; falling back to exhaustive search"
    );
    exhaustive_expect(t, ls, eps, root)
}

fn exhaustive_expect(t: &CubicTree, ls: &Split, eps: Sign, root: Option<usize>) -> Split {
    exhaustive_search(t, ls, eps, root).unwrap_or_else(|| {
        panic!(
            "no valid colouring of a {}-vertex cubic tree: the splitting lemma would be falsified",
            t.len()
        )
    })
}

/// Leaf split for a shrunken tree: fresh forced colours first, everything
/// else copied from the original leaf split.
fn leaf_split_for(t2: &CubicTree, ls: &Split, forced: &[(usize, Side)]) -> Split {
    let mut out = Split::new();
    for l in t2.leaves() {
        let side = forced
            .iter()
            .find(|&&(v, _)| v == l)
            .map(|&(_, side)| side)
            .or_else(|| ls.side(l))
            .expect("surviving leaf was a leaf before");
        out.assign(l, side).expect("fresh leaf split");
    }
    out
}

/// Delete the two leaves of every opposite-coloured cherry pair; the apexes
/// (now leaves of the contracted tree) are the red vertices.
fn contract_opposite_cherries(t: &CubicTree, ls: &Split) -> (CubicTree, Vec<usize>) {
    let mut removed: Vec<usize> = Vec::new();
    let mut reds: Vec<usize> = Vec::new();
    for apex in t.internal_vertices() {
        let leaf_ns: Vec<usize> = t
            .neighbours(apex)
            .iter()
            .copied()
            .filter(|&v| t.degree(v) == 1)
            .collect();
        if leaf_ns.len() == 2 {
            debug_assert_ne!(
                ls.side(leaf_ns[0]),
                ls.side(leaf_ns[1]),
                "same-coloured pairs are merged before contraction"
            );
            removed.extend_from_slice(&leaf_ns);
            reds.push(apex);
        }
    }
    (t.without_vertices(&removed), reds)
}

/// Leaves of `t` a reduction through contracted pair `p` would delete (used
/// only to rank candidates in rooted mode, so apexes are irrelevant: the
/// root is a leaf).
fn reduction_removes(t: &CubicTree, reds: &[usize], p: &CherryPair) -> Vec<usize> {
    let mut out = Vec::new();
    for &end in &[p.leaf_a, p.leaf_b] {
        if reds.contains(&end) {
            out.extend(t.neighbours(end).iter().copied().filter(|&v| t.degree(v) == 1));
        } else {
            out.push(end);
        }
    }
    out
}

/// Reduction 1: `v` neighbours two red apexes `p`, `q`. Remove both apexes
/// and their four leaves, solve the rest with eps flipped and `v` forced
/// opposite to the apex colour, then colour both apexes with eps's preferred
/// side. The discrepancy moves by 2 * eps.
fn try_reduction_1(
    t: &CubicTree,
    ls: &Split,
    eps: Sign,
    root: Option<usize>,
    v: usize,
    p: usize,
    q: usize,
) -> Option<Split> {
    let cherry_leaves = |apex: usize| -> Vec<usize> {
        t.neighbours(apex)
            .iter()
            .copied()
            .filter(|&x| t.degree(x) == 1)
            .collect()
    };
    let p_leaves = cherry_leaves(p);
    let q_leaves = cherry_leaves(q);
    debug_assert!(p_leaves.len() == 2 && q_leaves.len() == 2);
    let mut removed = vec![p, q];
    removed.extend_from_slice(&p_leaves);
    removed.extend_from_slice(&q_leaves);
    let t2 = t.without_vertices(&removed);
    let apex_colour = match eps {
        Sign::Plus => Side::X,
        Sign::Minus => Side::Y,
    };
    let ls2 = leaf_split_for(&t2, ls, &[(v, apex_colour.opposite())]);
    let sub_root = root.filter(|r| !removed.contains(r));
    let sub = solve_rec(&t2, &ls2, eps.flip(), sub_root);
    let mut s = sub;
    for apex in [p, q] {
        s.assign(apex, apex_colour).ok()?;
    }
    for leaf in p_leaves.iter().chain(&q_leaves) {
        s.assign(*leaf, ls.side(*leaf)?).ok()?;
    }
    post_ok(t, ls, eps, root, &s).then_some(s)
}

/// Reduction 2: `v` neighbours a plain leaf `q` and a red apex `w` (third
/// neighbour `u` is internal). Remove `q`, `w` and `w`'s two leaves, solve
/// with the same eps and `v` forced to `q`'s colour; then either keep `v`
/// and colour `w` opposite (when `u` came back opposite to `q`), or flip `v`
/// and colour `w` like `q` (when `u` matched). The discrepancy is unchanged.
fn try_reduction_2(
    t: &CubicTree,
    ls: &Split,
    eps: Sign,
    root: Option<usize>,
    v: usize,
    w: usize,
    q: usize,
) -> Option<Split> {
    let w_leaves: Vec<usize> = t
        .neighbours(w)
        .iter()
        .copied()
        .filter(|&x| t.degree(x) == 1)
        .collect();
    debug_assert_eq!(w_leaves.len(), 2);
    let c = ls.side(q)?;
    let u = *t
        .neighbours(v)
        .iter()
        .find(|&&x| x != w && x != q)
        .expect("v has three neighbours");
    debug_assert_eq!(t.degree(u), 3, "third neighbour must be internal");
    let mut removed = vec![q, w];
    removed.extend_from_slice(&w_leaves);
    let t2 = t.without_vertices(&removed);
    let ls2 = leaf_split_for(&t2, ls, &[(v, c)]);
    let sub_root = root.filter(|r| !removed.contains(r));
    let sub = solve_rec(&t2, &ls2, eps, sub_root);
    let u_colour = sub.side(u)?;
    let mut s = Split::new();
    let v_colour = if u_colour != c { c } else { c.opposite() };
    let w_colour = if u_colour != c { c.opposite() } else { c };
    for (vertex, side) in sub.iter() {
        let side = if vertex == v { v_colour } else { side };
        s.assign(vertex, side).ok()?;
    }
    s.assign(w, w_colour).ok()?;
    s.assign(q, c).ok()?;
    for leaf in &w_leaves {
        s.assign(*leaf, ls.side(*leaf)?).ok()?;
    }
    post_ok(t, ls, eps, root, &s).then_some(s)
}
