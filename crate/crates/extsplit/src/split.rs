//! Splits (two-sided vertex partitions), their evaluation, and the
//! conjecture check: every cubic graph should admit an external split whose
//! sides differ in size by at most 2.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CubicGraph, GeneralGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// Assignment of vertices to the two sides. The domain may be partial (leaf
/// splits of trees) or total (splits of a whole graph); evaluation requires a
/// total split. A `BTreeMap` keeps iteration deterministic.
///
/// Serializes as two sorted vertex lists (`x`, `y`); deserialization
/// re-validates that no vertex appears on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SplitWire", into = "SplitWire")]
pub struct Split {
    assignment: BTreeMap<usize, Side>,
}

/// JSON shape of a [`Split`]: plain vertex lists instead of an
/// integer-keyed map, which text formats handle poorly.
#[derive(Serialize, Deserialize)]
struct SplitWire {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl From<Split> for SplitWire {
    fn from(s: Split) -> SplitWire {
        SplitWire {
            x: s.side_vertices(Side::X),
            y: s.side_vertices(Side::Y),
        }
    }
}

impl TryFrom<SplitWire> for Split {
    type Error = Error;

    fn try_from(w: SplitWire) -> Result<Split> {
        Split::from_sides(w.x, w.y)
    }
}

impl Split {
    pub fn new() -> Self {
        Split { assignment: BTreeMap::new() }
    }

    pub fn from_sides<I, J>(xs: I, ys: J) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
        J: IntoIterator<Item = usize>,
    {
        let mut s = Split::new();
        for v in xs {
            s.assign(v, Side::X)?;
        }
        for v in ys {
            s.assign(v, Side::Y)?;
        }
        Ok(s)
    }

    /// Total split of `0..n` with `xs` on side X and everything else on Y.
    pub fn from_x_set<I: IntoIterator<Item = usize>>(n: usize, xs: I) -> Result<Self> {
        let mut s = Split::new();
        for v in xs {
            if v >= n {
                return Err(Error::SplitOutsideDomain { vertex: v });
            }
            s.assign(v, Side::X)?;
        }
        for v in 0..n {
            if s.side(v).is_none() {
                s.assignment.insert(v, Side::Y);
            }
        }
        Ok(s)
    }

    /// Insert an assignment, rejecting contradictions (same vertex, both sides).
    pub fn assign(&mut self, v: usize, side: Side) -> Result<()> {
        match self.assignment.insert(v, side) {
            None => Ok(()),
            Some(old) if old == side => Ok(()),
            Some(_) => Err(Error::SplitContradiction(v)),
        }
    }

    pub fn side(&self, v: usize) -> Option<Side> {
        self.assignment.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn domain(&self) -> impl Iterator<Item = usize> + '_ {
        self.assignment.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Side)> + '_ {
        self.assignment.iter().map(|(&v, &s)| (v, s))
    }

    pub fn side_vertices(&self, side: Side) -> Vec<usize> {
        self.assignment
            .iter()
            .filter(|&(_, &s)| s == side)
            .map(|(&v, _)| v)
            .collect()
    }

    /// Both sides swapped.
    pub fn swapped(&self) -> Split {
        Split {
            assignment: self
                .assignment
                .iter()
                .map(|(&v, &s)| (v, s.opposite()))
                .collect(),
        }
    }

    /// True when `self` agrees with `other` on all of `other`'s domain.
    pub fn extends(&self, other: &Split) -> bool {
        other.iter().all(|(v, s)| self.side(v) == Some(s))
    }

    pub fn require_total(&self, n: usize) -> Result<()> {
        for v in 0..n {
            if self.side(v).is_none() {
                return Err(Error::SplitMissingVertex { vertex: v });
            }
        }
        if let Some((&v, _)) = self.assignment.range(n..).next() {
            return Err(Error::SplitOutsideDomain { vertex: v });
        }
        Ok(())
    }
}

impl Default for Split {
    fn default() -> Self {
        Split::new()
    }
}

/// Everything `evaluate_split` measures about one total split.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitReport {
    /// e(G[X]) - e(G[Y]).
    pub disc: i64,
    /// |X| - |Y|.
    pub imbalance: i64,
    /// No vertex keeps more than half its degree inside its own side.
    pub is_external: bool,
    /// Every vertex keeps at least half its degree inside its own side.
    pub is_internal: bool,
    /// At most one vertex violates the external condition.
    pub is_nearly_external: bool,
    /// Vertices with more than half their degree on their own side, sorted.
    pub offenders: Vec<usize>,
    /// Largest component of G[X] or G[Y], by vertex count.
    pub max_mono_component: usize,
    /// Number of edges between the two sides.
    pub cut_size: usize,
}

/// Measure a total split of `g`.
///
/// The external/internal tests use the general degree rule (a vertex offends
/// when it keeps strictly more than half its degree on its own side), so the
/// function is meaningful for non-regular graphs too.
pub fn evaluate_split(g: &GeneralGraph, s: &Split) -> Result<SplitReport> {
    s.require_total(g.n())?;
    let n = g.n();
    let mut e_x = 0i64;
    let mut e_y = 0i64;
    let mut cut = 0usize;
    let mut mono_deg = vec![0usize; n];
    for (u, v) in g.edges() {
        match (s.side(u).unwrap(), s.side(v).unwrap()) {
            (Side::X, Side::X) => {
                e_x += 1;
                mono_deg[u] += 1;
                mono_deg[v] += 1;
            }
            (Side::Y, Side::Y) => {
                e_y += 1;
                mono_deg[u] += 1;
                mono_deg[v] += 1;
            }
            _ => cut += 1,
        }
    }
    let mut offenders = Vec::new();
    let mut is_internal = true;
    for v in 0..n {
        if 2 * mono_deg[v] > g.degree(v) {
            offenders.push(v);
        }
        if 2 * mono_deg[v] < g.degree(v) {
            is_internal = false;
        }
    }
    let xs = s.side_vertices(Side::X);
    let ys = s.side_vertices(Side::Y);
    let max_mono_component = g
        .largest_component_within(&xs)
        .max(g.largest_component_within(&ys));
    let report = SplitReport {
        disc: e_x - e_y,
        imbalance: xs.len() as i64 - ys.len() as i64,
        is_external: offenders.is_empty(),
        is_internal,
        is_nearly_external: offenders.len() <= 1,
        offenders,
        max_mono_component,
        cut_size: cut,
    };
    // Cross-check for cubic inputs: external is the same as "at most one
    // same-side neighbour each", and side sizes tie to the discrepancy.
    debug_assert!(
        (0..n).any(|v| g.degree(v) != 3)
            || (report.is_external == (0..n).all(|v| mono_deg[v] <= 1)
                && 3 * report.imbalance == 2 * report.disc)
    );
    Ok(report)
}

/// The conjecture check: is `s` an external split of `g` with |X| and |Y|
/// within 2 of each other?
pub fn verify_ban_linial(g: &CubicGraph, s: &Split) -> Result<bool> {
    let report = evaluate_split(g.general(), s)?;
    Ok(report.is_external && report.imbalance.abs() <= 2)
}

/// The subgraph of monochromatic edges, `g - E(X, Y)`, on the same vertices.
pub fn induced_mono_graph(g: &GeneralGraph, s: &Split) -> Result<GeneralGraph> {
    s.require_total(g.n())?;
    let mono: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| s.side(u) == s.side(v))
        .collect();
    g.subgraph_with_edges(&mono)
}
