//! Versioned, machine-readable run reports.
//!
//! Every CLI invocation that produces structured output wraps it in a
//! [`Report`]: a `schema` version, the input graph summary when there is
//! one, wall-clock timing, and a command-specific body.  Reports serialize
//! to JSON and deserialize back to the identical value, so downstream
//! tooling can archive and replay them.

use serde::{Deserialize, Serialize};

use crate::construct::SolveOutcome;
use crate::graph::GeneralGraph;
use crate::io::graph6::emit_graph6;
use crate::oracle::{OracleReport, SweepReport};
use crate::search::{EdgeColouring3, NowhereZeroFlow, SearchOutcome, TreeCycleDecomposition};
use crate::split::SplitReport;
use crate::tree::CubicTree;

/// Version stamp written into every report.
pub const SCHEMA_VERSION: u32 = 1;

/// Compact identification of the input graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphInfo {
    pub n: usize,
    pub edge_count: usize,
    pub graph6: String,
}

impl GraphInfo {
    pub fn of(g: &GeneralGraph) -> Self {
        GraphInfo {
            n: g.n(),
            edge_count: g.edge_count(),
            graph6: emit_graph6(g),
        }
    }
}

/// Outcome of one nowhere-zero flow search, keyed by the flow order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowSearchEntry {
    pub k: u32,
    pub outcome: SearchOutcome<NowhereZeroFlow>,
}

/// One graph's result within a survey run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyEntry {
    /// 1-based position in the input stream.
    pub index: usize,
    pub graph6: String,
    pub outcome: SolveOutcome,
}

/// Command-specific payload of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum ReportBody {
    Check {
        split_report: SplitReport,
        /// Present only for cubic graphs: whether the split witnesses the
        /// Ban-Linial conjecture (external with |imbalance| at most 2).
        conjecture_witness: Option<bool>,
    },
    Solve {
        outcome: SolveOutcome,
    },
    Decompose {
        tree_cycle: SearchOutcome<TreeCycleDecomposition>,
        bipartite_complement_tree: SearchOutcome<CubicTree>,
        edge_colouring: SearchOutcome<EdgeColouring3>,
        flows: Vec<FlowSearchEntry>,
    },
    Oracle {
        oracle: OracleReport,
    },
    Sweep {
        sweep: SweepReport,
    },
    Survey {
        graphs: usize,
        solved: usize,
        refuted: usize,
        unresolved: usize,
        entries: Vec<SurveyEntry>,
    },
}

/// Top-level envelope for a structured run report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphInfo>,
    pub elapsed_ms: u64,
    #[serde(flatten)]
    pub body: ReportBody,
}

impl Report {
    pub fn new(graph: Option<GraphInfo>, elapsed_ms: u64, body: ReportBody) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            graph,
            elapsed_ms,
            body,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| crate::Error::Generator(format!("bad report JSON: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{solve_auto, SolveMethod};
    use crate::generators::{k4, petersen};
    use crate::oracle::brute_force_ban_linial;
    use crate::search::{find_3_edge_colouring, find_tree_cycle_decomposition};
    use crate::split::{evaluate_split, Split};

    fn round_trip(report: &Report) {
        let json = report.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(&back, report);
        // A second pass through text is byte-identical: no lossy fields.
        assert_eq!(back.to_json(), json);
    }

    #[test]
    fn check_report_round_trips() {
        let g = k4();
        let s = Split::from_x_set(4, [0, 1]).unwrap();
        let report = Report::new(
            Some(GraphInfo::of(g.general())),
            7,
            ReportBody::Check {
                split_report: evaluate_split(&g, &s).unwrap(),
                conjecture_witness: Some(true),
            },
        );
        assert_eq!(report.schema, 1);
        assert!(report.to_json().contains("\"schema\": 1"));
        round_trip(&report);
    }

    #[test]
    fn solve_and_oracle_reports_round_trip() {
        let g = petersen();
        let solve = Report::new(
            Some(GraphInfo::of(g.general())),
            0,
            ReportBody::Solve {
                outcome: solve_auto(&g, 1_000_000).unwrap(),
            },
        );
        round_trip(&solve);

        let oracle = Report::new(
            Some(GraphInfo::of(k4().general())),
            0,
            ReportBody::Oracle {
                oracle: brute_force_ban_linial(&k4()).unwrap(),
            },
        );
        round_trip(&oracle);
    }

    #[test]
    fn decompose_report_round_trips() {
        let g = k4();
        let report = Report::new(
            Some(GraphInfo::of(g.general())),
            3,
            ReportBody::Decompose {
                tree_cycle: find_tree_cycle_decomposition(&g, 1_000_000),
                bipartite_complement_tree: crate::search::find_bipartite_complement_tree(
                    &g, 1_000_000,
                ),
                edge_colouring: find_3_edge_colouring(&g, 1_000_000),
                flows: vec![FlowSearchEntry {
                    k: 4,
                    outcome: crate::search::find_nowhere_zero_flow(&g, 4, 1_000_000).unwrap(),
                }],
            },
        );
        round_trip(&report);
    }

    #[test]
    fn survey_report_round_trips_and_tags_commands() {
        let g = k4();
        let outcome = solve_auto(&g, 1_000_000).unwrap();
        assert!(matches!(
            &outcome,
            SolveOutcome::Solved(r) if r.method == SolveMethod::EdgeColouring
        ));
        let report = Report::new(
            None,
            12,
            ReportBody::Survey {
                graphs: 1,
                solved: 1,
                refuted: 0,
                unresolved: 0,
                entries: vec![SurveyEntry {
                    index: 1,
                    graph6: "C~".to_string(),
                    outcome,
                }],
            },
        );
        let json = report.to_json();
        assert!(json.contains("\"command\": \"survey\""));
        assert!(!json.contains("\"graph\":"), "absent graph field is omitted");
        round_trip(&report);
    }
}
