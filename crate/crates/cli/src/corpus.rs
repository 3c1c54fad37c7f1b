use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use gbei_core::graph::{enumerate_connected_graphs, GraphError, GraphFilter};

use crate::report::{build_report, groebner_check, Options, VerdictStatus, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Filter {
    Gblock,
    Block,
    All,
}

impl From<Filter> for GraphFilter {
    fn from(f: Filter) -> Self {
        match f {
            Filter::Gblock => GraphFilter::GeneralizedBlock,
            Filter::Block => GraphFilter::Block,
            Filter::All => GraphFilter::All,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusVerdict {
    pub check: String,
    pub status: VerdictStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusRow {
    pub index: usize,
    pub edges: Vec<[usize; 2]>,
    pub depth: Option<usize>,
    pub regularity: Option<usize>,
    /// `pass`, `fail`, or `skipped` when no check ran.
    pub status: String,
    pub verdicts: Vec<CorpusVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusSummary {
    pub graphs: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub filter: String,
    pub verify: bool,
    pub rows: Vec<CorpusRow>,
    pub summary: CorpusSummary,
}

impl CorpusReport {
    pub fn has_failure(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Runs every connected graph on `n` vertices passing `filter`. Graphs are
/// processed in parallel; rows keep enumeration order.
pub fn run_corpus(
    n: usize,
    m: usize,
    filter: Filter,
    verify: bool,
    max_vars: usize,
) -> Result<CorpusReport, GraphError> {
    let graphs: Vec<_> = enumerate_connected_graphs(n, filter.into())?.collect();
    let opts = Options {
        rows: Some(m),
        verify,
        max_vars,
        with_primes: false,
    };
    let rows: Vec<CorpusRow> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            let report = build_report(g, "corpus", &opts);
            let verdicts = match &report.verification {
                Some(v) => v.verdicts.clone(),
                None => groebner_check(g, m),
            };
            let formulas = report.formulas.as_ref().expect("rows given");
            let statuses: Vec<VerdictStatus> = verdicts.iter().map(|v| v.status).collect();
            let status = if statuses.contains(&VerdictStatus::Fail) {
                "fail"
            } else if statuses.contains(&VerdictStatus::Pass) {
                "pass"
            } else {
                "skipped"
            };
            CorpusRow {
                index: index + 1,
                edges: report.input.edges.clone(),
                depth: formulas.depth.value().map(|f| f.value),
                regularity: formulas.regularity.value().map(|f| f.value),
                status: status.to_string(),
                verdicts: verdicts
                    .into_iter()
                    .map(|v| CorpusVerdict {
                        check: v.check,
                        status: v.status,
                    })
                    .collect(),
            }
        })
        .collect();
    let count = |s: &str| rows.iter().filter(|r| r.status == s).count();
    let summary = CorpusSummary {
        graphs: rows.len(),
        pass: count("pass"),
        fail: count("fail"),
        skipped: count("skipped"),
    };
    Ok(CorpusReport {
        schema_version: SCHEMA_VERSION,
        n,
        m,
        filter: format!("{filter:?}").to_lowercase(),
        verify,
        rows,
        summary,
    })
}
