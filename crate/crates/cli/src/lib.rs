//! Report building and rendering for the `gbei` command-line tool.

pub mod corpus;
pub mod report;
pub mod text;

pub use corpus::{run_corpus, CorpusReport, CorpusRow, CorpusSummary, Filter};
pub use report::{build_report, Options, Report, Stage, Verdict, VerdictStatus};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Graph(#[from] gbei_core::graph::GraphError),
    #[error("--rows must be at least 2, got {0}")]
    Rows(usize),
}

/// Exit codes shared by every subcommand.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const VERIFICATION_FAILURE: u8 = 1;
    pub const INPUT_ERROR: u8 = 2;
    pub const STRICT_SKIP: u8 = 3;
}

pub fn read_graph(path: &str) -> Result<gbei_core::graph::Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    Ok(gbei_core::graph::Graph::parse(&text)?)
}
