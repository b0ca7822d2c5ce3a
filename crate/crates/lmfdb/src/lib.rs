//! LMFDB number-field retrieval with committed offline fixtures.
//!
//! The module speaks the LMFDB REST shape (a JSON document with a `data`
//! array and a `next` cursor) against a configurable base URL, with bounded
//! retries and cursor persistence so an interrupted crawl resumes. All
//! acceptance-grade work runs against a committed fixture snapshot instead:
//! a header line documenting the snapshot, then one JSON record per line.
//!
//! [`filter_by_theorem`] pushes every record through the field certifier and
//! partitions the results deterministically.

pub mod client;
pub mod filter;
pub mod fixture;
pub mod record;

pub use client::{fetch_candidates, CandidateQuery, ClientConfig, CrawlState, FetchOutcome};
pub use filter::{filter_by_theorem, FilterPartition};
pub use fixture::{read_fixture, write_fixture, FixtureHeader};
pub use record::{FieldRecord, ParseIssue};

/// Errors of the retrieval and fixture layer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Network-level failure; safe to retry. No partial results are surfaced.
    #[error("transport error (retryable): {0}")]
    Transport(String),

    #[error("unexpected response: {0}")]
    BadResponse(String),

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Core(#[from] zpflt_core::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
