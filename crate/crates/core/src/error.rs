use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A sortedness assertion failed; `index` is the first position whose
    /// value is smaller than its predecessor.
    #[error("data is not sorted: items[{index}] is smaller than items[{}]", index - 1)]
    NotSorted { index: usize },

    #[error("{algorithm} requires a dataset flagged as sorted")]
    RequiresSorted { algorithm: &'static str },

    #[error("invalid generation spec: {0}")]
    InvalidSpec(String),

    #[error("{}:{line}: cannot parse {content:?} as a 64-bit integer", path.display())]
    Parse { path: PathBuf, line: usize, content: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("invalid benchmark configuration: {0}")]
    Config(String),

    #[error("probe count for {algorithm} changed between repetitions ({first} vs {other})")]
    NondeterministicProbes { algorithm: &'static str, first: u64, other: u64 },
}
