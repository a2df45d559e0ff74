use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A constructor or operation received values outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sampling lattice fails the spectrum-translate disjointness requirement.
    /// Carries the integer shift whose translate overlaps the spectrum set.
    #[error("lattice translates overlap: spectrum set collides with its translate by l = ({0}, {1})")]
    TranslatesOverlap(i64, i64),

    /// Configuration file problems (missing keys, bad values, unknown keys).
    #[error("config error: {0}")]
    Config(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
