use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("invalid root datum: {0}")]
    InvalidDatum(String),

    #[error("cocharacter has length {got}, expected rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("cocharacter {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("semisimple part has rank 0, there are no simple affine reflections")]
    NoSemisimplePart,

    #[error("invalid facet: {0}")]
    InvalidFacet(String),

    #[error("double cosets belong to different facet pairs")]
    FacetMismatch,

    #[error("facet type {inner} is not contained in {outer}")]
    FacetNotContained { inner: String, outer: String },

    #[error("subset of rows is not closed under the order: row {0} lies below a selected row")]
    NotDownClosed(usize),

    #[error("tuple is not admissible: sum of legs is nonzero in pi_1")]
    Inadmissible,

    #[error("elements are not comparable in the Bruhat order")]
    Incomparable,

    #[error("{what} = {value} exceeds the limit {cap}")]
    Limit { what: &'static str, value: usize, cap: usize },

    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Parse { what, detail: detail.into() }
    }

    /// Machine-readable error class used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "E_PARSE",
            Error::Limit { .. } => "E_LIMIT",
            _ => "E_DOMAIN",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
