//! N⁴ semantics for normal logic programs: a two-valued first-order logic in
//! which `¬²F` need not coincide with `F`, its Herbrand models, and the
//! characterization of stable models as complete minimal N⁴ models.
//!
//! Modules, bottom-up: [`syntax`] and [`parser`], [`semantics`] (valuation),
//! [`herbrand`], [`models`]; [`report`], [`enumerate`] and [`check`] support
//! the [`cli`].

pub mod check;
pub mod cli;
pub mod enumerate;
pub mod herbrand;
pub mod models;
pub mod parser;
pub mod report;
pub mod semantics;
pub mod syntax;

/// Any failure surfaced to a caller of the engine's front ends.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] parser::ParseError),
    #[error(transparent)]
    Load(#[from] semantics::LoadError),
    #[error(transparent)]
    Eval(#[from] semantics::EvalError),
    #[error(transparent)]
    Herbrand(#[from] herbrand::HerbrandError),
    #[error(transparent)]
    Model(#[from] models::ModelError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Short machine-readable category.
    pub fn kind(&self) -> &'static str {
        use herbrand::HerbrandError as H;
        use models::ModelError as M;
        match self {
            Error::Parse(_) => "parse",
            Error::Load(_) => "interpretation",
            Error::Eval(_) | Error::Model(M::Eval(_)) => "eval",
            Error::Herbrand(H::InfiniteUniverse) | Error::Model(M::Herbrand(H::InfiniteUniverse)) => "infinite-universe",
            Error::Herbrand(_) | Error::Model(M::Herbrand(_)) => "herbrand",
            Error::Model(M::SearchSpaceTooLarge { .. }) => "search-space-too-large",
            Error::Model(M::Arity(_)) => "parse",
            Error::Model(_) => "model",
            Error::Io { .. } => "io",
            Error::Usage(_) => "usage",
        }
    }
}
