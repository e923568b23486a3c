use std::time::Duration;

use thiserror::Error;

/// Errors raised by constructions, solvers and file readers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    Construction(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    /// `count` is exact unless `at_least` is set, in which case counting
    /// stopped early and it is only a lower bound.
    #[error("{}{count} {what}, over the cap of {cap}", if *at_least { "at least " } else { "" })]
    TooLarge {
        what: &'static str,
        count: usize,
        cap: usize,
        at_least: bool,
    },

    #[error("search exceeded the time budget of {0:?}; result unknown")]
    Timeout(Duration),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_timeout(&self) -> bool {
        matches!(self, Error::Timeout(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
