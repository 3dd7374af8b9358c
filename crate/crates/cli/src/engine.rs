use std::io;

use log::warn;
use sotype_core::{AnyElement, GroupError, GroupHandle};
use thiserror::Error;

use crate::cache::{Cache, Lookup};
use crate::eval::eval_expr;
use crate::expr::{parse_expr, GroupExpr, ParseError};
use crate::report::SpectrumReport;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("{expression}: {source}")]
    Group {
        expression: String,
        #[source]
        source: GroupError,
    },

    #[error("{expression}: inconsistent report: {message}")]
    Inconsistent { expression: String, message: String },

    #[error("i/o: {0}")]
    Io(#[from] io::Error),
}

/// Evaluates expressions into reports, going through the cache when there is
/// one. Results are identical with or without a cache.
#[derive(Debug, Clone)]
pub struct Engine {
    cap: usize,
    cache: Option<Cache>,
}

impl Engine {
    pub fn new(cap: usize, cache: Option<Cache>) -> Self {
        Self { cap, cache }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn cache(&self) -> Option<&Cache> {
        self.cache.as_ref()
    }

    pub fn group(&self, expr: &GroupExpr) -> Result<GroupHandle<AnyElement>, CliError> {
        eval_expr(expr, self.cap).map_err(|source| CliError::Group {
            expression: expr.to_string(),
            source,
        })
    }

    pub fn report_text(&self, text: &str) -> Result<SpectrumReport, CliError> {
        self.report(&parse_expr(text)?)
    }

    pub fn report(&self, expr: &GroupExpr) -> Result<SpectrumReport, CliError> {
        let key = expr.to_string();
        if let Some(cache) = &self.cache {
            match cache.load(&key) {
                Lookup::Hit(report) => return Ok(report),
                Lookup::Missing => {}
                Lookup::Corrupt(reason) => {
                    warn!("recomputing `{key}`, cached report unusable: {reason}")
                }
            }
        }
        let report = SpectrumReport::compute(&key, &self.group(expr)?);
        report
            .check_consistency()
            .map_err(|message| CliError::Inconsistent {
                expression: key.clone(),
                message,
            })?;
        if let Some(cache) = &self.cache {
            if let Err(e) = cache.store(&report) {
                warn!("could not cache `{key}`: {e}");
            }
        }
        Ok(report)
    }
}
