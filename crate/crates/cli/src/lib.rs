//! Command-line front end: the group-expression language, reports, the
//! verification commands, the collision hunt and the report cache.

pub mod app;
pub mod cache;
pub mod engine;
pub mod eval;
pub mod expr;
pub mod hunt;
pub mod report;
pub mod verify;

pub use app::{run, Cli, EXIT_ASSERTION, EXIT_OK, EXIT_USAGE};
pub use cache::{Cache, Lookup};
pub use engine::{CliError, Engine};
pub use eval::eval_expr;
pub use expr::{parse_expr, Atom, GroupExpr, ParseError};
pub use hunt::{cmd_hunt, hunt_atoms, hunt_candidates, HuntReport};
pub use report::{SpectrumReport, ENGINE_VERSION};
pub use verify::{
    cmd_verify_counterexample, cmd_verify_theorem, CounterexampleReport, TheoremReport,
};
