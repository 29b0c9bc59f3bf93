//! Session files: a ring, named ideals, maps and triples, and a list of
//! commands whose results are reported as text or JSON.

mod cache;
mod parse;
mod run;

pub use cache::{DiskCache, CACHE_DIR_ENV};
pub use parse::{parse_session, Command, Op, Session, Target, Verb, SUBCOMMANDS};
pub use run::{
    run_session, Budget, CommandReport, ErrorReport, RunOptions, SessionReport, Timings,
};
