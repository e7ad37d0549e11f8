//! File format and command-line front end for weighted finite automata
//! with output. The models, semantics, conversions, and equivalence
//! checking live in `wfa-core`; this crate adds the JSON document format
//! ([`mod@format`]) and the `wfa` binary ([`app`]).

pub mod app;
pub mod format;
