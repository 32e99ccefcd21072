//! Support library for the `edgelift` binary: the material preset catalogue,
//! the text formats the planner emits, the key=value config loader, and the
//! atomic file writer. Kept as a library so the contract tests can parse the
//! planner's own output with the planner's own readers.

pub mod config;
pub mod formats;
pub mod output;
pub mod presets;
