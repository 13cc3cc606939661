//! CLI companion to `ck-core`: named-algebra registry, text/LaTeX/JSON
//! rendering and the `ckcas` command set.

pub mod cli;
pub mod jsonfmt;
pub mod registry;
pub mod render;
