//! Parsing, printing and report shaping for the conjugate-polynomial
//! command-line tool. The binary in `main.rs` is a thin driver over
//! these modules and `polyconj-core`.

pub mod parse;
pub mod print;
pub mod report;
