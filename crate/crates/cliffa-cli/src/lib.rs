//! Library side of the CLI: problem documents, report documents, seeded
//! instance generators, the independent classical-Clifford oracle, and the
//! self-test suites. The binary in `main.rs` is a thin dispatcher over
//! these.

pub mod oracle;
pub mod problem;
pub mod report;
pub mod rng;
pub mod suites;
