//! Exact computer algebra for hypergraphs definable over fields.

pub mod builders;
pub mod field;
pub mod geometry;
pub mod groebner;
pub mod hypergraph;
pub mod linalg;
pub mod maps;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod report;
pub mod sampling;
pub mod scenarios;
pub mod spec_file;
pub mod univariate;
