//! Distance ideals of graphs: exact Smith normal forms, integer Gröbner bases
//! and the forbidden-subgraph classification of graphs with few trivial
//! distance ideals.

pub mod combin;
pub mod error;
pub mod graph;
pub mod ideals;
pub mod groebner;
pub mod harness;
pub mod int;
pub mod linalg;
pub mod poly;
pub mod scan;

pub use error::{Error, Result};
pub use graph::Graph;
pub use int::Int;
