//! Exact certification of betweenness-uniform graphs (BUGs) and their
//! complements (coBUGs).
//!
//! Everything is computed over the rationals with arbitrary-precision
//! integers: betweenness centrality, the co-betweenness calculus on
//! complements, structural feasibility filters, the known coBUG
//! construction families, and an exhaustive desk-scale search for exotic
//! coBUGs. No value in this crate is ever approximated.

pub mod centrality;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod lens;
pub mod rational;
pub mod search;
pub mod structure;
pub mod verify;

pub use centrality::{betweenness_exact, betweenness_oracle, is_bug, BetweennessProfile};
pub use graph::{Diameter, Graph};
pub use lens::{is_cobug, CertificationReport};
pub use rational::Rat;
