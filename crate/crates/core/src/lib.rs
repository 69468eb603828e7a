//! Exact discrete curvature of graph edges.
//!
//! Lin-Lu-Yau curvature κ, the zero-idleness curvature κ_0 and the whole
//! α-Ollivier-Ricci family κ_α are computed as exact rationals. Edges whose
//! endpoints have equal degree go through assignment-based closed forms
//! ([`curvature`]); every other edge, and every cross-check, goes through a
//! min-cost-flow Wasserstein solver ([`transport`]).

pub mod curvature;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod lap;
pub mod rational;
pub mod transport;

pub use graph::{EdgeContext, Graph, GraphError};
pub use rational::Rational;
