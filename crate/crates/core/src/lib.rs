//! Exact Ollivier and Lin-Lu-Yau Ricci curvature on finite graphs.
//!
//! All curvature values are exact rationals computed by linear programming
//! in arbitrary-precision arithmetic. The crate is organised as:
//!
//! * [`graph`]: graphs, metric and cycle queries, named families, canonical
//!   forms, graph6 and edge-list formats;
//! * [`lp`]: an exact two-phase simplex solver;
//! * [`curvature`]: lazy random walks, transport distance in primal and dual
//!   form, alpha-curvature and Lin-Lu-Yau curvature;
//! * [`classify`]: small-graph enumeration and the structural checks built on
//!   top of the curvature engine.

pub mod classify;
pub mod curvature;
pub mod graph;
pub mod lp;

pub use graph::{Graph, GraphError};
pub use lp::Rational;
