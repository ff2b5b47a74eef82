//! Named graph families and the small fixed graphs of the classification.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

fn invalid(family: &str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter { family: family.into(), reason: reason.into() }
}

/// `C_n` on `0..n`, edges `i ~ i+1 (mod n)`. Requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(invalid("cycle", format!("n = {n}, need n >= 3")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("path", "n = 0"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(invalid("complete", "n = 0"));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges)
}

/// Star on `n` vertices: centre 0 joined to leaves `1..n`, i.e. `K_{1,n-1}`.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(invalid("star", format!("n = {n}, need n >= 2")));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &edges)
}

/// Friendship graph `F_k`: `k` triangles sharing hub 0; triangle `i` uses
/// leaves `2i+1` and `2i+2`.
pub fn friendship(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(invalid("friendship", "k = 0, need k >= 1"));
    }
    let mut edges = Vec::with_capacity(3 * k);
    for i in 0..k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        edges.extend([(0, a), (0, b), (a, b)]);
    }
    Graph::new(2 * k + 1, &edges)
}

/// Triangle `4,5,6` and `K_{1,3}` with centre 0 and leaves `1,2,3`, joined by
/// the matching `1-4, 2-5, 3-6`.
pub fn graph_t() -> Graph {
    Graph::new(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 5), (5, 6), (4, 6)]).expect("fixed edge list")
}

/// `F_3` with a pendant vertex 7 attached to the hub (hub degree 7).
pub fn graph_f3_prime() -> Graph {
    friendship(3).and_then(|f3| f3.with_new_vertex(&[0])).expect("fixed construction")
}

/// Two 5-cycles sharing the two-edge path `v-w-x`.
///
/// Labels: x=0, y=1, t=2, v=3, w=4, u=5, q=6; cycles `x-y-t-v-w-x` and
/// `x-u-q-v-w-x`.
pub fn graph_g1() -> Graph {
    Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 6), (6, 3)]).expect("fixed edge list")
}

/// Three triangles `x u1 u2`, `x w y`, `y v1 v2` along the edge `x-y`.
///
/// Labels: x=0, y=1, w=2, u1=3, u2=4, v1=5, v2=6.
pub fn graph_f() -> Graph {
    Graph::new(7, &[(0, 3), (0, 4), (3, 4), (0, 2), (0, 1), (1, 2), (1, 5), (1, 6), (5, 6)]).expect("fixed edge list")
}

/// Short names accepted by [`family`] and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Cycle,
    Path,
    Complete,
    Star,
    Friendship,
    T,
    F3Prime,
    G1,
    F,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Cycle,
        Family::Path,
        Family::Complete,
        Family::Star,
        Family::Friendship,
        Family::T,
        Family::F3Prime,
        Family::G1,
        Family::F,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Friendship => "friendship",
            Family::T => "t",
            Family::F3Prime => "f3prime",
            Family::G1 => "g1",
            Family::F => "f",
        }
    }

    pub fn takes_parameter(self) -> bool {
        matches!(self, Family::Cycle | Family::Path | Family::Complete | Family::Star | Family::Friendship)
    }

    pub fn build(self, param: Option<usize>) -> Result<Graph, GraphError> {
        let need = |p: Option<usize>| p.ok_or_else(|| invalid(self.name(), "this family needs a parameter"));
        match self {
            Family::Cycle => cycle(need(param)?),
            Family::Path => path(need(param)?),
            Family::Complete => complete(need(param)?),
            Family::Star => star(need(param)?),
            Family::Friendship => friendship(need(param)?),
            Family::T | Family::F3Prime | Family::G1 | Family::F if param.is_some() => {
                Err(invalid(self.name(), "this family takes no parameter"))
            }
            Family::T => Ok(graph_t()),
            Family::F3Prime => Ok(graph_f3_prime()),
            Family::G1 => Ok(graph_g1()),
            Family::F => Ok(graph_f()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        Family::ALL.into_iter().find(|f| f.name() == lower).ok_or_else(|| GraphError::UnknownFamily(s.to_string()))
    }
}

/// Builds a named family member, e.g. `family("friendship", Some(3))`.
pub fn family(name: &str, param: Option<usize>) -> Result<Graph, GraphError> {
    name.parse::<Family>()?.build(param)
}
