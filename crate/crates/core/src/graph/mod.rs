//! Finite undirected simple graphs and the structural queries the curvature
//! and classification code needs.

mod canon;
mod families;
mod format;

pub use canon::{canonical_form, canonical_form_with_cap, is_isomorphic, CanonicalForm, DEFAULT_CANON_CAP};
pub use families::{
    complete, cycle, family, friendship, graph_f, graph_f3_prime, graph_g1, graph_t, path, star, Family,
};
pub use format::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6, parse_graph6_lines};

use std::collections::VecDeque;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{{{0}, {1}}} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("cycle length {0} is not supported (expected 3, 4 or 5)")]
    UnsupportedCycleLength(usize),
    #[error("invalid parameter for family `{family}`: {reason}")]
    InvalidParameter { family: String, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("graph on {n} vertices exceeds the canonical-form cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An undirected simple graph on vertices `0..n`.
///
/// Immutable once built; the neighbour lists are sorted and the edge list
/// holds each edge once as `(u, v)` with `u < v`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs (in either
    /// orientation) collapse to a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        normalized.dedup();
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Self { n, neighbors, edges: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Closed neighbourhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.neighbors[v].clone();
        let pos = out.partition_point(|&w| w < v);
        out.insert(pos, v);
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of degree-one vertices.
    pub fn pendant_vertex_count(&self) -> usize {
        self.neighbors.iter().filter(|l| l.len() == 1).count()
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Result<Vec<Option<u32>>, GraphError> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices are reached");
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let rows = (0..self.n).map(|s| self.bfs_distances(s).expect("source in range")).collect();
        DistanceMatrix { rows }
    }

    pub fn is_connected(&self) -> bool {
        let d = self.bfs_distances(0).expect("graphs are non-empty");
        d.iter().all(Option::is_some)
    }

    pub fn common_neighbor_count(&self, u: usize, v: usize) -> usize {
        let (a, b) = (&self.neighbors[u], &self.neighbors[v]);
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// True iff some cycle of length exactly `k` (3, 4 or 5) passes through
    /// the edge `{u, v}`.
    pub fn edge_in_cycle(&self, u: usize, v: usize, k: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let outer_u = self.neighbors[u].iter().copied().filter(|&a| a != v);
        Ok(match k {
            3 => self.common_neighbor_count(u, v) > 0,
            4 => {
                outer_u.into_iter().any(|a| self.neighbors[v].iter().any(|&b| b != u && b != a && self.has_edge(a, b)))
            }
            5 => {
                let outer_u: Vec<usize> = outer_u.collect();
                outer_u.iter().any(|&a| {
                    self.neighbors[v].iter().any(|&b| {
                        b != u
                            && b != a
                            && self.neighbors[a].iter().any(|&c| c != u && c != v && c != b && self.has_edge(c, b))
                    })
                })
            }
            other => return Err(GraphError::UnsupportedCycleLength(other)),
        })
    }

    /// No two distinct vertices share two common neighbours.
    pub fn is_c4_free(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.common_neighbor_count(u, v) <= 1))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges.iter().all(|&(u, v)| self.common_neighbor_count(u, v) == 0)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(GraphError::InvalidParameter {
                family: "permutation".into(),
                reason: format!("length {} for {} vertices", perm.len(), self.n),
            });
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::InvalidParameter {
                    family: "permutation".into(),
                    reason: format!("{perm:?} is not a permutation"),
                });
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::new(self.n, &edges)
    }

    /// Adds one new vertex (labelled `n`) adjacent to `targets`.
    pub fn with_new_vertex(&self, targets: &[usize]) -> Result<Self, GraphError> {
        let mut edges = self.edges.clone();
        edges.extend(targets.iter().map(|&t| (t, self.n)));
        Self::new(self.n + 1, &edges)
    }
}

/// All-pairs hop distances; `None` marks pairs in different components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    rows: Vec<Vec<Option<u32>>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.rows[u][v]
    }

    pub fn row(&self, u: usize) -> &[Option<u32>] {
        &self.rows[u]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_c4_free(g: &Graph) -> bool {
        let n = g.n();
        // every 4-cycle a-b-c-d-a over ordered 4-tuples of distinct vertices
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let set = [a, b, c, d];
                        let distinct = (0..4).all(|i| (i + 1..4).all(|j| set[i] != set[j]));
                        if distinct && g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && g.has_edge(d, a) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Closed walks of length k through the edge u->v that visit k distinct
    /// vertices are exactly the k-cycles containing the edge.
    fn brute_force_edge_in_cycle(g: &Graph, u: usize, v: usize, k: usize) -> bool {
        fn extend(g: &Graph, path: &mut Vec<usize>, k: usize) -> bool {
            let last = *path.last().unwrap();
            if path.len() == k {
                return g.has_edge(last, path[0]);
            }
            for w in 0..g.n() {
                if g.has_edge(last, w) && !path.contains(&w) {
                    path.push(w);
                    if extend(g, path, k) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        extend(g, &mut vec![u, v], k)
    }

    fn graph_from_mask(n: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    edges.push((i, j));
                }
                bit += 1;
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_examples() {
        let c3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(c3.degrees(), vec![2, 2, 2]);
        let single = Graph::new(1, &[]).unwrap();
        assert_eq!(single.edge_count(), 0);
        assert!(single.is_connected());
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_c4_free());
    }

    #[test]
    fn build_rejects_bad_input_and_dedups() {
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(Graph::new(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::Empty));
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(cycle(5).unwrap().bfs_distances(0).unwrap(), vec![Some(0), Some(1), Some(2), Some(2), Some(1)]);
        let two_edges = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.bfs_distances(0).unwrap(), vec![Some(0), Some(1), None, None]);
        assert!(!two_edges.is_connected());
        let f2 = friendship(2).unwrap();
        assert!(f2.bfs_distances(0).unwrap().iter().all(|d| d.unwrap() <= 1));
        assert!(f2.bfs_distances(9).is_err());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(friendship(3).unwrap().degree(0), 6);
        let c5 = cycle(5).unwrap();
        assert_eq!((c5.min_degree(), c5.max_degree()), (2, 2));
    }

    #[test]
    fn edge_in_cycle_examples() {
        let c5 = cycle(5).unwrap();
        for &(u, v) in c5.edges() {
            assert!(c5.edge_in_cycle(u, v, 5).unwrap());
            assert!(!c5.edge_in_cycle(u, v, 3).unwrap());
            assert!(!c5.edge_in_cycle(u, v, 4).unwrap());
        }
        let c3 = cycle(3).unwrap();
        assert!(c3.edge_in_cycle(0, 1, 3).unwrap());
        let c6 = cycle(6).unwrap();
        for &(u, v) in c6.edges() {
            for k in 3..=5 {
                assert!(!c6.edge_in_cycle(u, v, k).unwrap());
            }
        }
        assert_eq!(c6.edge_in_cycle(0, 2, 3), Err(GraphError::NotAnEdge(0, 2)));
        assert_eq!(c6.edge_in_cycle(0, 1, 6), Err(GraphError::UnsupportedCycleLength(6)));
    }

    #[test]
    fn c4_and_triangle_free_examples() {
        assert!(friendship(3).unwrap().is_c4_free());
        assert!(!complete(4).unwrap().is_c4_free());
        let c5 = cycle(5).unwrap();
        assert!(c5.is_c4_free() && c5.is_triangle_free());
        assert!(!cycle(3).unwrap().is_triangle_free());
    }

    #[test]
    fn c4_free_and_cycle_membership_agree_with_brute_force() {
        // exhaustive for n <= 5, sampled masks for n = 6..8
        let mut cases = Vec::new();
        for n in 1..=5 {
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                cases.push(graph_from_mask(n, mask));
            }
        }
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for n in 6..=8 {
            for _ in 0..300 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                cases.push(graph_from_mask(n, state & ((1 << (n * (n - 1) / 2)) - 1)));
            }
        }
        for g in &cases {
            assert_eq!(g.is_c4_free(), brute_force_c4_free(g), "{g:?}");
            for &(u, v) in g.edges() {
                for k in 3..=5 {
                    assert_eq!(
                        g.edge_in_cycle(u, v, k).unwrap(),
                        brute_force_edge_in_cycle(g, u, v, k),
                        "{g:?} edge {u}-{v} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn distance_matrix_is_a_metric_on_components() {
        let g = Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 5)]).unwrap();
        let d = g.distance_matrix();
        for u in 0..7 {
            assert_eq!(d.get(u, u), Some(0));
            for v in 0..7 {
                assert_eq!(d.get(u, v), d.get(v, u));
                for w in 0..7 {
                    if let (Some(a), Some(b), Some(c)) = (d.get(u, v), d.get(v, w), d.get(u, w)) {
                        assert!(c <= a + b);
                    }
                }
            }
        }
        assert_eq!(d.get(0, 4), None);
        assert_eq!(d.get(6, 6), Some(0));
    }
}
