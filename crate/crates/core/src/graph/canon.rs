//! Canonical labelling for small graphs.
//!
//! Vertices are first split into cells by colour refinement; the canonical
//! form is the lexicographically smallest upper-triangle adjacency bitstring
//! (column-major, the graph6 bit order) over all orderings that list the
//! cells in refinement order. The cell order is an isomorphism invariant, so
//! equal forms mean isomorphic graphs. A branch-and-bound search over those
//! orderings prunes on prefixes and skips interchangeable twin vertices.

use std::fmt;

use super::{Graph, GraphError};

/// Default size guard for [`canonical_form`].
pub const DEFAULT_CANON_CAP: usize = 12;

/// Largest `n` whose bitstring fits in the packed representation.
const HARD_CAP: usize = 16;

/// Isomorphism-class key: vertex count plus the minimal adjacency bitstring
/// packed most-significant-bit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    bits: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    fn len(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// The bitstring as `'0'`/`'1'` characters.
    pub fn bitstring(&self) -> String {
        let len = self.len();
        (0..len).map(|i| if self.bits >> (len - 1 - i) & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        let len = self.len();
        let mut edges = Vec::new();
        let mut pos = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.bits >> (len - 1 - pos) & 1 == 1 {
                    edges.push((i, j));
                }
                pos += 1;
            }
        }
        Graph::new(self.n, &edges).expect("bitstring describes a simple graph")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.n, self.bitstring())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalForm, GraphError> {
    let n = g.n();
    let cap = cap.min(HARD_CAP);
    if n > cap {
        return Err(GraphError::TooLarge { n, cap });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w)).collect();
    let colors = refine_colors(&adj);

    let mut cell_of_position: Vec<usize> = colors.clone();
    cell_of_position.sort_unstable();

    let twins: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&w| w != u && adj[u] & !(1 << w) == adj[w] & !(1 << u)).fold(0u32, |m, w| m | 1 << w))
        .collect();

    let mut search = Search {
        adj: &adj,
        colors: &colors,
        cell_of_position: &cell_of_position,
        twins: &twins,
        order: Vec::with_capacity(n),
        columns: vec![0; n],
        best: None,
    };
    search.descend(0, false);
    let best = search.best.expect("at least one ordering exists");

    let mut bits = 0u128;
    for (k, &col) in best.iter().enumerate().skip(1) {
        bits = bits << k | col as u128;
    }
    Ok(CanonicalForm { n, bits })
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Stable colour refinement; colours are ranks of sorted signatures, so the
/// result depends only on the isomorphism class of the labelled structure.
fn refine_colors(adj: &[u32]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|m| m.count_ones() as usize).collect();
    let mut count = distinct(&colors);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = signatures.iter().map(|s| sorted.binary_search(s).expect("signature present")).collect();
        let next_count = sorted.len();
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

struct Search<'a> {
    adj: &'a [u32],
    colors: &'a [usize],
    cell_of_position: &'a [usize],
    twins: &'a [u32],
    order: Vec<usize>,
    /// `columns[k]`: adjacency of position k to positions `0..k`, position 0
    /// in the most significant of the k bits.
    columns: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Search<'_> {
    /// Returns true when `best` was replaced somewhere below this node.
    fn descend(&mut self, depth: usize, mut strictly_less: bool) -> bool {
        let n = self.adj.len();
        if depth == n {
            if self.best.is_none() || strictly_less {
                self.best = Some(self.columns.clone());
                return true;
            }
            return false;
        }
        let cell = self.cell_of_position[depth];
        let mut improved = false;
        let mut tried = 0u32;
        for c in 0..n {
            if self.colors[c] != cell || self.order.contains(&c) {
                continue;
            }
            if self.twins[c] & tried != 0 {
                continue;
            }
            tried |= 1 << c;

            let col = self.order.iter().fold(0u32, |acc, &p| acc << 1 | (self.adj[c] >> p & 1));
            let mut child_less = strictly_less;
            if let Some(best) = &self.best {
                if !strictly_less {
                    match col.cmp(&best[depth]) {
                        std::cmp::Ordering::Greater => continue,
                        std::cmp::Ordering::Less => child_less = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
            self.columns[depth] = col;
            self.order.push(c);
            if self.descend(depth + 1, child_less) {
                improved = true;
                // the new best shares this whole prefix
                strictly_less = false;
            }
            self.order.pop();
        }
        improved
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, friendship, graph_t, path};
    use proptest::prelude::*;

    fn shuffle(n: usize, seed: u64) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            perm.swap(i, (s % (i as u64 + 1)) as usize);
        }
        perm
    }

    #[test]
    fn relabelled_cycle_is_isomorphic() {
        let c5 = cycle(5).unwrap();
        let relabelled = c5.permute(&[3, 0, 4, 1, 2]).unwrap();
        assert!(is_isomorphic(&c5, &relabelled).unwrap());
        assert!(!is_isomorphic(&c5, &path(5).unwrap()).unwrap());
        assert!(!is_isomorphic(&friendship(2).unwrap(), &graph_t()).unwrap());
    }

    #[test]
    fn size_guard() {
        let big = cycle(13).unwrap();
        assert_eq!(canonical_form(&big), Err(GraphError::TooLarge { n: 13, cap: 12 }));
        assert!(canonical_form_with_cap(&big, 14).is_ok());
        assert!(canonical_form_with_cap(&cycle(17).unwrap(), 100).is_err());
    }

    #[test]
    fn representative_round_trips() {
        let t = graph_t();
        let form = canonical_form(&t).unwrap();
        let rep = form.to_graph();
        assert!(is_isomorphic(&rep, &t).unwrap());
        assert_eq!(canonical_form(&rep).unwrap(), form);
        assert_eq!(form.bitstring().len(), 21);
    }

    #[test]
    fn single_vertex_and_empty_graphs() {
        let one = Graph::new(1, &[]).unwrap();
        assert_eq!(canonical_form(&one).unwrap().bitstring(), "");
        let empty9 = Graph::new(9, &[]).unwrap();
        assert_eq!(canonical_form(&empty9).unwrap().bitstring(), "0".repeat(36));
    }

    /// Minimum over literally every permutation, for small n.
    fn brute_force_form(g: &Graph) -> u128 {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        permutations(g.n())
            .into_iter()
            .map(|order| {
                let mut bits = 0u128;
                for j in 1..g.n() {
                    for i in 0..j {
                        bits = bits << 1 | g.has_edge(order[i], order[j]) as u128;
                    }
                }
                bits
            })
            .min()
            .unwrap()
    }

    #[test]
    fn classes_match_brute_force_on_five_vertices() {
        // the refined form and the unrestricted minimum must induce the same
        // partition of all labelled 5-vertex graphs
        use std::collections::HashMap;
        let mut pairs: HashMap<u128, CanonicalForm> = HashMap::new();
        let mut reverse: HashMap<CanonicalForm, u128> = HashMap::new();
        for mask in 0..1u32 << 10 {
            let mut edges = Vec::new();
            let mut bit = 0;
            for j in 1..5 {
                for i in 0..j {
                    if mask >> bit & 1 == 1 {
                        edges.push((i, j));
                    }
                    bit += 1;
                }
            }
            let g = Graph::new(5, &edges).unwrap();
            let brute = brute_force_form(&g);
            let form = canonical_form(&g).unwrap();
            assert_eq!(*pairs.entry(brute).or_insert(form), form);
            assert_eq!(*reverse.entry(form).or_insert(brute), brute);
        }
        assert_eq!(pairs.len(), 34);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn invariant_under_relabelling(n in 1usize..=7, mask in any::<u32>(), seeds in prop::collection::vec(any::<u64>(), 20)) {
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
            let g = Graph::new(n, &edges).unwrap();
            let form = canonical_form(&g).unwrap();
            for seed in seeds {
                let h = g.permute(&shuffle(n, seed)).unwrap();
                prop_assert_eq!(canonical_form(&h).unwrap(), form);
            }
        }
    }
}
