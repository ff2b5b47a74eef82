//! Small-graph enumeration and computational checks of the structural
//! results on positively curved C4-free graphs.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::curvature::{
    curvature_report, kantorovich_dual, lazy_distribution, lemma31_value, lemma32_bound, lly_curvature_certificate,
    lly_via_limit, wasserstein, CurvatureError, CurvatureReport,
};
use crate::graph::{self, canonical_form, emit_graph6, CanonicalForm, Graph, GraphError};
use crate::lp::{int, ratio, Rational};

/// Largest vertex count the enumerator accepts.
pub const MAX_ENUMERATION_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("n = {0} is outside the supported range 1..={MAX_ENUMERATION_N}")]
    OutOfRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Curvature(#[from] CurvatureError),
}

/// Conjunctive filter applied to enumerated graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationFilter {
    pub require_connected: bool,
    pub min_degree: usize,
    pub c4_free: bool,
    pub triangle_free: bool,
    /// Upper limit on edges with a degree-one endpoint.
    pub max_pendant_edges: Option<usize>,
}

impl EnumerationFilter {
    pub fn connected() -> Self {
        Self { require_connected: true, ..Self::default() }
    }

    /// Connected, minimum degree at least 2, no 4-cycle.
    pub fn classification() -> Self {
        Self { require_connected: true, min_degree: 2, c4_free: true, ..Self::default() }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        (!self.require_connected || g.is_connected())
            && g.min_degree() >= self.min_degree
            && (!self.c4_free || g.is_c4_free())
            && (!self.triangle_free || g.is_triangle_free())
            && self.max_pendant_edges.is_none_or(|cap| pendant_edge_count(g) <= cap)
    }
}

pub fn pendant_edge_count(g: &Graph) -> usize {
    g.edges().iter().filter(|&&(u, v)| g.degree(u) == 1 || g.degree(v) == 1).count()
}

/// One representative per isomorphism class of `n`-vertex graphs passing
/// `filter`, in canonical-form order. Representatives are canonically
/// labelled.
///
/// Graphs are grown one vertex at a time. Every graph arises from a
/// one-vertex-smaller graph by adding a vertex, and every connected graph
/// from a connected one (delete a non-cut vertex), so each level only keeps
/// the classes that can still lead to a survivor. C4-freeness and
/// triangle-freeness are inherited by subgraphs and prune whole branches.
pub fn enumerate_graphs(n: usize, filter: &EnumerationFilter) -> Result<Vec<Graph>, ClassifyError> {
    Ok(enumerate_with_forms(n, filter)?.into_values().collect())
}

fn enumerate_with_forms(n: usize, filter: &EnumerationFilter) -> Result<BTreeMap<CanonicalForm, Graph>, ClassifyError> {
    if n == 0 || n > MAX_ENUMERATION_N {
        return Err(ClassifyError::OutOfRange(n));
    }
    let single = Graph::new(1, &[])?;
    let mut level: BTreeMap<CanonicalForm, Graph> = BTreeMap::from([(canonical_form(&single)?, single)]);
    for k in 1..n {
        let children: Vec<(CanonicalForm, Graph)> = level
            .par_iter()
            .map(|(_, parent)| extensions(parent, k, filter))
            .collect::<Result<Vec<_>, ClassifyError>>()?
            .into_iter()
            .flatten()
            .collect();
        level = children.into_iter().collect();
    }
    level.retain(|_, g| filter.accepts(g));
    Ok(level)
}

fn extensions(
    parent: &Graph,
    k: usize,
    filter: &EnumerationFilter,
) -> Result<Vec<(CanonicalForm, Graph)>, ClassifyError> {
    let mut out = Vec::new();
    let first = if filter.require_connected { 1u32 } else { 0 };
    'subsets: for mask in first..1u32 << k {
        let targets: Vec<usize> = (0..k).filter(|&v| mask >> v & 1 == 1).collect();
        for (i, &a) in targets.iter().enumerate() {
            for &b in &targets[i + 1..] {
                if filter.triangle_free && parent.has_edge(a, b) {
                    continue 'subsets;
                }
                if filter.c4_free && parent.common_neighbor_count(a, b) > 0 {
                    continue 'subsets;
                }
            }
        }
        let child = parent.with_new_vertex(&targets)?;
        let form = canonical_form(&child)?;
        out.push((form, form.to_graph()));
    }
    Ok(out)
}

/// A graph kept by the classification together with its curvature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Survivor {
    pub form: CanonicalForm,
    pub graph: Graph,
    pub report: CurvatureReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationResult {
    pub n_max: usize,
    /// Sorted by canonical form.
    pub survivors: Vec<Survivor>,
    pub matched_known_set: bool,
}

/// The graphs the classification expects: C3, C5, F2, F3 and T.
pub fn known_positive_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("C3", graph::cycle(3).expect("valid")),
        ("C5", graph::cycle(5).expect("valid")),
        ("F2", graph::friendship(2).expect("valid")),
        ("F3", graph::friendship(3).expect("valid")),
        ("T", graph::graph_t()),
    ]
}

/// Enumerates connected C4-free graphs with minimum degree 2 on
/// `3..=n_max` vertices and keeps the positively curved ones.
pub fn classify_theorem_15(n_max: usize) -> Result<ClassificationResult, ClassifyError> {
    if !(3..=MAX_ENUMERATION_N).contains(&n_max) {
        return Err(ClassifyError::OutOfRange(n_max));
    }
    let mut candidates = Vec::new();
    for n in 3..=n_max {
        candidates.extend(enumerate_with_forms(n, &EnumerationFilter::classification())?);
    }
    let reports = candidates.par_iter().map(|(_, g)| curvature_report(g)).collect::<Result<Vec<_>, _>>()?;
    let survivors: Vec<Survivor> = candidates
        .into_iter()
        .zip(reports)
        .filter(|(_, r)| r.positively_curved)
        .map(|((form, graph), report)| Survivor { form, graph, report })
        .collect();

    let found: BTreeSet<CanonicalForm> = survivors.iter().map(|s| s.form).collect();
    let expected = known_positive_graphs()
        .into_iter()
        .filter(|(_, g)| g.n() <= n_max)
        .map(|(_, g)| canonical_form(&g))
        .collect::<Result<BTreeSet<_>, _>>()?;
    Ok(ClassificationResult { n_max, survivors, matched_known_set: found == expected })
}

/// Runs [`classify_theorem_15`] and reports every survivor outside the
/// known set and every known graph that did not survive.
pub fn verify_theorem_15(n_max: usize) -> Result<(ClassificationResult, VerificationReport), ClassifyError> {
    let result = classify_theorem_15(n_max)?;
    let mut report = VerificationReport::new("theorem15");
    let known = known_positive_graphs()
        .into_iter()
        .filter(|(_, g)| g.n() <= n_max)
        .map(|(name, g)| Ok((canonical_form(&g)?, name, g)))
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    for s in &result.survivors {
        report.graphs_checked += 1;
        report.instances_checked += 1;
        if !known.iter().any(|(form, _, _)| *form == s.form) {
            report.violation(&s.graph, None, format!("unexpected survivor, minimum curvature {}", s.report.min_kappa));
        }
    }
    for (form, name, g) in &known {
        if !result.survivors.iter().any(|s| s.form == *form) {
            report.violation(g, None, format!("{name} did not survive"));
        }
    }
    Ok((result, report))
}

/// A counterexample found by one of the verification suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub graph6: String,
    pub pair: Option<(usize, usize)>,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub graphs_checked: usize,
    /// Edges, pairs or graphs examined, depending on the suite.
    pub instances_checked: usize,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    fn new(suite: &str) -> Self {
        Self { suite: suite.into(), graphs_checked: 0, instances_checked: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, g: &Graph, pair: Option<(usize, usize)>, message: String) {
        self.violations.push(Violation { graph6: emit_graph6(g), pair, message });
    }

    fn absorb(&mut self, other: VerificationReport) {
        self.graphs_checked += other.graphs_checked;
        self.instances_checked += other.instances_checked;
        self.violations.extend(other.violations);
    }
}

/// Runs `check` on every graph in parallel and merges the per-graph reports
/// in corpus order.
fn per_graph<F>(suite: &str, corpus: &[Graph], check: F) -> Result<VerificationReport, ClassifyError>
where
    F: Fn(&Graph, &mut VerificationReport) -> Result<(), ClassifyError> + Sync,
{
    let parts = corpus
        .par_iter()
        .map(|g| {
            let mut part = VerificationReport::new(suite);
            check(g, &mut part)?;
            Ok(part)
        })
        .collect::<Result<Vec<_>, ClassifyError>>()?;
    let mut report = VerificationReport::new(suite);
    for part in parts {
        report.absorb(part);
    }
    Ok(report)
}

/// Edges outside every 3-, 4- and 5-cycle have curvature exactly
/// `2/d_x + 2/d_y - 2`.
pub fn verify_lemma_31(corpus: &[Graph]) -> Result<VerificationReport, ClassifyError> {
    per_graph("lemma31", corpus, |g, report| {
        report.graphs_checked += 1;
        let d = g.distance_matrix();
        for &(x, y) in g.edges() {
            if (3..=5).any(|k| g.edge_in_cycle(x, y, k).unwrap_or(true)) {
                continue;
            }
            report.instances_checked += 1;
            let (kappa, _) = lly_curvature_certificate(g, &d, x, y)?;
            let expected = lemma31_value(g.degree(x), g.degree(y))?;
            if kappa != expected {
                report.violation(g, Some((x, y)), format!("kappa {kappa}, closed form {expected}"));
            }
        }
        Ok(())
    })
}

/// Edges outside every 3- and 4-cycle have curvature at most
/// `1/d_x + 2/d_y - 1`, in both orientations.
pub fn verify_lemma_32(corpus: &[Graph]) -> Result<VerificationReport, ClassifyError> {
    per_graph("lemma32", corpus, |g, report| {
        report.graphs_checked += 1;
        let d = g.distance_matrix();
        for &(x, y) in g.edges() {
            if (3..=4).any(|k| g.edge_in_cycle(x, y, k).unwrap_or(true)) {
                continue;
            }
            report.instances_checked += 1;
            let (kappa, _) = lly_curvature_certificate(g, &d, x, y)?;
            let (dx, dy) = (g.degree(x), g.degree(y));
            let bound = lemma32_bound(dx, dy)?.min(lemma32_bound(dy, dx)?);
            if kappa > bound {
                report.violation(g, Some((x, y)), format!("kappa {kappa} exceeds bound {bound}"));
            }
        }
        Ok(())
    })
}

/// In a positively curved C4-free graph, an edge whose endpoints have
/// degrees at least 4 and at least 2 lies in a triangle. Graphs outside the
/// hypothesis are counted but not examined further.
pub fn verify_lemma_33(corpus: &[Graph]) -> Result<VerificationReport, ClassifyError> {
    per_graph("lemma33", corpus, |g, report| {
        report.graphs_checked += 1;
        if !g.is_connected() || g.edge_count() == 0 || !g.is_c4_free() {
            return Ok(());
        }
        if !curvature_report(g)?.positively_curved {
            return Ok(());
        }
        for &(u, v) in g.edges() {
            for (x, y) in [(u, v), (v, u)] {
                if g.degree(x) >= 4 && g.degree(y) >= 2 {
                    report.instances_checked += 1;
                    if !g.edge_in_cycle(x, y, 3)? {
                        report.violation(g, Some((x, y)), "edge lies in no triangle".into());
                    }
                }
            }
        }
        Ok(())
    })
}

/// On connected graphs, every pair's curvature is at least the minimum edge
/// curvature.
pub fn verify_edge_reduction(corpus: &[Graph]) -> Result<VerificationReport, ClassifyError> {
    per_graph("lemma21", corpus, |g, report| {
        report.graphs_checked += 1;
        if !g.is_connected() || g.edge_count() == 0 {
            return Ok(());
        }
        let min_edge = curvature_report(g)?.min_kappa;
        let d = g.distance_matrix();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                if g.has_edge(x, y) {
                    continue;
                }
                report.instances_checked += 1;
                let (kappa, _) = lly_curvature_certificate(g, &d, x, y)?;
                if kappa < min_edge {
                    report.violation(g, Some((x, y)), format!("kappa {kappa} below edge minimum {min_edge}"));
                }
            }
        }
        Ok(())
    })
}

/// Idleness values used by [`verify_duality`].
fn duality_alphas() -> Vec<Rational> {
    vec![int(0), ratio(1, 3), ratio(1, 2), ratio(4, 5)]
}

/// Primal and dual transport values agree, and both certificates check out,
/// for the lazy walks of every edge at several idleness values.
pub fn verify_duality(corpus: &[Graph]) -> Result<VerificationReport, ClassifyError> {
    per_graph("duality", corpus, |g, report| {
        report.graphs_checked += 1;
        let d = g.distance_matrix();
        for &(x, y) in g.edges() {
            for alpha in duality_alphas() {
                report.instances_checked += 1;
                let mx = lazy_distribution(g, x, &alpha)?;
                let my = lazy_distribution(g, y, &alpha)?;
                let (w, plan) = wasserstein(&mx, &my, &d)?;
                let (w_dual, potential) = kantorovich_dual(&mx, &my, &d)?;
                if w != w_dual || !plan.check(&mx, &my, &d) || !potential.check(&mx, &my, &d) {
                    report.violation(g, Some((x, y)), format!("alpha {alpha}: primal {w}, dual {w_dual}"));
                }
            }
        }
        Ok(())
    })
}

/// Limit-free curvature equals the alpha-limit on every edge.
pub fn verify_oracle(corpus: &[Graph]) -> Result<VerificationReport, ClassifyError> {
    per_graph("oracle", corpus, |g, report| {
        report.graphs_checked += 1;
        let d = g.distance_matrix();
        for &(x, y) in g.edges() {
            report.instances_checked += 1;
            let (direct, _) = lly_curvature_certificate(g, &d, x, y)?;
            let limit = lly_via_limit(g, x, y)?;
            if direct != limit {
                report.violation(g, Some((x, y)), format!("limit-free {direct}, limit {limit}"));
            }
        }
        Ok(())
    })
}

/// Classification survivors have maximum degree at most 6, and once
/// 7-vertex graphs are included the bound is attained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeBoundReport {
    pub n_max: usize,
    pub max_degree: usize,
    /// graph6 strings of the survivors attaining `max_degree`.
    pub attained_by: Vec<String>,
    pub verification: VerificationReport,
}

pub fn verify_theorem_14(n_max: usize) -> Result<DegreeBoundReport, ClassifyError> {
    let result = classify_theorem_15(n_max)?;
    degree_bound_report(&result)
}

/// Same as [`verify_theorem_14`] on an existing classification run.
pub fn degree_bound_report(result: &ClassificationResult) -> Result<DegreeBoundReport, ClassifyError> {
    let mut verification = VerificationReport::new("theorem14");
    let max_degree = result.survivors.iter().map(|s| s.graph.max_degree()).max().unwrap_or(0);
    for s in &result.survivors {
        verification.graphs_checked += 1;
        verification.instances_checked += 1;
        if s.graph.max_degree() > 6 {
            verification.violation(&s.graph, None, format!("maximum degree {}", s.graph.max_degree()));
        }
    }
    if result.n_max >= 7 && max_degree != 6 {
        let message = format!("largest survivor degree is {max_degree}, expected 6");
        verification.violations.push(Violation { graph6: String::new(), pair: None, message });
    }
    let attained_by =
        result.survivors.iter().filter(|s| s.graph.max_degree() == max_degree).map(|s| emit_graph6(&s.graph)).collect();
    Ok(DegreeBoundReport { n_max: result.n_max, max_degree, attained_by, verification })
}

/// Vertex count searched by [`verify_pendant_corollary`].
const PENDANT_SEARCH_N: usize = 8;

/// `F3'` is positively curved, C4-free, has maximum degree 7 and exactly
/// one pendant edge; and no positively curved connected C4-free graph with
/// exactly one pendant edge on up to 8 vertices exceeds degree 7.
pub fn verify_pendant_corollary() -> Result<VerificationReport, ClassifyError> {
    let mut report = VerificationReport::new("pendant");
    let f3p = graph::graph_f3_prime();
    report.graphs_checked += 1;
    report.instances_checked += 1;
    let r = curvature_report(&f3p)?;
    if !r.positively_curved {
        report.violation(&f3p, None, format!("minimum curvature {}", r.min_kappa));
    }
    if f3p.max_degree() != 7 || pendant_edge_count(&f3p) != 1 || !f3p.is_c4_free() {
        report.violation(&f3p, None, "not a C4-free graph with degree 7 and one pendant edge".into());
    }

    let filter = EnumerationFilter {
        require_connected: true,
        min_degree: 1,
        c4_free: true,
        triangle_free: false,
        max_pendant_edges: Some(1),
    };
    for n in 3..=PENDANT_SEARCH_N {
        let candidates: Vec<Graph> =
            enumerate_graphs(n, &filter)?.into_iter().filter(|g| pendant_edge_count(g) == 1).collect();
        let part = per_graph("pendant", &candidates, |g, part| {
            part.graphs_checked += 1;
            part.instances_checked += 1;
            let r = curvature_report(g)?;
            if r.positively_curved && g.max_degree() > 7 {
                part.violation(g, None, format!("maximum degree {}", g.max_degree()));
            }
            Ok(())
        })?;
        report.absorb(part);
    }
    Ok(report)
}

/// Every named family member used by the verification suites: cycles
/// `C3..C10`, paths, stars, complete graphs, friendship graphs and the fixed
/// graphs T, F3', G1 and F.
pub fn named_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    out.extend((3..=10).map(|n| graph::cycle(n).expect("valid")));
    out.extend((2..=6).map(|n| graph::path(n).expect("valid")));
    out.extend((3..=6).map(|n| graph::star(n).expect("valid")));
    out.extend((2..=5).map(|n| graph::complete(n).expect("valid")));
    out.extend((1..=4).map(|k| graph::friendship(k).expect("valid")));
    out.extend([graph::graph_t(), graph::graph_f3_prime(), graph::graph_g1(), graph::graph_f()]);
    out
}

/// All connected graphs on `2..=n_max` vertices, one per isomorphism class.
pub fn connected_corpus(n_max: usize) -> Result<Vec<Graph>, ClassifyError> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        out.extend(enumerate_graphs(n, &EnumerationFilter::connected())?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, friendship, graph_f3_prime, is_isomorphic, path};

    /// Independent count: all labelled graphs on n vertices, connectivity by
    /// union-find, classes by minimising over every permutation.
    fn brute_force_connected_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let perms = permutations(n);
        let mut classes = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut Vec<usize>, v: usize) -> usize {
                if p[v] != v {
                    let r = find(p, p[v]);
                    p[v] = r;
                }
                p[v]
            }
            for &(a, b) in &edges {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
            let root = find(&mut parent, 0);
            if !(0..n).all(|v| find(&mut parent, v) == root) {
                continue;
            }
            let key = perms
                .iter()
                .map(|p| {
                    let mut relabelled: Vec<(usize, usize)> =
                        edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                    relabelled.sort_unstable();
                    relabelled
                })
                .min()
                .unwrap();
            classes.insert(key);
        }
        classes.len()
    }

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

    #[test]
    fn connected_counts_match_brute_force() {
        for n in 1..=5 {
            let fast = enumerate_graphs(n, &EnumerationFilter::connected()).unwrap().len();
            assert_eq!(fast, brute_force_connected_classes(n), "n = {n}");
        }
        assert_eq!(enumerate_graphs(3, &EnumerationFilter::connected()).unwrap().len(), 2);
        assert_eq!(enumerate_graphs(4, &EnumerationFilter::connected()).unwrap().len(), 6);
    }

    #[test]
    fn unfiltered_counts() {
        // graph counts on 1..=6 vertices
        let counts: Vec<usize> =
            (1..=6).map(|n| enumerate_graphs(n, &EnumerationFilter::default()).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn filters_and_range() {
        let five = enumerate_graphs(5, &EnumerationFilter::classification()).unwrap();
        assert!(five.iter().any(|g| is_isomorphic(g, &cycle(5).unwrap()).unwrap()));
        assert!(five.iter().any(|g| is_isomorphic(g, &friendship(2).unwrap()).unwrap()));
        assert!(five.iter().all(|g| g.is_c4_free() && g.min_degree() >= 2 && g.is_connected()));
        let tri_free = EnumerationFilter { triangle_free: true, ..EnumerationFilter::connected() };
        assert!(enumerate_graphs(6, &tri_free).unwrap().iter().all(Graph::is_triangle_free));
        let pendant = EnumerationFilter { max_pendant_edges: Some(0), ..EnumerationFilter::connected() };
        assert!(enumerate_graphs(4, &pendant).unwrap().iter().all(|g| pendant_edge_count(g) == 0));
        assert_eq!(enumerate_graphs(10, &EnumerationFilter::default()), Err(ClassifyError::OutOfRange(10)));
        assert_eq!(enumerate_graphs(0, &EnumerationFilter::default()), Err(ClassifyError::OutOfRange(0)));
        assert!(classify_theorem_15(2).is_err());
    }

    #[test]
    fn classification_up_to_five() {
        let result = classify_theorem_15(5).unwrap();
        assert!(result.matched_known_set);
        assert_eq!(result.survivors.len(), 3);
        let again = classify_theorem_15(5).unwrap();
        assert_eq!(result, again);
    }

    #[test]
    fn degree_bound_small() {
        let r = verify_theorem_14(3).unwrap();
        assert_eq!(r.max_degree, 2);
        assert!(r.verification.passed());
    }

    #[test]
    fn lemma_suites_on_small_corpora() {
        let cycles: Vec<Graph> = (6..=8).map(|n| cycle(n).unwrap()).collect();
        let r = verify_lemma_31(&cycles).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 6 + 7 + 8);
        let hubs = vec![friendship(2).unwrap(), friendship(3).unwrap(), graph_f3_prime()];
        let r = verify_lemma_33(&hubs).unwrap();
        assert!(r.passed());
        assert!(r.instances_checked > 0);
        assert!(verify_lemma_32(&[path(4).unwrap()]).unwrap().passed());
    }

    #[test]
    fn suites_report_rather_than_fail() {
        // G1 is not positively curved, so the triangle lemma has nothing to check
        let r = verify_lemma_33(&[graph::graph_g1()]).unwrap();
        assert_eq!((r.graphs_checked, r.instances_checked), (1, 0));
    }
}
