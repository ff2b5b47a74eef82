//! Lazy random walks, optimal transport on graphs and Ricci curvature.
//!
//! The transport distance is solved twice: as the primal coupling LP in
//! [`wasserstein`] and as the Lipschitz-potential LP in [`kantorovich_dual`].
//! Lin-Lu-Yau curvature comes from the limit-free Laplacian formulation in
//! [`lly_curvature`]; [`lly_via_limit`] recomputes it from alpha-curvatures
//! as an independent check.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{DistanceMatrix, Graph, GraphError};
use crate::lp::{self, int, Bounds, LinearProgram, LpError, LpStatus, Rational, Relation};

/// Largest lazy-walk index tried by [`lly_via_limit`].
const LIMIT_CAP: u64 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurvatureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("idleness {0} is outside [0, 1)")]
    AlphaOutOfRange(Rational),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("curvature needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {0} and {1} lie in different components")]
    Unreachable(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has no edges")]
    NoEdges,
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
    #[error("potential has no value at vertex {0}")]
    MissingPotential(usize),
    #[error("potential violates the Lipschitz bound on {{{u}, {v}}}: |{diff}| > {distance}")]
    NotLipschitz { u: usize, v: usize, diff: Rational, distance: u32 },
    #[error("potential has f({y}) - f({x}) = {actual}, expected {expected}")]
    GradientMismatch { x: usize, y: usize, actual: Rational, expected: u32 },
    #[error("degree must be positive")]
    NonPositiveDegree,
    #[error("limit did not stabilise by index {0}")]
    NoStabilization(u64),
    #[error("internal solver returned {0:?}")]
    Solver(LpStatus),
}

/// Finitely supported probability measure on vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    support: Vec<(usize, Rational)>,
}

impl Distribution {
    /// Positive masses on distinct vertices, summing to exactly one.
    pub fn new(mut entries: Vec<(usize, Rational)>) -> Result<Self, CurvatureError> {
        entries.sort_by_key(|e| e.0);
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(CurvatureError::InvalidDistribution("repeated vertex".into()));
        }
        if let Some((v, m)) = entries.iter().find(|(_, m)| !m.is_positive()) {
            return Err(CurvatureError::InvalidDistribution(format!("mass {m} at vertex {v}")));
        }
        let total: Rational = entries.iter().map(|e| &e.1).sum();
        if !total.is_one() {
            return Err(CurvatureError::InvalidDistribution(format!("total mass {total}")));
        }
        Ok(Self { support: entries })
    }

    pub fn point(v: usize) -> Self {
        Self { support: vec![(v, Rational::one())] }
    }

    /// `(vertex, mass)` pairs sorted by vertex.
    pub fn support(&self) -> &[(usize, Rational)] {
        &self.support
    }

    pub fn mass(&self, v: usize) -> Rational {
        self.support
            .binary_search_by_key(&v, |e| e.0)
            .map(|i| self.support[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }
}

/// Transport plan `A(x, y)` and its cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransportCertificate {
    /// Non-zero entries `(source, target, mass)`.
    pub coupling: Vec<(usize, usize, Rational)>,
    pub value: Rational,
}

impl TransportCertificate {
    /// Marginals reproduce `m1` and `m2` and `value` is the plan's cost.
    pub fn check(&self, m1: &Distribution, m2: &Distribution, d: &DistanceMatrix) -> bool {
        let mut rows: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cols: BTreeMap<usize, Rational> = BTreeMap::new();
        let mut cost = Rational::zero();
        for (s, t, mass) in &self.coupling {
            if mass.is_negative() {
                return false;
            }
            let Some(dist) = d.get(*s, *t) else { return false };
            *rows.entry(*s).or_insert_with(Rational::zero) += mass;
            *cols.entry(*t).or_insert_with(Rational::zero) += mass;
            cost += mass * int(dist as i64);
        }
        let matches = |sums: &BTreeMap<usize, Rational>, m: &Distribution| {
            let nonzero: Vec<_> = sums.iter().filter(|(_, v)| !v.is_zero()).collect();
            nonzero.len() == m.support().len()
                && nonzero.iter().zip(m.support()).all(|((v, s), (w, t))| *v == w && *s == t)
        };
        matches(&rows, m1) && matches(&cols, m2) && cost == self.value
    }
}

/// Vertex potential `f`.
pub type Potential = BTreeMap<usize, Rational>;

/// 1-Lipschitz potential and its Kantorovich value `sum f (m1 - m2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LipschitzCertificate {
    pub potential: Potential,
    pub value: Rational,
}

impl LipschitzCertificate {
    pub fn check(&self, m1: &Distribution, m2: &Distribution, d: &DistanceMatrix) -> bool {
        let support = union_support(m1, m2);
        let Some(values) = support.iter().map(|v| self.potential.get(v)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        let lipschitz = support.iter().enumerate().all(|(i, &u)| {
            support[i + 1..].iter().enumerate().all(|(k, &v)| match d.get(u, v) {
                Some(dist) => (values[i] - values[i + 1 + k]).abs() <= int(dist as i64),
                None => false,
            })
        });
        let value: Rational = support.iter().zip(&values).map(|(&v, f)| *f * (m1.mass(v) - m2.mass(v))).sum();
        lipschitz && value == self.value
    }
}

fn union_support(m1: &Distribution, m2: &Distribution) -> Vec<usize> {
    let mut vs: Vec<usize> = m1.support().iter().chain(m2.support()).map(|e| e.0).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

fn check_alpha(alpha: &Rational) -> Result<(), CurvatureError> {
    if alpha.is_negative() || *alpha >= Rational::one() {
        return Err(CurvatureError::AlphaOutOfRange(alpha.clone()));
    }
    Ok(())
}

/// `m_x^alpha`: mass `alpha` at `x`, `(1 - alpha) / d_x` on each neighbour.
pub fn lazy_distribution(g: &Graph, x: usize, alpha: &Rational) -> Result<Distribution, CurvatureError> {
    g.check_vertex(x)?;
    check_alpha(alpha)?;
    let dx = g.degree(x);
    if dx == 0 {
        return Err(CurvatureError::IsolatedVertex(x));
    }
    let share = (Rational::one() - alpha) / int(dx as i64);
    let mut support: Vec<(usize, Rational)> = g.neighbors(x).iter().map(|&w| (w, share.clone())).collect();
    if alpha.is_positive() {
        support.push((x, alpha.clone()));
    }
    Distribution::new(support)
}

fn require_optimal(sol: lp::LpSolution) -> Result<(Rational, Vec<Rational>), CurvatureError> {
    match (sol.status, sol.value, sol.primal) {
        (LpStatus::Optimal, Some(v), Some(x)) => Ok((v, x)),
        (status, _, _) => Err(CurvatureError::Solver(status)),
    }
}

fn pairwise_distances(vertices: &[usize], d: &DistanceMatrix) -> Result<Vec<Vec<u32>>, CurvatureError> {
    vertices
        .iter()
        .map(|&u| vertices.iter().map(|&v| d.get(u, v).ok_or(CurvatureError::Unreachable(u, v))).collect())
        .collect()
}

/// Transport distance `W(m1, m2)` from the coupling LP.
pub fn wasserstein(
    m1: &Distribution,
    m2: &Distribution,
    d: &DistanceMatrix,
) -> Result<(Rational, TransportCertificate), CurvatureError> {
    let sources = m1.support();
    let targets = m2.support();
    let cols = targets.len();
    let mut costs = Vec::with_capacity(sources.len() * cols);
    for (s, _) in sources {
        for (t, _) in targets {
            let dist = d.get(*s, *t).ok_or(CurvatureError::Unreachable(*s, *t))?;
            costs.push(int(dist as i64));
        }
    }
    let vars = costs.len();
    let mut program = LinearProgram::minimize(costs);
    for (i, (_, mass)) in sources.iter().enumerate() {
        let mut row = vec![Rational::zero(); vars];
        row[i * cols..(i + 1) * cols].iter_mut().for_each(|c| *c = Rational::one());
        program.constrain(row, Relation::Eq, mass.clone());
    }
    for (j, (_, mass)) in targets.iter().enumerate() {
        let mut row = vec![Rational::zero(); vars];
        (0..sources.len()).for_each(|i| row[i * cols + j] = Rational::one());
        program.constrain(row, Relation::Eq, mass.clone());
    }
    let (value, plan) = require_optimal(lp::solve(&program)?)?;
    let coupling = plan
        .into_iter()
        .enumerate()
        .filter(|(_, m)| !m.is_zero())
        .map(|(k, m)| (sources[k / cols].0, targets[k % cols].0, m))
        .collect();
    Ok((value.clone(), TransportCertificate { coupling, value }))
}

/// Transport distance from the dual LP: maximise `sum f (m1 - m2)` over
/// 1-Lipschitz `f` on the joint support, with the smallest support vertex
/// pinned to zero.
pub fn kantorovich_dual(
    m1: &Distribution,
    m2: &Distribution,
    d: &DistanceMatrix,
) -> Result<(Rational, LipschitzCertificate), CurvatureError> {
    let support = union_support(m1, m2);
    let dist = pairwise_distances(&support, d)?;
    let k = support.len();
    let objective: Vec<Rational> = support.iter().map(|&v| m2.mass(v) - m1.mass(v)).collect();
    let mut program = LinearProgram::minimize(objective);
    program.set_bounds(0, Bounds::fixed(Rational::zero()));
    for i in 1..k {
        program.set_bounds(i, Bounds::free());
    }
    for i in 0..k {
        for j in 0..k {
            if i != j {
                let mut row = vec![Rational::zero(); k];
                row[i] = Rational::one();
                row[j] = -Rational::one();
                program.constrain(row, Relation::Le, int(dist[i][j] as i64));
            }
        }
    }
    let (neg_value, f) = require_optimal(lp::solve(&program)?)?;
    let value = -neg_value;
    let potential = support.into_iter().zip(f).collect();
    Ok((value.clone(), LipschitzCertificate { potential, value }))
}

fn pair_distance(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> Result<u32, CurvatureError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(CurvatureError::SameVertex(x));
    }
    d.get(x, y).ok_or(CurvatureError::Unreachable(x, y))
}

/// `kappa_alpha(x, y) = 1 - W(m_x^alpha, m_y^alpha) / d(x, y)`.
pub fn alpha_ricci(g: &Graph, x: usize, y: usize, alpha: &Rational) -> Result<Rational, CurvatureError> {
    alpha_ricci_with(g, &g.distance_matrix(), x, y, alpha)
}

pub fn alpha_ricci_with(
    g: &Graph,
    d: &DistanceMatrix,
    x: usize,
    y: usize,
    alpha: &Rational,
) -> Result<Rational, CurvatureError> {
    let dxy = pair_distance(g, d, x, y)?;
    let mx = lazy_distribution(g, x, alpha)?;
    let my = lazy_distribution(g, y, alpha)?;
    let (w, _) = wasserstein(&mx, &my, d)?;
    Ok(Rational::one() - w / int(dxy as i64))
}

/// Lin-Lu-Yau curvature of the pair `{x, y}`.
pub fn lly_curvature(g: &Graph, x: usize, y: usize) -> Result<Rational, CurvatureError> {
    lly_curvature_certificate(g, &g.distance_matrix(), x, y).map(|(k, _)| k)
}

/// Lin-Lu-Yau curvature together with an optimal potential.
///
/// Minimises `(Laplacian f(x) - Laplacian f(y)) / d(x, y)` over 1-Lipschitz
/// `f` on `N[x] ∪ N[y]` (graph distances) with `f(x) = 0` and
/// `f(y) = d(x, y)`. Each free value is shifted by its lower Lipschitz bound
/// `-d(x, v)`, so the program starts from a feasible slack basis.
pub fn lly_curvature_certificate(
    g: &Graph,
    d: &DistanceMatrix,
    x: usize,
    y: usize,
) -> Result<(Rational, Potential), CurvatureError> {
    let dxy = pair_distance(g, d, x, y)?;
    for v in [x, y] {
        if g.degree(v) == 0 {
            return Err(CurvatureError::IsolatedVertex(v));
        }
    }
    let mut support: Vec<usize> = g.closed_neighborhood(x);
    support.extend(g.closed_neighborhood(y));
    support.sort_unstable();
    support.dedup();
    let index = |v: usize| support.binary_search(&v).expect("vertex in support");
    let dist = pairwise_distances(&support, d)?;
    let k = support.len();
    let scale = int(dxy as i64);

    let mut objective = vec![Rational::zero(); k];
    let inv_dx = Rational::new(1.into(), (g.degree(x) as i64).into());
    for &w in g.neighbors(x) {
        objective[index(w)] += &inv_dx;
    }
    objective[index(x)] -= Rational::one();
    let inv_dy = Rational::new(1.into(), (g.degree(y) as i64).into());
    for &w in g.neighbors(y) {
        objective[index(w)] -= &inv_dy;
    }
    objective[index(y)] += Rational::one();
    objective.iter_mut().for_each(|c| *c /= &scale);

    let mut program = LinearProgram::minimize(objective);
    let (ix, iy) = (index(x), index(y));
    for (i, &v) in support.iter().enumerate() {
        let bounds = if i == ix {
            Bounds::fixed(Rational::zero())
        } else if i == iy {
            Bounds::fixed(scale.clone())
        } else {
            Bounds { lower: Some(-int(dist[ix][i] as i64)), upper: None }
        };
        debug_assert_eq!(support[i], v);
        program.set_bounds(i, bounds);
    }
    for i in 0..k {
        for j in 0..k {
            // pairs involving x are already expressed by the bounds
            if i != j && i != ix && j != ix {
                let mut row = vec![Rational::zero(); k];
                row[i] = Rational::one();
                row[j] = -Rational::one();
                program.constrain(row, Relation::Le, int(dist[i][j] as i64));
            }
        }
    }
    for i in 0..k {
        if i != ix && i != iy {
            let mut row = vec![Rational::zero(); k];
            row[i] = Rational::one();
            program.constrain(row, Relation::Le, int(dist[ix][i] as i64));
        }
    }
    let (value, f) = require_optimal(lp::solve(&program)?)?;
    Ok((value, support.into_iter().zip(f).collect()))
}

/// Lin-Lu-Yau curvature as the limit of `kappa_alpha / (1 - alpha)`.
///
/// Evaluates at `alpha = 1 - 1/k` for `k = max(d_x, d_y) + 2, +3, ...` and
/// returns once two consecutive values agree exactly. Reaching the index cap
/// is reported as an error.
pub fn lly_via_limit(g: &Graph, x: usize, y: usize) -> Result<Rational, CurvatureError> {
    let d = g.distance_matrix();
    pair_distance(g, &d, x, y)?;
    let start = g.degree(x).max(g.degree(y)) as u64 + 2;
    let scaled = |k: u64| -> Result<Rational, CurvatureError> {
        let alpha = Rational::one() - Rational::new(1.into(), (k as i64).into());
        Ok(alpha_ricci_with(g, &d, x, y, &alpha)? * int(k as i64))
    };
    let mut previous = scaled(start)?;
    for k in start + 1..=LIMIT_CAP {
        let current = scaled(k)?;
        if current == previous {
            return Ok(current);
        }
        previous = current;
    }
    Err(CurvatureError::NoStabilization(LIMIT_CAP))
}

/// `(Laplacian f(x) - Laplacian f(y)) / d(x, y)` for a given feasible
/// potential; an upper bound on the Lin-Lu-Yau curvature.
///
/// `f` must cover `N[x] ∪ N[y]`, be 1-Lipschitz on every pair of vertices
/// it covers and satisfy `f(y) - f(x) = d(x, y)`.
pub fn upper_bound_from_potential(g: &Graph, x: usize, y: usize, f: &Potential) -> Result<Rational, CurvatureError> {
    let d = g.distance_matrix();
    let dxy = pair_distance(g, &d, x, y)?;
    for v in g.closed_neighborhood(x).into_iter().chain(g.closed_neighborhood(y)) {
        if !f.contains_key(&v) {
            return Err(CurvatureError::MissingPotential(v));
        }
    }
    let entries: Vec<(&usize, &Rational)> = f.iter().collect();
    for (i, (&u, fu)) in entries.iter().enumerate() {
        g.check_vertex(u)?;
        for (&v, fv) in &entries[i + 1..] {
            g.check_vertex(v)?;
            let distance = d.get(u, v).ok_or(CurvatureError::Unreachable(u, v))?;
            let diff = *fu - *fv;
            if diff.abs() > int(distance as i64) {
                return Err(CurvatureError::NotLipschitz { u, v, diff, distance });
            }
        }
    }
    let gradient = &f[&y] - &f[&x];
    if gradient != int(dxy as i64) {
        return Err(CurvatureError::GradientMismatch { x, y, actual: gradient, expected: dxy });
    }
    let laplacian = |v: usize| -> Rational {
        let sum: Rational = g.neighbors(v).iter().map(|w| &f[w] - &f[&v]).sum();
        sum / int(g.degree(v) as i64)
    };
    Ok((laplacian(x) - laplacian(y)) / int(dxy as i64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeCurvature {
    pub u: usize,
    pub v: usize,
    pub kappa: Rational,
}

/// Lin-Lu-Yau curvature on every edge of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureReport {
    pub graph: Graph,
    /// One row per edge, sorted by `(u, v)` with `u < v`.
    pub rows: Vec<EdgeCurvature>,
    pub min_kappa: Rational,
    pub positively_curved: bool,
}

pub fn curvature_report(g: &Graph) -> Result<CurvatureReport, CurvatureError> {
    if !g.is_connected() {
        return Err(CurvatureError::Disconnected);
    }
    if g.edge_count() == 0 {
        return Err(CurvatureError::NoEdges);
    }
    let d = g.distance_matrix();
    let rows = g
        .edges()
        .par_iter()
        .map(|&(u, v)| lly_curvature_certificate(g, &d, u, v).map(|(kappa, _)| EdgeCurvature { u, v, kappa }))
        .collect::<Result<Vec<_>, _>>()?;
    let min_kappa = rows.iter().map(|r| &r.kappa).min().expect("at least one edge").clone();
    let positively_curved = min_kappa.is_positive();
    Ok(CurvatureReport { graph: g.clone(), rows, min_kappa, positively_curved })
}

fn positive_degree(d: usize) -> Result<Rational, CurvatureError> {
    if d == 0 {
        return Err(CurvatureError::NonPositiveDegree);
    }
    Ok(Rational::new(1.into(), (d as i64).into()))
}

/// `2/d_x + 2/d_y - 2`, the curvature of an edge outside every 3-, 4- and
/// 5-cycle.
pub fn lemma31_value(dx: usize, dy: usize) -> Result<Rational, CurvatureError> {
    Ok(int(2) * positive_degree(dx)? + int(2) * positive_degree(dy)? - int(2))
}

/// `1/d_x + 2/d_y - 1`, an upper bound for an edge outside every 3- and
/// 4-cycle.
pub fn lemma32_bound(dx: usize, dy: usize) -> Result<Rational, CurvatureError> {
    Ok(positive_degree(dx)? + int(2) * positive_degree(dy)? - int(1))
}
