//! Two-phase dense tableau simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use super::{dot, LinearProgram, LpSolution, LpStatus, Rational, Relation};

/// How an original variable is expressed through non-negative columns.
enum VarMap {
    /// `x = lower + col`
    Shift { col: usize, lower: Rational },
    /// `x = upper - col`
    Reflect { col: usize, upper: Rational },
    /// `x = pos - neg`
    Split { pos: usize, neg: usize },
}

struct StandardForm {
    /// Rows over structural columns, all with `rhs >= 0` after sign flips.
    rows: Vec<(Vec<Rational>, Relation, Rational)>,
    costs: Vec<Rational>,
    maps: Vec<VarMap>,
}

fn standardize(lp: &LinearProgram) -> StandardForm {
    let mut maps = Vec::with_capacity(lp.num_vars());
    let mut ncols = 0;
    let mut range_rows = Vec::new();
    for b in &lp.bounds {
        match (&b.lower, &b.upper) {
            (Some(lower), upper) => {
                if let Some(upper) = upper {
                    range_rows.push((ncols, upper - lower));
                }
                maps.push(VarMap::Shift { col: ncols, lower: lower.clone() });
                ncols += 1;
            }
            (None, Some(upper)) => {
                maps.push(VarMap::Reflect { col: ncols, upper: upper.clone() });
                ncols += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split { pos: ncols, neg: ncols + 1 });
                ncols += 2;
            }
        }
    }

    // substitute x_j = const + sum(sign * col) into a linear form
    let expand = |coeffs: &[Rational]| -> (Vec<Rational>, Rational) {
        let mut row = vec![Rational::zero(); ncols];
        let mut constant = Rational::zero();
        for (a, map) in coeffs.iter().zip(&maps) {
            if a.is_zero() {
                continue;
            }
            match map {
                VarMap::Shift { col, lower } => {
                    row[*col] += a;
                    constant += a * lower;
                }
                VarMap::Reflect { col, upper } => {
                    row[*col] -= a;
                    constant += a * upper;
                }
                VarMap::Split { pos, neg } => {
                    row[*pos] += a;
                    row[*neg] -= a;
                }
            }
        }
        (row, constant)
    };

    let mut rows = Vec::with_capacity(lp.constraints.len() + range_rows.len());
    for c in &lp.constraints {
        let (row, constant) = expand(&c.coeffs);
        rows.push((row, c.relation, &c.rhs - constant));
    }
    for (col, width) in range_rows {
        let mut row = vec![Rational::zero(); ncols];
        row[col] = Rational::one();
        rows.push((row, Relation::Le, width));
    }
    for (row, relation, rhs) in &mut rows {
        if rhs.is_negative() {
            row.iter_mut().for_each(|v| *v = -&*v);
            *rhs = -&*rhs;
            *relation = match relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }
    let (costs, _) = expand(&lp.objective);
    StandardForm { rows, costs, maps }
}

struct Tableau {
    /// Each row holds the column coefficients followed by the rhs.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs followed by minus the current objective value.
    objective: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let mut pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..=self.width).filter(|&j| !pivot_row[j].is_zero()).collect();
        let p = pivot_row[c].clone();
        if !p.is_one() {
            for &j in &nonzero {
                pivot_row[j] /= &p;
            }
        }
        let eliminate = |target: &mut Vec<Rational>| {
            if target[c].is_zero() {
                return;
            }
            let factor = target[c].clone();
            for &j in &nonzero {
                target[j] -= &factor * &pivot_row[j];
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.objective);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index improving column, ratio ties broken by the
    /// lowest-index basic variable.
    fn run(&mut self, allowed: &[bool]) -> Outcome {
        loop {
            let Some(entering) = (0..self.width).find(|&j| allowed[j] && self.objective[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][entering];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, entering),
                None => return Outcome::Unbounded,
            }
        }
    }

    fn price(&mut self, costs: &[Rational]) {
        let mut objective = costs.to_vec();
        objective.push(Rational::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (o, a) in objective.iter_mut().zip(&self.rows[i]) {
                if !a.is_zero() {
                    *o -= cb * a;
                }
            }
        }
        self.objective = objective;
    }
}

pub(super) fn solve_validated(lp: &LinearProgram) -> LpSolution {
    let sf = standardize(lp);
    let structural = sf.costs.len();
    let m = sf.rows.len();

    let slack_count = sf.rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let artificial_count = sf.rows.iter().filter(|r| r.1 != Relation::Le).count();
    let first_artificial = structural + slack_count;
    let width = first_artificial + artificial_count;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut next_slack, mut next_art) = (structural, first_artificial);
    for (coeffs, relation, rhs) in sf.rows {
        let mut row = coeffs;
        row.resize(width + 1, Rational::zero());
        row[width] = rhs;
        match relation {
            Relation::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }
    let mut tableau = Tableau { rows, objective: Vec::new(), basis, width };

    if artificial_count > 0 {
        let mut phase_one_costs = vec![Rational::zero(); width];
        phase_one_costs[first_artificial..].iter_mut().for_each(|c| *c = Rational::one());
        tableau.price(&phase_one_costs);
        let all = vec![true; width];
        // phase one is bounded below by zero
        let _ = tableau.run(&all);
        if !tableau.objective[width].is_zero() {
            return LpSolution::without_optimum(LpStatus::Infeasible);
        }
        // drive zero-level artificials out of the basis, dropping rows that
        // turn out to be redundant
        let mut i = 0;
        while i < tableau.rows.len() {
            if tableau.basis[i] >= first_artificial {
                match (0..first_artificial).find(|&j| !tableau.rows[i][j].is_zero()) {
                    Some(j) => {
                        tableau.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        tableau.rows.remove(i);
                        tableau.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }

    let mut costs = sf.costs.clone();
    costs.resize(width, Rational::zero());
    tableau.price(&costs);
    let allowed: Vec<bool> = (0..width).map(|j| j < first_artificial).collect();
    if let Outcome::Unbounded = tableau.run(&allowed) {
        return LpSolution::without_optimum(LpStatus::Unbounded);
    }

    let mut column_values = vec![Rational::zero(); width];
    for (i, &b) in tableau.basis.iter().enumerate() {
        column_values[b] = tableau.rhs(i).clone();
    }
    let primal: Vec<Rational> = sf
        .maps
        .iter()
        .map(|map| match map {
            VarMap::Shift { col, lower } => lower + &column_values[*col],
            VarMap::Reflect { col, upper } => upper - &column_values[*col],
            VarMap::Split { pos, neg } => &column_values[*pos] - &column_values[*neg],
        })
        .collect();
    let value = dot(&lp.objective, &primal);
    LpSolution::optimal(value, primal)
}
