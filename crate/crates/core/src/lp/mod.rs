//! Exact rational linear programming.
//!
//! [`solve`] runs a two-phase primal simplex on a dense tableau with Bland's
//! pivoting rule, so it always terminates. Every entry is a [`Rational`];
//! there is no floating point anywhere in this module.

mod rational;
mod simplex;

pub use rational::{int, parse_fraction, ratio, to_decimal_string, to_f64, to_fraction_string, Rational};

use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("constraint {row} has {found} coefficients, objective has {expected}")]
    DimensionMismatch { row: usize, expected: usize, found: usize },
    #[error("bounds given for {found} variables, objective has {expected}")]
    BoundsMismatch { expected: usize, found: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Self { coeffs, relation, rhs }
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Eq => lhs == self.rhs,
            Relation::Ge => lhs >= self.rhs,
        }
    }
}

/// Optional lower and upper bound on one variable. `Bounds::default()` is
/// `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub lower: Option<Rational>,
    pub upper: Option<Rational>,
}

impl Default for Bounds {
    fn default() -> Self {
        Self::non_negative()
    }
}

impl Bounds {
    pub fn non_negative() -> Self {
        Self { lower: Some(Rational::zero()), upper: None }
    }

    pub fn free() -> Self {
        Self { lower: None, upper: None }
    }

    pub fn fixed(value: Rational) -> Self {
        Self { lower: Some(value.clone()), upper: Some(value) }
    }

    pub fn contains(&self, v: &Rational) -> bool {
        self.lower.as_ref().is_none_or(|l| v >= l) && self.upper.as_ref().is_none_or(|u| v <= u)
    }
}

/// `minimize objective · x` subject to the constraints and variable bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<Bounds>,
}

impl LinearProgram {
    /// A program over `objective.len()` non-negative variables with no
    /// constraints yet.
    pub fn minimize(objective: Vec<Rational>) -> Self {
        let bounds = vec![Bounds::default(); objective.len()];
        Self { objective, constraints: Vec::new(), bounds }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
        self
    }

    pub fn set_bounds(&mut self, var: usize, bounds: Bounds) -> &mut Self {
        self.bounds[var] = bounds;
        self
    }

    pub fn validate(&self) -> Result<(), LpError> {
        let expected = self.objective.len();
        if self.bounds.len() != expected {
            return Err(LpError::BoundsMismatch { expected, found: self.bounds.len() });
        }
        for (row, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != expected {
                return Err(LpError::DimensionMismatch { row, expected, found: c.coeffs.len() });
            }
        }
        Ok(())
    }

    pub fn is_feasible_point(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars()
            && self.bounds.iter().zip(x).all(|(b, v)| b.contains(v))
            && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// `value` and `primal` are present exactly when `status` is `Optimal`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub primal: Option<Vec<Rational>>,
}

impl LpSolution {
    pub(crate) fn optimal(value: Rational, primal: Vec<Rational>) -> Self {
        Self { status: LpStatus::Optimal, value: Some(value), primal: Some(primal) }
    }

    pub(crate) fn without_optimum(status: LpStatus) -> Self {
        Self { status, value: None, primal: None }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

pub fn solve(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    lp.validate()?;
    Ok(simplex::solve_validated(lp))
}

/// Independent audit: the primal satisfies every constraint and bound
/// exactly and reproduces the claimed objective value.
pub fn verify_solution(lp: &LinearProgram, solution: &LpSolution) -> bool {
    let (Some(value), Some(x)) = (&solution.value, &solution.primal) else {
        return false;
    };
    solution.status == LpStatus::Optimal
        && lp.validate().is_ok()
        && lp.is_feasible_point(x)
        && dot(&lp.objective, x) == *value
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (p, q)| acc + p * q)
}
