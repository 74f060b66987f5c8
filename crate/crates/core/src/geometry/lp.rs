//! Exact two-phase primal simplex over the rationals.
//!
//! Pivoting follows Bland's rule (lowest-index entering column, ties in
//! the ratio test broken by lowest basic index), so the method terminates
//! on degenerate problems. Every optimum is substituted back into the
//! original constraints before it is returned.

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `minimize objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { point: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rational::zero(); num_vars],
            constraints: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn set_objective(&mut self, objective: Vec<Rational>) {
        assert_eq!(objective.len(), self.num_vars);
        self.objective = objective;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn solve(&self) -> Result<LpOutcome> {
        let outcome = Tableau::build(self).run()?;
        if let LpOutcome::Optimal { point, value } = &outcome {
            self.verify(point, value)?;
        }
        Ok(outcome)
    }

    /// Substitution check of a claimed optimum.
    fn verify(&self, point: &[Rational], value: &Rational) -> Result<()> {
        if point.len() != self.num_vars || point.iter().any(Signed::is_negative) {
            return Err(Error::Internal("simplex returned a point outside x ≥ 0".into()));
        }
        for (k, c) in self.constraints.iter().enumerate() {
            let lhs = dot(&c.coeffs, point);
            let ok = match c.relation {
                Relation::Le => lhs <= c.rhs,
                Relation::Ge => lhs >= c.rhs,
                Relation::Eq => lhs == c.rhs,
            };
            if !ok {
                return Err(Error::Internal(format!(
                    "simplex point violates constraint {k}: {lhs} vs {}",
                    c.rhs
                )));
            }
        }
        if &dot(&self.objective, point) != value {
            return Err(Error::Internal("simplex objective value mismatch".into()));
        }
        Ok(())
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .map(|(x, y)| x * y)
        .fold(Rational::zero(), |acc, v| acc + v)
}

struct Tableau {
    num_vars: usize,
    objective: Vec<Rational>,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    // columns >= first_artificial are artificial
    first_artificial: usize,
    num_cols: usize,
}

const MAX_PIVOTS: usize = 1_000_000;

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let m = lp.constraints.len();
        let mut normalized: Vec<(Vec<Rational>, Relation, Rational)> = lp
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let flipped = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|v| -v).collect(), flipped, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let slacks = normalized.iter().filter(|(_, r, _)| *r != Relation::Eq).count();
        let artificials = normalized.iter().filter(|(_, r, _)| *r != Relation::Le).count();
        let first_artificial = lp.num_vars + slacks;
        let num_cols = first_artificial + artificials;

        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut next_slack = lp.num_vars;
        let mut next_art = first_artificial;
        for (coeffs, relation, b) in normalized.drain(..) {
            let mut row = coeffs;
            row.resize(num_cols, Rational::zero());
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
            rhs.push(b);
        }
        Tableau {
            num_vars: lp.num_vars,
            objective: lp.objective.clone(),
            rows,
            rhs,
            basis,
            first_artificial,
            num_cols,
        }
    }

    fn run(mut self) -> Result<LpOutcome> {
        if self.first_artificial < self.num_cols {
            let costs: Vec<Rational> = (0..self.num_cols)
                .map(|j| {
                    if j >= self.first_artificial {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            let (mut reduced, mut value) = self.reduced_costs(&costs);
            self.iterate(&mut reduced, &mut value, self.num_cols)?;
            if !value.is_zero() {
                return Ok(LpOutcome::Infeasible);
            }
            self.drive_out_artificials();
        }
        let mut costs = self.objective.clone();
        costs.resize(self.num_cols, Rational::zero());
        let (mut reduced, mut value) = self.reduced_costs(&costs);
        match self.iterate(&mut reduced, &mut value, self.first_artificial)? {
            Phase::Unbounded => Ok(LpOutcome::Unbounded),
            Phase::Optimal => {
                let mut point = vec![Rational::zero(); self.num_vars];
                for (i, &b) in self.basis.iter().enumerate() {
                    if b < self.num_vars {
                        point[b] = self.rhs[i].clone();
                    }
                }
                Ok(LpOutcome::Optimal { point, value })
            }
        }
    }

    /// Reduced costs and current objective value for `costs`.
    fn reduced_costs(&self, costs: &[Rational]) -> (Vec<Rational>, Rational) {
        let mut reduced = costs.to_vec();
        let mut value = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (j, a) in self.rows[i].iter().enumerate() {
                if !a.is_zero() {
                    reduced[j] -= cb * a;
                }
            }
            value += cb * &self.rhs[i];
        }
        (reduced, value)
    }

    /// Runs Bland pivots with entering columns restricted to `< allowed`.
    fn iterate(&mut self, reduced: &mut [Rational], value: &mut Rational, allowed: usize) -> Result<Phase> {
        for _ in 0..MAX_PIVOTS {
            let Some(enter) = (0..allowed).find(|&j| reduced[j].is_negative()) else {
                return Ok(Phase::Optimal);
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((k, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*k]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return Ok(Phase::Unbounded);
            };
            self.pivot(row, enter, reduced, value);
        }
        Err(Error::Internal("simplex exceeded the pivot cap".into()))
    }

    fn pivot(&mut self, row: usize, col: usize, reduced: &mut [Rational], value: &mut Rational) {
        let inv = Rational::one() / &self.rows[row][col];
        for a in self.rows[row].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        self.rhs[row] *= &inv;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for i in 0..self.rows.len() {
            if i == row {
                continue;
            }
            let factor = self.rows[i][col].clone();
            if factor.is_zero() {
                continue;
            }
            for (a, p) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *a -= &factor * p;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = reduced[col].clone();
        if !factor.is_zero() {
            for (a, p) in reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *a -= &factor * p;
                }
            }
            *value += &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    /// After a feasible phase one, pivots zero-valued artificial variables
    /// out of the basis; rows where that is impossible are redundant and
    /// dropped.
    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] < self.first_artificial {
                i += 1;
                continue;
            }
            match (0..self.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                Some(col) => {
                    let mut dummy = vec![Rational::zero(); self.num_cols];
                    let mut v = Rational::zero();
                    self.pivot(i, col, &mut dummy, &mut v);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.rhs.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}
