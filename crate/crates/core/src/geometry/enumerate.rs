//! Brute-force facet and vertex enumeration for small polyhedra.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use super::{NewtonPolyhedron, Rational, SymbolicPolyhedron};
use crate::error::{Error, Result};
use crate::geometry::lp::dot;

/// `normal · a ≥ offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Halfspace {
    pub fn contains(&self, a: &[Rational]) -> bool {
        dot(&self.normal, a) >= self.offset
    }
}

/// Caps the number of linear systems solved by one enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_systems: u128,
    pub max_dim: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_systems: 400_000,
            max_dim: 6,
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Row-reduces `rows` in place and returns the pivot column of each pivot row.
fn row_reduce(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// The unique nonzero solution (up to scale) of `rows · z = 0`, if the
/// kernel is one-dimensional.
fn kernel_line(mut rows: Vec<Vec<Rational>>, cols: usize) -> Option<Vec<Rational>> {
    let pivots = row_reduce(&mut rows);
    if pivots.len() + 1 != cols {
        return None;
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut z = vec![Rational::zero(); cols];
    z[free] = Rational::one();
    for (r, &c) in pivots.iter().enumerate() {
        z[c] = -rows[r][free].clone();
    }
    Some(z)
}

/// The unique solution of the square system `A a = b`.
fn solve_square(a: &[&Halfspace]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .map(|h| {
            let mut row = h.normal.clone();
            row.push(h.offset.clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows);
    if pivots.len() != n || pivots.iter().any(|&c| c == n) {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

fn canonical(mut normal: Vec<Rational>, mut offset: Rational) -> Option<Halfspace> {
    let lead = normal.iter().find(|c| !c.is_zero())?.clone();
    if lead.is_negative() {
        // only non-negative normals support an up-closed polyhedron
        if normal.iter().any(Signed::is_positive) {
            return None;
        }
    } else if normal.iter().any(Signed::is_negative) {
        return None;
    }
    let inv = lead.abs().recip();
    for c in normal.iter_mut() {
        *c = c.abs() * &inv;
    }
    offset = if lead.is_negative() { -offset } else { offset } * inv;
    Some(Halfspace { normal, offset })
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        if !next_combination(&mut idx, n) {
            break;
        }
    }
}

/// Facet inequalities of `N` with positive offset (the coordinate
/// inequalities `a_j ≥ 0` are left implicit).
///
/// Every hyperplane spanned by `k` generator points and `d − k` coordinate
/// directions is kept if all generators lie on its non-negative side.
pub fn component_facets(n: &NewtonPolyhedron, budget: &EnumerationBudget) -> Result<Vec<Halfspace>> {
    let d = n.dim();
    let g = n.points().len();
    if d > budget.max_dim {
        return Err(Error::ResourceLimit {
            what: "facet enumeration dimension",
            needed: d as u128,
            limit: budget.max_dim as u128,
        });
    }
    let needed: u128 = (1..=d.min(g)).map(|k| binomial(g, k).saturating_mul(binomial(d, d - k))).sum();
    if needed > budget.max_systems {
        return Err(Error::ResourceLimit {
            what: "facet enumeration systems",
            needed,
            limit: budget.max_systems,
        });
    }
    let mut found = BTreeSet::new();
    for k in 1..=d.min(g) {
        for_each_combination(g, k, |pts| {
            for_each_combination(d, d - k, |dirs| {
                // unknowns (w_0..w_{d-1}, c): w·p − c = 0 and w_j = 0
                let mut rows = Vec::with_capacity(d);
                for &p in pts {
                    let mut row = n.points()[p].clone();
                    row.push(-Rational::one());
                    rows.push(row);
                }
                for &j in dirs {
                    let mut row = vec![Rational::zero(); d + 1];
                    row[j] = Rational::one();
                    rows.push(row);
                }
                let Some(mut z) = kernel_line(rows, d + 1) else {
                    return;
                };
                let offset = z.pop().expect("d + 1 unknowns");
                let Some(h) = canonical(z, offset) else {
                    return;
                };
                if h.offset.is_positive() && n.points().iter().all(|p| h.contains(p)) {
                    found.insert(h);
                }
            });
        });
    }
    Ok(found.into_iter().collect())
}

/// Vertices of `𝒬`, from all `d`-subsets of the component facets and the
/// coordinate inequalities. Each vertex is checked for membership in
/// every component before it is returned.
pub fn enumerate_vertices(q: &SymbolicPolyhedron, budget: &EnumerationBudget) -> Result<Vec<Vec<Rational>>> {
    let d = q.dim();
    let mut inequalities = BTreeSet::new();
    for (_, n) in q.components() {
        inequalities.extend(component_facets(n, budget)?);
    }
    for j in 0..d {
        let mut normal = vec![Rational::zero(); d];
        normal[j] = Rational::one();
        inequalities.insert(Halfspace {
            normal,
            offset: Rational::zero(),
        });
    }
    let inequalities: Vec<Halfspace> = inequalities.into_iter().collect();
    let needed = binomial(inequalities.len(), d);
    if needed > budget.max_systems {
        return Err(Error::ResourceLimit {
            what: "vertex enumeration systems",
            needed,
            limit: budget.max_systems,
        });
    }
    let mut vertices = BTreeSet::new();
    for_each_combination(inequalities.len(), d, |subset| {
        let chosen: Vec<&Halfspace> = subset.iter().map(|&i| &inequalities[i]).collect();
        if let Some(v) = solve_square(&chosen) {
            if inequalities.iter().all(|h| h.contains(&v)) {
                vertices.insert(v);
            }
        }
    });
    for v in &vertices {
        if !q.contains(v)? {
            return Err(Error::Internal("enumerated vertex lies outside 𝒬".into()));
        }
    }
    Ok(vertices.into_iter().collect())
}
