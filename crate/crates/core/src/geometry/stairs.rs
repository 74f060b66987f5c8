//! `e·r·𝒬 ⊆ stairs(I^r)`, checked on vertices and random points of `𝒬`.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::enumerate::{enumerate_vertices, EnumerationBudget};
use super::lp::{LinearProgram, LpOutcome, Relation};
use super::{floor_monomial, rational, Rational, SymbolicPolyhedron};
use crate::check::{CheckKind, CheckResult};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::random::SplitRng;
use crate::symbolic::SymbolicContext;

#[derive(Clone, Copy, Debug)]
pub struct StairsOptions {
    pub samples: usize,
    pub seed: u64,
    pub budget: EnumerationBudget,
    /// Also decide emptiness of `e·r·𝒬` against every cell of the complement
    /// of `stairs(I^r)`, up to this many cells.
    pub exhaustive_cells: Option<u128>,
}

impl Default for StairsOptions {
    fn default() -> Self {
        StairsOptions {
            samples: 32,
            seed: 0,
            budget: EnumerationBudget::default(),
            exhaustive_cells: None,
        }
    }
}

fn in_stairs(power: &MonomialIdeal, point: &[Rational]) -> Result<Option<Monomial>> {
    let floor = floor_monomial(point).ok_or_else(|| Error::Internal("negative point".into()))?;
    Ok(if power.contains(&floor)? { None } else { Some(floor) })
}

fn fmt_point(point: &[Rational]) -> String {
    let parts: Vec<String> = point.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect();
    format!("({})", parts.join(", "))
}

/// Minimizers of random positive objectives over `𝒬`; each one is a vertex.
fn sampled_vertices(q: &SymbolicPolyhedron, count: usize, rng: &mut SplitRng) -> Result<Vec<Vec<Rational>>> {
    let mut found = BTreeSet::new();
    found.insert(q.alpha()?.point.clone());
    for _ in 0..count {
        let weights: Vec<Rational> = (0..q.dim())
            .map(|_| rational(rng.gen_range(1..=16), 1))
            .collect();
        found.insert(q.minimize(&weights)?.point);
    }
    Ok(found.into_iter().collect())
}

/// Checks `e·r·v ∈ stairs(I^r)` for every vertex `v` of `𝒬` and for random
/// convex combinations of vertices. A point lies in `stairs(J)` when its
/// floor is an exponent of a monomial in `J`.
///
/// When the vertices cannot be enumerated within budget, LP minimizers of
/// random objectives stand in for them and the result is flagged.
pub fn check_stairs_containment(
    ctx: &SymbolicContext,
    q: &SymbolicPolyhedron,
    r: u32,
    options: &StairsOptions,
) -> Result<CheckResult> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be at least 1".into()));
    }
    let start = Instant::now();
    let e = ctx.big_height();
    let scale = Rational::from_integer(BigInt::from(e as u64 * u64::from(r)));
    let power = ctx.ordinary_power(r)?;
    let mut rng = SplitRng::new(options.seed, 0);
    let mut result = CheckResult::new("stairs", CheckKind::Theorem)
        .param("r", r)
        .param("e", e)
        .param("seed", options.seed);

    let (vertices, sampled_only) = match enumerate_vertices(q, &options.budget) {
        Ok(v) => (v, false),
        Err(Error::ResourceLimit { .. }) => (sampled_vertices(q, options.samples, &mut rng)?, true),
        Err(other) => return Err(other),
    };
    result.push_param("vertices", vertices.len());
    result.push_param("sampled_only", sampled_only);
    if sampled_only {
        result.note("vertex enumeration over budget; vertices sampled from LP minimizers");
    }

    let check_point = |result: &mut CheckResult, v: &[Rational]| -> Result<()> {
        let scaled: Vec<Rational> = v.iter().map(|c| c * &scale).collect();
        if let Some(floor) = in_stairs(&power, &scaled)? {
            result.note(format!("e·r·v = {} is outside stairs(I^r)", fmt_point(&scaled)));
            result.record_violation(floor);
        }
        Ok(())
    };
    for v in &vertices {
        check_point(&mut result, v)?;
    }
    for _ in 0..options.samples {
        let weights: Vec<u32> = vertices.iter().map(|_| rng.gen_range(0..=8)).collect();
        let total: u32 = weights.iter().sum();
        if total == 0 {
            continue;
        }
        let mut p = vec![Rational::zero(); q.dim()];
        for (v, &w) in vertices.iter().zip(&weights) {
            let w = rational(i64::from(w), i64::from(total));
            for (acc, c) in p.iter_mut().zip(v) {
                *acc += &w * c;
            }
        }
        check_point(&mut result, &p)?;
    }
    result.push_param("samples", options.samples);

    if let Some(limit) = options.exhaustive_cells {
        exhaustive(q, &power, &scale, limit, &mut result)?;
    }
    result.elapsed = start.elapsed();
    Ok(result)
}

/// The complement of `stairs(J)` is the union over maps `g ↦ j(g)` of the
/// open boxes `{a : a_{j(g)} < g_{j(g)} for all g}`; each distinct maximal
/// box is tested for a point of `scale·𝒬` by one LP.
fn exhaustive(
    q: &SymbolicPolyhedron,
    power: &MonomialIdeal,
    scale: &Rational,
    limit: u128,
    result: &mut CheckResult,
) -> Result<()> {
    let d = q.dim();
    let gens = power.gens();
    let needed = (d as u128)
        .checked_pow(u32::try_from(gens.len()).unwrap_or(u32::MAX))
        .unwrap_or(u128::MAX);
    if needed > limit {
        return Err(Error::ResourceLimit {
            what: "complement cells",
            needed,
            limit,
        });
    }
    // bounds[j] = None means unbounded in coordinate j
    let mut boxes: BTreeSet<Vec<Option<BigInt>>> = BTreeSet::new();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let mut bounds: Vec<Option<BigInt>> = vec![None; d];
        let mut empty = false;
        for (g, &j) in gens.iter().zip(&choice) {
            let b = BigInt::from(g.exponent(j).clone());
            if b.is_zero() {
                empty = true;
                break;
            }
            bounds[j] = Some(match bounds[j].take() {
                Some(old) if old < b => old,
                _ => b,
            });
        }
        if !empty {
            boxes.insert(bounds);
        }
        let mut i = 0;
        while i < choice.len() {
            choice[i] += 1;
            if choice[i] < d {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == choice.len() {
            break;
        }
    }
    let dominated = |small: &Vec<Option<BigInt>>, big: &Vec<Option<BigInt>>| {
        small.iter().zip(big).all(|(s, b)| match (s, b) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some(s), Some(b)) => s <= b,
        })
    };
    let maximal: Vec<&Vec<Option<BigInt>>> = boxes
        .iter()
        .filter(|b| !boxes.iter().any(|o| o != *b && dominated(b, o)))
        .collect();
    result.push_param("complement_cells", maximal.len());
    for bounds in maximal {
        if let Some(point) = deepest_point(q, scale, bounds)? {
            result.note(format!("point {} of e·r·𝒬 lies outside stairs(I^r)", fmt_point(&point)));
            result.record_violation(floor_monomial(&point).expect("non-negative"));
        }
    }
    Ok(())
}

/// A point of `scale·𝒬` strictly inside the box, maximizing the margin.
fn deepest_point(
    q: &SymbolicPolyhedron,
    scale: &Rational,
    bounds: &[Option<BigInt>],
) -> Result<Option<Vec<Rational>>> {
    let d = q.dim();
    let lambdas: usize = q.components().iter().map(|(_, n)| n.points().len()).sum();
    let t = d + lambdas;
    let total = t + 1;
    let mut lp = LinearProgram::new(total);
    let mut objective = vec![Rational::zero(); total];
    objective[t] = -Rational::one();
    lp.set_objective(objective);
    let mut offset = d;
    for (_, n) in q.components() {
        for j in 0..d {
            let mut row = vec![Rational::zero(); total];
            row[j] = Rational::one();
            for (k, p) in n.points().iter().enumerate() {
                row[offset + k] = -(scale * &p[j]);
            }
            lp.add_constraint(row, Relation::Ge, Rational::zero());
        }
        let mut row = vec![Rational::zero(); total];
        for k in 0..n.points().len() {
            row[offset + k] = Rational::one();
        }
        lp.add_constraint(row, Relation::Eq, Rational::one());
        offset += n.points().len();
    }
    for (j, b) in bounds.iter().enumerate() {
        if let Some(b) = b {
            let mut row = vec![Rational::zero(); total];
            row[j] = Rational::one();
            row[t] = Rational::one();
            lp.add_constraint(row, Relation::Le, Rational::from_integer(b.clone()));
        }
    }
    let mut cap = vec![Rational::zero(); total];
    cap[t] = Rational::one();
    lp.add_constraint(cap, Relation::Le, Rational::one());
    match lp.solve()? {
        LpOutcome::Optimal { mut point, .. } if point[t].is_positive() => {
            point.truncate(d);
            Ok(Some(point))
        }
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(Error::Internal("bounded margin LP reported unbounded".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn context(dim: usize, rows: &[&[u64]]) -> (SymbolicContext, SymbolicPolyhedron) {
        let i = MonomialIdeal::from_rows(dim, rows.iter().copied()).unwrap();
        let ctx = SymbolicContext::new(&i).unwrap();
        let q = SymbolicPolyhedron::from_context(&ctx).unwrap();
        (ctx, q)
    }

    #[test]
    fn stairs_holds_on_examples() {
        let options = StairsOptions {
            exhaustive_cells: Some(1 << 20),
            ..StairsOptions::default()
        };
        for rows in [
            &[&[1u64, 2, 0][..], &[0, 1, 2], &[2, 0, 1], &[1, 1, 1]][..],
            &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]],
            &[&[1, 0, 0], &[0, 1, 0]],
        ] {
            let (ctx, q) = context(3, rows);
            for r in 1..=2 {
                let res = check_stairs_containment(&ctx, &q, r, &options).unwrap();
                assert!(res.holds(), "{res:?}");
                assert_eq!(res.get("sampled_only"), Some(&crate::ParamValue::Bool(false)));
            }
        }
    }

    #[test]
    fn exhaustive_mode_detects_a_shrunken_scale() {
        // (x,y)∩(y,z)∩(x,z) at scale 1 instead of e·r = 2: (1/2,1/2,1/2)
        // floors to 1, outside I
        let (ctx, q) = context(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let power = ctx.ordinary_power(1).unwrap();
        let mut result = CheckResult::new("stairs", CheckKind::Theorem);
        exhaustive(&q, &power, &Rational::one(), 1 << 20, &mut result).unwrap();
        assert!(!result.holds());
    }

    #[test]
    fn sampled_fallback_is_flagged() {
        let (ctx, q) = context(3, &[&[1, 2, 0], &[0, 1, 2], &[2, 0, 1], &[1, 1, 1]]);
        let options = StairsOptions {
            budget: EnumerationBudget {
                max_systems: 2,
                max_dim: 6,
            },
            ..StairsOptions::default()
        };
        let res = check_stairs_containment(&ctx, &q, 1, &options).unwrap();
        assert!(res.holds());
        assert_eq!(res.get("sampled_only"), Some(&crate::ParamValue::Bool(true)));
    }
}
