//! Degree invariants and the checks built on the Waldschmidt constant.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::check::{CheckKind, CheckResult};
use crate::error::{Error, Result};
use crate::geometry::{ceil_rational, rational_from_biguint, NewtonPolyhedron, Rational, SymbolicPolyhedron};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::symbolic::{check_symbolic_in_mpower, SymbolicContext};

/// Smallest degree of a minimal generator.
pub fn alpha(ideal: &MonomialIdeal) -> Result<BigUint> {
    ideal.require_proper()?;
    Ok(ideal.min_degree().expect("non-zero").clone())
}

/// Largest degree of a minimal generator.
pub fn beta(ideal: &MonomialIdeal) -> Result<BigUint> {
    ideal.require_proper()?;
    Ok(ideal.max_degree().expect("non-zero").clone())
}

/// `γ(I) = α(𝒬)`.
pub fn waldschmidt(ideal: &MonomialIdeal) -> Result<Rational> {
    Ok(SymbolicPolyhedron::of(ideal)?.alpha()?.value.clone())
}

pub fn is_equigenerated(ideal: &MonomialIdeal) -> bool {
    ideal.min_degree() == ideal.max_degree()
}

/// `(α + e − 1)/e`.
pub fn chudnovsky_bound(alpha: &BigUint, e: usize) -> Rational {
    Rational::new(BigInt::from(alpha.clone()) + BigInt::from(e) - 1, BigInt::from(e))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub alpha_i: BigUint,
    pub beta_i: BigUint,
    pub e: usize,
    pub sigma: usize,
    pub alpha_q: Rational,
    pub chudnovsky_bound: Rational,
    pub equigenerated: bool,
    pub squarefree: bool,
    /// `None` when the closedness test exceeded its budget.
    pub integrally_closed_components: Option<bool>,
}

impl InvariantReport {
    pub fn compute(ctx: &SymbolicContext, q: &SymbolicPolyhedron) -> Result<Self> {
        let ideal = ctx.ideal();
        let alpha_i = alpha(ideal)?;
        let e = ctx.big_height();
        let integrally_closed_components = match components_integrally_closed(ctx, DEFAULT_BOX_LIMIT) {
            Ok(v) => Some(v),
            Err(Error::ResourceLimit { .. }) => None,
            Err(other) => return Err(other),
        };
        Ok(InvariantReport {
            beta_i: beta(ideal)?,
            e,
            sigma: ctx.sigma(),
            alpha_q: q.alpha()?.value.clone(),
            chudnovsky_bound: chudnovsky_bound(&alpha_i, e),
            equigenerated: is_equigenerated(ideal),
            squarefree: ideal.is_squarefree(),
            integrally_closed_components,
            alpha_i,
        })
    }

    pub fn chudnovsky_slack(&self) -> Rational {
        &self.alpha_q - &self.chudnovsky_bound
    }
}

/// `α(𝒬) ≥ (α(I) + e − 1)/e`. Proven for square-free ideals, open otherwise.
pub fn check_chudnovsky(ctx: &SymbolicContext, q: &SymbolicPolyhedron) -> Result<CheckResult> {
    let start = Instant::now();
    let alpha_i = alpha(ctx.ideal())?;
    let e = ctx.big_height();
    let alpha_q = q.alpha()?.value.clone();
    let bound = chudnovsky_bound(&alpha_i, e);
    let kind = if ctx.ideal().is_squarefree() {
        CheckKind::Theorem
    } else {
        CheckKind::Conjecture
    };
    let slack = &alpha_q - &bound;
    let mut result = CheckResult::new("chudnovsky", kind)
        .param("alpha_I", alpha_i)
        .param("e", e)
        .param("alpha_Q", alpha_q.clone())
        .param("bound", bound)
        .param("slack", slack.clone());
    if slack < Rational::zero() {
        let point = &q.alpha()?.point;
        result.note("α(𝒬) is below the bound");
        if let Some(m) = crate::geometry::to_monomial(point) {
            result.record_violation(m);
        } else {
            result.verdict = crate::check::Verdict::Fails;
            result.violations += 1;
        }
    }
    result.elapsed = start.elapsed();
    Ok(result)
}

/// `I^(m) ⊆ 𝔪^{⌈α(𝒬)m⌉ − β(I^r)} I^r` for `m ≥ max(er, β(I^r)/α(𝒬))`.
///
/// Below the threshold the containment is still decided, but as a plain
/// query flagged out of hypothesis. A negative exponent is clamped to 0.
pub fn check_alphaslope(ctx: &SymbolicContext, q: &SymbolicPolyhedron, r: u32, m: u32) -> Result<CheckResult> {
    if r == 0 || m == 0 {
        return Err(Error::InvalidArgument("r and m must be at least 1".into()));
    }
    let start = Instant::now();
    let e = ctx.big_height();
    let alpha_q = q.alpha()?.value.clone();
    let beta_r = rational_from_biguint(ctx.ordinary_power(r)?.max_degree().expect("non-zero"));
    let er = Rational::from_integer(BigInt::from(e as u64 * u64::from(r)));
    let threshold = std::cmp::max(er, &beta_r / &alpha_q);
    let m_rat = Rational::from_integer(m.into());
    let in_hypothesis = m_rat >= threshold;
    let raw = ceil_rational(&(&alpha_q * &m_rat)) - beta_r.to_integer();
    let clamped = raw < BigInt::zero();
    let s = if clamped { 0 } else { raw.to_u64().ok_or_else(|| Error::Internal("𝔪-exponent overflow".into()))? };

    let mut result = check_symbolic_in_mpower(ctx, m, s, r)?;
    result.check = "alphaslope";
    result.kind = if in_hypothesis { CheckKind::Theorem } else { CheckKind::Query };
    result.push_param("alpha_Q", alpha_q);
    result.push_param("threshold", threshold);
    result.push_param("in_hypothesis", in_hypothesis);
    result.push_param("raw_m_exponent", raw);
    result.push_param("clamped", clamped);
    if !in_hypothesis {
        result.note("m is below max(er, β(I^r)/α(𝒬)); result is informational");
    }
    if clamped {
        result.note("negative 𝔪-exponent clamped to 0");
    }
    result.elapsed = start.elapsed();
    Ok(result)
}

fn er_containment(ctx: &SymbolicContext, name: &'static str, r: u32) -> Result<CheckResult> {
    let e = ctx.big_height() as u32;
    let s = u64::from((e - 1) * r);
    let mut result = check_symbolic_in_mpower(ctx, e * r, s, r)?;
    result.check = name;
    result.kind = CheckKind::Theorem;
    result.push_param("e", e);
    Ok(result)
}

/// For equigenerated `I` satisfying the Chudnovsky-type bound,
/// `I^(er) ⊆ 𝔪^{(e−1)r} I^r`.
pub fn check_prop_equigen(ctx: &SymbolicContext, q: &SymbolicPolyhedron, r: u32) -> Result<CheckResult> {
    let base = CheckResult::new("equigen", CheckKind::Theorem).param("r", r);
    if !is_equigenerated(ctx.ideal()) {
        return Ok(base.not_applicable("not equigenerated"));
    }
    if !check_chudnovsky(ctx, q)?.holds() {
        return Ok(base.not_applicable("Chudnovsky-type bound fails"));
    }
    er_containment(ctx, "equigen", r)
}

/// When `α(𝒬) = α(I)` and `β(I) ≤ e·α(I)`, `I^(er) ⊆ 𝔪^{(e−1)r} I^r`.
pub fn check_prop_ifchudholds(ctx: &SymbolicContext, q: &SymbolicPolyhedron, r: u32) -> Result<CheckResult> {
    let alpha_i = alpha(ctx.ideal())?;
    let beta_i = beta(ctx.ideal())?;
    let e = ctx.big_height();
    let alpha_q = q.alpha()?.value.clone();
    let base = CheckResult::new("ifchudholds", CheckKind::Theorem)
        .param("r", r)
        .param("alpha_I", alpha_i.clone())
        .param("beta_I", beta_i.clone())
        .param("alpha_Q", alpha_q.clone());
    if alpha_q != rational_from_biguint(&alpha_i) {
        return Ok(base.not_applicable("α(𝒬) ≠ α(I)"));
    }
    if beta_i > &alpha_i * BigUint::from(e) {
        return Ok(base.not_applicable("β(I) > e·α(I)"));
    }
    let mut result = er_containment(ctx, "ifchudholds", r)?;
    result.push_param("alpha_I", alpha_i);
    result.push_param("beta_I", beta_i);
    Ok(result)
}

/// Lattice points of the box `[0, max exponents]` searched by
/// [`is_integrally_closed`] by default.
pub const DEFAULT_BOX_LIMIT: u128 = 2_000_000;

/// Whether every lattice point of the Newton polyhedron of `J` is the
/// exponent of a monomial in `J`.
///
/// Only the box up to the componentwise maximum generator exponent needs
/// checking: clamping a point to that box changes neither membership.
pub fn is_integrally_closed(ideal: &MonomialIdeal, box_limit: u128) -> Result<bool> {
    if ideal.is_zero() || ideal.is_unit() {
        return Ok(true);
    }
    let dim = ideal.dim();
    let maxima: Vec<u64> = (0..dim)
        .map(|j| {
            ideal
                .gens()
                .iter()
                .map(|g| g.exponent(j).to_u64().unwrap_or(u64::MAX))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let cells = maxima
        .iter()
        .try_fold(1u128, |acc, &m| acc.checked_mul(u128::from(m) + 1))
        .unwrap_or(u128::MAX);
    if cells > box_limit {
        return Err(Error::ResourceLimit {
            what: "integral closure box",
            needed: cells,
            limit: box_limit,
        });
    }
    let n = NewtonPolyhedron::of(ideal)?;
    let mut point = vec![0u64; dim];
    loop {
        let m = Monomial::from_exponents(&point);
        if !ideal.contains(&m)? {
            let rational_point: Vec<Rational> = point.iter().map(|&c| Rational::from_integer(c.into())).collect();
            if n.contains(&rational_point)? {
                return Ok(false);
            }
        }
        let mut j = 0;
        while j < dim {
            point[j] += 1;
            if point[j] <= maxima[j] {
                break;
            }
            point[j] = 0;
            j += 1;
        }
        if j == dim {
            return Ok(true);
        }
    }
}

fn components_integrally_closed(ctx: &SymbolicContext, box_limit: u128) -> Result<bool> {
    for (_, local) in ctx.localized() {
        if !is_integrally_closed(local, box_limit)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// With every `Q_{⊆P}` integrally closed and `n = dim − 1`: if `n ≥ 3` and
/// `α(I) ≥ n + 4`, or `n = 2` and `α(I) ≥ 8`, then `α(𝒬) ≥ (α(I)+n−1)/n`.
pub fn check_prop_intclosed(ctx: &SymbolicContext, q: &SymbolicPolyhedron) -> Result<CheckResult> {
    let start = Instant::now();
    let n = ctx.dim() - 1;
    let alpha_i = alpha(ctx.ideal())?;
    let base = CheckResult::new("intclosed", CheckKind::Theorem)
        .param("n", n)
        .param("alpha_I", alpha_i.clone());
    let threshold = match n {
        2 => Some(BigUint::from(8u32)),
        n if n >= 3 => Some(BigUint::from(n + 4)),
        _ => None,
    };
    match threshold {
        Some(t) if alpha_i >= t => {}
        _ => return Ok(base.not_applicable("α(I) or n below the threshold")),
    }
    if !components_integrally_closed(ctx, DEFAULT_BOX_LIMIT)? {
        return Ok(base.not_applicable("some Q_{⊆P} is not integrally closed"));
    }
    let alpha_q = q.alpha()?.value.clone();
    let bound = Rational::new(BigInt::from(alpha_i) + BigInt::from(n) - 1, BigInt::from(n));
    let mut result = base.param("alpha_Q", alpha_q.clone()).param("bound", bound.clone());
    if alpha_q < bound {
        result.verdict = crate::check::Verdict::Fails;
        result.violations = 1;
    }
    result.elapsed = start.elapsed();
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;
    use crate::geometry::rational;

    fn ideal(dim: usize, rows: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(dim, rows.iter().copied()).unwrap()
    }

    fn example4() -> MonomialIdeal {
        ideal(3, &[&[1, 2, 0], &[0, 1, 2], &[2, 0, 1], &[1, 1, 1]])
    }

    fn example3() -> MonomialIdeal {
        ideal(4, &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]])
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    fn setup(i: &MonomialIdeal) -> (SymbolicContext, SymbolicPolyhedron) {
        let ctx = SymbolicContext::new(i).unwrap();
        let q = SymbolicPolyhedron::from_context(&ctx).unwrap();
        (ctx, q)
    }

    #[test]
    fn alpha_beta() {
        assert_eq!(alpha(&example4()).unwrap(), BigUint::from(3u32));
        assert_eq!(beta(&example4()).unwrap(), BigUint::from(3u32));
        let i = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(alpha(&i).unwrap(), BigUint::from(1u32));
        assert_eq!(beta(&i).unwrap(), BigUint::from(2u32));
        assert!(!is_equigenerated(&i));
        assert!(is_equigenerated(&example4()));
        assert_eq!(alpha(&MonomialIdeal::zero(2)).unwrap_err(), Error::NotProper("zero"));
        for r in 1..=3 {
            let p = example4().power(r).unwrap();
            assert_eq!(alpha(&p).unwrap(), BigUint::from(3 * r));
        }
    }

    #[test]
    fn waldschmidt_constants() {
        assert_eq!(waldschmidt(&example4()).unwrap(), rational(2, 1));
        assert_eq!(waldschmidt(&MonomialIdeal::prime(3, [0, 1])).unwrap(), rational(1, 1));
        assert_eq!(waldschmidt(&triangle()).unwrap(), rational(3, 2));
    }

    #[test]
    fn chudnovsky_examples() {
        let (ctx, q) = setup(&example4());
        let res = check_chudnovsky(&ctx, &q).unwrap();
        assert!(res.holds());
        assert_eq!(res.kind, CheckKind::Conjecture);
        assert_eq!(res.get("slack"), Some(&rational(0, 1).into()));

        let (ctx, q) = setup(&example3());
        let res = check_chudnovsky(&ctx, &q).unwrap();
        assert!(res.holds());
        assert_eq!(res.kind, CheckKind::Theorem);
        assert_eq!(res.get("bound"), Some(&rational(2, 1).into()));
    }

    #[test]
    fn alphaslope_examples() {
        let (ctx, q) = setup(&example3());
        let res = check_alphaslope(&ctx, &q, 1, 2).unwrap();
        assert_eq!(res.get("s"), Some(&1u64.into()));
        assert_eq!(res.get("in_hypothesis"), Some(&true.into()));
        assert!(res.holds());

        let p = MonomialIdeal::prime(3, [0, 2]);
        let (ctx, q) = setup(&p);
        let res = check_alphaslope(&ctx, &q, 1, 1).unwrap();
        assert_eq!(res.get("s"), Some(&0u64.into()));
        assert!(res.holds());

        // m = er with a non-positive exponent reduces to I^(er) ⊆ I^r
        let (ctx, q) = setup(&example4());
        let res = check_alphaslope(&ctx, &q, 1, 2).unwrap();
        assert_eq!(res.get("raw_m_exponent"), Some(&BigInt::from(1).into()));
        assert!(res.holds());

        let (ctx, q) = setup(&triangle());
        let res = check_alphaslope(&ctx, &q, 2, 1).unwrap();
        assert_eq!(res.kind, CheckKind::Query);
        assert_eq!(res.get("clamped"), Some(&true.into()));
    }

    #[test]
    fn equigen_examples() {
        let (ctx, q) = setup(&example4());
        assert!(check_prop_equigen(&ctx, &q, 1).unwrap().holds());
        let (ctx, q) = setup(&triangle());
        let res = check_prop_equigen(&ctx, &q, 2).unwrap();
        assert!(res.holds());
        assert_eq!(res.get("s"), Some(&2u64.into()));
        let (ctx, q) = setup(&ideal(2, &[&[2, 0], &[0, 1]]));
        assert_eq!(check_prop_equigen(&ctx, &q, 1).unwrap().verdict, Verdict::NotApplicable);
    }

    #[test]
    fn ifchudholds_examples() {
        let (ctx, q) = setup(&MonomialIdeal::prime(4, [0, 1, 3]));
        for r in 1..=2 {
            assert!(check_prop_ifchudholds(&ctx, &q, r).unwrap().holds());
        }
        let (ctx, q) = setup(&example4());
        assert_eq!(check_prop_ifchudholds(&ctx, &q, 1).unwrap().verdict, Verdict::NotApplicable);
        let (ctx, q) = setup(&ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]));
        assert_eq!(q.alpha().unwrap().value, rational(2, 1));
        assert!(check_prop_ifchudholds(&ctx, &q, 1).unwrap().holds());
    }

    #[test]
    fn integral_closedness() {
        let limit = DEFAULT_BOX_LIMIT;
        assert!(is_integrally_closed(&MonomialIdeal::prime(3, [0, 2]), limit).unwrap());
        assert!(is_integrally_closed(&ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]), limit).unwrap());
        assert!(!is_integrally_closed(&ideal(2, &[&[2, 0], &[0, 2]]), limit).unwrap());
        assert!(is_integrally_closed(&ideal(3, &[&[1, 0, 0]]), limit).unwrap());
        assert!(matches!(
            is_integrally_closed(&ideal(2, &[&[1000, 0], &[0, 1000]]), 1000),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn intclosed_proposition() {
        // 𝔪^8 in three variables: every component integrally closed
        let m8 = MonomialIdeal::maximal(3).power(8).unwrap();
        let (ctx, q) = setup(&m8);
        let res = check_prop_intclosed(&ctx, &q).unwrap();
        assert!(res.holds(), "{res:?}");
        assert_eq!(res.get("alpha_Q"), Some(&rational(8, 1).into()));

        let (ctx, q) = setup(&example4());
        assert_eq!(check_prop_intclosed(&ctx, &q).unwrap().verdict, Verdict::NotApplicable);
    }

    #[test]
    fn invariant_report() {
        let (ctx, q) = setup(&example3());
        let rep = InvariantReport::compute(&ctx, &q).unwrap();
        assert_eq!(rep.e, 2);
        assert_eq!(rep.sigma, 3);
        assert_eq!(rep.alpha_q, rational(2, 1));
        assert_eq!(rep.chudnovsky_slack(), rational(0, 1));
        assert!(rep.squarefree && rep.equigenerated);
        assert_eq!(rep.integrally_closed_components, Some(true));
    }
}
