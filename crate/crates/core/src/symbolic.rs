//! Symbolic powers `I^(m) = ∩_{P ∈ maxass(I)} Q_{⊆P}^m` and the containment
//! checks between symbolic and ordinary powers.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::check::{CheckKind, CheckResult};
use crate::decomposition::{Decomposition, MonomialPrime};
use crate::error::{Error, Result};
use crate::monomial::{minimal_sorted, Limits, MembershipIndex, Monomial, MonomialIdeal};

type Cache<K> = Mutex<BTreeMap<K, Arc<MonomialIdeal>>>;

/// A proper non-zero ideal together with its decomposition and memoized
/// powers. Every check in this crate runs against a context so that the
/// symbolic powers it needs are computed once.
pub struct SymbolicContext {
    ideal: MonomialIdeal,
    decomposition: Decomposition,
    // Q_{⊆P} for every maximal associated prime, in prime order
    localized: Vec<(MonomialPrime, MonomialIdeal)>,
    limits: Limits,
    local_powers: Vec<Cache<u32>>,
    symbolic: Cache<u32>,
    ordinary: Cache<u32>,
    products: Cache<(u32, u32)>,
}

impl SymbolicContext {
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        Self::with_limits(ideal, Limits::default())
    }

    pub fn with_limits(ideal: &MonomialIdeal, limits: Limits) -> Result<Self> {
        let decomposition = Decomposition::of(ideal)?;
        let localized: Vec<_> = decomposition
            .max_associated_primes()
            .iter()
            .map(|p| (p.clone(), ideal.restrict(&p.mask())))
            .collect();
        let local_powers = localized.iter().map(|_| Mutex::default()).collect();
        Ok(SymbolicContext {
            ideal: ideal.clone(),
            decomposition,
            localized,
            limits,
            local_powers,
            symbolic: Mutex::default(),
            ordinary: Mutex::default(),
            products: Mutex::default(),
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn dim(&self) -> usize {
        self.ideal.dim()
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn big_height(&self) -> usize {
        self.decomposition.big_height()
    }

    pub fn sigma(&self) -> usize {
        self.ideal
            .gens()
            .iter()
            .map(|g| g.support().len())
            .min()
            .unwrap_or(0)
    }

    /// `(P, Q_{⊆P})` for each maximal associated prime `P`.
    pub fn localized(&self) -> &[(MonomialPrime, MonomialIdeal)] {
        &self.localized
    }

    fn local_power(&self, idx: usize, m: u32) -> Result<Arc<MonomialIdeal>> {
        let mut cache = self.local_powers[idx].lock().expect("cache poisoned");
        if let Some(hit) = cache.get(&m) {
            return Ok(hit.clone());
        }
        let base = &self.localized[idx].1;
        let (mut k, mut acc) = match cache.range(..m).next_back() {
            Some((&k, p)) => (k, (**p).clone()),
            None => (1, base.clone()),
        };
        while k < m {
            acc = acc.multiply_within(base, &self.limits)?;
            k += 1;
        }
        let acc = Arc::new(acc);
        cache.insert(m, acc.clone());
        Ok(acc)
    }

    /// `I^(m)`; `I^(0)` is the unit ideal.
    pub fn symbolic_power(&self, m: u32) -> Result<Arc<MonomialIdeal>> {
        if m == 0 {
            return Ok(Arc::new(MonomialIdeal::unit(self.dim())));
        }
        if let Some(hit) = self.symbolic.lock().expect("cache poisoned").get(&m) {
            return Ok(hit.clone());
        }
        let mut powers = (0..self.localized.len())
            .into_par_iter()
            .map(|idx| self.local_power(idx, m))
            .collect::<Result<Vec<_>>>()?;
        // smallest first keeps the running intersection small
        powers.sort_by_key(|p| p.len());
        let mut iter = powers.into_iter();
        let mut acc = (*iter.next().expect("at least one maximal prime")).clone();
        for p in iter {
            acc = acc.intersect_within(&p, &self.limits)?;
        }
        let acc = Arc::new(acc);
        self.symbolic
            .lock()
            .expect("cache poisoned")
            .insert(m, acc.clone());
        Ok(acc)
    }

    /// `I^r`.
    pub fn ordinary_power(&self, r: u32) -> Result<Arc<MonomialIdeal>> {
        if let Some(hit) = self.ordinary.lock().expect("cache poisoned").get(&r) {
            return Ok(hit.clone());
        }
        let p = Arc::new(self.ideal.power_within(r, &self.limits)?);
        self.ordinary
            .lock()
            .expect("cache poisoned")
            .insert(r, p.clone());
        Ok(p)
    }

    /// `(I^(m))^t`.
    pub fn symbolic_power_product(&self, m: u32, t: u32) -> Result<Arc<MonomialIdeal>> {
        if t == 1 {
            return self.symbolic_power(m);
        }
        if let Some(hit) = self.products.lock().expect("cache poisoned").get(&(m, t)) {
            return Ok(hit.clone());
        }
        let base = self.symbolic_power(m)?;
        let p = Arc::new(base.power_within(t, &self.limits)?);
        self.products
            .lock()
            .expect("cache poisoned")
            .insert((m, t), p.clone());
        Ok(p)
    }

    /// True when, for every variable, all irreducible components that involve
    /// it use the same power of it.
    pub fn has_equal_component_exponents(&self) -> bool {
        let mut seen: BTreeMap<usize, &BigUint> = BTreeMap::new();
        for c in self.decomposition.components() {
            for (v, e) in c.powers() {
                if let Some(prev) = seen.insert(*v, e) {
                    if prev != e {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn symbolic_power(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    let ctx = SymbolicContext::new(ideal)?;
    Ok((*ctx.symbolic_power(m)?).clone())
}

/// Minimal primes of a square-free ideal, found as the inclusion-minimal
/// variable sets meeting the support of every generator.
pub fn minimal_primes_bruteforce(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    ideal.require_proper()?;
    let dim = ideal.dim();
    if dim > 24 {
        return Err(Error::ResourceLimit {
            what: "variable subsets",
            needed: 1u128 << dim.min(127),
            limit: 1 << 24,
        });
    }
    let supports: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |acc, &v| acc | (1 << v)))
        .collect();
    let covers: Vec<u64> = (1u64..(1 << dim))
        .filter(|s| supports.iter().all(|g| g & s != 0))
        .collect();
    let mut minimal: Vec<MonomialPrime> = covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|&s| MonomialPrime::new(dim, (0..dim).filter(|v| s & (1 << v) != 0)))
        .collect::<Result<_>>()?;
    minimal.sort();
    Ok(minimal)
}

/// `I^(m) = P_1^m ∩ ⋯ ∩ P_k^m` for square-free `I`, evaluated independently
/// of the decomposition and ideal arithmetic: minimal primes come from
/// [`minimal_primes_bruteforce`] and generators from enumerating the box
/// `[0, m]^dim`.
pub fn symbolic_power_oracle_sqfree(ideal: &MonomialIdeal, m: u32) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let primes = minimal_primes_bruteforce(ideal)?;
    let dim = ideal.dim();
    if m == 0 {
        return Ok(MonomialIdeal::unit(dim));
    }
    let side = u128::from(m) + 1;
    let cells = side.checked_pow(dim as u32).unwrap_or(u128::MAX);
    const BOX_LIMIT: u128 = 20_000_000;
    if cells > BOX_LIMIT {
        return Err(Error::ResourceLimit {
            what: "oracle box points",
            needed: cells,
            limit: BOX_LIMIT,
        });
    }
    let m = u64::from(m);
    let inside = |a: &[u64]| {
        primes
            .iter()
            .all(|p| p.vars().iter().map(|&v| a[v]).sum::<u64>() >= m)
    };
    let mut gens = Vec::new();
    let mut point = vec![0u64; dim];
    loop {
        if inside(&point) {
            let minimal = (0..dim).all(|j| {
                if point[j] == 0 {
                    return true;
                }
                point[j] -= 1;
                let still = inside(&point);
                point[j] += 1;
                !still
            });
            if minimal {
                gens.push(Monomial::from_exponents(&point));
            }
        }
        // odometer step
        let mut j = 0;
        loop {
            if j == dim {
                return Ok(MonomialIdeal::from_minimal(dim, minimal_sorted(dim, gens)));
            }
            if point[j] < m {
                point[j] += 1;
                break;
            }
            point[j] = 0;
            j += 1;
        }
    }
}

/// Records every generator of `lhs` outside `𝔪^s · rhs`.
fn record_containment(result: &mut CheckResult, lhs: &MonomialIdeal, rhs: &MonomialIdeal, s: u64) {
    let index = MembershipIndex::new(rhs);
    for f in lhs.gens() {
        if index.witness_in_mpower(f, s).is_none() {
            result.record_violation(f.clone());
        }
    }
}

fn finish(mut result: CheckResult, start: Instant) -> CheckResult {
    result.elapsed = start.elapsed();
    result
}

fn require_positive(name: &str, value: u32) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidArgument(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// Decides `I^(m) ⊆ 𝔪^s · I^r`.
pub fn check_symbolic_in_mpower(ctx: &SymbolicContext, m: u32, s: u64, r: u32) -> Result<CheckResult> {
    require_positive("m", m)?;
    require_positive("r", r)?;
    let start = Instant::now();
    let mut result = CheckResult::new("containment", CheckKind::Query)
        .param("m", m)
        .param("s", s)
        .param("r", r);
    let lhs = ctx.symbolic_power(m)?;
    let rhs = ctx.ordinary_power(r)?;
    record_containment(&mut result, &lhs, &rhs, s);
    Ok(finish(result, start))
}

/// Exponents `(t(m+e−1)−e+r, (t−1)(e−1)+r−1)` of the square-free containment.
pub fn sqfree_exponents(e: usize, m: u32, t: u32, r: u32) -> (u32, u64) {
    let e = e as u64;
    let (m, t, r) = (u64::from(m), u64::from(t), u64::from(r));
    let lhs = t * (m + e - 1) + r - e;
    let s = (t - 1) * (e - 1) + r - 1;
    (u32::try_from(lhs).expect("symbolic exponent fits in u32"), s)
}

fn sqfree_containment(
    ctx: &SymbolicContext,
    name: &'static str,
    kind: CheckKind,
    m: u32,
    t: u32,
    r: u32,
) -> Result<CheckResult> {
    require_positive("m", m)?;
    require_positive("t", t)?;
    require_positive("r", r)?;
    let start = Instant::now();
    let e = ctx.big_height();
    let (lhs_exp, s) = sqfree_exponents(e, m, t, r);
    let mut result = CheckResult::new(name, kind)
        .param("m", m)
        .param("t", t)
        .param("r", r)
        .param("e", e)
        .param("lhs_exponent", lhs_exp)
        .param("m_exponent", s);
    let lhs = ctx.symbolic_power(lhs_exp)?;
    let rhs = ctx.symbolic_power_product(m, t)?;
    record_containment(&mut result, &lhs, &rhs, s);
    Ok(finish(result, start))
}

/// `I^(t(m+e−1)−e+r) ⊆ 𝔪^{(t−1)(e−1)+r−1} (I^(m))^t` for square-free `I`.
pub fn check_thm_sqfree(ctx: &SymbolicContext, m: u32, t: u32, r: u32) -> Result<CheckResult> {
    if !ctx.ideal().is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    sqfree_containment(ctx, "thm-sqfree", CheckKind::Theorem, m, t, r)
}

/// The square-free containment for ideals whose irreducible components agree
/// on the power of each variable; not applicable otherwise.
pub fn check_remark_equal_exponents(ctx: &SymbolicContext, m: u32, t: u32, r: u32) -> Result<CheckResult> {
    if !ctx.has_equal_component_exponents() {
        return Ok(CheckResult::new("equal-exponents", CheckKind::Theorem)
            .param("m", m)
            .param("t", t)
            .param("r", r)
            .not_applicable("components use different powers of some variable"));
    }
    if ctx.ideal().is_squarefree() {
        let mut result = check_thm_sqfree(ctx, m, t, r)?;
        result.check = "equal-exponents";
        return Ok(result);
    }
    sqfree_containment(ctx, "equal-exponents", CheckKind::Theorem, m, t, r)
}

/// The square-free containment applied where no theorem covers it. A failure
/// is a candidate counterexample to the containment conjectures it
/// specializes (`t = 1`-style bounds for points).
pub fn check_containment_conjecture(ctx: &SymbolicContext, m: u32, t: u32, r: u32) -> Result<CheckResult> {
    if ctx.ideal().is_squarefree() || ctx.has_equal_component_exponents() {
        return Ok(CheckResult::new("containment-conjecture", CheckKind::Conjecture)
            .param("m", m)
            .param("t", t)
            .param("r", r)
            .not_applicable("covered by the proven square-free containment"));
    }
    sqfree_containment(ctx, "containment-conjecture", CheckKind::Conjecture, m, t, r)
}

/// `I^(r+1) ⊆ 𝔪 · I^(r)`.
pub fn check_prop_onemax(ctx: &SymbolicContext, r: u32) -> Result<CheckResult> {
    require_positive("r", r)?;
    let start = Instant::now();
    let mut result = CheckResult::new("onemax", CheckKind::Theorem)
        .param("r", r)
        .param("lhs_exponent", r + 1)
        .param("m_exponent", 1u64);
    let lhs = ctx.symbolic_power(r + 1)?;
    let rhs = ctx.symbolic_power(r)?;
    record_containment(&mut result, &lhs, &rhs, 1);
    Ok(finish(result, start))
}

/// `I^(r+e) ⊆ 𝔪^σ(I) · I^(r)`.
pub fn check_prop_sigma(ctx: &SymbolicContext, r: u32) -> Result<CheckResult> {
    require_positive("r", r)?;
    let start = Instant::now();
    let e = ctx.big_height();
    let sigma = ctx.sigma();
    let lhs_exp = r + e as u32;
    let mut result = CheckResult::new("sigma", CheckKind::Theorem)
        .param("r", r)
        .param("e", e)
        .param("sigma", sigma)
        .param("lhs_exponent", lhs_exp)
        .param("m_exponent", sigma);
    let lhs = ctx.symbolic_power(lhs_exp)?;
    let rhs = ctx.symbolic_power(r)?;
    record_containment(&mut result, &lhs, &rhs, sigma as u64);
    Ok(finish(result, start))
}

/// `I^(m) = I^m` when `I` has a single maximal associated prime.
pub fn check_unique_max_prime(ctx: &SymbolicContext, m: u32) -> Result<CheckResult> {
    require_positive("m", m)?;
    let start = Instant::now();
    let maxass = ctx.decomposition().max_associated_primes().len();
    let mut result = CheckResult::new("unique-max-prime", CheckKind::Theorem)
        .param("m", m)
        .param("max_associated_primes", maxass);
    if maxass != 1 {
        return Ok(result.not_applicable("more than one maximal associated prime"));
    }
    let symbolic = ctx.symbolic_power(m)?;
    let ordinary = ctx.ordinary_power(m)?;
    let index = MembershipIndex::new(&ordinary);
    for f in symbolic.gens() {
        if !index.contains(f) {
            result.record_violation(f.clone());
        }
    }
    Ok(finish(result, start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::Verdict;

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

    #[test]
    fn first_symbolic_power_is_the_ideal() {
        for i in [example4(), example3(), triangle(), ideal(2, &[&[2, 0], &[1, 1]])] {
            assert_eq!(symbolic_power(&i, 1).unwrap(), i);
        }
    }

    #[test]
    fn example4_third_symbolic_power_contains_xyz_squared() {
        let f = Monomial::from_exponents(&[2, 2, 2]);
        assert!(symbolic_power(&example4(), 3).unwrap().contains(&f).unwrap());
        // and directly from the three components cubed
        for comp in [[2u64, 1, 0], [0, 2, 1], [1, 0, 2]] {
            let mut rows = Vec::new();
            for (v, &e) in comp.iter().enumerate() {
                if e > 0 {
                    let mut row = [0u64; 3];
                    row[v] = e;
                    rows.push(row);
                }
            }
            let q = MonomialIdeal::from_rows(3, rows).unwrap();
            assert!(q.power_contains(&f, 3).unwrap());
        }
    }

    #[test]
    fn prime_symbolic_powers_are_ordinary() {
        let p = MonomialIdeal::prime(4, [0, 2, 3]);
        for m in 1..=3 {
            assert_eq!(symbolic_power(&p, m).unwrap(), p.power(m).unwrap());
        }
    }

    #[test]
    fn oracle_agrees_on_worked_examples() {
        for i in [triangle(), example3()] {
            for m in 1..=3 {
                assert_eq!(
                    symbolic_power(&i, m).unwrap(),
                    symbolic_power_oracle_sqfree(&i, m).unwrap(),
                    "{i} m={m}"
                );
            }
        }
        assert_eq!(symbolic_power_oracle_sqfree(&triangle(), 1).unwrap(), triangle());
        assert_eq!(
            symbolic_power_oracle_sqfree(&example4(), 2).unwrap_err(),
            Error::NotSquarefree
        );
    }

    #[test]
    fn triangle_second_symbolic_power() {
        // (x,y)² ∩ (y,z)² ∩ (z,x)² = (xyz, x²y², y²z², z²x²)
        let expected = ideal(3, &[&[1, 1, 1], &[2, 2, 0], &[0, 2, 2], &[2, 0, 2]]);
        assert_eq!(symbolic_power(&triangle(), 2).unwrap(), expected);
    }

    #[test]
    fn example4_fails_m_times_square() {
        let ctx = SymbolicContext::new(&example4()).unwrap();
        let res = check_symbolic_in_mpower(&ctx, 3, 1, 2).unwrap();
        assert_eq!(res.verdict, Verdict::Fails);
        assert!(res.witnesses.contains(&Monomial::from_exponents(&[2, 2, 2])));
        assert!(check_symbolic_in_mpower(&ctx, 2, 0, 1).unwrap().holds());
    }

    #[test]
    fn triangle_fourth_in_m2_square() {
        let ctx = SymbolicContext::new(&triangle()).unwrap();
        assert!(check_symbolic_in_mpower(&ctx, 4, 2, 2).unwrap().holds());
        let res = check_thm_sqfree(&ctx, 1, 2, 2).unwrap();
        assert!(res.holds());
        assert_eq!(sqfree_exponents(2, 1, 2, 2), (4, 2));
        for m in 1..=3 {
            let res = check_thm_sqfree(&ctx, m, 1, 1).unwrap();
            assert!(res.holds());
            assert_eq!(sqfree_exponents(2, m, 1, 1), (m, 0));
        }
    }

    #[test]
    fn example3_containments() {
        let ctx = SymbolicContext::new(&example3()).unwrap();
        assert_eq!(sqfree_exponents(2, 1, 2, 1), (3, 1));
        assert!(check_thm_sqfree(&ctx, 1, 2, 1).unwrap().holds());
        assert!(check_prop_sigma(&ctx, 1).unwrap().holds());
        assert_eq!(ctx.sigma(), 3);
    }

    #[test]
    fn thm_sqfree_rejects_non_squarefree() {
        let ctx = SymbolicContext::new(&example4()).unwrap();
        assert_eq!(check_thm_sqfree(&ctx, 1, 1, 1).unwrap_err(), Error::NotSquarefree);
    }

    #[test]
    fn onemax_and_sigma_on_examples() {
        let ctx = SymbolicContext::new(&example4()).unwrap();
        assert!(check_prop_onemax(&ctx, 2).unwrap().holds());
        let p = SymbolicContext::new(&MonomialIdeal::prime(3, [0, 1])).unwrap();
        for r in 1..=3 {
            assert!(check_prop_onemax(&p, r).unwrap().holds());
        }
    }

    #[test]
    fn equal_exponent_detector() {
        // (x², y²) ∩ (y², z²)
        let a = ideal(3, &[&[2, 0, 0], &[0, 2, 0]])
            .intersect(&ideal(3, &[&[0, 2, 0], &[0, 0, 2]]))
            .unwrap();
        let ctx = SymbolicContext::new(&a).unwrap();
        assert!(ctx.has_equal_component_exponents());
        for (m, t, r) in [(1, 1, 1), (1, 2, 1), (2, 2, 2), (1, 3, 2)] {
            let res = check_remark_equal_exponents(&ctx, m, t, r).unwrap();
            assert_eq!(res.verdict, Verdict::Holds, "{m} {t} {r}");
        }

        let ctx = SymbolicContext::new(&example4()).unwrap();
        assert!(!ctx.has_equal_component_exponents());
        let res = check_remark_equal_exponents(&ctx, 1, 1, 1).unwrap();
        assert_eq!(res.verdict, Verdict::NotApplicable);

        let ctx = SymbolicContext::new(&triangle()).unwrap();
        let res = check_remark_equal_exponents(&ctx, 1, 2, 2).unwrap();
        assert!(res.holds());
    }

    #[test]
    fn example4_is_a_candidate_counterexample() {
        let ctx = SymbolicContext::new(&example4()).unwrap();
        let res = check_containment_conjecture(&ctx, 1, 2, 1).unwrap();
        assert!(res.is_candidate_counterexample());
        assert!(res.witnesses.contains(&Monomial::from_exponents(&[2, 2, 2])));
    }

    #[test]
    fn unique_max_prime_lemma() {
        let embedded = ideal(2, &[&[2, 0], &[1, 1]]);
        let ctx = SymbolicContext::new(&embedded).unwrap();
        for m in 1..=4 {
            assert!(check_unique_max_prime(&ctx, m).unwrap().holds());
        }
        let ctx = SymbolicContext::new(&triangle()).unwrap();
        assert_eq!(
            check_unique_max_prime(&ctx, 2).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn brute_force_minimal_primes() {
        let primes = minimal_primes_bruteforce(&example3()).unwrap();
        assert_eq!(primes.len(), 6);
        assert!(primes.iter().all(|p| p.height() == 2));
    }
}
