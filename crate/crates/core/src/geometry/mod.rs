//! Newton polyhedra and the symbolic polyhedron of a monomial ideal.
//!
//! Polyhedra are kept in generator form: each component is
//! `conv(exponents of gens(Q_{⊆P})) + ℝ_+^n`, and every question about them
//! (membership, minimal degree, decompositions) is an exact linear program.
//! Hyperplane descriptions are only built for vertex enumeration.

pub mod enumerate;
pub mod lp;
pub mod stairs;

use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::check::{CheckKind, CheckResult};
use crate::decomposition::MonomialPrime;
use crate::error::{check_dim, Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::symbolic::SymbolicContext;
use lp::{LinearProgram, LpOutcome, Relation};

pub use enumerate::{component_facets, enumerate_vertices, EnumerationBudget, Halfspace};
pub use stairs::{check_stairs_containment, StairsOptions};

/// Exact rational numbers; always stored reduced with positive denominator.
pub type Rational = BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// Exponent vector as rationals.
pub fn to_point(m: &Monomial) -> Vec<Rational> {
    m.exponents().iter().map(rational_from_biguint).collect()
}

/// The monomial `x^a` for an integral non-negative point, if it is one.
pub fn to_monomial(point: &[Rational]) -> Option<Monomial> {
    point
        .iter()
        .map(|c| {
            if c.is_integer() && !c.is_negative() {
                c.to_integer().to_biguint()
            } else {
                None
            }
        })
        .collect::<Option<Vec<_>>>()
        .map(Monomial::new)
}

/// `⌊a⌋` taken componentwise, for a point with `a ≥ 0`.
pub fn floor_monomial(point: &[Rational]) -> Option<Monomial> {
    point
        .iter()
        .map(|c| c.floor().to_integer().to_biguint())
        .collect::<Option<Vec<_>>>()
        .map(Monomial::new)
}

pub fn ceil_rational(x: &Rational) -> BigInt {
    x.ceil().to_integer()
}

pub fn coordinate_sum(point: &[Rational]) -> Rational {
    point.iter().fold(Rational::zero(), |acc, c| acc + c)
}

/// `conv(gens) + ℝ_+^dim`.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    dim: usize,
    generators: Vec<Monomial>,
    points: Vec<Vec<Rational>>,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        if ideal.is_zero() {
            return Err(Error::NotProper("zero"));
        }
        Ok(NewtonPolyhedron {
            dim: ideal.dim(),
            generators: ideal.gens().to_vec(),
            points: ideal.gens().iter().map(to_point).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The generator exponent vectors (one per minimal generator).
    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Exact membership: `a ≥ G·λ` for some convex weights `λ`.
    pub fn contains(&self, a: &[Rational]) -> Result<bool> {
        check_dim(self.dim, a.len())?;
        if a.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        if self.points.iter().any(|p| p.iter().zip(a).all(|(g, x)| g <= x)) {
            return Ok(true);
        }
        let k = self.points.len();
        let mut lp = LinearProgram::new(k);
        for j in 0..self.dim {
            let row = self.points.iter().map(|p| p[j].clone()).collect();
            lp.add_constraint(row, Relation::Le, a[j].clone());
        }
        lp.add_constraint(vec![Rational::one(); k], Relation::Eq, Rational::one());
        Ok(matches!(lp.solve()?, LpOutcome::Optimal { .. }))
    }
}

/// `np_member(N, a)`.
pub fn np_member(polyhedron: &NewtonPolyhedron, a: &[Rational]) -> Result<bool> {
    polyhedron.contains(a)
}

/// A minimizer of `a·1` over the symbolic polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaOptimum {
    pub value: Rational,
    pub point: Vec<Rational>,
}

/// `𝒬 = ∩_{P ∈ maxass(I)} conv(L(Q_{⊆P}))`, one Newton polyhedron per
/// maximal associated prime.
#[derive(Debug)]
pub struct SymbolicPolyhedron {
    dim: usize,
    components: Vec<(MonomialPrime, NewtonPolyhedron)>,
    alpha: OnceLock<AlphaOptimum>,
}

impl SymbolicPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        Self::from_context(&SymbolicContext::new(ideal)?)
    }

    pub fn from_context(ctx: &SymbolicContext) -> Result<Self> {
        let components = ctx
            .localized()
            .iter()
            .map(|(p, q)| Ok((p.clone(), NewtonPolyhedron::of(q)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymbolicPolyhedron {
            dim: ctx.dim(),
            components,
            alpha: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn components(&self) -> &[(MonomialPrime, NewtonPolyhedron)] {
        &self.components
    }

    pub fn contains(&self, a: &[Rational]) -> Result<bool> {
        for (_, n) in &self.components {
            if !n.contains(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `a ∈ m𝒬`, i.e. `a/m` in every component.
    pub fn member_scaled(&self, a: &[Rational], m: &Rational) -> Result<bool> {
        if !m.is_positive() {
            return Err(Error::InvalidArgument("scale must be positive".into()));
        }
        let scaled: Vec<Rational> = a.iter().map(|c| c / m).collect();
        self.contains(&scaled)
    }

    /// `α(𝒬) = min{a·1 : a ∈ 𝒬}` from a single LP over the lifted
    /// description `a ≥ G_P λ^P`, `Σλ^P = 1`.
    pub fn alpha(&self) -> Result<&AlphaOptimum> {
        if let Some(hit) = self.alpha.get() {
            return Ok(hit);
        }
        let computed = self.minimize(&vec![Rational::one(); self.dim])?;
        Ok(self.alpha.get_or_init(|| computed))
    }

    /// Minimizes `weights · a` over `𝒬`; `weights` must be non-negative.
    pub fn minimize(&self, weights: &[Rational]) -> Result<AlphaOptimum> {
        check_dim(self.dim, weights.len())?;
        let lambdas: usize = self.components.iter().map(|(_, n)| n.points.len()).sum();
        let total = self.dim + lambdas;
        let mut lp = LinearProgram::new(total);
        let mut objective = weights.to_vec();
        objective.resize(total, Rational::zero());
        lp.set_objective(objective);
        let mut offset = self.dim;
        for (_, n) in &self.components {
            for j in 0..self.dim {
                let mut row = vec![Rational::zero(); total];
                row[j] = Rational::one();
                for (k, p) in n.points.iter().enumerate() {
                    row[offset + k] = -&p[j];
                }
                lp.add_constraint(row, Relation::Ge, Rational::zero());
            }
            let mut row = vec![Rational::zero(); total];
            for k in 0..n.points.len() {
                row[offset + k] = Rational::one();
            }
            lp.add_constraint(row, Relation::Eq, Rational::one());
            offset += n.points.len();
        }
        match lp.solve()? {
            LpOutcome::Optimal { mut point, value } => {
                point.truncate(self.dim);
                if !self.contains(&point)? {
                    return Err(Error::Internal("LP minimizer lies outside 𝒬".into()));
                }
                Ok(AlphaOptimum { value, point })
            }
            other => Err(Error::Internal(format!(
                "minimizing over the symbolic polyhedron gave {other:?}"
            ))),
        }
    }
}

pub fn symbolic_polyhedron(ideal: &MonomialIdeal) -> Result<SymbolicPolyhedron> {
    SymbolicPolyhedron::of(ideal)
}

pub fn member_scaled(q: &SymbolicPolyhedron, a: &[Rational], m: &Rational) -> Result<bool> {
    q.member_scaled(a, m)
}

pub fn alpha_polyhedron(q: &SymbolicPolyhedron) -> Result<AlphaOptimum> {
    q.alpha().cloned()
}

/// `a = Σ λ_i v_i + c` with convex weights on generator vectors `v_i` and
/// an orthant part `c ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaratheodoryDecomposition {
    /// `(generator index, λ)` for the non-zero weights.
    pub weights: Vec<(usize, Rational)>,
    pub orthant: Vec<Rational>,
}

impl CaratheodoryDecomposition {
    /// Least common denominator of all weights and orthant coordinates.
    pub fn denominator(&self) -> BigUint {
        self.weights
            .iter()
            .map(|(_, w)| w)
            .chain(&self.orthant)
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
            .to_biguint()
            .expect("denominators are positive")
    }
}

/// Writes `a ∈ N` using at most `ht(P)` generator vectors.
///
/// The orthant part is maximized, which forces a basic solution supported
/// on a proper face whenever no orthant direction can be split off.
pub fn caratheodory_decompose(
    n: &NewtonPolyhedron,
    prime: &MonomialPrime,
    a: &[Rational],
) -> Result<CaratheodoryDecomposition> {
    check_dim(n.dim, a.len())?;
    check_dim(n.dim, prime.dim())?;
    let k = n.points.len();
    let total = k + n.dim;
    let mut lp = LinearProgram::new(total);
    let mut objective = vec![Rational::zero(); total];
    for j in 0..n.dim {
        objective[k + j] = -Rational::one();
    }
    lp.set_objective(objective);
    for j in 0..n.dim {
        let mut row = vec![Rational::zero(); total];
        for (i, p) in n.points.iter().enumerate() {
            row[i] = p[j].clone();
        }
        row[k + j] = Rational::one();
        lp.add_constraint(row, Relation::Eq, a[j].clone());
    }
    let mut row = vec![Rational::zero(); total];
    for v in row.iter_mut().take(k) {
        *v = Rational::one();
    }
    lp.add_constraint(row, Relation::Eq, Rational::one());

    let LpOutcome::Optimal { point, .. } = lp.solve()? else {
        return Err(Error::NotInPolyhedron);
    };
    let weights: Vec<(usize, Rational)> = point[..k]
        .iter()
        .enumerate()
        .filter(|(_, w)| !w.is_zero())
        .map(|(i, w)| (i, w.clone()))
        .collect();
    let orthant = point[k..].to_vec();
    if weights.len() > prime.height() {
        return Err(Error::Internal(format!(
            "decomposition uses {} vertices, more than the height {}",
            weights.len(),
            prime.height()
        )));
    }
    // reconstruction by substitution
    for j in 0..n.dim {
        let sum = weights
            .iter()
            .fold(orthant[j].clone(), |acc, (i, w)| acc + w * &n.points[*i][j]);
        if sum != a[j] {
            return Err(Error::Internal("decomposition does not reconstruct its point".into()));
        }
    }
    Ok(CaratheodoryDecomposition { weights, orthant })
}

/// A denominator `b` with `x^{b·a} ∈ I^(b)`, with the per-component
/// decompositions it came from.
#[derive(Clone, Debug)]
pub struct Realization {
    pub denominator: BigUint,
    /// `x^{b·a}`.
    pub monomial: Monomial,
    pub decompositions: Vec<(MonomialPrime, CaratheodoryDecomposition)>,
    /// Whether `x^{b·a} ∈ Q_{⊆P}^b` was also confirmed by a direct search
    /// (skipped above [`DIRECT_MEMBERSHIP_LIMIT`]).
    pub directly_verified: bool,
}

pub const DIRECT_MEMBERSHIP_LIMIT: u32 = 24;

/// `b = lcm` of the denominators of every component decomposition of `a`.
///
/// Membership of `x^{b·a}` in each `Q_{⊆P}^b` is certified by the integral
/// weights `b·λ`, and for small `b` also checked by direct search.
pub fn realizing_denominator(ctx: &SymbolicContext, q: &SymbolicPolyhedron, a: &[Rational]) -> Result<Realization> {
    check_dim(q.dim, a.len())?;
    if !q.contains(a)? {
        return Err(Error::NotInPolyhedron);
    }
    let decompositions = q
        .components
        .iter()
        .map(|(p, n)| Ok((p.clone(), caratheodory_decompose(n, p, a)?)))
        .collect::<Result<Vec<_>>>()?;
    let b = decompositions
        .iter()
        .fold(BigUint::one(), |acc, (_, d)| acc.lcm(&d.denominator()));
    let scale = Rational::from_integer(BigInt::from(b.clone()));
    let scaled: Vec<Rational> = a.iter().map(|c| c * &scale).collect();
    let monomial = to_monomial(&scaled).ok_or_else(|| Error::Internal("b·a is not integral".into()))?;

    for ((p, d), (_, n)) in decompositions.iter().zip(&q.components) {
        let mut bound = vec![Rational::zero(); q.dim];
        let mut count = Rational::zero();
        for (i, w) in &d.weights {
            let mult = w * &scale;
            if !mult.is_integer() {
                return Err(Error::Internal(format!("b·λ not integral at {p}")));
            }
            for (acc, v) in bound.iter_mut().zip(&n.points[*i]) {
                *acc += &mult * v;
            }
            count += mult;
        }
        if count != scale || bound.iter().zip(&scaled).any(|(x, y)| x > y) {
            return Err(Error::Internal(format!("membership certificate fails at {p}")));
        }
    }

    let directly_verified = match b.to_u32() {
        Some(small) if small <= DIRECT_MEMBERSHIP_LIMIT => {
            for (p, local) in ctx.localized() {
                if !local.power_contains(&monomial, small)? {
                    return Err(Error::Internal(format!(
                        "x^(b·a) not in the {small}-th power of the component at {p}"
                    )));
                }
            }
            true
        }
        _ => false,
    };
    Ok(Realization {
        denominator: b,
        monomial,
        decompositions,
        directly_verified,
    })
}

/// Every minimal generator exponent of `I^(m)` lies in `m𝒬`.
pub fn check_symbolic_polyhedron_containment(
    ctx: &SymbolicContext,
    q: &SymbolicPolyhedron,
    m: u32,
) -> Result<CheckResult> {
    let start = Instant::now();
    let mut result = CheckResult::new("polyhedron-containment", CheckKind::Theorem).param("m", m);
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let scale = Rational::from_integer(BigInt::from(m));
    let power = ctx.symbolic_power(m)?;
    result.push_param("generators", power.len());
    for g in power.gens() {
        if !q.member_scaled(&to_point(g), &scale)? {
            result.record_violation(g.clone());
        }
    }
    result.elapsed = start.elapsed();
    Ok(result)
}

/// `α(I^(m)) ≥ m·α(𝒬)` for `m ≤ max_m`, and looks for equality at multiples
/// of the realizing denominator of the LP minimizer up to `equality_cap`.
/// Not observing equality below the cap is reported, not failed.
pub fn check_alpha_lower_bound(
    ctx: &SymbolicContext,
    q: &SymbolicPolyhedron,
    max_m: u32,
    equality_cap: u32,
) -> Result<CheckResult> {
    let start = Instant::now();
    let alpha = q.alpha()?;
    let mut result = CheckResult::new("alpha-lower-bound", CheckKind::Theorem)
        .param("alpha_Q", alpha.value.clone())
        .param("max_m", max_m);
    for m in 1..=max_m {
        let power = ctx.symbolic_power(m)?;
        let degree = power.min_degree().expect("symbolic powers are non-zero");
        let lhs = rational_from_biguint(degree);
        if lhs < &alpha.value * Rational::from_integer(m.into()) {
            result.record_violation(
                power
                    .gens()
                    .iter()
                    .find(|g| g.degree() == degree)
                    .expect("a generator attains the minimum")
                    .clone(),
            );
        }
    }
    let realization = realizing_denominator(ctx, q, &alpha.point)?;
    result.push_param("realizing_denominator", realization.denominator.clone());
    let mut observed = None;
    if let Some(b) = realization.denominator.to_u32() {
        let mut m = b;
        while m <= equality_cap {
            let degree = rational_from_biguint(
                ctx.symbolic_power(m)?.min_degree().expect("non-zero"),
            );
            if degree == &alpha.value * Rational::from_integer(m.into()) {
                observed = Some(m);
                break;
            }
            m += b;
        }
    }
    match observed {
        Some(m) => result.push_param("equality_at_m", m),
        None => result.note(format!(
            "equality α(I^(m)) = m·α(𝒬) not observed for multiples of b up to m = {equality_cap}"
        )),
    }
    result.elapsed = start.elapsed();
    Ok(result)
}

/// `x^{b·a*} ∈ I^(b)` at the LP minimizer `a*`, by direct membership in the
/// computed symbolic power when `b` is small.
pub fn check_realizing_denominator(ctx: &SymbolicContext, q: &SymbolicPolyhedron) -> Result<CheckResult> {
    let start = Instant::now();
    let alpha = q.alpha()?;
    let realization = realizing_denominator(ctx, q, &alpha.point)?;
    let mut result = CheckResult::new("realizing-denominator", CheckKind::Theorem)
        .param("alpha_Q", alpha.value.clone())
        .param("denominator", realization.denominator.clone());
    match realization.denominator.to_u32() {
        Some(b) if b <= DIRECT_MEMBERSHIP_LIMIT => {
            let power = ctx.symbolic_power(b)?;
            if !power.contains(&realization.monomial)? {
                result.record_violation(realization.monomial.clone());
            }
        }
        _ => result.note("denominator above the direct-membership limit; certificate only"),
    }
    result.elapsed = start.elapsed();
    Ok(result)
}
