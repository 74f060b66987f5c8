//! Irreducible decompositions and the primes attached to a monomial ideal.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{check_dim, Error, Result};
use crate::monomial::{minimal_sorted, Monomial, MonomialIdeal};

/// A monomial prime `(x_i : i ∈ vars)`.
///
/// Ordered by height, then by the sorted variable list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialPrime {
    dim: usize,
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(dim: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let vars: BTreeSet<usize> = vars.into_iter().collect();
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a prime needs at least one variable".into()));
        }
        if let Some(&v) = vars.iter().find(|&&v| v >= dim) {
            return Err(Error::InvalidArgument(format!(
                "variable index {v} out of range for {dim} variables"
            )));
        }
        Ok(MonomialPrime {
            dim,
            vars: vars.into_iter().collect(),
        })
    }

    pub fn maximal(dim: usize) -> Self {
        MonomialPrime {
            dim,
            vars: (0..dim).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.vars.binary_search(&var).is_ok()
    }

    pub fn is_subset(&self, other: &MonomialPrime) -> bool {
        self.vars.iter().all(|v| other.contains_var(*v))
    }

    /// Indicator vector over all variables.
    pub fn mask(&self) -> Vec<bool> {
        (0..self.dim).map(|i| self.contains_var(i)).collect()
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.dim, self.vars.iter().copied())
    }

    pub fn fmt_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        let parts: Vec<String> = self
            .vars
            .iter()
            .map(|&v| {
                names
                    .get(v)
                    .map(|s| s.as_ref().to_string())
                    .unwrap_or_else(|| format!("x{v}"))
            })
            .collect();
        format!("({})", parts.join(","))
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with::<&str>(&[]))
    }
}

/// An irreducible monomial ideal `(x_i^{a_i} : i ∈ S)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrreducibleComponent {
    dim: usize,
    powers: BTreeMap<usize, BigUint>,
}

impl IrreducibleComponent {
    pub fn new(dim: usize, powers: BTreeMap<usize, BigUint>) -> Result<Self> {
        if powers.is_empty() || powers.values().any(Zero::is_zero) {
            return Err(Error::InvalidArgument(
                "irreducible component needs positive pure powers".into(),
            ));
        }
        if let Some(&v) = powers.keys().find(|&&v| v >= dim) {
            return Err(Error::InvalidArgument(format!("variable index {v} out of range")));
        }
        Ok(IrreducibleComponent { dim, powers })
    }

    pub fn powers(&self) -> &BTreeMap<usize, BigUint> {
        &self.powers
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime {
            dim: self.dim,
            vars: self.powers.keys().copied().collect(),
        }
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let gens = self
            .powers
            .iter()
            .map(|(&v, e)| Monomial::pure_power(self.dim, v, e.clone()))
            .collect();
        MonomialIdeal::from_minimal(self.dim, minimal_sorted(self.dim, gens))
    }

    /// `self ⊆ other` as ideals.
    fn is_subset(&self, other: &IrreducibleComponent) -> bool {
        self.powers
            .iter()
            .all(|(v, e)| other.powers.get(v).is_some_and(|f| f <= e))
    }
}

/// Irredundant irreducible decomposition of a proper non-zero ideal.
///
/// Splits `I = (I + (u)) ∩ (I + (v))` whenever a generator factors as `u·v`
/// with `u` the full power of its first variable, always on the
/// lexicographically first mixed generator, until only pure powers remain.
/// Redundant components are pruned at the end and the intersection of the
/// result is checked against `I`.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper()?;
    let dim = ideal.dim();
    let mut leaves: BTreeSet<IrreducibleComponent> = BTreeSet::new();
    let mut stack = vec![ideal.clone()];
    while let Some(current) = stack.pop() {
        let mixed = current
            .gens()
            .iter()
            .filter(|g| g.support().len() >= 2)
            .max_by(|a, b| a.exponents().cmp(b.exponents()));
        match mixed {
            None => {
                let powers = current
                    .gens()
                    .iter()
                    .map(|g| {
                        let v = g.support()[0];
                        (v, g.exponent(v).clone())
                    })
                    .collect();
                leaves.insert(IrreducibleComponent { dim, powers });
            }
            Some(g) => {
                let first = g.support()[0];
                let u = Monomial::pure_power(dim, first, g.exponent(first).clone());
                let v = g.quotient(&u)?.expect("pure factor divides");
                for factor in [v, u] {
                    let part = current.sum(&MonomialIdeal::from_minimal(dim, vec![factor]))?;
                    stack.push(part);
                }
            }
        }
    }

    let mut components: Vec<IrreducibleComponent> = leaves.into_iter().collect();
    // a component containing another one is redundant
    let snapshot = components.clone();
    components.retain(|c| !snapshot.iter().any(|d| d != c && d.is_subset(c)));

    let mut i = 0;
    while i < components.len() {
        if components.len() > 1 {
            let others = intersect_all(
                dim,
                components
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i)
                    .map(|(_, c)| c.to_ideal()),
            )?;
            if others.subset(&components[i].to_ideal())? {
                components.remove(i);
                continue;
            }
        }
        i += 1;
    }

    let total = intersect_all(dim, components.iter().map(IrreducibleComponent::to_ideal))?;
    if &total != ideal {
        return Err(Error::Internal(format!(
            "decomposition of {ideal} intersects to {total}"
        )));
    }
    Ok(components)
}

/// Intersection of a family of ideals; the unit ideal when empty.
pub fn intersect_all(dim: usize, ideals: impl IntoIterator<Item = MonomialIdeal>) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(dim);
    for ideal in ideals {
        acc = acc.intersect(&ideal)?;
    }
    Ok(acc)
}

/// The decomposition data of one ideal, computed once.
#[derive(Clone, Debug)]
pub struct Decomposition {
    components: Vec<IrreducibleComponent>,
    associated: Vec<MonomialPrime>,
    maximal: Vec<MonomialPrime>,
}

impl Decomposition {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        let components = irreducible_decomposition(ideal)?;
        let associated: Vec<MonomialPrime> = components
            .iter()
            .map(IrreducibleComponent::radical)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let maximal = associated
            .iter()
            .filter(|p| !associated.iter().any(|q| q != *p && p.is_subset(q)))
            .cloned()
            .collect();
        Ok(Decomposition {
            components,
            associated,
            maximal,
        })
    }

    pub fn components(&self) -> &[IrreducibleComponent] {
        &self.components
    }

    pub fn associated_primes(&self) -> &[MonomialPrime] {
        &self.associated
    }

    pub fn max_associated_primes(&self) -> &[MonomialPrime] {
        &self.maximal
    }

    pub fn big_height(&self) -> usize {
        self.associated.iter().map(MonomialPrime::height).max().unwrap_or(0)
    }
}

pub fn associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(Decomposition::of(ideal)?.associated)
}

pub fn max_associated_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(Decomposition::of(ideal)?.maximal)
}

/// Maximum height of an associated prime.
///
/// When this equals the number of variables, `𝔪` is the unique maximal
/// associated prime and symbolic powers coincide with ordinary powers; a
/// warning is logged in that case.
pub fn big_height(ideal: &MonomialIdeal) -> Result<usize> {
    let e = Decomposition::of(ideal)?.big_height();
    if e == ideal.dim() {
        log::warn!("big-height equals the number of variables: symbolic and ordinary powers agree");
    }
    Ok(e)
}

/// `Q_{⊆P} = R ∩ I R_P`, together with whether `P` is associated to `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Localization {
    pub ideal: MonomialIdeal,
    pub prime_is_associated: bool,
}

/// Erases the variables outside `P` from every generator.
///
/// Any monomial prime is accepted; `prime_is_associated` is false when `P`
/// is not in `Ass(I)`.
pub fn localize(ideal: &MonomialIdeal, prime: &MonomialPrime) -> Result<Localization> {
    check_dim(ideal.dim(), prime.dim())?;
    let decomposition = Decomposition::of(ideal)?;
    let prime_is_associated = decomposition.associated.contains(prime);
    if !prime_is_associated {
        log::warn!("localizing at {prime}, which is not an associated prime");
    }
    Ok(Localization {
        ideal: ideal.restrict(&prime.mask()),
        prime_is_associated,
    })
}

/// The least number of variables in the support of a monomial of `I`.
pub fn sigma(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_proper()?;
    Ok(ideal
        .gens()
        .iter()
        .map(|g| g.support().len())
        .min()
        .expect("proper ideal has generators"))
}
