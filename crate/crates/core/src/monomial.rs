//! Monomials and monomial ideals in a polynomial ring with `dim` variables.
//!
//! A [`MonomialIdeal`] always stores its unique minimal generating set,
//! sorted by total degree and then lexicographically with `x_0` heaviest
//! first. The zero ideal has no generators; the unit ideal has the single
//! generator `1`. Every operation below is defined on both of them.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::index::DivisorIndex;

/// A monomial `x^a`, stored as its exponent vector `a`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<BigUint>,
    degree: BigUint,
}

impl Monomial {
    pub fn new(exponents: Vec<BigUint>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    pub fn from_exponents(exponents: &[u64]) -> Self {
        Monomial::new(exponents.iter().map(|&e| BigUint::from(e)).collect())
    }

    pub fn one(dim: usize) -> Self {
        Monomial::new(vec![BigUint::zero(); dim])
    }

    /// `x_var^power` in `dim` variables.
    pub fn pure_power(dim: usize, var: usize, power: BigUint) -> Self {
        let mut exps = vec![BigUint::zero(); dim];
        exps[var] = power;
        Monomial::new(exps)
    }

    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[BigUint] {
        &self.exponents
    }

    pub fn exponent(&self, var: usize) -> &BigUint {
        &self.exponents[var]
    }

    pub fn degree(&self) -> &BigUint {
        &self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree.is_zero()
    }

    /// `self | other`, i.e. `self ≤ other` componentwise.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self
                .exponents
                .iter()
                .zip(&other.exponents)
                .all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        )
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dim(self.dim(), other.dim())?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Result<Option<Monomial>> {
        check_dim(self.dim(), other.dim())?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        )))
    }

    pub fn pow(&self, k: u64) -> Monomial {
        let k = BigUint::from(k);
        Monomial::new(self.exponents.iter().map(|e| e * &k).collect())
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|e| e <= &BigUint::one())
    }

    /// The product of the variables dividing this monomial.
    pub fn squarefree_part(&self) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .map(|e| if e.is_zero() { BigUint::zero() } else { BigUint::one() })
                .collect(),
        )
    }

    /// Sets the exponent of every variable with `keep[i] == false` to zero.
    pub fn restrict(&self, keep: &[bool]) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(keep)
                .map(|(e, &k)| if k { e.clone() } else { BigUint::zero() })
                .collect(),
        )
    }

    /// Renders as `x*y^2`, or `1` for the unit monomial.
    pub fn fmt_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        let factors: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, e)| {
                let name = names.get(i).map(|s| s.as_ref().to_string());
                let name = name.unwrap_or_else(|| format!("x{i}"));
                if e.is_one() {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with::<&str>(&[]))
    }
}

/// Caps on intermediate sizes; exceeding one yields [`Error::ResourceLimit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Generator pairs formed by a single product or intersection.
    pub max_pairs: u128,
    /// Distinct candidate generators kept by a single product or intersection.
    pub max_candidates: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_pairs: 40_000_000,
            max_candidates: 4_000_000,
        }
    }
}

/// The divisibility-minimal elements of `monomials`, sorted.
///
/// An empty input yields the empty set (the generators of the zero ideal).
pub fn minimalize(monomials: impl IntoIterator<Item = Monomial>) -> Result<Vec<Monomial>> {
    let monomials: Vec<Monomial> = monomials.into_iter().collect();
    let Some(first) = monomials.first() else {
        return Ok(Vec::new());
    };
    let dim = first.dim();
    for m in &monomials {
        check_dim(dim, m.dim())?;
    }
    Ok(minimal_sorted(dim, monomials))
}

pub(crate) fn minimal_sorted(dim: usize, mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort_unstable();
    monomials.dedup();
    // a divisor never has larger degree, so one ascending pass suffices
    let mut index = DivisorIndex::new(dim);
    let mut out = Vec::new();
    for m in monomials {
        if index.find_divisor(&m).is_none() {
            index.insert(&m, out.len());
            out.push(m);
        }
    }
    out
}

pub fn divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    a.divides(b)
}

/// Membership of `f` in `𝔪^s · J`: some generator `h` of `J` divides `f`
/// with `deg f − deg h ≥ s`.
pub fn containment_with_m(f: &Monomial, ideal: &MonomialIdeal, s: u64) -> Result<bool> {
    check_dim(ideal.dim(), f.dim())?;
    Ok(MembershipIndex::new(ideal).witness_in_mpower(f, s).is_some())
}

/// Pre-built divisor lookup over the generators of one ideal.
pub(crate) struct MembershipIndex<'a> {
    ideal: &'a MonomialIdeal,
    index: DivisorIndex,
}

impl<'a> MembershipIndex<'a> {
    pub(crate) fn new(ideal: &'a MonomialIdeal) -> Self {
        MembershipIndex {
            ideal,
            index: DivisorIndex::from_monomials(ideal.dim(), &ideal.gens),
        }
    }

    pub(crate) fn contains(&self, m: &Monomial) -> bool {
        self.index.find_divisor(m).is_some()
    }

    /// A generator `h | f` with `deg f − deg h ≥ s`.
    pub(crate) fn witness_in_mpower(&self, f: &Monomial, s: u64) -> Option<&'a Monomial> {
        let s = BigUint::from(s);
        if f.degree() < &s {
            return None;
        }
        let bound = f.degree() - s;
        self.index
            .find_divisor_of_degree_at_most(f, &bound)
            .map(|id| &self.ideal.gens[id])
    }
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The ideal generated by `gens` in `dim` variables.
    pub fn new(dim: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "ambient dimension must be positive".into(),
            ));
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        for g in &gens {
            check_dim(dim, g.dim())?;
        }
        Ok(MonomialIdeal {
            dim,
            gens: minimal_sorted(dim, gens),
        })
    }

    /// Builds an ideal from integer exponent rows, one row per generator.
    pub fn from_rows<R: AsRef<[u64]>>(dim: usize, rows: impl IntoIterator<Item = R>) -> Result<Self> {
        MonomialIdeal::new(
            dim,
            rows.into_iter()
                .map(|r| Monomial::from_exponents(r.as_ref())),
        )
    }

    pub(crate) fn from_minimal(dim: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { dim, gens }
    }

    pub fn zero(dim: usize) -> Self {
        MonomialIdeal { dim, gens: Vec::new() }
    }

    pub fn unit(dim: usize) -> Self {
        MonomialIdeal {
            dim,
            gens: vec![Monomial::one(dim)],
        }
    }

    /// The homogeneous maximal ideal `𝔪 = (x_0, …, x_{dim−1})`.
    pub fn maximal(dim: usize) -> Self {
        MonomialIdeal::prime(dim, 0..dim)
    }

    /// The prime generated by the given variables.
    pub fn prime(dim: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let gens = vars
            .into_iter()
            .map(|v| Monomial::pure_power(dim, v, BigUint::one()))
            .collect();
        MonomialIdeal::from_minimal(dim, minimal_sorted(dim, gens))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::NotProper("zero"))
        } else if self.is_unit() {
            Err(Error::NotProper("unit"))
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        check_dim(self.dim, m.dim())?;
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    /// `I ⊆ J`.
    pub fn subset(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        let index = MembershipIndex::new(other);
        Ok(self.gens.iter().all(|g| index.contains(g)))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.intersect_within(other, &Limits::default())
    }

    /// `I ∩ J` from the pairwise lcms of generators. A generator of one ideal
    /// that already lies in the other is kept alone, since all its lcms are
    /// multiples of it.
    pub fn intersect_within(&self, other: &MonomialIdeal, limits: &Limits) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let in_other = MembershipIndex::new(other);
        let in_self = MembershipIndex::new(self);
        let mut candidates = HashSet::new();
        let mut left = Vec::new();
        for g in &self.gens {
            if in_other.contains(g) {
                candidates.insert(g.clone());
            } else {
                left.push(g);
            }
        }
        let mut right = Vec::new();
        for h in &other.gens {
            if in_self.contains(h) {
                candidates.insert(h.clone());
            } else {
                right.push(h);
            }
        }
        let pairs = left.len() as u128 * right.len() as u128;
        if pairs > limits.max_pairs {
            return Err(Error::ResourceLimit {
                what: "intersection generator pairs",
                needed: pairs,
                limit: limits.max_pairs,
            });
        }
        for g in &left {
            for h in &right {
                candidates.insert(g.lcm_unchecked(h));
            }
            check_candidates(candidates.len(), limits)?;
        }
        Ok(MonomialIdeal::from_minimal(
            self.dim,
            minimal_sorted(self.dim, candidates.into_iter().collect()),
        ))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.multiply_within(other, &Limits::default())
    }

    pub fn multiply_within(&self, other: &MonomialIdeal, limits: &Limits) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let pairs = self.gens.len() as u128 * other.gens.len() as u128;
        if pairs > limits.max_pairs {
            return Err(Error::ResourceLimit {
                what: "product generator pairs",
                needed: pairs,
                limit: limits.max_pairs,
            });
        }
        let mut candidates = HashSet::new();
        for g in &self.gens {
            for h in &other.gens {
                candidates.insert(g.mul_unchecked(h));
            }
            check_candidates(candidates.len(), limits)?;
        }
        Ok(MonomialIdeal::from_minimal(
            self.dim,
            minimal_sorted(self.dim, candidates.into_iter().collect()),
        ))
    }

    /// `I^t`, with `I^0 = (1)`.
    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        self.power_within(t, &Limits::default())
    }

    pub fn power_within(&self, t: u32, limits: &Limits) -> Result<MonomialIdeal> {
        if t == 0 {
            return Ok(MonomialIdeal::unit(self.dim));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.multiply_within(self, limits)?;
        }
        Ok(acc)
    }

    /// `I + J`.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let all = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal::from_minimal(self.dim, minimal_sorted(self.dim, all)))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let caps = self.gens.iter().map(Monomial::squarefree_part).collect();
        MonomialIdeal::from_minimal(self.dim, minimal_sorted(self.dim, caps))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Keeps only the variables with `keep[i]`, erasing the others from every
    /// generator.
    pub fn restrict(&self, keep: &[bool]) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.restrict(keep)).collect();
        MonomialIdeal::from_minimal(self.dim, minimal_sorted(self.dim, gens))
    }

    pub fn min_degree(&self) -> Option<&BigUint> {
        self.gens.iter().map(Monomial::degree).min()
    }

    pub fn max_degree(&self) -> Option<&BigUint> {
        self.gens.iter().map(Monomial::degree).max()
    }

    /// `f ∈ I^t`, decided by searching for `t` generators whose product
    /// divides `f`; never materializes `I^t`.
    pub fn power_contains(&self, f: &Monomial, t: u32) -> Result<bool> {
        check_dim(self.dim, f.dim())?;
        let mut failed = HashSet::new();
        Ok(self.power_search(f, t, &mut failed))
    }

    fn power_search(&self, f: &Monomial, t: u32, failed: &mut HashSet<(Monomial, u32)>) -> bool {
        if t == 0 {
            return true;
        }
        if failed.contains(&(f.clone(), t)) {
            return false;
        }
        for g in &self.gens {
            if g.is_one() {
                return true;
            }
            if g.divides_unchecked(f) {
                let rest = f.quotient(g).ok().flatten().expect("divisor checked");
                if self.power_search(&rest, t - 1, failed) {
                    return true;
                }
            }
        }
        failed.insert((f.clone(), t));
        false
    }

    pub fn fmt_with<S: AsRef<str>>(&self, names: &[S]) -> String {
        let parts: Vec<String> = self.gens.iter().map(|g| g.fmt_with(names)).collect();
        format!("({})", parts.join(", "))
    }
}

fn check_candidates(count: usize, limits: &Limits) -> Result<()> {
    if count > limits.max_candidates {
        Err(Error::ResourceLimit {
            what: "candidate generators",
            needed: count as u128,
            limit: limits.max_candidates as u128,
        })
    } else {
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{:?}", self.gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with::<&str>(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u64]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn ideal(dim: usize, rows: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::from_rows(dim, rows.iter().copied()).unwrap()
    }

    fn example4() -> MonomialIdeal {
        ideal(3, &[&[1, 2, 0], &[0, 1, 2], &[2, 0, 1], &[1, 1, 1]])
    }

    #[test]
    fn minimalize_drops_multiples() {
        let out = minimalize(vec![m(&[2, 0]), m(&[3, 0]), m(&[0, 1])]).unwrap();
        assert_eq!(out, vec![m(&[0, 1]), m(&[2, 0])]);
        assert!(minimalize(Vec::new()).unwrap().is_empty());
        assert_eq!(example4().len(), 4);
    }

    #[test]
    fn minimalize_rejects_mixed_dimensions() {
        let err = minimalize(vec![m(&[1, 0]), m(&[1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 1, 0]).divides(&m(&[1, 1, 1])).unwrap());
        assert!(!m(&[2, 0, 0]).divides(&m(&[1, 1, 0])).unwrap());
        assert!(Monomial::one(3).divides(&m(&[4, 0, 2])).unwrap());
        assert!(m(&[1]).divides(&m(&[1, 0])).is_err());
    }

    #[test]
    fn membership() {
        let sq = example4().power(2).unwrap();
        assert!(sq.contains(&m(&[2, 2, 2])).unwrap());
        assert!(!example4().contains(&Monomial::one(3)).unwrap());
        let p = ideal(3, &[&[1, 2, 3]]);
        assert!(p.contains(&m(&[1, 2, 3])).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&m(&[5, 5, 5])).unwrap());
        assert!(MonomialIdeal::unit(3).contains(&Monomial::one(3)).unwrap());
    }

    #[test]
    fn intersections() {
        let x = ideal(2, &[&[1, 0]]);
        let y = ideal(2, &[&[0, 1]]);
        assert_eq!(x.intersect(&y).unwrap(), ideal(2, &[&[1, 1]]));

        let a = ideal(3, &[&[2, 0, 0], &[0, 1, 0]]);
        let b = ideal(3, &[&[0, 2, 0], &[0, 0, 1]]);
        let c = ideal(3, &[&[0, 0, 2], &[1, 0, 0]]);
        let abc = a.intersect(&b).unwrap().intersect(&c).unwrap();
        assert_eq!(abc, example4());

        let zero = MonomialIdeal::zero(3);
        assert!(a.intersect(&zero).unwrap().is_zero());
        assert_eq!(a.intersect(&MonomialIdeal::unit(3)).unwrap(), a);
    }

    #[test]
    fn intersection_of_coordinate_primes_brute_force() {
        let xy = MonomialIdeal::prime(3, [0, 1]);
        let xz = MonomialIdeal::prime(3, [0, 2]);
        let yz = MonomialIdeal::prime(3, [1, 2]);
        let got = xy.intersect(&xz).unwrap().intersect(&yz).unwrap();
        // oracle: all lcms of one generator from each prime, minimalized
        let mut lcms = Vec::new();
        for a in xy.gens() {
            for b in xz.gens() {
                for c in yz.gens() {
                    lcms.push(a.lcm(b).unwrap().lcm(c).unwrap());
                }
            }
        }
        assert_eq!(got.gens(), minimalize(lcms).unwrap().as_slice());
        assert_eq!(got, ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn products_and_powers() {
        let xy = MonomialIdeal::maximal(2);
        assert_eq!(
            xy.power(2).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        assert_eq!(xy.power(1).unwrap(), xy);
        assert!(xy.power(0).unwrap().is_unit());

        // brute force: every product of three generators of (x², y)
        let base = ideal(2, &[&[2, 0], &[0, 1]]);
        let mut prods = Vec::new();
        for a in base.gens() {
            for b in base.gens() {
                for c in base.gens() {
                    prods.push(a.mul(b).unwrap().mul(c).unwrap());
                }
            }
        }
        let cube = base.power(3).unwrap();
        assert_eq!(cube.gens(), minimalize(prods).unwrap().as_slice());
        assert_eq!(
            cube,
            ideal(2, &[&[6, 0], &[4, 1], &[2, 2], &[0, 3]])
        );
        assert!(MonomialIdeal::zero(2).power(3).unwrap().is_zero());
    }

    #[test]
    fn subsets() {
        let i = example4();
        assert!(i.power(2).unwrap().subset(&i).unwrap());
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        let b = MonomialIdeal::maximal(2);
        assert!(a.subset(&b).unwrap());
        assert!(!b.subset(&a).unwrap());
        assert!(MonomialIdeal::zero(2).subset(&a).unwrap());
        assert!(!MonomialIdeal::unit(2).subset(&a).unwrap());
    }

    #[test]
    fn mpower_membership() {
        let sq = example4().power(2).unwrap();
        assert!(!containment_with_m(&m(&[2, 2, 2]), &sq, 1).unwrap());
        assert!(containment_with_m(&m(&[2, 2, 2]), &sq, 0).unwrap());
        let xy = ideal(2, &[&[1, 1]]);
        assert!(containment_with_m(&m(&[3, 1]), &xy, 2).unwrap());
        assert!(!containment_with_m(&m(&[3, 1]), &xy, 3).unwrap());
    }

    #[test]
    fn radicals_and_support() {
        let a = ideal(2, &[&[2, 0], &[0, 1]]);
        assert_eq!(a.radical(), MonomialIdeal::maximal(2));
        assert_eq!(
            example4().radical(),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
        );
        let sq = ideal(4, &[&[1, 1, 1, 0], &[1, 1, 0, 1], &[1, 0, 1, 1], &[0, 1, 1, 1]]);
        assert!(sq.is_squarefree());
        assert!(!example4().is_squarefree());
        assert_eq!(m(&[0, 3, 1]).support(), vec![1, 2]);
    }

    #[test]
    fn power_membership_search() {
        let i = example4();
        let f = m(&[2, 2, 2]);
        assert!(i.power_contains(&f, 2).unwrap());
        assert!(!i.power_contains(&f, 3).unwrap());
        assert!(i.power_contains(&Monomial::one(3), 0).unwrap());
    }

    #[test]
    fn generator_order_is_degree_then_lex() {
        let i = ideal(3, &[&[0, 1, 2], &[1, 1, 1], &[2, 0, 1], &[1, 2, 0], &[0, 0, 1]]);
        let names = ["x", "y", "z"];
        assert_eq!(i.fmt_with(&names), "(z, x*y^2)");
        let j = example4();
        assert_eq!(j.fmt_with(&names), "(x^2*z, x*y^2, x*y*z, y*z^2)");
    }

    #[test]
    fn resource_limit_is_reported() {
        let big = MonomialIdeal::maximal(3).power(4).unwrap();
        let tight = Limits {
            max_pairs: 10,
            max_candidates: 10,
        };
        assert!(matches!(
            big.multiply_within(&big, &tight),
            Err(Error::ResourceLimit { .. })
        ));
    }
}
