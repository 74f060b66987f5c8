//! Seeded ideal generators for fuzzing.
//!
//! [`SplitRng`] is a counter-based ChaCha stream: `(seed, stream)` fixes the
//! whole sequence, so instance `k` of a scan can be regenerated on its own.

use std::collections::BTreeSet;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::MonomialPrime;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};

#[derive(Clone, Debug)]
pub struct SplitRng {
    inner: ChaCha8Rng,
}

impl SplitRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        SplitRng { inner }
    }
}

impl RngCore for SplitRng {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> std::result::Result<(), rand::Error> {
        self.inner.try_fill_bytes(dest)
    }
}

/// A square-free ideal built as an intersection of primes, with its
/// minimal primes known in advance.
#[derive(Clone, Debug)]
pub struct SquarefreeInstance {
    pub ideal: MonomialIdeal,
    pub minimal_primes: Vec<MonomialPrime>,
}

fn random_prime(rng: &mut impl Rng, dim: usize, max_height: usize) -> MonomialPrime {
    let height = rng.gen_range(1..=max_height.min(dim));
    let mut vars: Vec<usize> = (0..dim).collect();
    for i in (1..vars.len()).rev() {
        let j = rng.gen_range(0..=i);
        vars.swap(i, j);
    }
    vars.truncate(height);
    MonomialPrime::new(dim, vars).expect("variables are in range")
}

/// Intersection of between 1 and `max_primes` random primes of height at
/// most `max_height`.
pub fn random_squarefree(
    rng: &mut impl Rng,
    dim: usize,
    max_primes: usize,
    max_height: usize,
) -> Result<SquarefreeInstance> {
    if dim == 0 || max_primes == 0 || max_height == 0 {
        return Err(Error::InvalidArgument("dimension, prime count and height must be positive".into()));
    }
    let count = rng.gen_range(1..=max_primes);
    let chosen: BTreeSet<MonomialPrime> = (0..count).map(|_| random_prime(rng, dim, max_height)).collect();
    let minimal_primes: Vec<MonomialPrime> = chosen
        .iter()
        .filter(|p| !chosen.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect();
    let mut ideal = minimal_primes[0].to_ideal();
    for p in &minimal_primes[1..] {
        ideal = ideal.intersect(&p.to_ideal())?;
    }
    Ok(SquarefreeInstance { ideal, minimal_primes })
}

/// An ideal with between 1 and `max_gens` random generators, exponents at
/// most `max_exponent`. Never the unit ideal.
pub fn random_ideal(rng: &mut impl Rng, dim: usize, max_exponent: u64, max_gens: usize) -> Result<MonomialIdeal> {
    if dim == 0 || max_exponent == 0 || max_gens == 0 {
        return Err(Error::InvalidArgument("dimension, exponent and generator bounds must be positive".into()));
    }
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count).map(|_| loop {
        let e: Vec<u64> = (0..dim).map(|_| rng.gen_range(0..=max_exponent)).collect();
        if e.iter().any(|&x| x > 0) {
            break Monomial::from_exponents(&e);
        }
    });
    let gens: Vec<Monomial> = gens.collect();
    MonomialIdeal::new(dim, gens)
}

/// A `P`-primary ideal in the variables of a random prime `P`: pure powers
/// of every variable of `P` plus random extra generators supported on `P`.
/// Its only maximal associated prime is `P`.
pub fn random_unique_max_prime(
    rng: &mut impl Rng,
    dim: usize,
    max_exponent: u64,
    max_gens: usize,
) -> Result<(MonomialIdeal, MonomialPrime)> {
    if dim == 0 || max_exponent == 0 {
        return Err(Error::InvalidArgument("dimension and exponent bound must be positive".into()));
    }
    let prime = random_prime(rng, dim, dim);
    let mut gens: Vec<Monomial> = prime
        .vars()
        .iter()
        .map(|&v| Monomial::pure_power(dim, v, rng.gen_range(1..=max_exponent).into()))
        .collect();
    for _ in 0..rng.gen_range(0..=max_gens) {
        let mut e = vec![0u64; dim];
        for &v in prime.vars() {
            e[v] = rng.gen_range(0..=max_exponent);
        }
        if e.iter().any(|&x| x > 0) {
            gens.push(Monomial::from_exponents(&e));
        }
    }
    Ok((MonomialIdeal::new(dim, gens)?, prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{associated_primes, max_associated_primes};

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| SplitRng::new(7, 3).next_u64()).collect();
        assert!(a.windows(2).all(|w| w[0] == w[1]));
        let mut x = SplitRng::new(7, 3);
        let mut y = SplitRng::new(7, 4);
        assert_ne!(x.next_u64(), y.next_u64());
    }

    #[test]
    fn squarefree_instances_know_their_primes() {
        let mut rng = SplitRng::new(1, 0);
        for _ in 0..30 {
            let inst = random_squarefree(&mut rng, 4, 4, 3).unwrap();
            assert!(inst.ideal.is_squarefree());
            assert_eq!(associated_primes(&inst.ideal).unwrap(), inst.minimal_primes);
        }
    }

    #[test]
    fn unique_max_prime_instances() {
        let mut rng = SplitRng::new(2, 0);
        for _ in 0..30 {
            let (i, p) = random_unique_max_prime(&mut rng, 4, 3, 3).unwrap();
            assert_eq!(max_associated_primes(&i).unwrap(), vec![p]);
        }
    }

    #[test]
    fn random_ideals_are_proper() {
        let mut rng = SplitRng::new(3, 0);
        for _ in 0..30 {
            let i = random_ideal(&mut rng, 3, 2, 4).unwrap();
            assert!(i.is_proper());
        }
    }
}
