//! Seeded random scans over many ideals.

use rand::Rng;
use rayon::prelude::*;
use sympow_core::decomposition::associated_primes;
use sympow_core::random::{random_ideal, random_squarefree, SplitRng};
use sympow_core::symbolic::minimal_primes_bruteforce;
use sympow_core::{CheckKind, CheckResult, Error, MonomialPrime, Result};

use crate::parse::IdealDocument;
use crate::suite::{run_suite, CheckParams, Entry, Prepared, SuiteOptions, SuiteReport, Tally, ALL_CHECKS};

#[derive(Clone, Debug)]
pub struct ScanConfig {
    pub count: u64,
    pub seed: u64,
    /// Inclusive range for the number of variables.
    pub num_vars: (usize, usize),
    pub max_exponent: u64,
    pub max_gens: usize,
    pub squarefree_only: bool,
    pub selection: Vec<&'static str>,
    pub suite: SuiteOptions,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            count: 50,
            seed: 0,
            num_vars: (3, 5),
            max_exponent: 2,
            max_gens: 4,
            squarefree_only: false,
            selection: ALL_CHECKS.to_vec(),
            suite: SuiteOptions::default(),
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.num_vars;
        if lo == 0 || lo > hi || self.max_exponent == 0 || self.max_gens == 0 {
            return Err(Error::InvalidArgument("scan bounds must be positive and ordered".into()));
        }
        if self.squarefree_only && lo < 2 {
            return Err(Error::InvalidArgument("square-free scans need at least 2 variables".into()));
        }
        Ok(())
    }
}

pub struct Instance {
    pub index: u64,
    pub doc: IdealDocument,
    /// Minimal primes known from construction (square-free scans only).
    pub expected_primes: Option<Vec<MonomialPrime>>,
}

/// Instance `index` depends only on `(seed, index)`.
pub fn generate_instance(config: &ScanConfig, index: u64) -> Result<Instance> {
    let mut rng = SplitRng::new(config.seed, index);
    let dim = rng.gen_range(config.num_vars.0..=config.num_vars.1);
    let (ideal, expected_primes) = if config.squarefree_only {
        let inst = random_squarefree(&mut rng, dim, config.max_gens, dim - 1)?;
        (inst.ideal, Some(inst.minimal_primes))
    } else {
        (random_ideal(&mut rng, dim, config.max_exponent, config.max_gens)?, None)
    };
    Ok(Instance {
        index,
        doc: IdealDocument::from_ideal(&ideal, Some(format!("seed {} instance {}", config.seed, index))),
        expected_primes,
    })
}

/// `Ass(I)` from the decomposition, against brute-force minimal primes and,
/// when known, the primes the ideal was built from.
pub fn ass_crosscheck(
    ideal: &sympow_core::MonomialIdeal,
    expected: Option<&[MonomialPrime]>,
) -> Result<CheckResult> {
    let mut result = CheckResult::new("ass-crosscheck", CheckKind::Theorem);
    if !ideal.is_squarefree() {
        return Ok(result.not_applicable("ideal is not square-free"));
    }
    let ass = associated_primes(ideal)?;
    result.push_param("associated_primes", ass.len());
    let brute = minimal_primes_bruteforce(ideal)?;
    if brute != ass {
        result.verdict = sympow_core::Verdict::Fails;
        result.violations += 1;
        result.note("decomposition disagrees with brute-force minimal primes");
    }
    if let Some(expected) = expected {
        if expected != ass.as_slice() {
            result.verdict = sympow_core::Verdict::Fails;
            result.violations += 1;
            result.note("decomposition disagrees with the generating primes");
        }
    }
    Ok(result)
}

pub struct InstanceReport {
    pub instance: Instance,
    /// Set when the ideal could not be prepared at all.
    pub setup_error: Option<Error>,
    pub crosscheck: Option<Entry>,
    pub suite: Option<SuiteReport>,
}

impl InstanceReport {
    pub fn tally(&self) -> Tally {
        let mut t = self.suite.as_ref().map(SuiteReport::tally).unwrap_or_default();
        if let Some(c) = &self.crosscheck {
            t.add_entry(c);
        }
        match &self.setup_error {
            Some(Error::ResourceLimit { .. }) => t.resource_limits += 1,
            Some(_) => t.errors += 1,
            None => {}
        }
        t
    }
}

pub struct ScanOutcome {
    pub instances: Vec<InstanceReport>,
    pub tally: Tally,
}

fn run_instance(config: &ScanConfig, index: u64) -> InstanceReport {
    let instance = match generate_instance(config, index) {
        Ok(i) => i,
        Err(e) => {
            return InstanceReport {
                instance: Instance {
                    index,
                    doc: IdealDocument {
                        vars: Vec::new(),
                        gens: Vec::new(),
                        label: None,
                    },
                    expected_primes: None,
                },
                setup_error: Some(e),
                crosscheck: None,
                suite: None,
            }
        }
    };
    let ideal = instance.doc.ideal();
    let crosscheck = config.squarefree_only.then(|| Entry {
        name: "ass-crosscheck",
        params: CheckParams::default(),
        outcome: ass_crosscheck(&ideal, instance.expected_primes.as_deref()),
    });
    match Prepared::new(&ideal, config.suite.limits) {
        Ok(p) => InstanceReport {
            suite: Some(run_suite(&p, &config.selection, &config.suite)),
            instance,
            setup_error: None,
            crosscheck,
        },
        Err(e) => InstanceReport {
            instance,
            setup_error: Some(e),
            crosscheck,
            suite: None,
        },
    }
}

/// Runs every instance (concurrently) and returns them in index order.
pub fn scan(config: &ScanConfig) -> Result<ScanOutcome> {
    config.validate()?;
    let instances: Vec<InstanceReport> = (0..config.count)
        .into_par_iter()
        .map(|i| run_instance(config, i))
        .collect();
    let mut tally = Tally::default();
    for r in &instances {
        tally.merge(&r.tally());
    }
    Ok(ScanOutcome { instances, tally })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_scan() {
        let out = scan(&ScanConfig {
            count: 0,
            ..ScanConfig::default()
        })
        .unwrap();
        assert!(out.instances.is_empty());
        assert_eq!(out.tally, Tally::default());
    }

    #[test]
    fn instances_are_reproducible() {
        let config = ScanConfig {
            seed: 9,
            ..ScanConfig::default()
        };
        let a = generate_instance(&config, 4).unwrap();
        let b = generate_instance(&config, 4).unwrap();
        assert_eq!(a.doc, b.doc);
        assert_ne!(a.doc, generate_instance(&config, 5).unwrap().doc);
    }

    #[test]
    fn squarefree_scan_has_no_bugs() {
        let out = scan(&ScanConfig {
            count: 6,
            seed: 3,
            squarefree_only: true,
            ..ScanConfig::default()
        })
        .unwrap();
        assert_eq!(out.tally.bugs, 0);
        assert_eq!(out.tally.candidates, 0);
        assert!(out.tally.holds > 0);
    }

    #[test]
    fn invalid_config() {
        let config = ScanConfig {
            num_vars: (4, 3),
            ..ScanConfig::default()
        };
        assert!(scan(&config).is_err());
    }
}
