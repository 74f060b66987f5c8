//! Named checks, their parameter sweeps and the per-ideal suite.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use sympow_core::geometry::{
    ceil_rational, check_alpha_lower_bound, check_realizing_denominator, check_stairs_containment,
    check_symbolic_polyhedron_containment, rational_from_biguint, StairsOptions,
};
use sympow_core::invariants::{
    check_alphaslope, check_chudnovsky, check_prop_equigen, check_prop_ifchudholds, check_prop_intclosed,
    InvariantReport,
};
use sympow_core::symbolic::{
    check_containment_conjecture, check_prop_onemax, check_prop_sigma, check_remark_equal_exponents,
    check_symbolic_in_mpower, check_thm_sqfree, check_unique_max_prime,
};
use sympow_core::{
    CheckKind, CheckResult, Error, Limits, MonomialIdeal, Rational, Result, SymbolicContext, SymbolicPolyhedron,
};

/// Every check the suite knows, in report order.
pub const ALL_CHECKS: &[&str] = &[
    "thm-sqfree",
    "equal-exponents",
    "containment-conjecture",
    "onemax",
    "sigma",
    "unique-max-prime",
    "polyhedron-containment",
    "alpha-lower-bound",
    "realizing-denominator",
    "stairs",
    "chudnovsky",
    "alphaslope",
    "equigen",
    "ifchudholds",
    "intclosed",
];

pub fn canonical_check_name(name: &str) -> Option<&'static str> {
    ALL_CHECKS
        .iter()
        .chain(&["containment", "ass-crosscheck"])
        .find(|c| **c == name)
        .copied()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamRanges {
    pub m: (u32, u32),
    pub t: (u32, u32),
    pub r: (u32, u32),
}

impl Default for ParamRanges {
    fn default() -> Self {
        ParamRanges {
            m: (1, 3),
            t: (1, 3),
            r: (1, 3),
        }
    }
}

fn span((lo, hi): (u32, u32)) -> std::ops::RangeInclusive<u32> {
    lo..=hi
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub ranges: ParamRanges,
    /// `α(I^(m)) ≥ m·α(𝒬)` is checked for `m` up to this bound.
    pub alpha_max_m: u32,
    /// Largest `m` tried when looking for `α(I^(m)) = m·α(𝒬)`.
    pub equality_cap: u32,
    pub stairs: StairsOptions,
    pub limits: Limits,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            ranges: ParamRanges::default(),
            alpha_max_m: 6,
            equality_cap: 12,
            stairs: StairsOptions::default(),
            limits: Limits::default(),
        }
    }
}

/// The parameters one check was run with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckParams {
    pub m: Option<u32>,
    pub t: Option<u32>,
    pub r: Option<u32>,
    pub s: Option<u64>,
}

impl CheckParams {
    pub fn mtr(m: u32, t: u32, r: u32) -> Self {
        CheckParams {
            m: Some(m),
            t: Some(t),
            r: Some(r),
            s: None,
        }
    }

    pub fn r(r: u32) -> Self {
        CheckParams {
            r: Some(r),
            ..Self::default()
        }
    }

    pub fn m(m: u32) -> Self {
        CheckParams {
            m: Some(m),
            ..Self::default()
        }
    }

    fn need_m(&self) -> Result<u32> {
        self.m.ok_or_else(|| Error::InvalidArgument("missing m".into()))
    }

    fn need_t(&self) -> Result<u32> {
        self.t.ok_or_else(|| Error::InvalidArgument("missing t".into()))
    }

    fn need_r(&self) -> Result<u32> {
        self.r.ok_or_else(|| Error::InvalidArgument("missing r".into()))
    }
}

/// An ideal prepared for checking.
pub struct Prepared {
    pub ctx: SymbolicContext,
    pub polyhedron: SymbolicPolyhedron,
}

impl Prepared {
    pub fn new(ideal: &MonomialIdeal, limits: Limits) -> Result<Self> {
        let ctx = SymbolicContext::with_limits(ideal, limits)?;
        let polyhedron = SymbolicPolyhedron::from_context(&ctx)?;
        Ok(Prepared { ctx, polyhedron })
    }
}

/// Runs one named check.
pub fn run_check(p: &Prepared, name: &str, params: &CheckParams, options: &SuiteOptions) -> Result<CheckResult> {
    let (ctx, q) = (&p.ctx, &p.polyhedron);
    match name {
        "containment" => {
            let s = params.s.ok_or_else(|| Error::InvalidArgument("missing s".into()))?;
            check_symbolic_in_mpower(ctx, params.need_m()?, s, params.need_r()?)
        }
        "thm-sqfree" => {
            let (m, t, r) = (params.need_m()?, params.need_t()?, params.need_r()?);
            match check_thm_sqfree(ctx, m, t, r) {
                Err(Error::NotSquarefree) => Ok(CheckResult::new("thm-sqfree", CheckKind::Theorem)
                    .param("m", m)
                    .param("t", t)
                    .param("r", r)
                    .not_applicable("ideal is not square-free")),
                other => other,
            }
        }
        "equal-exponents" => check_remark_equal_exponents(ctx, params.need_m()?, params.need_t()?, params.need_r()?),
        "containment-conjecture" => {
            check_containment_conjecture(ctx, params.need_m()?, params.need_t()?, params.need_r()?)
        }
        "onemax" => check_prop_onemax(ctx, params.need_r()?),
        "sigma" => check_prop_sigma(ctx, params.need_r()?),
        "unique-max-prime" => check_unique_max_prime(ctx, params.need_m()?),
        "polyhedron-containment" => check_symbolic_polyhedron_containment(ctx, q, params.need_m()?),
        "alpha-lower-bound" => check_alpha_lower_bound(ctx, q, params.need_m()?, options.equality_cap),
        "realizing-denominator" => check_realizing_denominator(ctx, q),
        "stairs" => check_stairs_containment(ctx, q, params.need_r()?, &options.stairs),
        "chudnovsky" => check_chudnovsky(ctx, q),
        "alphaslope" => check_alphaslope(ctx, q, params.need_r()?, params.need_m()?),
        "equigen" => check_prop_equigen(ctx, q, params.need_r()?),
        "ifchudholds" => check_prop_ifchudholds(ctx, q, params.need_r()?),
        "intclosed" => check_prop_intclosed(ctx, q),
        "ass-crosscheck" => crate::scan::ass_crosscheck(ctx.ideal(), None),
        other => Err(Error::InvalidArgument(format!("unknown check `{other}`"))),
    }
}

/// Smallest `m` meeting `m ≥ max(er, β(I^r)/α(𝒬))`.
fn alphaslope_threshold(p: &Prepared, r: u32) -> Result<u32> {
    let e = p.ctx.big_height() as u32;
    let beta = rational_from_biguint(p.ctx.ordinary_power(r)?.max_degree().expect("non-zero"));
    let alpha_q: &Rational = &p.polyhedron.alpha()?.value;
    let slope = ceil_rational(&(beta / alpha_q));
    let er = BigInt::from(e * r);
    std::cmp::max(er, slope)
        .to_u32()
        .ok_or_else(|| Error::Internal("threshold overflow".into()))
}

/// The parameter sets a check is swept over.
pub fn expand(p: &Prepared, name: &str, options: &SuiteOptions) -> Vec<CheckParams> {
    let ranges = options.ranges;
    match name {
        "thm-sqfree" | "equal-exponents" | "containment-conjecture" => span(ranges.m)
            .flat_map(|m| span(ranges.t).flat_map(move |t| span(ranges.r).map(move |r| CheckParams::mtr(m, t, r))))
            .collect(),
        "onemax" | "sigma" | "stairs" | "equigen" | "ifchudholds" => span(ranges.r).map(CheckParams::r).collect(),
        "unique-max-prime" | "polyhedron-containment" => span(ranges.m).map(CheckParams::m).collect(),
        "alpha-lower-bound" => vec![CheckParams::m(options.alpha_max_m)],
        "alphaslope" => span(ranges.r)
            .flat_map(|r| {
                let mut ms: Vec<u32> = span(ranges.m).collect();
                if let Ok(th) = alphaslope_threshold(p, r) {
                    if !ms.contains(&th) {
                        ms.push(th);
                    }
                }
                ms.into_iter().map(move |m| CheckParams {
                    m: Some(m),
                    r: Some(r),
                    ..CheckParams::default()
                })
            })
            .collect(),
        _ => vec![CheckParams::default()],
    }
}

pub struct Entry {
    pub name: &'static str,
    pub params: CheckParams,
    pub outcome: Result<CheckResult>,
}

pub struct SuiteReport {
    pub invariants: Result<InvariantReport>,
    pub entries: Vec<Entry>,
}

/// Tallies of one or more suite runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    /// Theorem checks that failed.
    pub bugs: usize,
    pub not_applicable: usize,
    pub candidates: usize,
    /// Query checks answered negatively.
    pub answered_false: usize,
    pub resource_limits: usize,
    pub errors: usize,
}

impl Tally {
    pub fn add_entry(&mut self, entry: &Entry) {
        match &entry.outcome {
            Ok(res) => match res.verdict {
                sympow_core::Verdict::Holds => self.holds += 1,
                sympow_core::Verdict::NotApplicable => self.not_applicable += 1,
                sympow_core::Verdict::Fails => match res.kind {
                    CheckKind::Theorem => self.bugs += 1,
                    CheckKind::Conjecture => self.candidates += 1,
                    CheckKind::Query => self.answered_false += 1,
                },
            },
            Err(Error::ResourceLimit { .. }) => self.resource_limits += 1,
            Err(_) => self.errors += 1,
        }
    }

    pub fn merge(&mut self, other: &Tally) {
        self.holds += other.holds;
        self.bugs += other.bugs;
        self.not_applicable += other.not_applicable;
        self.candidates += other.candidates;
        self.answered_false += other.answered_false;
        self.resource_limits += other.resource_limits;
        self.errors += other.errors;
    }
}

impl SuiteReport {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for e in &self.entries {
            t.add_entry(e);
        }
        t
    }
}

/// Runs the selected checks over their parameter sweeps. Errors, including
/// resource limits, are recorded per check and never abort the run.
pub fn run_suite(p: &Prepared, selection: &[&'static str], options: &SuiteOptions) -> SuiteReport {
    let invariants = InvariantReport::compute(&p.ctx, &p.polyhedron);
    let mut entries = Vec::new();
    for &name in ALL_CHECKS.iter().filter(|c| selection.contains(c)) {
        for params in expand(p, name, options) {
            let outcome = run_check(p, name, &params, options);
            entries.push(Entry { name, params, outcome });
        }
    }
    SuiteReport { invariants, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use sympow_core::{Monomial, Verdict};

    fn prepared(rows: &[&[u64]], dim: usize) -> Prepared {
        Prepared::new(&MonomialIdeal::from_rows(dim, rows.iter().copied()).unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn counterexample_ideal_is_flagged() {
        let p = prepared(&[&[1, 2, 0], &[0, 1, 2], &[2, 0, 1], &[1, 1, 1]], 3);
        let report = run_suite(&p, ALL_CHECKS, &SuiteOptions::default());
        let tally = report.tally();
        assert_eq!(tally.bugs, 0);
        assert!(tally.candidates > 0);
        let hit = report
            .entries
            .iter()
            .find(|e| e.name == "containment-conjecture" && e.params == CheckParams::mtr(1, 2, 1))
            .unwrap();
        let res = hit.outcome.as_ref().unwrap();
        assert_eq!(res.verdict, Verdict::Fails);
        assert_eq!(res.witness(), Some(&Monomial::from_exponents(&[2, 2, 2])));
    }

    #[test]
    fn prime_passes_everything() {
        let p = prepared(&[&[1, 0, 0], &[0, 0, 1]], 3);
        let report = run_suite(&p, ALL_CHECKS, &SuiteOptions::default());
        for e in &report.entries {
            let res = e.outcome.as_ref().unwrap();
            assert!(res.verdict != Verdict::Fails || res.kind == CheckKind::Query, "{}", e.name);
        }
    }

    #[test]
    fn unknown_names() {
        assert_eq!(canonical_check_name("stairs"), Some("stairs"));
        assert_eq!(canonical_check_name("containment"), Some("containment"));
        assert_eq!(canonical_check_name("nope"), None);
    }
}
