//! Outcome records shared by every containment and inequality check.

use std::time::Duration;

use num_bigint::BigInt;

use crate::geometry::Rational;
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Holds,
    Fails,
    /// The hypotheses of the statement are not met by the input.
    NotApplicable,
}

/// What a failing verdict means.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    /// A proven statement; failure is an implementation bug.
    Theorem,
    /// An open conjecture; failure is a candidate counterexample.
    Conjecture,
    /// A plain question about the input; failure is an answer.
    Query,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Int(BigInt),
    Rational(Rational),
    Bool(bool),
    Text(String),
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<BigInt> for ParamValue {
    fn from(v: BigInt) -> Self {
        ParamValue::Int(v)
    }
}

impl From<num_bigint::BigUint> for ParamValue {
    fn from(v: num_bigint::BigUint) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<Rational> for ParamValue {
    fn from(v: Rational) -> Self {
        ParamValue::Rational(v)
    }
}

impl From<bool> for ParamValue {
    fn from(v: bool) -> Self {
        ParamValue::Bool(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_string())
    }
}

impl From<String> for ParamValue {
    fn from(v: String) -> Self {
        ParamValue::Text(v)
    }
}

/// Verdict of one check together with every exponent it computed.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: &'static str,
    pub kind: CheckKind,
    pub verdict: Verdict,
    /// Inputs and derived exponents, in insertion order.
    pub params: Vec<(&'static str, ParamValue)>,
    /// Generators violating the containment, first the smallest.
    pub witnesses: Vec<Monomial>,
    /// Number of violating generators found, which may exceed `witnesses.len()`.
    pub violations: usize,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

/// Witness lists are truncated to this many entries.
pub const MAX_WITNESSES: usize = 16;

impl CheckResult {
    pub fn new(check: &'static str, kind: CheckKind) -> Self {
        CheckResult {
            check,
            kind,
            verdict: Verdict::Holds,
            params: Vec::new(),
            witnesses: Vec::new(),
            violations: 0,
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn param(mut self, key: &'static str, value: impl Into<ParamValue>) -> Self {
        self.params.push((key, value.into()));
        self
    }

    pub fn push_param(&mut self, key: &'static str, value: impl Into<ParamValue>) {
        self.params.push((key, value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&ParamValue> {
        self.params.iter().find(|(k, _)| *k == key).map(|(_, v)| v)
    }

    pub fn not_applicable(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::NotApplicable;
        self.notes.push(why.into());
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn record_violation(&mut self, witness: Monomial) {
        self.verdict = Verdict::Fails;
        self.violations += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }

    pub fn witness(&self) -> Option<&Monomial> {
        self.witnesses.first()
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// A proven statement failed.
    pub fn is_bug(&self) -> bool {
        self.kind == CheckKind::Theorem && self.verdict == Verdict::Fails
    }

    pub fn is_candidate_counterexample(&self) -> bool {
        self.kind == CheckKind::Conjecture && self.verdict == Verdict::Fails
    }
}
