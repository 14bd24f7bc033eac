//! Executable checks of the inequalities and growth statements relating the
//! convexity parameters, plus the `Ξ` arithmetic and the Ψ witness finder.
//!
//! Checks are [`TheoremCheck`] trait objects registered by name in a
//! [`CheckRegistry`]. Every check produces a [`CheckReport`]; a `Fails`
//! verdict carries the parameter values that violate the inequality, so the
//! failure can be replayed through [`crate::params`].
//!
//! Logarithms never appear as floats: `a ≤ log₂ b` is always decided as
//! `2^a ≤ b` on integers.

mod checks;
pub mod psi;
pub mod xi;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::set_system::SetSystem;
use crate::Budget;

pub use checks::{
    check_graded_linear, check_hellygrowth, check_jamison, check_levi, check_radongrowth, growth_diagnostic,
    holmsen_hypothesis, GrowthEntry, Sign,
};
pub use psi::{rg2_witness, PsiTable};
pub use xi::{xi, xi_bounded};

/// An exact quantity recorded in a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(u64),
    Big(BigUint),
    Profile(Vec<u64>),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Big(v) => write!(f, "{v}"),
            Value::Profile(v) => {
                let parts: Vec<String> = v.iter().map(u64::to_string).collect();
                write!(f, "[{}]", parts.join(","))
            }
            Value::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { witness: Vec<(String, Value)> },
    NotApplicable { reason: String },
    Budget { lower_bound: Option<u64> },
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails { .. } => "fails",
            Verdict::NotApplicable { .. } => "not-applicable",
            Verdict::Budget { .. } => "budget",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub quantities: Vec<(String, Value)>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), quantities: Vec::new(), verdict: Verdict::Holds, notes: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value) {
        self.quantities.push((key.into(), value));
    }

    pub fn quantity(&self, key: &str) -> Option<&Value> {
        self.quantities.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    /// Runs `body`, turning budget exhaustion into a `Budget` verdict while
    /// keeping whatever quantities were recorded before it.
    pub(crate) fn run(name: &str, body: impl FnOnce(&mut CheckReport) -> Result<()>) -> Result<CheckReport> {
        let mut report = CheckReport::new(name);
        match body(&mut report) {
            Ok(()) => Ok(report),
            Err(Error::BudgetExceeded { lower_bound, .. }) => {
                report.verdict = Verdict::Budget { lower_bound };
                Ok(report)
            }
            Err(e) => Err(e),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "check {}", self.name)?;
        for (k, v) in &self.quantities {
            writeln!(f, "  {k} = {v}")?;
        }
        match &self.verdict {
            Verdict::Holds => write!(f, "verdict: holds")?,
            Verdict::Fails { witness } => {
                write!(f, "verdict: fails")?;
                for (k, v) in witness {
                    write!(f, "\n  witness {k} = {v}")?;
                }
            }
            Verdict::NotApplicable { reason } => write!(f, "verdict: not-applicable ({reason})")?,
            Verdict::Budget { lower_bound: Some(b) } => write!(f, "verdict: budget (lower bound {b})")?,
            Verdict::Budget { lower_bound: None } => write!(f, "verdict: budget")?,
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// Named integer arguments for a check, e.g. parsed from `m=2,n=3`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckArgs(BTreeMap<String, u64>);

impl CheckArgs {
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::input(format!("expected key=value, got `{part}`")))?;
            let v: u64 = v.trim().parse().map_err(|_| Error::input(format!("invalid value in `{part}`")))?;
            if map.insert(k.trim().to_string(), v).is_some() {
                return Err(Error::input(format!("argument `{}` given twice", k.trim())));
            }
        }
        Ok(CheckArgs(map))
    }

    pub fn set(&mut self, key: &str, value: u64) {
        self.0.insert(key.to_string(), value);
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.0.get(key).copied()
    }

    fn require(&self, key: &str, check: &str) -> Result<u64> {
        self.get(key).ok_or_else(|| Error::input(format!("check `{check}` needs argument `{key}`")))
    }

    fn usize_or(&self, key: &str, default: usize) -> Result<usize> {
        match self.get(key) {
            None => Ok(default),
            Some(v) => usize::try_from(v).map_err(|_| Error::input(format!("`{key}` out of range"))),
        }
    }

    fn keys(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }
}

/// A check runnable against one set system.
pub trait TheoremCheck: Send + Sync {
    fn name(&self) -> &'static str;

    /// Accepted argument names.
    fn arguments(&self) -> &'static [&'static str];

    fn run(&self, f: &SetSystem, args: &CheckArgs, budget: &Budget) -> Result<CheckReport>;
}

struct Levi;
struct Jamison;
struct GradedLinear;
struct RadonGrowth;
struct HellyGrowth;
struct Holmsen;

impl TheoremCheck for Levi {
    fn name(&self) -> &'static str {
        "levi"
    }
    fn arguments(&self) -> &'static [&'static str] {
        &[]
    }
    fn run(&self, f: &SetSystem, _: &CheckArgs, budget: &Budget) -> Result<CheckReport> {
        check_levi(f, budget)
    }
}

impl TheoremCheck for Jamison {
    fn name(&self) -> &'static str {
        "jamison"
    }
    fn arguments(&self) -> &'static [&'static str] {
        &["m", "n"]
    }
    fn run(&self, f: &SetSystem, args: &CheckArgs, budget: &Budget) -> Result<CheckReport> {
        check_jamison(f, args.usize_or("m", 2)?, args.usize_or("n", 2)?, budget)
    }
}

/// `t` defaults to the number of members, where every profile has settled.
impl TheoremCheck for GradedLinear {
    fn name(&self) -> &'static str {
        "graded-linear"
    }
    fn arguments(&self) -> &'static [&'static str] {
        &["t"]
    }
    fn run(&self, f: &SetSystem, args: &CheckArgs, budget: &Budget) -> Result<CheckReport> {
        check_graded_linear(f, args.usize_or("t", f.len().max(1))?, budget)
    }
}

impl TheoremCheck for RadonGrowth {
    fn name(&self) -> &'static str {
        "radongrowth"
    }
    fn arguments(&self) -> &'static [&'static str] {
        &["t"]
    }
    fn run(&self, f: &SetSystem, args: &CheckArgs, budget: &Budget) -> Result<CheckReport> {
        check_radongrowth(f, args.usize_or("t", f.len().max(2))?, budget)
    }
}

impl TheoremCheck for HellyGrowth {
    fn name(&self) -> &'static str {
        "hellygrowth"
    }
    fn arguments(&self) -> &'static [&'static str] {
        &["t0", "t"]
    }
    fn run(&self, f: &SetSystem, args: &CheckArgs, budget: &Budget) -> Result<CheckReport> {
        let t0 = args.require("t0", self.name())? as usize;
        let t = args.require("t", self.name())? as usize;
        check_hellygrowth(f, t0, t, budget)
    }
}

impl TheoremCheck for Holmsen {
    fn name(&self) -> &'static str {
        "holmsen"
    }
    fn arguments(&self) -> &'static [&'static str] {
        &["c", "ell"]
    }
    fn run(&self, f: &SetSystem, args: &CheckArgs, budget: &Budget) -> Result<CheckReport> {
        let c = args.require("c", self.name())? as usize;
        let ell = args.require("ell", self.name())? as usize;
        holmsen_hypothesis(f, c, ell, budget)
    }
}

pub struct CheckRegistry {
    checks: Vec<Box<dyn TheoremCheck>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { checks: Vec::new() }
    }

    pub fn register(&mut self, check: Box<dyn TheoremCheck>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.checks.iter().map(|c| c.name())
    }

    pub fn get(&self, name: &str) -> Result<&dyn TheoremCheck> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref()).ok_or_else(|| {
            let known: Vec<_> = self.names().collect();
            Error::input(format!("unknown check `{name}` (known: {})", known.join(", ")))
        })
    }

    /// Looks up `name`, rejects unknown arguments and runs it.
    pub fn run(&self, name: &str, f: &SetSystem, args: &CheckArgs, budget: &Budget) -> Result<CheckReport> {
        let check = self.get(name)?;
        if let Some(bad) = args.keys().find(|k| !check.arguments().contains(k)) {
            return Err(Error::input(format!(
                "check `{name}` does not take `{bad}` (accepts: {})",
                check.arguments().join(", ")
            )));
        }
        check.run(f, args, budget)
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        let mut r = CheckRegistry::empty();
        r.register(Box::new(Levi));
        r.register(Box::new(Jamison));
        r.register(Box::new(GradedLinear));
        r.register(Box::new(RadonGrowth));
        r.register(Box::new(HellyGrowth));
        r.register(Box::new(Holmsen));
        r
    }
}
