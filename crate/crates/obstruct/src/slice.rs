//! Aggregated slice obstructions: signature, Fox-Milnor, Arf, and the
//! bounded metabolizer search rolled into one report with a one-sided
//! verdict.

use seifert::{arf, signature, Arf, Epsilon, SeifertForm};

use crate::fox_milnor::DEFAULT_DEGREE_CAP;
use crate::{
    fox_milnor_capped, metabolizer_search, require_knot, FoxMilnor, MetabolizerOutcome,
    ObstructError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceOptions {
    pub entry_bound: i64,
    pub rank_cap: usize,
    pub degree_cap: usize,
}

impl Default for SliceOptions {
    fn default() -> Self {
        SliceOptions {
            entry_bound: 2,
            rank_cap: 8,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    NotSlice,
    Inconclusive,
}

/// Slice obstruction summary. `arf` is None when epsilon is -1 (the Arf
/// condition does not apply there); the metabolizer field is advisory only
/// and never drives the verdict, since its search is bounded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceReport {
    pub signature: i64,
    pub fox_milnor: FoxMilnor,
    pub arf: Option<Arf>,
    pub metabolizer: MetabolizerOutcome,
    pub verdict: Verdict,
}

impl SliceReport {
    pub fn signature_zero(&self) -> bool {
        self.signature == 0
    }
}

/// Runs every obstruction. Verdict is NotSlice exactly when a necessary
/// condition fails: nonzero signature, failed Fox-Milnor factorization, or
/// (for epsilon +1) Arf equal to 1. Never claims "slice".
pub fn slice_report(form: &SeifertForm, options: &SliceOptions) -> Result<SliceReport, ObstructError> {
    require_knot(form)?;
    let signature = signature(form);
    let fox_milnor = fox_milnor_capped(form, options.degree_cap)?;
    let arf = match form.epsilon() {
        Epsilon::Plus => Some(arf(form).expect("epsilon checked")),
        Epsilon::Minus => None,
    };
    let metabolizer = if form.rank() > options.rank_cap {
        // out of search range: record the bounds instead of failing the report
        MetabolizerOutcome::NotFoundWithinBounds {
            entry_bound: options.entry_bound,
            rank_cap: options.rank_cap,
        }
    } else {
        metabolizer_search(form, options.entry_bound, options.rank_cap)?
    };
    let obstructed =
        signature != 0 || !fox_milnor.passed() || arf == Some(Arf::One);
    let verdict = if obstructed {
        Verdict::NotSlice
    } else {
        Verdict::Inconclusive
    };
    Ok(SliceReport {
        signature,
        fox_milnor,
        arf,
        metabolizer,
        verdict,
    })
}
