//! Comparison of diagram spans with sampled intertwiner spaces.

use serde::Serialize;

use super::intertwiner::intertwiner_space_stable;
use super::matrix::Echelon;
use super::sample::{SampleKind, SampleSource};
use super::tmap::{checked_pow, vectorize, DEFAULT_VECTOR_CAP};
use crate::closure::ClosureBudget;
use crate::color::ColoredWord;
use crate::error::{Error, Result};
use crate::geometry::{Geometry, GeometrySpec};

/// Samples allowed per seed set before a space is declared unstable.
pub const DEFAULT_MAX_SAMPLES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "EQUAL")]
    Equal,
    #[serde(rename = "SPAN-STRICTLY-SMALLER")]
    SpanStrictlySmaller,
    #[serde(rename = "SPAN-NOT-CONTAINED")]
    SpanNotContained,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Equal => "EQUAL",
            Verdict::SpanStrictlySmaller => "SPAN-STRICTLY-SMALLER",
            Verdict::SpanNotContained => "SPAN-NOT-CONTAINED",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SeedOutcome {
    pub seed: u64,
    pub sampled_dimension: usize,
    pub samples_used: usize,
    pub stable: bool,
    pub contained: bool,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct BrauerEntry {
    pub upper: ColoredWord,
    pub lower: ColoredWord,
    pub diagrams: usize,
    pub span_rank: usize,
    pub outcomes: Vec<SeedOutcome>,
    pub verdict: Verdict,
    pub seed_consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BrauerReport {
    pub geometry: Geometry,
    pub kind: SampleKind,
    pub n: usize,
    pub max_points: usize,
    pub closure_points: usize,
    pub seeds: Vec<u64>,
    /// For the matrix models only containment is asserted; equality is experimental.
    pub containment_only: bool,
    pub entries: Vec<BrauerEntry>,
}

impl BrauerReport {
    pub fn all_equal(&self) -> bool {
        self.entries.iter().all(|e| e.verdict == Verdict::Equal)
    }

    pub fn all_contained(&self) -> bool {
        self.entries.iter().all(|e| e.outcomes.iter().all(|o| o.contained))
    }

    pub fn seed_consistent(&self) -> bool {
        self.entries.iter().all(|e| e.seed_consistent)
    }

    pub fn all_stable(&self) -> bool {
        self.entries.iter().all(|e| e.outcomes.iter().all(|o| o.stable))
    }

    /// The hard assertion: containment for models, equality otherwise.
    pub fn passed(&self) -> bool {
        if self.containment_only {
            self.all_contained()
        } else {
            self.all_equal() && self.seed_consistent()
        }
    }
}

/// Word pairs with at most `max_points` legs; white only when `real`.
pub fn word_pairs(max_points: usize, real: bool) -> Vec<(ColoredWord, ColoredWord)> {
    let words = |len: usize| {
        if real {
            vec![ColoredWord::white(len)]
        } else {
            ColoredWord::all_of_length(len)
        }
    };
    let mut out = Vec::new();
    for total in 0..=max_points {
        for k in 0..=total {
            for up in words(k) {
                for lo in words(total - k) {
                    out.push((up.clone(), lo));
                }
            }
        }
    }
    out
}

/// Closure budget used for words of up to `word_points` legs. A closure
/// truncated at the word size can miss diagrams whose derivation passes
/// through larger ones.
pub fn default_closure_points(word_points: usize) -> usize {
    (word_points + 2).clamp(8, crate::closure::MAX_CLOSURE_POINTS)
}

/// Compares `span{T_π}` over the closure of `g` with the sampled intertwiner
/// space for every word pair within `budget`, once per seed set.
pub fn brauer_check(g: &GeometrySpec, n: usize, budget: ClosureBudget, seeds: &[u64]) -> Result<BrauerReport> {
    let closure_budget = ClosureBudget::new(default_closure_points(budget.max_points), budget.max_rounds)?;
    brauer_check_with_closure(g, n, budget, closure_budget, seeds)
}

pub fn brauer_check_with_closure(
    g: &GeometrySpec,
    n: usize,
    budget: ClosureBudget,
    closure_budget: ClosureBudget,
    seeds: &[u64],
) -> Result<BrauerReport> {
    if closure_budget.max_points < budget.max_points {
        return Err(Error::InvalidArgument("the closure budget must cover the word budget".into()));
    }
    let kind = g.sampler_kind.ok_or_else(|| Error::NoSampler(g.name.to_string()))?;
    if seeds.is_empty() {
        return Err(Error::InvalidArgument("at least one seed is required".into()));
    }
    checked_pow(n, budget.max_points, DEFAULT_VECTOR_CAP)?;
    let closure = g.close(closure_budget)?;
    closure.ensure_saturated()?;
    let containment_only = matches!(kind, SampleKind::AntidiagRealPair | SampleKind::AntidiagComplexPair);
    let mut entries = Vec::new();
    for (upper, lower) in word_pairs(budget.max_points, g.is_real()) {
        let hom = closure.hom(&upper, &lower);
        let len = n.pow((upper.len() + lower.len()) as u32);
        let mut span = Echelon::new(len);
        for d in &hom {
            span.insert(vectorize(d, n)?);
        }
        let span_rank = span.rank();
        let mut outcomes = Vec::new();
        for &seed in seeds {
            let h = intertwiner_space_stable(&SampleSource::new(kind, n, seed), &upper, &lower, DEFAULT_MAX_SAMPLES)?;
            let mut sampled = Echelon::new(len);
            for v in h.vectors() {
                sampled.insert(v);
            }
            let contained = hom.iter().map(|d| vectorize(d, n)).collect::<Result<Vec<_>>>()?.iter().all(|v| sampled.contains(v));
            let verdict = if !contained {
                Verdict::SpanNotContained
            } else if span_rank < h.dimension() {
                Verdict::SpanStrictlySmaller
            } else {
                Verdict::Equal
            };
            outcomes.push(SeedOutcome {
                seed,
                sampled_dimension: h.dimension(),
                samples_used: h.samples_used,
                stable: h.stable,
                contained,
                verdict,
            });
        }
        let first = &outcomes[0];
        let seed_consistent = outcomes
            .iter()
            .all(|o| o.sampled_dimension == first.sampled_dimension && o.verdict == first.verdict);
        let verdict = outcomes
            .iter()
            .map(|o| o.verdict)
            .max_by_key(|v| match v {
                Verdict::Equal => 0,
                Verdict::SpanStrictlySmaller => 1,
                Verdict::SpanNotContained => 2,
            })
            .expect("nonempty");
        entries.push(BrauerEntry {
            upper,
            lower,
            diagrams: hom.len(),
            span_rank,
            outcomes,
            verdict,
            seed_consistent,
        });
    }
    Ok(BrauerReport {
        geometry: g.name,
        kind,
        n,
        max_points: budget.max_points,
        closure_points: closure_budget.max_points,
        seeds: seeds.to_vec(),
        containment_only,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::named_geometry;

    #[test]
    fn pair_counts() {
        assert_eq!(word_pairs(2, true).len(), 1 + 2 + 3);
        assert_eq!(word_pairs(2, false).len(), 1 + 2 * 2 + 3 * 4);
    }

    #[test]
    fn orthogonal_small() {
        let r = brauer_check(&named_geometry(Geometry::ON), 2, ClosureBudget::points(4), &[1, 1001]).unwrap();
        assert!(r.passed() && r.all_stable(), "{r:#?}");
    }

    #[test]
    fn geometries_without_sampler_are_rejected() {
        let e = brauer_check(&named_geometry(Geometry::ONPlus), 2, ClosureBudget::points(4), &[1]);
        assert!(matches!(e, Err(Error::NoSampler(_))));
    }
}
