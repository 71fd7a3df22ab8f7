//! Seeded sampling of admissible parameter points, batch verification of
//! catalog records, variant resolution and report serialization.
//!
//! Draws come from SplitMix64 so that any implementation can reproduce the
//! exact sample stream from the seed:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```
//!
//! An integer in `[lo, hi]` is `lo + next() % (hi - lo + 1)`. For each draw
//! the record's parameters are visited in declaration order: a rational takes
//! a numerator in `[-9, 9]` then a denominator in `[1, 4]`, `n` is uniform in
//! `[0, max_n]` and `ell` is uniform in the record's range.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::{find_identity, CatalogError, IdentityRecord, ParamAssignment, ParamKind, Status, VerificationOutcome};
use crate::exact::Rational;

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
pub const MAX_CONSECUTIVE_REJECTIONS: usize = 10_000;
pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[lo, hi]` (modulo reduction).
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range {lo}..={hi}");
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    pub fn rational(&mut self, max_numerator: i64, max_denominator: i64) -> Rational {
        let p = self.range_inclusive(-max_numerator, max_numerator);
        let q = self.range_inclusive(1, max_denominator);
        Rational::new(p, q)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantSelector {
    All,
    #[serde(untagged)]
    One(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalBounds {
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for RationalBounds {
    fn default() -> Self {
        RationalBounds { max_numerator: 9, max_denominator: 4 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SamplingPlan {
    pub id: String,
    pub variants: VariantSelector,
    pub samples: usize,
    pub max_n: usize,
    pub seed: u64,
    pub rational_bounds: RationalBounds,
    /// `None` keeps every counterexample.
    #[serde(skip)]
    pub counterexample_cap: Option<usize>,
}

impl SamplingPlan {
    pub const DEFAULT_SAMPLES: usize = 100;
    pub const DEFAULT_MAX_N: usize = 8;
    pub const DEFAULT_SEED: u64 = 42;

    pub fn new(id: impl Into<String>) -> Self {
        SamplingPlan {
            id: id.into(),
            variants: VariantSelector::All,
            samples: Self::DEFAULT_SAMPLES,
            max_n: Self::DEFAULT_MAX_N,
            seed: Self::DEFAULT_SEED,
            rational_bounds: RationalBounds::default(),
            counterexample_cap: Some(DEFAULT_COUNTEREXAMPLE_CAP),
        }
    }

    pub fn samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn max_n(mut self, max_n: usize) -> Self {
        self.max_n = max_n;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn variant(mut self, name: impl Into<String>) -> Self {
        self.variants = VariantSelector::One(name.into());
        self
    }

    pub fn bounds(mut self, max_numerator: i64, max_denominator: i64) -> Self {
        self.rational_bounds = RationalBounds { max_numerator, max_denominator };
        self
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("sampling exhausted for '{id}': {MAX_CONSECUTIVE_REJECTIONS} consecutive rejections after {accepted} accepted draws")]
    SamplingExhausted { id: String, accepted: usize },
}

fn draw(record: &IdentityRecord, plan: &SamplingPlan, rng: &mut SplitMix64) -> ParamAssignment {
    let mut out = ParamAssignment::default();
    let b = &plan.rational_bounds;
    for p in &record.params {
        match (p.kind, p.name) {
            (ParamKind::Rational, name) => {
                out.values.insert(name.to_string(), rng.rational(b.max_numerator, b.max_denominator));
            }
            (ParamKind::NonnegativeInteger, "ell") => {
                let range = record.ell_range.clone().unwrap_or(0..=0);
                out.ell = Some(rng.range_inclusive(*range.start() as i64, *range.end() as i64) as usize);
            }
            (ParamKind::NonnegativeInteger, _) => {
                out.n = rng.range_inclusive(0, plan.max_n as i64) as usize;
            }
        }
    }
    out
}

fn validate(plan: &SamplingPlan) -> Result<(), VerifyError> {
    if plan.samples == 0 {
        return Err(VerifyError::InvalidPlan("sample count must be at least 1".into()));
    }
    let b = &plan.rational_bounds;
    if b.max_numerator < 0 || b.max_denominator < 1 {
        return Err(VerifyError::InvalidPlan("rational bounds need max_numerator >= 0, max_denominator >= 1".into()));
    }
    Ok(())
}

/// Admissible assignments in stream order. Draws are generated sequentially
/// and screened in parallel batches; the scan over a batch is ordered, so the
/// result equals a purely sequential run.
pub fn sample_params(plan: &SamplingPlan) -> Result<Vec<ParamAssignment>, VerifyError> {
    validate(plan)?;
    let record = find_identity(&plan.id)?;
    let mut rng = SplitMix64::new(plan.seed);
    let mut accepted = Vec::with_capacity(plan.samples);
    let mut rejections = 0usize;
    let batch = plan.samples.clamp(16, 256);
    while accepted.len() < plan.samples {
        let draws: Vec<ParamAssignment> = (0..batch).map(|_| draw(record, plan, &mut rng)).collect();
        let verdicts: Vec<bool> = draws.par_iter().map(|a| record.admissible(a).is_ok()).collect();
        for (assignment, ok) in draws.into_iter().zip(verdicts) {
            if ok {
                accepted.push(assignment);
                rejections = 0;
                if accepted.len() == plan.samples {
                    break;
                }
            } else {
                rejections += 1;
                if rejections >= MAX_CONSECUTIVE_REJECTIONS {
                    return Err(VerifyError::SamplingExhausted { id: plan.id.clone(), accepted: accepted.len() });
                }
            }
        }
    }
    Ok(accepted)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub assignment: ParamAssignment,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariantReport {
    pub name: String,
    pub expected_holds: bool,
    pub holds: usize,
    pub fails: usize,
    pub not_admissible: usize,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VariantResolution {
    Resolved(String),
    Unresolved,
}

impl VariantResolution {
    pub fn name(&self) -> &str {
        match self {
            VariantResolution::Resolved(name) => name,
            VariantResolution::Unresolved => "unresolved",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub engine_version: String,
    pub seed: u64,
    pub plan: SamplingPlan,
    pub declared_status: Status,
    pub effective_status: Status,
    pub variants: Vec<VariantReport>,
    pub resolved_variant: String,
    pub wall_time: f64,
}

impl VerificationReport {
    pub fn variant(&self, name: &str) -> Option<&VariantReport> {
        self.variants.iter().find(|v| v.name == name)
    }

    /// True when no expected-holds variant failed.
    pub fn expected_variants_hold(&self) -> bool {
        self.variants.iter().filter(|v| v.expected_holds).all(|v| v.fails == 0)
    }

    pub fn resolution(&self) -> VariantResolution {
        resolve(&self.variants)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per variant; counterexamples are only in the JSON form.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "engine_version",
            "seed",
            "samples",
            "max_n",
            "variant",
            "expected_holds",
            "holds",
            "fails",
            "not_admissible",
            "declared_status",
            "effective_status",
            "resolved_variant",
        ])
        .expect("in-memory csv");
        for v in &self.variants {
            w.write_record([
                self.id.clone(),
                self.engine_version.clone(),
                self.seed.to_string(),
                self.plan.samples.to_string(),
                self.plan.max_n.to_string(),
                v.name.clone(),
                v.expected_holds.to_string(),
                v.holds.to_string(),
                v.fails.to_string(),
                v.not_admissible.to_string(),
                self.declared_status.as_str().to_string(),
                self.effective_status.as_str().to_string(),
                self.resolved_variant.clone(),
            ])
            .expect("in-memory csv");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
    }
}

/// A record whose expected-holds variant failed is demoted to suspect.
pub fn effective_status(declared: Status, variants: &[VariantReport]) -> Status {
    if variants.iter().any(|v| v.expected_holds && v.fails > 0) {
        Status::Suspect
    } else {
        declared
    }
}

/// The unique variant with zero failures and at least one success.
fn resolve(variants: &[VariantReport]) -> VariantResolution {
    let mut clean = variants.iter().filter(|v| v.fails == 0 && v.holds > 0);
    match (clean.next(), clean.next()) {
        (Some(v), None) => VariantResolution::Resolved(v.name.clone()),
        _ => VariantResolution::Unresolved,
    }
}

pub fn run_verification(plan: &SamplingPlan) -> Result<VerificationReport, VerifyError> {
    let started = Instant::now();
    let record = find_identity(&plan.id)?;
    let selected: Vec<_> = match &plan.variants {
        VariantSelector::All => record.variants.iter().collect(),
        VariantSelector::One(name) => vec![record.find_variant(name).ok_or_else(|| CatalogError::UnknownVariant {
            id: plan.id.clone(),
            variant: name.clone(),
        })?],
    };
    let samples = sample_params(plan)?;

    let mut variants = Vec::with_capacity(selected.len());
    for v in selected {
        let outcomes: Vec<VerificationOutcome> =
            samples.par_iter().map(|a| record.evaluate_variant(v, a)).collect();
        let mut report = VariantReport {
            name: v.name.to_string(),
            expected_holds: v.expected_holds,
            holds: 0,
            fails: 0,
            not_admissible: 0,
            counterexamples: Vec::new(),
        };
        for (assignment, outcome) in samples.iter().zip(outcomes) {
            match outcome {
                VerificationOutcome::Holds => report.holds += 1,
                VerificationOutcome::NotAdmissible { .. } => report.not_admissible += 1,
                VerificationOutcome::Fails { lhs, rhs } => {
                    report.fails += 1;
                    if plan.counterexample_cap.is_none_or(|cap| report.counterexamples.len() < cap) {
                        report.counterexamples.push(Counterexample { assignment: assignment.clone(), lhs, rhs });
                    }
                }
            }
        }
        variants.push(report);
    }

    let effective_status = effective_status(record.status, &variants);
    let resolved_variant = resolve(&variants).name().to_string();
    Ok(VerificationReport {
        id: plan.id.clone(),
        engine_version: ENGINE_VERSION.to_string(),
        seed: plan.seed,
        plan: plan.clone(),
        declared_status: record.status,
        effective_status,
        variants,
        resolved_variant,
        wall_time: started.elapsed().as_secs_f64(),
    })
}

/// Runs every variant of `id` under `plan` and adjudicates between them.
pub fn resolve_variants(id: &str, plan: &SamplingPlan) -> Result<VariantResolution, VerifyError> {
    let mut plan = plan.clone();
    plan.id = id.to_string();
    plan.variants = VariantSelector::All;
    Ok(run_verification(&plan)?.resolution())
}

/// Verifies every catalog record with the given plan template.
pub fn verify_catalog(template: &SamplingPlan) -> Result<Vec<VerificationReport>, VerifyError> {
    crate::catalog::list_identities()
        .iter()
        .map(|record| {
            let mut plan = template.clone();
            plan.id = record.id.to_string();
            plan.variants = VariantSelector::All;
            run_verification(&plan)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_stream() {
        // First outputs for seed 0 of the reference generator.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn range_stays_in_bounds() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            let v = rng.range_inclusive(-9, 9);
            assert!((-9..=9).contains(&v));
        }
        assert_eq!(SplitMix64::new(3).range_inclusive(5, 5), 5);
    }

    #[test]
    fn sampling_is_deterministic_and_sized() {
        let plan = SamplingPlan::new("cvg").samples(5).seed(11);
        let a = sample_params(&plan).unwrap();
        assert_eq!(a.len(), 5);
        assert_eq!(a, sample_params(&plan).unwrap());
        assert_ne!(a, sample_params(&plan.clone().seed(12)).unwrap());
    }

    #[test]
    fn cvg_samples_avoid_lower_poles() {
        let plan = SamplingPlan::new("cvg").samples(200).seed(3);
        for p in sample_params(&plan).unwrap() {
            let c = p.get("c").unwrap();
            if let Some(m) = c.nonpositive_integer_magnitude() {
                assert!(m as usize >= p.n, "c = {c} with n = {}", p.n);
            }
        }
    }

    #[test]
    fn exhausted_sampling_is_reported() {
        // With every rational forced to 0 the k = 0 weight a/(a+bk) is 0/0.
        let plan = SamplingPlan::new("hr-conv").samples(1).bounds(0, 1);
        assert!(matches!(sample_params(&plan), Err(VerifyError::SamplingExhausted { .. })));
    }

    #[test]
    fn foundational_report() {
        let report = run_verification(&SamplingPlan::new("cvg").samples(100)).unwrap();
        let v = report.variant("printed").unwrap();
        assert_eq!((v.holds, v.fails, v.not_admissible), (100, 0, 0));
        assert_eq!(report.resolved_variant, "printed");
        assert_eq!(report.effective_status, Status::Foundational);
        assert!(report.expected_variants_hold());
    }

    #[test]
    fn chuwei1_is_resolved() {
        let plan = SamplingPlan::new("cor-chuwei1").samples(60);
        let report = run_verification(&plan).unwrap();
        let printed = report.variant("printed-verbatim").unwrap();
        assert!(printed.fails >= 1);
        assert!(!printed.counterexamples.is_empty() && printed.counterexamples.len() <= DEFAULT_COUNTEREXAMPLE_CAP);
        assert_eq!(report.variant("symmetrized").unwrap().holds, 60);
        assert_eq!(resolve_variants("cor-chuwei1", &plan).unwrap(), VariantResolution::Resolved("symmetrized".into()));
    }

    #[test]
    fn counterexample_cap_can_be_lifted() {
        let mut plan = SamplingPlan::new("cor-chuwei1").samples(60).variant("printed-verbatim");
        let capped = run_verification(&plan).unwrap();
        plan.counterexample_cap = None;
        let full = run_verification(&plan).unwrap();
        let v = full.variant("printed-verbatim").unwrap();
        assert_eq!(v.counterexamples.len(), v.fails);
        assert!(capped.variants[0].counterexamples.len() <= DEFAULT_COUNTEREXAMPLE_CAP);
    }

    #[test]
    fn coinciding_variants_are_unresolved() {
        let v = |name: &str| VariantReport {
            name: name.into(),
            expected_holds: false,
            holds: 4,
            fails: 0,
            not_admissible: 0,
            counterexamples: vec![],
        };
        assert_eq!(resolve(&[v("x"), v("y")]), VariantResolution::Unresolved);
        assert_eq!(resolve(&[v("x")]), VariantResolution::Resolved("x".into()));
    }

    #[test]
    fn failing_expected_variant_downgrades() {
        let mut v = VariantReport {
            name: "printed".into(),
            expected_holds: true,
            holds: 3,
            fails: 0,
            not_admissible: 0,
            counterexamples: vec![],
        };
        assert_eq!(effective_status(Status::Derived, std::slice::from_ref(&v)), Status::Derived);
        v.fails = 1;
        assert_eq!(effective_status(Status::Derived, std::slice::from_ref(&v)), Status::Suspect);
        assert_eq!(effective_status(Status::Foundational, &[v]), Status::Suspect);
    }

    #[test]
    fn unknown_ids_and_zero_samples() {
        assert!(matches!(
            run_verification(&SamplingPlan::new("nope")),
            Err(VerifyError::Catalog(CatalogError::UnknownIdentity(_)))
        ));
        assert!(matches!(
            run_verification(&SamplingPlan::new("cvg").variant("x")),
            Err(VerifyError::Catalog(CatalogError::UnknownVariant { .. }))
        ));
        assert!(matches!(sample_params(&SamplingPlan::new("cvg").samples(0)), Err(VerifyError::InvalidPlan(_))));
    }

    #[test]
    fn csv_has_row_per_variant() {
        let report = run_verification(&SamplingPlan::new("cor-chuwei2").samples(10)).unwrap();
        let csv = report.to_csv();
        assert_eq!(csv.lines().count(), 1 + report.variants.len());
        assert!(csv.lines().nth(1).unwrap().starts_with("cor-chuwei2,"));
    }
}
