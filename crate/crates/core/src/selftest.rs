//! Randomized checks of the inversion engine: round trips, the vanishing inner
//! sum, the degree of Φ, and agreement of the split duplicate/triplicate forms
//! with the generic transform. Every comparison is exact.

use serde::Serialize;

use crate::exact::{binomial_nk, sign_power, Rational};
use crate::inversion::{
    gould_hsu_forward, gould_hsu_inverse, CoefficientFamily, FactorSequences, FiniteSequence, InversionError,
    TriplicateReading,
};
use crate::verify::SplitMix64;

const MAX_REDRAWS: usize = 1_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelftestConfig {
    pub seed: u64,
    pub round_trip_instances: usize,
    pub round_trip_max_len: usize,
    pub inner_sum_instances: usize,
    pub inner_sum_max_n: usize,
    pub split_form_instances: usize,
    pub split_form_max_n: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: 42,
            round_trip_instances: 100,
            round_trip_max_len: 13,
            inner_sum_instances: 25,
            inner_sum_max_n: 10,
            split_form_instances: 50,
            split_form_max_n: 10,
        }
    }
}

impl SelftestConfig {
    pub fn with_seed(seed: u64) -> Self {
        SelftestConfig { seed, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub instances: usize,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, instances: usize, failure: Option<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: failure.is_none(),
            instances,
            detail: failure.unwrap_or_else(|| "ok".into()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run_selftest(config: &SelftestConfig) -> SelftestReport {
    let mut rng = SplitMix64::new(config.seed);
    let mut checks = Vec::new();
    for ell in 0..=3 {
        checks.push(round_trip(&mut rng, ell, config.round_trip_instances, config.round_trip_max_len));
    }
    for ell in 0..=2 {
        checks.push(inner_sum(&mut rng, ell, config.inner_sum_instances, config.inner_sum_max_n));
    }
    for ell in 0..=2 {
        checks.push(degree(&mut rng, ell, 8));
    }
    checks.push(classic_specialization(&mut rng, config.round_trip_instances, config.round_trip_max_len));
    checks.push(duplicate_printed(&mut rng, config.split_form_instances, config.split_form_max_n));
    let (corrected, verbatim) = triplicate_printed(&mut rng, config.split_form_instances, config.split_form_max_n);
    checks.push(corrected);
    checks.push(verbatim);
    SelftestReport { seed: config.seed, checks }
}

fn rational(rng: &mut SplitMix64) -> Rational {
    rng.rational(9, 4)
}

fn random_table(rng: &mut SplitMix64, len: usize) -> CoefficientFamily {
    CoefficientFamily::Table((0..len).map(|_| rational(rng)).collect())
}

pub fn random_factor_sequences(rng: &mut SplitMix64, ell: usize, len: usize) -> FactorSequences {
    let a = (0..=ell).map(|_| random_table(rng, len + 1)).collect();
    let b = (0..=ell).map(|_| random_table(rng, len + 1)).collect();
    FactorSequences::new(ell, a, b).expect("class counts match ell")
}

pub fn random_sequence(rng: &mut SplitMix64, len: usize) -> FiniteSequence {
    FiniteSequence::new((0..len).map(|_| rational(rng)).collect()).expect("len >= 1")
}

/// Draws instances until `attempt` stops reporting a vanishing Φ.
fn nondegenerate<T>(
    rng: &mut SplitMix64,
    mut attempt: impl FnMut(&mut SplitMix64) -> Result<T, InversionError>,
) -> Result<T, String> {
    for _ in 0..MAX_REDRAWS {
        match attempt(rng) {
            Ok(v) => return Ok(v),
            Err(InversionError::PhiVanishes { .. }) => continue,
            Err(e) => return Err(e.to_string()),
        }
    }
    Err(format!("no nondegenerate instance in {MAX_REDRAWS} draws"))
}

pub fn round_trip(rng: &mut SplitMix64, ell: usize, instances: usize, max_len: usize) -> CheckResult {
    let name = format!("round-trip ell={ell}");
    for t in 0..instances {
        let outcome = nondegenerate(rng, |rng| {
            let len = rng.range_inclusive(1, max_len as i64) as usize;
            let seqs = random_factor_sequences(rng, ell, len);
            let g = random_sequence(rng, len);
            let f = random_sequence(rng, len);
            let back = seqs.inverse_transform(&seqs.forward_transform(&g)?)?;
            let forth = seqs.forward_transform(&seqs.inverse_transform(&f)?)?;
            Ok((g == back, f == forth))
        });
        match outcome {
            Ok((true, true)) => {}
            Ok((g_ok, f_ok)) => {
                return CheckResult::new(name, t + 1, Some(format!("instance {t}: inverse∘forward {g_ok}, forward∘inverse {f_ok}")))
            }
            Err(e) => return CheckResult::new(name, t, Some(e)),
        }
    }
    CheckResult::new(name, instances, None)
}

pub fn inner_sum(rng: &mut SplitMix64, ell: usize, instances: usize, max_n: usize) -> CheckResult {
    let name = format!("inner-sum ell={ell}");
    for t in 0..instances {
        let outcome = nondegenerate(rng, |rng| {
            let seqs = random_factor_sequences(rng, ell, max_n + 1);
            for n in 0..=max_n {
                for i in 0..=n {
                    let s = seqs.inner_sum_s(i, n)?;
                    let expected = if i < n {
                        Rational::zero()
                    } else {
                        seqs.lambda_factor(n)?.recip().ok_or(InversionError::PhiVanishes { x: Rational::from(n), order: n + 1 })?
                    };
                    if s != expected {
                        return Ok(Some(format!("S({i},{n}) = {s}, expected {expected}")));
                    }
                }
            }
            Ok(None)
        });
        match outcome {
            Ok(None) => {}
            Ok(Some(msg)) => return CheckResult::new(name, t + 1, Some(format!("instance {t}: {msg}"))),
            Err(e) => return CheckResult::new(name, t, Some(e)),
        }
    }
    CheckResult::new(name, instances, None)
}

/// Φ(x; n) sampled at x = 0..=n+1 has vanishing (n+1)-th forward difference.
pub fn degree(rng: &mut SplitMix64, ell: usize, max_n: usize) -> CheckResult {
    let name = format!("phi-degree ell={ell}");
    let seqs = random_factor_sequences(rng, ell, max_n + 2);
    for n in 0..=max_n {
        let values: Result<Vec<Rational>, _> = (0..=n + 1).map(|x| seqs.phi_big(&Rational::from(x), n)).collect();
        let values = match values {
            Ok(v) => v,
            Err(e) => return CheckResult::new(name, n, Some(e.to_string())),
        };
        let diff: Rational = (0..=n + 1)
            .map(|j| sign_power(n + 1 - j) * binomial_nk((n + 1) as u64, j as i64) * &values[j])
            .sum();
        if !diff.is_zero() {
            return CheckResult::new(name, n + 1, Some(format!("order-{} difference of Phi(x;{n}) is {diff}", n + 1)));
        }
    }
    CheckResult::new(name, max_n + 1, None)
}

pub fn classic_specialization(rng: &mut SplitMix64, instances: usize, max_len: usize) -> CheckResult {
    let name = "classic-specialization";
    for t in 0..instances {
        let outcome = nondegenerate(rng, |rng| {
            let len = rng.range_inclusive(1, max_len as i64) as usize;
            let a: Vec<Rational> = (0..=len).map(|_| rational(rng)).collect();
            let b: Vec<Rational> = (0..=len).map(|_| rational(rng)).collect();
            let g = random_sequence(rng, len);
            let seqs = FactorSequences::classic(CoefficientFamily::Table(a.clone()), CoefficientFamily::Table(b.clone()));
            let engine_f = seqs.forward_transform(&g)?;
            let literal_f = gould_hsu_forward(&a, &b, g.values())?;
            let engine_g = seqs.inverse_transform(&engine_f)?;
            let literal_g = gould_hsu_inverse(&a, &b, &literal_f)?;
            Ok(engine_f.values() == literal_f.as_slice() && engine_g.values() == literal_g.as_slice())
        });
        match outcome {
            Ok(true) => {}
            Ok(false) => return CheckResult::new(name, t + 1, Some(format!("instance {t} differs"))),
            Err(e) => return CheckResult::new(name, t, Some(e)),
        }
    }
    CheckResult::new(name, instances, None)
}

pub fn duplicate_printed(rng: &mut SplitMix64, instances: usize, max_n: usize) -> CheckResult {
    let name = "duplicate-split-form";
    for t in 0..instances {
        let outcome = nondegenerate(rng, |rng| {
            let seqs = random_factor_sequences(rng, 1, max_n + 1);
            let f = random_sequence(rng, max_n + 1);
            Ok(seqs.duplicate_inverse_printed(&f)? == seqs.inverse_transform(&f)?)
        });
        match outcome {
            Ok(true) => {}
            Ok(false) => return CheckResult::new(name, t + 1, Some(format!("instance {t} differs"))),
            Err(e) => return CheckResult::new(name, t, Some(e)),
        }
    }
    CheckResult::new(name, instances, None)
}

/// Returns (corrected form agrees everywhere, printed-verbatim form disagrees somewhere).
pub fn triplicate_printed(rng: &mut SplitMix64, instances: usize, max_n: usize) -> (CheckResult, CheckResult) {
    let mut disagreements = 0;
    let mut corrected_failure = None;
    for t in 0..instances {
        let outcome = nondegenerate(rng, |rng| {
            let seqs = random_factor_sequences(rng, 2, max_n + 1);
            let f = random_sequence(rng, max_n + 1);
            let generic = seqs.inverse_transform(&f)?;
            let corrected = seqs.triplicate_inverse_printed(&f, TriplicateReading::Corrected)?;
            let verbatim = seqs.triplicate_inverse_printed(&f, TriplicateReading::PrintedVerbatim)?;
            Ok((generic == corrected, generic != verbatim))
        });
        match outcome {
            Ok((agrees, differs)) => {
                if !agrees && corrected_failure.is_none() {
                    corrected_failure = Some(format!("instance {t} differs"));
                }
                disagreements += usize::from(differs);
            }
            Err(e) => {
                corrected_failure.get_or_insert(e);
            }
        }
    }
    let corrected = CheckResult::new("triplicate-corrected-form", instances, corrected_failure);
    let mut verbatim = CheckResult::new(
        "triplicate-printed-counterexample",
        instances,
        (disagreements == 0).then(|| "printed-verbatim form agreed with the generic engine on every instance".into()),
    );
    if verbatim.passed {
        verbatim.detail = format!("{disagreements} instances disagree with the generic engine");
    }
    (corrected, verbatim)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SelftestConfig {
        SelftestConfig {
            seed: 5,
            round_trip_instances: 10,
            round_trip_max_len: 8,
            inner_sum_instances: 4,
            inner_sum_max_n: 6,
            split_form_instances: 8,
            split_form_max_n: 8,
        }
    }

    #[test]
    fn small_selftest_passes() {
        let report = run_selftest(&small());
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(report.checks.len(), 14);
    }

    #[test]
    fn selftest_is_deterministic() {
        let a = run_selftest(&small());
        let b = run_selftest(&small());
        assert_eq!(a.checks, b.checks);
    }
}
