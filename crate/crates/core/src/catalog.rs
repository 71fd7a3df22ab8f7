//! Registry of summation formulas and reciprocal relations, each stored as a
//! pair of exact evaluators over a parameter assignment.
//!
//! Every record carries one or more variants. Records that hold as written
//! have a single `printed` variant. Records whose written form is internally
//! inconsistent keep `printed-verbatim` next to auditable repairs; exactly one
//! variant per record is flagged `expected_holds`.
//!
//! Admissibility is the record's side conditions plus pole-free evaluation of
//! every expected-holds variant. Series poles are judged against the
//! structural order given by the n-dependent witnesses (`-n/2`, `(1-n)/2`, ...),
//! so an accidental cancellation between an upper and a lower parameter does
//! not hide a vanishing denominator.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::exact::{binomial_general, pochhammer, Rational};
use crate::hyperseries::{check_lower_poles, termination_order, BracketProduct, SeriesError, SeriesSpec};
use crate::inversion::{gould_hsu_forward, gould_hsu_inverse, InversionError};

pub const PRINTED: &str = "printed";
pub const PRINTED_VERBATIM: &str = "printed-verbatim";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Foundational,
    Derived,
    Suspect,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Foundational => "foundational",
            Status::Derived => "derived",
            Status::Suspect => "suspect",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamKind {
    Rational,
    NonnegativeInteger,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Param {
    pub name: &'static str,
    pub kind: ParamKind,
}

/// Rational parameters by name, plus the integer slots `n` and (for the
/// general-ℓ record) `ell`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParamAssignment {
    pub values: BTreeMap<String, Rational>,
    pub n: usize,
    pub ell: Option<usize>,
}

impl ParamAssignment {
    pub fn new(n: usize) -> Self {
        ParamAssignment { n, ..Default::default() }
    }

    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.values.insert(name.to_string(), value);
        self
    }

    pub fn with_ell(mut self, ell: usize) -> Self {
        self.ell = Some(ell);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Rational> {
        self.values.get(name)
    }
}

impl Serialize for ParamAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let len = self.values.len() + 1 + usize::from(self.ell.is_some());
        let mut map = serializer.serialize_map(Some(len))?;
        for (name, value) in &self.values {
            map.serialize_entry(name, &value.to_fraction_string())?;
        }
        map.serialize_entry("n", &self.n)?;
        if let Some(ell) = self.ell {
            map.serialize_entry("ell", &ell)?;
        }
        map.end()
    }
}

/// Why a single evaluation could not produce a value.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Inversion(#[from] InversionError),
    #[error("linear denominator vanishes")]
    ZeroDenominator,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("identity '{id}' has no variant '{variant}'")]
    UnknownVariant { id: String, variant: String },
    #[error("not admissible: {0}")]
    NotAdmissible(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum VerificationOutcome {
    Holds,
    Fails { lhs: Rational, rhs: Rational },
    NotAdmissible { reason: String },
}

type SidesFn = dyn Fn(&Env) -> Result<(Rational, Rational), EvalError> + Send + Sync;

pub struct Variant {
    pub name: &'static str,
    pub expected_holds: bool,
    sides: Box<SidesFn>,
}

impl Variant {
    fn new(
        name: &'static str,
        expected_holds: bool,
        sides: impl Fn(&Env) -> Result<(Rational, Rational), EvalError> + Send + Sync + 'static,
    ) -> Self {
        Variant { name, expected_holds, sides: Box::new(sides) }
    }

    fn holds(
        name: &'static str,
        sides: impl Fn(&Env) -> Result<(Rational, Rational), EvalError> + Send + Sync + 'static,
    ) -> Self {
        Variant::new(name, true, sides)
    }

    fn fails(
        name: &'static str,
        sides: impl Fn(&Env) -> Result<(Rational, Rational), EvalError> + Send + Sync + 'static,
    ) -> Self {
        Variant::new(name, false, sides)
    }
}

impl std::fmt::Debug for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Variant").field("name", &self.name).field("expected_holds", &self.expected_holds).finish()
    }
}

#[derive(Debug)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub anchor: &'static str,
    pub params: Vec<Param>,
    pub status: Status,
    pub variants: Vec<Variant>,
    /// Smallest admissible `n`.
    pub min_n: usize,
    /// Range of `ell` for records parameterized by the number of classes.
    pub ell_range: Option<RangeInclusive<usize>>,
}

impl IdentityRecord {
    fn new(id: &'static str, anchor: &'static str, rationals: &[&'static str], status: Status) -> Self {
        let mut params: Vec<Param> =
            rationals.iter().map(|&name| Param { name, kind: ParamKind::Rational }).collect();
        params.push(Param { name: "n", kind: ParamKind::NonnegativeInteger });
        IdentityRecord { id, anchor, params, status, variants: Vec::new(), min_n: 0, ell_range: None }
    }

    fn variant(mut self, v: Variant) -> Self {
        self.variants.push(v);
        self
    }

    fn min_n(mut self, min_n: usize) -> Self {
        self.min_n = min_n;
        self
    }

    fn ell(mut self, range: RangeInclusive<usize>) -> Self {
        self.params.push(Param { name: "ell", kind: ParamKind::NonnegativeInteger });
        self.ell_range = Some(range);
        self
    }

    pub fn rational_params(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.params.iter().filter(|p| p.kind == ParamKind::Rational).map(|p| p.name)
    }

    pub fn find_variant(&self, name: &str) -> Option<&Variant> {
        self.variants.iter().find(|v| v.name == name)
    }

    pub fn variant_names(&self) -> Vec<&'static str> {
        self.variants.iter().map(|v| v.name).collect()
    }

    /// Side conditions and pole-free evaluation of every expected-holds variant.
    pub fn admissible(&self, assignment: &ParamAssignment) -> Result<(), String> {
        for name in self.rational_params() {
            if assignment.get(name).is_none() {
                return Err(format!("missing parameter '{name}'"));
            }
        }
        if assignment.n < self.min_n {
            return Err(format!("requires n >= {}", self.min_n));
        }
        if let Some(range) = &self.ell_range {
            match assignment.ell {
                Some(ell) if range.contains(&ell) => {}
                _ => return Err(format!("requires ell in {}..={}", range.start(), range.end())),
            }
        }
        let env = Env { assignment };
        for v in self.variants.iter().filter(|v| v.expected_holds) {
            (v.sides)(&env).map_err(|e| e.to_string())?;
        }
        Ok(())
    }

    /// Evaluates one variant without re-running the admissibility predicate.
    /// The caller guarantees the assignment passed `admissible`.
    pub fn evaluate_variant(&self, variant: &Variant, assignment: &ParamAssignment) -> VerificationOutcome {
        match (variant.sides)(&Env { assignment }) {
            Ok((lhs, rhs)) if lhs == rhs => VerificationOutcome::Holds,
            Ok((lhs, rhs)) => VerificationOutcome::Fails { lhs, rhs },
            Err(e) => VerificationOutcome::NotAdmissible { reason: e.to_string() },
        }
    }
}

/// Read access to one assignment from inside an evaluator.
pub struct Env<'a> {
    assignment: &'a ParamAssignment,
}

impl Env<'_> {
    fn r(&self, name: &str) -> Rational {
        self.assignment.get(name).cloned().unwrap_or_else(|| panic!("parameter '{name}' checked before evaluation"))
    }

    fn n(&self) -> usize {
        self.assignment.n
    }

    fn nq(&self) -> Rational {
        Rational::from(self.assignment.n)
    }

    fn ell(&self) -> usize {
        self.assignment.ell.expect("ell checked before evaluation")
    }
}

pub fn list_identities() -> &'static [IdentityRecord] {
    static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn find_identity(id: &str) -> Result<&'static IdentityRecord, CatalogError> {
    list_identities().iter().find(|r| r.id == id).ok_or_else(|| CatalogError::UnknownIdentity(id.to_string()))
}

fn lookup(id: &str, variant: &str) -> Result<(&'static IdentityRecord, &'static Variant), CatalogError> {
    let record = find_identity(id)?;
    let v = record
        .find_variant(variant)
        .ok_or_else(|| CatalogError::UnknownVariant { id: id.to_string(), variant: variant.to_string() })?;
    Ok((record, v))
}

pub fn eval_identity_sides(
    id: &str,
    variant: &str,
    assignment: &ParamAssignment,
) -> Result<(Rational, Rational), CatalogError> {
    let (record, v) = lookup(id, variant)?;
    record.admissible(assignment).map_err(CatalogError::NotAdmissible)?;
    (v.sides)(&Env { assignment }).map_err(|e| CatalogError::NotAdmissible(e.to_string()))
}

pub fn check_identity(
    id: &str,
    variant: &str,
    assignment: &ParamAssignment,
) -> Result<VerificationOutcome, CatalogError> {
    let (record, v) = lookup(id, variant)?;
    if let Err(reason) = record.admissible(assignment) {
        return Ok(VerificationOutcome::NotAdmissible { reason });
    }
    Ok(record.evaluate_variant(v, assignment))
}

// ---------------------------------------------------------------------------
// evaluation helpers

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn r(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn over(x: Rational, d: i64) -> Rational {
    x * q(1, d)
}

fn ph(x: Rational, k: usize) -> Rational {
    pochhammer(&x, k)
}

fn div(num: Rational, den: Rational) -> Result<Rational, EvalError> {
    num.checked_div(&den).ok_or(EvalError::ZeroDenominator)
}

fn bracket(nums: Vec<Rational>, dens: Vec<Rational>, n: usize) -> Result<Rational, EvalError> {
    Ok(BracketProduct::new(nums, dens, n).evaluate()?)
}

/// Terminating series whose termination is carried by `witnesses`; lower
/// poles are judged against the witnesses' order.
fn hyp(witnesses: Vec<Rational>, upper: Vec<Rational>, lower: Vec<Rational>, z: Rational) -> Result<Rational, EvalError> {
    let order = termination_order(&witnesses)?;
    check_lower_poles(&lower, order)?;
    let mut all = witnesses;
    all.extend(upper);
    Ok(SeriesSpec::new(all, lower, z).evaluate()?)
}

/// `prefactor · series`, where a zero prefactor kills a series that does not
/// terminate (such as the `(1-n)/2, (2-n)/2` pair at `n = 0`). A terminating
/// series with a pole still makes the point inadmissible.
fn scaled(
    prefactor: Rational,
    series: impl FnOnce() -> Result<Rational, EvalError>,
) -> Result<Rational, EvalError> {
    if prefactor.is_zero() {
        match series() {
            Ok(_) | Err(EvalError::Series(SeriesError::NotTerminating)) => Ok(Rational::zero()),
            Err(e) => Err(e),
        }
    } else {
        Ok(prefactor * series()?)
    }
}

fn w1(n: &Rational) -> Vec<Rational> {
    vec![over(-n, 2), over(1 - n, 2)]
}

fn w2(n: &Rational) -> Vec<Rational> {
    vec![over(1 - n, 2), over(2 - n, 2)]
}

fn one() -> Rational {
    Rational::one()
}

// ---------------------------------------------------------------------------
// records

fn build_catalog() -> Vec<IdentityRecord> {
    vec![
        gh_classic_pair(),
        cvg(),
        ps(),
        hr_conv(),
        thm_recirel1(),
        cor_chuwei1(),
        cor_chuwei2(),
        thm_recirel2(),
        cor_recirel2_i(),
        cor_recirel2_ii(),
        thm_recirel3a(),
        thm_recirel3b(),
        thm_recirel4a(),
        thm_recirel4b(),
        thm_psrecirel1(),
        thm_psrecirel2a(),
        thm_psrecirel2b(),
        thm_psrecirel3(),
        thm_hrrecirel1(),
        prop_hrbalid1(),
        prop_hrbalid2(),
        cor_threecor_i(),
        cor_threecor_ii(),
        cor_threecor_iii(),
        cor_twocor_i(),
        cor_twocor_ii(),
        thm_hrrecirel2(),
        thm_hrrecirel3(),
    ]
}

fn gh_classic_pair() -> IdentityRecord {
    IdentityRecord::new(
        "gh-classic-pair",
        "Gould-Hsu reciprocal pair: g is recovered from its forward transform, a_k = a0 + k a1, b_k = b0 + k b1, g(k) = (u)_k/(v)_k",
        &["a0", "a1", "b0", "b1", "u", "v"],
        Status::Foundational,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a0, a1, b0, b1, u, v) = (e.r("a0"), e.r("a1"), e.r("b0"), e.r("b1"), e.r("u"), e.r("v"));
        let len = e.n() + 1;
        let a: Vec<Rational> = (0..len).map(|k| &a0 + Rational::from(k) * &a1).collect();
        let b: Vec<Rational> = (0..len).map(|k| &b0 + Rational::from(k) * &b1).collect();
        let g = (0..len).map(|k| div(ph(u.clone(), k), ph(v.clone(), k))).collect::<Result<Vec<_>, _>>()?;
        let f = gould_hsu_forward(&a, &b, &g)?;
        let back = gould_hsu_inverse(&a, &b, &f)?;
        Ok((g[e.n()].clone(), back[e.n()].clone()))
    }))
}

fn cvg() -> IdentityRecord {
    IdentityRecord::new(
        "cvg",
        "Chu-Vandermonde-Gauss summation: 2F1[-n, a; c; 1] = (c-a)_n/(c)_n",
        &["a", "c"],
        Status::Foundational,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let lhs = hyp(vec![-n], vec![a.clone()], vec![c.clone()], one())?;
        let rhs = div(ph(&c - &a, e.n()), ph(c, e.n()))?;
        Ok((lhs, rhs))
    }))
}

fn ps() -> IdentityRecord {
    IdentityRecord::new(
        "ps",
        "Pfaff-Saalschutz summation: 3F2[-n, a, b; c, 1+a+b-c-n; 1] = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)",
        &["a", "b", "c"],
        Status::Foundational,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let k = e.n();
        let lhs = hyp(vec![-&n], vec![a.clone(), b.clone()], vec![c.clone(), 1 + &a + &b - &c - &n], one())?;
        let rhs = bracket(vec![&c - &a, &c - &b], vec![c.clone(), &c - &a - &b], k)?;
        Ok((lhs, rhs))
    }))
}

fn hr_conv() -> IdentityRecord {
    IdentityRecord::new(
        "hr-conv",
        "Hagen-Rothe convolution: sum_k a/(a+bk) C(a+bk, k) C(c-bk, n-k) = C(a+c, n)",
        &["a", "b", "c"],
        Status::Foundational,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, b, c) = (e.r("a"), e.r("b"), e.r("c"));
        let n = e.n();
        let mut lhs = Rational::zero();
        for k in 0..=n {
            let bk = &b * Rational::from(k);
            let lin = &a + &bk;
            let w = div(a.clone(), lin.clone())?;
            lhs += w * binomial_general(&lin, k) * binomial_general(&(&c - &bk), n - k);
        }
        let rhs = binomial_general(&(&a + &c), n);
        Ok((lhs, rhs))
    }))
}

fn cvg_ratio(a: &Rational, c: &Rational, n: usize) -> Result<Rational, EvalError> {
    div(ph(c - a, n), ph(c.clone(), n))
}

fn thm_recirel1() -> IdentityRecord {
    IdentityRecord::new(
        "thm-recirel1",
        "Reciprocal relation: (c-a)_n/(c)_n as a 4F3 in [a, 1-a; 1/2, c, 1-c-n] plus a shifted 4F3",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let lhs = cvg_ratio(&a, &c, e.n())?;
        let first = hyp(w1(&n), vec![a.clone(), 1 - &a], vec![q(1, 2), c.clone(), 1 - &c - &n], one())?;
        let pre = div(&n * &a, 1 - &c - &n)?;
        let second = scaled(pre, || {
            hyp(w2(&n), vec![1 + &a, 1 - &a], vec![q(3, 2), c.clone(), 2 - &c - &n], one())
        })?;
        Ok((lhs, first + second))
    }))
}

/// `4F3[-n/2, (1-n)/2, a, 1-a; 1/2, c, 1-c-n]`.
fn chuwei_a1(a: &Rational, c: &Rational, n: &Rational) -> Result<Rational, EvalError> {
    hyp(w1(n), vec![a.clone(), 1 - a], vec![q(1, 2), c.clone(), 1 - c - n], one())
}

fn cor_chuwei1() -> IdentityRecord {
    let symmetric_rhs = |a: &Rational, c: &Rational, k: usize| -> Result<Rational, EvalError> {
        div(ph(c - a, k) + ph(c + a, k), 2 * ph(c.clone(), k))
    };
    IdentityRecord::new(
        "cor-chuwei1",
        "Quadratic 4F3 summation: 4F3[-n/2, (1-n)/2, a, 1-a; 1/2, c, 1-c-n] against (c-a)_n/(2 (c)_n), by Legendre inversion",
        &["a", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let lhs = chuwei_a1(&a, &c, &n)?;
        let rhs = div(ph(&c - &a, e.n()), 2 * ph(c.clone(), e.n()))?;
        Ok((lhs, rhs))
    }))
    .variant(Variant::fails("symmetrized-rhs-only", move |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        Ok((chuwei_a1(&a, &c, &n)?, symmetric_rhs(&a, &c, e.n())?))
    }))
    .variant(Variant::holds("symmetrized", move |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let lhs = (chuwei_a1(&a, &c, &n)? + chuwei_a1(&-&a, &c, &n)?) * q(1, 2);
        Ok((lhs, symmetric_rhs(&a, &c, e.n())?))
    }))
}

fn cor_chuwei2() -> IdentityRecord {
    let rhs = |a: &Rational, c: &Rational, k: usize| -> Result<Rational, EvalError> {
        div(
            ph(c - a, k + 1) - ph(c + a - 1, k + 1),
            Rational::from(k + 1) * (1 - 2 * a) * ph(c.clone(), k),
        )
    };
    IdentityRecord::new(
        "cor-chuwei2",
        "Quadratic 4F3 summation: 4F3[-n/2, (1-n)/2, a, 1-a; 1/2, c, 1-c-n] = ((c-a)_{n+1} - (c+a-1)_{n+1}) / ((n+1)(1-2a)(c)_n)",
        &["a", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, move |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        Ok((chuwei_a1(&a, &c, &n)?, rhs(&a, &c, e.n())?))
    }))
    .variant(Variant::holds("lower-3/2", move |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let lhs = hyp(w1(&n), vec![a.clone(), 1 - &a], vec![q(3, 2), c.clone(), 1 - &c - &n], one())?;
        Ok((lhs, rhs(&a, &c, e.n())?))
    }))
}

fn thm_recirel2() -> IdentityRecord {
    IdentityRecord::new(
        "thm-recirel2",
        "Reciprocal relation: (c-a)_n/(c)_n as (1-c)/(1-c-n) 4F3[a, 1-a; 1/2, c-1, 2-c-n] minus a shifted 4F3",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let lhs = cvg_ratio(&a, &c, e.n())?;
        let first = scaled(div(1 - &c, 1 - &c - &n)?, || {
            hyp(w1(&n), vec![a.clone(), 1 - &a], vec![q(1, 2), &c - 1, 2 - &c - &n], one())
        })?;
        let second = scaled(div(&n * (1 - &a), 1 - &c - &n)?, || {
            hyp(w2(&n), vec![a.clone(), 2 - &a], vec![q(3, 2), c.clone(), 2 - &c - &n], one())
        })?;
        Ok((lhs, first - second))
    }))
}

fn cor_recirel2_i() -> IdentityRecord {
    IdentityRecord::new(
        "cor-recirel2-i",
        "Balanced series identity: 5F4[1+e, a, -a; 1/2, e, c, 2-c-n] = (c-a)_{n-1}/(c)_{n-1}, e = -an/(2a+2c+n-2), n > 0",
        &["a", "c"],
        Status::Derived,
    )
    .min_n(1)
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let ee = div(-(&a * &n), 2 * &a + 2 * &c + &n - 2)?;
        let lhs = hyp(w1(&n), vec![1 + &ee, a.clone(), -&a], vec![q(1, 2), ee, c.clone(), 2 - &c - &n], one())?;
        let rhs = cvg_ratio(&a, &c, e.n() - 1)?;
        Ok((lhs, rhs))
    }))
}

fn cor_recirel2_ii() -> IdentityRecord {
    IdentityRecord::new(
        "cor-recirel2-ii",
        "Balanced series identity: 5F4[1+e, a, 1-a; 3/2, e, c+1, 1-c-n] = (c+n)/(c+n-an) (c+1-a)_n/(c+1)_n, e = (c+n-an)/(2a+2c+n-1)",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let top = &c + &n - &a * &n;
        let ee = div(top.clone(), 2 * &a + 2 * &c + &n - 1)?;
        let lhs = hyp(w1(&n), vec![1 + &ee, a.clone(), 1 - &a], vec![q(3, 2), ee, &c + 1, 1 - &c - &n], one())?;
        let rhs = div(&c + &n, top)? * cvg_ratio(&a, &(&c + 1), e.n())?;
        Ok((lhs, rhs))
    }))
}

fn thm_recirel3a() -> IdentityRecord {
    IdentityRecord::new(
        "thm-recirel3a",
        "Reciprocal relation with argument -1/4: (c-a)_n/(c)_n as a 5F4 minus a well-poised 7F6",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let z = q(-1, 4);
        let lhs = cvg_ratio(&a, &c, e.n())?;
        let first = hyp(
            w1(&n),
            vec![&c - &a, a.clone(), 1 - &a],
            vec![over(c.clone(), 2), over(&c + 1, 2), q(1, 2), &c - &a + &n],
            z.clone(),
        )?;
        let pre = div(&n * &a * (&c - &a + 1), &c * (&c - &a + &n))?;
        let second = scaled(pre, || {
            let t = over(1 + &c - &a, 3);
            hyp(
                w2(&n),
                vec![1 + &t, &c - &a, 1 + &a, 1 - &a],
                vec![over(&c + 1, 2), over(&c + 2, 2), q(3, 2), t, &c + 1 - &a + &n],
                z.clone(),
            )
        })?;
        Ok((lhs, first - second))
    }))
}

fn thm_recirel3b() -> IdentityRecord {
    let parts = |e: &Env| -> Result<(Rational, Rational, Rational), EvalError> {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let z = q(-1, 4);
        let lhs = div(ph(&c + 1 - &a, e.n()), ph(c.clone(), e.n()))?;
        let t = over(&c - &a, 3);
        let first = hyp(
            w1(&n),
            vec![1 + &t, &c - &a, a.clone(), 1 - &a],
            vec![over(c.clone(), 2), over(&c + 1, 2), q(1, 2), t, &c + 1 - &a + &n],
            z.clone(),
        )?;
        let second = scaled(div(&n * (1 - &a), c.clone())?, || {
            hyp(
                w2(&n),
                vec![&c + 1 - &a, a.clone(), 2 - &a],
                vec![over(&c + 1, 2), over(&c + 2, 2), q(3, 2), &c + 1 - &a + &n],
                z.clone(),
            )
        })?;
        Ok((lhs, first, second))
    };
    IdentityRecord::new(
        "thm-recirel3b",
        "Reciprocal relation with argument -1/4: (c+1-a)_n/(c)_n as a well-poised 7F6 and a 6F5",
        &["a", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, move |e| {
        let (lhs, a, b) = parts(e)?;
        Ok((lhs, a - b))
    }))
    .variant(Variant::holds("plus-join", move |e| {
        let (lhs, a, b) = parts(e)?;
        Ok((lhs, a + b))
    }))
}

fn thm_recirel4a() -> IdentityRecord {
    let rhs = |e: &Env| -> Result<Rational, EvalError> {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let z = r(-4);
        let first = hyp(
            w1(&n),
            vec![over(1 - &a, 2), over(2 - &a, 2), &c - &a],
            vec![q(1, 2), &c - 1, 2 - &c - &n, &c - &a + &n],
            z.clone(),
        )?;
        let pre = div(&n * (1 - &a) * (&c - &a + 1), (1 - &c) * (&c - &a + &n))?;
        let second = scaled(pre, || {
            let t = over(1 + &c - &a, 3);
            hyp(
                w2(&n),
                vec![1 + &t, over(2 - &a, 2), over(3 - &a, 2), &c - &a],
                vec![q(3, 2), t, c.clone(), 2 - &c - &n, &c + 1 - &a + &n],
                z.clone(),
            )
        })?;
        Ok(first - second)
    };
    IdentityRecord::new(
        "thm-recirel4a",
        "Reciprocal relation with argument -4: (c-a)_n over the left denominator written (c)-1_n, as a 6F5 minus a 7F6",
        &["a", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, move |e| {
        let (a, c) = (e.r("a"), e.r("c"));
        let lhs = div(ph(&c - &a, e.n()), ph(c, e.n()) - 1)?;
        Ok((lhs, rhs(e)?))
    }))
    .variant(Variant::holds("c-1", move |e| {
        let (a, c) = (e.r("a"), e.r("c"));
        let lhs = div(ph(&c - &a, e.n()), ph(&c - 1, e.n()))?;
        Ok((lhs, rhs(e)?))
    }))
}

fn thm_recirel4b() -> IdentityRecord {
    IdentityRecord::new(
        "thm-recirel4b",
        "Reciprocal relation with argument -4: (c-a+1)_n/(c)_n as a 7F6 minus a 6F5",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let z = r(-4);
        let lhs = div(ph(&c - &a + 1, e.n()), ph(c.clone(), e.n()))?;
        let t = over(&c - &a, 3);
        let first = hyp(
            w1(&n),
            vec![1 + &t, over(1 - &a, 2), over(2 - &a, 2), &c - &a],
            vec![q(1, 2), t, c.clone(), 1 - &c - &n, &c + 1 - &a + &n],
            z.clone(),
        )?;
        let second = scaled(div(&n * (1 - &a), 1 - &c - &n)?, || {
            hyp(
                w2(&n),
                vec![over(2 - &a, 2), over(3 - &a, 2), 1 + &c - &a],
                vec![q(3, 2), c.clone(), 2 - &c - &n, &c + 1 - &a + &n],
                z.clone(),
            )
        })?;
        Ok((lhs, first - second))
    }))
}

fn thm_psrecirel1() -> IdentityRecord {
    IdentityRecord::new(
        "thm-psrecirel1",
        "Reciprocal relation from Pfaff-Saalschutz: [c-a, a-b; c, -b]_n as a 6F5 minus a shifted 6F5",
        &["a", "b", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let lhs = bracket(vec![&c - &a, &a - &b], vec![c.clone(), -&b], e.n())?;
        let first = hyp(
            w1(&n),
            vec![a.clone(), 1 - &a, &b + &c - &a, &a - &b - &c + 1],
            vec![q(1, 2), c.clone(), 1 - &c - &n, &b - &n + 1, -&b],
            one(),
        )?;
        let pre = div(&n * &a * (&b + &c - &a), &b * (&c + &n - 1))?;
        let second = scaled(pre, || {
            hyp(
                w2(&n),
                vec![&a + 1, 1 - &a, &b + &c - &a + 1, &a - &b - &c + 1],
                vec![q(3, 2), c.clone(), 2 - &c - &n, &b - &n + 1, 1 - &b],
                one(),
            )
        })?;
        Ok((lhs, first - second))
    }))
}

fn thm_psrecirel2a() -> IdentityRecord {
    IdentityRecord::new(
        "thm-psrecirel2a",
        "Reciprocal relation from Pfaff-Saalschutz: [c-a, a-b; c-1, 1-b]_n as a 7F6 minus a well-poised 8F7",
        &["a", "b", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let lhs = bracket(vec![&c - &a, &a - &b], vec![&c - 1, 1 - &b], e.n())?;
        let first = hyp(
            w1(&n),
            vec![over(1 - &a, 2), over(2 - &a, 2), &c - &a, &b + &c - &a, &a - &b - &c + 1],
            vec![q(1, 2), over(1 - &b, 2), over(2 - &b, 2), &c - 1, 2 - &c - &n, &c - &a + &n],
            one(),
        )?;
        let pre = div(
            &n * (1 - &a) * (&c - &a + 1) * (&a - &b - &c + 1),
            (1 - &b) * (1 - &c) * (&c - &a + &n),
        )?;
        let second = scaled(pre, || {
            let t = over(&c - &a + 1, 3);
            hyp(
                w2(&n),
                vec![1 + &t, over(2 - &a, 2), over(3 - &a, 2), &c - &a, &b + &c - &a, &a - &b - &c + 2],
                vec![q(3, 2), t, over(2 - &b, 2), over(3 - &b, 2), c.clone(), 2 - &c - &n, &c - &a + &n + 1],
                one(),
            )
        })?;
        Ok((lhs, first - second))
    }))
}

fn thm_psrecirel2b() -> IdentityRecord {
    let sides = |e: &Env, repaired: bool| -> Result<(Rational, Rational), EvalError> {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let lhs = bracket(vec![1 + &c - &a, &a - &b], vec![c.clone(), 1 - &b], e.n())?;
        let t = over(&c - &a, 3);
        let fourth = if repaired { over(2 - &b, 2) } else { over(2 - &n, 2) };
        let first = hyp(
            w1(&n),
            vec![1 + &t, over(1 - &a, 2), over(2 - &a, 2), &c - &a, &b + &c - &a, &a - &b - &c + 1],
            vec![q(1, 2), t, over(1 - &b, 2), fourth, c.clone(), 1 - &c - &n, &c - &a + &n + 1],
            one(),
        )?;
        let pre = div(&n * (1 - &a) * (&b + &c - &a), (1 - &b) * (1 - &c - &n))?;
        let second = scaled(pre, || {
            hyp(
                w2(&n),
                vec![over(2 - &a, 2), over(3 - &a, 2), &c - &a + 1, &b + &c - &a + 1, &a - &b - &c + 1],
                vec![q(3, 2), over(2 - &b, 2), over(3 - &b, 2), c.clone(), 2 - &c - &n, &c - &a + &n + 1],
                one(),
            )
        })?;
        Ok((lhs, first + second))
    };
    IdentityRecord::new(
        "thm-psrecirel2b",
        "Reciprocal relation from Pfaff-Saalschutz: [1+c-a, a-b; c, 1-b]_n as a well-poised 8F7 plus a 7F6",
        &["a", "b", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, move |e| sides(e, false)))
    .variant(Variant::holds("lower-(2-b)/2", move |e| sides(e, true)))
}

fn thm_psrecirel3() -> IdentityRecord {
    let sides = |e: &Env, repaired: bool| -> Result<(Rational, Rational), EvalError> {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let z = q(1, 16);
        let lhs = bracket(vec![&c - &a, &a - &b + 1], vec![c.clone(), 1 - &b], e.n())?;
        let t = over(&a - &b, 3);
        let first = hyp(
            w1(&n),
            vec![1 + &t, &a - &b, &c - &a, a.clone(), 1 - &a, &b + &c - &a, &a - &b - &c + 1],
            vec![
                q(1, 2),
                t,
                over(1 - &b, 2),
                over(2 - &b, 2),
                over(c.clone(), 2),
                over(&c + 1, 2),
                &c - &a + &n,
                1 + &a - &b + &n,
            ],
            z.clone(),
        )?;
        let pre = div(&n * &a * (&c - &a + 1) * (&a - &b - &c + 1), (1 - &b) * &c * (&c - &a + &n))?;
        let second = scaled(pre, || {
            let t = over(&c - &a + 1, 3);
            let last = if repaired { &a - &b + &n + 1 } else { &a - &b - &c + 1 };
            hyp(
                w2(&n),
                vec![1 + &t, &a + 1, &a - &b + 1, &c - &a, 1 - &a, &b + &c - &a, &a - &b - &c + 2],
                vec![
                    q(3, 2),
                    t,
                    over(2 - &b, 2),
                    over(3 - &b, 2),
                    over(&c + 1, 2),
                    over(&c + 2, 2),
                    &c - &a + &n + 1,
                    last,
                ],
                z.clone(),
            )
        })?;
        Ok((lhs, first - second))
    };
    IdentityRecord::new(
        "thm-psrecirel3",
        "Reciprocal relation from Pfaff-Saalschutz with argument 1/16: [c-a, a-b+1; c, 1-b]_n as two well-poised series",
        &["a", "b", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, move |e| sides(e, false)))
    .variant(Variant::holds("lower-a-b+n+1", move |e| sides(e, true)))
}

/// `(c+a+bn)/(c+a) · (c+a)_n/(c)_n`, the common left side of the
/// Hagen-Rothe family.
fn hr_lhs(a: &Rational, b: &Rational, c: &Rational, n: &Rational, k: usize) -> Result<Rational, EvalError> {
    let lead = div(c + a + b * n, c + a)?;
    Ok(lead * div(ph(c + a, k), ph(c.clone(), k))?)
}

fn thm_hrrecirel1() -> IdentityRecord {
    #[derive(Clone, Copy)]
    enum Join {
        Verbatim,
        Minus,
        Plus,
    }
    let sides = |e: &Env, join: Join, flip_upper: bool| -> Result<(Rational, Rational), EvalError> {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let lhs = hr_lhs(&a, &b, &c, &n, e.n())?;
        let cbn = &c + &b * &n;
        let lower_e = div(cbn.clone(), 1 - 2 * &b)?;
        let upper_den = if flip_upper { 1 - 2 * &b } else { 1 + 2 * &b };
        let upper_e = div(cbn.clone(), upper_den)?;
        let first = scaled(div(cbn.clone(), c.clone())?, || {
            hyp(w1(&n), vec![1 + upper_e, -&a, &a + 1], vec![q(1, 2), lower_e, &c + 1, 1 - &c - &n], one())
        })?;
        if let Join::Verbatim = join {
            return Ok((lhs, first));
        }
        let pre = div(&n * &a * (&b * &n - &b + &c), &c * (&c - 1 + &n))?;
        let second = scaled(pre, || {
            let e2 = div(&cbn - &b, 1 - 2 * &b)?;
            hyp(w2(&n), vec![1 + &e2, 1 - &a, &a + 1], vec![q(3, 2), e2, &c + 1, 2 - &c - &n], one())
        })?;
        Ok(match join {
            Join::Plus => (lhs, first + second),
            _ => (lhs, first - second),
        })
    };
    IdentityRecord::new(
        "thm-hrrecirel1",
        "Reciprocal relation from Hagen-Rothe: (c+a+bn)/(c+a) (c+a)_n/(c)_n as a 5F4 joined with a shifted 5F4",
        &["a", "b", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, move |e| sides(e, Join::Verbatim, false)))
    .variant(Variant::fails("minus-join", move |e| sides(e, Join::Minus, false)))
    .variant(Variant::fails("plus-join", move |e| sides(e, Join::Plus, false)))
    .variant(Variant::fails("minus-join-1-2b", move |e| sides(e, Join::Minus, true)))
    .variant(Variant::holds("plus-join-1-2b", move |e| sides(e, Join::Plus, true)))
}

fn prop_hrbalid1() -> IdentityRecord {
    IdentityRecord::new(
        "prop-hrbalid1",
        "Terminating balanced series identity: 5F4[1+e, -a, a; 1/2, e, c+1, 1-c-n], e = (c+bn)/(1-2b)",
        &["a", "b", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let k = e.n();
        let cbn = &c + &b * &n;
        let ee = div(cbn.clone(), 1 - 2 * &b)?;
        let lhs = hyp(w1(&n), vec![1 + &ee, -&a, a.clone()], vec![q(1, 2), ee, &c + 1, 1 - &c - &n], one())?;
        let plus = div(&c * (&c + &a + &b * &n), 2 * &cbn * (&a + &c))? * cvg_ratio(&-&a, &c, k)?;
        let minus = div(&c * (&c - &a + &b * &n), 2 * &cbn * (&c - &a))? * cvg_ratio(&a, &c, k)?;
        Ok((lhs, plus + minus))
    }))
}

fn prop_hrbalid2() -> IdentityRecord {
    IdentityRecord::new(
        "prop-hrbalid2",
        "Terminating balanced series identity: 5F4[1+e, -a, a+1; 3/2, e, c+1, 1-c-n], e = (c+bn)/(1-2b)",
        &["a", "b", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let k = e.n();
        let cbn = &c + &b * &n;
        let ee = div(cbn.clone(), 1 - 2 * &b)?;
        let lhs = hyp(w1(&n), vec![1 + &ee, -&a, &a + 1], vec![q(3, 2), ee, &c + 1, 1 - &c - &n], one())?;
        let den = (&n + 1) * (2 * &a + 1) * &cbn;
        let plus = div(&c * (&c + &a + &b * &n + &b), den.clone())? * div(ph(&c + &a + 1, k), ph(c.clone(), k))?;
        let minus = div(&c * (&c - &a - 1 + &b * &n + &b), den)? * cvg_ratio(&a, &c, k)?;
        Ok((lhs, plus - minus))
    }))
}

fn cor_threecor_i() -> IdentityRecord {
    IdentityRecord::new(
        "cor-threecor-i",
        "Balanced series identity: 4F3[-n/2, (1-n)/2, -a, a; -1/2, c+1, 1-c-n]",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let k = e.n();
        let lhs = hyp(w1(&n), vec![-&a, a.clone()], vec![q(-1, 2), &c + 1, 1 - &c - &n], one())?;
        let den = 2 * (2 * &c + &n);
        let plus = div(&c * (2 * &c + 2 * &a - 2 * &n * &a + &n), &den * (&c + &a))? * cvg_ratio(&-&a, &c, k)?;
        let minus = div(&c * (2 * &c - 2 * &a + 2 * &n * &a + &n), &den * (&c - &a))? * cvg_ratio(&a, &c, k)?;
        Ok((lhs, plus + minus))
    }))
}

fn cor_threecor_ii() -> IdentityRecord {
    IdentityRecord::new(
        "cor-threecor-ii",
        "Balanced series identity: 4F3[-n/2, (1-n)/2, -a, a+1; 1/2, c+1, 1-c-n] = c/(2c+n) ((c+a+1)_n + (c-a)_n)/(c)_n",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let k = e.n();
        let lhs = hyp(w1(&n), vec![-&a, &a + 1], vec![q(1, 2), &c + 1, 1 - &c - &n], one())?;
        let rhs = div(c.clone(), 2 * &c + &n)? * div(ph(&c + &a + 1, k) + ph(&c - &a, k), ph(c.clone(), k))?;
        Ok((lhs, rhs))
    }))
}

fn cor_threecor_iii() -> IdentityRecord {
    IdentityRecord::new(
        "cor-threecor-iii",
        "Balanced series identity: 4F3[-n/2, (1-n)/2, -a, a; 1/2, c+1, 1-c-n]",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let k = e.n();
        let lhs = hyp(w1(&n), vec![-&a, a.clone()], vec![q(1, 2), &c + 1, 1 - &c - &n], one())?;
        let den = 2 * (2 * &c + &n);
        let plus = div(&c * (2 * &c + 2 * &a + &n), &den * (&c + &a))? * cvg_ratio(&-&a, &c, k)?;
        let minus = div(&c * (2 * &c - 2 * &a + &n), &den * (&c - &a))? * cvg_ratio(&a, &c, k)?;
        Ok((lhs, plus + minus))
    }))
}

fn cor_twocor_i() -> IdentityRecord {
    IdentityRecord::new(
        "cor-twocor-i",
        "Balanced series identity: 4F3[-n/2, (1-n)/2, -a, 2+a; 3/2, c+1, 1-c-n]",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let k = e.n();
        let lhs = hyp(w1(&n), vec![-&a, 2 + &a], vec![q(3, 2), &c + 1, 1 - &c - &n], one())?;
        let rhs = div(c.clone(), 2 * &c + &n)?
            * div(ph(&c + &a + 1, k + 1) - ph(&c - &a - 1, k + 1), (&n + 1) * (&a + 1) * ph(c.clone(), k))?;
        Ok((lhs, rhs))
    }))
}

fn cor_twocor_ii() -> IdentityRecord {
    IdentityRecord::new(
        "cor-twocor-ii",
        "Balanced series identity: 4F3[-n/2, (1-n)/2, -a, a+1; 3/2, c+1, 1-c-n]",
        &["a", "c"],
        Status::Derived,
    )
    .variant(Variant::holds(PRINTED, |e| {
        let (a, c, n) = (e.r("a"), e.r("c"), e.nq());
        let k = e.n();
        let lhs = hyp(w1(&n), vec![-&a, &a + 1], vec![q(3, 2), &c + 1, 1 - &c - &n], one())?;
        let den = (&n + 1) * (2 * &a + 1) * (2 * &c + &n);
        let plus = div(&c * (2 * &c + 2 * &a + &n + 1), den.clone())? * div(ph(&c + &a + 1, k), ph(c.clone(), k))?;
        let minus = div(&c * (2 * &c - 2 * &a + &n - 1), den)? * cvg_ratio(&a, &c, k)?;
        Ok((lhs, plus - minus))
    }))
}

fn thm_hrrecirel2() -> IdentityRecord {
    let sides = |e: &Env, middle: i64, thirds: bool| -> Result<(Rational, Rational), EvalError> {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let lhs = hr_lhs(&a, &b, &c, &n, e.n())?;
        let cbn = &c + &b * &n;
        let den = 2 - 3 * &b;
        let first = scaled(div(cbn.clone(), c.clone())?, || {
            let e1 = div(cbn.clone(), den.clone())?;
            hyp(
                vec![over(-&n, 3), over(1 - &n, 3), over(2 - &n, 3)],
                vec![1 + &e1, over(-&a, 2), over(1 - &a, 2), &a + 1],
                vec![q(1, 3), q(2, 3), e1, over(&c + 1, 2), over(&c + 2, 2), 1 - &c - &n],
                one(),
            )
        })?;
        let pre2 = div(&n * &a * (&cbn + 1 - &b), &c * (&c + 1))?;
        let second = scaled(pre2, || {
            let e2 = div(&cbn + 1 - &b, den.clone())?;
            hyp(
                vec![over(1 - &n, 3), over(2 - &n, 3), over(3 - &n, 3)],
                vec![1 + &e2, over(1 - &a, 2), over(2 - &a, 2), &a + 1],
                vec![q(2, 3), q(4, 3), e2, over(&c + 2, 2), over(&c + 3, 2), 1 - &c - &n],
                one(),
            )
        })?;
        let pre3 = div(
            &n * &a * (&n - 1) * (&a - 1) * (&cbn + 1 - 2 * &b),
            2 * &c * (&c + 1) * (&c - 1 + &n),
        )?;
        let third = scaled(pre3, || {
            let e3 = div(&cbn + 1 - 2 * &b, den.clone())?;
            let d = if thirds { 3 } else { 2 };
            hyp(
                vec![over(2 - &n, d), over(3 - &n, d), over(4 - &n, d)],
                vec![1 + &e3, over(2 - &a, 2), over(3 - &a, 2), &a + 1],
                vec![q(4, 3), q(5, 3), e3, over(&c + 2, 2), over(&c + 3, 2), 2 - &c - &n],
                one(),
            )
        })?;
        Ok((lhs, first + r(middle) * second + third))
    };
    IdentityRecord::new(
        "thm-hrrecirel2",
        "Reciprocal relation from Hagen-Rothe via the triplicate system: three 7F6 series with argument 1",
        &["a", "b", "c"],
        Status::Suspect,
    )
    .variant(Variant::fails(PRINTED_VERBATIM, move |e| sides(e, 1, false)))
    .variant(Variant::fails("middle-sign-flip", move |e| sides(e, -1, false)))
    .variant(Variant::holds("witnesses-thirds", move |e| sides(e, 1, true)))
}

fn thm_hrrecirel3() -> IdentityRecord {
    IdentityRecord::new(
        "thm-hrrecirel3",
        "Reciprocal relation from Hagen-Rothe for ell + 1 classes: a sum of ell + 1 terminating series with argument 1",
        &["a", "b", "c"],
        Status::Derived,
    )
    .ell(1..=4)
    .variant(Variant::holds(PRINTED, |e| {
        let (a, b, c, n) = (e.r("a"), e.r("b"), e.r("c"), e.nq());
        let ell = e.ell();
        let l = Rational::from(ell);
        let l1 = ell as i64 + 1;
        let cbn = &c + &b * &n;
        let lhs = hr_lhs(&a, &b, &c, &n, e.n())?;
        let den_e = &l - &b * (&l + 1);

        let mut den0 = Rational::one();
        for j in 1..=ell {
            den0 *= &l - Rational::from(j) + &c;
        }
        let pre0 = div(
            ph(-&n, ell) * ph(-&a, ell) * ((&b - 1) * &l - &cbn + 1),
            ph(one(), ell) * (1 - &c - &n) * den0,
        )?;
        let mut total = scaled(pre0, || {
            let e0 = div(&cbn - (&b - 1) * &l - 1, den_e.clone())?;
            let wit = (0..=ell).map(|j| over(&l + Rational::from(j) - &n, l1)).collect();
            let mut up = vec![&a + 1, 1 + &e0];
            up.extend((1..=ell).map(|j| (&l + Rational::from(j) - &a - 1) / &l));
            let mut low = vec![2 - &c - &n, e0];
            low.extend((1..=ell).map(|j| q(ell as i64 + j as i64 + 1, l1)));
            low.extend((1..=ell).map(|j| (2 * &l - Rational::from(j) + &c) / &l));
            hyp(wit, up, low, one())
        })?;

        for i in 1..=ell {
            let shift = (&b - 1) * Rational::from(i - 1);
            let mut d = Rational::one();
            for j in 1..=ell {
                for k in 1..=(i + j) / (ell + 1) {
                    d *= Rational::from(k) * &l - Rational::from(j) + &c;
                }
            }
            let pre = div(ph(-&n, i - 1) * ph(-&a, i - 1) * (&cbn - &shift), ph(one(), i - 1) * d)?;
            total += scaled(pre, || {
                let ei = div(&cbn - &shift, den_e.clone())?;
                let wit = (0..=ell).map(|j| over(Rational::from(i + j) - &n - 1, l1)).collect();
                let mut up = vec![one(), &a + 1, 1 + &ei];
                up.extend((1..=ell).map(|j| (Rational::from(i + j) - &a - 2) / &l));
                let mut low = vec![1 - &c - &n, ei];
                low.extend((0..=ell).map(|j| q((i + j) as i64, l1)));
                low.extend(
                    (1..=ell).map(|j| (&l - Rational::from(j) + &c) / &l + Rational::from((i + j) / (ell + 1))),
                );
                hyp(wit, up, low, one())
            })?;
        }
        Ok((lhs, total))
    }))
}
