//! Multiplicate Gould–Hsu inverse series relations.
//!
//! The linear factors `A_{i,k} + x B_{i,k}` are split into `ℓ + 1` classes.
//! With `φ_i(x; m) = Π_{k<m} (A_{i,k} + x B_{i,k})`,
//!
//! ```text
//! Φ(x; n) = Π_{i=0..ℓ} φ_i(x; ⌊(i+n)/(ℓ+1)⌋)
//! λ(k)    = A_{ℓ-q,p} + k B_{ℓ-q,p}          where k = (ℓ+1) p + q, 0 <= q <= ℓ
//! F(n)    = Σ_k (-1)^k C(n,k) Φ(k;n) G(k)
//! G(n)    = Σ_k (-1)^k C(n,k) λ(k) / Φ(n;k+1) F(k)
//! ```
//!
//! The two transforms are mutually inverse whenever every touched `Φ(n; k+1)`
//! is nonzero. Nondegeneracy is checked at the points actually used.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{binomial_nk, sign_power, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InversionError {
    #[error("class index {class} out of range for ell = {ell}")]
    ClassOutOfRange { class: usize, ell: usize },
    #[error("coefficient index {index} of class {class} exceeds the instantiated range")]
    IndexOutOfRange { class: usize, index: usize },
    #[error("Phi({x}; {order}) vanishes")]
    PhiVanishes { x: Rational, order: usize },
    #[error("sequence must have at least one element")]
    EmptySequence,
    #[error("inner sum requires i <= n (got i = {i}, n = {n})")]
    InvalidRange { i: usize, n: usize },
    #[error("{0}")]
    Shape(String),
}

/// One coefficient family `j -> A_{i,j}` (or `B_{i,j}`) for a fixed class `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoefficientFamily {
    Table(Vec<Rational>),
    Affine { base: Rational, step: Rational },
}

impl CoefficientFamily {
    pub fn constant(value: Rational) -> Self {
        CoefficientFamily::Affine { base: value, step: Rational::zero() }
    }

    pub fn affine(base: Rational, step: Rational) -> Self {
        CoefficientFamily::Affine { base, step }
    }

    pub fn get(&self, j: usize) -> Option<Rational> {
        match self {
            CoefficientFamily::Table(values) => values.get(j).cloned(),
            CoefficientFamily::Affine { base, step } => Some(base + step * Rational::from(j)),
        }
    }

    /// Largest index served, `None` when unbounded.
    pub fn max_index(&self) -> Option<usize> {
        match self {
            CoefficientFamily::Table(values) => Some(values.len().saturating_sub(1)),
            CoefficientFamily::Affine { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSequences {
    ell: usize,
    coeff_a: Vec<CoefficientFamily>,
    coeff_b: Vec<CoefficientFamily>,
}

impl FactorSequences {
    pub fn new(
        ell: usize,
        coeff_a: Vec<CoefficientFamily>,
        coeff_b: Vec<CoefficientFamily>,
    ) -> Result<Self, InversionError> {
        if coeff_a.len() != ell + 1 || coeff_b.len() != ell + 1 {
            return Err(InversionError::Shape(format!(
                "expected {} coefficient classes for ell = {ell}, got {} and {}",
                ell + 1,
                coeff_a.len(),
                coeff_b.len()
            )));
        }
        if coeff_a.iter().chain(&coeff_b).any(|f| matches!(f, CoefficientFamily::Table(t) if t.is_empty())) {
            return Err(InversionError::Shape("coefficient tables must be nonempty".into()));
        }
        Ok(FactorSequences { ell, coeff_a, coeff_b })
    }

    /// Classic Gould–Hsu setting: one class of factors `a_k + x b_k`.
    pub fn classic(a: CoefficientFamily, b: CoefficientFamily) -> Self {
        FactorSequences { ell: 0, coeff_a: vec![a], coeff_b: vec![b] }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn classes(&self) -> usize {
        self.ell + 1
    }

    /// Largest `j` every family can serve (`usize::MAX` if all are affine).
    pub fn max_index(&self) -> usize {
        self.coeff_a
            .iter()
            .chain(&self.coeff_b)
            .filter_map(CoefficientFamily::max_index)
            .min()
            .unwrap_or(usize::MAX)
    }

    pub fn coefficients(&self, class: usize, j: usize) -> Result<(Rational, Rational), InversionError> {
        if class > self.ell {
            return Err(InversionError::ClassOutOfRange { class, ell: self.ell });
        }
        let oob = InversionError::IndexOutOfRange { class, index: j };
        let a = self.coeff_a[class].get(j).ok_or_else(|| oob.clone())?;
        let b = self.coeff_b[class].get(j).ok_or(oob)?;
        Ok((a, b))
    }

    /// Order of class `i` inside `Φ(·; n)`.
    pub fn class_order(&self, class: usize, n: usize) -> usize {
        (class + n) / (self.ell + 1)
    }

    /// `φ_i(x; n) = Π_{k<n} (A_{i,k} + x B_{i,k})`.
    pub fn phi_component(&self, class: usize, x: &Rational, n: usize) -> Result<Rational, InversionError> {
        if class > self.ell {
            return Err(InversionError::ClassOutOfRange { class, ell: self.ell });
        }
        let mut acc = Rational::one();
        for k in 0..n {
            let (a, b) = self.coefficients(class, k)?;
            acc *= a + x * b;
        }
        Ok(acc)
    }

    pub fn phi_big(&self, x: &Rational, n: usize) -> Result<Rational, InversionError> {
        let mut acc = Rational::one();
        for class in 0..=self.ell {
            acc *= self.phi_component(class, x, self.class_order(class, n))?;
        }
        Ok(acc)
    }

    pub fn lambda_factor(&self, k: usize) -> Result<Rational, InversionError> {
        let q = k % (self.ell + 1);
        let p = k / (self.ell + 1);
        let (a, b) = self.coefficients(self.ell - q, p)?;
        Ok(a + Rational::from(k) * b)
    }

    /// `F(n) = Σ_{k=0}^{n} (-1)^k C(n,k) Φ(k;n) G(k)`.
    pub fn forward_transform(&self, g: &FiniteSequence) -> Result<FiniteSequence, InversionError> {
        let len = g.len();
        let mut out = vec![Rational::zero(); len];
        for k in 0..len {
            let x = Rational::from(k);
            let ladder = PhiLadder::build(self, &x, len - 1)?;
            let weight = sign_power(k) * &g[k];
            for (n, slot) in out.iter_mut().enumerate().skip(k) {
                *slot += binomial_nk(n as u64, k as i64) * ladder.phi(n) * &weight;
            }
        }
        Ok(FiniteSequence(out))
    }

    /// `G(n) = Σ_{k=0}^{n} (-1)^k C(n,k) λ(k)/Φ(n;k+1) F(k)`.
    pub fn inverse_transform(&self, f: &FiniteSequence) -> Result<FiniteSequence, InversionError> {
        let len = f.len();
        let lambdas = (0..len).map(|k| self.lambda_factor(k)).collect::<Result<Vec<_>, _>>()?;
        let mut out = Vec::with_capacity(len);
        for n in 0..len {
            let x = Rational::from(n);
            let ladder = PhiLadder::build(self, &x, n + 1)?;
            let mut acc = Rational::zero();
            for k in 0..=n {
                let denom = ladder.phi(k + 1);
                let term = (sign_power(k) * binomial_nk(n as u64, k as i64) * &lambdas[k] * &f[k])
                    .checked_div(&denom)
                    .ok_or_else(|| InversionError::PhiVanishes { x: x.clone(), order: k + 1 })?;
                acc += term;
            }
            out.push(acc);
        }
        Ok(FiniteSequence(out))
    }

    /// `S(i,n) = Σ_{k=i}^{n} (-1)^{k-i} C(n-i,k-i) Φ(k;n)/Φ(k;i+1)`.
    pub fn inner_sum_s(&self, i: usize, n: usize) -> Result<Rational, InversionError> {
        if i > n {
            return Err(InversionError::InvalidRange { i, n });
        }
        let mut acc = Rational::zero();
        for k in i..=n {
            let x = Rational::from(k);
            let denom = self.phi_big(&x, i + 1)?;
            let numer = self.phi_big(&x, n)?;
            let ratio = numer
                .checked_div(&denom)
                .ok_or(InversionError::PhiVanishes { x: x.clone(), order: i + 1 })?;
            acc += sign_power(k - i) * binomial_nk((n - i) as u64, (k - i) as i64) * ratio;
        }
        Ok(acc)
    }

    /// The even/odd split duplicate (`ℓ = 1`) inverse as displayed for the
    /// `φ`/`ψ` system, evaluated term by term.
    pub fn duplicate_inverse_printed(&self, f: &FiniteSequence) -> Result<FiniteSequence, InversionError> {
        self.require_ell(1)?;
        let (phi, psi) = (0, 1);
        let mut out = Vec::with_capacity(f.len());
        for n in 0..f.len() {
            let x = Rational::from(n);
            let mut acc = Rational::zero();
            for k in 0..=n / 2 {
                let (c, d) = self.coefficients(psi, k)?;
                let weight = c + Rational::from(2 * k) * d;
                let denom = self.phi_component(phi, &x, k)? * self.phi_component(psi, &x, k + 1)?;
                acc += self.weighted(n, 2 * k, weight, denom, &f[2 * k])?;
            }
            for k in 0..n.div_ceil(2) {
                let (a, b) = self.coefficients(phi, k)?;
                let weight = a + Rational::from(2 * k + 1) * b;
                let denom = self.phi_component(phi, &x, k + 1)? * self.phi_component(psi, &x, k + 1)?;
                acc -= self.weighted(n, 2 * k + 1, weight, denom, &f[2 * k + 1])?;
            }
            out.push(acc);
        }
        Ok(FiniteSequence(out))
    }

    /// The three-way split triplicate (`ℓ = 2`) inverse for the `φ`/`ψ`/`χ`
    /// system. `PrintedVerbatim` keeps the displayed weight `e_k + 3 f_k`, the
    /// displayed first denominator `φ(n;k) ψ(n;k+1) χ(n;k+1)` and the fixed
    /// `+, -, +` signs; `Corrected` uses `e_k + 3k f_k`, `φ(n;k) ψ(n;k) χ(n;k+1)`
    /// and the sign `(-1)^m` of the summation index `m`.
    pub fn triplicate_inverse_printed(
        &self,
        f: &FiniteSequence,
        reading: TriplicateReading,
    ) -> Result<FiniteSequence, InversionError> {
        self.require_ell(2)?;
        let (phi, psi, chi) = (0, 1, 2);
        let corrected = reading == TriplicateReading::Corrected;
        let mut out = Vec::with_capacity(f.len());
        for n in 0..f.len() {
            let x = Rational::from(n);
            let mut acc = Rational::zero();
            for k in 0..=n / 3 {
                for residue in 0..3 {
                    let m = 3 * k + residue;
                    if m > n {
                        break;
                    }
                    let (weight, orders) = match residue {
                        0 => {
                            let (e, fc) = self.coefficients(chi, k)?;
                            let mult = if corrected { 3 * k } else { 3 };
                            let psi_order = if corrected { k } else { k + 1 };
                            (e + Rational::from(mult) * fc, [k, psi_order, k + 1])
                        }
                        1 => {
                            let (c, d) = self.coefficients(psi, k)?;
                            (c + Rational::from(m) * d, [k, k + 1, k + 1])
                        }
                        _ => {
                            let (a, b) = self.coefficients(phi, k)?;
                            (a + Rational::from(m) * b, [k + 1, k + 1, k + 1])
                        }
                    };
                    let denom = self.phi_component(phi, &x, orders[0])?
                        * self.phi_component(psi, &x, orders[1])?
                        * self.phi_component(chi, &x, orders[2])?;
                    let term = self.weighted(n, m, weight, denom, &f[m])?;
                    let negative = if corrected { m % 2 == 1 } else { residue == 1 };
                    if negative {
                        acc -= term;
                    } else {
                        acc += term;
                    }
                }
            }
            out.push(acc);
        }
        Ok(FiniteSequence(out))
    }

    fn weighted(
        &self,
        n: usize,
        m: usize,
        weight: Rational,
        denom: Rational,
        value: &Rational,
    ) -> Result<Rational, InversionError> {
        (binomial_nk(n as u64, m as i64) * weight * value)
            .checked_div(&denom)
            .ok_or(InversionError::PhiVanishes { x: Rational::from(n), order: m + 1 })
    }

    fn require_ell(&self, ell: usize) -> Result<(), InversionError> {
        if self.ell != ell {
            return Err(InversionError::Shape(format!("requires ell = {ell}, instance has ell = {}", self.ell)));
        }
        Ok(())
    }
}

/// Coefficient file contents: one family per class for `A` and for `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientFile {
    pub a: Vec<CoefficientFamily>,
    pub b: Vec<CoefficientFamily>,
}

impl CoefficientFile {
    pub fn into_sequences(self, ell: usize) -> Result<FactorSequences, InversionError> {
        FactorSequences::new(ell, self.a, self.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriplicateReading {
    PrintedVerbatim,
    Corrected,
}

/// Per-class prefix products `φ_i(x; 0..=max)` for one fixed `x`, so that
/// `Φ(x; n)` for a run of `n` costs a lookup per class.
struct PhiLadder {
    ell: usize,
    rungs: Vec<Vec<Rational>>,
}

impl PhiLadder {
    fn build(seqs: &FactorSequences, x: &Rational, max_n: usize) -> Result<Self, InversionError> {
        let mut rungs = Vec::with_capacity(seqs.classes());
        for class in 0..seqs.classes() {
            let top = seqs.class_order(class, max_n);
            let mut rung = Vec::with_capacity(top + 1);
            let mut acc = Rational::one();
            rung.push(acc.clone());
            for k in 0..top {
                let (a, b) = seqs.coefficients(class, k)?;
                acc *= a + x * b;
                rung.push(acc.clone());
            }
            rungs.push(rung);
        }
        Ok(PhiLadder { ell: seqs.ell, rungs })
    }

    fn phi(&self, n: usize) -> Rational {
        self.rungs
            .iter()
            .enumerate()
            .map(|(class, rung)| rung[(class + n) / (self.ell + 1)].clone())
            .product()
    }
}

/// A finite sequence indexed `0..N`, never empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct FiniteSequence(Vec<Rational>);

impl FiniteSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self, InversionError> {
        if values.is_empty() {
            Err(InversionError::EmptySequence)
        } else {
            Ok(FiniteSequence(values))
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_values(self) -> Vec<Rational> {
        self.0
    }
}

impl std::ops::Index<usize> for FiniteSequence {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl TryFrom<Vec<Rational>> for FiniteSequence {
    type Error = InversionError;
    fn try_from(values: Vec<Rational>) -> Result<Self, Self::Error> {
        FiniteSequence::new(values)
    }
}

impl From<FiniteSequence> for Vec<Rational> {
    fn from(s: FiniteSequence) -> Self {
        s.0
    }
}

/// The original one-class pair, written directly in terms of `a_k`, `b_k`:
/// `f(n) = Σ (-1)^k C(n,k) φ(k;n) g(k)`.
pub fn gould_hsu_forward(a: &[Rational], b: &[Rational], g: &[Rational]) -> Result<Vec<Rational>, InversionError> {
    let phi = |x: &Rational, n: usize| classic_phi(a, b, x, n);
    let mut out = Vec::with_capacity(g.len());
    for n in 0..g.len() {
        let mut acc = Rational::zero();
        for (k, gk) in g.iter().enumerate().take(n + 1) {
            acc += sign_power(k) * binomial_nk(n as u64, k as i64) * phi(&Rational::from(k), n)? * gk;
        }
        out.push(acc);
    }
    Ok(out)
}

/// `g(n) = Σ (-1)^k C(n,k) (a_k + k b_k)/φ(n;k+1) f(k)`.
pub fn gould_hsu_inverse(a: &[Rational], b: &[Rational], f: &[Rational]) -> Result<Vec<Rational>, InversionError> {
    let mut out = Vec::with_capacity(f.len());
    for n in 0..f.len() {
        let x = Rational::from(n);
        let mut acc = Rational::zero();
        for (k, fk) in f.iter().enumerate().take(n + 1) {
            let (ak, bk) = classic_coeffs(a, b, k)?;
            let weight = ak + Rational::from(k) * bk;
            let denom = classic_phi(a, b, &x, k + 1)?;
            let term = (sign_power(k) * binomial_nk(n as u64, k as i64) * weight * fk)
                .checked_div(&denom)
                .ok_or(InversionError::PhiVanishes { x: x.clone(), order: k + 1 })?;
            acc += term;
        }
        out.push(acc);
    }
    Ok(out)
}

fn classic_coeffs(a: &[Rational], b: &[Rational], k: usize) -> Result<(Rational, Rational), InversionError> {
    match (a.get(k), b.get(k)) {
        (Some(ak), Some(bk)) => Ok((ak.clone(), bk.clone())),
        _ => Err(InversionError::IndexOutOfRange { class: 0, index: k }),
    }
}

fn classic_phi(a: &[Rational], b: &[Rational], x: &Rational, n: usize) -> Result<Rational, InversionError> {
    let mut acc = Rational::one();
    for k in 0..n {
        let (ak, bk) = classic_coeffs(a, b, k)?;
        acc *= ak + x * bk;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn constant(v: i64) -> CoefficientFamily {
        CoefficientFamily::constant(Rational::from(v))
    }

    fn seq(values: &[i64]) -> FiniteSequence {
        FiniteSequence::new(values.iter().map(|&v| Rational::from(v)).collect()).unwrap()
    }

    #[test]
    fn phi_component_examples() {
        let s = FactorSequences::classic(constant(1), constant(1));
        assert_eq!(s.phi_component(0, &q(5, 3), 0).unwrap(), Rational::one());
        assert_eq!(s.phi_component(0, &q(2, 1), 3).unwrap(), q(27, 1));

        let s = FactorSequences::new(1, vec![constant(1), constant(0)], vec![constant(0), constant(1)]).unwrap();
        assert_eq!(s.phi_component(1, &q(3, 1), 2).unwrap(), q(9, 1));
        assert!(matches!(s.phi_component(2, &q(3, 1), 2), Err(InversionError::ClassOutOfRange { .. })));
    }

    #[test]
    fn phi_big_examples() {
        let s = FactorSequences::new(1, vec![constant(1), constant(0)], vec![constant(0), constant(1)]).unwrap();
        assert_eq!(s.phi_big(&q(3, 1), 3).unwrap(), q(9, 1));
        assert_eq!(s.phi_big(&q(-7, 2), 0).unwrap(), Rational::one());

        let c = FactorSequences::classic(
            CoefficientFamily::affine(q(1, 2), q(1, 1)),
            CoefficientFamily::affine(q(-1, 3), q(2, 1)),
        );
        for n in 0..6 {
            assert_eq!(c.phi_big(&q(5, 4), n).unwrap(), c.phi_component(0, &q(5, 4), n).unwrap());
        }
    }

    #[test]
    fn lambda_examples() {
        let s = FactorSequences::classic(constant(1), constant(1));
        assert_eq!(s.lambda_factor(3).unwrap(), q(4, 1));
        assert_eq!(s.lambda_factor(0).unwrap(), q(1, 1));

        let s = FactorSequences::new(
            1,
            vec![constant(7), CoefficientFamily::affine(q(0, 1), q(1, 1))],
            vec![constant(0), constant(1)],
        )
        .unwrap();
        assert_eq!(s.lambda_factor(4).unwrap(), q(6, 1));
        // k = 0 reads A_{ell,0}
        assert_eq!(s.lambda_factor(0).unwrap(), q(0, 1));
    }

    #[test]
    fn table_bounds_are_enforced() {
        let s = FactorSequences::classic(
            CoefficientFamily::Table(vec![q(1, 1), q(2, 1)]),
            CoefficientFamily::Table(vec![q(1, 1), q(1, 1)]),
        );
        assert_eq!(s.max_index(), 1);
        assert!(matches!(s.phi_component(0, &q(1, 1), 3), Err(InversionError::IndexOutOfRange { .. })));
        assert!(s.forward_transform(&seq(&[1, 2, 3, 4])).is_err());
    }

    #[test]
    fn forward_of_delta_is_constant() {
        let s = FactorSequences::classic(constant(1), constant(0));
        assert_eq!(s.forward_transform(&seq(&[1, 0, 0])).unwrap(), seq(&[1, 1, 1]));
        assert_eq!(s.inverse_transform(&seq(&[1, 1, 1])).unwrap(), seq(&[1, 0, 0]));
    }

    #[test]
    fn affine_classic_round_trip_matches_direct_oracle() {
        // A_{0,k} = k + 1, B_{0,k} = 1, so phi(x;n) = (x+1)(x+2)...(x+n).
        let s = FactorSequences::classic(CoefficientFamily::affine(q(1, 1), q(1, 1)), constant(1));
        let g = seq(&[1, 2, 3]);
        let f = s.forward_transform(&g).unwrap();
        // Direct oracle: F(0)=1; F(1)=1 - 1*2*2=-3; F(2)=1*2 -2*(2*3)*2 + (3*4)*3 = 14.
        assert_eq!(f, seq(&[1, -3, 14]));
        assert_eq!(s.inverse_transform(&f).unwrap(), g);
    }

    #[test]
    fn inverse_at_zero_is_identity() {
        let s = FactorSequences::new(
            2,
            vec![constant(3), constant(-2), CoefficientFamily::affine(q(5, 2), q(1, 3))],
            vec![constant(1), constant(4), constant(-1)],
        )
        .unwrap();
        let f = FiniteSequence::new(vec![q(11, 7)]).unwrap();
        assert_eq!(s.inverse_transform(&f).unwrap()[0], q(11, 7));
    }

    #[test]
    fn inner_sum_examples() {
        let s = FactorSequences::classic(constant(1), constant(1));
        assert_eq!(s.inner_sum_s(0, 2).unwrap(), Rational::zero());
        assert_eq!(s.inner_sum_s(3, 3).unwrap(), s.lambda_factor(3).unwrap().recip().unwrap());
        assert!(matches!(s.inner_sum_s(4, 3), Err(InversionError::InvalidRange { .. })));
    }

    #[test]
    fn degenerate_phi_is_reported() {
        // A_{0,k} = -2, B_{0,k} = 1 gives Φ(2; 1) = 0.
        let s = FactorSequences::classic(constant(-2), constant(1));
        let err = s.inverse_transform(&seq(&[1, 1, 1])).unwrap_err();
        assert_eq!(err, InversionError::PhiVanishes { x: q(2, 1), order: 1 });
    }

    #[test]
    fn printed_duplicate_trivial_case() {
        let s = FactorSequences::new(1, vec![constant(1), constant(1)], vec![constant(0), constant(0)]).unwrap();
        assert_eq!(s.duplicate_inverse_printed(&seq(&[1, 1, 1])).unwrap(), seq(&[1, 0, 0]));
        let wrong = FactorSequences::classic(constant(1), constant(0));
        assert!(matches!(wrong.duplicate_inverse_printed(&seq(&[1])), Err(InversionError::Shape(_))));
    }

    #[test]
    fn printed_triplicate_delta_recovery() {
        let s = FactorSequences::new(
            2,
            vec![constant(2), constant(3), CoefficientFamily::affine(q(1, 1), q(1, 2))],
            vec![constant(1), constant(1), constant(1)],
        )
        .unwrap();
        let f = FiniteSequence::new(vec![q(5, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]).unwrap();
        let generic = s.inverse_transform(&f).unwrap();
        let corrected = s.triplicate_inverse_printed(&f, TriplicateReading::Corrected).unwrap();
        assert_eq!(generic, corrected);
    }

    #[test]
    fn classic_pair_literal_round_trip() {
        let a: Vec<Rational> = (0..6).map(|k| q(2 * k + 3, 2)).collect();
        let b: Vec<Rational> = (0..6).map(|k| q(1 - k, 3)).collect();
        let g: Vec<Rational> = (0..6).map(|k| q(k * k - 2, k + 1)).collect();
        let f = gould_hsu_forward(&a, &b, &g).unwrap();
        assert_eq!(gould_hsu_inverse(&a, &b, &f).unwrap(), g);
    }

    #[test]
    fn sequence_json_shape() {
        let s = seq(&[1, -2]);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"["1/1","-2/1"]"#);
        assert!(serde_json::from_str::<FiniteSequence>("[]").is_err());
        let fam: CoefficientFamily = serde_json::from_str(r#"{"base":"1/2","step":"-1"}"#).unwrap();
        assert_eq!(fam.get(3), Some(q(-5, 2)));
        let fam: CoefficientFamily = serde_json::from_str(r#"["1","2/3"]"#).unwrap();
        assert_eq!(fam.get(1), Some(q(2, 3)));
        assert_eq!(fam.get(2), None);

        let file: CoefficientFile =
            serde_json::from_str(r#"{"a":[["1","2"],{"base":"0","step":"1"}],"b":[{"base":"1","step":"0"},["1/2"]]}"#)
                .unwrap();
        let seqs = file.clone().into_sequences(1).unwrap();
        assert_eq!(seqs.coefficients(1, 0).unwrap(), (q(0, 1), q(1, 2)));
        assert!(matches!(file.into_sequences(2), Err(InversionError::Shape(_))));
    }
}
