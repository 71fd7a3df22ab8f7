//! Terminating generalized hypergeometric series and the bracket notation
//! `[α, β, ...]_n` / `[α, ...; A, ...]_n`.

use thiserror::Error;

use crate::exact::{pochhammer, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series does not terminate: no upper parameter is a nonpositive integer")]
    NotTerminating,
    #[error("lower parameter {param} vanishes at summation index {index}")]
    LowerParameterPole { index: usize, param: Rational },
    #[error("denominator Pochhammer ({param})_{order} vanishes")]
    DenominatorPole { param: Rational, order: usize },
}

/// A `pFq[upper; lower; argument]` that is expected to terminate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesSpec {
    pub upper: Vec<Rational>,
    pub lower: Vec<Rational>,
    pub argument: Rational,
}

impl SeriesSpec {
    pub fn new(upper: Vec<Rational>, lower: Vec<Rational>, argument: Rational) -> Self {
        SeriesSpec { upper, lower, argument }
    }

    /// Argument `z = 1`, the convention when the argument is omitted.
    pub fn unit(upper: Vec<Rational>, lower: Vec<Rational>) -> Self {
        SeriesSpec::new(upper, lower, Rational::one())
    }

    pub fn termination_order(&self) -> Result<usize, SeriesError> {
        termination_order(&self.upper)
    }

    pub fn evaluate(&self) -> Result<Rational, SeriesError> {
        eval_terminating_pfq(self)
    }
}

/// Smallest `m` such that `-m` is among `params`.
pub fn termination_order(params: &[Rational]) -> Result<usize, SeriesError> {
    params
        .iter()
        .filter_map(Rational::nonpositive_integer_magnitude)
        .min()
        .map(|m| m as usize)
        .ok_or(SeriesError::NotTerminating)
}

/// Fails when some lower parameter is a nonpositive integer `-m` with `m < order`,
/// i.e. `(b)_k` vanishes for some `k <= order`.
pub fn check_lower_poles(lower: &[Rational], order: usize) -> Result<(), SeriesError> {
    for b in lower {
        if let Some(m) = b.nonpositive_integer_magnitude() {
            if (m as usize) < order {
                return Err(SeriesError::LowerParameterPole { index: m as usize + 1, param: b.clone() });
            }
        }
    }
    Ok(())
}

/// `Σ_{k=0}^{N} Π(a_j)_k / Π(b_j)_k · z^k / k!`, summed with the term-ratio recurrence.
pub fn eval_terminating_pfq(spec: &SeriesSpec) -> Result<Rational, SeriesError> {
    let order = spec.termination_order()?;
    check_lower_poles(&spec.lower, order)?;

    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..order {
        let shift = Rational::from(k);
        let mut ratio = spec.argument.clone();
        for a in &spec.upper {
            ratio *= a + &shift;
        }
        let mut denom = Rational::from(k + 1);
        for b in &spec.lower {
            denom *= b + &shift;
        }
        let ratio = ratio.checked_div(&denom).ok_or_else(|| {
            let param = spec.lower.iter().find(|b| (*b + &shift).is_zero()).cloned().unwrap_or_default();
            SeriesError::LowerParameterPole { index: k + 1, param }
        })?;
        term *= ratio;
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    Ok(sum)
}

/// `[α, β, ...; A, B, ...]_n`; an empty denominator list is the plain product form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketProduct {
    pub numerator_params: Vec<Rational>,
    pub denominator_params: Vec<Rational>,
    pub order: usize,
}

impl BracketProduct {
    pub fn new(numerator_params: Vec<Rational>, denominator_params: Vec<Rational>, order: usize) -> Self {
        BracketProduct { numerator_params, denominator_params, order }
    }

    pub fn evaluate(&self) -> Result<Rational, SeriesError> {
        product_bracket(self)
    }
}

pub fn product_bracket(bp: &BracketProduct) -> Result<Rational, SeriesError> {
    let mut denom = Rational::one();
    for a in &bp.denominator_params {
        let p = pochhammer(a, bp.order);
        if p.is_zero() {
            return Err(SeriesError::DenominatorPole { param: a.clone(), order: bp.order });
        }
        denom *= p;
    }
    let numer: Rational = bp.numerator_params.iter().map(|a| pochhammer(a, bp.order)).product();
    Ok(numer / denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Independent oracle: sum of explicit Pochhammer quotients.
    fn direct_sum(spec: &SeriesSpec) -> Rational {
        let order = spec.termination_order().unwrap();
        let mut total = Rational::zero();
        let mut fact = Rational::one();
        for k in 0..=order {
            if k > 0 {
                fact *= Rational::from(k);
            }
            let num: Rational = spec.upper.iter().map(|a| pochhammer(a, k)).product();
            let den: Rational = spec.lower.iter().map(|b| pochhammer(b, k)).product();
            total += num * spec.argument.pow(k as u32) / (den * &fact);
        }
        total
    }

    #[test]
    fn termination_order_examples() {
        assert_eq!(termination_order(&[q(-3, 1), q(1, 2)]), Ok(3));
        assert_eq!(termination_order(&[q(-5, 1), q(-2, 1)]), Ok(2));
        assert_eq!(termination_order(&[q(1, 2), q(3, 1)]), Err(SeriesError::NotTerminating));
        assert_eq!(termination_order(&[q(-5, 2)]), Err(SeriesError::NotTerminating));
    }

    #[test]
    fn eval_examples() {
        let s = SeriesSpec::unit(vec![q(-2, 1), q(1, 1)], vec![q(3, 1)]);
        assert_eq!(s.evaluate().unwrap(), q(1, 2));
        let cvg_rhs = pochhammer(&q(2, 1), 2) / pochhammer(&q(3, 1), 2);
        assert_eq!(cvg_rhs, q(1, 2));

        let s = SeriesSpec::unit(vec![q(-1, 1), q(2, 1), q(3, 1)], vec![q(4, 1), q(5, 1)]);
        assert_eq!(s.evaluate().unwrap(), q(7, 10));

        let s = SeriesSpec::new(vec![q(0, 1), q(5, 3)], vec![q(-7, 2)], q(9, 1));
        assert_eq!(s.evaluate().unwrap(), Rational::one());
    }

    #[test]
    fn lower_pole_inside_range_is_an_error() {
        let s = SeriesSpec::unit(vec![q(-5, 1), q(1, 1)], vec![q(-2, 1)]);
        assert!(matches!(s.evaluate(), Err(SeriesError::LowerParameterPole { .. })));
    }

    #[test]
    fn lower_pole_beyond_range_is_permitted() {
        let s = SeriesSpec::unit(vec![q(-2, 1), q(1, 1)], vec![q(-2, 1)]);
        assert_eq!(s.evaluate().unwrap(), direct_sum(&s));
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(BracketProduct::new(vec![q(7, 3)], vec![q(-1, 1)], 0).evaluate().unwrap(), Rational::one());
        assert_eq!(BracketProduct::new(vec![q(2, 1), q(3, 1)], vec![], 2).evaluate().unwrap(), q(72, 1));
        assert_eq!(BracketProduct::new(vec![q(2, 1)], vec![q(3, 1)], 2).evaluate().unwrap(), q(1, 2));
        assert!(matches!(
            BracketProduct::new(vec![q(2, 1)], vec![q(-1, 1)], 3).evaluate(),
            Err(SeriesError::DenominatorPole { .. })
        ));
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn is_pole(b: &Rational, n: usize) -> bool {
        matches!(b.nonpositive_integer_magnitude(), Some(m) if (m as usize) < n)
    }

    proptest! {
        #[test]
        fn chu_vandermonde(a in rational(), c in rational(), n in 0usize..=8) {
            prop_assume!(!is_pole(&c, n));
            let s = SeriesSpec::unit(vec![-Rational::from(n), a.clone()], vec![c.clone()]);
            let rhs = pochhammer(&(&c - &a), n) / pochhammer(&c, n);
            prop_assert_eq!(s.evaluate().unwrap(), rhs);
        }

        #[test]
        fn pfaff_saalschutz(a in rational(), b in rational(), c in rational(), n in 0usize..=8) {
            let d = Rational::one() + &a + &b - &c - Rational::from(n);
            prop_assume!(!is_pole(&c, n) && !is_pole(&d, n));
            let cab = &c - &a - &b;
            prop_assume!(!pochhammer(&c, n).is_zero() && !pochhammer(&cab, n).is_zero());
            let s = SeriesSpec::unit(vec![-Rational::from(n), a.clone(), b.clone()], vec![c.clone(), d]);
            let rhs = pochhammer(&(&c - &a), n) * pochhammer(&(&c - &b), n)
                / (pochhammer(&c, n) * pochhammer(&cab, n));
            prop_assert_eq!(s.evaluate().unwrap(), rhs);
        }

        #[test]
        fn recurrence_matches_direct_sum(
            upper in proptest::collection::vec(rational(), 0..4),
            lower in proptest::collection::vec(rational(), 0..4),
            z in rational(),
            n in 0usize..7,
        ) {
            let mut up = vec![-Rational::from(n)];
            up.extend(upper);
            let s = SeriesSpec::new(up, lower.clone(), z);
            let order = s.termination_order().unwrap();
            prop_assume!(lower.iter().all(|b| !is_pole(b, order)));
            prop_assert_eq!(s.evaluate().unwrap(), direct_sum(&s));
        }

        #[test]
        fn zero_argument_gives_one(upper in proptest::collection::vec(rational(), 0..4), n in 0usize..6) {
            let mut up = vec![-Rational::from(n)];
            up.extend(upper);
            let s = SeriesSpec::new(up, vec![Rational::new(1, 2)], Rational::zero());
            prop_assert_eq!(s.evaluate().unwrap(), Rational::one());
        }
    }
}
