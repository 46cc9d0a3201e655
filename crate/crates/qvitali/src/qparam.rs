//! The deformation parameter `q` and its derived domain boundary.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Exact rational deformation parameter `q <= 1`.
///
/// For `q < 1` the deformed operations live on the open half line
/// `(lambda, +inf)` with `lambda = -1/(1-q)`; at `q = 1` every operation
/// degenerates to its classical counterpart and there is no boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QParam {
    q: Rational,
    lambda: Option<Rational>,
}

impl QParam {
    /// Construct from an exact rational `q`. Rejects `q > 1`: the domain
    /// geometry flips there and none of the supported operations are
    /// defined for it.
    pub fn new(q: Rational) -> Result<Self> {
        if q > Rational::one() {
            return Err(Error::precondition(format!(
                "q must satisfy q <= 1, got {q}"
            )));
        }
        let lambda = if q.is_one() {
            None
        } else {
            Some(-(Rational::one() - &q).recip())
        };
        Ok(QParam { q, lambda })
    }

    /// Parse a rational literal (`"1/2"`, `"0.75"`, `"1"`) into a parameter.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(rational::parse_rational(text)?)
    }

    /// The classical parameter `q = 1`.
    pub fn classical() -> Self {
        QParam {
            q: Rational::one(),
            lambda: None,
        }
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// Domain boundary `lambda = -1/(1-q)`; `None` at `q = 1`.
    pub fn lambda(&self) -> Option<&Rational> {
        self.lambda.as_ref()
    }

    /// `lambda` as a float, `-inf` at `q = 1` (the domain is all of R).
    pub fn lambda_f64(&self) -> f64 {
        match &self.lambda {
            Some(l) => rational::to_f64(l),
            None => f64::NEG_INFINITY,
        }
    }

    pub fn is_classical(&self) -> bool {
        self.lambda.is_none()
    }

    /// Exact `1 - q`.
    pub fn one_minus_q(&self) -> Rational {
        Rational::one() - &self.q
    }

    /// `1 - q` as a float.
    pub fn one_minus_q_f64(&self) -> f64 {
        rational::to_f64(&self.one_minus_q())
    }

    /// The factor `1 + (1-q) x`, computed exactly. Its positivity is the
    /// domain condition `x > lambda`; its vanishing is the excluded value
    /// of the q-difference.
    pub fn domain_factor(&self, x: &Rational) -> Rational {
        Rational::one() + self.one_minus_q() * x
    }

    /// True when `x > lambda` (always true at `q = 1`).
    pub fn contains(&self, x: &Rational) -> bool {
        match &self.lambda {
            Some(l) => x > l,
            None => true,
        }
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn rejects_q_above_one() {
        assert!(QParam::new(ratio(3, 2)).is_err());
        assert!(QParam::new(ratio(1, 1)).is_ok());
    }

    #[test]
    fn lambda_matches_closed_form() {
        let q = QParam::new(ratio(1, 2)).unwrap();
        assert_eq!(q.lambda(), Some(&ratio(-2, 1)));

        let q = QParam::new(ratio(3, 4)).unwrap();
        assert_eq!(q.lambda(), Some(&ratio(-4, 1)));

        assert_eq!(QParam::classical().lambda(), None);
    }

    #[test]
    fn lambda_threshold_at_q_half() {
        // lambda is strictly decreasing in q: below -2 exactly when
        // q > 1/2, and equal to -2 exactly at q = 1/2.
        for (num, den, below) in [(0, 1, false), (1, 4, false), (1, 2, false), (3, 5, true), (9, 10, true)] {
            let q = QParam::new(ratio(num, den)).unwrap();
            let lambda = q.lambda().unwrap().clone();
            assert_eq!(lambda < ratio(-2, 1), below, "q = {num}/{den}");
        }
        assert_eq!(
            QParam::new(ratio(1, 2)).unwrap().lambda(),
            Some(&ratio(-2, 1))
        );
        // [-1, 1] sits inside the domain for every positive q < 1.
        for den in 2..12 {
            let q = QParam::new(ratio(1, den)).unwrap();
            assert!(q.lambda().unwrap() < &ratio(-1, 1), "q = 1/{den}");
        }
    }

    #[test]
    fn domain_factor_sign_tracks_membership() {
        let q = QParam::new(ratio(1, 2)).unwrap();
        assert!(q.contains(&ratio(-199, 100)));
        assert!(!q.contains(&ratio(-2, 1)));
        assert!(!q.contains(&ratio(-3, 1)));
        assert_eq!(q.domain_factor(&ratio(-2, 1)), ratio(0, 1));
    }
}
