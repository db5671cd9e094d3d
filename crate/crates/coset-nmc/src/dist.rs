//! Exact finite distributions as integer counts over outcomes.
//!
//! Probabilities are `count / total` with no floating point anywhere, so
//! "these two distributions are equal" and "statistical distance is zero"
//! are literal integer facts, not tolerance checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::coset::Message;
use crate::{Error, Result};

/// Result of one tampering experiment. Decoding is total for coset codes,
/// so `Bottom` is never produced here; it exists because the general
/// non-malleability definition allows it, and the verifier asserts it
/// stays unused.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Value(Message),
    Same,
    Bottom,
}

impl Outcome {
    /// Stable text key used in JSON maps: the message bits, or the
    /// reserved tokens `_same_` / `_bottom_`.
    pub fn as_key(&self) -> String {
        match self {
            Outcome::Value(m) => m.to_string(),
            Outcome::Same => "_same_".to_string(),
            Outcome::Bottom => "_bottom_".to_string(),
        }
    }
}

/// A distribution with exact rational probabilities `count / total`.
/// Zero-count outcomes are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactDistribution {
    total: u64,
    mass: BTreeMap<Outcome, u64>,
}

impl ExactDistribution {
    pub fn from_counts(counts: BTreeMap<Outcome, u64>) -> Result<Self> {
        let mass: BTreeMap<Outcome, u64> =
            counts.into_iter().filter(|&(_, c)| c > 0).collect();
        let total = mass.values().sum();
        if total == 0 {
            return Err(Error::BadParams(
                "distribution needs at least one outcome with positive count".into(),
            ));
        }
        Ok(ExactDistribution { total, mass })
    }

    pub fn point_mass(outcome: Outcome) -> Self {
        ExactDistribution {
            total: 1,
            mass: BTreeMap::from([(outcome, 1)]),
        }
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Outcomes with positive probability, in `Outcome` order.
    pub fn iter(&self) -> impl Iterator<Item = (&Outcome, u64)> {
        self.mass.iter().map(|(o, &c)| (o, c))
    }

    pub fn support_size(&self) -> usize {
        self.mass.len()
    }

    pub fn count(&self, outcome: &Outcome) -> u64 {
        self.mass.get(outcome).copied().unwrap_or(0)
    }

    /// Exact probability of `outcome`, reduced.
    pub fn prob(&self, outcome: &Outcome) -> BigRational {
        BigRational::new(BigInt::from(self.count(outcome)), BigInt::from(self.total))
    }

    /// Whether this is a point mass on exactly `outcome`.
    pub fn is_point_mass_on(&self, outcome: &Outcome) -> bool {
        self.mass.len() == 1 && self.count(outcome) == self.total
    }

    /// Distribution equality, comparing probabilities rather than raw
    /// counts (so totals may differ).
    pub fn same_distribution(&self, other: &ExactDistribution) -> bool {
        if self.mass.len() != other.mass.len() {
            return false;
        }
        self.mass.iter().all(|(o, &c)| {
            // c / self.total == c' / other.total, cross-multiplied.
            u128::from(c) * u128::from(other.total)
                == u128::from(other.count(o)) * u128::from(self.total)
        })
    }
}

/// Total-variation distance `(1/2) Σ |P(o) − Q(o)|`, exact.
pub fn statistical_distance(p: &ExactDistribution, q: &ExactDistribution) -> BigRational {
    let mut outcomes: Vec<&Outcome> = p.mass.keys().chain(q.mass.keys()).collect();
    outcomes.sort_unstable();
    outcomes.dedup();

    // Σ |c_p·Tq − c_q·Tp| / (2·Tp·Tq), all in exact integers.
    let tp = BigInt::from(p.total);
    let tq = BigInt::from(q.total);
    let mut acc = BigInt::zero();
    for o in outcomes {
        let a = BigInt::from(p.count(o)) * &tq;
        let b = BigInt::from(q.count(o)) * &tp;
        acc += (a - b).abs();
    }
    BigRational::new(acc, BigInt::from(2u8) * tp * tq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn value(s: &str) -> Outcome {
        Outcome::Value(s.parse().unwrap())
    }

    fn dist(pairs: &[(&str, u64)]) -> ExactDistribution {
        let counts = pairs
            .iter()
            .map(|&(s, c)| (value(s), c))
            .collect::<BTreeMap<_, _>>();
        ExactDistribution::from_counts(counts).unwrap()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn distance_to_self_is_exactly_zero() {
        let p = dist(&[("00", 3), ("01", 5)]);
        assert!(statistical_distance(&p, &p).is_zero());
    }

    #[test]
    fn distinct_point_masses_are_at_distance_one() {
        let p = ExactDistribution::point_mass(value("00"));
        let q = ExactDistribution::point_mass(value("11"));
        assert!(statistical_distance(&p, &q).is_one());
        assert!(statistical_distance(&p, &p).is_zero());
    }

    #[test]
    fn half_against_point_mass_is_one_half() {
        let p = dist(&[("00", 1), ("01", 1)]);
        let q = dist(&[("00", 1)]);
        assert_eq!(statistical_distance(&p, &q), ratio(1, 2));
    }

    #[test]
    fn distance_is_scale_invariant() {
        let p = dist(&[("00", 1), ("01", 1)]);
        let scaled = dist(&[("00", 8), ("01", 8)]);
        assert!(statistical_distance(&p, &scaled).is_zero());
        assert!(p.same_distribution(&scaled));
    }

    #[test]
    fn probabilities_are_reduced_rationals() {
        let p = dist(&[("00", 2), ("01", 14)]);
        assert_eq!(p.prob(&value("00")), ratio(1, 8));
        assert_eq!(p.prob(&value("01")), ratio(7, 8));
        assert!(p.prob(&value("11")).is_zero());
    }

    #[test]
    fn zero_counts_are_dropped_and_empty_is_rejected() {
        let p = ExactDistribution::from_counts(BTreeMap::from([
            (value("00"), 4),
            (value("01"), 0),
        ]))
        .unwrap();
        assert_eq!(p.support_size(), 1);
        assert!(p.is_point_mass_on(&value("00")));

        assert!(ExactDistribution::from_counts(BTreeMap::new()).is_err());
        assert!(
            ExactDistribution::from_counts(BTreeMap::from([(value("00"), 0)])).is_err()
        );
    }

    #[test]
    fn outcome_keys_render_the_reserved_tokens() {
        assert_eq!(value("010").as_key(), "010");
        assert_eq!(Outcome::Same.as_key(), "_same_");
        assert_eq!(Outcome::Bottom.as_key(), "_bottom_");
    }

    #[test]
    fn same_distribution_detects_mismatches() {
        let p = dist(&[("00", 1), ("01", 3)]);
        let q = dist(&[("00", 2), ("01", 6)]);
        let r = dist(&[("00", 2), ("01", 5)]);
        assert!(p.same_distribution(&q));
        assert!(!p.same_distribution(&r));
        assert!(!p.same_distribution(&dist(&[("00", 4)])));
    }
}
