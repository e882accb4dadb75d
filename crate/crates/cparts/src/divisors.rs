//! Sum-of-divisors function `sigma(n)`, its sieve, and `theta(n) = sigma(n)/n`.
//!
//! Two deliberately independent routes: `sigma` walks trial divisors up to
//! `sqrt(n)` one value at a time, while `sigma_sieve` fills a whole table by
//! adding each `d` to all of its multiples. Each acts as an oracle for the
//! other in the tests.

use num_traits::Zero;

use crate::exact::{make_rat, ExactInt, ExactRat};
use crate::{Error, Result};

/// `sigma(n)`, the sum of all positive divisors of `n`, by trial division
/// up to `sqrt(n)` with divisors taken in complementary pairs.
pub fn sigma(n: u64) -> Result<ExactInt> {
    if n == 0 {
        return Err(Error::SigmaOfZero);
    }
    let mut sum = ExactInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            sum += ExactInt::from(d);
            let paired = n / d;
            if paired != d {
                sum += ExactInt::from(paired);
            }
        }
        d += 1;
    }
    Ok(sum)
}

/// `theta(n) = sigma(n) / n` in lowest terms, the coefficient of `q^n` in
/// `-log E(q)`; equivalently the sum of reciprocals of the divisors of `n`.
pub fn theta(n: u64) -> Result<ExactRat> {
    make_rat(sigma(n)?, ExactInt::from(n))
}

/// Table of `sigma(1..=limit)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaTable {
    values: Vec<ExactInt>,
}

impl SigmaTable {
    /// Builds the table by iterating each divisor `d` and adding it to all
    /// multiples of `d`, O(N log N) additions with no factorization.
    pub fn build(limit: u64) -> Self {
        let limit = limit as usize;
        let mut values = vec![ExactInt::zero(); limit];
        for d in 1..=limit {
            for multiple in (d..=limit).step_by(d) {
                values[multiple - 1] += ExactInt::from(d as u64);
            }
        }
        Self { values }
    }

    pub fn limit(&self) -> u64 {
        self.values.len() as u64
    }

    /// `sigma(n)` for `1 <= n <= limit`.
    pub fn get(&self, n: u64) -> Option<&ExactInt> {
        if n == 0 {
            return None;
        }
        self.values.get(n as usize - 1)
    }

    /// All values, indexed by `n - 1`.
    pub fn values(&self) -> &[ExactInt] {
        &self.values
    }
}

/// Convenience constructor matching the table type.
pub fn sigma_sieve(limit: u64) -> SigmaTable {
    SigmaTable::build(limit)
}
