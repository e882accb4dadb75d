//! The partition function `p(n)` and the r-coloured partition function
//! `p_{-r}(n)`, by several independent routes.
//!
//! Routes, ordered from fast to slow:
//! - `p_color_series`: coefficients of `E(q)^{-r}` (quadratic in the cutoff)
//! - `p_color_recurrence`: `n p_{-r}(n) = r * sum_{k=1..n} sigma(k) p_{-r}(n-k)`,
//!   the coefficientwise form of `(E^{-r})' = r (-log E)' E^{-r}`
//! - `brute_force_colored`: counting oracle over ordinary partitions, one
//!   colour-multiset factor per part value
//! - `enumerate_colored`: literal listing of coloured multisets, kept as a
//!   second, even dumber oracle behind a tighter guard
//!
//! All four agree exactly; the tests and the verifier lean on that.

use num_traits::{One, Signed, Zero};

use crate::divisors::sigma_sieve;
use crate::exact::{binomial, exact_div, is_integer, ExactInt};
use crate::series::euler_e;
use crate::{Error, Result};

/// Largest `n` the counting oracles accept.
pub const BRUTE_FORCE_MAX_N: u64 = 25;
/// Largest `r` the counting oracles accept.
pub const BRUTE_FORCE_MAX_R: u64 = 5;
/// Largest `n` for the literal multiset listing.
pub const ENUMERATION_MAX_N: u64 = 12;

/// `p(0..=max_n)` as the coefficients of `1/E(q)`.
pub fn partition_p(max_n: u64) -> Vec<ExactInt> {
    let inv = euler_e(max_n as usize)
        .inv()
        .expect("E(q) has constant term 1");
    rational_coeffs_to_ints(inv.coeffs(), "1/E(q)")
}

/// `p_{-r}(0..=max_n)` as the coefficients of `E(q)^{-r}`.
pub fn p_color_series(r: u64, max_n: u64) -> Vec<ExactInt> {
    let series = euler_e(max_n as usize)
        .pow(-(r as i64))
        .expect("E(q) has constant term 1");
    rational_coeffs_to_ints(series.coeffs(), "E(q)^{-r}")
}

fn rational_coeffs_to_ints(coeffs: &[crate::ExactRat], what: &str) -> Vec<ExactInt> {
    coeffs
        .iter()
        .map(|c| {
            assert!(
                is_integer(c) && !c.numer().is_negative(),
                "internal consistency: coefficient of {what} must be a nonnegative integer, got {c}"
            );
            c.numer().clone()
        })
        .collect()
}

/// `p_{-r}(0..=max_n)` by the divisor-sum recurrence
/// `n p_{-r}(n) = r * sum_{k=1..n} sigma(k) p_{-r}(n-k)`.
///
/// Every division by `n` must be exact; a remainder would mean the
/// recurrence or the sieve is broken, so it panics rather than rounds.
pub fn p_color_recurrence(r: u64, max_n: u64) -> Vec<ExactInt> {
    let sieve = sigma_sieve(max_n);
    let r = ExactInt::from(r);
    let mut values = Vec::with_capacity(max_n as usize + 1);
    values.push(ExactInt::one());
    for n in 1..=max_n {
        let mut acc = ExactInt::zero();
        for k in 1..=n {
            acc += sieve.get(k).unwrap() * &values[(n - k) as usize];
        }
        acc *= &r;
        values.push(exact_div(&acc, &ExactInt::from(n)));
    }
    values
}

/// Matrix of `p_{-r}(n)` for `1 <= r <= R`, `0 <= n <= N`.
///
/// Row 1 is `p(n)`; every following row is the Cauchy convolution of the
/// previous row with row 1, mirroring `E^{-(r+1)} = E^{-r} * E^{-1}`.
/// The identity in which all colour counts of a single `n` appear together
/// consumes it column-wise, so a column accessor is provided too.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTable {
    rows: Vec<Vec<ExactInt>>,
}

impl PartitionTable {
    /// Builds the square table with `R = N = max_n`.
    pub fn build(max_n: u64) -> Self {
        Self::build_rect(max_n, max_n)
    }

    /// Builds rows `r = 1..=max_colour` up to column `max_n`.
    pub fn build_rect(max_colour: u64, max_n: u64) -> Self {
        let width = max_n as usize + 1;
        let mut rows: Vec<Vec<ExactInt>> = Vec::with_capacity(max_colour as usize);
        if max_colour >= 1 {
            rows.push(partition_p(max_n));
            for _ in 2..=max_colour {
                let last = rows.last().unwrap();
                let first = &rows[0];
                let mut next = Vec::with_capacity(width);
                for n in 0..width {
                    let mut acc = ExactInt::zero();
                    for k in 0..=n {
                        acc += &last[k] * &first[n - k];
                    }
                    next.push(acc);
                }
                rows.push(next);
            }
        }
        Self { rows }
    }

    /// Largest colour count `R` held by the table.
    pub fn max_colour(&self) -> u64 {
        self.rows.len() as u64
    }

    /// Largest `n` held by the table.
    pub fn max_n(&self) -> u64 {
        self.rows.first().map_or(0, |row| row.len() as u64 - 1)
    }

    /// `p_{-r}(n)`, if within bounds (`r >= 1`).
    pub fn entry(&self, r: u64, n: u64) -> Option<&ExactInt> {
        self.rows.get(r as usize - 1)?.get(n as usize)
    }

    /// Column `n`: the values `p_{-1}(n), p_{-2}(n), ..., p_{-R}(n)`.
    pub fn column(&self, n: u64) -> Vec<&ExactInt> {
        self.rows.iter().map(|row| &row[n as usize]).collect()
    }

    /// Row `r`: the values `p_{-r}(0..=N)`.
    pub fn row(&self, r: u64) -> Option<&[ExactInt]> {
        self.rows.get(r as usize - 1).map(Vec::as_slice)
    }
}

/// Builds the full `p_{-r}(n)` matrix for `1 <= r <= max_n`, `0 <= n <= max_n`.
pub fn p_color_table(max_n: u64) -> PartitionTable {
    PartitionTable::build(max_n)
}

/// Counting oracle for `p_{-r}(n)`: walk every ordinary partition of `n`
/// and multiply, for each part value of multiplicity `m`, the number
/// `C(r+m-1, m)` of colour multisets of size `m`. Guarded because the walk
/// is exponential; the guard violation is an error so misuse of the oracle
/// cannot masquerade as a result.
pub fn brute_force_colored(n: u64, r: u64) -> Result<ExactInt> {
    if r == 0 {
        return Err(Error::OutOfRange("colour count r must be >= 1".into()));
    }
    if n > BRUTE_FORCE_MAX_N || r > BRUTE_FORCE_MAX_R {
        return Err(Error::GuardExceeded {
            what: "brute_force_colored",
            detail: format!(
                "n = {n}, r = {r} outside n <= {BRUTE_FORCE_MAX_N}, r <= {BRUTE_FORCE_MAX_R}"
            ),
        });
    }
    fn walk(remaining: u64, max_part: u64, r: u64) -> ExactInt {
        if remaining == 0 {
            return ExactInt::one();
        }
        let mut total = ExactInt::zero();
        for part in 1..=max_part.min(remaining) {
            // fix the multiplicity of `part` and recurse on smaller values
            let mut multiplicity = 1;
            while part * multiplicity <= remaining {
                total += binomial(r + multiplicity - 1, multiplicity)
                    * walk(remaining - part * multiplicity, part - 1, r);
                multiplicity += 1;
            }
        }
        total
    }
    Ok(walk(n, n, r))
}

/// Second-level oracle: literally enumerate multisets of coloured parts.
///
/// A coloured part is a pair (value, colour); multisets are walked as
/// weakly decreasing sequences of pairs so each one is visited exactly
/// once. Shares no structure with `brute_force_colored`, which is the
/// point: two independent counting arguments guard the guard.
pub fn enumerate_colored(n: u64, r: u64) -> Result<ExactInt> {
    if r == 0 {
        return Err(Error::OutOfRange("colour count r must be >= 1".into()));
    }
    if n > ENUMERATION_MAX_N || r > BRUTE_FORCE_MAX_R {
        return Err(Error::GuardExceeded {
            what: "enumerate_colored",
            detail: format!(
                "n = {n}, r = {r} outside n <= {ENUMERATION_MAX_N}, r <= {BRUTE_FORCE_MAX_R}"
            ),
        });
    }
    // pairs are ranked (value - 1) * r + colour; rank determines the order
    fn walk(remaining: u64, max_rank: u64, r: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut count = 0;
        for rank in 1..=max_rank {
            let value = (rank - 1) / r + 1;
            if value <= remaining {
                count += walk(remaining - value, rank, r);
            }
        }
        count
    }
    Ok(ExactInt::from(walk(n, n * r, r)))
}
