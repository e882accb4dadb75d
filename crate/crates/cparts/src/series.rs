//! Truncated formal power series over exact rationals.
//!
//! A `TruncatedSeries` is a polynomial representative of a power series
//! modulo `q^(N+1)`: coefficients of `q^0 .. q^N` with every operation
//! exact. This is the engine behind the Euler product `E(q)`, its powers
//! `E(q)^{-r}` (whose coefficients are the coloured partition numbers) and
//! the formal logarithm that produces the divisor sums.
//!
//! Binary operations truncate to the smaller cutoff of the two operands,
//! so a long series can be fed through a pipeline of shorter ones without
//! ceremony. `log` and `exp` go through the derivative relations
//! `(log a)' = a'/a` and `f' = a' f`, which cost one inversion or one
//! convolution instead of term-by-term composition.

use num_traits::{One, Signed, Zero};

use crate::exact::{rat_render, ExactRat};
use crate::{Error, Result};

/// Formal power series truncated at `q^cutoff`, coefficients exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<ExactRat>,
}

impl TruncatedSeries {
    /// Series with the given coefficients for `q^0 ..`; the cutoff is
    /// `coeffs.len() - 1`. The list must be non-empty.
    pub fn from_coeffs(coeffs: Vec<ExactRat>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least q^0");
        Self { coeffs }
    }

    /// The zero series up to `q^cutoff`.
    pub fn zero(cutoff: usize) -> Self {
        Self {
            coeffs: vec![ExactRat::zero(); cutoff + 1],
        }
    }

    /// The constant series 1 up to `q^cutoff`.
    pub fn one(cutoff: usize) -> Self {
        let mut s = Self::zero(cutoff);
        s.coeffs[0] = ExactRat::one();
        s
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n`; zero beyond the cutoff.
    pub fn coeff(&self, n: usize) -> ExactRat {
        self.coeffs.get(n).cloned().unwrap_or_else(ExactRat::zero)
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    /// Drops coefficients above `cutoff` (no-op if already shorter).
    pub fn truncate(&self, cutoff: usize) -> Self {
        let len = (cutoff + 1).min(self.coeffs.len());
        Self {
            coeffs: self.coeffs[..len].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.cutoff().min(other.cutoff());
        Self {
            coeffs: (0..=n)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.cutoff().min(other.cutoff());
        Self {
            coeffs: (0..=n)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &ExactRat) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller cutoff.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.cutoff().min(other.cutoff());
        let mut coeffs = vec![ExactRat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Self { coeffs }
    }

    /// Multiplicative inverse: `self.mul(&result)` is 1 up to the cutoff.
    /// Requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::InverseConstantZero);
        }
        let lead = self.coeffs[0].recip();
        let n = self.cutoff();
        let mut inv = Vec::with_capacity(n + 1);
        inv.push(lead.clone());
        for m in 1..=n {
            let mut acc = ExactRat::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    acc = &acc + &(&self.coeffs[k] * &inv[m - k]);
                }
            }
            inv.push(-(&lead * &acc));
        }
        Ok(Self { coeffs: inv })
    }

    /// Formal derivative; one order shorter than the input.
    fn derivative(&self) -> Self {
        if self.cutoff() == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * ExactRat::from_integer(i.into()))
                .collect(),
        }
    }

    /// Formal logarithm of a series with constant term 1, via
    /// `(log a)' = a'/a` followed by coefficientwise integration. The
    /// derivative loses one order and the integration restores it, so the
    /// result is exact up to the input cutoff.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogConstantNotOne {
                found: rat_render(&self.coeffs[0]),
            });
        }
        let n = self.cutoff();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let quotient = self.derivative().mul(&self.inv()?);
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(ExactRat::zero());
        for m in 1..=n {
            coeffs.push(&quotient.coeffs[m - 1] / ExactRat::from_integer(m.into()));
        }
        Ok(Self { coeffs })
    }

    /// Formal exponential of a series with constant term 0, via the
    /// differential equation `f' = a' f`:
    /// `n f_n = sum_{k=1..n} k a_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpConstantNotZero {
                found: rat_render(&self.coeffs[0]),
            });
        }
        let n = self.cutoff();
        let mut out = Vec::with_capacity(n + 1);
        out.push(ExactRat::one());
        for m in 1..=n {
            let mut acc = ExactRat::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() {
                    let weighted = &self.coeffs[k] * ExactRat::from_integer(k.into());
                    acc = &acc + &(&weighted * &out[m - k]);
                }
            }
            out.push(&acc / ExactRat::from_integer(m.into()));
        }
        Ok(Self { coeffs: out })
    }

    /// Integer power by repeated squaring; negative exponents invert first,
    /// which requires a nonzero constant term. `e = 0` gives 1.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e == 0 {
            return Ok(Self::one(self.cutoff()));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut result = Self::one(self.cutoff());
        let mut power = base;
        let mut rem = e.unsigned_abs();
        while rem > 0 {
            if rem & 1 == 1 {
                result = result.mul(&power);
            }
            rem >>= 1;
            if rem > 0 {
                power = power.mul(&power);
            }
        }
        Ok(result)
    }

    /// Largest `n` with a nonzero coefficient, if any.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
}

impl std::fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            match i {
                0 => write!(f, "{}", rat_render(&abs))?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", rat_render(&abs))?;
                    }
                    if i == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{i}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Truncated Euler product `E(q) = prod_{j=1..cutoff} (1 - q^j)`.
///
/// Each sparse binomial factor touches two coefficients per index, applied
/// in place from the top down, so the whole product costs O(N^2) integer
/// subtractions. Factors with `j > cutoff` cannot contribute below the
/// truncation and are skipped.
pub fn euler_e(cutoff: usize) -> TruncatedSeries {
    let mut coeffs = vec![ExactRat::zero(); cutoff + 1];
    coeffs[0] = ExactRat::one();
    for j in 1..=cutoff {
        for n in (j..=cutoff).rev() {
            let delta = &coeffs[n] - &coeffs[n - j];
            coeffs[n] = delta;
        }
    }
    TruncatedSeries { coeffs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, int, rat, rat_int};
    use proptest::prelude::*;

    fn series(vals: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(vals.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn int_series(vals: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(vals.iter().map(|&v| rat_int(v)).collect())
    }

    /// Ordinary partition counting by enumerating weakly decreasing part
    /// sequences; independent of any series arithmetic.
    fn partitions_by_enumeration(n: usize) -> u64 {
        fn count(remaining: usize, max_part: usize) -> u64 {
            if remaining == 0 {
                return 1;
            }
            (1..=max_part.min(remaining))
                .map(|part| count(remaining - part, part))
                .sum()
        }
        count(n, n.max(1))
    }

    /// r-coloured partition counting: for every ordinary partition, each
    /// part value of multiplicity m contributes C(r+m-1, m) colourings.
    fn colored_by_enumeration(n: usize, r: u64) -> crate::ExactInt {
        fn walk(remaining: usize, max_part: usize, r: u64) -> crate::ExactInt {
            if remaining == 0 {
                return int(1);
            }
            let mut total = int(0);
            for part in 1..=max_part.min(remaining) {
                let mut m = 1usize;
                while part * m <= remaining {
                    let weight = binomial(r + m as u64 - 1, m as u64);
                    total += weight * walk(remaining - part * m, part - 1, r);
                    m += 1;
                }
            }
            total
        }
        walk(n, n, r)
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = int_series(&[1, 1, 0]);
        let b = int_series(&[1, -1, 0]);
        assert_eq!(a.mul(&b), int_series(&[1, 0, -1]));
    }

    #[test]
    fn mul_geometric_times_complement_is_one() {
        let geometric = int_series(&[1, 1, 1, 1, 1, 1]);
        let complement = int_series(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(geometric.mul(&complement), TruncatedSeries::one(5));
    }

    #[test]
    fn mul_truncates_to_smaller_cutoff() {
        let long = int_series(&[1, 2, 3, 4, 5]);
        let short = int_series(&[1, 1]);
        assert_eq!(long.mul(&short).cutoff(), 1);
        assert_eq!(long.mul(&short), int_series(&[1, 3]));
    }

    #[test]
    fn inv_of_one_minus_q_is_geometric() {
        let a = int_series(&[1, -1, 0, 0, 0]);
        assert_eq!(a.inv().unwrap(), int_series(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn inv_of_euler_product_counts_partitions() {
        let e = euler_e(5);
        let p = e.inv().unwrap();
        for n in 0..=5 {
            assert_eq!(
                p.coeff(n),
                rat_int(partitions_by_enumeration(n) as i64),
                "p({n})"
            );
        }
        assert_eq!(p, int_series(&[1, 1, 2, 3, 5, 7]));
    }

    #[test]
    fn inv_of_one_is_one() {
        assert_eq!(
            TruncatedSeries::one(4).inv().unwrap(),
            TruncatedSeries::one(4)
        );
    }

    #[test]
    fn inv_times_original_is_one() {
        let e = euler_e(10);
        assert_eq!(e.mul(&e.inv().unwrap()), TruncatedSeries::one(10));
    }

    #[test]
    fn inv_requires_nonzero_constant() {
        assert_eq!(
            int_series(&[0, 1]).inv().unwrap_err(),
            Error::InverseConstantZero
        );
    }

    #[test]
    fn log_of_geometric_is_harmonic() {
        let geometric = int_series(&[1, 1, 1, 1, 1]);
        assert_eq!(
            geometric.log().unwrap(),
            series(&[(0, 1), (1, 1), (1, 2), (1, 3), (1, 4)])
        );
    }

    #[test]
    fn minus_log_euler_gives_divisor_sums() {
        // theta(n) = sigma(n)/n by direct divisor enumeration.
        let theta = |n: i64| {
            let sigma: i64 = (1..=n).filter(|d| n % d == 0).sum();
            rat(sigma, n)
        };
        let l = euler_e(4).log().unwrap().neg();
        for n in 1..=4 {
            assert_eq!(l.coeff(n as usize), theta(n), "theta({n})");
        }
        assert_eq!(l, series(&[(0, 1), (1, 1), (3, 2), (4, 3), (7, 4)]));
    }

    #[test]
    fn log_of_one_is_zero() {
        assert_eq!(
            TruncatedSeries::one(6).log().unwrap(),
            TruncatedSeries::zero(6)
        );
    }

    #[test]
    fn log_requires_constant_term_one() {
        assert!(matches!(
            int_series(&[2, 1]).log().unwrap_err(),
            Error::LogConstantNotOne { .. }
        ));
    }

    #[test]
    fn exp_of_zero_is_one() {
        assert_eq!(
            TruncatedSeries::zero(5).exp().unwrap(),
            TruncatedSeries::one(5)
        );
    }

    #[test]
    fn exp_of_q_has_inverse_factorials() {
        let q = int_series(&[0, 1, 0, 0]);
        assert_eq!(q.exp().unwrap(), series(&[(1, 1), (1, 1), (1, 2), (1, 6)]));
    }

    #[test]
    fn exp_requires_constant_term_zero() {
        assert!(matches!(
            int_series(&[1, 1]).exp().unwrap_err(),
            Error::ExpConstantNotZero { .. }
        ));
    }

    #[test]
    fn exp_of_scaled_log_matches_power_route() {
        // exp(r * (-log E)) and E^{-r} are independent paths to the same
        // coloured-partition generating function.
        let e = euler_e(12);
        for r in 1..=3i64 {
            let via_exp = e.log().unwrap().neg().scale(&rat_int(r)).exp().unwrap();
            assert_eq!(via_exp, e.pow(-r).unwrap(), "r = {r}");
        }
    }

    #[test]
    fn pow_negative_two_of_one_minus_q() {
        let a = int_series(&[1, -1, 0, 0]);
        assert_eq!(a.pow(-2).unwrap(), int_series(&[1, 2, 3, 4]));
    }

    #[test]
    fn pow_minus_two_of_euler_counts_two_coloured_partitions() {
        let got = euler_e(4).pow(-2).unwrap();
        for n in 0..=4 {
            assert_eq!(
                got.coeff(n),
                ExactRat::from_integer(colored_by_enumeration(n, 2)),
                "p_-2({n})"
            );
        }
        assert_eq!(got, int_series(&[1, 2, 5, 10, 20]));
    }

    #[test]
    fn pow_zero_is_one() {
        let a = int_series(&[3, 1, 4]);
        assert_eq!(a.pow(0).unwrap(), TruncatedSeries::one(2));
    }

    #[test]
    fn euler_product_small_coefficients() {
        // Independent oracle: multiply the factors (1 - q^j) the naive way.
        let mut naive = TruncatedSeries::one(7);
        for j in 1..=7usize {
            let mut factor_coeffs = vec![ExactRat::zero(); 8];
            factor_coeffs[0] = ExactRat::one();
            factor_coeffs[j] = rat_int(-1);
            naive = naive.mul(&TruncatedSeries::from_coeffs(factor_coeffs));
        }
        let e = euler_e(7);
        assert_eq!(e, naive);
        assert_eq!(e, int_series(&[1, -1, -1, 0, 0, 1, 0, 1]));
    }

    #[test]
    fn euler_product_cutoff_zero_is_one() {
        assert_eq!(euler_e(0), TruncatedSeries::one(0));
    }

    #[test]
    fn euler_product_linear_coefficient() {
        assert_eq!(euler_e(9).coeff(1), rat_int(-1));
    }

    #[test]
    fn display_renders_signs_and_powers() {
        assert_eq!(int_series(&[1, 0, -1]).to_string(), "1 - q^2");
        assert_eq!(series(&[(0, 1), (3, 2)]).to_string(), "3/2*q");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0");
    }

    fn small_series(force_unit: bool, cutoff: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-6i64..=6, 1i64..=4), cutoff + 1).prop_map(move |v| {
            let mut coeffs: Vec<ExactRat> = v.into_iter().map(|(n, d)| rat(n, d)).collect();
            if force_unit {
                coeffs[0] = ExactRat::one();
            }
            TruncatedSeries::from_coeffs(coeffs)
        })
    }

    proptest! {
        #[test]
        fn exp_undoes_log(a in small_series(true, 6)) {
            let back = a.log().unwrap().exp().unwrap();
            prop_assert_eq!(back, a);
        }

        #[test]
        fn log_turns_products_into_sums(
            a in small_series(true, 5),
            b in small_series(true, 5)
        ) {
            let lhs = a.mul(&b).log().unwrap();
            let rhs = a.log().unwrap().add(&b.log().unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn log_satisfies_derivative_relation(a in small_series(true, 6)) {
            // (log a)' * a = a', coefficientwise up to the derivative cutoff.
            let lhs = a.log().unwrap().derivative().mul(&a);
            let rhs = a.derivative().truncate(lhs.cutoff());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pow_adds_exponents(a in small_series(true, 5), r in -3i64..=3, s in -3i64..=3) {
            let lhs = a.pow(r + s).unwrap();
            let rhs = a.pow(r).unwrap().mul(&a.pow(s).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
