//! Arbitrary-precision integers and rationals in canonical form.
//!
//! `ExactRat` is always in lowest terms with a strictly positive
//! denominator, so equality of values is equality of representations.
//! Identity verification relies on that: two independently computed
//! quantities are compared with `==` and nothing else.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Signed integer of unbounded size.
pub type ExactInt = BigInt;

/// Rational number in lowest terms; denominator strictly positive, zero is
/// `0/1`, the sign lives on the numerator.
pub type ExactRat = BigRational;

/// Shorthand for small integer constants.
pub fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

/// Whole number as a rational (`v/1`).
pub fn rat_int(v: i64) -> ExactRat {
    ExactRat::from_integer(int(v))
}

/// Small rational constant; `den` must be nonzero.
pub fn rat(num: i64, den: i64) -> ExactRat {
    make_rat(int(num), int(den)).expect("nonzero denominator")
}

/// Builds `num/den` in canonical form. Negative denominators are
/// normalized (the sign moves to the numerator), a zero denominator is an
/// error rather than a silent value.
pub fn make_rat(num: ExactInt, den: ExactInt) -> Result<ExactRat> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(ExactRat::new(num, den))
}

/// Canonical text form: `a/b` when the denominator exceeds 1, plain `a`
/// otherwise. No whitespace; a negative value carries the minus sign on the
/// numerator. This is the one textual form used on every CLI boundary.
pub fn rat_render(q: &ExactRat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses the `rat_render` form back into a canonical rational.
///
/// Accepts an optionally signed decimal integer, or two of them separated
/// by a single `/`. The result is reduced, so parsing is left inverse to
/// rendering but not injective (`"2/4"` and `"1/2"` parse equal).
pub fn parse_rat(s: &str) -> Result<ExactRat> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let (num_text, den_text) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: ExactInt = num_text.parse().map_err(|_| err())?;
    let den: ExactInt = match den_text {
        Some(d) => d.parse().map_err(|_| err())?,
        None => ExactInt::one(),
    };
    make_rat(num, den)
}

/// Parses a comma-separated list of rationals, e.g. `1,4,-1/2`.
pub fn parse_rat_list(s: &str) -> Result<Vec<ExactRat>> {
    s.split(',').map(parse_rat).collect()
}

/// Binomial coefficient `C(n, k)`, with `C(n, k) = 0` for `k > n` so that
/// summation loops never need a range guard.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 1..=k {
        acc = acc * int((n - k + i) as i64) / int(i as i64);
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 2..=n {
        acc *= int(i as i64);
    }
    acc
}

/// True when the rational is a whole number.
pub fn is_integer(q: &ExactRat) -> bool {
    q.denom().is_one()
}

/// Extracts the integer value of a whole rational.
pub fn to_integer(q: &ExactRat) -> Option<ExactInt> {
    is_integer(q).then(|| q.numer().clone())
}

/// Exact integer quotient; panics if the division leaves a remainder.
/// Used where divisibility is a mathematical fact, so a remainder would
/// mean the surrounding computation is wrong.
pub(crate) fn exact_div(num: &ExactInt, den: &ExactInt) -> ExactInt {
    let (q, r) = num.div_rem(den);
    assert!(
        r.is_zero(),
        "internal consistency: {num} is not divisible by {den}"
    );
    q
}
