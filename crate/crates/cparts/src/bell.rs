//! Partial Bell polynomials `B_{n,k}(x_1, ..., x_{n-k+1})` evaluated over
//! exact rationals, by three independent algorithms.
//!
//! - [`bell_definition`]: the multiset-sum definition, enumerating every
//!   multiplicity vector `(l_1, l_2, ...)` with `sum i*l_i = n` and
//!   `sum l_i = k`. Exponential; guarded; the ground truth.
//! - [`bell_recurrence`] / [`BellMemo`]: the standard recurrence
//!   `B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i, k-1}`, memoized over `(n, k)`
//!   for one fixed argument vector. The workhorse.
//! - [`bell_cvijovic`]: the explicit nested-sum formula, realized as one
//!   term per composition of `n` into `k+1` positive parts with the
//!   binomial chain accumulated along the walk.
//!
//! The three only agree when everything underneath them (binomials,
//! factorials, compositions) is right, which is what makes the triple
//! check worth running.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::compositions::for_each_composition;
use crate::exact::{binomial, factorial, ExactRat};
use crate::{Error, Result};

/// Enumeration guard for the definition-level algorithm.
pub const DEFINITION_MAX_N: u64 = 20;
/// Composition-count guard for the nested-sum formula (2^(n-1) terms).
pub const CVIJOVIC_MAX_N: u64 = 25;

/// The variables `x_1 .. x_m` a Bell polynomial is evaluated at.
///
/// One long vector serves many `(n, k)`: entries beyond `x_{n-k+1}` are
/// ignored, and each evaluation checks up front that the vector is long
/// enough for its own `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellArgs {
    xs: Vec<ExactRat>,
}

impl BellArgs {
    pub fn new(xs: Vec<ExactRat>) -> Self {
        Self { xs }
    }

    /// Builds the arguments from `f(1), f(2), ..., f(m)`.
    pub fn from_fn(m: u64, mut f: impl FnMut(u64) -> ExactRat) -> Self {
        Self::new((1..=m).map(&mut f).collect())
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    /// `x_i`, 1-based as in the formulas.
    pub fn x(&self, i: u64) -> &ExactRat {
        &self.xs[i as usize - 1]
    }

    /// Errors unless the vector covers `x_1 .. x_{n-k+1}`.
    fn check_len(&self, n: u64, k: u64) -> Result<()> {
        let need = (n - k + 1) as usize; // callers ensure k <= n
        if self.xs.len() < need {
            return Err(Error::ArgsTooShort {
                need,
                have: self.xs.len(),
            });
        }
        Ok(())
    }
}

/// `B_{n,k}` straight from the definition: sum over multiplicity vectors
/// `l` with `sum i*l_i = n`, `sum l_i = k` of
/// `n! / prod l_i! * prod (x_i / i!)^{l_i}`.
pub fn bell_definition(n: u64, k: u64, xs: &BellArgs) -> Result<ExactRat> {
    if n > DEFINITION_MAX_N {
        return Err(Error::GuardExceeded {
            what: "bell_definition",
            detail: format!("n = {n} exceeds {DEFINITION_MAX_N}"),
        });
    }
    if n == 0 && k == 0 {
        return Ok(ExactRat::one());
    }
    if n == 0 || k == 0 || k > n {
        return Ok(ExactRat::zero());
    }
    xs.check_len(n, k)?;

    // Walk indices i = 1, 2, ... choosing each multiplicity in turn.
    // Remaining parts weigh at least 1 each, so an index can only carry a
    // part while i <= weight left - count left + 1; that bound never
    // exceeds n-k+1, keeping every x_i access within the checked length.
    fn walk(
        i: u64,
        weight_sum_left: u64,
        count_left: u64,
        factor: ExactRat,
        xs: &BellArgs,
        acc: &mut ExactRat,
    ) {
        if count_left == 0 {
            if weight_sum_left == 0 {
                *acc = &*acc + &factor;
            }
            return;
        }
        if weight_sum_left < count_left || i > weight_sum_left - count_left + 1 {
            return; // no index from here on can take a part
        }
        let max_multiplicity = (weight_sum_left / i).min(count_left);
        let x_over_ifact = xs.x(i) / ExactRat::from_integer(factorial(i));
        let mut power = ExactRat::one();
        for multiplicity in 0..=max_multiplicity {
            if multiplicity > 0 {
                power = &power * &x_over_ifact;
            }
            let contribution =
                &(&factor * &power) / ExactRat::from_integer(factorial(multiplicity));
            walk(
                i + 1,
                weight_sum_left - i * multiplicity,
                count_left - multiplicity,
                contribution,
                xs,
                acc,
            );
        }
    }

    let mut acc = ExactRat::zero();
    walk(1, n, k, ExactRat::one(), xs, &mut acc);
    Ok(&acc * &ExactRat::from_integer(factorial(n)))
}

/// Memoized evaluator for one fixed argument vector.
///
/// The memo is keyed on `(n, k)` only, so it must not be shared across
/// different `xs`; make a fresh one per vector. Sweeps that need many
/// `(n, k)` for the same vector reuse one memo and pay for each entry once.
pub struct BellMemo<'a> {
    xs: &'a BellArgs,
    memo: HashMap<(u64, u64), ExactRat>,
}

impl<'a> BellMemo<'a> {
    pub fn new(xs: &'a BellArgs) -> Self {
        Self {
            xs,
            memo: HashMap::new(),
        }
    }

    /// `B_{n,k}` by the recurrence
    /// `B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i, k-1}`.
    pub fn value(&mut self, n: u64, k: u64) -> Result<ExactRat> {
        if n == 0 && k == 0 {
            return Ok(ExactRat::one());
        }
        if n == 0 || k == 0 || k > n {
            return Ok(ExactRat::zero());
        }
        self.xs.check_len(n, k)?;
        if let Some(hit) = self.memo.get(&(n, k)) {
            return Ok(hit.clone());
        }
        let mut acc = ExactRat::zero();
        for i in 1..=n - k + 1 {
            let inner = self.value(n - i, k - 1)?;
            if inner.is_zero() {
                continue;
            }
            let coefficient = ExactRat::from_integer(binomial(n - 1, i - 1));
            acc = &acc + &(&(&coefficient * self.xs.x(i)) * &inner);
        }
        self.memo.insert((n, k), acc.clone());
        Ok(acc)
    }
}

/// `B_{n,k}` by the recurrence with a throwaway memo. Sweeps should hold a
/// [`BellMemo`] instead.
pub fn bell_recurrence(n: u64, k: u64, xs: &BellArgs) -> Result<ExactRat> {
    BellMemo::new(xs).value(n, k)
}

/// `B_{n,parts}` by the explicit nested-sum formula, one term per
/// composition of `n` into `parts` positive parts:
/// the strictly decreasing index chains become the part tuples, the
/// binomial chain `C(n,a_1) C(a_1,a_2) ...` is the running product of
/// `C(still unplaced, next part)`, and the whole sum is divided by `parts!`.
///
/// The formula's own range is `parts >= 2` (it was stated for `B_{n,k+1}`
/// with `k >= 1`); `parts = 1` falls back to the definition-level base case
/// `B_{n,1} = x_n`, which is also what the single-composition sum yields.
pub fn bell_cvijovic(n: u64, parts: u64, xs: &BellArgs) -> Result<ExactRat> {
    if parts == 0 || n < parts {
        return Err(Error::OutOfRange(format!(
            "nested-sum formula needs 1 <= parts <= n, got n = {n}, parts = {parts}"
        )));
    }
    if n > CVIJOVIC_MAX_N {
        return Err(Error::GuardExceeded {
            what: "bell_cvijovic",
            detail: format!("n = {n} exceeds {CVIJOVIC_MAX_N}"),
        });
    }
    xs.check_len(n, parts)?;
    if parts == 1 {
        return Ok(xs.x(n).clone());
    }
    let mut sum = ExactRat::zero();
    for_each_composition(n, parts, |composition| {
        let mut term = ExactRat::one();
        let mut unplaced = n;
        for &part in composition {
            let chain = ExactRat::from_integer(binomial(unplaced, part));
            term = &term * &(&chain * xs.x(part));
            unplaced -= part;
        }
        sum = &sum + &term;
    });
    Ok(&sum / &ExactRat::from_integer(factorial(parts)))
}
