//! Right-hand-side evaluators and range verifiers for the identities
//! connecting the coloured partition function, the divisor sums and the
//! partial Bell polynomials.
//!
//! Every evaluator recomputes its claim from scratch and the verifier
//! compares it against an independent route (generating-function
//! coefficients for the colour identities, the divisor sieve for the
//! `theta` identities, the partition table for the alternating-sum ones).
//! Comparisons are exact rational equality; there is no tolerance anywhere
//! because every quantity involved is rational.
//!
//! One identity is deliberately present in two forms. The headline
//! composition formula for `p_{-r}(n)` is sometimes stated with leading
//! term `theta(n)`, which only matches the `r = 1` column; consistency
//! with the Bell-sum form forces `r * theta(n)` (its `k = 1` term is
//! `r B_{n,1}/n! = r theta(n)`), and the corrected form holds for every
//! `r`. Both are implemented — [`th1_rhs`] corrected, [`th1_printed_rhs`]
//! uncorrected — and the verifier knows `th1-printed` as a first-class
//! identity so the discrepancy stays a scriptable, reproducible fact.

use std::time::Instant;

use num_traits::{One, Zero};

use crate::bell::{BellArgs, BellMemo, CVIJOVIC_MAX_N};
use crate::compositions::for_each_composition;
use crate::divisors::{sigma_sieve, theta};
use crate::exact::{binomial, factorial, make_rat, ExactInt, ExactRat};
use crate::partitions::{p_color_series, p_color_table, partition_p, PartitionTable};
use crate::series::euler_e;
use crate::{Error, Result};

/// Identities the range verifier knows by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// Coefficients of `-log E(q)` are `theta(n)`.
    Lemma1,
    /// Composition sum for `p_{-r}(n)`, corrected leading term `r theta(n)`.
    Th1,
    /// Composition sum exactly as printed (leading term `theta(n)`);
    /// holds for `r = 1`, fails for `r >= 2`.
    Th1Printed,
    /// Bell-polynomial sum in `theta` values for `p_{-r}(n)`.
    Lemma2,
    /// Alternating Bell-polynomial sum in `p` values for `theta(n)`.
    Lemma3,
    /// Bell polynomial in `p` values vs alternating colour sum.
    Lemma4,
    /// Alternating binomial colour sum for `sigma(n)`.
    Th2,
    /// The summation-interchange step: `sum_{k=r..n} C(k,r)/k = C(n,r)/r`.
    BinomSum,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Lemma1,
        Identity::Th1,
        Identity::Th1Printed,
        Identity::Lemma2,
        Identity::Lemma3,
        Identity::Lemma4,
        Identity::Th2,
        Identity::BinomSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Lemma1 => "lemma1",
            Identity::Th1 => "th1",
            Identity::Th1Printed => "th1-printed",
            Identity::Lemma2 => "lemma2",
            Identity::Lemma3 => "lemma3",
            Identity::Lemma4 => "lemma4",
            Identity::Th2 => "th2",
            Identity::BinomSum => "binom-sum",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == name)
            .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
    }

    /// Does the sweep take a colour/index bound besides `max_n`?
    pub fn takes_max_r(self) -> bool {
        matches!(
            self,
            Identity::Th1 | Identity::Th1Printed | Identity::Lemma2
        )
    }

    /// Largest `max_n` the verifier accepts, a cost guard. The composition
    /// identities cost `2^(n-1)` terms per point; the rest are polynomial
    /// but build big tables.
    pub fn max_n_guard(self) -> u64 {
        match self {
            Identity::Lemma1 => 2000,
            Identity::Th1 | Identity::Th1Printed => CVIJOVIC_MAX_N,
            Identity::Lemma2 | Identity::Lemma3 => 150,
            Identity::Lemma4 => 100,
            Identity::Th2 => 500,
            Identity::BinomSum => 1000,
        }
    }
}

/// Parameter bounds for a verification sweep. `max_r` applies to the
/// identities with a free colour count and defaults to 3 there; the others
/// ignore it.
#[derive(Clone, Copy, Debug)]
pub struct SweepBounds {
    pub max_n: u64,
    pub max_r: Option<u64>,
}

impl SweepBounds {
    pub fn up_to(max_n: u64) -> Self {
        Self { max_n, max_r: None }
    }

    pub fn with_max_r(max_n: u64, max_r: u64) -> Self {
        Self {
            max_n,
            max_r: Some(max_r),
        }
    }
}

const DEFAULT_MAX_R: u64 = 3;
const MAX_R_GUARD: u64 = 100;

/// One counterexample: the parameter point, the ground-truth value and the
/// evaluator's value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub params: Vec<(&'static str, u64)>,
    pub expected: ExactRat,
    pub actual: ExactRat,
}

/// Outcome of one verification sweep. `failures` holds every
/// counterexample found, in parameter order; empty means the identity held
/// at all `checked` points.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: &'static str,
    pub range: String,
    pub checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

/// `theta(1..=max)` with a zero placeholder at index 0.
fn theta_table(max: u64) -> Vec<ExactRat> {
    let sieve = sigma_sieve(max);
    let mut out = vec![ExactRat::zero()];
    for n in 1..=max {
        out.push(make_rat(sieve.get(n).unwrap().clone(), ExactInt::from(n)).expect("n >= 1"));
    }
    out
}

/// Arguments `x_i = i! theta(i) = (i-1)! sigma(i)` for the Bell sums.
fn theta_bell_args(max: u64) -> BellArgs {
    let sieve = sigma_sieve(max);
    BellArgs::from_fn(max, |i| {
        ExactRat::from_integer(factorial(i - 1) * sieve.get(i).unwrap())
    })
}

/// Arguments `x_i = i! p(i)` for the Bell sums.
fn partition_bell_args(max: u64) -> BellArgs {
    let p = partition_p(max);
    BellArgs::from_fn(max, |i| {
        ExactRat::from_integer(factorial(i) * &p[i as usize])
    })
}

/// The inner composition sums of the headline formula:
/// `S_k = sum over compositions of n into k+1 positive parts of
/// prod theta(part)`, for `k = 1 ..= n-1`. Shares the composition walk
/// with the nested-sum Bell formula; independent of the colour count.
fn composition_theta_sums(n: u64, thetas: &[ExactRat]) -> Vec<ExactRat> {
    let mut sums = Vec::with_capacity(n.saturating_sub(1) as usize);
    for k in 1..n {
        let mut sum = ExactRat::zero();
        for_each_composition(n, k + 1, |parts| {
            let mut product = ExactRat::one();
            for &part in parts {
                product = &product * &thetas[part as usize];
            }
            sum = &sum + &product;
        });
        sums.push(sum);
    }
    sums
}

/// Assembles the headline right-hand side from precomputed composition
/// sums: leading term plus `sum_k r^(k+1)/(k+1)! S_k`.
fn th1_assemble(
    n: u64,
    r: u64,
    corrected: bool,
    thetas: &[ExactRat],
    sums: &[ExactRat],
) -> ExactRat {
    let leading_factor = if corrected { r } else { 1 };
    let mut total = &thetas[n as usize] * ExactRat::from_integer(ExactInt::from(leading_factor));
    let r_int = ExactInt::from(r);
    let mut r_power = r_int.clone(); // r^(k+1) starts at k = 1
    for (idx, sum) in sums.iter().enumerate() {
        let k = idx as u64 + 1;
        r_power *= &r_int;
        if sum.is_zero() {
            continue;
        }
        let coefficient = make_rat(r_power.clone(), factorial(k + 1)).expect("factorial > 0");
        total = &total + &(&coefficient * sum);
    }
    total
}

fn check_positive(n: u64, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange(format!("{what} must be >= 1")));
    }
    Ok(())
}

fn check_th1_guard(n: u64) -> Result<()> {
    if n > CVIJOVIC_MAX_N {
        return Err(Error::GuardExceeded {
            what: "composition sum",
            detail: format!("n = {n} exceeds {CVIJOVIC_MAX_N}"),
        });
    }
    Ok(())
}

/// Corrected headline right-hand side: `r theta(n) + sum_{k=1}^{n-1}
/// r^(k+1)/(k+1)! sum over compositions of n into k+1 parts of the theta
/// product`. Equals `p_{-r}(n)` for all `n, r >= 1`.
pub fn th1_rhs(n: u64, r: u64) -> Result<ExactRat> {
    check_positive(n, "n")?;
    check_positive(r, "r")?;
    check_th1_guard(n)?;
    let thetas = theta_table(n);
    let sums = composition_theta_sums(n, &thetas);
    Ok(th1_assemble(n, r, true, &thetas, &sums))
}

/// The same right-hand side with the leading term as printed, `theta(n)`.
/// Matches `p_{-r}(n)` only at `r = 1`; kept so the discrepancy can be
/// demonstrated on demand.
pub fn th1_printed_rhs(n: u64, r: u64) -> Result<ExactRat> {
    check_positive(n, "n")?;
    check_positive(r, "r")?;
    check_th1_guard(n)?;
    let thetas = theta_table(n);
    let sums = composition_theta_sums(n, &thetas);
    Ok(th1_assemble(n, r, false, &thetas, &sums))
}

fn lemma2_sum(memo: &mut BellMemo<'_>, n: u64, r: u64) -> Result<ExactRat> {
    let r_int = ExactInt::from(r);
    let mut r_power = ExactInt::one();
    let mut acc = ExactRat::zero();
    for k in 1..=n {
        r_power *= &r_int;
        let term = memo.value(n, k)?;
        if !term.is_zero() {
            acc = &acc + &(&term * &ExactRat::from_integer(r_power.clone()));
        }
    }
    Ok(&acc / &ExactRat::from_integer(factorial(n)))
}

/// Bell-sum form of the colour count:
/// `p_{-r}(n) = (1/n!) sum_{k=1}^{n} r^k B_{n,k}(1! theta(1), 2! theta(2), ...)`.
pub fn lemma2_rhs(n: u64, r: u64) -> Result<ExactRat> {
    check_positive(n, "n")?;
    check_positive(r, "r")?;
    let xs = theta_bell_args(n);
    let mut memo = BellMemo::new(&xs);
    lemma2_sum(&mut memo, n, r)
}

fn lemma3_sum(memo: &mut BellMemo<'_>, n: u64) -> Result<ExactRat> {
    let mut acc = ExactRat::zero();
    for k in 1..=n {
        let term = memo.value(n, k)?;
        if term.is_zero() {
            continue;
        }
        let mut weight = factorial(k - 1);
        if k % 2 == 0 {
            weight = -weight;
        }
        acc = &acc + &(&term * &ExactRat::from_integer(weight));
    }
    Ok(&acc / &ExactRat::from_integer(factorial(n)))
}

/// Inverse Bell sum: `theta(n) = (1/n!) sum_{k=1}^{n} (-1)^(k-1) (k-1)!
/// B_{n,k}(1! p(1), 2! p(2), ...)`.
pub fn lemma3_rhs(n: u64) -> Result<ExactRat> {
    check_positive(n, "n")?;
    let xs = partition_bell_args(n);
    let mut memo = BellMemo::new(&xs);
    lemma3_sum(&mut memo, n)
}

fn lemma4_rhs_from_table(n: u64, k: u64, table: &PartitionTable) -> ExactRat {
    let mut alternating = ExactInt::zero();
    for r in 1..=k {
        let mut term = binomial(k, r) * table.entry(r, n).expect("within table bounds");
        if (k - r) % 2 == 1 {
            term = -term;
        }
        alternating += term;
    }
    let scale = make_rat(factorial(n), factorial(k)).expect("k! > 0");
    &scale * &ExactRat::from_integer(alternating)
}

/// Both sides of the Bell/colour bridge
/// `B_{n,k}(1! p(1), ...) = (n!/k!) sum_{r=1}^{k} (-1)^(k-r) C(k,r) p_{-r}(n)`,
/// returned as (Bell side, colour side). For `k > n` both sides are zero
/// by convention.
pub fn lemma4_check(n: u64, k: u64) -> Result<(ExactRat, ExactRat)> {
    check_positive(n, "n")?;
    check_positive(k, "k")?;
    if k > n {
        return Ok((ExactRat::zero(), ExactRat::zero()));
    }
    let xs = partition_bell_args(n);
    let lhs = BellMemo::new(&xs).value(n, k)?;
    let rhs = lemma4_rhs_from_table(n, k, &p_color_table(n));
    Ok((lhs, rhs))
}

fn th2_from_column(n: u64, table: &PartitionTable) -> ExactRat {
    let mut acc = ExactRat::zero();
    for r in 1..=n {
        let weight = make_rat(binomial(n, r), ExactInt::from(r)).expect("r >= 1");
        let mut term = &weight * &ExactRat::from_integer(table.entry(r, n).unwrap().clone());
        if r % 2 == 0 {
            term = -term;
        }
        acc = &acc + &term;
    }
    &acc * &ExactRat::from_integer(ExactInt::from(n))
}

/// The inverse formula
/// `sigma(n) = n sum_{r=1}^{n} ((-1)^(r-1)/r) C(n,r) p_{-r}(n)`,
/// consuming column `n` of the colour table. Exact, and always a whole
/// number when the formula is right.
pub fn th2_rhs(n: u64) -> Result<ExactRat> {
    check_positive(n, "n")?;
    Ok(th2_from_column(n, &p_color_table(n)))
}

/// [`th2_rhs`] for every `n = 1..=max_n` off one shared colour table,
/// which is what makes a long sweep affordable.
pub fn th2_sequence(max_n: u64) -> Result<Vec<ExactRat>> {
    check_positive(max_n, "max-n")?;
    let table = p_color_table(max_n);
    Ok((1..=max_n).map(|n| th2_from_column(n, &table)).collect())
}

/// `p_{-r}(0..=max_n)` through the Bell-sum identity with one shared memo.
/// Polynomial cost; the quadratic series route is still much faster, which
/// is the comparison the bench command makes.
pub fn lemma2_sequence(r: u64, max_n: u64) -> Result<Vec<ExactRat>> {
    check_positive(r, "r")?;
    let xs = theta_bell_args(max_n);
    let mut memo = BellMemo::new(&xs);
    let mut out = vec![ExactRat::one()];
    for n in 1..=max_n {
        out.push(lemma2_sum(&mut memo, n, r)?);
    }
    Ok(out)
}

/// `p_{-r}(0..=max_n)` through the corrected composition-sum identity.
/// Exponential cost (`2^(n-1)` terms at each `n`), hence the tight guard;
/// exists so the exponential route can be timed and compared against the
/// polynomial ones.
pub fn th1_sequence(r: u64, max_n: u64) -> Result<Vec<ExactRat>> {
    check_positive(r, "r")?;
    check_th1_guard(max_n)?;
    let thetas = theta_table(max_n);
    let mut out = vec![ExactRat::one()];
    for n in 1..=max_n {
        let sums = composition_theta_sums(n, &thetas);
        out.push(th1_assemble(n, r, true, &thetas, &sums));
    }
    Ok(out)
}

/// Both sides of the summation-interchange step
/// `sum_{k=r}^{n} (1/k) C(k,r) = (1/r) C(n,r)`, for `1 <= r <= n`.
/// The sum is taken literally, term by term, with the binomial extended by
/// `C(k,r) = C(k-1,r) k/(k-r)` at each step.
pub fn binomial_sum_identity_check(n: u64, r: u64) -> Result<(ExactRat, ExactRat)> {
    check_positive(n, "n")?;
    check_positive(r, "r")?;
    if r > n {
        return Err(Error::OutOfRange(format!(
            "need r <= n, got n = {n}, r = {r}"
        )));
    }
    let mut binom = ExactInt::one(); // C(r, r)
    let mut sum = make_rat(binom.clone(), ExactInt::from(r)).expect("r >= 1");
    for k in r + 1..=n {
        binom = crate::exact::exact_div(&(&binom * &ExactInt::from(k)), &ExactInt::from(k - r));
        sum = &sum + &make_rat(binom.clone(), ExactInt::from(k)).expect("k >= 1");
    }
    let closed = make_rat(binomial(n, r), ExactInt::from(r)).expect("r >= 1");
    Ok((sum, closed))
}

struct Sweep {
    failures: Vec<Failure>,
    checked: u64,
}

impl Sweep {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            checked: 0,
        }
    }

    fn point(&mut self, params: Vec<(&'static str, u64)>, expected: ExactRat, actual: ExactRat) {
        self.checked += 1;
        if expected != actual {
            self.failures.push(Failure {
                params,
                expected,
                actual,
            });
        }
    }
}

/// Sweeps one identity over the given bounds, comparing the evaluator
/// against its independent ground-truth route at every point. Collects
/// every counterexample rather than stopping at the first; the report is
/// ordered by parameter tuple regardless of evaluation order.
pub fn verify_range(identity: Identity, bounds: SweepBounds) -> Result<VerificationReport> {
    check_positive(bounds.max_n, "max-n")?;
    if bounds.max_n > identity.max_n_guard() {
        return Err(Error::GuardExceeded {
            what: identity.name(),
            detail: format!(
                "max-n = {} exceeds this identity's cost guard {}",
                bounds.max_n,
                identity.max_n_guard()
            ),
        });
    }
    let max_r = bounds.max_r.unwrap_or(DEFAULT_MAX_R);
    if identity.takes_max_r() {
        check_positive(max_r, "max-r")?;
        if max_r > MAX_R_GUARD {
            return Err(Error::GuardExceeded {
                what: identity.name(),
                detail: format!("max-r = {max_r} exceeds {MAX_R_GUARD}"),
            });
        }
    }

    let max_n = bounds.max_n;
    let started = Instant::now();
    let mut sweep = Sweep::new();
    let range = match identity {
        Identity::Lemma1 => {
            let coefficients = euler_e(max_n as usize).log()?.neg();
            let sieve = sigma_sieve(max_n);
            for n in 1..=max_n {
                let expected = make_rat(sieve.get(n).unwrap().clone(), ExactInt::from(n))?;
                sweep.point(vec![("n", n)], expected, coefficients.coeff(n as usize));
            }
            format!("1<=n<={max_n}")
        }
        Identity::Th1 | Identity::Th1Printed => {
            let corrected = identity == Identity::Th1;
            let thetas = theta_table(max_n);
            let truth: Vec<Vec<ExactInt>> = (1..=max_r).map(|r| p_color_series(r, max_n)).collect();
            for n in 2..=max_n {
                let sums = composition_theta_sums(n, &thetas);
                for r in 1..=max_r {
                    let expected =
                        ExactRat::from_integer(truth[r as usize - 1][n as usize].clone());
                    let actual = th1_assemble(n, r, corrected, &thetas, &sums);
                    sweep.point(vec![("n", n), ("r", r)], expected, actual);
                }
            }
            format!("2<=n<={max_n} 1<=r<={max_r}")
        }
        Identity::Lemma2 => {
            let xs = theta_bell_args(max_n);
            let mut memo = BellMemo::new(&xs);
            let truth: Vec<Vec<ExactInt>> = (1..=max_r).map(|r| p_color_series(r, max_n)).collect();
            for n in 1..=max_n {
                for r in 1..=max_r {
                    let expected =
                        ExactRat::from_integer(truth[r as usize - 1][n as usize].clone());
                    let actual = lemma2_sum(&mut memo, n, r)?;
                    sweep.point(vec![("n", n), ("r", r)], expected, actual);
                }
            }
            format!("1<=n<={max_n} 1<=r<={max_r}")
        }
        Identity::Lemma3 => {
            let xs = partition_bell_args(max_n);
            let mut memo = BellMemo::new(&xs);
            for n in 1..=max_n {
                let actual = lemma3_sum(&mut memo, n)?;
                sweep.point(vec![("n", n)], theta(n)?, actual);
            }
            format!("1<=n<={max_n}")
        }
        Identity::Lemma4 => {
            let xs = partition_bell_args(max_n);
            let mut memo = BellMemo::new(&xs);
            let table = p_color_table(max_n);
            for n in 1..=max_n {
                for k in 1..=n {
                    let bell_side = memo.value(n, k)?;
                    let colour_side = lemma4_rhs_from_table(n, k, &table);
                    sweep.point(vec![("n", n), ("k", k)], colour_side, bell_side);
                }
            }
            format!("1<=k<=n<={max_n}")
        }
        Identity::Th2 => {
            let table = p_color_table(max_n);
            let sieve = sigma_sieve(max_n);
            for n in 1..=max_n {
                let expected = ExactRat::from_integer(sieve.get(n).unwrap().clone());
                sweep.point(vec![("n", n)], expected, th2_from_column(n, &table));
            }
            format!("1<=n<={max_n}")
        }
        Identity::BinomSum => {
            for r in 1..=max_n {
                // C(n,r) and the partial sum both extend by one step per n
                let r_rat = ExactRat::from_integer(ExactInt::from(r));
                let mut binom = ExactInt::one(); // C(r, r)
                let mut partial = make_rat(binom.clone(), ExactInt::from(r))?;
                sweep.point(
                    vec![("n", r), ("r", r)],
                    &ExactRat::from_integer(binom.clone()) / &r_rat,
                    partial.clone(),
                );
                for n in r + 1..=max_n {
                    binom = crate::exact::exact_div(
                        &(&binom * &ExactInt::from(n)),
                        &ExactInt::from(n - r),
                    );
                    partial = &partial + &make_rat(binom.clone(), ExactInt::from(n))?;
                    sweep.point(
                        vec![("n", n), ("r", r)],
                        &ExactRat::from_integer(binom.clone()) / &r_rat,
                        partial.clone(),
                    );
                }
            }
            format!("1<=r<=n<={max_n}")
        }
    };

    let elapsed_ms = started.elapsed().as_millis();
    let mut failures = sweep.failures;
    failures.sort_by_key(|f| f.params.iter().map(|&(_, v)| v).collect::<Vec<_>>());
    Ok(VerificationReport {
        identity: identity.name(),
        range,
        checked: sweep.checked,
        failures,
        elapsed_ms,
    })
}
