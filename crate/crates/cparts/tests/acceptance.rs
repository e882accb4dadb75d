//! Acceptance suite: every identity the library claims is checked here
//! over its full stated range, by exact rational equality against an
//! independent route. One test per criterion; each prints a `PASS` line
//! with its range and timing (visible with `--nocapture` or
//! `--show-output`).

mod common;

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cparts::bell::{bell_cvijovic, bell_definition, bell_recurrence, BellArgs};
use cparts::divisors::sigma_sieve;
use cparts::exact::{is_integer, rat, ExactRat};
use cparts::identities::{
    binomial_sum_identity_check, th1_printed_rhs, th2_sequence, verify_range, Identity, SweepBounds,
};
use cparts::output::{parse_table_csv, parse_table_json_lines, render_table, OutputFormat};
use cparts::partitions::{brute_force_colored, p_color_recurrence, p_color_series};

use common::{cparts, exit_code, stdout};

fn pass(label: &str, detail: String, started: Instant) {
    println!(
        "PASS {label}: {detail} ({} ms)",
        started.elapsed().as_millis()
    );
}

#[test]
fn lemma1_log_coefficients_are_divisor_sums() {
    let started = Instant::now();
    let report = verify_range(Identity::Lemma1, SweepBounds::up_to(200)).unwrap();
    assert!(report.passed(), "counterexamples: {:?}", report.failures);
    assert_eq!(report.checked, 200);
    pass(
        "lemma1",
        format!(
            "-log E coefficients equal theta(n), {}/200 points",
            report.checked
        ),
        started,
    );
}

#[test]
fn th1_corrected_equals_the_series_coefficients() {
    let started = Instant::now();
    let report = verify_range(Identity::Th1, SweepBounds::with_max_r(18, 4)).unwrap();
    assert!(report.passed(), "counterexamples: {:?}", report.failures);
    assert_eq!(report.checked, 17 * 4);
    pass(
        "th1",
        format!(
            "composition sum with leading term r*theta(n) equals p_-r(n), {} points (2<=n<=18, r<=4)",
            report.checked
        ),
        started,
    );
}

#[test]
fn th1_printed_form_is_wrong_for_two_colours_and_right_for_one() {
    let started = Instant::now();
    // the printed leading term theta(n) gives 7/2 at (n, r) = (2, 2),
    // while p_-2(2) = 5
    let printed = th1_printed_rhs(2, 2).unwrap();
    assert_eq!(printed, rat(7, 2));
    let truth = ExactRat::from_integer(brute_force_colored(2, 2).unwrap());
    assert_ne!(printed, truth);

    // at r = 1 the printed form is correct for every n in range
    let p = p_color_series(1, 12);
    for n in 2..=12u64 {
        assert_eq!(
            th1_printed_rhs(n, 1).unwrap(),
            ExactRat::from_integer(p[n as usize].clone()),
            "printed form must hold at r = 1, n = {n}"
        );
    }
    pass(
        "erratum",
        "printed form fails at (n=2, r=2) with 7/2 vs 5 and holds for 2<=n<=12 at r=1".into(),
        started,
    );
}

#[test]
fn lemma2_bell_sum_equals_the_series_coefficients() {
    let started = Instant::now();
    let report = verify_range(Identity::Lemma2, SweepBounds::with_max_r(100, 10)).unwrap();
    assert!(report.passed(), "counterexamples: {:?}", report.failures);
    assert_eq!(report.checked, 100 * 10);
    pass(
        "lemma2",
        format!(
            "Bell sum equals p_-r(n) for n<=100, r<=10 (covers r in {{1,2,3,5,10}}), {} points",
            report.checked
        ),
        started,
    );
}

#[test]
fn bell_triple_agreement_on_random_rational_arguments() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(710_201);
    let mut checked = 0u64;
    for vector in 0..5 {
        let xs = BellArgs::new(
            (0..12)
                .map(|_| {
                    let numerator = rng.gen_range(-9i64..=9);
                    let denominator = rng.gen_range(1i64..=9);
                    rat(numerator, denominator)
                })
                .collect(),
        );
        for n in 1..=12u64 {
            for k in 1..=n {
                let by_definition = bell_definition(n, k, &xs).unwrap();
                let by_recurrence = bell_recurrence(n, k, &xs).unwrap();
                let by_nested_sum = bell_cvijovic(n, k, &xs).unwrap();
                assert_eq!(
                    by_definition, by_recurrence,
                    "vector {vector}, (n, k) = ({n}, {k})"
                );
                assert_eq!(
                    by_definition, by_nested_sum,
                    "vector {vector}, (n, k) = ({n}, {k})"
                );
                checked += 1;
            }
        }
    }
    assert_eq!(checked, 5 * 78);
    pass(
        "bell-triple",
        format!(
            "definition = recurrence = nested sum at {checked} points (5 random vectors, k<=n<=12)"
        ),
        started,
    );
}

#[test]
fn lemma3_alternating_bell_sum_equals_theta() {
    let started = Instant::now();
    let report = verify_range(Identity::Lemma3, SweepBounds::up_to(60)).unwrap();
    assert!(report.passed(), "counterexamples: {:?}", report.failures);
    assert_eq!(report.checked, 60);
    pass(
        "lemma3",
        format!(
            "alternating Bell sum equals theta(n) for n<=60, {} points",
            report.checked
        ),
        started,
    );
}

#[test]
fn lemma4_bell_and_colour_sides_agree() {
    let started = Instant::now();
    let report = verify_range(Identity::Lemma4, SweepBounds::up_to(40)).unwrap();
    assert!(report.passed(), "counterexamples: {:?}", report.failures);
    assert_eq!(report.checked, 40 * 41 / 2);
    pass(
        "lemma4",
        format!(
            "both sides equal for 1<=k<=n<=40, {} points",
            report.checked
        ),
        started,
    );
}

#[test]
fn th2_recovers_sigma_with_integral_values() {
    let started = Instant::now();
    let values = th2_sequence(300).unwrap();
    let sieve = sigma_sieve(300);
    for n in 1..=300u64 {
        let value = &values[n as usize - 1];
        assert!(is_integer(value), "denominator must be 1 at n = {n}");
        assert_eq!(
            value.numer(),
            sieve.get(n).unwrap(),
            "sigma({n}) from the alternating colour sum"
        );
    }
    pass(
        "th2",
        "alternating colour sum recovers sigma(n) with denominator 1 for n<=300".into(),
        started,
    );
}

#[test]
fn binomial_sum_interchange_step_holds() {
    let started = Instant::now();
    let mut checked = 0u64;
    for n in 1..=200u64 {
        for r in 1..=n {
            let (sum, closed) = binomial_sum_identity_check(n, r).unwrap();
            assert_eq!(sum, closed, "(n, r) = ({n}, {r})");
            checked += 1;
        }
    }
    assert_eq!(checked, 200 * 201 / 2);
    pass(
        "binom-sum",
        format!("sum_k C(k,r)/k = C(n,r)/r for 1<=r<=n<=200, {checked} points"),
        started,
    );
}

#[test]
fn three_colour_routes_agree_up_to_the_oracle_guard() {
    let started = Instant::now();
    let mut checked = 0u64;
    for r in 1..=5u64 {
        let by_series = p_color_series(r, 25);
        let by_recurrence = p_color_recurrence(r, 25);
        for n in 0..=25u64 {
            let by_counting = brute_force_colored(n, r).unwrap();
            assert_eq!(by_series[n as usize], by_counting, "(n, r) = ({n}, {r})");
            assert_eq!(
                by_recurrence[n as usize], by_counting,
                "(n, r) = ({n}, {r})"
            );
            checked += 1;
        }
    }
    assert_eq!(checked, 26 * 5);
    pass(
        "route-agreement",
        format!("series = recurrence = brute force for n<=25, r<=5, {checked} points"),
        started,
    );
}

#[test]
fn cli_contract_exit_codes_and_round_trips() {
    let started = Instant::now();

    // exit 0: successful computations and passing verifications
    for args in [
        &["sigma", "--n", "12"][..],
        &["theta", "--n", "2"],
        &["pr", "--n", "3", "--r", "2"],
        &["verify", "th2", "--max-n", "50"],
        &["verify", "lemma1", "--max-n", "100"],
        &["bench", "--max-n", "40", "--routes", "series,recurrence"],
    ] {
        let out = cparts(args);
        assert_eq!(exit_code(&out), 0, "expected exit 0 for {args:?}");
    }

    // exit 1: a verification counterexample
    let failing = cparts(&["verify", "th1-printed", "--max-n", "4", "--max-r", "2"]);
    assert_eq!(exit_code(&failing), 1);
    let text = stdout(&failing);
    assert!(
        text.contains("n=2 r=2"),
        "first counterexample named: {text}"
    );
    assert!(
        text.contains("expected 5, got 7/2"),
        "erratum values shown: {text}"
    );

    // exit 2: usage, malformed input, guard violations
    for args in [
        &["sigma", "--n", "0"][..],
        &["sigma"],
        &["pr", "--n", "3", "--r", "0"],
        &["verify", "lemma9", "--max-n", "5"],
        &["verify", "th1", "--max-n", "26"],
        &["bell", "--n", "3", "--k", "2", "--xs", "1,oops"],
        &["bell", "--n", "5", "--k", "2", "--xs", "1,1"],
        &["table", "--max-n", "0", "--max-r", "2"],
        &["bench", "--max-n", "30", "--routes", "series,th1"],
        &["bench", "--max-n", "10", "--routes", "warp"],
        &["nonsense"],
    ] {
        let out = cparts(args);
        assert_eq!(exit_code(&out), 2, "expected exit 2 for {args:?}");
    }

    // structured outputs round-trip byte-identically
    let csv_out = cparts(&["table", "--max-n", "6", "--max-r", "4", "--format", "csv"]);
    assert_eq!(exit_code(&csv_out), 0);
    let csv_text = stdout(&csv_out);
    let cells = parse_table_csv(&csv_text).unwrap();
    assert!(!cells.is_empty() && cells.iter().all(|c| !c.value.is_empty()));
    assert_eq!(render_table(&cells, OutputFormat::Csv), csv_text);

    let jsonl_out = cparts(&[
        "table",
        "--max-n",
        "6",
        "--max-r",
        "4",
        "--format",
        "json-lines",
    ]);
    assert_eq!(exit_code(&jsonl_out), 0);
    let jsonl_text = stdout(&jsonl_out);
    let cells = parse_table_json_lines(&jsonl_text).unwrap();
    assert_eq!(render_table(&cells, OutputFormat::JsonLines), jsonl_text);

    // numeric output stays in exact decimal form
    for text in [&csv_text, &jsonl_text] {
        assert!(!text.contains("inf") && !text.contains("nan"));
        assert!(!text.contains("e+") && !text.contains("e-") && !text.contains('E'));
    }

    pass(
        "cli-contract",
        "exit codes 0/1/2 honour the contract; csv and json-lines round-trip byte-identically".into(),
        started,
    );
}
