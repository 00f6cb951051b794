//! Acceptance gate: one line per criterion on stdout (written past the test
//! harness's capture so it shows up in plain `cargo test` output).
//!
//! Two stated values cannot be reproduced and are pinned in
//! `KNOWN_DEVIATIONS`; the criterion line still says FAIL for them. The test
//! fails if any other check fails or if a pinned check starts passing.

mod common;

use std::io::Write;
use std::time::{Duration, Instant};

use gradedalg::suites::run_suite;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// `(suite, check)` pairs whose stated value disagrees with exact computation.
///
/// - `ex25`: with `L = (z,u,v)`, the sequence `0 → R/(I_C∩L) → R/I_C ⊕ R/L →
///   k[x,y]/(y⁹) → 0` and `dim H¹(R/I_C)_3 = 8 > 5 = dim H¹(k[x,y]/(y⁹))_3`
///   force `H¹(R/(I_C∩L))_3 ≠ 0`, hence `reg ≥ 5`; the computed value is 5.
/// - `appendix`: the H¹ dimensions of the `(1,9,12,16)` curve are
///   `4, 9, 8, 4, 3, 2, 1` (checked against a semigroup count in `oracles`),
///   total 31, below the bound 61.
const KNOWN_DEVIATIONS: &[(&str, &str)] = &[
    ("ex25", "reg(I_C ∩ (z,u,v))"),
    ("appendix", "(1,3) length of H^1_m(R/I_C) bounded below by m^2*n^5/4"),
];

fn say(line: &str) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

fn criterion(number: u8, title: &str, suite: &str, budget: Duration) {
    let start = Instant::now();
    let report = run_suite(suite, None).expect("suite runs");
    let elapsed = start.elapsed();
    let failing: Vec<&str> = report.failures().iter().map(|c| c.name.as_str()).collect();
    let known: Vec<&str> = KNOWN_DEVIATIONS.iter().filter(|(s, _)| *s == suite).map(|(_, c)| *c).collect();
    let total = report.checks.len();
    let note = match (failing.is_empty(), failing == known) {
        (true, _) => String::new(),
        (false, true) => " (documented deviation)".to_string(),
        (false, false) => " (UNEXPECTED)".to_string(),
    };
    say(&format!(
        "criterion {number} [{title}]: {} {}/{total} checks{note} in {elapsed:.2?}",
        if failing.is_empty() { "PASS" } else { "FAIL" },
        total - failing.len(),
    ));
    for c in report.failures() {
        say(&format!("    FAIL {}: expected {}, got {}", c.name, c.expected, c.actual));
    }
    assert_eq!(failing, known, "{suite}: failing checks differ from the documented deviations\n{report}");
    assert!(elapsed < budget, "{suite} took {elapsed:?}, budget {budget:?}");
}

#[test]
fn criterion_1_three_component_intersection() {
    criterion(1, "ex21", "ex21", Duration::from_secs(30));
}

#[test]
fn criterion_2_curve_168() {
    criterion(2, "ex22", "ex22", Duration::from_secs(60));
}

#[test]
fn criterion_3_cm_family() {
    criterion(3, "lemma24", "lemma24", Duration::from_secs(300));
}

#[test]
fn criterion_4_p4_family() {
    criterion(4, "ex25", "ex25", Duration::from_secs(600));
}

#[test]
fn criterion_5_sumsets() {
    criterion(5, "appendix", "appendix", Duration::from_secs(60));
}

#[test]
fn criterion_6_socle_surface() {
    criterion(6, "ex34", "ex34", Duration::from_secs(900));
}

/// About two and a half minutes in a release build; run with `--ignored`.
#[test]
#[ignore]
fn criterion_7_depth_surface() {
    criterion(7, "ex35", "ex35", Duration::from_secs(6 * 3600));
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new_with_rng(Config { cases, ..Config::default() }, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

#[test]
fn criterion_8_properties() {
    let start = Instant::now();
    let mut results: Vec<(&str, Result<(), String>)> = Vec::new();

    let gens = prop::collection::vec(common::raw_poly(3, 3), 1..=3);
    let r = runner(40).run(&(gens, 0usize..5, prop::collection::vec(prop_oneof![-7i64..=-1, 1i64..=7], 3)), |(g, k, s)| {
        common::gb_is_canonical(&g, k, &s)
    });
    results.push(("reduced GB invariant under permutation and scaling", r.map_err(|e| e.to_string())));

    let r = runner(40).run(&common::raw_ideal(4, 3, 3, 3), |raw| common::series_matches_resolution(&raw));
    results.push(("Hilbert numerator = series from resolution", r.map_err(|e| e.to_string())));

    let r = runner(30).run(&(common::raw_ideal(4, 3, 3, 3), common::raw_form(4, 3, 2)), |(raw, f)| {
        common::regularity_shifts(&raw, &f)
    });
    results.push(("reg(f I) = deg f + reg(I)", r.map_err(|e| e.to_string())));

    let r = runner(30).run(&(common::raw_ideal(4, 3, 3, 3), prop::collection::vec(common::raw_poly(4, 3), 3..=4)), |(raw, lin)| {
        common::torsion_does_not_raise_regularity(&raw, &lin)
    });
    results.push(("reg(M / H^0_p(M)) <= reg(M), dim R/p <= 1", r.map_err(|e| e.to_string())));

    let n = common::be_complexes_match_resolutions();
    results.push(("exact complexes have minimal Betti tables", Ok(())));

    let failed: Vec<_> = results.iter().filter(|(_, r)| r.is_err()).collect();
    say(&format!(
        "criterion 8 [properties]: {} {}/{} properties ({n} complexes compared) in {:.2?}",
        if failed.is_empty() { "PASS" } else { "FAIL" },
        results.len() - failed.len(),
        results.len(),
        start.elapsed()
    ));
    for (name, r) in &failed {
        say(&format!("    FAIL {name}: {}", r.as_ref().unwrap_err()));
    }
    assert!(failed.is_empty());
}
