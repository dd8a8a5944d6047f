//! Acceptance gate: one test per verification battery, each asserting
//! the battery passes within its time budget. Failures print the
//! battery's detail lines.

use srplab::fixtures::{self, FixtureReport};
use std::time::{Duration, Instant};

fn assert_battery(report: FixtureReport, elapsed: Duration, budget: Option<Duration>) {
    if let Some(b) = budget {
        assert!(
            elapsed <= b,
            "battery {} ({}) took {elapsed:?}, budget {b:?}",
            report.id,
            report.name
        );
    }
    assert!(
        report.passed,
        "battery {} ({}) failed:\n{}",
        report.id,
        report.name,
        report.details.join("\n")
    );
}

#[test]
fn criterion_1_power_series_replay_is_exact_and_fast() {
    let t = Instant::now();
    let report = fixtures::power_series_replay();
    assert_battery(report, t.elapsed(), Some(Duration::from_secs(1)));
}

#[test]
fn criterion_2_triple_family_thresholds_within_five_seconds_each() {
    let t = Instant::now();
    let report = fixtures::triple_family_thresholds();
    // Two instances at five seconds apiece.
    assert_battery(report, t.elapsed(), Some(Duration::from_secs(10)));
}

#[test]
fn criterion_3_certified_cones_scan_clean() {
    let t = Instant::now();
    let report = fixtures::certified_cone_scans();
    assert_battery(report, t.elapsed(), Some(Duration::from_secs(30)));
}

#[test]
fn criterion_4_curve_gap_fixtures_are_exact() {
    let report = fixtures::curve_gap_fixtures();
    assert_battery(report, Duration::ZERO, None);
}

#[test]
fn criterion_5_ordinary_points_replay_exactly() {
    let t = Instant::now();
    let report = fixtures::ordinary_points();
    assert_battery(report, t.elapsed(), Some(Duration::from_secs(1)));
}

#[test]
fn criterion_6_lattice_gaps_and_candidate_searches() {
    let t = Instant::now();
    let report = fixtures::lattice_gap_fixtures();
    assert_battery(report, t.elapsed(), Some(Duration::from_secs(30)));
}

#[test]
fn criterion_7_hypersurface_constants_match_closed_forms() {
    let t = Instant::now();
    let report = fixtures::hypersurface_constants();
    assert_battery(report, t.elapsed(), Some(Duration::from_secs(10)));
}

#[test]
fn criterion_8_order_oracle_and_slice_counts_agree_on_seeded_corpus() {
    let report = fixtures::oracle_equivalence();
    assert_battery(report, Duration::ZERO, None);
}

#[test]
fn criterion_9_regular_model_maxima_are_powers() {
    let t = Instant::now();
    let report = fixtures::regular_model_scan();
    assert_battery(report, t.elapsed(), Some(Duration::from_secs(10)));
}
