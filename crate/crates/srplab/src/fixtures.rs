//! The bundled verification batteries: frozen example replays,
//! family thresholds, scan consistency on depth-certified cones,
//! gap identities on curves and resolution lattices, hypersurface
//! constants, and oracle cross-checks. The `papercheck` subcommand
//! prints one line per battery; the acceptance test suite asserts
//! each battery under its stated time budget.

use crate::oracle::FoldOracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use srp_core::cone::{hilbert_slice, tangent_cone_cm};
use srp_core::hyper::HypersurfaceSpec;
use srp_core::ideal::{Monomial, RingModel, StaircaseRing};
use srp_core::lattice::{DualGraph, Vertex};
use srp_core::semigroup::NumericalSemigroup;
use srp_core::srp::{
    dao_check, dao_power_table, med_check, monomial_rees_scan, ordinary_point_check,
    srp_threshold, SrpBounds, SrpVerdict, WitnessKind,
};

/// Outcome of one verification battery.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureReport {
    /// Battery number, 1-based.
    pub id: u32,
    /// Short battery name.
    pub name: &'static str,
    /// Whether every sub-check passed.
    pub passed: bool,
    /// One line per sub-check.
    pub details: Vec<String>,
}

struct Checker {
    passed: bool,
    details: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            passed: true,
            details: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl std::fmt::Display) {
        if ok {
            self.details.push(format!("ok   {what}"));
        } else {
            self.passed = false;
            self.details.push(format!("FAIL {what}"));
        }
    }

    fn finish(self, id: u32, name: &'static str) -> FixtureReport {
        FixtureReport {
            id,
            name,
            passed: self.passed,
            details: self.details,
        }
    }
}

fn power_series_ring(gens: &[u64]) -> StaircaseRing {
    StaircaseRing::new(
        NumericalSemigroup::new(gens).unwrap(),
        RingModel::PowerSeries,
    )
}

/// Battery 1: the ⟨4,5,11⟩ replay — generator counts of m and m², the
/// witness m² + (t¹¹), Ratliff-Rush closedness and m-fullness of m²,
/// t¹¹ inside the integral closure, and the depth obstruction at 11.
pub fn power_series_replay() -> FixtureReport {
    let mut c = Checker::new();
    let ring = power_series_ring(&[4, 5, 11]);
    let m = ring.maximal_ideal();
    let m2 = ring.power_of_max(2);
    c.check(m.mu() == 4, format!("μ(m) = {} (want 4)", m.mu()));
    c.check(m2.mu() == 7, format!("μ(m²) = {} (want 7)", m2.mu()));

    let t11 = ring.ideal(&[Monomial::new(0, 11)]).unwrap();
    let witness = m2.sum(&ring, &t11).unwrap();
    c.check(
        witness.mu() == 7,
        format!("μ(m² + (t¹¹)) = {} (want 7)", witness.mu()),
    );
    c.check(
        witness.contains_ideal(&ring, &m2).unwrap() && witness != m2,
        "m² + (t¹¹) strictly contains m²",
    );

    let rr = m2.ratliff_rush(&ring, 4).unwrap();
    c.check(
        rr.stabilized && rr.closure == m2 && rr.certificate.is_some(),
        "m² is Ratliff-Rush closed (certified)",
    );
    c.check(m2.is_m_full(&ring).unwrap(), "m² is m-full via s");

    let ic = m2.integral_closure(&ring).unwrap();
    c.check(
        ic.contains_monomial(&ring, Monomial::new(0, 11)).unwrap()
            && !m2.contains_monomial(&ring, Monomial::new(0, 11)).unwrap(),
        "t¹¹ lies in the integral closure of m² but not in m²",
    );

    let cone = tangent_cone_cm(ring.semigroup(), None).unwrap();
    c.check(
        cone.first_violation == Some(11),
        format!(
            "tangent cone misses depth at h = {:?} (want 11)",
            cone.first_violation
        ),
    );
    c.finish(1, "power-series replay ⟨4,5,11⟩")
}

fn family_threshold(c: &mut Checker, a: u64, n: u64) {
    let elem = a * a - 1 - a * n + (n - 1) * a;
    let ring = power_series_ring(&[a, a + 1, a * a - 1 - a * n]);
    let report = srp_threshold(&ring, n + 3, &SrpBounds::default()).unwrap();
    c.check(
        report.holds_through == n && report.first_failure == Some(n + 1),
        format!(
            "family (a={a}, n={n}): holds through {} (want {n}), first failure {:?} (want {})",
            report.holds_through,
            report.first_failure,
            n + 1
        ),
    );
    match &report.rows[n as usize].verdict {
        SrpVerdict::Fails(w) => {
            c.check(
                w.kind
                    == WitnessKind::SocleJump {
                        elem,
                        entry_degree: n,
                    }
                    && w.added == vec![Monomial::new(0, elem)]
                    && w.mu_witness == w.mu_power,
                format!("family (a={a}, n={n}): witness adds t^{elem} keeping μ = {}", w.mu_power),
            );
        }
        other => c.check(false, format!("family (a={a}, n={n}): no failure row: {other:?}")),
    }
    let propagated = report.rows[(n + 1) as usize..]
        .iter()
        .all(|row| match &row.verdict {
            SrpVerdict::Fails(w) => {
                w.kind == WitnessKind::Lifted { from_level: n + 1 } && w.mu_witness >= w.mu_power
            }
            _ => false,
        });
    c.check(
        propagated,
        format!("family (a={a}, n={n}): failure propagates through level {}", n + 3),
    );
}

/// Battery 2: the ⟨a, a+1, a²-1-an⟩ family at (a=10, n=2) and
/// (a=14, n=3): the property holds through level n, fails at n+1 with
/// the socle witness t^{(n-1)a+c}, and the failure propagates to n+3.
pub fn triple_family_thresholds() -> FixtureReport {
    let mut c = Checker::new();
    family_threshold(&mut c, 10, 2);
    family_threshold(&mut c, 14, 3);
    c.finish(2, "triple-family thresholds")
}

/// Battery 3: on depth-certified cones (⟨3,4,5⟩, ⟨2,3⟩, ℕ) the
/// monomial scan finds no witness for ℓ ≤ 5 and every scanned
/// enlargement needs strictly fewer generators.
pub fn certified_cone_scans() -> FixtureReport {
    let mut c = Checker::new();
    for gens in [&[3u64, 4, 5][..], &[2, 3], &[1]] {
        let ring = power_series_ring(gens);
        let cone = tangent_cone_cm(ring.semigroup(), None).unwrap();
        c.check(cone.is_cm(), format!("{gens:?}: depth certificate up to {}", cone.checked_up_to));
        for level in 1..=5u64 {
            let mu_power = ring.power_of_max(level).mu();
            let scan = monomial_rees_scan(&ring, level, &SrpBounds::default()).unwrap();
            let all_below = scan.visited.iter().all(|s| s.mu < mu_power);
            c.check(
                scan.witness.is_none() && all_below,
                format!(
                    "{gens:?} level {level}: {} candidates, all μ < {mu_power}",
                    scan.visited.len()
                ),
            );
        }
    }
    c.finish(3, "scans on depth-certified cones")
}

/// Battery 4: generator-count/multiplicity gaps — equality for powers
/// on ⟨3,4,5⟩, a negative forward gap for m on ⟨4,5,11⟩, and the
/// embedding-dimension check on both.
pub fn curve_gap_fixtures() -> FixtureReport {
    let mut c = Checker::new();
    let nice = power_series_ring(&[3, 4, 5]);
    let table = dao_power_table(&nice, 5).unwrap();
    c.check(
        table.iter().all(|(_, d)| d.forward_gap == 0),
        "⟨3,4,5⟩: forward gap 0 at every level ≤ 5",
    );
    c.check(
        table.iter().all(|(_, d)| d.reverse_gap >= 0),
        "⟨3,4,5⟩: reverse gap ≥ 0 at every level ≤ 5",
    );

    let rough = power_series_ring(&[4, 5, 11]);
    let dao_m = dao_check(&rough, &rough.maximal_ideal()).unwrap();
    c.check(
        dao_m.forward_gap == -1,
        format!("⟨4,5,11⟩: forward gap of m = {} (want -1 < 0)", dao_m.forward_gap),
    );

    let med_nice = med_check(nice.semigroup());
    c.check(
        med_nice.holds && med_nice.mu_m == 4 && med_nice.e_m == 3,
        "⟨3,4,5⟩: μ(m) = e(m) + 1 = 4",
    );
    let med_rough = med_check(rough.semigroup());
    c.check(
        !med_rough.holds && med_rough.mu_m == 4 && med_rough.e_m == 4,
        "⟨4,5,11⟩: μ(m) = 4 ≠ e(m) + 1 = 5",
    );
    c.finish(4, "curve gap fixtures")
}

/// Battery 5: ordinary-point shadows for genus 1, 2, 3 — the weight
/// staircase equals the powers of m through level 6, m² = Qm for the
/// two-generator reduction, and the embedding dimension is maximal.
pub fn ordinary_points() -> FixtureReport {
    let mut c = Checker::new();
    for g in 1..=3u64 {
        let report = ordinary_point_check(g, 6).unwrap();
        c.check(
            report.ord_formula_ok && report.mu_formula_ok,
            format!("genus {g}: staircase matches ⌊h/{}⌋ and μ(mⁿ) = 1 + n·{}", g + 1, g + 1),
        );
        c.check(report.reduction_product_ok, format!("genus {g}: m·mⁿ = Q·mⁿ at every checked level"));
        c.check(report.cone_cm, format!("genus {g}: graded depth is full"));
        c.check(report.med.holds, format!("genus {g}: maximal embedding dimension"));
    }
    c.finish(5, "ordinary-point shadows")
}

fn chain(n: usize) -> DualGraph {
    let verts = vec![
        Vertex {
            self_intersection: -2,
            genus: 0
        };
        n
    ];
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    DualGraph::new(verts, &edges).unwrap()
}

fn star4() -> DualGraph {
    DualGraph::new(
        vec![
            Vertex {
                self_intersection: -2,
                genus: 0
            };
            4
        ],
        &[(0, 1), (0, 2), (0, 3)],
    )
    .unwrap()
}

fn e8() -> DualGraph {
    DualGraph::new(
        vec![
            Vertex {
                self_intersection: -2,
                genus: 0
            };
            8
        ],
        &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)],
    )
    .unwrap()
}

/// Battery 6: resolution lattices — the one-vertex graph has
/// (μ, e, ll) = (3, 2, 1) with zero gaps for multiples of M; on the
/// chains of length 2 and 3, the 4-star and the length-8 tree, both
/// gaps are ≥ 0 for every anti-nef cycle within bound 4 and agree with
/// their intersection-number forms; the strict-maximum candidate
/// search is empty on graphs with ≤ 2 curves and nonempty on the
/// 3-chain and the 4-star.
pub fn lattice_gap_fixtures() -> FixtureReport {
    let mut c = Checker::new();
    let a1 = chain(1);
    let inv = a1.cycle_invariants(&[1]).unwrap();
    c.check(
        inv.mu == Some(3) && inv.multiplicity == 2 && inv.loewy_length == 1,
        "one vertex: (μ, e, ll) = (3, 2, 1)",
    );
    let all_zero = (1..=5i64).all(|n| {
        let g = a1.dao_gaps(&[n]).unwrap();
        g.forward_gap == 0 && g.reverse_gap == 0
    });
    c.check(all_zero, "one vertex: zero gaps for Z = nM, n ≤ 5");

    for (name, g) in [
        ("2-chain", chain(2)),
        ("3-chain", chain(3)),
        ("4-star", star4()),
        ("8-tree", e8()),
    ] {
        let cycles = g.enumerate_antinef(4).unwrap();
        let m = g.fundamental_cycle().to_vec();
        let ok = cycles.iter().all(|z| {
            let gaps = g.dao_gaps(z).unwrap();
            let ll = gaps.invariants.loewy_length as i64;
            let ord = gaps.invariants.order as i64;
            let llm_minus_z: Vec<i64> =
                z.iter().zip(&m).map(|(&zi, &mi)| ll * mi - zi).collect();
            let z_minus_ordm: Vec<i64> =
                z.iter().zip(&m).map(|(&zi, &mi)| zi - ord * mi).collect();
            gaps.forward_gap >= 0
                && gaps.reverse_gap >= 0
                && gaps.forward_gap == -g.pair(&llm_minus_z, z)
                && gaps.reverse_gap == -g.pair(z, &z_minus_ordm)
        });
        c.check(
            ok,
            format!(
                "{name}: gaps ≥ 0 and equal to their intersection forms on {} anti-nef cycles",
                cycles.len()
            ),
        );
    }

    c.check(
        chain(1).srp_candidates(4).unwrap().is_empty(),
        "one vertex: no strict-maximum candidates",
    );
    let two = chain(2).srp_candidates(4).unwrap();
    c.check(
        two.is_empty(),
        format!(
            "2-chain: no strict-maximum candidates (found {}: {})",
            two.len(),
            two.iter()
                .take(2)
                .map(|r| format!("{:?} with μ = {}", r.z, r.mu))
                .collect::<Vec<_>>()
                .join(", "),
        ),
    );
    c.check(
        !chain(3).srp_candidates(4).unwrap().is_empty(),
        "3-chain: candidates exist",
    );
    c.check(
        !star4().srp_candidates(4).unwrap().is_empty(),
        "4-star: candidates exist",
    );
    c.finish(6, "resolution-lattice gaps and candidates")
}

/// Battery 7: hypersurface constants — for surfaces the constant
/// stabilizes at C(n-1, 2) (n = 3..10); for threefolds the divergence
/// flag is off at degree 4 and on for degrees 5..8 over s ≤ 10⁴.
pub fn hypersurface_constants() -> FixtureReport {
    let mut c = Checker::new();
    for n in 3..=10u64 {
        let h = HypersurfaceSpec::new(2, n).unwrap();
        let scan = h.constant_scan(50).unwrap();
        let want = h.surface_constant_sup().unwrap();
        c.check(
            scan.sup == want && !scan.divergent,
            format!("surface degree {n}: constant = {} = C({}, 2)", crate::ratio_string(scan.sup), n - 1),
        );
    }
    let cubic = HypersurfaceSpec::new(3, 4).unwrap().constant_scan(10_000).unwrap();
    c.check(
        !cubic.divergent && cubic.sup == num_rational::Ratio::from_integer(0),
        "threefold degree 4: constant identically 0, not divergent",
    );
    for n in 5..=8u64 {
        let scan = HypersurfaceSpec::new(3, n).unwrap().constant_scan(10_000).unwrap();
        c.check(
            scan.divergent && scan.argmax == 10_000,
            format!("threefold degree {n}: constant divergent over s ≤ 10⁴"),
        );
    }
    c.finish(7, "hypersurface constants")
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn seeded_corpus(seed: u64, count: usize) -> Vec<NumericalSemigroup> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(3..=5usize);
        let gens: Vec<u64> = (0..k).map(|_| rng.gen_range(2..=40u64)).collect();
        if gens.iter().copied().fold(0, gcd) == 1 {
            out.push(NumericalSemigroup::new(&gens).unwrap());
        }
    }
    out
}

/// Battery 8: on 50 seeded random semigroups, the order table equals
/// the layered bitset oracle for h ≤ 200, and μ(m^ℓ) from the
/// staircase normal form equals the graded-slice sum for ℓ ≤ 6.
pub fn oracle_equivalence() -> FixtureReport {
    let mut c = Checker::new();
    let corpus = seeded_corpus(0xF01D, 50);
    let mut ord_mismatch = 0usize;
    let mut mu_mismatch = 0usize;
    for h in &corpus {
        let oracle = FoldOracle::new(h.gens(), 200);
        for x in 0..=200u64 {
            if h.ord(x) != oracle.ord(x) {
                ord_mismatch += 1;
            }
        }
        let ring = StaircaseRing::new(h.clone(), RingModel::PowerSeries);
        for l in 1..=6u64 {
            let by_slices: u64 = (0..=l).map(|k| hilbert_slice(h, k)).sum();
            if ring.power_of_max(l).mu() != by_slices {
                mu_mismatch += 1;
            }
        }
    }
    c.check(
        ord_mismatch == 0,
        format!("order table vs bitset oracle: {ord_mismatch} mismatches over {} semigroups × 201 values", corpus.len()),
    );
    c.check(
        mu_mismatch == 0,
        format!("μ(m^ℓ) normal form vs slice sums: {mu_mismatch} mismatches, ℓ ≤ 6"),
    );
    c.finish(8, "oracle equivalence on a seeded corpus")
}

/// Battery 9: in the regular model (H = ℕ) every ideal the bounded
/// climb can reach from m^ℓ (box a, h ≤ 5) needs strictly fewer
/// generators, so the only generator-count maxima are the powers
/// themselves.
pub fn regular_model_scan() -> FixtureReport {
    let mut c = Checker::new();
    let ring = power_series_ring(&[1]);
    let bounds = SrpBounds {
        cone_limit: None,
        scan_max_a: Some(5),
        scan_max_h: Some(5),
    };
    for level in 1..=5u64 {
        let mu_power = ring.power_of_max(level).mu();
        let scan = monomial_rees_scan(&ring, level, &bounds).unwrap();
        let max_mu = scan.visited.iter().map(|s| s.mu).max().unwrap_or(0);
        c.check(
            scan.witness.is_none() && max_mu < mu_power,
            format!(
                "level {level}: {} candidates, best enlargement μ = {max_mu} < {mu_power} = μ(m^{level})",
                scan.visited.len()
            ),
        );
    }
    c.finish(9, "regular-model maxima are powers")
}

/// Runs all batteries in order.
pub fn run_all() -> Vec<FixtureReport> {
    vec![
        power_series_replay(),
        triple_family_thresholds(),
        certified_cone_scans(),
        curve_gap_fixtures(),
        ordinary_points(),
        lattice_gap_fixtures(),
        hypersurface_constants(),
        oracle_equivalence(),
        regular_model_scan(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_names_and_ids_are_stable() {
        let all = run_all();
        assert_eq!(all.len(), 9);
        for (i, r) in all.iter().enumerate() {
            assert_eq!(r.id as usize, i + 1);
            assert!(!r.details.is_empty());
        }
    }
}
