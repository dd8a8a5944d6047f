//! Structural invariants on a seeded corpus of random numerical
//! semigroups: Apéry bookkeeping, order superadditivity, generator
//! counts of powers, closure sandwiches, colon identities, and the
//! socle-versus-depth correspondence.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use srp_core::cone::{hilbert_slice, socle_entries, tangent_cone_cm};
use srp_core::ideal::{RingModel, StaircaseRing};
use srp_core::semigroup::NumericalSemigroup;
use srp_core::srp::{srp_threshold, SrpBounds};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn corpus(seed: u64, count: usize) -> Vec<NumericalSemigroup> {
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

#[test]
fn apery_genus_frobenius_are_coherent() {
    for h in corpus(0xA9E41, 50) {
        let m = h.multiplicity();
        let apery = h.apery_set(m).unwrap();
        assert_eq!(apery.len(), m as usize);
        assert!(apery.contains(&0));
        // One element per residue class.
        let mut classes: Vec<u64> = apery.iter().map(|w| w % m).collect();
        classes.sort_unstable();
        classes.dedup();
        assert_eq!(classes.len(), m as usize);
        // Gap census agrees with the cached genus and frobenius.
        let gaps = h.gaps();
        assert_eq!(gaps.len() as u64, h.genus());
        match gaps.last() {
            Some(&top) => assert_eq!(top as i64, h.frobenius()),
            None => assert_eq!(h.frobenius(), -1),
        }
        // Membership is settled past the frobenius number.
        let f = h.frobenius();
        for x in 0..=(f.max(0) as u64 + 2 * m) {
            let is_gap = gaps.binary_search(&x).is_ok();
            assert_eq!(h.contains(x), !is_gap);
            if x as i64 > f {
                assert!(h.contains(x));
            }
        }
    }
}

#[test]
fn order_is_superadditive() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0DD5);
    for h in corpus(0x0DD5, 50) {
        for _ in 0..20 {
            let x = rng.gen_range(0..=120u64);
            let y = rng.gen_range(0..=120u64);
            if let (Some(ox), Some(oy)) = (h.ord(x), h.ord(y)) {
                let oxy = h.ord(x + y).expect("semigroup is closed under +");
                assert!(oxy >= ox + oy, "ord({x}+{y}) over {:?}", h.gens());
            }
        }
    }
}

#[test]
fn power_generator_counts_match_the_slice_formula() {
    for h in corpus(0x51_1CE, 50) {
        let slices: Vec<u64> = (0..=4).map(|k| hilbert_slice(&h, k)).collect();
        let ring = StaircaseRing::new(h, RingModel::PowerSeries);
        for l in 1..=4u64 {
            let mu = ring.power_of_max(l).mu();
            let by_slices: u64 = slices[..=l as usize].iter().sum();
            assert_eq!(mu, by_slices, "level {l} of {:?}", ring.semigroup().gens());
        }
    }
}

#[test]
fn closures_sandwich_and_preserve_multiplicity() {
    for h in corpus(0xC105E, 50) {
        let ring = StaircaseRing::new(h, RingModel::PowerSeries);
        for l in [2u64, 3] {
            let i = ring.power_of_max(l);
            let rr = i.ratliff_rush(&ring, 6).unwrap();
            assert!(rr.stabilized);
            let ic = i.integral_closure(&ring).unwrap();
            // I ⊆ RR(I) ⊆ IC(I).
            assert!(rr.closure.contains_ideal(&ring, &i).unwrap());
            assert!(ic.contains_ideal(&ring, &rr.closure).unwrap());
            // Integral closure never changes the multiplicity, and for
            // powers of m that value is l²·n₁.
            let e = i.multiplicity(&ring).unwrap();
            assert_eq!(e, ic.multiplicity(&ring).unwrap());
            assert_eq!(e, l * l * ring.semigroup().multiplicity());
        }
    }
}

#[test]
fn colon_identities() {
    for h in corpus(0xC010, 30) {
        let ring = StaircaseRing::new(h, RingModel::PowerSeries);
        let m = ring.maximal_ideal();
        let i = ring.power_of_max(3);
        // x ∈ I ⟹ x·J ⊆ I, so I ⊆ (I : J).
        let q = i.colon(&ring, &m).unwrap();
        assert!(q.contains_ideal(&ring, &i).unwrap());
        // ((I : J) : K) = (I : JK).
        let lhs = i.colon(&ring, &m).unwrap().colon(&ring, &m).unwrap();
        let rhs = i.colon(&ring, &m.product(&ring, &m).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        // (mI : m) ⊇ I.
        let back = m.product(&ring, &i).unwrap().colon(&ring, &m).unwrap();
        assert!(back.contains_ideal(&ring, &i).unwrap());
    }
}

#[test]
fn socle_entries_and_depth_certificates_agree() {
    for h in corpus(0x50C1E, 50) {
        let cone = tangent_cone_cm(&h, None).unwrap();
        let entries = socle_entries(&h, 6);
        if cone.is_cm() {
            assert!(
                entries.is_empty(),
                "no order jumps, so no socle entries: {:?}",
                h.gens()
            );
        }
        if !entries.is_empty() {
            assert!(!cone.is_cm(), "socle entry is a depth obstruction");
        }
        // Entries really jump at every generator.
        for entry in &entries {
            assert_eq!(h.ord(entry.elem), Some(entry.degree));
            for &g in h.gens() {
                let o = h.ord(entry.elem + g).expect("closed under +");
                assert!(o >= entry.degree + 2);
            }
        }
    }
}

#[test]
fn thresholds_are_internally_consistent() {
    for h in corpus(0x7812E5, 12) {
        let ring = StaircaseRing::new(h, RingModel::PowerSeries);
        let report = srp_threshold(&ring, 5, &SrpBounds::default()).unwrap();
        assert!(report.holds_through >= 1);
        if report.cone_certified {
            assert!(report.rows.iter().all(|r| r.verdict.is_holds()));
            assert_eq!(report.first_failure, None);
        }
        if let Some(first) = report.first_failure {
            assert!(report.rows.iter().all(|r| if r.level < first {
                r.verdict.is_holds()
            } else {
                r.verdict.is_fails()
            }));
        }
    }
}
