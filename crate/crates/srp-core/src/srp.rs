//! Verdicts on the strong Rees property of powers of the maximal
//! ideal, plus generator-count/multiplicity gap tables.
//!
//! m^ℓ has the strong Rees property when every strictly larger ideal
//! needs strictly fewer generators. The pipeline per level:
//!
//! 1. If the tangent cone is Cohen-Macaulay (bounded scan), the
//!    property holds at every level.
//! 2. Otherwise search socle entries of degree < ℓ. None: the property
//!    holds at ℓ. The smallest entry (d, h₀) otherwise lifts to the
//!    witness J = m^ℓ + s^{ℓ-1-d} t^{h₀}, which keeps μ constant:
//!    the added monomial absorbs exactly one minimal generator, since
//!    every generator jump from h₀ skips two degrees.
//! 3. A direct monomial scan over small candidates is the fallback
//!    falsifier; exhausting it leaves the level undecided.
//!
//! Failures propagate upward: s·J + m^{ℓ+1} is a witness one level up
//! whenever m·J = s·J + m^{ℓ+1}, which the lifted witnesses satisfy.

use alloc::vec::Vec;
use core::fmt;

use crate::cone::{socle_entries, tangent_cone_cm, ConeError, TangentConeReport};
use crate::ideal::{IdealError, Monomial, RingModel, StaircaseIdeal, StaircaseRing};
use crate::semigroup::NumericalSemigroup;

/// Errors from the verdict pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SrpError {
    /// Underlying ideal arithmetic failed.
    Ideal(IdealError),
    /// Underlying tangent-cone scan failed.
    Cone(ConeError),
    /// Levels start at 1; m^0 is the whole ring.
    InvalidLevel,
    /// A failure witness coexists with a Cohen-Macaulay tangent cone,
    /// which the depth bound forbids. Engine bug, never user input.
    InternalContradiction {
        /// Level whose verdict clashes with the cone certificate.
        level: u64,
    },
    /// A level after a failed one did not fail. Failures propagate
    /// upward, so this is an engine bug, never user input.
    NonMonotoneVerdicts {
        /// First level breaking the pattern.
        level: u64,
    },
    /// The lifted witness did not verify one level up.
    PropagationFailed {
        /// Target level of the lift.
        level: u64,
    },
}

impl fmt::Display for SrpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrpError::Ideal(e) => write!(f, "{e}"),
            SrpError::Cone(e) => write!(f, "{e}"),
            SrpError::InvalidLevel => write!(f, "level must be at least 1"),
            SrpError::InternalContradiction { level } => write!(
                f,
                "internal contradiction at level {level}: failure witness under a Cohen-Macaulay tangent cone"
            ),
            SrpError::NonMonotoneVerdicts { level } => write!(
                f,
                "internal contradiction at level {level}: non-failure after a failed level"
            ),
            SrpError::PropagationFailed { level } => {
                write!(f, "witness did not lift to level {level}")
            }
        }
    }
}

impl core::error::Error for SrpError {}

impl From<IdealError> for SrpError {
    fn from(e: IdealError) -> Self {
        SrpError::Ideal(e)
    }
}

impl From<ConeError> for SrpError {
    fn from(e: ConeError) -> Self {
        SrpError::Cone(e)
    }
}

/// Optional overrides for the bounded searches.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SrpBounds {
    /// Tangent-cone scan bound; None picks the wide default.
    pub cone_limit: Option<u64>,
    /// Monomial scan: cap on the s-exponent; None scans a ≤ ℓ.
    pub scan_max_a: Option<u64>,
    /// Monomial scan: cap on the t-exponent; None scans
    /// h ≤ ℓ·n_e + max(F, 0) + 1.
    pub scan_max_h: Option<u64>,
}

/// Why a level holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum HoldsReason {
    /// The tangent cone is Cohen-Macaulay as far as scanned, which
    /// settles every level at once.
    ConeCmCertified {
        /// Scan bound the certificate rests on.
        checked_up_to: u64,
    },
    /// No socle entry of degree below the level exists.
    SocleGap {
        /// All degrees ≤ this were scanned.
        scanned_degree: u64,
    },
}

/// Why a level is undecided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum UnknownReason {
    /// The monomial scan box was exhausted without a witness.
    ScanExhausted {
        /// Number of candidates tried.
        candidates_tried: u64,
    },
}

/// How a failure witness was found.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum WitnessKind {
    /// Lifted from a socle entry: the added monomial s^{ℓ-1-d} t^{h₀}
    /// keeps the generator count of m^ℓ.
    SocleJump {
        /// Semigroup element of the socle entry.
        elem: u64,
        /// Degree d = ord(h₀) of the entry.
        entry_degree: u64,
    },
    /// Found by the direct monomial scan.
    MonomialScan,
    /// Propagated level by level via J ↦ s·J + m^{ℓ+1}.
    Lifted {
        /// First failing level the chain of lifts started from.
        from_level: u64,
    },
}

/// An ideal strictly above m^ℓ with at least as many generators.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SrpWitness {
    /// How the witness was found.
    pub kind: WitnessKind,
    /// Minimal generators of the witness not already in m^ℓ.
    pub added: Vec<Monomial>,
    /// μ of the witness ideal.
    pub mu_witness: u64,
    /// μ(m^ℓ) it is measured against.
    pub mu_power: u64,
}

/// Verdict for one level.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SrpVerdict {
    /// Every ideal strictly above m^ℓ needs strictly fewer generators.
    Holds(HoldsReason),
    /// A witness ideal breaks the property.
    Fails(SrpWitness),
    /// Bounded searches were inconclusive.
    Unknown(UnknownReason),
}

impl SrpVerdict {
    /// Convenience discriminant tests.
    pub fn is_holds(&self) -> bool {
        matches!(self, SrpVerdict::Holds(_))
    }
    /// See [`SrpVerdict::is_holds`].
    pub fn is_fails(&self) -> bool {
        matches!(self, SrpVerdict::Fails(_))
    }
}

/// Verdict plus per-level bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SrpRow {
    /// Power of the maximal ideal under test.
    pub level: u64,
    /// Outcome.
    pub verdict: SrpVerdict,
    /// μ(m^ℓ).
    pub mu_power: u64,
    /// Whether m^ℓ is provably Ratliff-Rush closed.
    pub rr_closed: bool,
}

/// One sampled candidate of the monomial scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScanSample {
    /// Monomial adjoined to m^ℓ.
    pub added: Monomial,
    /// μ(m^ℓ + added).
    pub mu: u64,
}

/// Result of the monomial scan at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanOutcome {
    /// Witness, if some visited ideal reached μ(m^ℓ).
    pub witness: Option<SrpWitness>,
    /// All single-monomial samples, in candidate order (truncated at
    /// the first single-monomial witness).
    pub visited: Vec<ScanSample>,
}

fn s_ideal(ring: &StaircaseRing) -> StaircaseIdeal {
    ring.ideal(&[Monomial::new(1, 0)]).expect("s is always valid")
}

/// Whether m^ℓ is Ratliff-Rush closed, by running the colon chain and
/// demanding a certified stabilization back at m^ℓ.
fn rr_closed_power(ring: &StaircaseRing, ml: &StaircaseIdeal) -> Result<bool, SrpError> {
    let out = ml.ratliff_rush(ring, 4)?;
    Ok(out.stabilized && out.closure == *ml && out.certificate.is_some())
}

/// Verdict for a single level. The tangent-cone report is computed
/// per call; [`srp_threshold`] shares one across levels.
pub fn srp_verdict(
    ring: &StaircaseRing,
    level: u64,
    bounds: &SrpBounds,
) -> Result<SrpRow, SrpError> {
    let cone = tangent_cone_cm(ring.semigroup(), bounds.cone_limit)?;
    srp_verdict_with_cone(ring, level, bounds, &cone)
}

fn srp_verdict_with_cone(
    ring: &StaircaseRing,
    level: u64,
    bounds: &SrpBounds,
    cone: &TangentConeReport,
) -> Result<SrpRow, SrpError> {
    if level == 0 {
        return Err(SrpError::InvalidLevel);
    }
    let ml = ring.power_of_max(level);
    let mu_power = ml.mu();
    let rr_closed = rr_closed_power(ring, &ml)?;

    if cone.is_cm() {
        return Ok(SrpRow {
            level,
            verdict: SrpVerdict::Holds(HoldsReason::ConeCmCertified {
                checked_up_to: cone.checked_up_to,
            }),
            mu_power,
            rr_closed,
        });
    }

    let entries = socle_entries(ring.semigroup(), level - 1);
    let Some(first) = entries.first().copied() else {
        return Ok(SrpRow {
            level,
            verdict: SrpVerdict::Holds(HoldsReason::SocleGap {
                scanned_degree: level - 1,
            }),
            mu_power,
            rr_closed,
        });
    };

    // Lift the socle entry: a + ord(h₀) = ℓ - 1, so the monomial sits
    // just outside m^ℓ; it absorbs exactly the generator s·(that), as
    // any other absorbed generator would force ord(h₀ + nᵢ) = d + 1
    // against the entry's jump property.
    let added = Monomial::new(level - 1 - first.degree, first.elem);
    let j = ml.sum(ring, &ring.ideal(&[added])?)?;
    debug_assert!(!ml.contains_monomial(ring, added)?);
    let mu_witness = j.mu();
    if mu_witness >= mu_power {
        debug_assert_eq!(mu_witness, mu_power);
        return Ok(SrpRow {
            level,
            verdict: SrpVerdict::Fails(SrpWitness {
                kind: WitnessKind::SocleJump {
                    elem: first.elem,
                    entry_degree: first.degree,
                },
                added: alloc::vec![added],
                mu_witness,
                mu_power,
            }),
            mu_power,
            rr_closed,
        });
    }

    // Unreachable in theory; fall through to the scan honestly.
    let scan = monomial_rees_scan(ring, level, bounds)?;
    let candidates_tried = scan.visited.len() as u64;
    Ok(SrpRow {
        level,
        verdict: match scan.witness {
            Some(w) => SrpVerdict::Fails(w),
            None => SrpVerdict::Unknown(UnknownReason::ScanExhausted { candidates_tried }),
        },
        mu_power,
        rr_closed,
    })
}

/// Direct falsification scan at one level: adjoin single monomials
/// just outside m^ℓ from a bounded box, then greedily grow the best
/// candidate while μ does not drop. A witness is any visited ideal
/// with μ ≥ μ(m^ℓ).
pub fn monomial_rees_scan(
    ring: &StaircaseRing,
    level: u64,
    bounds: &SrpBounds,
) -> Result<ScanOutcome, SrpError> {
    if level == 0 {
        return Err(SrpError::InvalidLevel);
    }
    let sg = ring.semigroup();
    let n_top = *sg.gens().last().unwrap();
    let max_a = bounds.scan_max_a.unwrap_or(level);
    let max_h = bounds
        .scan_max_h
        .unwrap_or(level * n_top + sg.frobenius().max(0) as u64 + 1);
    let ml = ring.power_of_max(level);
    let mu_power = ml.mu();

    let mut candidates: Vec<Monomial> = Vec::new();
    for a in 0..=max_a {
        for h in 0..=max_h {
            if !sg.contains(h) {
                continue;
            }
            let x = Monomial::new(a, h);
            if !ml.contains_monomial(ring, x)? {
                candidates.push(x);
            }
        }
    }
    candidates.sort_unstable();

    let mut visited = Vec::with_capacity(candidates.len());
    let mut best: Option<(u64, Monomial)> = None;
    for &x in &candidates {
        let j = ml.sum(ring, &ring.ideal(&[x])?)?;
        let mu = j.mu();
        visited.push(ScanSample { added: x, mu });
        if mu >= mu_power {
            return Ok(ScanOutcome {
                witness: Some(SrpWitness {
                    kind: WitnessKind::MonomialScan,
                    added: alloc::vec![x],
                    mu_witness: mu,
                    mu_power,
                }),
                visited,
            });
        }
        if best.is_none_or(|(b, _)| mu > b) {
            best = Some((mu, x));
        }
    }

    // Greedy climb from the best single addition.
    if let Some((_, seed)) = best {
        let mut added = alloc::vec![seed];
        let mut j = ml.sum(ring, &ring.ideal(&[seed])?)?;
        let mut mu = j.mu();
        for &x in &candidates {
            if x == seed || j.contains_monomial(ring, x)? {
                continue;
            }
            let grown = j.sum(ring, &ring.ideal(&[x])?)?;
            let grown_mu = grown.mu();
            if grown_mu >= mu {
                j = grown;
                mu = grown_mu;
                added.push(x);
                if mu >= mu_power {
                    return Ok(ScanOutcome {
                        witness: Some(SrpWitness {
                            kind: WitnessKind::MonomialScan,
                            added,
                            mu_witness: mu,
                            mu_power,
                        }),
                        visited,
                    });
                }
            }
        }
    }

    Ok(ScanOutcome {
        witness: None,
        visited,
    })
}

/// Lifts a failure witness one level up: J' = s·J + m^{ℓ+1}.
///
/// Sound when m·J = s·J + m^{ℓ+1} (each t^{nᵢ}·J lands in m^{ℓ+1}):
/// then J'/m^{ℓ+1} mirrors J/m^ℓ and μ is preserved. Both the
/// precondition and the conclusion (strict containment, μ ≥) are
/// checked; any miss reports failure instead of an unsound verdict.
pub fn propagate_failure(
    ring: &StaircaseRing,
    witness: &StaircaseIdeal,
    level: u64,
) -> Result<StaircaseIdeal, SrpError> {
    let next = level + 1;
    let m_next = ring.power_of_max(next);
    let s = s_ideal(ring);
    let lifted = s.product(ring, witness)?.sum(ring, &m_next)?;

    let m = ring.maximal_ideal();
    if m.product(ring, witness)? != lifted {
        return Err(SrpError::PropagationFailed { level: next });
    }
    let strict = lifted.contains_ideal(ring, &m_next)? && lifted != m_next;
    if !strict || lifted.mu() < m_next.mu() {
        return Err(SrpError::PropagationFailed { level: next });
    }
    Ok(lifted)
}

/// Report over levels 1..=max_level.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SrpThresholdReport {
    /// Per-level verdicts, level ascending from 1.
    pub rows: Vec<SrpRow>,
    /// Largest ℓ with all levels up to it holding (0 when level 1
    /// already does not hold).
    pub holds_through: u64,
    /// First failing level, if any.
    pub first_failure: Option<u64>,
    /// Whether the tangent cone scan certified Cohen-Macaulayness.
    pub cone_certified: bool,
}

/// Validates the structural shape of a verdict sequence: failures are
/// final, nothing holds after a non-holding level, and no failure may
/// coexist with a Cohen-Macaulay cone certificate.
pub fn validate_verdict_rows(cone_certified: bool, rows: &[SrpRow]) -> Result<(), SrpError> {
    let mut seen_fail = false;
    let mut seen_non_holds = false;
    for row in rows {
        if cone_certified && row.verdict.is_fails() {
            return Err(SrpError::InternalContradiction { level: row.level });
        }
        if seen_fail && !row.verdict.is_fails() {
            return Err(SrpError::NonMonotoneVerdicts { level: row.level });
        }
        if seen_non_holds && row.verdict.is_holds() {
            return Err(SrpError::NonMonotoneVerdicts { level: row.level });
        }
        seen_fail |= row.verdict.is_fails();
        seen_non_holds |= !row.verdict.is_holds();
    }
    Ok(())
}

/// Runs the verdict pipeline over levels 1..=max_level, propagating
/// the first failure upward instead of re-searching.
pub fn srp_threshold(
    ring: &StaircaseRing,
    max_level: u64,
    bounds: &SrpBounds,
) -> Result<SrpThresholdReport, SrpError> {
    if max_level == 0 {
        return Err(SrpError::InvalidLevel);
    }
    let cone = tangent_cone_cm(ring.semigroup(), bounds.cone_limit)?;
    let mut rows: Vec<SrpRow> = Vec::with_capacity(max_level as usize);
    let mut carried: Option<(u64, StaircaseIdeal)> = None;

    for level in 1..=max_level {
        let row = match &carried {
            Some((from, witness)) => {
                let lifted = propagate_failure(ring, witness, level - 1)?;
                let m_next = ring.power_of_max(level);
                let added: Vec<Monomial> = lifted
                    .gens()
                    .iter()
                    .copied()
                    .filter(|g| !m_next.gens().contains(g))
                    .collect();
                let row = SrpRow {
                    level,
                    verdict: SrpVerdict::Fails(SrpWitness {
                        kind: WitnessKind::Lifted { from_level: *from },
                        added,
                        mu_witness: lifted.mu(),
                        mu_power: m_next.mu(),
                    }),
                    mu_power: m_next.mu(),
                    rr_closed: rr_closed_power(ring, &m_next)?,
                };
                carried = Some((*from, lifted));
                row
            }
            None => {
                let row = srp_verdict_with_cone(ring, level, bounds, &cone)?;
                if let SrpVerdict::Fails(w) = &row.verdict {
                    let ml = ring.power_of_max(level);
                    let witness = ml.sum(ring, &ring.ideal(&w.added)?)?;
                    carried = Some((level, witness));
                }
                row
            }
        };
        rows.push(row);
    }

    validate_verdict_rows(cone.is_cm(), &rows)?;
    let holds_through = rows
        .iter()
        .take_while(|r| r.verdict.is_holds())
        .last()
        .map_or(0, |r| r.level);
    let first_failure = rows.iter().find(|r| r.verdict.is_fails()).map(|r| r.level);
    Ok(SrpThresholdReport {
        rows,
        holds_through,
        first_failure,
        cone_certified: cone.is_cm(),
    })
}

/// Generator-count/multiplicity gaps of one m-primary ideal:
/// forward (μ-1)·ℓℓ - e and reverse e - (μ-1)·ord. No sign is
/// asserted here; the curve-side table only reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DaoReport {
    /// Minimal number of generators.
    pub mu: u64,
    /// Hilbert-Samuel multiplicity.
    pub multiplicity: u64,
    /// Loewy length: least r with m^r inside the ideal.
    pub loewy_length: u64,
    /// Order: largest ℓ with the ideal inside m^ℓ.
    pub order: u64,
    /// (μ-1)·loewy - e.
    pub forward_gap: i64,
    /// e - (μ-1)·order.
    pub reverse_gap: i64,
}

/// Gap report for one m-primary ideal (power-series model).
pub fn dao_check(ring: &StaircaseRing, ideal: &StaircaseIdeal) -> Result<DaoReport, SrpError> {
    let mu = ideal.mu();
    let multiplicity = ideal.multiplicity(ring)?;
    let loewy_length = ideal.loewy_length(ring)?;
    let order = ideal.order(ring)?;
    let spread = |w: u64| -> i64 {
        i64::try_from((mu as i128 - 1) * w as i128).expect("gap fits i64")
    };
    Ok(DaoReport {
        mu,
        multiplicity,
        loewy_length,
        order,
        forward_gap: spread(loewy_length) - multiplicity as i64,
        reverse_gap: multiplicity as i64 - spread(order),
    })
}

/// One row per power of m, levels 1..=max_level.
pub fn dao_power_table(
    ring: &StaircaseRing,
    max_level: u64,
) -> Result<Vec<(u64, DaoReport)>, SrpError> {
    (1..=max_level)
        .map(|l| Ok((l, dao_check(ring, &ring.power_of_max(l))?)))
        .collect()
}

/// Whether the ring has maximal embedding dimension: μ(m) = e(m) + 1,
/// equivalently the semigroup needs as many generators as its
/// multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MedReport {
    /// μ(m) = 1 + number of semigroup generators.
    pub mu_m: u64,
    /// e(m) = multiplicity of the semigroup.
    pub e_m: u64,
    /// μ(m) = e(m) + 1.
    pub holds: bool,
}

/// Maximal-embedding-dimension test at the semigroup level.
pub fn med_check(h: &NumericalSemigroup) -> MedReport {
    let mu_m = 1 + h.embedding_dim() as u64;
    let e_m = h.multiplicity();
    MedReport {
        mu_m,
        e_m,
        holds: mu_m == e_m + 1,
    }
}

/// Structural checks for the ordinary-point family: H = ⟨g+1, …, 2g+1⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OrdinaryPointReport {
    /// Genus g of the family member.
    pub genus: u64,
    /// Levels 1..=this were verified.
    pub levels_checked: u64,
    /// ord(h) = ⌊h/(g+1)⌋ on the scanned range.
    pub ord_formula_ok: bool,
    /// μ(m^n) = 1 + n(g+1) for each checked level.
    pub mu_formula_ok: bool,
    /// (s, t^{g+1})·m^n = m^{n+1} for each checked level.
    pub reduction_product_ok: bool,
    /// The tangent cone is Cohen-Macaulay (scanned), so the strong
    /// Rees property holds at every level.
    pub cone_cm: bool,
    /// Maximal embedding dimension report (always holds here).
    pub med: MedReport,
}

/// Verifies the closed-form behavior of the ordinary-point family:
/// consecutive generators g+1, …, 2g+1, order function ⌊h/(g+1)⌋,
/// linear μ growth, and the two-generated reduction (s, t^{g+1}).
pub fn ordinary_point_check(genus: u64, levels: u64) -> Result<OrdinaryPointReport, SrpError> {
    let gens: Vec<u64> = (genus + 1..=2 * genus + 1).collect();
    let h = NumericalSemigroup::new(&gens).expect("consecutive run has gcd 1");
    let ring = StaircaseRing::new(h, RingModel::PowerSeries);
    let sg = ring.semigroup();
    let g1 = genus + 1;

    let scan_top = levels * (2 * genus + 1) + genus + 2;
    let ord_formula_ok = (0..=scan_top).all(|x| {
        let expected = if x == 0 {
            Some(0)
        } else if x >= g1 {
            Some(x / g1)
        } else {
            None
        };
        sg.ord(x) == expected
    });

    let mut mu_formula_ok = true;
    let mut reduction_product_ok = true;
    let q = ring.ideal(&[Monomial::new(1, 0), Monomial::new(0, g1)])?;
    for n in 1..=levels {
        let mn = ring.power_of_max(n);
        mu_formula_ok &= mn.mu() == 1 + n * g1;
        reduction_product_ok &= q.product(&ring, &mn)? == ring.power_of_max(n + 1);
    }

    let cone_cm = tangent_cone_cm(sg, None)?.is_cm();
    Ok(OrdinaryPointReport {
        genus,
        levels_checked: levels,
        ord_formula_ok,
        mu_formula_ok,
        reduction_product_ok,
        cone_cm,
        med: med_check(sg),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ring(gens: &[u64]) -> StaircaseRing {
        StaircaseRing::new(NumericalSemigroup::new(gens).unwrap(), RingModel::PowerSeries)
    }

    #[test]
    fn level_one_always_holds() {
        for gens in [&[4u64, 5, 11][..], &[3, 4, 5], &[10, 11, 79], &[1]] {
            let r = ring(gens);
            let row = srp_verdict(&r, 1, &SrpBounds::default()).unwrap();
            assert!(row.verdict.is_holds(), "{gens:?}");
        }
    }

    #[test]
    fn verdicts_4_5_11() {
        let r = ring(&[4, 5, 11]);
        let b = SrpBounds::default();
        let row1 = srp_verdict(&r, 1, &b).unwrap();
        assert_eq!(
            row1.verdict,
            SrpVerdict::Holds(HoldsReason::SocleGap { scanned_degree: 0 })
        );
        assert!(row1.rr_closed);

        let row2 = srp_verdict(&r, 2, &b).unwrap();
        let SrpVerdict::Fails(w) = &row2.verdict else {
            panic!("level 2 must fail");
        };
        assert_eq!(
            w.kind,
            WitnessKind::SocleJump { elem: 11, entry_degree: 1 }
        );
        assert_eq!(w.added, vec![Monomial::new(0, 11)]);
        assert_eq!((w.mu_witness, w.mu_power), (7, 7));

        let row3 = srp_verdict(&r, 3, &b).unwrap();
        let SrpVerdict::Fails(w) = &row3.verdict else {
            panic!("level 3 must fail");
        };
        assert_eq!(w.added, vec![Monomial::new(1, 11)]);
        assert_eq!((w.mu_witness, w.mu_power), (11, 11));
    }

    #[test]
    fn threshold_4_5_11() {
        let r = ring(&[4, 5, 11]);
        let rep = srp_threshold(&r, 4, &SrpBounds::default()).unwrap();
        assert_eq!(rep.holds_through, 1);
        assert_eq!(rep.first_failure, Some(2));
        assert!(!rep.cone_certified);
        assert_eq!(rep.rows.len(), 4);
        assert!(rep.rows[0].verdict.is_holds());
        for row in &rep.rows[1..] {
            assert!(row.verdict.is_fails());
            assert!(row.rr_closed);
        }
        // Propagation is used past the first failure and reproduces
        // the direct witnesses.
        let SrpVerdict::Fails(w3) = &rep.rows[2].verdict else {
            panic!()
        };
        assert_eq!(w3.kind, WitnessKind::Lifted { from_level: 2 });
        assert_eq!(w3.added, vec![Monomial::new(1, 11)]);
        let SrpVerdict::Fails(w4) = &rep.rows[3].verdict else {
            panic!()
        };
        assert_eq!(w4.added, vec![Monomial::new(2, 11)]);
    }

    #[test]
    fn threshold_cm_examples_hold_everywhere() {
        for gens in [&[3u64, 4, 5][..], &[2, 3], &[1]] {
            let r = ring(gens);
            let rep = srp_threshold(&r, 5, &SrpBounds::default()).unwrap();
            assert!(rep.cone_certified, "{gens:?}");
            assert_eq!(rep.holds_through, 5);
            assert_eq!(rep.first_failure, None);
            assert!(rep
                .rows
                .iter()
                .all(|r| matches!(r.verdict, SrpVerdict::Holds(HoldsReason::ConeCmCertified { .. }))));
        }
    }

    #[test]
    fn threshold_triple_family_10_11_79() {
        let r = ring(&[10, 11, 79]);
        let rep = srp_threshold(&r, 4, &SrpBounds::default()).unwrap();
        assert_eq!(rep.holds_through, 2);
        assert_eq!(rep.first_failure, Some(3));
        let SrpVerdict::Fails(w) = &rep.rows[2].verdict else {
            panic!()
        };
        assert_eq!(
            w.kind,
            WitnessKind::SocleJump { elem: 89, entry_degree: 2 }
        );
    }

    #[test]
    fn scan_finds_the_socle_witness_directly() {
        let r = ring(&[4, 5, 11]);
        let out = monomial_rees_scan(&r, 2, &SrpBounds::default()).unwrap();
        let w = out.witness.expect("level 2 witness");
        assert_eq!(w.added, vec![Monomial::new(0, 11)]);
        assert_eq!(w.mu_witness, 7);
    }

    #[test]
    fn scan_on_naturals_sees_only_smaller_mu() {
        // k[[s, t]]: every ideal above m^ℓ is a staircase with at most
        // ℓ corners, so the scan must come back empty-handed and the
        // single additions realize μ = κ+1 for a+h = κ.
        let r = ring(&[1]);
        let out = monomial_rees_scan(&r, 3, &SrpBounds::default()).unwrap();
        assert!(out.witness.is_none());
        assert!(!out.visited.is_empty());
        for s in &out.visited {
            assert_eq!(s.mu, s.added.a + s.added.h + 1);
            assert!(s.mu < 4);
        }
    }

    #[test]
    fn propagation_rejects_non_witnesses() {
        let r = ring(&[4, 5, 11]);
        // m² itself is not strictly above m², so the lift must refuse.
        let m2 = r.power_of_max(2);
        assert_eq!(
            propagate_failure(&r, &m2, 2),
            Err(SrpError::PropagationFailed { level: 3 })
        );
    }

    #[test]
    fn propagation_lifts_the_level_two_witness() {
        let r = ring(&[4, 5, 11]);
        let m2 = r.power_of_max(2);
        let j = m2
            .sum(&r, &r.ideal(&[Monomial::new(0, 11)]).unwrap())
            .unwrap();
        let lifted = propagate_failure(&r, &j, 2).unwrap();
        let expected = r
            .power_of_max(3)
            .sum(&r, &r.ideal(&[Monomial::new(1, 11)]).unwrap())
            .unwrap();
        assert_eq!(lifted, expected);
        assert_eq!(lifted.mu(), 11);
    }

    #[test]
    fn row_validation_tripwires() {
        let holds = SrpRow {
            level: 1,
            verdict: SrpVerdict::Holds(HoldsReason::SocleGap { scanned_degree: 0 }),
            mu_power: 4,
            rr_closed: true,
        };
        let fails = SrpRow {
            level: 2,
            verdict: SrpVerdict::Fails(SrpWitness {
                kind: WitnessKind::MonomialScan,
                added: vec![Monomial::new(0, 11)],
                mu_witness: 7,
                mu_power: 7,
            }),
            mu_power: 7,
            rr_closed: true,
        };
        let mut holds3 = holds.clone();
        holds3.level = 3;

        // Well-formed: holds then fails.
        assert!(validate_verdict_rows(false, &[holds.clone(), fails.clone()]).is_ok());
        // A failure under a CM certificate is contradictory.
        assert_eq!(
            validate_verdict_rows(true, &[holds.clone(), fails.clone()]),
            Err(SrpError::InternalContradiction { level: 2 })
        );
        // Holding again after a failure is contradictory.
        assert_eq!(
            validate_verdict_rows(false, &[holds, fails, holds3]),
            Err(SrpError::NonMonotoneVerdicts { level: 3 })
        );
    }

    #[test]
    fn dao_gaps_for_powers_4_5_11() {
        let r = ring(&[4, 5, 11]);
        let table = dao_power_table(&r, 5).unwrap();
        for (l, rep) in &table {
            assert_eq!(rep.multiplicity, 4 * l * l);
            assert_eq!(rep.loewy_length, *l);
            assert_eq!(rep.order, *l);
            // Closed form for the forward gap of powers.
            let mu = r.power_of_max(*l).mu() as i64;
            assert_eq!(rep.forward_gap, (mu - 1) * *l as i64 - (4 * l * l) as i64);
            // The multiplicity inequality at the curve level:
            // c_k ≤ n₁ gives μ - 1 ≤ ℓ·n₁, so e dominates.
            assert!(rep.reverse_gap >= 0);
        }
        assert_eq!(table[0].1.mu, 4);
        assert_eq!(table[1].1.mu, 7);
    }

    #[test]
    fn med_examples() {
        assert!(med_check(&NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap()).holds);
        assert!(med_check(&NumericalSemigroup::new(&[1]).unwrap()).holds);
        assert!(med_check(&NumericalSemigroup::new(&[2, 3]).unwrap()).holds);
        assert!(!med_check(&NumericalSemigroup::new(&[4, 5, 11]).unwrap()).holds);
        assert!(!med_check(&NumericalSemigroup::new(&[3, 7]).unwrap()).holds);
    }

    #[test]
    fn ordinary_points_check_out() {
        for g in 0..=4 {
            let rep = ordinary_point_check(g, 4).unwrap();
            assert!(rep.ord_formula_ok, "g = {g}");
            assert!(rep.mu_formula_ok, "g = {g}");
            assert!(rep.reduction_product_ok, "g = {g}");
            assert!(rep.cone_cm, "g = {g}");
            assert!(rep.med.holds, "g = {g}");
        }
    }
}
