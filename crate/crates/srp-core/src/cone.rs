//! Tangent cone analysis of k\[H\] and k[[s, t^H]] through the order
//! function.
//!
//! The associated graded ring of k\[H\] is Cohen-Macaulay exactly when
//! the initial form of t^{n₁} is a nonzerodivisor, which reduces to
//! the arithmetic criterion ord(h + n₁) = ord(h) + 1 for every h ∈ H.
//! The surface ring k[[s, t^H]] adds a polynomial variable to the
//! graded ring (the initial form of s is regular), so its graded depth
//! is the curve's plus one.

use alloc::vec::Vec;
use core::fmt;

use crate::semigroup::NumericalSemigroup;

/// Errors from bounded tangent-cone scans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeError {
    /// The requested scan bound cannot even see the Frobenius window.
    LimitTooSmall {
        /// Bound that was requested.
        given: u64,
        /// Least acceptable bound.
        least: u64,
    },
}

impl fmt::Display for ConeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConeError::LimitTooSmall { given, least } => {
                write!(f, "scan bound {given} is below the least useful bound {least}")
            }
        }
    }
}

impl core::error::Error for ConeError {}

/// Outcome of the bounded Cohen-Macaulay scan.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct TangentConeReport {
    /// Every h ∈ H up to this bound was checked.
    pub checked_up_to: u64,
    /// Smallest h ∈ H with ord(h + n₁) ≥ ord(h) + 2, if one exists in
    /// range. Its presence disproves Cohen-Macaulayness outright.
    pub first_violation: Option<u64>,
    /// Depth of the associated graded ring of the curve k\[H\] as
    /// witnessed by the scan: 1 when no violation was found, else 0.
    pub graded_depth_curve: u32,
    /// Depth of the associated graded ring of k[[s, t^H]]: curve + 1.
    pub graded_depth_surface: u32,
}

impl TangentConeReport {
    /// No violation up to the scan bound. A violation anywhere refutes
    /// Cohen-Macaulayness; absence certifies it as far as checked.
    pub fn is_cm(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Default scan bound: the Frobenius window plus a wide margin.
pub fn default_cm_bound(h: &NumericalSemigroup) -> u64 {
    h.frobenius().max(0) as u64 + 50 * h.gens().last().unwrap()
}

/// Least scan bound accepted: past the Frobenius number by a full
/// multiplicity step, so every residue class is seen at least once.
pub fn least_cm_bound(h: &NumericalSemigroup) -> u64 {
    h.frobenius().max(0) as u64 + h.multiplicity() + 1
}

/// Bounded Cohen-Macaulay check for the tangent cone: scans every
/// element h ≤ limit for ord(h + n₁) ≥ ord(h) + 2 (the step is always
/// at least 1 by superadditivity). `None` uses [`default_cm_bound`].
pub fn tangent_cone_cm(
    h: &NumericalSemigroup,
    limit: Option<u64>,
) -> Result<TangentConeReport, ConeError> {
    let bound = limit.unwrap_or_else(|| default_cm_bound(h));
    let least = least_cm_bound(h);
    if bound < least {
        return Err(ConeError::LimitTooSmall { given: bound, least });
    }
    let n1 = h.multiplicity();
    let mut first_violation = None;
    for x in 0..=bound {
        if let Some(o) = h.ord(x) {
            let step = h.ord(x + n1).expect("closed under addition") - o;
            if step >= 2 {
                first_violation = Some(x);
                break;
            }
        }
    }
    let curve = u32::from(first_violation.is_none());
    Ok(TangentConeReport {
        checked_up_to: bound,
        first_violation,
        graded_depth_curve: curve,
        graded_depth_surface: curve + 1,
    })
}

/// c_k: number of semigroup elements of order exactly k. These are the
/// new minimal generators m^k contributes, so μ(m^ℓ) = Σ_{k≤ℓ} c_k;
/// the counts are eventually constant at n₁.
pub fn hilbert_slice(h: &NumericalSemigroup, k: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    let n_top = *h.gens().last().unwrap();
    // ord(x) = k forces x ≤ k·n_e.
    (0..=k * n_top)
        .filter(|&x| h.ord(x) == Some(k))
        .count() as u64
}

/// A monomial t^h whose initial form is killed by every generator's
/// initial form: ord(h) = degree and every ord(h + nᵢ) jumps by ≥ 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SocleEntry {
    /// ord(h): the graded degree of the entry.
    pub degree: u64,
    /// The semigroup element carrying it.
    pub elem: u64,
}

/// All socle entries of degree ≤ max_degree, ascending. The scan over
/// h ≤ max_degree·n_e is complete: larger elements have larger order.
pub fn socle_entries(h: &NumericalSemigroup, max_degree: u64) -> Vec<SocleEntry> {
    let n_top = *h.gens().last().unwrap();
    let mut out = Vec::new();
    for x in 0..=max_degree * n_top {
        let Some(o) = h.ord(x) else { continue };
        if o > max_degree {
            continue;
        }
        if h
            .gens()
            .iter()
            .all(|&g| h.ord(x + g).expect("closed under addition") >= o + 2)
        {
            out.push(SocleEntry { degree: o, elem: x });
        }
    }
    out.sort_unstable();
    out
}

/// Least degree of a socle entry of degree ≤ max_degree, if any.
pub fn min_socle_degree(h: &NumericalSemigroup, max_degree: u64) -> Option<u64> {
    socle_entries(h, max_degree).first().map(|e| e.degree)
}
