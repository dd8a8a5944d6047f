//! Generator counts of powers of the maximal ideal in a degree-n
//! hypersurface ring of dimension d whose tangent cone is a degree-n
//! hypersurface too (e.g. a diagonal form x₀ⁿ + … + x_dⁿ).
//!
//! The associated graded ring is k[x₀..x_d]/(f) with f of degree n, so
//!
//!   μ(mˢ) = C(s+d, d) - C(s+d-n, d),   e(mˢ) = n·sᵈ,
//!
//! and both the Loewy length and the order of mˢ equal s. The module
//! tracks the exact correction constant
//!
//!   c(s) = e(mˢ)/((d-1)!·s) - μ(mˢ) + d - 1
//!
//! that a linear multiplicity-versus-generators bound would need at
//! level s, and scans its supremum. For d = 2 the constant stabilizes
//! at C(n-1, 2); for d ≥ 3 it can grow without bound (for the cubic
//! threefold it is identically zero, for the quintic threefold it is
//! (5/2)s - 3).

use core::fmt;
use num_rational::Ratio;

/// Largest supported ring dimension (keeps n·sᵈ inside u128/i128).
pub const MAX_DIM: u32 = 6;
/// Largest supported hypersurface degree.
pub const MAX_DEGREE: u64 = 1 << 20;
/// Largest supported scan endpoint.
pub const MAX_SCAN: u64 = 1 << 20;

/// Errors from hypersurface computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HyperError {
    /// Dimension outside 1..=MAX_DIM.
    DimensionOutOfRange {
        /// Dimension supplied.
        got: u32,
    },
    /// Degree outside 2..=MAX_DEGREE.
    DegreeOutOfRange {
        /// Degree supplied.
        got: u64,
    },
    /// The correction constant divides by s, so level 0 is undefined.
    ZeroLevel,
    /// Scan endpoint outside 1..=MAX_SCAN.
    ScanTooLarge {
        /// Endpoint supplied.
        got: u64,
    },
}

impl fmt::Display for HyperError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HyperError::DimensionOutOfRange { got } => {
                write!(f, "dimension {got} outside 1..={MAX_DIM}")
            }
            HyperError::DegreeOutOfRange { got } => {
                write!(f, "degree {got} outside 2..={MAX_DEGREE}")
            }
            HyperError::ZeroLevel => write!(f, "level must be at least 1"),
            HyperError::ScanTooLarge { got } => {
                write!(f, "scan endpoint {got} outside 1..={MAX_SCAN}")
            }
        }
    }
}

impl core::error::Error for HyperError {}

/// A degree-n hypersurface ring of dimension d with a degree-n
/// tangent cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HypersurfaceSpec {
    /// Krull dimension d (the ring has d+1 variables).
    pub dim: u32,
    /// Degree n of the defining equation, which is also e(m).
    pub degree: u64,
}

/// Result of scanning c(s) for s = 1..=s_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantScan {
    /// The ring scanned.
    pub spec: HypersurfaceSpec,
    /// Scan endpoint.
    pub s_max: u64,
    /// max c(s) over the scan.
    pub sup: Ratio<i128>,
    /// Smallest s attaining the supremum.
    pub argmax: u64,
    /// Whether c was strictly increasing over the whole second half of
    /// the scan — the signature of an unbounded constant.
    pub divergent: bool,
}

/// C(a, k) with C(a, k) = 0 for a < k, exact in u128.
fn binomial(a: u64, k: u32) -> u128 {
    let k = k as u64;
    if a < k {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 1..=k {
        // (a-k+i) keeps the running product an exact binomial.
        acc = acc
            .checked_mul((a - k + i) as u128)
            .expect("binomial fits u128")
            / i as u128;
    }
    acc
}

fn factorial(k: u32) -> u128 {
    (1..=k as u128).product::<u128>().max(1)
}

impl HypersurfaceSpec {
    /// Validates 1 ≤ dim ≤ MAX_DIM and 2 ≤ degree ≤ MAX_DEGREE.
    pub fn new(dim: u32, degree: u64) -> Result<Self, HyperError> {
        if dim == 0 || dim > MAX_DIM {
            return Err(HyperError::DimensionOutOfRange { got: dim });
        }
        if degree < 2 || degree > MAX_DEGREE {
            return Err(HyperError::DegreeOutOfRange { got: degree });
        }
        Ok(HypersurfaceSpec { dim, degree })
    }

    /// μ(mˢ) = C(s+d, d) - C(s+d-n, d).
    pub fn power_mu(&self, s: u64) -> u128 {
        let d = self.dim;
        let with = binomial(s + d as u64, d);
        let without = if s + (d as u64) >= self.degree {
            binomial(s + d as u64 - self.degree, d)
        } else {
            0
        };
        with - without
    }

    /// e(mˢ) = n·sᵈ.
    pub fn power_multiplicity(&self, s: u64) -> u128 {
        let mut p: u128 = 1;
        for _ in 0..self.dim {
            p = p.checked_mul(s as u128).expect("sᵈ fits u128");
        }
        p.checked_mul(self.degree as u128).expect("n·sᵈ fits u128")
    }

    /// Both the Loewy length and the order of mˢ equal s.
    pub fn power_loewy(&self, s: u64) -> u64 {
        s
    }

    /// c(s) = n·s^{d-1}/(d-1)! - μ(mˢ) + d - 1, exact.
    pub fn required_constant(&self, s: u64) -> Result<Ratio<i128>, HyperError> {
        if s == 0 {
            return Err(HyperError::ZeroLevel);
        }
        let d = self.dim;
        let mut lead: u128 = self.degree as u128;
        for _ in 0..d - 1 {
            lead = lead.checked_mul(s as u128).expect("n·s^{d-1} fits u128");
        }
        let lead = Ratio::new(
            i128::try_from(lead).expect("fits i128"),
            i128::try_from(factorial(d - 1)).expect("fits i128"),
        );
        let mu = i128::try_from(self.power_mu(s)).expect("μ fits i128");
        Ok(lead - Ratio::from_integer(mu) + Ratio::from_integer(d as i128 - 1))
    }

    /// Supremum of c(s) over 1..=s_max, with a divergence heuristic.
    pub fn constant_scan(&self, s_max: u64) -> Result<ConstantScan, HyperError> {
        if s_max == 0 || s_max > MAX_SCAN {
            return Err(HyperError::ScanTooLarge { got: s_max });
        }
        let mut sup = self.required_constant(1)?;
        let mut argmax = 1u64;
        let mut prev = sup;
        let half = s_max / 2;
        let mut increasing_tail = s_max >= 4;
        for s in 2..=s_max {
            let c = self.required_constant(s)?;
            if c > sup {
                sup = c;
                argmax = s;
            }
            if s > half && c <= prev {
                increasing_tail = false;
            }
            prev = c;
        }
        Ok(ConstantScan {
            spec: *self,
            s_max,
            sup,
            argmax,
            divergent: increasing_tail,
        })
    }

    /// For dim 2 and s ≥ n-2: μ(mˢ) = sn - n(n-3)/2 in closed form.
    pub fn surface_mu_closed_form(&self, s: u64) -> Option<u128> {
        if self.dim != 2 || s + 2 < self.degree {
            return None;
        }
        let n = self.degree as i128;
        let v = s as i128 * n - n * (n - 3) / 2;
        Some(u128::try_from(v).expect("μ is positive"))
    }

    /// For dim 2 the constant stabilizes at C(n-1, 2) from s = n-2 on.
    pub fn surface_constant_sup(&self) -> Option<Ratio<i128>> {
        if self.dim != 2 {
            return None;
        }
        let sup = binomial(self.degree - 1, 2);
        Some(Ratio::from_integer(
            i128::try_from(sup).expect("fits i128"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i128, d: i128) -> Ratio<i128> {
        Ratio::new(n, d)
    }

    #[test]
    fn validation() {
        assert_eq!(
            HypersurfaceSpec::new(0, 3),
            Err(HyperError::DimensionOutOfRange { got: 0 })
        );
        assert_eq!(
            HypersurfaceSpec::new(7, 3),
            Err(HyperError::DimensionOutOfRange { got: 7 })
        );
        assert_eq!(
            HypersurfaceSpec::new(2, 1),
            Err(HyperError::DegreeOutOfRange { got: 1 })
        );
        let h = HypersurfaceSpec::new(2, 4).unwrap();
        assert_eq!(h.required_constant(0), Err(HyperError::ZeroLevel));
        assert_eq!(h.constant_scan(0), Err(HyperError::ScanTooLarge { got: 0 }));
    }

    #[test]
    fn frozen_mu_values() {
        assert_eq!(HypersurfaceSpec::new(2, 4).unwrap().power_mu(4), 14);
        assert_eq!(HypersurfaceSpec::new(2, 3).unwrap().power_mu(1), 3);
        assert_eq!(HypersurfaceSpec::new(3, 5).unwrap().power_mu(10), 230);
    }

    #[test]
    fn surface_closed_form_matches_binomials() {
        for n in 2..=8u64 {
            let h = HypersurfaceSpec::new(2, n).unwrap();
            for s in 1..=40u64 {
                if let Some(closed) = h.surface_mu_closed_form(s) {
                    assert_eq!(closed, h.power_mu(s), "n={n} s={s}");
                }
            }
            // The closed form kicks in exactly at s = n-2.
            if n > 3 {
                assert!(h.surface_mu_closed_form(n - 3).is_none());
            }
            assert!(h.surface_mu_closed_form(n.saturating_sub(2).max(1)).is_some());
        }
    }

    #[test]
    fn quadric_surface_matches_the_one_vertex_graph() {
        // The quadric cone of dimension 2 resolves to a single -2
        // curve; μ(mˢ) there is -M·(sM) + 1 = 2s + 1.
        use crate::lattice::{DualGraph, Vertex};
        let h = HypersurfaceSpec::new(2, 2).unwrap();
        let g = DualGraph::new(
            alloc::vec![Vertex { self_intersection: -2, genus: 0 }],
            &[],
        )
        .unwrap();
        for s in 1..=6i64 {
            let inv = g.cycle_invariants(&[s]).unwrap();
            assert_eq!(inv.mu.unwrap() as u128, h.power_mu(s as u64));
            assert_eq!(inv.multiplicity as u128, h.power_multiplicity(s as u64));
        }
    }

    #[test]
    fn cubic_threefold_needs_no_constant() {
        let h = HypersurfaceSpec::new(3, 4).unwrap();
        for s in 1..=30 {
            assert_eq!(h.required_constant(s).unwrap(), ratio(0, 1), "s={s}");
        }
        let scan = h.constant_scan(30).unwrap();
        assert_eq!(scan.sup, ratio(0, 1));
        assert!(!scan.divergent);
    }

    #[test]
    fn quintic_threefold_constant_diverges_linearly() {
        let h = HypersurfaceSpec::new(3, 5).unwrap();
        assert_eq!(h.required_constant(1).unwrap(), ratio(1, 2));
        for s in 2..=30 {
            assert_eq!(
                h.required_constant(s).unwrap(),
                ratio(5 * s as i128 - 6, 2),
                "s={s}"
            );
        }
        let scan = h.constant_scan(10).unwrap();
        assert_eq!(scan.sup, ratio(22, 1));
        assert_eq!(scan.argmax, 10);
        assert!(scan.divergent);
    }

    #[test]
    fn surface_constants_stabilize() {
        for n in 2..=8u64 {
            let h = HypersurfaceSpec::new(2, n).unwrap();
            let expected = h.surface_constant_sup().unwrap();
            let scan = h.constant_scan(50).unwrap();
            assert_eq!(scan.sup, expected, "n={n}");
            assert!(!scan.divergent, "n={n}");
            assert_eq!(scan.argmax, 1.max(n as i128 - 2) as u64, "n={n}");
            // C(n-1, 2) in numbers.
            assert_eq!(
                expected,
                Ratio::from_integer(((n as i128 - 1) * (n as i128 - 2)) / 2)
            );
        }
    }
}
