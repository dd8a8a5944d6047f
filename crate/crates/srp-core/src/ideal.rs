//! Staircase (monomial) ideals over ℕ × H.
//!
//! A monomial s^a t^h of k[[s, t^H]] is encoded by its exponent pair
//! (a, h), h ∈ H, and divides another iff the s-exponent is no larger
//! and the t-exponent difference lies in H. An ideal is held as its
//! unique minimal generating set under that divisibility. The same
//! combinatorics serves the monomial shadow of the section ring of a
//! point; operations that use the normalization k[[s, t]] (integral
//! closure, multiplicity) are gated to the power-series model.
//!
//! Membership in powers of the maximal ideal is a degree test:
//! s^a t^h ∈ m^ℓ iff a + ord(h) ≥ ℓ, and the minimal generators of m^ℓ
//! are exactly the monomials with a + ord(h) = ℓ (superadditivity of
//! ord gives the antichain property; partial sums of a maximal
//! factorization realize every intermediate ord exactly, which gives
//! generation).

use alloc::vec::Vec;
use core::fmt;

use crate::semigroup::NumericalSemigroup;

/// Which ring the staircase combinatorics is read in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum RingModel {
    /// k[[s, t^H]]: complete two-dimensional domain whose normalization
    /// is k[[s, t]]. All operations available.
    PowerSeries,
    /// Monomial shadow of the section ring of a point with value
    /// semigroup H. Newton-polyhedron operations are unavailable.
    PointShadow,
}

/// Exponent pair (a, h) standing for s^a t^h.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Monomial {
    /// s-exponent.
    pub a: u64,
    /// t-exponent; must lie in the semigroup.
    pub h: u64,
}

impl Monomial {
    /// Convenience constructor.
    pub fn new(a: u64, h: u64) -> Self {
        Monomial { a, h }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.h) {
            (0, 0) => write!(f, "1"),
            (1, 0) => write!(f, "s"),
            (a, 0) => write!(f, "s^{a}"),
            (0, 1) => write!(f, "t"),
            (0, h) => write!(f, "t^{h}"),
            (1, 1) => write!(f, "s*t"),
            (1, h) => write!(f, "s*t^{h}"),
            (a, 1) => write!(f, "s^{a}*t"),
            (a, h) => write!(f, "s^{a}*t^{h}"),
        }
    }
}

/// Errors from ideal construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealError {
    /// A generator's t-exponent is not an element of the semigroup.
    ExponentNotInSemigroup(Monomial),
    /// Two operands were built over different rings.
    SemigroupMismatch,
    /// The operation needs a nonzero ideal.
    ZeroIdeal,
    /// The operation needs an m-primary ideal (a pure s-power and a
    /// pure t-power among the generators).
    NotMPrimary,
    /// The operation needs the power-series model.
    ModelUnsupported(&'static str),
}

impl fmt::Display for IdealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealError::ExponentNotInSemigroup(m) => {
                write!(f, "t-exponent of {m} is not in the semigroup")
            }
            IdealError::SemigroupMismatch => {
                write!(f, "operands belong to different rings")
            }
            IdealError::ZeroIdeal => write!(f, "operation requires a nonzero ideal"),
            IdealError::NotMPrimary => write!(f, "operation requires an m-primary ideal"),
            IdealError::ModelUnsupported(op) => {
                write!(f, "{op} requires the power-series model")
            }
        }
    }
}

impl core::error::Error for IdealError {}

/// The ambient ring: a numerical semigroup plus the model the
/// staircase is read in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseRing {
    semigroup: NumericalSemigroup,
    model: RingModel,
}

/// A staircase ideal, held as minimal monomial generators in
/// ascending (a, h) order. The empty list is the zero ideal.
#[derive(Debug, Clone)]
pub struct StaircaseIdeal {
    ring_gens: Vec<u64>,
    model: RingModel,
    gens: Vec<Monomial>,
    // Some(l) certifies this ideal equals m^l; products and powers of
    // tagged ideals stay tagged since m^j · m^k = m^{j+k} here (split
    // a maximal factorization at the exact intermediate ord).
    max_power: Option<u64>,
}

impl PartialEq for StaircaseIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ring_gens == other.ring_gens && self.model == other.model && self.gens == other.gens
    }
}

impl Eq for StaircaseIdeal {}

/// Result of the Ratliff-Rush iteration J_k = (I^{k+1} : I^k).
///
/// The chain J_k is increasing with union the Ratliff-Rush closure of
/// I; equality of two consecutive terms is where the iteration stops,
/// but on its own it does not prove the union was reached (the chain
/// can pause and grow again). `certificate` is set only under a
/// criterion that actually proves `closure` is the closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatliffRushOutcome {
    /// Stabilized value J_k = J_{k-1}, or the last term when capped.
    pub closure: StaircaseIdeal,
    /// Index k of the last computed term.
    pub steps: u64,
    /// Whether two consecutive terms agreed before the cap.
    pub stabilized: bool,
    /// Proof that `closure` really is the Ratliff-Rush closure.
    pub certificate: Option<RrCertificate>,
}

/// Criteria under which the stabilized chain value is provably the
/// Ratliff-Rush closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum RrCertificate {
    /// I = m^ℓ and the chain is constantly m^ℓ: (m^{ℓ(k+1)} : m^{ℓk})
    /// = m^ℓ for every k by ord-superadditivity, so the union is m^ℓ.
    FixedPowerOfMax,
    /// The stabilized value equals the integral closure; the closure
    /// is squeezed between them.
    MatchesIntegralClosure,
}

impl StaircaseRing {
    /// Pairs a semigroup with a model.
    pub fn new(semigroup: NumericalSemigroup, model: RingModel) -> Self {
        StaircaseRing { semigroup, model }
    }

    /// The underlying semigroup.
    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    /// The model this ring is read in.
    pub fn model(&self) -> RingModel {
        self.model
    }

    fn fingerprint(&self) -> Vec<u64> {
        self.semigroup.gens().to_vec()
    }

    /// Builds the ideal generated by the given monomials, validating
    /// t-exponents and minimalizing the generating set.
    pub fn ideal(&self, gens: &[Monomial]) -> Result<StaircaseIdeal, IdealError> {
        for &g in gens {
            if !self.semigroup.contains(g.h) {
                return Err(IdealError::ExponentNotInSemigroup(g));
            }
        }
        Ok(StaircaseIdeal {
            ring_gens: self.fingerprint(),
            model: self.model,
            gens: self.normalize(gens.to_vec()),
            max_power: None,
        })
    }

    /// The zero ideal.
    pub fn zero_ideal(&self) -> StaircaseIdeal {
        StaircaseIdeal {
            ring_gens: self.fingerprint(),
            model: self.model,
            gens: Vec::new(),
            max_power: None,
        }
    }

    /// The unit ideal (generated by 1 = m^0).
    pub fn unit_ideal(&self) -> StaircaseIdeal {
        StaircaseIdeal {
            ring_gens: self.fingerprint(),
            model: self.model,
            gens: alloc::vec![Monomial::new(0, 0)],
            max_power: Some(0),
        }
    }

    /// The maximal ideal m = (s, t^{n_1}, …, t^{n_e}).
    pub fn maximal_ideal(&self) -> StaircaseIdeal {
        self.power_of_max(1)
    }

    /// Minimal generators of m^ℓ: the monomials with a + ord(h) = ℓ.
    pub fn power_of_max(&self, l: u64) -> StaircaseIdeal {
        let n_top = *self.semigroup.gens().last().unwrap();
        let mut gens = Vec::new();
        // ord(h) ≤ ℓ forces h ≤ ℓ·n_e: every factorization of a larger
        // h already has more than ℓ parts.
        for h in 0..=l * n_top {
            if let Some(o) = self.semigroup.ord(h) {
                if o <= l {
                    gens.push(Monomial::new(l - o, h));
                }
            }
        }
        // Antichain by construction; keep the canonical order.
        gens.sort_unstable();
        StaircaseIdeal {
            ring_gens: self.fingerprint(),
            model: self.model,
            gens,
            max_power: Some(l),
        }
    }

    fn divides(&self, f: Monomial, g: Monomial) -> bool {
        f.a <= g.a && g.h >= f.h && self.semigroup.contains(g.h - f.h)
    }

    /// Minimal elements of the divisibility order, sorted.
    fn normalize(&self, mut gens: Vec<Monomial>) -> Vec<Monomial> {
        gens.sort_unstable();
        gens.dedup();
        let mut out = Vec::with_capacity(gens.len());
        'outer: for i in 0..gens.len() {
            for j in 0..gens.len() {
                if j != i && self.divides(gens[j], gens[i]) {
                    // Mutual division is equality, excluded by dedup;
                    // strict divisors drop the element.
                    if !self.divides(gens[i], gens[j]) || j < i {
                        continue 'outer;
                    }
                }
            }
            out.push(gens[i]);
        }
        out
    }
}

impl StaircaseIdeal {
    /// Minimal generators, ascending in (a, h).
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators.
    pub fn mu(&self) -> u64 {
        self.gens.len() as u64
    }

    /// Whether this is the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Whether this is the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens == [Monomial::new(0, 0)]
    }

    fn check(&self, ring: &StaircaseRing) -> Result<(), IdealError> {
        if self.ring_gens == ring.semigroup.gens() && self.model == ring.model {
            Ok(())
        } else {
            Err(IdealError::SemigroupMismatch)
        }
    }

    fn check_pair(&self, ring: &StaircaseRing, other: &Self) -> Result<(), IdealError> {
        self.check(ring)?;
        other.check(ring)
    }

    /// Membership without fingerprint checks; monomials with h ∉ H are
    /// simply not members.
    fn member(&self, ring: &StaircaseRing, m: Monomial) -> bool {
        if let Some(l) = self.max_power {
            return match ring.semigroup.ord(m.h) {
                Some(o) => m.a + o >= l,
                None => false,
            };
        }
        self.gens.iter().any(|&f| ring.divides(f, m))
    }

    /// Whether the monomial lies in the ideal.
    pub fn contains_monomial(
        &self,
        ring: &StaircaseRing,
        m: Monomial,
    ) -> Result<bool, IdealError> {
        self.check(ring)?;
        Ok(self.member(ring, m))
    }

    /// Whether other ⊆ self.
    pub fn contains_ideal(&self, ring: &StaircaseRing, other: &Self) -> Result<bool, IdealError> {
        self.check_pair(ring, other)?;
        Ok(other.gens.iter().all(|&g| self.member(ring, g)))
    }

    /// Ideal sum: union of generators, minimalized.
    pub fn sum(&self, ring: &StaircaseRing, other: &Self) -> Result<Self, IdealError> {
        self.check_pair(ring, other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(StaircaseIdeal {
            ring_gens: self.ring_gens.clone(),
            model: self.model,
            gens: ring.normalize(gens),
            max_power: None,
        })
    }

    /// Ideal product: pairwise exponent sums, minimalized. Products of
    /// powers of m shortcut to m^{j+k}.
    pub fn product(&self, ring: &StaircaseRing, other: &Self) -> Result<Self, IdealError> {
        self.check_pair(ring, other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(ring.zero_ideal());
        }
        if let (Some(j), Some(k)) = (self.max_power, other.max_power) {
            return Ok(ring.power_of_max(j + k));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for &f in &self.gens {
            for &g in &other.gens {
                gens.push(Monomial::new(
                    f.a.checked_add(g.a).expect("exponent overflow"),
                    f.h.checked_add(g.h).expect("exponent overflow"),
                ));
            }
        }
        Ok(StaircaseIdeal {
            ring_gens: self.ring_gens.clone(),
            model: self.model,
            gens: ring.normalize(gens),
            max_power: None,
        })
    }

    /// k-th power; the zeroth power is the unit ideal.
    pub fn power(&self, ring: &StaircaseRing, k: u64) -> Result<Self, IdealError> {
        self.check(ring)?;
        if let Some(l) = self.max_power {
            return Ok(ring.power_of_max(l * k));
        }
        if k == 0 {
            return Ok(ring.unit_ideal());
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.product(ring, self)?;
        }
        Ok(out)
    }

    /// Colon ideal (self : other) = {x : x·other ⊆ self}.
    ///
    /// Minimal generators (a, h) of the colon satisfy a ≤ max a_f over
    /// the generators of self (otherwise (a-1, h) works too, since
    /// every membership certificate has slack in a) and h < F + n₁ +
    /// max h_f + 1 (otherwise h - n₁ ∈ H and works too), so scanning
    /// that box and minimalizing is exact.
    pub fn colon(&self, ring: &StaircaseRing, other: &Self) -> Result<Self, IdealError> {
        self.check_pair(ring, other)?;
        if other.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if self.is_zero() {
            return Ok(ring.zero_ideal());
        }
        let max_a = self.gens.iter().map(|f| f.a).max().unwrap();
        let max_h = self.gens.iter().map(|f| f.h).max().unwrap();
        let sg = &ring.semigroup;
        let bound_h = sg.frobenius().max(0) as u64 + sg.multiplicity() + max_h + 1;
        let mut found = Vec::new();
        for a in 0..=max_a {
            for h in 0..bound_h {
                if !sg.contains(h) {
                    continue;
                }
                let x = Monomial::new(a, h);
                if other
                    .gens
                    .iter()
                    .all(|&g| self.member(ring, Monomial::new(x.a + g.a, x.h + g.h)))
                {
                    found.push(x);
                }
            }
        }
        Ok(StaircaseIdeal {
            ring_gens: self.ring_gens.clone(),
            model: self.model,
            gens: ring.normalize(found),
            max_power: None,
        })
    }

    /// Largest ℓ with self ⊆ m^ℓ, i.e. min a + ord(h) over generators.
    pub fn order(&self, ring: &StaircaseRing) -> Result<u64, IdealError> {
        self.check(ring)?;
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        Ok(self
            .gens
            .iter()
            .map(|g| g.a + ring.semigroup.ord(g.h).expect("validated exponent"))
            .min()
            .unwrap())
    }

    /// Whether the ideal contains a power of m: needs a pure s-power
    /// and a pure t-power among the generators.
    pub fn is_m_primary(&self) -> bool {
        self.gens.iter().any(|g| g.h == 0) && self.gens.iter().any(|g| g.a == 0)
    }

    /// Least r with m^r ⊆ self. Requires an m-primary ideal.
    pub fn loewy_length(&self, ring: &StaircaseRing) -> Result<u64, IdealError> {
        self.check(ring)?;
        if !self.is_m_primary() {
            return Err(IdealError::NotMPrimary);
        }
        let a0 = self.gens.iter().filter(|g| g.h == 0).map(|g| g.a).min().unwrap();
        let b0 = self.gens.iter().filter(|g| g.a == 0).map(|g| g.h).min().unwrap();
        let sg = &ring.semigroup;
        let f = sg.frobenius().max(0) as u64;
        // Safety bound: any monomial of m^N with N = a0 + ⌈(b0+F+1)/n₁⌉
        // is divisible by s^{a0} or by t^{b0}.
        let cap = a0 + (b0 + f + 1).div_ceil(sg.multiplicity());
        for r in 0..=cap {
            let mr = ring.power_of_max(r);
            if self.contains_ideal(ring, &mr)? {
                return Ok(r);
            }
        }
        unreachable!("m^{cap} must already be contained");
    }

    /// m-fullness test via the generic element s: whether (mI : s) = I.
    pub fn is_m_full(&self, ring: &StaircaseRing) -> Result<bool, IdealError> {
        self.check(ring)?;
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let mi = ring.maximal_ideal().product(ring, self)?;
        let s_ideal = ring.ideal(&[Monomial::new(1, 0)])?;
        Ok(mi.colon(ring, &s_ideal)? == *self)
    }

    /// Runs the colon chain J_k = (I^{k+1} : I^k) until two consecutive
    /// terms agree or `cap` terms were computed.
    pub fn ratliff_rush(
        &self,
        ring: &StaircaseRing,
        cap: u64,
    ) -> Result<RatliffRushOutcome, IdealError> {
        self.check(ring)?;
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let mut prev = self.power(ring, 2)?.colon(ring, &self.power(ring, 1)?)?;
        let mut k = 1u64;
        loop {
            if k >= cap {
                return Ok(RatliffRushOutcome {
                    closure: prev,
                    steps: k,
                    stabilized: false,
                    certificate: None,
                });
            }
            let next = self
                .power(ring, k + 2)?
                .colon(ring, &self.power(ring, k + 1)?)?;
            k += 1;
            if next == prev {
                // Sanity: J_k · I^k = I^{k+1} holds by the definition
                // of the colon (⊆) and J_k ⊇ I (⊇).
                let identity = next.product(ring, &self.power(ring, k)?)? == self.power(ring, k + 1)?;
                debug_assert!(identity);
                let certificate = self.rr_certificate(ring, &next)?;
                return Ok(RatliffRushOutcome {
                    closure: next,
                    steps: k,
                    stabilized: true,
                    certificate,
                });
            }
            prev = next;
        }
    }

    fn rr_certificate(
        &self,
        ring: &StaircaseRing,
        closure: &Self,
    ) -> Result<Option<RrCertificate>, IdealError> {
        // I = m^ℓ: the whole chain is constantly m^ℓ, since
        // (m^{ℓ(k+1)} : m^{ℓk}) = m^ℓ by superadditivity of ord.
        let l = self.order(ring)?;
        if self.gens == ring.power_of_max(l).gens {
            debug_assert!(closure.gens == self.gens);
            return Ok(Some(RrCertificate::FixedPowerOfMax));
        }
        if ring.model == RingModel::PowerSeries && *closure == self.integral_closure(ring)? {
            return Ok(Some(RrCertificate::MatchesIntegralClosure));
        }
        Ok(None)
    }

    /// Integral closure via the Newton polyhedron of the generators in
    /// the normalization k[[s, t]]: the closure's monomials are the
    /// staircase points lying in conv(exponents) + ℝ²₊, intersected
    /// with the ring. Power-series model only.
    pub fn integral_closure(&self, ring: &StaircaseRing) -> Result<Self, IdealError> {
        self.check(ring)?;
        if ring.model != RingModel::PowerSeries {
            return Err(IdealError::ModelUnsupported("integral closure"));
        }
        if self.is_zero() {
            return Ok(ring.zero_ideal());
        }
        let hull = NewtonHull::of(&self.gens);
        let sg = &ring.semigroup;
        let max_a = self.gens.iter().map(|f| f.a).max().unwrap();
        let max_h = self.gens.iter().map(|f| f.h).max().unwrap();
        // Minimal generators fit under a ≤ max a_f, and under
        // h ≤ max h_f + F + n₁ + 1: past that, (a, h - n₁) is still a
        // staircase point of the polyhedron and divides (a, h).
        let bound_h = max_h + sg.frobenius().max(0) as u64 + sg.multiplicity() + 1;
        let mut found = Vec::new();
        for a in 0..=max_a {
            for h in 0..=bound_h {
                if sg.contains(h) && hull.contains(a, h) {
                    found.push(Monomial::new(a, h));
                }
            }
        }
        Ok(StaircaseIdeal {
            ring_gens: self.ring_gens.clone(),
            model: self.model,
            gens: ring.normalize(found),
            max_power: None,
        })
    }

    /// Hilbert-Samuel multiplicity of an m-primary ideal: twice the
    /// area between the Newton polyhedron and the axes (multiplicity
    /// is stable under integral closure, and for integrally closed
    /// monomial ideals of k[[s, t]] it is the lattice-area count).
    /// Power-series model only. The unit ideal has multiplicity 0.
    pub fn multiplicity(&self, ring: &StaircaseRing) -> Result<u64, IdealError> {
        self.check(ring)?;
        if ring.model != RingModel::PowerSeries {
            return Err(IdealError::ModelUnsupported("multiplicity"));
        }
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let hull = NewtonHull::of(&self.gens);
        hull.doubled_complement_area().ok_or(IdealError::NotMPrimary)
    }
}

/// Lower-left boundary of conv(points) + ℝ²₊.
struct NewtonHull {
    verts: Vec<(i128, i128)>,
}

impl NewtonHull {
    fn of(gens: &[Monomial]) -> Self {
        let mut pts: Vec<(i128, i128)> = gens.iter().map(|g| (g.a as i128, g.h as i128)).collect();
        pts.sort_unstable();
        // Pareto-minimal sweep: x ascending, keep strict y descents.
        let mut pareto: Vec<(i128, i128)> = Vec::new();
        for p in pts {
            if pareto.last().is_none_or(|q| p.1 < q.1) {
                pareto.push(p);
            }
        }
        // Monotone chain, dropping non-vertices of the lower hull.
        let mut verts: Vec<(i128, i128)> = Vec::new();
        for p in pareto {
            while verts.len() >= 2 && cross(verts[verts.len() - 2], verts[verts.len() - 1], p) <= 0
            {
                verts.pop();
            }
            verts.push(p);
        }
        NewtonHull { verts }
    }

    /// The polyhedron is the quadrant above-right of the extreme
    /// vertices cut by the half-plane of each hull edge.
    fn contains(&self, a: u64, h: u64) -> bool {
        let p = (a as i128, h as i128);
        if p.0 < self.verts[0].0 || p.1 < self.verts[self.verts.len() - 1].1 {
            return false;
        }
        self.verts
            .windows(2)
            .all(|w| cross(w[0], w[1], p) >= 0)
    }

    /// Twice the area of ℝ²₊ ∖ polyhedron; None when the polyhedron
    /// misses an axis (complement of infinite area).
    fn doubled_complement_area(&self) -> Option<u64> {
        if self.verts[0].0 != 0 || self.verts[self.verts.len() - 1].1 != 0 {
            return None;
        }
        // Shoelace over (0,0) followed by the hull vertices.
        let mut poly = alloc::vec![(0i128, 0i128)];
        poly.extend_from_slice(&self.verts);
        let mut twice: i128 = 0;
        for i in 0..poly.len() {
            let (x1, y1) = poly[i];
            let (x2, y2) = poly[(i + 1) % poly.len()];
            twice += x1 * y2 - x2 * y1;
        }
        Some(twice.unsigned_abs() as u64)
    }
}

fn cross(o: (i128, i128), a: (i128, i128), b: (i128, i128)) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}
