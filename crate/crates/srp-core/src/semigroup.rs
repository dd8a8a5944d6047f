//! Numerical semigroups H = ⟨n₁, …, n_e⟩ ⊆ ℕ with gcd(nᵢ) = 1.
//!
//! Construction computes the Apéry set of H with respect to the
//! multiplicity n₁ by shortest-path relaxation over ℤ/n₁, so membership
//! is O(1) afterwards and no Frobenius-sized sieve is ever built.
//! Maximal factorization lengths (`ord`) are memoized on demand in a
//! dense table.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Reverse;
use core::fmt;

/// Errors from semigroup construction and queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    /// No generators supplied.
    EmptyGenerators,
    /// Zero cannot generate anything.
    ZeroGenerator,
    /// Generators share the given common factor, so they generate a
    /// scaled copy of a semigroup rather than a numerical semigroup.
    GcdNotOne(u64),
    /// Apéry sets Ap(H, m) are finite only for m ∈ H.
    NotAnElement(u64),
}

impl fmt::Display for SemigroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemigroupError::EmptyGenerators => write!(f, "no generators supplied"),
            SemigroupError::ZeroGenerator => write!(f, "0 is not a valid generator"),
            SemigroupError::GcdNotOne(g) => {
                write!(f, "generators have common factor {g}, need gcd 1")
            }
            SemigroupError::NotAnElement(m) => {
                write!(f, "{m} is not an element of the semigroup")
            }
        }
    }
}

impl core::error::Error for SemigroupError {}

/// Dense table of maximal factorization lengths, usable as an owned
/// snapshot independent of the semigroup's interior memoization.
#[derive(Debug, Clone)]
pub struct OrdTable {
    ord: Vec<u32>,
}

const NOT_ELEMENT: u32 = u32::MAX;

impl OrdTable {
    /// Largest argument this table answers for.
    pub fn limit(&self) -> u64 {
        self.ord.len() as u64 - 1
    }

    /// ord_H(h), or None when h ∉ H. Panics past `limit`.
    pub fn ord(&self, h: u64) -> Option<u64> {
        let v = self.ord[h as usize];
        (v != NOT_ELEMENT).then_some(v as u64)
    }
}

/// Hard cap on the memoized ord table; queries beyond it panic rather
/// than exhaust memory. All bounded scans in this crate stay far below.
pub const ORD_TABLE_CAP: u64 = 1 << 24;

/// A numerical semigroup, held as its minimal generators plus the
/// Apéry set with respect to the multiplicity.
///
/// Interior memoization makes this type `!Sync`; take an [`OrdTable`]
/// snapshot for shared read-only use.
#[derive(Debug, Clone)]
pub struct NumericalSemigroup {
    gens: Vec<u64>,
    apery: Vec<u64>,
    frobenius: i64,
    genus: u64,
    ord: RefCell<Vec<u32>>,
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.gens == other.gens
    }
}

impl Eq for NumericalSemigroup {}

/// Shortest-path distances over ℤ/m with one edge +nᵢ per generator:
/// dist[r] is the least element of ⟨gens⟩ congruent to r mod m.
fn apery_by_dijkstra(gens: &[u64], m: u64) -> Vec<u64> {
    let m = m as usize;
    let mut dist: Vec<u64> = vec![u64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, v))) = heap.pop() {
        if d > dist[v] {
            continue;
        }
        for &g in gens {
            let nd = d + g;
            let nv = (v + g as usize) % m;
            if nd < dist[nv] {
                dist[nv] = nd;
                heap.push(Reverse((nd, nv)));
            }
        }
    }
    // gcd(gens) = 1 makes every class reachable.
    debug_assert!(dist.iter().all(|&d| d != u64::MAX));
    dist
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl NumericalSemigroup {
    /// Builds H = ⟨gens⟩, minimalizing the generating set. Requires at
    /// least one generator, none zero, gcd 1.
    pub fn new(gens: &[u64]) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(g));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let minimal = minimalize(&sorted);

        let n1 = minimal[0];
        let apery = apery_by_dijkstra(&minimal, n1);
        let frobenius = *apery.iter().max().unwrap() as i64 - n1 as i64;
        let genus = apery.iter().map(|&w| w / n1).sum();
        Ok(NumericalSemigroup {
            gens: minimal,
            apery,
            frobenius,
            genus,
            ord: RefCell::new(Vec::new()),
        })
    }

    /// Minimal generators, ascending.
    pub fn gens(&self) -> &[u64] {
        &self.gens
    }

    /// Multiplicity n₁ (smallest positive element).
    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dim(&self) -> usize {
        self.gens.len()
    }

    /// Frobenius number: largest integer not in H, or -1 when H = ℕ.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    /// Number of gaps ℕ ∖ H.
    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// O(1) membership via the Apéry set: h ∈ H iff h is at least the
    /// least element of H in its class mod n₁.
    pub fn contains(&self, h: u64) -> bool {
        h >= self.apery[(h % self.gens[0]) as usize]
    }

    /// All gaps, ascending.
    pub fn gaps(&self) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.genus as usize);
        let top = self.frobenius.max(0) as u64;
        for h in 1..=top {
            if !self.contains(h) {
                out.push(h);
            }
        }
        out
    }

    /// Apéry set Ap(H, m) = {h ∈ H : h - m ∉ H}, ascending; exactly m
    /// elements, one per class mod m. Requires m ∈ H, m > 0.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>, SemigroupError> {
        if m == 0 || !self.contains(m) {
            return Err(SemigroupError::NotAnElement(m));
        }
        let mut w = apery_by_dijkstra(&self.gens, m);
        w.sort_unstable();
        Ok(w)
    }

    fn ensure_ord(&self, h: u64) {
        assert!(
            h < ORD_TABLE_CAP,
            "ord query {h} exceeds the table cap {ORD_TABLE_CAP}; use contains() for membership"
        );
        let mut tab = self.ord.borrow_mut();
        let need = h as usize + 1;
        if tab.len() >= need {
            return;
        }
        let missing = need - tab.len();
        tab.reserve(missing);
        while tab.len() < need {
            let x = tab.len();
            // ord(x) = 1 + max over generators g with x - g ∈ H;
            // removing one part of a maximal factorization stays maximal.
            let mut best = if x == 0 { 0 } else { NOT_ELEMENT };
            for &g in &self.gens {
                let g = g as usize;
                if x >= g && x > 0 {
                    let prev = tab[x - g];
                    if prev != NOT_ELEMENT && (best == NOT_ELEMENT || prev + 1 > best) {
                        best = prev + 1;
                    }
                }
            }
            tab.push(best);
        }
    }

    /// Maximal factorization length ord_H(h) = max{Σaᵢ : h = Σaᵢnᵢ},
    /// or None when h ∉ H. ord(0) = 0; ord(h) = 1 exactly on minimal
    /// generators.
    pub fn ord(&self, h: u64) -> Option<u64> {
        self.ensure_ord(h);
        let v = self.ord.borrow()[h as usize];
        (v != NOT_ELEMENT).then_some(v as u64)
    }

    /// Membership of h in the r-fold sumset of H₊ (r = 0 gives {0}).
    /// Equivalent to h ∈ H with ord(h) ≥ r, since a factorization of
    /// length ≥ r merges into exactly r positive parts.
    pub fn in_r_fold(&self, h: u64, r: u64) -> bool {
        if r == 0 {
            return h == 0;
        }
        self.contains(h) && self.ord(h).is_some_and(|o| o >= r)
    }

    /// Owned ord table covering 0..=limit.
    pub fn ord_table(&self, limit: u64) -> OrdTable {
        self.ensure_ord(limit);
        OrdTable {
            ord: self.ord.borrow()[..=limit as usize].to_vec(),
        }
    }
}

/// Strips redundant generators: g is redundant iff it lies in the
/// semigroup generated by the kept strictly smaller generators.
fn minimalize(sorted: &[u64]) -> Vec<u64> {
    let mut kept: Vec<u64> = Vec::new();
    for &g in sorted {
        if !reachable(&kept, g) {
            kept.push(g);
        }
    }
    kept
}

/// Membership of target in ⟨gens⟩ by direct DP; only used during
/// minimalization where targets are generator-sized.
fn reachable(gens: &[u64], target: u64) -> bool {
    if gens.is_empty() {
        return target == 0;
    }
    let t = target as usize;
    let mut hit = vec![false; t + 1];
    hit[0] = true;
    for x in 1..=t {
        hit[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && hit[x - g as usize]);
    }
    hit[t]
}
