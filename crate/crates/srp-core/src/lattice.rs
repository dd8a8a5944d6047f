//! Intersection lattices of resolution dual graphs of normal surface
//! singularities.
//!
//! A graph carries one vertex per exceptional curve (self-intersection
//! ≤ -1, geometric genus) and one edge per transverse intersection
//! point. Anti-nef cycles Z (Z·Eᵢ ≤ 0 everywhere, Z > 0) stand for
//! integrally closed m-primary ideals; on a rational singularity the
//! ideal of an anti-nef Z has exactly μ = -M·Z + 1 generators, where M
//! is the fundamental cycle, multiplicity e = -Z², Loewy length
//! min{r : rM ≥ Z} and order max{r : Z ≥ rM}. The generator-count
//! gaps then come out as intersection numbers:
//!
//!   (μ-1)·ll - e = -(ll·M - Z)·Z      e - (μ-1)·ord = -Z·(Z - ord·M)
//!
//! and both are ≥ 0 because ll·M - Z and Z - ord·M are effective and
//! the factors pair against anti-nef cycles.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// One exceptional curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Vertex {
    /// Self-intersection number, at most -1.
    pub self_intersection: i64,
    /// Geometric genus of the curve.
    pub genus: u64,
}

/// Errors from graph construction and cycle queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// No vertices.
    EmptyGraph,
    /// Exceptional curves have self-intersection ≤ -1.
    InvalidSelfIntersection {
        /// Offending vertex index.
        vertex: usize,
        /// Its declared self-intersection.
        value: i64,
    },
    /// Edge endpoint out of range.
    InvalidEdge {
        /// Endpoints as given.
        a: usize,
        /// Endpoints as given.
        b: usize,
    },
    /// A curve meeting itself transversally is not a dual-graph edge.
    SelfLoop {
        /// Offending vertex index.
        vertex: usize,
    },
    /// The exceptional divisor of one singularity is connected.
    NotConnected,
    /// The intersection form must be negative definite; the k-th
    /// leading principal minor (1-based) breaks the sign pattern.
    NotNegativeDefinite {
        /// First failing minor.
        minor: usize,
    },
    /// Cycle vector length disagrees with the vertex count.
    WrongLength {
        /// Number of vertices.
        expected: usize,
        /// Length supplied.
        got: usize,
    },
    /// The operation needs a strictly positive cycle.
    ZeroCycle,
    /// The operation needs an anti-nef cycle.
    NotAntiNef {
        /// First vertex with Z·Eᵢ > 0.
        vertex: usize,
    },
    /// The operation needs a rational singularity (p_a(M) = 0).
    NotRational,
    /// The operation needs a minimal resolution: no genus-0 curve of
    /// self-intersection -1.
    NotMinimalResolution {
        /// First contractible vertex.
        vertex: usize,
    },
    /// The enumeration walked past its node budget.
    BoundTooLarge {
        /// Budget that was exhausted.
        budget: u64,
    },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyGraph => write!(f, "graph has no vertices"),
            GraphError::InvalidSelfIntersection { vertex, value } => {
                write!(f, "vertex {vertex} has self-intersection {value}, need ≤ -1")
            }
            GraphError::InvalidEdge { a, b } => write!(f, "edge ({a}, {b}) is out of range"),
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::NotConnected => write!(f, "graph is not connected"),
            GraphError::NotNegativeDefinite { minor } => {
                write!(f, "intersection form is not negative definite (minor {minor})")
            }
            GraphError::WrongLength { expected, got } => {
                write!(f, "cycle has {got} entries, graph has {expected} vertices")
            }
            GraphError::ZeroCycle => write!(f, "cycle must be nonzero and nonnegative"),
            GraphError::NotAntiNef { vertex } => {
                write!(f, "cycle pairs positively against vertex {vertex}")
            }
            GraphError::NotRational => write!(f, "graph is not rational (p_a(M) ≠ 0)"),
            GraphError::NotMinimalResolution { vertex } => {
                write!(f, "vertex {vertex} is a (-1)-curve of genus 0; blow it down first")
            }
            GraphError::BoundTooLarge { budget } => {
                write!(f, "enumeration exceeded its node budget of {budget}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Search budget for anti-nef enumerations.
pub const DEFAULT_NODE_BUDGET: u64 = 4_000_000;

/// A connected, negative definite resolution dual graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    // Symmetric off-diagonal intersection multiplicities.
    mult: Vec<Vec<u32>>,
    fundamental: Vec<i64>,
}

impl DualGraph {
    /// Validates and builds a graph: vertices nonempty with
    /// self-intersections ≤ -1, edges in range without self-loops
    /// (repeats raise multiplicity), connected, negative definite.
    pub fn new(vertices: Vec<Vertex>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = vertices.len();
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.self_intersection > -1 {
                return Err(GraphError::InvalidSelfIntersection {
                    vertex: i,
                    value: v.self_intersection,
                });
            }
        }
        let mut mult = vec![vec![0u32; n]; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::InvalidEdge { a, b });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            mult[a][b] += 1;
            mult[b][a] += 1;
        }

        // Connectivity by traversal.
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if mult[v][u] > 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GraphError::NotConnected);
        }

        check_negative_definite(&vertices, &mult)?;

        let mut graph = DualGraph {
            vertices,
            mult,
            fundamental: Vec::new(),
        };
        graph.fundamental = graph.fundamental_cycle_from(0);
        debug_assert!(graph.is_anti_nef(&graph.fundamental));
        Ok(graph)
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Never true: construction rejects empty graphs.
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The vertex data.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Intersection multiplicity of two distinct curves.
    pub fn edge_multiplicity(&self, a: usize, b: usize) -> u32 {
        self.mult[a][b]
    }

    fn expect_len(&self, z: &[i64]) -> Result<(), GraphError> {
        if z.len() == self.len() {
            Ok(())
        } else {
            Err(GraphError::WrongLength {
                expected: self.len(),
                got: z.len(),
            })
        }
    }

    /// Z·Eᵢ.
    pub fn pair_vertex(&self, z: &[i64], i: usize) -> i128 {
        let mut acc = z[i] as i128 * self.vertices[i].self_intersection as i128;
        for j in 0..self.len() {
            if j != i {
                acc += z[j] as i128 * self.mult[i][j] as i128;
            }
        }
        acc
    }

    /// Z·W under the intersection form.
    pub fn pair(&self, z: &[i64], w: &[i64]) -> i128 {
        (0..self.len()).map(|i| w[i] as i128 * self.pair_vertex(z, i)).sum()
    }

    /// Z·K via adjunction: K·Eᵢ = -Eᵢ² - 2 + 2gᵢ.
    pub fn canonical_pair(&self, z: &[i64]) -> i128 {
        (0..self.len())
            .map(|i| {
                z[i] as i128
                    * (-self.vertices[i].self_intersection as i128 - 2
                        + 2 * self.vertices[i].genus as i128)
            })
            .sum()
    }

    /// Arithmetic genus p_a(Z) = 1 + (Z² + Z·K)/2.
    pub fn arithmetic_genus(&self, z: &[i64]) -> i64 {
        let twice = self.pair(z, z) + self.canonical_pair(z);
        debug_assert!(twice % 2 == 0, "Z² + ZK is even by adjunction");
        i64::try_from(1 + twice / 2).expect("genus fits i64")
    }

    /// Whether Z·Eᵢ ≤ 0 for every vertex.
    pub fn is_anti_nef(&self, z: &[i64]) -> bool {
        (0..self.len()).all(|i| self.pair_vertex(z, i) <= 0)
    }

    fn first_positive_pairing(&self, z: &[i64]) -> Option<usize> {
        (0..self.len()).find(|&i| self.pair_vertex(z, i) > 0)
    }

    /// Laufer's algorithm from a chosen start vertex. The result is
    /// independent of the start; negative definiteness terminates it.
    fn fundamental_cycle_from(&self, start: usize) -> Vec<i64> {
        let mut z = vec![0i64; self.len()];
        z[start] = 1;
        loop {
            match self.first_positive_pairing(&z) {
                Some(j) => z[j] += 1,
                None => return z,
            }
        }
    }

    /// The fundamental cycle M: the smallest nonzero anti-nef cycle.
    pub fn fundamental_cycle(&self) -> &[i64] {
        &self.fundamental
    }

    /// Rationality test: p_a(M) = 0.
    pub fn is_rational(&self) -> bool {
        self.arithmetic_genus(&self.fundamental) == 0
    }

    /// Whether no vertex is a genus-0 (-1)-curve.
    pub fn is_minimal(&self) -> bool {
        self.first_contractible().is_none()
    }

    fn first_contractible(&self) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| v.self_intersection == -1 && v.genus == 0)
    }

    fn require_anti_nef_positive(&self, z: &[i64]) -> Result<(), GraphError> {
        self.expect_len(z)?;
        if z.iter().all(|&c| c == 0) || z.iter().any(|&c| c < 0) {
            return Err(GraphError::ZeroCycle);
        }
        if let Some(vertex) = self.first_positive_pairing(z) {
            return Err(GraphError::NotAntiNef { vertex });
        }
        Ok(())
    }

    /// Invariants of the ideal an anti-nef cycle represents.
    pub fn cycle_invariants(&self, z: &[i64]) -> Result<CycleInvariants, GraphError> {
        self.require_anti_nef_positive(z)?;
        let m = &self.fundamental;
        // Nonzero anti-nef cycles dominate M.
        debug_assert!(z.iter().zip(m).all(|(&a, &b)| a >= b));
        let z_sq = self.pair(z, z);
        let mu = if self.is_rational() {
            Some(u64::try_from(-self.pair(m, z) + 1).expect("μ is positive"))
        } else {
            None
        };
        let loewy_length = z
            .iter()
            .zip(m)
            .map(|(&zi, &mi)| (zi as u64).div_ceil(mi as u64))
            .max()
            .unwrap();
        let order = z
            .iter()
            .zip(m)
            .map(|(&zi, &mi)| zi as u64 / mi as u64)
            .min()
            .unwrap();
        Ok(CycleInvariants {
            z: z.to_vec(),
            self_intersection: z_sq,
            arithmetic_genus: self.arithmetic_genus(z),
            mu,
            multiplicity: u64::try_from(-z_sq).expect("negative definite"),
            loewy_length,
            order,
        })
    }

    /// μ ≥ -M·Z + 1 - c on a not necessarily rational singularity,
    /// with a user-supplied correction constant c.
    pub fn mu_lower_bound(&self, z: &[i64], c: u64) -> Result<i128, GraphError> {
        self.require_anti_nef_positive(z)?;
        Ok(-self.pair(&self.fundamental, z) + 1 - c as i128)
    }

    /// Gap report for one anti-nef cycle on a rational graph, with the
    /// two intersection-theoretic identities cross-checked.
    pub fn dao_gaps(&self, z: &[i64]) -> Result<CycleGapReport, GraphError> {
        self.require_anti_nef_positive(z)?;
        if !self.is_rational() {
            return Err(GraphError::NotRational);
        }
        let inv = self.cycle_invariants(z)?;
        let mu = inv.mu.expect("rational");
        let e = inv.multiplicity;
        let ll = inv.loewy_length;
        let ord = inv.order;
        let forward_gap = (mu as i128 - 1) * ll as i128 - e as i128;
        let reverse_gap = e as i128 - (mu as i128 - 1) * ord as i128;
        // Same gaps as intersection numbers.
        let m = &self.fundamental;
        let llm_minus_z: Vec<i64> = z.iter().zip(m).map(|(&zi, &mi)| ll as i64 * mi - zi).collect();
        let z_minus_ordm: Vec<i64> = z.iter().zip(m).map(|(&zi, &mi)| zi - ord as i64 * mi).collect();
        debug_assert_eq!(forward_gap, -self.pair(&llm_minus_z, z));
        debug_assert_eq!(reverse_gap, -self.pair(z, &z_minus_ordm));
        Ok(CycleGapReport {
            invariants: inv,
            forward_gap,
            reverse_gap,
        })
    }

    /// All anti-nef cycles in the box Mᵢ ≤ zᵢ ≤ bound·Mᵢ, ascending
    /// lexicographically.
    pub fn enumerate_antinef(&self, bound: u64) -> Result<Vec<Vec<i64>>, GraphError> {
        let ub: Vec<i64> = self
            .fundamental
            .iter()
            .map(|&mi| mi * bound.max(1) as i64)
            .collect();
        self.enumerate_antinef_box(&ub, DEFAULT_NODE_BUDGET)
    }

    /// Anti-nef cycles in M ≤ Z ≤ ub, by coordinate DFS. Prunes a
    /// partial assignment when some assigned vertex cannot reach
    /// Z·Eᵢ ≤ 0 even with all unassigned neighbors at their minimum M.
    fn enumerate_antinef_box(&self, ub: &[i64], budget: u64) -> Result<Vec<Vec<i64>>, GraphError> {
        let m = &self.fundamental;
        if ub.iter().zip(m).any(|(&u, &mi)| u < mi) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut z: Vec<i64> = m.clone();
        let mut visited = 0u64;
        self.dfs_antinef(0, &mut z, ub, &mut visited, budget, &mut out)?;
        Ok(out)
    }

    fn dfs_antinef(
        &self,
        idx: usize,
        z: &mut Vec<i64>,
        ub: &[i64],
        visited: &mut u64,
        budget: u64,
        out: &mut Vec<Vec<i64>>,
    ) -> Result<(), GraphError> {
        let n = self.len();
        if idx == n {
            if self.is_anti_nef(z) {
                out.push(z.clone());
            }
            return Ok(());
        }
        let lo = self.fundamental[idx];
        for c in lo..=ub[idx] {
            *visited += 1;
            if *visited > budget {
                return Err(GraphError::BoundTooLarge { budget });
            }
            z[idx] = c;
            // Optimistic value of Z·Eᵥ for assigned v: unassigned
            // neighbors sit at their minimum M.
            let feasible = (0..=idx).all(|v| {
                let mut acc = z[v] as i128 * self.vertices[v].self_intersection as i128;
                for u in 0..n {
                    if u != v && self.mult[v][u] > 0 {
                        let coeff = if u <= idx { z[u] } else { self.fundamental[u] };
                        acc += coeff as i128 * self.mult[v][u] as i128;
                    }
                }
                acc <= 0
            });
            if feasible {
                self.dfs_antinef(idx + 1, z, ub, visited, budget, out)?;
            }
        }
        z[idx] = self.fundamental[idx];
        Ok(())
    }

    /// Anti-nef cycles Z ≤ bound·M, other than multiples of M, whose μ
    /// strictly exceeds the μ of every anti-nef cycle strictly below
    /// them. Each candidate is confirmed by enumerating its own box
    /// [M, Z]. Requires a rational graph and a minimal resolution.
    pub fn srp_candidates(&self, bound: u64) -> Result<Vec<CandidateReport>, GraphError> {
        if !self.is_rational() {
            return Err(GraphError::NotRational);
        }
        if let Some(vertex) = self.first_contractible() {
            return Err(GraphError::NotMinimalResolution { vertex });
        }
        let m = &self.fundamental;
        let all = self.enumerate_antinef(bound)?;
        let mut out = Vec::new();
        for z in &all {
            if is_multiple_of(z, m) {
                continue;
            }
            let mu_z = -self.pair(m, z);
            let below = self.enumerate_antinef_box(z, DEFAULT_NODE_BUDGET)?;
            let dominated_strictly_smaller = below
                .iter()
                .filter(|w| w != &z)
                .all(|w| -self.pair(m, w) < mu_z);
            if dominated_strictly_smaller {
                out.push(CandidateReport {
                    z: z.clone(),
                    mu: u64::try_from(mu_z + 1).expect("μ is positive"),
                });
            }
        }
        Ok(out)
    }
}

fn is_multiple_of(z: &[i64], m: &[i64]) -> bool {
    // m[0] ≥ 1 always.
    if z[0] % m[0] != 0 {
        return false;
    }
    let n = z[0] / m[0];
    z.iter().zip(m).all(|(&zi, &mi)| zi == n * mi)
}

/// Ideal-side invariants attached to an anti-nef cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycleInvariants {
    /// The cycle.
    pub z: Vec<i64>,
    /// Z².
    pub self_intersection: i128,
    /// p_a(Z).
    pub arithmetic_genus: i64,
    /// -M·Z + 1 when the graph is rational; None otherwise.
    pub mu: Option<u64>,
    /// -Z².
    pub multiplicity: u64,
    /// min{r : rM ≥ Z}.
    pub loewy_length: u64,
    /// max{r : Z ≥ rM}.
    pub order: u64,
}

/// Gap report for one anti-nef cycle on a rational graph.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CycleGapReport {
    /// Invariants the gaps are built from.
    pub invariants: CycleInvariants,
    /// (μ-1)·ll - e = -(ll·M - Z)·Z ≥ 0.
    pub forward_gap: i128,
    /// e - (μ-1)·ord = -Z·(Z - ord·M) ≥ 0.
    pub reverse_gap: i128,
}

/// A cycle passing the strict-μ-maximum test.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CandidateReport {
    /// The cycle.
    pub z: Vec<i64>,
    /// Its μ = -M·Z + 1.
    pub mu: u64,
}

/// Sign check of the leading principal minors by fraction-free
/// elimination: negative definite iff the k-th minor has sign (-1)^k.
fn check_negative_definite(vertices: &[Vertex], mult: &[Vec<u32>]) -> Result<(), GraphError> {
    let n = vertices.len();
    let mut a: Vec<Vec<i128>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        vertices[i].self_intersection as i128
                    } else {
                        mult[i][j] as i128
                    }
                })
                .collect()
        })
        .collect();
    let mut prev: i128 = 1;
    for k in 0..n {
        let minor = a[k][k];
        let expect_negative = k % 2 == 0;
        if minor == 0 || (minor < 0) != expect_negative {
            return Err(GraphError::NotNegativeDefinite { minor: k + 1 });
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = minor;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minus_two(n: usize) -> Vec<Vertex> {
        vec![
            Vertex {
                self_intersection: -2,
                genus: 0
            };
            n
        ]
    }

    fn a1() -> DualGraph {
        DualGraph::new(minus_two(1), &[]).unwrap()
    }

    fn a2() -> DualGraph {
        DualGraph::new(minus_two(2), &[(0, 1)]).unwrap()
    }

    fn a3() -> DualGraph {
        DualGraph::new(minus_two(3), &[(0, 1), (1, 2)]).unwrap()
    }

    fn d4() -> DualGraph {
        DualGraph::new(minus_two(4), &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn e8() -> DualGraph {
        // Center 0; legs 1 | 2-3 | 4-5-6-7.
        DualGraph::new(
            minus_two(8),
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)],
        )
        .unwrap()
    }

    #[test]
    fn construction_guards() {
        assert_eq!(DualGraph::new(vec![], &[]), Err(GraphError::EmptyGraph));
        assert_eq!(
            DualGraph::new(
                vec![Vertex { self_intersection: 0, genus: 0 }],
                &[]
            ),
            Err(GraphError::InvalidSelfIntersection { vertex: 0, value: 0 })
        );
        assert_eq!(
            DualGraph::new(minus_two(2), &[(0, 2)]),
            Err(GraphError::InvalidEdge { a: 0, b: 2 })
        );
        assert_eq!(
            DualGraph::new(minus_two(2), &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
        assert_eq!(
            DualGraph::new(minus_two(2), &[]),
            Err(GraphError::NotConnected)
        );
        // Double edge between two (-1)-curves: minors -1, then -3.
        let bad = DualGraph::new(
            vec![
                Vertex { self_intersection: -1, genus: 0 },
                Vertex { self_intersection: -1, genus: 0 },
            ],
            &[(0, 1), (0, 1)],
        );
        assert_eq!(bad, Err(GraphError::NotNegativeDefinite { minor: 2 }));
    }

    #[test]
    fn fundamental_cycles_of_named_graphs() {
        assert_eq!(a1().fundamental_cycle(), &[1]);
        assert_eq!(a2().fundamental_cycle(), &[1, 1]);
        assert_eq!(a3().fundamental_cycle(), &[1, 1, 1]);
        assert_eq!(d4().fundamental_cycle(), &[2, 1, 1, 1]);
        assert_eq!(e8().fundamental_cycle(), &[6, 3, 4, 2, 5, 4, 3, 2]);
    }

    #[test]
    fn laufer_is_start_independent() {
        for g in [a3(), d4(), e8()] {
            let m = g.fundamental_cycle().to_vec();
            for start in 0..g.len() {
                assert_eq!(g.fundamental_cycle_from(start), m, "start {start}");
            }
        }
    }

    #[test]
    fn rationality_and_minimality() {
        for g in [a1(), a2(), a3(), d4(), e8()] {
            assert!(g.is_rational());
            assert!(g.is_minimal());
        }
        // A single elliptic curve: p_a(M) = 1.
        let ell = DualGraph::new(
            vec![Vertex { self_intersection: -2, genus: 1 }],
            &[],
        )
        .unwrap();
        assert!(!ell.is_rational());
        assert_eq!(ell.arithmetic_genus(&[1]), 1);
        // A (-1)-curve is rational but not minimal.
        let blowup = DualGraph::new(
            vec![Vertex { self_intersection: -1, genus: 0 }],
            &[],
        )
        .unwrap();
        assert!(blowup.is_rational());
        assert!(!blowup.is_minimal());
        assert_eq!(
            blowup.srp_candidates(2),
            Err(GraphError::NotMinimalResolution { vertex: 0 })
        );
        assert_eq!(ell.srp_candidates(2), Err(GraphError::NotRational));
    }

    #[test]
    fn invariants_on_a1() {
        let g = a1();
        for n in 1..=3i64 {
            let inv = g.cycle_invariants(&[n]).unwrap();
            assert_eq!(inv.mu, Some(2 * n as u64 + 1));
            assert_eq!(inv.multiplicity, 2 * (n * n) as u64);
            assert_eq!(inv.loewy_length, n as u64);
            assert_eq!(inv.order, n as u64);
            let gaps = g.dao_gaps(&[n]).unwrap();
            assert_eq!(gaps.forward_gap, 0);
            assert_eq!(gaps.reverse_gap, 0);
        }
        assert_eq!(
            g.cycle_invariants(&[0]),
            Err(GraphError::ZeroCycle)
        );
    }

    #[test]
    fn e8_fundamental_invariants() {
        let g = e8();
        let m = g.fundamental_cycle().to_vec();
        assert_eq!(g.pair(&m, &m), -2);
        let inv = g.cycle_invariants(&m).unwrap();
        assert_eq!(inv.mu, Some(3));
        assert_eq!(inv.multiplicity, 2);
        assert_eq!((inv.loewy_length, inv.order), (1, 1));
        assert_eq!(inv.arithmetic_genus, 0);
    }

    #[test]
    fn antinef_enumeration_on_a2() {
        let g = a2();
        let cycles = g.enumerate_antinef(2).unwrap();
        assert_eq!(
            cycles,
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
        // Anything below M pairs positively somewhere.
        assert!(!g.is_anti_nef(&[1, 0]));
        assert!(!g.is_anti_nef(&[0, 1]));
    }

    #[test]
    fn gap_signs_and_identities_hold_on_enumerations() {
        for g in [a2(), a3(), d4(), e8()] {
            for z in g.enumerate_antinef(3).unwrap() {
                let gaps = g.dao_gaps(&z).unwrap();
                assert!(gaps.forward_gap >= 0, "{z:?}");
                assert!(gaps.reverse_gap >= 0, "{z:?}");
                // M-multiples have no forward gap.
                if is_multiple_of(&z, g.fundamental_cycle()) {
                    assert_eq!(gaps.forward_gap, 0, "{z:?}");
                    assert_eq!(gaps.reverse_gap, 0, "{z:?}");
                }
            }
        }
    }

    #[test]
    fn candidates_on_chains() {
        let g = a2();
        // Every non-multiple survives on A₂: both M·Eᵢ < 0 makes all
        // dominated comparisons strict.
        let cands = g.srp_candidates(2).unwrap();
        let zs: Vec<&[i64]> = cands.iter().map(|c| c.z.as_slice()).collect();
        assert_eq!(zs, vec![&[1, 2][..], &[2, 1]]);
        assert!(cands.iter().all(|c| c.mu == 4));

        let g3 = a3();
        let cands = g3.srp_candidates(2).unwrap();
        let zs: Vec<&[i64]> = cands.iter().map(|c| c.z.as_slice()).collect();
        // (1,2,1) ties with (1,1,1) through the middle vertex and is
        // out; the lopsided refinements stay.
        assert!(!zs.contains(&&[1, 2, 1][..]));
        assert!(zs.contains(&&[1, 2, 2][..]));
        assert!(zs.contains(&&[2, 2, 1][..]));
    }

    #[test]
    fn candidates_on_d4_exist() {
        let g = d4();
        let cands = g.srp_candidates(2).unwrap();
        assert!(!cands.is_empty());
        let zs: Vec<&[i64]> = cands.iter().map(|c| c.z.as_slice()).collect();
        // Raising one tip of D₄ ties against M (the tip pairing is 0),
        // so that cycle is not a candidate.
        assert!(!zs.contains(&&[2, 2, 1, 1][..]));
        for c in &cands {
            let below = g.enumerate_antinef_box(&c.z, DEFAULT_NODE_BUDGET).unwrap();
            for w in below {
                if w != c.z {
                    let mu_w = -g.pair(g.fundamental_cycle(), &w) + 1;
                    assert!((mu_w as u64) < c.mu);
                }
            }
        }
    }

    #[test]
    fn budget_guard_fires() {
        let g = e8();
        let ub: Vec<i64> = g.fundamental_cycle().iter().map(|&m| m * 4).collect();
        assert_eq!(
            g.enumerate_antinef_box(&ub, 10),
            Err(GraphError::BoundTooLarge { budget: 10 })
        );
    }

    #[test]
    fn mu_lower_bound_on_elliptic() {
        let ell = DualGraph::new(
            vec![Vertex { self_intersection: -3, genus: 1 }],
            &[],
        )
        .unwrap();
        assert!(!ell.is_rational());
        // -M·Z + 1 - c with M = (1), Z = (2): 6 + 1 - c.
        assert_eq!(ell.mu_lower_bound(&[2], 0).unwrap(), 7);
        assert_eq!(ell.mu_lower_bound(&[2], 2).unwrap(), 5);
        assert!(ell.cycle_invariants(&[2]).unwrap().mu.is_none());
    }
}
