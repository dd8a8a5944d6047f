//! IO companion to `srp-core`: text formats for monomials, ideals and
//! dual graphs, an independent bitset oracle for order computations,
//! and the bundled verification fixtures the `srplab` binary replays.

pub mod fixtures;
pub mod oracle;

pub use srp_core;

use serde::{Deserialize, Serialize};
use srp_core::ideal::Monomial;
use srp_core::lattice::{DualGraph, GraphError, Vertex};
use std::fmt;

/// Error for the text formats in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ParseError {}

fn parse_exponent(src: &str, factor: &str) -> Result<u64, ParseError> {
    src.parse::<u64>()
        .map_err(|_| ParseError(format!("bad exponent in factor `{factor}`")))
}

/// Parses a monomial written as `*`-separated factors `1`, `s`, `t`,
/// `s^k`, `t^k` (whitespace-insensitive), e.g. `s^2*t^11`.
pub fn parse_monomial(src: &str) -> Result<Monomial, ParseError> {
    let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseError("empty monomial".into()));
    }
    let mut a = 0u64;
    let mut h = 0u64;
    for factor in compact.split('*') {
        if factor == "1" {
            continue;
        }
        let (var, exp) = match factor.split_once('^') {
            Some((v, e)) => (v, parse_exponent(e, factor)?),
            None => (factor, 1),
        };
        match var {
            "s" => a += exp,
            "t" => h += exp,
            _ => {
                return Err(ParseError(format!(
                    "factor `{factor}` is not 1, s, t, s^k or t^k"
                )))
            }
        }
    }
    Ok(Monomial::new(a, h))
}

/// Parses a `;`-separated list of monomials.
pub fn parse_ideal_gens(src: &str) -> Result<Vec<Monomial>, ParseError> {
    let parts: Vec<&str> = src
        .split(';')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err(ParseError("no generators given".into()));
    }
    parts.into_iter().map(parse_monomial).collect()
}

/// Parses a comma-separated generator list such as `4,5,11`.
pub fn parse_semigroup_gens(src: &str) -> Result<Vec<u64>, ParseError> {
    src.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| ParseError(format!("bad generator `{p}`")))
        })
        .collect()
}

/// On-disk dual graph: `{"vertices":[{"self":-2,"genus":0},...],
/// "edges":[[0,1],...]}`. The `genus` field defaults to 0.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphFile {
    /// Exceptional curves.
    pub vertices: Vec<GraphVertex>,
    /// Intersection points as index pairs; repeats raise multiplicity.
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
}

/// One vertex of a [`GraphFile`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphVertex {
    /// Self-intersection of the curve.
    #[serde(rename = "self")]
    pub self_intersection: i64,
    /// Geometric genus of the curve (0 when omitted).
    #[serde(default)]
    pub genus: u64,
}

impl GraphFile {
    /// Validates the data into a [`DualGraph`].
    pub fn build(&self) -> Result<DualGraph, GraphError> {
        let vertices = self
            .vertices
            .iter()
            .map(|v| Vertex {
                self_intersection: v.self_intersection,
                genus: v.genus,
            })
            .collect();
        DualGraph::new(vertices, &self.edges)
    }
}

/// Parses the JSON graph format.
pub fn parse_graph_json(src: &str) -> Result<GraphFile, ParseError> {
    serde_json::from_str(src).map_err(|e| ParseError(format!("graph JSON: {e}")))
}

/// Renders an exact rational as `p` or `p/q`.
pub fn ratio_string(r: num_rational::Ratio<i128>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_round_trips_with_display() {
        for m in [
            Monomial::new(0, 0),
            Monomial::new(1, 0),
            Monomial::new(0, 1),
            Monomial::new(3, 0),
            Monomial::new(0, 8),
            Monomial::new(1, 1),
            Monomial::new(2, 11),
        ] {
            assert_eq!(parse_monomial(&m.to_string()), Ok(m));
        }
    }

    #[test]
    fn monomial_parser_accepts_loose_spacing() {
        assert_eq!(parse_monomial(" s^2 * t^3 "), Ok(Monomial::new(2, 3)));
        assert_eq!(parse_monomial("t*t*s"), Ok(Monomial::new(1, 2)));
        assert_eq!(parse_monomial("1*1"), Ok(Monomial::new(0, 0)));
        assert!(parse_monomial("x^2").is_err());
        assert!(parse_monomial("s^").is_err());
        assert!(parse_monomial("").is_err());
    }

    #[test]
    fn ideal_list_parsing() {
        let gens = parse_ideal_gens("s^2; t^8 ;s*t^4").unwrap();
        assert_eq!(
            gens,
            vec![
                Monomial::new(2, 0),
                Monomial::new(0, 8),
                Monomial::new(1, 4)
            ]
        );
        assert!(parse_ideal_gens(" ; ").is_err());
    }

    #[test]
    fn graph_json_round_trip() {
        let src = r#"{"vertices":[{"self":-2},{"self":-2,"genus":0}],"edges":[[0,1]]}"#;
        let file = parse_graph_json(src).unwrap();
        let graph = file.build().unwrap();
        assert_eq!(graph.fundamental_cycle(), &[1, 1]);
        let back = serde_json::to_string(&file).unwrap();
        let again = parse_graph_json(&back).unwrap().build().unwrap();
        assert_eq!(graph, again);
    }

    #[test]
    fn ratio_rendering() {
        use num_rational::Ratio;
        assert_eq!(ratio_string(Ratio::new(44, 2)), "22");
        assert_eq!(ratio_string(Ratio::new(5, 2)), "5/2");
        assert_eq!(ratio_string(Ratio::new(-5, 2)), "-5/2");
    }
}
