//! Named graphs shipped with the crate.

use crate::graph::{parse_graph_file, GraphError, VinbergGraph};

/// How a fixture acts on hyperbolic space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Realisation {
    /// Compact polyhedron in `H^n`.
    Compact(usize),
    /// Finite-volume, non-compact polyhedron in `H^n`.
    FiniteVolume(usize),
    /// Abstract Coxeter system without a fixed polyhedron.
    Abstract,
}

#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub realisation: Realisation,
}

impl Fixture {
    pub fn graph(&self) -> Result<VinbergGraph, GraphError> {
        parse_graph_file(self.text)
    }

    pub fn dimension(&self) -> Option<usize> {
        match self.realisation {
            Realisation::Compact(n) | Realisation::FiniteVolume(n) => Some(n),
            Realisation::Abstract => None,
        }
    }

    pub fn is_compact(&self) -> bool {
        matches!(self.realisation, Realisation::Compact(_))
    }
}

macro_rules! fixture {
    ($name:literal, $real:expr) => {
        Fixture {
            name: $name,
            text: include_str!(concat!("../fixtures/", $name, ".cox")),
            realisation: $real,
        }
    };
}

use Realisation::{Abstract, Compact, FiniteVolume};

pub const FIXTURES: &[Fixture] = &[
    fixture!("lanner-5333", Compact(4)),
    fixture!("lanner-5334", Compact(4)),
    fixture!("lanner-5335", Compact(4)),
    fixture!("lanner-533-11", Compact(4)),
    fixture!("lanner-cyclic", Compact(4)),
    fixture!("esselmann-1", Compact(4)),
    fixture!("esselmann-2", Compact(4)),
    fixture!("esselmann-3", Compact(4)),
    fixture!("esselmann-4", Compact(4)),
    fixture!("esselmann-5", Compact(4)),
    fixture!("esselmann-6", Compact(4)),
    fixture!("esselmann-7", Compact(4)),
    fixture!("kaplinskaja", Compact(5)),
    fixture!("tumarkin", Compact(5)),
    fixture!("makarov", Compact(5)),
    fixture!("makarov-m4", Compact(5)),
    fixture!("sigma", Abstract),
    fixture!("w1", Abstract),
    fixture!("w2", Abstract),
    fixture!("w3", Abstract),
    fixture!("w4", Abstract),
    fixture!("triangle-73", Compact(2)),
    fixture!("triangle-83", Compact(2)),
    fixture!("triangle-inf3", FiniteVolume(2)),
    fixture!("tetrahedral-353", Compact(3)),
    fixture!("lambert", Compact(2)),
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

/// Parsed graph of a shipped fixture; panics on an unknown name.
pub fn fixture_graph(name: &str) -> VinbergGraph {
    fixture(name)
        .unwrap_or_else(|| panic!("unknown fixture `{name}`"))
        .graph()
        .expect("shipped fixtures parse")
}

pub fn esselmann() -> impl Iterator<Item = &'static Fixture> {
    FIXTURES.iter().filter(|f| f.name.starts_with("esselmann-"))
}

pub fn lanner() -> impl Iterator<Item = &'static Fixture> {
    FIXTURES.iter().filter(|f| f.name.starts_with("lanner-"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{compactness_check, gram_matrix, signature, solve_prism_length, DEFAULT_PRECISION_BITS};
    use crate::graph::{parse_coxeter_symbol, symbol_to_graph, validate_graph};

    #[test]
    fn every_fixture_parses_and_validates() {
        for f in FIXTURES {
            let g = f.graph().unwrap_or_else(|e| panic!("{}: {e}", f.name));
            assert_eq!(g.dimension(), f.dimension(), "{}", f.name);
            assert!(validate_graph(&g).connected, "{}", f.name);
        }
        assert_eq!(esselmann().count(), 7);
        assert_eq!(lanner().count(), 5);
    }

    #[test]
    fn compact_fixtures_are_compact_and_hyperbolic() {
        for f in FIXTURES.iter().filter(|f| f.is_compact()) {
            let g = f.graph().unwrap();
            let n = f.dimension().unwrap();
            assert!(compactness_check(&g, n).unwrap().is_compact(), "{}", f.name);
            assert!(validate_graph(&g).signature_condition_ok(), "{}", f.name);
            let unknown = g.dotted_edges().filter(|(_, _, c)| c.is_none()).count();
            let s = if unknown == 1 {
                signature(&solve_prism_length(&g, n, DEFAULT_PRECISION_BITS).unwrap().gram)
            } else {
                assert_eq!(unknown, 0, "{}", f.name);
                signature(&gram_matrix(&g))
            };
            assert!(s.certified, "{}", f.name);
            assert_eq!((s.positives, s.negatives), (n, 1), "{}", f.name);
            assert_eq!(s.zeros, g.rank() - n - 1, "{}", f.name);
        }
    }

    #[test]
    fn finite_volume_fixture_is_not_compact() {
        let f = fixture("triangle-inf3").unwrap();
        assert!(!compactness_check(&f.graph().unwrap(), 2).unwrap().is_compact());
    }

    #[test]
    fn depicted_esselmann_graph_matches_its_symbol() {
        let g = fixture_graph("esselmann-1");
        let s = symbol_to_graph(&parse_coxeter_symbol("[(3,4,3),4,(3,4,3)]").unwrap());
        assert_eq!(g.coxeter_matrix(), s.coxeter_matrix());
    }
}
