//! Named small graphs: the Λ₁ obstructions and the forbidden family for Λ₂.
//!
//! Vertex labels follow the drawn labels `v0, v1, ...` of each figure (for the
//! four Λ₁ obstructions the drawn `v1..v4` become `0..3`).

use std::collections::BTreeMap;

use super::Graph;
use crate::error::{Error, Result};

const TABLE: &[(&str, usize, &[(usize, usize)])] = &[
    ("P4", 4, &[(0, 1), (1, 2), (2, 3)]),
    ("paw", 4, &[(0, 1), (0, 2), (1, 2), (2, 3)]),
    ("diamond", 4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]),
    ("C4", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)]),
    ("bull", 5, &[(0, 4), (1, 3), (2, 3), (2, 4), (3, 4)]),
    ("dart", 5, &[(0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    ("house", 5, &[(0, 1), (0, 4), (1, 3), (2, 3), (2, 4), (3, 4)]),
    ("gem", 5, &[(0, 3), (0, 4), (1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]),
    (
        "full-house",
        5,
        &[(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
    ),
    ("G_{6,5}", 6, &[(0, 4), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)]),
    ("5-pan", 6, &[(0, 5), (1, 2), (1, 4), (2, 3), (3, 5), (4, 5)]),
    ("G_{6,7}", 6, &[(0, 4), (1, 2), (1, 5), (2, 5), (3, 4), (3, 5)]),
    ("G_{6,8}", 6, &[(0, 5), (1, 4), (1, 5), (2, 3), (2, 5), (3, 5), (4, 5)]),
    ("G_{6,9}", 6, &[(0, 5), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)]),
    ("G_{6,10}", 6, &[(0, 1), (0, 5), (1, 4), (2, 4), (2, 5), (3, 4), (3, 5)]),
    (
        "co-twin-house",
        6,
        &[(0, 5), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
    ),
    (
        "G_{6,12}",
        6,
        &[(0, 5), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
    ),
    (
        "co-twin-C5",
        6,
        &[(0, 1), (0, 5), (1, 4), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5)],
    ),
    (
        "G_{6,14}",
        6,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    ),
    (
        "G_{6,15}",
        7,
        &[
            (0, 1),
            (0, 6),
            (1, 6),
            (2, 4),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 6),
            (5, 6),
        ],
    ),
];

/// Every catalogued name, in figure order.
pub const ATLAS_NAMES: [&str; 20] = [
    "P4",
    "paw",
    "diamond",
    "C4",
    "bull",
    "dart",
    "house",
    "gem",
    "full-house",
    "G_{6,5}",
    "5-pan",
    "G_{6,7}",
    "G_{6,8}",
    "G_{6,9}",
    "G_{6,10}",
    "co-twin-house",
    "G_{6,12}",
    "co-twin-C5",
    "G_{6,14}",
    "G_{6,15}",
];

/// The drawn forbidden family for graphs with at most two trivial distance
/// ideals (sixteen graphs; the accompanying text speaks of seventeen).
pub const FORBIDDEN_FAMILY: [&str; 16] = [
    "bull",
    "dart",
    "house",
    "gem",
    "full-house",
    "G_{6,5}",
    "5-pan",
    "G_{6,7}",
    "G_{6,8}",
    "G_{6,9}",
    "G_{6,10}",
    "co-twin-house",
    "G_{6,12}",
    "co-twin-C5",
    "G_{6,14}",
    "G_{6,15}",
];

/// Members of the forbidden family that have diameter 2, for which
/// forbiddenness follows from the diameter-2 monotonicity lemma alone.
pub const PROPOSITION_DIAMETER_TWO: [&str; 8] = [
    "dart",
    "house",
    "gem",
    "full-house",
    "G_{6,8}",
    "G_{6,10}",
    "co-twin-C5",
    "G_{6,14}",
];

/// Obstructions for one trivial distance ideal over the integers.
pub const LAMBDA1_FAMILY: [&str; 3] = ["P4", "paw", "diamond"];

/// Obstructions for one trivial distance ideal over the reals.
pub const LAMBDA1_REAL_FAMILY: [&str; 4] = ["P4", "paw", "diamond", "C4"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtlasEntry {
    pub name: String,
    pub graph: Graph,
}

/// Looks up a catalogued graph by its canonical name.
pub fn atlas(name: &str) -> Result<AtlasEntry> {
    TABLE
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|&(n, order, edges)| AtlasEntry {
            name: n.to_string(),
            graph: Graph::from_edges(order, edges).expect("atlas table is well formed"),
        })
        .ok_or_else(|| Error::UnknownAtlasName(name.to_string()))
}

/// A full catalogue that can be overridden entry by entry, so callers can
/// run the verification routines against a modified atlas.
#[derive(Debug, Clone)]
pub struct Atlas {
    entries: BTreeMap<String, Graph>,
}

impl Atlas {
    pub fn standard() -> Atlas {
        let entries = ATLAS_NAMES
            .iter()
            .map(|&n| (n.to_string(), atlas(n).unwrap().graph))
            .collect();
        Atlas { entries }
    }

    pub fn get(&self, name: &str) -> Result<&Graph> {
        self.entries
            .get(name)
            .ok_or_else(|| Error::UnknownAtlasName(name.to_string()))
    }

    /// Replaces the graph stored under `name`.
    pub fn with_override(mut self, name: &str, graph: Graph) -> Result<Atlas> {
        match self.entries.get_mut(name) {
            Some(slot) => {
                *slot = graph;
                Ok(self)
            }
            None => Err(Error::UnknownAtlasName(name.to_string())),
        }
    }

    /// `(name, graph)` pairs for the given names, in the given order.
    pub fn family<'a>(&'a self, names: &'a [&'a str]) -> impl Iterator<Item = (&'a str, &'a Graph)> {
        names.iter().map(move |&n| (n, &self.entries[n]))
    }
}

impl Default for Atlas {
    fn default() -> Self {
        Atlas::standard()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcriptions() {
        let bull = atlas("bull").unwrap().graph;
        assert_eq!(bull.n(), 5);
        assert_eq!(bull.edges(), vec![(0, 4), (1, 3), (2, 3), (2, 4), (3, 4)]);
        let pan = atlas("5-pan").unwrap().graph;
        assert_eq!(pan.edges(), vec![(0, 5), (1, 2), (1, 4), (2, 3), (3, 5), (4, 5)]);
        let g615 = atlas("G_{6,15}").unwrap().graph;
        assert_eq!(g615.n(), 7);
        assert_eq!(
            g615.edges(),
            vec![(0, 1), (0, 6), (1, 6), (2, 4), (2, 5), (3, 4), (3, 5), (4, 6), (5, 6)]
        );
        assert!(matches!(atlas("domino"), Err(Error::UnknownAtlasName(_))));
    }

    #[test]
    fn all_connected_and_proposition_members_have_diameter_two() {
        for name in ATLAS_NAMES {
            assert!(atlas(name).unwrap().graph.is_connected(), "{name}");
        }
        for name in PROPOSITION_DIAMETER_TWO {
            assert_eq!(atlas(name).unwrap().graph.diameter().unwrap(), 2, "{name}");
        }
        assert_eq!(atlas("gem").unwrap().graph.diameter().unwrap(), 2);
    }

    #[test]
    fn family_members_are_distinct() {
        for (i, a) in FORBIDDEN_FAMILY.iter().enumerate() {
            for b in &FORBIDDEN_FAMILY[i + 1..] {
                let (ga, gb) = (atlas(a).unwrap().graph, atlas(b).unwrap().graph);
                assert!(!super::super::isomorphic(&ga, &gb), "{a} ~ {b}");
            }
        }
    }

    #[test]
    fn override_replaces_entry() {
        let a = Atlas::standard()
            .with_override("bull", Graph::path(5))
            .unwrap();
        assert_eq!(a.get("bull").unwrap(), &Graph::path(5));
        assert!(Atlas::standard().with_override("nope", Graph::path(2)).is_err());
    }
}
