use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::Error;

/// The fixed graphs used as factors and regression fixtures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// Frucht graph: cubic, 12 vertices, trivial automorphism group.
    FruchtF3,
    /// 5-regular nut graph on 10 vertices, the complement of a 4-regular graph.
    F5,
    /// 5-regular nut graph on 10 vertices; removing vertices 8 and 9 leaves a
    /// square antiprism.
    G10Example,
    K2,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 4] = [
        NamedGraph::FruchtF3,
        NamedGraph::F5,
        NamedGraph::G10Example,
        NamedGraph::K2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::FruchtF3 => "frucht_f3",
            NamedGraph::F5 => "f5",
            NamedGraph::G10Example => "g10_example",
            NamedGraph::K2 => "k2",
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::UnknownGraph(s.to_string()))
    }
}

const FRUCHT_EDGES: [(usize, usize); 18] = [
    (0, 1), (0, 6), (0, 7), (1, 2), (1, 7), (2, 3), (2, 8), (3, 4), (3, 9),
    (4, 5), (4, 9), (5, 6), (5, 10), (6, 10), (7, 11), (8, 9), (8, 11), (10, 11),
];

const F5_COMPLEMENT_EDGES: [(usize, usize); 20] = [
    (0, 6), (0, 7), (0, 8), (0, 9), (1, 6), (1, 7), (1, 8), (1, 9), (2, 5), (2, 7),
    (2, 8), (2, 9), (3, 4), (3, 5), (3, 6), (3, 9), (4, 5), (4, 6), (4, 8), (5, 7),
];

const G10_EDGES: [(usize, usize); 25] = [
    (0, 9), (1, 9), (2, 9), (3, 9), (4, 8), (6, 8), (5, 8), (7, 8), (4, 5),
    (4, 6), (6, 7), (5, 7), (0, 1), (1, 3), (3, 2), (2, 0), (7, 2), (2, 5),
    (5, 0), (0, 4), (4, 1), (1, 6), (6, 3), (3, 7), (9, 8),
];

pub fn named_graph(which: NamedGraph) -> Graph {
    let build = |n, edges: &[(usize, usize)]| {
        Graph::from_edges(n, edges.iter().copied()).expect("fixture edge lists are simple")
    };
    match which {
        NamedGraph::FruchtF3 => build(12, &FRUCHT_EDGES),
        NamedGraph::F5 => build(10, &F5_COMPLEMENT_EDGES).complement(),
        NamedGraph::G10Example => build(10, &G10_EDGES),
        NamedGraph::K2 => build(2, &[(0, 1)]),
    }
}
