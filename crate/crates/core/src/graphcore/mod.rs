//! Simple undirected graphs, circulants, cartesian products, the fixed
//! fixtures used throughout, and graph6 interchange.

pub mod graph6;
mod named;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::ExactMatrix;
use crate::polyz::IntPoly;

pub use named::{named_graph, NamedGraph};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::MultiEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn adjacency(&self) -> ExactMatrix {
        let n = self.order();
        let mut m = ExactMatrix::zero(n);
        for (u, v) in self.edges() {
            m.set(u, v, BigInt::one());
            m.set(v, u, BigInt::one());
        }
        m
    }

    /// `A v` using adjacency lists.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.order());
        self.adj
            .iter()
            .map(|list| list.iter().map(|&w| &v[w]).sum())
            .collect()
    }

    pub fn annihilates(&self, v: &[BigInt]) -> bool {
        v.len() == self.order() && self.apply(v).iter().all(Zero::is_zero)
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(n, edges).expect("complement of a simple graph is simple")
    }

    /// Whether `perm` (a vertex map) preserves adjacency.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        perm.len() == self.order()
            && self.edges().all(|(u, v)| self.has_edge(perm[u], perm[v]))
    }

    /// One `u v` pair per line.
    pub fn edge_list_text(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

/// `Circ(n, S)` with `S` a set of jumps in `1..=n/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    n: usize,
    jumps: BTreeSet<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, jumps: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let max = n / 2;
        let mut set = BTreeSet::new();
        for s in jumps {
            if s == 0 || s > max {
                return Err(Error::JumpOutOfRange { jump: s, n, max });
            }
            if !set.insert(s) {
                return Err(Error::DuplicateJump(s));
            }
        }
        Ok(CirculantSpec { n, jumps: set })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn jumps(&self) -> &BTreeSet<usize> {
        &self.jumps
    }

    /// `2|S|`, less one when `n/2` is a jump.
    pub fn degree(&self) -> usize {
        let half = self.n.is_multiple_of(2) && self.jumps.contains(&(self.n / 2));
        2 * self.jumps.len() - usize::from(half)
    }

    /// Sum of `x^j + x^(n-j)` over the jumps, with a single `x^(n/2)` term
    /// for the antipodal jump. Its values at the `n`-th roots of unity are
    /// the eigenvalues of the circulant.
    pub fn connection_poly(&self) -> IntPoly {
        let mut c = vec![BigInt::zero(); self.n];
        for &s in &self.jumps {
            c[s] = BigInt::one();
            c[self.n - s] = BigInt::one();
        }
        IntPoly::from_coeffs(c)
    }

    pub fn graph(&self) -> Graph {
        circulant(self)
    }
}

pub fn circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n;
    // The antipodal jump yields each of its edges twice; the set keeps one.
    let edges: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|u| spec.jumps.iter().map(move |&s| (u, (u + s) % n)))
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::from_edges(n, edges).expect("circulant edges are simple")
}

/// `G □ H` with vertex `(g, h)` at index `g * |H| + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.order() == 0 || h.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let nh = h.order();
    let idx = |a: usize, b: usize| a * nh + b;
    let mut edges = Vec::with_capacity(g.order() * h.edge_count() + nh * g.edge_count());
    for a in 0..g.order() {
        for (u, v) in h.edges() {
            edges.push((idx(a, u), idx(a, v)));
        }
    }
    for (u, v) in g.edges() {
        for b in 0..nh {
            edges.push((idx(u, b), idx(v, b)));
        }
    }
    Graph::from_edges(g.order() * nh, edges)
}
