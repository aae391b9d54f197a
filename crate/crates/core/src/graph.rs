//! Undirected simple graphs on vertices `0..n`.
//!
//! A [`Graph`] is immutable once built. Edges are stored normalized (`u < v`)
//! and sorted, adjacency lists are sorted, and for graphs with at most 64
//! vertices a bitmask of every neighborhood is kept alongside for the
//! exhaustive searches in [`crate::exact`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, ParseError, Result};
use crate::rational::Rational;

/// Largest vertex count for which neighborhood bitmasks are maintained.
pub const MASK_LIMIT: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    /// Builds a graph, rejecting out-of-range endpoints, self-loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop on vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidParameter(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(Self::from_normalized(n, seen.into_iter().collect()))
    }

    fn from_normalized(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let masks = if n <= MASK_LIMIT {
            adj.iter()
                .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
                .collect()
        } else {
            Vec::new()
        };
        Self {
            n,
            edges,
            adj,
            masks,
        }
    }

    /// Parses the edge-list format: a header `n m` followed by `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or(ParseError::MalformedLine {
            line: 1,
            reason: "missing header \"n m\"".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        let mut seen = BTreeSet::new();
        let mut count = 0;
        for (line, body) in lines {
            let [u, v] = parse_pair(line, body)?;
            for w in [u, v] {
                if w >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(ParseError::SelfLoop { line, vertex: u });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ParseError::DuplicateEdge { line, u, v });
            }
            count += 1;
        }
        if count != m {
            return Err(ParseError::CountMismatch {
                expected: m,
                found: count,
            });
        }
        Ok(Self::from_normalized(n, seen.into_iter().collect()))
    }

    /// Edge-list text with edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Neighborhood bitmasks; `None` above [`MASK_LIMIT`] vertices.
    pub fn masks(&self) -> Option<&[u64]> {
        (self.n <= MASK_LIMIT).then_some(&self.masks[..])
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    /// The second component maps new labels back to the original ones.
    pub fn induced(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect::<BTreeSet<_>>();
        (
            Self::from_normalized(vertices.len(), edges.into_iter().collect()),
            vertices.to_vec(),
        )
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        DegreeSequence { degrees }
    }

    /// Vertices sorted by nondecreasing degree, ties broken by index.
    pub fn vertices_by_degree(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (self.degree(v), v));
        order
    }

    /// `|E| / |V|` as an exact rational.
    pub fn edge_density(&self) -> Result<Rational> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(Rational::new(self.m() as i64, self.n as i64))
    }

    /// Two-colouring by breadth-first search, component by component.
    /// Each component's smallest vertex lands on the left side.
    pub fn bipartition(&self) -> Result<Bipartition> {
        let mut side = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        parent[w] = u;
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(&parent, u, w),
                        });
                    }
                }
            }
        }
        let (left, right) = (0..self.n).partition(|&v| side[v] == 0);
        Ok(Bipartition { left, right })
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.components().len() == self.n
    }
}

impl FromStr for Graph {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        Graph::parse(s)
    }
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2], ParseError> {
    let malformed = |reason: &str| ParseError::MalformedLine {
        line,
        reason: reason.to_string(),
    };
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(malformed("expected exactly two integers"));
    }
    let a = fields[0]
        .parse()
        .map_err(|_| malformed("not a nonnegative integer"))?;
    let b = fields[1]
        .parse()
        .map_err(|_| malformed("not a nonnegative integer"))?;
    Ok([a, b])
}

// Both endpoints of the conflicting edge sit at the same BFS depth or one apart;
// climbing the parent pointers to the common ancestor closes an odd cycle.
fn odd_cycle(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    let on_u: BTreeSet<usize> = pu.iter().copied().collect();
    let lca_pos_w = pw
        .iter()
        .position(|x| on_u.contains(x))
        .unwrap_or(pw.len() - 1);
    let lca = pw[lca_pos_w];
    let lca_pos_u = pu.iter().position(|&x| x == lca).unwrap_or(pu.len() - 1);
    let mut cycle: Vec<usize> = pu[..=lca_pos_u].to_vec();
    cycle.extend(pw[..lca_pos_w].iter().rev());
    cycle
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Degrees in nondecreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
}

/// Small named graphs used throughout tests and examples.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle")
    }

    /// `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn parses_spec_documents() {
        let k2 = Graph::parse("2 1\n0 1").unwrap();
        assert_eq!(k2, complete(2));
        let e3 = Graph::parse("3 0").unwrap();
        assert_eq!((e3.n(), e3.m()), (3, 0));
        let p4 = Graph::parse("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(p4, path(4));
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(
            Graph::parse("2 1\n0 x"),
            Err(ParseError::MalformedLine { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse("2 1\n0 2"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 2,
                n: 2
            })
        ));
        assert!(matches!(
            Graph::parse("3 2\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            Graph::parse("3 1\n1 1"),
            Err(ParseError::SelfLoop { line: 2, vertex: 1 })
        ));
        assert!(matches!(
            Graph::parse("3 2\n0 1"),
            Err(ParseError::CountMismatch {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(
            Graph::parse(""),
            Err(ParseError::MalformedLine { .. })
        ));
    }

    #[test]
    fn serializes_sorted() {
        let g = Graph::parse("3 2\n2 1\n0 2\n").unwrap();
        assert_eq!(g.to_edge_list(), "3 2\n0 2\n1 2\n");
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(complete(2).degree_sequence().degrees, vec![1, 1]);
        assert_eq!(star(3).degree_sequence().degrees, vec![1, 1, 1, 3]);
    }

    #[test]
    fn densities() {
        assert_eq!(complete(2).edge_density().unwrap(), Rational::new(1, 2));
        assert_eq!(cycle(4).edge_density().unwrap(), Rational::from_integer(1));
        assert_eq!(path(4).edge_density().unwrap(), Rational::new(3, 4));
        assert_eq!(Graph::empty(0).edge_density(), Err(Error::EmptyGraph));
    }

    #[test]
    fn bipartitions() {
        let p4 = path(4).bipartition().unwrap();
        assert_eq!(p4.left, vec![0, 2]);
        assert_eq!(p4.right, vec![1, 3]);

        match complete(3).bipartition() {
            Err(Error::NotBipartite { cycle }) => {
                let mut c = cycle.clone();
                c.sort_unstable();
                assert_eq!(c, vec![0, 1, 2]);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }

        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let b = two_edges.bipartition().unwrap();
        for &(u, v) in two_edges.edges() {
            assert_ne!(b.left.contains(&u), b.left.contains(&v));
        }
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        // C5 with a pendant path; the witness must be a closed walk of odd length.
        let g =
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)]).unwrap();
        let Err(Error::NotBipartite { cycle }) = g.bipartition() else {
            panic!("C5 is not bipartite");
        };
        assert_eq!(cycle.len() % 2, 1);
        for i in 0..cycle.len() {
            assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn forests() {
        assert!(path(4).is_forest());
        assert!(!cycle(4).is_forest());
        assert!(Graph::empty(5).is_forest());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let (h, map) = cycle(5).induced(&[4, 0, 1]);
        assert_eq!(map, vec![4, 0, 1]);
        assert_eq!(h.edges(), &[(0, 1), (1, 2)]);
    }
}
