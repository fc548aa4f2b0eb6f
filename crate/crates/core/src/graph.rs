//! Immutable simple undirected graphs on dense vertex labels `0..n`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph. Adjacency is stored as one open-neighborhood
/// bit set per vertex; the constructors guarantee it is symmetric and
/// loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Maps each vertex of a vertex-deleted graph back to its label in the
/// original graph. `original[new] = old`, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelMap {
    original: Vec<usize>,
}

impl LabelMap {
    pub fn to_original(&self, new: usize) -> usize {
        self.original[new]
    }

    /// New label of an original vertex, or `None` if it was deleted.
    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }

    pub fn len(&self) -> usize {
        self.original.len()
    }

    pub fn is_empty(&self) -> bool {
        self.original.is_empty()
    }
}

/// Result of [`Graph::structural_flags`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    pub connected: bool,
    pub complete: bool,
    pub edgeless: bool,
    pub independent: bool,
    pub clique: bool,
    pub vertex_cover: bool,
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate and reversed edges are
    /// merged; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        let g = Graph { adj };
        debug_assert!(g.is_well_formed());
        g
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    pub fn check_subset(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            }),
            None => Ok(()),
        }
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// N[S], the union of closed neighborhoods of members of `s`.
    pub fn closed_neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Unordered vertex pairs `(u, v)` with `u < v`, lexicographic.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs().filter(move |&(u, v)| !self.has_edge(u, v))
    }

    /// Induced subgraph on `V - s`, relabeled by ascending original label.
    pub fn delete_vertices(&self, s: VertexSet) -> (Graph, LabelMap) {
        let keep: Vec<usize> = (self.vertices() - s).to_vec();
        let adj = keep
            .iter()
            .map(|&old| {
                keep.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[old].contains(w))
                    .map(|(new, _)| new)
                    .collect()
            })
            .collect();
        (Graph { adj }, LabelMap { original: keep })
    }

    pub fn delete_vertex(&self, v: usize) -> (Graph, LabelMap) {
        self.delete_vertices(VertexSet::singleton(v))
    }

    /// Replaces edge `uv` by the path `u w v` with a new vertex `w = n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let w = self.order();
        if w + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: w + 1,
                max: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj[u].remove(v);
        adj[v].remove(u);
        adj[u].insert(w);
        adj[v].insert(w);
        adj.push(VertexSet::from([u, v]));
        Ok(Graph { adj })
    }

    /// `G + uv`. Adding an existing edge returns an identical graph.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Ok(Graph { adj })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.order();
        let n = off + other.order();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|s| VertexSet::from_bits(s.bits() << off)),
        );
        Ok(Graph { adj })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.order())
            .map(|v| all - self.adj[v] - VertexSet::singleton(v))
            .collect();
        Graph { adj }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = frontier
                .iter()
                .fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v]);
            frontier = next - seen;
            seen |= next;
        }
        seen.len() == n
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|s| s.len() + 1 == n)
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|s| s.is_empty())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_vertex_cover(&self, s: VertexSet) -> bool {
        self.edges().all(|(u, v)| s.contains(u) || s.contains(v))
    }

    pub fn structural_flags(&self, s: VertexSet) -> Result<StructuralFlags> {
        self.check_subset(s)?;
        Ok(StructuralFlags {
            connected: self.is_connected(),
            complete: self.is_complete(),
            edgeless: self.is_edgeless(),
            independent: self.is_independent(s),
            clique: self.is_clique(s),
            vertex_cover: self.is_vertex_cover(s),
        })
    }

    fn is_well_formed(&self) -> bool {
        let all = self.vertices();
        (0..self.order()).all(|v| {
            !self.adj[v].contains(v)
                && self.adj[v].is_subset(all)
                && self.adj[v].iter().all(|w| self.adj[w].contains(v))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn build_path() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 3);
        assert!(g.is_well_formed());
    }

    #[test]
    fn build_dedups() {
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn build_rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(Error::LoopEdge(0)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::empty(129).is_err());
    }

    #[test]
    fn delete_vertices_relabels() {
        let (g, map) = path(4).delete_vertices(VertexSet::from([0]));
        assert_eq!(g, path(3));
        assert_eq!(map.to_original(0), 1);
        assert_eq!(map.to_new(0), None);
        assert_eq!(map.to_new(3), Some(2));

        let (g, _) = cycle(4).delete_vertices(VertexSet::from([0, 2]));
        assert_eq!(g, Graph::empty(2).unwrap());

        let (g, _) = complete(5).delete_vertex(4);
        assert_eq!(g, complete(4));

        let (g, map) = complete(3).delete_vertices(VertexSet::full(3));
        assert_eq!(g.order(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn subdivision() {
        let h = complete(3).subdivide_edge(0, 1).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.size(), 4);
        assert!(!h.has_edge(0, 1));
        assert_eq!(h.neighbors(3), VertexSet::from([0, 1]));
        assert!(h.degree_sequence_is(&[2, 2, 2, 2]));

        assert_eq!(
            path(2).subdivide_edge(0, 1).unwrap(),
            Graph::from_edges(3, [(0, 2), (2, 1)]).unwrap()
        );
        let c5 = cycle(4).subdivide_edge(2, 3).unwrap();
        assert!(c5.is_connected() && c5.degree_sequence_is(&[2; 5]));

        assert_eq!(path(3).subdivide_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn predicates() {
        let f = cycle(4).structural_flags(VertexSet::from([0, 2])).unwrap();
        assert!(f.independent && f.vertex_cover && f.connected && !f.complete);

        let f = complete(3)
            .structural_flags(VertexSet::from([0, 1]))
            .unwrap();
        assert!(f.clique && f.vertex_cover && f.complete);

        let f = path(4).structural_flags(VertexSet::from([0, 3])).unwrap();
        assert!(!f.vertex_cover && f.independent);

        let e = Graph::empty(3).unwrap();
        assert!(e.is_edgeless() && !e.is_connected());
        assert!(Graph::empty(1).unwrap().is_complete());
    }

    #[test]
    fn complement_and_union() {
        let g = cycle(4).complement();
        assert_eq!(g.size(), 2);
        let u = complete(2)
            .disjoint_union(&Graph::empty(1).unwrap())
            .unwrap();
        assert_eq!(u.order(), 3);
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let u = complete(3).disjoint_union(&complete(3)).unwrap();
        assert!(u.has_edge(3, 5) && !u.has_edge(2, 3));
    }

    impl Graph {
        fn degree_sequence_is(&self, expected: &[usize]) -> bool {
            let mut d: Vec<_> = (0..self.order()).map(|v| self.degree(v)).collect();
            d.sort_unstable();
            let mut e = expected.to_vec();
            e.sort_unstable();
            d == e
        }
    }
}
