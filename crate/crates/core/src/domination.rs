//! Exact domination: γ(G), constrained γ, γ-set enumeration, independent
//! domination, and per-vertex classification.
//!
//! Every search here is the same branch and bound. At each node the
//! undominated vertex with the fewest remaining candidate dominators is
//! chosen (ties to the smallest label) and the search branches on which of
//! those candidates joins the set; candidates tried earlier are excluded
//! from later siblings, so each solution is reached at most once. Nodes are
//! pruned with `ceil(undominated / best single-vertex coverage)`, which is
//! never weaker than `ceil(n / (Δ+1))`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Forced and forbidden vertices for [`gamma_constrained`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ConstrainedQuery {
    include: VertexSet,
    exclude: VertexSet,
}

impl ConstrainedQuery {
    pub fn new(include: VertexSet, exclude: VertexSet) -> Result<Self> {
        if include.intersects(exclude) {
            return Err(Error::OverlappingConstraints);
        }
        Ok(ConstrainedQuery { include, exclude })
    }

    pub fn including(include: VertexSet) -> Self {
        ConstrainedQuery {
            include,
            exclude: VertexSet::EMPTY,
        }
    }

    pub fn include(&self) -> VertexSet {
        self.include
    }

    pub fn exclude(&self) -> VertexSet {
        self.exclude
    }
}

pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    g.closed_neighbors_of_set(d) == g.vertices()
}

trait Sink {
    /// Largest solution size still worth reporting.
    fn limit(&self) -> usize;
    fn accept(&mut self, s: VertexSet);
}

struct Smallest {
    best: Option<VertexSet>,
}

impl Sink for Smallest {
    fn limit(&self) -> usize {
        self.best.map_or(usize::MAX, |b| b.len().saturating_sub(1))
    }
    fn accept(&mut self, s: VertexSet) {
        self.best = Some(s);
    }
}

struct Collect {
    budget: usize,
    found: Vec<VertexSet>,
}

impl Sink for Collect {
    fn limit(&self) -> usize {
        self.budget
    }
    fn accept(&mut self, s: VertexSet) {
        self.found.push(s);
    }
}

struct Search {
    closed: Vec<VertexSet>,
    all: VertexSet,
    independent: bool,
}

impl Search {
    fn new(g: &Graph, independent: bool) -> Self {
        Search {
            closed: (0..g.order()).map(|v| g.closed_neighbors(v)).collect(),
            all: g.vertices(),
            independent,
        }
    }

    fn cover(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc | self.closed[v])
    }

    /// Greedy completion by maximum fresh coverage; `None` if it gets stuck.
    fn greedy(&self, mut chosen: VertexSet, mut allowed: VertexSet) -> Option<VertexSet> {
        let mut dominated = self.cover(chosen);
        while dominated != self.all {
            let undominated = self.all - dominated;
            let (_, c) = allowed
                .iter()
                .map(|c| ((self.closed[c] & undominated).len(), c))
                .filter(|&(cov, _)| cov > 0)
                .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))?;
            chosen.insert(c);
            dominated |= self.closed[c];
            allowed.remove(c);
            if self.independent {
                allowed = allowed - self.closed[c];
            }
        }
        Some(chosen)
    }

    fn run(
        &self,
        chosen: VertexSet,
        dominated: VertexSet,
        allowed: VertexSet,
        sink: &mut dyn Sink,
    ) {
        let undominated = self.all - dominated;
        if undominated.is_empty() {
            if chosen.len() <= sink.limit() {
                sink.accept(chosen);
            }
            return;
        }

        let mut branch_on = 0;
        let mut fewest = usize::MAX;
        for w in undominated {
            let c = (self.closed[w] & allowed).len();
            if c == 0 {
                return;
            }
            if c < fewest {
                fewest = c;
                branch_on = w;
            }
        }
        let best_cover = allowed
            .iter()
            .map(|c| (self.closed[c] & undominated).len())
            .max()
            .unwrap_or(1);
        if chosen.len() + undominated.len().div_ceil(best_cover) > sink.limit() {
            return;
        }

        let mut siblings = allowed;
        for c in self.closed[branch_on] & allowed {
            siblings.remove(c);
            let child_allowed = if self.independent {
                siblings - self.closed[c]
            } else {
                siblings
            };
            self.run(
                chosen.with(c),
                dominated | self.closed[c],
                child_allowed,
                sink,
            );
        }
    }

    /// Smallest solution containing `chosen` and otherwise drawn from
    /// `allowed`, or `None` when no such dominating set exists.
    fn minimum(&self, chosen: VertexSet, allowed: VertexSet) -> Option<VertexSet> {
        if self.cover(chosen | allowed) != self.all {
            return None;
        }
        let allowed = if self.independent {
            allowed - self.cover(chosen)
        } else {
            allowed
        };
        let mut sink = Smallest {
            best: self.greedy(chosen, allowed),
        };
        self.run(chosen, self.cover(chosen), allowed, &mut sink);
        sink.best
    }

    fn all_of_size(&self, size: usize) -> Vec<VertexSet> {
        let mut sink = Collect {
            budget: size,
            found: Vec::new(),
        };
        self.run(VertexSet::EMPTY, VertexSet::EMPTY, self.all, &mut sink);
        sink.found.retain(|s| s.len() == size);
        sink.found.sort();
        sink.found
    }
}

/// γ(G) with a witness γ-set. The empty graph has γ = 0.
pub fn gamma(g: &Graph) -> (usize, VertexSet) {
    let d = Search::new(g, false)
        .minimum(VertexSet::EMPTY, g.vertices())
        .expect("V(G) always dominates");
    (d.len(), d)
}

pub fn gamma_number(g: &Graph) -> usize {
    gamma(g).0
}

/// Minimum size of a dominating set containing `q.include` and avoiding
/// `q.exclude`; `None` means no such set exists.
pub fn gamma_constrained(g: &Graph, q: ConstrainedQuery) -> Result<Option<usize>> {
    Ok(gamma_constrained_witness(g, q)?.map(|d| d.len()))
}

pub fn gamma_constrained_witness(g: &Graph, q: ConstrainedQuery) -> Result<Option<VertexSet>> {
    g.check_subset(q.include)?;
    g.check_subset(q.exclude)?;
    let allowed = g.vertices() - q.include - q.exclude;
    Ok(Search::new(g, false).minimum(q.include, allowed))
}

/// Is there a γ-set of `g` containing every vertex of `s`?
pub fn has_gamma_set_containing(g: &Graph, s: VertexSet) -> bool {
    gamma_constrained(g, ConstrainedQuery::including(s)).expect("caller passes vertices of g")
        == Some(gamma_number(g))
}

/// Every γ-set of `g`, each once, in lexicographic order.
pub fn enumerate_gamma_sets(g: &Graph) -> Vec<VertexSet> {
    let k = gamma_number(g);
    Search::new(g, false).all_of_size(k)
}

/// i(G): the minimum size of an independent dominating set, with witness.
pub fn independent_domination(g: &Graph) -> (usize, VertexSet) {
    let d = Search::new(g, true)
        .minimum(VertexSet::EMPTY, g.vertices())
        .expect("every maximal independent set dominates");
    (d.len(), d)
}

/// pn[x, M] = N[x] - N[M - {x}].
pub fn private_neighbors(g: &Graph, x: usize, m: VertexSet) -> Result<VertexSet> {
    g.check_subset(m)?;
    if !m.contains(x) {
        return Err(Error::NotAMember(x));
    }
    Ok(g.closed_neighbors(x) - g.closed_neighbors_of_set(m.without(x)))
}

/// Do the closed neighborhoods of `d` partition V(G)?
pub fn is_efficient(g: &Graph, d: VertexSet) -> bool {
    d.iter().map(|v| g.closed_neighbors(v).len()).sum::<usize>() == g.order() && is_dominating(g, d)
}

pub fn all_gamma_sets_efficient(g: &Graph) -> bool {
    enumerate_gamma_sets(g)
        .into_iter()
        .all(|d| is_efficient(g, d))
}

pub fn all_gamma_sets_cliques(g: &Graph) -> bool {
    enumerate_gamma_sets(g).into_iter().all(|d| g.is_clique(d))
}

/// Per-vertex domination data for one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    pub order: usize,
    pub gamma: usize,
    pub witness: VertexSet,
    /// In some γ-set.
    pub good: Vec<bool>,
    /// In no γ-set.
    pub bad: Vec<bool>,
    /// γ(G - v) = γ(G) - 1.
    pub critical: Vec<bool>,
    /// γ(G - v) for each v.
    pub gamma_without: Vec<usize>,
    /// {v | γ(G - v) < γ(G)}.
    pub v_minus: VertexSet,
    pub i_number: usize,
    /// Every γ-set is independent.
    pub strong_equality: bool,
}

impl DominationReport {
    pub fn good_set(&self) -> VertexSet {
        (0..self.order).filter(|&v| self.good[v]).collect()
    }

    pub fn bad_set(&self) -> VertexSet {
        (0..self.order).filter(|&v| self.bad[v]).collect()
    }

    pub fn is_critical(&self, v: usize) -> bool {
        self.v_minus.contains(v)
    }
}

pub fn classify_vertices(g: &Graph) -> DominationReport {
    let n = g.order();
    let (gamma, witness) = gamma(g);
    let search = Search::new(g, false);
    let good: Vec<bool> = (0..n)
        .map(|v| {
            search
                .minimum(VertexSet::singleton(v), g.vertices().without(v))
                .is_some_and(|d| d.len() == gamma)
        })
        .collect();
    let gamma_without: Vec<usize> = (0..n)
        .map(|v| gamma_number(&g.delete_vertex(v).0))
        .collect();
    let critical = gamma_without.iter().map(|&k| k + 1 == gamma).collect();
    let v_minus = (0..n).filter(|&v| gamma_without[v] < gamma).collect();
    let strong_equality = enumerate_gamma_sets(g)
        .into_iter()
        .all(|d| g.is_independent(d));
    DominationReport {
        order: n,
        gamma,
        witness,
        bad: good.iter().map(|&b| !b).collect(),
        good,
        critical,
        gamma_without,
        v_minus,
        i_number: independent_domination(g).0,
        strong_equality,
    }
}
