//! Path addition `G_{u,v,k}` and path-addition numbers.
//!
//! `G_{u,v,k}` joins `u` and `v` by a new path with `k` internal vertices,
//! labeled `n..n+k-1` in order from `u` to `v`. `k = 0` adds the edge `uv`.
//! `pa(u,v)` is the least `k >= 1` for which γ grows.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::domination::gamma_number;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Largest `k` the direct scan tries before declaring an inconsistency.
pub const PA_SCAN_CAP: usize = 6;

/// A path-addition number: finite, or the infinite value used for
/// aggregates over an empty pair class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PaValue {
    Finite(usize),
    Infinite,
}

impl PaValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            PaValue::Finite(k) => Some(k),
            PaValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == PaValue::Infinite
    }
}

impl Ord for PaValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (PaValue::Finite(a), PaValue::Finite(b)) => a.cmp(b),
            (PaValue::Finite(_), PaValue::Infinite) => Ordering::Less,
            (PaValue::Infinite, PaValue::Finite(_)) => Ordering::Greater,
            (PaValue::Infinite, PaValue::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for PaValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PaValue::Finite(k) => write!(f, "{k}"),
            PaValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Finite values serialize as numbers, `Infinite` as the string `"inf"`.
impl Serialize for PaValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PaValue::Finite(k) => s.serialize_u64(*k as u64),
            PaValue::Infinite => s.serialize_str("inf"),
        }
    }
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok(())
}

/// `G_{u,v,k}`.
pub fn path_addition(g: &Graph, u: usize, v: usize, k: usize) -> Result<Graph> {
    check_pair(g, u, v)?;
    if k == 0 {
        return g.add_edge(u, v);
    }
    let n = g.order();
    if n + k > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n: n + k,
            max: MAX_VERTICES,
        });
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|x| g.neighbors(x)).collect();
    adj.resize(n + k, VertexSet::EMPTY);
    let mut link = |a: usize, b: usize| {
        adj[a].insert(b);
        adj[b].insert(a);
    };
    link(u, n);
    for i in 1..k {
        link(n + i - 1, n + i);
    }
    link(n + k - 1, v);
    Ok(Graph::from_adjacency_unchecked(adj))
}

pub fn gamma_after_addition(g: &Graph, u: usize, v: usize, k: usize) -> Result<usize> {
    Ok(gamma_number(&path_addition(g, u, v, k)?))
}

/// `pa(u,v)` by scanning `k = 1, 2, ..` against the exact solver.
pub fn pa_direct(g: &Graph, u: usize, v: usize) -> Result<PaValue> {
    if g.order() < 2 {
        return Err(Error::TooFewVertices(g.order()));
    }
    check_pair(g, u, v)?;
    pa_direct_with_gamma(g, u, v, gamma_number(g))
}

fn pa_direct_with_gamma(g: &Graph, u: usize, v: usize, gamma: usize) -> Result<PaValue> {
    for k in 1..=PA_SCAN_CAP {
        if gamma_after_addition(g, u, v, k)? > gamma {
            return Ok(PaValue::Finite(k));
        }
    }
    Err(Error::Inconsistency(format!(
        "γ(G_{{{u},{v},k}}) did not exceed γ(G) = {gamma} for any k <= {PA_SCAN_CAP}"
    )))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPa {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
    pub pa: PaValue,
}

/// `pa` for every pair plus the four aggregates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaProfile {
    pub gamma: usize,
    /// Lexicographic by `(u, v)`, `u < v`.
    pub pairs: Vec<PairPa>,
    /// epa: minimum over adjacent pairs.
    pub epa: PaValue,
    /// Epa: maximum over adjacent pairs.
    pub upper_epa: PaValue,
    /// ēpa: minimum over nonadjacent pairs.
    pub co_epa: PaValue,
    /// Ēpa: maximum over nonadjacent pairs.
    pub upper_co_epa: PaValue,
}

impl PaProfile {
    pub fn get(&self, u: usize, v: usize) -> Option<PaValue> {
        let (u, v) = (u.min(v), u.max(v));
        self.pairs
            .iter()
            .find(|p| p.u == u && p.v == v)
            .map(|p| p.pa)
    }
}

fn min_max(values: impl Iterator<Item = PaValue>) -> (PaValue, PaValue) {
    values.fold((PaValue::Infinite, PaValue::Infinite), |(lo, hi), x| {
        let hi = if hi.is_infinite() { x } else { hi.max(x) };
        (lo.min(x), hi)
    })
}

impl PaProfile {
    pub(crate) fn from_pairs(gamma: usize, pairs: Vec<PairPa>) -> Self {
        let (epa, upper_epa) = min_max(pairs.iter().filter(|p| p.adjacent).map(|p| p.pa));
        let (co_epa, upper_co_epa) = min_max(pairs.iter().filter(|p| !p.adjacent).map(|p| p.pa));
        PaProfile {
            gamma,
            pairs,
            epa,
            upper_epa,
            co_epa,
            upper_co_epa,
        }
    }
}

fn pair_pa(g: &Graph, gamma: usize, u: usize, v: usize) -> Result<PairPa> {
    Ok(PairPa {
        u,
        v,
        adjacent: g.has_edge(u, v),
        pa: pa_direct_with_gamma(g, u, v, gamma)?,
    })
}

/// Computes `pa` for every pair directly. Pairs are evaluated in parallel
/// and merged in lexicographic order.
pub fn pa_profile(g: &Graph) -> Result<PaProfile> {
    if g.order() < 2 {
        return Err(Error::TooFewVertices(g.order()));
    }
    let gamma = gamma_number(g);
    let pairs: Vec<(usize, usize)> = g.pairs().collect();
    let pairs = pairs
        .into_par_iter()
        .map(|(u, v)| pair_pa(g, gamma, u, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(PaProfile::from_pairs(gamma, pairs))
}

/// Sequential variant of [`pa_profile`], for callers already running
/// inside a parallel loop.
pub fn pa_profile_sequential(g: &Graph) -> Result<PaProfile> {
    if g.order() < 2 {
        return Err(Error::TooFewVertices(g.order()));
    }
    let gamma = gamma_number(g);
    let pairs = g
        .pairs()
        .map(|(u, v)| pair_pa(g, gamma, u, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(PaProfile::from_pairs(gamma, pairs))
}

struct PairTable<'a>(&'a [PairPa]);

impl Serialize for PairTable<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for p in self.0 {
            m.serialize_entry(&format!("{}-{}", p.u, p.v), &p.pa)?;
        }
        m.end()
    }
}

/// JSON shape: `{"gamma", "pairs": {"u-v": pa}, "adjacent": ["u-v"],
/// "epa", "Epa", "epa_bar", "Epa_bar"}`, pairs in lexicographic order.
impl Serialize for PaProfile {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let adjacent: Vec<String> = self
            .pairs
            .iter()
            .filter(|p| p.adjacent)
            .map(|p| format!("{}-{}", p.u, p.v))
            .collect();
        let mut st = s.serialize_struct("PaProfile", 7)?;
        st.serialize_field("gamma", &self.gamma)?;
        st.serialize_field("pairs", &PairTable(&self.pairs))?;
        st.serialize_field("adjacent", &adjacent)?;
        st.serialize_field("epa", &self.epa)?;
        st.serialize_field("Epa", &self.upper_epa)?;
        st.serialize_field("epa_bar", &self.co_epa)?;
        st.serialize_field("Epa_bar", &self.upper_co_epa)?;
        st.end()
    }
}
