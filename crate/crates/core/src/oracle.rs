//! Structural predictions of γ(G_{u,v,k}) and the path-addition numbers.
//!
//! Nothing here solves a path-added graph. Every prediction is read off
//! `G` itself: γ-good/γ-bad vertices, the set `V⁻` of γ-critical vertices,
//! whether a γ-set contains a given pair, and γ of small vertex-deleted
//! subgraphs. [`crate::path_addition`] computes the same numbers directly,
//! and the verification harness compares the two.
//!
//! Each prediction records a [`Clause`] naming the condition that decided
//! it. Clause labels are stable strings:
//!
//! | label | case | value |
//! |---|---|---|
//! | `adjacent/k1/endpoint-good` | some endpoint is γ-good | γ |
//! | `adjacent/k1/both-bad` | both endpoints γ-bad | γ+1 |
//! | `adjacent/k2/both-bad` | both endpoints γ-bad | γ+1 |
//! | `adjacent/k2/common-gamma-set` | a γ-set contains u and v | γ |
//! | `adjacent/k2/critical-endpoint` | u or v in V⁻ | γ |
//! | `adjacent/k2/separated` | good endpoint, none critical, no common γ-set | γ+1 |
//! | `adjacent/k3/always` | every adjacent pair | γ+1 |
//! | `nonadjacent/k1/pair-deletion-drops-two` | γ(G-{u,v}) = γ-2 | γ-1 |
//! | `nonadjacent/k1/bad-and-stable` | both bad, u ∉ V⁻(G-v), v ∉ V⁻(G-u) | γ+1 |
//! | `nonadjacent/k1/neutral` | otherwise | γ |
//! | `nonadjacent/k2/common-gamma-set` | a γ-set contains u and v | γ |
//! | `nonadjacent/k2/critical-endpoint` | u or v in V⁻ | γ |
//! | `nonadjacent/k2/separated` | otherwise | γ+1 |
//! | `nonadjacent/k3/critical-then-good` | u ∈ V⁻ and v γ-good in G-u, or symmetric | γ |
//! | `nonadjacent/k3/no-critical-good-chain` | otherwise | γ+1 |
//! | `nonadjacent/k4/pair-deletion-drops-two` | γ(G-{u,v}) = γ-2 | γ |
//! | `nonadjacent/k4/doubled` | k=1 value is γ+1 | γ+2 |
//! | `nonadjacent/k4/single` | otherwise | γ+1 |
//! | `nonadjacent/k5/after-k4-absorbed` | k=4 value is γ | γ+1 |
//! | `nonadjacent/k5/undetermined` | k=4 value exceeds γ | none |

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::domination::{
    classify_vertices, gamma_number, has_gamma_set_containing, DominationReport,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::path_addition::{pa_profile, PaProfile, PaValue};
use crate::vertex_set::VertexSet;

/// The condition that decided one predicted value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    AdjacentEndpointGood,
    AdjacentBothBadK1,
    AdjacentBothBadK2,
    AdjacentCommonGammaSet,
    AdjacentCriticalEndpoint,
    AdjacentSeparated,
    AdjacentLongPath,
    PairDeletionDropsTwoK1,
    NonadjacentBadAndStable,
    NonadjacentNeutral,
    NonadjacentCommonGammaSet,
    NonadjacentCriticalEndpoint,
    NonadjacentSeparated,
    CriticalThenGood,
    NoCriticalGoodChain,
    PairDeletionDropsTwoK4,
    Doubled,
    SingleIncrease,
    AfterK4Absorbed,
    Undetermined,
}

impl Clause {
    pub fn label(self) -> &'static str {
        use Clause::*;
        match self {
            AdjacentEndpointGood => "adjacent/k1/endpoint-good",
            AdjacentBothBadK1 => "adjacent/k1/both-bad",
            AdjacentBothBadK2 => "adjacent/k2/both-bad",
            AdjacentCommonGammaSet => "adjacent/k2/common-gamma-set",
            AdjacentCriticalEndpoint => "adjacent/k2/critical-endpoint",
            AdjacentSeparated => "adjacent/k2/separated",
            AdjacentLongPath => "adjacent/k3/always",
            PairDeletionDropsTwoK1 => "nonadjacent/k1/pair-deletion-drops-two",
            NonadjacentBadAndStable => "nonadjacent/k1/bad-and-stable",
            NonadjacentNeutral => "nonadjacent/k1/neutral",
            NonadjacentCommonGammaSet => "nonadjacent/k2/common-gamma-set",
            NonadjacentCriticalEndpoint => "nonadjacent/k2/critical-endpoint",
            NonadjacentSeparated => "nonadjacent/k2/separated",
            CriticalThenGood => "nonadjacent/k3/critical-then-good",
            NoCriticalGoodChain => "nonadjacent/k3/no-critical-good-chain",
            PairDeletionDropsTwoK4 => "nonadjacent/k4/pair-deletion-drops-two",
            Doubled => "nonadjacent/k4/doubled",
            SingleIncrease => "nonadjacent/k4/single",
            AfterK4Absorbed => "nonadjacent/k5/after-k4-absorbed",
            Undetermined => "nonadjacent/k5/undetermined",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Clause {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Predicted γ(G_{u,v,k}) for one `k`. `gamma` is `None` only for the
/// undetermined k=5 case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub k: usize,
    pub gamma: Option<usize>,
    pub clause: Clause,
}

/// Everything the oracle predicts for one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub u: usize,
    pub v: usize,
    pub adjacent: bool,
    /// γ(G).
    pub gamma: usize,
    /// k = 1..=3 for adjacent pairs, k = 1..=5 for nonadjacent pairs.
    pub steps: Vec<Step>,
    pub pa: PaValue,
    /// The clause of the step where γ first grows.
    pub clause: Clause,
}

impl Prediction {
    pub fn step(&self, k: usize) -> Option<&Step> {
        self.steps.iter().find(|s| s.k == k)
    }
}

/// Structural facts about one graph, computed once and shared by all
/// pair predictions.
pub struct Oracle<'g> {
    g: &'g Graph,
    report: DominationReport,
    /// γ-good vertices of G - v in original labels, filled lazily.
    deleted: Vec<OnceLock<VertexSet>>,
}

impl<'g> Oracle<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Oracle {
            g,
            report: classify_vertices(g),
            deleted: (0..g.order()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn report(&self) -> &DominationReport {
        &self.report
    }

    pub fn gamma(&self) -> usize {
        self.report.gamma
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.g.check_vertex(u)?;
        self.g.check_vertex(v)?;
        if u == v {
            return Err(Error::SameEndpoints(u));
        }
        Ok(())
    }

    /// Some γ-set of G contains both u and v.
    pub fn common_gamma_set(&self, u: usize, v: usize) -> bool {
        has_gamma_set_containing(self.g, VertexSet::from([u, v]))
    }

    /// γ(G - {u, v}).
    pub fn gamma_without_pair(&self, u: usize, v: usize) -> usize {
        gamma_number(&self.g.delete_vertices(VertexSet::from([u, v])).0)
    }

    /// γ(G - {u, v}) = γ(G) - 2.
    pub fn pair_deletion_drops_two(&self, u: usize, v: usize) -> bool {
        self.gamma_without_pair(u, v) + 2 == self.gamma()
    }

    /// x ∈ V⁻(G - removed).
    pub fn critical_after_deleting(&self, x: usize, removed: usize) -> bool {
        self.gamma_without_pair(x, removed) < self.report.gamma_without[removed]
    }

    /// x is γ-good in G - removed, decided by a constrained search on the
    /// deleted graph.
    pub fn good_after_deleting(&self, x: usize, removed: usize) -> bool {
        let good = self.deleted[removed].get_or_init(|| {
            let (h, map) = self.g.delete_vertex(removed);
            let gh = gamma_number(&h);
            (0..h.order())
                .filter(|&y| {
                    crate::domination::gamma_constrained(
                        &h,
                        crate::domination::ConstrainedQuery::including(VertexSet::singleton(y)),
                    )
                    .expect("vertex of h")
                        == Some(gh)
                })
                .map(|y| map.to_original(y))
                .collect()
        });
        good.contains(x)
    }

    /// Both endpoints γ-bad, u ∉ V⁻(G - v) and v ∉ V⁻(G - u).
    fn bad_and_stable(&self, u: usize, v: usize) -> bool {
        self.report.bad[u]
            && self.report.bad[v]
            && !self.critical_after_deleting(u, v)
            && !self.critical_after_deleting(v, u)
    }

    fn critical_then_good(&self, u: usize, v: usize) -> bool {
        (self.report.is_critical(u) && self.good_after_deleting(v, u))
            || (self.report.is_critical(v) && self.good_after_deleting(u, v))
    }

    pub fn predict_adjacent(&self, u: usize, v: usize, k: usize) -> Result<(usize, Clause)> {
        self.check_pair(u, v)?;
        if !self.g.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let r = &self.report;
        let gamma = r.gamma;
        Ok(match k {
            1 if r.good[u] || r.good[v] => (gamma, Clause::AdjacentEndpointGood),
            1 => (gamma + 1, Clause::AdjacentBothBadK1),
            2 if r.bad[u] && r.bad[v] => (gamma + 1, Clause::AdjacentBothBadK2),
            2 if self.common_gamma_set(u, v) => (gamma, Clause::AdjacentCommonGammaSet),
            2 if r.is_critical(u) || r.is_critical(v) => (gamma, Clause::AdjacentCriticalEndpoint),
            2 => (gamma + 1, Clause::AdjacentSeparated),
            3 => (gamma + 1, Clause::AdjacentLongPath),
            _ => return Err(Error::StepOutOfRange { k, max: 3 }),
        })
    }

    pub fn predict_nonadjacent(
        &self,
        u: usize,
        v: usize,
        k: usize,
    ) -> Result<(Option<usize>, Clause)> {
        self.check_pair(u, v)?;
        if self.g.has_edge(u, v) {
            return Err(Error::AdjacentPair(u, v));
        }
        let r = &self.report;
        let gamma = r.gamma;
        let (value, clause) = match k {
            1 if self.pair_deletion_drops_two(u, v) => (gamma - 1, Clause::PairDeletionDropsTwoK1),
            1 if self.bad_and_stable(u, v) => (gamma + 1, Clause::NonadjacentBadAndStable),
            1 => (gamma, Clause::NonadjacentNeutral),
            2 if self.common_gamma_set(u, v) => (gamma, Clause::NonadjacentCommonGammaSet),
            2 if r.is_critical(u) || r.is_critical(v) => {
                (gamma, Clause::NonadjacentCriticalEndpoint)
            }
            2 => (gamma + 1, Clause::NonadjacentSeparated),
            3 if self.critical_then_good(u, v) => (gamma, Clause::CriticalThenGood),
            3 => (gamma + 1, Clause::NoCriticalGoodChain),
            4 if self.pair_deletion_drops_two(u, v) => (gamma, Clause::PairDeletionDropsTwoK4),
            4 if self.bad_and_stable(u, v) => (gamma + 2, Clause::Doubled),
            4 => (gamma + 1, Clause::SingleIncrease),
            5 if self.pair_deletion_drops_two(u, v) => (gamma + 1, Clause::AfterK4Absorbed),
            5 => return Ok((None, Clause::Undetermined)),
            _ => return Err(Error::StepOutOfRange { k, max: 5 }),
        };
        Ok((Some(value), clause))
    }

    /// All defined steps and the predicted `pa(u,v)` for one pair.
    pub fn predict(&self, u: usize, v: usize) -> Result<Prediction> {
        self.check_pair(u, v)?;
        let (u, v) = (u.min(v), u.max(v));
        let adjacent = self.g.has_edge(u, v);
        let gamma = self.gamma();
        let steps: Vec<Step> = if adjacent {
            (1..=3)
                .map(|k| {
                    self.predict_adjacent(u, v, k).map(|(g, c)| Step {
                        k,
                        gamma: Some(g),
                        clause: c,
                    })
                })
                .collect::<Result<_>>()?
        } else {
            (1..=5)
                .map(|k| {
                    self.predict_nonadjacent(u, v, k).map(|(g, c)| Step {
                        k,
                        gamma: g,
                        clause: c,
                    })
                })
                .collect::<Result<_>>()?
        };
        let crossing = steps
            .iter()
            .find(|s| s.gamma.is_some_and(|x| x > gamma))
            .ok_or_else(|| {
                Error::Inconsistency(format!("no predicted crossing for pair ({u}, {v})"))
            })?;
        Ok(Prediction {
            u,
            v,
            adjacent,
            gamma,
            pa: PaValue::Finite(crossing.k),
            clause: crossing.clause,
            steps,
        })
    }

    pub fn predict_pa(&self, u: usize, v: usize) -> Result<PaValue> {
        Ok(self.predict(u, v)?.pa)
    }
}

/// Convenience wrapper building a fresh [`Oracle`].
pub fn predict_adjacent(g: &Graph, u: usize, v: usize, k: usize) -> Result<usize> {
    Ok(Oracle::new(g).predict_adjacent(u, v, k)?.0)
}

/// Convenience wrapper building a fresh [`Oracle`]; `None` is undetermined.
pub fn predict_nonadjacent(g: &Graph, u: usize, v: usize, k: usize) -> Result<Option<usize>> {
    Ok(Oracle::new(g).predict_nonadjacent(u, v, k)?.0)
}

pub fn predict_pa(g: &Graph, u: usize, v: usize) -> Result<PaValue> {
    if g.order() < 2 {
        return Err(Error::TooFewVertices(g.order()));
    }
    Oracle::new(g).predict_pa(u, v)
}

/// A whole-graph characterization that decided an aggregate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Characterization {
    EdgelessConvention,
    BadVerticesSpanEdge,
    EveryEdgeCommonSetOrCritical,
    EpaOtherwise,
    AllGammaSetsIndependent,
    SomeGammaSetNotIndependent,
    CompleteConvention,
    Edgeless,
    BadStablePair,
    SeparatedNoncriticalPair,
    PairWithoutCriticalGoodChain,
    CoEpaOtherwise,
    GammaOne,
    AllGammaSetsCliques,
    PairDeletionDropsTwo,
    CriticalGoodChainPair,
    UpperCoEpaOtherwise,
}

impl Characterization {
    pub fn label(self) -> &'static str {
        use Characterization::*;
        match self {
            EdgelessConvention => "epa=Epa=inf:edgeless",
            BadVerticesSpanEdge => "epa=1:bad-vertices-span-an-edge",
            EveryEdgeCommonSetOrCritical => "epa=3:every-edge-common-set-or-critical",
            EpaOtherwise => "epa=2:otherwise",
            AllGammaSetsIndependent => "Epa=2:all-gamma-sets-independent",
            SomeGammaSetNotIndependent => "Epa=3:some-gamma-set-not-independent",
            CompleteConvention => "epa_bar=Epa_bar=inf:complete",
            Edgeless => "epa_bar=5:edgeless",
            BadStablePair => "epa_bar=1:bad-and-stable-pair",
            SeparatedNoncriticalPair => "epa_bar=2:separated-noncritical-pair",
            PairWithoutCriticalGoodChain => "epa_bar=3:pair-without-critical-good-chain",
            CoEpaOtherwise => "epa_bar=4:otherwise",
            GammaOne => "Epa_bar=1:gamma-one",
            AllGammaSetsCliques => "Epa_bar=2:all-gamma-sets-cliques",
            PairDeletionDropsTwo => "Epa_bar=5:pair-deletion-drops-two",
            CriticalGoodChainPair => "Epa_bar=4:critical-good-chain-pair",
            UpperCoEpaOtherwise => "Epa_bar=3:otherwise",
        }
    }
}

impl Serialize for Characterization {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// The four aggregates as decided by whole-graph characterizations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Aggregates {
    pub epa: PaValue,
    #[serde(rename = "Epa")]
    pub upper_epa: PaValue,
    #[serde(rename = "epa_bar")]
    pub co_epa: PaValue,
    #[serde(rename = "Epa_bar")]
    pub upper_co_epa: PaValue,
    pub fired: Vec<Characterization>,
}

impl Aggregates {
    pub fn matches(&self, p: &PaProfile) -> bool {
        (self.epa, self.upper_epa, self.co_epa, self.upper_co_epa)
            == (p.epa, p.upper_epa, p.co_epa, p.upper_co_epa)
    }
}

impl Oracle<'_> {
    /// epa, Epa, ēpa, Ēpa from their closed-form characterizations.
    pub fn characterize_aggregates(&self) -> Result<Aggregates> {
        let g = self.g;
        if g.order() < 2 {
            return Err(Error::TooFewVertices(g.order()));
        }
        let r = &self.report;
        let mut fired = Vec::new();
        // value 0 stands for the infinite convention
        let mut decide = |value: usize, c: Characterization| {
            fired.push(c);
            match value {
                0 => PaValue::Infinite,
                k => PaValue::Finite(k),
            }
        };

        let (epa, upper_epa) = if g.is_edgeless() {
            let inf = decide(0, Characterization::EdgelessConvention);
            (inf, inf)
        } else {
            let bad = r.bad_set();
            let epa = if !bad.is_empty() && !g.is_independent(bad) {
                decide(1, Characterization::BadVerticesSpanEdge)
            } else if g
                .edges()
                .all(|(u, v)| self.common_gamma_set(u, v) || r.is_critical(u) || r.is_critical(v))
            {
                decide(3, Characterization::EveryEdgeCommonSetOrCritical)
            } else {
                decide(2, Characterization::EpaOtherwise)
            };
            let upper = if r.strong_equality {
                decide(2, Characterization::AllGammaSetsIndependent)
            } else {
                decide(3, Characterization::SomeGammaSetNotIndependent)
            };
            (epa, upper)
        };

        let (co_epa, upper_co_epa) = if g.is_complete() {
            let inf = decide(0, Characterization::CompleteConvention);
            (inf, inf)
        } else {
            let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
            let co = if g.is_edgeless() {
                decide(5, Characterization::Edgeless)
            } else if non_edges.iter().any(|&(u, v)| self.bad_and_stable(u, v)) {
                decide(1, Characterization::BadStablePair)
            } else if non_edges.iter().any(|&(u, v)| {
                !r.is_critical(u) && !r.is_critical(v) && !self.common_gamma_set(u, v)
            }) {
                decide(2, Characterization::SeparatedNoncriticalPair)
            } else if non_edges
                .iter()
                .any(|&(u, v)| !self.critical_then_good(u, v))
            {
                decide(3, Characterization::PairWithoutCriticalGoodChain)
            } else {
                decide(4, Characterization::CoEpaOtherwise)
            };
            let upper = if r.gamma == 1 {
                decide(1, Characterization::GammaOne)
            } else if crate::domination::all_gamma_sets_cliques(g) {
                decide(2, Characterization::AllGammaSetsCliques)
            } else if non_edges
                .iter()
                .any(|&(u, v)| self.pair_deletion_drops_two(u, v))
            {
                decide(5, Characterization::PairDeletionDropsTwo)
            } else if non_edges
                .iter()
                .any(|&(u, v)| self.critical_then_good(u, v))
            {
                decide(4, Characterization::CriticalGoodChainPair)
            } else {
                decide(3, Characterization::UpperCoEpaOtherwise)
            };
            (co, upper)
        };

        Ok(Aggregates {
            epa,
            upper_epa,
            co_epa,
            upper_co_epa,
            fired,
        })
    }

    /// Every vertex γ-good, `V⁻` empty, and every nonadjacent pair inside
    /// a common γ-set. Complete graphs are excluded (their ēpa is infinite).
    pub fn in_class_u(&self) -> Result<bool> {
        let g = self.g;
        if g.order() < 2 {
            return Err(Error::TooFewVertices(g.order()));
        }
        let r = &self.report;
        Ok(!g.is_complete()
            && r.good.iter().all(|&b| b)
            && r.v_minus.is_empty()
            && g.non_edges().all(|(u, v)| self.common_gamma_set(u, v)))
    }

    pub fn classify_regions(&self) -> Result<RegionClass> {
        let g = self.g;
        if g.is_edgeless() {
            return Err(Error::Hypothesis(
                "region classes need at least one edge".into(),
            ));
        }
        let r = &self.report;
        let in_a = self.characterize_aggregates()?.epa == PaValue::Finite(3);
        let in_a1 = g.is_vertex_cover(r.v_minus);
        let in_a2 = g.edges().all(|(u, v)| self.common_gamma_set(u, v));
        let in_a3 = r.v_minus == g.vertices();
        Ok(RegionClass::from_flags(in_a, in_a1, in_a2, in_a3))
    }
}

/// Cells of the class diagram inside `epa = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Region {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    NotInA,
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Class membership flags:
/// `A`: epa = 3; `A1`: V⁻ is a vertex cover; `A2`: every edge lies in a
/// γ-set; `A3`: every vertex is γ-critical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegionClass {
    pub in_a: bool,
    pub in_a1: bool,
    pub in_a2: bool,
    pub in_a3: bool,
    pub region: Region,
}

impl RegionClass {
    /// R0 = A-(A1∪A2), R1 = A1-(A2∪A3), R2 = A3-A2, R3 = A3∩A2,
    /// R4 = (A1∩A2)-A3, R5 = A2-A1.
    pub fn from_flags(in_a: bool, in_a1: bool, in_a2: bool, in_a3: bool) -> Self {
        let region = match (in_a, in_a1, in_a2, in_a3) {
            (false, ..) => Region::NotInA,
            (true, _, true, true) => Region::R3,
            (true, _, false, true) => Region::R2,
            (true, true, true, false) => Region::R4,
            (true, true, false, false) => Region::R1,
            (true, false, true, false) => Region::R5,
            (true, false, false, false) => Region::R0,
        };
        RegionClass {
            in_a,
            in_a1,
            in_a2,
            in_a3,
            region,
        }
    }

    /// A3 ⊆ A1 and A1 ∪ A2 ⊆ A.
    pub fn implications_hold(&self) -> bool {
        (!self.in_a3 || self.in_a1) && (!(self.in_a1 || self.in_a2) || self.in_a)
    }
}

pub fn characterize_aggregates(g: &Graph) -> Result<Aggregates> {
    Oracle::new(g).characterize_aggregates()
}

pub fn classify_regions(g: &Graph) -> Result<RegionClass> {
    Oracle::new(g).classify_regions()
}

pub fn in_class_u(g: &Graph) -> Result<bool> {
    Oracle::new(g).in_class_u()
}

/// The four two-term sums of aggregates and whether each is in range:
/// `epa+Ēpa ∈ [2,8]`, `epa+ēpa ∈ [2,7]`, `Epa+Ēpa ∈ [3,8]`, `Epa+ēpa ∈ [3,7]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SumBounds {
    pub epa_plus_upper_co: usize,
    pub epa_plus_co: usize,
    pub upper_epa_plus_upper_co: usize,
    pub upper_epa_plus_co: usize,
    pub holds: [bool; 4],
}

impl SumBounds {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|&b| b)
    }
}

pub fn check_sum_bounds(g: &Graph) -> Result<SumBounds> {
    check_sum_bounds_with(g, &pa_profile(g)?)
}

/// As [`check_sum_bounds`], reusing an already computed profile.
pub fn check_sum_bounds_with(g: &Graph, p: &PaProfile) -> Result<SumBounds> {
    if !g.is_connected() {
        return Err(Error::Hypothesis("graph must be connected".into()));
    }
    if g.is_complete() {
        return Err(Error::Hypothesis("graph must be noncomplete".into()));
    }
    if g.is_edgeless() {
        return Err(Error::Hypothesis("graph must have edges".into()));
    }
    let f = |x: PaValue| {
        x.finite().ok_or_else(|| {
            Error::Inconsistency("infinite aggregate on a connected noncomplete graph".into())
        })
    };
    let (a, b, c, d) = (f(p.epa)?, f(p.upper_epa)?, f(p.co_epa)?, f(p.upper_co_epa)?);
    let sums = [a + d, a + c, b + d, b + c];
    let ranges = [(2, 8), (2, 7), (3, 8), (3, 7)];
    let holds = std::array::from_fn(|i| (ranges[i].0..=ranges[i].1).contains(&sums[i]));
    Ok(SumBounds {
        epa_plus_upper_co: sums[0],
        epa_plus_co: sums[1],
        upper_epa_plus_upper_co: sums[2],
        upper_epa_plus_co: sums[3],
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilySpec;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn adjacent_examples() {
        let p4 = gen("path(4)");
        let o = Oracle::new(&p4);
        assert_eq!(
            o.predict_adjacent(1, 2, 2).unwrap(),
            (2, Clause::AdjacentCommonGammaSet)
        );
        assert_eq!(predict_adjacent(&gen("cycle(4)"), 0, 1, 1).unwrap(), 2);
        assert_eq!(predict_adjacent(&gen("complete(2)"), 0, 1, 2).unwrap(), 2);
        assert_eq!(o.predict_adjacent(0, 2, 1), Err(Error::NotAnEdge(0, 2)));
        assert_eq!(
            o.predict_adjacent(0, 1, 4),
            Err(Error::StepOutOfRange { k: 4, max: 3 })
        );
    }

    #[test]
    fn nonadjacent_examples() {
        assert_eq!(
            predict_nonadjacent(&gen("star(3)"), 1, 2, 1).unwrap(),
            Some(2)
        );
        let c4 = gen("cycle(4)");
        let o = Oracle::new(&c4);
        assert_eq!(
            o.predict_nonadjacent(0, 2, 3).unwrap(),
            (Some(2), Clause::CriticalThenGood)
        );
        assert_eq!(
            o.predict_nonadjacent(0, 1, 3),
            Err(Error::AdjacentPair(0, 1))
        );
        let e3 = Graph::empty(3).unwrap();
        let o = Oracle::new(&e3);
        assert_eq!(
            o.predict_nonadjacent(0, 1, 4).unwrap(),
            (Some(3), Clause::PairDeletionDropsTwoK4)
        );
        assert_eq!(
            o.predict_nonadjacent(0, 1, 5).unwrap(),
            (Some(4), Clause::AfterK4Absorbed)
        );
        assert_eq!(
            Oracle::new(&c4).predict_nonadjacent(0, 2, 5).unwrap(),
            (None, Clause::Undetermined)
        );
    }

    #[test]
    fn pa_predictions() {
        let p4 = gen("path(4)");
        let pred = Oracle::new(&p4).predict(0, 1).unwrap();
        assert_eq!(pred.pa, PaValue::Finite(3));
        assert_eq!(
            pred.step(2).unwrap().clause,
            Clause::AdjacentCriticalEndpoint
        );
        assert_eq!(
            predict_pa(&gen("complete(3)"), 0, 1).unwrap(),
            PaValue::Finite(2)
        );
        let pred = Oracle::new(&gen("complete(3)")).predict(0, 1).unwrap();
        assert_eq!(pred.clause, Clause::AdjacentSeparated);

        let rook = gen("rook(3)");
        let o = Oracle::new(&rook);
        for (u, v) in rook.non_edges() {
            assert_eq!(
                o.predict_pa(u, v).unwrap(),
                PaValue::Finite(4),
                "pair {u},{v}"
            );
        }
    }

    #[test]
    fn aggregate_examples() {
        let a = characterize_aggregates(&gen("crown(3)")).unwrap();
        assert_eq!(a.upper_epa, PaValue::Finite(2));
        assert!(a.fired.contains(&Characterization::AllGammaSetsIndependent));

        let a = characterize_aggregates(&gen("star(3)")).unwrap();
        assert_eq!(a.upper_co_epa, PaValue::Finite(1));

        let a = characterize_aggregates(&gen("complete(6)")).unwrap();
        assert_eq!(
            (a.co_epa, a.upper_co_epa),
            (PaValue::Infinite, PaValue::Infinite)
        );

        let a = characterize_aggregates(&gen("cycle(5)")).unwrap();
        assert_eq!(
            (a.co_epa, a.upper_co_epa),
            (PaValue::Finite(3), PaValue::Finite(3))
        );
        assert!(a.matches(&pa_profile(&gen("cycle(5)")).unwrap()));
    }

    #[test]
    fn region_examples() {
        assert_eq!(
            classify_regions(&gen("cycle(4)")).unwrap().region,
            Region::R3
        );
        assert_eq!(
            classify_regions(&gen("complete_bipartite(2,3)"))
                .unwrap()
                .region,
            Region::R4
        );
        assert_eq!(
            classify_regions(&gen("corona(path(2))")).unwrap().region,
            Region::R0
        );
        assert_eq!(
            classify_regions(&gen("star(3)")).unwrap().region,
            Region::NotInA
        );
        assert!(matches!(
            classify_regions(&Graph::empty(3).unwrap()),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn region_partition_is_total_and_exclusive() {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        for bits in 0..16u8 {
            let f = |i: u8| bits >> i & 1 == 1;
            let rc = RegionClass::from_flags(f(0), f(1), f(2), f(3));
            if rc.implications_hold() && rc.in_a {
                seen.insert(rc.region);
                assert_ne!(rc.region, Region::NotInA);
            }
        }
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn class_u_examples() {
        assert!(in_class_u(&gen("cycle(5)")).unwrap());
        assert!(in_class_u(&gen("union(complete(3),complete(3))")).unwrap());
        assert!(!in_class_u(&gen("union(complete(2),complete(1))")).unwrap());
        assert!(!in_class_u(&gen("complete(4)")).unwrap());
    }

    #[test]
    fn sum_bound_examples() {
        let s = check_sum_bounds(&gen("cycle(4)")).unwrap();
        assert_eq!(s.epa_plus_co, 7);
        assert!(s.all_hold());
        assert!(check_sum_bounds(&gen("path(4)")).unwrap().all_hold());
        assert!(matches!(
            check_sum_bounds(&gen("complete(4)")),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            check_sum_bounds(&gen("union(path(2),path(2))")),
            Err(Error::Hypothesis(_))
        ));
    }
}
