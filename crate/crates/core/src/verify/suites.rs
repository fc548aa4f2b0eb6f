//! The individual checks. Each suite looks at one corpus graph at a time
//! and records every comparison it makes in a [`Tally`].

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};

use crate::domination::{
    all_gamma_sets_efficient, enumerate_gamma_sets, gamma_number, has_gamma_set_containing,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{emit_graph6, parse_graph6};
use crate::oracle::{check_sum_bounds_with, Oracle, Region};
use crate::path_addition::{
    gamma_after_addition, pa_profile_sequential, path_addition, PaProfile, PaValue,
};
use crate::vertex_set::VertexSet;

/// Counterexamples kept per suite; later failures are only counted.
pub const MAX_COUNTEREXAMPLES: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    OracleEquivalence,
    TheoremTri,
    TheoremFive,
    AggregateBounds,
    Characterizations,
    Regions,
    SumBounds,
    Lemmas,
    ClassU,
    EpaEquals2,
    PathVertexCritical,
    Graph6Roundtrip,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::OracleEquivalence,
        Suite::TheoremTri,
        Suite::TheoremFive,
        Suite::AggregateBounds,
        Suite::Characterizations,
        Suite::Regions,
        Suite::SumBounds,
        Suite::Lemmas,
        Suite::ClassU,
        Suite::EpaEquals2,
        Suite::PathVertexCritical,
        Suite::Graph6Roundtrip,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OracleEquivalence => "oracle-equivalence",
            Suite::TheoremTri => "theorem-tri",
            Suite::TheoremFive => "theorem-five",
            Suite::AggregateBounds => "aggregate-bounds",
            Suite::Characterizations => "characterizations",
            Suite::Regions => "regions",
            Suite::SumBounds => "sum-bounds",
            Suite::Lemmas => "lemmas",
            Suite::ClassU => "class-u",
            Suite::EpaEquals2 => "epa-equals-2",
            Suite::PathVertexCritical => "path-vertex-critical",
            Suite::Graph6Roundtrip => "graph6-roundtrip",
        }
    }

    /// Parses a comma-separated list; `all` expands to every suite.
    pub fn parse_list(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for name in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                out.extend(Suite::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Hypothesis(format!("unknown suite '{s}'")))
    }
}

/// One failed comparison, replayable from `graph6` alone.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub suite: Suite,
    pub check: &'static str,
    pub index: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub expected: Value,
    pub actual: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clause: Option<String>,
}

/// A corpus graph with lazily computed, shared analysis.
pub struct Subject<'g> {
    pub index: usize,
    pub graph: &'g Graph,
    graph6: OnceLock<String>,
    oracle: OnceLock<Oracle<'g>>,
    profile: OnceLock<std::result::Result<PaProfile, Error>>,
}

impl<'g> Subject<'g> {
    pub fn new(index: usize, graph: &'g Graph) -> Self {
        Subject {
            index,
            graph,
            graph6: OnceLock::new(),
            oracle: OnceLock::new(),
            profile: OnceLock::new(),
        }
    }

    pub fn graph6(&self) -> &str {
        self.graph6.get_or_init(|| emit_graph6(self.graph))
    }

    pub fn oracle(&self) -> &Oracle<'g> {
        self.oracle.get_or_init(|| Oracle::new(self.graph))
    }

    /// Sequential on purpose: subjects are already spread over workers.
    pub fn profile(&self) -> std::result::Result<&PaProfile, &Error> {
        self.profile
            .get_or_init(|| pa_profile_sequential(self.graph))
            .as_ref()
    }
}

/// Per-graph result of one suite.
#[derive(Debug, Default)]
pub struct Tally {
    pub checks: u64,
    pub failed: u64,
    pub skipped: bool,
    /// Optional category, aggregated into the suite summary.
    pub tag: Option<String>,
    pub counterexamples: Vec<Counterexample>,
}

struct Checker<'a, 'g> {
    suite: Suite,
    subject: &'a Subject<'g>,
    tally: Tally,
}

impl<'a, 'g> Checker<'a, 'g> {
    #[allow(clippy::too_many_arguments)]
    fn record(
        &mut self,
        check: &'static str,
        ok: bool,
        pair: Option<(usize, usize)>,
        k: Option<usize>,
        expected: impl FnOnce() -> Value,
        actual: impl FnOnce() -> Value,
        clause: Option<String>,
    ) {
        self.tally.checks += 1;
        if ok {
            return;
        }
        self.tally.failed += 1;
        if self.tally.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.tally.counterexamples.push(Counterexample {
                suite: self.suite,
                check,
                index: self.subject.index,
                graph6: self.subject.graph6().to_string(),
                pair: pair.map(|(u, v)| [u, v]),
                k,
                expected: expected(),
                actual: actual(),
                clause,
            });
        }
    }

    fn eq<T: Serialize + PartialEq>(
        &mut self,
        check: &'static str,
        pair: Option<(usize, usize)>,
        k: Option<usize>,
        expected: T,
        actual: T,
    ) {
        let ok = expected == actual;
        self.record(
            check,
            ok,
            pair,
            k,
            || json!(expected),
            || json!(actual),
            None,
        );
    }

    /// A property that should hold; counterexamples show `true` vs `false`.
    fn holds(
        &mut self,
        check: &'static str,
        pair: Option<(usize, usize)>,
        k: Option<usize>,
        ok: bool,
    ) {
        self.record(check, ok, pair, k, || json!(true), || json!(false), None);
    }

    /// Unwraps a library result, turning an error into a counterexample.
    fn ok<T>(
        &mut self,
        check: &'static str,
        pair: Option<(usize, usize)>,
        k: Option<usize>,
        r: Result<T>,
    ) -> Option<T> {
        match r {
            Ok(x) => Some(x),
            Err(e) => {
                self.record(
                    check,
                    false,
                    pair,
                    k,
                    || json!("ok"),
                    || json!(e.to_string()),
                    None,
                );
                None
            }
        }
    }

    fn profile(&mut self) -> Option<&'a PaProfile> {
        let subject: &'a Subject<'g> = self.subject;
        let r = subject.profile().map_err(Clone::clone);
        self.ok("profile", None, None, r)
    }

    fn skip(mut self) -> Tally {
        self.tally.skipped = true;
        self.tally
    }
}

pub fn run_suite(suite: Suite, s: &Subject<'_>) -> Tally {
    let c = Checker {
        suite,
        subject: s,
        tally: Tally::default(),
    };
    match suite {
        Suite::OracleEquivalence => oracle_equivalence(c),
        Suite::TheoremTri => theorem_tri(c),
        Suite::TheoremFive => theorem_five(c),
        Suite::AggregateBounds => aggregate_bounds(c),
        Suite::Characterizations => characterizations(c),
        Suite::Regions => regions(c),
        Suite::SumBounds => sum_bounds(c),
        Suite::Lemmas => lemmas(c),
        Suite::ClassU => class_u(c),
        Suite::EpaEquals2 => epa_equals_2(c),
        Suite::PathVertexCritical => path_vertex_critical(c),
        Suite::Graph6Roundtrip => graph6_roundtrip(c),
    }
}

fn oracle_equivalence(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.order() < 2 {
        return c.skip();
    }
    let o = c.subject.oracle();
    let Some(profile) = c.profile() else {
        return c.tally;
    };
    for (u, v) in g.pairs() {
        let Some(pred) = c.ok("predict", Some((u, v)), None, o.predict(u, v)) else {
            continue;
        };
        for step in &pred.steps {
            let Some(expected) = step.gamma else { continue };
            let Some(actual) = c.ok(
                "solver",
                Some((u, v)),
                Some(step.k),
                gamma_after_addition(g, u, v, step.k),
            ) else {
                continue;
            };
            let ok = expected == actual;
            c.record(
                "step",
                ok,
                Some((u, v)),
                Some(step.k),
                || json!(expected),
                || json!(actual),
                Some(step.clause.to_string()),
            );
        }
        let actual = profile.get(u, v).expect("every pair is profiled");
        let ok = pred.pa == actual;
        c.record(
            "pa",
            ok,
            Some((u, v)),
            None,
            || json!(pred.pa),
            || json!(actual),
            Some(pred.clause.to_string()),
        );
    }
    if let Some(agg) = c.ok("aggregates", None, None, o.characterize_aggregates()) {
        let fired = || {
            Some(
                agg.fired
                    .iter()
                    .map(|f| f.label())
                    .collect::<Vec<_>>()
                    .join(","),
            )
        };
        for (name, predicted, actual) in [
            ("epa", agg.epa, profile.epa),
            ("Epa", agg.upper_epa, profile.upper_epa),
            ("epa_bar", agg.co_epa, profile.co_epa),
            ("Epa_bar", agg.upper_co_epa, profile.upper_co_epa),
        ] {
            c.record(
                "aggregate",
                predicted == actual,
                None,
                None,
                || json!({ name: predicted }),
                || json!({ name: actual }),
                fired(),
            );
        }
    }
    c.tally
}

fn theorem_tri(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.is_edgeless() {
        return c.skip();
    }
    let gamma = c.subject.oracle().gamma();
    for (u, v) in g.edges() {
        if let Some(a) = c.ok(
            "solver",
            Some((u, v)),
            Some(3),
            gamma_after_addition(g, u, v, 3),
        ) {
            c.eq("gamma-3-adjacent", Some((u, v)), Some(3), gamma + 1, a);
        }
    }
    c.tally
}

fn theorem_five(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.order() < 2 || g.is_complete() {
        return c.skip();
    }
    let gamma = c.subject.oracle().gamma();
    for (u, v) in g.non_edges() {
        for k in [5, 6] {
            if let Some(a) = c.ok(
                "solver",
                Some((u, v)),
                Some(k),
                gamma_after_addition(g, u, v, k),
            ) {
                c.record(
                    "gamma-k-exceeds",
                    a > gamma,
                    Some((u, v)),
                    Some(k),
                    || json!(format!("> {gamma}")),
                    || json!(a),
                    None,
                );
            }
        }
    }
    c.tally
}

fn in_range(x: PaValue, lo: usize, hi: usize) -> bool {
    x.finite().is_some_and(|k| (lo..=hi).contains(&k))
}

fn aggregate_bounds(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.order() < 2 {
        return c.skip();
    }
    let Some(p) = c.profile() else { return c.tally };
    if g.is_edgeless() {
        c.eq("edgeless-epa", None, None, PaValue::Infinite, p.epa);
        c.eq("edgeless-Epa", None, None, PaValue::Infinite, p.upper_epa);
    } else {
        c.record(
            "epa-range",
            in_range(p.epa, 1, 3),
            None,
            None,
            || json!("1..=3"),
            || json!(p.epa),
            None,
        );
        c.record(
            "Epa-range",
            in_range(p.upper_epa, 2, 3),
            None,
            None,
            || json!("2..=3"),
            || json!(p.upper_epa),
            None,
        );
        c.holds("epa-le-Epa", None, None, p.epa <= p.upper_epa);
    }
    if g.is_complete() {
        c.eq("complete-epa_bar", None, None, PaValue::Infinite, p.co_epa);
        c.eq(
            "complete-Epa_bar",
            None,
            None,
            PaValue::Infinite,
            p.upper_co_epa,
        );
    } else {
        c.record(
            "epa_bar-range",
            in_range(p.co_epa, 1, 5),
            None,
            None,
            || json!("1..=5"),
            || json!(p.co_epa),
            None,
        );
        c.record(
            "Epa_bar-range",
            in_range(p.upper_co_epa, 1, 5),
            None,
            None,
            || json!("1..=5"),
            || json!(p.upper_co_epa),
            None,
        );
        c.holds("epa_bar-le-Epa_bar", None, None, p.co_epa <= p.upper_co_epa);
    }
    c.tally
}

/// Closed forms checked against the profile, using only γ-set enumeration
/// and vertex deletion (no oracle).
fn characterizations(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.order() < 2 {
        return c.skip();
    }
    let Some(p) = c.profile() else { return c.tally };
    let sets = enumerate_gamma_sets(g);
    let gamma = sets[0].len();
    let fin = |k| PaValue::Finite(k);
    if !g.is_edgeless() {
        let all_independent = sets.iter().all(|&d| g.is_independent(d));
        c.eq(
            "Epa=2-iff-strong-equality",
            None,
            None,
            all_independent,
            p.upper_epa == fin(2),
        );
        c.eq(
            "Epa=3-iff-dependent-gamma-set",
            None,
            None,
            !all_independent,
            p.upper_epa == fin(3),
        );
        let good = sets.iter().fold(VertexSet::EMPTY, |a, &d| a | d);
        let bad = g.vertices() - good;
        c.eq(
            "epa>=2-iff-bad-set-independent",
            None,
            None,
            g.is_independent(bad),
            p.epa >= fin(2),
        );
    }
    if !g.is_complete() {
        c.eq(
            "Epa_bar=1-iff-gamma-one",
            None,
            None,
            gamma == 1,
            p.upper_co_epa == fin(1),
        );
        let cliques = gamma >= 2 && sets.iter().all(|&d| g.is_clique(d));
        c.eq(
            "Epa_bar=2-iff-cliques",
            None,
            None,
            cliques,
            p.upper_co_epa == fin(2),
        );
        let drops = g
            .non_edges()
            .any(|(u, v)| gamma_number(&g.delete_vertices(VertexSet::from([u, v])).0) + 2 == gamma);
        c.eq(
            "Epa_bar=5-iff-pair-deletion-drops-two",
            None,
            None,
            drops,
            p.upper_co_epa == fin(5),
        );
        c.eq(
            "epa_bar=5-iff-edgeless",
            None,
            None,
            g.is_edgeless(),
            p.co_epa == fin(5),
        );
    }
    c.tally
}

fn regions(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.is_edgeless() {
        return c.skip();
    }
    let o = c.subject.oracle();
    let Some(p) = c.profile() else { return c.tally };
    let Some(rc) = c.ok("classify", None, None, o.classify_regions()) else {
        return c.tally;
    };
    let epa3 = p.epa == PaValue::Finite(3);
    c.holds("A3-implies-A1", None, None, !rc.in_a3 || rc.in_a1);
    c.holds(
        "A1-or-A2-implies-A",
        None,
        None,
        !(rc.in_a1 || rc.in_a2) || rc.in_a,
    );
    c.eq("A-iff-epa=3", None, None, epa3, rc.in_a);
    c.holds("A1-implies-epa=3", None, None, !rc.in_a1 || epa3);
    c.holds("vc-graph-implies-epa=3", None, None, !rc.in_a3 || epa3);
    c.eq(
        "tagged-iff-in-A",
        None,
        None,
        rc.in_a,
        rc.region != Region::NotInA,
    );
    c.tally.tag = Some(rc.region.to_string());
    c.tally
}

fn sum_bounds(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if !g.is_connected() || g.is_complete() || g.is_edgeless() {
        return c.skip();
    }
    let Some(p) = c.profile() else { return c.tally };
    if let Some(s) = c.ok("sum-bounds", None, None, check_sum_bounds_with(g, p)) {
        let sums = [
            s.epa_plus_upper_co,
            s.epa_plus_co,
            s.upper_epa_plus_upper_co,
            s.upper_epa_plus_co,
        ];
        let names = [
            "epa+Epa_bar in 2..=8",
            "epa+epa_bar in 2..=7",
            "Epa+Epa_bar in 3..=8",
            "Epa+epa_bar in 3..=7",
        ];
        for i in 0..4 {
            c.record(
                names[i],
                s.holds[i],
                None,
                None,
                || json!(names[i]),
                || json!(sums[i]),
                None,
            );
        }
    }
    c.tally
}

fn lemmas(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    let o = c.subject.oracle();
    let r = o.report();
    let gamma = r.gamma;

    for (u, v) in g.edges() {
        if let Some(h) = c.ok("subdivide", Some((u, v)), None, g.subdivide_edge(u, v)) {
            c.holds(
                "subdivision-monotone",
                Some((u, v)),
                None,
                gamma_number(&h) >= gamma,
            );
        }
    }
    for v in g.vertices().iter() {
        let gv = r.gamma_without[v];
        if r.bad[v] {
            c.record(
                "bad-deletion-neutral",
                gv == gamma,
                None,
                None,
                || json!({ "vertex": v, "gamma_without": gamma }),
                || json!({ "vertex": v, "gamma_without": gv }),
                None,
            );
        }
        let (critical, drop) = (r.v_minus.contains(v), gv + 1 == gamma);
        c.record(
            "critical-iff-drop-by-one",
            critical == drop,
            None,
            None,
            || json!({ "vertex": v, "critical": critical }),
            || json!({ "vertex": v, "drop_by_one": drop }),
            None,
        );
        if r.is_critical(v) {
            let (h, map) = g.delete_vertex(v);
            for w in g.neighbors(v).iter() {
                let w_new = map.to_new(w).expect("neighbor survives deletion");
                let good = has_gamma_set_containing(&h, VertexSet::singleton(w_new));
                c.holds("critical-neighbors-bad", Some((v, w)), None, !good);
            }
        }
    }
    for (u, v) in g.non_edges() {
        if let Some(h) = c.ok("add-edge", Some((u, v)), None, g.add_edge(u, v)) {
            let a = gamma_number(&h);
            c.record(
                "edge-addition-bounds",
                a + 1 >= gamma && a <= gamma,
                Some((u, v)),
                Some(0),
                || json!(format!("{}..={gamma}", gamma.saturating_sub(1))),
                || json!(a),
                None,
            );
        }
    }
    for (u, v) in g.pairs() {
        let adjacent = g.has_edge(u, v);
        let chain: Option<Vec<usize>> = (0..=6)
            .map(|k| gamma_after_addition(g, u, v, k).ok())
            .collect();
        let Some(chain) = c.ok(
            "chain",
            Some((u, v)),
            None,
            chain.ok_or_else(|| Error::Inconsistency("path addition failed".into())),
        ) else {
            continue;
        };
        if adjacent {
            c.eq(
                "chain-starts-at-gamma",
                Some((u, v)),
                Some(0),
                gamma,
                chain[0],
            );
        } else {
            c.record(
                "chain-starts-near-gamma",
                chain[0] + 1 >= gamma && chain[0] <= gamma,
                Some((u, v)),
                Some(0),
                || json!(format!("{}..={gamma}", gamma.saturating_sub(1))),
                || json!(chain[0]),
                None,
            );
        }
        for k in 0..6 {
            c.record(
                "chain-monotone",
                chain[k] <= chain[k + 1],
                Some((u, v)),
                Some(k + 1),
                || json!(format!(">= {}", chain[k])),
                || json!(chain[k + 1]),
                None,
            );
        }
    }
    c.tally
}

fn class_u(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.order() < 2 {
        return c.skip();
    }
    let o = c.subject.oracle();
    let Some(p) = c.profile() else { return c.tally };
    let Some(in_u) = c.ok("class-u", None, None, o.in_class_u()) else {
        return c.tally;
    };
    let three = PaValue::Finite(3);
    c.eq(
        "U-iff-epa_bar=Epa_bar=3",
        None,
        None,
        p.co_epa == three && p.upper_co_epa == three,
        in_u,
    );
    c.tally.tag = Some(if in_u { "in-U" } else { "not-in-U" }.into());
    c.tally
}

fn epa_equals_2(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.is_edgeless() {
        return c.skip();
    }
    let Some(p) = c.profile() else { return c.tally };
    let r = c.subject.oracle().report();
    let efficient = all_gamma_sets_efficient(g);
    if efficient {
        c.eq(
            "efficient-implies-Epa=2",
            None,
            None,
            PaValue::Finite(2),
            p.upper_epa,
        );
    }
    c.eq(
        "Epa=2-iff-strong-equality",
        None,
        None,
        r.strong_equality,
        p.upper_epa == PaValue::Finite(2),
    );
    c.tally.tag = Some(
        if efficient {
            "all-gamma-sets-efficient"
        } else {
            "other"
        }
        .into(),
    );
    c.tally
}

fn path_vertex_critical(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    if g.order() < 2 || g.is_complete() {
        return c.skip();
    }
    let o = c.subject.oracle();
    let gamma = o.gamma();
    for (u, v) in g.non_edges() {
        let Some((pred, clause)) = c.ok(
            "predict",
            Some((u, v)),
            Some(1),
            o.predict_nonadjacent(u, v, 1),
        ) else {
            continue;
        };
        if pred != Some(gamma + 1) {
            continue;
        }
        let Some(h) = c.ok(
            "path-addition",
            Some((u, v)),
            Some(1),
            path_addition(g, u, v, 1),
        ) else {
            continue;
        };
        let x1 = g.order();
        let drop = gamma_number(&h.delete_vertex(x1).0) < gamma_number(&h);
        c.record(
            "x1-critical",
            drop,
            Some((u, v)),
            Some(1),
            || json!(true),
            || json!(false),
            Some(clause.to_string()),
        );
    }
    c.tally
}

fn graph6_roundtrip(mut c: Checker) -> Tally {
    let g = c.subject.graph;
    let code = c.subject.graph6().to_string();
    if let Some(back) = c.ok("parse", None, None, parse_graph6(&code)) {
        c.holds("graph-equal", None, None, &back == g);
        c.eq("code-equal", None, None, code.clone(), emit_graph6(&back));
    }
    c.tally
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::parse_list("all").unwrap().len(), Suite::ALL.len());
        assert_eq!(
            Suite::parse_list("theorem-five, theorem-tri").unwrap(),
            vec![Suite::TheoremTri, Suite::TheoremFive]
        );
        assert!(Suite::parse_list("nope").is_err());
    }
}
