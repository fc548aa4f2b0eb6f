//! Corpus construction: exhaustive, seeded random, file and family modes.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::enumerate::{LabeledGraphs, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::Graph;
use crate::io::{parse_edge_list, parse_graph6, Format};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Stated in every report so random corpora can be regenerated.
pub const PRNG_NAME: &str = "ChaCha8Rng (rand_chacha 0.3), edge-probability sampling";

/// Give up on a connected random sample after this many rejected draws.
const MAX_REJECTIONS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum CorpusMode {
    /// Every labeled graph with `n_min <= n <= n_max` vertices.
    Exhaustive {
        n_min: usize,
        n_max: usize,
        cap: usize,
    },
    /// `count` graphs, vertex count uniform in `n_min..=n_max`, each pair an
    /// edge with probability `p`.
    Random {
        n_min: usize,
        n_max: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    File {
        path: PathBuf,
        format: Format,
    },
    Family {
        #[serde(serialize_with = "display_list")]
        specs: Vec<FamilySpec>,
    },
}

fn display_list<S: Serializer>(specs: &[FamilySpec], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(specs.iter().map(|f| f.to_string()))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusSpec {
    #[serde(flatten)]
    pub mode: CorpusMode,
    pub connected_only: bool,
}

impl CorpusSpec {
    pub fn exhaustive(n_max: usize) -> Self {
        CorpusSpec {
            mode: CorpusMode::Exhaustive {
                n_min: 1,
                n_max,
                cap: DEFAULT_ENUMERATION_CAP,
            },
            connected_only: false,
        }
    }

    pub fn random(n: usize, p: f64, count: usize, seed: u64) -> Self {
        CorpusSpec {
            mode: CorpusMode::Random {
                n_min: n,
                n_max: n,
                p,
                count,
                seed,
            },
            connected_only: false,
        }
    }

    pub fn family(specs: Vec<FamilySpec>) -> Self {
        CorpusSpec {
            mode: CorpusMode::Family { specs },
            connected_only: false,
        }
    }

    pub fn file(path: impl Into<PathBuf>, format: Format) -> Self {
        CorpusSpec {
            mode: CorpusMode::File {
                path: path.into(),
                format,
            },
            connected_only: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    /// Rejects specs that cannot describe a corpus at all. Problems with
    /// individual entries are reported later, per entry.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Hypothesis(m));
        match &self.mode {
            CorpusMode::Exhaustive { n_min, n_max, cap } => {
                if n_min > n_max {
                    return bad(format!("empty vertex range {n_min}..={n_max}"));
                }
                if n_max > cap {
                    return Err(Error::EnumerationCap {
                        n: *n_max,
                        cap: *cap,
                    });
                }
            }
            CorpusMode::Random {
                n_min, n_max, p, ..
            } => {
                if n_min > n_max {
                    return bad(format!("empty vertex range {n_min}..={n_max}"));
                }
                if *n_max > MAX_VERTICES {
                    return Err(Error::TooManyVertices {
                        n: *n_max,
                        max: MAX_VERTICES,
                    });
                }
                if !(0.0..=1.0).contains(p) {
                    return bad(format!("edge probability {p} outside [0, 1]"));
                }
            }
            CorpusMode::File { .. } | CorpusMode::Family { .. } => {}
        }
        Ok(())
    }

    /// Materializes the corpus in a fixed order. Entries that fail to
    /// load are kept, in place, as errors.
    pub fn build(&self) -> Result<Vec<CorpusEntry>> {
        self.validate()?;
        let raw: Vec<(String, std::result::Result<Graph, String>)> = match &self.mode {
            CorpusMode::Exhaustive { n_min, n_max, cap } => {
                let mut out = Vec::new();
                for n in *n_min..=*n_max {
                    let graphs = LabeledGraphs::with_cap(n, self.connected_only, *cap)?;
                    out.extend(
                        graphs
                            .enumerate()
                            .map(|(i, g)| (format!("n={n} #{i}"), Ok(g))),
                    );
                }
                out
            }
            CorpusMode::Random {
                n_min,
                n_max,
                p,
                count,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|i| {
                        let g = random_graph(&mut rng, *n_min, *n_max, *p, self.connected_only);
                        (format!("random #{i}"), g)
                    })
                    .collect()
            }
            CorpusMode::File { path, format } => match std::fs::read_to_string(path) {
                Ok(text) => parse_corpus_text(&text, *format)
                    .into_iter()
                    .map(|(line, g)| {
                        (
                            format!("{}:{line}", path.display()),
                            g.map_err(|e| e.to_string()),
                        )
                    })
                    .collect(),
                Err(e) => vec![(path.display().to_string(), Err(Error::from(e).to_string()))],
            },
            CorpusMode::Family { specs } => specs
                .iter()
                .map(|f| (f.to_string(), f.generate().map_err(|e| e.to_string())))
                .collect(),
        };
        Ok(raw
            .into_iter()
            .filter(|(_, g)| match g {
                // random mode applies the filter while sampling
                Ok(g) => !self.connected_only || g.is_connected(),
                Err(_) => true,
            })
            .enumerate()
            .map(|(index, (source, graph))| CorpusEntry {
                index,
                source,
                graph,
            })
            .collect())
    }
}

fn random_graph(
    rng: &mut ChaCha8Rng,
    n_min: usize,
    n_max: usize,
    p: f64,
    connected_only: bool,
) -> std::result::Result<Graph, String> {
    for _ in 0..MAX_REJECTIONS {
        let n = rng.gen_range(n_min..=n_max);
        let mut adj = vec![VertexSet::EMPTY; n];
        for j in 1..n {
            for i in 0..j {
                if rng.gen_bool(p) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let g = Graph::from_adjacency_unchecked(adj);
        if !connected_only || g.is_connected() {
            return Ok(g);
        }
    }
    Err(format!("no connected sample after {MAX_REJECTIONS} draws"))
}

/// Splits a corpus file into graphs, tagged with the 1-based line where
/// each starts. graph6 files hold one graph per line; edge-list files hold
/// blocks separated by blank lines. `Auto` picks edge lists when the first
/// meaningful line is two integers.
pub fn parse_corpus_text(text: &str, format: Format) -> Vec<(usize, Result<Graph>)> {
    let meaningful = |l: &str| {
        let t = l.split('#').next().unwrap_or("").trim();
        !t.is_empty()
    };
    let format = match format {
        Format::Auto => {
            let first = text.lines().find(|l| meaningful(l)).unwrap_or("");
            let toks: Vec<_> = first
                .split('#')
                .next()
                .unwrap_or("")
                .split_whitespace()
                .collect();
            if toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok()) {
                Format::EdgeList
            } else {
                Format::Graph6
            }
        }
        f => f,
    };
    match format {
        Format::EdgeList => {
            let mut out = Vec::new();
            let mut block = String::new();
            let mut start = 0;
            for (i, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    if block.lines().any(meaningful) {
                        out.push((start, parse_edge_list(&block)));
                    }
                    block.clear();
                    continue;
                }
                if block.is_empty() {
                    start = i + 1;
                }
                block.push_str(line);
                block.push('\n');
            }
            if block.lines().any(meaningful) {
                out.push((start, parse_edge_list(&block)));
            }
            out
        }
        _ => text
            .lines()
            .enumerate()
            .filter(|(_, l)| meaningful(l))
            .map(|(i, l)| (i + 1, parse_graph6(l.trim())))
            .collect(),
    }
}

/// One corpus graph, or the reason it could not be loaded.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub index: usize,
    pub source: String,
    pub graph: std::result::Result<Graph, String>,
}
