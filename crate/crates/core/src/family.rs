//! Named graph families with fixed, documented labelings.
//!
//! | family | labeling |
//! |---|---|
//! | `path(n)` | `0 - 1 - ... - n-1` |
//! | `cycle(n)` | path plus `n-1 ~ 0`, `n >= 3` |
//! | `complete(n)` | all pairs |
//! | `complete_bipartite(m,n)` | parts `0..m` and `m..m+n` |
//! | `star(n)` | `K_{1,n}`, center `0`, leaves `1..=n` |
//! | `crown(n)` | `a_i = i`, `b_i = n+i`, `a_i ~ b_j` iff `i != j` |
//! | `corona(H)` | `H` on `0..h`, pendant of `i` is `h+i` |
//! | `circulant(n,S)` | `x ~ y` iff `x - y mod n` is in `S` |
//! | `generalized_petersen(n,k)` | `x_i = i`, `y_i = n+i`; `x_i x_{i+1}`, `x_i y_i`, `y_i y_{i+k}` |
//! | `join(G,H)` | `G` on `0..g`, `H` shifted by `g`, all cross edges |
//! | `cartesian_product(G,H)` | `(a,b)` is `a*|H| + b` |
//! | `rook(n)` | `K_n x K_n`; row `i`, column `j` (1-based) is `(i-1)*n + (j-1)` |
//! | `edgeless(n)` | no edges |
//! | `union(G,H)` | disjoint union, `H` shifted by `|G|` |
//!
//! Specs also have a compact text form, e.g. `corona(path(3))`,
//! `circulant(9,1,-1)` (negative distances are taken mod `n`) or
//! `join(edgeless(3),edgeless(3))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Crown(usize),
    Corona(Box<FamilySpec>),
    /// Vertex count and distance set. The set must avoid 0 and be closed
    /// under negation mod `n`.
    Circulant(usize, Vec<usize>),
    GeneralizedPetersen(usize, usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    CartesianProduct(Box<FamilySpec>, Box<FamilySpec>),
    Rook(usize),
    Edgeless(usize),
    Union(Box<FamilySpec>, Box<FamilySpec>),
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(msg.into())
}

impl FamilySpec {
    /// Circulant whose distance set is `±d` for each `d` in `distances`.
    pub fn circulant_symmetric(n: usize, distances: &[usize]) -> Self {
        let mut s: Vec<usize> = distances
            .iter()
            .flat_map(|&d| [d % n.max(1), (n - d % n.max(1)) % n.max(1)])
            .collect();
        s.sort_unstable();
        s.dedup();
        FamilySpec::Circulant(n, s)
    }

    pub fn generate(&self) -> Result<Graph> {
        use FamilySpec::*;
        match self {
            Path(n) => {
                if *n == 0 {
                    return Err(invalid("path needs n >= 1"));
                }
                Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))
            }
            Cycle(n) => {
                if *n < 3 {
                    return Err(invalid("cycle needs n >= 3"));
                }
                Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))
            }
            Complete(n) => {
                let g = Graph::empty(*n)?;
                Graph::from_edges(*n, g.pairs())
            }
            CompleteBipartite(m, n) => {
                if *m == 0 || *n == 0 {
                    return Err(invalid("complete_bipartite needs m, n >= 1"));
                }
                Graph::from_edges(
                    m + n,
                    (0..*m).flat_map(|a| (0..*n).map(move |b| (a, m + b))),
                )
            }
            Star(n) => {
                if *n == 0 {
                    return Err(invalid("star needs n >= 1 leaves"));
                }
                Graph::from_edges(n + 1, (1..=*n).map(|i| (0, i)))
            }
            Crown(n) => {
                if *n == 0 {
                    return Err(invalid("crown needs n >= 1"));
                }
                let n = *n;
                Graph::from_edges(
                    2 * n,
                    (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j))),
                )
            }
            Corona(h) => {
                let h = h.generate()?;
                let k = h.order();
                let pendants = Graph::empty(k)?;
                let base = h.disjoint_union(&pendants)?;
                Graph::from_edges(2 * k, base.edges().chain((0..k).map(|i| (i, k + i))))
            }
            Circulant(n, s) => {
                let n = *n;
                if n == 0 {
                    return Err(invalid("circulant needs n >= 1"));
                }
                if s.is_empty() {
                    return Err(invalid("circulant distance set S must be nonempty"));
                }
                if let Some(&x) = s.iter().find(|&&x| x >= n) {
                    return Err(invalid(format!("circulant distance {x} not in Z_{n}")));
                }
                if s.contains(&0) {
                    return Err(invalid("circulant distance set must not contain 0"));
                }
                if let Some(&x) = s.iter().find(|&&x| !s.contains(&(n - x))) {
                    return Err(invalid(format!(
                        "circulant distance set must be closed under negation: {x} in S but {} is not",
                        n - x
                    )));
                }
                Graph::from_edges(
                    n,
                    (0..n).flat_map(|x| s.iter().map(move |&d| (x, (x + d) % n))),
                )
            }
            GeneralizedPetersen(n, k) => {
                let (n, k) = (*n, *k);
                if n < 3 {
                    return Err(invalid("generalized_petersen needs n >= 3"));
                }
                if k == 0 || k >= n {
                    return Err(invalid(format!(
                        "generalized_petersen needs k in Z_{n} - {{0}}"
                    )));
                }
                Graph::from_edges(
                    2 * n,
                    (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]),
                )
            }
            Join(a, b) => {
                let (a, b) = (a.generate()?, b.generate()?);
                let off = a.order();
                let u = a.disjoint_union(&b)?;
                let cross: Vec<_> = (0..off)
                    .flat_map(|x| (0..b.order()).map(move |y| (x, off + y)))
                    .collect();
                Graph::from_edges(u.order(), u.edges().chain(cross))
            }
            CartesianProduct(a, b) => {
                let (a, b) = (a.generate()?, b.generate()?);
                cartesian_product(&a, &b)
            }
            Rook(n) => {
                if *n == 0 {
                    return Err(invalid("rook needs n >= 1"));
                }
                let k = Complete(*n).generate()?;
                cartesian_product(&k, &k)
            }
            Edgeless(n) => Graph::empty(*n),
            Union(a, b) => a.generate()?.disjoint_union(&b.generate()?),
        }
    }
}

fn cartesian_product(a: &Graph, b: &Graph) -> Result<Graph> {
    let nb = b.order();
    let n = a.order() * nb;
    let mut edges = Vec::new();
    for x in 0..a.order() {
        for (p, q) in b.edges() {
            edges.push((x * nb + p, x * nb + q));
        }
    }
    for (x, y) in a.edges() {
        for p in 0..nb {
            edges.push((x * nb + p, y * nb + p));
        }
    }
    Graph::from_edges(n, edges)
}

/// Rook-graph vertex for 1-based row `i` and column `j`.
pub fn rook_vertex(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path({n})"),
            Cycle(n) => write!(f, "cycle({n})"),
            Complete(n) => write!(f, "complete({n})"),
            CompleteBipartite(m, n) => write!(f, "complete_bipartite({m},{n})"),
            Star(n) => write!(f, "star({n})"),
            Crown(n) => write!(f, "crown({n})"),
            Corona(h) => write!(f, "corona({h})"),
            Circulant(n, s) => {
                write!(f, "circulant({n}")?;
                for d in s {
                    write!(f, ",{d}")?;
                }
                write!(f, ")")
            }
            GeneralizedPetersen(n, k) => write!(f, "generalized_petersen({n},{k})"),
            Join(a, b) => write!(f, "join({a},{b})"),
            CartesianProduct(a, b) => write!(f, "cartesian_product({a},{b})"),
            Rook(n) => write!(f, "rook({n})"),
            Edgeless(n) => write!(f, "edgeless({n})"),
            Union(a, b) => write!(f, "union({a},{b})"),
        }
    }
}

enum Arg {
    Int(i64),
    Spec(FamilySpec),
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self
            .s
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(invalid(format!(
                "expected '{}' at offset {}",
                c as char, self.pos
            )))
        }
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        match self.s.get(self.pos) {
            Some(c) if c.is_ascii_digit() || *c == b'-' => {
                let start = self.pos;
                self.pos += 1;
                while self.s.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let tok = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                tok.parse()
                    .map(Arg::Int)
                    .map_err(|_| invalid(format!("bad integer '{tok}'")))
            }
            _ => self.spec().map(Arg::Spec),
        }
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        self.skip_ws();
        let start = self.pos;
        while self
            .s
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .to_string();
        if name.is_empty() {
            return Err(invalid(format!("expected a family name at offset {start}")));
        }
        self.expect(b'(')?;
        let mut args = Vec::new();
        self.skip_ws();
        if self.s.get(self.pos) != Some(&b')') {
            loop {
                args.push(self.arg()?);
                self.skip_ws();
                if self.s.get(self.pos) == Some(&b',') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        self.expect(b')')?;
        build_spec(&name, args)
    }
}

fn build_spec(name: &str, args: Vec<Arg>) -> Result<FamilySpec> {
    let ints = |args: &[Arg], want: usize| -> Result<Vec<usize>> {
        if args.len() != want {
            return Err(invalid(format!(
                "{name} takes {want} integer parameter(s), got {}",
                args.len()
            )));
        }
        args.iter()
            .map(|a| match a {
                Arg::Int(i) if *i >= 0 => Ok(*i as usize),
                _ => Err(invalid(format!(
                    "{name} parameters must be non-negative integers"
                ))),
            })
            .collect()
    };
    let specs = |args: Vec<Arg>, want: usize| -> Result<Vec<FamilySpec>> {
        if args.len() != want {
            return Err(invalid(format!(
                "{name} takes {want} graph argument(s), got {}",
                args.len()
            )));
        }
        args.into_iter()
            .map(|a| match a {
                Arg::Spec(s) => Ok(s),
                Arg::Int(_) => Err(invalid(format!("{name} expects graph arguments"))),
            })
            .collect()
    };
    use FamilySpec::*;
    Ok(match name {
        "path" => Path(ints(&args, 1)?[0]),
        "cycle" => Cycle(ints(&args, 1)?[0]),
        "complete" => Complete(ints(&args, 1)?[0]),
        "complete_bipartite" => {
            let v = ints(&args, 2)?;
            CompleteBipartite(v[0], v[1])
        }
        "star" => Star(ints(&args, 1)?[0]),
        "crown" => Crown(ints(&args, 1)?[0]),
        "rook" => Rook(ints(&args, 1)?[0]),
        "edgeless" => Edgeless(ints(&args, 1)?[0]),
        "generalized_petersen" => {
            let v = ints(&args, 2)?;
            GeneralizedPetersen(v[0], v[1])
        }
        "circulant" => {
            let mut it = args.into_iter();
            let n = match it.next() {
                Some(Arg::Int(n)) if n > 0 => n,
                _ => return Err(invalid("circulant needs n >= 1 first")),
            };
            let mut s = Vec::new();
            for a in it {
                match a {
                    Arg::Int(d) => s.push(d.rem_euclid(n) as usize),
                    Arg::Spec(_) => return Err(invalid("circulant distances must be integers")),
                }
            }
            s.sort_unstable();
            s.dedup();
            Circulant(n as usize, s)
        }
        "corona" => Corona(Box::new(specs(args, 1)?.remove(0))),
        "join" | "cartesian_product" | "union" => {
            let mut v = specs(args, 2)?;
            let b = Box::new(v.pop().unwrap());
            let a = Box::new(v.pop().unwrap());
            match name {
                "join" => Join(a, b),
                "union" => Union(a, b),
                _ => CartesianProduct(a, b),
            }
        }
        other => return Err(invalid(format!("unknown family '{other}'"))),
    })
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(invalid(format!("trailing input at offset {}", p.pos)));
        }
        Ok(spec)
    }
}

/// Vertices of the rook graph's row `i` (1-based).
pub fn rook_row(n: usize, i: usize) -> VertexSet {
    (1..=n).map(|j| rook_vertex(n, i, j)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    /// Brute-force isomorphism test over all vertex permutations.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn search(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let i = map.len();
            if i == a.order() {
                return true;
            }
            for j in 0..b.order() {
                if used[j] {
                    continue;
                }
                if (0..i).all(|p| a.has_edge(p, i) == b.has_edge(map[p], j)) {
                    used[j] = true;
                    map.push(j);
                    if search(a, b, map, used) {
                        return true;
                    }
                    map.pop();
                    used[j] = false;
                }
            }
            false
        }
        a.order() == b.order()
            && a.size() == b.size()
            && search(a, b, &mut Vec::new(), &mut vec![false; b.order()])
    }

    #[test]
    fn crown3_is_c6() {
        let g = gen("crown(3)");
        assert_eq!((g.order(), g.size()), (6, 6));
        assert!(isomorphic(&g, &gen("cycle(6)")));
        assert!(!isomorphic(&g, &gen("union(cycle(3),cycle(3))")));
    }

    #[test]
    fn circulant_distance_one_is_cycle() {
        assert_eq!(gen("circulant(9,1,-1)"), gen("cycle(9)"));
        assert_eq!(
            FamilySpec::circulant_symmetric(9, &[1]).generate().unwrap(),
            gen("cycle(9)")
        );
    }

    #[test]
    fn rook3() {
        let g = gen("rook(3)");
        assert_eq!((g.order(), g.size()), (9, 18));
        let x11 = rook_vertex(3, 1, 1);
        let expected: VertexSet = [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)]
            .into_iter()
            .map(|(i, j)| rook_vertex(3, i, j))
            .collect();
        assert_eq!(g.closed_neighbors(x11), expected);
        assert!(g.is_clique(rook_row(3, 2)));
    }

    #[test]
    fn petersen() {
        let g = gen("generalized_petersen(5,2)");
        assert_eq!((g.order(), g.size()), (10, 15));
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert!(isomorphic(
            &gen("generalized_petersen(4,1)"),
            &gen("cartesian_product(cycle(4),path(2))")
        ));
    }

    #[test]
    fn joins_coronas_stars() {
        assert!(isomorphic(
            &gen("join(edgeless(3),edgeless(3))"),
            &gen("complete_bipartite(3,3)")
        ));
        assert!(isomorphic(&gen("corona(path(2))"), &gen("path(4)")));
        let c = gen("corona(path(3))");
        assert_eq!((c.order(), c.size()), (6, 5));
        assert!(c.has_edge(0, 3) && c.has_edge(2, 5));
        assert!(isomorphic(&gen("star(3)"), &gen("complete_bipartite(1,3)")));
    }

    #[test]
    fn rejects_bad_parameters() {
        let bad = [
            "circulant(9,1)",
            "circulant(5,0,1,4)",
            "generalized_petersen(2,1)",
            "generalized_petersen(5,0)",
            "cycle(2)",
            "path(0)",
            "bogus(3)",
            "path(3",
            "join(path(2))",
            "path(-1)",
        ];
        for s in bad {
            let r = s.parse::<FamilySpec>().and_then(|f| f.generate());
            assert!(
                matches!(r, Err(Error::InvalidFamily(_))),
                "{s} accepted: {r:?}"
            );
        }
        let err = FamilySpec::Circulant(9, vec![]).generate().unwrap_err();
        assert!(err.to_string().contains("nonempty"));
        let err = FamilySpec::Circulant(9, vec![1]).generate().unwrap_err();
        assert!(err.to_string().contains("negation"));
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "corona(path(3))",
            "circulant(15,1,2,13,14)",
            "join(edgeless(3),cycle(4))",
            "rook(4)",
        ] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
    }
}
