//! Place graphs with epa = 3 into regions R0..R5.
//!
//! cargo run --example regions

use pathdom::family::FamilySpec;
use pathdom::oracle::classify_regions;
use pathdom::Graph;

fn main() -> pathdom::Result<()> {
    let mut graphs: Vec<(String, Graph)> = [
        "corona(path(2))",
        "cycle(4)",
        "cycle(7)",
        "complete_bipartite(2,3)",
        "complete_bipartite(3,3)",
        "star(3)",
    ]
    .iter()
    .map(|s| Ok((s.to_string(), s.parse::<FamilySpec>()?.generate()?)))
    .collect::<pathdom::Result<_>>()?;

    // a 7-cycle plus a vertex joined to two vertices at distance 2
    let mut edges: Vec<_> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    edges.extend([(7, 0), (7, 2)]);
    graphs.push(("C7 plus y".into(), Graph::from_edges(8, edges)?));

    for (name, g) in &graphs {
        let rc = classify_regions(g)?;
        println!(
            "{name:<24} A={:<5} A1={:<5} A2={:<5} A3={:<5} -> {}",
            rc.in_a, rc.in_a1, rc.in_a2, rc.in_a3, rc.region
        );
    }
    Ok(())
}
