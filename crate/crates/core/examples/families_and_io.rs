//! Named families, graph6 and edge lists.
//!
//! cargo run --example families_and_io

use pathdom::family::FamilySpec;
use pathdom::io::{emit_edge_list, emit_graph6, parse_graph6, parse_graph_auto, Format};

fn main() -> pathdom::Result<()> {
    for spec in [
        "crown(4)",
        "circulant(9,1,-1)",
        "generalized_petersen(5,2)",
        "rook(3)",
        "join(edgeless(3),edgeless(3))",
        "cartesian_product(complete(3),path(2))",
    ] {
        let f: FamilySpec = spec.parse()?;
        let g = f.generate()?;
        let code = emit_graph6(&g);
        assert_eq!(parse_graph6(&code)?, g);
        println!(
            "{:<40} n={:<3} m={:<3} {code}",
            f.to_string(),
            g.order(),
            g.size()
        );
    }

    let g = parse_graph_auto("# a path\n4 3\n0 1\n1 2\n2 3\n", Format::Auto)?;
    println!("edge list -> graph6 {}", emit_graph6(&g));
    print!("{}", emit_edge_list(&g));
    Ok(())
}
