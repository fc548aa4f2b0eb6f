//! Predict γ(G_{u,v,k}) from the structure of G alone and compare with
//! the solver.
//!
//! cargo run --example predictions

use pathdom::family::FamilySpec;
use pathdom::oracle::Oracle;
use pathdom::path_addition::{gamma_after_addition, pa_direct};

fn main() -> pathdom::Result<()> {
    let g = "corona(path(3))".parse::<FamilySpec>()?.generate()?;
    let oracle = Oracle::new(&g);
    for (u, v) in [(0, 1), (0, 2), (3, 4), (3, 5)] {
        let pred = oracle.predict(u, v)?;
        let kind = if pred.adjacent { "edge" } else { "non-edge" };
        println!(
            "({u},{v}) {kind}: predicted pa = {}, direct pa = {}",
            pred.pa,
            pa_direct(&g, u, v)?
        );
        for s in &pred.steps {
            let solved = gamma_after_addition(&g, u, v, s.k)?;
            let predicted = s.gamma.map_or("?".to_string(), |x| x.to_string());
            println!(
                "  k={} predicted {predicted:>2} solved {solved:>2}  {}",
                s.k, s.clause
            );
        }
    }
    Ok(())
}
