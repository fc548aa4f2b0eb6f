//! Good, bad and critical vertices.
//!
//! cargo run --example classify_vertices

use pathdom::domination::classify_vertices;
use pathdom::family::FamilySpec;

fn main() -> pathdom::Result<()> {
    for spec in ["path(4)", "star(3)", "corona(path(3))"] {
        let g = spec.parse::<FamilySpec>()?.generate()?;
        let r = classify_vertices(&g);
        println!(
            "{spec}: gamma = {}, i = {}, V- = {}, strong equality: {}",
            r.gamma, r.i_number, r.v_minus, r.strong_equality
        );
        for v in 0..r.order {
            let kind = if r.good[v] { "good" } else { "bad" };
            let crit = if r.is_critical(v) { ", critical" } else { "" };
            println!("  {v}: {kind}{crit}, gamma(G-{v}) = {}", r.gamma_without[v]);
        }
    }
    Ok(())
}
