//! Exact domination number, a witness set, and constrained queries.
//!
//! cargo run --example domination_number

use pathdom::domination::{
    enumerate_gamma_sets, gamma, gamma_constrained, independent_domination, ConstrainedQuery,
};
use pathdom::family::FamilySpec;
use pathdom::VertexSet;

fn main() -> pathdom::Result<()> {
    let g = FamilySpec::Cycle(6).generate()?;
    let (k, witness) = gamma(&g);
    println!("C6: gamma = {k}, witness {witness}");
    println!("all gamma-sets: {:?}", enumerate_gamma_sets(&g));

    // force vertex 0 in and vertex 3 out
    let q = ConstrainedQuery::new(VertexSet::singleton(0), VertexSet::singleton(3))?;
    match gamma_constrained(&g, q)? {
        Some(k) => println!("smallest dominating set with 0, without 3: {k}"),
        None => println!("no dominating set with 0 and without 3"),
    }

    let (i, d) = independent_domination(&g);
    println!("independent domination number i = {i}, witness {d}");
    Ok(())
}
