//! Glue a path between two vertices and watch γ change.
//!
//! cargo run --example path_addition

use pathdom::domination::gamma_number;
use pathdom::family::FamilySpec;
use pathdom::io::emit_graph6;
use pathdom::path_addition::{pa_direct, path_addition};

fn main() -> pathdom::Result<()> {
    let c4 = FamilySpec::Cycle(4).generate()?;
    let (u, v) = (0, 2);
    println!("C4, pair ({u},{v}), gamma = {}", gamma_number(&c4));
    for k in 0..=5 {
        let h = path_addition(&c4, u, v, k)?;
        println!(
            "  k={k}: {} vertices, gamma = {}, graph6 {}",
            h.order(),
            gamma_number(&h),
            emit_graph6(&h)
        );
    }
    println!("pa({u},{v}) = {}", pa_direct(&c4, u, v)?);
    Ok(())
}
