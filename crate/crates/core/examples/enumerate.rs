//! Walk every labeled graph on a few vertices.
//!
//! cargo run --example enumerate

use pathdom::domination::gamma_number;
use pathdom::enumerate::enumerate_labeled_graphs;

fn main() -> pathdom::Result<()> {
    for n in 1..=5 {
        let mut by_gamma = [0usize; 6];
        let mut connected = 0;
        for g in enumerate_labeled_graphs(n, false)? {
            by_gamma[gamma_number(&g)] += 1;
            connected += g.is_connected() as usize;
        }
        println!(
            "n={n}: {connected} connected, labeled graphs by gamma {:?}",
            &by_gamma[1..=n]
        );
    }
    Ok(())
}
