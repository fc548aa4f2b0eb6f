//! Run verification suites over a corpus and print the report.
//!
//! cargo run --release --example verify
//! PATHDOM_WORKERS=4 cargo run --release --example verify -- json

use pathdom::family::FamilySpec;
use pathdom::verify::{run_verification, CorpusSpec, Suite};

fn main() -> pathdom::Result<()> {
    let json = std::env::args().any(|a| a == "json");

    let exhaustive = run_verification(&CorpusSpec::exhaustive(5), &Suite::ALL)?;
    let random = run_verification(
        &CorpusSpec::random(8, 0.4, 200, 42),
        &[Suite::TheoremTri, Suite::TheoremFive, Suite::SumBounds],
    )?;
    let crowns = run_verification(
        &CorpusSpec::family(vec![FamilySpec::Crown(3), FamilySpec::Crown(4)]),
        &[Suite::EpaEquals2],
    )?;

    for r in [&exhaustive, &random, &crowns] {
        if json {
            println!("{}", r.to_json());
        } else {
            println!("{}", r.table());
        }
    }
    Ok(())
}
