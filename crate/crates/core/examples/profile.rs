//! All pair values and the four aggregates, as a table and as JSON.
//!
//! cargo run --example profile -- "rook(3)"

use pathdom::family::FamilySpec;
use pathdom::path_addition::pa_profile;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "rook(3)".into());
    let g = spec.parse::<FamilySpec>()?.generate()?;
    let p = pa_profile(&g)?;
    println!("{spec}: gamma = {}", p.gamma);
    println!(
        "epa = {}, Epa = {}, epa_bar = {}, Epa_bar = {}",
        p.epa, p.upper_epa, p.co_epa, p.upper_co_epa
    );
    println!("{}", serde_json::to_string(&p)?);
    Ok(())
}
