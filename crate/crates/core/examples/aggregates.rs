//! Aggregates from closed-form characterizations, checked against the
//! full profile.
//!
//! cargo run --example aggregates

use pathdom::family::FamilySpec;
use pathdom::oracle::{characterize_aggregates, check_sum_bounds, in_class_u};
use pathdom::path_addition::pa_profile;

fn main() -> pathdom::Result<()> {
    for spec in [
        "cycle(4)",
        "cycle(5)",
        "crown(4)",
        "complete_bipartite(3,4)",
        "generalized_petersen(8,3)",
    ] {
        let g = spec.parse::<FamilySpec>()?.generate()?;
        let a = characterize_aggregates(&g)?;
        let agree = a.matches(&pa_profile(&g)?);
        println!(
            "{spec}: epa={} Epa={} epa_bar={} Epa_bar={} (profile agrees: {agree})",
            a.epa, a.upper_epa, a.co_epa, a.upper_co_epa
        );
        for f in &a.fired {
            println!("    {}", f.label());
        }
        if g.is_connected() {
            let s = check_sum_bounds(&g)?;
            println!(
                "    sums {} {} {} {}, all in range: {}",
                s.epa_plus_upper_co,
                s.epa_plus_co,
                s.upper_epa_plus_upper_co,
                s.upper_epa_plus_co,
                s.all_hold()
            );
        }
        println!("    in U: {}", in_class_u(&g)?);
    }
    Ok(())
}
