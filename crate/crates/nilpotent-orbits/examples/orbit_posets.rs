//! Orbit enumeration and the dominance-order Hasse diagram, including the
//! DOT export the `nilo poset` subcommand produces.
//!
//! Run with `cargo run --example orbit_posets`.

use nilpotent_orbits::orbit::{enumerate_orbits, hasse_edges, Family, OrbitFilter};

fn main() -> nilpotent_orbits::Result<()> {
    for (family, size) in [(Family::C, 6), (Family::D, 8), (Family::B, 7)] {
        let all = enumerate_orbits(family, size, OrbitFilter::All)?;
        let special = enumerate_orbits(family, size, OrbitFilter::Special)?;
        println!(
            "type {family}, size {size}: {} orbits, {} special",
            all.len(),
            special.len()
        );
    }
    let ms = enumerate_orbits(Family::C, 6, OrbitFilter::MetaplecticSpecial)?;
    println!("type C, size 6: {} metaplectic special", ms.len());

    // Covering relations of dominance order on Nil(sp_6), smallest to
    // largest.
    let orbits = enumerate_orbits(Family::C, 6, OrbitFilter::All)?;
    println!("\ncovering relations on Nil(sp_6):");
    for (small, large) in hasse_edges(&orbits)? {
        println!("  {small} < {large}");
    }

    // The same poset in DOT form, ready for graphviz.
    println!("\ndigraph poset {{");
    for orbit in &orbits {
        println!("  \"{orbit}\";");
    }
    for (small, large) in hasse_edges(&orbits)? {
        println!("  \"{small}\" -> \"{large}\";");
    }
    println!("}}");
    Ok(())
}
