//! Infinitesimal characters of orbits: rho strings, metaplectic
//! integrality, row pairings, and the special unipotent attachment datum.
//!
//! Run with `cargo run --example infinitesimal_characters`.

use nilpotent_orbits::character::{
    infinitesimal_character, rho, row_pairing, unipotent_attachment,
};
use nilpotent_orbits::orbit::{enumerate_orbits, Family, OrbitFilter};

fn main() -> nilpotent_orbits::Result<()> {
    // Row strings: odd rows give integers, even rows half-odd integers.
    for a in 0..=6u32 {
        let entries: Vec<String> = rho(a).iter().map(|e| e.to_string()).collect();
        println!("rho({a}) = ({})", entries.join(", "));
    }

    // Characters of all sp_6 orbits at rank 3. A character is metaplectic
    // integral exactly when every entry is a half-odd integer.
    println!("\ncharacters of Nil(sp_6) at rank 3:");
    for orbit in enumerate_orbits(Family::C, 6, OrbitFilter::All)? {
        let character = infinitesimal_character(&orbit, 3)?;
        let tag = if character.is_metaplectic_integral() {
            "metaplectic integral"
        } else {
            ""
        };
        println!("  {orbit:<10} chi = {character:<14} {tag}");
    }

    // Row pairing: unpaired even rows, paired rows, and the core columns.
    println!("\nrow pairings:");
    for text in ["6,4,2", "4,2,2", "4,4,1,1", "2,2"] {
        let orbit = text.parse()?;
        let pairing = row_pairing(&orbit)?;
        println!(
            "  {orbit:<10} distinct_even {:?}, paired {:?}, core orbit {}",
            pairing.distinct_even(),
            pairing.paired(),
            pairing.core_orbit(),
        );
    }

    // The attachment datum pairs the character with the metaplectic
    // Barbasch-Vogan dual.
    println!("\nattachment data for Nil(sp_4):");
    for orbit in enumerate_orbits(Family::C, 4, OrbitFilter::All)? {
        let (character, dual) = unipotent_attachment(&orbit)?;
        println!("  {orbit:<10} -> (chi = {character}, dual = {dual})");
    }
    Ok(())
}
