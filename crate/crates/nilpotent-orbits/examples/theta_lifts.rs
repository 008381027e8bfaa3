//! Stable-range theta lifts of orbits and characters, and the commuting
//! square tying the classical duality of the lifted orbit to the
//! metaplectic duality downstairs.
//!
//! Run with `cargo run --example theta_lifts`.

use nilpotent_orbits::character::{infinitesimal_character, theta_lift_character};
use nilpotent_orbits::duality::{
    barbasch_vogan, metaplectic_barbasch_vogan, theta_lift_orbit, DualPair,
};
use nilpotent_orbits::orbit::{enumerate_orbits, Family, OrbitFilter};
use nilpotent_orbits::partition::Partition;

fn main() -> nilpotent_orbits::Result<()> {
    // Lifting an sp_2n orbit to o_{2n+2a+1} prepends a column of 2a+1
    // boxes; stripping it back recovers the orbit.
    let orbit: Partition = "2,2".parse()?;
    for a in [2u32, 3, 4] {
        let lift = theta_lift_orbit(&orbit, a)?;
        println!("lift of {orbit} at a={a}: {lift}");
        assert_eq!(lift.strip_first_column(), orbit);
    }

    // Characters lift by appending the string 1/2, 3/2, ..., (2a-1)/2.
    let character = infinitesimal_character(&orbit, 2)?;
    println!("\nchi({orbit}) = {character}");
    for a in [1u32, 2, 3] {
        println!("lifted at a={a}: {}", theta_lift_character(&character, a));
    }

    // The square: extending the orbit by a first row of 2a and taking the
    // classical Barbasch-Vogan dual equals theta-lifting the metaplectic
    // dual. The verification suite sweeps this as check C8.
    println!("\ncommuting square on Nil(sp_4), a = 3:");
    let a = 3u32;
    for orbit in enumerate_orbits(Family::C, 4, OrbitFilter::All)? {
        let extended = orbit.prepend_row(2 * a)?;
        let pair = DualPair::langlands(Family::C, extended.size())?;
        let classical = barbasch_vogan(&extended, &pair)?;
        let lifted = theta_lift_orbit(&metaplectic_barbasch_vogan(&orbit)?, a)?;
        assert_eq!(classical, lifted);
        println!("  {orbit:<10} row-extended {extended:<10} both routes give {classical}");
    }
    Ok(())
}
