//! The six duality maps on nilpotent orbits.
//!
//! Classical: Lusztig-Spaltenstein (dls), Spaltenstein (dsp) and
//! Barbasch-Vogan (dbv) between Langlands-dual types. Metaplectic: their
//! analogues (mls, msp, mbv) from `sp_2n` orbits to metaplectic special
//! `sp_2n` orbits.
//!
//! Run with `cargo run --example duality_maps`.

use nilpotent_orbits::duality::{
    barbasch_vogan, lusztig_spaltenstein, metaplectic_barbasch_vogan,
    metaplectic_lusztig_spaltenstein, metaplectic_spaltenstein_dual, spaltenstein_dual, DualPair,
};
use nilpotent_orbits::orbit::{enumerate_orbits, Family, OrbitFilter};
use nilpotent_orbits::partition::Partition;

fn main() -> nilpotent_orbits::Result<()> {
    // All four orbits of sp_4 and their metaplectic Barbasch-Vogan duals.
    println!("metaplectic duality on Nil(sp_4):");
    for orbit in enumerate_orbits(Family::C, 4, OrbitFilter::All)? {
        let special = metaplectic_lusztig_spaltenstein(&orbit)?;
        let dual = metaplectic_barbasch_vogan(&orbit)?;
        println!("  {orbit:<10} --mls--> {special:<8} --msp--> {dual}");
    }

    // The principal orbit goes to the minimal orbit and the zero orbit to
    // the principal orbit, at every rank.
    println!("\nprincipal <-> minimal, zero <-> principal:");
    for n in [1u32, 2, 3, 4, 5] {
        let principal = Partition::new(vec![2 * n])?;
        let zero = Partition::new(vec![1; 2 * n as usize])?;
        println!(
            "  n={n}: mbv({}) = {}   mbv({}) = {}",
            principal,
            metaplectic_barbasch_vogan(&principal)?,
            zero,
            metaplectic_barbasch_vogan(&zero)?,
        );
    }

    // Classical Barbasch-Vogan duality from sp_4 into the special orbits of
    // o_5, via the Langlands pair.
    let pair = DualPair::langlands(Family::C, 4)?;
    println!(
        "\nclassical duality sp_4 -> {}_{} orbits:",
        pair.target_family(),
        pair.target_size()
    );
    for orbit in enumerate_orbits(Family::C, 4, OrbitFilter::All)? {
        let ls = lusztig_spaltenstein(&orbit, Family::C)?;
        let bv = barbasch_vogan(&orbit, &pair)?;
        println!("  {orbit:<10} --dls--> {ls:<10} --dsp--> {bv}");
    }

    // The Spaltenstein map is an order-preserving bijection on special
    // orbits; from type D it is the identity.
    let special_d = enumerate_orbits(Family::D, 8, OrbitFilter::Special)?;
    println!("\nSpaltenstein map fixes special type-D orbits of o_8:");
    for orbit in &special_d {
        assert_eq!(spaltenstein_dual(orbit, Family::D)?, orbit.clone());
    }
    println!("  all {} of them", special_d.len());

    // The metaplectic Spaltenstein map matches special o_2n orbits with
    // metaplectic special sp_2n orbits, one to one.
    println!("\nspecial o_8 orbits and their metaplectic special partners:");
    for orbit in enumerate_orbits(Family::D, 8, OrbitFilter::Special)? {
        println!("  {orbit:<12} -> {}", metaplectic_spaltenstein_dual(&orbit)?);
    }
    Ok(())
}
