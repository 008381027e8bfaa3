//! Combinatorics of nilpotent orbits in the classical complex Lie algebras.
//!
//! Nilpotent orbits of `gl_n`, `o_m` and `sp_2n` are parametrized by integer
//! partitions subject to parity and multiplicity constraints. This crate
//! implements the partition-level calculus that drives their duality theory,
//! entirely in exact integer arithmetic:
//!
//! * [`partition`] - Young diagrams: transpose, box moves, row/column
//!   surgery, dominance order, enumeration.
//! * [`orbit`] - type membership for the A/B/C/D families, special and
//!   metaplectic special orbits, orbit enumeration, Hasse diagrams of the
//!   dominance order.
//! * [`collapse`](mod@collapse) - the B/C/D-collapse (largest dominated
//!   orbit of the type), with an independent brute-force oracle.
//! * [`duality`] - the Lusztig–Spaltenstein, Spaltenstein and
//!   Barbasch–Vogan maps between Langlands-dual types, their metaplectic
//!   analogues on `sp_2n`, and the stable-range theta lift of orbits.
//! * [`character`] - infinitesimal characters as canonical half-integer
//!   multisets, metaplectic integrality, character theta lifts, row
//!   pairings, and the special unipotent attachment datum.
//! * [`verify`] - checks C1..C14: exhaustive, parallel verification of the
//!   theorems the maps satisfy, with counterexample witnesses.
//! * [`cli`] - the `nilo` command-line front end over all of the above.
//!
//! Every runnable capability has a worked example under `examples/`; start
//! with `cargo run --example duality_maps`.

pub mod character;
pub mod cli;
pub mod collapse;
pub mod duality;
pub mod error;
pub mod orbit;
pub mod partition;
pub mod verify;

pub use character::{
    infinitesimal_character, rho, row_pairing, theta_lift_character, unipotent_attachment,
    HalfInt, InfChar, RowPairing,
};
pub use collapse::{collapse, collapse_oracle};
pub use duality::{
    barbasch_vogan, lusztig_spaltenstein, metaplectic_barbasch_vogan,
    metaplectic_lusztig_spaltenstein, metaplectic_spaltenstein_dual, spaltenstein_dual, DualPair,
    theta_lift_orbit,
};
pub use error::{Error, Result};
pub use orbit::{
    enumerate_orbits, hasse_edges, is_metaplectic_special, is_special, is_type, Family,
    OrbitFilter,
};
pub use partition::{enumerate_partitions, Partition};
pub use verify::{run_check, CheckId, CheckReport};
