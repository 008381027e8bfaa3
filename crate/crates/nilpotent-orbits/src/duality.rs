//! Duality maps on nilpotent orbits: the classical Lusztig–Spaltenstein,
//! Spaltenstein and Barbasch–Vogan maps between Langlands-dual classical
//! types, their metaplectic analogues on the symplectic side, and the
//! combinatorial theta lift of orbits in the stable range.
//!
//! All maps take and return bare [`Partition`]s; family and size context is
//! passed explicitly so that verification code can drive them over enumerated
//! orbit sets cheaply.
//!
//! The classical maps, for an orbit `d` of the stated source family:
//!
//! * [`lusztig_spaltenstein`]: the source-type collapse of the transpose;
//!   order-reversing, image = the special orbits of the source type.
//! * [`spaltenstein_dual`]: from type B, the C-collapse of `d` minus a box;
//!   from type C, the B-collapse of `d` plus a box; from type D, the
//!   identity. An order-preserving bijection between the special sets of the
//!   two Langlands-dual types.
//! * [`barbasch_vogan`]: the composition of the two, landing in the special
//!   orbits of the dual type.
//!
//! The metaplectic analogues map `sp_2n` orbits through the special `o_2n`
//! orbits onto the metaplectic special `sp_2n` orbits:
//!
//! * [`metaplectic_lusztig_spaltenstein`]: the D-collapse of the transpose;
//! * [`metaplectic_spaltenstein_dual`]: the C-collapse of (grow then shrink);
//! * [`metaplectic_barbasch_vogan`]: their composition. It sends the
//!   principal orbit `[2n]` to the minimal orbit `[2,1^(2n-2)]` and the zero
//!   orbit `[1^(2n)]` to the principal orbit.

use crate::collapse::collapse;
use crate::error::{Error, Result};
use crate::orbit::{is_special, is_type, Family};
use crate::partition::Partition;

/// A Langlands-dual pair of classical types with explicit sizes:
/// `(B, 2n+1) <-> (C, 2n)` in either direction, or `(D, 2n) <-> (D, 2n)`.
///
/// The metaplectic counterpart `(C, 2n) <-> (C, 2n)` needs no pair value;
/// the metaplectic maps carry their own (coinciding) source and target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualPair {
    source_family: Family,
    source_size: u32,
    target_family: Family,
    target_size: u32,
}

impl DualPair {
    /// The Langlands pair with the given source; the target is derived.
    pub fn langlands(source_family: Family, source_size: u32) -> Result<Self> {
        if !source_family.admits_size(source_size) {
            return Err(Error::ParityMismatch {
                family: source_family,
                size: source_size,
            });
        }
        let (target_family, target_size) = match source_family {
            Family::B => (Family::C, source_size - 1),
            Family::C => (Family::B, source_size + 1),
            Family::D => (Family::D, source_size),
            Family::A => {
                return Err(Error::UnsupportedFamily {
                    family: Family::A,
                    operation: "Langlands dual pair",
                })
            }
        };
        Ok(DualPair {
            source_family,
            source_size,
            target_family,
            target_size,
        })
    }

    pub fn source_family(&self) -> Family {
        self.source_family
    }

    pub fn source_size(&self) -> u32 {
        self.source_size
    }

    pub fn target_family(&self) -> Family {
        self.target_family
    }

    pub fn target_size(&self) -> u32 {
        self.target_size
    }
}

fn require_orbit(p: &Partition, family: Family) -> Result<()> {
    if !is_type(p, family) {
        return Err(Error::NotAnOrbit {
            partition: p.clone(),
            family,
        });
    }
    Ok(())
}

fn require_special(p: &Partition, family: Family) -> Result<()> {
    if !is_special(p, family)? {
        return Err(Error::NotSpecial {
            partition: p.clone(),
            family,
        });
    }
    Ok(())
}

/// Lusztig–Spaltenstein duality: the type-`family` collapse of the
/// transpose. Order-reversing; its image is the set of special orbits.
pub fn lusztig_spaltenstein(p: &Partition, family: Family) -> Result<Partition> {
    if family == Family::A {
        return Err(Error::UnsupportedFamily {
            family,
            operation: "lusztig_spaltenstein",
        });
    }
    require_orbit(p, family)?;
    collapse(&p.transpose(), family)
}

/// Spaltenstein duality on special orbits, an order-preserving bijection
/// onto the special orbits of the Langlands-dual type.
pub fn spaltenstein_dual(p: &Partition, source: Family) -> Result<Partition> {
    match source {
        Family::B => {
            require_special(p, source)?;
            collapse(&p.shrink()?, Family::C)
        }
        Family::C => {
            require_special(p, source)?;
            collapse(&p.grow(), Family::B)
        }
        Family::D => {
            require_special(p, source)?;
            Ok(p.clone())
        }
        Family::A => Err(Error::UnsupportedFamily {
            family: source,
            operation: "spaltenstein_dual",
        }),
    }
}

/// Barbasch–Vogan duality for the given Langlands pair: Spaltenstein duality
/// after Lusztig–Spaltenstein duality. Lands in the special orbits of the
/// target type.
pub fn barbasch_vogan(p: &Partition, pair: &DualPair) -> Result<Partition> {
    if p.size() != pair.source_size() {
        return Err(Error::SizeMismatch {
            left: p.size(),
            right: pair.source_size(),
        });
    }
    require_orbit(p, pair.source_family())?;
    let special = lusztig_spaltenstein(p, pair.source_family())?;
    spaltenstein_dual(&special, pair.source_family())
}

/// Metaplectic Lusztig–Spaltenstein map on `sp_2n` orbits: the D-collapse of
/// the transpose. Order-reversing, surjective onto the special `o_2n`
/// orbits.
pub fn metaplectic_lusztig_spaltenstein(p: &Partition) -> Result<Partition> {
    require_orbit(p, Family::C)?;
    collapse(&p.transpose(), Family::D)
}

/// Metaplectic Spaltenstein map on special `o_2n` orbits: the C-collapse of
/// the diagram after adding a box to the first row and removing one from the
/// last. An order-preserving bijection onto the metaplectic special `sp_2n`
/// orbits.
pub fn metaplectic_spaltenstein_dual(p: &Partition) -> Result<Partition> {
    require_special(p, Family::D)?;
    collapse(&p.grow().shrink()?, Family::C)
}

/// Metaplectic Barbasch–Vogan duality on `sp_2n` orbits: the composition of
/// the two metaplectic maps. Every value is metaplectic special.
pub fn metaplectic_barbasch_vogan(p: &Partition) -> Result<Partition> {
    let special = metaplectic_lusztig_spaltenstein(p)?;
    metaplectic_spaltenstein_dual(&special)
}

/// Combinatorial theta lift of a type-C orbit of size `2n` for the dual pair
/// in the stable range `a >= n`: prepend a first column of length `2a+1`.
/// The result has first column `2a+1` and strips back to `p`; it is
/// validated to be of type B rather than trusted, so a violation of the
/// stable-range orbit correspondence would surface at runtime.
pub fn theta_lift_orbit(p: &Partition, a: u32) -> Result<Partition> {
    require_orbit(p, Family::C)?;
    if 2 * a < p.size() {
        return Err(Error::StableRangeViolated { a, size: p.size() });
    }
    let lift = p.prepend_column(2 * a + 1)?;
    if !is_type(&lift, Family::B) {
        return Err(Error::LiftNotTypeB {
            partition: p.clone(),
            lift,
        });
    }
    Ok(lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collapse::collapse_oracle;
    use crate::orbit::{enumerate_orbits, is_metaplectic_special, OrbitFilter};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn lusztig_spaltenstein_examples() {
        assert_eq!(lusztig_spaltenstein(&p("2,1,1"), Family::C).unwrap(), p("2,2"));
        assert_eq!(lusztig_spaltenstein(&p("4"), Family::C).unwrap(), p("1,1,1,1"));
        assert_eq!(lusztig_spaltenstein(&p("1,1,1,1"), Family::C).unwrap(), p("4"));
        assert!(matches!(
            lusztig_spaltenstein(&p("3,1"), Family::C),
            Err(Error::NotAnOrbit { .. })
        ));
    }

    #[test]
    fn spaltenstein_dual_examples() {
        assert_eq!(spaltenstein_dual(&p("3,1,1"), Family::B).unwrap(), p("2,2"));
        assert_eq!(spaltenstein_dual(&p("2,2"), Family::C).unwrap(), p("3,1,1"));
        assert_eq!(spaltenstein_dual(&p("3,1"), Family::D).unwrap(), p("3,1"));
        assert!(matches!(
            spaltenstein_dual(&p("2,1,1"), Family::C),
            Err(Error::NotSpecial { .. })
        ));
        assert!(matches!(
            spaltenstein_dual(&p("2,2"), Family::A),
            Err(Error::UnsupportedFamily { .. })
        ));
    }

    #[test]
    fn barbasch_vogan_examples() {
        let from_sp4 = DualPair::langlands(Family::C, 4).unwrap();
        assert_eq!(from_sp4.target_family(), Family::B);
        assert_eq!(from_sp4.target_size(), 5);
        assert_eq!(barbasch_vogan(&p("2,1,1"), &from_sp4).unwrap(), p("3,1,1"));
        assert_eq!(
            barbasch_vogan(&p("4"), &from_sp4).unwrap(),
            p("1,1,1,1,1")
        );

        // Golden value cross-checked against the brute-force collapse.
        let from_o4 = DualPair::langlands(Family::D, 4).unwrap();
        let via_oracle = {
            let special = collapse_oracle(&p("3,1").transpose(), Family::D).unwrap();
            spaltenstein_dual(&special, Family::D).unwrap()
        };
        assert_eq!(via_oracle, p("1,1,1,1"));
        assert_eq!(barbasch_vogan(&p("3,1"), &from_o4).unwrap(), p("1,1,1,1"));

        assert!(matches!(
            barbasch_vogan(&p("2,2"), &DualPair::langlands(Family::C, 6).unwrap()),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn metaplectic_map_examples() {
        assert_eq!(metaplectic_lusztig_spaltenstein(&p("4")).unwrap(), p("1,1,1,1"));
        assert_eq!(metaplectic_lusztig_spaltenstein(&p("1,1,1,1")).unwrap(), p("3,1"));
        assert_eq!(metaplectic_lusztig_spaltenstein(&p("2,1,1")).unwrap(), p("3,1"));

        assert_eq!(metaplectic_spaltenstein_dual(&p("3,1")).unwrap(), p("4"));
        assert_eq!(metaplectic_spaltenstein_dual(&p("2,2")).unwrap(), p("2,2"));
        assert_eq!(metaplectic_spaltenstein_dual(&p("1,1,1,1")).unwrap(), p("2,1,1"));

        assert_eq!(metaplectic_barbasch_vogan(&p("4")).unwrap(), p("2,1,1"));
        assert_eq!(metaplectic_barbasch_vogan(&p("1,1,1,1")).unwrap(), p("4"));
        assert_eq!(metaplectic_barbasch_vogan(&p("2,2")).unwrap(), p("2,2"));
        assert_eq!(
            metaplectic_barbasch_vogan(&Partition::empty()).unwrap(),
            Partition::empty()
        );
    }

    #[test]
    fn theta_lift_orbit_examples() {
        assert_eq!(theta_lift_orbit(&p("2,2"), 2).unwrap(), p("3,3,1,1,1"));
        assert_eq!(theta_lift_orbit(&Partition::empty(), 0).unwrap(), p("1"));
        // Pinned by the strip-first-column round trip: the lift of [4] has
        // five rows and strips back to [4].
        let lift = theta_lift_orbit(&p("4"), 2).unwrap();
        assert_eq!(lift, p("5,1,1,1,1"));
        assert_eq!(lift.strip_first_column(), p("4"));
        assert_eq!(lift.first_column_len(), 5);

        assert!(matches!(
            theta_lift_orbit(&p("4,2"), 2),
            Err(Error::StableRangeViolated { a: 2, size: 6 })
        ));
    }

    #[test]
    fn theta_lift_is_always_type_b_in_stable_range() {
        for half in 0..=6u32 {
            let size = 2 * half;
            for orbit in enumerate_orbits(Family::C, size, OrbitFilter::All).unwrap() {
                for a in half..=half + 3 {
                    let lift = theta_lift_orbit(&orbit, a).unwrap();
                    assert_eq!(lift.size(), size + 2 * a + 1);
                    assert_eq!(lift.first_column_len(), 2 * a + 1);
                    assert_eq!(lift.strip_first_column(), orbit);
                }
            }
        }
    }

    #[test]
    fn double_lusztig_spaltenstein_is_identity_on_special_orbits() {
        for (family, sizes) in [
            (Family::B, [1u32, 3, 5, 7, 9, 11, 13, 15, 17].as_slice()),
            (Family::C, [0, 2, 4, 6, 8, 10, 12, 14, 16, 18].as_slice()),
            (Family::D, [0, 2, 4, 6, 8, 10, 12, 14, 16, 18].as_slice()),
        ] {
            for &size in sizes {
                for q in enumerate_orbits(family, size, OrbitFilter::Special).unwrap() {
                    let twice = lusztig_spaltenstein(
                        &lusztig_spaltenstein(&q, family).unwrap(),
                        family,
                    )
                    .unwrap();
                    assert_eq!(twice, q, "double dual moved {q:?} in type {family}");
                }
            }
        }
    }

    #[test]
    fn metaplectic_dual_of_size_four_orbits_is_metaplectic_special() {
        for orbit in enumerate_orbits(Family::C, 4, OrbitFilter::All).unwrap() {
            let dual = metaplectic_barbasch_vogan(&orbit).unwrap();
            assert!(is_metaplectic_special(&dual).unwrap());
        }
    }
}
