//! Nilpotent orbits of the classical Lie algebras, seen through their Young
//! diagrams.
//!
//! A partition of `n` parametrizes a nilpotent orbit of `gl_n` (type A); with
//! the standard multiplicity constraints it parametrizes orbits of the
//! orthogonal and symplectic algebras:
//!
//! * type B (`o_{2n+1}`): odd size, every even part has even multiplicity;
//! * type C (`sp_{2n}`): even size, every odd part has even multiplicity;
//! * type D (`o_{2n}`): even size, every even part has even multiplicity.
//!
//! An orbit of type B, C or D is *special* when its transposed diagram is of
//! type B, C or C respectively. A type-C orbit is *metaplectic special* when
//! its transposed diagram is of type D. Very even type-D diagrams (all parts
//! even) correspond to two orbits labeled I/II; the label is ignored here,
//! since every map in this crate is label-blind.
//!
//! The empty partition is the unique orbit of size 0 wherever size 0 has the
//! right parity, and it is special and metaplectic special.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{dominance_leq_raw, enumerate_partitions, Partition};

/// Classical family tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    /// Does `size` have the parity this family requires?
    pub fn admits_size(self, size: u32) -> bool {
        match self {
            Family::A => true,
            Family::B => size % 2 == 1,
            Family::C | Family::D => size.is_multiple_of(2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            _ => Err(Error::InvalidFamily(s.to_string())),
        }
    }
}

/// Which orbits an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitFilter {
    All,
    Special,
    MetaplecticSpecial,
}

impl fmt::Display for OrbitFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitFilter::All => "all",
            OrbitFilter::Special => "sp",
            OrbitFilter::MetaplecticSpecial => "ms",
        })
    }
}

impl FromStr for OrbitFilter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(OrbitFilter::All),
            "sp" => Ok(OrbitFilter::Special),
            "ms" => Ok(OrbitFilter::MetaplecticSpecial),
            _ => Err(Error::InvalidFilter(s.to_string())),
        }
    }
}

/// True iff `p` is the Young diagram of a nilpotent orbit of the family.
/// Wrong-parity sizes simply return false.
pub fn is_type(p: &Partition, family: Family) -> bool {
    if !family.admits_size(p.size()) {
        return false;
    }
    match family {
        Family::A => true,
        // Even parts pair up in the orthogonal types, odd parts in the
        // symplectic type.
        Family::B | Family::D => p
            .runs()
            .iter()
            .all(|&(value, count)| value % 2 == 1 || count % 2 == 0),
        Family::C => p
            .runs()
            .iter()
            .all(|&(value, count)| value % 2 == 0 || count % 2 == 0),
    }
}

/// True iff the orbit is special: the transpose is of type B for a type-B
/// orbit, and of type C for type C or D.
///
/// Family A is outside the orthogonal/symplectic story; every type-A orbit
/// is treated as special.
pub fn is_special(p: &Partition, family: Family) -> Result<bool> {
    if !is_type(p, family) {
        return Err(Error::NotAnOrbit {
            partition: p.clone(),
            family,
        });
    }
    let dual_family = match family {
        Family::A => return Ok(true),
        Family::B => Family::B,
        Family::C | Family::D => Family::C,
    };
    Ok(is_type(&p.transpose(), dual_family))
}

/// True iff the type-C orbit is metaplectic special: its transpose is of
/// type D.
pub fn is_metaplectic_special(p: &Partition) -> Result<bool> {
    if !is_type(p, Family::C) {
        return Err(Error::NotAnOrbit {
            partition: p.clone(),
            family: Family::C,
        });
    }
    Ok(is_type(&p.transpose(), Family::D))
}

/// All orbits of the family with the given size that pass the filter, in
/// descending lexicographic order.
pub fn enumerate_orbits(family: Family, size: u32, filter: OrbitFilter) -> Result<Vec<Partition>> {
    if !family.admits_size(size) {
        return Err(Error::ParityMismatch { family, size });
    }
    if filter == OrbitFilter::MetaplecticSpecial && family != Family::C {
        return Err(Error::UnsupportedFilter {
            filter: "ms",
            family,
        });
    }
    let mut out = Vec::new();
    for p in enumerate_partitions(size)? {
        if !is_type(&p, family) {
            continue;
        }
        let keep = match filter {
            OrbitFilter::All => true,
            OrbitFilter::Special => is_special(&p, family)?,
            OrbitFilter::MetaplecticSpecial => is_metaplectic_special(&p)?,
        };
        if keep {
            out.push(p);
        }
    }
    Ok(out)
}

/// Covering relations of dominance order restricted to the given set:
/// `(p, q)` is listed iff `p` is strictly dominated by `q` with no element of
/// the set strictly between them. All inputs must have equal size.
pub fn hasse_edges(orbits: &[Partition]) -> Result<Vec<(Partition, Partition)>> {
    if let Some(first) = orbits.first() {
        let size = first.size();
        if let Some(bad) = orbits.iter().find(|p| p.size() != size) {
            return Err(Error::SizeMismatch {
                left: size,
                right: bad.size(),
            });
        }
    }
    let k = orbits.len();
    let mut strictly_below = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            strictly_below[i][j] = i != j
                && orbits[i] != orbits[j]
                && dominance_leq_raw(orbits[i].parts(), orbits[j].parts());
        }
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if !strictly_below[i][j] {
                continue;
            }
            let has_intermediate = (0..k).any(|l| strictly_below[i][l] && strictly_below[l][j]);
            if !has_intermediate {
                edges.push((orbits[i].clone(), orbits[j].clone()));
            }
        }
    }
    Ok(edges)
}
