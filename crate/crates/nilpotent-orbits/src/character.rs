//! Infinitesimal characters attached to nilpotent orbits.
//!
//! A character of rank `n` lives in the quotient of half-integer `n`-vectors
//! by the hyperoctahedral group (permutations and sign changes). The
//! canonical representative stores absolute values sorted descending, which
//! turns orbit equality into plain multiset equality. Entries are exact:
//! a [`HalfInt`] stores twice its value as an integer, so no floating point
//! ever enters.
//!
//! An orbit with rows `a_1 >= a_2 >= ...` contributes the concatenation of
//! the strings `rho(a_i)`, where `rho(a)` is `(1, 2, ..., (a-1)/2)` for odd
//! `a` and `(1/2, 3/2, ..., (a-1)/2)` for even `a`, padded with zeros up to
//! the ambient rank. For a type-C orbit of size `2n` at rank `n`, the zero
//! padding is exactly half the number of odd rows.
//!
//! The theta lift of a character appends the string `(1/2, 3/2, ...,
//! (2a-1)/2)`; [`row_pairing`] decomposes a type-C diagram into its unpaired
//! even rows plus paired rows, together with the column lengths of the core
//! orbit carried by the unpaired rows.

use std::fmt;
use std::str::FromStr;

use crate::duality::metaplectic_barbasch_vogan;
use crate::error::{Error, Result};
use crate::orbit::{is_type, Family};
use crate::partition::Partition;

/// An exact half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// The half-integer `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    /// The integer `value`.
    pub fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    /// True when the value lies in `Z` rather than `1/2 + Z`.
    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt {
            twice: self.twice.abs(),
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let parsed = match t.split_once('/') {
            Some((num, den)) => {
                if den.trim() != "2" {
                    return Err(Error::InvalidHalfInt(s.to_string()));
                }
                num.trim().parse::<i64>().map(HalfInt::from_twice)
            }
            None => t.parse::<i64>().map(HalfInt::from_int),
        };
        parsed.map_err(|_| Error::InvalidHalfInt(s.to_string()))
    }
}

/// An infinitesimal character in canonical form: absolute values of the
/// entries, sorted descending. Equality of canonical forms is equality of
/// hyperoctahedral orbits.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InfChar {
    entries: Vec<HalfInt>,
}

impl InfChar {
    /// Canonicalizes: absolute values, sorted descending.
    pub fn new(entries: Vec<HalfInt>) -> Self {
        let mut entries: Vec<HalfInt> = entries.into_iter().map(HalfInt::abs).collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        InfChar { entries }
    }

    pub fn rank(&self) -> u32 {
        self.entries.len() as u32
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    /// True iff every entry lies in `1/2 + Z`. Sign changes preserve this,
    /// so the canonical form decides.
    pub fn is_metaplectic_integral(&self) -> bool {
        self.entries.iter().all(|e| !e.is_integer())
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for e in &self.entries {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for InfChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(InfChar::new(Vec::new()));
        }
        if s.is_empty() {
            return Err(Error::InvalidHalfInt(s.to_string()));
        }
        let entries = s
            .split(',')
            .map(str::parse::<HalfInt>)
            .collect::<Result<Vec<_>>>()?;
        Ok(InfChar::new(entries))
    }
}

/// The string attached to a row of length `a`: `(1, ..., (a-1)/2)` for odd
/// `a`, `(1/2, ..., (a-1)/2)` for even `a`, empty for `a` in `{0, 1}`.
pub fn rho(a: u32) -> Vec<HalfInt> {
    let a = i64::from(a);
    if a % 2 == 1 {
        (1..=(a - 1) / 2).map(HalfInt::from_int).collect()
    } else {
        (0..a / 2).map(|k| HalfInt::from_twice(2 * k + 1)).collect()
    }
}

/// The infinitesimal character of the orbit at the given ambient rank: the
/// concatenated rho strings of the rows, padded with zeros to exactly `rank`
/// entries, canonicalized.
pub fn infinitesimal_character(p: &Partition, rank: u32) -> Result<InfChar> {
    let mut entries: Vec<HalfInt> = Vec::with_capacity(rank as usize);
    for &row in p.parts() {
        entries.extend(rho(row));
    }
    let needed = entries.len() as u32;
    if needed > rank {
        return Err(Error::RankTooSmall { rank, needed });
    }
    let zeros = rank - needed;
    if is_type(p, Family::C) && p.size() == 2 * rank {
        let odd_rows = p.parts().iter().filter(|&&r| r % 2 == 1).count() as u32;
        debug_assert_eq!(zeros, odd_rows / 2, "zero-count rule violated for {p}");
    }
    entries.extend(std::iter::repeat_n(HalfInt::ZERO, zeros as usize));
    Ok(InfChar::new(entries))
}

/// Appends the theta-lift string `(1/2, 3/2, ..., (2a-1)/2)` to the
/// character; the rank grows by `a`.
pub fn theta_lift_character(c: &InfChar, a: u32) -> InfChar {
    let mut entries = c.entries().to_vec();
    entries.extend((0..i64::from(a)).map(|k| HalfInt::from_twice(2 * k + 1)));
    InfChar::new(entries)
}

/// Decomposition of a type-C diagram by pairing rows of equal length.
///
/// Every even row length with odd multiplicity is left unpaired (such
/// lengths are automatically distinct); the rest pair off. When the number
/// of unpaired rows is odd a row of length 0 is adjoined, so `distinct_even`
/// always has even length `2p`. The core columns are
/// `(a_2p - 1, a_2p-1 + 1, ..., a_2 - 1, a_1 + 1)`: the column lengths of
/// the type-C orbit carried by the unpaired rows alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowPairing {
    distinct_even: Vec<u32>,
    paired: Vec<u32>,
    core_columns: Vec<u32>,
}

impl RowPairing {
    /// Unpaired even row lengths, ascending; a leading 0 pads an odd count.
    pub fn distinct_even(&self) -> &[u32] {
        &self.distinct_even
    }

    /// One representative per paired-off pair of rows, descending.
    pub fn paired(&self) -> &[u32] {
        &self.paired
    }

    /// Column lengths of the core orbit, longest first.
    pub fn core_columns(&self) -> &[u32] {
        &self.core_columns
    }

    /// The core orbit itself: the partition whose columns are
    /// [`core_columns`](Self::core_columns).
    pub fn core_orbit(&self) -> Partition {
        Partition::from_valid(self.core_columns.clone()).transpose()
    }
}

/// Pairs the rows of a type-C diagram by length. Never fails on genuine
/// type-C input: odd row lengths always occur an even number of times.
pub fn row_pairing(p: &Partition) -> Result<RowPairing> {
    if !is_type(p, Family::C) {
        return Err(Error::NotAnOrbit {
            partition: p.clone(),
            family: Family::C,
        });
    }
    let mut distinct_even = Vec::new();
    let mut paired = Vec::new();
    for (value, count) in p.runs() {
        paired.extend(std::iter::repeat_n(value, (count / 2) as usize));
        if count % 2 == 1 {
            debug_assert_eq!(value % 2, 0, "odd rows pair off in type C");
            distinct_even.push(value);
        }
    }
    distinct_even.reverse();
    if distinct_even.len() % 2 == 1 {
        distinct_even.insert(0, 0);
    }
    let mut core_columns = Vec::with_capacity(distinct_even.len());
    for pair in distinct_even.rchunks(2) {
        core_columns.push(pair[1] - 1);
        core_columns.push(pair[0] + 1);
    }
    while core_columns.last() == Some(&0) {
        core_columns.pop();
    }
    Ok(RowPairing {
        distinct_even,
        paired,
        core_columns,
    })
}

/// The combinatorial attachment datum of a special unipotent representation
/// for a type-C orbit of size `2n`: its infinitesimal character at rank `n`
/// and its metaplectic Barbasch–Vogan dual.
pub fn unipotent_attachment(p: &Partition) -> Result<(InfChar, Partition)> {
    if !is_type(p, Family::C) {
        return Err(Error::NotAnOrbit {
            partition: p.clone(),
            family: Family::C,
        });
    }
    let character = infinitesimal_character(p, p.size() / 2)?;
    let dual = metaplectic_barbasch_vogan(p)?;
    Ok((character, dual))
}
