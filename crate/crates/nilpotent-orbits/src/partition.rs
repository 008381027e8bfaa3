//! Integer partitions as Young diagrams, with exact box-level arithmetic.
//!
//! A [`Partition`] is a weakly decreasing list of positive row lengths; the
//! empty list is the empty diagram. All operations are pure and return fresh
//! values, so everything here is safe to drive from any number of threads.
//!
//! The operations are the diagram moves that the orbit-duality maps are built
//! from: transpose, adding a box to the first row ([`Partition::grow`]),
//! removing a box from the last row ([`Partition::shrink`]), stripping or
//! prepending a first row or column, dominance comparison, and exhaustive
//! enumeration of all partitions of a given size.
//!
//! Canonical text form: comma-separated parts, descending, e.g. `"3,1"`; the
//! empty diagram prints as `"-"`. Parsing accepts exactly this form.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest size accepted by [`enumerate_partitions`].
pub const MAX_ENUMERATION_SIZE: u32 = 40;

/// A Young diagram: weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty diagram.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, validating that parts are positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(
                format!("{parts:?}"),
                "parts must be positive",
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(
                format!("{parts:?}"),
                "parts must be weakly decreasing",
            ));
        }
        Ok(Partition { parts })
    }

    /// Internal constructor for parts that are valid by construction.
    pub(crate) fn from_valid(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Row lengths, longest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length of the first row (0 for the empty diagram).
    pub fn first_row_len(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Length of the first column, i.e. the number of rows.
    pub fn first_column_len(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Multiplicity runs `(value, count)` of the row lengths, largest value
    /// first.
    pub(crate) fn runs(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The transposed diagram: column lengths re-read as rows. An involution.
    pub fn transpose(&self) -> Partition {
        let first_row = self.first_row_len();
        let mut cols = Vec::with_capacity(first_row as usize);
        let mut remaining = self.parts.len();
        for height in 1..=first_row {
            while remaining > 0 && self.parts[remaining - 1] < height {
                remaining -= 1;
            }
            cols.push(remaining as u32);
        }
        Partition::from_valid(cols)
    }

    /// Adds one box to the first row; the empty diagram becomes `[1]`.
    pub fn grow(&self) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => *first += 1,
            None => parts.push(1),
        }
        Partition::from_valid(parts)
    }

    /// Removes one box from the last row; a row reaching length 0 is deleted.
    pub fn shrink(&self) -> Result<Partition> {
        let mut parts = self.parts.clone();
        let last = parts.last_mut().ok_or(Error::EmptyDiagram)?;
        *last -= 1;
        if *last == 0 {
            parts.pop();
        }
        Ok(Partition::from_valid(parts))
    }

    /// Removes the first column: every row loses one box, empty rows vanish.
    pub fn strip_first_column(&self) -> Partition {
        let parts = self
            .parts
            .iter()
            .map(|&p| p - 1)
            .filter(|&p| p > 0)
            .collect();
        Partition::from_valid(parts)
    }

    /// Removes the first row.
    pub fn strip_first_row(&self) -> Partition {
        Partition::from_valid(self.parts.iter().skip(1).copied().collect())
    }

    /// Prepends a row of length `len`; requires `len >= first_row_len`.
    /// A zero-length row is a no-op on the empty diagram.
    pub fn prepend_row(&self, len: u32) -> Result<Partition> {
        if len < self.first_row_len() {
            return Err(Error::RowTooShort {
                len,
                min: self.first_row_len(),
            });
        }
        if len == 0 {
            return Ok(self.clone());
        }
        let mut parts = Vec::with_capacity(self.parts.len() + 1);
        parts.push(len);
        parts.extend_from_slice(&self.parts);
        Ok(Partition::from_valid(parts))
    }

    /// Prepends a column of length `len`; requires `len >= first_column_len`.
    pub fn prepend_column(&self, len: u32) -> Result<Partition> {
        if len < self.first_column_len() {
            return Err(Error::ColumnTooShort {
                len,
                min: self.first_column_len(),
            });
        }
        Ok(self.transpose().prepend_row(len)?.transpose())
    }

    /// Dominance order: `self` is dominated by `other` iff every prefix sum
    /// of `self` is at most the corresponding prefix sum of `other`. Defined
    /// only between partitions of equal size.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(dominance_leq_raw(&self.parts, &other.parts))
    }
}

/// Unchecked dominance comparison; callers guarantee equal sizes.
pub(crate) fn dominance_leq_raw(p: &[u32], q: &[u32]) -> bool {
    let mut sum_p = 0u64;
    let mut sum_q = 0u64;
    for k in 0..p.len().max(q.len()) {
        sum_p += u64::from(p.get(k).copied().unwrap_or(0));
        sum_q += u64::from(q.get(k).copied().unwrap_or(0));
        if sum_p > sum_q {
            return false;
        }
    }
    true
}

/// All partitions of `n` in descending lexicographic order, `[n]` first and
/// `[1^n]` last. `n = 0` yields the empty partition alone.
pub fn enumerate_partitions(n: u32) -> Result<Vec<Partition>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::BoundExceeded {
            what: "partition size",
            requested: n,
            bound: MAX_ENUMERATION_SIZE,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_valid(prefix.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "-" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(Error::InvalidPartition(
                s.to_string(),
                "empty string; the empty diagram is written \"-\"",
            ));
        }
        let mut parts = Vec::new();
        for item in s.split(',') {
            let p: u32 = item
                .trim()
                .parse()
                .map_err(|_| Error::InvalidPartition(s.to_string(), "parts must be integers"))?;
            parts.push(p);
        }
        Partition::new(parts).map_err(|_| {
            Error::InvalidPartition(s.to_string(), "parts must be positive and weakly decreasing")
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Independent partition-count oracle: Euler's pentagonal number
    /// recurrence. Kept free of the enumeration code it checks.
    fn partition_count_oracle(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut total: i64 = 0;
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                total += sign * table[i - g1] as i64;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    total += sign * table[i - g2] as i64;
                }
                k += 1;
            }
            table[i] = total as u64;
        }
        table[n]
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p("4").transpose(), p("1,1,1,1"));
        assert_eq!(p("3,1").transpose(), p("2,1,1"));
    }

    #[test]
    fn grow_examples() {
        assert_eq!(p("3,1").grow(), p("4,1"));
        assert_eq!(Partition::empty().grow(), p("1"));
        assert_eq!(p("2,2").grow(), p("3,2"));
    }

    #[test]
    fn shrink_examples() {
        assert_eq!(p("3,1").shrink().unwrap(), p("3"));
        assert_eq!(p("1").shrink().unwrap(), Partition::empty());
        assert_eq!(p("2,2").shrink().unwrap(), p("2,1"));
        assert_eq!(Partition::empty().shrink(), Err(Error::EmptyDiagram));
    }

    #[test]
    fn strip_first_column_examples() {
        assert_eq!(p("3,1").strip_first_column(), p("2"));
        assert_eq!(p("1,1").strip_first_column(), Partition::empty());
        assert_eq!(p("3,3,1,1,1").strip_first_column(), p("2,2"));
    }

    #[test]
    fn strip_first_row_examples() {
        assert_eq!(p("3,1").strip_first_row(), p("1"));
        assert_eq!(p("4").strip_first_row(), Partition::empty());
        assert_eq!(p("4,2,2").strip_first_row(), p("2,2"));
    }

    #[test]
    fn prepend_row_examples() {
        assert_eq!(p("2,2").prepend_row(4).unwrap(), p("4,2,2"));
        assert_eq!(Partition::empty().prepend_row(4).unwrap(), p("4"));
        assert_eq!(
            p("3,1").prepend_row(2),
            Err(Error::RowTooShort { len: 2, min: 3 })
        );
    }

    #[test]
    fn prepend_column_examples() {
        assert_eq!(p("2").prepend_column(3).unwrap(), p("3,1,1"));
        assert_eq!(p("2,2").prepend_column(5).unwrap(), p("3,3,1,1,1"));
        assert_eq!(
            p("1,1,1").prepend_column(2),
            Err(Error::ColumnTooShort { len: 2, min: 3 })
        );
    }

    #[test]
    fn dominance_examples() {
        assert!(p("2,2").dominance_leq(&p("3,1")).unwrap());
        assert!(!p("3,1").dominance_leq(&p("2,2")).unwrap());
        assert!(p("4").dominance_leq(&p("4")).unwrap());
        assert!(matches!(
            p("3").dominance_leq(&p("2,2")),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn enumeration_order_and_counts() {
        let of0 = enumerate_partitions(0).unwrap();
        assert_eq!(of0, vec![Partition::empty()]);

        let of4 = enumerate_partitions(4).unwrap();
        let expected: Vec<Partition> = ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(of4, expected);

        // p(8) = 22, checked against the pentagonal recurrence.
        assert_eq!(partition_count_oracle(8), 22);
        assert_eq!(enumerate_partitions(8).unwrap().len(), 22);

        for n in 0..=20usize {
            assert_eq!(
                enumerate_partitions(n as u32).unwrap().len() as u64,
                partition_count_oracle(n),
                "count mismatch at n = {n}"
            );
        }

        assert!(matches!(
            enumerate_partitions(MAX_ENUMERATION_SIZE + 1),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_descending_lexicographic() {
        for n in 0..=12 {
            let all = enumerate_partitions(n).unwrap();
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts(), "{:?} !> {:?}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn parse_display_round_trip() {
        for s in ["-", "1", "4", "3,1", "10,10,2,1,1,1"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance_is_partial_order_and_transpose_antiautomorphism() {
        // Exhaustive over every size up to 14, using a precomputed relation
        // matrix so the transitivity triple loop stays cheap.
        for n in 0..=14u32 {
            let all = enumerate_partitions(n).unwrap();
            let k = all.len();
            let mut leq = vec![vec![false; k]; k];
            for i in 0..k {
                for j in 0..k {
                    leq[i][j] = all[i].dominance_leq(&all[j]).unwrap();
                }
            }
            for i in 0..k {
                assert!(leq[i][i], "reflexivity fails at {:?}", all[i]);
                for j in 0..k {
                    if leq[i][j] && leq[j][i] {
                        assert_eq!(i, j, "antisymmetry fails");
                    }
                    // Anti-automorphism under transpose.
                    assert_eq!(
                        leq[i][j],
                        all[j].transpose().dominance_leq(&all[i].transpose()).unwrap(),
                        "transpose anti-automorphism fails at {:?}, {:?}",
                        all[i],
                        all[j]
                    );
                    if !leq[i][j] {
                        continue;
                    }
                    for (l, &j_below_l) in leq[j].iter().enumerate() {
                        if j_below_l {
                            assert!(leq[i][l], "transitivity fails");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn size_bookkeeping() {
        for n in 0..=12 {
            for q in enumerate_partitions(n).unwrap() {
                assert_eq!(q.grow().size(), q.size() + 1);
                assert_eq!(
                    q.strip_first_column().size(),
                    q.size() - q.first_column_len()
                );
            }
        }
    }

    fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
        // Random weakly decreasing positive vectors, then truncate to bound.
        proptest::collection::vec(1u32..=8, 0..8).prop_map(move |mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            let mut total = 0;
            v.retain(|&x| {
                total += x;
                total <= max_size
            });
            Partition::from_valid(v)
        })
    }

    proptest! {
        #[test]
        fn transpose_is_an_involution(q in arb_partition(20)) {
            prop_assert_eq!(q.transpose().transpose(), q);
        }

        #[test]
        fn grow_then_shrink_moves_a_box_bottom_to_top(q in arb_partition(20)) {
            // grow touches the first row and shrink the last, so the round
            // trip is the identity exactly on diagrams with at most one row.
            let round = q.grow().shrink().unwrap();
            prop_assert_eq!(round.size(), q.size());
            prop_assert_eq!(round == q, q.first_column_len() <= 1);
        }

        #[test]
        fn strip_inverts_prepend(q in arb_partition(20), extra in 0u32..4) {
            let row = q.first_row_len() + extra;
            if row > 0 {
                prop_assert_eq!(q.prepend_row(row).unwrap().strip_first_row(), q.clone());
            }
            let col = q.first_column_len() + extra;
            if col > 0 {
                prop_assert_eq!(q.prepend_column(col).unwrap().strip_first_column(), q.clone());
            }
        }

        #[test]
        fn strip_column_is_conjugate_strip_row(q in arb_partition(20)) {
            prop_assert_eq!(
                q.strip_first_column(),
                q.transpose().strip_first_row().transpose()
            );
        }

        #[test]
        fn text_round_trip(q in arb_partition(20)) {
            prop_assert_eq!(q.to_string().parse::<Partition>().unwrap(), q);
        }
    }

    #[test]
    fn shrink_then_grow_identity_cases() {
        // Same box-moving asymmetry in the other order: identity exactly on
        // single-row diagrams.
        for n in 1..=10 {
            for q in enumerate_partitions(n).unwrap() {
                let expect_identity = q.parts().len() == 1;
                let back = q.shrink().unwrap().grow();
                assert_eq!(back == q, expect_identity, "at {q:?}");
            }
        }
    }
}
