//! B-, C- and D-collapse of a Young diagram.
//!
//! The X-collapse of a partition with the right size parity is the unique
//! largest partition of type X it dominates. [`collapse`] computes it
//! constructively; [`collapse_oracle`] recomputes it by brute force over all
//! partitions of the same size and exists to arbitrate the constructive
//! algorithm (check C11 runs the two against each other exhaustively).
//!
//! Constructive step: while the diagram is not of type X, take the largest
//! part value violating the multiplicity rule, remove one box from the lowest
//! row of that value, and hand the box to the first lower row short enough to
//! accept it (appending a new row of one box when none is). Each step moves a
//! box strictly downward, so the walk terminates; maximality is pinned by the
//! oracle, not by this procedure.

use crate::error::{Error, Result};
use crate::orbit::{is_type, Family};
use crate::partition::{dominance_leq_raw, enumerate_partitions, Partition};

/// Largest size accepted by [`collapse_oracle`].
pub const MAX_ORACLE_SIZE: u32 = 18;

fn check_family_and_parity(p: &Partition, family: Family) -> Result<()> {
    if family == Family::A {
        return Err(Error::UnsupportedFamily {
            family,
            operation: "collapse",
        });
    }
    if !family.admits_size(p.size()) {
        return Err(Error::ParityMismatch {
            family,
            size: p.size(),
        });
    }
    Ok(())
}

/// Largest part value whose multiplicity violates the type-`family` rule,
/// if any. `parts` is weakly decreasing, so the first violating run wins.
fn largest_violating(parts: &[u32], family: Family) -> Option<u32> {
    let bad_parity = match family {
        Family::B | Family::D => 0, // even parts must pair up
        Family::C => 1,             // odd parts must pair up
        Family::A => unreachable!("collapse is undefined for family A"),
    };
    let mut i = 0;
    while i < parts.len() {
        let value = parts[i];
        let mut j = i;
        while j < parts.len() && parts[j] == value {
            j += 1;
        }
        if value % 2 == bad_parity && (j - i) % 2 == 1 {
            return Some(value);
        }
        i = j;
    }
    None
}

/// The type-`family` collapse: the largest type-`family` partition dominated
/// by `p`. Idempotent; a fixed point exactly when `p` already has the type.
pub fn collapse(p: &Partition, family: Family) -> Result<Partition> {
    check_family_and_parity(p, family)?;
    let mut parts = p.parts().to_vec();
    // Each move sends one box strictly down, so 4*size^2 steps is generous.
    let mut budget = 4 * (p.size() as u64) * (p.size() as u64) + 16;
    while let Some(value) = largest_violating(&parts, family) {
        assert!(budget > 0, "collapse failed to converge on {p}");
        budget -= 1;
        // The parity contract keeps the violating value at least 2: a lone
        // odd 1-run would force odd total size in the symplectic case.
        debug_assert!(value >= 2);
        let row = parts
            .iter()
            .rposition(|&x| x == value)
            .expect("violating value is present");
        parts[row] -= 1;
        match (row + 1..parts.len()).find(|&s| parts[s] < value - 1) {
            Some(receiver) => parts[receiver] += 1,
            None => parts.push(1),
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
    }
    Ok(Partition::from_valid(parts))
}

/// Brute-force reference: the dominance maximum of every type-`family`
/// partition dominated by `p`, found by full enumeration. Errors with
/// [`Error::NoMaximum`] if the dominated set has no maximum, which would be a
/// theory violation.
pub fn collapse_oracle(p: &Partition, family: Family) -> Result<Partition> {
    check_family_and_parity(p, family)?;
    if p.size() > MAX_ORACLE_SIZE {
        return Err(Error::BoundExceeded {
            what: "oracle size",
            requested: p.size(),
            bound: MAX_ORACLE_SIZE,
        });
    }
    let candidates: Vec<Partition> = enumerate_partitions(p.size())?
        .into_iter()
        .filter(|q| is_type(q, family) && dominance_leq_raw(q.parts(), p.parts()))
        .collect();
    let best = candidates.iter().find(|m| {
        candidates
            .iter()
            .all(|q| dominance_leq_raw(q.parts(), m.parts()))
    });
    best.cloned().ok_or(Error::NoMaximum {
        partition: p.clone(),
        family,
    })
}
