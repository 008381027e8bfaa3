//! Exhaustive verification of the combinatorial theorems behind the duality
//! maps, over every orbit up to a configurable rank.
//!
//! Each check `C1..C14` sweeps a finite parameter grid, evaluates one named
//! statement on every instance, and returns a [`CheckReport`] with instance
//! and failure counts plus counterexample witnesses (capped, smallest sizes
//! first). The statements are theorems, so every report is expected to come
//! back clean; a witness is a finding, not a test artifact.
//!
//! The catalog:
//!
//! * C1: the metaplectic Lusztig–Spaltenstein map is well defined, surjective
//!   onto the special even-orthogonal orbits, and order reversing.
//! * C2: the metaplectic Spaltenstein map is an order-preserving bijection
//!   from special even-orthogonal orbits onto metaplectic special orbits.
//! * C3: stripping a maximal first row intertwines the C-collapse transpose
//!   map with the D-collapse transpose map.
//! * C4: when the C-collapse has first column `2a`, so did the original
//!   diagram of size `2n + 2a`.
//! * C5: two odd-size diagrams, the first with an odd first column and first
//!   columns differing by one box, share a single B-collapse.
//! * C6: stripping a maximal first column intertwines the B-collapse of the
//!   grown diagram with the C-collapse of the grow-shrink image.
//! * C7: the B-collapse of the grown diagram restricts to a bijection
//!   between the column-constrained special sets on both sides.
//! * C8: the orbit theta lift intertwines classical Barbasch–Vogan duality
//!   of the row-extended orbit with the metaplectic duality of the orbit.
//! * C9: the Lusztig–Spaltenstein image equals the special orbit set, and
//!   the map reverses dominance, in types B, C and D.
//! * C10: the Spaltenstein dual is an order-preserving bijection between
//!   Langlands-dual special sets.
//! * C11: the constructive collapse equals the brute-force dominance
//!   maximum, is idempotent, stays dominated, and is monotone.
//! * C12: the character theta lift equals the infinitesimal character of
//!   the row-extended orbit, preserving metaplectic integrality.
//! * C13: metaplectic Barbasch–Vogan duals are metaplectic special, the
//!   attachment datum is consistent, and the row pairing reconstructs the
//!   orbit with a type-C core.
//! * C14: the principal orbit maps to the minimal orbit and the zero orbit
//!   to the principal orbit, for every rank.
//!
//! Instance grids ascend by size, so the first witness of a failing check is
//! size-minimal. Work units (one per rank, or per rank/lift-size pair) run
//! in parallel and merge in grid order: reports are byte-identical whatever
//! the thread count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::character::{
    infinitesimal_character, row_pairing, theta_lift_character, unipotent_attachment,
};
use crate::collapse::{collapse, collapse_oracle};
use crate::duality::{
    barbasch_vogan, lusztig_spaltenstein, metaplectic_barbasch_vogan,
    metaplectic_lusztig_spaltenstein, metaplectic_spaltenstein_dual, spaltenstein_dual, DualPair,
    theta_lift_orbit,
};
use crate::error::{Error, Result};
use crate::orbit::{
    enumerate_orbits, is_metaplectic_special, is_special, is_type, Family, OrbitFilter,
};
use crate::partition::{
    dominance_leq_raw, enumerate_partitions, Partition, MAX_ENUMERATION_SIZE,
};

/// Largest rank `n` accepted by [`run_check`].
pub const MAX_CHECK_RANK: u32 = 16;

/// Largest lift offset accepted by [`run_check`].
pub const MAX_A_OFFSET: u32 = 8;

/// Default lift offset: `a` sweeps `n ..= n + 3`, covering the boundary
/// `a = n` where collapse behavior changes, plus interior cases.
pub const DEFAULT_A_OFFSET: u32 = 3;

/// Cap on reported witnesses per check.
const WITNESS_CAP: usize = 10;

/// Identifier of one verification check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
    C14,
}

impl CheckId {
    pub const ALL: [CheckId; 14] = [
        CheckId::C1,
        CheckId::C2,
        CheckId::C3,
        CheckId::C4,
        CheckId::C5,
        CheckId::C6,
        CheckId::C7,
        CheckId::C8,
        CheckId::C9,
        CheckId::C10,
        CheckId::C11,
        CheckId::C12,
        CheckId::C13,
        CheckId::C14,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::C1 => "C1",
            CheckId::C2 => "C2",
            CheckId::C3 => "C3",
            CheckId::C4 => "C4",
            CheckId::C5 => "C5",
            CheckId::C6 => "C6",
            CheckId::C7 => "C7",
            CheckId::C8 => "C8",
            CheckId::C9 => "C9",
            CheckId::C10 => "C10",
            CheckId::C11 => "C11",
            CheckId::C12 => "C12",
            CheckId::C13 => "C13",
            CheckId::C14 => "C14",
        }
    }

    /// One-line statement of what the check verifies.
    pub fn description(self) -> &'static str {
        match self {
            CheckId::C1 => "metaplectic LS map: well-defined, onto special type-D orbits, order-reversing",
            CheckId::C2 => "metaplectic Spaltenstein map: order-preserving bijection onto metaplectic special orbits",
            CheckId::C3 => "first-row stripping intertwines C-collapse and D-collapse transpose maps",
            CheckId::C4 => "a first column of 2a in the C-collapse pins the first column of the diagram",
            CheckId::C5 => "odd-first-column diagrams one box apart share a B-collapse",
            CheckId::C6 => "first-column stripping intertwines the B-collapse lift with grow-shrink C-collapse",
            CheckId::C7 => "the B-collapse lift is a bijection between column-constrained special sets",
            CheckId::C8 => "the orbit theta lift intertwines classical and metaplectic Barbasch-Vogan duality",
            CheckId::C9 => "Lusztig-Spaltenstein image equals the special set and reverses order (types B, C, D)",
            CheckId::C10 => "Spaltenstein dual: order-preserving bijection between Langlands-dual special sets",
            CheckId::C11 => "constructive collapse equals the brute-force dominance maximum; idempotent; monotone",
            CheckId::C12 => "character theta lift matches the character of the row-extended orbit",
            CheckId::C13 => "metaplectic BV duals are metaplectic special; attachment datum and row pairing consistent",
            CheckId::C14 => "principal orbit maps to minimal and zero orbit to principal, at every rank",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

/// The bounds a check actually ran with. Checks that enumerate composite
/// sizes clamp the rank so every enumeration stays within
/// [`MAX_ENUMERATION_SIZE`]; the clamped value is what gets echoed here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckParams {
    pub max_n: u32,
    pub a_offset: u32,
}

/// One failing input, as a flat string map (partitions and characters in
/// their canonical text form).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub input: BTreeMap<String, String>,
}

fn serialize_elapsed_ms<S: Serializer>(
    elapsed: &Duration,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.serialize_u64(elapsed.as_millis() as u64)
}

/// Outcome of one check run.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    #[serde(rename = "check")]
    pub id: CheckId,
    pub params: CheckParams,
    pub instances: u64,
    pub failures: u64,
    pub witnesses: Vec<Witness>,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_elapsed_ms")]
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Accumulator for one work unit of a check.
#[derive(Default)]
struct Unit {
    instances: u64,
    failures: u64,
    witnesses: Vec<Witness>,
}

impl Unit {
    /// Records one instance. `Err` counts as a failure and the error text is
    /// appended to the witness, so a theory violation surfaces as a witness
    /// rather than a panic.
    fn require<F>(&mut self, outcome: Result<bool>, fields: F)
    where
        F: FnOnce() -> Vec<(&'static str, String)>,
    {
        self.instances += 1;
        let (ok, error) = match outcome {
            Ok(ok) => (ok, None),
            Err(e) => (false, Some(e.to_string())),
        };
        if ok {
            return;
        }
        self.failures += 1;
        if self.witnesses.len() < WITNESS_CAP {
            let mut input: BTreeMap<String, String> = fields()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
            if let Some(e) = error {
                input.insert("error".to_string(), e);
            }
            self.witnesses.push(Witness { input });
        }
    }
}

/// Runs `eval` over every grid point, possibly in parallel, and merges the
/// units in grid order.
fn sweep<T, F>(grid: Vec<T>, eval: F) -> (u64, u64, Vec<Witness>)
where
    T: Sync,
    F: Fn(&T) -> Unit + Sync,
{
    let units: Vec<Unit> = grid.par_iter().map(&eval).collect();
    let mut instances = 0;
    let mut failures = 0;
    let mut witnesses = Vec::new();
    for unit in units {
        instances += unit.instances;
        failures += unit.failures;
        for w in unit.witnesses {
            if witnesses.len() < WITNESS_CAP {
                witnesses.push(w);
            }
        }
    }
    (instances, failures, witnesses)
}

/// Grid of `(n, a)` pairs with `a` sweeping `n ..= n + a_offset`, ordered
/// by orbit size `2n` first: witnesses of checks whose instances live at
/// size `2n` come out size-minimal first.
fn rank_lift_grid(max_n: u32, a_offset: u32) -> Vec<(u32, u32)> {
    let mut grid = Vec::new();
    for n in 0..=max_n {
        for a in n..=n + a_offset {
            grid.push((n, a));
        }
    }
    grid
}

/// Same grid ordered by the composite size `2n + 2a`: for checks whose
/// instances are diagrams of that size, the first witness is size-minimal.
fn rank_lift_grid_by_total(max_n: u32, a_offset: u32) -> Vec<(u32, u32)> {
    let mut grid = rank_lift_grid(max_n, a_offset);
    grid.sort_by_key(|&(n, a)| (n + a, n));
    grid
}

/// Largest `n` whose combined lift size `2n + 2(n + a_offset) + extra`
/// stays enumerable.
fn combined_rank_cap(max_n: u32, a_offset: u32, extra: u32) -> u32 {
    let budget = MAX_ENUMERATION_SIZE.saturating_sub(2 * a_offset + extra);
    max_n.min(budget / 4)
}

fn orbits(family: Family, size: u32, filter: OrbitFilter) -> Vec<Partition> {
    enumerate_orbits(family, size, filter).expect("orbit size within enumeration bound")
}

fn partitions(size: u32) -> Vec<Partition> {
    enumerate_partitions(size).expect("size within enumeration bound")
}

fn set_of(items: &[Partition]) -> BTreeSet<Partition> {
    items.iter().cloned().collect()
}

/// Short textual summary of how two partition sets differ.
fn set_difference_summary(actual: &BTreeSet<Partition>, expected: &BTreeSet<Partition>) -> String {
    let missing: Vec<String> = expected
        .difference(actual)
        .take(4)
        .map(|p| p.to_string())
        .collect();
    let extra: Vec<String> = actual
        .difference(expected)
        .take(4)
        .map(|p| p.to_string())
        .collect();
    format!("missing=[{}] extra=[{}]", missing.join(" "), extra.join(" "))
}

/// Runs one check at the given rank bound and lift offset.
pub fn run_check(id: CheckId, max_n: u32, a_offset: u32) -> Result<CheckReport> {
    if max_n > MAX_CHECK_RANK {
        return Err(Error::BoundExceeded {
            what: "check rank",
            requested: max_n,
            bound: MAX_CHECK_RANK,
        });
    }
    if a_offset > MAX_A_OFFSET {
        return Err(Error::BoundExceeded {
            what: "lift offset",
            requested: a_offset,
            bound: MAX_A_OFFSET,
        });
    }
    let effective_max_n = match id {
        CheckId::C3 | CheckId::C4 | CheckId::C6 => combined_rank_cap(max_n, a_offset, 0),
        CheckId::C7 => combined_rank_cap(max_n, a_offset, 1),
        // Odd sizes 2m+1 must stay enumerable.
        CheckId::C5 => max_n.min((MAX_ENUMERATION_SIZE - 1) / 2),
        // The oracle comparison stops at size 16 (17 for type B).
        CheckId::C11 => max_n.min(8),
        _ => max_n,
    };
    let start = Instant::now();
    let (instances, failures, witnesses) = match id {
        CheckId::C1 => check_c1(effective_max_n),
        CheckId::C2 => check_c2(effective_max_n),
        CheckId::C3 => check_c3(effective_max_n, a_offset),
        CheckId::C4 => check_c4(effective_max_n, a_offset),
        CheckId::C5 => check_c5(effective_max_n),
        CheckId::C6 => check_c6(effective_max_n, a_offset),
        CheckId::C7 => check_c7(effective_max_n, a_offset),
        CheckId::C8 => check_c8(effective_max_n, a_offset),
        CheckId::C9 => check_c9(effective_max_n),
        CheckId::C10 => check_c10(effective_max_n),
        CheckId::C11 => check_c11(effective_max_n),
        CheckId::C12 => check_c12(effective_max_n, a_offset),
        CheckId::C13 => check_c13(effective_max_n),
        CheckId::C14 => check_c14(effective_max_n),
    };
    Ok(CheckReport {
        id,
        params: CheckParams {
            max_n: effective_max_n,
            a_offset,
        },
        instances,
        failures,
        witnesses,
        elapsed: start.elapsed(),
    })
}

/// Shared skeleton for the three "map onto a target set" checks (C1, C2 and
/// the per-family legs of C9/C10): per-element well-definedness, optional
/// injectivity, image-set equality, and an order comparison over all ordered
/// pairs of the domain.
struct MapLaws<'a> {
    domain: &'a [Partition],
    target: &'a BTreeSet<Partition>,
    check_injective: bool,
    /// +1 checks order preservation, -1 order reversal.
    order_sign: i8,
    label: &'static str,
    context: Vec<(&'static str, String)>,
}

fn map_onto_set_laws(
    unit: &mut Unit,
    laws: &MapLaws<'_>,
    map: impl Fn(&Partition) -> Result<Partition>,
    in_target: impl Fn(&Partition) -> Result<bool>,
) {
    let mut images: Vec<Option<Partition>> = Vec::with_capacity(laws.domain.len());
    for p in laws.domain {
        let outcome = map(p).and_then(|image| in_target(&image).map(|ok| (image, ok)));
        match outcome {
            Ok((image, ok)) => {
                unit.require(Ok(ok), || {
                    let mut f = laws.context.clone();
                    f.push(("orbit", p.to_string()));
                    f.push(("image", image.to_string()));
                    f.push(("reason", format!("{} image not in target set", laws.label)));
                    f
                });
                images.push(Some(image));
            }
            Err(e) => {
                unit.require(Err(e), || {
                    let mut f = laws.context.clone();
                    f.push(("orbit", p.to_string()));
                    f.push(("reason", format!("{} map failed", laws.label)));
                    f
                });
                images.push(None);
            }
        }
    }
    if images.iter().any(Option::is_none) {
        return;
    }
    let images: Vec<Partition> = images.into_iter().map(Option::unwrap).collect();

    if laws.check_injective {
        let distinct: BTreeSet<&Partition> = images.iter().collect();
        unit.require(Ok(distinct.len() == images.len()), || {
            let mut f = laws.context.clone();
            f.push(("reason", format!("{} not injective", laws.label)));
            f
        });
    }

    let image_set = set_of(&images);
    unit.require(Ok(&image_set == laws.target), || {
        let mut f = laws.context.clone();
        f.push(("reason", format!("{} image set differs from target", laws.label)));
        f.push(("difference", set_difference_summary(&image_set, laws.target)));
        f
    });

    for i in 0..laws.domain.len() {
        for j in 0..laws.domain.len() {
            if i == j {
                continue;
            }
            let hypothesis = dominance_leq_raw(laws.domain[i].parts(), laws.domain[j].parts());
            let conclusion = if laws.order_sign >= 0 {
                dominance_leq_raw(images[i].parts(), images[j].parts())
            } else {
                dominance_leq_raw(images[j].parts(), images[i].parts())
            };
            unit.require(Ok(!hypothesis || conclusion), || {
                let mut f = laws.context.clone();
                f.push(("smaller", laws.domain[i].to_string()));
                f.push(("larger", laws.domain[j].to_string()));
                f.push(("smaller_image", images[i].to_string()));
                f.push(("larger_image", images[j].to_string()));
                let how = if laws.order_sign >= 0 { "preserve" } else { "reverse" };
                f.push(("reason", format!("{} does not {} dominance", laws.label, how)));
                f
            });
        }
    }
}

fn check_c1(max_n: u32) -> (u64, u64, Vec<Witness>) {
    sweep((0..=max_n).collect(), |&n| {
        let mut unit = Unit::default();
        let domain = orbits(Family::C, 2 * n, OrbitFilter::All);
        let target = set_of(&orbits(Family::D, 2 * n, OrbitFilter::Special));
        let laws = MapLaws {
            domain: &domain,
            target: &target,
            check_injective: false,
            order_sign: -1,
            label: "metaplectic LS",
            context: vec![("n", n.to_string())],
        };
        map_onto_set_laws(
            &mut unit,
            &laws,
            metaplectic_lusztig_spaltenstein,
            |image| is_special(image, Family::D),
        );
        unit
    })
}

fn check_c2(max_n: u32) -> (u64, u64, Vec<Witness>) {
    sweep((0..=max_n).collect(), |&n| {
        let mut unit = Unit::default();
        let domain = orbits(Family::D, 2 * n, OrbitFilter::Special);
        let target = set_of(&orbits(Family::C, 2 * n, OrbitFilter::MetaplecticSpecial));
        let laws = MapLaws {
            domain: &domain,
            target: &target,
            check_injective: true,
            order_sign: 1,
            label: "metaplectic Spaltenstein",
            context: vec![("n", n.to_string())],
        };
        map_onto_set_laws(
            &mut unit,
            &laws,
            metaplectic_spaltenstein_dual,
            is_metaplectic_special,
        );
        unit
    })
}

fn check_c3(max_n: u32, a_offset: u32) -> (u64, u64, Vec<Witness>) {
    sweep(rank_lift_grid_by_total(max_n, a_offset), |&(n, a)| {
        let mut unit = Unit::default();
        let size = 2 * n + 2 * a;
        for orbit in orbits(Family::C, size, OrbitFilter::All) {
            if orbit.first_row_len() != 2 * a {
                continue;
            }
            let outcome = (|| {
                let mid = collapse(&orbit.transpose(), Family::C)?;
                let left = mid.strip_first_column();
                let right = collapse(&orbit.strip_first_row().transpose(), Family::D)?;
                Ok(mid.first_column_len() == 2 * a && left == right)
            })();
            unit.require(outcome, || {
                vec![
                    ("n", n.to_string()),
                    ("a", a.to_string()),
                    ("orbit", orbit.to_string()),
                ]
            });
        }
        unit
    })
}

fn check_c4(max_n: u32, a_offset: u32) -> (u64, u64, Vec<Witness>) {
    sweep(rank_lift_grid_by_total(max_n, a_offset), |&(n, a)| {
        let mut unit = Unit::default();
        let size = 2 * n + 2 * a;
        for diagram in partitions(size) {
            let outcome = collapse(&diagram, Family::C).map(|collapsed| {
                collapsed.first_column_len() != 2 * a || diagram.first_column_len() == 2 * a
            });
            unit.require(outcome, || {
                vec![
                    ("n", n.to_string()),
                    ("a", a.to_string()),
                    ("diagram", diagram.to_string()),
                ]
            });
        }
        unit
    })
}

fn check_c5(max_n: u32) -> (u64, u64, Vec<Witness>) {
    sweep((0..=max_n).collect(), |&m| {
        let mut unit = Unit::default();
        let size = 2 * m + 1;
        for second in partitions(size) {
            if second.first_column_len() % 2 != 0 {
                continue;
            }
            // The companion diagram is unique: its first column is one box
            // longer (hence odd) and its stripped interior one box shorter.
            let outcome = (|| {
                let stripped = second.strip_first_column().shrink()?;
                let first = stripped.prepend_column(second.first_column_len() + 1)?;
                Ok(collapse(&first, Family::B)? == collapse(&second, Family::B)?)
            })();
            unit.require(outcome, || {
                vec![("m", m.to_string()), ("diagram", second.to_string())]
            });
        }
        unit
    })
}

fn check_c6(max_n: u32, a_offset: u32) -> (u64, u64, Vec<Witness>) {
    sweep(rank_lift_grid_by_total(max_n, a_offset), |&(n, a)| {
        let mut unit = Unit::default();
        let size = 2 * n + 2 * a;
        for orbit in orbits(Family::C, size, OrbitFilter::All) {
            if orbit.first_column_len() != 2 * a {
                continue;
            }
            let outcome = (|| {
                let lifted = collapse(&orbit.grow(), Family::B)?;
                let left = lifted.strip_first_column();
                let right = collapse(&orbit.strip_first_column().grow().shrink()?, Family::C)?;
                Ok(lifted.first_column_len() == 2 * a + 1 && left == right)
            })();
            unit.require(outcome, || {
                vec![
                    ("n", n.to_string()),
                    ("a", a.to_string()),
                    ("orbit", orbit.to_string()),
                ]
            });
        }
        unit
    })
}

fn check_c7(max_n: u32, a_offset: u32) -> (u64, u64, Vec<Witness>) {
    sweep(rank_lift_grid_by_total(max_n, a_offset), |&(n, a)| {
        let mut unit = Unit::default();
        let size = 2 * n + 2 * a;
        let domain: Vec<Partition> = orbits(Family::C, size, OrbitFilter::Special)
            .into_iter()
            .filter(|p| p.first_column_len() == 2 * a)
            .collect();
        let target: BTreeSet<Partition> = orbits(Family::B, size + 1, OrbitFilter::Special)
            .into_iter()
            .filter(|p| p.first_column_len() == 2 * a + 1)
            .collect();
        let context = vec![("n", n.to_string()), ("a", a.to_string())];
        let laws = MapLaws {
            domain: &domain,
            target: &target,
            check_injective: true,
            order_sign: 1,
            label: "column-constrained Spaltenstein lift",
            context,
        };
        map_onto_set_laws(
            &mut unit,
            &laws,
            |p| spaltenstein_dual(p, Family::C),
            |image| Ok(target.contains(image)),
        );
        unit
    })
}

fn check_c8(max_n: u32, a_offset: u32) -> (u64, u64, Vec<Witness>) {
    sweep(rank_lift_grid(max_n, a_offset), |&(n, a)| {
        let mut unit = Unit::default();
        for orbit in orbits(Family::C, 2 * n, OrbitFilter::All) {
            let outcome = (|| {
                let extended = orbit.prepend_row(2 * a)?;
                let pair = DualPair::langlands(Family::C, 2 * n + 2 * a)?;
                let classical = barbasch_vogan(&extended, &pair)?;
                let metaplectic = metaplectic_barbasch_vogan(&orbit)?;
                let lifted = theta_lift_orbit(&metaplectic, a)?;
                Ok(classical == lifted)
            })();
            unit.require(outcome, || {
                vec![
                    ("n", n.to_string()),
                    ("a", a.to_string()),
                    ("orbit", orbit.to_string()),
                ]
            });
        }
        unit
    })
}

fn check_c9(max_n: u32) -> (u64, u64, Vec<Witness>) {
    let mut grid = Vec::new();
    for n in 0..=max_n {
        grid.push((Family::C, 2 * n));
        grid.push((Family::D, 2 * n));
        grid.push((Family::B, 2 * n + 1));
    }
    sweep(grid, |&(family, size)| {
        let mut unit = Unit::default();
        let domain = orbits(family, size, OrbitFilter::All);
        let target = set_of(&orbits(family, size, OrbitFilter::Special));
        let laws = MapLaws {
            domain: &domain,
            target: &target,
            check_injective: false,
            order_sign: -1,
            label: "Lusztig-Spaltenstein",
            context: vec![("family", family.to_string()), ("size", size.to_string())],
        };
        map_onto_set_laws(
            &mut unit,
            &laws,
            |p| lusztig_spaltenstein(p, family),
            |image| is_special(image, family),
        );
        unit
    })
}

fn check_c10(max_n: u32) -> (u64, u64, Vec<Witness>) {
    let mut grid = Vec::new();
    for n in 0..=max_n {
        grid.push((Family::C, 2 * n, Family::B, 2 * n + 1));
        grid.push((Family::D, 2 * n, Family::D, 2 * n));
        grid.push((Family::B, 2 * n + 1, Family::C, 2 * n));
    }
    sweep(
        grid,
        |&(source, source_size, target_family, target_size)| {
            let mut unit = Unit::default();
            let domain = orbits(source, source_size, OrbitFilter::Special);
            let target = set_of(&orbits(target_family, target_size, OrbitFilter::Special));
            let laws = MapLaws {
                domain: &domain,
                target: &target,
                check_injective: true,
                order_sign: 1,
                label: "Spaltenstein dual",
                context: vec![
                    ("source_family", source.to_string()),
                    ("source_size", source_size.to_string()),
                ],
            };
            map_onto_set_laws(
                &mut unit,
                &laws,
                |p| spaltenstein_dual(p, source),
                |image| is_special(image, target_family),
            );
            unit
        },
    )
}

fn check_c11(max_n: u32) -> (u64, u64, Vec<Witness>) {
    let mut grid = Vec::new();
    for n in 0..=max_n {
        grid.push((Family::C, 2 * n));
        grid.push((Family::D, 2 * n));
        grid.push((Family::B, 2 * n + 1));
    }
    // Monotonicity quantifies over ordered pairs; keep that leg to size 14.
    const MONOTONE_SIZE_CAP: u32 = 14;
    sweep(grid, |&(family, size)| {
        let mut unit = Unit::default();
        let all = partitions(size);
        let mut collapsed = Vec::with_capacity(all.len());
        for diagram in &all {
            let outcome = (|| {
                let fast = collapse(diagram, family)?;
                let slow = collapse_oracle(diagram, family)?;
                let laws = fast == slow
                    && collapse(&fast, family)? == fast
                    && is_type(&fast, family)
                    && dominance_leq_raw(fast.parts(), diagram.parts())
                    && (fast == *diagram) == is_type(diagram, family);
                Ok((fast, laws))
            })();
            match outcome {
                Ok((fast, laws)) => {
                    unit.require(Ok(laws), || {
                        vec![
                            ("family", family.to_string()),
                            ("diagram", diagram.to_string()),
                            ("collapse", fast.to_string()),
                            ("reason", "collapse laws violated".to_string()),
                        ]
                    });
                    collapsed.push(Some(fast));
                }
                Err(e) => {
                    unit.require(Err(e), || {
                        vec![
                            ("family", family.to_string()),
                            ("diagram", diagram.to_string()),
                        ]
                    });
                    collapsed.push(None);
                }
            }
        }
        if size <= MONOTONE_SIZE_CAP && collapsed.iter().all(Option::is_some) {
            let collapsed: Vec<Partition> = collapsed.into_iter().map(Option::unwrap).collect();
            for i in 0..all.len() {
                for j in 0..all.len() {
                    if i == j {
                        continue;
                    }
                    let hypothesis = dominance_leq_raw(all[i].parts(), all[j].parts());
                    let conclusion =
                        dominance_leq_raw(collapsed[i].parts(), collapsed[j].parts());
                    unit.require(Ok(!hypothesis || conclusion), || {
                        vec![
                            ("family", family.to_string()),
                            ("smaller", all[i].to_string()),
                            ("larger", all[j].to_string()),
                            ("reason", "collapse not monotone".to_string()),
                        ]
                    });
                }
            }
        }
        unit
    })
}

fn check_c12(max_n: u32, a_offset: u32) -> (u64, u64, Vec<Witness>) {
    sweep(rank_lift_grid(max_n, a_offset), |&(n, a)| {
        let mut unit = Unit::default();
        for orbit in orbits(Family::C, 2 * n, OrbitFilter::All) {
            let outcome = (|| {
                let base = infinitesimal_character(&orbit, n)?;
                let direct = infinitesimal_character(&orbit.prepend_row(2 * a)?, n + a)?;
                let lifted = theta_lift_character(&base, a);
                Ok(direct == lifted
                    && lifted.is_metaplectic_integral() == base.is_metaplectic_integral())
            })();
            unit.require(outcome, || {
                vec![
                    ("n", n.to_string()),
                    ("a", a.to_string()),
                    ("orbit", orbit.to_string()),
                ]
            });
        }
        unit
    })
}

fn check_c13(max_n: u32) -> (u64, u64, Vec<Witness>) {
    sweep((0..=max_n).collect(), |&n| {
        let mut unit = Unit::default();
        for orbit in orbits(Family::C, 2 * n, OrbitFilter::All) {
            let outcome = (|| {
                let (character, dual) = unipotent_attachment(&orbit)?;
                let range_ok = is_metaplectic_special(&dual)?;
                let datum_ok = dual == metaplectic_barbasch_vogan(&orbit)?
                    && character == infinitesimal_character(&orbit, n)?;

                let pairing = row_pairing(&orbit)?;
                let mut rows: Vec<u32> = pairing
                    .distinct_even()
                    .iter()
                    .copied()
                    .filter(|&r| r > 0)
                    .collect();
                for &b in pairing.paired() {
                    rows.push(b);
                    rows.push(b);
                }
                rows.sort_unstable_by(|x, y| y.cmp(x));
                let unpaired: u32 = pairing.distinct_even().iter().sum();
                let core: u32 = pairing.core_columns().iter().sum();
                let pairing_ok = rows == orbit.parts()
                    && core == unpaired
                    && is_type(&pairing.core_orbit(), Family::C);

                Ok(range_ok && datum_ok && pairing_ok)
            })();
            unit.require(outcome, || {
                vec![("n", n.to_string()), ("orbit", orbit.to_string())]
            });
        }
        unit
    })
}

fn check_c14(max_n: u32) -> (u64, u64, Vec<Witness>) {
    sweep((1..=max_n).collect(), |&n| {
        let mut unit = Unit::default();
        let principal = Partition::from_valid(vec![2 * n]);
        let zero = Partition::from_valid(vec![1; 2 * n as usize]);
        let mut minimal_parts = vec![2];
        minimal_parts.extend(std::iter::repeat_n(1, 2 * n as usize - 2));
        let minimal = Partition::from_valid(minimal_parts);

        unit.require(
            metaplectic_barbasch_vogan(&principal).map(|dual| dual == minimal),
            || {
                vec![
                    ("n", n.to_string()),
                    ("orbit", principal.to_string()),
                    ("expected", minimal.to_string()),
                ]
            },
        );
        unit.require(
            metaplectic_barbasch_vogan(&zero).map(|dual| dual == principal),
            || {
                vec![
                    ("n", n.to_string()),
                    ("orbit", zero.to_string()),
                    ("expected", principal.to_string()),
                ]
            },
        );
        unit
    })
}
