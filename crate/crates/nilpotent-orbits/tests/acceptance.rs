//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with
//! `cargo test -p nilpotent-orbits --test acceptance -- --nocapture`.
//!
//! Criteria 1-7 and 9 drive the verification checks at their contractual
//! parameter grids and time budgets; criterion 8 freezes the size-4 orbit
//! counts against an oracle written independently of the library; criterion
//! 10 pins the documented command-line behavior byte for byte.

use std::time::{Duration, Instant};

use nilpotent_orbits::cli;
use nilpotent_orbits::orbit::{enumerate_orbits, Family, OrbitFilter};
use nilpotent_orbits::verify::{run_check, CheckId};

fn run_clean(criterion: &str, id: CheckId, max_n: u32, a_offset: u32, budget: Duration) {
    let started = Instant::now();
    let report = run_check(id, max_n, a_offset).expect("check parameters in bounds");
    let elapsed = started.elapsed();
    let ok = report.failures == 0 && elapsed < budget;
    println!(
        "{criterion}: {} ({id}: {} instances, {} failures, {} ms)",
        if ok { "PASS" } else { "FAIL" },
        report.instances,
        report.failures,
        elapsed.as_millis()
    );
    assert_eq!(
        report.failures, 0,
        "{criterion}: {id} produced witnesses {:?}",
        report.witnesses
    );
    assert!(
        elapsed < budget,
        "{criterion}: {id} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn criterion_01_principal_and_zero_orbit_duals() {
    // md_BV([2n]) = [2,1^(2n-2)] and md_BV([1^(2n)]) = [2n] for n <= 10.
    run_clean(
        "criterion 1",
        CheckId::C14,
        10,
        0,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_metaplectic_ls_surjective_order_reversing() {
    // Onto the special type-D orbits, order reversed, all sizes 2n <= 20.
    run_clean("criterion 2", CheckId::C1, 10, 0, Duration::from_secs(60));
}

#[test]
fn criterion_03_metaplectic_sp_order_preserving_bijection() {
    run_clean("criterion 3", CheckId::C2, 10, 0, Duration::from_secs(60));
}

#[test]
fn criterion_04_commuting_diagrams() {
    // C3, C6, C8 on n <= 6, a in n..=n+3, within 120 s together.
    let started = Instant::now();
    let budget = Duration::from_secs(120);
    for id in [CheckId::C3, CheckId::C6, CheckId::C8] {
        let report = run_check(id, 6, 3).unwrap();
        assert_eq!(
            report.failures, 0,
            "criterion 4: {id} witnesses {:?}",
            report.witnesses
        );
        assert_eq!(report.params.max_n, 6, "criterion 4: {id} grid was clamped");
    }
    let elapsed = started.elapsed();
    println!(
        "criterion 4: {} (C3+C6+C8 in {} ms)",
        if elapsed < budget { "PASS" } else { "FAIL" },
        elapsed.as_millis()
    );
    assert!(elapsed < budget);
}

#[test]
fn criterion_05_column_lemmas() {
    // C4, C5, C7 on the same grid, within 120 s together.
    let started = Instant::now();
    let budget = Duration::from_secs(120);
    for id in [CheckId::C4, CheckId::C5, CheckId::C7] {
        let report = run_check(id, 6, 3).unwrap();
        assert_eq!(
            report.failures, 0,
            "criterion 5: {id} witnesses {:?}",
            report.witnesses
        );
    }
    let elapsed = started.elapsed();
    println!(
        "criterion 5: {} (C4+C5+C7 in {} ms)",
        if elapsed < budget { "PASS" } else { "FAIL" },
        elapsed.as_millis()
    );
    assert!(elapsed < budget);
}

#[test]
fn criterion_06_collapse_oracle_equivalence() {
    // Constructive collapse == brute-force maximum for every partition of
    // size <= 16 in each admissible family (odd sizes reach 17), plus
    // idempotence and monotonicity.
    run_clean("criterion 6", CheckId::C11, 8, 0, Duration::from_secs(300));
}

#[test]
fn criterion_07_character_lift_identity() {
    // Characters of row-extended orbits match lifted characters for all
    // type-C orbits of size 2n <= 12 and a <= n+3.
    run_clean("criterion 7", CheckId::C12, 6, 3, Duration::from_secs(30));
}

#[test]
fn criterion_08_counting_fixtures() {
    // Golden values, frozen from an oracle independent of the library:
    // |Nil(sp4)| = 4, |Nil_sp(sp4)| = 3, |Nil_ms(sp4)| = 3, |Nil_sp(o4)| = 3.

    // The five partitions of 4, listed by hand.
    let partitions_of_4: [&[u32]; 5] = [&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];

    fn transpose_oracle(rows: &[u32]) -> Vec<u32> {
        let widest = rows.iter().copied().max().unwrap_or(0);
        (1..=widest)
            .map(|col| rows.iter().filter(|&&r| r >= col).count() as u32)
            .collect()
    }

    fn multiplicities_ok(rows: &[u32], must_pair: impl Fn(u32) -> bool) -> bool {
        let mut counts = std::collections::BTreeMap::new();
        for &r in rows {
            *counts.entry(r).or_insert(0u32) += 1;
        }
        counts.iter().all(|(&v, &c)| !must_pair(v) || c % 2 == 0)
    }

    let type_c = |rows: &[u32]| {
        rows.iter().sum::<u32>() % 2 == 0 && multiplicities_ok(rows, |v| v % 2 == 1)
    };
    let type_d = |rows: &[u32]| {
        rows.iter().sum::<u32>() % 2 == 0 && multiplicities_ok(rows, |v| v % 2 == 0)
    };

    let nil_c = partitions_of_4.iter().filter(|p| type_c(p)).count();
    let nil_c_special = partitions_of_4
        .iter()
        .filter(|p| type_c(p) && type_c(&transpose_oracle(p)))
        .count();
    let nil_c_metaplectic = partitions_of_4
        .iter()
        .filter(|p| type_c(p) && type_d(&transpose_oracle(p)))
        .count();
    let nil_d_special = partitions_of_4
        .iter()
        .filter(|p| type_d(p) && type_c(&transpose_oracle(p)))
        .count();

    assert_eq!((nil_c, nil_c_special, nil_c_metaplectic, nil_d_special), (4, 3, 3, 3));

    // The library agrees with the frozen golden values.
    assert_eq!(
        enumerate_orbits(Family::C, 4, OrbitFilter::All).unwrap().len(),
        4
    );
    assert_eq!(
        enumerate_orbits(Family::C, 4, OrbitFilter::Special).unwrap().len(),
        3
    );
    assert_eq!(
        enumerate_orbits(Family::C, 4, OrbitFilter::MetaplecticSpecial)
            .unwrap()
            .len(),
        3
    );
    assert_eq!(
        enumerate_orbits(Family::D, 4, OrbitFilter::Special).unwrap().len(),
        3
    );
    println!("criterion 8: PASS (4/3/3/3 orbit counts at size 4)");
}

#[test]
fn criterion_09_metaplectic_bv_range() {
    // Every metaplectic BV dual is metaplectic special, sizes 2n <= 20.
    run_clean("criterion 9", CheckId::C13, 10, 0, Duration::from_secs(60));
}

#[test]
fn criterion_10_cli_contract() {
    fn capture(args: &[&str]) -> (i32, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = cli::run(&args, &mut out, &mut err);
        assert!(err.is_empty(), "unexpected stderr: {err:?}");
        (code, String::from_utf8(out).unwrap())
    }

    let (code, out) = capture(&["orbits", "C", "4", "--filter", "ms"]);
    assert_eq!((code, out.as_str()), (0, "4\n2,2\n2,1,1\n"));

    let (code, out) = capture(&["dual", "mbv", "4"]);
    assert_eq!((code, out.as_str()), (0, "2,1,1\n"));

    // The documented suite run prints one summary row per check.
    let (code, out) = capture(&["verify", "--max-rank", "6"]);
    assert_eq!(code, 0, "verify --max-rank 6 must exit 0:\n{out}");
    for id in CheckId::ALL {
        assert!(
            out.lines().any(|line| line.starts_with(id.as_str())
                && line.contains("PASS")),
            "missing PASS line for {id}:\n{out}"
        );
    }

    let (code, _) = capture(&["verify", "--max-rank", "5"]);
    assert_eq!(code, 0, "verify --max-rank 5 must exit 0");
    println!("criterion 10: PASS (documented invocations byte-exact, verify exits 0)");
}
