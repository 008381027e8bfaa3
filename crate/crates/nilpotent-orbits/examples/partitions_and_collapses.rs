//! Young-diagram arithmetic and the B/C/D-collapse.
//!
//! Run with `cargo run --example partitions_and_collapses`.

use nilpotent_orbits::collapse::{collapse, collapse_oracle};
use nilpotent_orbits::orbit::{is_type, Family};
use nilpotent_orbits::partition::{enumerate_partitions, Partition};

fn main() -> nilpotent_orbits::Result<()> {
    let diagram: Partition = "4,3,1".parse()?;
    println!("diagram          {diagram}");
    println!("transpose        {}", diagram.transpose());
    println!("grow             {}", diagram.grow());
    println!("shrink           {}", diagram.shrink()?);
    println!("strip column     {}", diagram.strip_first_column());
    println!("strip row        {}", diagram.strip_first_row());
    println!("prepend row 6    {}", diagram.prepend_row(6)?);
    println!("prepend column 5 {}", diagram.prepend_column(5)?);
    println!();

    // The C-collapse of [3,1] is the largest symplectic diagram below it.
    let odd_rows: Partition = "3,1".parse()?;
    let collapsed = collapse(&odd_rows, Family::C)?;
    println!("C-collapse of {odd_rows} is {collapsed}");
    assert!(is_type(&collapsed, Family::C));
    assert!(collapsed.dominance_leq(&odd_rows)?);

    // The brute-force oracle recomputes every collapse by enumeration; the
    // verification suite runs this comparison exhaustively (check C11).
    for size in [4u32, 6, 8] {
        for family in [Family::C, Family::D] {
            for diagram in enumerate_partitions(size)? {
                assert_eq!(
                    collapse(&diagram, family)?,
                    collapse_oracle(&diagram, family)?,
                );
            }
        }
        println!("collapse == oracle for all partitions of {size}");
    }

    // Dominance order is a partial order on each size; collapse is the
    // dominance maximum of the typed diagrams below the input.
    let all_of_6 = enumerate_partitions(6)?;
    println!("\npartitions of 6, descending lexicographic:");
    for diagram in &all_of_6 {
        let tag = if is_type(diagram, Family::C) { "type C" } else { "      " };
        println!("  {diagram:<12} {tag}");
    }
    Ok(())
}
