//! The wall-and-chamber structure: codimension-1 stability spaces and the
//! chamber decomposition of the interval-hyperplane arrangement.
//!
//! Run with `cargo run --example walls_and_chambers [n]` (default n = 2).

use bnfan::{chambers, double_description, walls};

fn main() -> bnfan::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(2);

    let wall_list = walls(n)?;
    println!("walls for n = {n}: {}", wall_list.len());
    for (id, cone) in &wall_list {
        let v = double_description(cone);
        println!("  D({id}): rays {:?}, lineality {:?}", v.rays, v.lineality);
    }

    let cs = chambers(n)?;
    println!(
        "\narrangement: {} hyperplanes, {} regions, {} facet merges",
        cs.hyperplanes.len(),
        cs.region_count(),
        cs.merge_count()
    );
    println!("chambers: {}", cs.chamber_count());
    for ch in &cs.chambers {
        println!("  chamber {:>3}: {} region(s)", ch.id, ch.region_ids.len());
    }
    Ok(())
}
