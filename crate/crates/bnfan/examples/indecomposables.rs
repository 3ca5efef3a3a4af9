//! The full catalogue of indecomposable B(n)-modules: one string module per
//! *-class plus the biserial modules R(i), with relation checking.
//!
//! Run with `cargo run --example indecomposables [n]` (default n = 3).

use bnfan::{check_relations, enumerate_indecomposables};

fn main() -> bnfan::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(3);

    let catalogue = enumerate_indecomposables(n)?;
    println!(
        "indecomposable B({n})-modules: {} (formula n + (n+1)^2 = {})",
        catalogue.len(),
        n + (n + 1) * (n + 1)
    );
    for entry in &catalogue {
        println!(
            "  {:<12} dim {}  thin: {:<3}  relations: {}",
            entry.id.to_string(),
            entry.rep.dims(),
            if entry.rep.is_thin() { "yes" } else { "no" },
            if check_relations(&entry.rep)? {
                "ok"
            } else {
                "VIOLATED"
            },
        );
    }
    Ok(())
}
