//! Enumerate the strings on (Q(n), I(n)) and their *-classes.
//!
//! Run with `cargo run --example strings [n]` (default n = 2).

use bnfan::{build_quiver, enumerate_strings, phi, profile, psi, star_classes};

fn main() -> bnfan::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(2);

    let q = build_quiver(n)?;
    let walks = enumerate_strings(n)?;
    println!("strings on (Q({n}), I({n})): {} walks", walks.len());
    for w in &walks {
        println!(
            "  {:<12} length {}  source {}  target {}  class {}",
            w.to_string(),
            w.len(),
            w.source(),
            w.target(),
            phi(w, &q)?
        );
    }

    let classes = star_classes(n)?;
    println!("\n*-classes: {} (formula (n+1)^2+1)", classes.len());
    for c in &classes {
        let w = psi(c, n)?;
        println!(
            "  {:<10} canonical {:<12} profile {:?}",
            c.to_string(),
            w.to_string(),
            profile(&w).values()
        );
    }
    Ok(())
}
