//! Subobject dimension vectors of each indecomposable, from the exhaustive
//! F2 oracle, next to the combinatorial interval description for thin
//! modules.
//!
//! Run with `cargo run --example subobject_oracle [n]` (default n = 2).

use bnfan::classes::StringClass;
use bnfan::rep::ModuleId;
use bnfan::{
    enumerate_indecomposables, quotient_dimvectors, subobject_dimvectors, thin_subobject_supports,
    SubobjectField,
};

fn main() -> bnfan::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(2);

    for entry in enumerate_indecomposables(n)? {
        let subs = subobject_dimvectors(&entry.rep, SubobjectField::F2)?;
        let quots = quotient_dimvectors(&entry.rep)?;
        println!("{} (dim {}):", entry.id, entry.rep.dims());
        println!(
            "  subobject dims: {:?}",
            subs.iter().map(|d| d.to_string()).collect::<Vec<_>>()
        );
        println!(
            "  quotient dims:  {:?}",
            quots.iter().map(|d| d.to_string()).collect::<Vec<_>>()
        );
        if let ModuleId::Str(c @ StringClass::Interval { .. }) = entry.id {
            let supports = thin_subobject_supports(&c)?;
            println!(
                "  interval supports (closed form, incl. full): {:?}",
                supports.iter().map(|s| s.to_string()).collect::<Vec<_>>()
            );
        }
    }
    Ok(())
}
