//! Stability cones D(M) of every indecomposable, computed twice: from the
//! definition through the exhaustive subobject oracle, and from the explicit
//! combinatorial descriptions. The two routes must agree.
//!
//! Run with `cargo run --example stability_cones [n]` (default n = 2).

use bnfan::classes::StringClass;
use bnfan::rep::ModuleId;
use bnfan::stability::NonThin;
use bnfan::{
    closed_form_cone, cone_eq, double_description, enumerate_indecomposables, nonthin_cone,
    stability_cone,
};

fn main() -> bnfan::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n must be a positive integer"))
        .unwrap_or(2);

    for entry in enumerate_indecomposables(n)? {
        let via_oracle = stability_cone(&entry.rep)?;
        let explicit = match entry.id {
            ModuleId::Str(StringClass::Cycle) => nonthin_cone(NonThin::Cycle, n)?,
            ModuleId::Str(class) => closed_form_cone(&class, n)?,
            ModuleId::Biserial(i) => nonthin_cone(NonThin::Biserial(i), n)?,
        };
        let agree = cone_eq(&via_oracle, &explicit)?;
        let v = double_description(&explicit);
        println!("D({})  dim {}  routes agree: {}", entry.id, v.dim(), agree);
        println!("  equalities:   {:?}", explicit.canonical_equalities());
        println!("  inequalities: {:?}", explicit.canonical_inequalities());
        println!("  rays:         {:?}", v.rays);
        println!("  lineality:    {:?}", v.lineality);
        assert!(agree, "oracle and closed form must give the same cone");
    }
    Ok(())
}
