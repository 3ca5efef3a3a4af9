//! Named verification checks, the same catalogue the acceptance suite runs,
//! callable for a single `n` from the `verify` subcommand.
//!
//! Each check either passes, fails with a detail message, or is skipped when
//! it only applies to specific `n` (the worked-example goldens) or would be
//! too large (chamber determinism beyond n = 4).

use std::collections::BTreeSet;

use crate::classes::{phi, profile, psi, star_classes, Eta, StringClass};
use crate::cones::{cone_dim, cone_eq, cone_subset, ConeH};
use crate::fan::{chambers, decompose, interval_hyperplanes};
use crate::linalg::rat_vec;
use crate::quiver::{build_quiver, enumerate_strings, find_bands};
use crate::rep::{check_relations, enumerate_indecomposables, ModuleId};
use crate::stability::{nonthin_cone, stability_cone, walls, NonThin};
use crate::subobjects::{quotient_dimvectors, subobject_dimvectors, SubobjectField};
use crate::{Result, Walk};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Pass,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Fail,
            detail: detail.into(),
        }
    }

    fn skip(name: &'static str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            status: CheckStatus::Skip,
            detail: detail.into(),
        }
    }
}

fn check<F: FnOnce() -> Result<std::result::Result<String, String>>>(
    name: &'static str,
    f: F,
) -> CheckOutcome {
    match f() {
        Ok(Ok(detail)) => CheckOutcome::pass(name, detail),
        Ok(Err(detail)) => CheckOutcome::fail(name, detail),
        Err(e) => CheckOutcome::fail(name, format!("error: {e}")),
    }
}

fn golden_cone(ambient: usize, eqs: &[&[i64]], ineqs: &[&[i64]]) -> ConeH {
    ConeH::with_constraints(
        ambient,
        eqs.iter().map(|e| rat_vec(e)).collect(),
        ineqs.iter().map(|b| rat_vec(b)).collect(),
    )
    .expect("golden cone is well formed")
}

fn cone_of(id: &ModuleId, n: usize) -> Result<ConeH> {
    let entry = enumerate_indecomposables(n)?
        .into_iter()
        .find(|e| e.id == *id)
        .expect("catalogue id");
    stability_cone(&entry.rep)
}

/// Collects outcomes and stops executing once a check has failed.
struct FailFast(Vec<CheckOutcome>);

impl FailFast {
    fn stopped(&self) -> bool {
        self.0.last().is_some_and(|o| o.status == CheckStatus::Fail)
    }

    fn run_check<F: FnOnce() -> Result<std::result::Result<String, String>>>(
        &mut self,
        name: &'static str,
        f: F,
    ) {
        if !self.stopped() {
            self.0.push(check(name, f));
        }
    }

    fn run_if<F: FnOnce() -> Result<std::result::Result<String, String>>>(
        &mut self,
        applicable: bool,
        name: &'static str,
        skip_reason: &'static str,
        f: F,
    ) {
        if self.stopped() {
            return;
        }
        if applicable {
            self.0.push(check(name, f));
        } else {
            self.0.push(CheckOutcome::skip(name, skip_reason));
        }
    }
}

/// Run the applicable checks for the given `n`, stopping at the first
/// failure (the failing check is named in its outcome).
pub fn run_checks(n: usize) -> Result<Vec<CheckOutcome>> {
    build_quiver(n)?; // validates n >= 1 up front
    let mut out = FailFast(Vec::new());

    out.run_check("string_class_count", || {
        let expected = (n + 1) * (n + 1) + 1;
        let classes = star_classes(n)?.len();
        let q = build_quiver(n)?;
        let mut seen: BTreeSet<Walk> = BTreeSet::new();
        let mut grouped = 0usize;
        for w in enumerate_strings(n)? {
            if seen.contains(&w) {
                continue;
            }
            seen.insert(w.star());
            seen.insert(w.clone());
            phi(&w, &q)?;
            grouped += 1;
        }
        Ok(if classes == expected && grouped == expected {
            Ok(format!(
                "classes={classes} grouped={grouped} expected={expected}"
            ))
        } else {
            Err(format!(
                "classes={classes} grouped={grouped} expected={expected}"
            ))
        })
    });

    out.run_check("indecomposable_count", || {
        let expected = n + (n + 1) * (n + 1);
        let got = enumerate_indecomposables(n)?.len();
        Ok(if got == expected {
            Ok(format!("catalogue={got} expected={expected}"))
        } else {
            Err(format!("catalogue={got} expected={expected}"))
        })
    });

    out.run_check("no_bands", || {
        let bands = find_bands(n)?;
        Ok(if bands.is_empty() {
            Ok("no bands found".into())
        } else {
            Err(format!("found {} bands: {:?}", bands.len(), bands))
        })
    });

    out.run_check("relations_hold", || {
        for entry in enumerate_indecomposables(n)? {
            if !check_relations(&entry.rep)? {
                return Ok(Err(format!("relations fail for {}", entry.id)));
            }
        }
        Ok(Ok("all catalogue modules satisfy I(n)".into()))
    });

    out.run_if(n == 1, "golden_cones_n1", "applies to n = 1 only", || {
        let cases: Vec<(&str, ConeH)> = vec![
            ("S0", golden_cone(2, &[&[1, 0]], &[])),
            ("S1", golden_cone(2, &[&[0, 1]], &[])),
            ("M(0,1,-1)", golden_cone(2, &[&[1, 1]], &[&[1, 0]])),
            ("M(0,1,+1)", golden_cone(2, &[&[1, 1]], &[&[-1, 0]])),
            ("M(cycle)", golden_cone(2, &[&[1, 0], &[0, 1]], &[])),
        ];
        for (id, expected) in cases {
            let got = cone_of(&id.parse()?, 1)?;
            if !cone_eq(&got, &expected)? {
                return Ok(Err(format!("D({id}) differs from the golden cone")));
            }
        }
        Ok(Ok("all five golden cones match".into()))
    });

    out.run_if(n == 2, "golden_cones_n2", "applies to n = 2 only", || {
        let cases: Vec<(&str, ConeH)> = vec![
            ("S0", golden_cone(3, &[&[1, 0, 0]], &[])),
            ("S1", golden_cone(3, &[&[0, 1, 0]], &[])),
            ("S2", golden_cone(3, &[&[0, 0, 1]], &[])),
            ("M(0,1,-1)", golden_cone(3, &[&[1, 1, 0]], &[&[1, 0, 0]])),
            ("M(0,1,+1)", golden_cone(3, &[&[1, 1, 0]], &[&[-1, 0, 0]])),
            ("M(1,2,-1)", golden_cone(3, &[&[0, 1, 1]], &[&[0, 1, 0]])),
            ("M(1,2,+1)", golden_cone(3, &[&[0, 1, 1]], &[&[0, -1, 0]])),
            (
                "M(0,2,-1)",
                golden_cone(3, &[&[1, 1, 1]], &[&[1, 0, 0], &[0, 0, 1]]),
            ),
            (
                "M(0,2,+1)",
                golden_cone(3, &[&[1, 1, 1]], &[&[-1, 0, 0], &[0, 0, -1]]),
            ),
        ];
        for (id, expected) in cases {
            let got = cone_of(&id.parse()?, 2)?;
            if !cone_eq(&got, &expected)? {
                return Ok(Err(format!("D({id}) differs from the golden cone")));
            }
        }
        Ok(Ok("all nine golden cones match".into()))
    });

    out.run_if(
        n <= 3,
        "oracle_matches_closed_form",
        "runs for n <= 3",
        || {
            let q = build_quiver(n)?;
            let mut compared = 0usize;
            for c in star_classes(n)? {
                if c == StringClass::Cycle {
                    continue;
                }
                let rep = crate::rep::string_module(&psi(&c, n)?, &q)?;
                let via_oracle = stability_cone(&rep)?;
                let via_form = crate::stability::closed_form_cone(&c, n)?;
                if !cone_eq(&via_oracle, &via_form)? {
                    return Ok(Err(format!("routes disagree for class {c}")));
                }
                compared += 1;
            }
            Ok(Ok(format!(
                "{compared} thin classes agree across both routes"
            )))
        },
    );

    out.run_if(
        n <= 4,
        "nonthin_stability_spaces",
        "runs for n <= 4",
        || {
            for entry in enumerate_indecomposables(n)? {
                if entry.rep.is_thin() {
                    continue;
                }
                let closed = match entry.id {
                    ModuleId::Str(StringClass::Cycle) => nonthin_cone(NonThin::Cycle, n)?,
                    ModuleId::Biserial(i) => nonthin_cone(NonThin::Biserial(i), n)?,
                    _ => unreachable!("non-thin strings are exactly the cycle"),
                };
                let via_oracle = stability_cone(&entry.rep)?;
                if !cone_eq(&via_oracle, &closed)? {
                    return Ok(Err(format!("oracle cone differs for {}", entry.id)));
                }
                if cone_dim(&closed) + 2 > n + 1 {
                    return Ok(Err(format!("{} has codimension < 2", entry.id)));
                }
            }
            Ok(Ok(
                "non-thin spaces are the coordinate subspaces, codim >= 2".into(),
            ))
        },
    );

    out.run_if(n <= 4, "thin_reduction", "runs for n <= 4", || {
        let catalogue = enumerate_indecomposables(n)?;
        let thin_cones: Vec<(ModuleId, ConeH)> = catalogue
            .iter()
            .filter(|e| e.rep.is_thin())
            .map(|e| Ok((e.id, stability_cone(&e.rep)?)))
            .collect::<Result<_>>()?;
        for entry in &catalogue {
            let dm = stability_cone(&entry.rep)?;
            let mut dominated = false;
            for (_, dl) in &thin_cones {
                if cone_subset(&dm, dl)? {
                    dominated = true;
                    break;
                }
            }
            if !dominated {
                return Ok(Err(format!("no thin cone contains D({})", entry.id)));
            }
        }
        Ok(Ok("every stability space sits inside a thin one".into()))
    });

    out.run_if(n <= 5, "subquot_symmetry", "runs for n <= 5", || {
        for entry in enumerate_indecomposables(n)? {
            if entry.rep.is_thin() {
                continue;
            }
            let subs = subobject_dimvectors(&entry.rep, SubobjectField::F2)?;
            let quots = quotient_dimvectors(&entry.rep)?;
            if subs != quots {
                return Ok(Err(format!(
                    "subobject/quotient dimension sets differ for {}",
                    entry.id
                )));
            }
        }
        Ok(Ok(
            "non-thin subobject and quotient dimension sets coincide".into(),
        ))
    });

    out.run_if(n == 1, "chambers_n1", "applies to n = 1 only", || {
        let cs = chambers(1)?;
        let summary = format!(
            "walls={} regions={} merges={} chambers={}",
            cs.wall_count(),
            cs.region_count(),
            cs.merge_count(),
            cs.chamber_count()
        );
        Ok(
            if cs.wall_count() == 4
                && cs.region_count() == 6
                && cs.merge_count() == 0
                && cs.chamber_count() == 6
            {
                Ok(summary)
            } else {
                Err(summary)
            },
        )
    });

    out.run_check("profile_monotonicity", || {
        for w in enumerate_strings(n)? {
            if w.is_empty() || !w.is_alternating() {
                continue;
            }
            let p = profile(&w);
            if !p.is_strictly_monotone() {
                return Ok(Err(format!("profile of {w} is not strictly monotone")));
            }
            if p.is_strictly_increasing() == profile(&w.star()).is_strictly_increasing() {
                return Ok(Err(format!("star pair of {w} does not flip monotonicity")));
            }
        }
        Ok(Ok("all alternating profiles strictly monotone".into()))
    });

    out.run_check("phi_psi_identity", || {
        let q = build_quiver(n)?;
        for c in star_classes(n)? {
            if phi(&psi(&c, n)?, &q)? != c {
                return Ok(Err(format!("phi(psi({c})) != {c}")));
            }
        }
        Ok(Ok("phi ∘ psi is the identity on all classes".into()))
    });

    out.run_check("duality_of_closed_forms", || {
        for a in 0..n {
            for b in a + 1..=n {
                let minus = crate::stability::closed_form_cone(
                    &StringClass::interval(a, b, Eta::Minus),
                    n,
                )?;
                let plus =
                    crate::stability::closed_form_cone(&StringClass::interval(a, b, Eta::Plus), n)?;
                if minus.canonical_equalities() != plus.canonical_equalities() {
                    return Ok(Err(format!("equalities differ for ({a},{b})")));
                }
                let mut negated: Vec<Vec<num::BigInt>> = minus
                    .canonical_inequalities()
                    .iter()
                    .map(|row| row.iter().map(|x| -x).collect())
                    .collect();
                negated.sort();
                if plus.canonical_inequalities() != negated {
                    return Ok(Err(format!("inequalities not negated for ({a},{b})")));
                }
            }
        }
        Ok(Ok(
            "the two orientations have negated inequality sets".into()
        ))
    });

    out.run_if(
        n <= 4,
        "chamber_order_determinism",
        "runs for n <= 4",
        || {
            let base = chambers(n)?;
            let hps = interval_hyperplanes(n);
            let mut reversed = hps.clone();
            reversed.reverse();
            let cs = decompose(&reversed, walls(n)?)?;
            Ok(
                if cs.chamber_count() == base.chamber_count()
                    && cs.region_count() == base.region_count()
                {
                    Ok(format!(
                        "regions={} chambers={} under reordering",
                        base.region_count(),
                        base.chamber_count()
                    ))
                } else {
                    Err(format!(
                        "reordered run differs: {}/{} vs {}/{}",
                        cs.region_count(),
                        cs.chamber_count(),
                        base.region_count(),
                        base.chamber_count()
                    ))
                },
            )
        },
    );

    Ok(out.0)
}

/// True when no check failed (skips are fine).
pub fn all_passed(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.status != CheckStatus::Fail)
}
