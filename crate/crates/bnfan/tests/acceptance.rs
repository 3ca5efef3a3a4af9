//! Acceptance suite: the eleven gate criteria, each with its stated bound
//! and an exact tolerance (everything here is integer or rational
//! arithmetic, so "tolerance" means equality).
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bnfan::classes::{phi, profile, psi, star_classes, Eta, StringClass};
use bnfan::cones::{cone_dim, cone_eq, cone_subset, double_description, ConeH};
use bnfan::fan::{chambers, decompose, interval_hyperplanes};
use bnfan::linalg::rat_vec;
use bnfan::quiver::{build_quiver, enumerate_strings, find_bands};
use bnfan::rep::{check_relations, enumerate_indecomposables, string_module, ModuleId};
use bnfan::report::{cone_report, VectorOrder};
use bnfan::stability::{nonthin_cone, stability_cone, walls, NonThin};
use bnfan::subobjects::{quotient_dimvectors, subobject_dimvectors, SubobjectField};

fn finish(criterion: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("acceptance {criterion}: PASS in {elapsed:?}");
    assert!(
        elapsed < budget,
        "{criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

fn golden(ambient: usize, eqs: &[&[i64]], ineqs: &[&[i64]]) -> ConeH {
    ConeH::with_constraints(
        ambient,
        eqs.iter().map(|e| rat_vec(e)).collect(),
        ineqs.iter().map(|b| rat_vec(b)).collect(),
    )
    .unwrap()
}

fn cone_of(id: &str, n: usize) -> ConeH {
    let id: ModuleId = id.parse().unwrap();
    let entry = enumerate_indecomposables(n)
        .unwrap()
        .into_iter()
        .find(|e| e.id == id)
        .unwrap_or_else(|| panic!("{id} not in catalogue for n = {n}"));
    stability_cone(&entry.rep).unwrap()
}

#[test]
fn criterion_01_string_class_counts() {
    let start = Instant::now();
    for n in 1..=6 {
        assert_eq!(
            star_classes(n).unwrap().len(),
            (n + 1) * (n + 1) + 1,
            "n = {n}"
        );
    }
    finish(
        "criterion 01 (string-class counts n=1..6)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_indecomposable_counts() {
    let start = Instant::now();
    for n in 1..=6 {
        assert_eq!(
            enumerate_indecomposables(n).unwrap().len(),
            n + (n + 1) * (n + 1),
            "n = {n}"
        );
    }
    finish(
        "criterion 02 (indecomposable counts n=1..6)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_no_bands() {
    let start = Instant::now();
    for n in 1..=6 {
        assert!(find_bands(n).unwrap().is_empty(), "band found at n = {n}");
    }
    finish(
        "criterion 03 (no bands n=1..6)",
        start,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_04_n1_golden_cones() {
    let start = Instant::now();
    // ascending coordinates (v_0, v_1); the descending print of the M(α_0)
    // ray, (v_1, v_0) = (1, −1), is ascending (−1, 1)
    assert!(cone_eq(&cone_of("S0", 1), &golden(2, &[&[1, 0]], &[])).unwrap());
    assert!(cone_eq(&cone_of("S1", 1), &golden(2, &[&[0, 1]], &[])).unwrap());
    let d_alpha = cone_of("M(0,1,-1)", 1);
    assert!(cone_eq(&d_alpha, &golden(2, &[&[1, 1]], &[&[1, 0]])).unwrap());
    let v = double_description(&d_alpha);
    assert_eq!(v.rays.len(), 1);
    assert_eq!(v.rays[0], vec![(-1).into(), 1.into()]);
    let d_beta = cone_of("M(0,1,+1)", 1);
    assert!(cone_eq(&d_beta, &golden(2, &[&[1, 1]], &[&[-1, 0]])).unwrap());
    let v = double_description(&d_beta);
    assert_eq!(v.rays[0], vec![1.into(), (-1).into()]);
    let d_cycle = cone_of("M(cycle)", 1);
    assert!(cone_eq(&d_cycle, &golden(2, &[&[1, 0], &[0, 1]], &[])).unwrap());
    let v = double_description(&d_cycle);
    assert!(v.rays.is_empty() && v.lineality.is_empty());
    finish(
        "criterion 04 (n=1 golden cones)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_05_n2_golden_cones() {
    let start = Instant::now();
    // frozen golden constraint sets in descending print order
    // (x, y, z) = (v_2, v_1, v_0)
    let cases: Vec<(StringClass, &[&str], &[&str])> = vec![
        (StringClass::Trivial(0), &["z=0"], &[]),
        (StringClass::Trivial(1), &["y=0"], &[]),
        (StringClass::Trivial(2), &["x=0"], &[]),
        (
            StringClass::interval(0, 1, Eta::Minus),
            &["y+z=0"],
            &["z≤0"],
        ),
        (StringClass::interval(0, 1, Eta::Plus), &["y+z=0"], &["z≥0"]),
        (
            StringClass::interval(1, 2, Eta::Minus),
            &["x+y=0"],
            &["y≤0"],
        ),
        (StringClass::interval(1, 2, Eta::Plus), &["x+y=0"], &["y≥0"]),
        (
            StringClass::interval(0, 2, Eta::Minus),
            &["x+y+z=0"],
            &["x≤0", "z≤0"],
        ),
        (
            StringClass::interval(0, 2, Eta::Plus),
            &["x+y+z=0"],
            &["x≥0", "z≥0"],
        ),
    ];
    for (class, eqs, ineqs) in cases {
        let closed = bnfan::stability::closed_form_cone(&class, 2).unwrap();
        let report = cone_report(&closed, VectorOrder::PaperDescending);
        let got_eqs: BTreeSet<String> = report.equalities.iter().cloned().collect();
        let want_eqs: BTreeSet<String> = eqs.iter().map(|s| s.to_string()).collect();
        assert_eq!(got_eqs, want_eqs, "equalities of {class}");
        let got_ineqs: BTreeSet<String> = report.inequalities.iter().cloned().collect();
        let want_ineqs: BTreeSet<String> = ineqs.iter().map(|s| s.to_string()).collect();
        assert_eq!(got_ineqs, want_ineqs, "inequalities of {class}");
        // and the definitional oracle route cuts out the same cone
        let via_oracle = cone_of(&ModuleId::Str(class).to_string(), 2);
        assert!(cone_eq(&via_oracle, &closed).unwrap(), "routes for {class}");
    }
    finish(
        "criterion 05 (n=2 golden cones)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_06_oracle_vs_closed_form() {
    let start = Instant::now();
    let mut compared = 0;
    for n in 1..=3 {
        let q = build_quiver(n).unwrap();
        for c in star_classes(n).unwrap() {
            if c == StringClass::Cycle {
                continue;
            }
            let rep = string_module(&psi(&c, n).unwrap(), &q).unwrap();
            let via_oracle = stability_cone(&rep).unwrap();
            let via_form = bnfan::stability::closed_form_cone(&c, n).unwrap();
            assert!(
                cone_eq(&via_oracle, &via_form).unwrap(),
                "class {c} at n = {n}"
            );
            compared += 1;
        }
    }
    // (n+1)² thin classes per n: 4 + 9 + 16
    assert_eq!(compared, 29);
    finish(
        "criterion 06 (oracle vs closed form, n<=3)",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_07_nonthin_stability_spaces() {
    let start = Instant::now();
    for n in 1..=4 {
        let wall_ids: BTreeSet<String> = walls(n)
            .unwrap()
            .iter()
            .map(|(id, _)| id.to_string())
            .collect();
        for entry in enumerate_indecomposables(n).unwrap() {
            if entry.rep.is_thin() {
                continue;
            }
            let closed = match entry.id {
                ModuleId::Str(StringClass::Cycle) => nonthin_cone(NonThin::Cycle, n).unwrap(),
                ModuleId::Biserial(i) => nonthin_cone(NonThin::Biserial(i), n).unwrap(),
                _ => unreachable!(),
            };
            let via_oracle = stability_cone(&entry.rep).unwrap();
            assert!(cone_eq(&via_oracle, &closed).unwrap(), "{}", entry.id);
            let codim = (n + 1) - cone_dim(&closed);
            assert!(codim >= 2, "{} has codimension {codim}", entry.id);
            assert!(
                !wall_ids.contains(&entry.id.to_string()),
                "{} must not be a wall",
                entry.id
            );
        }
    }
    finish(
        "criterion 07 (non-thin stability spaces, n<=4)",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_08_thin_reduction() {
    let start = Instant::now();
    for n in 1..=4 {
        let catalogue = enumerate_indecomposables(n).unwrap();
        let thin_cones: Vec<ConeH> = catalogue
            .iter()
            .filter(|e| e.rep.is_thin())
            .map(|e| stability_cone(&e.rep).unwrap())
            .collect();
        for entry in &catalogue {
            let dm = stability_cone(&entry.rep).unwrap();
            assert!(
                thin_cones.iter().any(|dl| cone_subset(&dm, dl).unwrap()),
                "no thin cone contains D({}) at n = {n}",
                entry.id
            );
        }
    }
    finish(
        "criterion 08 (thin reduction, n<=4)",
        start,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_09_subquot_symmetry() {
    let start = Instant::now();
    for n in 1..=5 {
        for entry in enumerate_indecomposables(n).unwrap() {
            if entry.rep.is_thin() {
                continue;
            }
            let subs = subobject_dimvectors(&entry.rep, SubobjectField::F2).unwrap();
            let quots = quotient_dimvectors(&entry.rep).unwrap();
            assert_eq!(subs, quots, "{} at n = {n}", entry.id);
            assert!(!subs.is_empty());
        }
    }
    finish(
        "criterion 09 (sub/quot symmetry, n<=5)",
        start,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_10_chambers_n1() {
    let start = Instant::now();
    let cs = chambers(1).unwrap();
    assert_eq!(cs.wall_count(), 4, "walls");
    assert_eq!(cs.region_count(), 6, "regions");
    assert_eq!(cs.merge_count(), 0, "merges");
    assert_eq!(cs.chamber_count(), 6, "chambers");
    finish(
        "criterion 10 (chambers at n=1)",
        start,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_11_property_suites() {
    let start = Instant::now();
    for n in 1..=4 {
        let q = build_quiver(n).unwrap();

        // profile monotonicity for alternating strings, with the star pair
        // flipping direction
        for w in enumerate_strings(n).unwrap() {
            if w.is_empty() || !w.is_alternating() {
                continue;
            }
            let p = profile(&w);
            assert!(p.is_strictly_monotone(), "profile of {w} at n = {n}");
            assert!(
                p.is_strictly_increasing() != profile(&w.star()).is_strictly_increasing(),
                "{w} at n = {n}"
            );
        }

        // phi ∘ psi identity on every class
        for c in star_classes(n).unwrap() {
            assert_eq!(phi(&psi(&c, n).unwrap(), &q).unwrap(), c, "n = {n}");
        }

        // relations hold across the catalogue
        for entry in enumerate_indecomposables(n).unwrap() {
            assert!(
                check_relations(&entry.rep).unwrap(),
                "{} at n = {n}",
                entry.id
            );
        }

        // chamber counts are insertion-order invariant (seeded shuffles)
        let base = chambers(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024 + n as u64);
        let shuffles = if n <= 3 { 3 } else { 1 };
        for _ in 0..shuffles {
            let mut hps = interval_hyperplanes(n);
            hps.shuffle(&mut rng);
            let cs = decompose(&hps, walls(n).unwrap()).unwrap();
            assert_eq!(cs.region_count(), base.region_count(), "n = {n}");
            assert_eq!(cs.chamber_count(), base.chamber_count(), "n = {n}");
        }
    }
    finish(
        "criterion 11 (property suites, n<=4)",
        start,
        Duration::from_secs(60),
    );
}
