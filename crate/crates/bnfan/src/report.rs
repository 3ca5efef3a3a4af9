//! Serialisable reports for the command line: JSON (compact, canonical key
//! order, rationals as `"p/q"` strings in lowest terms) and aligned text.
//!
//! Vector order is ascending by vertex by default; `PaperDescending`
//! reverses every printed vector (highest vertex first), the order such
//! tables are usually typeset in. In descending mode with at most four coordinates the rendered
//! linear forms use the letters `x, y, z, w` from the highest vertex down.

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::classes::{profile, psi, StringClass};
use crate::cones::{double_description, ConeH};
use crate::fan::ChamberStructure;
use crate::linalg::Rat;
use crate::rep::{enumerate_indecomposables, ModuleId};
use crate::{Error, Result};

/// Printing order for vectors and linear forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorOrder {
    Ascending,
    PaperDescending,
}

impl VectorOrder {
    pub fn label(&self) -> &'static str {
        match self {
            VectorOrder::Ascending => "ascending",
            VectorOrder::PaperDescending => "paper-descending",
        }
    }

    fn apply<T: Clone>(&self, v: &[T]) -> Vec<T> {
        match self {
            VectorOrder::Ascending => v.to_vec(),
            VectorOrder::PaperDescending => v.iter().rev().cloned().collect(),
        }
    }
}

/// `p/q` in lowest terms, `p` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn int_vec_strings(v: &[BigInt], order: VectorOrder) -> Vec<String> {
    order.apply(v).iter().map(BigInt::to_string).collect()
}

/// Variable names in print order.
fn variable_names(ambient: usize, order: VectorOrder) -> Vec<String> {
    match order {
        VectorOrder::Ascending => (0..ambient).map(|i| format!("v{i}")).collect(),
        VectorOrder::PaperDescending => {
            if ambient <= 4 {
                ["x", "y", "z", "w"][..ambient]
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            } else {
                (0..ambient).rev().map(|i| format!("v{i}")).collect()
            }
        }
    }
}

/// Render `⟨coeffs, vars⟩ rel 0` with the leading printed coefficient made
/// positive (flipping `≤`/`≥` accordingly), which reproduces the familiar
/// `x≥0` shape instead of `-x≤0`.
fn render_form(coeffs: &[BigInt], names: &[String], relation: &str) -> String {
    use num::Signed;
    let mut coeffs: Vec<BigInt> = coeffs.to_vec();
    let mut relation = relation.to_string();
    if let Some(first) = coeffs.iter().find(|c| !num::Zero::is_zero(*c)) {
        if first.is_negative() {
            coeffs = coeffs.iter().map(|c| -c).collect();
            relation = match relation.as_str() {
                "≤" => "≥".into(),
                "≥" => "≤".into(),
                other => other.into(),
            };
        }
    }
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if num::Zero::is_zero(c) {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push(if c.is_negative() { '-' } else { '+' });
        }
        if mag != BigInt::from(1) {
            out.push_str(&mag.to_string());
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out.push_str(&relation);
    out.push('0');
    out
}

/// One cone, in both representations.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConeReport {
    pub dim: usize,
    pub equalities: Vec<String>,
    pub inequalities: Vec<String>,
    pub equality_vectors: Vec<Vec<String>>,
    pub inequality_vectors: Vec<Vec<String>>,
    pub rays: Vec<Vec<String>>,
    pub lineality: Vec<Vec<String>>,
}

pub fn cone_report(cone: &ConeH, order: VectorOrder) -> ConeReport {
    let names = variable_names(cone.ambient_dim(), order);
    let eqs = cone.canonical_equalities();
    let ineqs = cone.canonical_inequalities();
    let v = double_description(cone);
    ConeReport {
        dim: v.dim(),
        equalities: eqs
            .iter()
            .map(|e| render_form(&order.apply(e), &names, "="))
            .collect(),
        inequalities: ineqs
            .iter()
            .map(|b| render_form(&order.apply(b), &names, "≤"))
            .collect(),
        equality_vectors: eqs.iter().map(|e| int_vec_strings(e, order)).collect(),
        inequality_vectors: ineqs.iter().map(|b| int_vec_strings(b, order)).collect(),
        rays: v.rays.iter().map(|r| int_vec_strings(r, order)).collect(),
        lineality: v
            .lineality
            .iter()
            .map(|l| int_vec_strings(l, order))
            .collect(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StringClassRecord {
    pub class: String,
    pub word: String,
    pub length: usize,
    pub profile: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StringsReport {
    pub n: usize,
    pub count: usize,
    pub classes: Vec<StringClassRecord>,
}

pub fn strings_report(n: usize) -> Result<StringsReport> {
    let classes = crate::classes::star_classes(n)?;
    let mut records = Vec::with_capacity(classes.len());
    for c in &classes {
        let w = psi(c, n)?;
        records.push(StringClassRecord {
            class: c.to_string(),
            word: w.to_string(),
            length: w.len(),
            profile: profile(&w).values().to_vec(),
        });
    }
    Ok(StringsReport {
        n,
        count: records.len(),
        classes: records,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModuleRecord {
    pub module: String,
    pub dim_vector: Vec<usize>,
    pub thin: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IndecomposablesReport {
    pub n: usize,
    pub count: usize,
    pub modules: Vec<ModuleRecord>,
}

pub fn indecomposables_report(n: usize, order: VectorOrder) -> Result<IndecomposablesReport> {
    let catalogue = enumerate_indecomposables(n)?;
    let modules: Vec<ModuleRecord> = catalogue
        .iter()
        .map(|e| ModuleRecord {
            module: e.id.to_string(),
            dim_vector: order.apply(e.rep.dims().entries()),
            thin: e.rep.is_thin(),
        })
        .collect();
    Ok(IndecomposablesReport {
        n,
        count: modules.len(),
        modules,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StabilityRecord {
    pub module: String,
    pub dim_vector: Vec<usize>,
    pub cone: ConeReport,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct StabilityReport {
    pub n: usize,
    pub order: String,
    pub modules: Vec<StabilityRecord>,
}

/// Stability cones for the CLI, printed through the explicit combinatorial
/// descriptions (closed form for thin classes, coordinate subspaces for the
/// non-thin modules). These equal the definitional oracle cones; the
/// verification checks compare the two routes.
pub fn stability_report(
    n: usize,
    target: Option<ModuleId>,
    order: VectorOrder,
) -> Result<StabilityReport> {
    let catalogue = enumerate_indecomposables(n)?;
    let selected: Vec<_> = match target {
        Some(id) => {
            let found: Vec<_> = catalogue.into_iter().filter(|e| e.id == id).collect();
            if found.is_empty() {
                return Err(Error::InvalidParameter(format!(
                    "module {id} is not in the catalogue for n = {n}"
                )));
            }
            found
        }
        None => catalogue,
    };
    let mut modules = Vec::with_capacity(selected.len());
    for e in &selected {
        let cone = match e.id {
            ModuleId::Str(StringClass::Cycle) => {
                crate::stability::nonthin_cone(crate::stability::NonThin::Cycle, n)?
            }
            ModuleId::Str(class) => crate::stability::closed_form_cone(&class, n)?,
            ModuleId::Biserial(i) => {
                crate::stability::nonthin_cone(crate::stability::NonThin::Biserial(i), n)?
            }
        };
        modules.push(StabilityRecord {
            module: e.id.to_string(),
            dim_vector: order.apply(e.rep.dims().entries()),
            cone: cone_report(&cone, order),
        });
    }
    Ok(StabilityReport {
        n,
        order: order.label().to_string(),
        modules,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WallRecord {
    pub module: String,
    pub cone: ConeReport,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WallsReport {
    pub n: usize,
    pub count: usize,
    pub walls: Vec<WallRecord>,
}

pub fn walls_report(n: usize, order: VectorOrder) -> Result<WallsReport> {
    let walls = crate::stability::walls(n)?;
    let records: Vec<WallRecord> = walls
        .iter()
        .map(|(id, cone)| WallRecord {
            module: id.to_string(),
            cone: cone_report(cone, order),
        })
        .collect();
    Ok(WallsReport {
        n,
        count: records.len(),
        walls: records,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ChambersReport {
    pub n: usize,
    pub walls: usize,
    pub regions: usize,
    pub chambers: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chamber_regions: Option<Vec<Vec<usize>>>,
}

pub fn chambers_report(cs: &ChamberStructure, compositions: bool) -> ChambersReport {
    ChambersReport {
        n: cs.n,
        walls: cs.wall_count(),
        regions: cs.region_count(),
        chambers: cs.chamber_count(),
        chamber_regions: compositions
            .then(|| cs.chambers.iter().map(|c| c.region_ids.clone()).collect()),
    }
}

/// Ray data export for external plotting.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RaysExport {
    pub n: usize,
    pub items: Vec<RayItem>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RayItem {
    pub module: String,
    pub rays: Vec<Vec<String>>,
    pub lineality: Vec<Vec<String>>,
}

pub fn rays_export(n: usize, cones: &[(ModuleId, ConeH)], order: VectorOrder) -> RaysExport {
    let items = cones
        .iter()
        .map(|(id, cone)| {
            let v = double_description(cone);
            RayItem {
                module: id.to_string(),
                rays: v.rays.iter().map(|r| int_vec_strings(r, order)).collect(),
                lineality: v
                    .lineality
                    .iter()
                    .map(|l| int_vec_strings(l, order))
                    .collect(),
            }
        })
        .collect();
    RaysExport { n, items }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub status: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

pub fn verify_report(n: usize) -> Result<VerifyReport> {
    let outcomes = crate::verify::run_checks(n)?;
    let passed = crate::verify::all_passed(&outcomes);
    Ok(VerifyReport {
        n,
        passed,
        checks: outcomes
            .iter()
            .map(|o| CheckRecord {
                name: o.name.to_string(),
                status: match o.status {
                    crate::verify::CheckStatus::Pass => "pass".into(),
                    crate::verify::CheckStatus::Fail => "fail".into(),
                    crate::verify::CheckStatus::Skip => "skip".into(),
                },
                detail: o.detail.clone(),
            })
            .collect(),
    })
}

// --- text rendering ---

fn vec_text(v: &[String]) -> String {
    format!("({})", v.join(","))
}

fn vec_list_text(vs: &[Vec<String>]) -> String {
    if vs.is_empty() {
        "(none)".into()
    } else {
        vs.iter()
            .map(|v| vec_text(v))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn usize_vec_text(v: &[usize]) -> String {
    format!(
        "({})",
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    )
}

impl StringsReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("string *-classes for n = {}: {}\n", self.n, self.count);
        out.push_str(&format!(
            "{:<12} {:<14} {:<7} profile\n",
            "class", "word", "length"
        ));
        for c in &self.classes {
            out.push_str(&format!(
                "{:<12} {:<14} {:<7} {:?}\n",
                c.class, c.word, c.length, c.profile
            ));
        }
        out
    }
}

impl IndecomposablesReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "indecomposable modules for n = {}: {}\n",
            self.n, self.count
        );
        out.push_str(&format!("{:<12} {:<14} thin\n", "module", "dim vector"));
        for m in &self.modules {
            out.push_str(&format!(
                "{:<12} {:<14} {}\n",
                m.module,
                usize_vec_text(&m.dim_vector),
                if m.thin { "yes" } else { "no" }
            ));
        }
        out
    }
}

impl ConeReport {
    pub fn to_text(&self, indent: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("{indent}dim: {}\n", self.dim));
        out.push_str(&format!(
            "{indent}equalities:   {}\n",
            if self.equalities.is_empty() {
                "(none)".into()
            } else {
                self.equalities.join(", ")
            }
        ));
        out.push_str(&format!(
            "{indent}inequalities: {}\n",
            if self.inequalities.is_empty() {
                "(none)".into()
            } else {
                self.inequalities.join(", ")
            }
        ));
        out.push_str(&format!(
            "{indent}rays:         {}\n",
            vec_list_text(&self.rays)
        ));
        out.push_str(&format!(
            "{indent}lineality:    {}\n",
            vec_list_text(&self.lineality)
        ));
        out
    }
}

impl StabilityReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "stability cones for n = {} ({} order)\n",
            self.n, self.order
        );
        for m in &self.modules {
            out.push_str(&format!(
                "D({})  dim vector {}\n",
                m.module,
                usize_vec_text(&m.dim_vector)
            ));
            out.push_str(&m.cone.to_text("  "));
        }
        out
    }
}

impl WallsReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("walls for n = {}: {}\n", self.n, self.count);
        for w in &self.walls {
            out.push_str(&format!("D({})\n", w.module));
            out.push_str(&w.cone.to_text("  "));
        }
        out
    }
}

impl ChambersReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "n = {}: walls = {}, regions = {}, chambers = {}\n",
            self.n, self.walls, self.regions, self.chambers
        );
        if let Some(comp) = &self.chamber_regions {
            for (id, regions) in comp.iter().enumerate() {
                out.push_str(&format!("chamber {id}: regions {regions:?}\n"));
            }
        }
        out
    }
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "{:<4} {:<28} {}\n",
                c.status.to_uppercase(),
                c.name,
                c.detail
            ));
        }
        out.push_str(&format!(
            "verify n = {}: {}\n",
            self.n,
            if self.passed {
                "all checks passed"
            } else {
                "FAILED"
            }
        ));
        out
    }
}
