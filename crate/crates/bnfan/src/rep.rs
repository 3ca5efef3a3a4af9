//! Concrete matrix representations of `B(n)`: string modules `M(w)`, the
//! projective-injective biserial modules `R(i)`, relation checking, and the
//! full indecomposable catalogue.
//!
//! Dimension vectors and all per-vertex data are stored ascending by vertex
//! (index `i` is vertex `i`); command-line output can reverse the order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::One;

use crate::classes::{profile, psi, star_classes, StringClass};
use crate::linalg::{Mat, Rat};
use crate::quiver::{build_quiver, is_string, Arrow, QuiverPresentation, Walk};
use crate::{Error, Result};

/// Per-vertex dimensions, ascending by vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DimVector(Vec<usize>);

impl DimVector {
    pub fn new(entries: Vec<usize>) -> Self {
        DimVector(entries)
    }

    /// Indicator vector of `[lo, hi]` in ambient length `len`.
    pub fn interval_indicator(lo: usize, hi: usize, len: usize) -> Self {
        DimVector((0..len).map(|i| usize::from(i >= lo && i <= hi)).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] > 0).collect()
    }

    /// `Some((lo, hi))` when the vector is exactly the indicator of `[lo, hi]`.
    pub fn as_interval_indicator(&self) -> Option<(usize, usize)> {
        let sup = self.support();
        let (&lo, &hi) = (sup.first()?, sup.last()?);
        if sup.len() == hi - lo + 1 && self.0.iter().all(|&d| d <= 1) {
            Some((lo, hi))
        } else {
            None
        }
    }

    pub fn minus(&self, other: &DimVector) -> Option<DimVector> {
        if self.len() != other.len() {
            return None;
        }
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.0.iter().zip(other.entries()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(DimVector(out))
    }

    pub fn to_rats(&self) -> Vec<Rat> {
        self.0
            .iter()
            .map(|&d| crate::linalg::rat(d as i64))
            .collect()
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A `(Q(n), I(n))`-representation: one rational matrix per arrow, of shape
/// `dims[t(γ)] × dims[s(γ)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    dims: DimVector,
    maps: BTreeMap<Arrow, Mat>,
}

impl Representation {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim_vector(&self) -> DimVector {
        self.dims.clone()
    }

    pub fn map(&self, arrow: Arrow) -> &Mat {
        &self.maps[&arrow]
    }

    pub fn maps(&self) -> &BTreeMap<Arrow, Mat> {
        &self.maps
    }

    /// All entries of the dimension vector at most 1.
    pub fn is_thin(&self) -> bool {
        self.dims.entries().iter().all(|&d| d <= 1)
    }

    /// Replace one arrow map (used to build counterexamples in tests).
    pub fn with_map(&self, arrow: Arrow, mat: Mat) -> Representation {
        let mut maps = self.maps.clone();
        maps.insert(arrow, mat);
        Representation {
            n: self.n,
            dims: self.dims.clone(),
            maps,
        }
    }
}

fn zero_maps(n: usize, dims: &DimVector) -> BTreeMap<Arrow, Mat> {
    let mut maps = BTreeMap::new();
    for i in 0..n {
        for arrow in [Arrow::alpha(i), Arrow::beta(i)] {
            maps.insert(
                arrow,
                Mat::zero(
                    dims.entries()[arrow.target()],
                    dims.entries()[arrow.source()],
                ),
            );
        }
    }
    maps
}

/// The string representation `M(w)`.
///
/// `dims[j] = #f_w⁻¹(j)`; within a vertex the copies are ordered by first
/// appearance in the profile. Every letter contributes one identity entry
/// along its underlying honest arrow.
pub fn string_module(w: &Walk, q: &QuiverPresentation) -> Result<Representation> {
    if !is_string(w, q) {
        return Err(Error::NotAString(w.to_string()));
    }
    let n = q.n();
    let prof = profile(w);
    let values = prof.values();
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (pos, &vertex) in values.iter().enumerate() {
        fibers[vertex].push(pos);
    }
    let dims = DimVector::new(fibers.iter().map(Vec::len).collect());
    let copy_index = |vertex: usize, pos: usize| -> usize {
        fibers[vertex]
            .iter()
            .position(|&p| p == pos)
            .expect("profile position")
    };

    let mut maps = zero_maps(n, &dims);
    let m = w.len();
    for (k, letter) in w.letters().iter().enumerate() {
        // letters[k] = γ_{k+1} joins profile positions m−k−1 → m−k
        let p_src = m - k - 1;
        let p_tgt = m - k;
        let arrow = letter.honest_arrow();
        let (arrow_src_pos, arrow_tgt_pos) = if letter.inverted {
            (p_tgt, p_src)
        } else {
            (p_src, p_tgt)
        };
        let row = copy_index(arrow.target(), arrow_tgt_pos);
        let col = copy_index(arrow.source(), arrow_src_pos);
        *maps.get_mut(&arrow).unwrap().at_mut(row, col) = Rat::one();
    }
    Ok(Representation { n, dims, maps })
}

/// The non-uniserial projective-injective module `R(i)` for `n ≥ 2`,
/// `i ∈ [0, n−2]`: dimension 1 at `i` and `i+2`, dimension 2 at `i+1`, maps
/// `[1 0]` for `α_i, β_{i+1}` and `[0; 1]` for `β_i, α_{i+1}`.
pub fn biserial_module(i: usize, n: usize) -> Result<Representation> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "R(i) requires n >= 2, got n = {n}"
        )));
    }
    if i > n - 2 {
        return Err(Error::InvalidParameter(format!(
            "R({i}) requires i in [0, {}]",
            n - 2
        )));
    }
    let mut entries = vec![0usize; n + 1];
    entries[i] = 1;
    entries[i + 1] = 2;
    entries[i + 2] = 1;
    let dims = DimVector::new(entries);
    let mut maps = zero_maps(n, &dims);
    let row = Mat::from_int_rows(&[&[1, 0]]);
    let col = Mat::from_int_rows(&[&[0], &[1]]);
    maps.insert(Arrow::alpha(i), row.clone());
    maps.insert(Arrow::beta(i + 1), row);
    maps.insert(Arrow::beta(i), col.clone());
    maps.insert(Arrow::alpha(i + 1), col);
    Ok(Representation { n, dims, maps })
}

/// Check all relations of `I(n)` as exact matrix identities: the binomials
/// `β_i α_i = α_{i+1} β_{i+1}`, the monomials `α_i α_{i+1} = 0`,
/// `β_{i+1} β_i = 0`, and `α_0 β_0 = 0`. Mis-shaped matrices are an error,
/// not `false`.
pub fn check_relations(rep: &Representation) -> Result<bool> {
    let q = build_quiver(rep.n)?;
    let dims = rep.dims.entries();
    for arrow in q.arrows() {
        let m = rep.map(*arrow);
        if (m.rows(), m.cols()) != (dims[arrow.target()], dims[arrow.source()]) {
            return Err(Error::ShapeMismatch(format!(
                "map for {arrow} has shape {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                dims[arrow.target()],
                dims[arrow.source()]
            )));
        }
    }
    for [first, second] in q.monomial_generators() {
        if !rep.map(*first).mul(rep.map(*second))?.is_zero() {
            return Ok(false);
        }
    }
    for (lhs, rhs) in q.commuting_pairs() {
        let left = rep.map(lhs[0]).mul(rep.map(lhs[1]))?;
        let right = rep.map(rhs[0]).mul(rep.map(rhs[1]))?;
        if left != right {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Identifier of an indecomposable in the catalogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleId {
    /// String module, by its `*`-class.
    Str(StringClass),
    /// Biserial module `R(i)`.
    Biserial(usize),
}

impl ModuleId {
    pub fn is_thin_id(&self) -> bool {
        match self {
            ModuleId::Str(c) => c.is_thin_class(),
            ModuleId::Biserial(_) => false,
        }
    }
}

impl fmt::Display for ModuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleId::Str(StringClass::Trivial(i)) => write!(f, "S{i}"),
            ModuleId::Str(StringClass::Cycle) => write!(f, "M(cycle)"),
            ModuleId::Str(StringClass::Interval { a, b, eta }) => write!(f, "M({a},{b},{eta})"),
            ModuleId::Biserial(i) => write!(f, "R{i}"),
        }
    }
}

impl FromStr for ModuleId {
    type Err = Error;

    /// Accepts `S<i>`, `R<i>`, `cycle`, `a,b,eta`, or the `M(...)` forms.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('R').or_else(|| s.strip_prefix('r')) {
            if let Ok(i) = rest.parse::<usize>() {
                return Ok(ModuleId::Biserial(i));
            }
        }
        let inner = s
            .strip_prefix("M(")
            .or_else(|| s.strip_prefix("m("))
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        Ok(ModuleId::Str(inner.parse::<StringClass>()?))
    }
}

/// One isomorphism class of the catalogue.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub id: ModuleId,
    pub rep: Representation,
}

/// Representation with the given dimensions and all-zero maps; only for
/// exercising guards in tests.
#[cfg(test)]
pub(crate) fn synthetic_zero_rep(dims: Vec<usize>) -> Representation {
    let n = dims.len() - 1;
    let dims = DimVector::new(dims);
    let maps = zero_maps(n, &dims);
    Representation { n, dims, maps }
}

/// One representative per isomorphism class of indecomposable `B(n)`-modules:
/// a string module for each `*`-class plus `R(0), …, R(n−2)`. The catalogue
/// has `n + (n+1)²` entries.
pub fn enumerate_indecomposables(n: usize) -> Result<Vec<CatalogueEntry>> {
    let q = build_quiver(n)?;
    let mut out = Vec::new();
    for class in star_classes(n)? {
        let rep = string_module(&psi(&class, n)?, &q)?;
        out.push(CatalogueEntry {
            id: ModuleId::Str(class),
            rep,
        });
    }
    if n >= 2 {
        for i in 0..=n - 2 {
            out.push(CatalogueEntry {
                id: ModuleId::Biserial(i),
                rep: biserial_module(i, n)?,
            });
        }
    }
    Ok(out)
}
