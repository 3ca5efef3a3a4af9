//! King semistability for `B(n)`-modules: the stability cone `D(M)` of every
//! indecomposable, closed-form descriptions for thin and non-thin modules,
//! and the wall list.
//!
//! A module `M` is `v`-semistable when `⟨v, dim M⟩ = 0` and
//! `⟨v, dim N⟩ ≤ 0` for every nonzero proper subobject `N`. Two independent
//! routes compute `D(M)`: [`stability_cone`] goes through the exhaustive
//! subobject oracle, while [`closed_form_cone`] and [`nonthin_cone`] use the
//! combinatorial descriptions; the test suite checks they agree.

use num::Zero;

use crate::classes::{Eta, StringClass};
use crate::cones::{cone_dim, ConeH};
use crate::linalg::{dot, Rat};
use crate::rep::{enumerate_indecomposables, DimVector, ModuleId, Representation};
use crate::subobjects::{subobject_dimvectors, thin_subobject_supports, SubobjectField};
use crate::{Error, Result};

/// A stability parameter `v ∈ ℝ^{n+1}`, indexed ascending by vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVector(pub Vec<Rat>);

impl StabilityVector {
    pub fn values(&self) -> &[Rat] {
        &self.0
    }
}

/// Direct semistability test from the definition.
pub fn is_semistable(rep: &Representation, v: &[Rat]) -> Result<bool> {
    if v.len() != rep.n() + 1 {
        return Err(Error::AmbientMismatch {
            expected: rep.n() + 1,
            got: v.len(),
        });
    }
    if !dot(v, &rep.dims().to_rats()).is_zero() {
        return Ok(false);
    }
    for d in subobject_dimvectors(rep, SubobjectField::F2)? {
        if dot(v, &d.to_rats()) > Rat::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `D(M)` from the definition: the equality `⟨v, dim M⟩ = 0` plus one
/// inequality `⟨v, d⟩ ≤ 0` per subobject dimension vector from the oracle.
pub fn stability_cone(rep: &Representation) -> Result<ConeH> {
    let ambient = rep.n() + 1;
    let mut cone = ConeH::new(ambient);
    cone.push_equality(rep.dims().to_rats())?;
    for d in subobject_dimvectors(rep, SubobjectField::F2)? {
        cone.push_inequality(d.to_rats())?;
    }
    Ok(cone)
}

fn interval_sum_vector(lo: usize, hi: usize, len: usize) -> Vec<Rat> {
    DimVector::interval_indicator(lo, hi, len).to_rats()
}

/// Closed-form `D(M)` for thin classes.
///
/// For `S_i` this is the hyperplane `v_i = 0`. For `(a, b, η)` the equality
/// is `v_a + … + v_b = 0` and there is one inequality per proper subobject
/// support interval (`≤ 0` for `η = −1`, and the reversed `≥ 0` family for
/// `η = +1`, whose subobject supports are the `η = −1` quotient supports).
/// The cycle class is not covered; use [`nonthin_cone`].
pub fn closed_form_cone(c: &StringClass, n: usize) -> Result<ConeH> {
    let ambient = n + 1;
    match c {
        StringClass::Trivial(i) => {
            if *i > n {
                return Err(Error::InvalidParameter(format!("vertex {i} > n = {n}")));
            }
            let mut cone = ConeH::new(ambient);
            cone.push_equality(interval_sum_vector(*i, *i, ambient))?;
            Ok(cone)
        }
        StringClass::Cycle => Err(Error::InvalidParameter(
            "the cycle class is not thin; use nonthin_cone".into(),
        )),
        StringClass::Interval { a, b, eta } => {
            if *a >= *b || *b > n {
                return Err(Error::InvalidParameter(format!(
                    "interval class needs 0 <= a < b <= n, got ({a},{b}) with n = {n}"
                )));
            }
            let mut cone = ConeH::new(ambient);
            cone.push_equality(interval_sum_vector(*a, *b, ambient))?;
            // ≤ for η = −1 on the subobject family; η = +1 reverses signs,
            // which is the same as using its quotient supports
            let family = thin_subobject_supports(&StringClass::interval(*a, *b, Eta::Minus))?;
            for s in family {
                if (s.lo, s.hi) == (*a, *b) {
                    continue; // the full interval is the equality
                }
                let vec = interval_sum_vector(s.lo, s.hi, ambient);
                match eta {
                    Eta::Minus => cone.push_inequality(vec)?,
                    Eta::Plus => cone.push_inequality(vec.iter().map(|x| -x).collect())?,
                }
            }
            Ok(cone)
        }
    }
}

/// Non-thin stability spaces: pure linear subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NonThin {
    /// The cycle string module `M(β_{n−1} α_{n−1})`.
    Cycle,
    /// The biserial module `R(i)`.
    Biserial(usize),
}

/// `D(M(β_{n−1} α_{n−1})) = {v_n = v_{n−1} = 0}` and
/// `D(R(i)) = {v_i = v_{i+1} = v_{i+2} = 0}`: codimension 2 and 3, never
/// walls.
pub fn nonthin_cone(m: NonThin, n: usize) -> Result<ConeH> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "nonthin_cone requires n >= 1".into(),
        ));
    }
    let ambient = n + 1;
    let mut cone = ConeH::new(ambient);
    match m {
        NonThin::Cycle => {
            cone.push_equality(interval_sum_vector(n, n, ambient))?;
            cone.push_equality(interval_sum_vector(n - 1, n - 1, ambient))?;
        }
        NonThin::Biserial(i) => {
            if n < 2 || i > n - 2 {
                return Err(Error::InvalidParameter(format!(
                    "R({i}) requires n >= 2 and i in [0, n-2], got n = {n}"
                )));
            }
            for j in i..=i + 2 {
                cone.push_equality(interval_sum_vector(j, j, ambient))?;
            }
        }
    }
    Ok(cone)
}

/// The walls: stability cones of the thin indecomposables whose cone
/// dimension is exactly `n` (codimension 1). Cones are computed from the
/// subobject oracle, the definitional route.
pub fn walls(n: usize) -> Result<Vec<(ModuleId, ConeH)>> {
    let mut out = Vec::new();
    for entry in enumerate_indecomposables(n)? {
        if !entry.rep.is_thin() {
            continue;
        }
        let cone = stability_cone(&entry.rep)?;
        if cone_dim(&cone) == n {
            out.push((entry.id, cone));
        }
    }
    Ok(out)
}
