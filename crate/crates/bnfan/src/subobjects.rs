//! Dimension vectors of subobjects and quotients of `B(n)`-modules.
//!
//! Two routes are provided on purpose: a combinatorial closed form for thin
//! interval modules ([`thin_subobject_supports`]) and an exhaustive oracle
//! that enumerates every subrepresentation over `F₂` ([`subobject_dimvectors`]).
//! Every vertex dimension of a `B(n)`-indecomposable is at most 2, so the
//! oracle walks at most 5 subspaces per vertex; the resulting set of
//! dimension vectors is field independent for these 0/1-matrix modules, which
//! the tests validate against rational sampling rather than assume.

use std::collections::BTreeSet;
use std::fmt;

use num::{ToPrimitive, Zero};

use crate::classes::{Eta, StringClass};
use crate::linalg::{rank, Rat};
use crate::quiver::Arrow;
use crate::rep::{DimVector, Representation};
use crate::{Error, Result};

/// A support interval `[lo, hi]` of a thin subobject or quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportInterval {
    pub lo: usize,
    pub hi: usize,
}

impl SupportInterval {
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(lo <= hi);
        SupportInterval { lo, hi }
    }

    pub fn indicator(&self, len: usize) -> DimVector {
        DimVector::interval_indicator(self.lo, self.hi, len)
    }
}

impl fmt::Display for SupportInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// Field selector for the exhaustive oracle.
#[derive(Clone, Copy, Debug)]
pub enum SubobjectField {
    /// Exhaustive enumeration of subrepresentations over `F₂` (default).
    F2,
    /// Randomised rational subrepresentation generation; returns the subset
    /// of dimension vectors found within `trials` attempts.
    RationalSampled { seed: u64, trials: usize },
}

/// Subobject supports of the thin interval module `M(a, b, η)`.
///
/// For `η = −1` these are the intervals `[a′, b′] ⊆ [a, b]` with `a′ ≡₂ a`
/// and (`b′ = b` or `b′ ≡₂ a`), the full interval included. For `η = +1` the
/// ends swap role (the walk's sources and sinks trade places): `a′ = a` or
/// `a′ ≡₂ a + 1`, and `b′ = b` or `b′ ≡₂ a + 1`. Equivalently, the `η = −1`
/// family lists the quotient supports of `M(a, b, +1)` and vice versa.
pub fn thin_subobject_supports(c: &StringClass) -> Result<BTreeSet<SupportInterval>> {
    let StringClass::Interval { a, b, eta } = c else {
        return Err(Error::InvalidParameter(format!(
            "thin subobject supports are defined for interval classes, got {c}"
        )));
    };
    let (a, b) = (*a, *b);
    let mut out = BTreeSet::new();
    for lo in a..=b {
        for hi in lo..=b {
            let keep = match eta {
                Eta::Minus => lo % 2 == a % 2 && (hi == b || hi % 2 == a % 2),
                Eta::Plus => {
                    (lo == a || lo % 2 == (a + 1) % 2) && (hi == b || hi % 2 == (a + 1) % 2)
                }
            };
            if keep {
                out.insert(SupportInterval::new(lo, hi));
            }
        }
    }
    Ok(out)
}

/// Quotient supports of a thin interval module: the subobject supports of the
/// class with the opposite sign.
pub fn thin_quotient_supports(c: &StringClass) -> Result<BTreeSet<SupportInterval>> {
    let StringClass::Interval { a, b, eta } = c else {
        return Err(Error::InvalidParameter(format!(
            "thin quotient supports are defined for interval classes, got {c}"
        )));
    };
    thin_subobject_supports(&StringClass::interval(*a, *b, eta.flip()))
}

// --- exhaustive F2 oracle ---

/// All subspaces of `F₂^d` for small `d`, each as the bitmask set of its
/// element vectors (element = coordinate bitmask).
fn f2_subspaces(d: usize) -> Vec<Vec<u8>> {
    assert!(d <= 3);
    let size = 1u16 << d;
    let mut out = Vec::new();
    // subsets of the nonzero vectors, always containing 0
    for mask in 0..(1u32 << (size - 1)) {
        let mut elems = vec![0u8];
        for v in 1..size {
            if mask >> (v - 1) & 1 == 1 {
                elems.push(v as u8);
            }
        }
        let closed = elems
            .iter()
            .all(|&x| elems.iter().all(|&y| elems.contains(&(x ^ y))));
        if closed {
            out.push(elems);
        }
    }
    out
}

fn subspace_dim(elems: &[u8]) -> usize {
    elems.len().trailing_zeros() as usize
}

/// Arrow matrix reduced mod 2, acting on coordinate bitmasks.
fn f2_matrix(m: &crate::linalg::Mat) -> Vec<Vec<u8>> {
    use num::{BigInt, Integer, One};
    let two = BigInt::from(2);
    let mut rows = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for c in 0..m.cols() {
            let x = m.at(r, c);
            assert!(x.denom().is_one(), "oracle expects integer entries");
            row.push(x.numer().mod_floor(&two).to_u8().unwrap());
        }
        rows.push(row);
    }
    rows
}

fn f2_apply(rows: &[Vec<u8>], v: u8) -> u8 {
    let mut out = 0u8;
    for (r, row) in rows.iter().enumerate() {
        let mut bit = 0u8;
        for (c, &e) in row.iter().enumerate() {
            bit ^= e & (v >> c & 1);
        }
        out |= bit << r;
    }
    out
}

/// Dimension vectors of the nonzero proper subrepresentations of `rep`,
/// computed by the selected route. The `F2` route enumerates every tuple of
/// subspaces closed under all arrow maps; it refuses modules with a vertex
/// dimension above 2.
pub fn subobject_dimvectors(
    rep: &Representation,
    field: SubobjectField,
) -> Result<BTreeSet<DimVector>> {
    match field {
        SubobjectField::F2 => subobject_dimvectors_f2(rep),
        SubobjectField::RationalSampled { seed, trials } => {
            Ok(sampled_subobject_dimvectors(rep, seed, trials))
        }
    }
}

fn subobject_dimvectors_f2(rep: &Representation) -> Result<BTreeSet<DimVector>> {
    let dims = rep.dims().entries();
    if dims.iter().any(|&d| d > 2) {
        return Err(Error::Unsupported(format!(
            "subobject oracle is restricted to vertex dimensions <= 2, got {}",
            rep.dims()
        )));
    }
    let n = rep.n();
    let per_vertex: Vec<Vec<Vec<u8>>> = dims.iter().map(|&d| f2_subspaces(d)).collect();
    let arrows: Vec<(Arrow, Vec<Vec<u8>>)> =
        rep.maps().iter().map(|(a, m)| (*a, f2_matrix(m))).collect();

    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; n + 1];
    'outer: loop {
        let tuple: Vec<&Vec<u8>> = (0..=n).map(|v| &per_vertex[v][choice[v]]).collect();
        let closed = arrows.iter().all(|(arrow, mat)| {
            tuple[arrow.source()]
                .iter()
                .all(|&v| tuple[arrow.target()].contains(&f2_apply(mat, v)))
        });
        if closed {
            let dv = DimVector::new(tuple.iter().map(|s| subspace_dim(s)).collect());
            if !dv.is_zero() && dv != *rep.dims() {
                out.insert(dv);
            }
        }
        // odometer over subspace choices
        for v in 0..=n {
            choice[v] += 1;
            if choice[v] < per_vertex[v].len() {
                continue 'outer;
            }
            choice[v] = 0;
        }
        break;
    }
    Ok(out)
}

/// Randomised rational route: generate the subrepresentation spanned by a few
/// random vectors (closing under all arrow maps) and record its dimension
/// vector. A deterministic linear congruential sequence keeps this
/// reproducible without extra dependencies.
fn sampled_subobject_dimvectors(
    rep: &Representation,
    seed: u64,
    trials: usize,
) -> BTreeSet<DimVector> {
    let mut state = seed
        .wrapping_mul(2862933555777941757)
        .wrapping_add(3037000493);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let n = rep.n();
    let dims = rep.dims().entries().to_vec();
    let mut out = BTreeSet::new();
    for _ in 0..trials {
        // seed vectors: each vertex contributes one random vector with
        // probability 1/2 (entries in -2..=2)
        let mut gens: Vec<Vec<Vec<Rat>>> = vec![Vec::new(); n + 1];
        for v in 0..=n {
            if dims[v] == 0 || next() % 2 == 0 {
                continue;
            }
            let vec: Vec<Rat> = (0..dims[v])
                .map(|_| crate::linalg::rat((next() % 5) as i64 - 2))
                .collect();
            if vec.iter().any(|x| !x.is_zero()) {
                gens[v].push(vec);
            }
        }
        // close under arrow maps until the per-vertex spans stabilise
        loop {
            let mut grew = false;
            for (arrow, mat) in rep.maps() {
                let images: Vec<Vec<Rat>> = gens[arrow.source()]
                    .iter()
                    .map(|g| mat.apply(g).expect("shapes validated"))
                    .filter(|img| img.iter().any(|x| !x.is_zero()))
                    .collect();
                for img in images {
                    let tgt = arrow.target();
                    let before = rank(&gens[tgt]);
                    gens[tgt].push(img);
                    if rank(&gens[tgt]) > before {
                        grew = true;
                    } else {
                        gens[tgt].pop();
                    }
                }
            }
            if !grew {
                break;
            }
        }
        let dv = DimVector::new((0..=n).map(|v| rank(&gens[v])).collect());
        if !dv.is_zero() && dv != *rep.dims() {
            out.insert(dv);
        }
    }
    out
}

/// Dimension vectors of the nonzero proper quotients: the complement
/// `dim(rep) − d` of each subobject dimension vector (every quotient is
/// `M/N`, and `N` proper nonzero iff `M/N` proper nonzero).
pub fn quotient_dimvectors(rep: &Representation) -> Result<BTreeSet<DimVector>> {
    let total = rep.dims();
    let subs = subobject_dimvectors(rep, SubobjectField::F2)?;
    Ok(subs
        .iter()
        .map(|d| {
            total
                .minus(d)
                .expect("subobject dims bounded by module dims")
        })
        .collect())
}
