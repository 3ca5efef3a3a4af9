//! Wall-and-chamber decomposition of `ℝ^{n+1}`.
//!
//! The chambers are the open connected components of the complement of the
//! closed union of all stability spaces. Walls are cones, not hyperplanes,
//! so the space is first refined by the central arrangement of all
//! interval-sum hyperplanes (every wall is a union of closed faces of that
//! arrangement); the full-dimensional regions are then merged across every
//! shared facet whose relative interior lies in no wall, which turns the
//! topology question into graph connectivity over convex pieces.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::cones::{contains_point, ConeH, ConeV, DdState};
use crate::linalg::{dot, ints_to_rats, rat, Rat};
use crate::rep::{DimVector, ModuleId};
use crate::{Error, Result};

/// Full-dimensional region of the hyperplane arrangement.
#[derive(Clone, Debug)]
pub struct Region {
    /// One entry per hyperplane: `+1` or `−1`, the strict side the region
    /// lies on.
    pub sign_vector: Vec<i8>,
    /// Exact rational interior point.
    pub witness: Vec<Rat>,
    /// Closure of the region, one oriented inequality per hyperplane.
    pub cone: ConeH,
}

/// Shared codimension-1 face of two adjacent regions.
#[derive(Clone, Debug)]
pub struct Facet {
    pub regions: (usize, usize),
    /// Index of the unique hyperplane containing the facet.
    pub hyperplane: usize,
    /// Rational relative-interior point, off every other hyperplane.
    pub witness: Vec<Rat>,
    /// Whether the witness lies in some wall cone.
    pub on_wall: bool,
}

/// Maximal union of regions not separated by walls.
#[derive(Clone, Debug)]
pub struct Chamber {
    pub id: usize,
    pub region_ids: Vec<usize>,
}

/// The complete decomposition for one `n`.
#[derive(Clone, Debug)]
pub struct ChamberStructure {
    pub n: usize,
    pub hyperplanes: Vec<Vec<Rat>>,
    pub regions: Vec<Region>,
    pub facets: Vec<Facet>,
    pub chambers: Vec<Chamber>,
    pub walls: Vec<(ModuleId, ConeH)>,
}

impl ChamberStructure {
    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn chamber_count(&self) -> usize {
        self.chambers.len()
    }

    pub fn wall_count(&self) -> usize {
        self.walls.len()
    }

    pub fn merge_count(&self) -> usize {
        self.facets.iter().filter(|f| !f.on_wall).count()
    }
}

/// Normal vectors of the interval-sum hyperplanes
/// `v_a + v_{a+1} + … + v_b = 0` for `0 ≤ a ≤ b ≤ n`; there are
/// `(n+1)(n+2)/2` of them and every wall's linear span is one of them.
pub fn interval_hyperplanes(n: usize) -> Vec<Vec<Rat>> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in a..=n {
            out.push(DimVector::interval_indicator(a, b, n + 1).to_rats());
        }
    }
    out
}

struct RegionBuilder {
    signs: Vec<i8>,
    dd: DdState,
}

fn build_regions(hyperplanes: &[Vec<Rat>]) -> Result<Vec<RegionBuilder>> {
    let Some(first) = hyperplanes.first() else {
        return Err(Error::InvalidParameter(
            "arrangement needs at least one hyperplane".into(),
        ));
    };
    let ambient = first.len();
    for h in hyperplanes {
        if h.len() != ambient {
            return Err(Error::AmbientMismatch {
                expected: ambient,
                got: h.len(),
            });
        }
        if h.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidParameter("zero normal vector".into()));
        }
    }
    let mut builders = vec![RegionBuilder {
        signs: Vec::new(),
        dd: DdState::new(ambient),
    }];
    for h in hyperplanes {
        let mut next = Vec::with_capacity(builders.len() * 2);
        for mut builder in builders {
            let (lin_vals, ray_vals) = builder.dd.generator_values(h);
            let lin_hit = lin_vals.iter().any(|x| !x.is_zero());
            let has_pos = ray_vals.iter().any(|x| *x > Rat::zero());
            let has_neg = ray_vals.iter().any(|x| *x < Rat::zero());
            if lin_hit || (has_pos && has_neg) {
                let mut plus = RegionBuilder {
                    signs: builder.signs.clone(),
                    dd: builder.dd.clone(),
                };
                let neg_h: Vec<Rat> = h.iter().map(|x| -x).collect();
                plus.dd.insert(&neg_h, false);
                plus.signs.push(1);
                builder.dd.insert(h, false);
                builder.signs.push(-1);
                next.push(builder);
                next.push(plus);
            } else if has_pos {
                let neg_h: Vec<Rat> = h.iter().map(|x| -x).collect();
                builder.dd.insert(&neg_h, false);
                builder.signs.push(1);
                next.push(builder);
            } else if has_neg {
                builder.dd.insert(h, false);
                builder.signs.push(-1);
                next.push(builder);
            } else {
                return Err(Error::InvalidParameter(
                    "degenerate region contained in a hyperplane".into(),
                ));
            }
        }
        builders = next;
    }
    Ok(builders)
}

fn region_cone(signs: &[i8], hyperplanes: &[Vec<Rat>], ambient: usize) -> ConeH {
    let mut cone = ConeH::new(ambient);
    for (s, h) in signs.iter().zip(hyperplanes) {
        let oriented: Vec<Rat> = if *s > 0 {
            h.iter().map(|x| -x).collect()
        } else {
            h.clone()
        };
        cone.push_inequality(oriented).expect("ambient checked");
    }
    cone
}

/// All full-dimensional regions of a central arrangement, each with an exact
/// interior witness, by incremental insertion: each new hyperplane splits
/// exactly the regions it passes through.
pub fn arrangement_regions(hyperplanes: &[Vec<Rat>]) -> Result<Vec<Region>> {
    let ambient = hyperplanes.first().map_or(0, Vec::len);
    let builders = build_regions(hyperplanes)?;
    Ok(builders
        .into_iter()
        .map(|b| Region {
            cone: region_cone(&b.signs, hyperplanes, ambient),
            witness: b.dd.interior_witness(),
            sign_vector: b.signs,
        })
        .collect())
}

/// Relative-interior point of a cone given by its V-representation, lying on
/// no hyperplane other than `must_be_on` (or on exactly one when `None`).
///
/// The point is `Σ sᶦ · gᵢ` over all generators (rays first, positive
/// coefficients keep it in the relative interior) for a deterministic
/// sequence of integers `s`. For any hyperplane not containing the whole
/// cone the value is a nonzero polynomial in `s`, so only finitely many `s`
/// fail and the search terminates.
fn generic_witness(
    v: &ConeV,
    hyperplanes: &[Vec<Rat>],
    must_be_on: Option<usize>,
) -> Option<Vec<Rat>> {
    let gens: Vec<Vec<Rat>> = v
        .rays
        .iter()
        .chain(v.lineality.iter())
        .map(|g| ints_to_rats(g))
        .collect();
    if gens.is_empty() {
        return None;
    }
    for s in 1..=512i64 {
        let s = rat(s);
        let mut w = vec![Rat::zero(); v.ambient];
        let mut coeff = Rat::one();
        for g in &gens {
            for (acc, x) in w.iter_mut().zip(g) {
                *acc += &coeff * x;
            }
            coeff *= &s;
        }
        if w.iter().all(|x| x.is_zero()) {
            continue;
        }
        let on: Vec<usize> = hyperplanes
            .iter()
            .enumerate()
            .filter(|(_, h)| dot(h, &w).is_zero())
            .map(|(t, _)| t)
            .collect();
        let ok = match must_be_on {
            Some(j) => on == [j],
            None => on.len() == 1,
        };
        if ok {
            return Some(w);
        }
    }
    None
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(k: usize) -> Self {
        UnionFind((0..k).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Decomposition for an arbitrary hyperplane list and wall set. Regions are
/// merged across a facet exactly when the facet's relative-interior witness
/// lies in no wall cone.
pub fn decompose(
    hyperplanes: &[Vec<Rat>],
    walls: Vec<(ModuleId, ConeH)>,
) -> Result<ChamberStructure> {
    let ambient = hyperplanes
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::InvalidParameter("empty hyperplane list".into()))?;
    let builders = build_regions(hyperplanes)?;

    // candidate adjacent pairs: same signs everywhere except one position
    let mut facets = Vec::new();
    let mut uf = UnionFind::new(builders.len());
    for j in 0..hyperplanes.len() {
        let mut buckets: BTreeMap<Vec<i8>, Vec<usize>> = BTreeMap::new();
        for (idx, b) in builders.iter().enumerate() {
            let mut masked = b.signs.clone();
            masked[j] = 0;
            buckets.entry(masked).or_default().push(idx);
        }
        for pair in buckets.values().filter(|p| p.len() == 2) {
            let (i1, i2) = (pair[0], pair[1]);
            // the shared face is region i1 ∩ {h_j = 0} since all other
            // oriented constraints coincide
            let mut face = builders[i1].dd.clone();
            face.insert(&hyperplanes[j], true);
            let v = face.to_cone_v();
            if v.dim() != ambient - 1 {
                continue;
            }
            let witness = generic_witness(&v, hyperplanes, Some(j))
                .ok_or_else(|| Error::InvalidParameter("no facet witness found".into()))?;
            let mut on_wall = false;
            for (_, cone) in &walls {
                if contains_point(cone, &witness)? {
                    on_wall = true;
                    break;
                }
            }
            if !on_wall {
                uf.union(i1, i2);
            }
            facets.push(Facet {
                regions: (i1, i2),
                hyperplane: j,
                witness,
                on_wall,
            });
        }
    }

    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for idx in 0..builders.len() {
        by_root.entry(uf.find(idx)).or_default().push(idx);
    }
    let chambers: Vec<Chamber> = by_root
        .into_values()
        .enumerate()
        .map(|(id, region_ids)| Chamber { id, region_ids })
        .collect();

    let regions: Vec<Region> = builders
        .into_iter()
        .map(|b| Region {
            cone: region_cone(&b.signs, hyperplanes, ambient),
            witness: b.dd.interior_witness(),
            sign_vector: b.signs,
        })
        .collect();

    Ok(ChamberStructure {
        n: ambient - 1,
        hyperplanes: hyperplanes.to_vec(),
        regions,
        facets,
        chambers,
        walls,
    })
}

/// Wall-and-chamber structure of `B(n)` with a caller-supplied wall list.
pub fn chambers_with_walls(n: usize, walls: Vec<(ModuleId, ConeH)>) -> Result<ChamberStructure> {
    if n < 1 {
        return Err(Error::InvalidParameter("chambers requires n >= 1".into()));
    }
    decompose(&interval_hyperplanes(n), walls)
}

/// Wall-and-chamber structure of `B(n)`: interval-hyperplane regions merged
/// across every facet not contained in a wall.
pub fn chambers(n: usize) -> Result<ChamberStructure> {
    chambers_with_walls(n, crate::stability::walls(n)?)
}

/// Relative-interior witness of a wall lying on exactly one interval
/// hyperplane (the wall's linear span); used to check that walls are unions
/// of arrangement facets.
pub fn wall_interior_witness(wall: &ConeH, hyperplanes: &[Vec<Rat>]) -> Result<Vec<Rat>> {
    let v = crate::cones::double_description(wall);
    match generic_witness(&v, hyperplanes, None) {
        Some(w) if contains_point(wall, &w)? => Ok(w),
        _ => Err(Error::InvalidParameter(
            "no wall witness on exactly one hyperplane".into(),
        )),
    }
}
